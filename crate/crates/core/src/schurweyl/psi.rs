//! The tensor-space functor on layered drawings: `^` goes to V, `v` to V*,
//! and a drawing from `a` to `b` becomes an operator
//! `V_a ⊗ M -> V_b ⊗ M`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::diagrams::{Orient, Word};
use crate::engine::drawing::{apply_layer, representative, Drawing, Layer, Prim};
use crate::engine::{Morphism, Relation};
use crate::scalars::{GaussianRational as Q, Var};

use super::linalg::{SuperOperator, SuperVector};
use super::modules::{encode_with, label_parity, vidx, vlabel, QGen, QModule, TensorModule, Trivial};
use super::SchurWeylError;

/// One basis tensor: digits of the tensor factors and an index in `M`.
type Basis = (Vec<usize>, usize);
type Sparse = HashMap<Basis, Q>;

fn add(out: &mut Sparse, k: Basis, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = out.entry(k.clone()).or_insert_with(Q::zero);
    *e += &c;
    if e.is_zero() {
        out.remove(&k);
    }
}

fn odd_prefix(n: usize, digits: &[usize], upto: usize) -> bool {
    digits[..upto].iter().fold(false, |p, &d| p ^ label_parity(vlabel(n, d)))
}

/// `(v̄ ⊗ w) -> ...` matrix of the inverse sideways crossing on `v^ -> ^v`,
/// keyed by input digit pair.
fn inverse_sideways(n: usize) -> Arc<HashMap<(usize, usize), Vec<((usize, usize), Q)>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HashMap<(usize, usize), Vec<((usize, usize), Q)>>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return m.clone();
    }
    let triv: Arc<dyn QModule> = Arc::new(Trivial { n });
    let side = Drawing::from_layers(&Word::parse("v^").unwrap(), &[(0, Prim::Cross)]).unwrap();
    let op = psi_drawing(&side, triv.as_ref()).expect("sideways crossing evaluates");
    let inv = op.inverse().expect("sideways crossing is invertible");
    // Input space is V ⊗ V* (word ^v), output V* ⊗ V.
    let d = 2 * n;
    let mut table = HashMap::new();
    for (col, v) in inv.columns.iter().enumerate() {
        let entry: Vec<((usize, usize), Q)> = v.coords.iter().map(|(r, c)| ((r / d, r % d), c.clone())).collect();
        table.insert((col / d, col % d), entry);
    }
    let table = Arc::new(table);
    cache.lock().unwrap().insert(n, table.clone());
    table
}

/// Replacement drawings for layers that are not evaluated directly, written
/// on the local word.
fn expansion(word: &Word, l: Layer) -> Option<Vec<Layer>> {
    use Orient::*;
    let p = l.pos;
    let lay = |pos, prim| Layer { pos, prim };
    match l.prim {
        Prim::Cross => match (word.0[p], word.0[p + 1]) {
            (Up, Up) | (Up, Down) => None,
            (Down, Up) => Some(vec![lay(p + 2, Prim::LCup), lay(p + 1, Prim::Cross), lay(p, Prim::LCap)]),
            (Down, Down) => Some(vec![
                lay(p + 2, Prim::LCup),
                lay(p + 3, Prim::LCup),
                lay(p + 2, Prim::Cross),
                lay(p + 1, Prim::LCap),
                lay(p, Prim::LCap),
            ]),
        },
        Prim::RCup => Some(vec![lay(p, Prim::LCup), lay(p, Prim::Cross)]),
        Prim::RCap => Some(vec![lay(p, Prim::Cross), lay(p, Prim::LCap)]),
        Prim::Black | Prim::White if word.0[p] == Down => {
            Some(vec![lay(p + 1, Prim::LCup), lay(p + 1, l.prim), lay(p, Prim::LCap)])
        }
        _ => None,
    }
}

struct Ctx<'a> {
    n: usize,
    module: &'a dyn QModule,
}

impl<'a> Ctx<'a> {
    fn layer(&self, word: &Word, l: Layer, v: &Sparse) -> Result<Sparse, SchurWeylError> {
        if let Some(exp) = expansion(word, l) {
            let mut w = word.clone();
            let mut cur = v.clone();
            for e in exp {
                cur = self.layer(&w, e, &cur)?;
                w = apply_layer(&w, e).map_err(|e| SchurWeylError::Interface(e.to_string()))?;
            }
            return Ok(cur);
        }
        let n = self.n;
        let p = l.pos;
        let mut out = Sparse::new();
        for ((digits, b), c) in v {
            match l.prim {
                Prim::LCup => {
                    for k in 0..2 * n {
                        let mut d = digits.clone();
                        d.splice(p..p, [k, k]);
                        add(&mut out, (d, *b), c.clone());
                    }
                }
                Prim::LCap => {
                    if digits[p] == digits[p + 1] {
                        let mut d = digits.clone();
                        d.drain(p..p + 2);
                        add(&mut out, (d, *b), c.clone());
                    }
                }
                Prim::Cross if word.0[p] == Orient::Up && word.0[p + 1] == Orient::Up => {
                    let pu = label_parity(vlabel(n, digits[p]));
                    let pv = label_parity(vlabel(n, digits[p + 1]));
                    let mut d = digits.clone();
                    d.swap(p, p + 1);
                    add(&mut out, (d, *b), c * &Q::sign(pu && pv));
                }
                Prim::Cross => {
                    let table = inverse_sideways(n);
                    for ((x, y), k) in &table[&(digits[p], digits[p + 1])] {
                        let mut d = digits.clone();
                        d[p] = *x;
                        d[p + 1] = *y;
                        add(&mut out, (d, *b), c * k);
                    }
                }
                Prim::White => {
                    let i = vlabel(n, digits[p]);
                    let s = Q::sign(odd_prefix(n, digits, p) ^ label_parity(i));
                    let mut d = digits.clone();
                    d[p] = vidx(n, -i);
                    add(&mut out, (d, *b), &(c * &s) * &Q::i());
                }
                Prim::Black => {
                    let rest = TensorModule::new(Word(word.0[p + 1..].to_vec()), Arc::new(Trivial { n }));
                    let rest_digits = &digits[p + 1..];
                    let pv = label_parity(vlabel(n, digits[p]));
                    for i in 1..=n {
                        for j in 1..=n {
                            // e~_{ij} ⊗ e_{ji} and -f~_{ij} ⊗ f_{ji}.
                            let (ii, jj) = (i as i32, j as i32);
                            let pieces: [(QGen, [(i32, i32, i64); 2]); 2] = [
                                (QGen::E(j, i), [(ii, jj, 1), (-ii, -jj, -1)]),
                                (QGen::F(j, i), [(-ii, jj, 1), (ii, -jj, -1)]),
                            ];
                            for (g, units) in pieces {
                                let first: Vec<(usize, Q)> = units
                                    .iter()
                                    .filter(|(_, bb, _)| vlabel(n, digits[p]) == *bb)
                                    .map(|(a, _, s)| (vidx(n, *a), Q::from_int(*s)))
                                    .collect();
                                if first.is_empty() {
                                    continue;
                                }
                                let koszul = Q::sign(g.odd() && pv);
                                for (rd, rb, rc) in self.act_rest(&rest, g, rest_digits, *b)? {
                                    for (t, fc) in &first {
                                        let mut d = digits[..p].to_vec();
                                        d.push(*t);
                                        d.extend_from_slice(&rd);
                                        add(&mut out, (d, rb), &(&(c * fc) * &rc) * &koszul);
                                    }
                                }
                            }
                        }
                    }
                }
                Prim::RCup | Prim::RCap => unreachable!("expanded above"),
            }
        }
        Ok(out)
    }

    fn act_rest(&self, rest: &TensorModule, g: QGen, digits: &[usize], b: usize) -> Result<Vec<(Vec<usize>, usize, Q)>, SchurWeylError> {
        // Factors of the remaining word, then the module M.
        let mut out = Vec::new();
        let mut odd_before = false;
        for k in 0..digits.len() {
            let s = Q::sign(g.odd() && odd_before);
            for (t, c) in super::modules::gen_on(self.n, rest.word.0[k], g, digits[k]) {
                let mut d = digits.to_vec();
                d[k] = t;
                out.push((d, b, &c * &s));
            }
            odd_before ^= label_parity(vlabel(self.n, digits[k]));
        }
        let s = Q::sign(g.odd() && odd_before);
        for (t, c) in self.module.act(g, b)?.coords {
            out.push((digits.to_vec(), t, &c * &s));
        }
        Ok(out)
    }
}

/// Apply a drawing to one vector of `V_bottom ⊗ M`.
pub fn psi_apply(d: &Drawing, module: &dyn QModule, v: &SuperVector) -> Result<SuperVector, SchurWeylError> {
    let n = module.n();
    let src = TensorModule::new(d.bottom.clone(), Arc::new(Trivial { n }));
    let dm = module.dim();
    let mut cur = Sparse::new();
    for (idx, c) in &v.coords {
        let (digits, _) = src.decode(*idx / dm);
        add(&mut cur, (digits, idx % dm), c.clone());
    }
    let ctx = Ctx { n, module };
    let mut w = d.bottom.clone();
    for l in &d.layers {
        cur = ctx.layer(&w, *l, &cur)?;
        w = apply_layer(&w, *l).map_err(|e| SchurWeylError::Interface(e.to_string()))?;
    }
    let mut out = SuperVector::zero();
    for ((digits, b), c) in cur {
        out.add_term(encode_with(n, dm, &digits, b), &c);
    }
    Ok(out)
}

/// The full operator of a drawing.
pub fn psi_drawing(d: &Drawing, module: &dyn QModule) -> Result<SuperOperator, SchurWeylError> {
    let n = module.n();
    let dim = |w: &Word| (2 * n).pow(w.len() as u32) * module.dim();
    let rows = dim(&d.top());
    let columns = (0..dim(&d.bottom))
        .map(|i| psi_apply(d, module, &SuperVector::basis(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuperOperator::from_columns(rows, columns))
}

/// `Σ c·Ψ(e)` for a relation; zero when the functor respects it.
pub fn relation_operator(rel: &Relation, module: &dyn QModule) -> Result<SuperOperator, SchurWeylError> {
    let mut total: Option<SuperOperator> = None;
    for (c, d) in rel.drawings().map_err(|e| SchurWeylError::Interface(e.to_string()))? {
        let op = psi_drawing(&d, module)?.scale(&c);
        total = Some(match total {
            None => op,
            Some(mut t) => {
                t.add_scaled(&op, &Q::one());
                t
            }
        });
    }
    total.ok_or_else(|| SchurWeylError::Other(format!("relation {} has no terms", rel.name)))
}

/// A single generator at `position` of `word`.
pub fn psi_generator(prim: Prim, word: &Word, position: usize, module: &dyn QModule) -> Result<SuperOperator, SchurWeylError> {
    let mut d = Drawing::identity(word);
    d.push(position, prim).map_err(|e| SchurWeylError::Interface(e.to_string()))?;
    psi_drawing(&d, module)
}

/// Operator of the counterclockwise bubble with `k` black dots on `M`.
pub fn bubble_operator(k: u32, module: &dyn QModule) -> Result<SuperOperator, SchurWeylError> {
    let mut layers = vec![(0, Prim::RCup)];
    layers.extend(std::iter::repeat_n((1, Prim::Black), k as usize));
    layers.push((0, Prim::LCap));
    let d = Drawing::from_layers(&Word::empty(), &layers).map_err(|e| SchurWeylError::Interface(e.to_string()))?;
    psi_drawing(&d, module)
}

/// A morphism applied to one vector; each bubble symbol `D<k>` becomes the
/// bubble with `k` black dots drawn at the right edge.
pub fn psi_apply_morphism(m: &Morphism, module: &dyn QModule, v: &SuperVector) -> Result<SuperVector, SchurWeylError> {
    let w = m.bottom.len();
    let mut out = SuperVector::zero();
    for (d, c) in &m.terms {
        let rep = representative(d);
        for (mono, a) in c.terms() {
            let mut layers: Vec<(usize, Prim)> = Vec::new();
            for (var, e) in mono {
                let k = match var {
                    Var::Delta(k) => *k,
                    Var::Param(name) => return Err(SchurWeylError::Unspecialized(name.clone())),
                };
                for _ in 0..*e {
                    layers.push((w, Prim::RCup));
                    layers.extend(std::iter::repeat_n((w + 1, Prim::Black), k as usize));
                    layers.push((w, Prim::LCap));
                }
            }
            let bubbles = Drawing::from_layers(&m.bottom, &layers).map_err(|e| SchurWeylError::Interface(e.to_string()))?;
            let full = bubbles.then(&rep).map_err(|e| SchurWeylError::Interface(e.to_string()))?;
            out.add_scaled(&psi_apply(&full, module, v)?, a);
        }
    }
    Ok(out)
}

/// `1 ⊗ op` on `V_word ⊗ M` for an operator on `M`.
fn lift(word_dim: usize, op: &SuperOperator) -> SuperOperator {
    let dm = op.rows;
    let mut columns = Vec::with_capacity(word_dim * dm);
    for w in 0..word_dim {
        for b in 0..dm {
            let mut v = SuperVector::zero();
            for (i, c) in &op.columns[b].coords {
                v.add_term(w * dm + i, c);
            }
            columns.push(v);
        }
    }
    SuperOperator::from_columns(word_dim * dm, columns)
}

/// The operator of a morphism; bubbles act on `M` through their own
/// drawings, so every coefficient must be free of named parameters.
pub fn psi_evaluate(m: &Morphism, module: &dyn QModule) -> Result<SuperOperator, SchurWeylError> {
    let n = module.n();
    let dm = module.dim();
    let wdim = |w: &Word| (2 * n).pow(w.len() as u32);
    let rows = wdim(&m.top) * dm;
    let cols = wdim(&m.bottom) * dm;
    let mut out = SuperOperator::from_columns(rows, vec![SuperVector::zero(); cols]);
    let mut bubbles: HashMap<u32, SuperOperator> = HashMap::new();
    for (d, c) in &m.terms {
        // Coefficient as an operator on M.
        let mut coeff = SuperOperator::from_columns(dm, vec![SuperVector::zero(); dm]);
        for (mono, a) in c.terms() {
            let mut term = SuperOperator::identity(dm).scale(a);
            for (v, e) in mono {
                let k = match v {
                    Var::Delta(k) => *k,
                    Var::Param(name) => return Err(SchurWeylError::Unspecialized(name.clone())),
                };
                if !bubbles.contains_key(&k) {
                    bubbles.insert(k, bubble_operator(k, module)?);
                }
                for _ in 0..*e {
                    term = bubbles[&k].compose(&term);
                }
            }
            coeff.add_scaled(&term, &Q::one());
        }
        let op = psi_drawing(&representative(d), module)?.compose(&lift(wdim(&m.bottom), &coeff));
        out.add_scaled(&op, &Q::one());
    }
    Ok(out)
}
