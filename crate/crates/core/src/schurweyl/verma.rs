//! Highest weights, Clifford fibers and degree-truncated Verma supermodules.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalars::GaussianRational as Q;

use super::linalg::{SuperOperator, SuperVector};
use super::modules::{bracket, QGen, QModule};
use super::SchurWeylError;

/// Block data a weight was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub a: usize,
    pub b: usize,
    pub eps: bool,
    /// Block sizes `n_1, ..., n_{a+b+eps}`.
    pub sizes: Vec<usize>,
    /// Block parameters `l_1, ..., l_{a+b}`.
    pub l: Vec<BigRational>,
}

impl Blocks {
    /// Partial sums `p_0 = 0, p_1, ...`.
    pub fn bounds(&self) -> Vec<usize> {
        let mut p = vec![0];
        for s in &self.sizes {
            p.push(p.last().unwrap() + s);
        }
        p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub entries: Vec<BigRational>,
    pub blocks: Option<Blocks>,
}

impl Weight {
    pub fn new(entries: Vec<BigRational>) -> Weight {
        Weight { entries, blocks: None }
    }

    pub fn from_fracs(v: &[(i64, i64)]) -> Weight {
        Weight::new(v.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn entry(&self, i: usize) -> Q {
        Q::real(self.entries[i - 1].clone())
    }
}

/// Comma-separated rationals, e.g. `1/3,-2/3,0`.
pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>, SchurWeylError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigRational>().map_err(|_| SchurWeylError::Weight(format!("not a rational: {:?}", t))))
        .collect()
}

/// Block data `A,B,EPS:SIZES:GENERIC`, e.g. `0,1,0:4:1/3`; sizes and generic
/// parameters are comma separated and either list may be empty.
pub fn parse_blocks(s: &str) -> Result<Weight, SchurWeylError> {
    let bad = || SchurWeylError::Weight(format!("block data {:?} is not A,B,EPS:SIZES:GENERIC", s));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let head: Vec<usize> = parts[0].split(',').map(|t| t.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    if head.len() != 3 || head[2] > 1 {
        return Err(bad());
    }
    let sizes: Vec<usize> = parts[1].split(',').map(str::trim).filter(|t| !t.is_empty()).map(|t| t.parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    build_weight(head[0], head[1], head[2] == 1, &sizes, &parse_rationals(parts[2])?)
}

/// Whether a rational is `-1` or a nonnegative integer.
fn excluded(l: &BigRational) -> bool {
    l.is_integer() && (!l.is_negative() || *l == -BigRational::one())
}

pub fn build_weight(a: usize, b: usize, eps: bool, sizes: &[usize], generic: &[BigRational]) -> Result<Weight, SchurWeylError> {
    let blocks = a + b + eps as usize;
    if sizes.len() != blocks {
        return Err(SchurWeylError::Weight(format!("expected {} block sizes, got {}", blocks, sizes.len())));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0 || s % 2 == 1) {
        return Err(SchurWeylError::Weight(format!("block size n_{} = {} is not even and positive", i + 1, sizes[i])));
    }
    if generic.len() != b {
        return Err(SchurWeylError::Weight(format!("expected {} generic parameters, got {}", b, generic.len())));
    }
    if let Some(i) = generic.iter().position(excluded) {
        return Err(SchurWeylError::Weight(format!("l_{} = {} lies in Z>=0 or is -1", a + i + 1, generic[i])));
    }
    let mut l: Vec<BigRational> = vec![-BigRational::one(); a];
    l.extend(generic.iter().cloned());
    let mut entries = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        for j in 1..=s {
            entries.push(match l.get(i) {
                Some(li) => li - BigRational::from_integer(BigInt::from(j as i64 - 1)),
                None => BigRational::zero(),
            });
        }
    }
    Ok(Weight { entries, blocks: Some(Blocks { a, b, eps, sizes: sizes.to_vec(), l }) })
}

/// Square root in Q(i) of a rational, when one exists.
fn sqrt_in_gaussian(q: &BigRational) -> Option<Q> {
    let isqrt = |x: &BigInt| {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    let a = q.abs();
    let r = BigRational::new(isqrt(a.numer())?, isqrt(a.denom())?);
    Some(if q.is_negative() { Q::new(BigRational::zero(), r) } else { Q::real(r) })
}

/// A graded realization of the odd Cartan elements `h'_i` with
/// `h'_i h'_j + h'_j h'_i = 2 δ_ij λ_i`.
///
/// Nonzero parts are paired; a pair `(λ, μ)` gets a two-dimensional block
/// when `μ/λ` is a square in Q(i) and the four-dimensional regular Clifford
/// module otherwise, so the realization is a multiple of the irreducible
/// fiber.
#[derive(Clone, Debug)]
pub struct CliffordFiber {
    pub dim: usize,
    pub parity: Vec<bool>,
    /// `h_odd[i - 1]` realizes `h'_i`.
    pub h_odd: Vec<SuperOperator>,
    nonzero: usize,
}

struct Factor {
    parity: Vec<bool>,
    /// Operators for the weight indices this factor carries.
    ops: Vec<(usize, SuperOperator)>,
}

fn op(dim: usize, entries: &[(usize, usize, Q)]) -> SuperOperator {
    let mut cols = vec![SuperVector::zero(); dim];
    for (col, row, c) in entries {
        cols[*col].add_term(*row, c);
    }
    SuperOperator::from_columns(dim, cols)
}

impl CliffordFiber {
    pub fn new(weight: &Weight) -> CliffordFiber {
        let n = weight.n();
        let lam = |i: usize| weight.entries[i].clone();
        let mut rest: Vec<usize> = (0..n).filter(|&i| !weight.entries[i].is_zero()).collect();
        let nonzero = rest.len();
        let mut factors = Vec::new();
        while !rest.is_empty() {
            let i = rest.remove(0);
            let li = Q::real(lam(i));
            let split = rest.iter().position(|&j| sqrt_in_gaussian(&(-lam(j) / lam(i))).is_some());
            match (split, rest.is_empty()) {
                (_, true) => factors.push(Factor {
                    parity: vec![false, true],
                    ops: vec![(i, op(2, &[(0, 1, Q::one()), (1, 0, li)]))],
                }),
                (Some(k), false) => {
                    let j = rest.remove(k);
                    let c = sqrt_in_gaussian(&(-lam(j) / lam(i))).unwrap();
                    let b = -(&li * &c);
                    factors.push(Factor {
                        parity: vec![false, true],
                        ops: vec![(i, op(2, &[(0, 1, Q::one()), (1, 0, li.clone())])), (j, op(2, &[(0, 1, c), (1, 0, b)]))],
                    });
                }
                (None, false) => {
                    let j = rest.remove(0);
                    let mu = Q::real(lam(j));
                    // Basis 1, g1, g2, g1 g2 under left multiplication.
                    let g1 = op(4, &[(0, 1, Q::one()), (1, 0, li.clone()), (2, 3, Q::one()), (3, 2, li.clone())]);
                    let g2 = op(4, &[(0, 2, Q::one()), (1, 3, -Q::one()), (2, 0, mu.clone()), (3, 1, -mu)]);
                    factors.push(Factor { parity: vec![false, true, true, false], ops: vec![(i, g1), (j, g2)] });
                }
            }
        }
        // Graded tensor product, first factor most significant.
        let dims: Vec<usize> = factors.iter().map(|f| f.parity.len()).collect();
        let dim: usize = dims.iter().product();
        let decode = |mut x: usize| {
            let mut d = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                d[k] = x % dims[k];
                x /= dims[k];
            }
            d
        };
        let encode = |d: &[usize]| d.iter().zip(&dims).fold(0, |acc, (x, m)| acc * m + x);
        let parity: Vec<bool> = (0..dim)
            .map(|x| decode(x).iter().zip(&factors).fold(false, |p, (&k, f)| p ^ f.parity[k]))
            .collect();
        let mut h_odd = vec![SuperOperator::from_columns(dim, vec![SuperVector::zero(); dim]); n];
        for (fi, f) in factors.iter().enumerate() {
            for (i, local) in &f.ops {
                let mut cols = vec![SuperVector::zero(); dim];
                for (x, col) in cols.iter_mut().enumerate() {
                    let d = decode(x);
                    let before = d[..fi].iter().zip(&factors).fold(false, |p, (&k, g)| p ^ g.parity[k]);
                    for (t, c) in &local.columns[d[fi]].coords {
                        let mut e = d.clone();
                        e[fi] = *t;
                        col.add_term(encode(&e), &(c * &Q::sign(before)));
                    }
                }
                h_odd[*i] = SuperOperator::from_columns(dim, cols);
            }
        }
        CliffordFiber { dim, parity, h_odd, nonzero }
    }

    /// Dimension of the irreducible fiber, `2^⌊(ℓ(λ)+1)/2⌋`.
    pub fn irreducible_dim(&self) -> usize {
        1 << self.nonzero.div_ceil(2)
    }

    /// How many copies of the irreducible fiber the realization holds.
    pub fn multiplicity(&self) -> usize {
        self.dim / self.irreducible_dim()
    }
}

/// Ordered product of negative root vectors, as positions in the fixed
/// generator order; nondecreasing, odd letters not repeated.
type Mono = Vec<u8>;
type Elem = HashMap<(Mono, usize), Q>;

fn add(e: &mut Elem, k: (Mono, usize), c: Q) {
    if c.is_zero() {
        return;
    }
    let v = e.entry(k.clone()).or_insert_with(Q::zero);
    *v += &c;
    if v.is_zero() {
        e.remove(&k);
    }
}

/// `U(n⁻) ⊗ I_λ` truncated at PBW degree `cap`.
pub struct TruncatedVerma {
    pub weight: Weight,
    pub fiber: CliffordFiber,
    pub cap: usize,
    /// Negative generators in PBW order: all even ones, then all odd ones.
    pub negative: Vec<QGen>,
    monomials: Vec<Mono>,
    index: HashMap<Mono, usize>,
    memo: Mutex<HashMap<(QGen, Mono, usize), Elem>>,
}

impl TruncatedVerma {
    pub fn new(weight: &Weight, cap: usize) -> TruncatedVerma {
        let n = weight.n();
        let mut negative = Vec::new();
        for odd in [false, true] {
            for i in 1..=n {
                for j in 1..i {
                    negative.push(if odd { QGen::F(i, j) } else { QGen::E(i, j) });
                }
            }
        }
        let mut monomials: Vec<Mono> = vec![Vec::new()];
        let mut frontier: Vec<Mono> = vec![Vec::new()];
        for _ in 0..cap {
            let mut next = Vec::new();
            for m in &frontier {
                let start = m.last().map(|&x| x as usize).unwrap_or(0);
                for k in start..negative.len() {
                    if negative[k].odd() && m.last() == Some(&(k as u8)) {
                        continue;
                    }
                    let mut e = m.clone();
                    e.push(k as u8);
                    next.push(e);
                }
            }
            monomials.extend(next.iter().cloned());
            frontier = next;
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        TruncatedVerma { weight: weight.clone(), fiber: CliffordFiber::new(weight), cap, negative, monomials, index, memo: Mutex::new(HashMap::new()) }
    }

    /// Basis index of the highest weight vector `1 ⊗ e_0` (even).
    pub fn highest(&self) -> usize {
        0
    }

    pub fn degree(&self, b: usize) -> usize {
        self.monomials[b / self.fiber.dim].len()
    }

    fn position(&self, g: QGen) -> Option<u8> {
        self.negative.iter().position(|&h| h == g).map(|k| k as u8)
    }

    fn base(&self, g: QGen, fib: usize) -> Elem {
        let mut out = Elem::new();
        match g {
            QGen::E(i, j) if i > j => add(&mut out, (vec![self.position(g).unwrap()], fib), Q::one()),
            QGen::F(i, j) if i > j => add(&mut out, (vec![self.position(g).unwrap()], fib), Q::one()),
            QGen::E(i, j) if i == j => add(&mut out, (Vec::new(), fib), self.weight.entry(i)),
            QGen::F(i, j) if i == j => {
                for (t, c) in &self.fiber.h_odd[i - 1].columns[fib].coords {
                    add(&mut out, (Vec::new(), *t), c.clone());
                }
            }
            _ => {}
        }
        out
    }

    fn mono_odd(&self, m: &[u8]) -> bool {
        m.iter().filter(|&&k| self.negative[k as usize].odd()).count() % 2 == 1
    }

    /// `g · (m ⊗ e_fib)` in PBW form, without truncation.
    fn mul(&self, g: QGen, m: &[u8], fib: usize) -> Elem {
        let key = (g, m.to_vec(), fib);
        if let Some(e) = self.memo.lock().unwrap().get(&key) {
            return e.clone();
        }
        let out = if m.is_empty() {
            self.base(g, fib)
        } else {
            let y = m[0];
            let yg = self.negative[y as usize];
            let rest = &m[1..];
            let mut out = Elem::new();
            match self.position(g) {
                Some(k) if k < y || (k == y && !g.odd()) => {
                    let mut e = vec![k];
                    e.extend_from_slice(m);
                    add(&mut out, (e, fib), Q::one());
                }
                Some(k) if k == y => {
                    // g g = [g, g] / 2 for odd g.
                    let half = Q::from_frac(1, 2);
                    for (h, c) in bracket(g, g) {
                        for ((mm, f), x) in self.mul(h, rest, fib) {
                            add(&mut out, (mm, f), &(&x * &c) * &half);
                        }
                    }
                }
                _ => {
                    // g y rest = ± y (g rest) + [g, y] rest.
                    let s = Q::sign(g.odd() && yg.odd());
                    for ((mm, f), x) in self.mul(g, rest, fib) {
                        for (kk, z) in self.mul(yg, &mm, f) {
                            add(&mut out, kk, &(&x * &z) * &s);
                        }
                    }
                    for (h, c) in bracket(g, yg) {
                        for (kk, x) in self.mul(h, rest, fib) {
                            add(&mut out, kk, &x * &c);
                        }
                    }
                }
            }
            out
        };
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Action of a generator on a sparse vector of this module.
    pub fn act_vector(&self, g: QGen, v: &SuperVector) -> Result<SuperVector, SchurWeylError> {
        let mut out = SuperVector::zero();
        for (b, c) in &v.coords {
            out.add_scaled(&self.act(g, *b)?, c);
        }
        Ok(out)
    }

    pub fn monomial_label(&self, m: &[u8]) -> String {
        let parts: Vec<String> = m
            .iter()
            .map(|&k| match self.negative[k as usize] {
                QGen::E(i, j) => format!("e{}{}", i, j),
                QGen::F(i, j) => format!("f{}{}", i, j),
            })
            .collect();
        parts.join("·")
    }
}

impl QModule for TruncatedVerma {
    fn n(&self) -> usize {
        self.weight.n()
    }

    fn dim(&self) -> usize {
        self.monomials.len() * self.fiber.dim
    }

    fn parity(&self, b: usize) -> bool {
        let fd = self.fiber.dim;
        self.mono_odd(&self.monomials[b / fd]) ^ self.fiber.parity[b % fd]
    }

    fn act(&self, g: QGen, b: usize) -> Result<SuperVector, SchurWeylError> {
        let fd = self.fiber.dim;
        let mut out = SuperVector::zero();
        for ((m, f), c) in self.mul(g, &self.monomials[b / fd], b % fd) {
            match self.index.get(&m) {
                Some(&i) => out.add_term(i * fd + f, &c),
                None => return Err(SchurWeylError::CapOverflow { degree: m.len(), cap: self.cap }),
            }
        }
        Ok(out)
    }

    fn label(&self, b: usize) -> String {
        let fd = self.fiber.dim;
        let m = &self.monomials[b / fd];
        if m.is_empty() {
            format!("u{}", b % fd)
        } else {
            format!("{}·u{}", self.monomial_label(m), b % fd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn weight_text() {
        assert_eq!(parse_rationals("1/3, -2/3,0").unwrap(), Weight::from_fracs(&[(1, 3), (-2, 3), (0, 1)]).entries);
        let w = parse_blocks("0,1,0:4:1/3").unwrap();
        assert_eq!(w.entries, Weight::from_fracs(&[(1, 3), (-2, 3), (-5, 3), (-8, 3)]).entries);
        assert!(parse_blocks("0,1:4:1/3").is_err());
        assert!(parse_rationals("x").is_err());
    }

    #[test]
    fn weights_from_blocks() {
        let w = build_weight(0, 1, false, &[2], &[q(1, 3)]).unwrap();
        assert_eq!(w.entries, vec![q(1, 3), q(-2, 3)]);
        assert_eq!(build_weight(1, 0, false, &[2], &[]).unwrap().entries, vec![q(-1, 1), q(-2, 1)]);
        assert_eq!(build_weight(0, 0, true, &[2], &[]).unwrap().entries, vec![q(0, 1), q(0, 1)]);
        assert!(build_weight(0, 1, false, &[3], &[q(1, 3)]).is_err());
        assert!(build_weight(0, 1, false, &[2], &[q(-1, 1)]).is_err());
        assert!(build_weight(0, 1, false, &[2], &[q(2, 1)]).is_err());
    }

    fn anticommutators_hold(w: &Weight) {
        let f = CliffordFiber::new(w);
        for i in 0..w.n() {
            for j in 0..w.n() {
                let mut s = f.h_odd[i].compose(&f.h_odd[j]);
                s.add_scaled(&f.h_odd[j].compose(&f.h_odd[i]), &Q::one());
                let expect = if i == j { SuperOperator::identity(f.dim).scale(&Q::real(w.entries[i].clone() * q(2, 1))) } else { SuperOperator::identity(f.dim).scale(&Q::zero()) };
                assert_eq!(s, expect);
                for (col, v) in f.h_odd[i].columns.iter().enumerate() {
                    for r in v.coords.keys() {
                        assert_ne!(f.parity[*r], f.parity[col]);
                    }
                }
            }
        }
        assert_eq!(f.dim % f.irreducible_dim(), 0);
    }

    #[test]
    fn clifford_fibers() {
        let zero = Weight::from_fracs(&[(0, 1), (0, 1)]);
        let f = CliffordFiber::new(&zero);
        assert_eq!((f.dim, f.irreducible_dim()), (1, 1));
        assert!(f.h_odd.iter().all(|h| h.is_zero()));
        assert_eq!(CliffordFiber::new(&Weight::from_fracs(&[(1, 3), (-2, 3)])).irreducible_dim(), 2);
        // Square ratio: the minimal two-dimensional block.
        assert_eq!(CliffordFiber::new(&Weight::from_fracs(&[(4, 1), (-1, 1)])).dim, 2);
        for w in [&[(2, 1), (1, 1)][..], &[(1, 3), (-2, 3), (-5, 3)], &[(1, 1), (0, 1), (4, 1), (-9, 2)]] {
            anticommutators_hold(&Weight::from_fracs(w));
        }
    }

    #[test]
    fn verma_highest_weight_vector() {
        let w = Weight::from_fracs(&[(1, 3), (-2, 3)]);
        let m = TruncatedVerma::new(&w, 2);
        let u = m.highest();
        assert_eq!(m.act(QGen::E(1, 1), u).unwrap(), SuperVector::basis(u).scale(&w.entry(1)));
        assert!(m.act(QGen::E(1, 2), u).unwrap().is_zero());
        assert!(m.act(QGen::F(1, 2), u).unwrap().is_zero());
        let h = m.act(QGen::F(2, 2), u).unwrap();
        assert_eq!(h.coords.len(), 1);
        let e21 = m.act(QGen::E(2, 1), u).unwrap();
        assert_eq!(m.degree(*e21.coords.keys().next().unwrap()), 1);
        let top = m.act(QGen::E(2, 1), *m.act(QGen::E(2, 1), u).unwrap().coords.keys().next().unwrap()).unwrap();
        assert!(matches!(m.act(QGen::E(2, 1), *top.coords.keys().next().unwrap()), Err(SchurWeylError::CapOverflow { .. })));
    }

    #[test]
    fn verma_is_a_representation() {
        let w = Weight::from_fracs(&[(1, 3), (-2, 3), (2, 1)]);
        let m = TruncatedVerma::new(&w, 3);
        let gens = QGen::all(3);
        for b in (0..m.dim()).filter(|&b| m.degree(b) <= 1) {
            for &g in &gens {
                for &h in &gens {
                    let mut lhs = m.act_vector(g, &m.act(h, b).unwrap()).unwrap();
                    lhs.add_scaled(&m.act_vector(h, &m.act(g, b).unwrap()).unwrap(), &-Q::sign(g.odd() && h.odd()));
                    let mut rhs = SuperVector::zero();
                    for (k, c) in bracket(g, h) {
                        rhs.add_scaled(&m.act(k, b).unwrap(), &c);
                    }
                    assert_eq!(lhs, rhs, "{:?} {:?} on {}", g, h, m.label(b));
                }
            }
        }
    }
}
