//! Linear combinations of normal diagrams and the operations on them.

use std::collections::BTreeMap;

use crate::diagrams::{enumerate_normal, DiagramError, NormalDiagram, Orient, Word};
use crate::scalars::{specialize, BubblePolynomial, DeltaSpec};

use super::drawing::{representative, Drawing, Prim};
use super::expr::GeneratorExpr;
use super::normalize::reduce;
use super::EngineError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub bottom: Word,
    pub top: Word,
    pub terms: BTreeMap<NormalDiagram, BubblePolynomial>,
}

impl Morphism {
    pub fn zero(bottom: &Word, top: &Word) -> Morphism {
        Morphism { bottom: bottom.clone(), top: top.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(w: &Word) -> Morphism {
        Morphism::from_diagram(NormalDiagram::identity(w))
    }

    pub fn from_diagram(d: NormalDiagram) -> Morphism {
        let mut m = Morphism::zero(&d.bottom, &d.top);
        m.terms.insert(d, BubblePolynomial::one());
        m
    }

    /// Rewrite a drawing into the normal basis.
    pub fn from_drawing(d: &Drawing) -> Result<Morphism, EngineError> {
        let terms = reduce(d, BubblePolynomial::one())?;
        Ok(Morphism { bottom: d.bottom.clone(), top: d.top(), terms })
    }

    /// Normal form of a generator expression.
    pub fn normalize(e: &GeneratorExpr) -> Result<Morphism, EngineError> {
        Morphism::from_drawing(&e.to_drawing()?)
    }

    pub fn parse(s: &str) -> Result<Morphism, EngineError> {
        Morphism::normalize(&GeneratorExpr::parse(s)?)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &NormalDiagram) -> BubblePolynomial {
        self.terms.get(d).cloned().unwrap_or_else(BubblePolynomial::zero)
    }

    pub fn add_term(&mut self, d: NormalDiagram, c: &BubblePolynomial) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d.clone()).or_insert_with(BubblePolynomial::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    fn check_same(&self, other: &Morphism) -> Result<(), EngineError> {
        if self.bottom != other.bottom || self.top != other.top {
            return Err(EngineError::InterfaceMismatch {
                expected: format!("{} -> {}", self.bottom.ascii(), self.top.ascii()),
                found: format!("{} -> {}", other.bottom.ascii(), other.top.ascii()),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism, EngineError> {
        self.add_scaled(other, &BubblePolynomial::one())
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism, EngineError> {
        self.add_scaled(other, &BubblePolynomial::from_int(-1))
    }

    pub fn add_scaled(&self, other: &Morphism, c: &BubblePolynomial) -> Result<Morphism, EngineError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (d, x) in &other.terms {
            out.add_term(d.clone(), &(x * c));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BubblePolynomial) -> Morphism {
        let mut out = Morphism::zero(&self.bottom, &self.top);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), &(x * c));
        }
        out
    }

    /// `self ∘ below`.
    pub fn compose(&self, below: &Morphism) -> Result<Morphism, EngineError> {
        if below.top != self.bottom {
            return Err(EngineError::InterfaceMismatch { expected: self.bottom.ascii(), found: below.top.ascii() });
        }
        let mut out = Morphism::zero(&below.bottom, &self.top);
        let uppers: Vec<(Drawing, &BubblePolynomial)> = self.terms.iter().map(|(d, c)| (representative(d), c)).collect();
        for (dl, cl) in &below.terms {
            let lower = representative(dl);
            for (upper, cu) in &uppers {
                let stacked = lower.then(upper)?;
                for (d, c) in reduce(&stacked, cl * *cu)? {
                    out.add_term(d, &c);
                }
            }
        }
        Ok(out)
    }

    /// `self ⊗ right`, with `right` placed to the right.
    pub fn tensor(&self, right: &Morphism) -> Result<Morphism, EngineError> {
        let mut out = Morphism::zero(&self.bottom.concat(&right.bottom), &self.top.concat(&right.top));
        for (dl, cl) in &self.terms {
            let left = representative(dl);
            for (dr, cr) in &right.terms {
                let stacked = left.tensor(&representative(dr));
                for (d, c) in reduce(&stacked, cl * cr)? {
                    out.add_term(d, &c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Morphism, EngineError> {
        if self.bottom != self.top {
            return Err(EngineError::InterfaceMismatch { expected: self.bottom.ascii(), found: self.top.ascii() });
        }
        let mut acc = Morphism::identity(&self.bottom);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `Some(parity)` when every term has the same parity.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|d| d.parity());
        let first = it.next().unwrap_or(false);
        it.all(|p| p == first).then_some(first)
    }

    /// Substitute bubble values into every coefficient.
    pub fn specialize(&self, delta: &DeltaSpec) -> Morphism {
        let mut out = Morphism::zero(&self.bottom, &self.top);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), &specialize(c, delta));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "bottom": self.bottom.ascii(),
            "top": self.top.ascii(),
            "terms": self.terms.iter().map(|(d, c)| serde_json::json!({"diagram": d.to_json(), "coeff": c.to_string()})).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Morphism, EngineError> {
        let bad = |m: &str| EngineError::Parse(format!("morphism json: {}", m));
        let word = |k: &str| -> Result<Word, EngineError> {
            Word::parse(v.get(k).and_then(|x| x.as_str()).ok_or_else(|| bad(k))?).map_err(|e| bad(&e.to_string()))
        };
        let mut m = Morphism::zero(&word("bottom")?, &word("top")?);
        for t in v.get("terms").and_then(|x| x.as_array()).ok_or_else(|| bad("terms"))? {
            let d = NormalDiagram::from_json(t.get("diagram").ok_or_else(|| bad("diagram"))?)
                .map_err(|e| bad(&e.to_string()))?;
            let c = BubblePolynomial::parse(t.get("coeff").and_then(|x| x.as_str()).ok_or_else(|| bad("coeff"))?)
                .map_err(|e| bad(&e.to_string()))?;
            if d.bottom != m.bottom || d.top != m.top {
                return Err(bad("diagram interface"));
            }
            m.add_term(d, &c);
        }
        Ok(m)
    }
}

impl std::fmt::Display for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({}) {}", c, d)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Value of a crossing-free counterclockwise loop carrying `white` white
/// dots above `black` black dots.
pub fn loop_value(black: u32, white: u32) -> Result<BubblePolynomial, EngineError> {
    let mut layers = vec![(0, Prim::RCup)];
    layers.extend(std::iter::repeat_n((1, Prim::Black), black as usize));
    layers.extend(std::iter::repeat_n((1, Prim::White), white as usize));
    layers.push((0, Prim::LCap));
    let m = Morphism::from_drawing(&Drawing::from_layers(&Word::empty(), &layers)?)?;
    Ok(m.coeff(&NormalDiagram::identity(&Word::empty())))
}

/// Rotate an endomorphism of one strand to the opposite orientation by
/// closing it to the right through a crossing (`up` takes `End(^)` to
/// `End(v)`).
pub fn sigma(m: &Morphism, up: bool) -> Result<Morphism, EngineError> {
    let (o, cup, cap) = if up { (Orient::Up, Prim::RCup, Prim::LCap) } else { (Orient::Down, Prim::LCup, Prim::RCap) };
    let w = Word(vec![o]);
    if m.bottom != w || m.top != w {
        return Err(EngineError::Orientation(format!("expected an endomorphism of {}", w)));
    }
    let outer = Word(vec![o.flip()]);
    let open = Morphism::from_drawing(&Drawing::from_layers(&outer, &[(1, cup)])?)?;
    let pair = Word(vec![o.flip(), o.flip()]);
    let mid = Morphism::identity(&pair).tensor(m)?;
    let close = Morphism::from_drawing(&Drawing::from_layers(&pair.concat(&w), &[(0, Prim::Cross), (1, cap)])?)?;
    close.compose(&mid)?.compose(&open)
}

/// Coefficients (lowest degree first) of an endomorphism of one strand that
/// is a polynomial in the black dot.
pub fn dot_polynomial(m: &Morphism) -> Option<Vec<BubblePolynomial>> {
    if m.bottom.len() != 1 || m.bottom != m.top {
        return None;
    }
    let mut out: Vec<BubblePolynomial> = Vec::new();
    for (d, c) in &m.terms {
        let s = &d.strands[0];
        if s.white != 0 {
            return None;
        }
        let k = s.black as usize;
        if out.len() <= k {
            out.resize(k + 1, BubblePolynomial::zero());
        }
        out[k] = c.clone();
    }
    Some(out)
}

/// `k` black dots on one strand of orientation `o`.
pub fn dot_power(o: Orient, k: u32) -> Morphism {
    let mut d = NormalDiagram::identity(&Word(vec![o]));
    d.strands[0].black = k;
    Morphism::from_diagram(d)
}

/// The polynomial obtained by rotating `f(x)` on an upward strand to a
/// downward one; `delta` specializes the bubbles that appear.
pub fn compute_g(f: &[BubblePolynomial], delta: &DeltaSpec) -> Result<Vec<BubblePolynomial>, EngineError> {
    if f.last().map(|c| c.is_one()) != Some(true) {
        return Err(EngineError::NotMonic);
    }
    let mut acc = Morphism::zero(&Word::parse("v").unwrap(), &Word::parse("v").unwrap());
    for (k, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let rotated = sigma(&dot_power(Orient::Up, k as u32), true)?;
        acc = acc.add_scaled(&rotated, a)?;
    }
    let g = dot_polynomial(&acc.specialize(delta)).expect("rotation of a dot polynomial is a dot polynomial");
    let mut g = g;
    g.resize(f.len(), BubblePolynomial::zero());
    Ok(g)
}

/// The normal diagrams with fewer than `ell` black dots on every strand.
pub fn hom_basis(bottom: &Word, top: &Word, ell: u32) -> Result<Vec<NormalDiagram>, DiagramError> {
    enumerate_normal(bottom, top, Some(ell))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Morphism {
        Morphism::parse(s).unwrap()
    }

    #[test]
    fn compose_and_tensor_follow_the_interchange_law() {
        let wl = m("(tensor white id1)");
        let wr = m("(tensor id1 white)");
        let ww = m("white").tensor(&m("white")).unwrap();
        assert_eq!(wl.compose(&wr).unwrap(), ww);
        assert_eq!(wr.compose(&wl).unwrap(), ww.scale(&BubblePolynomial::from_int(-1)));
        let id0 = Morphism::identity(&Word::empty());
        assert_eq!(m("black").tensor(&id0).unwrap(), m("black"));
    }

    #[test]
    fn loop_values() {
        assert!(loop_value(0, 0).unwrap().is_zero());
        assert_eq!(loop_value(3, 0).unwrap(), BubblePolynomial::delta(3));
        assert!(loop_value(1, 1).unwrap().is_zero());
        assert!(loop_value(2, 0).unwrap().is_zero());
        assert_eq!(loop_value(1, 2).unwrap(), BubblePolynomial::delta(1));
    }

    #[test]
    fn rotation_round_trip() {
        for k in 0..=3 {
            let x = dot_power(Orient::Up, k);
            let there = sigma(&x, true).unwrap();
            assert_eq!(sigma(&there, false).unwrap(), x, "k = {}", k);
        }
        assert_eq!(sigma(&Morphism::identity(&Word::parse("^").unwrap()), true).unwrap(), Morphism::identity(&Word::parse("v").unwrap()));
        assert!(sigma(&Morphism::identity(&Word::parse("v").unwrap()), true).is_err());
    }

    #[test]
    fn g_from_f() {
        let formal = DeltaSpec::formal(9);
        let p = |s: &str| BubblePolynomial::parse(s).unwrap();
        assert_eq!(compute_g(&[p("0"), p("1")], &formal).unwrap(), vec![p("0"), p("1")]);
        assert_eq!(compute_g(&[p("-u"), p("0"), p("1")], &formal).unwrap(), vec![p("D1 - u"), p("0"), p("1")]);
        assert_eq!(compute_g(&[p("0"), p("0"), p("0"), p("1")], &formal).unwrap(), vec![p("0"), p("D1"), p("0"), p("1")]);
        assert!(compute_g(&[p("0"), p("2")], &formal).is_err());
    }
}
