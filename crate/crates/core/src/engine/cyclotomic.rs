//! Reduction modulo the left tensor ideal generated by `f(x)` on an upward
//! strand.
//!
//! A strand with at least `ell` black dots is cleared by subtracting an
//! ideal element with the same leading diagram: the strand is crossed over
//! to the right edge, `x^(k-ell) f(x)` (or `g` on a downward strand) is
//! applied there, and the crossings are undone. Every other term of that
//! element carries fewer black dots, so the process terminates.

use crate::diagrams::{End, NormalDiagram, Orient};
use crate::scalars::{specialize, BubblePolynomial, DeltaSpec, Var};

use super::drawing::{representative, Drawing, Layer, Prim};
use super::morphism::{compute_g, Morphism};
use super::normalize::reduce;
use super::EngineError;

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    /// Monic, lowest degree first.
    pub f: Vec<BubblePolynomial>,
    pub g: Vec<BubblePolynomial>,
    pub delta: DeltaSpec,
}

impl Cyclotomic {
    pub fn new(f: Vec<BubblePolynomial>, delta: DeltaSpec) -> Result<Cyclotomic, EngineError> {
        let g = compute_g(&f, &delta)?;
        if let Some(c) = g.iter().find(|c| c.has_delta()) {
            return Err(EngineError::Unspecialized(c.to_string()));
        }
        Ok(Cyclotomic { f, g, delta })
    }

    pub fn ell(&self) -> u32 {
        (self.f.len() - 1) as u32
    }

    /// Dot drawing at the right edge: the strand at `pos` of `word` is
    /// crossed to the right end, carries `k` black dots there, and returns.
    fn conjugated(word: &crate::diagrams::Word, pos: usize, k: u32) -> Drawing {
        let n = word.len();
        let mut layers: Vec<Layer> = (pos..n - 1).map(|q| Layer { pos: q, prim: Prim::Cross }).collect();
        layers.extend(std::iter::repeat_n(Layer { pos: n - 1, prim: Prim::Black }, k as usize));
        layers.extend((pos..n - 1).rev().map(|q| Layer { pos: q, prim: Prim::Cross }));
        Drawing { bottom: word.clone(), layers }
    }

    /// The ideal element whose leading term is `d`, assuming the strand
    /// `s` carries at least `ell` black dots.
    fn ideal_element(&self, d: &NormalDiagram, s: usize) -> Result<Morphism, EngineError> {
        let ell = self.ell();
        let strand = &d.strands[s];
        let extra = strand.black - ell;
        let mut bare = d.clone();
        bare.strands[s].black = 0;
        let base = representative(&bare);
        let mut out = Morphism::zero(&d.bottom, &d.top);
        let (poly, at_bottom, pos) = match strand.src {
            End::Bottom(i) => (&self.f, true, i),
            End::Top(j) => (&self.g, false, j),
        };
        for (j, a) in poly.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let k = extra + j as u32;
            let stacked = if at_bottom {
                Self::conjugated(&d.bottom, pos, k).then(&base)?
            } else {
                base.then(&Self::conjugated(&d.top, pos, k))?
            };
            for (nd, c) in reduce(&stacked, a.clone())? {
                out.add_term(nd, &c);
            }
        }
        debug_assert!(out.coeff(d).is_one(), "leading term of the ideal element");
        Ok(out)
    }

    /// Reduce every term to fewer than `ell` black dots per strand.
    pub fn reduce(&self, m: &Morphism) -> Result<Morphism, EngineError> {
        let ell = self.ell();
        let mut cur = m.specialize(&self.delta);
        if let Some(c) = cur.terms.values().find(|c| c.has_delta()) {
            return Err(EngineError::Unspecialized(c.to_string()));
        }
        loop {
            // Highest total dot count first keeps each step strictly lowering.
            let target = cur
                .terms
                .iter()
                .filter_map(|(d, c)| d.strands.iter().position(|s| s.black >= ell).map(|s| (d.total_black(), d.clone(), s, c.clone())))
                .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
            let Some((_, d, s, c)) = target else { break };
            let e = self.ideal_element(&d, s)?.specialize(&self.delta);
            cur = cur.add_scaled(&e, &-c)?;
        }
        Ok(cur)
    }

    /// Whether a scalar still mentions bubble symbols after specialization.
    pub fn residual_symbols(&self, p: &BubblePolynomial) -> Vec<Var> {
        let s = specialize(p, &self.delta);
        let mut out: Vec<Var> = s.terms().flat_map(|(m, _)| m.iter().map(|(v, _)| v.clone())).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Parse a polynomial in `t` into coefficients, lowest degree first.
pub fn parse_univariate(s: &str, var: &str) -> Result<Vec<BubblePolynomial>, EngineError> {
    let p = BubblePolynomial::parse(s).map_err(|e| EngineError::Parse(e.to_string()))?;
    let t = Var::Param(var.to_string());
    let mut out: Vec<BubblePolynomial> = Vec::new();
    for (m, c) in p.terms() {
        let k = m.iter().find(|(v, _)| *v == t).map(|(_, e)| *e).unwrap_or(0) as usize;
        let rest: Vec<(Var, u32)> = m.iter().filter(|(v, _)| *v != t).cloned().collect();
        if out.len() <= k {
            out.resize(k + 1, BubblePolynomial::zero());
        }
        let mut term = BubblePolynomial::zero();
        term.add_term(rest, c.clone());
        out[k] = &out[k] + &term;
    }
    if out.is_empty() {
        out.push(BubblePolynomial::zero());
    }
    Ok(out)
}

/// Render coefficients (lowest first) as a polynomial in `var`.
pub fn render_univariate(coeffs: &[BubblePolynomial], var: &str) -> String {
    let mut pieces = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let suffix = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{}^{}", var, k),
        };
        pieces.extend(c.render_pieces(&suffix));
    }
    crate::scalars::join_pieces(&pieces)
}

/// Orientation of the strand that carries the black dots of `s`.
pub fn source_orientation(d: &NormalDiagram, s: usize) -> Orient {
    match d.strands[s].src {
        End::Bottom(_) => Orient::Up,
        End::Top(_) => Orient::Down,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Word;
    use crate::engine::morphism::dot_power;

    fn p(s: &str) -> BubblePolynomial {
        BubblePolynomial::parse(s).unwrap()
    }

    #[test]
    fn single_strand_reductions() {
        let lin = Cyclotomic::new(vec![p("0"), p("1")], DeltaSpec::new()).unwrap();
        assert!(lin.reduce(&dot_power(Orient::Up, 1)).unwrap().is_zero());
        let quad = Cyclotomic::new(vec![p("-u"), p("0"), p("1")], DeltaSpec::new().with(1, p("d"))).unwrap();
        let up = Word::parse("^").unwrap();
        let down = Word::parse("v").unwrap();
        assert_eq!(quad.reduce(&dot_power(Orient::Up, 2)).unwrap(), Morphism::identity(&up).scale(&p("u")));
        assert_eq!(quad.reduce(&dot_power(Orient::Down, 2)).unwrap(), Morphism::identity(&down).scale(&p("u - d")));
        let r = quad.reduce(&dot_power(Orient::Up, 3)).unwrap();
        assert_eq!(quad.reduce(&r).unwrap(), r);
    }

    #[test]
    fn univariate_text() {
        let f = parse_univariate("t^2-4/9", "t").unwrap();
        assert_eq!(f, vec![p("-4/9"), p("0"), p("1")]);
        assert_eq!(render_univariate(&[p("d1 - 4/9"), p("0"), p("1")], "t"), "t^2 + d1 - 4/9");
    }
}
