//! The defining relations, as linear combinations of generator expressions
//! that vanish.

use rand::Rng;

use crate::diagrams::{NormalDiagram, Orient, Word};
use crate::scalars::{BubblePolynomial, GaussianRational as Q};

use super::drawing::{representative, Drawing};
use super::expr::GeneratorExpr;
use super::morphism::{hom_basis, Morphism};
use super::EngineError;

#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    /// `Σ c·e = 0`.
    pub terms: Vec<(i64, GeneratorExpr)>,
}

impl Relation {
    fn new(name: &'static str, lhs: &[(i64, &str)], rhs: &[(i64, &str)]) -> Relation {
        let parse = |s: &str| GeneratorExpr::parse(s).expect("relation source parses");
        let mut terms: Vec<(i64, GeneratorExpr)> = lhs.iter().map(|(c, s)| (*c, parse(s))).collect();
        terms.extend(rhs.iter().map(|(c, s)| (-*c, parse(s))));
        Relation { name, terms }
    }

    pub fn drawings(&self) -> Result<Vec<(Q, Drawing)>, EngineError> {
        self.terms.iter().map(|(c, e)| Ok((Q::from_int(*c), e.to_drawing()?))).collect()
    }

    /// The normal form of `Σ c·e`; zero when the relation holds.
    pub fn residual(&self) -> Result<Morphism, EngineError> {
        let mut acc: Option<Morphism> = None;
        for (c, e) in &self.terms {
            let m = Morphism::normalize(e)?.scale(&BubblePolynomial::from_int(*c));
            acc = Some(match acc {
                None => m,
                Some(a) => a.add(&m)?,
            });
        }
        acc.ok_or_else(|| EngineError::Parse(format!("relation {} has no terms", self.name)))
    }
}

/// Every defining relation, including both down-dot definitions.
pub fn defining_relations() -> Vec<Relation> {
    let r = Relation::new;
    vec![
        r("crossing squares to one", &[(1, "(pow cross 2)")], &[(1, "id^^")]),
        r(
            "braid",
            &[(1, "(compose (tensor cross id1) (tensor id1 cross) (tensor cross id1))")],
            &[(1, "(compose (tensor id1 cross) (tensor cross id1) (tensor id1 cross))")],
        ),
        r("zigzag up", &[(1, "(compose (tensor id1 lcap) (tensor lcup id1))")], &[(1, "id1")]),
        r("zigzag down", &[(1, "(compose (tensor lcap idv) (tensor idv lcup))")], &[(1, "idv")]),
        r("sideways crossing right inverse", &[(1, "(compose (cross v^) (cross ^v))")], &[(1, "id^v")]),
        r("sideways crossing left inverse", &[(1, "(compose (cross ^v) (cross v^))")], &[(1, "idv^")]),
        r("white squares to one", &[(1, "(pow white 2)")], &[(1, "id1")]),
        r("white slides through crossing", &[(1, "(compose cross (tensor white id1))")], &[(1, "(compose (tensor id1 white) cross)")]),
        r("white bubble", &[(1, "(compose lcap (tensor idv white) rcup)")], &[]),
        r("black and white anticommute", &[(1, "(compose black white)"), (1, "(compose white black)")], &[]),
        r(
            "black slides through crossing",
            &[(1, "(compose (tensor black id1) cross)"), (-1, "(compose cross (tensor id1 black))")],
            &[(1, "id^^"), (-1, "(tensor white white)")],
        ),
        r(
            "white dot on a downward strand",
            &[(1, "white-down")],
            &[(1, "(compose (tensor lcap idv) (tensor idv white idv) (tensor idv lcup))")],
        ),
        r(
            "black dot on a downward strand",
            &[(1, "black-down")],
            &[(1, "(compose (tensor lcap idv) (tensor idv black idv) (tensor idv lcup))")],
        ),
    ]
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| if rng.gen_bool(0.5) { Orient::Up } else { Orient::Down }).collect())
}

fn charge(w: &Word) -> i64 {
    w.0.iter().map(|o| if *o == Orient::Up { 1 } else { -1 }).sum()
}

/// A random normal diagram into `fixed` (or out of it when `into` is false)
/// from a word of length at most `max_len`, with fewer than `ell` black dots
/// per strand.
pub fn random_basis_diagram<R: Rng>(rng: &mut R, fixed: &Word, into: bool, max_len: usize, ell: u32) -> Option<NormalDiagram> {
    for _ in 0..50 {
        let other = random_word(rng, max_len);
        if charge(&other) != charge(fixed) {
            continue;
        }
        let basis = if into { hom_basis(&other, fixed, ell) } else { hom_basis(fixed, &other, ell) }.ok()?;
        if !basis.is_empty() {
            return Some(basis[rng.gen_range(0..basis.len())].clone());
        }
    }
    None
}

/// Normal form of the relation tensored with identities on `left` and
/// `right` and stacked between `below` and `above`.
pub fn residual_in_context(rel: &Relation, left: &Word, right: &Word, below: Option<&NormalDiagram>, above: Option<&NormalDiagram>) -> Result<Morphism, EngineError> {
    let mut acc: Option<Morphism> = None;
    for (c, e) in &rel.terms {
        let mid = Drawing::identity(left).tensor(&e.to_drawing()?).tensor(&Drawing::identity(right));
        let mut d = match below {
            Some(b) => representative(b).then(&mid)?,
            None => mid,
        };
        if let Some(a) = above {
            d = d.then(&representative(a))?;
        }
        let m = Morphism::from_drawing(&d)?.scale(&BubblePolynomial::from_int(*c));
        acc = Some(match acc {
            None => m,
            Some(a) => a.add(&m)?,
        });
    }
    acc.ok_or_else(|| EngineError::Parse(format!("relation {} has no terms", rel.name)))
}

/// Check `rel` in `samples` random contexts: identities of length at most one
/// on each side, and random basis diagrams on words of length at most three
/// below and above. Returns the first failing residual.
pub fn check_in_contexts<R: Rng>(rel: &Relation, rng: &mut R, samples: usize) -> Result<Option<Morphism>, EngineError> {
    let d = rel.terms[0].1.to_drawing()?;
    let (bottom, top) = (d.bottom.clone(), d.top());
    for _ in 0..samples {
        let left = random_word(rng, 1);
        let right = random_word(rng, 1);
        let below = random_basis_diagram(rng, &left.concat(&bottom).concat(&right), true, 3, 2);
        let above = random_basis_diagram(rng, &left.concat(&top).concat(&right), false, 3, 2);
        let m = residual_in_context(rel, &left, &right, below.as_ref(), above.as_ref())?;
        if !m.is_zero() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_in_normal_form() {
        for rel in defining_relations() {
            let m = rel.residual().unwrap();
            assert!(m.is_zero(), "{}: {}", rel.name, m);
        }
    }
}
