//! Bubble values, zigzags, basis sizes and closure of composition in the
//! cyclotomic quotient.

use std::collections::BTreeSet;

use brauer_clifford::engine::cyclotomic::parse_univariate;
use brauer_clifford::engine::{hom_basis, loop_value, Cyclotomic, Morphism};
use brauer_clifford::{BubblePolynomial, DeltaSpec, NormalDiagram, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn expected_count(strands: usize, ell: u32) -> u128 {
    factorial(strands) * 2u128.pow(strands as u32) * (ell as u128).pow(strands as u32)
}

fn assert_distinct(basis: &[NormalDiagram]) {
    let keys: BTreeSet<_> = basis.iter().map(|d| d.key()).collect();
    assert_eq!(keys.len(), basis.len(), "duplicate diagrams");
}

#[test]
fn even_bubbles_vanish() {
    for k in (0..=6).step_by(2) {
        assert!(loop_value(k, 0).unwrap().is_zero(), "bubble with {} dots", k);
    }
}

#[test]
fn odd_bubbles_are_free() {
    for k in [1u32, 3, 5] {
        let v = loop_value(k, 0).unwrap();
        assert!(!v.is_zero() && v.has_delta(), "bubble with {} dots: {}", k, v);
    }
}

#[test]
fn white_bubble_vanishes() {
    assert!(loop_value(0, 1).unwrap().is_zero());
    for k in 1..=4 {
        assert!(loop_value(k, 1).unwrap().is_zero(), "white bubble with {} black dots", k);
    }
}

#[test]
fn zigzags_are_identities() {
    let up = Morphism::parse("id1").unwrap();
    let down = Morphism::parse("idv").unwrap();
    for (src, id) in [
        ("(compose (tensor id1 lcap) (tensor lcup id1))", &up),
        ("(compose (tensor rcap id1) (tensor id1 rcup))", &up),
        ("(compose (tensor lcap idv) (tensor idv lcup))", &down),
        ("(compose (tensor idv rcap) (tensor rcup idv))", &down),
    ] {
        assert_eq!(&Morphism::parse(src).unwrap(), id, "{}", src);
    }
}

#[test]
fn undotted_basis_sizes() {
    for r in 0..=4 {
        let w = Word::ups(r);
        let basis = hom_basis(&w, &w, 1).unwrap();
        assert_eq!(basis.len() as u128, expected_count(r, 1), "r = {}", r);
        assert_distinct(&basis);
    }
}

#[test]
fn dotted_upward_basis_sizes() {
    for r in 0..=3 {
        for ell in 1..=3 {
            let w = Word::ups(r);
            let basis = hom_basis(&w, &w, ell).unwrap();
            assert_eq!(basis.len() as u128, expected_count(r, ell), "r = {}, ell = {}", r, ell);
            assert_distinct(&basis);
        }
    }
}

#[test]
fn mixed_basis_sizes() {
    for r in 0..=3 {
        for t in 0..=3 - r {
            for ell in 1..=2 {
                let w = Word::walled(r, t);
                let basis = hom_basis(&w, &w, ell).unwrap();
                assert_eq!(basis.len() as u128, expected_count(r + t, ell), "r = {}, t = {}, ell = {}", r, t, ell);
                assert_distinct(&basis);
            }
        }
    }
}

fn quotient() -> Cyclotomic {
    let f = parse_univariate("t^2 - 4/9", "t").unwrap();
    Cyclotomic::new(f, DeltaSpec::new().with(1, BubblePolynomial::parse("2").unwrap()).with(3, BubblePolynomial::parse("8/9").unwrap())).unwrap()
}

fn in_span(m: &Morphism, basis: &BTreeSet<NormalDiagram>) -> bool {
    m.terms.keys().all(|d| basis.contains(d))
}

#[test]
fn products_reexpand_in_the_basis() {
    let cyc = quotient();
    let w = Word::ups(2);
    let basis = hom_basis(&w, &w, 2).unwrap();
    let set: BTreeSet<_> = basis.iter().cloned().collect();
    for a in &basis {
        for b in &basis {
            let p = Morphism::from_diagram(a.clone()).compose(&Morphism::from_diagram(b.clone())).unwrap();
            let q = cyc.reduce(&p).unwrap();
            assert!(in_span(&q, &set), "{} * {} -> {}", a, b, q);
            assert!(q.terms.values().all(|c| !c.has_delta()));
        }
    }
}

#[test]
fn composition_is_associative() {
    let cyc = quotient();
    let w = Word::ups(2);
    let basis = hom_basis(&w, &w, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = |d: &NormalDiagram| Morphism::from_diagram(d.clone());
    for _ in 0..100 {
        let [a, b, c] = [0; 3].map(|_| &basis[rng.gen_range(0..basis.len())]);
        let left = m(a).compose(&m(b)).unwrap().compose(&m(c)).unwrap();
        let right = m(a).compose(&m(b).compose(&m(c)).unwrap()).unwrap();
        assert_eq!(left, right, "affine: {} {} {}", a, b, c);
        let left = cyc.reduce(&cyc.reduce(&m(a).compose(&m(b)).unwrap()).unwrap().compose(&m(c)).unwrap()).unwrap();
        let right = cyc.reduce(&m(a).compose(&cyc.reduce(&m(b).compose(&m(c)).unwrap()).unwrap()).unwrap()).unwrap();
        assert_eq!(left, right, "cyclotomic: {} {} {}", a, b, c);
        assert_eq!(left, cyc.reduce(&right).unwrap());
    }
}

#[test]
fn reduction_is_idempotent_on_dotted_words() {
    let cyc = quotient();
    for src in ["(pow black 2)", "(pow black 3)", "(compose (tensor black black) cross (tensor black id1))"] {
        let m = Morphism::parse(src).unwrap();
        let once = cyc.reduce(&m).unwrap();
        assert_eq!(cyc.reduce(&once).unwrap(), once, "{}", src);
        assert!(once.terms.keys().all(|d| d.strands.iter().all(|s| s.black < 2)), "{}", src);
    }
}
