//! Central elements on Verma modules, independence of dotted diagrams under
//! the tensor-space functor, and the dominance test.

use std::sync::Arc;

use brauer_clifford::engine::drawing::{Drawing, Prim};
use brauer_clifford::engine::hom_basis;
use brauer_clifford::scalars::GaussianRational as Q;
use brauer_clifford::schurweyl::coefficients::{as_morphisms, coefficient_matrix, degree_zero_inputs, rank_report, restricted_operators};
use brauer_clifford::schurweyl::linalg::{operator_rank, rank, SuperVector};
use brauer_clifford::schurweyl::modules::Trivial;
use brauer_clifford::schurweyl::psi::{psi_apply, psi_evaluate};
use brauer_clifford::schurweyl::sergeev::{dominance_check, even_grid, sergeev_eigenvalue, z_r};
use brauer_clifford::schurweyl::verma::{build_weight, TruncatedVerma, Weight};
use brauer_clifford::Word;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn third() -> Vec<BigRational> {
    vec![BigRational::new(1.into(), 3.into())]
}

fn random_weight(rng: &mut ChaCha8Rng, n: usize) -> Weight {
    let v: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
    Weight::from_fracs(&v)
}

/// Counterclockwise bubble with `k` black dots.
fn bubble(k: usize) -> Drawing {
    let mut layers = vec![(0, Prim::RCup)];
    layers.extend(std::iter::repeat_n((1, Prim::Black), k));
    layers.push((0, Prim::LCap));
    Drawing::from_layers(&Word::empty(), &layers).unwrap()
}

#[test]
fn sergeev_elements_act_by_z() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let n = rng.gen_range(1..=4);
        let lam = random_weight(&mut rng, n);
        for r in 1..=3 {
            let got = sergeev_eigenvalue(r, &lam).unwrap();
            assert_eq!(got, Q::real(z_r(r, &lam.entries)), "r = {} λ = {:?}", r, lam.entries);
        }
    }
}

#[test]
fn odd_bubbles_act_by_minus_two_z() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..4 {
        let n = rng.gen_range(1..=2);
        let lam = random_weight(&mut rng, n);
        for r in 1..=2 {
            let m = TruncatedVerma::new(&lam, 2 * r - 1);
            let u = SuperVector::basis(m.highest());
            let got = psi_apply(&bubble(2 * r - 1), &m, &u).unwrap();
            let want = u.scale(&Q::real(z_r(r, &lam.entries) * BigRational::from_integer((-2).into())));
            assert_eq!(got, want, "r = {} λ = {:?}", r, lam.entries);
        }
    }
}

#[test]
fn first_bubble_is_twice_the_weight_sum() {
    let lam = Weight::from_fracs(&[(1, 3), (-2, 3), (5, 1)]);
    let m = TruncatedVerma::new(&lam, 1);
    let u = SuperVector::basis(m.highest());
    let sum: BigRational = lam.entries.iter().sum();
    let want = u.scale(&Q::real(sum * BigRational::from_integer(2.into())));
    assert_eq!(psi_apply(&bubble(1), &m, &u).unwrap(), want);
}

#[test]
fn undotted_diagrams_on_two_strands_are_independent() {
    let w = Word::ups(2);
    let basis = hom_basis(&w, &w, 1).unwrap();
    assert_eq!(basis.len(), 8);
    let module = Trivial { n: 4 };
    let ops: Vec<_> = as_morphisms(&basis).iter().map(|m| psi_evaluate(m, &module).unwrap()).collect();
    assert_eq!(operator_rank(&ops), 8);
}

#[test]
fn dot_monomials_on_a_verma_module_are_independent() {
    for r in 1..=2 {
        let w = build_weight(0, 1, false, &[2 * r], &third()).unwrap();
        let cm = coefficient_matrix(r, 2, &w, r + 1).unwrap();
        assert_eq!(cm.rank(), 1 << r, "r = {}", r);
    }
}

#[test]
fn leading_rows_are_unitriangular() {
    for r in 1..=2 {
        let w = build_weight(0, 1, false, &[2 * r], &third()).unwrap();
        let rep = rank_report(r, 2, &w, r + 1).unwrap();
        assert!(rep.full_rank && rep.unitriangular, "{:?}", rep);
    }
}

#[test]
fn one_strand_family_is_independent() {
    let w = build_weight(0, 1, false, &[2], &third()).unwrap();
    let m = Arc::new(TruncatedVerma::new(&w, 2));
    let up = Word::ups(1);
    let basis = hom_basis(&up, &up, 2).unwrap();
    assert_eq!(basis.len(), 4);
    let inputs = degree_zero_inputs(&up, &m);
    let vs = restricted_operators(&as_morphisms(&basis), m.as_ref(), &inputs).unwrap();
    assert_eq!(rank(&vs), 4);
}

#[test]
fn dominance_for_small_block_patterns() {
    let r = dominance_check(0, 1, false, &third(), &even_grid(1, 4)).unwrap();
    assert!(r.nonzero, "{:?}", r);
    let r = dominance_check(1, 1, false, &third(), &even_grid(2, 5)).unwrap();
    assert!(r.nonzero, "{:?}", r);
}
