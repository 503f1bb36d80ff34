//! One line per acceptance criterion; fails if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use brauer_clifford::engine::cyclotomic::parse_univariate;
use brauer_clifford::engine::drawing::{Drawing, Prim};
use brauer_clifford::engine::{defining_relations, hom_basis, loop_value, Cyclotomic, GeneratorExpr, Morphism};
use brauer_clifford::scalars::{delta_prime, GaussianRational as Q};
use brauer_clifford::schurweyl::coefficients::{as_morphisms, coefficient_matrix, degree_zero_inputs, rank_report, restricted_operators};
use brauer_clifford::schurweyl::linalg::{operator_rank, rank, SuperOperator, SuperVector};
use brauer_clifford::schurweyl::modules::{QModule, TensorModule, Trivial};
use brauer_clifford::schurweyl::psi::{psi_apply, psi_drawing, psi_evaluate, relation_operator};
use brauer_clifford::schurweyl::sergeev::{dominance_check, even_grid, sergeev_eigenvalue, z_r};
use brauer_clifford::schurweyl::verma::{build_weight, TruncatedVerma, Weight};
use brauer_clifford::walled::{relation_table, symbolic_delta, verify_presentation, Combination, Phi};
use brauer_clifford::{BubblePolynomial, DeltaSpec, NormalDiagram, Word};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn third() -> Vec<BigRational> {
    vec![BigRational::new(1.into(), 3.into())]
}

fn bubble(k: usize) -> Drawing {
    let mut layers = vec![(0, Prim::RCup)];
    layers.extend(std::iter::repeat_n((1, Prim::Black), k));
    layers.push((0, Prim::LCap));
    Drawing::from_layers(&Word::empty(), &layers).unwrap()
}

fn relation_suite() -> Check {
    let rels = defining_relations();
    for rel in &rels {
        ensure(rel.residual().map_err(fail)?.is_zero(), || format!("{} does not vanish", rel.name))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = common::relations_in_context(&rels, &mut rng, 20)?;
    Ok(format!("{} relations, {} random contexts", rels.len(), n))
}

fn bubble_laws() -> Check {
    for k in (0..=6).step_by(2) {
        ensure(loop_value(k, 0).map_err(fail)?.is_zero(), || format!("bubble with {} dots", k))?;
    }
    ensure(loop_value(0, 1).map_err(fail)?.is_zero(), || "white bubble".into())?;
    let up = Morphism::parse("id1").map_err(fail)?;
    let down = Morphism::parse("idv").map_err(fail)?;
    for (src, id) in [
        ("(compose (tensor id1 lcap) (tensor lcup id1))", &up),
        ("(compose (tensor rcap id1) (tensor id1 rcup))", &up),
        ("(compose (tensor lcap idv) (tensor idv lcup))", &down),
        ("(compose (tensor idv rcap) (tensor rcup idv))", &down),
    ] {
        ensure(&Morphism::parse(src).map_err(fail)? == id, || src.to_string())?;
    }
    Ok("even bubbles, white bubble, four zigzags".into())
}

fn basis_counts() -> Check {
    let mut checked = 0;
    let mut check = |w: Word, ell: u32, strands: usize| -> Result<(), String> {
        let basis = hom_basis(&w, &w, ell).map_err(fail)?;
        let want = factorial(strands) * (1 << strands) * (ell as usize).pow(strands as u32);
        ensure(basis.len() == want, || format!("{} ell {}: {} != {}", w, ell, basis.len(), want))?;
        let keys: BTreeSet<_> = basis.iter().map(|d| d.key()).collect();
        ensure(keys.len() == basis.len(), || format!("{} ell {}: duplicates", w, ell))?;
        checked += 1;
        Ok(())
    };
    for r in 0..=4 {
        check(Word::ups(r), 1, r)?;
    }
    for r in 0..=3 {
        for ell in 1..=3 {
            check(Word::ups(r), ell, r)?;
        }
    }
    for r in 0..=3 {
        for t in 0..=3 - r {
            for ell in 1..=2 {
                check(Word::walled(r, t), ell, r + t)?;
            }
        }
    }
    Ok(format!("{} words", checked))
}

fn closure_and_associativity() -> Check {
    let f = parse_univariate("t^2 - 4/9", "t").map_err(fail)?;
    let delta = DeltaSpec::new().with(1, BubblePolynomial::parse("2").map_err(fail)?);
    let cyc = Cyclotomic::new(f, delta).map_err(fail)?;
    let w = Word::ups(2);
    let basis = hom_basis(&w, &w, 2).map_err(fail)?;
    let set: BTreeSet<NormalDiagram> = basis.iter().cloned().collect();
    let m = |d: &NormalDiagram| Morphism::from_diagram(d.clone());
    for a in &basis {
        for b in &basis {
            let q = cyc.reduce(&m(a).compose(&m(b)).map_err(fail)?).map_err(fail)?;
            ensure(q.terms.keys().all(|d| set.contains(d)), || format!("{} * {} leaves the basis", a, b))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let [a, b, c] = [0; 3].map(|_| &basis[rng.gen_range(0..basis.len())]);
        let ab = cyc.reduce(&m(a).compose(&m(b)).map_err(fail)?).map_err(fail)?;
        let bc = cyc.reduce(&m(b).compose(&m(c)).map_err(fail)?).map_err(fail)?;
        let left = cyc.reduce(&ab.compose(&m(c)).map_err(fail)?).map_err(fail)?;
        let right = cyc.reduce(&m(a).compose(&bc).map_err(fail)?).map_err(fail)?;
        ensure(left == right, || format!("({} {}) {} differs", a, b, c))?;
    }
    Ok(format!("{} products, 100 triples", basis.len() * basis.len()))
}

fn functoriality() -> Check {
    let modules: Vec<Arc<dyn QModule>> = vec![Arc::new(Trivial { n: 2 }), Arc::new(TensorModule::v_power(2, 1))];
    let rels = defining_relations();
    for module in &modules {
        for rel in &rels {
            let op = relation_operator(rel, module.as_ref()).map_err(fail)?;
            ensure(op.is_zero(), || format!("{} on a module of dimension {}", rel.name, module.dim()))?;
        }
    }
    let m = Trivial { n: 2 };
    let id = SuperOperator::identity(4);
    for s in ["(pow white 2)", "(compose (tensor id1 lcap) (tensor lcup id1))", "(compose (tensor lcap idv) (tensor idv lcup))"] {
        let d = GeneratorExpr::parse(s).map_err(fail)?.to_drawing().map_err(fail)?;
        ensure(psi_drawing(&d, &m).map_err(fail)? == id, || s.to_string())?;
    }
    Ok(format!("{} relations on 2 modules, 3 identities", rels.len()))
}

fn central_characters() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut weights = Vec::new();
    for _ in 0..10 {
        let n = rng.gen_range(1..=4);
        let v: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
        weights.push(Weight::from_fracs(&v));
    }
    for lam in &weights {
        for r in 1..=3 {
            let got = sergeev_eigenvalue(r, lam).map_err(fail)?;
            ensure(got == Q::real(z_r(r, &lam.entries)), || format!("r = {} λ = {:?}", r, lam.entries))?;
        }
    }
    for lam in weights.iter().filter(|w| w.entries.len() <= 2) {
        for r in 1..=2 {
            let m = TruncatedVerma::new(lam, 2 * r - 1);
            let u = SuperVector::basis(m.highest());
            let got = psi_apply(&bubble(2 * r - 1), &m, &u).map_err(fail)?;
            let want = u.scale(&Q::real(z_r(r, &lam.entries) * BigRational::from_integer((-2).into())));
            ensure(got == want, || format!("bubble r = {} λ = {:?}", r, lam.entries))?;
        }
    }
    Ok("10 weights, r <= 3".into())
}

fn independence() -> Check {
    let w = Word::ups(2);
    let basis = hom_basis(&w, &w, 1).map_err(fail)?;
    let ops: Vec<_> = as_morphisms(&basis).iter().map(|m| psi_evaluate(m, &Trivial { n: 4 })).collect::<Result<_, _>>().map_err(fail)?;
    let r8 = operator_rank(&ops);
    ensure(basis.len() == 8 && r8 == 8, || format!("undotted rank {} of {}", r8, basis.len()))?;
    let mut ranks = Vec::new();
    for r in 1..=2 {
        let lam = build_weight(0, 1, false, &[2 * r], &third()).map_err(fail)?;
        let cm = coefficient_matrix(r, 2, &lam, r + 1).map_err(fail)?;
        ensure(cm.rank() == 1 << r, || format!("coefficient rank {} at r = {}", cm.rank(), r))?;
        ranks.push(cm.rank());
    }
    let lam = build_weight(0, 1, false, &[2], &third()).map_err(fail)?;
    let m = Arc::new(TruncatedVerma::new(&lam, 2));
    let up = Word::ups(1);
    let family = hom_basis(&up, &up, 2).map_err(fail)?;
    let inputs = degree_zero_inputs(&up, &m);
    let vs = restricted_operators(&as_morphisms(&family), m.as_ref(), &inputs).map_err(fail)?;
    ensure(rank(&vs) == 4, || format!("one-strand family rank {}", rank(&vs)))?;
    Ok(format!("ranks 8, {:?}, 4", ranks))
}

fn unitriangularity() -> Check {
    for r in 1..=2 {
        for ell in 1..=2 {
            let n = if ell == 1 { 2 } else { 2 * r };
            let lam = if ell == 1 {
                Weight::from_fracs(&vec![(0, 1); n])
            } else {
                build_weight(0, 1, false, &[n], &third()).map_err(fail)?
            };
            let rep = rank_report(r, ell, &lam, r + 1).map_err(fail)?;
            ensure(rep.full_rank && rep.unitriangular, || format!("{:?}", rep))?;
        }
    }
    Ok("r <= 2, ell <= 2".into())
}

fn walled_presentation() -> Check {
    let fs = vec![parse_univariate("t", "t").map_err(fail)?, parse_univariate("t^2 - u", "t").map_err(fail)?];
    let delta = symbolic_delta(11);
    let mut total = 0;
    for (r, t) in [(1, 1), (2, 2)] {
        let table = relation_table(r, t, 5);
        let rep = verify_presentation(r, t, &delta, &table, &fs, true);
        let failed: Vec<_> = rep.entries.iter().filter(|e| !e.pass).map(|e| e.id.clone()).collect();
        ensure(failed.is_empty(), || format!("({}, {}): {:?}", r, t, failed))?;
        total += rep.entries.len();
    }
    let phi = Phi::new(1, 1, delta.clone());
    let e = phi.combination(&Combination::word("e1")).map_err(fail)?;
    for k in 1..=5u32 {
        let got = phi.combination(&Combination::word(&format!("e1 xb1^{} e1", k))).map_err(fail)?;
        let want = if k % 2 == 1 { e.scale(&delta_prime(&delta, k)) } else { e.scale(&BubblePolynomial::zero()) };
        ensure(got == want, || format!("closed xb1^{}: {}", k, got))?;
    }
    Ok(format!("{} checks at (1,1) and (2,2)", total))
}

fn dominance() -> Check {
    let a = dominance_check(0, 1, false, &third(), &even_grid(1, 4)).map_err(fail)?;
    ensure(a.nonzero, || format!("{:?}", a))?;
    let b = dominance_check(1, 1, false, &third(), &even_grid(2, 5)).map_err(fail)?;
    ensure(b.nonzero, || format!("{:?}", b))?;
    Ok("(0,1,0) and (1,1,0)".into())
}

/// Written straight to the process stdout so the lines survive output capture.
fn report(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", line);
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("relation suite", relation_suite),
        ("bubble laws", bubble_laws),
        ("basis counts", basis_counts),
        ("closure and associativity", closure_and_associativity),
        ("tensor-space functoriality", functoriality),
        ("central characters", central_characters),
        ("cyclotomic independence", independence),
        ("unitriangular leading rows", unitriangularity),
        ("walled presentation", walled_presentation),
        ("dominance", dominance),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = run();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => report(&format!("criterion {:>2} PASS  {} ({}; {:.1}s)", i + 1, name, detail, secs)),
            Err(why) => {
                failures += 1;
                report(&format!("criterion {:>2} FAIL  {} ({}; {:.1}s)", i + 1, name, why, secs));
            }
        }
    }
    assert_eq!(failures, 0, "{} criteria failed", failures);
}
