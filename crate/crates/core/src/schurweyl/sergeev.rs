//! Sergeev central elements on highest weight vectors, the scalars
//! `z_r(λ)`, and the Jacobian test for the map `n ↦ (z_1, ..., z_m)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::scalars::{BubblePolynomial, GaussianRational as Q, Var};

use super::linalg::SuperVector;
use super::modules::{QGen, QModule};
use super::verma::{build_weight, TruncatedVerma, Weight};
use super::SchurWeylError;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `z_r(λ) = -Σ 2^{s-1} Π_j λ_{i_j} (λ_{i_j}^2 + λ_{i_j})^{a_j}` over
/// `i_1 < ... < i_s` and `a_1 + ... + a_s = r - s`.
pub fn z_r(r: usize, lambda: &[BigRational]) -> BigRational {
    // Sum over increasing index tuples and compositions, one index at a time:
    // acc[s][d] collects tuples of length s whose exponents sum to d.
    let mut acc = vec![vec![BigRational::zero(); r + 1]; r + 1];
    acc[0][0] = BigRational::one();
    for l in lambda {
        let y = l * l + l;
        let powers: Vec<BigRational> = (0..=r).scan(BigRational::one(), |p, _| {
            let cur = p.clone();
            *p = &*p * &y;
            Some(cur)
        }).collect();
        for s in (1..=r).rev() {
            for d in (0..=r).rev() {
                let mut add = BigRational::zero();
                for a in 0..=d {
                    add += &acc[s - 1][d - a] * l * &powers[a];
                }
                acc[s][d] += add;
            }
        }
    }
    let mut z = BigRational::zero();
    for s in 1..=r {
        z -= &acc[s][r - s] * rat(1 << (s - 1));
    }
    z
}

/// The same scalar through the recursion for `σ(x⁰_{i,i}(m))` modulo the
/// left ideal of raising operators, with `h_i ↦ λ_i`.
pub fn sergeev_recursion(r: usize, lambda: &[BigRational]) -> BigRational {
    let n = lambda.len();
    let mut x: Vec<BigRational> = lambda.iter().map(|l| -l.clone()).collect();
    for _ in 1..r {
        let prev = x.clone();
        let mut below = BigRational::zero();
        for i in 0..n {
            let l = &lambda[i];
            x[i] = &prev[i] * &(l * l + l) + &below * l * rat(2);
            below += &prev[i];
        }
    }
    x.iter().fold(BigRational::zero(), |s, v| s + v)
}

/// `σ(S_r) u` for the highest weight vector `u` of a truncated Verma module,
/// computed by applying the defining sums of the Sergeev elements
/// generator by generator, with `σ(g) = -g`.
pub fn sergeev_vector(r: usize, m: &TruncatedVerma) -> Result<SuperVector, SchurWeylError> {
    let n = m.n();
    let steps = 2 * r - 1;
    let u = SuperVector::basis(m.highest());
    let mut total = SuperVector::zero();
    for j in 1..=n {
        // States (current row index, parity type) with the partial vector;
        // `left` generators remain before closing at column j.
        let mut states: Vec<((usize, bool), SuperVector)> = vec![((j, false), u.clone())];
        for left in (1..=steps).rev() {
            let mut next: Vec<((usize, bool), SuperVector)> = Vec::new();
            let push = |k: (usize, bool), v: SuperVector, next: &mut Vec<((usize, bool), SuperVector)>| {
                if v.is_zero() {
                    return;
                }
                match next.iter_mut().find(|(kk, _)| *kk == k) {
                    Some((_, w)) => w.add_scaled(&v, &Q::one()),
                    None => next.push((k, v)),
                }
            };
            for ((i, odd), v) in &states {
                if left == 1 {
                    let g = if *odd { QGen::F(*i, j) } else { QGen::E(*i, j) };
                    total.add_scaled(&m.act_vector(g, v)?, &-Q::one());
                    continue;
                }
                // σ(X^τ_{i,j}(left)) = Σ_s -σ(X^τ_{s,j}) e_{i,s}
                //                     - (-1)^{left-1} (-1)^{1-τ} σ(X^{1-τ}_{s,j}) f_{i,s}.
                let cf = -Q::sign((left - 1) % 2 == 1) * Q::sign(!*odd);
                for s in 1..=n {
                    push((s, *odd), m.act_vector(QGen::E(*i, s), v)?.scale(&-Q::one()), &mut next);
                    push((s, !*odd), m.act_vector(QGen::F(*i, s), v)?.scale(&cf), &mut next);
                }
            }
            states = next;
        }
    }
    Ok(total)
}

/// Eigenvalue of `σ(S_r)` on the highest weight vector of `M(λ)`.
pub fn sergeev_eigenvalue(r: usize, lambda: &Weight) -> Result<Q, SchurWeylError> {
    if r == 0 {
        return Err(SchurWeylError::Other("r must be positive".into()));
    }
    let m = TruncatedVerma::new(lambda, 2 * r - 1);
    let v = sergeev_vector(r, &m)?;
    let c = v.get(m.highest());
    let rest = v.sub(&SuperVector::basis(m.highest()).scale(&c));
    if !rest.is_zero() {
        return Err(SchurWeylError::Other(format!("σ(S_{}) does not preserve the highest weight line", r)));
    }
    Ok(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct DominanceReport {
    pub a: usize,
    pub b: usize,
    pub eps: bool,
    /// Interpolated `z_k` as polynomials in `n1, n2, ...`.
    pub z: Vec<String>,
    pub jacobian_determinant: String,
    pub nonzero: bool,
}

fn var(s: usize) -> Var {
    Var::Param(format!("n{}", s + 1))
}

/// All exponent vectors in `vars` variables of total degree at most `deg`.
fn exponents(vars: usize, deg: u32) -> Vec<Vec<u32>> {
    if vars == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut tail in exponents(vars - 1, deg - e) {
            tail.insert(0, e);
            out.push(tail);
        }
    }
    out
}

/// Solve a square-or-tall exact linear system; `None` if the columns are
/// dependent on the given rows.
fn solve(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<BigRational>> = rows.iter().zip(rhs).map(|(r, b)| {
        let mut r = r.clone();
        r.push(b.clone());
        r
    }).collect();
    let mut piv_row = 0;
    for c in 0..cols {
        let p = (piv_row..a.len()).find(|&i| !a[i][c].is_zero())?;
        a.swap(piv_row, p);
        let inv = BigRational::one() / &a[piv_row][c];
        for x in a[piv_row].iter_mut() {
            *x = &*x * &inv;
        }
        let pr = a[piv_row].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != piv_row && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        piv_row += 1;
    }
    // Consistency of the remaining rows.
    if a[piv_row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some(a[..cols].iter().map(|r| r[cols].clone()).collect())
}

fn derivative(p: &BubblePolynomial, v: &Var) -> BubblePolynomial {
    let mut out = BubblePolynomial::zero();
    for (m, c) in p.terms() {
        if let Some(&(_, e)) = m.iter().find(|(w, _)| w == v) {
            let mono: Vec<(Var, u32)> = m.iter().filter_map(|(w, k)| {
                if w == v { (e > 1).then(|| (w.clone(), e - 1)) } else { Some((w.clone(), *k)) }
            }).collect();
            let mut t = BubblePolynomial::zero();
            t.add_term(mono, c * &Q::from_int(e as i64));
            out = &out + &t;
        }
    }
    out
}

fn determinant(m: &[Vec<BubblePolynomial>]) -> BubblePolynomial {
    let k = m.len();
    if k == 0 {
        return BubblePolynomial::one();
    }
    let mut out = BubblePolynomial::zero();
    for (c, entry) in m[0].iter().enumerate() {
        let minor: Vec<Vec<BubblePolynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = entry * &determinant(&minor);
        out = if c % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

/// Interpolate each `z_k(λ(n))`, `1 <= k <= a+b`, as a polynomial of total
/// degree at most `2k` in the free block sizes, and test the Jacobian
/// determinant for being nonzero.
pub fn dominance_check(a: usize, b: usize, eps: bool, generic: &[BigRational], samples: &[Vec<usize>]) -> Result<DominanceReport, SchurWeylError> {
    let m = a + b;
    let mut zs = Vec::new();
    for k in 1..=m {
        let basis = exponents(m, 2 * k as u32);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for pt in samples {
            if pt.len() != m {
                return Err(SchurWeylError::Weight(format!("sample point {:?} needs {} block sizes", pt, m)));
            }
            let mut sizes = pt.clone();
            if eps {
                sizes.push(2);
            }
            let w = build_weight(a, b, eps, &sizes, generic)?;
            rows.push(basis.iter().map(|e| e.iter().zip(pt).fold(BigRational::one(), |acc, (&x, &n)| acc * rat(n as i64).pow(x as i32))).collect::<Vec<_>>());
            rhs.push(z_r(k, &w.entries));
        }
        let coeffs = solve(&rows, &rhs).ok_or_else(|| {
            SchurWeylError::Other(format!("insufficient samples: {} points do not determine z_{} ({} unknowns)", samples.len(), k, basis.len()))
        })?;
        let mut p = BubblePolynomial::zero();
        for (e, c) in basis.iter().zip(coeffs) {
            let mono: Vec<(Var, u32)> = e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(s, &x)| (var(s), x)).collect();
            p.add_term(mono, Q::real(c));
        }
        zs.push(p);
    }
    let jac: Vec<Vec<BubblePolynomial>> = zs.iter().map(|z| (0..m).map(|s| derivative(z, &var(s))).collect()).collect();
    let det = determinant(&jac);
    Ok(DominanceReport {
        a,
        b,
        eps,
        z: zs.iter().map(|p| p.to_string()).collect(),
        jacobian_determinant: det.to_string(),
        nonzero: !det.is_zero(),
    })
}

/// The even block-size grid `{2, 4, ..., 2 points}^vars`.
pub fn even_grid(vars: usize, points: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| (1..=points).map(move |x| {
                let mut q = p.clone();
                q.push(2 * x);
                q
            }))
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[(i64, i64)]) -> Weight {
        Weight::from_fracs(v)
    }

    #[test]
    fn z_values() {
        assert_eq!(z_r(1, &w(&[(2, 1), (1, 1)]).entries), rat(-3));
        assert_eq!(z_r(2, &w(&[(1, 1)]).entries), rat(-2));
        assert_eq!(z_r(2, &w(&[(2, 1), (1, 1)]).entries), rat(-18));
        assert_eq!(z_r(1, &w(&[(0, 1), (0, 1)]).entries), rat(0));
        assert_eq!(z_r(3, &w(&[(0, 1); 3]).entries), rat(0));
    }

    #[test]
    fn recursion_matches_definition() {
        let lam = w(&[(1, 3), (-2, 3), (5, 2), (-1, 1)]);
        for r in 1..=4 {
            assert_eq!(sergeev_recursion(r, &lam.entries), z_r(r, &lam.entries));
        }
    }

    #[test]
    fn eigenvalue_on_highest_weight_vector() {
        let lam = w(&[(2, 1), (1, 1)]);
        assert_eq!(sergeev_eigenvalue(1, &lam).unwrap(), Q::from_int(-3));
        assert_eq!(sergeev_eigenvalue(2, &lam).unwrap(), Q::from_int(-18));
        assert_eq!(sergeev_eigenvalue(2, &w(&[(0, 1), (0, 1)])).unwrap(), Q::zero());
    }

    #[test]
    fn dominance_small() {
        let third = vec![BigRational::new(1.into(), 3.into())];
        let r = dominance_check(0, 1, false, &third, &even_grid(1, 4)).unwrap();
        assert!(r.nonzero);
        assert!(dominance_check(0, 1, false, &third, &even_grid(1, 2)).is_err());
        let r = dominance_check(0, 0, true, &[], &[vec![]]).unwrap();
        assert!(r.nonzero);
        assert_eq!(r.jacobian_determinant, "1");
    }
}
