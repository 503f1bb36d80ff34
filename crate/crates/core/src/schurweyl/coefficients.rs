//! Dot monomials applied to `w⁰ = v_{n-r+1} ⊗ ... ⊗ v_n ⊗ v_λ`, their
//! coefficient matrix, ranks, and the search for leading rows.

use std::sync::Arc;

use serde::Serialize;

use crate::diagrams::{NormalDiagram, Word};
use crate::engine::drawing::{Drawing, Prim};
use crate::engine::Morphism;
use crate::scalars::GaussianRational as Q;

use super::linalg::{rank, SuperVector};
use super::modules::{encode_with, vidx, vlabel, QModule, TensorModule, Trivial};
use super::psi::{psi_apply, psi_apply_morphism};
use super::verma::{TruncatedVerma, Weight};
use super::SchurWeylError;

/// Exponent tuples `(β_r, ..., β_1)` with entries below `ell`, sorted so
/// that a smaller total comes first and equal totals compare
/// lexicographically from the left.
pub fn beta_order(r: usize, ell: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|b: Vec<u32>| (0..ell).map(move |x| {
                let mut c = b.clone();
                c.push(x);
                c
            }))
            .collect();
    }
    out.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum()).then_with(|| a.cmp(b)));
    out
}

pub struct CoefficientMatrix {
    pub r: usize,
    pub ell: u32,
    pub betas: Vec<Vec<u32>>,
    /// Column for each entry of `betas`, over the basis of `V^{⊗r} ⊗ M`.
    pub columns: Vec<SuperVector>,
    pub module: Arc<TruncatedVerma>,
}

/// The dot monomial `x_r^{β_r} ⋯ x_1^{β_1}` on `↑^r`, where `x_k` is a black
/// dot on the `k`-th strand from the right.
pub fn dot_monomial(beta: &[u32]) -> Drawing {
    let r = beta.len();
    let mut layers = Vec::new();
    for k in 1..=r {
        for _ in 0..beta[r - k] {
            layers.push((r - k, Prim::Black));
        }
    }
    Drawing::from_layers(&Word::ups(r), &layers).expect("dots on upward strands")
}

impl CoefficientMatrix {
    pub fn n(&self) -> usize {
        self.module.n()
    }

    /// `w⁰` as a basis index.
    pub fn start(&self) -> usize {
        let n = self.n();
        let digits: Vec<usize> = (0..self.r).map(|p| vidx(n, (n - self.r + 1 + p) as i32)).collect();
        encode_with(n, self.module.dim(), &digits, self.module.highest())
    }

    /// Row label and PBW degree.
    pub fn row(&self, idx: usize) -> (String, usize) {
        let t = TensorModule::new(Word::ups(self.r), self.module.clone());
        let (_, b) = t.decode(idx);
        (t.label(idx), self.module.degree(b))
    }

    pub fn rank(&self) -> usize {
        rank(&self.columns)
    }

    /// For each `β` in order, a row with entry `±1` in column `β`, PBW
    /// degree `|β|`, and zero in every earlier column. `None` when some
    /// `β` has no such row.
    pub fn leading_rows(&self) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for (k, beta) in self.betas.iter().enumerate() {
            let total: u32 = beta.iter().sum();
            let unit = |c: &Q| c.is_one() || (-c).is_one();
            let row = self.columns[k].coords.iter().find(|(i, c)| {
                unit(c) && self.row(**i).1 == total as usize && self.columns[..k].iter().all(|col| col.get(**i).is_zero())
            })?;
            out.push(*row.0);
        }
        Some(out)
    }

    /// The square submatrix on the given rows, rows in the same order.
    pub fn submatrix(&self, rows: &[usize]) -> Vec<Vec<Q>> {
        rows.iter().map(|&i| self.columns.iter().map(|c| c.get(i)).collect()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut rows: Vec<usize> = self.columns.iter().flat_map(|c| c.coords.keys().copied()).collect();
        rows.sort();
        rows.dedup();
        let head: Vec<String> = self.betas.iter().map(|b| format!("b{}", b.iter().map(|x| x.to_string()).collect::<String>())).collect();
        let mut out = format!("row,{}\n", head.join(","));
        for i in rows {
            let cells: Vec<String> = self.columns.iter().map(|c| c.get(i).to_string()).collect();
            out.push_str(&format!("\"{}\",{}\n", self.row(i).0, cells.join(",")));
        }
        out
    }
}

pub fn coefficient_matrix(r: usize, ell: u32, lambda: &Weight, cap: usize) -> Result<CoefficientMatrix, SchurWeylError> {
    if lambda.n() < r {
        return Err(SchurWeylError::Weight(format!("need n >= r, got n = {}", lambda.n())));
    }
    let module = Arc::new(TruncatedVerma::new(lambda, cap));
    let betas = beta_order(r, ell);
    let mut cm = CoefficientMatrix { r, ell, betas, columns: Vec::new(), module };
    let w0 = SuperVector::basis(cm.start());
    let columns = cm
        .betas
        .iter()
        .map(|b| psi_apply(&dot_monomial(b), cm.module.as_ref(), &w0))
        .collect::<Result<Vec<_>, _>>()?;
    cm.columns = columns;
    Ok(cm)
}

pub fn independence_rank(vectors: &[SuperVector]) -> usize {
    rank(vectors)
}

/// Basis vectors of `V_word ⊗ M` whose `M` part has PBW degree zero.
pub fn degree_zero_inputs(word: &Word, m: &TruncatedVerma) -> Vec<usize> {
    let n = m.n();
    let t = TensorModule::new(word.clone(), Arc::new(Trivial { n }));
    let fd = m.fiber.dim;
    (0..t.dim())
        .flat_map(|w| (0..fd).map(move |f| (w, f)))
        .map(|(w, f)| {
            let (digits, _) = t.decode(w);
            encode_with(n, m.dim(), &digits, f)
        })
        .collect()
}

/// Each morphism as the concatenation of its values on `inputs`; linear
/// independence of these restrictions implies independence of the
/// operators.
pub fn restricted_operators(morphisms: &[Morphism], module: &dyn QModule, inputs: &[usize]) -> Result<Vec<SuperVector>, SchurWeylError> {
    let Some(first) = morphisms.first() else { return Ok(Vec::new()) };
    let n = module.n();
    let rows = (2 * n).pow(first.top.len() as u32) * module.dim();
    morphisms
        .iter()
        .map(|m| {
            let mut out = SuperVector::zero();
            for (k, &i) in inputs.iter().enumerate() {
                for (r, c) in psi_apply_morphism(m, module, &SuperVector::basis(i))?.coords {
                    out.add_term(k * rows + r, &c);
                }
            }
            Ok(out)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub r: usize,
    pub ell: u32,
    pub n: usize,
    pub columns: usize,
    pub rank: usize,
    pub full_rank: bool,
    pub leading_rows: Option<Vec<String>>,
    pub unitriangular: bool,
}

/// Rank and leading-row structure of the coefficient matrix.
pub fn rank_report(r: usize, ell: u32, lambda: &Weight, cap: usize) -> Result<RankReport, SchurWeylError> {
    let cm = coefficient_matrix(r, ell, lambda, cap)?;
    let rank = cm.rank();
    let lead = cm.leading_rows();
    let unitriangular = lead.as_ref().is_some_and(|rows| {
        let sub = cm.submatrix(rows);
        (0..rows.len()).all(|i| {
            let d = &sub[i][i];
            (d.is_one() || (-d).is_one()) && (0..i).all(|j| sub[i][j].is_zero())
        })
    });
    Ok(RankReport {
        r,
        ell,
        n: cm.n(),
        columns: cm.columns.len(),
        rank,
        full_rank: rank == cm.columns.len(),
        leading_rows: lead.map(|rows| rows.iter().map(|&i| cm.row(i).0).collect()),
        unitriangular,
    })
}

/// Normal diagrams as morphisms.
pub fn as_morphisms(ds: &[NormalDiagram]) -> Vec<Morphism> {
    ds.iter().cloned().map(Morphism::from_diagram).collect()
}

/// Label of a V basis vector, e.g. `v-2`.
pub fn v_name(n: usize, digit: usize) -> String {
    format!("v{}", vlabel(n, digit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schurweyl::verma::build_weight;
    use num_rational::BigRational;

    fn third() -> Vec<BigRational> {
        vec![BigRational::new(1.into(), 3.into())]
    }

    #[test]
    fn order_of_exponents() {
        assert_eq!(beta_order(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn level_one_single_column() {
        let w = build_weight(0, 1, false, &[2], &third()).unwrap();
        let cm = coefficient_matrix(1, 1, &w, 2).unwrap();
        assert_eq!(cm.columns, vec![SuperVector::basis(cm.start())]);
    }

    #[test]
    fn level_two_one_strand() {
        let w = build_weight(0, 1, false, &[2], &third()).unwrap();
        let cm = coefficient_matrix(1, 2, &w, 2).unwrap();
        assert_eq!(cm.rank(), 2);
        let top: Vec<(usize, Q)> = cm.columns[1].coords.iter().filter(|(i, _)| cm.row(**i).1 == 1).map(|(i, c)| (*i, c.clone())).collect();
        assert!(top.iter().any(|(_, c)| c.is_one() || (-c).is_one()));
        let rep = rank_report(1, 2, &w, 2).unwrap();
        assert!(rep.unitriangular, "{:?}", rep.leading_rows);
    }
}
