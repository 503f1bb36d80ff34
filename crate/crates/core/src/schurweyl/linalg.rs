//! Sparse exact vectors and operators over Q(i).

use std::collections::BTreeMap;

use crate::scalars::GaussianRational as Q;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuperVector {
    pub coords: BTreeMap<usize, Q>,
}

impl SuperVector {
    pub fn zero() -> Self {
        SuperVector::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut v = SuperVector::zero();
        v.coords.insert(i, Q::one());
        v
    }

    pub fn get(&self, i: usize) -> Q {
        self.coords.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coords.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coords.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, other: &SuperVector, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.coords {
            self.add_term(*i, &(x * c));
        }
    }

    pub fn scale(&self, c: &Q) -> SuperVector {
        let mut out = SuperVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn sub(&self, other: &SuperVector) -> SuperVector {
        let mut out = self.clone();
        out.add_scaled(other, &Q::from_int(-1));
        out
    }

    pub fn leading(&self) -> Option<(usize, &Q)> {
        self.coords.iter().next().map(|(i, c)| (*i, c))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords.iter().map(|(i, c)| serde_json::json!([i, c.to_string()])).collect(),
        )
    }
}

/// Column-sparse operator `cols -> rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperOperator {
    pub rows: usize,
    pub columns: Vec<SuperVector>,
}

impl SuperOperator {
    pub fn from_columns(rows: usize, columns: Vec<SuperVector>) -> Self {
        SuperOperator { rows, columns }
    }

    pub fn identity(n: usize) -> Self {
        SuperOperator { rows: n, columns: (0..n).map(SuperVector::basis).collect() }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn apply(&self, v: &SuperVector) -> SuperVector {
        let mut out = SuperVector::zero();
        for (i, c) in &v.coords {
            out.add_scaled(&self.columns[*i], c);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SuperOperator) -> SuperOperator {
        assert_eq!(self.cols(), other.rows, "operator shapes do not compose");
        SuperOperator { rows: self.rows, columns: other.columns.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add_scaled(&mut self, other: &SuperOperator, c: &Q) {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        for (a, b) in self.columns.iter_mut().zip(&other.columns) {
            a.add_scaled(b, c);
        }
    }

    pub fn scale(&self, c: &Q) -> SuperOperator {
        SuperOperator { rows: self.rows, columns: self.columns.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// All entries as one vector (column-major), for rank computations.
    pub fn vectorize(&self) -> SuperVector {
        let mut out = SuperVector::zero();
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in &col.coords {
                out.add_term(j * self.rows + i, c);
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<SuperOperator> {
        let n = self.rows;
        if n != self.cols() {
            return None;
        }
        // Row-major working copy [A | I].
        let mut rows: Vec<(SuperVector, SuperVector)> = (0..n)
            .map(|i| {
                let mut r = SuperVector::zero();
                for (j, col) in self.columns.iter().enumerate() {
                    r.add_term(j, &col.get(i));
                }
                (r, SuperVector::basis(i))
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !rows[r].0.get(col).is_zero())?;
            rows.swap(col, piv);
            let inv = rows[col].0.get(col).inv().ok()?;
            let (a, b) = rows[col].clone();
            let (a, b) = (a.scale(&inv), b.scale(&inv));
            rows[col] = (a.clone(), b.clone());
            for r in 0..n {
                if r != col {
                    let f = rows[r].0.get(col);
                    if !f.is_zero() {
                        let m = -f;
                        rows[r].0.add_scaled(&a, &m);
                        rows[r].1.add_scaled(&b, &m);
                    }
                }
            }
        }
        let mut columns = vec![SuperVector::zero(); n];
        for (i, (_, b)) in rows.iter().enumerate() {
            for (j, c) in &b.coords {
                columns[*j].add_term(i, c);
            }
        }
        Some(SuperOperator { rows: n, columns })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rows": self.rows,
            "cols": self.cols(),
            "columns": self.columns.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Exact rank of a family of vectors (row echelon form with exact pivots).
pub fn rank(vectors: &[SuperVector]) -> usize {
    // Echelon basis keyed by pivot index, each with pivot coefficient 1.
    let mut basis: BTreeMap<usize, SuperVector> = BTreeMap::new();
    for v in vectors {
        let mut w = v.clone();
        loop {
            let Some((p, c)) = w.leading().map(|(p, c)| (p, c.clone())) else { break };
            match basis.get(&p) {
                Some(b) => w.add_scaled(b, &-c),
                None => {
                    let inv = c.inv().expect("nonzero pivot");
                    basis.insert(p, w.scale(&inv));
                    break;
                }
            }
        }
    }
    basis.len()
}

pub fn operator_rank(ops: &[SuperOperator]) -> usize {
    rank(&ops.iter().map(|o| o.vectorize()).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let mut v = SuperVector::basis(0);
        v.add_term(3, &Q::i());
        assert_eq!(rank(&[v.clone(), v.scale(&Q::from_int(2))]), 1);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[v, SuperVector::basis(3)]), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let mut a = SuperOperator::identity(3);
        a.columns[0].add_term(1, &Q::from_int(2));
        a.columns[2].add_term(0, &Q::i());
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv), SuperOperator::identity(3));
        let mut s = SuperOperator::identity(2);
        s.columns[1] = SuperVector::zero();
        assert!(s.inverse().is_none());
    }
}
