//! Dense and sparse Gaussian elimination over Q(a).

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn determinant(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                if !a[col][c].is_zero() {
                    let t = &f * &a[col][c];
                    a[r][c] -= &t;
                }
            }
        }
    }
    det
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
        a.swap(p, col);
        inv.swap(p, col);
        let pinv = a[col][col].inv()?;
        for c in 0..n {
            a[col][c] = &a[col][c] * &pinv;
            inv[col][c] = &inv[col][c] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                if !a[col][c].is_zero() {
                    let t = &f * &a[col][c];
                    a[r][c] -= &t;
                }
                if !inv[col][c].is_zero() {
                    let t = &f * &inv[col][c];
                    inv[r][c] -= &t;
                }
            }
        }
    }
    Ok(inv)
}

/// Incremental row-echelon basis of sparse vectors keyed by `K`.
#[derive(Clone, Debug)]
pub struct EchelonBasis<K: Ord + Clone> {
    rows: Vec<(K, BTreeMap<K, Scalar>)>,
}

impl<K: Ord + Clone> Default for EchelonBasis<K> {
    fn default() -> Self {
        EchelonBasis { rows: Vec::new() }
    }
}

impl<K: Ord + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
        for (pivot, row) in &self.rows {
            let Some(c) = v.get(pivot).cloned() else { continue };
            for (k, x) in row {
                let t = &c * x;
                let e = v.entry(k.clone()).or_insert_with(Scalar::zero);
                *e -= &t;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
        v
    }

    /// Adds `v` and reports whether it was independent of the rows so far.
    pub fn insert(&mut self, v: BTreeMap<K, Scalar>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero");
        let row: BTreeMap<K, Scalar> = r.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        for (_, other) in self.rows.iter_mut() {
            if let Some(c) = other.get(&pivot).cloned() {
                for (k, x) in &row {
                    let t = &c * x;
                    let e = other.entry(k.clone()).or_insert_with(Scalar::zero);
                    *e -= &t;
                    if e.is_zero() {
                        other.remove(k);
                    }
                }
            }
        }
        self.rows.push((pivot, row));
        true
    }

    pub fn contains(&self, v: BTreeMap<K, Scalar>) -> bool {
        self.reduce(v).is_empty()
    }
}

pub fn rank_of<K: Ord + Clone>(vectors: impl IntoIterator<Item = BTreeMap<K, Scalar>>) -> usize {
    let mut b = EchelonBasis::new();
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}
