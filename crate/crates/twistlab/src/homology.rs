//! Exact rank and homology computations for finite chain complexes over ℚ.

use crate::matrix::{Mat, QMat};
use num::traits::Zero;
use num::{BigInt, BigRational};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("differentials do not square to zero at level {level}")]
    NotAComplex { level: usize },
    #[error("differential d_{level} has shape {got_rows}×{got_cols}, expected {want_rows}×{want_cols}")]
    ShapeMismatch {
        level: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
}

/// Exact rank via fraction-free (Bareiss-style) elimination. Rows are
/// first scaled to integers; scaling rows does not change the rank.
pub fn rank_exact(m: &QMat) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let mut l = BigInt::from(1);
            for j in 0..m.cols() {
                let d = m.at(i, j).denom();
                l = num::integer::lcm(l, d.clone());
            }
            (0..m.cols())
                .map(|j| {
                    let q = m.at(i, j);
                    q.numer() * (&l / q.denom())
                })
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, piv);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let v = (&a[row][col] * &a[r][c] - &a[r][col] * &a[row][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// A finite chain complex over ℚ: levels 0..n with differentials
/// dᵢ: level i → level i−1, validated eagerly so downstream code can
/// assume d² = 0.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    dims: Vec<usize>,
    /// diffs[i] = d_{i+1}: level i+1 → level i, a dims[i] × dims[i+1] matrix.
    diffs: Vec<QMat>,
}

impl ChainComplexData {
    pub fn new(dims: Vec<usize>, diffs: Vec<QMat>) -> Result<Self, HomologyError> {
        assert_eq!(
            diffs.len(),
            dims.len().saturating_sub(1),
            "need one differential per adjacent pair of levels"
        );
        for (i, d) in diffs.iter().enumerate() {
            if d.rows() != dims[i] || d.cols() != dims[i + 1] {
                return Err(HomologyError::ShapeMismatch {
                    level: i + 1,
                    got_rows: d.rows(),
                    got_cols: d.cols(),
                    want_rows: dims[i],
                    want_cols: dims[i + 1],
                });
            }
        }
        for i in 0..diffs.len().saturating_sub(1) {
            let composite = diffs[i].mul_mat(&diffs[i + 1]);
            if !composite.is_zero_matrix() {
                return Err(HomologyError::NotAComplex { level: i + 1 });
            }
        }
        Ok(ChainComplexData { dims, diffs })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn rank_of_diff(&self, i: usize) -> usize {
        // rank of d_i: level i → level i−1; d_0 and d_{n} are zero.
        if i == 0 || i > self.diffs.len() {
            0
        } else {
            rank_exact(&self.diffs[i - 1])
        }
    }

    /// dim Hᵢ = dim ker dᵢ − rank dᵢ₊₁ per level.
    pub fn homology_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|i| self.dims[i] - self.rank_of_diff(i) - self.rank_of_diff(i + 1))
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        signed_sum(&self.dims)
    }
}

fn signed_sum(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// Σ(−1)ⁱ dim Hᵢ; equals the Euler characteristic of the underlying levels.
pub fn homology_euler(h: &[usize]) -> i64 {
    signed_sum(h)
}

pub fn qmat_from_i64(rows: Vec<Vec<i64>>) -> QMat {
    Mat::from_rows(
        rows.into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| BigRational::from(BigInt::from(x)))
                    .collect()
            })
            .collect(),
    )
}

/// Checks a rank computation against the number of nonzero rows of the
/// row echelon form computed naively over ℚ — an independent route used
/// by tests.
pub fn rank_naive(m: &QMat) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, piv);
        let inv = a[row][col].recip();
        for r in row + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * inv.clone();
            for c in col..cols {
                let s = f.clone() * a[row][c].clone();
                a[r][c] -= s;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_zero_matrix() {
        assert_eq!(rank_exact(&QMat::zero(3, 3)), 0);
    }

    #[test]
    fn rank_of_identity() {
        for n in 1..5 {
            assert_eq!(rank_exact(&QMat::identity(n)), n);
        }
    }

    #[test]
    fn rank_of_proportional_rows() {
        let m = qmat_from_i64(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn rank_with_rational_entries() {
        let m = Mat::from_rows(vec![
            vec![crate::novikov::qr(1, 2), crate::novikov::qr(1, 3)],
            vec![crate::novikov::qr(3, 2), crate::novikov::qr(1, 1)],
        ]);
        assert_eq!(rank_exact(&m), rank_naive(&m));
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn homology_of_zero_differential() {
        let c = ChainComplexData::new(vec![2, 2], vec![QMat::zero(2, 2)]).unwrap();
        assert_eq!(c.homology_dims(), vec![2, 2]);
    }

    #[test]
    fn homology_of_rank_one_differential() {
        let d = qmat_from_i64(vec![vec![0, 1], vec![0, 0]]);
        let c = ChainComplexData::new(vec![2, 2], vec![d]).unwrap();
        assert_eq!(c.homology_dims(), vec![1, 1]);
    }

    #[test]
    fn rejects_non_complex() {
        // d1 = d2 = identity does not satisfy d² = 0
        let d = QMat::identity(2);
        assert!(matches!(
            ChainComplexData::new(vec![2, 2, 2], vec![d.clone(), d]),
            Err(HomologyError::NotAComplex { .. })
        ));
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        let d1 = qmat_from_i64(vec![vec![1, 0, 1], vec![0, 1, 1]]);
        let d2 = qmat_from_i64(vec![vec![1], vec![1], vec![-1]]);
        let c = ChainComplexData::new(vec![2, 3, 1], vec![d1, d2]).unwrap();
        let h = c.homology_dims();
        assert_eq!(c.euler_characteristic(), homology_euler(&h));
    }
}
