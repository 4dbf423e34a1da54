//! ℤ/2-graded vector spaces and degree-0 maps, supertraces, the
//! fixed-point degree convention, finite-order supertrace audits and the
//! signed fixed-point Lefschetz formula.

use crate::matrix::{det_q, Mat, QMat};
use crate::novikov::{rational_to_f64, BaseFieldElement, NovikovScalar, Q};
use num::traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradedError {
    #[error("block sizes do not match the graded space dimensions")]
    BlockSizeMismatch,
    #[error("degenerate fixed point: det(Id - M) = 0")]
    DegenerateFixedPoint,
    #[error("map is not of finite order {0}")]
    NotFiniteOrder(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSpace {
    pub dim0: usize,
    pub dim1: usize,
}

impl GradedSpace {
    pub fn new(dim0: usize, dim1: usize) -> Self {
        GradedSpace { dim0, dim1 }
    }

    pub fn total_dim(&self) -> usize {
        self.dim0 + self.dim1
    }
}

/// Degree-0 automorphism of V⁰ ⊕ V¹ over Λ; block-diagonal by construction,
/// so maps of nonzero degree are unrepresentable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    space: GradedSpace,
    block0: Mat<NovikovScalar>,
    block1: Mat<NovikovScalar>,
}

impl GradedMap {
    pub fn new(
        space: GradedSpace,
        block0: Mat<NovikovScalar>,
        block1: Mat<NovikovScalar>,
    ) -> Result<Self, GradedError> {
        if block0.rows() != space.dim0
            || block0.cols() != space.dim0
            || block1.rows() != space.dim1
            || block1.cols() != space.dim1
        {
            return Err(GradedError::BlockSizeMismatch);
        }
        Ok(GradedMap {
            space,
            block0,
            block1,
        })
    }

    pub fn identity(space: GradedSpace) -> Self {
        GradedMap {
            space,
            block0: Mat::identity(space.dim0),
            block1: Mat::identity(space.dim1),
        }
    }

    pub fn space(&self) -> GradedSpace {
        self.space
    }

    pub fn block0(&self) -> &Mat<NovikovScalar> {
        &self.block0
    }

    pub fn block1(&self) -> &Mat<NovikovScalar> {
        &self.block1
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.space, other.space);
        GradedMap {
            space: self.space,
            block0: self.block0.mul_mat(&other.block0),
            block1: self.block1.mul_mat(&other.block1),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        GradedMap {
            space: self.space,
            block0: self.block0.pow(e),
            block1: self.block1.pow(e),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.block0.is_identity() && self.block1.is_identity()
    }

    /// STr(φ) = Tr(φ|V⁰) − Tr(φ|V¹), exact.
    pub fn supertrace(&self) -> NovikovScalar {
        self.block0.trace() - self.block1.trace()
    }

    /// V ⊕ V′ with the evident block structure.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let space = GradedSpace::new(
            self.space.dim0 + other.space.dim0,
            self.space.dim1 + other.space.dim1,
        );
        GradedMap {
            space,
            block0: block_diag(&self.block0, &other.block0),
            block1: block_diag(&self.block1, &other.block1),
        }
    }

    /// Graded tensor product. For degree-0 maps no Koszul signs appear;
    /// (V⊗W)⁰ = V⁰⊗W⁰ ⊕ V¹⊗W¹ and (V⊗W)¹ = V⁰⊗W¹ ⊕ V¹⊗W⁰.
    pub fn tensor(&self, other: &Self) -> Self {
        let space = GradedSpace::new(
            self.space.dim0 * other.space.dim0 + self.space.dim1 * other.space.dim1,
            self.space.dim0 * other.space.dim1 + self.space.dim1 * other.space.dim0,
        );
        let block0 = block_diag(
            &kronecker(&self.block0, &other.block0),
            &kronecker(&self.block1, &other.block1),
        );
        let block1 = block_diag(
            &kronecker(&self.block0, &other.block1),
            &kronecker(&self.block1, &other.block0),
        );
        GradedMap {
            space,
            block0,
            block1,
        }
    }
}

fn block_diag(a: &Mat<NovikovScalar>, b: &Mat<NovikovScalar>) -> Mat<NovikovScalar> {
    Mat::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |i, j| {
        if i < a.rows() && j < a.cols() {
            a.at(i, j).clone()
        } else if i >= a.rows() && j >= a.cols() {
            b.at(i - a.rows(), j - a.cols()).clone()
        } else {
            NovikovScalar::zero()
        }
    })
}

fn kronecker(a: &Mat<NovikovScalar>, b: &Mat<NovikovScalar>) -> Mat<NovikovScalar> {
    Mat::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        let (ia, ib) = (i / b.rows(), i % b.rows());
        let (ja, jb) = (j / b.cols(), j % b.cols());
        a.at(ia, ja).clone() * b.at(ib, jb).clone()
    })
}

/// Floer grading convention for a non-degenerate fixed point:
/// degree 0 when sign det(Id − M) > 0, degree 1 otherwise.
pub fn fixed_point_degree(m: &QMat) -> Result<u8, GradedError> {
    assert_eq!(m.rows(), m.cols());
    let id: QMat = Mat::identity(m.rows());
    let det = det_q(&id.sub_mat(m));
    if det.is_zero() {
        Err(GradedError::DegenerateFixedPoint)
    } else if det > Q::zero() {
        Ok(0)
    } else {
        Ok(1)
    }
}

/// sign det(Id − df|_N) and χ(Σ) for one fixed component.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct FixedComponentData {
    pub normal_sign: i8,
    pub euler_char: i64,
}

impl FixedComponentData {
    pub fn new(normal_sign: i8, euler_char: i64) -> Self {
        assert!(normal_sign == 1 || normal_sign == -1);
        FixedComponentData {
            normal_sign,
            euler_char,
        }
    }
}

/// L(f) = Σ sign det(Id − df|_N)·χ(Σ) over fixed components.
pub fn signed_lefschetz(components: &[FixedComponentData]) -> i64 {
    components
        .iter()
        .map(|c| c.normal_sign as i64 * c.euler_char)
        .sum()
}

/// Outcome of the finite-order supertrace audit: m^k = Id was verified,
/// STr(m) is supported at q⁰ and its numeric absolute value is at most
/// dim V⁰ + dim V¹ within the stated tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct FiniteOrderAudit {
    pub is_order_k: bool,
    pub str_value: NovikovScalar,
    pub support_is_q0: bool,
    pub abs_bound_ok: bool,
    pub abs_value: f64,
    pub dim_bound: usize,
}

impl FiniteOrderAudit {
    pub fn passed(&self) -> bool {
        self.is_order_k && self.support_is_q0 && self.abs_bound_ok
    }
}

pub const ABS_BOUND_TOLERANCE: f64 = 1e-9;

/// Verifies m^k = Id exactly, then audits the supertrace against
/// the bound |a| ≤ dim from the eigenvalue argument.
pub fn finite_order_supertrace_audit(
    m: &GradedMap,
    k: u32,
) -> Result<FiniteOrderAudit, GradedError> {
    assert!(k >= 1);
    if !m.pow(k as u64).is_identity() {
        return Err(GradedError::NotFiniteOrder(k));
    }
    let str_value = m.supertrace();
    let support_is_q0 = str_value.support_is_q0();
    let abs_value = abs_numeric(&str_value.coeff_at_zero());
    let dim_bound = m.space().total_dim();
    let abs_bound_ok = support_is_q0 && abs_value <= dim_bound as f64 + ABS_BOUND_TOLERANCE;
    Ok(FiniteOrderAudit {
        is_order_k: true,
        str_value,
        support_is_q0,
        abs_bound_ok,
        abs_value,
        dim_bound,
    })
}

fn abs_numeric(c: &BaseFieldElement) -> f64 {
    match c {
        BaseFieldElement::Rat(q) => rational_to_f64(q).abs(),
        _ => c.abs_numeric(),
    }
}

/// JSON wire form: blocks as matrices of Novikov textual scalars.
#[derive(Serialize, Deserialize)]
pub struct GradedMapJson {
    pub dim0: usize,
    pub dim1: usize,
    pub block0: Vec<Vec<NovikovScalar>>,
    pub block1: Vec<Vec<NovikovScalar>>,
}

impl GradedMapJson {
    pub fn into_map(self) -> Result<GradedMap, GradedError> {
        let space = GradedSpace::new(self.dim0, self.dim1);
        GradedMap::new(
            space,
            Mat::from_rows(self.block0),
            Mat::from_rows(self.block1),
        )
    }

    pub fn from_map(m: &GradedMap) -> Self {
        GradedMapJson {
            dim0: m.space().dim0,
            dim1: m.space().dim1,
            block0: m.block0().to_rows(),
            block1: m.block1().to_rows(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::novikov::qi;

    fn ns(n: i64) -> NovikovScalar {
        NovikovScalar::from_int(n)
    }

    fn qmat(rows: Vec<Vec<i64>>) -> QMat {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| Q::from(num::BigInt::from(x))).collect())
                .collect(),
        )
    }

    #[test]
    fn supertrace_of_identity() {
        let id = GradedMap::identity(GradedSpace::new(2, 1));
        assert_eq!(id.supertrace(), ns(1));
    }

    #[test]
    fn twist_block_supertrace_matches_growth_law_at_k1() {
        // odd-degree block [[1+4k^2, 2k],[2k, 1]] at k=1, placed in V^1
        let space = GradedSpace::new(0, 2);
        let block1 = Mat::from_rows(vec![vec![ns(5), ns(2)], vec![ns(2), ns(1)]]);
        let m = GradedMap::new(space, Mat::from_rows(vec![]), block1).unwrap();
        assert_eq!(m.supertrace(), ns(-6));
    }

    #[test]
    fn swap_is_traceless() {
        let space = GradedSpace::new(2, 0);
        let block0 = Mat::from_rows(vec![vec![ns(0), ns(1)], vec![ns(1), ns(0)]]);
        let m = GradedMap::new(space, block0, Mat::from_rows(vec![])).unwrap();
        assert_eq!(m.supertrace(), NovikovScalar::zero_value());
    }

    #[test]
    fn fixed_point_degrees() {
        assert_eq!(fixed_point_degree(&qmat(vec![vec![0, 0], vec![0, 0]])).unwrap(), 0);
        let m = Mat::from_rows(vec![
            vec![qi(2), qi(0)],
            vec![qi(0), crate::novikov::qr(1, 2)],
        ]);
        assert_eq!(fixed_point_degree(&m).unwrap(), 1);
        assert_eq!(fixed_point_degree(&qmat(vec![vec![2, 0], vec![0, 2]])).unwrap(), 0);
        assert_eq!(
            fixed_point_degree(&qmat(vec![vec![1, 0], vec![0, 2]])),
            Err(GradedError::DegenerateFixedPoint)
        );
    }

    #[test]
    fn signed_lefschetz_examples() {
        assert_eq!(signed_lefschetz(&[]), 0);
        assert_eq!(signed_lefschetz(&[FixedComponentData::new(1, 1)]), 1);
        assert_eq!(
            signed_lefschetz(&[
                FixedComponentData::new(1, 2),
                FixedComponentData::new(-1, 2)
            ]),
            0
        );
    }

    #[test]
    fn audit_order2_swap() {
        let space = GradedSpace::new(2, 0);
        let block0 = Mat::from_rows(vec![vec![ns(0), ns(1)], vec![ns(1), ns(0)]]);
        let m = GradedMap::new(space, block0, Mat::from_rows(vec![])).unwrap();
        let report = finite_order_supertrace_audit(&m, 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.str_value, NovikovScalar::zero_value());
    }

    #[test]
    fn audit_zeta3_diagonal() {
        // diag(ζ3, ζ3²) on V⁰: STr = ζ3 + ζ3² = −1
        let z = NovikovScalar::constant(BaseFieldElement::zeta(3));
        let z2 = z.clone() * z.clone();
        let space = GradedSpace::new(2, 0);
        let block0 = Mat::from_rows(vec![
            vec![z, NovikovScalar::zero_value()],
            vec![NovikovScalar::zero_value(), z2],
        ]);
        let m = GradedMap::new(space, block0, Mat::from_rows(vec![])).unwrap();
        let report = finite_order_supertrace_audit(&m, 3).unwrap();
        assert!(report.passed());
        assert_eq!(report.str_value, ns(-1));
    }

    #[test]
    fn audit_rejects_infinite_order() {
        let space = GradedSpace::new(1, 0);
        let block0 = Mat::from_rows(vec![vec![ns(2)]]);
        let m = GradedMap::new(space, block0, Mat::from_rows(vec![])).unwrap();
        assert!(matches!(
            finite_order_supertrace_audit(&m, 4),
            Err(GradedError::NotFiniteOrder(4))
        ));
    }

    #[test]
    fn supertrace_additive_and_multiplicative() {
        let space = GradedSpace::new(1, 1);
        let a = GradedMap::new(
            space,
            Mat::from_rows(vec![vec![ns(3)]]),
            Mat::from_rows(vec![vec![ns(2)]]),
        )
        .unwrap();
        let b = GradedMap::new(
            space,
            Mat::from_rows(vec![vec![ns(5)]]),
            Mat::from_rows(vec![vec![ns(-1)]]),
        )
        .unwrap();
        assert_eq!(
            a.direct_sum(&b).supertrace(),
            a.supertrace() + b.supertrace()
        );
        assert_eq!(a.tensor(&b).supertrace(), a.supertrace() * b.supertrace());
    }
}
