//! Dehn-twist matrices on a middle-homology lattice, twist-word actions,
//! Lefschetz numbers on a full homology model and the quadratic growth
//! profile of the iterated-twist supertrace.

use crate::matrix::{inv_q, Mat};
use num::traits::{One, Zero};
use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type ZMat = Mat<BigInt>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("class has {got} coordinates, lattice has rank {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("pairing matrix must be square")]
    PairingNotSquare,
    #[error("pairing must be {0}symmetric for this fiber parity")]
    WrongSymmetry(&'static str),
    #[error("twist matrix is not invertible over the integers")]
    NotInvertible,
}

/// Middle-homology lattice with (−1)^s-symmetric pairing and
/// ε = (−1)^{s(s−1)/2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistLattice {
    s: u32,
    pairing: ZMat,
}

impl TwistLattice {
    pub fn new(s: u32, pairing: ZMat) -> Result<Self, LatticeError> {
        if pairing.rows() != pairing.cols() {
            return Err(LatticeError::PairingNotSquare);
        }
        let n = pairing.rows();
        let anti = s % 2 == 1;
        for i in 0..n {
            for j in 0..n {
                let a = pairing.at(i, j).clone();
                let b = pairing.at(j, i).clone();
                if anti {
                    if a != -b {
                        return Err(LatticeError::WrongSymmetry("anti"));
                    }
                } else if a != b {
                    return Err(LatticeError::WrongSymmetry(""));
                }
            }
        }
        Ok(TwistLattice { s, pairing })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn rank(&self) -> usize {
        self.pairing.rows()
    }

    pub fn pairing(&self) -> &ZMat {
        &self.pairing
    }

    /// ε = (−1)^{s(s−1)/2}
    pub fn epsilon(&self) -> i64 {
        let s = self.s as u64;
        let e = (s * s.saturating_sub(1) / 2) % 2;
        if e == 0 {
            1
        } else {
            -1
        }
    }

    /// Intersection number [a]·[b].
    pub fn pair(&self, a: &SphereClass, b: &SphereClass) -> Result<BigInt, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        let mut acc = BigInt::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                acc += &a.0[i] * self.pairing.at(i, j) * &b.0[j];
            }
        }
        Ok(acc)
    }

    fn check(&self, l: &SphereClass) -> Result<(), LatticeError> {
        if l.0.len() != self.rank() {
            Err(LatticeError::DimensionMismatch {
                got: l.0.len(),
                want: self.rank(),
            })
        } else {
            Ok(())
        }
    }
}

/// Integer coordinates of a sphere class [L] in the lattice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereClass(pub Vec<BigInt>);

impl SphereClass {
    pub fn from_i64(coords: &[i64]) -> Self {
        SphereClass(coords.iter().map(|&c| BigInt::from(c)).collect())
    }
}

/// Matrix of A ↦ A − ε(L·A)L in the lattice basis.
pub fn dehn_twist_matrix(lat: &TwistLattice, l: &SphereClass) -> Result<ZMat, LatticeError> {
    lat.check(l)?;
    let n = lat.rank();
    let eps = BigInt::from(lat.epsilon());
    // (L·e_j) = Σ_i L_i P_{ij}
    let l_dot: Vec<BigInt> = (0..n)
        .map(|j| {
            let mut acc = BigInt::zero();
            for i in 0..n {
                acc += &l.0[i] * lat.pairing().at(i, j);
            }
            acc
        })
        .collect();
    Ok(Mat::from_fn(n, n, |i, j| {
        let mut v = if i == j { BigInt::one() } else { BigInt::zero() };
        v -= &eps * &l_dot[j] * &l.0[i];
        v
    }))
}

fn zmat_to_q(m: &ZMat) -> Mat<BigRational> {
    m.map(|x| BigRational::from(x.clone()))
}

fn qmat_to_z(m: &Mat<BigRational>) -> Option<ZMat> {
    let mut out = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            let q = m.at(i, j);
            if !q.denom().is_one() {
                return None;
            }
            row.push(q.numer().clone());
        }
        out.push(row);
    }
    Some(Mat::from_rows(out))
}

/// Ordered product of integer powers of twist matrices. Negative powers
/// use the exact integral inverse of the twist matrix.
pub fn twist_word_action(
    lat: &TwistLattice,
    word: &[(SphereClass, i64)],
) -> Result<ZMat, LatticeError> {
    let mut acc = ZMat::identity(lat.rank());
    for (class, power) in word {
        let t = dehn_twist_matrix(lat, class)?;
        let factor = if *power >= 0 {
            t.pow(*power as u64)
        } else {
            let inv = inv_q(&zmat_to_q(&t)).ok_or(LatticeError::NotInvertible)?;
            let inv = qmat_to_z(&inv).ok_or(LatticeError::NotInvertible)?;
            inv.pow((-*power) as u64)
        };
        acc = acc.mul_mat(&factor);
    }
    Ok(acc)
}

/// Middle lattice plus the signed Euler number of off-middle homology,
/// where twists act by the identity.
#[derive(Clone, Debug)]
pub struct HomologyModel {
    pub middle: TwistLattice,
    pub off_middle_signed_euler: i64,
}

impl HomologyModel {
    /// L(word) = off-middle part + (−1)^s · Tr(action on the middle lattice).
    pub fn lefschetz_number(&self, word: &[(SphereClass, i64)]) -> Result<BigInt, LatticeError> {
        let action = twist_word_action(&self.middle, word)?;
        let sign = if self.middle.s() % 2 == 0 { 1 } else { -1 };
        Ok(BigInt::from(self.off_middle_signed_euler) + BigInt::from(sign) * action.trace())
    }
}

/// One row of the growth profile of τ₁^{2k} τ₂^{2k}.
#[derive(Clone, Debug, Serialize)]
pub struct GrowthRow {
    pub k: u64,
    pub lefschetz: String,
    pub middle_supertrace: String,
}

/// Exact Lefschetz numbers and middle supertraces of τ₁^{2k}τ₂^{2k} for
/// k = 1..k_max. The supertrace is computed on span{L₁, L₂}: the rank-2
/// sublattice with the Gram pairing of (L₁, L₂), which is basis-convention
/// independent.
pub fn growth_profile(
    model: &HomologyModel,
    l1: &SphereClass,
    l2: &SphereClass,
    k_max: u64,
) -> Result<Vec<(u64, BigInt, BigInt)>, LatticeError> {
    let span = span_lattice(&model.middle, l1, l2)?;
    let e1 = SphereClass::from_i64(&[1, 0]);
    let e2 = SphereClass::from_i64(&[0, 1]);
    let sign = if model.middle.s() % 2 == 0 { 1 } else { -1 };
    let mut rows = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let word = vec![(l1.clone(), 2 * k as i64), (l2.clone(), 2 * k as i64)];
        let lef = model.lefschetz_number(&word)?;
        let span_word = vec![(e1.clone(), 2 * k as i64), (e2.clone(), 2 * k as i64)];
        let action = twist_word_action(&span, &span_word)?;
        let str_middle = BigInt::from(sign) * action.trace();
        rows.push((k, lef, str_middle));
    }
    Ok(rows)
}

/// The abstract rank-2 lattice spanned by L₁, L₂ with their Gram pairing.
pub fn span_lattice(
    lat: &TwistLattice,
    l1: &SphereClass,
    l2: &SphereClass,
) -> Result<TwistLattice, LatticeError> {
    let p11 = lat.pair(l1, l1)?;
    let p12 = lat.pair(l1, l2)?;
    let p21 = lat.pair(l2, l1)?;
    let p22 = lat.pair(l2, l2)?;
    TwistLattice::new(
        lat.s(),
        Mat::from_rows(vec![vec![p11, p12], vec![p21, p22]]),
    )
}

/// Pairing preservation Tᵀ P T = P, the invariant every twist matrix satisfies.
pub fn preserves_pairing(lat: &TwistLattice, t: &ZMat) -> bool {
    t.transpose().mul_mat(lat.pairing()).mul_mat(t) == *lat.pairing()
}

/// JSON lattice description for the CLI and the certificate pipeline.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeSpecJson {
    pub s: u32,
    pub pairing: Vec<Vec<i64>>,
    pub classes: LatticeClassesJson,
    pub off_middle_signed_euler: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeClassesJson {
    #[serde(rename = "L1")]
    pub l1: Vec<i64>,
    #[serde(rename = "L2")]
    pub l2: Vec<i64>,
}

impl LatticeSpecJson {
    pub fn into_model(self) -> Result<(HomologyModel, SphereClass, SphereClass), LatticeError> {
        let pairing = Mat::from_rows(
            self.pairing
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        );
        let middle = TwistLattice::new(self.s, pairing)?;
        let l1 = SphereClass::from_i64(&self.classes.l1);
        let l2 = SphereClass::from_i64(&self.classes.l2);
        middle.check(&l1)?;
        middle.check(&l2)?;
        Ok((
            HomologyModel {
                middle,
                off_middle_signed_euler: self.off_middle_signed_euler,
            },
            l1,
            l2,
        ))
    }
}
