//! Combinatorics of divisors in Grassmannians Gr(k,n) and of the linear
//! involutions on Gr(2p+1, 2q): positivity ranges for the degree d,
//! fixed-component dimension excess and parity, the eigenvalue-split
//! search, and the minimal-Chern grading shortcut.

use num::rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("divisor parameters must satisfy 1 ≤ k < n and d ≥ 1 (got k={k}, n={n}, d={d})")]
    InvalidDivisor { k: u32, n: u32, d: u32 },
    #[error("component index out of range: need 0 ≤ t ≤ 2p+1, t ≤ q+l, 2p+1−t ≤ q−l (got p={p}, q={q}, l={l}, t={t})")]
    InvalidComponent { p: i64, q: i64, l: i64, t: i64 },
    #[error("degenerate Grassmannian: need 2p+1 < 2q and q ≥ 2 (got p={p}, q={q})")]
    DegenerateGrassmannian { p: i64, q: i64 },
    #[error("grading shortcut requires the W⁺ and Fano ranges (k={k}, n={n}, d={d})")]
    GradingPrecondition { k: u32, n: u32, d: u32 },
}

/// A degree-d divisor in Gr(k,n); the divisor itself has
/// dim_ℂ X = k(n−k) − 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorSpec {
    pub k: u32,
    pub n: u32,
    pub d: u32,
}

impl DivisorSpec {
    pub fn new(k: u32, n: u32, d: u32) -> Result<Self, GrassmannError> {
        if k >= 1 && k < n && d >= 1 {
            Ok(DivisorSpec { k, n, d })
        } else {
            Err(GrassmannError::InvalidDivisor { k, n, d })
        }
    }

    pub fn dim_complex(&self) -> u64 {
        (self.k as u64) * ((self.n - self.k) as u64) - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityCheck {
    pub wplus: bool,
    pub fano: bool,
    pub dim_even: bool,
    /// The infinite-order argument additionally needs d ≥ 3; quadrics and
    /// hyperplane sections are flagged here rather than rejected.
    pub below_degree_three: bool,
}

/// wplus ⇔ d ≤ n or d ≥ k(n−k)+n−2; fano ⇔ d < n.
pub fn wplus_fano_check(spec: &DivisorSpec) -> PositivityCheck {
    let (k, n, d) = (spec.k as u64, spec.n as u64, spec.d as u64);
    let upper = k * (n - k) + n - 2;
    PositivityCheck {
        wplus: d <= n || d >= upper,
        fano: d < n,
        dim_even: spec.dim_complex() % 2 == 0,
        below_degree_three: d < 3,
    }
}

/// One fixed component of the involution on Gr(2p+1, 2q) with eigenvalue
/// split (q+l, q−l): the image of Gr(t, q+l) × Gr(2p+1−t, q−l).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionSpec {
    pub p: i64,
    pub q: i64,
    pub l: i64,
    pub t: i64,
}

impl InvolutionSpec {
    pub fn new(p: i64, q: i64, l: i64, t: i64) -> Result<Self, GrassmannError> {
        let s = InvolutionSpec { p, q, l, t };
        if p >= 0 && q >= 1 && l >= 0 && t >= 0 && t <= 2 * p + 1 && t <= q + l && 2 * p + 1 - t <= q - l
        {
            Ok(s)
        } else {
            Err(GrassmannError::InvalidComponent { p, q, l, t })
        }
    }

    pub fn component_dim(&self) -> i64 {
        let (p, q, l, t) = (self.p, self.q, self.l, self.t);
        t * (q + l - t) + (2 * p + 1 - t) * (q - l - (2 * p + 1 - t))
    }
}

/// Component dimension minus half the ambient dimension:
/// −½(1+2p−2t)(1+2p+2l−2t). Negative for every component is what the
/// unique-vanishing argument needs.
pub fn fixed_component_excess(inv: &InvolutionSpec) -> Ratio<i64> {
    let (p, l, t) = (inv.p, inv.l, inv.t);
    Ratio::new(-(1 + 2 * p - 2 * t) * (1 + 2 * p + 2 * l - 2 * t), 2)
}

/// Parity of the component dimension; equals q−1 mod 2 when l=0 and
/// q mod 2 when l=1.
pub fn component_dim_parity(inv: &InvolutionSpec) -> u8 {
    (inv.component_dim().rem_euclid(2)) as u8
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub t: i64,
    pub dim: i64,
    pub parity: u8,
    pub excess_num: i64,
    pub excess_den: i64,
    pub excess_nonnegative: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionSearchReport {
    pub p: i64,
    pub q: i64,
    /// Chosen eigenvalue split offset: 0 for q odd, 1 for q even.
    pub l: i64,
    pub violating_t: Option<i64>,
    /// Eigenspace sign choice avoiding the violating component, when any.
    pub sign_choice: String,
    pub all_components: Vec<ComponentReport>,
}

/// Case analysis on the parity of q: q odd uses the balanced split l=0
/// where every component has negative excess; q even uses l=1 where a
/// unique component (t = p+1) has nonnegative excess and the eigenspace
/// sign is chosen to avoid it.
pub fn involution_search(p: i64, q: i64) -> Result<InvolutionSearchReport, GrassmannError> {
    if !(p >= 0 && q >= 2 && 2 * p + 1 < 2 * q) {
        return Err(GrassmannError::DegenerateGrassmannian { p, q });
    }
    let l = if q % 2 == 1 { 0 } else { 1 };
    let mut all_components = Vec::new();
    let mut violating_t = None;
    for t in 0..=2 * p + 1 {
        let Ok(inv) = InvolutionSpec::new(p, q, l, t) else {
            continue;
        };
        let excess = fixed_component_excess(&inv);
        let nonneg = excess >= Ratio::new(0, 1);
        if nonneg {
            violating_t = Some(t);
        }
        all_components.push(ComponentReport {
            t,
            dim: inv.component_dim(),
            parity: component_dim_parity(&inv),
            excess_num: *excess.numer(),
            excess_den: *excess.denom(),
            excess_nonnegative: nonneg,
        });
    }
    let sign_choice = match violating_t {
        Some(t) => format!("pick the eigenspace avoiding the Gr({t}, {}) factor", q + l),
        None => "either eigenspace".to_string(),
    };
    Ok(InvolutionSearchReport { p, q, l, violating_t, sign_choice, all_components })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradingShortcut {
    pub grading_forces_x2_zero: bool,
    /// Minimal Chern number of the divisor, N = n − d.
    pub chern: u32,
    pub dim_complex: u64,
}

/// Grading shortcut: with N = n−d, the ring is forced to be ℂ[x]/x²
/// by grading alone iff dim_ℂ X is even and dim_ℂ X mod N ≠ 0.
pub fn minimal_chern_grading(spec: &DivisorSpec) -> Result<GradingShortcut, GrassmannError> {
    let check = wplus_fano_check(spec);
    if !(check.wplus && check.fano) {
        return Err(GrassmannError::GradingPrecondition { k: spec.k, n: spec.n, d: spec.d });
    }
    let chern = spec.n - spec.d;
    let dim = spec.dim_complex();
    let forces = dim % 2 == 0 && dim % (chern as u64) != 0;
    Ok(GradingShortcut { grading_forces_x2_zero: forces, chern, dim_complex: dim })
}
