//! Monodromy of loops of symmetric matrices: fixed-step RK4 integration
//! of Ψ' = J₀A(s)Ψ, torus kernel dimensions via ker(Id − Ψ(1)), and the
//! crossing-parity identity along homotopies of loops.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum SpectralFlowError {
    #[error("A({s}) is not symmetric (asymmetry {asymmetry:.3e})")]
    NonSymmetricInput { s: f64, asymmetry: f64 },
    #[error("loop is not closed: |A(0) − A(1)| = {gap:.3e}")]
    LoopNotClosed { gap: f64 },
    #[error("odd matrix dimension {0}; loops live on ℝ^{{2n}}")]
    OddDimension(usize),
    #[error("endpoint τ={tau} has det(Id−Ψ(1)) = {det:.3e}, too close to zero")]
    DegenerateEndpoint { tau: f64, det: f64 },
    #[error("homotopy endpoints have mismatched dimensions {0} and {1}")]
    DimensionMismatch(usize, usize),
}

/// J₀ = [[0, −I],[I, 0]], the standard complex structure; J₀² = −Id.
pub fn j0(dim: usize) -> DMatrix<f64> {
    assert!(dim % 2 == 0);
    let n = dim / 2;
    DMatrix::from_fn(dim, dim, |i, j| {
        if i < n && j == i + n {
            -1.0
        } else if i >= n && j == i - n {
            1.0
        } else {
            0.0
        }
    })
}

/// Samplers for a loop A: S¹ → symmetric 2n×2n matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum LoopSampler {
    /// A(s) ≡ matrix.
    Constant { matrix: Vec<Vec<f64>> },
    /// A(s) = c₀ + Σ_k cos(2πks)·cos_terms[k−1] + sin(2πks)·sin_terms[k−1].
    Fourier {
        constant: Vec<Vec<f64>>,
        cos_terms: Vec<Vec<Vec<f64>>>,
        sin_terms: Vec<Vec<Vec<f64>>>,
    },
    /// A reconstructed from a prescribed segmented path
    /// Ψ = e^{φ(u)J₀S_i}·…, φ(u) = u − sin(2πu)/(2π), so that
    /// A(s) = −J₀ Ψ'(s) Ψ(s)⁻¹ = m·φ'(u)·S_i is symmetric and the loop
    /// closes with A(0) = A(1) = 0.
    FromPsi { segments: Vec<Vec<Vec<f64>>> },
}

fn to_dmatrix(rows: &[Vec<f64>]) -> DMatrix<f64> {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    DMatrix::from_fn(r, c, |i, j| rows[i][j])
}

pub fn from_dmatrix(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

#[derive(Clone, Debug)]
pub struct MonodromyLoop {
    dim: usize,
    sampler: LoopSampler,
}

fn phi_prime(u: f64) -> f64 {
    1.0 - (std::f64::consts::TAU * u).cos()
}

impl MonodromyLoop {
    /// Validates symmetry on a sample grid and loop closure.
    pub fn new(sampler: LoopSampler) -> Result<Self, SpectralFlowError> {
        let dim = match &sampler {
            LoopSampler::Constant { matrix } => matrix.len(),
            LoopSampler::Fourier { constant, .. } => constant.len(),
            LoopSampler::FromPsi { segments } => segments.first().map_or(0, |s| s.len()),
        };
        if dim % 2 != 0 || dim == 0 {
            return Err(SpectralFlowError::OddDimension(dim));
        }
        let lp = MonodromyLoop { dim, sampler };
        for i in 0..=64 {
            let s = i as f64 / 64.0;
            let a = lp.a(s);
            let asym = (&a - a.transpose()).norm();
            if asym > SYMMETRY_TOL {
                return Err(SpectralFlowError::NonSymmetricInput { s, asymmetry: asym });
            }
        }
        let gap = (lp.a(0.0) - lp.a(1.0)).norm();
        if gap > SYMMETRY_TOL {
            return Err(SpectralFlowError::LoopNotClosed { gap });
        }
        Ok(lp)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a(&self, s: f64) -> DMatrix<f64> {
        match &self.sampler {
            LoopSampler::Constant { matrix } => to_dmatrix(matrix),
            LoopSampler::Fourier { constant, cos_terms, sin_terms } => {
                let mut out = to_dmatrix(constant);
                for (k, m) in cos_terms.iter().enumerate() {
                    out += to_dmatrix(m) * (std::f64::consts::TAU * (k + 1) as f64 * s).cos();
                }
                for (k, m) in sin_terms.iter().enumerate() {
                    out += to_dmatrix(m) * (std::f64::consts::TAU * (k + 1) as f64 * s).sin();
                }
                out
            }
            LoopSampler::FromPsi { segments } => {
                let m = segments.len() as f64;
                let scaled = (s * m).min(m - 1e-12).max(0.0);
                let i = scaled.floor() as usize;
                let u = scaled - i as f64;
                to_dmatrix(&segments[i]) * (m * phi_prime(u))
            }
        }
    }

    /// Exact monodromy e^{J₀S_k}···e^{J₀S_1} for segmented paths.
    pub fn closed_form_monodromy(&self) -> Option<DMatrix<f64>> {
        match &self.sampler {
            LoopSampler::FromPsi { segments } => {
                let j = j0(self.dim);
                let mut acc = DMatrix::identity(self.dim, self.dim);
                for s in segments {
                    acc = (&j * to_dmatrix(s)).exp() * acc;
                }
                Some(acc)
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MonodromyResult {
    pub psi1: DMatrix<f64>,
    /// ‖Ψ(1)ᵀJ₀Ψ(1) − J₀‖, reported because the flow should be symplectic.
    pub symplectic_drift: f64,
}

/// Fourth-order Runge-Kutta integration of Ψ' = J₀A(s)Ψ, Ψ(0) = Id.
pub fn monodromy(lp: &MonodromyLoop, steps: usize) -> MonodromyResult {
    assert!(steps >= 100, "need at least 100 integration steps");
    let dim = lp.dim();
    let j = j0(dim);
    let f = |s: f64| &j * lp.a(s);
    let h = 1.0 / steps as f64;
    let mut psi = DMatrix::<f64>::identity(dim, dim);
    for i in 0..steps {
        let s = i as f64 * h;
        let k1 = f(s) * &psi;
        let k2 = f(s + h / 2.0) * (&psi + &k1 * (h / 2.0));
        let k3 = f(s + h / 2.0) * (&psi + &k2 * (h / 2.0));
        let k4 = f(s + h) * (&psi + &k3 * h);
        psi += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    let drift = (psi.transpose() * &j * &psi - &j).norm();
    MonodromyResult { psi1: psi, symplectic_drift: drift }
}

/// dim ker(Id − Ψ(1)) by counting singular values below
/// tol·max(1, σ_max).
pub fn kernel_dim_torus(lp: &MonodromyLoop, steps: usize, tol: f64) -> usize {
    let psi1 = monodromy(lp, steps).psi1;
    nullity(&(DMatrix::identity(lp.dim(), lp.dim()) - psi1), tol)
}

pub fn nullity(m: &DMatrix<f64>, tol: f64) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let cutoff = tol * smax.max(1.0);
    sv.iter().filter(|&&s| s < cutoff).count()
}

pub const DEFAULT_KERNEL_TOL: f64 = 1e-6;

/// Linear interpolation A_τ = (1−τ)A₀ + τA₁ between two loops.
pub struct HomotopyOfLoops {
    pub a0: MonodromyLoop,
    pub a1: MonodromyLoop,
}

impl HomotopyOfLoops {
    pub fn new(a0: MonodromyLoop, a1: MonodromyLoop) -> Result<Self, SpectralFlowError> {
        if a0.dim() != a1.dim() {
            return Err(SpectralFlowError::DimensionMismatch(a0.dim(), a1.dim()));
        }
        Ok(HomotopyOfLoops { a0, a1 })
    }

    fn det_at(&self, tau: f64, steps: usize) -> f64 {
        let dim = self.a0.dim();
        let j = j0(dim);
        let f = |s: f64| &j * ((self.a0.a(s) * (1.0 - tau)) + (self.a1.a(s) * tau));
        let h = 1.0 / steps as f64;
        let mut psi = DMatrix::<f64>::identity(dim, dim);
        for i in 0..steps {
            let s = i as f64 * h;
            let k1 = f(s) * &psi;
            let k2 = f(s + h / 2.0) * (&psi + &k1 * (h / 2.0));
            let k3 = f(s + h / 2.0) * (&psi + &k2 * (h / 2.0));
            let k4 = f(s + h) * (&psi + &k3 * h);
            psi += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        }
        (DMatrix::identity(dim, dim) - psi).determinant()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossingReport {
    pub parity: i8,
    pub det_sign_product: i8,
    pub agree: bool,
    /// Bisection-localized τ values where det(Id−Ψ_τ(1)) changes sign.
    pub crossings: Vec<f64>,
    pub tau_samples: usize,
}

pub const ENDPOINT_DET_TOL: f64 = 1e-9;

/// Counts sign changes of det(Id−Ψ_τ(1)) on a τ grid (refining once if
/// the parity disagrees with the endpoint product) and compares the
/// resulting parity with sign det(Id−Ψ₀(1))·sign det(Id−Ψ₁(1)).
pub fn crossing_parity_check(
    h: &HomotopyOfLoops,
    tau_samples: usize,
    steps: usize,
) -> Result<CrossingReport, SpectralFlowError> {
    assert!(tau_samples >= 2);
    let d0 = h.det_at(0.0, steps);
    let d1 = h.det_at(1.0, steps);
    for (tau, d) in [(0.0, d0), (1.0, d1)] {
        if d.abs() < ENDPOINT_DET_TOL {
            return Err(SpectralFlowError::DegenerateEndpoint { tau, det: d });
        }
    }
    let det_sign_product = (d0.signum() * d1.signum()) as i8;

    let mut samples = tau_samples;
    loop {
        let dets: Vec<(f64, f64)> = (0..=samples)
            .map(|i| {
                let tau = i as f64 / samples as f64;
                (tau, h.det_at(tau, steps))
            })
            .collect();
        let mut crossings = Vec::new();
        for w in dets.windows(2) {
            let (t_lo, d_lo) = w[0];
            let (t_hi, d_hi) = w[1];
            if d_lo.signum() != d_hi.signum() {
                crossings.push(bisect_crossing(h, t_lo, d_lo, t_hi, steps));
            }
        }
        let parity: i8 = if crossings.len() % 2 == 0 { 1 } else { -1 };
        let agree = parity == det_sign_product;
        // sign changes can only be undercounted in pairs, so a refined
        // grid either confirms agreement or the report stands
        if agree || samples >= 8 * tau_samples {
            return Ok(CrossingReport {
                parity,
                det_sign_product,
                agree,
                crossings,
                tau_samples: samples,
            });
        }
        samples *= 2;
    }
}

fn bisect_crossing(h: &HomotopyOfLoops, mut lo: f64, d_lo: f64, mut hi: f64, steps: usize) -> f64 {
    let mut sign_lo = d_lo.signum();
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        let d_mid = h.det_at(mid, steps);
        if d_mid == 0.0 {
            return mid;
        }
        if d_mid.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        sign_lo = h.det_at(lo, steps).signum();
    }
    0.5 * (lo + hi)
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialSummary {
    pub trials: usize,
    pub agreements: usize,
    pub seed: u64,
    pub dims_used: Vec<usize>,
}

/// Randomized crossing-parity trials on constant-matrix homotopies with
/// 2n ≤ max_dim, deterministic in the seed. Endpoints too close to a
/// kernel crossing are resampled.
pub fn randomized_crossing_trials(
    trials: usize,
    seed: u64,
    max_dim: usize,
    tau_samples: usize,
    steps: usize,
) -> TrialSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreements = 0;
    let mut dims_used = Vec::new();
    let dims: Vec<usize> = (1..=max_dim / 2).map(|n| 2 * n).collect();
    for t in 0..trials {
        let dim = dims[t % dims.len()];
        dims_used.push(dim);
        let report = loop {
            let a0 = random_constant_loop(&mut rng, dim);
            let a1 = random_constant_loop(&mut rng, dim);
            let h = HomotopyOfLoops::new(a0, a1).expect("matching dimensions");
            match crossing_parity_check(&h, tau_samples, steps) {
                Ok(r) => break r,
                Err(SpectralFlowError::DegenerateEndpoint { .. }) => continue,
                Err(e) => panic!("unexpected trial failure: {e}"),
            }
        };
        if report.agree {
            agreements += 1;
        }
    }
    TrialSummary { trials, agreements, seed, dims_used }
}

pub fn random_constant_loop(rng: &mut ChaCha8Rng, dim: usize) -> MonodromyLoop {
    let raw: Vec<Vec<f64>> = (0..dim)
        .map(|_| (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect())
        .collect();
    let sym: Vec<Vec<f64>> = (0..dim)
        .map(|i| (0..dim).map(|j| 0.5 * (raw[i][j] + raw[j][i])).collect())
        .collect();
    MonodromyLoop::new(LoopSampler::Constant { matrix: sym }).expect("symmetric constant loop")
}
