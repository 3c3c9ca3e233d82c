//! Quantitative metrics: detection probability, correction capability,
//! fidelity, trace distance, and the correction-time scaling model.
//!
//! Two distance notions coexist on purpose. [`trace_distance`] is the true
//! trace distance `½‖ρ−σ‖₁` computed from eigenvalues; for pure states it
//! satisfies `D = √(1−F)`. [`paper_df_relation`] is the published linear
//! relation `D = ½(1−F)`, kept under its own name for table and figure
//! replication and never substituted for the real metric.

use num_complex::Complex;
use thiserror::Error;

use crate::cmat::{
    hermitian_eigenvalues, matmul, matrix_sqrt_psd, trace_norm_hermitian, CmatError, DensityMatrix,
    StateVector,
};
use crate::Real;

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("argument out of domain: {0}")]
    DomainError(String),
    #[error("least-squares fit is degenerate: {0}")]
    DegenerateFit(String),
    #[error(transparent)]
    Cmat(#[from] CmatError),
}

/// `P_d = 1 − (1−p_e)^N`: probability that at least one of `N` qubits
/// errs.
pub fn detection_probability(p_e: f64, n: usize) -> Result<f64, MetricsError> {
    if !(0.0..=1.0).contains(&p_e) {
        return Err(MetricsError::DomainError(format!(
            "p_e = {p_e} outside [0, 1]"
        )));
    }
    if n < 1 {
        return Err(MetricsError::DomainError("N must be at least 1".into()));
    }
    Ok(1.0 - (1.0 - p_e).powi(n as i32))
}

/// Inputs of [`correction_capability`]: `N`, the error weights `γ_k` for
/// `k = 1..P`, and the total error probability.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionCapabilityInput {
    pub n: usize,
    pub gamma: Vec<f64>,
    pub gamma_total: f64,
}

/// `P_c = 1 − (1/N)·Σ_{k=1..P} γ_k/γ_total`, exactly as printed (the 1/N
/// prefactor included).
pub fn correction_capability(input: &CorrectionCapabilityInput) -> Result<f64, MetricsError> {
    if input.gamma_total <= 0.0 || !input.gamma_total.is_finite() {
        return Err(MetricsError::DomainError(format!(
            "gamma_total = {} must be positive",
            input.gamma_total
        )));
    }
    if input.n == 0 {
        return Err(MetricsError::DomainError("N must be at least 1".into()));
    }
    if input.gamma.iter().any(|&g| g < 0.0 || !g.is_finite()) {
        return Err(MetricsError::DomainError(
            "every gamma_k must be nonnegative".into(),
        ));
    }
    let sum: f64 = input.gamma.iter().map(|g| g / input.gamma_total).sum();
    Ok(1.0 - sum / input.n as f64)
}

/// Pure-state fidelity `|⟨ψ|φ⟩|²`.
pub fn fidelity_pure<T: Real>(
    psi: &StateVector<T>,
    phi: &StateVector<T>,
) -> Result<T, MetricsError> {
    Ok(psi.inner(phi)?.norm_sqr())
}

/// Density-matrix fidelity `‖√ρ √σ‖₁²`, evaluated through the Hermitian
/// eigenvalues of `√σ ρ √σ` (the singular values of `√ρ√σ` squared).
pub fn fidelity_density<T: Real>(
    rho: &DensityMatrix<T>,
    sigma: &DensityMatrix<T>,
) -> Result<T, MetricsError> {
    if rho.dim() != sigma.dim() {
        return Err(MetricsError::Cmat(CmatError::DimensionMismatch(format!(
            "{} vs {}",
            rho.dim(),
            sigma.dim()
        ))));
    }
    let root_sigma = matrix_sqrt_psd(sigma.matrix())?;
    let sandwich = matmul(&matmul(&root_sigma, rho.matrix())?, &root_sigma)?;
    let eigs = hermitian_eigenvalues(&sandwich)?;
    let root_sum = eigs
        .into_iter()
        .map(|l| l.max(T::zero()).sqrt())
        .fold(T::zero(), |a, b| a + b);
    Ok(root_sum * root_sum)
}

/// Trace distance `½‖ρ−σ‖₁`.
pub fn trace_distance<T: Real>(
    rho: &DensityMatrix<T>,
    sigma: &DensityMatrix<T>,
) -> Result<T, MetricsError> {
    let diff = rho.sub(sigma)?;
    Ok(trace_norm_hermitian(&diff)? * T::of(0.5))
}

/// The published linear distance–fidelity relation `D = ½(1−F)`. This is
/// not the pure-state identity `D = √(1−F)`; it exists for replicating the
/// published numbers only.
pub fn paper_df_relation(fidelity: f64) -> Result<f64, MetricsError> {
    if !(0.0..=1.0).contains(&fidelity) {
        return Err(MetricsError::DomainError(format!(
            "fidelity = {fidelity} outside [0, 1]"
        )));
    }
    Ok(0.5 * (1.0 - fidelity))
}

/// Fitted correction-time model `T_corr ≈ c · N · log2(M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityModel {
    pub c: f64,
    pub r_squared: f64,
}

impl ComplexityModel {
    pub fn predict(&self, n_logical: usize, m_physical: usize) -> f64 {
        self.c * n_logical as f64 * (m_physical as f64).log2()
    }
}

/// Least-squares fit of `time ≈ c · N · log2(M)` over
/// `(N, M, measured_time)` samples.
pub fn fit_tcorr(samples: &[(usize, usize, f64)]) -> Result<ComplexityModel, MetricsError> {
    if samples.len() < 2 {
        return Err(MetricsError::DegenerateFit(format!(
            "need at least 2 samples, got {}",
            samples.len()
        )));
    }
    for &(n, m, t) in samples {
        if n == 0 || m < 2 {
            return Err(MetricsError::DomainError(format!(
                "sample (N={n}, M={m}) needs N ≥ 1 and M ≥ 2"
            )));
        }
        if !t.is_finite() {
            return Err(MetricsError::DomainError("non-finite time sample".into()));
        }
    }
    let mut uu = 0.0;
    let mut ut = 0.0;
    for &(n, m, t) in samples {
        let u = n as f64 * (m as f64).log2();
        uu += u * u;
        ut += u * t;
    }
    if uu <= 0.0 {
        return Err(MetricsError::DegenerateFit("all predictors are zero".into()));
    }
    let c = ut / uu;

    let mean_t: f64 = samples.iter().map(|&(_, _, t)| t).sum::<f64>() / samples.len() as f64;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for &(n, m, t) in samples {
        let u = n as f64 * (m as f64).log2();
        ss_res += (t - c * u) * (t - c * u);
        ss_tot += (t - mean_t) * (t - mean_t);
    }
    let r_squared = if ss_tot > 0.0 {
        1.0 - ss_res / ss_tot
    } else if ss_res <= f64::EPSILON {
        1.0
    } else {
        0.0
    };
    Ok(ComplexityModel { c, r_squared })
}

/// Mixed-state helper used by tests and the bench layer: `ρ = |ψ⟩⟨ψ|`.
pub fn pure_density<T: Real>(psi: &StateVector<T>) -> Result<DensityMatrix<T>, MetricsError> {
    Ok(DensityMatrix::from_pure(psi)?)
}

/// Complex shorthand used by a few call sites.
pub fn c64<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::of(re), T::of(im))
}
