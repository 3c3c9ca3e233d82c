//! Small-scale dense complex linear algebra: matrices, state vectors,
//! density matrices, and a Jacobi eigensolver for Hermitian inputs.
//!
//! This is the exact oracle the rest of the crate checks itself against.
//! Everything here is desk scale by design: density matrices are capped at
//! dimension 256 (8 qubits) and state vectors at 13 qubits; larger systems
//! must use the symplectic engine in [`crate::pauli`] / [`crate::decode`].
//!
//! Eigenvalues are computed by cyclic Jacobi rotations on the real
//! symmetric 2d×2d embedding `H = A + iB ↦ [[A, −B], [B, A]]`, in which
//! every eigenvalue of `H` appears twice. Every norm needed by the metrics
//! layer is a norm of a Hermitian matrix, so no general SVD is required.

use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex;
use thiserror::Error;

use crate::Real;

/// Density-matrix dimension cap (8 qubits).
pub const MAX_DENSITY_DIM: usize = 256;
/// State-vector qubit cap (2^13 amplitudes).
pub const MAX_STATE_QUBITS: usize = 13;

const NORM_DRIFT_TOL: f64 = 1e-10;
const HERM_INPUT_TOL: f64 = 1e-8;
const DM_VALID_TOL: f64 = 1e-10;
const PSD_FLOOR: f64 = -1e-9;
const JACOBI_OFF_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

static RENORMALIZATION_EVENTS: AtomicU64 = AtomicU64::new(0);

/// Number of times an operation drifted past the 1e-10 normalization
/// tolerance and was renormalized. Drift is never silently accepted.
pub fn renormalization_events() -> u64 {
    RENORMALIZATION_EVENTS.load(Ordering::Relaxed)
}

#[derive(Debug, Error, PartialEq)]
pub enum CmatError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian within tolerance {tol:e} (max deviation {dev:e})")]
    NotHermitian { dev: f64, tol: f64 },
    #[error("dimension {dim} exceeds cap {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("matrix is not positive semidefinite (eigenvalue {min_eig:e})")]
    NotPSD { min_eig: f64 },
    #[error("vector has zero norm")]
    ZeroNorm,
    #[error("state vector norm {norm} is not 1 within 1e-10")]
    NotNormalized { norm: f64 },
    #[error("non-finite entry")]
    NonFinite,
    #[error("Jacobi sweep limit reached before convergence")]
    ConvergenceFailed,
    #[error("qubit index {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self, CmatError> {
        if data.len() != rows * cols {
            return Err(CmatError::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(CmatError::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex<T>) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, CmatError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CmatError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>,
    ) -> Result<Self, CmatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CmatError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex<T> {
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows.min(self.cols) {
            t = t + self.get(i, i);
        }
        t
    }

    pub fn max_abs_entry(&self) -> T {
        self.data
            .iter()
            .map(|c| c.norm())
            .fold(T::zero(), |a, b| a.max(b))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|c| c.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Result<Vec<Complex<T>>, CmatError> {
        if v.len() != self.cols {
            return Err(CmatError::DimensionMismatch(format!(
                "matrix cols {} vs vector len {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.rows];
        for r in 0..self.rows {
            let mut acc = Complex::new(T::zero(), T::zero());
            for c in 0..self.cols {
                acc = acc + self.get(r, c) * v[c];
            }
            out[r] = acc;
        }
        Ok(out)
    }

    /// Max deviation from Hermitian symmetry, `max |A − A†|`.
    pub fn hermiticity_deviation(&self) -> T {
        let mut dev = T::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let d = (self.get(r, c) - self.get(c, r).conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }
}

pub fn matmul<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>, CmatError> {
    if a.cols != b.rows {
        return Err(CmatError::DimensionMismatch(format!(
            "{}x{} * {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = ComplexMatrix::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let ark = a.get(r, k);
            if ark.re.is_zero() && ark.im.is_zero() {
                continue;
            }
            for c in 0..b.cols {
                let v = out.get(r, c) + ark * b.get(k, c);
                out.set(r, c, v);
            }
        }
    }
    Ok(out)
}

pub fn dagger<T: Real>(a: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.dagger()
}

/// Kronecker product `A ⊗ B`.
pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let mut out = ComplexMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let v = a.get(ar, ac);
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out.set(ar * b.rows + br, ac * b.cols + bc, v * b.get(br, bc));
                }
            }
        }
    }
    out
}

pub fn sigma_x<T: Real>() -> ComplexMatrix<T> {
    let z = Complex::new(T::zero(), T::zero());
    let o = Complex::new(T::one(), T::zero());
    ComplexMatrix::from_rows(2, 2, vec![z, o, o, z]).unwrap()
}

pub fn sigma_y<T: Real>() -> ComplexMatrix<T> {
    let z = Complex::new(T::zero(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    ComplexMatrix::from_rows(2, 2, vec![z, -i, i, z]).unwrap()
}

pub fn sigma_z<T: Real>() -> ComplexMatrix<T> {
    let z = Complex::new(T::zero(), T::zero());
    let o = Complex::new(T::one(), T::zero());
    ComplexMatrix::from_rows(2, 2, vec![o, z, z, -o]).unwrap()
}

// ---------------------------------------------------------------------------
// Eigensolver
// ---------------------------------------------------------------------------

/// Cyclic Jacobi on a real symmetric matrix stored row-major in `a`.
/// Returns eigenvalues (unsorted) and, if requested, the eigenvector matrix
/// with eigenvectors as columns.
fn jacobi_symmetric<T: Real>(
    a: &mut [T],
    n: usize,
    want_vectors: bool,
) -> Result<(Vec<T>, Option<Vec<T>>), CmatError> {
    let idx = |r: usize, c: usize| r * n + c;
    let mut v = if want_vectors {
        let mut v = vec![T::zero(); n * n];
        for i in 0..n {
            v[idx(i, i)] = T::one();
        }
        Some(v)
    } else {
        None
    };

    let frob = a
        .iter()
        .map(|&x| x * x)
        .fold(T::zero(), |s, x| s + x)
        .sqrt();
    // Pinned absolute floor, scaled up only when epsilon of the scalar type
    // makes the floor unreachable (f32 instantiations).
    let tol = T::of(JACOBI_OFF_TOL).max(T::epsilon() * frob * T::from_usize(n).unwrap());

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off_sq = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq = off_sq + a[idx(p, q)] * a[idx(p, q)];
            }
        }
        if (off_sq + off_sq).sqrt() <= tol {
            let eigs = (0..n).map(|i| a[idx(i, i)]).collect();
            return Ok((eigs, v));
        }

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq.abs() <= T::min_positive_value() {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = (aqq - app) / (apq + apq);
                let t = {
                    let denom = theta.abs() + (theta * theta + T::one()).sqrt();
                    if theta < T::zero() {
                        -denom.recip()
                    } else {
                        denom.recip()
                    }
                };
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;
                let tau = s / (T::one() + c);

                a[idx(p, p)] = app - t * apq;
                a[idx(q, q)] = aqq + t * apq;
                a[idx(p, q)] = T::zero();
                a[idx(q, p)] = T::zero();
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[idx(r, p)];
                    let arq = a[idx(r, q)];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[idx(r, p)] = new_rp;
                    a[idx(p, r)] = new_rp;
                    a[idx(r, q)] = new_rq;
                    a[idx(q, r)] = new_rq;
                }
                if let Some(v) = v.as_mut() {
                    for r in 0..n {
                        let vrp = v[idx(r, p)];
                        let vrq = v[idx(r, q)];
                        v[idx(r, p)] = c * vrp - s * vrq;
                        v[idx(r, q)] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }
    Err(CmatError::ConvergenceFailed)
}

/// Real symmetric 2d×2d embedding of a Hermitian matrix `H = A + iB`.
fn embed_hermitian<T: Real>(h: &ComplexMatrix<T>) -> Vec<T> {
    let d = h.rows();
    let n = 2 * d;
    let mut m = vec![T::zero(); n * n];
    for r in 0..d {
        for c in 0..d {
            let e = h.get(r, c);
            m[r * n + c] = e.re;
            m[(r + d) * n + (c + d)] = e.re;
            m[r * n + (c + d)] = -e.im;
            m[(r + d) * n + c] = e.im;
        }
    }
    m
}

fn check_hermitian_input<T: Real>(h: &ComplexMatrix<T>) -> Result<(), CmatError> {
    if h.rows() != h.cols() {
        return Err(CmatError::DimensionMismatch(format!(
            "{}x{} is not square",
            h.rows(),
            h.cols()
        )));
    }
    if h.rows() > MAX_DENSITY_DIM {
        return Err(CmatError::TooLarge {
            dim: h.rows(),
            cap: MAX_DENSITY_DIM,
        });
    }
    let dev = h.hermiticity_deviation();
    if dev > T::of(HERM_INPUT_TOL) {
        return Err(CmatError::NotHermitian {
            dev: dev.to_f64().unwrap_or(f64::NAN),
            tol: HERM_INPUT_TOL,
        });
    }
    Ok(())
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// In the 2d×2d real embedding every eigenvalue appears exactly twice, so
/// after sorting, the even-index entries enumerate the spectrum of `H`.
pub fn hermitian_eigenvalues<T: Real>(h: &ComplexMatrix<T>) -> Result<Vec<T>, CmatError> {
    check_hermitian_input(h)?;
    let d = h.rows();
    let mut m = embed_hermitian(h);
    let (mut eigs, _) = jacobi_symmetric(&mut m, 2 * d, false)?;
    eigs.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    Ok((0..d).map(|i| eigs[2 * i]).collect())
}

/// Trace norm `Σ |λ_i|` of a Hermitian matrix.
pub fn trace_norm_hermitian<T: Real>(h: &ComplexMatrix<T>) -> Result<T, CmatError> {
    let eigs = hermitian_eigenvalues(h)?;
    Ok(eigs.into_iter().map(|l| l.abs()).fold(T::zero(), |a, b| a + b))
}

/// Principal square root of a PSD Hermitian matrix, reconstructed from the
/// eigensystem of the real embedding. Eigenvalues in `[−1e−9, 0]` are
/// clamped to zero; anything below that is rejected as not PSD.
pub fn matrix_sqrt_psd<T: Real>(a: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>, CmatError> {
    check_hermitian_input(a)?;
    let d = a.rows();
    let n = 2 * d;
    let mut m = embed_hermitian(a);
    let (eigs, vectors) = jacobi_symmetric(&mut m, n, true)?;
    let w = vectors.expect("vectors requested");

    let floor = T::of(PSD_FLOOR);
    let mut roots = vec![T::zero(); n];
    for (i, &l) in eigs.iter().enumerate() {
        if l < floor {
            return Err(CmatError::NotPSD {
                min_eig: l.to_f64().unwrap_or(f64::NAN),
            });
        }
        roots[i] = l.max(T::zero()).sqrt();
    }

    // S = W √Λ Wᵀ, then read the complex matrix back out of the block
    // structure, symmetrizing to shed rounding noise.
    let mut s = vec![T::zero(); n * n];
    for r in 0..n {
        for c in 0..=r {
            let mut acc = T::zero();
            for k in 0..n {
                acc = acc + w[r * n + k] * roots[k] * w[c * n + k];
            }
            s[r * n + c] = acc;
            s[c * n + r] = acc;
        }
    }
    let half = T::of(0.5);
    let mut out = ComplexMatrix::zeros(d, d);
    for r in 0..d {
        for c in 0..d {
            let re = (s[r * n + c] + s[(r + d) * n + (c + d)]) * half;
            let im = (s[(r + d) * n + c] - s[r * n + (c + d)]) * half;
            out.set(r, c, Complex::new(re, im));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// State vectors and density matrices
// ---------------------------------------------------------------------------

/// Normalized pure state on `n_qubits` qubits, amplitudes in
/// computational-basis order with qubit 0 as the least significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    n_qubits: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    pub fn new(n_qubits: usize, amps: Vec<Complex<T>>) -> Result<Self, CmatError> {
        if n_qubits > MAX_STATE_QUBITS {
            return Err(CmatError::TooLarge {
                dim: n_qubits,
                cap: MAX_STATE_QUBITS,
            });
        }
        if amps.len() != 1 << n_qubits {
            return Err(CmatError::DimensionMismatch(format!(
                "{n_qubits} qubits need {} amplitudes, got {}",
                1usize << n_qubits,
                amps.len()
            )));
        }
        if amps.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(CmatError::NonFinite);
        }
        let sv = Self { n_qubits, amps };
        let norm = sv.norm();
        if (norm - T::one()).abs() > T::of(NORM_DRIFT_TOL) {
            return Err(CmatError::NotNormalized {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(sv)
    }

    /// Builds a state from arbitrary amplitudes, normalizing them.
    pub fn from_unnormalized(n_qubits: usize, amps: Vec<Complex<T>>) -> Result<Self, CmatError> {
        if n_qubits > MAX_STATE_QUBITS {
            return Err(CmatError::TooLarge {
                dim: n_qubits,
                cap: MAX_STATE_QUBITS,
            });
        }
        if amps.len() != 1 << n_qubits {
            return Err(CmatError::DimensionMismatch(format!(
                "{n_qubits} qubits need {} amplitudes, got {}",
                1usize << n_qubits,
                amps.len()
            )));
        }
        let norm_sq = amps.iter().map(|c| c.norm_sqr()).fold(T::zero(), |a, b| a + b);
        if !norm_sq.is_finite() || norm_sq <= T::min_positive_value() {
            return Err(CmatError::ZeroNorm);
        }
        let inv = norm_sq.sqrt().recip();
        let amps = amps.iter().map(|&c| c * inv).collect();
        Ok(Self { n_qubits, amps })
    }

    pub fn basis(n_qubits: usize, index: usize) -> Result<Self, CmatError> {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); 1 << n_qubits];
        amps[index] = Complex::new(T::one(), T::zero());
        Self::new(n_qubits, amps)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm(&self) -> T {
        self.amps
            .iter()
            .map(|c| c.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Inner product `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>, CmatError> {
        if self.n_qubits != other.n_qubits {
            return Err(CmatError::DimensionMismatch(format!(
                "{} vs {} qubits",
                self.n_qubits, other.n_qubits
            )));
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for (a, b) in self.amps.iter().zip(&other.amps) {
            acc = acc + a.conj() * b;
        }
        Ok(acc)
    }

    /// Applies a 2×2 operator `m = [m00, m01, m10, m11]` to one qubit.
    ///
    /// Returns the new state and the pre-normalization norm. If the norm
    /// drifted more than 1e-10 from unity the state is renormalized and the
    /// crate-wide diagnostic counter is bumped.
    pub fn apply_single_qubit(
        &self,
        m: &[Complex<T>; 4],
        qubit: usize,
    ) -> Result<(Self, T), CmatError> {
        if qubit >= self.n_qubits {
            return Err(CmatError::QubitOutOfRange {
                qubit,
                n: self.n_qubits,
            });
        }
        let mask = 1usize << qubit;
        let mut amps = self.amps.clone();
        for base in 0..self.amps.len() {
            if base & mask != 0 {
                continue;
            }
            let a0 = self.amps[base];
            let a1 = self.amps[base | mask];
            amps[base] = m[0] * a0 + m[1] * a1;
            amps[base | mask] = m[2] * a0 + m[3] * a1;
        }
        let norm_sq = amps.iter().map(|c| c.norm_sqr()).fold(T::zero(), |a, b| a + b);
        let norm = norm_sq.sqrt();
        if !norm.is_finite() || norm <= T::min_positive_value() {
            return Err(CmatError::ZeroNorm);
        }
        if (norm - T::one()).abs() > T::of(NORM_DRIFT_TOL) {
            RENORMALIZATION_EVENTS.fetch_add(1, Ordering::Relaxed);
            let inv = norm.recip();
            for a in amps.iter_mut() {
                *a = *a * inv;
            }
        }
        Ok((Self { n_qubits: self.n_qubits, amps }, norm))
    }
}

/// Validated density matrix: Hermitian, unit trace, PSD within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    mat: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Full validation: squareness, cap, Hermiticity and trace within
    /// 1e-10, eigenvalues ≥ −1e-9.
    pub fn new(mat: ComplexMatrix<T>) -> Result<Self, CmatError> {
        if mat.rows() != mat.cols() {
            return Err(CmatError::DimensionMismatch(format!(
                "{}x{} is not square",
                mat.rows(),
                mat.cols()
            )));
        }
        if mat.rows() > MAX_DENSITY_DIM {
            return Err(CmatError::TooLarge {
                dim: mat.rows(),
                cap: MAX_DENSITY_DIM,
            });
        }
        let dev = mat.hermiticity_deviation();
        if dev > T::of(DM_VALID_TOL) {
            return Err(CmatError::NotHermitian {
                dev: dev.to_f64().unwrap_or(f64::NAN),
                tol: DM_VALID_TOL,
            });
        }
        let tr = mat.trace();
        if (tr.re - T::one()).abs() > T::of(DM_VALID_TOL) || tr.im.abs() > T::of(DM_VALID_TOL) {
            return Err(CmatError::DimensionMismatch(format!(
                "trace {} is not 1 within 1e-10",
                tr.re.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let eigs = hermitian_eigenvalues(&mat)?;
        let min_eig = eigs
            .first()
            .copied()
            .unwrap_or_else(T::zero);
        if min_eig < T::of(PSD_FLOOR) {
            return Err(CmatError::NotPSD {
                min_eig: min_eig.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { mat })
    }

    /// `|ψ⟩⟨ψ|` of a validated state vector; PSD by construction, so the
    /// eigenvalue scan is skipped.
    pub fn from_pure(state: &StateVector<T>) -> Result<Self, CmatError> {
        let dim = state.dim();
        if dim > MAX_DENSITY_DIM {
            return Err(CmatError::TooLarge {
                dim,
                cap: MAX_DENSITY_DIM,
            });
        }
        let mut mat = ComplexMatrix::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                mat.set(r, c, state.amps[r] * state.amps[c].conj());
            }
        }
        Ok(Self { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn sub(&self, other: &Self) -> Result<ComplexMatrix<T>, CmatError> {
        self.mat.sub(&other.mat)
    }
}
