//! Quaternion-coded correction: error operators as Q8 group-algebra
//! elements, QOD encode/decode with solved coefficients, and correction by
//! inverse group elements.
//!
//! Detection is not defined by this layer. In the integrated pipeline the
//! stabilizer decoder supplies per-qubit correction letters, mapped onto
//! the group as `X ↦ i`, `Y ↦ j`, `Z ↦ k` (see [`q8_from_letter`]); the
//! corrective action is then `U(q⁻¹)` on the affected qubit. Global phase
//! is quotiented out by comparing states through `|⟨ψ|φ⟩|²`.

use num_complex::Complex;
use thiserror::Error;

use crate::cmat::{CmatError, StateVector};
use crate::pauli::PauliLetter;
use crate::quat::{mat2_mul, q8_inv, q8_to_unitary, quaternion_to_matrix, Mat2, Q8Element, Q8Unit, Quaternion, Sign};
use crate::Real;

#[derive(Debug, Error, PartialEq)]
pub enum QostbcError {
    #[error("qubit {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("error operator has no nonzero coefficient")]
    ZeroOperator,
    #[error("encoding operator Σ β_m U(q_m) is singular")]
    SingularCodec,
    #[error("codec quaternion {index} has norm {norm}, expected 1")]
    NotUnitQuaternion { index: usize, norm: f64 },
    #[error(transparent)]
    Cmat(#[from] CmatError),
}

/// Stabilizer-letter to group-element mapping used by the integrated
/// pipeline: `X ↦ i`, `Y ↦ j`, `Z ↦ k`, identity to 1.
pub fn q8_from_letter(letter: PauliLetter) -> Q8Element {
    let unit = match letter {
        PauliLetter::I => Q8Unit::One,
        PauliLetter::X => Q8Unit::I,
        PauliLetter::Y => Q8Unit::J,
        PauliLetter::Z => Q8Unit::K,
    };
    Q8Element::new(unit, Sign::Plus)
}

/// Group-algebra error operator `E = Σ_q e_q·U(q)` over the basis
/// `{1, i, j, k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionErrorOp<T> {
    coeffs: [Complex<T>; 4],
}

impl<T: Real> QuaternionErrorOp<T> {
    /// Coefficients in basis order `1, i, j, k`.
    pub fn new(coeffs: [Complex<T>; 4]) -> Result<Self, QostbcError> {
        if coeffs.iter().all(|c| c.norm_sqr() <= T::zero()) {
            return Err(QostbcError::ZeroOperator);
        }
        Ok(Self { coeffs })
    }

    pub fn from_q8(element: Q8Element) -> Self {
        let mut coeffs = [Complex::new(T::zero(), T::zero()); 4];
        let idx = match element.unit {
            Q8Unit::One => 0,
            Q8Unit::I => 1,
            Q8Unit::J => 2,
            Q8Unit::K => 3,
        };
        coeffs[idx] = Complex::new(element.sign.as_scalar(), T::zero());
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex<T>; 4] {
        &self.coeffs
    }

    /// Realized 2×2 matrix `Σ e_q·U(q)`.
    pub fn realized(&self) -> Mat2<T> {
        let units = [
            Quaternion::one(),
            Quaternion::i(),
            Quaternion::j(),
            Quaternion::k(),
        ];
        let mut m = [Complex::new(T::zero(), T::zero()); 4];
        for (c, unit) in self.coeffs.iter().zip(units.iter()) {
            let u = quaternion_to_matrix(unit);
            for t in 0..4 {
                m[t] = m[t] + *c * u[t];
            }
        }
        m
    }

    /// Max-entry deviation of `M†M` from the identity. General group-algebra
    /// sums are legitimate analysis objects but only unitary instances model
    /// physical channels; callers decide what to do with the deviation.
    pub fn unitarity_deviation(&self) -> T {
        let m = self.realized();
        let mdag = [m[0].conj(), m[2].conj(), m[1].conj(), m[3].conj()];
        let prod = mat2_mul(&mdag, &m);
        let one = Complex::new(T::one(), T::zero());
        let dev = [prod[0] - one, prod[1], prod[2], prod[3] - one];
        dev.iter().map(|c| c.norm()).fold(T::zero(), |a, b| a.max(b))
    }
}

/// Applies `Σ e_q·U(q)` on one qubit, renormalizing; returns the state and
/// the pre-normalization norm (1 exactly for unit-quaternion operators).
pub fn apply_error_operator<T: Real>(
    op: &QuaternionErrorOp<T>,
    state: &StateVector<T>,
    qubit: usize,
) -> Result<(StateVector<T>, T), QostbcError> {
    if qubit >= state.n_qubits() {
        return Err(QostbcError::QubitOutOfRange {
            qubit,
            n: state.n_qubits(),
        });
    }
    Ok(state.apply_single_qubit(&op.realized(), qubit)?)
}

/// Inverse-group-element correction: applies `U(detected⁻¹)` on the target
/// qubit. Composing after the matching error restores the state up to
/// global phase.
pub fn qostbc_correct<T: Real>(
    state: &StateVector<T>,
    detected: Q8Element,
    qubit: usize,
) -> Result<StateVector<T>, QostbcError> {
    if qubit >= state.n_qubits() {
        return Err(QostbcError::QubitOutOfRange {
            qubit,
            n: state.n_qubits(),
        });
    }
    let m = q8_to_unitary(q8_inv(detected));
    let (out, _) = state.apply_single_qubit(&m, qubit)?;
    Ok(out)
}

/// QOD codec: unit quaternions `q_m`, encoding weights `β_m`, and solved
/// decoding coefficients `γ_m` with the achieved round-trip residual
/// `‖Σ γ_m U(q_m)† · Σ β_m U(q_m) − I‖`.
#[derive(Debug, Clone, PartialEq)]
pub struct QodCodec<T> {
    quaternions: Vec<Quaternion<T>>,
    beta: Vec<Complex<T>>,
    gamma: Vec<Complex<T>>,
    residual: T,
}

impl<T: Real> QodCodec<T> {
    /// Solves the decoding coefficients for the given quaternions and
    /// encoding weights.
    pub fn solve(quaternions: Vec<Quaternion<T>>, beta: Vec<Complex<T>>) -> Result<Self, QostbcError> {
        let (gamma, residual) = solve_gamma(&quaternions, &beta)?;
        Ok(Self {
            quaternions,
            beta,
            gamma,
            residual,
        })
    }

    pub fn quaternions(&self) -> &[Quaternion<T>] {
        &self.quaternions
    }

    pub fn beta(&self) -> &[Complex<T>] {
        &self.beta
    }

    pub fn gamma(&self) -> &[Complex<T>] {
        &self.gamma
    }

    pub fn residual(&self) -> T {
        self.residual
    }

    fn encode_matrix(&self) -> Mat2<T> {
        combination(&self.quaternions, &self.beta, false)
    }

    fn decode_matrix(&self) -> Mat2<T> {
        combination(&self.quaternions, &self.gamma, true)
    }
}

fn combination<T: Real>(
    quaternions: &[Quaternion<T>],
    coeffs: &[Complex<T>],
    daggered: bool,
) -> Mat2<T> {
    let mut m = [Complex::new(T::zero(), T::zero()); 4];
    for (q, c) in quaternions.iter().zip(coeffs.iter()) {
        let u = quaternion_to_matrix(q);
        let u = if daggered {
            [u[0].conj(), u[2].conj(), u[1].conj(), u[3].conj()]
        } else {
            u
        };
        for t in 0..4 {
            m[t] = m[t] + *c * u[t];
        }
    }
    m
}

/// Least-squares solve of `Σ γ_m U(q_m)† · A = I` with `A = Σ β_m U(q_m)`
/// over the 4 group-algebra coordinates. Returns the coefficients and the
/// achieved max-entry residual.
pub fn solve_gamma<T: Real>(
    quaternions: &[Quaternion<T>],
    beta: &[Complex<T>],
) -> Result<(Vec<Complex<T>>, T), QostbcError> {
    assert_eq!(
        quaternions.len(),
        beta.len(),
        "one weight per quaternion"
    );
    for (index, q) in quaternions.iter().enumerate() {
        let norm = q.norm();
        if (norm - T::one()).abs() > T::of(1e-9) {
            return Err(QostbcError::NotUnitQuaternion {
                index,
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
    }

    let a = combination(quaternions, beta, false);
    let det = a[0] * a[3] - a[1] * a[2];
    let scale = a.iter().map(|c| c.norm()).fold(T::zero(), |x, y| x.max(y));
    if det.norm() <= T::of(1e-12) * (scale * scale).max(T::one()) {
        return Err(QostbcError::SingularCodec);
    }

    // Columns of the least-squares system: U(q_m)†·A flattened into C⁴.
    let m_count = quaternions.len();
    let columns: Vec<Mat2<T>> = quaternions
        .iter()
        .map(|q| {
            let u = quaternion_to_matrix(q);
            let udag = [u[0].conj(), u[2].conj(), u[1].conj(), u[3].conj()];
            mat2_mul(&udag, &a)
        })
        .collect();
    let target = [
        Complex::new(T::one(), T::zero()),
        Complex::new(T::zero(), T::zero()),
        Complex::new(T::zero(), T::zero()),
        Complex::new(T::one(), T::zero()),
    ];

    // Normal equations G γ = r.
    let zero = Complex::new(T::zero(), T::zero());
    let mut g = vec![zero; m_count * m_count];
    let mut r = vec![zero; m_count];
    for i in 0..m_count {
        for j in 0..m_count {
            let mut acc = zero;
            for t in 0..4 {
                acc = acc + columns[i][t].conj() * columns[j][t];
            }
            g[i * m_count + j] = acc;
        }
        let mut acc = zero;
        for t in 0..4 {
            acc = acc + columns[i][t].conj() * target[t];
        }
        r[i] = acc;
    }

    let gamma = solve_linear_system(&mut g, &mut r, m_count);

    let d = combination(quaternions, &gamma, true);
    let prod = mat2_mul(&d, &a);
    let residual = [
        prod[0] - target[0],
        prod[1],
        prod[2],
        prod[3] - target[3],
    ]
    .iter()
    .map(|c| c.norm())
    .fold(T::zero(), |x, y| x.max(y));
    Ok((gamma, residual))
}

/// Gaussian elimination with partial pivoting; near-zero pivots leave the
/// corresponding coefficient at zero (dependent directions).
fn solve_linear_system<T: Real>(
    g: &mut [Complex<T>],
    r: &mut [Complex<T>],
    n: usize,
) -> Vec<Complex<T>> {
    let zero = Complex::new(T::zero(), T::zero());
    let scale = g.iter().map(|c| c.norm()).fold(T::zero(), |a, b| a.max(b));
    let tol = T::of(1e-12) * scale.max(T::one());

    let mut pivot_rows: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let best = (row..n)
            .max_by(|&a, &b| {
                g[a * n + col]
                    .norm()
                    .partial_cmp(&g[b * n + col].norm())
                    .unwrap()
            })
            .unwrap_or(row);
        if row >= n || g[best * n + col].norm() <= tol {
            continue;
        }
        for c in 0..n {
            g.swap(row * n + c, best * n + c);
        }
        r.swap(row, best);
        let pivot = g[row * n + col];
        for other in 0..n {
            if other == row {
                continue;
            }
            let factor = g[other * n + col] / pivot;
            if factor.norm() == T::zero() {
                continue;
            }
            for c in 0..n {
                let delta = factor * g[row * n + c];
                g[other * n + c] = g[other * n + c] - delta;
            }
            let delta = factor * r[row];
            r[other] = r[other] - delta;
        }
        pivot_rows[col] = Some(row);
        row += 1;
    }

    let mut gamma = vec![zero; n];
    for col in 0..n {
        if let Some(prow) = pivot_rows[col] {
            gamma[col] = r[prow] / g[prow * n + col];
        }
    }
    gamma
}

/// QOD encoding `Σ β_m U(q_m)` applied on one qubit, then normalized.
pub fn encode_qod<T: Real>(
    codec: &QodCodec<T>,
    state: &StateVector<T>,
    qubit: usize,
) -> Result<StateVector<T>, QostbcError> {
    if qubit >= state.n_qubits() {
        return Err(QostbcError::QubitOutOfRange {
            qubit,
            n: state.n_qubits(),
        });
    }
    let (out, _) = state.apply_single_qubit(&codec.encode_matrix(), qubit)?;
    Ok(out)
}

/// QOD decoding `Σ γ_m U(q_m)†` applied on one qubit, then normalized;
/// inverse of [`encode_qod`] for a solved codec.
pub fn decode_qod<T: Real>(
    codec: &QodCodec<T>,
    state: &StateVector<T>,
    qubit: usize,
) -> Result<StateVector<T>, QostbcError> {
    if qubit >= state.n_qubits() {
        return Err(QostbcError::QubitOutOfRange {
            qubit,
            n: state.n_qubits(),
        });
    }
    let (out, _) = state.apply_single_qubit(&codec.decode_matrix(), qubit)?;
    Ok(out)
}
