//! Quaternion algebra and the group Q8 = {±1, ±i, ±j, ±k}.
//!
//! A quaternion is `q = w + x·i + y·j + z·k` with `i² = j² = k² = ijk = −1`.
//! The unitary realization used throughout the crate is the SU(2) embedding
//!
//! ```text
//! 1 ↦ I,   i ↦ −i·σ1,   j ↦ −i·σ2,   k ↦ −i·σ3
//! ```
//!
//! which satisfies the quaternion relations exactly; any alternative
//! differing by a global phase is observationally equivalent. The phase
//! convention is fixed here once and reused by the design-matrix and
//! QOSTBC layers.

use num_complex::Complex;
use thiserror::Error;

use crate::Real;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuatError {
    /// Inversion of the zero quaternion is a hard error so downstream
    /// decoders fail loudly instead of propagating NaNs.
    #[error("cannot invert the zero quaternion")]
    ZeroQuaternion,
}

/// Quaternion `w + x·i + y·j + z·k` over a real scalar type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    /// Unit `i`.
    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    /// Unit `j`.
    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    /// Unit `k`.
    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.w + other.w,
            self.x + other.x,
            self.y + other.y,
            self.z + other.z,
        )
    }

    /// Conjugate: negates the imaginary parts.
    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Euclidean 4-dot product; `dot4(q, q) = norm(q)²`.
    pub fn dot4(&self, other: &Self) -> T {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_sqr(&self) -> T {
        self.dot4(self)
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// Hamilton product. Bilinear, associative, non-commutative; obeys
/// `ij = k`, `ji = −k`, `jk = i`, `kj = −i`, `ki = j`, `ik = −j`.
pub fn hamilton<T: Real>(p: &Quaternion<T>, q: &Quaternion<T>) -> Quaternion<T> {
    Quaternion::new(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )
}

/// Multiplicative inverse `q* / |q|²`.
pub fn inverse<T: Real>(q: &Quaternion<T>) -> Result<Quaternion<T>, QuatError> {
    let n2 = q.norm_sqr();
    if n2 <= T::zero() {
        return Err(QuatError::ZeroQuaternion);
    }
    Ok(q.conjugate().scale(n2.recip()))
}

/// Basis unit of a Q8 element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Q8Unit {
    One,
    I,
    J,
    K,
}

impl Q8Unit {
    pub const ALL: [Q8Unit; 4] = [Q8Unit::One, Q8Unit::I, Q8Unit::J, Q8Unit::K];

    fn index(self) -> usize {
        match self {
            Q8Unit::One => 0,
            Q8Unit::I => 1,
            Q8Unit::J => 2,
            Q8Unit::K => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn combine(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_scalar<T: Real>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }
}

/// Element of the quaternion group Q8: a signed basis unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Q8Element {
    pub unit: Q8Unit,
    pub sign: Sign,
}

impl Q8Element {
    pub const fn new(unit: Q8Unit, sign: Sign) -> Self {
        Self { unit, sign }
    }

    pub fn one() -> Self {
        Self::new(Q8Unit::One, Sign::Plus)
    }

    /// The eight group elements in a fixed enumeration order.
    pub fn all() -> [Q8Element; 8] {
        let mut out = [Q8Element::one(); 8];
        let mut n = 0;
        for unit in Q8Unit::ALL {
            for sign in [Sign::Plus, Sign::Minus] {
                out[n] = Q8Element::new(unit, sign);
                n += 1;
            }
        }
        out
    }

    pub fn to_quaternion<T: Real>(&self) -> Quaternion<T> {
        let base = match self.unit {
            Q8Unit::One => Quaternion::one(),
            Q8Unit::I => Quaternion::i(),
            Q8Unit::J => Quaternion::j(),
            Q8Unit::K => Quaternion::k(),
        };
        base.scale(self.sign.as_scalar())
    }
}

impl std::fmt::Display for Q8Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self.sign {
            Sign::Plus => "",
            Sign::Minus => "-",
        };
        let u = match self.unit {
            Q8Unit::One => "1",
            Q8Unit::I => "i",
            Q8Unit::J => "j",
            Q8Unit::K => "k",
        };
        write!(f, "{s}{u}")
    }
}

// Unit products: UNIT_TABLE[a][b] = (unit, extra sign) for a·b,
// in the index order 1, i, j, k.
const UNIT_TABLE: [[(Q8Unit, Sign); 4]; 4] = [
    [
        (Q8Unit::One, Sign::Plus),
        (Q8Unit::I, Sign::Plus),
        (Q8Unit::J, Sign::Plus),
        (Q8Unit::K, Sign::Plus),
    ],
    [
        (Q8Unit::I, Sign::Plus),
        (Q8Unit::One, Sign::Minus),
        (Q8Unit::K, Sign::Plus),
        (Q8Unit::J, Sign::Minus),
    ],
    [
        (Q8Unit::J, Sign::Plus),
        (Q8Unit::K, Sign::Minus),
        (Q8Unit::One, Sign::Minus),
        (Q8Unit::I, Sign::Plus),
    ],
    [
        (Q8Unit::K, Sign::Plus),
        (Q8Unit::J, Sign::Plus),
        (Q8Unit::I, Sign::Minus),
        (Q8Unit::One, Sign::Minus),
    ],
];

/// Group product in Q8; agrees with [`hamilton`] on the embedded elements.
pub fn q8_mul(a: Q8Element, b: Q8Element) -> Q8Element {
    let (unit, extra) = UNIT_TABLE[a.unit.index()][b.unit.index()];
    Q8Element::new(unit, a.sign.combine(b.sign).combine(extra))
}

/// Group inverse: `q8_mul(a, q8_inv(a)) = +1`.
pub fn q8_inv(a: Q8Element) -> Q8Element {
    match a.unit {
        Q8Unit::One => a,
        _ => Q8Element::new(a.unit, a.sign.flip()),
    }
}

/// 2×2 complex matrix in row-major order `[m00, m01, m10, m11]`.
pub type Mat2<T> = [Complex<T>; 4];

/// Unitary realization of a Q8 element: `1 ↦ I`, `u ↦ −i·σ_u`, the sign
/// multiplying the whole matrix. A group homomorphism into U(2).
pub fn q8_to_unitary<T: Real>(a: Q8Element) -> Mat2<T> {
    quaternion_to_matrix(&a.to_quaternion())
}

/// Linear extension of the Q8 embedding:
/// `w·I + x·(−i·σ1) + y·(−i·σ2) + z·(−i·σ3)`.
pub fn quaternion_to_matrix<T: Real>(q: &Quaternion<T>) -> Mat2<T> {
    let c = Complex::new;
    [
        c(q.w, -q.z),
        c(-q.y, -q.x),
        c(q.y, -q.x),
        c(q.w, q.z),
    ]
}

pub fn mat2_mul<T: Real>(a: &Mat2<T>, b: &Mat2<T>) -> Mat2<T> {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}
