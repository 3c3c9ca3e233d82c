//! Quaternion-coded quantum error correction: algebra, codes, decoders,
//! and a benchmark harness.
//!
//! The crate is organized around three layers:
//!
//! - exact small-scale simulation ([`quat`], [`cmat`], [`designs`],
//!   [`metrics`], [`qostbc`]) — dense complex linear algebra used as the
//!   oracle for everything else;
//! - a bit-packed symplectic engine ([`pauli`], [`decode`], [`channels`])
//!   that scales to the 29-qubit regime;
//! - the experiment layer ([`bench`]) with scenario configs, table
//!   replication, Monte Carlo runs, and CSV/SVG emission.
//!
//! Scalar-generic code is written over the [`Real`] trait (`f32` or `f64`);
//! the aliases at the crate root pick `f64`, which is what the CLI and the
//! benchmark harness use throughout.

use std::fmt;

pub mod bench;
pub mod channels;
pub mod cmat;
pub mod decode;
pub mod designs;
pub mod metrics;
pub mod pauli;
pub mod qostbc;
pub mod quat;

/// Floating-point scalar the algebra layers are generic over.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::NumAssignOps
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Shorthand for converting an `f64` constant (tolerances, weights).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub type Complex64 = num_complex::Complex<f64>;
pub type Quaternion64 = quat::Quaternion<f64>;
pub type ComplexMatrix64 = cmat::ComplexMatrix<f64>;
pub type StateVector64 = cmat::StateVector<f64>;
pub type DensityMatrix64 = cmat::DensityMatrix<f64>;
pub type DesignMatrix64 = designs::DesignMatrix<f64>;

pub use pauli::{PauliString, StabilizerCode};
pub use quat::{Q8Element, Q8Unit, Sign};
