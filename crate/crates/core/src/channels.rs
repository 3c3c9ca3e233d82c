//! Pauli error models with deterministic, splittable seeding.
//!
//! Every trial derives its own generator state by mixing
//! `(run_seed, trial_index)` through SplitMix64 and feeding the result to
//! ChaCha8, so parallel trial execution needs no shared generator and the
//! sampled error is a pure function of the seed pair on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pauli::{PauliLetter, PauliString};

#[derive(Debug, Error, PartialEq)]
pub enum ChannelError {
    #[error("per-qubit error probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("letter ratios must be nonnegative with positive sum, got {0:?}")]
    BadRatios([f64; 3]),
    #[error("fixed weight {w} exceeds qubit count {n}")]
    WeightTooLarge { w: usize, n: usize },
}

/// Relative weights for drawing X, Y, Z once a qubit errs.
/// 1:1:1 is the depolarizing-style default.
pub type LetterRatios = [f64; 3];

pub const DEPOLARIZING_RATIOS: LetterRatios = [1.0, 1.0, 1.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ErrorModel {
    /// Each qubit independently errs with probability `p_e`.
    Iid {
        p_e: f64,
        #[serde(default = "default_ratios")]
        ratios: LetterRatios,
    },
    /// Uniformly random support of exactly `weight` qubits.
    FixedWeight {
        weight: usize,
        #[serde(default = "default_ratios")]
        ratios: LetterRatios,
    },
}

fn default_ratios() -> LetterRatios {
    DEPOLARIZING_RATIOS
}

impl ErrorModel {
    pub fn validate(&self, n: usize) -> Result<(), ChannelError> {
        match self {
            ErrorModel::Iid { p_e, ratios } => {
                if !(0.0..=1.0).contains(p_e) {
                    return Err(ChannelError::BadProbability(*p_e));
                }
                check_ratios(ratios)
            }
            ErrorModel::FixedWeight { weight, ratios } => {
                if *weight > n {
                    return Err(ChannelError::WeightTooLarge { w: *weight, n });
                }
                check_ratios(ratios)
            }
        }
    }
}

fn check_ratios(ratios: &LetterRatios) -> Result<(), ChannelError> {
    let sum: f64 = ratios.iter().sum();
    if ratios.iter().any(|&r| !(r >= 0.0) || !r.is_finite()) || sum <= 0.0 {
        return Err(ChannelError::BadRatios(*ratios));
    }
    Ok(())
}

/// Seed pair that fully determines one sampled error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrialSeed {
    pub run_seed: u64,
    pub trial_index: u64,
}

impl TrialSeed {
    pub fn new(run_seed: u64, trial_index: u64) -> Self {
        Self {
            run_seed,
            trial_index,
        }
    }

    fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(splitmix64(
            self.run_seed ^ splitmix64(self.trial_index.wrapping_add(0x9e37_79b9_7f4a_7c15)),
        ))
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn draw_letter(rng: &mut ChaCha8Rng, ratios: &LetterRatios) -> PauliLetter {
    let sum: f64 = ratios.iter().sum();
    let u: f64 = rng.gen::<f64>() * sum;
    if u < ratios[0] {
        PauliLetter::X
    } else if u < ratios[0] + ratios[1] {
        PauliLetter::Y
    } else {
        PauliLetter::Z
    }
}

/// Samples one Pauli error on `n` qubits; a deterministic function of
/// `(model, n, seed)`.
pub fn sample_error(
    model: &ErrorModel,
    n: usize,
    seed: TrialSeed,
) -> Result<PauliString, ChannelError> {
    model.validate(n)?;
    let mut rng = seed.rng();
    let mut x_bits = 0u64;
    let mut z_bits = 0u64;
    match model {
        ErrorModel::Iid { p_e, ratios } => {
            for q in 0..n {
                if rng.gen::<f64>() < *p_e {
                    let (x, z) = draw_letter(&mut rng, ratios).bits();
                    x_bits |= (x as u64) << q;
                    z_bits |= (z as u64) << q;
                }
            }
        }
        ErrorModel::FixedWeight { weight, ratios } => {
            // Floyd's sampling: uniform support of exactly `weight` qubits.
            let mut support = 0u64;
            for j in (n - weight)..n {
                let t = rng.gen_range(0..=j);
                if support >> t & 1 == 1 {
                    support |= 1 << j;
                } else {
                    support |= 1 << t;
                }
            }
            let mut rest = support;
            while rest != 0 {
                let q = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (x, z) = draw_letter(&mut rng, ratios).bits();
                x_bits |= (x as u64) << q;
                z_bits |= (z as u64) << q;
            }
        }
    }
    Ok(PauliString::from_bits(n, x_bits, z_bits, 0))
}
