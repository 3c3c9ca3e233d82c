//! Syndrome extraction, minimum-weight decoding, residual classification,
//! distance verification, and small-n statevector encoding.
//!
//! Error candidates are always enumerated in ascending weight and, within
//! a weight, lexicographically on `(qubit index, letter)` with letters
//! ordered `X < Y < Z`. Both decoders walk the same order, so the first
//! match is the deterministic minimum-weight correction on every platform
//! and thread count.

use std::collections::HashMap;
use std::ops::ControlFlow;

use num_complex::Complex;
use thiserror::Error;

use crate::cmat::{CmatError, StateVector, MAX_STATE_QUBITS};
use crate::pauli::{CodeError, PauliLetter, PauliString, StabilizerCode};
use crate::Real;

#[derive(Debug, Error, PartialEq)]
pub enum DecodeError {
    #[error("error acts on {0} qubits but code has {1}")]
    LengthMismatch(usize, usize),
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("syndrome not present in lookup table (uncorrectable or heavier error)")]
    UnknownSyndrome,
    #[error("no correction of weight ≤ {0} matches the syndrome")]
    NoCorrectionFound(usize),
    #[error("correction syndrome does not match error syndrome")]
    SyndromeMismatch,
    #[error("statevector encoding is capped at {MAX_STATE_QUBITS} qubits, code has {0}")]
    TooLarge(usize),
    #[error("code has no logical operators")]
    MissingLogicals,
    #[error("logical operators are inconsistent with the generators (projection vanished)")]
    ZeroProjection,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Cmat(#[from] CmatError),
}

/// Anticommutation pattern of an error against the generators; bit `i` is
/// set iff the error anticommutes with generator `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: u64,
    len: usize,
}

impl Syndrome {
    /// Builds a syndrome from raw bits; `len` must be the generator count
    /// of the code it will be decoded against.
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= 64, "at most 64 generators");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Self {
            bits: bits & mask,
            len,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

impl std::fmt::Display for Syndrome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        Ok(())
    }
}

/// Syndrome of `error` against the code generators.
pub fn syndrome(code: &StabilizerCode, error: &PauliString) -> Result<Syndrome, DecodeError> {
    if error.n() != code.n() {
        return Err(DecodeError::LengthMismatch(error.n(), code.n()));
    }
    let mut bits = 0u64;
    for (i, g) in code.generators().iter().enumerate() {
        if !error.commutes(g)? {
            bits |= 1 << i;
        }
    }
    Ok(Syndrome {
        bits,
        len: code.generators().len(),
    })
}

/// Per-(qubit, letter) syndrome contributions; syndromes of arbitrary
/// errors are XOR combinations of these.
pub fn syndrome_contributions(code: &StabilizerCode) -> Vec<[u64; 3]> {
    let n = code.n();
    let mut out = vec![[0u64; 3]; n];
    for (q, slot) in out.iter_mut().enumerate() {
        for (li, letter) in PauliLetter::ERRORS.iter().enumerate() {
            let e = PauliString::single(n, q, *letter);
            slot[li] = syndrome(code, &e).expect("lengths match").bits;
        }
    }
    out
}

/// Number of Pauli errors of weight ≤ `max_weight` on `n` qubits,
/// identity included: `Σ_{w≤max} 3^w · C(n,w)`.
pub fn enumeration_count(n: usize, max_weight: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut pow3: u128 = 1;
    for w in 0..=max_weight.min(n) {
        if w > 0 {
            binom = binom * (n - w + 1) as u128 / w as u128;
            pow3 *= 3;
        }
        total = total.saturating_add(binom.saturating_mul(pow3));
    }
    total
}

fn pauli_from_support(n: usize, chosen: &[(usize, usize)]) -> PauliString {
    let mut x = 0u64;
    let mut z = 0u64;
    for &(pos, li) in chosen {
        let (xb, zb) = PauliLetter::ERRORS[li].bits();
        x |= (xb as u64) << pos;
        z |= (zb as u64) << pos;
    }
    PauliString::from_bits(n, x, z, 0)
}

/// Visits every error of weight exactly `w`, positions ascending, letters
/// `X < Y < Z`, with the accumulated syndrome. Stops early on `Break`.
fn visit_exact_weight(
    contrib: &[[u64; 3]],
    n: usize,
    w: usize,
    start: usize,
    acc: u64,
    chosen: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(u64, &[(usize, usize)]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if w == 0 {
        return f(acc, chosen);
    }
    for pos in start..=(n - w) {
        for li in 0..3 {
            chosen.push((pos, li));
            let next = acc ^ contrib[pos][li];
            let flow = visit_exact_weight(contrib, n, w - 1, pos + 1, next, chosen, f);
            chosen.pop();
            flow?;
        }
    }
    ControlFlow::Continue(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeMethod {
    Lookup,
    Search,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecodeResult {
    pub correction: PauliString,
    pub weight: usize,
    pub method: DecodeMethod,
}

/// Frozen syndrome → minimum-weight-correction map.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    max_weight: usize,
    map: HashMap<u64, PauliString>,
    complete: bool,
}

impl SyndromeTable {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// True when every one of the `2^(n−k)` syndromes has an entry.
    pub fn is_complete(&self) -> bool {
        self.complete
    }
}

/// Enumerates errors of ascending weight up to `max_weight`, recording the
/// first (hence minimum-weight, lexicographically least) error per
/// syndrome.
pub fn build_lookup(
    code: &StabilizerCode,
    max_weight: usize,
    budget: u128,
) -> Result<SyndromeTable, DecodeError> {
    let needed = enumeration_count(code.n(), max_weight);
    if needed > budget {
        return Err(DecodeError::BudgetExceeded { needed, budget });
    }
    let n = code.n();
    let contrib = syndrome_contributions(code);
    let mut map = HashMap::new();
    let target_entries = 1u64
        .checked_shl(code.generators().len() as u32)
        .unwrap_or(u64::MAX);
    let mut chosen = Vec::with_capacity(max_weight);
    for w in 0..=max_weight.min(n) {
        let _ = visit_exact_weight(&contrib, n, w, 0, 0, &mut chosen, &mut |syn, chosen| {
            map.entry(syn).or_insert_with(|| pauli_from_support(n, chosen));
            ControlFlow::Continue(())
        });
        if map.len() as u64 == target_entries {
            let complete = true;
            return Ok(SyndromeTable {
                max_weight: w,
                map,
                complete,
            });
        }
    }
    let complete = map.len() as u64 == target_entries;
    Ok(SyndromeTable {
        max_weight,
        map,
        complete,
    })
}

/// Grows the lookup weight until every syndrome is covered or the budget
/// runs out.
pub fn build_lookup_complete(code: &StabilizerCode, budget: u128) -> Result<SyndromeTable, DecodeError> {
    for w in 1..=code.n() {
        let needed = enumeration_count(code.n(), w);
        if needed > budget {
            return Err(DecodeError::BudgetExceeded { needed, budget });
        }
        let table = build_lookup(code, w, budget)?;
        if table.is_complete() {
            return Ok(table);
        }
    }
    unreachable!("full-weight enumeration covers every syndrome of a valid code")
}

/// Stored minimum-weight correction for `s`.
pub fn decode_lookup(table: &SyndromeTable, s: &Syndrome) -> Result<DecodeResult, DecodeError> {
    match table.map.get(&s.bits()) {
        Some(p) => Ok(DecodeResult {
            correction: *p,
            weight: p.weight(),
            method: DecodeMethod::Lookup,
        }),
        None => Err(DecodeError::UnknownSyndrome),
    }
}

fn search_exact(
    contrib: &[[u64; 3]],
    n: usize,
    w: usize,
    start: usize,
    acc: u64,
    target: u64,
    chosen: &mut [(usize, usize); 64],
    depth: usize,
) -> bool {
    if w == 1 {
        for pos in start..n {
            let c = &contrib[pos];
            for li in 0..3 {
                if acc ^ c[li] == target {
                    chosen[depth] = (pos, li);
                    return true;
                }
            }
        }
        return false;
    }
    for pos in start..=(n - w) {
        let c = &contrib[pos];
        for li in 0..3 {
            chosen[depth] = (pos, li);
            if search_exact(contrib, n, w - 1, pos + 1, acc ^ c[li], target, chosen, depth + 1) {
                return true;
            }
        }
    }
    false
}

/// Weight-ascending search decoder: returns the first (minimum-weight,
/// deterministic) error matching the syndrome, for codes whose lookup
/// table would blow the budget.
pub fn decode_search(
    code: &StabilizerCode,
    s: &Syndrome,
    max_weight: usize,
) -> Result<DecodeResult, DecodeError> {
    if s.is_zero() {
        return Ok(DecodeResult {
            correction: PauliString::identity(code.n()),
            weight: 0,
            method: DecodeMethod::Search,
        });
    }
    let n = code.n();
    let contrib = syndrome_contributions(code);
    let mut chosen = [(0usize, 0usize); 64];
    for w in 1..=max_weight.min(n) {
        if search_exact(&contrib, n, w, 0, 0, s.bits(), &mut chosen, 0) {
            let correction = pauli_from_support(n, &chosen[..w]);
            return Ok(DecodeResult {
                correction,
                weight: w,
                method: DecodeMethod::Search,
            });
        }
    }
    Err(DecodeError::NoCorrectionFound(max_weight))
}

/// Outcome of a correction relative to the true error.
/// `Identity` and `InStabilizer` both mean success; `LogicalError` is a
/// miscorrection into the wrong coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualClass {
    Identity,
    InStabilizer,
    LogicalError,
}

impl ResidualClass {
    pub fn is_success(self) -> bool {
        matches!(self, ResidualClass::Identity | ResidualClass::InStabilizer)
    }
}

/// Classifies `correction · error`: trivial, in the stabilizer span, or a
/// logical operator.
pub fn residual_class(
    code: &StabilizerCode,
    error: &PauliString,
    correction: &PauliString,
) -> Result<ResidualClass, DecodeError> {
    if syndrome(code, error)? != syndrome(code, correction)? {
        return Err(DecodeError::SyndromeMismatch);
    }
    let residual = correction.multiply(error)?;
    if residual.is_identity_up_to_phase() {
        Ok(ResidualClass::Identity)
    } else if code.in_stabilizer_span(&residual) {
        Ok(ResidualClass::InStabilizer)
    } else {
        Ok(ResidualClass::LogicalError)
    }
}

/// Finding of [`verify_distance`]: the lightest zero-syndrome
/// non-stabilizer operator within the searched weight range, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    pub searched_up_to: usize,
    pub candidates: u128,
    pub found: Option<(usize, PauliString)>,
}

impl DistanceReport {
    /// True when the scan is consistent with the claimed distance `d`:
    /// either nothing was found, or the lightest logical found is no
    /// lighter than `d`.
    pub fn consistent_with(&self, d: usize) -> bool {
        match &self.found {
            None => true,
            Some((w, _)) => *w >= d,
        }
    }
}

/// Exhaustively scans all errors of weight ≤ `upto_weight` for logical
/// operators (zero syndrome, outside the stabilizer span).
pub fn verify_distance(
    code: &StabilizerCode,
    upto_weight: usize,
    budget: u128,
) -> Result<DistanceReport, DecodeError> {
    let needed = enumeration_count(code.n(), upto_weight);
    if needed > budget {
        return Err(DecodeError::BudgetExceeded { needed, budget });
    }
    let n = code.n();
    let contrib = syndrome_contributions(code);
    let mut found = None;
    let mut candidates: u128 = 0;
    let mut chosen = Vec::with_capacity(upto_weight);
    'outer: for w in 1..=upto_weight.min(n) {
        let flow = visit_exact_weight(&contrib, n, w, 0, 0, &mut chosen, &mut |syn, chosen| {
            candidates += 1;
            if syn == 0 {
                let p = pauli_from_support(n, chosen);
                if !code.in_stabilizer_span(&p) {
                    found = Some((w, p));
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            break 'outer;
        }
    }
    Ok(DistanceReport {
        searched_up_to: upto_weight,
        candidates,
        found,
    })
}

// ---------------------------------------------------------------------------
// Statevector encoding
// ---------------------------------------------------------------------------

fn apply_pauli_raw<T: Real>(p: &PauliString, amps: &[Complex<T>]) -> Vec<Complex<T>> {
    let x_mask = p.x_bits() as usize;
    let z_mask = p.z_bits() as usize;
    let lead = (p.phase_exp() as u32 + (p.x_bits() & p.z_bits()).count_ones()) & 3;
    let base = match lead {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    };
    let mut out = vec![Complex::new(T::zero(), T::zero()); amps.len()];
    for (s, &a) in amps.iter().enumerate() {
        let sign = if (s & z_mask).count_ones() & 1 == 1 {
            -base
        } else {
            base
        };
        out[s ^ x_mask] = sign * a;
    }
    out
}

/// Applies a Pauli string to a state vector (norm preserved exactly).
pub fn apply_pauli<T: Real>(
    state: &StateVector<T>,
    p: &PauliString,
) -> Result<StateVector<T>, DecodeError> {
    if p.n() != state.n_qubits() {
        return Err(DecodeError::LengthMismatch(p.n(), state.n_qubits()));
    }
    let amps = apply_pauli_raw(p, state.amplitudes());
    Ok(StateVector::new(state.n_qubits(), amps)?)
}

fn project_onto_plus_one<T: Real>(p: &PauliString, amps: &mut Vec<Complex<T>>) {
    let image = apply_pauli_raw(p, amps);
    let half = T::of(0.5);
    for (a, b) in amps.iter_mut().zip(image) {
        *a = (*a + b) * Complex::new(half, T::zero());
    }
}

/// Encodes a `k`-qubit logical state into the codespace: the stabilizer
/// and logical-Z projectors are applied to `|0…0⟩` to fix `|0_L⟩`, and the
/// logical state's amplitudes select `X̄`-shifted copies.
///
/// The result is stabilized by every generator; callers on more than
/// [`MAX_STATE_QUBITS`] qubits must stay in the symplectic engine.
pub fn encode_state<T: Real>(
    code: &StabilizerCode,
    logical: &StateVector<T>,
) -> Result<StateVector<T>, DecodeError> {
    if code.n() > MAX_STATE_QUBITS {
        return Err(DecodeError::TooLarge(code.n()));
    }
    if !code.has_logicals() {
        return Err(DecodeError::MissingLogicals);
    }
    if logical.n_qubits() != code.k() {
        return Err(DecodeError::LengthMismatch(logical.n_qubits(), code.k()));
    }

    // |0_L⟩ is the image of the rank-1 projector Π_S · Π_Z̄; the projector
    // has unit trace, so some computational basis state has nonzero image.
    // |0…0⟩ works for CSS-style codes; general codes may need a later one.
    let dim = 1usize << code.n();
    let mut zero_logical = Vec::new();
    let mut found = false;
    for b in 0..dim {
        let mut v = vec![Complex::new(T::zero(), T::zero()); dim];
        v[b] = Complex::new(T::one(), T::zero());
        for g in code.generators() {
            project_onto_plus_one(g, &mut v);
        }
        for lz in code.logical_z() {
            project_onto_plus_one(lz, &mut v);
        }
        let norm_sq = v.iter().map(|c| c.norm_sqr()).fold(T::zero(), |a, b| a + b);
        if norm_sq.sqrt() > T::of(1e-9) {
            zero_logical = v;
            found = true;
            break;
        }
    }
    if !found {
        return Err(DecodeError::ZeroProjection);
    }

    let mut encoded = vec![Complex::new(T::zero(), T::zero()); dim];
    for (b, &alpha) in logical.amplitudes().iter().enumerate() {
        if alpha.norm_sqr() <= T::zero() {
            continue;
        }
        let mut shifted = zero_logical.clone();
        for (j, lx) in code.logical_x().iter().enumerate() {
            if (b >> j) & 1 == 1 {
                shifted = apply_pauli_raw(lx, &shifted);
            }
        }
        for (e, s) in encoded.iter_mut().zip(shifted) {
            *e = *e + alpha * s;
        }
    }
    Ok(StateVector::from_unnormalized(code.n(), encoded)?)
}

/// `⟨φ|P|φ⟩` for a Pauli string; +1 on every generator is the encoding
/// postcondition.
pub fn pauli_expectation<T: Real>(
    state: &StateVector<T>,
    p: &PauliString,
) -> Result<Complex<T>, DecodeError> {
    let image = apply_pauli(state, p)?;
    Ok(state.inner(&image)?)
}
