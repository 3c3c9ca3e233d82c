//! Bit-packed symplectic representation of Pauli strings and stabilizer
//! codes, plus the `.stab` code-file format.
//!
//! A Pauli string on `n ≤ 64` qubits is stored as two `u64` bit vectors
//! (`x_bits`, `z_bits`) and a phase exponent mod 4: the operator is
//! `i^phase_exp · Π_q W_q` with per-qubit letters `(x,z)`:
//! `(0,0) = I`, `(1,0) = X`, `(0,1) = Z`, `(1,1) = Y`. Phase tracking is
//! exact (e.g. `X·Z = i³·Y = −i·Y`), which the dense-matrix oracle in
//! [`crate::cmat`] cross-checks; syndrome decoding itself only ever looks
//! at the bit vectors.

use num_complex::Complex;
use thiserror::Error;

use crate::cmat::{kron, ComplexMatrix};
use crate::Real;

/// Qubit cap for a single packed word.
pub const MAX_QUBITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("empty Pauli string")]
    EmptyString,
    #[error("bad character {ch:?} at position {pos} (alphabet IXYZ)")]
    BadCharacter { ch: char, pos: usize },
    #[error("Pauli string length {0} exceeds {MAX_QUBITS} qubits")]
    TooManyQubits(usize),
    #[error("length mismatch: {0} vs {1} qubits")]
    LengthMismatch(usize, usize),
    #[error("line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("generators {0} and {1} anticommute")]
    CommutationViolation(usize, usize),
    #[error("generators are dependent over GF(2) (generator {0} is in the span of the others)")]
    DependentGenerators(usize),
    #[error("expected {expected} {what}, got {got}")]
    WrongCount {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("logical pair {0}: X and Z must anticommute with each other and commute with everything else")]
    BadLogicalPair(usize),
    #[error("logical operator {index} does not commute with generator {generator}")]
    LogicalGeneratorClash { index: usize, generator: usize },
    #[error("invalid parameters: n={n} k={k} (need 0 < n ≤ {MAX_QUBITS}, k ≤ n)")]
    BadParameters { n: usize, k: usize },
}

/// Single-qubit Pauli letter. The `X < Y < Z` order is the decoder
/// tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ERRORS: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    pub fn from_char(ch: char) -> Option<Self> {
        match ch {
            'I' => Some(PauliLetter::I),
            'X' => Some(PauliLetter::X),
            'Y' => Some(PauliLetter::Y),
            'Z' => Some(PauliLetter::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

/// Pauli string `i^phase_exp · Π_q W_q` on `n ≤ 64` qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x_bits: u64,
    z_bits: u64,
    phase_exp: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_QUBITS);
        Self {
            n,
            x_bits: 0,
            z_bits: 0,
            phase_exp: 0,
        }
    }

    pub fn from_bits(n: usize, x_bits: u64, z_bits: u64, phase_exp: u8) -> Self {
        assert!(n >= 1 && n <= MAX_QUBITS);
        let mask = mask_n(n);
        Self {
            n,
            x_bits: x_bits & mask,
            z_bits: z_bits & mask,
            phase_exp: phase_exp & 3,
        }
    }

    /// Single-letter error on one qubit.
    pub fn single(n: usize, qubit: usize, letter: PauliLetter) -> Self {
        assert!(qubit < n);
        let (x, z) = letter.bits();
        Self::from_bits(
            n,
            (x as u64) << qubit,
            (z as u64) << qubit,
            0,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_bits(&self) -> u64 {
        self.x_bits
    }

    pub fn z_bits(&self) -> u64 {
        self.z_bits
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        let x = (self.x_bits >> qubit) & 1 == 1;
        let z = (self.z_bits >> qubit) & 1 == 1;
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        (self.x_bits | self.z_bits).count_ones() as usize
    }

    /// True when both bit vectors are zero (phase ignored).
    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x_bits == 0 && self.z_bits == 0
    }

    /// Symplectic vector, x bits low, z bits high.
    pub fn symplectic(&self) -> u128 {
        (self.x_bits as u128) | ((self.z_bits as u128) << MAX_QUBITS)
    }

    pub fn commutes(&self, other: &Self) -> Result<bool, CodeError> {
        if self.n != other.n {
            return Err(CodeError::LengthMismatch(self.n, other.n));
        }
        let form = (self.x_bits & other.z_bits) ^ (self.z_bits & other.x_bits);
        Ok(form.count_ones() % 2 == 0)
    }

    /// Phase-exact product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, CodeError> {
        if self.n != other.n {
            return Err(CodeError::LengthMismatch(self.n, other.n));
        }
        let (a, b) = (self.x_bits, self.z_bits);
        let (c, d) = (other.x_bits, other.z_bits);
        // Per-qubit contribution of the letter product to the i-exponent:
        // +1 on the cyclic products (XY, YZ, ZX), −1 on the anticyclic ones.
        let pos = (a & b & d & !c) | (a & !b & d & c) | (!a & b & c & !d);
        let neg = (a & b & c & !d) | (a & !b & d & !c) | (!a & b & c & d);
        let g = (pos.count_ones() as i64 - neg.count_ones() as i64).rem_euclid(4) as u8;
        Ok(Self {
            n: self.n,
            x_bits: a ^ c,
            z_bits: b ^ d,
            phase_exp: (self.phase_exp + other.phase_exp + g) & 3,
        })
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.phase_exp {
            0 => {}
            1 => write!(f, "i·")?,
            2 => write!(f, "-")?,
            _ => write!(f, "-i·")?,
        }
        for q in 0..self.n {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

fn mask_n(n: usize) -> u64 {
    if n == MAX_QUBITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Parses a Pauli string over the alphabet `IXYZ`, leftmost letter on
/// qubit 0.
pub fn parse_pauli(text: &str) -> Result<PauliString, CodeError> {
    if text.is_empty() {
        return Err(CodeError::EmptyString);
    }
    let len = text.chars().count();
    if len > MAX_QUBITS {
        return Err(CodeError::TooManyQubits(len));
    }
    let mut x_bits = 0u64;
    let mut z_bits = 0u64;
    for (pos, ch) in text.chars().enumerate() {
        let letter = PauliLetter::from_char(ch).ok_or(CodeError::BadCharacter { ch, pos })?;
        let (x, z) = letter.bits();
        x_bits |= (x as u64) << pos;
        z_bits |= (z as u64) << pos;
    }
    Ok(PauliString::from_bits(len, x_bits, z_bits, 0))
}

/// Dense matrix realization `i^e · L_{n−1} ⊗ … ⊗ L_0` (qubit 0 least
/// significant). Intended for oracle checks on ≤ 8 qubits.
pub fn pauli_to_matrix<T: Real>(p: &PauliString) -> ComplexMatrix<T> {
    let one = Complex::new(T::one(), T::zero());
    let mut acc = ComplexMatrix::from_rows(1, 1, vec![one]).unwrap();
    for q in (0..p.n()).rev() {
        let letter = match p.letter(q) {
            PauliLetter::I => ComplexMatrix::identity(2),
            PauliLetter::X => crate::cmat::sigma_x(),
            PauliLetter::Y => crate::cmat::sigma_y(),
            PauliLetter::Z => crate::cmat::sigma_z(),
        };
        acc = kron(&acc, &letter);
    }
    let phase = match p.phase_exp() {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    };
    acc.scale(phase)
}

// ---------------------------------------------------------------------------
// GF(2) symplectic linear algebra
// ---------------------------------------------------------------------------

/// Symplectic pairing of two packed vectors: 1 iff the corresponding
/// Paulis anticommute.
pub fn symplectic_pairing(u: u128, v: u128) -> u8 {
    let ux = u as u64;
    let uz = (u >> MAX_QUBITS) as u64;
    let vx = v as u64;
    let vz = (v >> MAX_QUBITS) as u64;
    (((ux & vz) ^ (uz & vx)).count_ones() & 1) as u8
}

/// Mutually reduced GF(2) row basis over 128-bit vectors.
#[derive(Debug, Clone, Default)]
pub struct Gf2Basis {
    rows: Vec<(u128, u32)>,
}

impl Gf2Basis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; zero result means membership.
    pub fn reduce(&self, mut v: u128) -> u128 {
        for &(row, lead) in &self.rows {
            if (v >> lead) & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: u128) -> bool {
        self.reduce(v) == 0
    }

    /// Inserts `v` if independent; returns false when already in the span.
    pub fn insert(&mut self, v: u128) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let lead = 127 - v.leading_zeros();
        for (row, _) in self.rows.iter_mut() {
            if (*row >> lead) & 1 == 1 {
                *row ^= v;
            }
        }
        self.rows.push((v, lead));
        true
    }
}

// ---------------------------------------------------------------------------
// Stabilizer codes
// ---------------------------------------------------------------------------

/// Validated `[[n, k, d]]` stabilizer code. Immutable after construction;
/// the reduced GF(2) span of the generators is precomputed for residual
/// classification.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    n: usize,
    k: usize,
    d_claimed: usize,
    generators: Vec<PauliString>,
    logical_x: Vec<PauliString>,
    logical_z: Vec<PauliString>,
    span: Gf2Basis,
}

fn validate_generators(n: usize, k: usize, generators: &[PauliString]) -> Result<Gf2Basis, CodeError> {
    if n == 0 || n > MAX_QUBITS || k > n {
        return Err(CodeError::BadParameters { n, k });
    }
    if generators.len() != n - k {
        return Err(CodeError::WrongCount {
            what: "generators",
            expected: n - k,
            got: generators.len(),
        });
    }
    for (i, g) in generators.iter().enumerate() {
        if g.n() != n {
            return Err(CodeError::LengthMismatch(g.n(), n));
        }
        for (j, h) in generators.iter().enumerate().skip(i + 1) {
            if !g.commutes(h)? {
                return Err(CodeError::CommutationViolation(i, j));
            }
        }
    }
    let mut span = Gf2Basis::new();
    for (i, g) in generators.iter().enumerate() {
        if !span.insert(g.symplectic()) {
            return Err(CodeError::DependentGenerators(i));
        }
    }
    Ok(span)
}

fn validate_logicals(
    n: usize,
    generators: &[PauliString],
    lx: &[PauliString],
    lz: &[PauliString],
    k: usize,
) -> Result<(), CodeError> {
    if lx.len() != k {
        return Err(CodeError::WrongCount {
            what: "logical X operators",
            expected: k,
            got: lx.len(),
        });
    }
    if lz.len() != k {
        return Err(CodeError::WrongCount {
            what: "logical Z operators",
            expected: k,
            got: lz.len(),
        });
    }
    for (idx, l) in lx.iter().chain(lz.iter()).enumerate() {
        if l.n() != n {
            return Err(CodeError::LengthMismatch(l.n(), n));
        }
        for (gi, g) in generators.iter().enumerate() {
            if !l.commutes(g)? {
                return Err(CodeError::LogicalGeneratorClash {
                    index: idx,
                    generator: gi,
                });
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            let want_anticommute = i == j;
            if lx[i].commutes(&lz[j])? == want_anticommute {
                return Err(CodeError::BadLogicalPair(i));
            }
        }
        for j in (i + 1)..k {
            if !lx[i].commutes(&lx[j])? || !lz[i].commutes(&lz[j])? {
                return Err(CodeError::BadLogicalPair(i));
            }
        }
    }
    Ok(())
}

impl StabilizerCode {
    pub fn new(
        n: usize,
        k: usize,
        d_claimed: usize,
        generators: Vec<PauliString>,
        logicals: Option<(Vec<PauliString>, Vec<PauliString>)>,
    ) -> Result<Self, CodeError> {
        let span = validate_generators(n, k, &generators)?;
        let (logical_x, logical_z) = match logicals {
            Some((lx, lz)) => {
                validate_logicals(n, &generators, &lx, &lz, k)?;
                (lx, lz)
            }
            None => (Vec::new(), Vec::new()),
        };
        Ok(Self {
            n,
            k,
            d_claimed,
            generators,
            logical_x,
            logical_z,
            span,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d_claimed(&self) -> usize {
        self.d_claimed
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn has_logicals(&self) -> bool {
        !self.logical_x.is_empty()
    }

    pub fn logical_x(&self) -> &[PauliString] {
        &self.logical_x
    }

    pub fn logical_z(&self) -> &[PauliString] {
        &self.logical_z
    }

    /// Reduced GF(2) span of the generators (bit vectors only).
    pub fn stabilizer_span(&self) -> &Gf2Basis {
        &self.span
    }

    /// True when the bit vectors of `p` lie in the generator span.
    pub fn in_stabilizer_span(&self, p: &PauliString) -> bool {
        self.span.contains(p.symplectic())
    }

    /// Completes the code with algorithmically derived logical operators
    /// (symplectic Gram–Schmidt on the centralizer modulo the span).
    /// Existing logicals are kept.
    pub fn with_derived_logicals(self) -> Result<Self, CodeError> {
        if self.has_logicals() {
            return Ok(self);
        }
        let (lx, lz) = derive_logicals(&self)?;
        Self::new(
            self.n,
            self.k,
            self.d_claimed,
            self.generators,
            Some((lx, lz)),
        )
    }
}

/// Re-runs every structural invariant and reports the first violation.
pub fn check_generators(code: &StabilizerCode) -> Result<(), CodeError> {
    validate_generators(code.n(), code.k(), code.generators())?;
    if code.has_logicals() {
        validate_logicals(
            code.n(),
            code.generators(),
            code.logical_x(),
            code.logical_z(),
            code.k(),
        )?;
    }
    Ok(())
}

/// Derives one symplectically paired set of logical operators from the
/// generators: a GF(2) basis of the centralizer is reduced modulo the
/// stabilizer span and paired so that `X̄_i` anticommutes only with `Z̄_i`.
pub fn derive_logicals(
    code: &StabilizerCode,
) -> Result<(Vec<PauliString>, Vec<PauliString>), CodeError> {
    let n = code.n();
    let k = code.k();
    // Functionals of the syndrome map: v anticommutes with g iff
    // parity((g.z | g.x<<64) & v) is odd.
    let functionals: Vec<u128> = code
        .generators()
        .iter()
        .map(|g| (g.z_bits() as u128) | ((g.x_bits() as u128) << MAX_QUBITS))
        .collect();

    // Null space of the functional matrix over the 2n coordinates.
    let cols: Vec<usize> = (0..n).chain(MAX_QUBITS..MAX_QUBITS + n).collect();
    let mut rows = functionals;
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col index into cols)
    let mut r = 0;
    for (ci, &col) in cols.iter().enumerate() {
        if r >= rows.len() {
            break;
        }
        if let Some(pr) = (r..rows.len()).find(|&i| (rows[i] >> col) & 1 == 1) {
            rows.swap(r, pr);
            let pivot_row = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && (*row >> col) & 1 == 1 {
                    *row ^= pivot_row;
                }
            }
            pivots.push((r, ci));
            r += 1;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, ci)| ci).collect();
    let mut kernel: Vec<u128> = Vec::new();
    for free_ci in 0..cols.len() {
        if pivot_cols.contains(&free_ci) {
            continue;
        }
        let mut v: u128 = 1 << cols[free_ci];
        for &(row, ci) in &pivots {
            if (rows[row] >> cols[free_ci]) & 1 == 1 {
                v ^= 1 << cols[ci];
            }
        }
        kernel.push(v);
    }

    // Quotient by the stabilizer span.
    let mut seen = code.stabilizer_span().clone();
    let mut pool: Vec<u128> = Vec::new();
    for v in kernel {
        let reduced = seen.reduce(v);
        if seen.insert(reduced) {
            pool.push(reduced);
        }
    }
    if pool.len() != 2 * k {
        return Err(CodeError::WrongCount {
            what: "logical degrees of freedom",
            expected: 2 * k,
            got: pool.len(),
        });
    }

    // Symplectic Gram–Schmidt pairing.
    let mut lx = Vec::with_capacity(k);
    let mut lz = Vec::with_capacity(k);
    while let Some(a) = pool.pop() {
        let partner = pool
            .iter()
            .position(|&b| symplectic_pairing(a, b) == 1)
            .expect("symplectic form is nondegenerate on the quotient");
        let b = pool.swap_remove(partner);
        for c in pool.iter_mut() {
            if symplectic_pairing(*c, b) == 1 {
                *c ^= a;
            }
            if symplectic_pairing(*c, a) == 1 {
                *c ^= b;
            }
        }
        lx.push(PauliString::from_bits(
            n,
            a as u64,
            (a >> MAX_QUBITS) as u64,
            0,
        ));
        lz.push(PauliString::from_bits(
            n,
            b as u64,
            (b >> MAX_QUBITS) as u64,
            0,
        ));
    }
    Ok((lx, lz))
}

// ---------------------------------------------------------------------------
// Built-in codes
// ---------------------------------------------------------------------------

fn code_from_strs(
    n: usize,
    k: usize,
    d: usize,
    gens: &[&str],
    lx: &[&str],
    lz: &[&str],
) -> StabilizerCode {
    let generators = gens.iter().map(|s| parse_pauli(s).unwrap()).collect();
    let lx: Vec<_> = lx.iter().map(|s| parse_pauli(s).unwrap()).collect();
    let lz: Vec<_> = lz.iter().map(|s| parse_pauli(s).unwrap()).collect();
    let logicals = if lx.is_empty() { None } else { Some((lx, lz)) };
    StabilizerCode::new(n, k, d, generators, logicals).expect("built-in code is valid")
}

/// Steane `[[7,1,3]]`: three X-type and three Z-type Hamming-pattern
/// generators.
pub fn builtin_steane() -> StabilizerCode {
    code_from_strs(
        7,
        1,
        3,
        &[
            "IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ",
        ],
        &["XXXXXXX"],
        &["ZZZZZZZ"],
    )
}

/// Shor `[[9,1,3]]`: six ZZ-pair and two X-block generators. The weight-3
/// logical representatives are used (`X̄ = Z₀Z₃Z₆`, `Z̄ = X₀X₁X₂`).
pub fn builtin_shor() -> StabilizerCode {
    code_from_strs(
        9,
        1,
        3,
        &[
            "ZZIIIIIII",
            "IZZIIIIII",
            "IIIZZIIII",
            "IIIIZZIII",
            "IIIIIIZZI",
            "IIIIIIIZZ",
            "XXXXXXIII",
            "IIIXXXXXX",
        ],
        &["ZIIZIIZII"],
        &["XXXIIIIII"],
    )
}

// ---------------------------------------------------------------------------
// Code file format (.stab)
// ---------------------------------------------------------------------------

/// Parses the line-oriented `.stab` format:
///
/// ```text
/// # comment, blank lines ignored
/// n=<int> k=<int> d=<int>
/// <n−k generator strings over IXYZ, length n>
/// LX <string>   (optional, k lines)
/// LZ <string>   (optional, k lines, only after all LX lines)
/// ```
///
/// Trailing garbage and wrong lengths are rejected with line numbers.
pub fn parse_code_file(text: &str) -> Result<StabilizerCode, CodeError> {
    let mut content: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        content.push((i + 1, line));
    }
    let mut it = content.into_iter();

    let (header_line, header) = it.next().ok_or(CodeError::ParseError {
        line: 0,
        msg: "missing header line `n=<int> k=<int> d=<int>`".into(),
    })?;
    let mut n = None;
    let mut k = None;
    let mut d = None;
    for token in header.split_whitespace() {
        let (key, value) = token.split_once('=').ok_or_else(|| CodeError::ParseError {
            line: header_line,
            msg: format!("bad header token {token:?}"),
        })?;
        let value: usize = value.parse().map_err(|_| CodeError::ParseError {
            line: header_line,
            msg: format!("bad integer in {token:?}"),
        })?;
        match key {
            "n" => n = Some(value),
            "k" => k = Some(value),
            "d" => d = Some(value),
            _ => {
                return Err(CodeError::ParseError {
                    line: header_line,
                    msg: format!("unknown header key {key:?}"),
                })
            }
        }
    }
    let (n, k, d) = match (n, k, d) {
        (Some(n), Some(k), Some(d)) => (n, k, d),
        _ => {
            return Err(CodeError::ParseError {
                line: header_line,
                msg: "header must define n, k and d".into(),
            })
        }
    };
    if n == 0 || n > MAX_QUBITS || k > n {
        return Err(CodeError::ParseError {
            line: header_line,
            msg: format!("invalid parameters n={n} k={k}"),
        });
    }

    let parse_at = |line: usize, s: &str| -> Result<PauliString, CodeError> {
        let p = parse_pauli(s).map_err(|e| CodeError::ParseError {
            line,
            msg: e.to_string(),
        })?;
        if p.n() != n {
            return Err(CodeError::ParseError {
                line,
                msg: format!("expected length {n}, got {}", p.n()),
            });
        }
        Ok(p)
    };

    let mut generators = Vec::with_capacity(n - k);
    for _ in 0..(n - k) {
        let (line, s) = it.next().ok_or(CodeError::WrongCount {
            what: "generators",
            expected: n - k,
            got: generators.len(),
        })?;
        if s.starts_with("LX ") || s.starts_with("LZ ") {
            return Err(CodeError::ParseError {
                line,
                msg: format!("expected a generator, found logical line {s:?}"),
            });
        }
        generators.push(parse_at(line, s)?);
    }

    let mut lx = Vec::new();
    let mut lz = Vec::new();
    let mut rest = it.peekable();
    if rest.peek().is_some() {
        for _ in 0..k {
            let (line, s) = rest.next().ok_or(CodeError::ParseError {
                line: 0,
                msg: format!("expected {k} LX lines"),
            })?;
            let body = s.strip_prefix("LX ").ok_or_else(|| CodeError::ParseError {
                line,
                msg: format!("expected `LX <string>`, got {s:?}"),
            })?;
            lx.push(parse_at(line, body.trim())?);
        }
        for _ in 0..k {
            let (line, s) = rest.next().ok_or(CodeError::ParseError {
                line: 0,
                msg: format!("expected {k} LZ lines"),
            })?;
            let body = s.strip_prefix("LZ ").ok_or_else(|| CodeError::ParseError {
                line,
                msg: format!("expected `LZ <string>`, got {s:?}"),
            })?;
            lz.push(parse_at(line, body.trim())?);
        }
    }
    if let Some((line, s)) = rest.next() {
        return Err(CodeError::ParseError {
            line,
            msg: format!("trailing garbage {s:?}"),
        });
    }

    let logicals = if lx.is_empty() { None } else { Some((lx, lz)) };
    StabilizerCode::new(n, k, d, generators, logicals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmat::matmul;

    #[test]
    fn parse_basics() {
        let p = parse_pauli("XZ").unwrap();
        assert_eq!(p.x_bits(), 0b01);
        assert_eq!(p.z_bits(), 0b10);
        let y = parse_pauli("Y").unwrap();
        assert_eq!((y.x_bits(), y.z_bits()), (1, 1));
        assert_eq!(
            parse_pauli("XQ"),
            Err(CodeError::BadCharacter { ch: 'Q', pos: 1 })
        );
        assert_eq!(parse_pauli(""), Err(CodeError::EmptyString));
        assert!(matches!(
            parse_pauli(&"X".repeat(65)),
            Err(CodeError::TooManyQubits(65))
        ));
    }

    #[test]
    fn weight_and_commutation() {
        assert_eq!(parse_pauli("IXYI").unwrap().weight(), 2);
        let x = parse_pauli("X").unwrap();
        let z = parse_pauli("Z").unwrap();
        assert!(!x.commutes(&z).unwrap());
        assert!(x.commutes(&x).unwrap());
    }

    #[test]
    fn multiply_phase() {
        let x = parse_pauli("X").unwrap();
        let z = parse_pauli("Z").unwrap();
        let xz = x.multiply(&z).unwrap();
        // XZ = −i·Y
        assert_eq!((xz.x_bits(), xz.z_bits(), xz.phase_exp()), (1, 1, 3));
        let zx = z.multiply(&x).unwrap();
        assert_eq!(zx.phase_exp(), 1);
    }

    #[test]
    fn involution_up_to_phase() {
        for s in ["X", "Y", "Z", "XYZI", "YYZX"] {
            let p = parse_pauli(s).unwrap();
            let sq = p.multiply(&p).unwrap();
            assert!(sq.is_identity_up_to_phase(), "{s}");
            assert_eq!(sq.phase_exp(), 0, "Pauli letters are involutions: {s}");
        }
    }

    #[test]
    fn multiply_matches_matrix_oracle_two_qubits() {
        // All 256 ordered pairs of two-qubit Paulis, phase-exact.
        let letters = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];
        let mut paulis = Vec::new();
        for &a in &letters {
            for &b in &letters {
                let s: String = [a.as_char(), b.as_char()].iter().collect();
                paulis.push(parse_pauli(&s).unwrap());
            }
        }
        for p in &paulis {
            for q in &paulis {
                let prod = p.multiply(q).unwrap();
                let lhs = matmul(&pauli_to_matrix::<f64>(p), &pauli_to_matrix::<f64>(q)).unwrap();
                let rhs = pauli_to_matrix::<f64>(&prod);
                assert!(
                    lhs.sub(&rhs).unwrap().max_abs_entry() < 1e-14,
                    "{p} * {q} = {prod}"
                );
            }
        }
    }

    #[test]
    fn commutes_matches_matrix_oracle() {
        let letters = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];
        for &a in &letters {
            for &b in &letters {
                let p = PauliString::single(1, 0, a);
                let q = PauliString::single(1, 0, b);
                let pm = pauli_to_matrix::<f64>(&p);
                let qm = pauli_to_matrix::<f64>(&q);
                let comm = matmul(&pm, &qm)
                    .unwrap()
                    .sub(&matmul(&qm, &pm).unwrap())
                    .unwrap()
                    .max_abs_entry();
                assert_eq!(p.commutes(&q).unwrap(), comm < 1e-12);
            }
        }
    }

    #[test]
    fn builtins_are_valid() {
        let steane = builtin_steane();
        assert_eq!((steane.n(), steane.k()), (7, 1));
        assert_eq!(steane.generators().len(), 6);
        assert!(check_generators(&steane).is_ok());

        let shor = builtin_shor();
        assert_eq!((shor.n(), shor.k()), (9, 1));
        assert_eq!(shor.generators().len(), 8);
        assert!(check_generators(&shor).is_ok());
    }

    #[test]
    fn validation_rejects_bad_sets() {
        // XI and ZI anticommute on qubit 0.
        let gens = vec![parse_pauli("XI").unwrap(), parse_pauli("ZI").unwrap()];
        assert_eq!(
            StabilizerCode::new(2, 0, 1, gens, None).unwrap_err(),
            CodeError::CommutationViolation(0, 1)
        );

        // XX and ZZ commute.
        let gens = vec![parse_pauli("XX").unwrap(), parse_pauli("ZZ").unwrap()];
        assert!(StabilizerCode::new(2, 0, 2, gens, None).is_ok());

        // Dependent set: third generator is the product of the others.
        let gens = vec![
            parse_pauli("XXI").unwrap(),
            parse_pauli("IXX").unwrap(),
            parse_pauli("XIX").unwrap(),
        ];
        assert_eq!(
            StabilizerCode::new(3, 0, 1, gens, None).unwrap_err(),
            CodeError::DependentGenerators(2)
        );
    }

    #[test]
    fn code_file_roundtrip_and_errors() {
        let text = "\
# three-qubit bit-flip code
n=3 k=1 d=1

ZZI
IZZ
LX XXX
LZ ZII
";
        let code = parse_code_file(text).unwrap();
        assert_eq!((code.n(), code.k(), code.d_claimed()), (3, 1, 1));
        assert!(code.has_logicals());

        let bad_len = "n=3 k=1 d=1\nZZ\nIZZ\n";
        assert!(matches!(
            parse_code_file(bad_len),
            Err(CodeError::ParseError { line: 2, .. })
        ));

        let trailing = "n=3 k=1 d=1\nZZI\nIZZ\nXXX\n";
        assert!(matches!(
            parse_code_file(trailing),
            Err(CodeError::ParseError { line: 4, .. })
        ));

        let anticommute = "n=2 k=0 d=1\nXI\nZI\n";
        assert_eq!(
            parse_code_file(anticommute).unwrap_err(),
            CodeError::CommutationViolation(0, 1)
        );
    }

    #[test]
    fn eight_three_shell_parses() {
        let text = "\
n=8 k=3 d=3
XXXXXXXX
ZZZZZZZZ
IXIXYZYZ
IXZYIXZY
IYXZXZIY
";
        let code = parse_code_file(text).unwrap();
        assert_eq!((code.n(), code.k(), code.d_claimed()), (8, 3, 3));
        assert_eq!(code.generators().len(), 5);
        assert!(!code.has_logicals());
    }

    #[test]
    fn derived_logicals_are_valid() {
        for code in [builtin_steane(), builtin_shor()] {
            let bare = StabilizerCode::new(
                code.n(),
                code.k(),
                code.d_claimed(),
                code.generators().to_vec(),
                None,
            )
            .unwrap();
            let completed = bare.with_derived_logicals().unwrap();
            assert!(completed.has_logicals());
            assert!(check_generators(&completed).is_ok());
        }

        // k = 3 exercise: the [[8,3,3]] shell.
        let text = "n=8 k=3 d=3\nXXXXXXXX\nZZZZZZZZ\nIXIXYZYZ\nIXZYIXZY\nIYXZXZIY\n";
        let code = parse_code_file(text).unwrap().with_derived_logicals().unwrap();
        assert_eq!(code.logical_x().len(), 3);
        assert!(check_generators(&code).is_ok());
    }

    #[test]
    fn span_membership() {
        let shor = builtin_shor();
        let z0z1 = parse_pauli("ZZIIIIIII").unwrap();
        assert!(shor.in_stabilizer_span(&z0z1));
        let z0 = parse_pauli("ZIIIIIIII").unwrap();
        assert!(!shor.in_stabilizer_span(&z0));
    }
}
