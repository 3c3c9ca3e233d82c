//! (Quasi-)orthogonal design matrices: Kronecker expansion, Alamouti
//! blocks, orthogonality metrics, and codeword minimum distance.
//!
//! A design is a `t_slots × n_elements` grid of complex or quaternion
//! symbols. Quaternion-entry designs are measured through their complex
//! expansion — each entry embedded as its 2×2 matrix via
//! [`crate::quat::quaternion_to_matrix`] — so one metric implementation
//! serves both scalar fields. Inner products are conjugate-linear in the
//! first argument.

use num_complex::Complex;
use thiserror::Error;

use crate::cmat::{matmul, ComplexMatrix};
use crate::quat::{quaternion_to_matrix, Quaternion};
use crate::Real;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("orthogonality degree needs at least 2 columns, got {0}")]
    TooFewColumns(usize),
    #[error("codeword length mismatch: expected {expected}, got {got} at index {index}")]
    LengthMismatch {
        expected: usize,
        got: usize,
        index: usize,
    },
    #[error("minimum distance needs at least 2 codewords, got {0}")]
    TooFewCodewords(usize),
    #[error("pattern references symbol {index} but only {count} symbols given")]
    BadSymbolIndex { index: usize, count: usize },
    #[error("entry grid has {got} entries, expected {expected}")]
    BadGrid { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Entries<T> {
    Complex(Vec<Complex<T>>),
    Quaternion(Vec<Quaternion<T>>),
}

/// Block-code design matrix: rows are time slots, columns are
/// qubits/antennas.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignMatrix<T> {
    t_slots: usize,
    n_elements: usize,
    entries: Entries<T>,
}

/// One cell of an explicit sign/conjugation pattern grid: which symbol it
/// carries and whether it is conjugated and/or negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternEntry {
    pub symbol: usize,
    pub conjugate: bool,
    pub negate: bool,
}

impl PatternEntry {
    pub fn plain(symbol: usize) -> Self {
        Self {
            symbol,
            conjugate: false,
            negate: false,
        }
    }
}

impl<T: Real> DesignMatrix<T> {
    pub fn from_complex(
        t_slots: usize,
        n_elements: usize,
        entries: Vec<Complex<T>>,
    ) -> Result<Self, DesignError> {
        if entries.len() != t_slots * n_elements {
            return Err(DesignError::BadGrid {
                expected: t_slots * n_elements,
                got: entries.len(),
            });
        }
        Ok(Self {
            t_slots,
            n_elements,
            entries: Entries::Complex(entries),
        })
    }

    pub fn from_quaternions(
        t_slots: usize,
        n_elements: usize,
        entries: Vec<Quaternion<T>>,
    ) -> Result<Self, DesignError> {
        if entries.len() != t_slots * n_elements {
            return Err(DesignError::BadGrid {
                expected: t_slots * n_elements,
                got: entries.len(),
            });
        }
        Ok(Self {
            t_slots,
            n_elements,
            entries: Entries::Quaternion(entries),
        })
    }

    /// Builds a complex design from a symbol list and an explicit pattern
    /// grid (row-major, `t_slots × n_elements`). The Alamouti block is the
    /// canonical 2×2 instance of such a grid.
    pub fn from_pattern(
        t_slots: usize,
        n_elements: usize,
        symbols: &[Complex<T>],
        pattern: &[PatternEntry],
    ) -> Result<Self, DesignError> {
        if pattern.len() != t_slots * n_elements {
            return Err(DesignError::BadGrid {
                expected: t_slots * n_elements,
                got: pattern.len(),
            });
        }
        let mut entries = Vec::with_capacity(pattern.len());
        for p in pattern {
            let s = *symbols.get(p.symbol).ok_or(DesignError::BadSymbolIndex {
                index: p.symbol,
                count: symbols.len(),
            })?;
            let s = if p.conjugate { s.conj() } else { s };
            let s = if p.negate { -s } else { s };
            entries.push(s);
        }
        Self::from_complex(t_slots, n_elements, entries)
    }

    pub fn complex_identity(dim: usize) -> Self {
        let m = ComplexMatrix::<T>::identity(dim);
        Self::from_complex(dim, dim, m.data().to_vec()).unwrap()
    }

    pub fn t_slots(&self) -> usize {
        self.t_slots
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    pub fn is_quaternion(&self) -> bool {
        matches!(self.entries, Entries::Quaternion(_))
    }

    /// Complex realization: identity on complex designs, per-entry 2×2
    /// embedding on quaternion designs (doubling both dimensions).
    pub fn complex_form(&self) -> ComplexMatrix<T> {
        match &self.entries {
            Entries::Complex(data) => {
                ComplexMatrix::from_rows(self.t_slots, self.n_elements, data.clone())
                    .expect("grid validated at construction")
            }
            Entries::Quaternion(data) => {
                let mut m = ComplexMatrix::zeros(2 * self.t_slots, 2 * self.n_elements);
                for r in 0..self.t_slots {
                    for c in 0..self.n_elements {
                        let q = quaternion_to_matrix(&data[r * self.n_elements + c]);
                        m.set(2 * r, 2 * c, q[0]);
                        m.set(2 * r, 2 * c + 1, q[1]);
                        m.set(2 * r + 1, 2 * c, q[2]);
                        m.set(2 * r + 1, 2 * c + 1, q[3]);
                    }
                }
                m
            }
        }
    }
}

/// Kronecker expansion `Q ⊗ I_n`; dimensions multiply and the entry kind
/// is preserved.
pub fn kron_expand<T: Real>(q: &DesignMatrix<T>, n: usize) -> DesignMatrix<T> {
    assert!(n >= 1, "expansion order must be at least 1");
    let (t, m) = (q.t_slots, q.n_elements);
    match &q.entries {
        Entries::Complex(data) => {
            let zero = Complex::new(T::zero(), T::zero());
            let mut out = vec![zero; t * n * m * n];
            for r in 0..t {
                for c in 0..m {
                    for d in 0..n {
                        out[(r * n + d) * (m * n) + (c * n + d)] = data[r * m + c];
                    }
                }
            }
            DesignMatrix::from_complex(t * n, m * n, out).unwrap()
        }
        Entries::Quaternion(data) => {
            let mut out = vec![Quaternion::zero(); t * n * m * n];
            for r in 0..t {
                for c in 0..m {
                    for d in 0..n {
                        out[(r * n + d) * (m * n) + (c * n + d)] = data[r * m + c];
                    }
                }
            }
            DesignMatrix::from_quaternions(t * n, m * n, out).unwrap()
        }
    }
}

/// 2×2 Alamouti block `[[s1, s2], [−s2*, s1*]]`: orthogonal columns with
/// `C†C = (|s1|²+|s2|²)·I`.
pub fn alamouti_block<T: Real>(s1: Complex<T>, s2: Complex<T>) -> DesignMatrix<T> {
    DesignMatrix::from_complex(2, 2, vec![s1, s2, -s2.conj(), s1.conj()]).unwrap()
}

/// Mean of `|⟨c_a, c_b⟩|²` over ordered pairs of distinct columns of the
/// complex form; zero iff the columns are mutually orthogonal.
///
/// The published formula indexes the sum by time slots while calling the
/// bracket a column inner product; when the matrix is not square those
/// conflict. Normalizing over distinct column pairs is the reading used
/// here.
pub fn orthogonality_degree<T: Real>(design: &DesignMatrix<T>) -> Result<T, DesignError> {
    if design.n_elements < 2 {
        return Err(DesignError::TooFewColumns(design.n_elements));
    }
    let cf = design.complex_form();
    let gram = matmul(&cf.dagger(), &cf).expect("dimensions agree by construction");
    let m = gram.rows();
    let mut acc = T::zero();
    for a in 0..m {
        for b in 0..m {
            if a != b {
                acc = acc + gram.get(a, b).norm_sqr();
            }
        }
    }
    let pairs = T::from_usize(m * (m - 1)).unwrap();
    Ok(acc / pairs)
}

/// Max-absolute entry of `C†C − I` on the complex form; zero for exactly
/// unitary-column designs.
pub fn quasi_orthogonality_deviation<T: Real>(design: &DesignMatrix<T>) -> T {
    let cf = design.complex_form();
    let gram = matmul(&cf.dagger(), &cf).expect("dimensions agree by construction");
    let id = ComplexMatrix::identity(gram.rows());
    gram.sub(&id).expect("square").max_abs_entry()
}

/// Minimum pairwise Hamming distance over all distinct codeword pairs.
pub fn min_distance(codewords: &[&str]) -> Result<usize, DesignError> {
    if codewords.len() < 2 {
        return Err(DesignError::TooFewCodewords(codewords.len()));
    }
    let symbols: Vec<Vec<char>> = codewords.iter().map(|w| w.chars().collect()).collect();
    let expected = symbols[0].len();
    for (index, w) in symbols.iter().enumerate() {
        if w.len() != expected {
            return Err(DesignError::LengthMismatch {
                expected,
                got: w.len(),
                index,
            });
        }
    }
    let mut best = usize::MAX;
    for a in 0..symbols.len() {
        for b in (a + 1)..symbols.len() {
            let d = symbols[a]
                .iter()
                .zip(&symbols[b])
                .filter(|(x, y)| x != y)
                .count();
            best = best.min(d);
        }
    }
    Ok(best)
}
