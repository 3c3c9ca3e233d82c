//! Z1–Z4 scenario definitions, published-table replication, Monte Carlo
//! experiments, the decoder scaling experiment, and CSV/SVG emission.
//!
//! Replication and Monte Carlo are deliberately separate surfaces. The
//! replication rows come from closed forms fitted to the published tables
//! (which book-keep corrected counts above 100% for three of the four
//! scenarios); the Monte Carlo runs are the physical counterpart, counting
//! residual classes of actual decoded errors. The two are never merged.
//!
//! Monte Carlo determinism: every trial derives its error from
//! `(run_seed, trial_index)` alone, trials may run on any number of rayon
//! threads, and aggregation folds per-trial records in trial order, so a
//! scenario JSON maps to byte-identical CSV output on every run.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::channels::{sample_error, ChannelError, ErrorModel, TrialSeed};
use crate::cmat::StateVector;
use crate::decode::{
    build_lookup_complete, decode_lookup, decode_search, encode_state, residual_class, syndrome,
    apply_pauli, DecodeError, ResidualClass, SyndromeTable,
};
use crate::metrics::{fidelity_pure, fit_tcorr, ComplexityModel, MetricsError};
use crate::pauli::{check_generators, parse_code_file, CodeError, StabilizerCode};

/// Candidate cap for lookup-table construction; codes past it fall back
/// to the search decoder.
pub const LOOKUP_BUDGET: u128 = 2_000_000;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("scenario {label}: code is [[{code_n},{code_k}]] but scenario wants [[{want_n},{want_k}]]")]
    CodeMismatch {
        label: String,
        code_n: usize,
        code_k: usize,
        want_n: usize,
        want_k: usize,
    },
    #[error("code validation failed: {0}")]
    ValidationFailed(#[from] CodeError),
    #[error("scenario label {label}: expected parameters (N,M,P) = {expected:?}")]
    BadNamedScenario {
        label: String,
        expected: (usize, usize, usize),
    },
    #[error("scenario needs at least 1 trial")]
    NoTrials,
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error(transparent)]
    Cmat(#[from] crate::cmat::CmatError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("scenario json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv parse error at line {line}: {msg}")]
    CsvParse { line: usize, msg: String },
}

// ---------------------------------------------------------------------------
// Scenarios
// ---------------------------------------------------------------------------

/// The four published mapping cases `(N, M, P)`.
pub const NAMED_SCENARIOS: [(&str, usize, usize, usize); 4] = [
    ("Z1", 3, 8, 1),
    ("Z2", 4, 10, 1),
    ("Z3", 1, 13, 2),
    ("Z4", 1, 29, 5),
];

/// One experiment configuration; serialized as JSON for the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub label: String,
    pub n_logical: usize,
    pub n_physical: usize,
    pub t_correct: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code_file: Option<String>,
    pub error_model: ErrorModel,
    pub trials: u64,
    pub run_seed: u64,
}

impl Scenario {
    pub fn validate(&self) -> Result<(), BenchError> {
        if let Some(&(label, n, m, p)) = NAMED_SCENARIOS
            .iter()
            .find(|(label, _, _, _)| *label == self.label)
        {
            if (self.n_logical, self.n_physical, self.t_correct) != (n, m, p) {
                return Err(BenchError::BadNamedScenario {
                    label: label.to_string(),
                    expected: (n, m, p),
                });
            }
        }
        if self.trials == 0 {
            return Err(BenchError::NoTrials);
        }
        self.error_model.validate(self.n_physical)?;
        Ok(())
    }
}

pub fn load_scenario(path: &Path) -> Result<Scenario, BenchError> {
    let text = std::fs::read_to_string(path)?;
    let scenario: Scenario = serde_json::from_str(&text)?;
    scenario.validate()?;
    Ok(scenario)
}

/// Resolves the scenario's code: an explicit `code_file` (`builtin:steane`
/// and `builtin:shor` included) or the `codes/<label>.stab` convention
/// searched next to the scenario file and in the working directory.
/// `Ok(None)` means the scenario degrades to replication-only mode.
pub fn resolve_code(
    scenario: &Scenario,
    scenario_dir: Option<&Path>,
) -> Result<Option<StabilizerCode>, BenchError> {
    let from_path = |path: &Path| -> Result<StabilizerCode, BenchError> {
        let text = std::fs::read_to_string(path)?;
        Ok(parse_code_file(&text)?)
    };

    let code = match scenario.code_file.as_deref() {
        Some("builtin:steane") => Some(crate::pauli::builtin_steane()),
        Some("builtin:shor") => Some(crate::pauli::builtin_shor()),
        Some(file) => {
            let direct = PathBuf::from(file);
            let path = if direct.is_relative() {
                scenario_dir
                    .map(|d| d.join(&direct))
                    .filter(|p| p.exists())
                    .unwrap_or(direct)
            } else {
                direct
            };
            Some(from_path(&path)?)
        }
        None => {
            let rel = PathBuf::from("codes").join(format!("{}.stab", scenario.label));
            let candidates = [
                scenario_dir.map(|d| d.join(&rel)),
                Some(rel),
            ];
            let mut found = None;
            for candidate in candidates.into_iter().flatten() {
                if candidate.exists() {
                    found = Some(from_path(&candidate)?);
                    break;
                }
            }
            found
        }
    };

    let Some(code) = code else { return Ok(None) };
    if code.n() != scenario.n_physical || code.k() != scenario.n_logical {
        return Err(BenchError::CodeMismatch {
            label: scenario.label.clone(),
            code_n: code.n(),
            code_k: code.k(),
            want_n: scenario.n_physical,
            want_k: scenario.n_logical,
        });
    }
    check_generators(&code)?;
    // Small codes pick up derived logicals so Monte Carlo can track the
    // statevector fidelity alongside the residual counts.
    let code = if code.n() <= crate::cmat::MAX_STATE_QUBITS {
        code.with_derived_logicals()?
    } else {
        code
    };
    Ok(Some(code))
}

// ---------------------------------------------------------------------------
// Table replication
// ---------------------------------------------------------------------------

/// One replicated table row. Corrected counts and percentages follow the
/// published bookkeeping, not the physical pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub scenario: String,
    pub detected: u32,
    pub stabilizer_corrected: f64,
    pub stabilizer_pct: f64,
    pub qostbc_corrected: f64,
    pub qostbc_pct: f64,
}

/// A cell where arithmetic-consistent output differs from the published
/// figure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub scenario: String,
    pub detected: u32,
    pub field: &'static str,
    pub computed: f64,
    pub published: f64,
}

/// Rounds half-up at two decimals, the tables' convention.
pub fn round_half_up_2(x: f64) -> f64 {
    (x * 100.0 + 0.5).floor() / 100.0
}

/// Published percentage cells that disagree with their own corrected
/// counts; the replication emits the computed value plus a note.
const KNOWN_DISCREPANCIES: [(&str, u32, &str, f64); 2] = [
    ("Z3", 90, "qostbc_pct", 97.65),
    ("Z4", 90, "qostbc_pct", 98.75),
];

/// Replicates Tables 2–5: six detected-error levels per scenario, with
/// `stab = D − P` and `qostbc = 1.05·(D − P)` (Z1, Z2, Z4) or
/// `(D − P) − 0.12` (Z3).
pub fn replicate_tables() -> (Vec<BenchRow>, Vec<Discrepancy>) {
    let mut rows = Vec::with_capacity(24);
    let mut discrepancies = Vec::new();
    for &(label, _n, _m, p) in &NAMED_SCENARIOS {
        for detected in (50..=100).step_by(10) {
            let base = (detected - p) as f64;
            let stab = base;
            let qostbc = if label == "Z3" { base - 0.12 } else { 1.05 * base };
            let row = BenchRow {
                scenario: label.to_string(),
                detected: detected as u32,
                stabilizer_corrected: stab,
                stabilizer_pct: round_half_up_2(100.0 * stab / detected as f64),
                qostbc_corrected: round_half_up_2(qostbc),
                qostbc_pct: round_half_up_2(100.0 * qostbc / detected as f64),
            };
            for &(dl, dd, field, published) in &KNOWN_DISCREPANCIES {
                if dl == label && dd == row.detected {
                    let computed = match field {
                        "qostbc_pct" => row.qostbc_pct,
                        _ => unreachable!(),
                    };
                    discrepancies.push(Discrepancy {
                        scenario: label.to_string(),
                        detected: row.detected,
                        field,
                        computed,
                        published,
                    });
                }
            }
            rows.push(row);
        }
    }
    (rows, discrepancies)
}

/// Replication CSV: `scenario,detected,stabilizer_corrected,
/// stabilizer_pct,qostbc_corrected,qostbc_pct`, two-decimal fixed point,
/// with machine-readable `# discrepancy` trailer lines.
pub fn replication_csv(rows: &[BenchRow], discrepancies: &[Discrepancy]) -> String {
    let mut out = String::from(
        "scenario,detected,stabilizer_corrected,stabilizer_pct,qostbc_corrected,qostbc_pct\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.2},{:.2},{:.2},{:.2}\n",
            r.scenario,
            r.detected,
            r.stabilizer_corrected,
            r.stabilizer_pct,
            r.qostbc_corrected,
            r.qostbc_pct
        ));
    }
    for d in discrepancies {
        out.push_str(&format!(
            "# discrepancy scenario={} detected={} field={} computed={:.2} published={:.2}\n",
            d.scenario, d.detected, d.field, d.computed, d.published
        ));
    }
    out
}

/// Parses a replication CSV back into rows (trailer comments skipped).
pub fn parse_replication_csv(text: &str) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 || line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(BenchError::CsvParse {
                line: i + 1,
                msg: format!("expected 6 fields, got {}", fields.len()),
            });
        }
        let parse_f = |s: &str, line: usize| -> Result<f64, BenchError> {
            s.parse().map_err(|_| BenchError::CsvParse {
                line,
                msg: format!("bad number {s:?}"),
            })
        };
        rows.push(BenchRow {
            scenario: fields[0].to_string(),
            detected: fields[1].parse().map_err(|_| BenchError::CsvParse {
                line: i + 1,
                msg: format!("bad integer {:?}", fields[1]),
            })?,
            stabilizer_corrected: parse_f(fields[2], i + 1)?,
            stabilizer_pct: parse_f(fields[3], i + 1)?,
            qostbc_corrected: parse_f(fields[4], i + 1)?,
            qostbc_pct: parse_f(fields[5], i + 1)?,
        });
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
enum TrialResult {
    Clean,
    UndetectedNonidentity,
    Detected(ResidualClass),
    DecodeFailed,
}

/// Aggregated Monte Carlo outcome. `corrected` counts residual classes
/// `Identity` and `InStabilizer` among detected (nonzero-syndrome) trials;
/// zero-syndrome nonidentity errors are reported separately so detection
/// comparisons against `1−(1−p)^N` can state their exclusion.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloReport {
    pub label: String,
    pub trials: u64,
    pub detected: u64,
    pub corrected: u64,
    pub in_stabilizer: u64,
    pub logical_errors: u64,
    pub decode_failures: u64,
    pub undetected_nonidentity: u64,
    pub empirical_pd: f64,
    pub mean_fidelity: Option<f64>,
    pub run_seed: u64,
    pub decoder: &'static str,
}

enum Decoder {
    Lookup(SyndromeTable),
    Search { max_weight: usize },
}

/// Runs the scenario's Monte Carlo experiment on a validated code.
///
/// Codes within [`LOOKUP_BUDGET`] get a complete lookup table; larger ones
/// (Z4's 29 qubits) use the weight-ascending search decoder capped at the
/// scenario's `t_correct`, with search misses counted as failures.
pub fn run_monte_carlo(
    scenario: &Scenario,
    code: &StabilizerCode,
) -> Result<MonteCarloReport, BenchError> {
    scenario.validate()?;
    if code.n() != scenario.n_physical || code.k() != scenario.n_logical {
        return Err(BenchError::CodeMismatch {
            label: scenario.label.clone(),
            code_n: code.n(),
            code_k: code.k(),
            want_n: scenario.n_physical,
            want_k: scenario.n_logical,
        });
    }
    check_generators(code)?;

    let decoder = match build_lookup_complete(code, LOOKUP_BUDGET) {
        Ok(table) => Decoder::Lookup(table),
        Err(DecodeError::BudgetExceeded { .. }) => Decoder::Search {
            max_weight: scenario.t_correct,
        },
        Err(e) => return Err(e.into()),
    };

    let encoded: Option<StateVector<f64>> = if code.n() <= crate::cmat::MAX_STATE_QUBITS
        && code.has_logicals()
    {
        let logical_zero = StateVector::basis(code.k(), 0)?;
        Some(encode_state(code, &logical_zero)?)
    } else {
        None
    };

    let n = code.n();
    let model = &scenario.error_model;
    let outcomes: Vec<(TrialResult, f64)> = (0..scenario.trials)
        .into_par_iter()
        .map(|t| {
            let error = sample_error(model, n, TrialSeed::new(scenario.run_seed, t))
                .expect("model validated");
            let s = syndrome(code, &error).expect("lengths match");
            let (result, correction) = if s.is_zero() {
                if error.is_identity_up_to_phase() {
                    (TrialResult::Clean, None)
                } else {
                    (TrialResult::UndetectedNonidentity, None)
                }
            } else {
                let decoded = match &decoder {
                    Decoder::Lookup(table) => decode_lookup(table, &s).map(|r| r.correction),
                    Decoder::Search { max_weight } => {
                        decode_search(code, &s, *max_weight).map(|r| r.correction)
                    }
                };
                match decoded {
                    Ok(correction) => {
                        let class = residual_class(code, &error, &correction)
                            .expect("decoder output matches syndrome");
                        (TrialResult::Detected(class), Some(correction))
                    }
                    Err(_) => (TrialResult::DecodeFailed, None),
                }
            };
            let fidelity = match &encoded {
                Some(reference) => {
                    let corrupted = apply_pauli(reference, &error).expect("lengths match");
                    let restored = match correction {
                        Some(c) => apply_pauli(&corrupted, &c).expect("lengths match"),
                        None => corrupted,
                    };
                    fidelity_pure(reference, &restored).expect("dimensions match")
                }
                None => f64::NAN,
            };
            (result, fidelity)
        })
        .collect();

    let mut report = MonteCarloReport {
        label: scenario.label.clone(),
        trials: scenario.trials,
        detected: 0,
        corrected: 0,
        in_stabilizer: 0,
        logical_errors: 0,
        decode_failures: 0,
        undetected_nonidentity: 0,
        empirical_pd: 0.0,
        mean_fidelity: None,
        run_seed: scenario.run_seed,
        decoder: match &decoder {
            Decoder::Lookup(_) => "lookup",
            Decoder::Search { .. } => "search",
        },
    };
    let mut fidelity_sum = 0.0;
    for (result, fidelity) in &outcomes {
        match result {
            TrialResult::Clean => {}
            TrialResult::UndetectedNonidentity => report.undetected_nonidentity += 1,
            TrialResult::Detected(class) => {
                report.detected += 1;
                match class {
                    ResidualClass::Identity => report.corrected += 1,
                    ResidualClass::InStabilizer => {
                        report.corrected += 1;
                        report.in_stabilizer += 1;
                    }
                    ResidualClass::LogicalError => report.logical_errors += 1,
                }
            }
            TrialResult::DecodeFailed => {
                report.detected += 1;
                report.decode_failures += 1;
                report.logical_errors += 1;
            }
        }
        fidelity_sum += fidelity;
    }
    report.empirical_pd = report.detected as f64 / report.trials as f64;
    if encoded.is_some() {
        report.mean_fidelity = Some(fidelity_sum / report.trials as f64);
    }
    Ok(report)
}

/// Monte Carlo CSV: `scenario,trials,detected,corrected,in_stabilizer,
/// logical_errors,undetected_nonidentity,empirical_pd,seed`.
pub fn monte_carlo_csv(report: &MonteCarloReport) -> String {
    let mut out = String::from(
        "scenario,trials,detected,corrected,in_stabilizer,logical_errors,undetected_nonidentity,empirical_pd,seed\n",
    );
    out.push_str(&format!(
        "{},{},{},{},{},{},{},{:.6},{}\n",
        report.label,
        report.trials,
        report.detected,
        report.corrected,
        report.in_stabilizer,
        report.logical_errors,
        report.undetected_nonidentity,
        report.empirical_pd,
        report.run_seed
    ));
    out
}

// ---------------------------------------------------------------------------
// Scaling experiment
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub median_seconds: f64,
    pub mean_seconds: f64,
}

/// Times the decoder on random correctable errors per code and fits the
/// `c·N·log2(M)` correction-time model to the medians.
pub fn scaling_experiment(
    codes: &[(String, StabilizerCode)],
    trials: u64,
    run_seed: u64,
) -> Result<(Vec<ScalingRow>, ComplexityModel), BenchError> {
    let mut rows = Vec::new();
    for (name, code) in codes {
        check_generators(code)?;
        let correctable = ((code.d_claimed().max(1) - 1) / 2).max(1);
        let model = ErrorModel::FixedWeight {
            weight: correctable.min(code.n()),
            ratios: crate::channels::DEPOLARIZING_RATIOS,
        };
        let decoder = match build_lookup_complete(code, LOOKUP_BUDGET) {
            Ok(table) => Decoder::Lookup(table),
            Err(DecodeError::BudgetExceeded { .. }) => Decoder::Search {
                max_weight: correctable,
            },
            Err(e) => return Err(e.into()),
        };
        let mut times = Vec::with_capacity(trials as usize);
        for t in 0..trials {
            let error = sample_error(&model, code.n(), TrialSeed::new(run_seed, t))?;
            let s = syndrome(code, &error)?;
            let start = Instant::now();
            let result = match &decoder {
                Decoder::Lookup(table) => decode_lookup(table, &s)?,
                Decoder::Search { max_weight } => decode_search(code, &s, *max_weight)?,
            };
            let elapsed = start.elapsed().as_secs_f64();
            debug_assert!(result.weight <= correctable);
            times.push(elapsed);
        }
        times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = times[times.len() / 2];
        let mean = times.iter().sum::<f64>() / times.len() as f64;
        rows.push(ScalingRow {
            name: name.clone(),
            n: code.n(),
            k: code.k(),
            trials,
            median_seconds: median,
            mean_seconds: mean,
        });
    }
    let samples: Vec<(usize, usize, f64)> = rows
        .iter()
        .map(|r| (r.k, r.n, r.median_seconds))
        .collect();
    let model = fit_tcorr(&samples)?;
    Ok((rows, model))
}

pub fn scaling_csv(rows: &[ScalingRow], model: &ComplexityModel) -> String {
    let mut out = String::from("code,n,k,trials,median_decode_seconds,mean_decode_seconds\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.9},{:.9}\n",
            r.name, r.n, r.k, r.trials, r.median_seconds, r.mean_seconds
        ));
    }
    out.push_str(&format!(
        "# fit t = c * N * log2(M): c={:.6e} r_squared={:.4}\n",
        model.c, model.r_squared
    ));
    out
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

pub fn emit_csv(content: &str, path: &Path) -> Result<(), BenchError> {
    std::fs::write(path, content)?;
    Ok(())
}

/// Self-contained SVG line chart: one panel per scenario, detected errors
/// on x, percentage improvement on y, exactly two polyline series
/// (stabilizer, QOSTBC) per panel.
pub fn replication_plot_svg(rows: &[BenchRow]) -> String {
    let mut by_scenario: BTreeMap<&str, Vec<&BenchRow>> = BTreeMap::new();
    for r in rows {
        by_scenario.entry(r.scenario.as_str()).or_default().push(r);
    }
    let panels = by_scenario.len().max(1);
    let cols = 2usize;
    let rows_ct = panels.div_ceil(cols);
    let (pw, ph, margin) = (400.0, 280.0, 50.0);
    let width = cols as f64 * (pw + margin) + margin;
    let height = rows_ct as f64 * (ph + margin) + margin;

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n\
         <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    );

    for (i, (label, rows)) in by_scenario.iter().enumerate() {
        let px = margin + (i % cols) as f64 * (pw + margin);
        let py = margin + (i / cols) as f64 * (ph + margin);
        let xs: Vec<f64> = rows.iter().map(|r| r.detected as f64).collect();
        let mut ys: Vec<f64> = rows.iter().map(|r| r.stabilizer_pct).collect();
        ys.extend(rows.iter().map(|r| r.qostbc_pct));
        let (xmin, xmax) = (
            xs.iter().cloned().fold(f64::INFINITY, f64::min),
            xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        );
        let (ymin, ymax) = (
            ys.iter().cloned().fold(f64::INFINITY, f64::min) - 1.0,
            ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 1.0,
        );
        let sx = |x: f64| px + (x - xmin) / (xmax - xmin).max(1e-9) * pw;
        let sy = |y: f64| py + ph - (y - ymin) / (ymax - ymin).max(1e-9) * ph;

        svg.push_str(&format!(
            "<g font-family=\"sans-serif\" font-size=\"12\">\n\
             <text x=\"{}\" y=\"{}\" font-size=\"14\">{} (% improvement vs detected errors)</text>\n\
             <line x1=\"{px}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n\
             <line x1=\"{px}\" y1=\"{py}\" x2=\"{px}\" y2=\"{}\" stroke=\"black\"/>\n",
            px,
            py - 10.0,
            label,
            py + ph,
            px + pw,
            py + ph,
            py + ph,
        ));
        for r in rows.iter() {
            svg.push_str(&format!(
                "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
                sx(r.detected as f64),
                py + ph + 16.0,
                r.detected
            ));
        }
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{:.1}</text>\n\
             <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{:.1}</text>\n",
            px - 4.0,
            sy(ymin) + 4.0,
            ymin,
            px - 4.0,
            sy(ymax) + 4.0,
            ymax
        ));

        let polyline = |series: &[(f64, f64)], color: &str| -> String {
            let points: Vec<String> = series
                .iter()
                .map(|&(x, y)| format!("{:.1},{:.1}", sx(x), sy(y)))
                .collect();
            format!(
                "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"/>\n",
                points.join(" ")
            )
        };
        let stab: Vec<(f64, f64)> = rows
            .iter()
            .map(|r| (r.detected as f64, r.stabilizer_pct))
            .collect();
        let qostbc: Vec<(f64, f64)> = rows
            .iter()
            .map(|r| (r.detected as f64, r.qostbc_pct))
            .collect();
        svg.push_str(&polyline(&stab, "#1f77b4"));
        svg.push_str(&polyline(&qostbc, "#d62728"));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" fill=\"#1f77b4\">stabilizer</text>\n\
             <text x=\"{:.1}\" y=\"{:.1}\" fill=\"#d62728\">qostbc</text>\n</g>\n",
            px + 8.0,
            py + 16.0,
            px + 8.0,
            py + 32.0
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
