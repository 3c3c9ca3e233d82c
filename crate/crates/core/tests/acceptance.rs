//! Acceptance suite: one test per criterion, each printing a single
//! PASS line with its elapsed time (run with `--nocapture` to see them).
//!
//! Criteria 2–6 and 11 are the physical acceptance surface; criterion 1
//! replicates the published tables as bookkeeping, including the two
//! arithmetically inconsistent percentage cells, which are emitted as
//! computed together with machine-readable discrepancy notes.

use std::path::{Path, PathBuf};
use std::time::Instant;

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use quatec::bench::{
    load_scenario, monte_carlo_csv, replicate_tables, replication_csv, resolve_code,
    run_monte_carlo, Scenario,
};
use quatec::channels::{sample_error, ErrorModel, TrialSeed, DEPOLARIZING_RATIOS};
use quatec::cmat::{matmul, ComplexMatrix, DensityMatrix, StateVector};
use quatec::decode::{
    apply_pauli, build_lookup_complete, decode_lookup, decode_search, encode_state,
    residual_class, syndrome, verify_distance, ResidualClass, Syndrome,
};
use quatec::metrics::{detection_probability, fidelity_density, fidelity_pure, trace_distance};
use quatec::pauli::{
    builtin_shor, builtin_steane, parse_code_file, pauli_to_matrix, PauliLetter, PauliString,
    StabilizerCode,
};
use quatec::qostbc::{apply_error_operator, qostbc_correct, QodCodec, QuaternionErrorOp};
use quatec::quat::{hamilton, mat2_mul, q8_mul, q8_to_unitary, Q8Element, Quaternion};

fn codes_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../codes")
}

fn scenarios_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios")
}

fn load_code_file(name: &str) -> StabilizerCode {
    let path = codes_dir().join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()));
    parse_code_file(&text).unwrap_or_else(|e| panic!("parsing {}: {e}", path.display()))
}

fn finish(criterion: &str, started: Instant, budget_secs: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("acceptance {criterion}: PASS in {elapsed:.2}s (budget {budget_secs}s)");
    assert!(
        elapsed < budget_secs,
        "{criterion} exceeded its {budget_secs}s budget: {elapsed:.2}s"
    );
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> StateVector<f64> {
    let amps = (0..1usize << n)
        .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    StateVector::from_unnormalized(n, amps).unwrap()
}

/// Published percentage and corrected-count cells of the four tables, in
/// detected order 50..100. Z2's table repeats Z1's numbers verbatim.
struct PublishedTable {
    scenario: &'static str,
    stab_corrected: [f64; 6],
    stab_pct: [f64; 6],
    qostbc_corrected: [f64; 6],
    qostbc_pct: [f64; 6],
}

const PUBLISHED: [PublishedTable; 4] = [
    PublishedTable {
        scenario: "Z1",
        stab_corrected: [49.0, 59.0, 69.0, 79.0, 89.0, 99.0],
        stab_pct: [98.00, 98.33, 98.57, 98.75, 98.89, 99.00],
        qostbc_corrected: [51.45, 61.95, 72.45, 82.95, 93.45, 103.95],
        qostbc_pct: [102.90, 103.25, 103.50, 103.69, 103.83, 103.95],
    },
    PublishedTable {
        scenario: "Z2",
        stab_corrected: [49.0, 59.0, 69.0, 79.0, 89.0, 99.0],
        stab_pct: [98.00, 98.33, 98.57, 98.75, 98.89, 99.00],
        qostbc_corrected: [51.45, 61.95, 72.45, 82.95, 93.45, 103.95],
        qostbc_pct: [102.90, 103.25, 103.50, 103.69, 103.83, 103.95],
    },
    PublishedTable {
        scenario: "Z3",
        stab_corrected: [48.0, 58.0, 68.0, 78.0, 88.0, 98.0],
        stab_pct: [96.00, 96.67, 97.14, 97.50, 97.78, 98.00],
        qostbc_corrected: [47.88, 57.88, 67.88, 77.88, 87.88, 97.88],
        qostbc_pct: [95.76, 96.47, 96.97, 97.35, 97.65, 97.88],
    },
    PublishedTable {
        scenario: "Z4",
        stab_corrected: [45.0, 55.0, 65.0, 75.0, 85.0, 95.0],
        stab_pct: [90.00, 91.67, 92.86, 93.75, 94.44, 95.00],
        qostbc_corrected: [47.25, 57.75, 68.25, 78.75, 89.25, 99.75],
        qostbc_pct: [94.50, 96.25, 97.50, 98.44, 98.75, 99.75],
    },
];

#[test]
fn criterion_01_table_replication() {
    let started = Instant::now();
    let (rows, discrepancies) = replicate_tables();
    assert_eq!(rows.len(), 24);

    let two_dec = |x: f64| (x * 100.0).round() / 100.0;
    let mut pct_matches = 0;
    let mut pct_mismatches = Vec::new();
    for table in &PUBLISHED {
        for (i, detected) in (50..=100).step_by(10).enumerate() {
            let row = rows
                .iter()
                .find(|r| r.scenario == table.scenario && r.detected == detected as u32)
                .expect("row exists");
            // All 24 corrected-count cells must match exactly at 2 decimals.
            assert_eq!(two_dec(row.stabilizer_corrected), table.stab_corrected[i]);
            assert_eq!(two_dec(row.qostbc_corrected), table.qostbc_corrected[i]);
            // Percentage cells: 22 of 24 match, two are known-inconsistent.
            for (computed, published) in [
                (row.stabilizer_pct, table.stab_pct[i]),
                (row.qostbc_pct, table.qostbc_pct[i]),
            ] {
                if two_dec(computed) == published {
                    pct_matches += 1;
                } else {
                    pct_mismatches.push((table.scenario, detected, computed, published));
                }
            }
        }
    }
    assert_eq!(pct_matches, 46, "22 of 24 rows' two pct cells match");
    assert_eq!(pct_mismatches.len(), 2);
    assert!(pct_mismatches
        .iter()
        .any(|&(s, d, c, p)| s == "Z3" && d == 90 && c == 97.64 && p == 97.65));
    assert!(pct_mismatches
        .iter()
        .any(|&(s, d, c, p)| s == "Z4" && d == 90 && c == 99.17 && p == 98.75));

    // Machine-readable discrepancy notes ride along in the CSV.
    assert_eq!(discrepancies.len(), 2);
    let csv = replication_csv(&rows, &discrepancies);
    assert!(csv.contains("# discrepancy scenario=Z3 detected=90 field=qostbc_pct computed=97.64 published=97.65"));
    assert!(csv.contains("# discrepancy scenario=Z4 detected=90 field=qostbc_pct computed=99.17 published=98.75"));
    finish("criterion 1 (table replication)", started, 1.0);
}

fn all_weight_one_errors(n: usize) -> Vec<PauliString> {
    let mut out = Vec::with_capacity(3 * n);
    for q in 0..n {
        for letter in PauliLetter::ERRORS {
            out.push(PauliString::single(n, q, letter));
        }
    }
    out
}

#[test]
fn criterion_02_steane_weight_one_and_roundtrip() {
    let started = Instant::now();
    let steane = builtin_steane();
    let table = build_lookup_complete(&steane, 1_000_000).unwrap();

    let errors = all_weight_one_errors(7);
    assert_eq!(errors.len(), 21);
    for e in &errors {
        let s = syndrome(&steane, e).unwrap();
        let correction = decode_lookup(&table, &s).unwrap().correction;
        let class = residual_class(&steane, e, &correction).unwrap();
        assert!(class.is_success(), "{e}: {class:?}");
    }

    let logicals: [StateVector<f64>; 3] = [
        StateVector::basis(1, 0).unwrap(),
        StateVector::basis(1, 1).unwrap(),
        StateVector::from_unnormalized(1, vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)])
            .unwrap(),
    ];
    for logical in &logicals {
        let encoded = encode_state(&steane, logical).unwrap();
        for e in &errors {
            let corrupted = apply_pauli(&encoded, e).unwrap();
            let s = syndrome(&steane, e).unwrap();
            let correction = decode_lookup(&table, &s).unwrap().correction;
            let restored = apply_pauli(&corrupted, &correction).unwrap();
            let f = fidelity_pure(&encoded, &restored).unwrap();
            assert!((f - 1.0).abs() < 1e-9, "{e}: fidelity {f}");
        }
    }
    finish("criterion 2 (Steane weight-1 + statevector)", started, 5.0);
}

#[test]
fn criterion_03_shor_weight_one_with_degeneracy() {
    let started = Instant::now();
    let shor = builtin_shor();
    let table = build_lookup_complete(&shor, 1_000_000).unwrap();

    let errors = all_weight_one_errors(9);
    assert_eq!(errors.len(), 27);
    let mut degenerate_z_pairs = 0;
    for e in &errors {
        let s = syndrome(&shor, e).unwrap();
        let correction = decode_lookup(&table, &s).unwrap().correction;
        let class = residual_class(&shor, e, &correction).unwrap();
        assert!(class.is_success(), "{e}: {class:?}");
        if class == ResidualClass::InStabilizer && e.weight() == 1 {
            degenerate_z_pairs += 1;
        }
    }
    assert!(
        degenerate_z_pairs > 0,
        "Z errors within a block must demonstrate degenerate correction"
    );
    finish("criterion 3 (Shor weight-1 + degeneracy)", started, 5.0);
}

#[test]
fn criterion_04_code_13_1_5() {
    let started = Instant::now();
    let code = load_code_file("Z3.stab");
    assert_eq!((code.n(), code.k(), code.d_claimed()), (13, 1, 5));

    let table = build_lookup_complete(&code, 2_000_000).unwrap();
    let mut tested = 0u32;
    for q1 in 0..13 {
        for l1 in PauliLetter::ERRORS {
            let e1 = PauliString::single(13, q1, l1);
            let s = syndrome(&code, &e1).unwrap();
            let correction = decode_lookup(&table, &s).unwrap().correction;
            assert!(residual_class(&code, &e1, &correction).unwrap().is_success());
            tested += 1;
            for q2 in (q1 + 1)..13 {
                for l2 in PauliLetter::ERRORS {
                    let e = e1.multiply(&PauliString::single(13, q2, l2)).unwrap();
                    let s = syndrome(&code, &e).unwrap();
                    let correction = decode_lookup(&table, &s).unwrap().correction;
                    assert!(
                        residual_class(&code, &e, &correction).unwrap().is_success(),
                        "{e}"
                    );
                    tested += 1;
                }
            }
        }
    }
    assert_eq!(tested, 741, "39 weight-1 + 702 weight-2 errors");

    let report = verify_distance(&code, 4, 1_000_000).unwrap();
    assert!(
        report.found.is_none(),
        "no logical of weight ≤ 4: {:?}",
        report.found
    );
    finish("criterion 4 ([[13,1,5]] exhaustive w≤2 + distance)", started, 60.0);
}

#[test]
fn criterion_05_code_29_1_11_sampled() {
    let started = Instant::now();
    let code = load_code_file("Z4.stab");
    assert_eq!((code.n(), code.k(), code.d_claimed()), (29, 1, 11));

    // 1000 sampled errors cycling through weights 1..=5; full distance-11
    // verification is out of desk-scale reach, so partial verification
    // (weight ≤ 4 here; ≤ 7 checked offline) plus sampled decoding stands in.
    let failures: Vec<String> = (0..1000u64)
        .into_par_iter()
        .filter_map(|t| {
            let w = (t % 5) as usize + 1;
            let model = ErrorModel::FixedWeight {
                weight: w,
                ratios: DEPOLARIZING_RATIOS,
            };
            let error = sample_error(&model, 29, TrialSeed::new(2024, t)).unwrap();
            let s = syndrome(&code, &error).unwrap();
            let result = match decode_search(&code, &s, 5) {
                Ok(r) => r,
                Err(e) => return Some(format!("trial {t}: {e}")),
            };
            match residual_class(&code, &error, &result.correction) {
                Ok(class) if class.is_success() => None,
                Ok(class) => Some(format!("trial {t}: {error} -> {class:?}")),
                Err(e) => Some(format!("trial {t}: {e}")),
            }
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");

    let report = verify_distance(&code, 4, 3_000_000).unwrap();
    assert!(report.found.is_none(), "partial distance check w ≤ 4");
    finish("criterion 5 ([[29,1,11]] sampled decode)", started, 300.0);
}

#[test]
fn criterion_06_detection_probability_property() {
    let started = Instant::now();
    let bitflip = parse_code_file("n=3 k=1 d=1\nZZI\nIZZ\n").unwrap();
    let z2 = load_code_file("Z2.stab");
    let steane = builtin_steane();

    let configs: [(&str, f64, usize, &StabilizerCode); 3] = [
        ("(0.01, 10)", 0.01, 10, &z2),
        ("(0.1, 3)", 0.1, 3, &bitflip),
        ("(0.1, 7)", 0.1, 7, &steane),
    ];
    let trials = 100_000u64;
    for (name, p_e, n, code) in configs {
        assert_eq!(code.n(), n);
        let scenario = Scenario {
            label: format!("pd-{n}"),
            n_logical: code.k(),
            n_physical: n,
            t_correct: 1,
            code_file: None,
            error_model: ErrorModel::Iid {
                p_e,
                ratios: DEPOLARIZING_RATIOS,
            },
            trials,
            run_seed: 60606,
        };
        // The bare code (no logicals) keeps the statevector out of the loop.
        let bare = StabilizerCode::new(
            code.n(),
            code.k(),
            code.d_claimed(),
            code.generators().to_vec(),
            None,
        )
        .unwrap();
        let report = run_monte_carlo(&scenario, &bare).unwrap();

        // Detection frequency adjusted for degenerate zero-syndrome errors:
        // those are real errors the syndrome cannot see, reported separately.
        let adjusted =
            (report.detected + report.undetected_nonidentity) as f64 / trials as f64;
        let pd = detection_probability(p_e, n).unwrap();
        let sigma = (pd * (1.0 - pd) / trials as f64).sqrt();
        println!(
            "  P_d {name}: empirical(nonzero syndrome)={:.6} degenerate(zero-syndrome)={} adjusted={adjusted:.6} theory={pd:.6} (3σ={:.6})",
            report.empirical_pd,
            report.undetected_nonidentity,
            3.0 * sigma
        );
        assert!(
            (adjusted - pd).abs() < 3.0 * sigma,
            "{name}: adjusted {adjusted} vs theory {pd} (3σ = {})",
            3.0 * sigma
        );
    }
    finish("criterion 6 (detection probability, 3 configs)", started, 30.0);
}

#[test]
fn criterion_07_algebra_suite() {
    let started = Instant::now();

    // Q8 Cayley table: 64 products, exact.
    for a in Q8Element::all() {
        for b in Q8Element::all() {
            let via_group = q8_mul(a, b).to_quaternion::<f64>();
            let via_hamilton = hamilton(&a.to_quaternion(), &b.to_quaternion());
            assert_eq!(via_group, via_hamilton, "{a}·{b}");
        }
    }

    // Quaternion ↔ matrix homomorphism within 1e-14.
    for a in Q8Element::all() {
        for b in Q8Element::all() {
            let prod = mat2_mul(&q8_to_unitary::<f64>(a), &q8_to_unitary::<f64>(b));
            let direct = q8_to_unitary::<f64>(q8_mul(a, b));
            for t in 0..4 {
                assert!((prod[t] - direct[t]).norm() < 1e-14);
            }
        }
    }

    // Symplectic commutation matches the matrix oracle exhaustively on
    // 1, 2, and 3 qubits.
    for n in 1..=3usize {
        let mut paulis = Vec::new();
        for code in 0..4usize.pow(n as u32) {
            let mut p = PauliString::identity(n);
            let mut c = code;
            for q in 0..n {
                let letter = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z]
                    [c % 4];
                p = p.multiply(&PauliString::single(n, q, letter)).unwrap();
                c /= 4;
            }
            paulis.push(p);
        }
        let mats: Vec<ComplexMatrix<f64>> = paulis.iter().map(pauli_to_matrix).collect();
        for (i, p) in paulis.iter().enumerate() {
            for (j, q) in paulis.iter().enumerate() {
                let pq = matmul(&mats[i], &mats[j]).unwrap();
                let qp = matmul(&mats[j], &mats[i]).unwrap();
                let commutator_zero = pq.sub(&qp).unwrap().max_abs_entry() < 1e-12;
                assert_eq!(
                    p.commutes(q).unwrap(),
                    commutator_zero,
                    "n={n}: {p} vs {q}"
                );
            }
        }
    }
    finish("criterion 7 (algebra suite)", started, 5.0);
}

#[test]
fn criterion_08_metric_identities() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(808);

    // Pure-state identity on 100 random pairs.
    for _ in 0..100 {
        let psi = random_state(&mut rng, 3);
        let phi = random_state(&mut rng, 3);
        let rho = DensityMatrix::from_pure(&psi).unwrap();
        let sigma = DensityMatrix::from_pure(&phi).unwrap();
        let d = trace_distance(&rho, &sigma).unwrap();
        let f = fidelity_pure(&psi, &phi).unwrap();
        assert!((d - (1.0 - f).sqrt()).abs() < 1e-9);
    }

    // Self-fidelity of random mixed states up to dim 16.
    for dim in [2usize, 4, 8, 16] {
        for _ in 0..5 {
            let data: Vec<Complex<f64>> = (0..dim * dim)
                .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let g = ComplexMatrix::from_rows(dim, dim, data).unwrap();
            let p = matmul(&g.dagger(), &g).unwrap();
            let tr = p.trace().re;
            let rho = DensityMatrix::new(p.scale(Complex::new(1.0 / tr, 0.0))).unwrap();
            let f = fidelity_density(&rho, &rho).unwrap();
            assert!((f - 1.0).abs() < 1e-8, "dim {dim}: {f}");
        }
    }
    finish("criterion 8 (metric identities)", started, 30.0);
}

#[test]
fn criterion_09_decoder_oracle_equivalence() {
    let started = Instant::now();
    for (name, code) in [("steane", builtin_steane()), ("shor", builtin_shor())] {
        let table = build_lookup_complete(&code, 1_000_000).unwrap();
        assert!(table.is_complete());
        let syndrome_count = 1u64 << code.generators().len();
        for bits in 0..syndrome_count {
            let s = Syndrome::new(bits, code.generators().len());
            let by_table = decode_lookup(&table, &s).unwrap();
            let by_search = decode_search(&code, &s, table.max_weight()).unwrap();
            assert_eq!(
                by_table.weight, by_search.weight,
                "{name} syndrome {bits:b}: weights differ"
            );
            // Identical enumeration order should make them equal, but the
            // contract only demands stabilizer equivalence.
            let residual = by_table
                .correction
                .multiply(&by_search.correction)
                .unwrap();
            assert!(
                residual.is_identity_up_to_phase() || code.in_stabilizer_span(&residual),
                "{name} syndrome {bits:b}: corrections in different cosets"
            );
        }
    }
    finish("criterion 9 (decoder oracle equivalence)", started, 10.0);
}

#[test]
fn criterion_10_monte_carlo_determinism() {
    let started = Instant::now();
    let path = scenarios_dir().join("steane_iid.json");
    let scenario = load_scenario(&path).unwrap();
    let code = resolve_code(&scenario, path.parent()).unwrap().unwrap();

    let mut csvs = Vec::new();
    for threads in [1usize, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let report = pool.install(|| run_monte_carlo(&scenario, &code).unwrap());
        csvs.push(monte_carlo_csv(&report));
    }
    // Same scenario, repeated run on the same pool size.
    let rerun = run_monte_carlo(&scenario, &code).unwrap();
    csvs.push(monte_carlo_csv(&rerun));

    assert!(
        csvs.windows(2).all(|w| w[0] == w[1]),
        "CSV output must be byte-identical across runs and thread counts"
    );
    finish("criterion 10 (Monte Carlo determinism)", started, 60.0);
}

#[test]
fn criterion_11_qostbc_pipeline() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1111);

    // Error-then-inverse over the whole group, 50 random states each.
    for g in Q8Element::all() {
        for _ in 0..50 {
            let psi = random_state(&mut rng, 1);
            let op = QuaternionErrorOp::from_q8(g);
            let (corrupted, prenorm) = apply_error_operator(&op, &psi, 0).unwrap();
            assert!((prenorm - 1.0).abs() < 1e-12);
            let restored = qostbc_correct(&corrupted, g, 0).unwrap();
            let f = fidelity_pure(&psi, &restored).unwrap();
            assert!((f - 1.0).abs() < 1e-12, "{g}: {f}");
        }
    }

    // Solved-γ codecs round-trip within 1e-9.
    let codecs = [
        QodCodec::solve(vec![Quaternion::<f64>::one()], vec![Complex::new(1.0, 0.0)]).unwrap(),
        QodCodec::solve(
            vec![Quaternion::one(), Quaternion::i()],
            vec![
                Complex::new(0.6f64.cos(), 0.0),
                Complex::new(0.6f64.sin(), 0.0),
            ],
        )
        .unwrap(),
        QodCodec::solve(
            vec![
                Quaternion::one(),
                Quaternion::i(),
                Quaternion::j(),
                Quaternion::k(),
            ],
            vec![
                Complex::new(0.8, 0.1),
                Complex::new(-0.2, 0.4),
                Complex::new(0.3, -0.1),
                Complex::new(0.1, 0.2),
            ],
        )
        .unwrap(),
    ];
    for codec in &codecs {
        assert!(codec.residual() < 1e-9, "residual {}", codec.residual());
        for _ in 0..20 {
            let psi = random_state(&mut rng, 1);
            let encoded = quatec::qostbc::encode_qod(codec, &psi, 0).unwrap();
            let decoded = quatec::qostbc::decode_qod(codec, &encoded, 0).unwrap();
            let f = fidelity_pure(&psi, &decoded).unwrap();
            assert!((f - 1.0).abs() < 1e-9, "codec round-trip: {f}");
        }
    }
    finish("criterion 11 (QOSTBC pipeline)", started, 5.0);
}
