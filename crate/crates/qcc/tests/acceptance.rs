//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Criteria 1–2 drive the installed binary end to end; 3–8 exercise the
//! library oracles directly at their stated work sizes and time limits.

use qcc::block::{binomial, build_code_in, FieldCtx};
use qcc::cosets::{CosetContext, DefiningSet};
use qcc::quantum::{construct_family_ii, quantum_singleton_bound, CheckStatus, VerifyOptions};
use qcc::verify;
use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

fn run_qcc(args: &[&str]) -> (String, String, i32) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_qcc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().unwrap_or(-1),
    )
}

struct Row {
    q: u64,
    i: u64,
    n: u64,
    k: u64,
    mu: u64,
    gamma: u64,
    d_f: u64,
    singleton: u64,
    mds: bool,
    valid: bool,
}

fn parse_data_rows(csv: &str) -> Vec<Row> {
    let mut rows = Vec::new();
    for line in csv.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() < 10 || fields[1].is_empty() {
            continue; // skip/warning row
        }
        rows.push(Row {
            q: fields[0].parse().unwrap(),
            i: fields[1].parse().unwrap(),
            n: fields[2].parse().unwrap(),
            k: fields[3].parse().unwrap(),
            mu: fields[4].parse().unwrap(),
            gamma: fields[5].parse().unwrap(),
            d_f: fields[6].parse().unwrap(),
            singleton: fields[7].parse().unwrap(),
            mds: fields[8].parse().unwrap(),
            valid: fields[9].parse().unwrap(),
        });
    }
    rows
}

fn sweep() -> &'static verify::SweepResult {
    static SWEEP: OnceLock<verify::SweepResult> = OnceLock::new();
    SWEEP.get_or_init(|| verify::certification_sweep(None))
}

#[test]
fn acceptance_1_family_i_table() {
    let start = Instant::now();
    let (stdout, stderr, code) =
        run_qcc(&["table", "--family", "I", "--q-list", "7,11,13,19,23", "--level", "1"]);
    assert_eq!(code, 0, "table exited {code}: {stderr}");
    let rows = parse_data_rows(&stdout);
    let mut per_q: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for row in &rows {
        assert_eq!(row.n, row.q * row.q + 1);
        assert_eq!(row.k, row.q * row.q - 4 * row.i + 3);
        assert_eq!((row.mu, row.gamma), (1, 2));
        assert_eq!(row.d_f, 2 * row.i + 2);
        assert_eq!(row.singleton, row.d_f);
        assert!(row.mds && row.valid, "q={} i={} must be valid and MDS", row.q, row.i);
        per_q.entry(row.q).or_default().push(row.i);
    }
    let expected: BTreeMap<u64, Vec<u64>> = [7u64, 11, 19, 13, 23]
        .into_iter()
        .map(|q| (q, (2..=(q - 1) / 2).collect()))
        .collect();
    assert_eq!(per_q, expected, "row index sets per q");
    assert_eq!(rows.len(), 29);
    assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 1 family_i_table: PASS ({} rows)", rows.len());
}

#[test]
fn acceptance_2_family_ii_table_and_erratum() {
    let start = Instant::now();
    let (stdout, stderr, code) =
        run_qcc(&["table", "--family", "II", "--q-list", "23,27", "--level", "1"]);
    assert_eq!(code, 0, "table exited {code}: {stderr}");
    let rows = parse_data_rows(&stdout);
    assert_eq!(rows.len(), 4);
    for row in &rows {
        let n = (row.q * row.q + 1) / 10;
        assert!(row.q == 23 && n == 53 || row.q == 27 && n == 73);
        assert_eq!(row.n, n);
        assert_eq!(row.k, n - 4 * row.i);
        assert_eq!(row.d_f, 2 * row.i + 3);
        assert!((2..=3).contains(&row.i));
        assert!(row.mds && row.valid);
    }

    let (stdout, _, code) = run_qcc(&["table", "--family", "II", "--q-list", "37", "--level", "1"]);
    assert_eq!(code, 0);
    let rows = parse_data_rows(&stdout);
    assert_eq!(rows.len(), 4); // i = 2..5
    for row in &rows {
        assert_eq!(row.n, 137);
        assert_eq!(row.k, 137 - 4 * row.i);
        assert_eq!(row.d_f, 2 * row.i + 3);
        assert!(row.mds && row.valid);
    }
    let cert = construct_family_ii(37, 2, &VerifyOptions::level(0)).unwrap();
    assert!(
        cert.erratum_notes.iter().any(|note| note.contains("q = 13")),
        "q = 37 certificates flag the published q = 13 row"
    );

    let (_, stderr, code) = run_qcc(&["construct", "--family", "II", "--q", "13", "--i", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("m >= 2"), "rejection message cites m >= 2, got: {stderr}");
    assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 2 family_ii_table_and_erratum: PASS");
}

#[test]
fn acceptance_3_block_mds_column_oracle() {
    let start = Instant::now();
    let ctx = CosetContext::family_i(5).unwrap();
    let env = FieldCtx::new(&ctx).unwrap();
    let code = build_code_in(&env, &DefiningSet::family_i(&ctx, 2).unwrap()).unwrap();
    assert_eq!((code.n(), code.dim()), (26, 21));
    assert_eq!(binomial(26, 5), 65_780);
    assert!(code.certify_distance_columns(5, 100_000_000).unwrap());
    assert!(!code.certify_distance_columns(6, 100_000_000).unwrap());
    assert_eq!(code.singleton_upper(), 6); // d pinned to exactly 6
    let first = start.elapsed();
    assert!(first < Duration::from_secs(60), "q=5 oracle took {first:?}");

    let ctx = CosetContext::family_ii(23).unwrap();
    let env = FieldCtx::new(&ctx).unwrap();
    let z = DefiningSet::family_ii(&ctx, 2).unwrap();
    let code = build_code_in(&env, &z).unwrap();
    assert_eq!((code.n(), code.dim()), (53, 47));
    assert_eq!(binomial(53, 5), 2_869_685);
    assert!(code.certify_distance_columns(5, 100_000_000).unwrap());
    assert_eq!(qcc::block::bch_lower_bound(&z), 7);
    assert_eq!(code.singleton_upper(), 7); // run of 6 + Singleton pin d = 7
    assert!(start.elapsed() < Duration::from_secs(600), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 3 block_mds_column_oracle: PASS");
}

#[test]
fn acceptance_4_dual_distance_oracle() {
    let start = Instant::now();
    let ctx = CosetContext::family_i(5).unwrap();
    let env = FieldCtx::new(&ctx).unwrap();
    for (delta, expected, words) in [(1u64, 24u64, 15_625u128), (2, 22, 9_765_625)] {
        let z = DefiningSet::family_i(&ctx, delta).unwrap();
        let code = build_code_in(&env, &z).unwrap();
        assert_eq!(25u128.pow(z.len() as u32), words);
        let d = code.dual_distance_exhaustive(100_000_000).unwrap();
        assert_eq!(d, expected, "dual distance at delta = {delta}");
        assert_eq!(d, (code.n() - z.len()) as u64 + 1, "MDS dual distance");
    }
    assert!(start.elapsed() < Duration::from_secs(300), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 4 dual_distance_oracle: PASS");
}

#[test]
fn acceptance_5_dual_containment_oracle_agreement() {
    let start = Instant::now();
    let certs = sweep();
    assert_eq!(certs.len(), 67, "63 family-I + 4 family-II instances at q <= 27");
    let report = verify::oracle_agreement(certs);
    assert_eq!(report.status, CheckStatus::Pass, "{}", report.detail);
    assert!(start.elapsed() < Duration::from_secs(120), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 5 dual_containment_oracle_agreement: PASS ({})", report.detail);
}

#[test]
fn acceptance_6_convolutional_certifications() {
    let start = Instant::now();
    let report = verify::conv_certifications(sweep());
    assert_eq!(report.status, CheckStatus::Pass, "{}", report.detail);
    // the pinned sandwich values are family-specific
    for (family, _, i, cert) in sweep() {
        let cert = cert.as_ref().unwrap();
        let expected = match family {
            qcc::cosets::Family::I => 2 * i + 2,
            qcc::cosets::Family::II => 2 * i + 3,
        };
        assert_eq!(cert.params.d_f, expected);
    }
    assert!(start.elapsed() < Duration::from_secs(120), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 6 convolutional_certifications: PASS ({})", report.detail);
}

#[test]
fn acceptance_7_quantum_singleton_equality() {
    let start = Instant::now();
    let report = verify::singleton_equality(sweep());
    assert_eq!(report.status, CheckStatus::Pass, "{}", report.detail);
    assert_eq!(quantum_singleton_bound(50, 44, 2), 6);
    assert_eq!(quantum_singleton_bound(53, 45, 2), 7);
    for (_, _, _, cert) in sweep() {
        let cert = cert.as_ref().unwrap();
        assert_eq!(
            quantum_singleton_bound(cert.params.n, cert.params.k, cert.params.gamma),
            cert.params.d_f
        );
    }
    assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 7 quantum_singleton_equality: PASS ({})", report.detail);
}

#[test]
fn acceptance_8_property_suites() {
    let start = Instant::now();
    for report in [
        verify::field_axioms(1000),
        verify::frobenius_automorphism(1000),
        verify::expansion_roundtrip(1000),
        verify::coset_partition(None),
    ] {
        assert_eq!(report.status, CheckStatus::Pass, "{}: {}", report.name, report.detail);
    }
    assert!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
    println!("ACCEPTANCE 8 property_suites: PASS");
}
