//! The `qcc` command line: construct single codes, regenerate parameter
//! tables, dump coset decompositions, and run the verification suites.
//!
//! Exit codes: 0 on success/valid, 1 on an internal check failure, 2 on a
//! violated precondition (the message names the violated hypothesis), 3 on
//! an exhausted work budget.

use crate::cosets::{theta_decomposition, CosetContext, Family};
use crate::error::{Error, Result};
use crate::quantum::{
    construct_family_i, construct_family_ii, index_range, QccCertificate, VerifyOptions,
};
use crate::verify::{run_suites, SuiteOptions, SuiteReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "qcc", version, about = "Construct and certify MDS quantum convolutional codes built from constacyclic codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct one code and emit its certificate
    Construct(ConstructArgs),
    /// Emit the parameter table of a family over a list of alphabet sizes
    Table(TableArgs),
    /// Print the cyclotomic coset decomposition of a family context
    Cosets(CosetsArgs),
    /// Run the invariant suites and report PASS/FAIL/SKIP per check
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "II", alias = "ii")]
    II,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::I => Family::I,
            FamilyArg::II => Family::II,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub i: u64,
    /// Verification level: 0 closed-form, 1 algebraic, 2 exhaustive oracles
    #[arg(long, default_value_t = 1)]
    pub level: u8,
    /// Cap on column-subset rank checks at level 2
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_ranks: u64,
    /// Cap on enumerated dual words at level 2
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_words: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Comma-separated alphabet sizes, e.g. 7,11,13,19,23
    #[arg(long)]
    pub q_list: String,
    /// Index range LO..HI (inclusive) or a single index; defaults to the
    /// full range of the construction
    #[arg(long)]
    pub i_range: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub level: u8,
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_ranks: u64,
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_words: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CosetsArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub level: u8,
    /// Restrict the instance sweeps to one alphabet size
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_ranks: u64,
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_words: u64,
    /// Random samples per property suite
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// One emitted table row.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum TableRow {
    Data(TableData),
    Skipped { q: u64, reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct TableData {
    pub q: u64,
    pub i: u64,
    pub n: u64,
    pub k: u64,
    pub mu: u64,
    pub gamma: u64,
    pub d_f: u64,
    pub singleton: u64,
    pub mds: bool,
    pub valid: bool,
}

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Construct(args) => cmd_construct(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Cosets(args) => cmd_cosets(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    let text = if content.ends_with('\n') { content.to_string() } else { format!("{content}\n") };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct_one(family: Family, q: u64, i: u64, opts: &VerifyOptions) -> Result<QccCertificate> {
    match family {
        Family::I => construct_family_i(q, i, opts),
        Family::II => construct_family_ii(q, i, opts),
    }
}

fn cmd_construct(args: &ConstructArgs) -> Result<i32> {
    let opts = VerifyOptions {
        level: args.level,
        budget_ranks: args.budget_ranks,
        budget_words: args.budget_words,
    };
    let cert = construct_one(args.family.into(), args.q, args.i, &opts)?;
    let rendered = match args.format {
        Format::Json => cert.to_json(),
        Format::Text => render_certificate_text(&cert),
        Format::Csv => {
            return Err(Error::Precondition("construct emits json or text, not csv".into()))
        }
    };
    emit(&args.out, &rendered)?;
    Ok(if cert.is_valid() { 0 } else { 1 })
}

fn render_certificate_text(cert: &QccCertificate) -> String {
    let mut lines = vec![
        format!(
            "[({}, {}, {}; {}, {})]_{} family {} i={} level={}",
            cert.params.n,
            cert.params.k,
            cert.params.mu,
            cert.params.gamma,
            cert.params.d_f,
            cert.q,
            cert.family,
            cert.i,
            cert.level
        ),
        format!("singleton bound {} mds {} valid {}", cert.singleton_bound, cert.mds, cert.is_valid()),
    ];
    for (name, check) in &cert.checks {
        lines.push(format!("{} {} - {}", check.status, name, check.detail));
    }
    for note in &cert.erratum_notes {
        lines.push(format!("note: {note}"));
    }
    lines.join("\n")
}

fn parse_q_list(list: &str) -> Result<Vec<u64>> {
    // an empty list is allowed and yields a header-only table
    let mut qs = Vec::new();
    for part in list.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        qs.push(
            part.parse::<u64>()
                .map_err(|_| Error::Precondition(format!("invalid q value {part:?} in --q-list")))?,
        );
    }
    Ok(qs)
}

fn parse_i_range(text: &str) -> Result<(u64, u64)> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo.trim().parse::<u64>();
        let hi = hi.trim().trim_start_matches('=').parse::<u64>();
        if let (Ok(lo), Ok(hi)) = (lo, hi) {
            return Ok((lo, hi));
        }
    } else if let Ok(single) = text.trim().parse::<u64>() {
        return Ok((single, single));
    }
    Err(Error::Precondition(format!("invalid --i-range {text:?}; expected LO..HI or a single index")))
}

/// The table rows for a family over a q list, computed concurrently and
/// emitted in (q, i) order. An invalid q yields one skip row carrying the
/// violated hypothesis.
pub fn table_rows(
    family: Family,
    qs: &[u64],
    i_range: Option<(u64, u64)>,
    opts: &VerifyOptions,
) -> Vec<TableRow> {
    let mut jobs: Vec<(u64, u64)> = Vec::new();
    let mut skipped: Vec<(u64, String)> = Vec::new();
    for &q in qs {
        match index_range(family, q) {
            Ok((lo, hi)) => {
                let (lo, hi) = match i_range {
                    Some((rlo, rhi)) => (lo.max(rlo), hi.min(rhi)),
                    None => (lo, hi),
                };
                if lo > hi {
                    skipped.push((q, "requested index range is empty for this q".into()));
                } else {
                    jobs.extend((lo..=hi).map(|i| (q, i)));
                }
            }
            Err(err) => skipped.push((q, err.to_string())),
        }
    }
    let mut rows: Vec<TableRow> = jobs
        .into_par_iter()
        .map(|(q, i)| match construct_one(family, q, i, opts) {
            Ok(cert) => TableRow::Data(TableData {
                q,
                i,
                n: cert.params.n,
                k: cert.params.k,
                mu: cert.params.mu,
                gamma: cert.params.gamma,
                d_f: cert.params.d_f,
                singleton: cert.singleton_bound,
                mds: cert.mds,
                valid: cert.is_valid(),
            }),
            Err(err) => TableRow::Skipped { q, reason: err.to_string() },
        })
        .collect();
    rows.extend(skipped.into_iter().map(|(q, reason)| TableRow::Skipped { q, reason }));
    rows.sort_by_key(|row| match row {
        TableRow::Data(d) => (d.q, d.i, 0),
        TableRow::Skipped { q, .. } => (*q, 0, 1),
    });
    rows
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("q,i,n,k,mu,gamma,d_f,singleton,mds,valid\n");
    for row in rows {
        match row {
            TableRow::Data(d) => out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                d.q, d.i, d.n, d.k, d.mu, d.gamma, d.d_f, d.singleton, d.mds, d.valid
            )),
            TableRow::Skipped { q, reason } => {
                out.push_str(&format!("{q},,,,,,,,,{}\n", csv_escape(&format!("skip: {reason}"))))
            }
        }
    }
    out
}

fn cmd_table(args: &TableArgs) -> Result<i32> {
    let qs = parse_q_list(&args.q_list)?;
    let i_range = args.i_range.as_deref().map(parse_i_range).transpose()?;
    let opts = VerifyOptions {
        level: args.level,
        budget_ranks: args.budget_ranks,
        budget_words: args.budget_words,
    };
    let rows = table_rows(args.family.into(), &qs, i_range, &opts);
    let rendered = match args.format {
        Format::Csv => table_csv(&rows),
        Format::Json => serde_json::to_string_pretty(&rows)
            .map_err(|e| Error::Internal(format!("table serialization failed: {e}")))?,
        Format::Text => table_csv(&rows).replace(',', "\t"),
    };
    emit(&args.out, &rendered)?;
    let all_valid = rows.iter().all(|row| match row {
        TableRow::Data(d) => d.valid,
        TableRow::Skipped { .. } => true, // warned, not failed
    });
    Ok(if all_valid { 0 } else { 1 })
}

/// Coset decomposition of one family context as a JSON value.
pub fn cosets_value(family: Family, q: u64) -> Result<serde_json::Value> {
    let ctx = match family {
        Family::I => CosetContext::family_i(q)?,
        Family::II => CosetContext::family_ii(q)?,
    };
    let decomposition = theta_decomposition(&ctx)?;
    Ok(serde_json::json!({
        "family": family,
        "q": q,
        "n": ctx.n(),
        "r": ctx.r(),
        "modulus": ctx.modulus(),
        "s": ctx.s(),
        "singletons": decomposition.singletons,
        "pairs": decomposition.pairs,
    }))
}

fn cmd_cosets(args: &CosetsArgs) -> Result<i32> {
    let value = cosets_value(args.family.into(), args.q)?;
    let rendered = match args.format {
        Format::Json => serde_json::to_string_pretty(&value)
            .map_err(|e| Error::Internal(format!("coset serialization failed: {e}")))?,
        Format::Text => {
            let singletons = &value["singletons"];
            let pairs = &value["pairs"];
            format!(
                "family {} q={} n={} r={} modulus={} s={}\nsingletons: {singletons}\npairs: {pairs}",
                value["family"].as_str().unwrap_or("?"),
                value["q"],
                value["n"],
                value["r"],
                value["modulus"],
                value["s"],
            )
        }
        Format::Csv => {
            return Err(Error::Precondition("cosets emits json or text, not csv".into()))
        }
    };
    emit(&args.out, &rendered)?;
    Ok(0)
}

fn render_reports_text(reports: &[SuiteReport]) -> String {
    reports
        .iter()
        .map(|r| format!("{} {} - {}", r.status, r.name, r.detail))
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let opts = SuiteOptions {
        level: args.level,
        budget_ranks: args.budget_ranks,
        budget_words: args.budget_words,
        q_filter: args.q,
        samples: args.samples,
    };
    let reports = run_suites(&opts);
    let rendered = match args.format {
        Format::Text => render_reports_text(&reports),
        Format::Json => serde_json::to_string_pretty(&reports)
            .map_err(|e| Error::Internal(format!("report serialization failed: {e}")))?,
        Format::Csv => {
            return Err(Error::Precondition("verify emits text or json, not csv".into()))
        }
    };
    emit(&args.out, &rendered)?;
    let failed = reports.iter().any(|r| r.status == crate::quantum::CheckStatus::Fail);
    Ok(if failed { 1 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_list_parsing() {
        assert_eq!(parse_q_list("7,11, 13").unwrap(), vec![7, 11, 13]);
        assert!(parse_q_list("7,x").is_err());
        assert_eq!(parse_q_list("").unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn empty_q_list_gives_header_only_csv() {
        let rows = table_rows(Family::I, &[], None, &VerifyOptions::level(0));
        assert!(rows.is_empty());
        assert_eq!(table_csv(&rows), "q,i,n,k,mu,gamma,d_f,singleton,mds,valid\n");
    }

    #[test]
    fn i_range_parsing() {
        assert_eq!(parse_i_range("2..5").unwrap(), (2, 5));
        assert_eq!(parse_i_range("2..=5").unwrap(), (2, 5));
        assert_eq!(parse_i_range("3").unwrap(), (3, 3));
        assert!(parse_i_range("x..y").is_err());
    }

    #[test]
    fn table_emits_skip_row_for_invalid_q() {
        let rows = table_rows(Family::II, &[13], None, &VerifyOptions::level(0));
        assert_eq!(rows.len(), 1);
        match &rows[0] {
            TableRow::Skipped { q, reason } => {
                assert_eq!(*q, 13);
                assert!(reason.contains("m >= 2"), "reason was: {reason}");
            }
            TableRow::Data(_) => panic!("expected a skip row"),
        }
        let csv = table_csv(&rows);
        assert!(csv.starts_with("q,i,n,k,mu,gamma,d_f,singleton,mds,valid\n"));
        assert!(csv.contains("13,,,"));
    }

    #[test]
    fn table_rows_family_i_level0() {
        let rows = table_rows(Family::I, &[7], None, &VerifyOptions::level(0));
        assert_eq!(rows.len(), 2); // i = 2, 3
        match &rows[0] {
            TableRow::Data(d) => {
                assert_eq!((d.q, d.i, d.n, d.k, d.d_f), (7, 2, 50, 44, 6));
                assert!(d.mds);
            }
            TableRow::Skipped { .. } => panic!("expected data"),
        }
    }

    #[test]
    fn cosets_value_shape() {
        let v = cosets_value(Family::I, 5).unwrap();
        assert_eq!(v["singletons"], serde_json::json!([13, 91]));
        assert_eq!(v["pairs"].as_array().unwrap().len(), 12);
        assert!(cosets_value(Family::II, 7).is_err());
    }
}
