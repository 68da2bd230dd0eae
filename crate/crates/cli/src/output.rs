//! Rendering and the top-level dispatcher shared by the binary and tests.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::Parser;
use serde::Serialize;
use spindual_core::combinatorics::format_doubled;

use crate::config::{Cli, Command, ConfigError, OutputFormat, QMode, RunConfig};
use crate::fft::{fft_count, FftCount};
use crate::suites::{run_suite, SuiteError, SuiteReport};
use crate::tables::{build_table, Table};

/// Result of one invocation: exit code, rendered output and diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub diagnostics: String,
    pub out_path: Option<std::path::PathBuf>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

fn config_error(msg: impl std::fmt::Display) -> Outcome {
    Outcome { code: EXIT_CONFIG, output: String::new(), diagnostics: format!("error: {msg}\n"), out_path: None }
}

fn is_config(e: &anyhow::Error) -> bool {
    e.downcast_ref::<ConfigError>().is_some()
        || matches!(
            e.downcast_ref::<spindual_core::Error>(),
            Some(spindual_core::Error::InvalidParameter(_) | spindual_core::Error::IndexOutOfRange { .. })
        )
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            return Outcome { code, output: String::new(), diagnostics: e.render().to_string(), out_path: None };
        }
    };
    match cli.command {
        Command::Verify { suite, common } => {
            let cfg = match RunConfig::from_args(&common, QMode::Sym) {
                Ok(c) => c,
                Err(e) => return config_error(e),
            };
            match run_suite(suite, &cfg) {
                Ok(reports) => {
                    let ok = reports.iter().all(SuiteReport::passed);
                    let output = render_reports(&reports, suite.name(), cfg.format);
                    Outcome { code: if ok { EXIT_OK } else { EXIT_CHECK_FAILED }, output, diagnostics: String::new(), out_path: cfg.out }
                }
                Err(SuiteError::Config(e)) => config_error(e),
                Err(SuiteError::Engine(e @ spindual_core::Error::InvalidParameter(_))) => config_error(e),
                Err(e) => Outcome { code: EXIT_CHECK_FAILED, output: String::new(), diagnostics: format!("error: {e}\n"), out_path: None },
            }
        }
        Command::Table { kind, common } => {
            let cfg = match RunConfig::from_args(&common, QMode::Sym) {
                Ok(c) => c,
                Err(e) => return config_error(e),
            };
            match build_table(kind, &cfg) {
                Ok(t) => Outcome { code: EXIT_OK, output: render_table(&t, cfg.format), diagnostics: String::new(), out_path: cfg.out },
                Err(e) if is_config(&e) => config_error(e),
                Err(e) => Outcome { code: EXIT_CHECK_FAILED, output: String::new(), diagnostics: format!("error: {e}\n"), out_path: None },
            }
        }
        Command::FftCount { common } => {
            let cfg = match RunConfig::from_args(&common, QMode::Spec) {
                Ok(c) => c,
                Err(e) => return config_error(e),
            };
            if let Err(e) = cfg.require_q("fft-count", &[QMode::Sym, QMode::Spec]).and(cfg.require_big_n("fft-count", 3)) {
                return config_error(e);
            }
            if cfg.q_mode == QMode::Sym && !(cfg.big_n == 3 && cfg.n <= 3) {
                return config_error("symbolic fft counts are limited to N = 3, n <= 3");
            }
            match fft_count(&cfg, &[cfg.seed]) {
                Ok(f) => {
                    let code = if f.holds() { EXIT_OK } else { EXIT_CHECK_FAILED };
                    Outcome { code, output: render_fft(&f, &cfg), diagnostics: String::new(), out_path: cfg.out }
                }
                Err(e) if is_config(&e) => config_error(e),
                Err(e) => Outcome { code: EXIT_CHECK_FAILED, output: String::new(), diagnostics: format!("error: {e}\n"), out_path: None },
            }
        }
    }
}

fn csv_string<S: Serialize>(rows: impl IntoIterator<Item = S>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

fn ints(v: &[i32]) -> String {
    v.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct VerifySummary<'a> {
    command: &'static str,
    suite: &'a str,
    passed: bool,
    reports: &'a [SuiteReport],
}

pub fn render_reports(reports: &[SuiteReport], suite: &str, format: OutputFormat) -> String {
    let passed = reports.iter().all(SuiteReport::passed);
    match format {
        OutputFormat::Json => {
            let s = VerifySummary { command: "verify", suite, passed, reports };
            serde_json::to_string_pretty(&s).expect("report serializes") + "\n"
        }
        OutputFormat::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                suite: &'a str,
                #[serde(rename = "N")]
                big_n: usize,
                n: usize,
                q: &'a str,
                label: &'a str,
                pass: bool,
                detail: &'a str,
            }
            csv_string(reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| Row {
                    suite: r.suite,
                    big_n: r.big_n,
                    n: r.n,
                    q: &r.q,
                    label: &c.label,
                    pass: c.pass,
                    detail: &c.detail,
                })
            }))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let mut total = 0;
            let mut good = 0;
            for r in reports {
                let _ = writeln!(out, "== {} (N={}, n={}, q={})", r.suite, r.big_n, r.n, r.q);
                if let Some(seed) = r.seed {
                    let _ = writeln!(out, "   seed {seed}");
                }
                for p in &r.points {
                    let _ = writeln!(out, "   point {p}");
                }
                for c in &r.checks {
                    total += 1;
                    good += usize::from(c.pass);
                    let tag = if c.pass { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{tag}  {}: {}  [{:.1} ms]", c.label, c.detail, c.elapsed.as_secs_f64() * 1e3);
                }
            }
            let _ = writeln!(out, "{good}/{total} checks passed");
            out
        }
    }
}

pub fn render_table(t: &Table, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(t).expect("table serializes") + "\n",
        OutputFormat::Csv => {
            #[derive(Serialize)]
            struct Row {
                #[serde(rename = "N")]
                big_n: usize,
                n: usize,
                mode: &'static str,
                weight: String,
                eigenvalue: String,
                multiplicity: u64,
                complement: String,
                dimension: String,
            }
            csv_string(t.entries.iter().map(|e| Row {
                big_n: t.big_n,
                n: t.n,
                mode: t.mode,
                weight: e.weight.as_deref().map(ints).unwrap_or_default(),
                eigenvalue: e.eigenvalue.clone().unwrap_or_default(),
                multiplicity: e.multiplicity,
                complement: e.complement.as_deref().map(ints).unwrap_or_default(),
                dimension: e.dimension.map(|d| d.to_string()).unwrap_or_default(),
            }))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = write!(out, "{} N={} n={}", t.mode, t.big_n, t.n);
            if let Some(l) = t.level {
                let _ = write!(out, " level={l}");
            }
            if let Some(q) = &t.q {
                let _ = write!(out, " q={q}");
            }
            if let Some(s) = t.seed {
                let _ = write!(out, " seed={s}");
            }
            out.push('\n');
            if let Some(p) = &t.point {
                let _ = writeln!(out, "point {p}");
            }
            for e in &t.entries {
                if let Some(w) = &e.weight {
                    let _ = write!(out, "({})  m={}", format_doubled(w), e.multiplicity);
                } else if let Some(ev) = &e.eigenvalue {
                    let _ = write!(out, "{ev}  m={}", e.multiplicity);
                }
                if let Some(c) = &e.complement {
                    let _ = write!(out, "  dual=({})", format_doubled(c));
                }
                if let Some(d) = e.dimension {
                    let _ = write!(out, "  dim={d}");
                }
                out.push('\n');
            }
            out
        }
    }
}

pub fn render_fft(f: &FftCount, cfg: &RunConfig) -> String {
    #[derive(Serialize)]
    struct Json<'a> {
        command: &'static str,
        #[serde(rename = "N")]
        big_n: usize,
        n: usize,
        q: String,
        with_f: bool,
        closure: Vec<(Option<u64>, &'a str, usize)>,
        sum_of_squares: u64,
        commutant: Option<usize>,
        without_f: Option<(usize, u64)>,
        holds: bool,
    }
    let closure: Vec<_> = f.closure.iter().map(|c| (c.seed, c.point.as_str(), c.dim)).collect();
    match cfg.format {
        OutputFormat::Json => {
            let j = Json {
                command: "fft-count",
                big_n: f.big_n,
                n: f.n,
                q: cfg.q_mode.to_string(),
                with_f: f.with_f,
                closure,
                sum_of_squares: f.sum_of_squares,
                commutant: f.commutant,
                without_f: f.without_f,
                holds: f.holds(),
            };
            serde_json::to_string_pretty(&j).expect("fft report serializes") + "\n"
        }
        OutputFormat::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                #[serde(rename = "N")]
                big_n: usize,
                n: usize,
                quantity: &'a str,
                value: String,
                target: u64,
                equal: bool,
            }
            let mut rows = Vec::new();
            for c in &f.closure {
                rows.push(Row {
                    big_n: f.big_n,
                    n: f.n,
                    quantity: "closure",
                    value: c.dim.to_string(),
                    target: f.sum_of_squares,
                    equal: c.dim as u64 == f.sum_of_squares,
                });
            }
            if let Some(c) = f.commutant {
                rows.push(Row { big_n: f.big_n, n: f.n, quantity: "commutant", value: c.to_string(), target: f.sum_of_squares, equal: c as u64 == f.sum_of_squares });
            }
            if let Some((c, s)) = f.without_f {
                rows.push(Row { big_n: f.big_n, n: f.n, quantity: "closure_without_f", value: c.to_string(), target: s, equal: c as u64 == s });
            }
            csv_string(rows)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let gens = if f.with_f { "C_i, F" } else { "C_i" };
            let _ = writeln!(out, "fft-count N={} n={} q={} generators {gens}", f.big_n, f.n, cfg.q_mode);
            for c in &f.closure {
                let seed = c.seed.map_or(String::new(), |s| format!(" seed {s}"));
                let _ = writeln!(out, "closure dim  {}   at {}{seed}", c.dim, c.point);
            }
            let _ = writeln!(out, "sum m^2      {}", f.sum_of_squares);
            if let Some(c) = f.commutant {
                let _ = writeln!(out, "commutant    {c}");
            }
            if let Some((c, s)) = f.without_f {
                let _ = writeln!(out, "C_i alone    {c}   (sum over so_(2k) x| Z/2 modules {s})");
            }
            let _ = writeln!(out, "{}", if f.holds() { "EQUAL" } else { "MISMATCH" });
            out
        }
    }
}
