//! Command-line front end: every command writes one CSV or JSON table.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::catalog;
use crate::checks::{self, Status};
use crate::oracle::DEFAULT_SEED;
use crate::processes::{self, HEIGHT_TRIALS};
use crate::rounding::{self, midpoint_grid};
use crate::{Error, SeriesControl};

/// Environment variable naming the directory used when `--out` is absent.
pub const OUT_DIR_ENV: &str = "ROUNDING_OUT_DIR";

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const BAD_NAME: i32 = 2;
    pub const UNSUPPORTED: i32 = 3;
    pub const IO: i32 = 4;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "rounding", version, about = "Moments, oscillations and laws of rounded random variables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output file; defaults to `$ROUNDING_OUT_DIR/<command>.<ext>`, else stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Truncation tolerance of the lattice series.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct AlphaArgs {
    /// Number of midpoint grid cells `(k + 1/2)/K`.
    #[arg(long, default_value_t = 16)]
    pub grid: usize,
    /// Explicit α values (comma separated); overrides `--grid`.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Oscillation term β_m on an α-grid.
    Beta {
        #[arg(long)]
        dist: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        alphas: AlphaArgs,
    },
    /// Exact moments E X_α^m.
    Moments {
        #[arg(long)]
        dist: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        alphas: AlphaArgs,
    },
    /// Var X_α with its decomposition.
    VarianceProfile {
        #[arg(long)]
        dist: String,
        #[command(flatten)]
        alphas: AlphaArgs,
    },
    /// Characteristic function E e^{itX_α}.
    Charfn {
        #[arg(long)]
        dist: String,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "1")]
        t: Vec<f64>,
        #[command(flatten)]
        alphas: AlphaArgs,
    },
    /// Total-variation distance between a process and its rounded limit.
    Converge {
        #[arg(long)]
        process: String,
        /// `a..b` (doubling by default), `a..b linear`, or a comma list.
        #[arg(long, num_args = 1..=2, default_values = ["16..16384"])]
        n: Vec<String>,
        /// Simulated tries per n for simulated processes.
        #[arg(long, default_value_t = HEIGHT_TRIALS)]
        trials: u64,
    },
    /// The identity-check suite.
    Checks {
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Switches on the fault-injection hook of the named checks.
        #[arg(long, value_delimiter = ',')]
        tamper: Vec<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Beta { .. } => "beta",
            Command::Moments { .. } => "moments",
            Command::VarianceProfile { .. } => "variance-profile",
            Command::Charfn { .. } => "charfn",
            Command::Converge { .. } => "converge",
            Command::Checks { .. } => "checks",
        }
    }
}

/// Failure of a command together with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownName(_) => exit::BAD_NAME,
            _ => exit::UNSUPPORTED,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: exit::IO,
            message: e.to_string(),
        }
    }
}

/// A rectangular result with an optional key/value summary.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(&'static str, Value)>,
    /// Names of failed checks; any entry turns into exit code 1.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
}

/// Shortest decimal that parses back to the same `f64`.
pub fn format_f64(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format_f64(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json!(x),
            Cell::Int(n) => json!(n),
            Cell::Text(s) => json!(s),
        }
    }
}

impl Table {
    fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            ..Self::default()
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> = self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json())).collect();
                Value::Object(m)
            })
            .collect();
        if self.summary.is_empty() {
            return Value::Array(rows);
        }
        let summary: Map<String, Value> = self.summary.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        json!({ "rows": rows, "summary": summary })
    }

    /// Summary as `key=value` text, one line.
    pub fn summary_line(&self) -> Option<String> {
        if self.summary.is_empty() {
            return None;
        }
        let mut s = String::new();
        for (k, v) in &self.summary {
            let v = match v {
                Value::Number(n) => n.as_f64().map(format_f64).unwrap_or_else(|| n.to_string()),
                other => other.to_string(),
            };
            let _ = write!(s, "{}{k}={v}", if s.is_empty() { "" } else { " " });
        }
        Some(s)
    }
}

fn alpha_values(a: &AlphaArgs) -> Result<Vec<f64>, CliError> {
    if !a.alpha.is_empty() {
        return Ok(a.alpha.clone());
    }
    if a.grid == 0 {
        return Err(Error::InvalidArgument("grid needs at least one point".into()).into());
    }
    Ok(midpoint_grid(a.grid))
}

/// Parses `a..b` (doubling), `a..b` followed by `linear` or `geometric`, or `a,b,c`.
pub fn parse_n_range(spec: &[String]) -> Result<Vec<u64>, CliError> {
    let bad = |s: &str| CliError::from(Error::InvalidArgument(format!("bad n range `{s}`")));
    let first = spec.first().ok_or_else(|| bad(""))?;
    let mode = spec.get(1).map(String::as_str).unwrap_or("geometric");
    let out: Vec<u64> = if let Some((a, b)) = first.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad(first))?;
        let b: u64 = b.trim().parse().map_err(|_| bad(first))?;
        if a == 0 || b < a {
            return Err(bad(first));
        }
        match mode {
            "geometric" => std::iter::successors(Some(a), |&n| n.checked_mul(2)).take_while(|&n| n <= b).collect(),
            "linear" => (a..=b).collect(),
            other => return Err(bad(other)),
        }
    } else {
        if spec.len() > 1 {
            return Err(bad(&spec[1]));
        }
        first
            .split(',')
            .map(|v| v.trim().parse().map_err(|_| bad(v)))
            .collect::<Result<_, _>>()?
    };
    if out.is_empty() || out.contains(&0) {
        return Err(bad(first));
    }
    Ok(out)
}

fn control(common: &Common) -> Result<SeriesControl, CliError> {
    let ctrl = SeriesControl::with_tol(common.tol);
    ctrl.validate()?;
    Ok(ctrl)
}

fn cmd_beta(dist: &str, m: usize, alphas: &[f64], ctrl: &SeriesControl) -> Result<Table, CliError> {
    let entry = catalog::by_name(dist)?;
    let p = rounding::oscillation_profile(entry.model(), m, alphas, ctrl)?;
    let mut t = Table::new(vec!["alpha", "beta_m", "truncation_n"]);
    for (a, v) in p.alphas.iter().zip(&p.values) {
        t.rows.push(vec![Cell::Num(*a), Cell::Num(*v), Cell::Int(p.truncation_n as u64)]);
    }
    Ok(t)
}

fn cmd_moments(dist: &str, m: usize, alphas: &[f64], ctrl: &SeriesControl) -> Result<Table, CliError> {
    let entry = catalog::by_name(dist)?;
    let model = entry.model();
    let base = rounding::sheppard_shift(&model.raw_moments(), m)?;
    let series = rounding::beta_series(model, m, ctrl)?;
    let mut t = Table::new(vec!["alpha", "value", "sheppard", "beta_m"]);
    for &a in alphas {
        let b = series.eval(a);
        t.rows.push(vec![Cell::Num(a.rem_euclid(1.0)), Cell::Num(base + b), Cell::Num(base), Cell::Num(b)]);
    }
    if m == 1 {
        // E{X} = EX − E⌊X⌋ and ⌊X⌋ = X_0 − 1
        let ex0 = base + series.eval(0.0);
        t.summary.push(("fractional_part_mean", json!(model.raw_moments()[0] + 1.0 - ex0)));
    }
    Ok(t)
}

fn cmd_variance_profile(dist: &str, alphas: &[f64], ctrl: &SeriesControl) -> Result<Table, CliError> {
    let entry = catalog::by_name(dist)?;
    let rows = rounding::variance_profile(entry.model(), alphas, ctrl)?;
    let mut t = Table::new(vec!["alpha", "value", "var_x", "parseval", "beta_1", "beta_2", "beta_tilde_2"]);
    for r in rows {
        t.rows.push(
            [r.alpha, r.value, r.var_x, r.parseval, r.beta_1, r.beta_2, r.beta_tilde_2]
                .into_iter()
                .map(Cell::Num)
                .collect(),
        );
    }
    Ok(t)
}

fn cmd_charfn(dist: &str, ts: &[f64], alphas: &[f64], ctrl: &SeriesControl) -> Result<Table, CliError> {
    let entry = catalog::by_name(dist)?;
    let model = entry.model();
    let adaptive = SeriesControl {
        mode: crate::SummationMode::Adaptive,
        ..*ctrl
    };
    let cesaro = SeriesControl {
        mode: crate::SummationMode::Cesaro,
        ..*ctrl
    };
    let points: Vec<(f64, f64)> = ts.iter().flat_map(|&t| alphas.iter().map(move |&a| (t, a))).collect();
    let values: Vec<Result<(Option<Complex64>, Complex64), Error>> = points
        .par_iter()
        .map(|&(t, a)| {
            let ad = match rounding::char_rounded(model, t, a, &adaptive) {
                Ok(v) => Some(v),
                Err(Error::NeedsCesaro { .. } | Error::NotConverged { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok((ad, rounding::char_rounded(model, t, a, &cesaro)?))
        })
        .collect();
    let mut table = Table::new(vec!["t", "alpha", "re", "im", "method"]);
    for (&(t, a), v) in points.iter().zip(values) {
        let (ad, ce) = v?;
        let a = a.rem_euclid(1.0);
        if let Some(z) = ad {
            table.rows.push(vec![Cell::Num(t), Cell::Num(a), Cell::Num(z.re), Cell::Num(z.im), Cell::Text("adaptive".into())]);
        }
        table.rows.push(vec![Cell::Num(t), Cell::Num(a), Cell::Num(ce.re), Cell::Num(ce.im), Cell::Text("cesaro".into())]);
    }
    Ok(table)
}

fn cmd_converge(process: &str, ns: &[u64], trials: u64, seed: u64) -> Result<Table, CliError> {
    let spec = processes::by_name_seeded(process, seed, trials)?;
    let points = processes::convergence_check(&spec, ns)?;
    let mut t = Table::new(vec!["n", "a_n", "tv_distance"]);
    for &(n, a, d) in &points {
        t.rows.push(vec![Cell::Int(n), Cell::Num(a), Cell::Num(d)]);
    }
    let tv: Vec<f64> = points.iter().map(|p| p.2).collect();
    let decreasing = tv.windows(2).all(|w| w[1] < w[0]);
    let (first, last) = (tv[0], tv[tv.len() - 1]);
    t.summary.push(("strictly_decreasing", json!(decreasing)));
    t.summary.push(("first", json!(first)));
    t.summary.push(("last", json!(last)));
    t.summary.push(("last_below_half_first", json!(last < 0.5 * first)));
    Ok(t)
}

fn cmd_checks(only: &[String], tamper: &[String]) -> Result<Table, CliError> {
    let results = checks::run_checks(only, tamper)?;
    let mut t = Table::new(vec!["check", "status", "value", "tolerance", "detail"]);
    for r in &results {
        if r.status == Status::Fail && !t.failures.iter().any(|f| f == r.check) {
            t.failures.push(r.check.to_string());
        }
        let status = if r.passed() { "pass" } else { "fail" };
        t.rows.push(vec![
            Cell::Text(r.check.into()),
            Cell::Text(status.into()),
            Cell::Num(r.value),
            Cell::Num(r.tolerance),
            Cell::Text(r.detail.replace(',', ";")),
        ]);
    }
    Ok(t)
}

/// Computes the table of a parsed command without writing anything.
pub fn execute(cli: &Cli) -> Result<Table, CliError> {
    let ctrl = control(&cli.common)?;
    match &cli.command {
        Command::Beta { dist, m, alphas } => cmd_beta(dist, *m, &alpha_values(alphas)?, &ctrl),
        Command::Moments { dist, m, alphas } => cmd_moments(dist, *m, &alpha_values(alphas)?, &ctrl),
        Command::VarianceProfile { dist, alphas } => cmd_variance_profile(dist, &alpha_values(alphas)?, &ctrl),
        Command::Charfn { dist, t, alphas } => cmd_charfn(dist, t, &alpha_values(alphas)?, &ctrl),
        Command::Converge { process, n, trials } => cmd_converge(process, &parse_n_range(n)?, *trials, cli.common.seed),
        Command::Checks { only, tamper } => cmd_checks(only, tamper),
    }
}

fn output_path(cli: &Cli, format: Format) -> Option<PathBuf> {
    if let Some(p) = &cli.common.out {
        return Some(p.clone());
    }
    let dir = std::env::var_os(OUT_DIR_ENV)?;
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    Some(Path::new(&dir).join(format!("{}.{ext}", cli.command.name())))
}

/// Runs a parsed command, writes its output and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let format = cli.common.format.unwrap_or(match cli.command {
        Command::Checks { .. } => Format::Json,
        _ => Format::Csv,
    });
    let table = match execute(cli) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return e.code;
        }
    };
    let mut body = match format {
        Format::Csv => table.to_csv(),
        Format::Json => serde_json::to_string_pretty(&table.to_json()).expect("finite table serializes"),
    };
    if format == Format::Json {
        body.push('\n');
    }
    let written = match output_path(cli, format) {
        Some(p) => std::fs::write(&p, body.as_bytes()).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return exit::IO;
    }
    if format == Format::Csv {
        if let Some(line) = table.summary_line() {
            eprintln!("{line}");
        }
    }
    if !table.failures.is_empty() {
        eprintln!("failed checks: {}", table.failures.join(", "));
        return exit::CHECK_FAILED;
    }
    exit::OK
}

/// Entry point shared by the binary and the tests.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { exit::BAD_NAME } else { exit::OK };
            let _ = e.print();
            code
        }
    }
}
