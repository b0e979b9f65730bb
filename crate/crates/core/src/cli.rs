//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::decomp::{decompose, OutputFormat};
use crate::fusion::{classify_centric_radical, expected_centric_radicals, is_f_conjugate, FusionClassReport, FusionContext};
use crate::oracle::{check_table, run_oracles, OracleReport, Status, TableFile, EXHAUSTIVE_MAX_LEVEL};
use crate::quat::{SElement, SbarElement, DEFAULT_MODULUS};
use crate::storal::{truncation, Ambient};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exact 2-local computations for SU(2) and SO(3).
#[derive(Debug, Parser)]
#[command(name = "twolocal", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the subgroup classes of the 2-toral group and report the centric-radical ones.
    Classify(RunConfig),
    /// Build the normalizer decomposition diagram.
    Decompose(RunConfig),
    /// Run the brute-force cross-checks.
    Oracle {
        #[command(flatten)]
        cfg: RunConfig,
        /// Check the group axioms on a multiplication table file instead.
        #[arg(long, value_name = "FILE")]
        table: Option<PathBuf>,
    },
    /// Write the multiplication table of the truncation at `--level` as JSON.
    ExportTable {
        #[arg(long, default_value = "su2")]
        ambient: Ambient,
        #[arg(long, default_value_t = 2)]
        level: u32,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long, default_value = "su2")]
    pub ambient: Ambient,
    #[arg(long, default_value_t = 5)]
    pub level: u32,
    /// Cyclotomic modulus m (arithmetic in Q(ζ_{2^m})); raised automatically to level + 2.
    #[arg(long, default_value_t = DEFAULT_MODULUS)]
    pub modulus: u32,
    #[arg(long, default_value = "text")]
    pub format: OutputFormat,
    /// Also run the oracle suites and fail if any of them fails.
    #[arg(long)]
    pub oracle: bool,
}

impl RunConfig {
    pub fn context(&self) -> FusionContext {
        FusionContext::new(self.ambient, self.level).with_modulus(self.modulus)
    }
}

/// What a command produced: text for stdout and stderr plus an exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            stderr: format!("error: {}\n", msg.into()),
            code: EXIT_USAGE,
            ..Outcome::default()
        }
    }

    fn fail(&mut self, check: &str) {
        let _ = writeln!(self.stderr, "check failed: {check}");
        self.code = EXIT_FAILED;
    }
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { stdout: text, code, ..Outcome::default() }
            } else {
                Outcome { stderr: text, code, ..Outcome::default() }
            }
        }
    }
}

pub fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Classify(cfg) => cmd_classify(cfg),
        Command::Decompose(cfg) => cmd_decompose(cfg),
        Command::Oracle { cfg, table } => match table {
            Some(path) => cmd_table(path, cfg.format),
            None => cmd_oracle(cfg),
        },
        Command::ExportTable { ambient, level } => cmd_export(*ambient, *level),
    }
}

fn require_level(cfg: &RunConfig) -> Option<Outcome> {
    (cfg.level < 3).then(|| Outcome::usage(format!("--level must be at least 3, got {}", cfg.level)))
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub ambient: Ambient,
    pub level: u32,
    pub classes: Vec<FusionClassReport>,
    pub centric_radical: Vec<String>,
    pub expected: Vec<String>,
    pub matches: bool,
}

/// Whether the centric-radical rows are, up to F-conjugacy, exactly the expected classes.
fn matches_expected(ctx: &FusionContext, rows: &[FusionClassReport]) -> Result<bool, String> {
    let found: Vec<_> = rows.iter().filter(|r| r.is_centric_radical()).map(|r| r.subgroup).collect();
    let expected = expected_centric_radicals(ctx.ambient);
    if found.len() != expected.len() {
        return Ok(false);
    }
    for e in &expected {
        let mut hits = 0;
        for f in &found {
            if is_f_conjugate(ctx, e, f).map_err(|e| e.to_string())? {
                hits += 1;
            }
        }
        if hits != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn classify(ctx: &FusionContext) -> Result<ClassifyReport, String> {
    let rows = classify_centric_radical(ctx).map_err(|e| e.to_string())?;
    let matches = matches_expected(ctx, &rows)?;
    Ok(ClassifyReport {
        ambient: ctx.ambient,
        level: ctx.level,
        centric_radical: rows.iter().filter(|r| r.is_centric_radical()).map(|r| r.name.clone()).collect(),
        expected: expected_centric_radicals(ctx.ambient).iter().map(|p| p.name()).collect(),
        classes: rows,
        matches,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl ClassifyReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("subgroup classes of {} at level {}\n", self.ambient, self.level);
        let _ = writeln!(
            s,
            "{:<16} {:>6} {:>8} {:>8} {:<16} {:>7} {:>7} {:<8}",
            "subgroup", "order", "centric", "radical", "bullet", "|AutF|", "|OutF|", "OutF"
        );
        let opt = |x: Option<u64>| x.map_or("inf".to_string(), |v| v.to_string());
        for r in &self.classes {
            let _ = writeln!(
                s,
                "{:<16} {:>6} {:>8} {:>8} {:<16} {:>7} {:>7} {:<8}",
                r.name,
                opt(r.order),
                yes_no(r.is_centric),
                yes_no(r.is_radical),
                r.bullet.name(),
                opt(r.aut_f_order),
                r.out_f_order,
                r.out_f_iso_tag
            );
        }
        let _ = writeln!(s, "centric-radical: {}", self.centric_radical.join(", "));
        let _ = writeln!(s, "expected: {}", self.expected.join(", "));
        let _ = writeln!(s, "match: {}", yes_no(self.matches));
        s
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Appends the oracle report and records a failure when a suite fails.
fn with_oracle(out: &mut Outcome, ctx: &FusionContext) {
    let report = run_oracles(ctx);
    out.stderr.push_str(&report.to_text());
    for f in report.failures() {
        out.fail(&format!("oracle: {}", f.name));
    }
}

pub fn cmd_classify(cfg: &RunConfig) -> Outcome {
    if let Some(u) = require_level(cfg) {
        return u;
    }
    if cfg.format == OutputFormat::Dot {
        return Outcome::usage("dot output is only available for decompose");
    }
    let ctx = cfg.context();
    let mut out = Outcome::default();
    match classify(&ctx) {
        Ok(report) => {
            out.stdout = match cfg.format {
                OutputFormat::Json => json(&report),
                _ => report.to_text(),
            };
            if !report.matches {
                out.fail("centric-radical classification");
            }
        }
        Err(e) => out.fail(&format!("classification: {e}")),
    }
    if cfg.oracle {
        with_oracle(&mut out, &ctx);
    }
    out
}

pub fn cmd_decompose(cfg: &RunConfig) -> Outcome {
    if let Some(u) = require_level(cfg) {
        return u;
    }
    let ctx = cfg.context();
    let mut out = Outcome::default();
    match decompose(&ctx) {
        Ok(d) => {
            out.stdout = d.render(cfg.format);
            if cfg.format != OutputFormat::Text {
                for w in &d.warnings {
                    let _ = writeln!(out.stderr, "WARN {w}");
                }
            }
            for v in d.failures() {
                out.fail(&v.name);
            }
        }
        Err(e) => out.fail(&e.to_string()),
    }
    if cfg.oracle {
        with_oracle(&mut out, &ctx);
    }
    out
}

pub fn cmd_oracle(cfg: &RunConfig) -> Outcome {
    if cfg.level == 0 {
        return Outcome::usage("--level must be at least 1");
    }
    let report: OracleReport = run_oracles(&cfg.context());
    let mut out = Outcome {
        stdout: match cfg.format {
            OutputFormat::Json => json(&report),
            _ => report.to_text(),
        },
        ..Outcome::default()
    };
    if cfg.level > EXHAUSTIVE_MAX_LEVEL {
        let _ = writeln!(out.stderr, "note: exhaustive suites stop at level {EXHAUSTIVE_MAX_LEVEL}");
    }
    for f in report.failures() {
        out.fail(&f.name);
    }
    out
}

fn cmd_table(path: &PathBuf, format: OutputFormat) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("cannot read {}: {e}", path.display())),
    };
    let file: TableFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(format!("{} is not a table file: {e}", path.display())),
    };
    let result = check_table(&file);
    let mut out = Outcome {
        stdout: match format {
            OutputFormat::Json => json(&result),
            _ => {
                let tag = if result.status == Status::Pass { "PASS" } else { "FAIL" };
                let detail = result.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default();
                format!("[{tag}] {}{detail}\n", result.name)
            }
        },
        ..Outcome::default()
    };
    if result.status == Status::Fail {
        out.fail(&format!("{}{}", result.name, result.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default()));
    }
    out
}

fn cmd_export(ambient: Ambient, level: u32) -> Outcome {
    if level > EXHAUSTIVE_MAX_LEVEL {
        return Outcome::usage(format!("--level must be at most {EXHAUSTIVE_MAX_LEVEL} for export"));
    }
    let name = format!("{ambient}_S{level}");
    let file = match ambient {
        Ambient::Su2 => truncation::<SElement>(level).map(|g| TableFile::from_group(&name, &g)),
        Ambient::So3 => truncation::<SbarElement>(level).map(|g| TableFile::from_group(&name, &g)),
    };
    match file {
        Ok(f) => Outcome {
            stdout: json(&f),
            ..Outcome::default()
        },
        Err(e) => {
            let mut out = Outcome::default();
            out.fail(&e.to_string());
            out
        }
    }
}

/// Run with the process arguments, print, and return the exit code.
pub fn main_with_args() -> i32 {
    let out = run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_below_three_is_a_usage_error() {
        let out = run(["twolocal", "classify", "--level", "2"]);
        assert_eq!(out.code, EXIT_USAGE);
        let out = run(["twolocal", "decompose", "--level", "1"]);
        assert_eq!(out.code, EXIT_USAGE);
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        assert_eq!(run(["twolocal", "classify", "--ambient", "so4"]).code, EXIT_USAGE);
        assert_eq!(run(["twolocal", "decompose", "--format", "xml"]).code, EXIT_USAGE);
        assert_eq!(run(["twolocal", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(["twolocal", "classify", "--format", "dot", "--level", "3"]).code, EXIT_USAGE);
    }

    #[test]
    fn classify_su2_at_level_3() {
        let out = run(["twolocal", "classify", "--ambient", "su2", "--level", "3"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.contains("match: yes"));
    }

    #[test]
    fn export_round_trips_through_the_table_checker() {
        let out = run(["twolocal", "export-table", "--level", "1"]);
        assert_eq!(out.code, EXIT_OK);
        let file: TableFile = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(file.elements.len(), 4);
        assert_eq!(check_table(&file).status, Status::Pass);
    }
}
