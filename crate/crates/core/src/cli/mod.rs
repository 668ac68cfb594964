//! Command-line driver behind the `qdisc` binary.
//!
//! `verify` runs registered checks and writes one JSON record per task,
//! `explore` runs the conjecture sweep (JSON or CSV), `identity` runs the
//! identity checks, and `list-catalog` / `list-checks` describe what exists.
//!
//! Exit status: 0 when every record matches its expected verdict, 1 when
//! some verdict is unexpected, 2 for an invalid configuration, 3 when a check
//! raised an error (its record carries the message).

mod config;
mod output;
mod registry;

pub use config::{parse_complex, FileConfig, GridSpec, OutputFormat, RunConfig, MIN_ORDER};
pub use output::{Body, Record, RunReport, Status, Summary, SCHEMA_VERSION};
pub use registry::{lookup, tasks, verify_ids, CheckKind, CheckSpec, CHECKS};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::catalog;
use crate::error::{QdiscError, Result};

/// Environment variable limiting the worker pool (0 or unset: automatic).
pub const THREADS_ENV: &str = "QDISC_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qdisc", version, about = "Numerical checks for the zeta-derivative on the unit disc")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run checks and write a JSON report.
    Verify(RunArgs),
    /// Run the conjecture sweep over a zeta grid.
    Explore(RunArgs),
    /// Run identity checks such as the cotangent identity.
    Identity(RunArgs),
    /// List catalog functions and their declared classes.
    ListCatalog(ListArgs),
    /// List registered checks.
    ListChecks(ListArgs),
}

#[derive(Debug, Default, Args)]
pub struct ListArgs {
    /// Print JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Default, Args)]
pub struct RunArgs {
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Check ids (or `all`), comma separated or repeated.
    #[arg(long = "check", value_delimiter = ',')]
    pub checks: Vec<String>,
    /// Named suite; `paper` runs every registered check.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long = "function", value_delimiter = ',')]
    pub functions: Vec<String>,
    /// Complex parameters such as `0.3+0.4i`, `i` or `-0.5`.
    #[arg(long = "zeta", value_delimiter = ',', allow_hyphen_values = true)]
    pub zetas: Vec<String>,
    #[arg(long = "q", value_delimiter = ',')]
    pub qs: Vec<f64>,
    /// Circle radii for the distortion check.
    #[arg(long = "radius", value_delimiter = ',')]
    pub radius: Vec<f64>,
    /// Truncation order N for series-based checks.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub rmax: Option<f64>,
    /// Number of equally spaced radii (default: the standard radii).
    #[arg(long)]
    pub radii: Option<usize>,
    #[arg(long)]
    pub angles: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Omit wall-clock times so identical runs give identical files.
    #[arg(long)]
    pub no_timings: bool,
    #[arg(long = "zeta-moduli", value_delimiter = ',')]
    pub zeta_moduli: Vec<f64>,
    #[arg(long)]
    pub zeta_args: Option<usize>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn non_empty<T>(v: Vec<T>) -> Option<Vec<T>> {
    if v.is_empty() {
        None
    } else {
        Some(v)
    }
}

impl RunArgs {
    fn into_file_config(self) -> Result<FileConfig> {
        let base = match &self.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let flags = FileConfig {
            checks: non_empty(self.checks),
            suite: self.suite,
            functions: non_empty(self.functions),
            zeta: non_empty(self.zetas),
            q: non_empty(self.qs),
            radius: non_empty(self.radius),
            order: self.order,
            grid: GridSpec {
                r_max: self.rmax,
                radii: self.radii,
                angles: self.angles,
            },
            tol: self.tol,
            out: self.out,
            format: self.format,
            timings: self.no_timings.then_some(false),
            zeta_moduli: non_empty(self.zeta_moduli),
            zeta_args: self.zeta_args,
            samples: self.samples,
            seed: self.seed,
        };
        Ok(flags.or(base))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Verify,
    Explore,
    Identity,
}

/// Sizes the global worker pool from [`THREADS_ENV`]. A pool that already
/// exists is kept.
pub fn configure_threads() -> Result<()> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| QdiscError::ConfigInvalid(format!("{THREADS_ENV}={v:?} is not a count")))?,
        Err(_) => 0,
    };
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing
/// listings and reports without `--out` to `stdout`. Returns the exit code.
pub fn run_with_args<I, T>(args: I, stdout: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qdisc: {e}");
            match e {
                QdiscError::ConfigInvalid(_) => 2,
                _ => 3,
            }
        }
    }
}

pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<u8> {
    configure_threads()?;
    match cli.command {
        Command::Verify(args) => run_checks(Mode::Verify, args, stdout),
        Command::Explore(args) => run_checks(Mode::Explore, args, stdout),
        Command::Identity(args) => run_checks(Mode::Identity, args, stdout),
        Command::ListCatalog(args) => {
            let rows = catalog::listing();
            if args.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&rows).expect("listing serializes"))?;
            } else {
                for r in rows {
                    let tags: Vec<_> = r.memberships.iter().map(|m| m.as_str()).collect();
                    writeln!(
                        stdout,
                        "{:<18} {:<34} d_zeta={:<18} param={:<8} {}",
                        r.id,
                        tags.join(","),
                        r.exact_dzeta,
                        r.parameter.as_deref().unwrap_or("-"),
                        if r.corpus_enrichment { "corpus-enrichment" } else { "" }
                    )?;
                }
            }
            Ok(0)
        }
        Command::ListChecks(args) => {
            if args.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&CHECKS).expect("registry serializes"))?;
            } else {
                for c in &CHECKS {
                    let aliases = if c.aliases.is_empty() {
                        String::new()
                    } else {
                        format!(" (alias {})", c.aliases.join(", "))
                    };
                    writeln!(
                        stdout,
                        "{:<24} {:<8} expect {:<4} {}{}",
                        c.id,
                        format!("{:?}", c.kind).to_lowercase(),
                        c.expected.as_str(),
                        c.summary,
                        aliases
                    )?;
                }
            }
            Ok(0)
        }
    }
}

fn run_checks(mode: Mode, args: RunArgs, stdout: &mut dyn Write) -> Result<u8> {
    let mut file = args.into_file_config()?;
    if file.checks.is_none() && file.suite.is_none() {
        file.checks = match mode {
            Mode::Verify => None,
            Mode::Explore => Some(vec!["conjecture".into()]),
            Mode::Identity => Some(vec!["angle-identity".into()]),
        };
    }
    if file.format.is_none() && file.out.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e == "csv")) {
        file.format = Some(OutputFormat::Csv);
    }
    let cfg = RunConfig::from_file_config(file)?;
    if mode == Mode::Identity {
        if let Some(id) = cfg.checks.iter().find(|id| lookup(id).map(|c| c.kind) != Ok(CheckKind::Identity)) {
            return Err(QdiscError::ConfigInvalid(format!("{id} is not an identity check")));
        }
    }
    let mut all = Vec::new();
    for id in &cfg.checks {
        let spec = lookup(id)?;
        let expanded = tasks(spec, &cfg).map_err(|e| match e {
            QdiscError::ConfigInvalid(_) => e,
            other => QdiscError::ConfigInvalid(format!("{id}: {other}")),
        })?;
        all.extend(expanded);
    }
    let mut records = Vec::with_capacity(all.len());
    for task in &all {
        let start = Instant::now();
        let body = task.run().unwrap_or_else(|e| Body::Error { message: e.to_string() });
        let ms = cfg.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        records.push(Record::new(task.spec.id, task.spec.expected, body, ms));
    }
    let report = RunReport::new(records);
    let text = match cfg.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    let s = &report.summary;
    eprintln!(
        "qdisc: {} records, {} as expected, {} unexpected, {} errors",
        s.records, s.as_expected, s.unexpected, s.errors
    );
    Ok(report.exit_code())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (u8, String) {
        let mut out = Vec::new();
        let mut full = vec!["qdisc"];
        full.extend_from_slice(args);
        let code = run_with_args(full, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn listings() {
        let (code, text) = run(&["list-checks"]);
        assert_eq!(code, 0);
        assert!(text.contains("convex-zeta-bound") && text.contains("alias theorem1"));
        let (code, text) = run(&["list-catalog", "--json"]);
        assert_eq!(code, 0);
        assert!(text.contains("\"strip_convex\""));
    }

    #[test]
    fn single_check_report() {
        let (code, text) = run(&[
            "verify", "--check", "theorem1", "--function", "half_plane", "--zeta", "0.3+0.4i", "--rmax", "0.9",
            "--angles", "32", "--no-timings",
        ]);
        assert_eq!(code, 0, "{text}");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["records"][0]["report"]["verdict"], "PASS");
        assert_eq!(v["records"][0]["report"]["params"]["zeta"], "0.3+0.4i");
        assert!(v["records"][0].get("wall_time_ms").is_none());
    }

    #[test]
    fn config_errors_exit_two() {
        assert_eq!(run(&["verify", "--check", "nope"]).0, 2);
        assert_eq!(run(&["verify", "--order", "4"]).0, 2);
        assert_eq!(run(&["identity", "--check", "q-class"]).0, 2);
        assert_eq!(run(&["verify", "--bogus"]).0, 2);
    }

    #[test]
    fn check_errors_exit_three() {
        // zeta = 1 is rejected by the quotient bounds, which divide by 1 - zeta
        let (code, text) = run(&[
            "verify", "--check", "quotient-bounds", "--function", "half_plane", "--zeta", "1", "--angles", "8",
        ]);
        assert_eq!(code, 3);
        assert!(text.contains("\"type\": \"error\""));
    }
}
