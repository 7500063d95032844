//! The `mtlab` command line as a library: [`run`] takes argv and returns
//! the exit code and both output streams, so tests drive it in-process.
//!
//! Exit codes: 0 success, 1 a claim or oracle failed, 2 something was
//! left undecided (slow path, factoring budget, Unknown verdict), 3 usage.

pub mod args;
pub mod config;
pub mod oracles;
pub mod output;
pub mod single;
pub mod tables;
pub mod verify;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use mtlab_core::families::{FamilyError, Params, Progress, ScanRange};

use args::{Cli, Command, FamilyArg, RangeArgs, Scope, Span};
use config::{Format, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    pub fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = format!("error: {}", msg.into());
        stderr.push('\n');
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr }
    }

    /// Exit 2 with an explanation on stderr.
    pub fn undecided(msg: String) -> Self {
        Outcome { code: EXIT_UNDECIDED, stdout: String::new(), stderr: msg }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, None)
}

/// As [`run`], reporting long class-number sweeps to `progress`.
pub fn run_with<I, T>(argv: I, progress: Option<Progress>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let defaults = RunConfig::default();
    let g = &cli.global;
    let cfg = RunConfig {
        seed: g.seed.unwrap_or(defaults.seed),
        factor_budget_ms: g.factor_budget_ms,
        slow_paths: g.slow,
        probe_order_bound: g.probe_order_bound.unwrap_or(defaults.probe_order_bound),
        format: g.format,
        all_h: g.all_h,
        progress,
    };
    dispatch(&cli.command, &cfg)
}

fn family_error(e: FamilyError) -> Outcome {
    match e {
        FamilyError::ParameterRange(_) | FamilyError::NotCoprime { .. } => Outcome::usage(e.to_string()),
        other => Outcome {
            code: EXIT_CLAIM_FAILED,
            stdout: String::new(),
            stderr: format!("error: {other}\n"),
        },
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Outcome {
    match cmd {
        Command::Table { id } => table(*id, cfg),
        Command::Disc(t) => single::disc(cfg, t),
        Command::Irr(t) => single::irr(cfg, t),
        Command::Monogenic(t) => single::monogenic(cfg, t),
        Command::Jks { t, q } => single::jks(cfg, t, q.as_ref()),
        Command::Classnum { delta } => single::classnum(cfg, delta),
        Command::Order { form } => single::order(cfg, form),
        Command::Scan { family, ranges } => scan(*family, ranges, cfg),
        Command::Verify { scope, ranges } => verify(*scope, ranges, cfg),
    }
}

fn table(id: u8, cfg: &RunConfig) -> Outcome {
    let t = match tables::table(id, &cfg.family_config()) {
        Ok(t) => t,
        Err(e) => return family_error(e),
    };
    let stdout = match cfg.format {
        Format::Tsv => output::render_tsv(t.columns, &t.rows),
        Format::Json => output::render_json_rows(&t.rows),
    };
    let stderr: String = t.skipped.iter().map(|s| format!("{s}\n")).collect();
    let code = if t.skipped.is_empty() { EXIT_OK } else { EXIT_UNDECIDED };
    Outcome { code, stdout, stderr }
}

/// The parameter tuples a family command covers: the flags given, or the
/// ranges behind the corresponding table when none are.
pub fn family_params(family: FamilyArg, r: &RangeArgs) -> Result<Vec<Params>, String> {
    let reject = |flag: &str, given: bool| {
        if given {
            Err(format!("--{flag} does not apply to {family:?}").to_lowercase())
        } else {
            Ok(())
        }
    };
    let first = |own: Option<Span>, name: &str| -> Result<Option<Span>, String> {
        match (own, r.range) {
            (Some(_), Some(_)) => Err(format!("give --{name} or --range, not both")),
            (x, y) => Ok(x.or(y)),
        }
    };
    let range = match family {
        FamilyArg::Main1 => {
            reject("a", r.a.is_some())?;
            reject("b", r.b.is_some())?;
            reject("N", r.n.is_some())?;
            let w = first(r.w, "w")?.map_or(tables::TABLE1_W, |s| (s.0, s.1));
            ScanRange::Main1 { w }
        }
        FamilyArg::Main2 => {
            reject("w", r.w.is_some())?;
            reject("N", r.n.is_some())?;
            let a = first(r.a, "a")?.map_or(Ok(tables::TABLE2_A), |s| s.to_u32("a"))?;
            let b = r.b.map_or(Ok(tables::TABLE2_B), |s| s.to_u32("b"))?;
            ScanRange::Main2 { a, b }
        }
        FamilyArg::Main3 | FamilyArg::Main4 => {
            reject("w", r.w.is_some())?;
            reject("a", r.a.is_some())?;
            let n = first(r.n, "N")?;
            if family == FamilyArg::Main4 && n.is_none() && r.b.is_none() {
                return Ok(tables::table4_params());
            }
            let (n_default, b_default) = match family {
                FamilyArg::Main3 => (DEFAULT_MAIN3_N, DEFAULT_MAIN3_B),
                _ => (DEFAULT_MAIN4_N, DEFAULT_MAIN4_B),
            };
            let n = n.map_or(Ok(n_default), |s| s.to_u32("N"))?;
            let b = r.b.map_or(Ok(b_default), |s| s.to_u32("b"))?;
            match family {
                FamilyArg::Main3 => ScanRange::Main3 { n, b },
                _ => ScanRange::Main4 { n, b },
            }
        }
    };
    Ok(range.params())
}

/// Main3 default: the two degree-6 members, which are the rows of Table 3.
pub const DEFAULT_MAIN3_N: (u32, u32) = (6, 6);
pub const DEFAULT_MAIN3_B: (u32, u32) = (1, 2);
/// Main4 defaults when only one of `--N`, `--b` is given.
pub const DEFAULT_MAIN4_N: (u32, u32) = (3, 3);
pub const DEFAULT_MAIN4_B: (u32, u32) = (2, 4);

fn scan(family: FamilyArg, ranges: &RangeArgs, cfg: &RunConfig) -> Outcome {
    let params = match family_params(family, ranges) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let records = match mtlab_core::families::scan_params(&params, &cfg.family_config()) {
        Ok(r) => r,
        Err(e) => return family_error(e),
    };
    let stdout = match cfg.format {
        Format::Tsv => {
            let rows: Vec<_> = records.iter().map(output::record_row).collect();
            output::render_tsv(&output::RECORD_COLUMNS, &rows)
        }
        Format::Json => {
            let values: Vec<_> = records.iter().map(output::record_json).collect();
            output::pretty(&serde_json::Value::Array(values))
        }
    };
    Outcome::ok(stdout)
}

fn verify(scope: Scope, ranges: &RangeArgs, cfg: &RunConfig) -> Outcome {
    let families_in = |f: FamilyArg| family_params(f, ranges);
    let (scopes, with_oracles) = match scope {
        Scope::Main1 => (vec![families_in(FamilyArg::Main1)], false),
        Scope::Main2 => (vec![families_in(FamilyArg::Main2)], false),
        Scope::Main3 => (vec![families_in(FamilyArg::Main3)], false),
        Scope::Main4 => (vec![families_in(FamilyArg::Main4)], false),
        Scope::Oracles | Scope::All => {
            let any = ranges.w.or(ranges.a).or(ranges.b).or(ranges.n).or(ranges.range);
            if any.is_some() {
                return Outcome::usage("range flags apply to a single family scope");
            }
            if scope == Scope::Oracles {
                (Vec::new(), true)
            } else {
                let all = [FamilyArg::Main1, FamilyArg::Main2, FamilyArg::Main3, FamilyArg::Main4];
                (all.into_iter().map(families_in).collect(), true)
            }
        }
    };
    let scopes: Vec<Vec<Params>> = match scopes.into_iter().collect() {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    verify::run(&scopes, with_oracles, cfg).unwrap_or_else(family_error)
}
