//! The `verify` driver: claim checks per family, then the oracles.

use std::fmt::Write as _;

use mtlab_core::families::{self, ClaimStatus, Distinctness, FamilyConfig, FamilyRecord, Params};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::oracles::{self, OracleReport};
use crate::output;
use crate::{Outcome, EXIT_CLAIM_FAILED, EXIT_OK, EXIT_UNDECIDED};

/// How many oracle mismatches are printed before eliding.
const SHOWN_MISMATCHES: usize = 5;

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub pending: u64,
    pub non_members: u64,
}

impl Tally {
    pub fn exit_code(&self) -> i32 {
        if self.fail > 0 {
            EXIT_CLAIM_FAILED
        } else if self.pending > 0 {
            EXIT_UNDECIDED
        } else {
            EXIT_OK
        }
    }

    fn add(&mut self, other: Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.pending += other.pending;
        self.non_members += other.non_members;
    }
}

fn claim_line(r: &FamilyRecord) -> String {
    let head = format!("{} {}", r.family(), r.params);
    let n = r.n_claimed;
    match (&r.claim, &r.h) {
        (ClaimStatus::Holds, Some(h)) => format!("PASS {head}: {n} | {}", h.h),
        (ClaimStatus::Fails, Some(h)) if h.h % n != 0 => format!("FAIL {head}: {n} does not divide {}", h.h),
        (ClaimStatus::Fails, Some(h)) => {
            format!("FAIL {head}: {n} | {} but no reduced form has order divisible by {n}", h.h)
        }
        (ClaimStatus::NotEvaluated(why), _) => format!("PENDING {head}: {why}"),
        _ => format!("FAIL {head}: claim status without a class number"),
    }
}

/// Appends the per-record lines for one family and returns its tally.
fn family_report(records: &[FamilyRecord], out: &mut String) -> Tally {
    let mut t = Tally::default();
    for r in records {
        let head = format!("{} {}", r.family(), r.params);
        for c in r.failed_checks() {
            t.fail += 1;
            let _ = writeln!(out, "FAIL {head}: check {} violated", c.name);
        }
        if r.criterion_mismatch() {
            t.fail += 1;
            let _ = writeln!(
                out,
                "FAIL {head}: closed-form criterion says {}, local index test says {}",
                r.criterion.unwrap_or_default(),
                output::monogenicity_text(&r.monogenic)
            );
        }
        match &r.claim {
            ClaimStatus::NotEvaluated(why) if !why.is_pending() => t.non_members += 1,
            claim => {
                match claim {
                    ClaimStatus::Holds => t.pass += 1,
                    ClaimStatus::Fails => t.fail += 1,
                    ClaimStatus::NotEvaluated(_) => t.pending += 1,
                }
                let _ = writeln!(out, "{}", claim_line(r));
            }
        }
    }
    let monogenic: Vec<FamilyRecord> = records.iter().filter(|r| r.monogenic.is_monogenic()).cloned().collect();
    if let Some(first) = records.first() {
        let family = first.family();
        match families::distinctness(&monogenic) {
            Ok(Distinctness::Pass) => {
                t.pass += 1;
                let _ = writeln!(
                    out,
                    "PASS {family} distinctness: {} monogenic trinomials, pairwise distinct discriminants",
                    monogenic.len()
                );
            }
            Ok(Distinctness::Fail(p, q)) => {
                t.fail += 1;
                let _ = writeln!(out, "FAIL {family} distinctness: {p} and {q} share a discriminant");
            }
            Err(e) => {
                t.fail += 1;
                let _ = writeln!(out, "FAIL {family} distinctness: {e}");
            }
        }
        let _ = writeln!(
            out,
            "{family}: {} pass, {} fail, {} pending, {} non-members",
            t.pass, t.fail, t.pending, t.non_members
        );
    }
    t
}

fn oracle_report(r: &OracleReport, out: &mut String) -> Tally {
    let mut t = Tally::default();
    if r.passed() {
        t.pass += 1;
        let _ = writeln!(out, "PASS oracle {}: {} cases", r.name, r.cases);
    } else if r.mismatches.is_empty() {
        t.pending += 1;
        let _ = writeln!(out, "PENDING oracle {}: {} of {} cases undecided", r.name, r.undecided, r.cases);
    } else {
        t.fail += 1;
        let _ = writeln!(out, "FAIL oracle {}: {} mismatches in {} cases", r.name, r.mismatches.len(), r.cases);
        for m in r.mismatches.iter().take(SHOWN_MISMATCHES) {
            let _ = writeln!(out, "  {m}");
        }
        if r.mismatches.len() > SHOWN_MISMATCHES {
            let _ = writeln!(out, "  ... {} more", r.mismatches.len() - SHOWN_MISMATCHES);
        }
    }
    t
}

fn oracle_json(r: &OracleReport) -> Value {
    json!({
        "name": r.name,
        "cases": r.cases.to_string(),
        "undecided": r.undecided.to_string(),
        "mismatches": r.mismatches,
        "passed": r.passed(),
    })
}

/// Runs the claim checks for each parameter list, then the oracles if
/// requested.
pub fn run(
    scopes: &[Vec<Params>],
    with_oracles: bool,
    cfg: &RunConfig,
) -> Result<Outcome, families::FamilyError> {
    let fc: FamilyConfig = cfg.family_config();
    let mut text = String::new();
    let mut tally = Tally::default();
    let mut scope_json = Vec::new();
    for params in scopes {
        let records = families::scan_params(params, &fc)?;
        tally.add(family_report(&records, &mut text));
        if let Some(first) = records.first() {
            scope_json.push(json!({
                "scope": first.family().name(),
                "records": records.iter().map(output::record_json).collect::<Vec<_>>(),
            }));
        }
    }
    let mut oracle_values = Vec::new();
    if with_oracles {
        for r in oracles::all_oracles(cfg.seed) {
            tally.add(oracle_report(&r, &mut text));
            oracle_values.push(oracle_json(&r));
        }
    }
    let code = tally.exit_code();
    let _ = writeln!(
        text,
        "tally: {} pass, {} fail, {} pending, {} non-members",
        tally.pass, tally.fail, tally.pending, tally.non_members
    );
    let stdout = match cfg.format {
        Format::Tsv => text,
        Format::Json => output::pretty(&json!({
            "scopes": scope_json,
            "oracles": oracle_values,
            "tally": {
                "pass": tally.pass.to_string(),
                "fail": tally.fail.to_string(),
                "pending": tally.pending.to_string(),
                "non_members": tally.non_members.to_string(),
            },
        })),
    };
    Ok(Outcome::with_code(code, stdout))
}
