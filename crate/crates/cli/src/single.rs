//! Single-shot subcommands: one input, one verdict.

use mtlab_core::arith::{self, FactoredInt};
use mtlab_core::families::{SLOW_IMAGINARY_DISC, SLOW_REAL_DISC};
use mtlab_core::quadfield::{self, QuadFieldError, QuadForm};
use mtlab_core::trinomial::{IrreducibilityVerdict, Trinomial, INDEX_ORACLE_MAX_PRIME};
use mtlab_core::QuadField;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::TrinomialArgs;
use crate::config::{Format, RunConfig};
use crate::output::{self, OutputRow};
use crate::{Outcome, EXIT_OK, EXIT_UNDECIDED};

fn emit(cfg: &RunConfig, columns: &[&str], rows: Vec<OutputRow>, json: Value) -> String {
    match cfg.format {
        Format::Tsv => output::render_tsv(columns, &rows),
        Format::Json => output::pretty(&json),
    }
}

fn trinomial(t: &TrinomialArgs) -> Result<Trinomial, Outcome> {
    if t.n < 3 {
        return Err(Outcome::usage(format!("--N must be at least 3, got {}", t.n)));
    }
    Trinomial::new(t.n, t.a.clone(), t.b.clone()).map_err(|e| Outcome::usage(e.to_string()))
}

fn trinomial_json(t: &Trinomial) -> Value {
    json!({"N": t.degree().to_string(), "A": t.a().to_string(), "B": t.b().to_string()})
}

fn factors_json(f: &FactoredInt) -> Value {
    let factors: Vec<Value> = f
        .factors()
        .iter()
        .map(|(p, e)| json!({"p": p.to_string(), "e": e.to_string()}))
        .collect();
    json!({"factors": factors, "cofactor": f.cofactor().to_string(), "complete": f.is_complete()})
}

pub fn disc(cfg: &RunConfig, t: &TrinomialArgs) -> Outcome {
    let t = match trinomial(t) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let d = t.swan_discriminant().to_string();
    let row = OutputRow(vec![("trinomial", t.to_string()), ("discriminant", d.clone())]);
    let json = json!({"trinomial": trinomial_json(&t), "discriminant": d});
    Outcome::ok(emit(cfg, &["trinomial", "discriminant"], vec![row], json))
}

pub fn irr(cfg: &RunConfig, t: &TrinomialArgs) -> Outcome {
    let t = match trinomial(t) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let fc = cfg.family_config();
    let v = t.irreducibility(&t.default_trial_primes(fc.trial_primes), &fc.budget);
    let row = OutputRow(vec![("trinomial", t.to_string()), ("irreducible", output::irreducibility_text(&v))]);
    let json = json!({"trinomial": trinomial_json(&t), "irreducible": output::irreducibility_json(&v)});
    let code = if matches!(v, IrreducibilityVerdict::Unknown) { EXIT_UNDECIDED } else { EXIT_OK };
    Outcome::with_code(code, emit(cfg, &["trinomial", "irreducible"], vec![row], json))
}

pub fn monogenic(cfg: &RunConfig, t: &TrinomialArgs) -> Outcome {
    let t = match trinomial(t) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let analysis = match t.analyze(&cfg.budget()) {
        Ok(a) => a,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let row = OutputRow(vec![
        ("trinomial", t.to_string()),
        ("discriminant", analysis.discriminant.to_string()),
        ("monogenic", output::monogenicity_text(&analysis.verdict)),
    ]);
    let json = json!({
        "trinomial": trinomial_json(&t),
        "discriminant": analysis.discriminant.to_string(),
        "discriminant_factorization": analysis.discriminant_factors.as_ref().map_or(Value::Null, factors_json),
        "irreducible": output::irreducibility_json(&analysis.irreducibility),
        "monogenic": output::monogenicity_json(&analysis.verdict),
    });
    let code = if analysis.verdict.is_decided() { EXIT_OK } else { EXIT_UNDECIDED };
    Outcome::with_code(code, emit(cfg, &["trinomial", "discriminant", "monogenic"], vec![row], json))
}

pub fn jks(cfg: &RunConfig, t: &TrinomialArgs, q: Option<&BigInt>) -> Outcome {
    let t = match trinomial(t) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let disc = t.swan_discriminant();
    if disc == BigInt::from(0) {
        return Outcome::usage(format!("{t} has a repeated root"));
    }
    let fdisc = arith::factorize(&disc, &cfg.budget()).expect("nonzero");
    let primes: Vec<BigInt> = match q {
        Some(q) => vec![q.clone()],
        None => fdisc.primes().cloned().collect(),
    };
    let irreducible = t.irreducibility(&[], &cfg.budget()).is_irreducible();
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for p in &primes {
        let outcome = match t.jks_prime_test(p) {
            Ok(o) => o,
            Err(e) => return Outcome::usage(e.to_string()),
        };
        let verdict = if outcome.passed() {
            "Pass".to_string()
        } else {
            format!("Fail({})", outcome.condition().id())
        };
        let small = u64::try_from(p).ok().filter(|&p| p <= INDEX_ORACLE_MAX_PRIME);
        let index = match small {
            Some(p) if t.degree() == 3 && irreducible => match t.index_oracle_cubic(p, INDEX_ORACLE_MAX_PRIME) {
                Ok(true) => "divides",
                Ok(false) => "coprime",
                Err(_) => "-",
            },
            _ => "-",
        };
        let v = arith::valuation(&disc, p).map(|v| v.to_string()).unwrap_or_default();
        items.push(json!({"q": p.to_string(), "valuation": v, "jks": verdict, "index_oracle": index}));
        rows.push(OutputRow(vec![
            ("q", p.to_string()),
            ("v_q", v),
            ("jks", verdict),
            ("index_oracle", index.to_string()),
        ]));
    }
    let complete = q.is_some() || fdisc.is_complete();
    let json = json!({
        "trinomial": trinomial_json(&t),
        "discriminant": disc.to_string(),
        "primes": items,
        "complete": complete,
    });
    let stdout = emit(cfg, &["q", "v_q", "jks", "index_oracle"], rows, json);
    if complete {
        Outcome::ok(stdout)
    } else {
        let mut o = Outcome::with_code(EXIT_UNDECIDED, stdout);
        o.stderr = format!("discriminant only partially factored; cofactor {}\n", fdisc.cofactor());
        o
    }
}

pub fn classnum(cfg: &RunConfig, delta: &BigInt) -> Outcome {
    let field = match QuadField::new(delta, &cfg.budget()) {
        Ok(k) => k,
        Err(e @ QuadFieldError::DegenerateRadicand) => return Outcome::usage(e.to_string()),
        Err(e) => return Outcome::undecided(format!("{e}\n")),
    };
    let d = match field.discriminant_i64() {
        Ok(d) => d,
        Err(e) => return Outcome::undecided(format!("{e}\n")),
    };
    let slow = if d < 0 { -d > SLOW_IMAGINARY_DISC } else { d > SLOW_REAL_DISC };
    if slow && !cfg.slow_paths {
        return Outcome::undecided(format!("class number of D={d} needs --slow\n"));
    }
    let result = if d < 0 {
        match &cfg.progress {
            Some(p) => quadfield::class_number_imaginary_with_progress(d, p.as_ref()),
            None => quadfield::class_number_imaginary(d),
        }
    } else {
        quadfield::class_number_real(d)
    };
    let h = match result {
        Ok(h) => h,
        Err(e) => return Outcome::undecided(format!("{e}\n")),
    };
    let dash = || "-".to_string();
    let row = OutputRow(vec![
        ("delta", delta.to_string()),
        ("D", d.to_string()),
        ("h", h.h.to_string()),
        ("method", h.method.name().to_string()),
        ("narrow_h", h.narrow_h.map_or_else(dash, |n| n.to_string())),
        ("unit_norm", h.unit_norm.map_or_else(dash, |n| n.to_string())),
    ]);
    let json = json!({"delta": delta.to_string(), "D": d.to_string(), "h": output::class_number_json(&h)});
    Outcome::ok(emit(cfg, &["delta", "D", "h", "method", "narrow_h", "unit_norm"], vec![row], json))
}

fn parse_form(s: &str) -> Result<QuadForm, String> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| format!("--form {s:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b, c] => Ok(QuadForm::new(a, b, c)),
        _ => Err(format!("--form expects a,b,c, got {s:?}")),
    }
}

pub fn order(cfg: &RunConfig, form: &str) -> Outcome {
    let form = match parse_form(form) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(e),
    };
    let d = match i64::try_from(form.discriminant()) {
        Ok(d) if d < 0 && d.unsigned_abs() < quadfield::MAX_ABS_DISCRIMINANT as u64 => d,
        _ => return Outcome::usage(format!("{form} is not a supported positive definite form")),
    };
    let reduced = match quadfield::reduce_definite(form, d) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let order = match quadfield::form_order(form, d, cfg.probe_order_bound.max(1)) {
        Ok(o) => o,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let Some(k) = order else {
        return Outcome::undecided(format!(
            "order of {form} exceeds --probe-order-bound {}\n",
            cfg.probe_order_bound
        ));
    };
    let row = OutputRow(vec![
        ("form", form.to_string()),
        ("D", d.to_string()),
        ("reduced", reduced.to_string()),
        ("order", k.to_string()),
    ]);
    let json = json!({
        "form": form.to_string(),
        "D": d.to_string(),
        "reduced": reduced.to_string(),
        "order": k.to_string(),
    });
    Outcome::ok(emit(cfg, &["form", "D", "reduced", "order"], vec![row], json))
}
