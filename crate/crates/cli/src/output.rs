//! TSV and JSON rendering. Integers are always printed in base 10 from
//! the exact value; JSON carries them as strings.

use mtlab_core::families::{ClaimStatus, FamilyRecord, Params};
use mtlab_core::quadfield::ClassNumberResult;
use mtlab_core::trinomial::{IrreducibilityCertificate, IrreducibilityVerdict, MonogenicityVerdict};
use serde_json::{json, Map, Value};

/// One output line as `(column, text)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRow(pub Vec<(&'static str, String)>);

impl OutputRow {
    pub fn get(&self, column: &str) -> Option<&str> {
        self.0.iter().find(|(c, _)| *c == column).map(|(_, v)| v.as_str())
    }
}

/// Header plus rows, tab separated, LF terminated.
pub fn render_tsv(columns: &[&str], rows: &[OutputRow]) -> String {
    let mut out = columns.join("\t");
    out.push('\n');
    for row in rows {
        let cells: Vec<&str> = row.0.iter().map(|(_, v)| v.as_str()).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

pub fn render_json_rows(rows: &[OutputRow]) -> String {
    let array: Vec<Value> = rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = row
                .0
                .iter()
                .map(|(c, v)| (c.to_string(), Value::String(v.clone())))
                .collect();
            Value::Object(obj)
        })
        .collect();
    pretty(&Value::Array(array))
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn certificate_text(c: &IrreducibilityCertificate) -> String {
    match c {
        IrreducibilityCertificate::RationalRootExhaustion => "RationalRootExhaustion".into(),
        IrreducibilityCertificate::Eisenstein(p) => format!("Eisenstein({p})"),
        IrreducibilityCertificate::ModP(p) => format!("ModP({p})"),
        IrreducibilityCertificate::DegreePattern(ps) => {
            let ps: Vec<String> = ps.iter().map(u64::to_string).collect();
            format!("DegreePattern({})", ps.join(","))
        }
    }
}

pub fn irreducibility_text(v: &IrreducibilityVerdict) -> String {
    match v {
        IrreducibilityVerdict::Irreducible(c) => format!("Irreducible({})", certificate_text(c)),
        IrreducibilityVerdict::Reducible(r) => format!("Reducible({r})"),
        IrreducibilityVerdict::Unknown => "Unknown".into(),
    }
}

pub fn monogenicity_text(v: &MonogenicityVerdict) -> String {
    match v {
        MonogenicityVerdict::Monogenic => "Monogenic".into(),
        MonogenicityVerdict::NotMonogenic { prime, condition } => {
            format!("NotMonogenic({prime},{})", condition.id())
        }
        MonogenicityVerdict::NotIrreducible(r) => format!("NotIrreducible({r})"),
        MonogenicityVerdict::Unknown(_) => "Unknown".into(),
    }
}

pub fn irreducibility_json(v: &IrreducibilityVerdict) -> Value {
    match v {
        IrreducibilityVerdict::Irreducible(c) => {
            json!({"verdict": "Irreducible", "certificate": certificate_text(c)})
        }
        IrreducibilityVerdict::Reducible(r) => json!({"verdict": "Reducible", "root": r.to_string()}),
        IrreducibilityVerdict::Unknown => json!({"verdict": "Unknown"}),
    }
}

pub fn monogenicity_json(v: &MonogenicityVerdict) -> Value {
    match v {
        MonogenicityVerdict::Monogenic => json!({"verdict": "Monogenic"}),
        MonogenicityVerdict::NotMonogenic { prime, condition } => json!({
            "verdict": "NotMonogenic",
            "witness_prime": prime.to_string(),
            "condition": condition.id().to_string(),
        }),
        MonogenicityVerdict::NotIrreducible(r) => {
            json!({"verdict": "NotIrreducible", "root": r.to_string()})
        }
        MonogenicityVerdict::Unknown(why) => json!({"verdict": "Unknown", "reason": why}),
    }
}

pub fn class_number_json(h: &ClassNumberResult) -> Value {
    let mut obj = Map::new();
    obj.insert("value".into(), Value::String(h.h.to_string()));
    obj.insert("method".into(), Value::String(h.method.name().into()));
    if let Some(n) = h.narrow_h {
        obj.insert("narrow_h".into(), Value::String(n.to_string()));
    }
    if let Some(u) = h.unit_norm {
        obj.insert("unit_norm".into(), Value::String(u.to_string()));
    }
    Value::Object(obj)
}

fn params_json(p: &Params) -> Value {
    match *p {
        Params::Main1 { w } => json!({"w": w.to_string()}),
        Params::Main2 { a, b } => json!({"a": a.to_string(), "b": b.to_string()}),
        Params::Main3 { n, b } | Params::Main4 { n, b } => {
            json!({"N": n.to_string(), "b": b.to_string()})
        }
    }
}

pub fn record_json(r: &FamilyRecord) -> Value {
    let mut obj = Map::new();
    obj.insert("family".into(), Value::String(r.family().name().into()));
    obj.insert("params".into(), params_json(&r.params));
    obj.insert(
        "trinomial".into(),
        json!({
            "N": r.trinomial.degree().to_string(),
            "A": r.trinomial.a().to_string(),
            "B": r.trinomial.b().to_string(),
        }),
    );
    obj.insert("delta".into(), Value::String(r.delta.to_string()));
    obj.insert("irreducible".into(), irreducibility_json(&r.irreducible));
    obj.insert("monogenic".into(), monogenicity_json(&r.monogenic));
    obj.insert(
        "D".into(),
        r.field
            .as_ref()
            .map_or(Value::Null, |k| Value::String(k.discriminant().to_string())),
    );
    obj.insert("h".into(), r.h.as_ref().map_or(Value::Null, class_number_json));
    obj.insert("n_claimed".into(), Value::String(r.n_claimed.to_string()));
    obj.insert("claim_holds".into(), Value::String(r.claim.name().into()));
    if let ClaimStatus::NotEvaluated(why) = &r.claim {
        obj.insert("not_evaluated_reason".into(), Value::String(why.to_string()));
    }
    if let Some(p) = r.order_probe {
        obj.insert("order_probe".into(), Value::Bool(p));
    }
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "holds": c.holds}))
        .collect();
    obj.insert("checks".into(), Value::Array(checks));
    Value::Object(obj)
}

pub const RECORD_COLUMNS: [&str; 10] = [
    "family",
    "params",
    "trinomial",
    "delta",
    "irreducible",
    "monogenic",
    "D",
    "h",
    "n",
    "claim_holds",
];

pub fn record_row(r: &FamilyRecord) -> OutputRow {
    let dash = || "-".to_string();
    OutputRow(vec![
        ("family", r.family().name().into()),
        ("params", r.params.to_string().replace(' ', ",")),
        ("trinomial", r.trinomial.to_string()),
        ("delta", r.delta.to_string()),
        ("irreducible", irreducibility_text(&r.irreducible)),
        ("monogenic", monogenicity_text(&r.monogenic)),
        ("D", r.field.as_ref().map_or_else(dash, |k| k.discriminant().to_string())),
        ("h", r.h.map_or_else(dash, |h| h.h.to_string())),
        ("n", r.n_claimed.to_string()),
        ("claim_holds", r.claim.name().into()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_layout() {
        let rows = vec![
            OutputRow(vec![("w", "-10".into()), ("d", "-4027".into())]),
            OutputRow(vec![("w", "1".into()), ("d", "-23".into())]),
        ];
        assert_eq!(render_tsv(&["w", "d"], &rows), "w\td\n-10\t-4027\n1\t-23\n");
        assert_eq!(render_tsv(&["w"], &[]), "w\n");
    }

    #[test]
    fn json_rows_are_strings() {
        let rows = vec![OutputRow(vec![("delta", "-96889010406".into())])];
        let v: Value = serde_json::from_str(&render_json_rows(&rows)).unwrap();
        assert_eq!(v[0]["delta"], Value::String("-96889010406".into()));
    }
}
