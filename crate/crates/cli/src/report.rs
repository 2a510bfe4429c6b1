//! JSON and plain-text rendering of results.

use std::fmt::Write as _;

use gassmann_core::cyclotomic::Cyclotomic;
use gassmann_core::verify::{Detail, VerificationReport};
use serde_json::{json, Map, Value};

/// `{"order": m, "coeffs": ["p/q", ...]}` in the power basis of `ℚ(ζ_m)`.
pub fn cyclotomic_json(c: &Cyclotomic) -> Value {
    let coeffs: Vec<Value> =
        c.coeffs().iter().map(|r| Value::String(format!("{}/{}", r.numer(), r.denom()))).collect();
    json!({ "order": c.order(), "coeffs": coeffs })
}

pub fn detail_json(d: &Detail) -> Value {
    match d {
        Detail::Bool(b) => json!(b),
        Detail::Integer(n) => json!(n),
        Detail::Text(s) => json!(s),
        Detail::Value(c) => cyclotomic_json(c),
        Detail::Values(cs) => Value::Array(cs.iter().map(cyclotomic_json).collect()),
        Detail::Integers(ns) => json!(ns),
    }
}

fn detail_text(d: &Detail) -> String {
    match d {
        Detail::Bool(b) => b.to_string(),
        Detail::Integer(n) => n.to_string(),
        Detail::Text(s) => s.clone(),
        Detail::Value(c) => c.to_string(),
        Detail::Values(cs) => {
            let parts: Vec<String> = cs.iter().map(Cyclotomic::to_string).collect();
            format!("[{}]", parts.join(", "))
        }
        Detail::Integers(ns) => format!("{ns:?}"),
    }
}

pub fn verification_json(r: &VerificationReport) -> Value {
    let cases: Vec<Value> = r
        .cases
        .iter()
        .map(|c| {
            let mut fields = Map::new();
            for (k, v) in &c.fields {
                fields.insert((*k).to_string(), detail_json(v));
            }
            json!({ "id": c.id, "passed": c.passed, "fields": fields })
        })
        .collect();
    json!({ "theorem": r.theorem, "instance": r.instance, "cases": cases })
}

pub fn verification_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "theorem:  {}", r.theorem);
    let _ = writeln!(out, "instance: {}", r.instance);
    for c in &r.cases {
        let mark = if c.passed { "pass" } else { "FAIL" };
        let fields: Vec<String> = c.fields.iter().map(|(k, v)| format!("{k}={}", detail_text(v))).collect();
        let line = format!("  [{mark}] {} {}", c.id, fields.join(" "));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let _ = writeln!(out, "outcome:  {}", r.outcome.as_str());
    out
}

/// The JSON document every subcommand emits.
pub fn document(
    command: &str,
    inputs: Value,
    config: Value,
    outcome: &str,
    details: Value,
    elapsed_ms: u128,
) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "config": config,
        "outcome": outcome,
        "details": details,
        "timing": { "elapsed_ms": elapsed_ms },
    })
}
