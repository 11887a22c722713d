//! Report assembly: one JSON object and one CSV table per run, built from the
//! same numbers so the two formats always agree.
//!
//! JSON layout: `{"command", "inputs", "results", "meta": {"version",
//! "rng_id", "seed"}}`. Floats use shortest round-trip formatting in both
//! formats; an infinite correlation ratio is the literal string `inf`.

use serde_json::{json, Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A finished report in both output formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub csv: String,
}

pub fn number(v: f64) -> Value {
    debug_assert!(v.is_finite(), "non-finite {v} must use a marker");
    json!(v)
}

/// JSON value for a correlation ratio: a number, or the string "inf" at the
/// pure-(+) limit.
pub fn rho_value(v: f64) -> Value {
    if v.is_infinite() {
        Value::String("inf".into())
    } else {
        number(v)
    }
}

/// CSV cell for a float: shortest round-trip digits, "inf" for infinity.
pub fn csv_f64(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        format!("{v}")
    }
}

pub fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub struct Meta {
    pub rng_id: Option<&'static str>,
    pub seed: Option<u64>,
}

impl Meta {
    pub fn plain() -> Self {
        Self {
            rng_id: None,
            seed: None,
        }
    }

    pub fn seeded(rng_id: &'static str, seed: u64) -> Self {
        Self {
            rng_id: Some(rng_id),
            seed: Some(seed),
        }
    }
}

pub fn assemble(command: &str, inputs: Value, results: Value, meta: Meta, csv: String) -> Report {
    let json = json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "meta": {
            "version": VERSION,
            "rng_id": meta.rng_id,
            "seed": meta.seed,
        },
    });
    Report { json, csv }
}

/// Object builder from pairs; serde_json stores keys sorted, which keeps the
/// emitted layout deterministic.
pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
