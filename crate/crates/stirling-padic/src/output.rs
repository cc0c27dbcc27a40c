//! Machine-readable output: versioned JSON records and CSV/JSON table
//! export. Exact integers are always serialized as decimal strings so
//! nothing is lost; small valuations are plain JSON numbers and an
//! infinite valuation is `null`.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::padic::{val_unit_int, Prime, Valuation};
use crate::stirling::{self, StirlingKind};
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// The one top-level object every JSON-emitting command prints.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }
}

/// Triangle of exact values, rows 0..=n_max, row n holding k = 0..=n.
pub fn value_table(kind: StirlingKind, n_max: u64) -> Vec<Vec<BigInt>> {
    (0..=n_max)
        .map(|n| match kind {
            StirlingKind::Second => stirling::stirling2_row(n),
            StirlingKind::First => stirling::stirling1_row(n),
        })
        .collect()
}

/// Triangle of nu_p valuations; zero entries (k = 0 rows) are infinite.
pub fn valuation_table(kind: StirlingKind, n_max: u64, p: Prime) -> Vec<Vec<Valuation>> {
    value_table(kind, n_max)
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| val_unit_int(v, p).valuation)
                .collect()
        })
        .collect()
}

/// CSV with header `n,k,value`, one line per triangle entry.
pub fn value_table_csv(rows: &[Vec<BigInt>]) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in rows.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            out.push_str(&format!("{n},{k},{v}\n"));
        }
    }
    out
}

/// CSV with header `n,k,nu`; an infinite valuation is an empty field.
pub fn valuation_table_csv(rows: &[Vec<Valuation>]) -> String {
    let mut out = String::from("n,k,nu\n");
    for (n, row) in rows.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            match v {
                Valuation::Finite(x) => out.push_str(&format!("{n},{k},{x}\n")),
                Valuation::Infinite => out.push_str(&format!("{n},{k},\n")),
            }
        }
    }
    out
}

/// JSON rows: exact values as decimal strings.
pub fn value_table_json(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(|v| json!(v.to_string())).collect()))
            .collect(),
    )
}

/// JSON rows: valuations as numbers, infinite as null.
pub fn valuation_table_json(rows: &[Vec<Valuation>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|v| match v {
                            Valuation::Finite(x) => json!(x),
                            Valuation::Infinite => Value::Null,
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Exact value plus optional p-adic data, as a results object.
pub fn stirling_results(value: &BigInt, p: Option<Prime>) -> Result<Value> {
    let mut results = json!({ "value": value.to_string() });
    if let Some(p) = p {
        let vu = val_unit_int(value, p);
        results["nu"] = match vu.valuation {
            Valuation::Finite(v) => json!(v),
            Valuation::Infinite => Value::Null,
        };
        results["eps_residue"] = match vu.unit_residue {
            Some(r) => json!(r),
            None => Value::Null,
        };
    }
    Ok(results)
}
