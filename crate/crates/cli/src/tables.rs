//! Text and JSON rendering of the bound tables.
//!
//! Text layout, one row per `n`:
//!
//! ```text
//!    n  rule               value
//!    1  minkowski-product  2
//! ```
//!
//! `n` is right-aligned in 4 columns, the rule left-aligned in 17, each
//! followed by two spaces; the value runs to the end of the line. Rows
//! without a value carry a marker in the value column.

use std::fmt::Write as _;

use serde_json::{json, Value};

use jordan_kit_core::bounds::{collins_value, minkowski_bound, symmetric_lower_bound, BoundEntry};
use jordan_kit_core::{GroupError, Result};

use crate::report::int_value;

pub const GAP_MARKER: &str = "not tabulated in source";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Minkowski,
    Collins,
    Symmetric,
}

impl TableKind {
    pub fn default_min_n(self) -> u32 {
        match self {
            TableKind::Minkowski => 1,
            TableKind::Collins => 2,
            TableKind::Symmetric => 4,
        }
    }

    pub fn entry(self, n: u32) -> Result<BoundEntry> {
        match self {
            TableKind::Minkowski => minkowski_bound(n),
            TableKind::Collins => collins_value(n),
            TableKind::Symmetric => symmetric_lower_bound(n),
        }
    }
}

/// One table row: a value, or the reason there is none.
pub type Row = (u32, Result<BoundEntry>);

pub fn rows(kind: TableKind, ns: impl Iterator<Item = u32>) -> Vec<Row> {
    ns.map(|n| (n, kind.entry(n))).collect()
}

fn marker(e: &GroupError) -> String {
    match e {
        GroupError::NotTabulated(_) => GAP_MARKER.to_string(),
        GroupError::NotApplicable { min, .. } => format!("not applicable (n < {min})"),
        other => other.to_string(),
    }
}

pub fn render_text(rows: &[Row]) -> String {
    let mut out = format!("{:>4}  {:<17}  {}\n", "n", "rule", "value");
    for (n, r) in rows {
        let (rule, value) = match r {
            Ok(e) => (e.rule.as_str().to_string(), e.value.to_string()),
            Err(e) => ("-".to_string(), marker(e)),
        };
        writeln!(out, "{n:>4}  {rule:<17}  {value}").expect("string write");
    }
    out
}

pub fn render_json(rows: &[Row]) -> Value {
    let items: Vec<Value> = rows
        .iter()
        .map(|(n, r)| match r {
            Ok(e) => {
                let mut v = json!({
                    "n": n,
                    "rule": e.rule.as_str(),
                    "status": "ok",
                    "value": int_value(&e.value),
                });
                if let Some(exps) = &e.prime_exponents {
                    let m: serde_json::Map<String, Value> =
                        exps.iter().map(|(p, d)| (p.to_string(), Value::from(*d))).collect();
                    v["prime_exponents"] = Value::Object(m);
                }
                v
            }
            Err(e) => json!({
                "n": n,
                "status": match e {
                    GroupError::NotTabulated(_) => "not-tabulated",
                    _ => "not-applicable",
                },
                "value": Value::Null,
                "note": marker(e),
            }),
        })
        .collect();
    Value::Array(items)
}
