//! JSON reports.
//!
//! Integers up to 2⁵³−1 are JSON numbers; larger ones are decimal strings,
//! so readers that parse numbers as doubles lose nothing. Keys are sorted.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use jordan_kit_core::{AnalysisReport, CheckRecord, SubgroupSet};

pub const REPORT_FORMAT: &str = "jordan-kit/report";
pub const CHECK_FORMAT: &str = "jordan-kit/check";

const MAX_SAFE: u64 = (1 << 53) - 1;

pub fn int_value(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) if v <= MAX_SAFE => Value::from(v),
        _ => Value::from(x.to_string()),
    }
}

fn usize_value(x: usize) -> Value {
    int_value(&BigUint::from(x))
}

fn subgroup_value(s: &SubgroupSet) -> Value {
    json!({
        "order": usize_value(s.order()),
        "members": s.members(),
    })
}

/// Canonical JSON text: sorted keys, two-space indent, arrays of scalars
/// on one line, final newline.
pub fn render(v: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            // serde_json's map is ordered by key
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::from(k.as_str()).to_string());
                out.push_str(": ");
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Report file for one analysis. Timing is deliberately left out so that
/// repeated runs produce identical files.
pub fn analysis_report(group: &str, r: &AnalysisReport) -> Value {
    json!({
        "format": REPORT_FORMAT,
        "version": 1,
        "group": group,
        "order": usize_value(r.order),
        "jordan_constant": usize_value(r.jordan_constant),
        "bound_constant": usize_value(r.bound_constant),
        "subgroup_class_count": usize_value(r.subgroup_class_count),
        "witness_subgroup": subgroup_value(&r.witness_subgroup),
        "witness_abelian": subgroup_value(&r.witness_abelian),
    })
}

pub fn status(r: &CheckRecord) -> &'static str {
    match (&r.skipped, r.passed) {
        (Some(_), _) => "skipped",
        (None, true) => "passed",
        (None, false) => "failed",
    }
}

pub fn check_record(r: &CheckRecord) -> Value {
    let computed: Map<String, Value> = r
        .computed
        .iter()
        .map(|(k, v)| (k.clone(), int_value(v)))
        .collect();
    let relations: Vec<Value> = r
        .relations
        .iter()
        .map(|rel| json!({"lhs": rel.lhs, "rhs": rel.rhs}))
        .collect();
    let mut v = json!({
        "format": CHECK_FORMAT,
        "version": 1,
        "check_id": r.check_id,
        "inputs": r.inputs,
        "status": status(r),
        "passed": r.passed,
        "computed": computed,
        "relations": relations,
        "witnesses": r.witnesses,
    });
    if let Some(reason) = &r.skipped {
        v["reason"] = Value::from(reason.as_str());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_compact_and_sorted() {
        let v = json!({"b": [1, 2], "a": {"z": [], "y": [[1], [2, 3]]}, "c": {}});
        assert_eq!(
            render(&v),
            "{\n  \"a\": {\n    \"y\": [\n      [1],\n      [2, 3]\n    ],\n    \"z\": []\n  },\n  \"b\": [1, 2],\n  \"c\": {}\n}\n"
        );
    }

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(int_value(&BigUint::from(MAX_SAFE)), Value::from(MAX_SAFE));
        assert_eq!(
            int_value(&BigUint::from(MAX_SAFE + 1)),
            Value::from("9007199254740992")
        );
        let huge = BigUint::from(u64::MAX) * 10u32;
        assert_eq!(int_value(&huge), Value::from(huge.to_string()));
    }
}
