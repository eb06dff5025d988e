//! On-disk group files.
//!
//! A group file is a JSON object
//! `{"format": "jordan-kit/group", "version": 1, "kind": ..., ...}` with one of
//! the kinds
//!
//! * `"spec"`: `family` plus the integer parameters `n`, `factors`, `k`, `r`
//!   the family needs;
//! * `"product"`: `left` and `right`, each a group body without the
//!   `format`/`version` header;
//! * `"permutation"`: `degree` and `generators`, each generator a list of
//!   cycles;
//! * `"matrix"`: `dim`, prime `p` and `generators` as integer matrices;
//! * `"cayley"`: `order`, the multiplication table as a list of rows, and
//!   optional display `labels`.
//!
//! Files are written in the canonical layout of [`crate::report::render`]
//! with no floating-point numbers, so writing a parsed file reproduces it
//! byte for byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use jordan_kit_core::constructions::{family_from_parts, Family};
use jordan_kit_core::{GroupError, GroupSpec, Permutation};

use crate::CliError;

pub const GROUP_FORMAT: &str = "jordan-kit/group";
pub const VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupBody {
    Spec {
        family: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        factors: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        r: Option<usize>,
    },
    Product {
        left: Box<GroupBody>,
        right: Box<GroupBody>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<Vec<u32>>>,
    },
    Matrix {
        dim: usize,
        p: u32,
        generators: Vec<Vec<Vec<i64>>>,
    },
    Cayley {
        order: usize,
        table: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

fn family_parts(f: &Family) -> GroupBody {
    let spec = |n: Option<usize>, factors: Option<Vec<usize>>, k, r| GroupBody::Spec {
        family: f.name().to_string(),
        n,
        factors,
        k,
        r,
    };
    match f {
        Family::Cyclic(n)
        | Family::Dihedral(n)
        | Family::Symmetric(n)
        | Family::Alternating(n)
        | Family::Quaternion(n) => spec(Some(*n), None, None, None),
        Family::Abelian(v) => spec(None, Some(v.clone()), None, None),
        Family::Zarhin(p) => spec(None, Some(p.invariant_factors().to_vec()), None, None),
        Family::BinaryIcosahedral => spec(None, None, None, None),
        Family::CyclicSemidirect { n, k, r } => spec(Some(*n), None, Some(*k), Some(*r)),
    }
}

impl GroupBody {
    pub fn from_spec(spec: &GroupSpec) -> Self {
        match spec {
            GroupSpec::Family(f) => family_parts(f),
            GroupSpec::DirectProduct(a, b) => GroupBody::Product {
                left: Box::new(Self::from_spec(a)),
                right: Box::new(Self::from_spec(b)),
            },
            GroupSpec::Permutation { degree, generators } => GroupBody::Permutation {
                degree: *degree,
                generators: generators.iter().map(Permutation::cycles).collect(),
            },
            GroupSpec::Matrix { dim, p, generators } => GroupBody::Matrix {
                dim: *dim,
                p: *p,
                generators: generators.clone(),
            },
            GroupSpec::Cayley {
                order,
                table,
                labels,
            } => GroupBody::Cayley {
                order: *order,
                table: table.chunks(*order).map(<[u32]>::to_vec).collect(),
                labels: labels.clone(),
            },
        }
    }

    pub fn to_spec(&self) -> Result<GroupSpec, GroupError> {
        Ok(match self {
            GroupBody::Spec {
                family,
                n,
                factors,
                k,
                r,
            } => GroupSpec::Family(family_from_parts(family, *n, factors.as_deref(), *k, *r)?),
            GroupBody::Product { left, right } => GroupSpec::product(left.to_spec()?, right.to_spec()?),
            GroupBody::Permutation { degree, generators } => GroupSpec::Permutation {
                degree: *degree,
                generators: generators
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*degree, cycles))
                    .collect::<Result<_, _>>()?,
            },
            GroupBody::Matrix { dim, p, generators } => GroupSpec::Matrix {
                dim: *dim,
                p: *p,
                generators: generators.clone(),
            },
            GroupBody::Cayley {
                order,
                table,
                labels,
            } => {
                if table.len() != *order || table.iter().any(|row| row.len() != *order) {
                    return Err(GroupError::InvalidTable(format!(
                        "table must have {order} rows of length {order}"
                    )));
                }
                GroupSpec::Cayley {
                    order: *order,
                    table: table.concat(),
                    labels: labels.clone(),
                }
            }
        })
    }
}

/// Canonical text of a group file.
pub fn render_group_file(body: &GroupBody) -> String {
    let mut v = serde_json::to_value(body).expect("group bodies serialize");
    let obj = v.as_object_mut().expect("tagged enum is an object");
    obj.insert("format".into(), Value::from(GROUP_FORMAT));
    obj.insert("version".into(), Value::from(VERSION));
    crate::report::render(&v)
}

pub fn parse_group_file(text: &str) -> Result<GroupBody, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    check_header(&v, GROUP_FORMAT)?;
    serde_json::from_value(v).map_err(|e| CliError::Input(format!("invalid group file: {e}")))
}

pub fn read_group_file(path: &Path) -> Result<GroupBody, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_group_file(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub(crate) fn check_header(v: &Value, format: &str) -> Result<(), CliError> {
    let found = v.get("format").and_then(Value::as_str);
    if found != Some(format) {
        return Err(CliError::Input(format!(
            "expected \"format\": \"{format}\", found {}",
            found.map_or("nothing".to_string(), |f| format!("\"{f}\""))
        )));
    }
    match v.get("version").and_then(Value::as_u64) {
        Some(VERSION) => Ok(()),
        other => Err(CliError::Input(format!("unsupported version {other:?}"))),
    }
}
