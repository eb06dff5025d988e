use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Deserialize;
use serde_json::Value;

use jordan_kit_core::analysis::jordan_constant;
use jordan_kit_core::constructions::{build, default_corpus, family_from_parts, from_spec, BuiltGroup};
use jordan_kit_core::theorems::{verify_corpus, verify_zarhin};
use jordan_kit_core::{Caps, CheckRecord, GroupSpec};

use crate::files::{check_header, read_group_file, render_group_file, GroupBody};
use crate::report::{analysis_report, check_record, render, status};
use crate::tables::{render_json, render_text, rows, TableKind};
use crate::{
    AnalyzeArgs, CliError, Command, ConstructArgs, Emit, Suite, TableFormat, TablesArgs,
    VerifyArgs,
};

pub const MANIFEST_FORMAT: &str = "jordan-kit/manifest";

type Outcome = Result<i32, CliError>;

pub fn dispatch(cmd: &Command, caps: &Caps, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Construct(a) => construct(a, caps, out),
        Command::Analyze(a) => analyze(a, caps, out),
        Command::Verify(a) => verify(a, caps, out),
        Command::Tables(a) => tables(a, out),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn construct(a: &ConstructArgs, caps: &Caps, out: &mut dyn Write) -> Outcome {
    let family = family_from_parts(&a.family, a.n, a.factors.as_deref(), a.k, a.r)?;
    let spec = GroupSpec::Family(family);
    let group = from_spec(&spec, caps)?;
    let body = match a.emit {
        Emit::Spec => GroupBody::from_spec(&spec),
        Emit::Cayley => GroupBody::from_spec(&GroupSpec::Cayley {
            order: group.order(),
            table: group.table().to_vec(),
            labels: group.labels().map(<[String]>::to_vec),
        }),
    };
    let text = render_group_file(&body);
    match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            writeln!(out, "order: {}", group.order())?;
            writeln!(out, "spec: {spec}")?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn load_spec(path: &Path) -> Result<GroupSpec, CliError> {
    read_group_file(path)?
        .to_spec()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn analyze(a: &AnalyzeArgs, caps: &Caps, out: &mut dyn Write) -> Outcome {
    let spec = load_spec(&a.input)?;
    let group = from_spec(&spec, caps)?;
    let start = Instant::now();
    let r = jordan_constant(&group, caps)?;
    let elapsed = start.elapsed();
    let name = spec.summary();
    writeln!(out, "group: {name}")?;
    writeln!(out, "order: {}", r.order)?;
    writeln!(out, "J_G: {}", r.jordan_constant)?;
    writeln!(out, "b_G: {}", r.bound_constant)?;
    writeln!(out, "subgroup classes: {}", r.subgroup_class_count)?;
    writeln!(
        out,
        "witness: K of order {}, normal abelian A of order {} (index {})",
        r.witness_subgroup.order(),
        r.witness_abelian.order(),
        r.jordan_constant
    )?;
    writeln!(out, "elapsed: {:.3}s", elapsed.as_secs_f64())?;
    if let Some(path) = &a.report {
        write_file(path, &render(&analysis_report(&name, &r)))?;
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(0)
}

#[derive(Debug, Deserialize)]
struct ManifestEntry {
    path: PathBuf,
    #[serde(default)]
    summary: Option<String>,
    /// `"pass"` (the default) or `"fail"`.
    #[serde(default)]
    expect: Option<String>,
}

#[derive(Debug, Deserialize)]
struct Manifest {
    entries: Vec<ManifestEntry>,
}

struct CorpusGroup {
    built: BuiltGroup,
    expect_fail: bool,
}

fn entry_name(path: &Path) -> String {
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    file.strip_suffix(".group.json")
        .or_else(|| file.strip_suffix(".json"))
        .unwrap_or(&file)
        .to_string()
}

fn load_file_group(path: &Path, caps: &Caps) -> Result<BuiltGroup, CliError> {
    let spec = load_spec(path)?;
    build(entry_name(path), spec, caps).map_err(|e| match CliError::from(e) {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn load_corpus_dir(dir: &Path, caps: &Caps) -> Result<Vec<CorpusGroup>, CliError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::Input(format!("cannot read corpus {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            Ok(CorpusGroup {
                built: load_file_group(p, caps)?,
                expect_fail: false,
            })
        })
        .collect()
}

fn load_manifest(path: &Path, caps: &Caps) -> Result<Vec<CorpusGroup>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read manifest {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: invalid JSON: {e}", path.display())))?;
    check_header(&v, MANIFEST_FORMAT)?;
    let m: Manifest = serde_json::from_value(v)
        .map_err(|e| CliError::Input(format!("{}: invalid manifest: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in m.entries {
        if !seen.insert(e.path.clone()) {
            return Err(CliError::Input(format!("duplicate manifest path {}", e.path.display())));
        }
        let expect_fail = match e.expect.as_deref() {
            None | Some("pass") => false,
            Some("fail") => true,
            Some(other) => return Err(CliError::Input(format!("unknown expectation {other:?}"))),
        };
        let mut built = load_file_group(&base.join(&e.path), caps)?;
        if let Some(s) = e.summary {
            built.name = s;
        }
        out.push(CorpusGroup { built, expect_fail });
    }
    Ok(out)
}

fn builtin_corpus(caps: &Caps) -> Result<Vec<CorpusGroup>, CliError> {
    default_corpus()
        .into_iter()
        .map(|e| {
            Ok(CorpusGroup {
                built: build(e.name, e.spec, caps)?,
                expect_fail: false,
            })
        })
        .collect()
}

fn write_records(dir: &Path, records: &[CheckRecord]) -> Result<(), CliError> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    for (i, r) in records.iter().enumerate() {
        let path = dir.join(format!("{i:05}-{}.json", r.check_id));
        write_file(&path, &render(&check_record(r)))?;
    }
    Ok(())
}

fn verify(a: &VerifyArgs, caps: &Caps, out: &mut dyn Write) -> Outcome {
    let (records, expected_failures) = match a.suite {
        Suite::Zarhin => (verify_zarhin(a.factors_max, caps)?, BTreeSet::new()),
        Suite::Default => {
            let corpus = match (&a.corpus, &a.manifest) {
                (Some(dir), _) => load_corpus_dir(dir, caps)?,
                (None, Some(m)) => load_manifest(m, caps)?,
                (None, None) => builtin_corpus(caps)?,
            };
            let expected: BTreeSet<String> = corpus
                .iter()
                .filter(|c| c.expect_fail)
                .map(|c| c.built.name.clone())
                .collect();
            let built: Vec<BuiltGroup> = corpus.into_iter().map(|c| c.built).collect();
            (verify_corpus(&built, caps)?, expected)
        }
    };
    write_records(&a.out, &records)?;

    let count = |s: &str| records.iter().filter(|r| status(r) == s).count();
    writeln!(
        out,
        "records: {}  passed: {}  failed: {}  skipped: {}",
        records.len(),
        count("passed"),
        count("failed"),
        count("skipped")
    )?;
    let mut failed = false;
    for r in records.iter().filter(|r| r.is_failure()) {
        let expected = r.inputs.first().is_some_and(|g| expected_failures.contains(g));
        writeln!(
            out,
            "FAILED {} [{}]{}",
            r.check_id,
            r.inputs.join(", "),
            if expected { " (expected)" } else { "" }
        )?;
        failed |= !expected;
    }
    for name in &expected_failures {
        let any = records
            .iter()
            .any(|r| r.is_failure() && r.inputs.first() == Some(name));
        if !any {
            writeln!(out, "UNEXPECTED PASS {name}")?;
            failed = true;
        }
    }
    writeln!(out, "records written to {}", a.out.display())?;
    Ok(if failed { 1 } else { 0 })
}

fn tables(a: &TablesArgs, out: &mut dyn Write) -> Outcome {
    let kind = if a.minkowski {
        TableKind::Minkowski
    } else if a.collins {
        TableKind::Collins
    } else {
        TableKind::Symmetric
    };
    let (lo, hi) = match (a.n, a.min_n, a.max_n) {
        (Some(n), _, _) => (n, n),
        (None, lo, Some(hi)) => (lo.unwrap_or(kind.default_min_n()), hi),
        (None, _, None) => return Err(CliError::Input("give --n or --max-n".into())),
    };
    if lo == 0 || lo > hi {
        return Err(CliError::Input(format!("invalid range {lo}..={hi}")));
    }
    let table = rows(kind, lo..=hi);
    if a.strict {
        if let Some((_, Err(e))) = table.iter().find(|(_, r)| r.is_err()) {
            return Err(CliError::Input(e.to_string()));
        }
    }
    match a.format {
        TableFormat::Text => out.write_all(render_text(&table).as_bytes())?,
        TableFormat::Json => out.write_all(render(&render_json(&table)).as_bytes())?,
    }
    Ok(0)
}
