//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Time limits are pinned below; numeric comparisons are exact.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use jordan_kit_core::analysis::{jordan_constant, min_abelian_index, min_normal_abelian_index};
use jordan_kit_core::bounds::{collins_value, factorial, minkowski_bound, symmetric_lower_bound};
use jordan_kit_core::constructions::{
    alternating_group, binary_icosahedral_group, build, default_corpus, symmetric_group, zarhin_group,
};
use jordan_kit_core::theorems::verify_corpus;
use jordan_kit_core::{Caps, CheckRecord, GroupError, SubgroupSet, ZarhinParams};

const MINKOWSKI_LIMIT: Duration = Duration::from_millis(1);
const SYM5_LIMIT: Duration = Duration::from_secs(10);
const SYM6_LIMIT: Duration = Duration::from_secs(120);
const SL2F5_LIMIT: Duration = Duration::from_secs(5);
const ALT7_LIMIT: Duration = Duration::from_secs(60);
const ZARHIN_LIMIT: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(label: &str, t: Duration, limit: Duration) -> Outcome {
    ensure(t <= limit, format!("{label} {:.3}s (limit {:.3}s)", t.as_secs_f64(), limit.as_secs_f64()))
}

fn minkowski() -> Outcome {
    let expected: [u64; 6] = [2, 24, 48, 5760, 11520, 2903040];
    let start = Instant::now();
    let got: Vec<BigUint> = (1..=6).map(|n| minkowski_bound(n).unwrap().value).collect();
    let t = start.elapsed();
    let want: Vec<BigUint> = expected.iter().map(|&v| BigUint::from(v)).collect();
    ensure(got == want, format!("values {got:?}"))?;
    within("n = 1..6 in", t, MINKOWSKI_LIMIT)
}

fn collins() -> Outcome {
    let expected: [u64; 5] = [60, 360, 25920, 25920, 6531840];
    let got: Vec<BigUint> = (2..=6).map(|n| collins_value(n).unwrap().value).collect();
    let want: Vec<BigUint> = expected.iter().map(|&v| BigUint::from(v)).collect();
    ensure(got == want, format!("n = 2..6 gives {got:?}"))?;
    let v20 = collins_value(20).unwrap().value;
    ensure(v20 == num_traits::pow(BigUint::from(60u32), 10) * factorial(10), format!("n = 20 gives {v20}"))?;
    let v71 = collins_value(71).unwrap().value;
    ensure(v71 == factorial(72), format!("n = 71 gives {v71}"))?;
    for n in 7..=19 {
        match collins_value(n) {
            Err(GroupError::NotTabulated(_)) => {}
            other => return Err(format!("n = {n} gives {other:?}")),
        }
    }
    Ok("n = 2..6, 20, 71 exact; 7..19 not tabulated".into())
}

fn symmetric_vs_collins() -> Outcome {
    let mut parts = Vec::new();
    for n in 4..=6 {
        let s = symmetric_lower_bound(n).unwrap().value;
        let c = collins_value(n).unwrap().value;
        ensure(s <= c, format!("n = {n}: {s} > {c}"))?;
        parts.push(format!("{s} <= {c}"));
    }
    Ok(parts.join(", "))
}

fn jordan_values(caps: &Caps) -> Outcome {
    let mut abelian = 0;
    for e in default_corpus() {
        let b = build(e.name.clone(), e.spec, caps).unwrap();
        if b.group.is_abelian() {
            let j = jordan_constant(&b.group, caps).unwrap().jordan_constant;
            ensure(j == 1, format!("{} has J = {j}", e.name))?;
            abelian += 1;
        }
    }
    let mut parts = vec![format!("{abelian} abelian corpus groups have J = 1")];
    for (n, expected) in [(3, 2), (4, 6), (5, 120)] {
        let g = symmetric_group(n, caps).unwrap();
        let start = Instant::now();
        let j = jordan_constant(&g, caps).unwrap().jordan_constant;
        let t = start.elapsed();
        let oracle = common::jordan(&g, &common::all_subgroups(&g));
        ensure(j == expected && oracle == expected, format!("Sym{n}: engine {j}, oracle {oracle}"))?;
        if n == 5 {
            parts.push(within("Sym5", t, SYM5_LIMIT)?);
        }
    }
    // Sym6 has no nontrivial normal abelian subgroup, so 720 = α(Sym6) ≤ J ≤ |Sym6|.
    let s6 = symmetric_group(6, caps).unwrap();
    let alpha = min_normal_abelian_index(&s6, caps).unwrap().alpha;
    let oracle_normal_abelian = common::normal_subgroups_by_classes(&s6)
        .iter()
        .filter(|n| common::is_abelian(&s6, n))
        .map(|n| n.len())
        .max()
        .unwrap();
    ensure(alpha == 720 && oracle_normal_abelian == 1, format!("alpha(Sym6) = {alpha}"))?;
    let start = Instant::now();
    let j6 = jordan_constant(&s6, caps).unwrap().jordan_constant;
    let t = start.elapsed();
    ensure(j6 == 720, format!("Sym6 J = {j6}"))?;
    parts.push(within("Sym6", t, SYM6_LIMIT)?);
    Ok(format!("Sym3..6 = 2, 6, 120, 720; {}", parts.join("; ")))
}

fn sl2f5(caps: &Caps) -> Outcome {
    let g = binary_icosahedral_group(caps).unwrap();
    let start = Instant::now();
    let r = jordan_constant(&g, caps).unwrap();
    let t = start.elapsed();
    let collins = collins_value(2).unwrap().value;
    let center = SubgroupSet::whole(&g).center(&g);
    ensure(
        r.jordan_constant == 60 && collins == BigUint::from(60u32),
        format!("J = {}, collins(2) = {collins}", r.jordan_constant),
    )?;
    ensure(
        r.witness_abelian == center && center.order() == 2,
        format!("witness abelian has order {}", r.witness_abelian.order()),
    )?;
    within("J = 60 = collins(2), witness is the order-2 center;", t, SL2F5_LIMIT)
}

fn alternating_alpha(caps: &Caps) -> Outcome {
    let mut parts = Vec::new();
    for n in 5..=7usize {
        let g = alternating_group(n, caps).unwrap();
        let start = Instant::now();
        let a = min_normal_abelian_index(&g, caps).unwrap().alpha;
        let t = start.elapsed();
        let want = (1..=n).product::<usize>() / 2;
        ensure(a == want, format!("alpha(Alt{n}) = {a}, expected {want}"))?;
        if n == 7 {
            parts.push(within("Alt7", t, ALT7_LIMIT)?);
        }
    }
    Ok(format!("alpha = 60, 360, 2520; {}", parts.join("")))
}

fn zarhin(caps: &Caps) -> Outcome {
    let chains: [&[usize]; 9] = [&[2], &[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[2, 4]];
    let start = Instant::now();
    let mut parts = Vec::new();
    for chain in chains {
        let p = ZarhinParams::new(chain.to_vec()).unwrap();
        let q = zarhin_group(&p, caps).unwrap();
        let n = p.n();
        let mai = min_abelian_index(&q, caps).unwrap().index;
        ensure(q.order() == n * n * n && mai >= n, format!("{chain:?}: |Q| = {}, index {mai}", q.order()))?;
        parts.push(format!("{chain:?}:{mai}"));
    }
    let summary = format!("|Q| = n^3 and index >= n for {}; total", parts.join(" "));
    within(&summary, start.elapsed(), ZARHIN_LIMIT)
}

fn corpus_records(caps: &Caps) -> Vec<CheckRecord> {
    let built: Vec<_> = default_corpus()
        .into_iter()
        .map(|e| build(e.name, e.spec, caps).unwrap())
        .collect();
    verify_corpus(&built, caps).unwrap()
}

fn summarize(records: &[&CheckRecord]) -> Outcome {
    let skipped = records.iter().filter(|r| r.skipped.is_some()).count();
    let failed: Vec<_> = records.iter().filter(|r| r.is_failure()).collect();
    let tampered = records.iter().filter(|r| r.skipped.is_none() && r.evaluate() != r.passed).count();
    let active = records.len() - skipped;
    ensure(
        failed.is_empty() && tampered == 0 && active > 0,
        format!(
            "{active} applicable records, {} failed, {skipped} skipped{}",
            failed.len(),
            failed.first().map(|r| format!(", first {} {:?}", r.check_id, r.inputs)).unwrap_or_default()
        ),
    )
}

fn theorem_suite(records: &[CheckRecord]) -> Outcome {
    let mut parts = Vec::new();
    for prefix in ["gs.subgroup", "gs.quotient", "gs.split", "gs.product", "extension", "centerless", "core"] {
        let rs: Vec<&CheckRecord> = records.iter().filter(|r| r.check_id == prefix).collect();
        ensure(!rs.is_empty(), format!("no {prefix} records"))?;
        parts.push(format!("{prefix}: {}", summarize(&rs)?));
    }
    Ok(parts.join("; "))
}

fn klj(records: &[CheckRecord]) -> Outcome {
    let rs: Vec<&CheckRecord> = records.iter().filter(|r| r.check_id == "klj").collect();
    for r in &rs {
        for flag in ["m_abelian", "m_normal_in_f"] {
            let one = BigUint::from(1u32);
            ensure(r.computed.get(flag) == Some(&one), format!("{:?} lacks {flag}", r.inputs))?;
        }
    }
    summarize(&rs)
}

fn jordan_kit(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jordan-kit"))
        .args(args)
        .env_remove(jordan_kit_cli::CAP_ENV)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn analyze_report(dir: &Path, input: &Path, tag: &str, threads: Option<&str>) -> Result<Vec<u8>, String> {
    let report = dir.join(format!("{tag}.json"));
    let mut args = vec!["analyze", input.to_str().unwrap(), "--report", report.to_str().unwrap()];
    if let Some(t) = threads {
        args.extend(["--threads", t]);
    }
    let (code, err) = jordan_kit(&args);
    ensure(code == 0, format!("analyze exited {code}: {err}"))?;
    std::fs::read(&report).map_err(|e| e.to_string())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut checked = Vec::new();
    for (family, n) in [("symmetric", "5"), ("dihedral", "6")] {
        let input = dir.path().join(format!("{family}.group.json"));
        let (code, err) = jordan_kit(&["construct", "--family", family, "--n", n, "--out", input.to_str().unwrap()]);
        ensure(code == 0, format!("construct exited {code}: {err}"))?;
        let a = analyze_report(dir.path(), &input, &format!("{family}-a"), None)?;
        let b = analyze_report(dir.path(), &input, &format!("{family}-b"), None)?;
        let one = analyze_report(dir.path(), &input, &format!("{family}-1"), Some("1"))?;
        let four = analyze_report(dir.path(), &input, &format!("{family}-4"), Some("4"))?;
        ensure(a == b && a == one && a == four, format!("{family} {n}: reports differ"))?;
        checked.push(format!("{family} {n} ({} bytes)", a.len()));
    }
    Ok(format!("repeat, --threads 1 and --threads 4 identical for {}", checked.join(", ")))
}

fn main() {
    let caps = Caps::default();
    let start = Instant::now();
    let records = corpus_records(&caps);
    let corpus_time = start.elapsed();

    let criteria: Vec<Criterion<'_>> = vec![
        ("minkowski table", Box::new(minkowski)),
        ("collins table", Box::new(collins)),
        ("symmetric <= collins", Box::new(symmetric_vs_collins)),
        ("jordan constants", Box::new(|| jordan_values(&caps))),
        ("SL2(F5) witness", Box::new(|| sl2f5(&caps))),
        ("alternating alpha", Box::new(|| alternating_alpha(&caps))),
        ("zarhin suite", Box::new(|| zarhin(&caps))),
        ("theorem suite", Box::new(|| theorem_suite(&records))),
        ("intersection of conjugates", Box::new(|| klj(&records))),
        ("determinism", Box::new(determinism)),
    ];
    println!("corpus verification took {:.3}s, {} records", corpus_time.as_secs_f64(), records.len());
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("PASS {:>2} {name}: {d} [{secs:.3}s]", i + 1),
            Err(d) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {d} [{secs:.3}s]", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
