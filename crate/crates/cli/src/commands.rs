//! The subcommands. Each returns its exit code or an error carrying one.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::sync::mpsc;
use std::time::Instant;

use cremona_core::cremona::{analyze as analyze_core, AnalysisOptions, RationalMap, Verdict};
use cremona_core::families::{construct as build, deform_map, expectation, special_example, DeformationPath, FamilyLabel};
use cremona_core::hudson::{classify_with, hudson_vector, match_table, parse_table, table_source};
use cremona_core::idealkit::{with_budget, Budget};
use cremona_core::polycore::keyed_rng;
use cremona_core::suite::{criteria, endpoint_matches, SuiteConfig};
use cremona_core::{AlgebraError, Field, PrimeField, Rationals};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::atlas::{Atlas, AtlasKey, AtlasRecord, SampleResult, ATLAS_SCHEMA_VERSION};
use crate::document::{ExpectedDoc, FieldSpec, MapDocument, Provenance};
use crate::error::{code, CliError, CliResult};
use crate::report::analyze_map;
use crate::{AnalyzeArgs, ConstructArgs, DeformArgs, ScanArgs, TableArgs, VerifyArgs};

pub const DEFAULT_FIELD: &str = "gf:1000003";

/// Range of the per-sample scan primes.
pub const SCAN_PRIMES: (u64, u64) = (1_000_000, 1 << 31);

/// Largest share of failed scan samples that still exits 0.
pub const SCAN_FAILURE_RATE: f64 = 0.10;

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(&format!("writing {}", p.display()), e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CliError::io("stdout", e))
        }
    }
}

fn field_arg(s: &str) -> CliResult<FieldSpec> {
    s.parse().map_err(|e: CliError| CliError::usage(format!("--field: {}", e.message)))
}

fn label_arg(s: &str) -> CliResult<FamilyLabel> {
    s.parse().map_err(|e: AlgebraError| CliError::usage(e.to_string()))
}

/// The family a `construct` invocation names.
fn resolve_family(a: &ConstructArgs) -> CliResult<FamilyLabel> {
    let family = a.family.trim().to_ascii_lowercase();
    let group: Option<&[&str]> = match family.as_str() {
        "determinantal" => Some(&["E2"]),
        "dejonquieres" => Some(&["E3", "E3.5", "E4"]),
        "cuboquartic" => Some(&["E6", "E7", "E7.5", "E8", "E9"]),
        "cuboquintic" => Some(&["E12", "E13", "E14", "E19", "E23", "E24"]),
        _ => None,
    };
    if let Some(allowed) = group {
        let variant = a.variant.as_deref().unwrap_or(allowed[0]);
        let label = label_arg(variant)?;
        if !allowed.iter().any(|v| v.eq_ignore_ascii_case(&label.to_string())) {
            return Err(CliError::usage(format!("{family} has variants {}", allowed.join(", "))));
        }
        return Ok(label);
    }
    if family == "ruled" {
        let d = a.d.ok_or_else(|| CliError::usage("--family ruled needs --d"))?;
        return label_arg(&format!("ruled{d}"));
    }
    label_arg(&a.family)
}

fn construct_doc<F: Field>(label: FamilyLabel, seed: u64, field: &F) -> CliResult<MapDocument> {
    let map = build(label, seed, field).map_err(|e| CliError::algebra(code::CONSTRUCT, &format!("constructing {label}"), e))?;
    let mut doc = MapDocument::from_map(&map);
    doc.provenance = Some(Provenance { family: Some(label.to_string()), seed: Some(seed), ..Provenance::default() });
    doc.expected = Some(ExpectedDoc::from(&expectation(label)));
    Ok(doc)
}

fn example_doc(name: &str, field: &FieldSpec) -> CliResult<MapDocument> {
    let ex = special_example(name)
        .map_err(|e| CliError::algebra(code::CONSTRUCT, "building examples", e))?
        .ok_or_else(|| {
            CliError::usage(format!(
                "unknown example {name}; known: ruled-involution, dJ-ruled, pro-inter-0, pro-inter-1, a1, a2"
            ))
        })?;
    let mut doc = match field {
        FieldSpec::Rational => MapDocument::from_map(&ex.map),
        FieldSpec::Prime(f) => {
            let m = ex
                .map
                .reduce_mod(*f)
                .ok_or_else(|| CliError::new(code::CONSTRUCT, format!("{name} degenerates modulo {}", f.modulus())))?;
            MapDocument::from_map(&m)
        }
    };
    doc.provenance = Some(Provenance { example: Some(ex.name.to_string()), ..Provenance::default() });
    Ok(doc)
}

pub fn construct(a: &ConstructArgs) -> CliResult<i32> {
    let field = field_arg(&a.field)?;
    let doc = if a.family.eq_ignore_ascii_case("example") {
        let name = a.name.as_deref().ok_or_else(|| CliError::usage("--family example needs --name"))?;
        example_doc(name, &field)?
    } else {
        let label = resolve_family(a)?;
        match &field {
            FieldSpec::Rational => construct_doc(label, a.seed, &Rationals)?,
            FieldSpec::Prime(f) => construct_doc(label, a.seed, f)?,
        }
    };
    write_output(a.out.as_deref(), &doc.to_json())?;
    Ok(code::OK)
}

fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::io("stdin", e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::io(&format!("reading {}", path.display()), e))
    }
}

pub fn analyze(a: &AnalyzeArgs) -> CliResult<i32> {
    let doc = MapDocument::parse(&read_input(&a.file)?)?;
    let map = doc.to_map()?;
    let opts = AnalysisOptions { trials: a.trials, ..AnalysisOptions::default() };
    let start = Instant::now();
    let mut report = analyze_map(&map, a.seed, &opts, &a.primes)?;
    if a.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    write_output(a.out.as_deref(), &report.to_json())?;
    Ok(report.exit_code())
}

#[derive(Serialize)]
struct DeformSample {
    t: i64,
    expected_family: Option<String>,
    expected_bidegree: (u32, u32),
    bidegree: Option<(u32, u32)>,
    c2: Option<(i64, i64)>,
    ruled: Option<bool>,
    verdict: Option<String>,
    family: Option<String>,
    matches: bool,
    problem: Option<String>,
}

pub fn deform(a: &DeformArgs) -> CliResult<i32> {
    let path: DeformationPath =
        a.path.replace('-', "_").parse().map_err(|e: AlgebraError| {
            CliError::usage(format!(
                "{e}; paths: {}",
                DeformationPath::all().map(|p| p.name()).join(", ")
            ))
        })?;
    let FieldSpec::Prime(field) = field_arg(&a.field)? else {
        return Err(CliError::usage("deform runs over gf:<prime>"));
    };
    let opts = AnalysisOptions::default();
    let mut samples = Vec::new();
    for &t in &a.samples {
        let want = path.expected(t);
        let mut s = DeformSample {
            t,
            expected_family: want.family.map(|l| l.to_string()),
            expected_bidegree: want.bidegree,
            bidegree: None,
            c2: None,
            ruled: None,
            verdict: None,
            family: None,
            matches: false,
            problem: None,
        };
        let run = deform_map(path, t, a.seed, &field).and_then(|m| {
            let an = analyze_core(&m, a.seed, &opts)?;
            let check = endpoint_matches(path, t, &m, &an, a.seed)?;
            Ok((m, an, check))
        });
        match run {
            Ok((m, an, check)) => {
                s.bidegree = Some(an.bidegree);
                s.c2 = Some((an.split.c2.degree, an.split.c2.p_a));
                s.ruled = Some(an.ruled.ruled);
                s.verdict = Some(format!("{:?}", an.birational.verdict).to_ascii_lowercase());
                let v = if an.ruled.ruled { None } else { hudson_vector(&m, &an, a.seed).ok() };
                s.family = classify_with(&an, v.as_ref()).ok().map(|l| l.to_string());
                match check {
                    Ok(()) => s.matches = true,
                    Err(why) => s.problem = Some(why),
                }
            }
            Err(e @ AlgebraError::Budget(_)) => return Err(CliError::algebra(code::BUDGET, "deformation", e)),
            Err(e) => s.problem = Some(e.to_string()),
        }
        samples.push(s);
    }
    let all = samples.iter().all(|s| s.matches);
    let out = json!({
        "path": path.name(),
        "seed": a.seed,
        "field": field.descriptor(),
        "samples": samples,
        "all_match": all,
    });
    write_output(None, &format!("{}\n", serde_json::to_string_pretty(&out).expect("serializes")))?;
    Ok(if all { code::OK } else { code::ENDPOINT })
}

fn scan_families(spec: &str) -> CliResult<Vec<FamilyLabel>> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(FamilyLabel::constructible());
    }
    spec.split(',').filter(|s| !s.trim().is_empty()).map(label_arg).collect()
}

/// Prime of one scan sample, fixed by the family and the seed.
pub fn scan_prime(label: FamilyLabel, seed: u64) -> u64 {
    let mut rng = keyed_rng(seed, &format!("scan-prime-{label}"));
    PrimeField::random(&mut rng, SCAN_PRIMES.0, SCAN_PRIMES.1).modulus()
}

fn sample_result(map: &RationalMap<PrimeField>, seed: u64, trials: u32) -> cremona_core::Result<SampleResult> {
    let a = analyze_core(map, seed, &AnalysisOptions { trials, ..AnalysisOptions::default() })?;
    let birational = a.birational.verdict == Verdict::Yes;
    let v = if birational && !a.ruled.ruled { Some(hudson_vector(map, &a, seed)?) } else { None };
    let label = if birational { classify_with(&a, v.as_ref()).ok() } else { None };
    let (table_rows, missing_row) = match &v {
        Some(v) => {
            let m = match_table(v);
            (m.rows.iter().map(|r| r.number).collect(), m.missing.map(str::to_string))
        }
        None => (Vec::new(), None),
    };
    Ok(SampleResult {
        bidegree: a.bidegree,
        c1: (a.split.c1.degree, a.split.c1.p_a),
        c2: (a.split.c2.degree, a.split.c2.p_a),
        genus: a.genus,
        ruled: a.ruled.ruled,
        deg1part: a.base.deg1part,
        isolated_points: a.base.theta.distinct,
        verdict: format!("{:?}", a.birational.verdict).to_ascii_lowercase(),
        certificate: a.certificate.value,
        counts: v.as_ref().map(|v| v.counts.into()),
        label: label.map(|l| l.to_string()),
        table_rows,
        missing_row,
    })
}

fn scan_one(label: FamilyLabel, seed: u64, prime: u64, trials: u32) -> AtlasRecord {
    let outcome = PrimeField::new(prime).and_then(|f| {
        let map = build(label, seed, &f)?;
        sample_result(&map, seed, trials)
    });
    let (status, error, result) = match outcome {
        Ok(r) => ("ok", None, Some(r)),
        Err(e) => ("error", Some(e.to_string()), None),
    };
    AtlasRecord {
        schema_version: ATLAS_SCHEMA_VERSION,
        family: label.to_string(),
        seed,
        prime,
        status: status.into(),
        error,
        result,
    }
}

pub fn scan(a: &ScanArgs, budget: Option<Budget>) -> CliResult<i32> {
    let families = scan_families(&a.families)?;
    if let Some(p) = a.prime {
        PrimeField::new(p).map_err(|e| CliError::usage(format!("--prime: {e}")))?;
    }
    let mut atlas = match &a.atlas {
        Some(p) => {
            let at = Atlas::open(p)?;
            if at.repaired_bytes > 0 {
                eprintln!("cremona-lab: dropped a truncated final line of {} bytes from {}", at.repaired_bytes, p.display());
            }
            Some(at)
        }
        None => None,
    };

    let mut done: Vec<AtlasRecord> = Vec::new();
    let mut jobs: Vec<(FamilyLabel, u64, u64)> = Vec::new();
    for &label in &families {
        for seed in a.seed_start..a.seed_start + a.count {
            let prime = a.prime.unwrap_or_else(|| scan_prime(label, seed));
            let key: AtlasKey = (label.to_string(), seed, prime);
            match atlas.as_ref().and_then(|at| at.get(&key)) {
                Some(rec) => done.push(rec.clone()),
                None => jobs.push((label, seed, prime)),
            }
        }
    }
    let skipped = done.len();

    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = a.jobs {
            b = b.num_threads(n);
        }
        b.build().map_err(|e| CliError::new(code::FAILURE, format!("thread pool: {e}")))?
    };
    let trials = a.trials;
    let (tx, rx) = mpsc::channel::<AtlasRecord>();
    let mut write_error = None;
    std::thread::scope(|s| {
        s.spawn(move || {
            pool.install(|| {
                jobs.par_iter().for_each_with(tx, |tx, &(label, seed, prime)| {
                    let rec = match budget {
                        Some(b) => with_budget(b, || scan_one(label, seed, prime, trials)),
                        None => scan_one(label, seed, prime, trials),
                    };
                    let _ = tx.send(rec);
                });
            });
        });
        // the single appender
        for rec in rx {
            if let Some(at) = atlas.as_mut() {
                if write_error.is_none() {
                    if let Err(e) = at.append(rec.clone()) {
                        write_error = Some(e);
                    }
                }
            }
            done.push(rec);
        }
    });
    if let Some(e) = write_error {
        return Err(e);
    }

    let failed = done.iter().filter(|r| !r.is_ok()).count();
    let mut histogram: BTreeMap<(u32, i64, String), usize> = BTreeMap::new();
    for r in done.iter().filter_map(|r| r.result.as_ref()) {
        let label = r.label.clone().unwrap_or_else(|| "unclassified".into());
        *histogram.entry((r.bidegree.1, r.c2.1, label)).or_default() += 1;
    }
    let mut errors: Vec<String> = done
        .iter()
        .filter_map(|r| r.error.as_ref().map(|e| format!("{} seed {} mod {}: {e}", r.family, r.seed, r.prime)))
        .collect();
    errors.sort();
    errors.truncate(10);
    let summary = json!({
        "samples": done.len(),
        "computed": done.len() - skipped,
        "already_in_atlas": skipped,
        "failed": failed,
        "histogram": histogram
            .iter()
            .map(|((d, p2, label), n)| json!({"d": d, "c2_genus": p2, "label": label, "count": n}))
            .collect::<Vec<_>>(),
        "errors": errors,
    });
    write_output(None, &format!("{}\n", serde_json::to_string_pretty(&summary).expect("serializes")))?;
    let rate = if done.is_empty() { 0.0 } else { failed as f64 / done.len() as f64 };
    Ok(if rate > SCAN_FAILURE_RATE { code::FAILURE } else { code::OK })
}

pub fn verify(a: &VerifyArgs) -> CliResult<i32> {
    let mut cfg = SuiteConfig { seed: a.seed, forced_primes: a.primes.clone(), ..SuiteConfig::default() };
    if let Some(p) = &a.table_file {
        cfg.table_text = Some(fs::read_to_string(p).map_err(|e| CliError::io(&format!("reading {}", p.display()), e))?);
    }
    if let Some(n) = a.scan_samples {
        cfg.scan_samples = n;
    }
    if let Some(n) = a.property_cases {
        cfg.property_cases = n;
    }
    if let Some(bad) = a.criteria.iter().find(|c| !(1..=10).contains(*c)) {
        return Err(CliError::usage(format!("no criterion {bad}; they are numbered 1 to 10")));
    }
    let mut passed = 0;
    let mut total = 0;
    for (id, criterion) in criteria() {
        if !a.criteria.is_empty() && !a.criteria.contains(&id) {
            continue;
        }
        let out = criterion(&cfg);
        total += 1;
        passed += out.passed as usize;
        let line = json!({
            "criterion": out.id,
            "name": out.name,
            "passed": out.passed,
            "seconds": (out.seconds * 10.0).round() / 10.0,
            "detail": out.detail,
        });
        write_output(None, &format!("{line}\n"))?;
    }
    write_output(None, &format!("{}\n", json!({"passed": passed, "total": total})))?;
    Ok(if passed == total { code::OK } else { code::FAILURE })
}

pub fn table(a: &TableArgs) -> CliResult<i32> {
    match a.format.as_str() {
        "tsv" => write_output(None, table_source())?,
        "json" => {
            let rows = parse_table(table_source()).map_err(|e| CliError::new(code::FAILURE, e))?;
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "number": r.number,
                        "bidegree": r.bidegree,
                        "counts": crate::document::Counts::from(r.counts),
                        "fcurves": r.fcurves,
                        "remarks": r.remarks,
                    })
                })
                .collect();
            write_output(None, &format!("{}\n", serde_json::to_string_pretty(&rows).expect("serializes")))?;
        }
        other => return Err(CliError::usage(format!("--format must be tsv or json, got {other}"))),
    }
    Ok(code::OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_primes_are_stable_and_in_range() {
        let p = scan_prime(FamilyLabel::E2, 7);
        assert_eq!(p, scan_prime(FamilyLabel::E2, 7));
        assert!(p > SCAN_PRIMES.0 && p < SCAN_PRIMES.1);
        assert!(cremona_core::polycore::field::is_prime(p));
    }

    #[test]
    fn constructor_names_resolve() {
        let args = |family: &str, variant: Option<&str>, d: Option<u32>| ConstructArgs {
            family: family.into(),
            d,
            variant: variant.map(str::to_string),
            name: None,
            seed: 1,
            field: DEFAULT_FIELD.into(),
            out: None,
        };
        assert_eq!(resolve_family(&args("cuboquartic", Some("E7"), None)).unwrap(), FamilyLabel::E7);
        assert_eq!(resolve_family(&args("determinantal", None, None)).unwrap(), FamilyLabel::E2);
        assert_eq!(resolve_family(&args("ruled", None, Some(4))).unwrap(), FamilyLabel::Ruled(4));
        assert_eq!(resolve_family(&args("E3.5", None, None)).unwrap(), FamilyLabel::E3_5);
        assert!(resolve_family(&args("cuboquartic", Some("E23"), None)).is_err());
        assert!(resolve_family(&args("ruled", None, None)).is_err());
    }
}
