//! End-to-end runs of the `cremona-lab` binary.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use cremona_cli::atlas::AtlasRecord;
use cremona_cli::document::MapDocument;
use cremona_cli::report::AnalysisReport;
use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona-lab"))
        .args(args)
        .env_remove("CREMONA_LAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_s = path.to_str().unwrap().to_string();
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &path_s]);
    let o = lab(&all);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    path_s
}

fn report(o: &Output) -> AnalysisReport {
    serde_json::from_str(&stdout(o)).expect("report parses")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const CUBES: &str = r#"{"schema_version":1,"field":"q","variables":["z0","z1","z2","z3"],
"components":[[["1",[3,0,0,0]]],[["1",[0,3,0,0]]],[["1",[0,0,3,0]]],[["1",[0,0,0,3]]]]}"#;

#[test]
fn e23_has_one_contact_point_and_no_ordinary_point() {
    let dir = tempfile::tempdir().unwrap();
    let doc = construct(dir.path(), "e23.json", &["--family", "E23", "--seed", "1"]);
    let o = lab(&["analyze", &doc]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = report(&o);
    assert_eq!(r.bidegree, (3, 5));
    assert_eq!((r.c2.degree, r.c2.p_a), (4, 0));
    assert_eq!(r.contact_points.len(), 1);
    let h = r.hudson.expect("local invariants");
    assert_eq!(h.counts.contact, 1);
    assert_eq!(h.counts.ordinary, 0);
    assert_eq!(r.family.as_deref(), Some("E23"));
    assert_eq!(r.table.unwrap().rows, vec![23]);
    assert!(r.consistent);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let doc = construct(dir.path(), "e7.json", &["--family", "cuboquartic", "--variant", "E7", "--seed", "3"]);
    let a = lab(&["analyze", &doc, "--seed", "9"]);
    let b = lab(&["analyze", &doc, "--seed", "9"]);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(report(&a).family.as_deref(), Some("E7"));
}

#[test]
fn construct_is_deterministic_and_round_trips() {
    let a = lab(&["construct", "--family", "E12", "--seed", "4"]);
    let b = lab(&["construct", "--family", "E12", "--seed", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let doc = MapDocument::parse(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    let expected = doc.expected.expect("expectations embedded");
    assert_eq!(expected.bidegree, (3, 5));
    assert_eq!(expected.table_row, Some(12));
}

#[test]
fn ruled_involution_over_the_rationals() {
    let dir = tempfile::tempdir().unwrap();
    let doc = construct(dir.path(), "inv.json", &["--family", "example", "--name", "ruled-involution", "--field", "q"]);
    let o = lab(&["analyze", &doc]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = report(&o);
    assert_eq!(r.input_field, "q");
    assert_eq!(r.primes.len(), 2);
    assert!(r.primes.iter().all(|&p| p > 1_000_000));
    assert!(r.ruled);
    assert_eq!(r.bidegree, (3, 3));
    assert_eq!(r.family.as_deref(), Some("ruled_3_3"));
}

#[test]
fn a_small_forced_prime_is_rejected_and_replaced() {
    let dir = tempfile::tempdir().unwrap();
    let doc = construct(dir.path(), "inv.json", &["--family", "example", "--name", "ruled-involution", "--field", "q"]);
    let o = lab(&["analyze", &doc, "--prime", "7"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = report(&o);
    assert_eq!(r.rejected_primes.len(), 1);
    assert_eq!(r.rejected_primes[0].prime, 7);
    assert!(r.primes.iter().all(|&p| p > 1_000_000));
}

#[test]
fn non_birational_map_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(dir.path(), "cubes.json", CUBES);
    let o = lab(&["analyze", &doc]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    let r = report(&o);
    assert_eq!(r.birational.verdict, "no");
    assert!(r.birational.fiber_degrees.iter().all(|&d| d == 27));
}

#[test]
fn malformed_documents_exit_5_with_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(dir.path(), "bad.json", "{\n  \"schema_version\": 1,\n  \"field\": \n}");
    let o = lab(&["analyze", &doc]);
    assert_eq!(code(&o), 5);
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));

    let bad_coeff = CUBES.replacen("\"1\"", "\"one\"", 1);
    let doc = write(dir.path(), "coeff.json", &bad_coeff);
    let o = lab(&["analyze", &doc]);
    assert_eq!(code(&o), 5);
    assert!(stderr(&o).contains("components[0][0]"), "{}", stderr(&o));

    let doc = write(dir.path(), "field.json", &CUBES.replace("\"q\"", "\"gf:12\""));
    assert_eq!(code(&lab(&["analyze", &doc])), 5);
}

#[test]
fn constructor_failure_exits_2() {
    let o = lab(&["construct", "--family", "E10"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("E10"));
}

#[test]
fn budget_stops_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let doc = construct(dir.path(), "e23.json", &["--family", "E23"]);
    assert_eq!(code(&lab(&["--budget", "pairs=5", "analyze", &doc])), 4);

    let o = Command::new(env!("CARGO_BIN_EXE_cremona-lab"))
        .args(["analyze", &doc])
        .env("CREMONA_LAB_BUDGET", "pairs=5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 4, "{}", stderr(&o));
}

#[test]
fn bad_usage_exits_64() {
    assert_eq!(code(&lab(&["frobnicate"])), 64);
    assert_eq!(code(&lab(&["construct", "--family", "ruled"])), 64);
    assert_eq!(code(&lab(&["--budget", "pears=3", "table"])), 64);
    assert_eq!(code(&lab(&["--help"])), 0);
}

#[test]
fn deformation_paths_reach_their_endpoints() {
    for path in ["det_to_dJ", "E6_to_E7", "ruled_jump", "E24_to_E23"] {
        let o = lab(&["deform", "--path", path, "--samples", "0,1,2"]);
        assert_eq!(code(&o), 0, "{path}: {}", stdout(&o));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["all_match"], Value::Bool(true));
    }
}

#[test]
fn missed_endpoint_exits_6() {
    // the parameter is 0 modulo the prime, so the map sits in the special stratum
    let o = lab(&["deform", "--path", "E6_to_E7", "--samples", "1000003", "--field", "gf:1000003"]);
    assert_eq!(code(&o), 6);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["samples"][0]["family"], "E7");
}

fn atlas_records(path: &Path) -> Vec<AtlasRecord> {
    fs::read_to_string(path).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn scan_writes_one_record_per_sample() {
    let dir = tempfile::tempdir().unwrap();
    let atlas = dir.path().join("atlas.jsonl");
    let a = atlas.to_str().unwrap();
    let o = lab(&["scan", "--families", "E2", "--count", "100", "--atlas", a]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let recs = atlas_records(&atlas);
    assert_eq!(recs.len(), 100);
    assert!(recs.iter().all(|r| r.is_ok() && r.prime > 1_000_000 && r.prime < 1 << 31));
    let summary: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["histogram"][0]["label"], "E2");
    assert_eq!(summary["histogram"][0]["count"], 100);

    let again = lab(&["scan", "--families", "E2", "--count", "100", "--atlas", a]);
    assert_eq!(code(&again), 0);
    assert_eq!(atlas_records(&atlas).len(), 100);
    let summary: Value = serde_json::from_str(&stdout(&again)).unwrap();
    assert_eq!(summary["computed"], 0);
}

#[test]
fn ruled_scan_keeps_the_curve_part_small() {
    let o = lab(&["scan", "--families", "ruled4", "--count", "50", "--jobs", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let summary: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["samples"], 50);
    assert_eq!(summary["failed"], 0);

    let dir = tempfile::tempdir().unwrap();
    let atlas = dir.path().join("ruled.jsonl");
    let o = lab(&["scan", "--families", "ruled4", "--count", "50", "--atlas", atlas.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let recs = atlas_records(&atlas);
    assert_eq!(recs.len(), 50);
    assert!(recs.iter().all(|r| r.result.as_ref().unwrap().deg1part < 5));
}

#[test]
fn truncated_atlas_line_is_repaired() {
    let dir = tempfile::tempdir().unwrap();
    let atlas = dir.path().join("atlas.jsonl");
    let a = atlas.to_str().unwrap();
    assert_eq!(code(&lab(&["scan", "--families", "E3", "--count", "3", "--atlas", a])), 0);
    let mut f = fs::OpenOptions::new().append(true).open(&atlas).unwrap();
    f.write_all(br#"{"schema_version":1,"family":"E3","se"#).unwrap();
    drop(f);

    let o = lab(&["scan", "--families", "E3", "--count", "5", "--atlas", a]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stderr(&o).contains("truncated"));
    let recs = atlas_records(&atlas);
    assert_eq!(recs.len(), 5);
    let mut seeds: Vec<u64> = recs.iter().map(|r| r.seed).collect();
    seeds.sort();
    assert_eq!(seeds, vec![1, 2, 3, 4, 5]);
}

#[test]
fn table_dump_is_the_encoded_table() {
    let o = lab(&["table"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), cremona_core::hudson::table_source());
    let o = lab(&["table", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 75);
    assert_eq!(rows[22]["number"], 23);
}

#[test]
fn verify_retries_an_inadmissible_prime() {
    let o = lab(&["verify", "--prime", "7", "--criteria", "7,9"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[..2].iter().all(|l| l["passed"] == Value::Bool(true)));
    assert!(lines[0]["detail"].as_str().unwrap().contains("retries"));
}

#[test]
fn verify_fails_on_a_corrupted_table() {
    let dir = tempfile::tempdir().unwrap();
    let corrupted: String = cremona_core::hudson::table_source()
        .lines()
        .map(|l| {
            let mut f: Vec<&str> = l.split('\t').collect();
            if f[0] == "3" {
                f[4] = "2";
            }
            f.join("\t") + "\n"
        })
        .collect();
    let table = write(dir.path(), "table.tsv", &corrupted);
    let o = lab(&["verify", "--table-file", &table, "--criteria", "6"]);
    assert_eq!(code(&o), 1);
    let first: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(first["passed"], Value::Bool(false));
}

#[test]
fn verify_passes_every_criterion() {
    let o = lab(&["verify"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(last["passed"], 10);
    assert_eq!(last["total"], 10);
}
