use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn binoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binoid")).args(args).output().expect("binary runs")
}

fn run_on(verb: &str, file: &str, flags: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![verb, path.to_str().unwrap()];
    args.extend_from_slice(flags);
    binoid(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("binoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn favorite_complex_picard() {
    for file in ["favorite.cplx", "favorite.json"] {
        let o = run_on("picard", file, &[]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "H^0 = 0, H^1 = Z\n");
    }
}

#[test]
fn class_group_of_x_plus_y_eq_4z() {
    let o = run_on("class-group", "xynz4.binoid", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Z/4\n");
}

#[test]
fn zero_generators_is_a_precondition_error() {
    let o = run_on("spec", "empty.binoid", &[]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).is_empty());
    assert_eq!(stderr(&o).lines().count(), 1);
}

#[test]
fn parse_errors_report_lines() {
    let path = scratch("bad.binoid", "generators: x y\n# comment\nrelation: x + q = y\n");
    let o = binoid(&["spec", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("line 3") && err.contains("unknown generator `q`"), "{err}");
    let json = scratch("bad.json", "{\"facets\": [[1, 2],\n [3,]]}\n");
    let o = binoid(&["picard", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = binoid(&["picard", "/nonexistent/file.cplx"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    // Unknown verbs are rejected by the argument parser.
    assert_eq!(binoid(&["frobnicate", "x"]).status.code(), Some(2));
    assert_eq!(run_on("picard", "xyzw.binoid", &[]).status.code(), Some(3));
    assert_eq!(run_on("class-group", "favorite.cplx", &[]).status.code(), Some(3));
    assert_eq!(run_on("link", "favorite.cplx", &[]).status.code(), Some(3));
    assert_eq!(run_on("picard", "favorite.cplx", &["--dot"]).status.code(), Some(3));
    assert_eq!(run_on("link", "favorite.cplx", &["--face", "9"]).status.code(), Some(3));
}

#[test]
fn incomplete_unit_search_exits_4() {
    let o = run_on("picard-general", "xy2z.binoid", &["--bound", "0"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(!stdout(&o).is_empty());
    assert_eq!(stderr(&o).lines().count(), 1);
    let o = run_on("picard-general", "xy2z.binoid", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "H^0 = 0, H^1 = Z/2\n");
}

#[test]
fn spectrum_json_and_dot() {
    let o = run_on("spec", "xyzw.binoid", &["--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["primes"].as_array().unwrap().len(), 10);
    assert_eq!(v["cover_edges"].as_array().unwrap().len(), 16);
    assert_eq!(v["primes"][1], serde_json::json!(["x", "z"]));
    let dot = stdout(&run_on("spec", "xyzw.binoid", &["--dot"]));
    assert!(dot.starts_with("digraph spec {"));
    assert_eq!(dot, stdout(&run_on("dot", "xyzw.binoid", &[])));
    assert_eq!(dot.matches("->").count(), 16);
}

#[test]
fn json_group_schemas() {
    let v: Value = serde_json::from_slice(&run_on("class-group", "xynz4.binoid", &["--json"]).stdout).unwrap();
    assert_eq!(v["class_group"], serde_json::json!({"free_rank": 0, "torsion": [4]}));
    assert_eq!(v["valuations"].as_array().unwrap().len(), 2);
    let v: Value = serde_json::from_slice(&run_on("sr-cohomology", "triangle.cplx", &["--json"]).stdout).unwrap();
    let h1 = &v["degrees"][1];
    assert_eq!(h1["degree"], 1);
    assert_eq!(
        h1["group"]["units"],
        serde_json::json!({"symbol": "K*", "free": 1, "cotorsion": [], "torsion_sub": []})
    );
    assert_eq!(h1["group"]["picard"], serde_json::json!({"free_rank": 3, "torsion": []}));
    let v: Value = serde_json::from_slice(&run_on("picard-general", "xyzw.binoid", &["--json"]).stdout).unwrap();
    assert_eq!(v["ranks"], serde_json::json!([4, 14, 12, 3]));
    assert_eq!(v["complete"], true);
}

#[test]
fn torsion_and_degrees() {
    assert_eq!(stdout(&run_on("picard", "cone-rp2.cplx", &["--degree", "3"])), "H^3 = Z/2\n");
    assert_eq!(stdout(&run_on("picard", "cone-rp2.cplx", &[])), "H^0 = 0, H^1 = 0, H^2 = 0, H^3 = Z/2\n");
    assert_eq!(stdout(&run_on("cohomology", "triangle.cplx", &["--reduced"])), "H^-1 = 0, H^0 = 0, H^1 = Z\n");
    assert_eq!(stdout(&run_on("cohomology", "triangle.cplx", &["--degree", "-1", "--reduced"])), "H^-1 = 0\n");
    assert_eq!(stdout(&run_on("pic-open", "two-triangles.cplx", &["--degree", "1"])), "H^1 = 0\n");
}

#[test]
fn complexes_and_reports() {
    assert_eq!(stdout(&run_on("link", "favorite.cplx", &["--face", "3"])), "{1,2} {4}\n");
    assert_eq!(stdout(&run_on("nerve", "favorite.cplx", &[])), "{1,2,3} {3,4}\n");
    let v: Value = serde_json::from_slice(&run_on("monomial-report", "nonreduced.mono", &["--json"]).stdout).unwrap();
    assert_eq!(v["is_radical"], false);
    assert_eq!(v["nonvanishing_h1"], true);
    assert_eq!(v["pic_loc_trivial"], false);
    assert_eq!(v["radical"]["facets"], serde_json::json!([[1, 2], [1, 3], [2, 3]]));
}

#[test]
fn output_is_deterministic() {
    for (verb, file) in [("spec", "xyzw.binoid"), ("picard-general", "xyzw.binoid"), ("sr-cohomology", "cone-rp2.cplx")]
    {
        let a = run_on(verb, file, &["--json"]);
        let b = run_on(verb, file, &["--json"]);
        assert_eq!(a.stdout, b.stdout, "{verb}");
    }
}
