use std::path::PathBuf;
use std::process::{Command, Output};

fn here(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depthfn"))
        .args(args)
        .env_remove("DEPTHFN_LATTICE_CAP")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    here(&format!("fixtures/{name}")).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_golden(args: &[&str], golden: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    let want = std::fs::read_to_string(here(&format!("golden/{golden}"))).unwrap();
    assert_eq!(stdout(&out), want, "{args:?}");
}

#[test]
fn construct_golden() {
    assert_golden(&["construct", "--spec", &fixture("spec_322.json")], "construct_322.txt");
    assert_golden(&["construct", "--spec", r#"{"a":2,"b":2,"mult":[]}"#], "construct_constant.txt");
}

#[test]
fn construct_rejects_drop_by_two() {
    let out = run(&["construct", "--spec", r#"{"prefix":[2,2,0],"tail":0}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("drop by 2"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn construct_writes_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.json");
    let out = run(&["construct", "--spec", &fixture("spec_322.json"), "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = std::fs::read_to_string(&path).unwrap();
    assert!(doc.contains(r#""vars": ["x1", "y1", "z1", "x2", "y2", "z2", "w1"]"#), "{doc}");
    let depth = run(&["depth", "--ideal", path.to_str().unwrap(), "--kmax", "2"]);
    assert_eq!(depth.status.code(), Some(0));
    assert!(stdout(&depth).starts_with("k\tdepth\tpd\tgens\tlattice\n1\t3\t4\t6\t"));
}

#[test]
fn witness_golden() {
    assert_golden(&["witness", "--n", "5", "--d", "1", "--r", "3"], "witness_513.txt");
    assert_golden(&["witness", "--n", "4", "--d", "2", "--r", "5"], "witness_425.txt");
}

#[test]
fn witness_rejects_inadmissible() {
    let out = run(&["witness", "--n", "3", "--d", "2", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("d=n-1 and r=1"), "{}", stderr(&out));
}

#[test]
fn depth_golden() {
    assert_golden(&["depth", "--ideal", &fixture("prop3.json"), "--kmax", "4"], "depth_prop3.txt");
    assert_golden(
        &["depth", "--ideal", &fixture("principal.json"), "--kmax", "3", "--field", "q"],
        "depth_principal.txt",
    );
}

#[test]
fn betti_and_predict_golden() {
    assert_golden(&["betti", "--ideal", &fixture("prop3.json"), "--field", "q"], "betti_prop3.txt");
    assert_golden(&["predict", "--spec", r#"{"a":2,"b":0,"mult":[1,2]}"#], "predict_spec.txt");
}

#[test]
fn verify_golden_and_mismatch() {
    assert_golden(
        &["verify", "--family", "prop", "--t", "4", "--kmax", "6", "--field", "both"],
        "verify_prop4.txt",
    );
    let out = run(&[
        "verify", "--family", "prop", "--t", "3", "--kmax", "4", "--expect", r#"{"prefix":[1],"tail":0}"#,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("result\tmismatch at k=2\n"));
}

#[test]
fn verify_other_families() {
    for args in [
        &["verify", "--family", "spec", "--spec", r#"{"prefix":[3,2,2],"tail":1}"#, "--kmax", "4"][..],
        &["verify", "--family", "ndr", "--n", "4", "--d", "2", "--r", "3", "--kmax", "5"][..],
        &["verify", "--family", "example", "--which", "I", "--kmax", "5"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}{}", stdout(&out), stderr(&out));
        assert!(stdout(&out).contains("result\tmatch\n"));
    }
}

#[test]
fn buchberger_and_socle_golden() {
    assert_golden(&["buchberger", "--t", "3", "--n", "2"], "buchberger_3_2.txt");
    assert_golden(&["socle", "--t", "2", "--n", "3"], "socle_2_3.txt");
}

#[test]
fn buchberger_outside_hypothesis_is_marked() {
    let out = run(&["buchberger", "--t", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("hypothesis=outside"));
    assert!(text.ends_with("result\toutside-hypothesis\n"));
}

#[test]
fn oracle_check_passes() {
    let out = run(&["oracle-check", "--seed", "7", "--count", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("betti_agree\t200\nsocle_agree\t200\nresult\tpass\n"));
}

#[test]
fn lattice_cap_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_depthfn"))
        .args(["depth", "--ideal", &fixture("prop3.json"), "--kmax", "2"])
        .env("DEPTHFN_LATTICE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("cap of 4"));
    let flag = run(&["--lattice-cap", "4", "betti", "--ideal", &fixture("prop3.json")]);
    assert_eq!(flag.status.code(), Some(3));
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["depth", "--ideal", &fixture("negative.json"), "--kmax", "2"][..],
        &["depth", "--ideal", &fixture("zero.json"), "--kmax", "2"][..],
        &["depth", "--ideal", &fixture("missing.json"), "--kmax", "2"][..],
        &["depth", "--ideal", &fixture("prop3.json"), "--kmax", "2", "--field", "gf4"][..],
        &["socle", "--t", "3", "--n", "2"][..],
        &["verify", "--family", "prop", "--kmax", "2"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["betti", "--ideal", &fixture("prop3.json")];
    let first = run(&args);
    for _ in 0..3 {
        assert_eq!(run(&args).stdout, first.stdout);
    }
    let args = ["depth", "--ideal", &fixture("principal.json"), "--kmax", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
