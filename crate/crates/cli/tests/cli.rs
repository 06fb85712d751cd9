use std::path::PathBuf;
use std::process::{Command, Output};

fn inqmt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inqmt")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "corpus", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn eval_exit_codes() {
    let yes = inqmt(&["eval", "p \\/ q", "-V", "p,q", "--team", "{10}"]);
    assert_eq!(code(&yes), 0);
    assert!(stdout(&yes).starts_with("supported"));
    let no = inqmt(&["eval", "p \\/ q", "-V", "p,q", "--team", "{10,01}"]);
    assert_eq!(code(&no), 1);
}

#[test]
fn team_bits_follow_variable_order() {
    // World "10" sets the first declared variable.
    assert_eq!(code(&inqmt(&["eval", "p", "-V", "p,q", "--team", "{10}"])), 0);
    assert_eq!(code(&inqmt(&["eval", "p", "-V", "q,p", "--team", "{10}"])), 1);
}

#[test]
fn valid_reports_counterexample() {
    assert_eq!(code(&inqmt(&["valid", "~~p -> p"])), 0);
    let o = inqmt(&["valid", "p \\/ ~p"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("counterexample team {0,1}"));
}

#[test]
fn flat_json() {
    let o = inqmt(&["--json", "flat", "p \\/ ~p"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["flat"], false);
    assert_eq!(v["equivalent_to_flattening"], false);
    assert_eq!(v["equivalent_to_double_negation"], false);
}

#[test]
fn translate_prints_both_translations() {
    let o = inqmt(&["translate", "p -> q"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "dn(p ~> q)\nflat: p ~> q\n");
    let o = inqmt(&["translate", "p \\/ q"]);
    assert_eq!(stdout(&o), "dn(p) \\/ dn(q)\n");
}

#[test]
fn check_and_audit_corpus() {
    let o = inqmt(&["check", "--script", &corpus("double_negation.proof")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("derivation checks"));
    let o = inqmt(&["audit", "-V", "p,q", "--script", &corpus("split.proof")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("no violations"));
}

#[test]
fn check_failure_exits_one() {
    let dir = std::env::temp_dir().join(format!("inqmt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.proof");
    std::fs::write(&path, "(rule \"dnR\" (seq \"dn(p)\" \"dn(q)\") (rule \"Id\" (seq \"p\" \"p\")))").unwrap();
    let o = inqmt(&["check", "--script", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("does NOT check"));
}

#[test]
fn reduce_prints_script_and_report() {
    let o = inqmt(&["reduce", "--script", &corpus("reductions/down_before.proof")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("(rule \"d-f elim\""));
    assert!(out.contains("reduced dn cut on dn(p) at root"));
    let o = inqmt(&["--json", "reduce", "--fuel", "0", "--script", &corpus("reductions/variable_before.proof")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["fuel_exhausted"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&inqmt(&["eval", "p"])), 2);
    assert_eq!(code(&inqmt(&["frobnicate"])), 2);
    assert_eq!(code(&inqmt(&["check", "--script", "/no/such/file.proof"])), 2);
    assert_eq!(code(&inqmt(&["valid", "p &&& q"])), 2);
    assert_eq!(code(&inqmt(&["eval", "r", "-V", "p,q", "--team", "{}"])), 2);
    assert_eq!(code(&inqmt(&["selftest", "--level", "slow"])), 2);
}

#[test]
fn size_cap_exits_three() {
    assert_eq!(code(&inqmt(&["valid", "p", "-V", "p,q,r,s,t"])), 3);
}

#[test]
fn selftest_fast() {
    let o = inqmt(&["selftest", "--level", "fast"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("7/7 bundled derivations check"));
}
