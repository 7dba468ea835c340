use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use findfa::io::parse_dfa;
use findfa::Dfa;

fn findfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_findfa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn load(path: &Path) -> Dfa {
    parse_dfa(&fs::read_to_string(path).unwrap()).unwrap()
}

fn gen(dir: &Path, args: &[&str]) -> Output {
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend(["--out-dir", dir.to_str().unwrap()]);
    findfa(&all)
}

#[test]
fn gen_union_writes_two_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = gen(dir.path(), &["union", "3", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);
    let a = load(&dir.path().join("union_3_3_A.dfa"));
    let b = load(&dir.path().join("union_3_3_B.dfa"));
    assert_eq!((a.num_states(), b.num_states()), (3, 3));
    assert!(a.is_minimal() && b.is_minimal());
}

#[test]
fn gen_star_writes_one_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = gen(dir.path(), &["star", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(load(&dir.path().join("star_4.dfa")).num_states(), 4);
}

#[test]
fn gen_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["concat-case2", "4", "3"][..], &["union", "3"], &["star", "4", "4"], &["bogus", "1"]] {
        let out = gen(dir.path(), args);
        assert_eq!(code(&out), 2, "{args:?}");
    }
}

#[test]
fn apply_concat_complete_counts_the_sink() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["concat-case1", "3", "5"]);
    let a = dir.path().join("concat-case1_3_5_A.dfa");
    let b = dir.path().join("concat-case1_3_5_B.dfa");
    let result = dir.path().join("ab.dfa");
    let out = findfa(&[
        "apply",
        "concat",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--minimize",
        "--complete-inputs",
        "--out",
        result.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let d = load(&result);
    assert!(d.is_complete());
    assert_eq!(d.num_states(), 19);

    let out = findfa(&["apply", "concat", a.to_str().unwrap(), b.to_str().unwrap(), "--minimize"]);
    assert_eq!(parse_dfa(&stdout(&out)).unwrap().num_states(), 18);
}

#[test]
fn apply_complement_is_complete() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["complement", "3"]);
    let out = findfa(&["apply", "complement", dir.path().join("complement_3.dfa").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(parse_dfa(&stdout(&out)).unwrap().is_complete());
}

#[test]
fn apply_union_with_itself_is_minimize() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["reversal", "5"]);
    let a = dir.path().join("reversal_5.dfa");
    let a = a.to_str().unwrap();
    let out = findfa(&["apply", "union", a, a, "--minimize"]);
    assert_eq!(code(&out), 0);
    let expected = findfa(&["minimize", a]);
    assert!(parse_dfa(&stdout(&out)).unwrap().is_isomorphic(&parse_dfa(&stdout(&expected)).unwrap()));
}

#[test]
fn apply_rejects_cyclic_operand_and_bad_arity() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = dir.path().join("loop.dfa");
    fs::write(&cyclic, "alphabet: a\nstates: 1\ninitial: 0\nfinals: 0\ntrans:\n0 a 0\n").unwrap();
    let c = cyclic.to_str().unwrap();
    assert_eq!(code(&findfa(&["apply", "concat", c, c])), 2);
    assert_eq!(code(&findfa(&["apply", "union", c])), 2);
}

#[test]
fn parse_errors_exit_two_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dfa");
    fs::write(&bad, "alphabet: a\nstates: 2\ninitial: 0\nfinals: 1\ntrans:\n0 z 1\n").unwrap();
    let out = findfa(&["minimize", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 6"));
}

#[test]
fn measure_prints_json() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["union", "3", "4"]);
    let out = findfa(&["measure", dir.path().join("union_3_4_B.dfa").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["isc"], 4);
    assert_eq!(v["sc"], 5);
    assert!(v["measures"]["per_symbol"].is_object());
}

#[test]
fn verify_union_grid_is_tight() {
    let out = findfa(&["verify", "union", "2..5", "2..5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "op,m,n,k,state_bound,state_claim,state_measured,trans_bound,trans_claim,trans_measured,state_verdict,trans_verdict,ms"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r.contains(",TIGHT,TIGHT,")));
}

#[test]
fn verify_markdown_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.md");
    let out = findfa(&["verify", "reversal", "4..6", "--format", "md", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(path).unwrap();
    assert!(text.starts_with("| op |"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn verify_random_mode_reports_violations() {
    let clean = findfa(&["verify", "union", "--seed", "1", "--count", "100"]);
    assert_eq!(code(&clean), 0);
    let broken = findfa(&["verify", "reversal", "--seed", "1", "--count", "200"]);
    assert_eq!(code(&broken), 1);
    let again = findfa(&["verify", "reversal", "--seed", "1", "--count", "200"]);
    let strip = |o: &Output| {
        stdout(o)
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_owned())
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&broken), strip(&again));
}

#[test]
fn verify_out_of_scale_exits_two() {
    assert_eq!(code(&findfa(&["verify", "star", "30"])), 2);
    assert_eq!(code(&findfa(&["verify", "union"])), 2);
    assert_eq!(code(&findfa(&["verify", "union", "5..2"])), 2);
}
