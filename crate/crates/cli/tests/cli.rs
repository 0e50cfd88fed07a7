use std::io::Write;
use std::process::{Command, Output, Stdio};

fn egypt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_egypt")).args(args).output().unwrap()
}

fn egypt_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_egypt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_json() {
    let o = egypt(&["expand", "1/3", "--seq", "odious", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["denominators"], serde_json::json!(["4", "16", "84", "168", "336"]));
    assert_eq!(v["verified"], true);
    assert_eq!(v["q"], "1/3");
    assert!(v.get("trace").is_none());
}

#[test]
fn expand_plain_and_trace() {
    let o = egypt(&["expand", "2", "--seq", "A005153", "--trace"]);
    assert_eq!(stdout(&o), "1\n2\n4\n6\n12\n");
    let o = egypt(&["expand", "1/3", "--seq", "odious", "--json", "--trace"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["trace"]["remainder"]["multiplier"], "7");
    assert_eq!(v["trace"]["remainder"]["k"], "4");
}

#[test]
fn expand_is_deterministic() {
    let args = ["expand", "1234/987", "--seq", "evil", "--json", "--trace"];
    assert_eq!(egypt(&args).stdout, egypt(&args).stdout);
}

#[test]
fn feasibility_exit_codes() {
    let o = egypt(&["feasibility", "3", "--seq", "hardy_ramanujan"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("infeasible"));
    let o = egypt(&["feasibility", "1/2", "--seq", "jordan_polya", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "feasible");
    let o = egypt(&["feasibility", "1000000", "--seq", "practical"]);
    assert_eq!((o.status.code(), stdout(&o).lines().next()), (Some(0), Some("feasible")));
    let o = egypt(&["feasibility", "12479/5000", "--seq", "hardy_ramanujan", "--budget", "100"]);
    assert!(stdout(&o).contains("gap: ["));
}

#[test]
fn member_and_multiplier() {
    let o = egypt(&["member", "10", "--seq", "practical"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "false\n"));
    let o = egypt(&["multiplier", "5", "--seq", "jordan_polya"]);
    assert_eq!(stdout(&o), "24\n");
    let o = egypt(&["enumerate", "--seq", "evil", "--limit", "12"]);
    assert_eq!(stdout(&o), "3\n5\n6\n9\n10\n12\n");
}

#[test]
fn expand_output_verifies() {
    for (seq, q) in [("odious", "1/3"), ("practical", "17/7"), ("half_heavy", "9/5"), ("hardy_ramanujan", "2")] {
        let e = egypt(&["expand", q, "--seq", seq, "--json"]);
        assert_eq!(e.status.code(), Some(0), "{seq} {q}");
        let v = egypt_with_stdin(&["verify", "--denominators", "-"], &e.stdout);
        assert_eq!(v.status.code(), Some(0), "{seq} {q}: {}", stdout(&v));
        assert!(stdout(&v).ends_with("verified\n"));
    }
}

#[test]
fn verify_reports_failures() {
    let o = egypt(&["verify", "--seq", "odious", "--q", "1/3", "--denominators", "4,16,84,168,335"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation: 335"));
    let o = egypt(&["verify", "--seq", "practical", "--q", "2", "--denominators", "1 2 4 6 12 12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("distinct: FAILED"));
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["expand", "1/0", "--seq", "odious"][..],
        &["expand", "0", "--seq", "odious"],
        &["expand", "-1/2", "--seq", "odious"],
        &["expand", "0.5", "--seq", "odious"],
        &["expand", "1/2", "--seq", "primes"],
        &["member", "x", "--seq", "evil"],
        &["expand", "1/2"],
        &["selftest", "--limit", "1000000"],
    ] {
        assert_eq!(egypt(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_errors_exit_2() {
    let o = egypt(&["expand", "7", "--seq", "odious", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compare_bfile_and_selftest() {
    let dir = std::env::temp_dir().join(format!("egypt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("evil.txt");
    std::fs::write(&good, "# evil\n1 0\n2 3\n3 5\n4 6\n").unwrap();
    let o = egypt(&["compare-bfile", "--seq", "evil", "--file", good.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "match\n"));
    let bad = dir.join("odious.txt");
    std::fs::write(&bad, "0 1\n1 2\n2 3\n").unwrap();
    let o = egypt(&["compare-bfile", "--seq", "odious", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::write(&bad, "0 1\n1 two\n").unwrap();
    let o = egypt(&["compare-bfile", "--seq", "odious", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();

    let o = egypt(&["selftest", "--limit", "3000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
}
