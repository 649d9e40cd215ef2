use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kirchhoff")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn without_elapsed(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with("elapsed_seconds:")).collect::<Vec<_>>().join("\n")
}

#[test]
fn compute_kf() {
    let out = run(&["compute", "--family", "path:4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("kf = 10\n"));

    let out = run(&["compute", "--family", "dumbbell:3,3,5", "--kf"]);
    let text = stdout(&out);
    assert!(text.contains("kf = 137.666666666667\n"), "{text}");
    assert!(text.contains("kf_exact = 413/3\n"));
    assert!(text.contains("kf_closed_form = 413/3\n"));
}

#[test]
fn compute_other_invariants() {
    let text = stdout(&run(&["compute", "--graph6", "C~", "--trees", "--spectrum", "--wiener"]));
    assert!(text.contains("trees = 16\n"), "{text}");
    assert!(text.contains("spectrum = 4 4 4 0\n"), "{text}");
    assert!(text.contains("wiener = 6\n"));
    assert!(!text.contains("kf ="));
}

#[test]
fn compute_from_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let text = stdout(&run(&["compute", "--edgelist", path.to_str().unwrap(), "--resistance"]));
    assert!(text.contains("resistance[0] = 0 0.75 1 0.75\n"), "{text}");
}

#[test]
fn compute_needs_exactly_one_source() {
    assert_eq!(run(&["compute"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--graph6", "C~", "--family", "path:4"]).status.code(), Some(2));
    let out = run(&["compute", "--graph6", "C~~"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn verify_exit_codes_and_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = run(&["verify", "--theorem", "lower-bound", "--n", "7", "--p", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("status: PASS\n") && text.contains("checked_count: 1330\n"), "{text}");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);

    let out = run(&["verify", "--theorem", "max-ordering", "--n", "28"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("status: FAIL\n"));

    let out = run(&["verify", "--theorem", "lower-bound", "--n", "40", "--p", "20"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "--theorem", "edge-trim", "--seed", "5", "--samples", "30", "--jobs", "1"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(without_elapsed(&a), without_elapsed(&b));
}

#[test]
fn search_ranks_groups() {
    let text = stdout(&run(&["search", "--deleted-edges", "6,2", "--min", "--top", "2"]));
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "rank\tgraph6\tkf\tcount");
    assert!(rows[1].starts_with("1\t") && rows[1].ends_with("\t6\t45"), "{text}");
    assert!(rows[2].ends_with("\t6.2\t60"), "{text}");

    let text = stdout(&run(&["search", "--trees", "8", "--max"]));
    assert!(text.lines().nth(1).unwrap().ends_with("\t84\t20160"), "{text}");
    assert_eq!(run(&["search", "--trees", "8", "--min", "--max"]).status.code(), Some(2));
}

#[test]
fn table_rows_and_warnings() {
    let out = run(&["table", "--family", "r3", "--family", "q3", "--family", "lollipop:n,9", "--n", "6..8", "--delimiter", ","]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "family,n,closed_form,numeric_kf,abs_diff");
    assert!(rows.iter().any(|r| r.starts_with("r3:6,6,")));
    // lollipop:n,9 is invalid below n = 9
    assert_eq!(rows.len(), 1 + 3 + 3);
    assert_eq!(String::from_utf8_lossy(&out.stderr).matches("warning: skipping").count(), 3);
}
