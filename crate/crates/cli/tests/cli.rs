use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const FORK: &str = "# fork, w = 3\np 5\ne 1 2\ne 2 3\ne 3 4\ne 3 5\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromapos")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    run_env_stdin(args, input, &[])
}

fn run_env_stdin(args: &[&str], input: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromapos"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn tadpole_4_1() -> String {
    "p 5\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 4 5\n".into()
}

fn twinned_tadpole(dir: &TempDir) -> String {
    let src = write(dir, "tad.txt", &tadpole_4_1());
    let out = dir.path().join("twin.txt");
    let o = run(&["transform", &src, "--twin", "4", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    out.to_str().unwrap().to_owned()
}

#[test]
fn csf_of_the_fork_in_e() {
    let o = run_stdin(&["csf", "-", "--basis", "e"], FORK);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5 e[5]\n7 e[4,1]\n1 e[3,2]\n2 e[3,1,1]\n1 e[2,2,1]\n");
}

#[test]
fn csf_of_a_single_vertex_and_of_p4() {
    assert_eq!(stdout(&run_stdin(&["csf", "-", "--basis", "m"], "p 1\n")), "1 m[1]\n");
    let p4 = stdout(&run_stdin(&["csf", "-", "--basis", "e"], "p 4\ne 1 2\ne 2 3\ne 3 4\n"));
    let mut lines: Vec<&str> = p4.lines().collect();
    lines.sort_unstable();
    assert_eq!(lines, ["2 e[2,2]", "2 e[3,1]", "4 e[4]"]);
}

#[test]
fn csf_json_keeps_exact_coefficients_as_strings() {
    let o = run_stdin(&["csf", "-", "--basis", "s", "--json"], "p 3\ne 1 2\ne 2 3\ne 3 1\n");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "csf");
    assert_eq!(v["basis"], "s");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["partition"], serde_json::json!([1, 1, 1]));
    assert_eq!(terms[0]["num"], "6");
    assert_eq!(terms[0]["den"], "1");
}

#[test]
fn convert_between_bases() {
    let o = run_stdin(&["convert", "-", "--to", "m"], "1 s[2,1]\n");
    assert_eq!(stdout(&o), "1 m[2,1]\n2 m[1,1,1]\n");
    let back = run_stdin(&["convert", "-", "--to", "s"], &stdout(&o));
    assert_eq!(stdout(&back), "1 s[2,1]\n");
    let half = run_stdin(&["convert", "-", "--to", "e"], "1/2 m[1,1]\n");
    // m[1,1] = e[2]
    assert_eq!(stdout(&half), "1/2 e[2]\n");
}

#[test]
fn twinning_the_fork_center() {
    let o = run_stdin(&["transform", "-", "--twin", "3"], FORK);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("p 6\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 8);
}

#[test]
fn empty_clan_rewrites_the_same_graph() {
    let o = run_stdin(&["transform", "-", "--clan", "3", "0"], FORK);
    let without_comments: String = FORK.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert_eq!(stdout(&o), without_comments);
}

#[test]
fn twinned_tadpole_matches_hand_transcription() {
    let dir = TempDir::new().unwrap();
    let path = twinned_tadpole(&dir);
    let mut edges: Vec<(usize, usize)> = fs::read_to_string(&path)
        .unwrap()
        .lines()
        .filter_map(|l| l.strip_prefix("e "))
        .map(|l| {
            let mut it = l.split(' ').map(|x| x.parse::<usize>().unwrap());
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            (u.min(v), u.max(v))
        })
        .collect();
    edges.sort_unstable();
    assert_eq!(edges, [(1, 2), (1, 4), (1, 6), (2, 3), (3, 4), (3, 6), (4, 5), (4, 6), (5, 6)]);
}

#[test]
fn twinned_tadpole_is_not_e_positive() {
    let dir = TempDir::new().unwrap();
    let path = twinned_tadpole(&dir);
    let o = run(&["positivity", &path, "--basis", "e"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NOT POSITIVE\nwitness -6 e[3,3]\n");
}

#[test]
fn twinned_tadpole_schur_verdict_carries_its_witness() {
    let dir = TempDir::new().unwrap();
    let path = twinned_tadpole(&dir);
    let o = run(&["positivity", &path, "--basis", "s", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["positive"], false);
    assert_eq!(v["witness"], "-4 s[2,2,2]");
}

#[test]
fn first_fork_clan_is_not_s_positive() {
    let twin = run_stdin(&["transform", "-", "--twin", "3"], FORK);
    let o = run_stdin(&["positivity", "-", "--basis", "s"], &stdout(&twin));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NOT POSITIVE\nwitness -4 s[2,2,2]\n");
}

#[test]
fn positive_graphs_exit_zero() {
    let o = run_stdin(&["positivity", "-", "--basis", "e"], "p 4\ne 1 2\ne 2 3\ne 3 4\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "POSITIVE\n");
}

#[test]
fn scan_prints_one_row_per_parameter() {
    let o = run(&["scan", "--family", "twinned-tadpole4", "--range", "1..6", "--basis", "e"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    for (b, row) in (1..=6u32).zip(&rows) {
        assert!(row.starts_with(&format!("{b}\t")), "{row}");
        assert!(row.contains("NOT POSITIVE"), "{row}");
        if b == 1 {
            assert!(row.ends_with("-6 e[3,3]"), "{row}");
        }
    }
    let json = run(&["scan", "--family", "fork-clan", "--range", "1..3", "--basis", "s", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["witness"], "-4 s[2,2,2]");
}

#[test]
fn empty_scan_range_prints_only_the_header() {
    let o = run(&["scan", "--family", "fork-clan", "--range", "3..2", "--basis", "s"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn verify_paper_lists_closed_form_and_schur_checks() {
    let o = run(&["verify-paper", "--section", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    for prefix in ["small-forms/", "eq-xs", "wolfe-vs-bruteforce/", "os-relations/", "eq-pmn/", "eq-t-prime/b=6", "eq-xhb/b=4"] {
        assert!(ids.iter().any(|id| id.starts_with(prefix)), "{prefix}");
    }
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(v["fail"], 0);

    let o = run(&["verify-paper", "--section", "4"]);
    let text = stdout(&o);
    for id in ["eq-am/", "kostka-matrix-fork/k=5", "eq-XF/k=10", "tabloid-count/k=4", "s-positivity/fork-clan/k=2"] {
        assert!(text.contains(id), "{id}");
    }
    // the twinned tadpole family is not s-positive at b = 1, so this section fails
    assert_eq!(o.status.code(), Some(1));
    assert!(text.contains("FAIL    s-positivity/twinned-tadpole4/b=1"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["verify-paper", "--section", "7"]).status.code(), Some(2));
    assert_eq!(run_stdin(&["csf", "-"], "p 3\ne 1 1\n").status.code(), Some(2));
    assert_eq!(run_stdin(&["csf", "-"], "p 3\ne 1 2\ne 2 1\n").status.code(), Some(2));
    assert_eq!(run_stdin(&["csf", "-"], "e 1 2\n").status.code(), Some(2));
    assert_eq!(run(&["csf", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(run(&["transform", "-"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--family", "fork-clan", "--range", "1-3"]).status.code(), Some(2));
}

#[test]
fn size_guards_exit_three() {
    let o = run_stdin(&["csf", "-"], "p 13\n");
    assert_eq!(o.status.code(), Some(3));
    let o = run_env_stdin(&["csf", "-"], "p 6\n", &[("CHROMAPOS_MAX_VERTICES", "5")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("CHROMAPOS_MAX_VERTICES"));
    // the variable never raises a guard
    let o = run_env_stdin(&["csf", "-"], "p 13\n", &[("CHROMAPOS_MAX_VERTICES", "40")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn transform_writes_the_output_file() {
    let dir = TempDir::new().unwrap();
    let src = write(&dir, "fork.txt", FORK);
    let out = dir.path().join("clan.txt");
    let o = run(&["transform", &src, "--clan", "3", "2", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(Path::new(&out).exists());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("p 7\n"));
}
