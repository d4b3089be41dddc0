//! End-to-end tests of the `qcrystal` binary: output formats, literal
//! round-trips, and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn crystal_dot_of_the_vector_representation() {
    let out = run(&["crystal", "-n", "3", "--shape", "1", "--format", "dot", "--ascii"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph crystal {"));
    assert!(text.contains("\"1\" -> \"2\" [label=\"1\"];"));
    assert!(text.contains("\"1\" -> \"2\" [label=\"1~\", style=dashed];"));
    assert!(text.contains("\"2\" -> \"3\" [label=\"2\"];"));
    assert!(!text.contains("2~"));
}

#[test]
fn crystal_dot_is_deterministic() {
    let args = ["crystal", "-n", "3", "--shape", "3,1", "--format", "dot"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn crystal_text_counts_the_hook_shape() {
    let out = run(&["crystal", "-n", "3", "--shape", "3,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices: 24"));
    assert!(text.contains("211/1"));
    // dashed odd edge from the top vertex
    assert!(text.contains("211/1 -> 212/1 [1\u{0304}]"));
}

#[test]
fn crystal_empty_shape_is_a_single_node() {
    let out = run(&["crystal", "-n", "3", "--shape", "0", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"-\";"));
    assert!(!text.contains("->"));
}

#[test]
fn crystal_json_record_is_tagged() {
    let out = run(&["crystal", "-n", "3", "--shape", "2,1", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["format"], "qcrystal/1");
    assert_eq!(value["kind"], "crystal");
    assert_eq!(value["rank"], 3);
    assert_eq!(value["shape"], serde_json::json!([2, 1]));
    assert_eq!(value["vertex_count"], 8);
    assert_eq!(value["highest"], serde_json::json!(["21/1"]));
    assert_eq!(value["lowest"], serde_json::json!(["33/2"]));
}

#[test]
fn crystal_rank_violation_exits_2() {
    let out = run(&["crystal", "-n", "2", "--shape", "3,2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("more rows than the rank"));
}

#[test]
fn crystal_budget_guard_exits_2() {
    let out = run(&["crystal", "-n", "3", "--shape", "3,1", "--max-size", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn lr_all_methods_agree_on_the_worked_example() {
    let out = run(&["lr", "-n", "3", "--lhs", "2,1", "--rhs", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(3,2,1) 1"));
    assert!(text.contains("(4,2) 1"));
    assert!(text.contains("(5,1) 1"));
    assert!(text.contains("methods agree: words=insertion=graph"));
}

#[test]
fn lr_json_carries_witnesses() {
    let out = run(&[
        "lr", "-n", "3", "--lhs", "2,1", "--rhs", "3", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["format"], "qcrystal/1");
    assert_eq!(value["methods_agree"], true);
    let rows = value["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["shape"], serde_json::json!([3, 2, 1]));
    assert_eq!(rows[0]["word_witnesses"], serde_json::json!(["122"]));
    assert_eq!(rows[0]["tableau_witnesses"], serde_json::json!(["22/1"]));
}

#[test]
fn lr_single_method_and_empty_shape() {
    let out = run(&["lr", "-n", "3", "--lhs", "0", "--rhs", "2", "--method", "words"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(2) 1"));
    assert!(!text.contains("methods agree"));
}

#[test]
fn insert_trace_matches_the_worked_example() {
    let out = run(&["insert", "-n", "6", "--tableau", "66135/324", "--letters", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("<- 2: 66325/421/3"));
    assert!(text.contains("result: 66325/421/3"));
    assert!(text.contains("shape: (5,3,1)"));
}

#[test]
fn insert_tableau_trace_shows_every_fold_step() {
    let out = run(&["insert", "-n", "3", "--tableau", "22/1", "--rhs", "333"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let steps: Vec<&str> = text.lines().filter(|l| l.starts_with("<- ")).collect();
    assert_eq!(
        steps,
        ["<- 3: 223/1", "<- 3: 323/12", "<- 3: 333/22/1"]
    );
}

#[test]
fn insert_comma_rows_accepted() {
    let out = run(&["insert", "-n", "6", "--tableau", "66135,324", "--letters", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("result: 66325/421/3"));
}

#[test]
fn insert_invalid_tableau_names_the_condition() {
    let out = run(&["insert", "-n", "3", "--tableau", "121/1", "--letters", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stderr(&out);
    assert!(text.contains("condition (i)"), "stderr was: {text}");

    let out = run(&["insert", "-n", "3", "--tableau", "123/1", "--letters", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("condition (ii)"));
}

#[test]
fn insert_requires_exactly_one_operand() {
    let out = run(&["insert", "-n", "3", "--tableau", "22/1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "insert", "-n", "3", "--tableau", "22/1", "--letters", "3", "--rhs", "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hwv_lists_words_with_weights_and_component_sizes() {
    let out = run(&["hwv", "-n", "3", "--length", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "111 (3,0,0) 19\n121 (2,1,0) 8\n");

    let out = run(&["hwv", "-n", "3", "--length", "2"]);
    assert_eq!(stdout(&out), "11 (2,0,0) 9\n");

    let out = run(&["hwv", "-n", "3", "--length", "1"]);
    assert_eq!(stdout(&out), "1 (1,0,0) 3\n");
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["lr", "-n", "3", "--lhs", "2,1", "--rhs", "3", "--method", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("qcrystal"));
}

#[test]
fn bad_partition_literal_exits_2() {
    let out = run(&["crystal", "-n", "3", "--shape", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("strict partition"));
}

#[test]
fn emitted_literals_reparse() {
    // every tableau literal in the text output re-parses into the same graph
    let out = run(&["crystal", "-n", "3", "--shape", "2,1"]);
    let text = stdout(&out);
    let mut ids = Vec::new();
    for line in text.lines().skip(1) {
        if let Some((id, _)) = line.split_once(' ') {
            if !id.contains("->") && id != "vertices:" && id != "edges:" {
                ids.push(id.to_string());
            }
        }
    }
    assert!(ids.contains(&"21/1".to_string()));
    for id in ids {
        if id.contains('/') || id.chars().all(|c| c.is_ascii_digit()) {
            let t = qcrystal::render::parse_tableau(&id, 3).unwrap();
            assert_eq!(t.to_string(), id);
        }
    }
}
