//! Black-box tests driving the compiled binary: frozen output bytes,
//! exit-status contract, stdin handling, and the environment cap.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ldiag"));
    // Isolate from whatever the outer environment sets.
    cmd.env_remove("LDIAG_MAX_WEIGHT");
    cmd
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin is piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is UTF-8")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn product_of_single_lines_prints_the_three_term_sum() {
    let out = run(&["product", "1", "1"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "qs :: 1; 1\nqc :: 0 1; 1 0\n1 :: 1 0; 0 1\n");
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let first = run(&["product", "1 2; 0 1", "2 1"]);
    let second = run(&["product", "1 2; 0 1", "2 1"]);
    assert_eq!(code_of(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn product_json_lists_coefficient_triples_and_matrix_rows() {
    let out = run(&["product", "1", "1", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let parsed: serde_json::Value = serde_json::from_str(stdout_of(&out)).expect("valid JSON");
    let terms = parsed.as_array().expect("array of terms");
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["matrix"], serde_json::json!([[1], [1]]));
    assert_eq!(
        terms[0]["coefficient"],
        serde_json::json!([{ "qc_exp": 0, "qs_exp": 1, "coeff": 1 }])
    );
}

#[test]
fn product_evaluates_when_both_parameters_are_given() {
    let out = run(&["product", "1", "1", "--qc", "1", "--qs", "1"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1 :: 1; 1\n1 :: 0 1; 1 0\n1 :: 1 0; 0 1\n");
}

#[test]
fn product_rejects_one_sided_evaluation() {
    let out = run(&["product", "1", "1", "--qc", "1"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn dash_reads_the_matrix_from_stdin() {
    let piped = run_with_stdin(&["product", "-", "1"], "1 1\n");
    let direct = run(&["product", "1 1", "1"]);
    assert_eq!(code_of(&piped), 0);
    assert_eq!(piped.stdout, direct.stdout);
}

#[test]
fn concat_prints_the_block_diagonal_matrix() {
    let out = run(&["concat", "1", "2"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1 0; 0 2\n");
}

#[test]
fn coproduct_defaults_to_the_subset_split() {
    let out = run(&["coproduct", "1 1"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "1 :: e \u{2297} 1 1\n2 :: 1 \u{2297} 1\n1 :: 1 1 \u{2297} e\n"
    );
}

#[test]
fn coproduct_under_mqsym_cuts_columns() {
    let out = run(&["coproduct", "1 2", "--structure", "mqsym"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "1 :: e \u{2297} 1 2\n1 :: 1 \u{2297} 2\n1 :: 1 2 \u{2297} e\n"
    );
}

#[test]
fn antipode_under_mqsym_matches_the_frozen_expansion() {
    let out = run(&["antipode", "1 1", "--structure", "mqsym"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "-1 :: 1 1\n1 :: 1; 1\n1 :: 0 1; 1 0\n1 :: 1 0; 0 1\n"
    );
}

#[test]
fn verify_emits_an_all_pass_json_report() {
    let out = run(&["verify", "--structure", "mqsym", "--max-weight", "2"]);
    assert_eq!(code_of(&out), 0);
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out)).expect("valid JSON");
    assert_eq!(report["all_passed"], serde_json::json!(true));
    assert_eq!(report["deck_size"], serde_json::json!(7));
    assert_eq!(report["qc"], serde_json::json!(1));
    assert_eq!(report["axioms"].as_array().expect("axiom list").len(), 4);
}

#[test]
fn verify_text_format_prints_one_line_per_axiom() {
    let out = run(&["verify", "--max-weight", "2", "--format", "text"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("coassociativity: pass"));
    assert!(text.contains("antipode-convolution: pass"));
    assert!(text.contains("cocommutative: yes"));
}

#[test]
fn enumerate_lists_the_weight_two_deck_in_order() {
    let out = run(&["enumerate", "2"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "2\n1 1\n1; 1\n0 1; 1 0\n1 0; 0 1\n");
}

#[test]
fn enumerate_respects_the_default_bound() {
    let out = run(&["enumerate", "6"]);
    assert_eq!(code_of(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn enumerate_honors_the_environment_cap() {
    let out = binary()
        .args(["enumerate", "3"])
        .env("LDIAG_MAX_WEIGHT", "2")
        .output()
        .expect("binary runs");
    assert_eq!(code_of(&out), 2);

    let out = binary()
        .args(["enumerate", "1"])
        .env("LDIAG_MAX_WEIGHT", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(code_of(&out), 2);
}

#[test]
fn factor_prints_one_irreducible_block_per_line() {
    let out = run(&["factor", "1 0; 0 2"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1\n2\n");
}

#[test]
fn monomial_prints_the_degree_word() {
    let out = run(&["monomial", "1 0; 0 2"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "L1*L2*V1*V2\n");
}

#[test]
fn unlabel_prints_the_canonical_representative() {
    let out = run(&["unlabel", "1 0; 0 2"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "0 1; 2 0\n");
}

#[test]
fn stuffle_expands_the_three_term_identity() {
    let out = run(&["stuffle", "2", "3"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1 :: 2,3\n1 :: 3,2\n1 :: 5\n");
}

#[test]
fn mzv_prints_six_decimal_places() {
    let out = run(&["mzv", "2", "--N", "10"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1.549768\n");
}

#[test]
fn oracle_compare_agrees_and_exits_zero() {
    let out = run(&["oracle-compare", "1", "1 1"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "agree: 5 terms\n");
}

#[test]
fn malformed_inputs_exit_with_usage_status() {
    for args in [
        &["product", "1 0; 0 0", "1"][..],
        &["coproduct", "1 0; x"],
        &["mzv", "2,0", "--N", "10"],
        &["stuffle", "2,,3", "1"],
    ] {
        let out = run(args);
        assert_eq!(code_of(&out), 2, "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?}");
    }
}

#[test]
fn unknown_verbs_are_rejected_with_usage_text() {
    let out = run(&["frobnicate"]);
    assert_eq!(code_of(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
#[cfg(unix)]
fn closed_pipes_kill_the_process_quietly() {
    // The word expansion is a few hundred kilobytes, far past the pipe
    // buffer, so the binary is still writing when `head` closes the
    // pipe; it must die on SIGPIPE without a panic message.
    let out = Command::new("sh")
        .arg("-c")
        .arg(format!(
            "'{}' stuffle 1,1,1,1,1,1 1,1,1,1,1,1 | head -c 1 > /dev/null",
            env!("CARGO_BIN_EXE_ldiag")
        ))
        .output()
        .expect("shell runs");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stderr), "");
}

#[test]
fn matrix_text_round_trips_through_the_binary() {
    // Concatenating with the empty diagram echoes the canonical text of
    // every diagram of weight up to 3.
    let deck: Vec<ldiag_core::WeightMatrix> = (0..=3u64)
        .flat_map(|n| ldiag_core::enumerate_by_weight(n).expect("small weight"))
        .collect();
    for d in deck {
        let text = d.to_string();
        let out = run(&["concat", &text, "e"]);
        assert_eq!(code_of(&out), 0, "diagram {text:?}");
        assert_eq!(stdout_of(&out), format!("{text}\n"), "diagram {text:?}");
        assert_eq!(
            stdout_of(&out).trim_end().parse::<ldiag_core::WeightMatrix>().unwrap(),
            d
        );
    }
}
