//! End-to-end tests of the `madhava` binary: documented example values,
//! frozen output bytes, JSON round-trips, exit codes, and determinism.

use std::process::{Command, Output};

use madhava::{series_a, Int, Rat};
use madhava_cli::methods::{self, MethodSpec};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_madhava"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout_of(args: &[&str]) -> String {
    let output = run(args);
    assert!(
        output.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).expect("output is UTF-8")
}

fn first_line(args: &[&str]) -> String {
    stdout_of(args).lines().next().expect("nonempty output").to_owned()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("output parses as JSON")
}

/// Rebuilds the exact rational from a JSON {num, den} pair.
fn rational(value: &Value) -> Rat {
    let parse = |key: &str| {
        value[key]
            .as_str()
            .expect("rational fields are strings")
            .parse::<Int>()
            .expect("rational fields are integers")
    };
    Rat::new(parse("num"), parse("den"))
}

#[test]
fn compute_examples_match_the_documented_values() {
    assert_eq!(
        first_line(&["compute", "--method", "series-c", "--n", "2", "--digits", "13"]),
        "3.1414634146341"
    );
    assert_eq!(
        first_line(&["compute", "--method", "corrected", "--n", "1", "--cf-order", "1", "--digits", "1"]),
        "3.0"
    );
    assert_eq!(
        first_line(&["compute", "--method", "brouncker", "--n", "2", "--digits", "1"]),
        "3.2"
    );
}

#[test]
fn compute_plain_output_is_frozen() {
    assert_eq!(
        stdout_of(&["compute", "--method", "series-c", "--n", "2"]),
        "3.1414634146341\n\
         error bound: 1.30e-4 (certified |value - pi|)\n\
         correct decimals: 3\n"
    );
}

#[test]
fn compute_json_round_trips_exactly() {
    let out = json_of(&["compute", "--method", "series-a", "--n", "3", "--format", "json"]);
    assert_eq!(out["method"], "series-a");
    assert_eq!(out["digits"], 13);
    assert_eq!(out["rounding"], "toward-zero");
    assert!(out.get("cf_order").is_none());
    assert!(out.get("rounds").is_none());
    let row = &out["rows"][0];
    assert_eq!(row["n"], 3);
    assert_eq!(row["value"]["decimal"], "3.1452380952380");
    assert_eq!(row["correct_digits"], 2);
    assert_eq!(row["abs_error_bound"]["decimal"], "3.65e-3");
    assert_eq!(rational(&row["value"]), series_a(3));
    // The certified bound really bounds: |value - π| < bound, checked
    // through the exact rationals round-tripped from the output.
    let bound = rational(&row["abs_error_bound"]);
    assert!(bound > Rat::new(Int::from(36), Int::from(10_000)));
    assert!(bound < Rat::new(Int::from(37), Int::from(10_000)));
}

#[test]
fn rounding_flag_switches_mode() {
    assert_eq!(
        first_line(&["compute", "--method", "series-a", "--n", "3", "--rounding", "half-even"]),
        "3.1452380952381"
    );
    let out = json_of(&[
        "compute", "--method", "series-a", "--n", "3", "--rounding", "half-even", "--format",
        "json",
    ]);
    assert_eq!(out["rounding"], "half-even");
}

#[test]
fn default_table_prints_exact_recomputations() {
    let table = stdout_of(&["table"]);
    assert!(table.starts_with("| n | a_n | b_n | c_n |\n|--:|:--|:--|:--|\n"));
    // Row 10's b-cell is the exact value, not the deviant transcription.
    assert!(table.contains(
        "| 10 | 3.**141**4067184965 | 3.**14159**02423707 | 3.**1415926**266578 |"
    ));
    assert!(table.contains(
        "| 71 | 3.**14159**33232243 | 3.**141592653**7282 | 3.**141592653589**8 |"
    ));
    assert_eq!(table.lines().count(), 14, "header plus twelve default rows");
}

#[test]
fn table_csv_bytes_are_frozen() {
    assert_eq!(
        stdout_of(&["table", "--rows", "1", "--digits", "5", "--format", "csv"]),
        "n,a,b,c\n1,3.16666,3.20000,3.14285\n"
    );
}

#[test]
fn table_json_round_trips_exactly() {
    let out = json_of(&["table", "--rows", "2", "--format", "json"]);
    assert_eq!(out["method"], "table");
    let row = &out["rows"][0];
    assert_eq!(row["n"], 2);
    assert_eq!(row["a"]["num"], "47");
    assert_eq!(row["a"]["den"], "15");
    assert_eq!(row["c"]["decimal"], "3.1414634146341");
    assert_eq!(row["c"]["correct_digits"], 3);
}

#[test]
fn table_rows_are_sorted_and_deduplicated() {
    let csv = stdout_of(&["table", "--rows", "5,2,2,5", "--format", "csv"]);
    let indices: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|line| line.split_once(',').expect("csv row").0)
        .collect();
    assert_eq!(indices, ["2", "5"]);
}

#[test]
fn verify_madhava_passes() {
    let out = stdout_of(&["verify", "madhava"]);
    assert!(out.contains("PASS: madhava-approximation-window"));
    assert_eq!(
        out.lines().last().expect("summary line"),
        "madhava: 3 checks, 3 passed, 0 warnings, 0 failed"
    );
}

#[test]
fn verify_all_passes_with_the_recorded_warns() {
    let output = run(&["verify", "all"]);
    assert_eq!(output.status.code(), Some(0));
    let out = String::from_utf8(output.stdout).expect("output is UTF-8");
    let warns: Vec<&str> = out.lines().filter(|l| l.starts_with("WARN: ")).collect();
    assert_eq!(warns.len(), 25, "24 table deviations and 1 contradicted comparison");
    assert!(out.contains("WARN: series-b-vs-iterated-aitken-n40"));
    assert!(!out.contains("FAIL"));
    assert_eq!(
        out.lines().last().expect("summary line"),
        "all: 58 checks, 33 passed, 25 warnings, 0 failed"
    );
}

#[test]
fn verify_output_is_deterministic() {
    let first = run(&["verify", "table"]);
    let second = run(&["verify", "table"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "--method", "raw", "--n", "5", "--cf-order", "2"][..],
        &["compute", "--method", "aitken", "--n", "2"][..],
        &["compute", "--method", "aitken-iter", "--n", "6", "--rounds", "3"][..],
        &["compute", "--method", "raw", "--n", "0"][..],
        &["compute", "--method", "raw", "--n", "3", "--digits", "201"][..],
        &["table", "--rows", "0,3"][..],
        &["compute", "--method", "euler", "--n", "3"][..],
    ] {
        let output = run(args);
        assert_eq!(output.status.code(), Some(2), "expected usage error for {args:?}");
        assert!(!output.stderr.is_empty(), "usage error message for {args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["compute", "--help"]).status.code(), Some(0));
}

#[test]
fn spawned_values_match_the_library() {
    let averaged = json_of(&["compute", "--method", "averaged", "--n", "7", "--format", "json"]);
    assert_eq!(
        rational(&averaged["rows"][0]["value"]),
        methods::value(&MethodSpec::Averaged, 7).expect("averaging never fails")
    );
    let iterated = json_of(&["compute", "--method", "aitken-iter", "--n", "9", "--format", "json"]);
    assert_eq!(iterated["rounds"], 2);
    assert_eq!(
        rational(&iterated["rows"][0]["value"]),
        methods::value(&MethodSpec::AitkenIter { rounds: 2 }, 9)
            .expect("second differences of these sums never vanish")
    );
}
