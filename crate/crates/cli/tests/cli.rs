use std::path::PathBuf;
use std::process::{Command, Output};

use qknot_core::InvariantReport;

fn qknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qknot"))
        .args(args)
        .env_remove("QKNOT_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn assert_validation_error(out: &Output, kind: &str) {
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(out));
    let err = stderr(out);
    assert_eq!(
        err.lines().count(),
        1,
        "diagnostic should be one line: {err:?}"
    );
    assert!(err.starts_with(&format!("error: {kind}:")), "{err}");
}

#[test]
fn trefoil_jones_golden() {
    let out = qknot(&[
        "jones",
        "--braid",
        "1 1 1",
        "--strands",
        "2",
        "--color",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "q^-2 + q^-6 - q^-8\n");
}

#[test]
fn empty_braid_unified_is_one() {
    let out = qknot(&["unified", "--braid", "", "--strands", "1", "--color", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn ado_and_unified_trefoil() {
    let ado = qknot(&["ado", "--braid", "1 1 1", "--strands", "2", "--color", "2"]);
    assert_eq!(stdout(&ado), "s^2 - 1 + s^-2\n");
    let unified = qknot(&[
        "unified",
        "--braid",
        "1,1,1",
        "--strands",
        "2",
        "--colour",
        "2",
    ]);
    assert_eq!(stdout(&unified), "-x^-2*d + x^-1*d + 1\n");
}

#[test]
fn negative_letters_are_not_flags() {
    let out = qknot(&[
        "jones",
        "--braid",
        "-1 -1 -1",
        "--strands",
        "2",
        "--color",
        "2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "-q^8 + q^6 + q^2\n");
}

#[test]
fn verify_markov_summary() {
    let out = qknot(&[
        "verify",
        "--suite",
        "markov",
        "--max-len",
        "6",
        "--colors",
        "2,3",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let (status, frac) = last.split_once(' ').unwrap();
    assert_eq!(status, "PASS");
    let (k, total) = frac.split_once('/').unwrap();
    assert_eq!(k, total);
}

#[test]
fn verify_all_suites_pass() {
    let out = qknot(&["verify", "--count", "40"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn output_is_independent_of_parallelism() {
    for cmd in ["jones", "ado", "unified"] {
        for format in ["text", "json"] {
            let args = [
                cmd,
                "--braid",
                "1 -2 1 -2",
                "--strands",
                "3",
                "--color",
                "3",
                "--format",
                format,
            ];
            let base = qknot(&args).stdout;
            for jobs in ["1", "2", "7"] {
                let mut with_jobs = args.to_vec();
                with_jobs.extend(["--jobs", jobs]);
                assert_eq!(
                    qknot(&with_jobs).stdout,
                    base,
                    "{cmd} {format} --jobs {jobs}"
                );
            }
            let env = Command::new(env!("CARGO_BIN_EXE_qknot"))
                .args(args)
                .env("QKNOT_JOBS", "3")
                .output()
                .unwrap();
            assert_eq!(env.stdout, base, "{cmd} {format} QKNOT_JOBS");
        }
    }
}

#[test]
fn json_round_trips() {
    for cmd in ["jones", "ado", "unified"] {
        let out = qknot(&[
            cmd,
            "--braid",
            "1 1 1",
            "--strands",
            "2",
            "--color",
            "3",
            "--format",
            "json",
        ]);
        assert!(out.status.success());
        let text = stdout(&out);
        let report = InvariantReport::from_json(text.trim_end()).unwrap();
        assert_eq!(report.to_json(), text.trim_end());
        assert_eq!(report.colour, 3);
        assert!(!report.unvalidated);
    }
}

#[test]
fn not_a_knot_needs_force() {
    let args = ["jones", "--braid", "1 1", "--strands", "2", "--color", "2"];
    assert_validation_error(&qknot(&args), "not-a-knot");
    let mut forced = args.to_vec();
    forced.extend(["--force", "--format", "json"]);
    let out = qknot(&forced);
    assert!(out.status.success());
    let report = InvariantReport::from_json(stdout(&out).trim_end()).unwrap();
    assert!(report.unvalidated);
}

#[test]
fn validation_errors_exit_two() {
    assert_validation_error(
        &qknot(&["jones", "--braid", "1 x", "--strands", "2", "--color", "2"]),
        "parse",
    );
    assert_validation_error(
        &qknot(&["jones", "--braid", "1 3", "--strands", "2", "--color", "2"]),
        "generator-out-of-range",
    );
    assert_validation_error(
        &qknot(&["jones", "--strands", "2", "--color", "2"]),
        "usage",
    );
    assert_validation_error(
        &qknot(&["jones", "--braid", "1", "--strands", "2", "--color", "0"]),
        "usage",
    );
    assert_validation_error(
        &qknot(&["ado", "--braid", "1", "--strands", "2", "--color", "1"]),
        "invalid-argument",
    );
    assert_validation_error(&qknot(&["verify", "--suite", "nope"]), "invalid-argument");
}

fn table_file() -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("qknot-cli-table.txt");
    std::fs::write(
        &path,
        "# small knots\nunknot 1\n3_1 2 1 1 1\n4_1 3 1 -2 1 -2\n",
    )
    .unwrap();
    path
}

#[test]
fn knot_table_input() {
    let table = table_file();
    let table = table.to_str().unwrap();
    let out = qknot(&["jones", "--knot", "3_1", "--table", table, "--color", "2"]);
    assert_eq!(stdout(&out), "q^-2 + q^-6 - q^-8\n");
    let out = qknot(&[
        "jones", "--knot", "unknot", "--table", table, "--color", "4",
    ]);
    assert_eq!(stdout(&out), "1\n");
    assert_validation_error(
        &qknot(&["jones", "--knot", "5_2", "--table", table, "--color", "2"]),
        "unknown-knot",
    );
    assert_validation_error(
        &qknot(&[
            "jones",
            "--knot",
            "3_1",
            "--table",
            table,
            "--braid",
            "1",
            "--strands",
            "2",
            "--color",
            "2",
        ]),
        "usage",
    );
}

#[test]
fn oracle_subcommand() {
    let out = qknot(&["oracle", "jones", "--braid", "1 1 1", "--strands", "2"]);
    assert_eq!(stdout(&out), "-t^4 + t^3 + t\n");
    let out = qknot(&[
        "oracle",
        "alexander",
        "--braid",
        "1 -2 1 -2",
        "--strands",
        "3",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["oracle"], "alexander");
    assert_eq!(doc["strands"], 3);
}

#[test]
fn matrix_dump_is_json() {
    let out = qknot(&["matrix", "--braid", "1", "--strands", "2", "--weight", "1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rows"][1][1], "-s^-2 + 1");
}
