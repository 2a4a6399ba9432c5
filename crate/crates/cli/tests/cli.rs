mod common;

use common::*;
use serde_json::Value;

#[test]
fn flip_passes_the_braid_check() {
    let out = stybe(&["verify-braid", "--input", &data("flip2.json")]);
    assert_eq!(out.code, 0);
    let v = report(&out);
    assert_eq!(v["command"], "verify-braid");
    assert_eq!(v["passed"], true);
    for key in ["direct", "c1", "c2", "c3"] {
        assert_eq!(v["verdicts"][key]["status"], "pass");
    }
    assert_eq!(v["inputs"]["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn radical_brace_has_unitarity_scalar() {
    let out = stybe(&["check-r", "--input", &data("radical8.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = report(&out);
    assert_eq!(v["verdicts"]["unitarity"]["scalar"], "−λ²+1");
    assert_eq!(v["verdicts"]["crossing_unitarity"]["scalar"], "−λ²−4λ");
}

#[test]
fn two_element_involutive_solutions_stream() {
    let out = stybe(&[
        "enumerate-solutions",
        "--bound",
        "2",
        "--canonical",
        "--involutive",
        "--non-degenerate",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 3);
    assert_eq!(stream_items(&out).len(), 2);
    assert_eq!(report(&out)["verdicts"]["count"], 2);
}

#[test]
fn usage_errors_exit_two_with_text_on_stderr() {
    for argv in [vec!["no-such-command"], vec!["check-r", "--no-such-flag"], vec![]] {
        let out = stybe(&argv);
        assert_eq!(out.code, 2, "{argv:?}");
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("Usage"), "{}", out.stderr);
    }
    let help = stybe(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("enumerate-reflections"));
}

#[test]
fn structural_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());
    std::fs::write(dir.path().join("broken.json"), "{ not json").unwrap();
    std::fs::write(
        dir.path().join("ragged.json"),
        r#"{"size":2,"sigma":[[0,1],[0]],"tau":[[0,1],[0,1]]}"#,
    )
    .unwrap();
    let cases: Vec<Vec<String>> = vec![
        vec!["verify-braid".into(), "--input".into(), p(dir.path(), "missing.json")],
        vec!["verify-braid".into(), "--input".into(), p(dir.path(), "broken.json")],
        vec!["verify-braid".into(), "--input".into(), p(dir.path(), "ragged.json")],
        vec!["verify-braid".into()],
        vec!["enumerate-braces".into(), "--bound".into(), "9".into()],
        vec![
            "enumerate-solutions".into(),
            "--bound".into(),
            "3".into(),
            "--mode".into(),
            "sideways".into(),
        ],
        vec!["reconstruct-add".into(), "--input".into(), data("flip2.json")],
        vec![
            "verify-reflection".into(),
            "--input".into(),
            data("radical8.json"),
            "--k".into(),
            p(dir.path(), "k_bad2.json"),
        ],
        vec!["twist".into(), "--input".into(), p(dir.path(), "s3.json")],
        vec![
            "check-r".into(),
            "--input".into(),
            data("radical8.json"),
            "--jobs".into(),
            "0".into(),
        ],
    ];
    for argv in cases {
        let out = invoke(&argv[0], &argv[1..]);
        assert_eq!(out.code, 2, "{argv:?}: {}", out.stdout);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.starts_with("error:"), "{}", out.stderr);
    }
}

#[test]
fn failed_checks_exit_one_with_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());
    let out = stybe(&["check-r", "--input", &p(dir.path(), "s3.json")]);
    assert_eq!(out.code, 1);
    let v = report(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["verdicts"]["ybe"]["status"], "fail");
    assert_eq!(v["verdicts"]["ybe"]["witness"].as_array().unwrap().len(), 2);
    assert_eq!(v["verdicts"]["unitarity"]["status"], "not_applicable");

    let out = stybe(&["from-radical-ring", "--input", &p(dir.path(), "nonradical.json")]);
    assert_eq!(out.code, 1);
    assert_eq!(report(&out)["verdicts"]["witness"], serde_json::json!([1]));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());
    for (command, args, _) in invocations(dir.path()) {
        let a = invoke(command, &args);
        let b = invoke(command, &args);
        assert_eq!(without_timing(&a), without_timing(&b), "{command} {args:?}");
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let base = stybe(&["enumerate-solutions", "--bound", "3", "--non-degenerate"]);
    for jobs in ["1", "3"] {
        let out = stybe(&[
            "enumerate-solutions",
            "--bound",
            "3",
            "--non-degenerate",
            "--jobs",
            jobs,
        ]);
        assert_eq!(without_timing(&out), without_timing(&base));
    }
}

#[test]
fn output_flag_writes_artifacts_and_streams() {
    let dir = tempfile::tempdir().unwrap();
    let sol = p(dir.path(), "sol.json");
    let out = stybe(&["make-solution", "--input", &data("radical8.json"), "--output", &sol]);
    assert_eq!(out.code, 0);
    assert!(report(&out).get("result").is_none());
    let again = stybe(&["verify-braid", "--input", &sol]);
    assert_eq!(again.code, 0);
    let from_structure = stybe(&["verify-braid", "--input", &data("radical8.json")]);
    assert_eq!(report(&again)["verdicts"], report(&from_structure)["verdicts"]);

    let lines = p(dir.path(), "sols.jsonl");
    let out = stybe(&[
        "enumerate-solutions",
        "--bound",
        "3",
        "--involutive",
        "--non-degenerate",
        "--output",
        &lines,
    ]);
    assert_eq!(out.stdout.lines().count(), 1);
    let written = std::fs::read_to_string(&lines).unwrap();
    assert_eq!(written.lines().count(), 12);
    for l in written.lines() {
        serde_json::from_str::<Value>(l).unwrap();
    }
}

#[test]
fn dressed_output_feeds_the_reflection_checks() {
    let dir = tempfile::tempdir().unwrap();
    let d = p(dir.path(), "d.json");
    assert_eq!(
        stybe(&["dress-k", "--input", &data("flip2.json"), "--output", &d]).code,
        0
    );
    let re = stybe(&["check-re", "--input", &data("flip2.json"), "--operator", &d]);
    assert_eq!(re.code, 0);
    assert_eq!(report(&re)["verdicts"]["reversed_mu_degree"], 2);
    let ra = stybe(&[
        "check-ra",
        "--input",
        &data("flip2.json"),
        "--operator",
        &d,
        "--depth",
        "4",
    ]);
    assert_eq!(ra.code, 0);
    assert_eq!(report(&ra)["verdicts"]["k0_scalar"], "1");
}

#[test]
fn binary_honours_exit_codes_and_jobs_variable() {
    let bin = env!("CARGO_BIN_EXE_stybe");
    let run = |jobs: &str, args: &[&str]| {
        std::process::Command::new(bin)
            .args(args)
            .env("STYBE_JOBS", jobs)
            .output()
            .unwrap()
    };
    let ok = run("2", &["verify-braid", "--input", &data("flip2.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(serde_json::from_slice::<Value>(&ok.stdout).unwrap()["passed"], true);
    let zero = run("0", &["verify-braid", "--input", &data("flip2.json")]);
    assert_eq!(zero.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&zero.stderr).contains("--jobs"));
    let usage = run("1", &["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&usage.stderr).contains("Usage"));
}
