#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::Value;
use stybe_cli::{run, Outcome};

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn data(name: &str) -> String {
    root().join("data").join(name).display().to_string()
}

pub fn stybe(args: &[&str]) -> Outcome {
    run(std::iter::once("stybe").chain(args.iter().copied()))
}

/// The report: the whole output, or the last line of a stream.
pub fn report(out: &Outcome) -> Value {
    let text = out.stdout.trim_end();
    match serde_json::from_str(text) {
        Ok(v) => v,
        Err(_) => serde_json::from_str(text.lines().last().expect("empty output")).expect("report line"),
    }
}

pub fn stream_items(out: &Outcome) -> Vec<Value> {
    let lines: Vec<&str> = out.stdout.lines().collect();
    lines[..lines.len() - 1]
        .iter()
        .map(|l| serde_json::from_str(l).expect("stream item"))
        .collect()
}

/// Output with every `timing_ms` field removed.
pub fn without_timing(out: &Outcome) -> String {
    let strip = |mut v: Value| {
        if let Some(o) = v.as_object_mut() {
            o.remove("timing_ms");
        }
        v.to_string()
    };
    let text = out.stdout.trim_end();
    if let Ok(v) = serde_json::from_str::<Value>(text) {
        return strip(v);
    }
    text.lines()
        .map(|l| strip(serde_json::from_str(l).expect("json line")))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn schema(name: &str) -> Value {
    let path = root().join("schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(&path).expect("schema file")).expect("schema json")
}

/// Artifacts written once into `dir` for the invocations below.
pub fn write_fixtures(dir: &std::path::Path) {
    let w = |name: &str, text: &str| std::fs::write(dir.join(name), text).unwrap();
    w("k_id4.json", r#"{"k":[0,1,2,3]}"#);
    w("k_bad2.json", r#"{"k":[1,1]}"#);
    w("mul4.json", "[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]");
    w(
        "nonradical.json",
        r#"{"size":2,"add":[[0,1],[1,0]],"times":[[0,0],[0,1]]}"#,
    );
    w(
        "params.json",
        r#"{"k0":{"dim":2,"slots":[2],"entries":[[0,0,{"1":"1/1"}],[1,1,{"1":"1/1"}]]},"theta":{"1":"1/2"}}"#,
    );
    let s3 = stybe_core::algebra::NearBrace::trivial(&stybe_core::algebra::GroupTable::symmetric3());
    w("s3.json", &serde_json::to_string(&s3).unwrap());
    let dressed = stybe(&[
        "dress-k",
        "--input",
        &data("radical8.json"),
        "--output",
        &p(dir, "dressed.json"),
    ]);
    assert_eq!(dressed.code, 0, "{}", dressed.stderr);
    let sol = stybe(&[
        "make-solution",
        "--input",
        &data("radical8.json"),
        "--output",
        &p(dir, "sol.json"),
    ]);
    assert_eq!(sol.code, 0, "{}", sol.stderr);
}

pub fn p(dir: &std::path::Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

/// One or more invocations of every subcommand, with the expected exit code.
pub fn invocations(dir: &std::path::Path) -> Vec<(&'static str, Vec<String>, i32)> {
    let r8 = data("radical8.json");
    let f2 = data("flip2.json");
    let ring = data("radical8_ring.json");
    let raw: Vec<(&'static str, Vec<String>, i32)> = vec![
        ("verify-structure", vec!["--input".into(), r8.clone()], 0),
        (
            "verify-structure",
            vec!["--input".into(), r8.clone(), "--level".into(), "near_brace".into()],
            0,
        ),
        ("from-radical-ring", vec!["--input".into(), ring.clone()], 0),
        (
            "from-radical-ring",
            vec!["--input".into(), p(dir, "nonradical.json")],
            1,
        ),
        (
            "enumerate-braces",
            vec!["--bound".into(), "4".into(), "--canonical".into()],
            0,
        ),
        (
            "enumerate-braces",
            vec!["--bound".into(), "3".into(), "--level".into(), "near_brace".into()],
            0,
        ),
        ("make-solution", vec!["--input".into(), r8.clone()], 0),
        ("verify-braid", vec!["--input".into(), f2.clone()], 0),
        (
            "verify-braid",
            vec!["--input".into(), r8.clone(), "--rule".into(), "near".into()],
            0,
        ),
        ("diagnose", vec!["--input".into(), r8.clone()], 0),
        (
            "reconstruct-add",
            vec![
                "--input".into(),
                p(dir, "sol.json"),
                "--mul".into(),
                p(dir, "mul4.json"),
            ],
            0,
        ),
        (
            "enumerate-solutions",
            vec![
                "--bound".into(),
                "2".into(),
                "--canonical".into(),
                "--involutive".into(),
                "--non-degenerate".into(),
            ],
            0,
        ),
        (
            "enumerate-solutions",
            vec![
                "--bound".into(),
                "4".into(),
                "--mode".into(),
                "brace_generated".into(),
                "--canonical".into(),
            ],
            0,
        ),
        (
            "verify-reflection",
            vec![
                "--input".into(),
                r8.clone(),
                "--k".into(),
                p(dir, "k_id4.json"),
                "--mode".into(),
                "cc1".into(),
            ],
            0,
        ),
        (
            "verify-reflection",
            vec!["--input".into(), f2.clone(), "--k".into(), p(dir, "k_bad2.json")],
            0,
        ),
        ("enumerate-reflections", vec!["--input".into(), r8.clone()], 0),
        (
            "enumerate-reflections",
            vec!["--input".into(), r8.clone(), "--mode".into(), "central".into()],
            0,
        ),
        ("linearize", vec!["--input".into(), r8.clone()], 0),
        ("check-r", vec!["--input".into(), r8.clone()], 0),
        ("make-solution", vec!["--input".into(), p(dir, "s3.json")], 0),
        ("check-r", vec!["--input".into(), p(dir, "s3.json")], 1),
        ("twist", vec!["--input".into(), r8.clone()], 0),
        (
            "check-rtt",
            vec!["--input".into(), r8.clone(), "--max-order".into(), "2".into()],
            0,
        ),
        (
            "check-rtt",
            vec![
                "--input".into(),
                f2.clone(),
                "--max-order".into(),
                "1".into(),
                "--coproduct".into(),
            ],
            0,
        ),
        (
            "dress-k",
            vec!["--input".into(), f2.clone(), "--params".into(), p(dir, "params.json")],
            0,
        ),
        (
            "check-re",
            vec![
                "--input".into(),
                r8.clone(),
                "--operator".into(),
                p(dir, "dressed.json"),
            ],
            0,
        ),
        (
            "check-re",
            vec!["--input".into(), r8.clone(), "--k".into(), p(dir, "k_id4.json")],
            0,
        ),
        (
            "check-re",
            vec![
                "--input".into(),
                f2.clone(),
                "--coproduct".into(),
                "--theta2".into(),
                "1/3".into(),
            ],
            0,
        ),
        (
            "check-ra",
            vec!["--input".into(), r8.clone(), "--depth".into(), "3".into()],
            0,
        ),
        (
            "check-ra",
            vec!["--input".into(), r8, "--operator".into(), p(dir, "dressed.json")],
            0,
        ),
    ];
    raw
}

pub fn invoke(command: &str, args: &[String]) -> Outcome {
    let mut argv: Vec<&str> = vec![command];
    argv.extend(args.iter().map(String::as_str));
    stybe(&argv)
}
