//! Library side of the `stybe` binary. [`run`] takes the full argument
//! vector and returns the exit code together with what would be printed, so
//! tests can drive the tool without spawning processes.

mod args;
mod commands;
mod load;

use std::collections::BTreeMap;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::Cli;
pub use args::Command;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] stybe_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON in {path}: {detail}")]
    Json { path: String, detail: String },
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Digest of one input file, keyed in the report by the flag that named it.
#[derive(Serialize, Debug, Clone)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub inputs: BTreeMap<String, InputDigest>,
    pub passed: bool,
    pub verdicts: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub timing_ms: u64,
}

/// What a command hands back before the report is assembled.
pub(crate) struct Produced {
    pub passed: bool,
    pub verdicts: Value,
    pub result: Option<Value>,
    /// JSON-lines items for enumerations.
    pub stream: Option<Vec<Value>>,
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_PASS,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let started = Instant::now();
    let mut ctx = load::Context::new(cli.opts.clone());
    let produced = match cli.opts.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| commands::dispatch(cli.command, &mut ctx)),
            Err(e) => Err(CliError::Usage(format!("cannot start {j} workers: {e}"))),
        },
        None => commands::dispatch(cli.command, &mut ctx),
    };
    let produced = match produced {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: EXIT_ERROR,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    finish(cli.command, ctx, produced, started)
}

fn finish(command: Command, ctx: load::Context, p: Produced, started: Instant) -> Outcome {
    let mut stdout = String::new();
    let mut to_file = String::new();
    let writes_file = ctx.opts.output.is_some();
    let mut result = p.result;
    if let Some(items) = &p.stream {
        let sink = if writes_file { &mut to_file } else { &mut stdout };
        for item in items {
            sink.push_str(&item.to_string());
            sink.push('\n');
        }
    } else if writes_file {
        if let Some(r) = result.take() {
            to_file = pretty(&r);
        }
    }
    if let Some(path) = &ctx.opts.output {
        if let Err(e) = std::fs::write(path, to_file) {
            return Outcome {
                code: EXIT_ERROR,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    let report = RunReport {
        command: command.name().to_string(),
        version: VERSION.to_string(),
        inputs: ctx.digests,
        passed: p.passed,
        verdicts: p.verdicts,
        result,
        timing_ms: started.elapsed().as_millis() as u64,
    };
    let line = serde_json::to_value(&report).expect("report serializes");
    if p.stream.is_some() {
        stdout.push_str(&line.to_string());
        stdout.push('\n');
    } else {
        stdout.push_str(&pretty(&line));
    }
    Outcome {
        code: if p.passed { EXIT_PASS } else { EXIT_FAIL },
        stdout,
        stderr: String::new(),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}
