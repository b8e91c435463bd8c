//! The `netslope` command-line tool.

mod args;
mod commands;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;
use netslope_core::parallel::with_env_threads;

pub use args::{Cli, Command};
use commands::{execute, Failure};
use report::{InputRecord, RunReport, Timing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` (program name first), runs the subcommand and writes its
/// output; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    let start = Instant::now();
    let result = with_env_threads(|| execute(&cli.command, cli.debug));
    let elapsed = start.elapsed();
    let outcome = match result {
        Ok(o) => o,
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            return EXIT_DOMAIN;
        }
    };
    let timing = cli.timing.then_some(Timing { elapsed_ms: elapsed.as_millis() });
    let written = if cli.json {
        let report = RunReport {
            tool: "netslope",
            version: env!("CARGO_PKG_VERSION"),
            subcommand: outcome.subcommand,
            input: outcome.input.as_ref().map(InputRecord::new),
            params: outcome.params,
            results: outcome.results,
            timing,
        };
        let body = serde_json::to_string_pretty(&report).expect("report serializes");
        writeln!(out, "{body}")
    } else {
        let r = out.write_all(outcome.text.as_bytes());
        if let Some(t) = timing {
            let _ = writeln!(err, "elapsed: {} ms", t.elapsed_ms);
        }
        r
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
