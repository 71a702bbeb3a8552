//! Command dispatch.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::chain_cmd::{chain_jobs, spectrum_jobs};
use crate::config::{Cli, Command, Setup};
use crate::error::Result;
use crate::report::Report;
use crate::runner;
use crate::suites;

/// Builds the report for a parsed command line.
pub fn execute(cli: &Cli) -> Result<Report> {
    let (setup, jobs) = match &cli.command {
        Command::Verify(args) => {
            let setup = Setup::for_verify(args)?;
            let jobs = suites::jobs(&setup, args.suite);
            (setup, jobs)
        }
        Command::Chain(args) => {
            let setup = Setup::for_chain("chain", args)?;
            let jobs = chain_jobs(&setup)?;
            (setup, jobs)
        }
        Command::Spectrum(args) => {
            let setup = Setup::for_chain("spectrum", args)?;
            let jobs = spectrum_jobs(&setup)?;
            (setup, jobs)
        }
    };
    Ok(Report::new(setup.config.clone(), runner::run(jobs)))
}

fn output_path(cli: &Cli) -> Option<&std::path::Path> {
    match &cli.command {
        Command::Verify(a) => a.common.output.as_deref(),
        Command::Chain(a) | Command::Spectrum(a) => a.common.output.as_deref(),
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<()> {
    let mut text = report.to_json();
    text.push('\n');
    match output_path(cli) {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = execute(&cli).and_then(|report| {
        emit(&cli, &report)?;
        Ok(report.exit_code())
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

