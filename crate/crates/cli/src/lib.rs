//! Batch front end: JSON job files in, exact text or JSON reports out.

pub mod error;
pub mod job;
pub mod parse;
pub mod report;
pub mod run;

use std::path::PathBuf;

use clap::Parser;

pub use error::CliError;
pub use job::{parse_input, print_spec, resolve, Command, IdealSpec, Job, JobSpec, MinorsSpec, Params, RingSpec};
pub use parse::{parse_polynomial, ParseError};
pub use report::{emit_report, Format, Report, Status};
pub use run::run_command;

#[derive(Debug, Parser)]
#[command(name = "ghilb", version, about = "Generalized Hilbert-Samuel functions of homogeneous ideals")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// JSON job file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub t_max: Option<usize>,
    #[arg(long)]
    pub s_max: Option<usize>,
    /// Seed for general elements; repeat for several.
    #[arg(long = "seed")]
    pub seeds: Vec<u64>,
    /// Generators of q, comma separated.
    #[arg(long)]
    pub q: Option<String>,
    /// Number of general elements for `section`.
    #[arg(long)]
    pub sections: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Compare the rendered report byte for byte with this file.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[arg(long)]
    pub timings: bool,
}

/// Outcome of one invocation: rendered report, diagnostics, exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn apply_overrides(spec: &mut JobSpec, args: &Args) {
    let p = &mut spec.params;
    if args.t_max.is_some() {
        p.t_max = args.t_max;
    }
    if args.s_max.is_some() {
        p.s_max = args.s_max;
    }
    if !args.seeds.is_empty() {
        p.seeds = args.seeds.clone();
    }
    if let Some(q) = &args.q {
        p.q = Some(IdealSpec::Gens { gens: q.split(',').map(|g| g.trim().to_string()).collect() });
    }
    if args.sections.is_some() {
        p.sections = args.sections;
    }
    spec.command = Some(args.command);
}

fn execute_inner(args: &Args) -> Result<(String, i32), CliError> {
    let text = std::fs::read_to_string(&args.input)?;
    let mut spec: JobSpec = serde_json::from_str(&text)?;
    apply_overrides(&mut spec, args);
    let job = resolve(spec)?;
    let report = run_command(&job, args.command, args.timings)?;
    Ok((emit_report(&report, args.format), report.exit_code()))
}

pub fn execute(args: &Args) -> Outcome {
    match execute_inner(args) {
        Ok((stdout, mut code)) => {
            let mut stderr = String::new();
            if let Some(path) = &args.golden {
                match std::fs::read_to_string(path) {
                    Ok(expected) if expected == stdout => {}
                    Ok(_) => {
                        stderr = format!("output differs from golden file {}\n", path.display());
                        code = 1;
                    }
                    Err(e) => {
                        stderr = format!("cannot read golden file {}: {e}\n", path.display());
                        code = 3;
                    }
                }
            }
            Outcome { stdout, stderr, code }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}
