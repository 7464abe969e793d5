use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use ghilb_cli::{execute, Args};
use ghilb_core::groebner::set_step_budget;

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    if let Ok(v) = std::env::var("GHILB_BUDGET") {
        match v.trim().parse::<u64>() {
            Ok(cap) => set_step_budget(cap),
            Err(_) => {
                eprintln!("error: GHILB_BUDGET must be a non-negative integer, got \"{v}\"");
                return ExitCode::from(3);
            }
        }
    }
    let out = execute(&args);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
