mod args;
mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use commands::{dispatch, emit};

const INPUT_ERROR: u8 = 2;

/// Size the worker pool from `SYMPOW_WORKERS`; unset means one per core.
fn configure_workers() -> Result<(), String> {
    let Ok(raw) = std::env::var("SYMPOW_WORKERS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or(format!("SYMPOW_WORKERS: expected a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(args::normalize_dashes(std::env::args_os())) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    if let Err(e) = configure_workers() {
        eprintln!("error: {e}");
        return ExitCode::from(INPUT_ERROR);
    }
    let response = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let content = match cli.format() {
        Format::Text => response.text,
        Format::Json => serde_json::to_string_pretty(&response.json).expect("serializable") + "\n",
    };
    if let Err(e) = emit(cli.output.as_deref(), &content) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(INPUT_ERROR);
    }
    ExitCode::from(response.status.exit_code())
}
