use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use thresholdlab::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(out) = failure.output {
                print!("{out}");
            }
            let _ = std::io::stdout().flush();
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.kind.exit_code())
        }
    }
}
