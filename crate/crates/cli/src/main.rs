use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod error;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Number(a) => commands::solve(a, false),
        Command::Distinct(a) => commands::solve(a, true),
        Command::Feasible(a) => commands::feasible(a),
        Command::Classify2(a) => commands::classify2(a),
        Command::Classify3(a) => commands::classify3(a),
        Command::AppendixB(a) => commands::appendix_b(a),
        Command::ExportDot(a) => commands::export_dot(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
