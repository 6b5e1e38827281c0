use std::io;
use std::process::ExitCode;

use clap::Parser;
use splitting_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match splitting_cli::run(&cli, &mut io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
