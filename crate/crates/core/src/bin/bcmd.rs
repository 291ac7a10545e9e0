use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = bcmd::cli::Cli::parse();
    match bcmd::cli::run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
