use std::process::ExitCode;

use abchrome_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("abchrome: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
