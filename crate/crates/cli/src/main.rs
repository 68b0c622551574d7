use std::process::ExitCode;

use clap::Parser;

use tropcount_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match tropcount_cli::run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tropcount: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
