use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use qforms::cli::{run, Cli, Outcome};
use qforms::InputError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            let message = e.kind().as_str().unwrap_or("invalid arguments");
            let out = Outcome::input_error(&InputError::new(message));
            println!("{}", out.json);
            return ExitCode::from(out.exit_code as u8);
        }
    };
    let out = run(&cli);
    println!("{}", out.json);
    if cli.pretty() || out.exit_code == qforms::cli::EXIT_INPUT {
        eprintln!("{}", out.summary);
    }
    ExitCode::from(out.exit_code as u8)
}
