use std::process::ExitCode;

use clap::Parser;

use circle_bundles_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(d) = out.diagnostic {
                eprintln!("cbundle: {d}");
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("cbundle: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
