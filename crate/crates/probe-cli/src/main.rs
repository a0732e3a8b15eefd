use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use probe_cli::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            // `apply` and `atom` write their own binary artifact to --out;
            // their summaries go to stdout.
            let writes_artifact = matches!(
                cli.command,
                probe_cli::cli::Command::Apply { .. } | probe_cli::cli::Command::Atom { .. }
            );
            match (&cli.out, writes_artifact) {
                (Some(path), false) => {
                    if let Err(e) = std::fs::write(path, &output) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                _ => {
                    let mut stdout = std::io::stdout();
                    let _ = stdout.write_all(output.as_bytes());
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
