use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use glinfo_cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(report.table.render(cli.format).as_bytes()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("glinfo: error: {e}");
                    return ExitCode::from(1);
                }
            }
            for f in &report.failures {
                eprintln!("glinfo: {f}");
            }
            if report.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("glinfo: error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
