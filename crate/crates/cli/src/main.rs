use std::process::ExitCode;

use clap::Parser;
use ktwist_cli::{run, Cli};

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("KTWIST_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| format!("KTWIST_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("KTWIST_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let echo = std::iter::once("ktwist".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    match run(&cli, echo) {
        Ok(outcome) => {
            let text = if cli.csv {
                match outcome.report.to_csv() {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                }
            } else {
                outcome.report.to_json(cli.compact) + "\n"
            };
            print!("{text}");
            if outcome.exit_code != 0 {
                eprintln!("disagreement detected");
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
