use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use typegraph_cli::{execute, merge_config, Cli, CliError};

fn threads(flag: Option<usize>) -> Option<usize> {
    let env = std::env::var("TYPEGRAPH_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    match (flag, env) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
    .filter(|&k| k > 0)
}

fn run() -> Result<(), CliError> {
    let argv = merge_config(std::env::args().collect())?;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => return Err(CliError::Usage(e.render().to_string())),
        Err(e) => {
            print!("{e}");
            return Ok(());
        }
    };
    if let Some(k) = threads(cli.threads) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Domain(e.to_string()))?;
    }
    let text = execute(&cli)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string();
            let msg = msg.trim_end();
            if msg.starts_with("error:") {
                eprintln!("{msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
