use std::process::ExitCode;

use clap::Parser;
use superstein::Error;
use superstein_cli::{render, run, Cli};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Ok(n) = std::env::var("SUPERSTEIN_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is configured once");
            }
            _ => {
                eprintln!("error: SUPERSTEIN_THREADS must be a positive integer, got `{n}`");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli, &echo) {
        Ok(report) => {
            print!("{}", render(&cli, &report));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            let kind = match e {
                Error::Parse { .. } => "parse error",
                Error::Resource { .. } => "size guard",
                _ => "error",
            };
            eprintln!("{kind}: {e}");
            ExitCode::from(2)
        }
    }
}
