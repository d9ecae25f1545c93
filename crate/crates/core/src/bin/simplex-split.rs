use clap::Parser;
use simplex_split::cli::{configure_threads, run, Cli, EXIT_ERROR};

fn main() {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_ERROR);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.body.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        std::process::exit(EXIT_ERROR);
    }
    std::process::exit(outcome.exit_code());
}
