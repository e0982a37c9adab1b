//! `balgraph`: property checks, witnesses, decomposition and corpus sweeps
//! for balanceable bipartite graphs.

mod args;
mod commands;
mod dot;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Exit codes: 0 ok, 2 input, 3 resource limit, 4 out of scope, 5 theorem violation.
pub mod code {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 2;
    pub const RESOURCE: u8 = 3;
    pub const OUT_OF_SCOPE: u8 = 4;
    pub const VIOLATION: u8 = 5;
}

fn error_code(err: &anyhow::Error) -> u8 {
    use balgraph::Error;
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_resource_limit() => code::RESOURCE,
        Some(Error::OutOfTheoremScope(_)) => code::OUT_OF_SCOPE,
        Some(Error::TheoremViolation { .. }) => code::VIOLATION,
        _ => code::INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(a) => commands::check::run(&cli.global, a),
        Command::Decompose(a) => commands::decompose::run(&cli.global, a),
        Command::Verify(a) => commands::verify::run(&cli.global, a),
        Command::Witness(a) => commands::witness::run(&cli.global, a),
        Command::Generate(a) => commands::generate::run(&cli.global, a),
    };
    match result {
        Ok(c) => ExitCode::from(c),
        // the reader went away, e.g. `| head`
        Err(e) if e
            .downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::from(code::OK)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}
