mod args;
mod commands;
mod config;
mod error;
mod init;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Context;
use config::KeyValues;
use error::CliError;
use output::{resolve_out, OutputDir};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let kv = KeyValues::load(cli.config.as_deref())?;
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let name = match &cli.command {
        Command::Simulate(_) => "simulate",
        Command::Linear(_) => "linear",
        Command::Eigen(_) => "eigen",
        Command::Invariants(_) => "invariants",
        Command::Oracle(_) => "oracle",
    };
    let out = OutputDir::create(resolve_out(cli.out.as_deref(), name))?;
    let mut ctx = Context {
        kv,
        out,
        echo: serde_json::Map::new(),
    };
    if let Some(path) = &cli.config {
        ctx.echo("config_file", path);
    }
    let outcome = match cli.command {
        Command::Simulate(a) => commands::simulate::run(a, &mut ctx),
        Command::Linear(a) => commands::linear::run(a, &mut ctx),
        Command::Eigen(a) => commands::eigen::run(a, &mut ctx),
        Command::Invariants(a) => commands::invariants::run(a, &mut ctx),
        Command::Oracle(a) => commands::oracle::run(a, &mut ctx),
    };
    ctx.out
        .finish(name, serde_json::Value::Object(ctx.echo.clone()), &outcome)?;
    if outcome.is_ok() {
        log::info!("wrote {}", ctx.out.root().display());
    }
    outcome
}
