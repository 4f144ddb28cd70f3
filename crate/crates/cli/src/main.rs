use std::process::ExitCode;

use anyonwalk_cli::{dispatch, emit, Cli, CliError, RunConfig};
use clap::Parser;

fn run() -> Result<(), CliError> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return Ok(());
        }
        Err(e) => return Err(CliError::Usage(e.render().to_string())),
    };
    let config = RunConfig::from_cli(cli)?;
    let env = dispatch(&config)?;
    emit(&config, &env)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.to_string().trim_start_matches("error: ").trim_end());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
