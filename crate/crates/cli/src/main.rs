use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use chebdyn_cli::{run, Cli, Format};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli, &mut io::stdin().lock()) {
        Ok(env) => {
            let color = cli.format == Format::Pretty && std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal();
            let mut out = io::stdout().lock();
            if out.write_all(env.render(cli.format, color).as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("chebdyn: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
