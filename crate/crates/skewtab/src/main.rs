use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match skewtab::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { skewtab::EXIT_USAGE } else { skewtab::EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = skewtab::run(&cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
