use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(indicolor_cli::run(std::env::args_os()))
}
