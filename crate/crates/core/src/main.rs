use std::process::ExitCode;

fn main() -> ExitCode {
    let code = congruential_euler::cli::main_with_args(std::env::args_os());
    ExitCode::from(code)
}
