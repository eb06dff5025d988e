use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = jordan_kit_cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
