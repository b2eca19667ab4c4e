use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = repcoh::cli::main_with_args(std::env::args_os());
    print!("{}", out.report);
    let _ = std::io::stdout().flush();
    if let Some(e) = &out.error {
        eprintln!("{e}");
    }
    ExitCode::from(out.status as u8)
}
