use std::io::{IsTerminal, Write};
use std::process::ExitCode;

fn color_enabled() -> Result<bool, String> {
    match std::env::var("RNMX_COLOR").as_deref() {
        Err(_) | Ok("auto") => Ok(std::io::stdout().is_terminal()),
        Ok("always") => Ok(true),
        Ok("never") => Ok(false),
        Ok(other) => Err(format!(
            "error: RNMX_COLOR must be auto, always or never, not `{other}`\n"
        )),
    }
}

fn main() -> ExitCode {
    let outcome = match color_enabled() {
        Ok(color) => rnmx_cli::run_with_color(std::env::args_os(), color),
        Err(msg) => rnmx_cli::Outcome {
            code: rnmx_cli::EXIT_USAGE,
            stdout: String::new(),
            stderr: msg,
        },
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
