use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = osgrp_core::cli::run(std::env::args_os());
    let written = if code == osgrp_core::cli::EXIT_USAGE {
        std::io::stderr().write_all(output.as_bytes())
    } else {
        std::io::stdout().write_all(output.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(osgrp_core::cli::EXIT_FAIL as u8);
    }
    ExitCode::from(code as u8)
}
