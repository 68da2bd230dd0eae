use std::io::Write;
use std::process::ExitCode;

use spindual::output::run;

fn main() -> ExitCode {
    let outcome = run(std::env::args_os());
    eprint!("{}", outcome.diagnostics);
    match &outcome.out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.output.as_bytes());
        }
    }
    ExitCode::from(outcome.code as u8)
}
