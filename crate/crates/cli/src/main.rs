use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let start = Instant::now();
    match eaqec_cli::run(std::env::args_os()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout().as_bytes());
            eprint!("{}", out.summary);
            eprintln!("wall time {:.3} s", start.elapsed().as_secs_f64());
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("eaqec: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
