use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use toral_cli::{parse_job, run, CliError};

fn main() -> ExitCode {
    let job = match parse_job(std::env::args_os()) {
        Ok(job) => job,
        Err(CliError::Args(e)) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
        Err(e) => {
            eprintln!("toral: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let start = Instant::now();
    let report = run(&job);
    let elapsed = start.elapsed();
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(report.render().as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    if job.options.timing {
        eprintln!("elapsed: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    }
    ExitCode::from(report.exit_code() as u8)
}
