use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use qprop::harness::{emit_report, run, Cli};
use qprop::Error;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    let result = cli.into_config().and_then(|config| {
        let report = run(&config)?;
        emit_report(&report, config.format, config.out.as_deref())?;
        eprintln!(
            "qprop: {} trials in {:.3}s, acceptance rate {}",
            report.trials,
            report.wall_clock.as_secs_f64(),
            report.acceptance_rate
        );
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Config(_)) => {
            eprintln!("qprop: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("qprop: {e}");
            ExitCode::from(3)
        }
    }
}
