//! Command dispatch and reports for the `slicepd` binary.

pub mod args;
pub mod commands;
pub mod report;

use anyhow::Result;
use slicepd::Execution;

pub use args::{Cli, Command, Format};
pub use report::Report;

/// Runs one parsed command line. Errors are usage problems (bad input,
/// unsupported field); failed checks are reported, not raised.
pub fn run(cli: &Cli) -> Result<Report> {
    let exec = configure_jobs(cli.jobs)?;
    match &cli.command {
        Command::Construct(ring) => Ok(commands::construct(ring)),
        Command::Certify(args) => commands::certify(args, exec),
        Command::Gb(ring) => Ok(commands::gb(ring)),
        Command::Member(args) => commands::member(args),
        Command::Colon(args) => commands::colon_cmd(args),
        Command::Resolve(args) => commands::resolve(args),
        Command::Betti(args) => commands::betti(args),
        Command::Support(args) => Ok(commands::support(args)),
        Command::ReportAll(args) => commands::report_all(args, exec),
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}

fn configure_jobs(jobs: Option<usize>) -> Result<Execution> {
    match jobs {
        Some(0) => anyhow::bail!("--jobs must be at least 1"),
        Some(1) => Ok(Execution::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            // the global pool can only be built once per process
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
            Ok(Execution::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Execution::Sequential),
        None => Ok(Execution::default()),
    }
}
