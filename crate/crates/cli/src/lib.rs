//! Command-line surface and HTTP game service over `splitting-core`.

pub mod args;
pub mod commands;
pub mod input;
pub mod report;
pub mod server;

use std::io::Write;

use anyhow::Result;

use args::{Cli, Command};

/// Runs a parsed command line, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    if let Some(n) = cli.threads {
        // only the first call in a process can size the global pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    if let Command::Serve {
        port,
        host,
        event_log,
    } = &cli.command
    {
        let app = match event_log {
            Some(path) => server::AppState::with_event_log(path)?,
            None => server::AppState::new(),
        };
        let runtime = tokio::runtime::Runtime::new()?;
        return runtime.block_on(server::serve((*host, *port).into(), app));
    }
    commands::execute(&cli.command, cli.long)?.write(cli.format, out)
}
