//! Command-line front end for the `ceuler` binary.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! or is inconclusive, 2 for usage and parameter errors.

mod args;
mod commands;
mod session;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

pub use args::{Cli, Command};
pub use session::{RunConfig, Session};

use crate::error::Error;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// What a command printed and how it ended.
pub struct Outcome {
    pub stdout: String,
    pub passed: bool,
}

impl Outcome {
    fn new(stdout: String, passed: bool) -> Self {
        Self { stdout, passed }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NoConvergence { .. } => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Parse `args` (program name first), run the command, print to stdout and
/// stderr, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let config = RunConfig {
        cache_dir: cli.cache_dir.clone().unwrap_or_else(|| PathBuf::from(".ceuler-cache")),
        output_format: cli.format,
        parallelism: cli
            .jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from)),
        default_n_max: 20,
    };
    match run(&cli.command, &config) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

/// Run a parsed command under `config` without touching the process
/// streams, apart from progress on stderr.
pub fn run(command: &Command, config: &RunConfig) -> crate::Result<Outcome> {
    if config.parallelism == 0 {
        return Err(Error::InvalidParams("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    pool.install(|| {
        let session = Session::open(config.clone());
        let out = commands::dispatch(command, &session);
        session.persist();
        out
    })
}
