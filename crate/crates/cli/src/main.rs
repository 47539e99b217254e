mod args;
mod commands;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use kostant::{Execution, Settings};

use args::{Cli, Command};
use render::Verdict;

/// Why a run did not produce output.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Capacity(String),
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::Capacity(_) => 3,
        }
    }
}

impl From<kostant::Error> for Failure {
    fn from(e: kostant::Error) -> Self {
        match e {
            kostant::Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Capacity(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

fn run(cli: &Cli) -> Result<Option<Verdict>, Failure> {
    let settings = Settings {
        brute_cap: cli.brute_cap,
        execution: if cli.sequential { Execution::Sequential } else { Execution::Parallel },
    };
    let mut output = match &cli.command {
        Command::AltSet(a) => commands::alt_set(a, &settings)?,
        Command::Qmult(a) => commands::qmult(a, &settings)?,
        Command::Partition(a) => commands::partition(a)?,
        Command::Identity(a) => commands::identity(a)?,
        Command::Verify(a) => commands::verify(a, &settings)?,
    };
    output.query = serde_json::to_value(&cli.command).expect("arguments serialize to JSON");

    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(Failure::Io)?)),
        None => Box::new(io::stdout().lock()),
    };
    render::write(&output, cli.format, &mut sink).map_err(Failure::Io)?;
    sink.flush().map_err(Failure::Io)?;
    Ok(output.verdict)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("kostant: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(Some(Verdict::Fail)) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("kostant: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
