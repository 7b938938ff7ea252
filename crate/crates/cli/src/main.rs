mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return fail(Failure::usage("--threads must be positive"));
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            return fail(Failure::usage(format!("cannot start thread pool: {e}")));
        }
    }
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let outcome = commands::run(cli.command, cli.format, &mut out);
    let flushed = out.flush();
    match (outcome, flushed) {
        (Err(f), _) => fail(f),
        (Ok(_), Err(e)) => fail(e.into()),
        (Ok(code), Ok(())) => ExitCode::from(code),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("tspec: {}", f.message);
    ExitCode::from(f.code)
}
