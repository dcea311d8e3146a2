use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use extsq_cli::{commands::render_text, run, Cli};

fn threads() -> usize {
    let available = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var("EXTSQ_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(cap) if cap > 0 => cap.min(available),
        _ => available,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads()).build().expect("thread pool");
    let start = Instant::now();
    let outcome = pool.install(|| run(&cli));
    let mut report = match outcome {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if cli.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    if cli.json {
        println!("{}", report.to_json());
    } else {
        println!("{}", render_text(&report));
    }
    ExitCode::from(report.exit_code() as u8)
}
