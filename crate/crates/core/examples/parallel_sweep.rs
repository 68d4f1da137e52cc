//! A full sweep over every registered check, run on several threads.
//! The output is identical to a single-threaded run.
//!
//! Usage: `cargo run --release --example parallel_sweep -- [JOBS]`.

use std::time::Instant;

use catb2::sweep::{exit_code, render, run_verify, Format, Outcome, SweepConfig};

fn main() -> catb2::Result<()> {
    let jobs = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let cfg = SweepConfig {
        jobs,
        ..SweepConfig::default()
    };
    let start = Instant::now();
    let outcomes = run_verify(&cfg)?;
    let elapsed = start.elapsed();

    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for o in &outcomes {
        match o {
            Outcome::Ran(r) if r.passed => pass += 1,
            Outcome::Ran(_) => fail += 1,
            Outcome::Skipped(_) => skip += 1,
        }
    }
    println!(
        "{} cells on {jobs} threads in {elapsed:.2?}: {pass} pass, {fail} fail, {skip} skip",
        outcomes.len()
    );

    let sequential = run_verify(&SweepConfig {
        jobs: 1,
        ..cfg.clone()
    })?;
    assert_eq!(
        render(&outcomes, Format::Json),
        render(&sequential, Format::Json)
    );
    println!("output matches the sequential run");

    for line in render(&outcomes, Format::Text)
        .lines()
        .filter(|l| l.contains("saito"))
    {
        println!("{line}");
    }
    std::process::exit(exit_code(&outcomes));
}
