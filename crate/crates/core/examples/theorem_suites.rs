//! Run every randomized suite and print the report.
//!
//! ```text
//! cargo run --release --example theorem_suites -- 200 7
//! ```

use kcausal::harness::{run_suite, TrialConfig};

fn main() -> kcausal::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut config = TrialConfig::default();
    if let Some(t) = args.next() {
        config.trials = t.parse().expect("trial count");
    }
    if let Some(s) = args.next() {
        config.seed = s.parse().expect("seed");
    }
    let report = run_suite(&config)?;
    for s in &report.suites {
        println!("{:<20} {}/{} passed, {} curiosities", s.name, s.passed, s.trials, s.curiosities.len());
        for f in &s.failures {
            println!("  trial {} (seed {}): {}", f.trial, f.trial_seed, f.detail);
        }
    }
    if report.total_failed() > 0 {
        std::process::exit(1);
    }
    Ok(())
}
