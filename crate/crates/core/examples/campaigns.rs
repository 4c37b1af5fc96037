//! Runs every verification campaign and prints a summary.

use symdist::harness::{verify_all, HarnessOptions};

fn main() {
    let suite = verify_all(&HarnessOptions::default());
    for c in &suite.campaigns {
        println!(
            "{:<8} {:?}  {} records  {:.2}s  {}",
            c.campaign,
            c.verdict,
            c.records.len(),
            c.timings.seconds,
            c.summary
        );
    }
    println!("exit code {}", suite.verdict.exit_code());
}
