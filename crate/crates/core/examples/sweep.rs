// Every invariant cross-checked against its oracle on all small graphs.

use std::error::Error;

use grouptope::sweep::{sweep_graphs, SweepOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = sweep_graphs(&SweepOptions::exhaustive(4))?;
    println!("{} labelled graphs on {} nodes", report.graphs, report.nodes);
    for (name, t) in &report.invariants {
        println!("  {name:<42} {:>4} checked {:>2} failed", t.checked, t.failed);
    }
    let sampled = sweep_graphs(&SweepOptions::sampled(7, 5, 1))?;
    println!("5 random graphs on 7 nodes: passed {}", sampled.passed());
    if !report.passed() || !sampled.passed() {
        return Err("sweep found a counterexample".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
