//! One PASS/FAIL line per acceptance criterion.
//!
//! Run a subset with `cargo test --test acceptance -- 3 furedi`.

use std::process::ExitCode;

use bergex_cli::criteria::{run_criterion, CriterionResult, CRITERIA};

const SEED: u64 = 0;

fn main() -> ExitCode {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let selected: Vec<_> = CRITERIA
        .iter()
        .filter(|c| filters.is_empty() || filters.iter().any(|f| *f == c.group || *f == c.id.to_string()))
        .collect();
    let mut results: Vec<CriterionResult> = Vec::new();
    for c in selected {
        let r = run_criterion(c.id, SEED);
        println!("{} ({:.2} s)", r.line(), r.elapsed.as_secs_f64());
        results.push(r);
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{}/{} criteria passed", results.len() - failed.len(), results.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {:?}", failed);
        ExitCode::FAILURE
    }
}
