//! Runs the twelve reproduction criteria and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use fracrec_cli::acceptance::run_criterion;
use fracrec_cli::search::SearchOptions;

fn main() -> ExitCode {
    let opts = SearchOptions::default();
    let mut failed = 0;
    for id in 1..=12 {
        let start = Instant::now();
        let c = run_criterion(id, &opts);
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {verdict}  {}  ({:.2} s)", c.id, c.title, start.elapsed().as_secs_f64());
        println!("              {}", c.detail);
        if !c.passed {
            failed += 1;
        }
    }
    println!("acceptance: {}/12 passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
