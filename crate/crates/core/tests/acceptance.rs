//! Prints one line per acceptance criterion and fails if any criterion fails.

use std::process::ExitCode;

use ryser_core::acceptance;

fn main() -> ExitCode {
    let outcomes = acceptance::run(|o| println!("{o}"));
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.id).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
