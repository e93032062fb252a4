//! Runs the bounded verification harness and prints its summary table.
//! Pass `--json` for the machine-readable report.

use simplab::containment::verify::{verify_paper, Scope};
use simplab::{Limits, OracleBounds, VerifyBounds};

fn main() {
    let json = std::env::args().any(|a| a == "--json");
    let report = verify_paper(
        Scope::All,
        &VerifyBounds::standard(OracleBounds::default()),
        &Limits::default(),
        false,
        false,
    );
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.summary_table());
        println!(
            "{} passed, {} failed, {} errors",
            report.passed, report.failed, report.errors
        );
    }
    if !report.all_passed() {
        std::process::exit(1);
    }
}
