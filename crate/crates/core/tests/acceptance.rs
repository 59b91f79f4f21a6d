//! Runs every acceptance criterion and prints one status line per criterion.
//!
//! Criteria 2 and 4 fail on inputs where the statements they check do not
//! hold. Those failures are printed as FAIL and pinned below, so any change in
//! which inputs fail (or any other criterion failing) breaks the build.

use std::process::ExitCode;

use radio_block::acceptance::run_all;

const KNOWN_FAILING: [u8; 2] = [2, 4];

/// The only instances criterion 4 is allowed to fail on: extended stars with
/// m = 2, k = 1 and n >= 3.
const STAR_COUNTEREXAMPLES: [&str; 6] = [
    "S^2_{1,1,3}",
    "S^2_{1,1,4}",
    "S^2_{1,2,3}",
    "S^2_{1,2,4}",
    "S^2_{1,3,3}",
    "S^2_{1,3,4}",
];

fn main() -> ExitCode {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let mut unexpected = Vec::new();
    for o in &outcomes {
        if !o.passed && !KNOWN_FAILING.contains(&o.id) {
            unexpected.push(format!("criterion {} failed", o.id));
        }
    }
    let failed_names = &outcomes[3].failing_inputs;
    if failed_names != &STAR_COUNTEREXAMPLES {
        unexpected.push(format!("criterion 4 failed on {failed_names:?}"));
    }
    let c2 = &outcomes[1];
    if !c2.detail.contains("pairwise inequality: 0 disagreements") {
        unexpected.push("criterion 2: the two exact characterizations disagree".into());
    }

    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!(
        "{passed}/{} criteria pass; known failures: {KNOWN_FAILING:?}",
        outcomes.len()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            eprintln!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
