//! One line per acceptance criterion; failing criteria also list their
//! failing checks. Exact arithmetic throughout, so every tolerance is
//! literal equality. Set `MCKAYLAB_SLOW` to include the affine `A4` case.

use std::process::ExitCode;

use mckay_core::acceptance::{run, Options, CRITERIA};

fn main() -> ExitCode {
    let slow = std::env::var_os("MCKAYLAB_SLOW").is_some();
    let mut failed = Vec::new();
    for n in 1..=CRITERIA {
        let o = run(n, Options { slow }).expect("criterion in range");
        println!(
            "criterion {:>2} {}: {} ({}/{} checks, {:.2?})",
            o.number,
            if o.passed { "PASS" } else { "FAIL" },
            o.title,
            o.report.count_passed(),
            o.report.checks.len(),
            o.elapsed
        );
        if !o.passed {
            for c in o.report.failures() {
                println!("    FAIL {}: {}", c.name, c.detail);
            }
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {CRITERIA} of {CRITERIA} criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
