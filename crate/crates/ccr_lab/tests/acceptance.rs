//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p ccr_lab --test acceptance`; exits non-zero if any fails.

use std::process::ExitCode;

fn main() -> ExitCode {
    let seed = std::env::var("CCR_LAB_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut failed = 0;
    for id in 1..=12 {
        let r = ccr_lab::run_check(id, seed);
        println!("{}", r.line());
        failed += usize::from(!r.passed);
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
