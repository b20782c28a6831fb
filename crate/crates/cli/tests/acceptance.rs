//! One pass/fail line per acceptance criterion. `ACCEPTANCE_SUITE` selects a
//! subset (same syntax as `rootjones verify --suite`).

use std::process::ExitCode;

use rootjones_cli::verify::{parse_suite, run_criterion, summary_line, VerifyOptions};

fn main() -> ExitCode {
    let suite = std::env::var("ACCEPTANCE_SUITE").unwrap_or_else(|_| "all".into());
    let ids = parse_suite(&suite).expect("valid ACCEPTANCE_SUITE");
    let opts = VerifyOptions::default();
    let mut failed = 0;
    for id in ids {
        let (result, elapsed) = run_criterion(id, &opts);
        println!("{}", summary_line(&result, elapsed.as_secs_f64() * 1e3));
        if !result.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all selected criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
