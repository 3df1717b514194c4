//! Runs a few identity checks and prints a summary line for each.

use bizeta::verify::{run_suite, SuiteOptions};

fn main() -> bizeta::Result<()> {
    let suites: Vec<String> = ["eta", "ramanujan", "bernoulli_identities", "iseki"].map(String::from).to_vec();
    let reports = run_suite(&suites, &SuiteOptions::default())?;
    for r in &reports {
        println!("{} {:<40} rel {:.2e}", if r.pass { "ok  " } else { "FAIL" }, r.name, r.rel_residual);
    }
    Ok(())
}
