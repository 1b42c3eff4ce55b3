//! Every named claim over all square-free solutions up to a size bound.

use ybe::sweep::{sweep, Claim, SweepOptions};

fn main() -> ybe::Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    for claim in Claim::ALL {
        let r = sweep(&SweepOptions::new(claim, n_max))?;
        println!(
            "{:<24} {:>9} pass {:>5} skip {:>4} fail {:>3}",
            claim.name(),
            if r.asserted { "asserted" } else { "reported" },
            r.summary.passed,
            r.summary.skipped,
            r.summary.failed
        );
    }
    Ok(())
}
