//! Counts of square-free solutions, labeled and up to isomorphism.
//!
//! `cargo run --release --example enumeration_census -- 6`

use ybe::enumerate::{enumerate_with, EnumerateOptions};

fn main() -> ybe::Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
    for n in 1..=n_max {
        let count = |up_to_iso| {
            enumerate_with(
                n,
                &EnumerateOptions {
                    up_to_iso,
                    threads,
                    cap: n_max.max(6),
                },
            )
            .map(|v| v.len())
        };
        println!(
            "n = {n}: {} labeled, {} classes",
            count(false)?,
            count(true)?
        );
    }
    Ok(())
}
