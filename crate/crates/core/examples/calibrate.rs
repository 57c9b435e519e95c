//! Print the largest op-count/envelope ratio per engine and suite.
//!
//! `cargo run --release -p mondec-core --example calibrate`

use mondec_core::bench::{run_suite, Suite, INCREMENTAL_ENVELOPE, RECURSIVE_ENVELOPE};

fn main() -> mondec_core::Result<()> {
    for suite in [Suite::GenericSweep, Suite::NongenericSweep] {
        let records = run_suite(suite)?;
        for algo in ["incremental", "recursive"] {
            let worst = records
                .iter()
                .filter(|r| r.algorithm == algo)
                .max_by(|a, b| a.ratio().total_cmp(&b.ratio()))
                .expect("non-empty suite");
            let total_ms: f64 = records
                .iter()
                .filter(|r| r.algorithm == algo)
                .map(|r| r.wall_ns as f64 / 1e6)
                .sum();
            println!(
                "{:<17} {:<12} max ratio {:.4} at {} (l = {}), total {:.1} ms",
                suite.name(),
                algo,
                worst.ratio(),
                worst.instance_id,
                worst.l,
                total_ms
            );
        }
    }
    println!("pinned: incremental {INCREMENTAL_ENVELOPE}, recursive {RECURSIVE_ENVELOPE}");
    Ok(())
}
