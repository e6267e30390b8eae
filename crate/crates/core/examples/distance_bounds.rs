//! Randomized upper bounds against the published distances for the larger rows.
//!
//! cargo run --release --example distance_bounds -- [trials] [seed]

use std::time::Instant;

use selfdual_bb::codebuilder::logical_basis;
use selfdual_bb::distance::distance_upper_randomized;
use selfdual_bb::tables::ROWS;

fn main() {
    let mut args = std::env::args().skip(1);
    let trials: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2024);
    for row in ROWS.iter().filter(|r| r.n > 100) {
        let code = row.code();
        let basis = logical_basis(&code).expect("k > 0");
        let t = Instant::now();
        let r = distance_upper_randomized(&code, &basis, trials, seed).expect("k > 0");
        println!(
            "{:<14} upper bound {:>2}  {:.2}s {}",
            row.label(),
            r.d,
            t.elapsed().as_secs_f64(),
            if r.d == row.d {
                "meets table"
            } else {
                "above table"
            }
        );
    }
}
