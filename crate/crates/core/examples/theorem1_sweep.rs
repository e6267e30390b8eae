//! Check k_max = 4|ad - bc| for every exponent choice with entries in [-r, r].
//!
//! cargo run --release --example theorem1_sweep -- [r]

use std::time::Instant;

use selfdual_bb::search::theorem1_sweep;

fn main() {
    let r: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let t = Instant::now();
    let reports = theorem1_sweep(r);
    let bad: Vec<_> = reports.iter().filter(|r| !r.holds).collect();
    println!(
        "{} cases, {} violations, {:.1}s",
        reports.len(),
        bad.len(),
        t.elapsed().as_secs_f64()
    );
    for b in bad.iter().take(10) {
        println!(
            "  {:?}: predicted {} quotient {:?} torus {}",
            b.exponents, b.k_max_predicted, b.k_max_computed, b.k_on_torus
        );
    }
}
