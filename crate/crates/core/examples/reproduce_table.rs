//! Recompute k for every published row and the exact distance up to a size cap.
//!
//! cargo run --release --example reproduce_table -- [max_n_for_exact]

use std::time::Instant;

use selfdual_bb::codebuilder::{compute_k_quotient, compute_k_rank, logical_basis};
use selfdual_bb::distance::{distance_exact, ExactOptions};
use selfdual_bb::tables::ROWS;

fn main() {
    let cap: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(64);
    for row in ROWS {
        let code = row.code();
        let t = Instant::now();
        let kq = compute_k_quotient(&code.f, &code.g, &code.torus);
        let kr = compute_k_rank(&code);
        let mut line = format!("{:<14} k: quotient {kq:>2} rank {kr:>2}", row.label());
        if row.n <= cap {
            let basis = logical_basis(&code).expect("k > 0");
            let r = distance_exact(&code, &basis, &ExactOptions::default()).expect("k > 0");
            line += &format!("  d {} ({:?}, {} nodes)", r.d, r.status, r.stats.nodes);
        }
        let ok = kq == row.k && kr == row.k;
        println!(
            "{line}  {:.2}s {}",
            t.elapsed().as_secs_f64(),
            if ok { "ok" } else { "MISMATCH" }
        );
    }
}
