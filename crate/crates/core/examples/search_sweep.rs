//! Search every weight-8 candidate for a range of sizes and compare winners with the table.
//!
//! cargo run --release --example search_sweep -- [n_min] [n_max]

use std::time::Instant;

use selfdual_bb::search::{run_search, SearchConfig};
use selfdual_bb::tables::ROWS;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("integer"));
    let n_min = args.next().unwrap_or(16);
    let n_max = args.next().unwrap_or(n_min);
    let config = SearchConfig {
        n_min,
        n_max,
        ..Default::default()
    };
    let t = Instant::now();
    let report = run_search(&config).expect("search runs");
    for s in &report.sizes {
        let Some(w) = &s.winner else { continue };
        let table = ROWS.iter().find(|r| r.n == s.n);
        let cmp = table.map_or("no table row".to_string(), |r| {
            format!(
                "table {} metric {}{}",
                r.label(),
                r.metric,
                if w.metric >= r.metric() {
                    ""
                } else {
                    "  BELOW TABLE"
                }
            )
        });
        println!(
            "n={:<4} {:>6} candidates  winner {:<14} {:<28} metric {:.2} locality {:<3} | {cmp}",
            s.n,
            s.candidates,
            w.label(),
            w.f.to_string(),
            w.metric_f64(),
            w.locality
        );
    }
    println!("{:.1}s", t.elapsed().as_secs_f64());
}
