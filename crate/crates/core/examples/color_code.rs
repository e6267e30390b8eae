//! The weight-6 code f = 1 + x + y on two tori: parameters, distance and why S fails.
//!
//! cargo run --release --example color_code

use selfdual_bb::codebuilder::{
    build_code, compute_k_quotient, compute_k_rank, doubly_even_check, logical_basis,
};
use selfdual_bb::distance::{distance_exact, ExactOptions};
use selfdual_bb::gf2poly::parse_poly;
use selfdual_bb::logicalgates::{stabilizer_preserved, Gate};
use selfdual_bb::torus::canonicalize_torus;

fn main() -> selfdual_bb::Result<()> {
    let f = parse_poly("1 + x + y")?;
    for (a1, a2) in [([3, 0], [1, 1]), ([3, 0], [0, 3])] {
        let code = build_code(&f, &canonicalize_torus(a1, a2)?, None);
        let basis = logical_basis(&code)?;
        let d = distance_exact(&code, &basis, &ExactOptions::default())?;
        println!(
            "{:?} {:?}: n={} k={} (quotient {}) d={}",
            a1,
            a2,
            code.n,
            compute_k_rank(&code),
            compute_k_quotient(&code.f, &code.g, &code.torus),
            d.d
        );
        let de = doubly_even_check(&code);
        println!(
            "  self-dual {}  doubly even {}",
            de.self_dual, de.condition_holds
        );
        for gate in Gate::ALL {
            let p = stabilizer_preserved(gate, &code);
            match p.counterexample {
                None => println!("  {:<4} preserves the stabilizer group", gate.name()),
                Some(c) => println!(
                    "  {:<4} fails: {} generator row {} of weight {} maps to phase i^{}",
                    gate.name(),
                    c.sector,
                    c.row,
                    c.generator_weight,
                    c.image_phase
                ),
            }
        }
    }
    Ok(())
}
