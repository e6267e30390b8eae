//! Gröbner basis of <1 + M + N, M + N + MN> and the k_max bound for a few exponent choices.
//!
//! cargo run --release --example groebner_theorem1 -- [a b c d]

use selfdual_bb::gf2poly::groebner::{buchberger, MonomialOrder, PolyRing};
use selfdual_bb::search::verify_theorem1;

fn main() -> selfdual_bb::Result<()> {
    let ring = PolyRing::new(&["M", "N"], MonomialOrder::lex(&[1, 0]));
    let gens = [
        ring.parse("1 + M + N").unwrap(),
        ring.parse("M + N + M*N").unwrap(),
    ];
    let gb = buchberger(&ring, &gens);
    println!("reduced basis (lex N > M): {:?}", gb.display());
    let std: Vec<String> = gb
        .standard_monomials()
        .unwrap_or_default()
        .iter()
        .map(|t| ring.display_monomial(t))
        .collect();
    println!("standard monomials: {std:?}");
    let s = ring.s_polynomial(&gb.generators[0], &gb.generators[1]);
    println!(
        "S-polynomial {} reduces to {}",
        ring.display(&s),
        ring.display(&gb.reduce(&s))
    );

    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let cases = if args.len() == 4 {
        vec![[args[0], args[1], args[2], args[3]]]
    } else {
        vec![[1, 0, 0, 1], [2, 1, 1, 2], [1, 1, -1, 2], [3, 0, 0, 3]]
    };
    for [a, b, c, d] in cases {
        let r = verify_theorem1(a, b, c, d)?;
        println!(
            "f = 1 + x^{a}y^{b} + x^{c}y^{d}: delta {} predicted {} quotient {:?} on {:?} k = {}",
            r.delta, r.k_max_predicted, r.k_max_computed, r.torus_used, r.k_on_torus
        );
    }
    Ok(())
}
