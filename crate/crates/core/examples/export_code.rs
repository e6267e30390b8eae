//! Write a code's check matrices as JSON and read them back.
//!
//! cargo run --release --example export_code -- "1 + x + y + y^-1" 0,4 2,2

use selfdual_bb::codebuilder::{build_code, CodeExport};
use selfdual_bb::gf2poly::parse_poly;
use selfdual_bb::torus::canonicalize_torus;

fn vec2(s: &str) -> [i64; 2] {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse().expect("integer"))
        .collect();
    [v[0], v[1]]
}

fn main() -> selfdual_bb::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (f, a1, a2) = match args.as_slice() {
        [f, a1, a2] => (f.as_str(), vec2(a1), vec2(a2)),
        _ => ("1 + x + y + y^-1", [0, 4], [2, 2]),
    };
    let code = build_code(&parse_poly(f)?, &canonicalize_torus(a1, a2)?, None);
    let json = serde_json::to_string_pretty(&code.export())?;
    println!("{json}");
    let back: CodeExport = serde_json::from_str(&json)?;
    let (hx, hz) = back.matrices().expect("hex rows decode");
    assert!(hx == code.h_x && hz == code.h_z);
    eprintln!("round trip ok: n={} k={}", back.n, back.k);
    Ok(())
}
