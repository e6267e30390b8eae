//! Logical action of transversal CNOT, H and S on a table code.
//!
//! cargo run --release --example transversal_gates -- [row label, e.g. "[[40,6,6]]"]

use selfdual_bb::codebuilder::logical_basis;
use selfdual_bb::logicalgates::{gate_report, induced_logical_action, Gate};
use selfdual_bb::tables::find_row;

fn main() -> selfdual_bb::Result<()> {
    let key = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "[[16,4,4]]".to_string());
    let row = find_row(&key)?;
    let code = row.code();
    let basis = logical_basis(&code)?;
    println!("{} f = {}  form {:?}", row.label(), row.f, basis.form_kind);
    for gate in Gate::ALL {
        let ind = induced_logical_action(gate, &code, &basis)?;
        println!(
            "{:<4} symplectic {}  matches standard form {}  order {}",
            gate.name(),
            ind.action.is_symplectic(),
            ind.matches_expected,
            (1..=8)
                .find(|&e| ind.action.pow(e).is_identity())
                .map_or("> 8".into(), |e| e.to_string())
        );
        for r in ind.action.symplectic.to_hex_rows() {
            println!("    {r}");
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&gate_report(&code, &basis))?
    );
    Ok(())
}
