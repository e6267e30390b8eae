//! Transversal CNOT, Hadamard and S on CSS codes and their induced logical action.
//!
//! Phases follow `Y = iXZ`. A Pauli is `i^p X^a Z^b`; a stabilizer element
//! `X^s Z^t` of a CSS code always carries `p = 0` in this form.

use log::debug;
use serde::{Deserialize, Serialize};

use crate::codebuilder::{doubly_even_check, CssCode, LogicalBasis};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, Echelon};
use crate::pauli::PauliVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gate {
    #[serde(rename = "CNOT")]
    Cnot,
    H,
    S,
}

impl Gate {
    pub const ALL: [Gate; 3] = [Gate::Cnot, Gate::H, Gate::S];

    pub fn name(self) -> &'static str {
        match self {
            Gate::Cnot => "CNOT",
            Gate::H => "H",
            Gate::S => "S",
        }
    }

    /// Number of code blocks the gate acts on.
    pub fn blocks(self) -> usize {
        match self {
            Gate::Cnot => 2,
            _ => 1,
        }
    }
}

/// Image of `p` under the transversal gate (`p` covers one block, or two for CNOT).
pub fn conjugate(gate: Gate, p: &PauliVector) -> PauliVector {
    match gate {
        // S X S† = iXZ: (a|b) -> i^{wt a} (a | a+b)
        Gate::S => PauliVector {
            x: p.x.clone(),
            z: p.x.xor(&p.z),
            phase: ((p.phase as usize + p.x.weight()) % 4) as u8,
        },
        // H X^a Z^b H = Z^a X^b = (-1)^{a·b} X^b Z^a
        Gate::H => PauliVector {
            x: p.z.clone(),
            z: p.x.clone(),
            phase: (p.phase + if p.x.dot(&p.z) { 2 } else { 0 }) % 4,
        },
        // control = first block, target = second block
        Gate::Cnot => {
            let n = p.len() / 2;
            let mut x = p.x.clone();
            let mut z = p.z.clone();
            for i in 0..n {
                if p.x.get(i) {
                    x.flip(n + i);
                }
                if p.z.get(n + i) {
                    z.flip(i);
                }
            }
            PauliVector {
                x,
                z,
                phase: p.phase,
            }
        }
    }
}

/// As [`conjugate`], checking the operator length against the code.
pub fn conjugate_by_transversal(
    gate: Gate,
    p: &PauliVector,
    code: &CssCode,
) -> Result<PauliVector> {
    let expected = code.n * gate.blocks();
    if p.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            got: p.len(),
        });
    }
    Ok(conjugate(gate, p))
}

/// CNOT on a `(control, target)` pair of single-block operators.
pub fn conjugate_cnot_pair(
    control: &PauliVector,
    target: &PauliVector,
) -> (PauliVector, PauliVector) {
    conjugate(Gate::Cnot, &PauliVector::join(control, target)).split()
}

/// Stabilizer group of one or more copies of a CSS code.
struct StabilizerGroup {
    x_rows: Echelon,
    z_rows: Echelon,
    x_gens: BitMatrix,
    z_gens: BitMatrix,
}

impl StabilizerGroup {
    fn new(code: &CssCode, blocks: usize) -> Self {
        let spread = |m: &BitMatrix| {
            let n = code.n;
            let mut rows = Vec::new();
            for b in 0..blocks {
                for r in m.rows() {
                    rows.push(BitVec::from_indices(
                        n * blocks,
                        r.support().into_iter().map(|q| q + b * n),
                    ));
                }
            }
            BitMatrix::from_rows(n * blocks, rows)
        };
        let x_gens = spread(&code.h_x);
        let z_gens = spread(&code.h_z);
        StabilizerGroup {
            x_rows: x_gens.echelon(),
            z_rows: z_gens.echelon(),
            x_gens,
            z_gens,
        }
    }

    /// Membership with sign +1.
    fn contains(&self, p: &PauliVector) -> bool {
        p.phase == 0 && self.x_rows.contains(&p.x) && self.z_rows.contains(&p.z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// `"X"` or `"Z"` generator family.
    pub sector: String,
    /// Block index (0 unless CNOT) and row within the check matrix.
    pub block: usize,
    pub row: usize,
    pub generator_weight: usize,
    /// Phase exponent of the image in `i^p X^a Z^b` form.
    pub image_phase: u8,
    /// Whether the image's X and Z parts lie in the stabilizer row spaces.
    pub support_in_group: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preservation {
    pub preserved: bool,
    pub counterexample: Option<Counterexample>,
}

/// Whether the gate maps every stabilizer generator into the group with phase +1.
pub fn stabilizer_preserved(gate: Gate, code: &CssCode) -> Preservation {
    let blocks = gate.blocks();
    let group = StabilizerGroup::new(code, blocks);
    let rows_per_block = code.h_x.nrows();
    let families = [("X", &group.x_gens, true), ("Z", &group.z_gens, false)];
    for (sector, gens, is_x) in families {
        for (idx, r) in gens.rows().iter().enumerate() {
            let p = if is_x {
                PauliVector::x_type(r.clone())
            } else {
                PauliVector::z_type(r.clone())
            };
            let image = conjugate(gate, &p);
            if !group.contains(&image) {
                let rows_in_block = if is_x {
                    rows_per_block
                } else {
                    code.h_z.nrows()
                };
                return Preservation {
                    preserved: false,
                    counterexample: Some(Counterexample {
                        sector: sector.into(),
                        block: idx / rows_in_block,
                        row: idx % rows_in_block,
                        generator_weight: r.weight(),
                        image_phase: image.phase,
                        support_in_group: group.x_rows.contains(&image.x)
                            && group.z_rows.contains(&image.z),
                    }),
                };
            }
        }
    }
    Preservation {
        preserved: true,
        counterexample: None,
    }
}

/// A Clifford on `m` logical qubits, stored as the images of `X̄_1..X̄_m, Z̄_1..Z̄_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalClifford {
    pub label: String,
    /// Row `j` holds the `(x̄ | z̄)` coordinates of the image of generator `j`.
    pub symplectic: BitMatrix,
    /// Phase exponent of each image, `i^p X̄^c Z̄^d`.
    pub phases: Vec<u8>,
}

impl LogicalClifford {
    pub fn identity(m: usize, label: &str) -> Self {
        LogicalClifford {
            label: label.into(),
            symplectic: BitMatrix::identity(2 * m),
            phases: vec![0; 2 * m],
        }
    }

    pub fn qubits(&self) -> usize {
        self.symplectic.nrows() / 2
    }

    /// `M Ω Mᵀ = Ω` with `Ω = [[0, I], [I, 0]]`.
    pub fn is_symplectic(&self) -> bool {
        let m = self.qubits();
        let omega = omega(m);
        self.symplectic.mul(&omega).mul_transpose(&self.symplectic) == omega
    }

    fn generator_image(&self, j: usize) -> PauliVector {
        let m = self.qubits();
        let row = self.symplectic.row(j);
        let x = BitVec::from_indices(m, row.support().into_iter().filter(|&i| i < m));
        let z = BitVec::from_indices(
            m,
            row.support().into_iter().filter(|&i| i >= m).map(|i| i - m),
        );
        PauliVector::new(x, z, self.phases[j])
    }

    /// Image of an arbitrary logical Pauli.
    pub fn apply(&self, p: &PauliVector) -> PauliVector {
        let m = self.qubits();
        let mut out = PauliVector::identity(m);
        out.phase = p.phase;
        for i in p.x.support() {
            out = out.mul(&self.generator_image(i));
        }
        for i in p.z.support() {
            out = out.mul(&self.generator_image(m + i));
        }
        out
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &LogicalClifford) -> LogicalClifford {
        let m = self.qubits();
        let images: Vec<PauliVector> = (0..2 * m)
            .map(|j| other.apply(&self.generator_image(j)))
            .collect();
        let rows = images.iter().map(|p| p.x.concat(&p.z)).collect();
        LogicalClifford {
            label: format!("{}*{}", other.label, self.label),
            symplectic: BitMatrix::from_rows(2 * m, rows),
            phases: images.iter().map(|p| p.phase).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> LogicalClifford {
        let mut acc = LogicalClifford::identity(self.qubits(), &self.label);
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.symplectic == BitMatrix::identity(self.symplectic.nrows())
            && self.phases.iter().all(|&p| p == 0)
    }

    /// Quadrant `(row block, column block)`, each `qubits x qubits`.
    pub fn block(&self, rb: usize, cb: usize) -> BitMatrix {
        let m = self.qubits();
        let rows = (0..m)
            .map(|r| {
                let row = self.symplectic.row(rb * m + r);
                BitVec::from_indices(m, (0..m).filter(|&c| row.get(cb * m + c)))
            })
            .collect();
        BitMatrix::from_rows(m, rows)
    }
}

fn omega(m: usize) -> BitMatrix {
    let mut o = BitMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        o.set(i, m + i, true);
        o.set(m + i, i, true);
    }
    o
}

/// Logical basis of `blocks` copies of the code, block by block.
fn spread_basis(code: &CssCode, basis: &LogicalBasis, blocks: usize) -> (BitMatrix, BitMatrix) {
    let n = code.n;
    let spread = |m: &BitMatrix| {
        let mut rows = Vec::new();
        for b in 0..blocks {
            for r in m.rows() {
                rows.push(BitVec::from_indices(
                    n * blocks,
                    r.support().into_iter().map(|q| q + b * n),
                ));
            }
        }
        BitMatrix::from_rows(n * blocks, rows)
    };
    (spread(&basis.l_x), spread(&basis.l_z))
}

/// The action the transversal gate is expected to have in a canonical dual basis.
pub fn expected_action(gate: Gate, k: usize) -> LogicalClifford {
    match gate {
        Gate::H => {
            let mut m = LogicalClifford::identity(k, "H");
            m.symplectic = omega(k);
            m
        }
        Gate::S => {
            // X̄_j -> i X̄_j Z̄_j, Z̄_j -> Z̄_j
            let mut m = LogicalClifford::identity(k, "S");
            for j in 0..k {
                m.symplectic.set(j, k + j, true);
                m.phases[j] = 1;
            }
            m
        }
        Gate::Cnot => {
            // qubits 0..k in block A, k..2k in block B
            let mut m = LogicalClifford::identity(2 * k, "CNOT");
            let q = 2 * k;
            for j in 0..k {
                m.symplectic.set(j, k + j, true); // X̄_A -> X̄_A X̄_B
                m.symplectic.set(q + k + j, q + j, true); // Z̄_B -> Z̄_A Z̄_B
            }
            m
        }
    }
}

#[derive(Clone, Debug)]
pub struct InducedAction {
    pub action: LogicalClifford,
    /// Symplectic part equals the textbook form in this basis.
    pub matches_expected: bool,
    /// Phases also equal the textbook form.
    pub phases_match: bool,
}

/// Logical action of the gate, re-expressed in the coordinates of `basis`.
pub fn induced_logical_action(
    gate: Gate,
    code: &CssCode,
    basis: &LogicalBasis,
) -> Result<InducedAction> {
    if !stabilizer_preserved(gate, code).preserved {
        return Err(Error::GateNotPreserving(gate.name()));
    }
    let blocks = gate.blocks();
    let (lx, lz) = spread_basis(code, basis, blocks);
    let group = StabilizerGroup::new(code, blocks);
    let m = lx.nrows();
    let total = code.n * blocks;

    let mut rows = Vec::with_capacity(2 * m);
    let mut phases = Vec::with_capacity(2 * m);
    let generators = lx
        .rows()
        .iter()
        .map(|r| PauliVector::x_type(r.clone()))
        .chain(lz.rows().iter().map(|r| PauliVector::z_type(r.clone())));
    for p in generators {
        let img = conjugate(gate, &p);
        // coordinates: X̄_i part from commutation with Z̄_i, Z̄_i part from X̄_i
        let c = BitVec::from_indices(m, (0..m).filter(|&i| img.x.dot(lz.row(i))));
        let d = BitVec::from_indices(m, (0..m).filter(|&i| img.z.dot(lx.row(i))));
        let mut u = BitVec::zeros(total);
        for i in c.support() {
            u.xor_assign(lx.row(i));
        }
        let mut v = BitVec::zeros(total);
        for i in d.support() {
            v.xor_assign(lz.row(i));
        }
        let sx = img.x.xor(&u);
        let sz = img.z.xor(&v);
        debug_assert!(group.x_rows.contains(&sx) && group.z_rows.contains(&sz));
        if !sx.is_zero() || !sz.is_zero() {
            debug!(
                "{}: discarded stabilizer component of weight {}+{}",
                gate.name(),
                sx.weight(),
                sz.weight()
            );
        }
        // i^p X^a Z^b = i^p (-1)^{(b+v)·u} (X^{a+u} Z^{b+v}) (X^u Z^v)
        let sign = if sz.dot(&u) { 2 } else { 0 };
        phases.push((img.phase + sign) % 4);
        rows.push(c.concat(&d));
    }
    let action = LogicalClifford {
        label: gate.name().into(),
        symplectic: BitMatrix::from_rows(2 * m, rows),
        phases,
    };
    let expected = expected_action(gate, basis.k());
    Ok(InducedAction {
        matches_expected: action.symplectic == expected.symplectic,
        phases_match: action.phases == expected.phases,
        action,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GateSummary {
    pub preserved: bool,
    /// Rows of the symplectic matrix as `0/1` strings; absent when not preserved.
    pub action: Option<Vec<String>>,
    pub phases: Option<Vec<u8>>,
    pub matches_expected: Option<bool>,
    pub phases_match: Option<bool>,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GateReport {
    pub self_dual: bool,
    pub doubly_even: bool,
    pub k: usize,
    pub gates: std::collections::BTreeMap<String, GateSummary>,
    pub residual_form: Vec<String>,
    pub form_kind: crate::codebuilder::FormKind,
}

fn bits(m: &BitMatrix) -> Vec<String> {
    m.rows()
        .iter()
        .map(|r| {
            r.to_bools()
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect()
        })
        .collect()
}

/// Everything `verify-gates` reports for one code.
pub fn gate_report(code: &CssCode, basis: &LogicalBasis) -> GateReport {
    let de = doubly_even_check(code);
    let mut gates = std::collections::BTreeMap::new();
    for gate in Gate::ALL {
        let pres = stabilizer_preserved(gate, code);
        let summary = match induced_logical_action(gate, code, basis) {
            Ok(ind) => GateSummary {
                preserved: true,
                action: Some(bits(&ind.action.symplectic)),
                phases: Some(ind.action.phases.clone()),
                matches_expected: Some(ind.matches_expected),
                phases_match: Some(ind.phases_match),
                counterexample: None,
            },
            Err(_) => GateSummary {
                preserved: false,
                action: None,
                phases: None,
                matches_expected: None,
                phases_match: None,
                counterexample: pres.counterexample,
            },
        };
        gates.insert(gate.name().to_string(), summary);
    }
    GateReport {
        self_dual: de.self_dual,
        doubly_even: de.condition_holds,
        k: basis.k(),
        gates,
        residual_form: bits(&basis.residual_form),
        form_kind: basis.form_kind,
    }
}
