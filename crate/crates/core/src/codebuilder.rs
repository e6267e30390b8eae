//! CSS parity-check matrices of bivariate bicycle codes on a twisted torus.
//!
//! Each unit cell carries two qubits (sublattice 0 and 1). Column index of
//! qubit `(cell, s)` is `s * cells + i * alpha + j`. The X check anchored at a
//! cell covers `cell + m` for `m` in `f` on sublattice 0 and for `m` in `g` on
//! sublattice 1; the Z check uses `antipode(g)` and `antipode(f)` instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::gf2poly::LaurentPoly;
use crate::torus::TwistedTorus;

#[derive(Clone, Debug)]
pub struct CssCode {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
    pub torus: TwistedTorus,
    pub n: usize,
    pub h_x: BitMatrix,
    pub h_z: BitMatrix,
}

fn check_row(torus: &TwistedTorus, cell: usize, p0: &LaurentPoly, p1: &LaurentPoly) -> BitVec {
    let cells = torus.cells();
    let mut row = BitVec::zeros(2 * cells);
    for m in p0.terms() {
        row.flip(torus.translate(cell, m));
    }
    for m in p1.terms() {
        row.flip(cells + torus.translate(cell, m));
    }
    row
}

/// Build the code with X checks from `(f, g)`. `g` defaults to `antipode(f)`.
pub fn build_code(f: &LaurentPoly, torus: &TwistedTorus, g: Option<&LaurentPoly>) -> CssCode {
    let g = g.cloned().unwrap_or_else(|| f.antipode());
    let cells = torus.cells();
    let (fa, ga) = (f.antipode(), g.antipode());
    let h_x = BitMatrix::from_rows(
        2 * cells,
        (0..cells).map(|c| check_row(torus, c, f, &g)).collect(),
    );
    let h_z = BitMatrix::from_rows(
        2 * cells,
        (0..cells).map(|c| check_row(torus, c, &ga, &fa)).collect(),
    );
    CssCode {
        f: f.clone(),
        g,
        torus: *torus,
        n: 2 * cells,
        h_x,
        h_z,
    }
}

impl CssCode {
    #[inline]
    pub fn qubit(&self, cell: usize, sublattice: usize) -> usize {
        sublattice * self.torus.cells() + cell
    }

    /// `(cell, sublattice)` of a column.
    #[inline]
    pub fn qubit_location(&self, q: usize) -> (usize, usize) {
        let cells = self.torus.cells();
        (q % cells, q / cells)
    }

    /// `g` is the antipode of `f`, which makes the X and Z check matrices identical.
    pub fn is_self_dual(&self) -> bool {
        self.g == self.f.antipode()
    }

    /// Every X check commutes with every Z check.
    pub fn commutes(&self) -> bool {
        self.h_x.mul_transpose(&self.h_z).is_zero()
    }

    /// Column permutation induced by translating every qubit by `m`.
    pub fn translation_permutation(&self, m: crate::gf2poly::Monomial) -> Vec<usize> {
        (0..self.n)
            .map(|q| {
                let (cell, s) = self.qubit_location(q);
                self.qubit(self.torus.translate(cell, m), s)
            })
            .collect()
    }

    /// Qubit lists of every check, for sparse iteration.
    pub fn x_check_supports(&self) -> Vec<Vec<usize>> {
        self.h_x.rows().iter().map(BitVec::support).collect()
    }

    pub fn export(&self) -> CodeExport {
        CodeExport {
            f: self.f.to_string(),
            g: self.g.to_string(),
            a1: self.torus.a1,
            a2: self.torus.a2,
            n: self.n,
            k: compute_k_rank(self),
            h_x: self.h_x.to_hex_rows(),
            h_z: self.h_z.to_hex_rows(),
        }
    }
}

/// Serialized form of a code: matrices as hex rows, most significant bit first = column 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeExport {
    pub f: String,
    pub g: String,
    pub a1: [i64; 2],
    pub a2: [i64; 2],
    pub n: usize,
    pub k: usize,
    pub h_x: Vec<String>,
    pub h_z: Vec<String>,
}

impl CodeExport {
    /// Rebuild the matrices from the hex rows.
    pub fn matrices(&self) -> Option<(BitMatrix, BitMatrix)> {
        Some((
            BitMatrix::from_hex_rows(&self.h_x, self.n)?,
            BitMatrix::from_hex_rows(&self.h_z, self.n)?,
        ))
    }
}

/// `k = n - rank(H_X) - rank(H_Z)`.
pub fn compute_k_rank(code: &CssCode) -> usize {
    code.n - code.h_x.rank() - code.h_z.rank()
}

/// Matrix of multiplication by `p` on the group algebra of the torus:
/// entry `(r, c)` counts (mod 2) the terms `m` of `p` with `c + m = r`.
pub fn multiplication_matrix(p: &LaurentPoly, torus: &TwistedTorus) -> BitMatrix {
    let cells = torus.cells();
    let mut m = BitMatrix::zeros(cells, cells);
    for c in 0..cells {
        let cell = torus.cell_at(c);
        for t in p.terms() {
            let r = torus.cell_index(
                torus.reduce(crate::gf2poly::Monomial::new(cell.i + t.ex, cell.j + t.ey)),
            );
            let cur = m.get(r, c);
            m.set(r, c, !cur);
        }
    }
    m
}

/// `k = 2 (cells - rank[M_f | M_g])`, the quotient-ring count on the torus.
pub fn compute_k_quotient(f: &LaurentPoly, g: &LaurentPoly, torus: &TwistedTorus) -> usize {
    let block = multiplication_matrix(f, torus).hstack(&multiplication_matrix(g, torus));
    2 * (torus.cells() - block.rank())
}

/// Shape of the symmetric form `u·v` restricted to the logical space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    /// `L_X L_Xᵀ = I`: some logical has odd weight; `L_Z = L_X`.
    Identity,
    /// Direct sum of 2x2 hyperbolic blocks: every logical has even weight.
    Hyperbolic,
    /// Code is not self-dual; only the pairing was normalized.
    Unreduced,
}

#[derive(Clone, Debug)]
pub struct LogicalBasis {
    pub l_x: BitMatrix,
    pub l_z: BitMatrix,
    /// `L_X L_Xᵀ` after reduction.
    pub residual_form: BitMatrix,
    /// `L_Z L_Zᵀ` after reduction.
    pub residual_z_form: BitMatrix,
    pub form_kind: FormKind,
}

impl LogicalBasis {
    pub fn k(&self) -> usize {
        self.l_x.nrows()
    }
}

/// Vectors of `ker` (given as a basis) that extend `stab` to a basis of the kernel.
fn complement_reps(kernel: &BitMatrix, stab: &BitMatrix) -> Vec<BitVec> {
    let mut ech = stab.echelon();
    let mut reps = Vec::new();
    for v in kernel.rows() {
        if !ech.contains(v) {
            reps.push(v.clone());
            let mut m = ech.matrix.clone();
            m.push_row(v.clone());
            ech = m.echelon();
        }
    }
    reps
}

/// Logical X and Z supports with `L_X L_Zᵀ = I`.
///
/// For self-dual codes both live in `ker H / rowspace H`, where `u·v` is a
/// nondegenerate symmetric form; `L_X` is then brought to an orthonormal basis
/// when the form has odd vectors, otherwise to hyperbolic pairs. The form cannot
/// vanish on the whole logical space, so `residual_form` is never zero there.
pub fn logical_basis(code: &CssCode) -> Result<LogicalBasis> {
    let lx0 = complement_reps(&code.h_z.kernel(), &code.h_x);
    let lz0 = complement_reps(&code.h_x.kernel(), &code.h_z);
    let k = lx0.len();
    if k == 0 {
        return Err(Error::NoLogicals);
    }
    debug_assert_eq!(k, lz0.len());
    let n = code.n;

    let self_dual = code.h_x == code.h_z && code.commutes();
    if self_dual {
        if let Some((lx, kind)) = canonical_self_dual(&lx0) {
            let lx = BitMatrix::from_rows(n, lx);
            let gram = lx.mul_transpose(&lx);
            let inv = gram.inverse().expect("form is nondegenerate");
            let lz = inv.mul(&lx);
            return Ok(LogicalBasis {
                residual_z_form: lz.mul_transpose(&lz),
                residual_form: gram,
                l_x: lx,
                l_z: lz,
                form_kind: kind,
            });
        }
    }

    let lx = BitMatrix::from_rows(n, lx0);
    let lz0 = BitMatrix::from_rows(n, lz0);
    let pairing = lx.mul_transpose(&lz0);
    let a = pairing
        .inverse()
        .expect("pairing of logical representatives is invertible")
        .transpose();
    let lz = a.mul(&lz0);
    Ok(LogicalBasis {
        residual_form: lx.mul_transpose(&lx),
        residual_z_form: lz.mul_transpose(&lz),
        l_x: lx,
        l_z: lz,
        form_kind: FormKind::Unreduced,
    })
}

/// Orthonormal or hyperbolic basis of the span of `reps` under the dot product.
fn canonical_self_dual(reps: &[BitVec]) -> Option<(Vec<BitVec>, FormKind)> {
    let mut rest: Vec<BitVec> = reps.to_vec();
    let mut ortho: Vec<BitVec> = Vec::new();
    let mut hyper: Vec<(BitVec, BitVec)> = Vec::new();
    while !rest.is_empty() {
        if let Some(pos) = rest.iter().position(|v| v.dot(v)) {
            let v = rest.swap_remove(pos);
            for w in rest.iter_mut() {
                if w.dot(&v) {
                    w.xor_assign(&v);
                }
            }
            ortho.push(v);
        } else {
            let u = rest.swap_remove(0);
            let pos = rest.iter().position(|w| w.dot(&u))?;
            let w = rest.swap_remove(pos);
            for z in rest.iter_mut() {
                let (zu, zw) = (z.dot(&u), z.dot(&w));
                if zw {
                    z.xor_assign(&u);
                }
                if zu {
                    z.xor_assign(&w);
                }
            }
            hyper.push((u, w));
        }
    }
    if ortho.is_empty() {
        let flat = hyper.into_iter().flat_map(|(u, w)| [u, w]).collect();
        return Some((flat, FormKind::Hyperbolic));
    }
    // e ⊕ H ≅ three orthonormal vectors: e+u, e+w, e+u+w
    for (u, w) in hyper {
        let e = ortho.pop().unwrap();
        let a = e.xor(&u);
        let b = e.xor(&w);
        let c = a.xor(&w);
        ortho.extend([a, b, c]);
    }
    Some((ortho, FormKind::Identity))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublyEvenReport {
    pub self_dual: bool,
    pub generator_weights_mod4: Vec<usize>,
    pub pairwise_overlaps_even: bool,
    pub condition_holds: bool,
}

/// Self-dual, every X generator of weight 0 mod 4 and all pairwise overlaps even.
pub fn doubly_even_check(code: &CssCode) -> DoublyEvenReport {
    let self_dual = code.is_self_dual() && code.h_x == code.h_z;
    let rows = code.h_x.rows();
    let generator_weights_mod4: Vec<usize> = rows.iter().map(|r| r.weight() % 4).collect();
    let pairwise_overlaps_even = rows
        .iter()
        .enumerate()
        .all(|(i, a)| rows[i + 1..].iter().all(|b| a.overlap(b) % 2 == 0));
    let condition_holds =
        self_dual && generator_weights_mod4.iter().all(|&w| w == 0) && pairwise_overlaps_even;
    DoublyEvenReport {
        self_dual,
        generator_weights_mod4,
        pairwise_overlaps_even,
        condition_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::{parse_poly, Monomial};
    use crate::torus::canonicalize_torus;
    use proptest::prelude::*;

    fn code(f: &str, a1: [i64; 2], a2: [i64; 2]) -> CssCode {
        build_code(
            &parse_poly(f).unwrap(),
            &canonicalize_torus(a1, a2).unwrap(),
            None,
        )
    }

    /// Independent symplectic Gram-Schmidt: checks that `l_x`, `l_z` span
    /// complements of the stabilizers inside the right kernels.
    fn assert_valid_basis(c: &CssCode, b: &LogicalBasis) {
        let k = compute_k_rank(c);
        assert_eq!(b.k(), k);
        assert_eq!(b.l_x.mul_transpose(&b.l_z), BitMatrix::identity(k));
        assert!(c.h_z.mul_transpose(&b.l_x).is_zero());
        assert!(c.h_x.mul_transpose(&b.l_z).is_zero());
        assert_eq!(c.h_x.vstack(&b.l_x).rank(), c.h_x.rank() + k);
        assert_eq!(c.h_z.vstack(&b.l_z).rank(), c.h_z.rank() + k);
        assert_eq!(b.residual_form, b.l_x.mul_transpose(&b.l_x));
    }

    #[test]
    fn color_code_six_qubits() {
        let c = code("1+x+y", [3, 0], [1, 1]);
        assert_eq!(c.n, 6);
        for r in c.h_x.rows() {
            assert_eq!(r.weight(), 6);
        }
        assert_eq!(c.h_x.rank(), 1);
        assert_eq!(compute_k_rank(&c), 4);
        let b = logical_basis(&c).unwrap();
        assert_valid_basis(&c, &b);
    }

    #[test]
    fn constant_polynomial() {
        let c = code("1", [0, 3], [2, 1]);
        for r in c.h_x.rows() {
            assert_eq!(r.weight(), 2);
        }
        // rank oracle: rows pair the two sublattice qubits of each cell and are independent
        assert_eq!(c.h_x.rank(), c.torus.cells());
        assert_eq!(compute_k_rank(&c), 0);
        assert!(matches!(logical_basis(&c), Err(Error::NoLogicals)));
        assert!(!doubly_even_check(&c).condition_holds);
    }

    #[test]
    fn sixteen_qubit_code() {
        let c = code("1+x+y+y^-1", [0, 4], [2, 2]);
        assert_eq!(c.n, 16);
        assert_eq!(c.h_x.nrows(), 8);
        assert!(c.h_x.rows().iter().all(|r| r.weight() == 8));
        assert_eq!(c.h_x, c.h_z);
        assert_eq!(compute_k_rank(&c), 4);
        assert_eq!(compute_k_quotient(&c.f, &c.g, &c.torus), 4);
        let b = logical_basis(&c).unwrap();
        assert_valid_basis(&c, &b);
        assert!(doubly_even_check(&c).condition_holds);
    }

    #[test]
    fn quotient_k_examples() {
        let f = parse_poly("1+x+x^2*y+x^-1*y").unwrap();
        let t = canonicalize_torus([0, 7], [4, 3]).unwrap();
        assert_eq!(compute_k_quotient(&f, &f.antipode(), &t), 6);
        let f = parse_poly("1+x+y").unwrap();
        let t = canonicalize_torus([3, 0], [0, 3]).unwrap();
        assert_eq!(compute_k_quotient(&f, &f.antipode(), &t), 4);
        let one = canonicalize_torus([1, 0], [0, 1]).unwrap();
        for s in ["1", "1+x+y", "1+x+y+y^-1+x^2"] {
            let f = parse_poly(s).unwrap();
            if f.len() % 2 == 1 {
                assert_eq!(compute_k_quotient(&f, &f.antipode(), &one), 0, "{s}");
            }
        }
    }

    #[test]
    fn weight_six_color_code_fails_doubly_even() {
        let c = code("1+x+y", [3, 0], [0, 3]);
        assert_eq!(c.n, 18);
        assert_eq!(compute_k_rank(&c), 4);
        let r = doubly_even_check(&c);
        assert!(r.self_dual);
        assert!(r.generator_weights_mod4.iter().all(|&w| w == 2));
        assert!(!r.condition_holds);
    }

    #[test]
    fn four_qubit_code_has_hyperbolic_form() {
        // XXXX / ZZZZ: logicals have even weight, so the form is hyperbolic
        let c = code("1+x", [0, 1], [2, 0]);
        assert_eq!(c.n, 4);
        let b = logical_basis(&c).unwrap();
        assert_eq!(b.k(), 2);
        assert_eq!(b.form_kind, FormKind::Hyperbolic);
        assert!(!b.residual_form.is_zero());
        assert_valid_basis(&c, &b);
    }

    #[test]
    fn export_is_bit_exact() {
        let c = code("1+x+y", [3, 0], [1, 1]);
        let e = c.export();
        assert_eq!(e.n, 6);
        assert_eq!(e.k, 4);
        assert_eq!(e.h_x, vec!["fc"; 3]);
        assert_eq!(e.h_z, vec!["fc"; 3]);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(
            json,
            r#"{"f":"1 + y + x","g":"x^-1 + y^-1 + 1","a1":[3,0],"a2":[1,1],"n":6,"k":4,"h_x":["fc","fc","fc"],"h_z":["fc","fc","fc"]}"#
        );
        let back: CodeExport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.matrices().unwrap(), (c.h_x.clone(), c.h_z.clone()));
    }

    #[test]
    fn sixteen_qubit_export_rows() {
        // cell 0 of the (0,4),(2,2) torus: f covers cells (0,0),(1,0),(0,1),(0,3) on sublattice 0
        // and g = 1 + x^-1 + y^-1 + y covers (0,0),(1,2),(0,3),(0,1) on sublattice 1
        let c = code("1+x+y+y^-1", [0, 4], [2, 2]);
        let row0 = c.h_x.row(0).support();
        assert_eq!(row0, vec![0, 1, 3, 4, 8, 9, 11, 14]);
        assert_eq!(c.export().h_x[0], "d8d2");
    }

    fn arb_case() -> impl Strategy<Value = (LaurentPoly, TwistedTorus, bool)> {
        (
            prop::collection::vec((-3i64..=3, -3i64..=3), 1..6),
            (1i64..=5, 1i64..=5, 0i64..5),
            any::<bool>(),
        )
            .prop_filter_map("degenerate", |(ft, (m, l, q), sd)| {
                let f = LaurentPoly::from_terms(ft);
                if f.is_zero() {
                    return None;
                }
                Some((f, canonicalize_torus([0, m], [l, q % m]).ok()?, sd))
            })
    }

    proptest! {
        #[test]
        fn rank_and_quotient_agree(case in arb_case(), gt in prop::collection::vec((-3i64..=3, -3i64..=3), 1..6)) {
            let (f, t, sd) = case;
            let g = if sd { f.antipode() } else { LaurentPoly::from_terms(gt) };
            prop_assume!(!g.is_zero());
            let c = build_code(&f, &t, Some(&g));
            prop_assert!(c.commutes());
            if sd {
                prop_assert_eq!(&c.h_x, &c.h_z);
            }
            prop_assert_eq!(compute_k_rank(&c), compute_k_quotient(&f, &g, &t));
        }

        #[test]
        fn translations_permute_checks(case in arb_case(), ex in -4i64..4, ey in -4i64..4) {
            let (f, t, _) = case;
            let c = build_code(&f, &t, None);
            let perm = c.translation_permutation(Monomial::new(ex, ey));
            let mut permuted: Vec<Vec<usize>> = c.h_x.rows().iter().map(|r| {
                let mut s: Vec<usize> = r.support().into_iter().map(|q| perm[q]).collect();
                s.sort_unstable();
                s
            }).collect();
            let mut original: Vec<Vec<usize>> = c.x_check_supports();
            permuted.sort();
            original.sort();
            prop_assert_eq!(permuted, original);
        }
    }
}
