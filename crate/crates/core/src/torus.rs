//! Twisted tori: integer lattices `L ⊂ Z²` and the finite group `Z² / L` of unit cells.
//!
//! Every full-rank lattice has a unique basis of the form `(0, alpha)`, `(beta, gamma)`
//! with `alpha, beta > 0` and `0 <= gamma < alpha`; cells are then indexed by
//! `(i, j)` with `i < beta`, `j < alpha`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly::{LaurentPoly, Monomial};

/// Extended Euclid: returns `(g, s, t)` with `s a + t b = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    /// x-coordinate in `[0, beta)`.
    pub i: i64,
    /// y-coordinate in `[0, alpha)`.
    pub j: i64,
}

/// A torus `Z² / <a1, a2>` with its Hermite normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedTorus {
    pub a1: [i64; 2],
    pub a2: [i64; 2],
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

impl TwistedTorus {
    /// Canonicalize an arbitrary integer basis.
    pub fn new(a1: [i64; 2], a2: [i64; 2]) -> Result<Self> {
        canonicalize_torus(a1, a2)
    }

    /// The canonical triple `(alpha, beta, gamma)`.
    pub fn hnf(&self) -> (i64, i64, i64) {
        (self.alpha, self.beta, self.gamma)
    }

    /// Number of unit cells, `|det(a1, a2)|`.
    pub fn cells(&self) -> usize {
        (self.alpha * self.beta) as usize
    }

    pub fn reduce(&self, m: Monomial) -> Cell {
        reduce_monomial(m, self)
    }

    /// Linear index `i * alpha + j`.
    #[inline]
    pub fn cell_index(&self, c: Cell) -> usize {
        (c.i * self.alpha + c.j) as usize
    }

    #[inline]
    pub fn cell_at(&self, index: usize) -> Cell {
        let index = index as i64;
        Cell {
            i: index / self.alpha,
            j: index % self.alpha,
        }
    }

    /// Index of the cell reached from cell `from` by translation `m`.
    #[inline]
    pub fn translate(&self, from: usize, m: Monomial) -> usize {
        let c = self.cell_at(from);
        self.cell_index(self.reduce(Monomial::new(c.i + m.ex, c.j + m.ey)))
    }

    /// Whether `v` lies in the lattice.
    pub fn contains(&self, v: [i64; 2]) -> bool {
        self.reduce(Monomial::new(v[0], v[1])) == Cell { i: 0, j: 0 }
    }

    /// Image of the torus under the exponent map `v -> m v`.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> Result<Self> {
        let apply = |v: [i64; 2]| {
            [
                m[0][0] * v[0] + m[0][1] * v[1],
                m[1][0] * v[0] + m[1][1] * v[1],
            ]
        };
        canonicalize_torus(apply(self.a1), apply(self.a2))
    }

    /// Lagrange-Gauss reduced basis of the lattice.
    pub fn reduced_basis(&self) -> ([i64; 2], [i64; 2]) {
        let norm = |v: [i64; 2]| v[0] * v[0] + v[1] * v[1];
        let dot = |u: [i64; 2], v: [i64; 2]| u[0] * v[0] + u[1] * v[1];
        let (mut u, mut v) = ([0, self.alpha], [self.beta, self.gamma]);
        if norm(u) > norm(v) {
            std::mem::swap(&mut u, &mut v);
        }
        loop {
            // round(dot/norm) with ties away from zero is fine here
            let q = (dot(u, v) as f64 / norm(u) as f64).round() as i64;
            v = [v[0] - q * u[0], v[1] - q * u[1]];
            if norm(v) >= norm(u) {
                return (u, v);
            }
            std::mem::swap(&mut u, &mut v);
        }
    }
}

impl fmt::Display for TwistedTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}) ({},{}) [alpha={} beta={} gamma={}]",
            self.a1[0], self.a1[1], self.a2[0], self.a2[1], self.alpha, self.beta, self.gamma
        )
    }
}

/// Hermite normal form of the lattice spanned by `a1`, `a2`.
pub fn canonicalize_torus(a1: [i64; 2], a2: [i64; 2]) -> Result<TwistedTorus> {
    let det = a1[0] * a2[1] - a1[1] * a2[0];
    if det == 0 {
        return Err(Error::DegenerateTorus);
    }
    let (beta, s, t) = ext_gcd(a1[0], a2[0]);
    let alpha = det.abs() / beta;
    let gamma = (s * a1[1] + t * a2[1]).rem_euclid(alpha);
    Ok(TwistedTorus {
        a1,
        a2,
        alpha,
        beta,
        gamma,
    })
}

/// Canonical cell of the translation `m`.
pub fn reduce_monomial(m: Monomial, t: &TwistedTorus) -> Cell {
    let q = m.ex.div_euclid(t.beta);
    let i = m.ex - q * t.beta;
    let j = (m.ey - q * t.gamma).rem_euclid(t.alpha);
    Cell { i, j }
}

/// All tori `(0, m), (l, q)` with `2 l m = n` and `0 <= q < m`, by ascending `m` then `q`.
pub fn enumerate_decompositions(n: usize) -> Result<Vec<TwistedTorus>> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidQubitCount(n));
    }
    let cells = (n / 2) as i64;
    let mut out = Vec::new();
    for m in (1..=cells).filter(|m| cells % m == 0) {
        let l = cells / m;
        for q in 0..m {
            out.push(canonicalize_torus([0, m], [l, q])?);
        }
    }
    Ok(out)
}

/// Rewrite `f` in variables `x' = x^a y^b`, `y' = x^a' y^b'` where `(a, b)` is the
/// first primitive exponent pair among the non-constant terms (preferring `(1, 0)`).
///
/// Returns the rewritten polynomial and the unimodular matrix `U` whose columns
/// are `(a, b)` and `(a', b')`; old exponents are `U` times new exponents.
pub fn unimodular_normalize(f: &LaurentPoly) -> Result<(LaurentPoly, [[i64; 2]; 2])> {
    if !f.contains(Monomial::ONE) {
        return Err(Error::NoPrimitiveTerm);
    }
    let pivot = if f.contains(Monomial::new(1, 0)) {
        Monomial::new(1, 0)
    } else {
        f.terms()
            .filter(|m| *m != Monomial::ONE && ext_gcd(m.ex, m.ey).0 == 1)
            .min_by_key(|m| (m.ex.abs() + m.ey.abs(), *m))
            .ok_or(Error::NoPrimitiveTerm)?
    };
    unimodular_normalize_with_pivot(f, pivot)
}

/// As [`unimodular_normalize`] with an explicit pivot term.
pub fn unimodular_normalize_with_pivot(
    f: &LaurentPoly,
    pivot: Monomial,
) -> Result<(LaurentPoly, [[i64; 2]; 2])> {
    let (a, b) = (pivot.ex, pivot.ey);
    let (g, s, t) = ext_gcd(a, b);
    if g != 1 || !f.contains(pivot) || pivot == Monomial::ONE {
        return Err(Error::NoPrimitiveTerm);
    }
    // a s + b t = 1, so with (a', b') = (-t, s) the determinant a b' - b a' is 1
    let (ap, bp) = (-t, s);
    let u = [[a, ap], [b, bp]];
    let inverse = [[bp, -ap], [-b, a]];
    Ok((f.substitute(inverse), u))
}

/// Inverse of a unimodular 2x2 matrix.
pub fn unimodular_inverse(u: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    debug_assert!(det == 1 || det == -1);
    [
        [det * u[1][1], -det * u[0][1]],
        [-det * u[1][0], det * u[0][0]],
    ]
}
