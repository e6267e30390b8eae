//! Bivariate Laurent polynomials over GF(2) and quotient-ring dimensions.
//!
//! A [`LaurentPoly`] is a finite set of monomials `x^ex y^ey`; addition is the
//! symmetric difference of the term sets. The Gröbner machinery lives in
//! [`groebner`] and works in an ordinary polynomial ring; Laurent ideals are
//! brought there by clearing denominators and adjoining an inverse of `xy`.

pub mod groebner;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use groebner::{buchberger, GroebnerBasis, MonomialOrder, Poly, PolyRing, QuotientDim};

/// The translation `x^ex y^ey`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub ex: i64,
    pub ey: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ex: 0, ey: 0 };

    pub const fn new(ex: i64, ey: i64) -> Self {
        Monomial { ex, ey }
    }

    pub fn inverse(self) -> Self {
        Monomial::new(-self.ex, -self.ey)
    }

    pub fn times(self, other: Monomial) -> Self {
        Monomial::new(self.ex + other.ex, self.ey + other.ey)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
            if e == 1 {
                write!(f, "{var}")
            } else {
                write!(f, "{var}^{e}")
            }
        }
        match (self.ex, self.ey) {
            (0, 0) => f.write_str("1"),
            (ex, 0) => factor(f, 'x', ex),
            (0, ey) => factor(f, 'y', ey),
            (ex, ey) => {
                factor(f, 'x', ex)?;
                f.write_str("*")?;
                factor(f, 'y', ey)
            }
        }
    }
}

/// Element of `GF(2)[x^±1, y^±1]`, stored as its sorted term set.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeSet<Monomial>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly {
            terms: BTreeSet::from([m]),
        }
    }

    /// Builds a polynomial from exponent pairs; repeated pairs cancel.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (ex, ey) in terms {
            p.toggle(Monomial::new(ex, ey));
        }
        p
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.contains(&m)
    }

    /// Terms in canonical order (by `ex`, then `ey`).
    pub fn terms(&self) -> impl ExactSizeIterator<Item = Monomial> + '_ {
        self.terms.iter().copied()
    }

    /// The image under `x^n y^m -> x^-n y^-m`.
    pub fn antipode(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|m| m.inverse()).collect(),
        }
    }

    /// Multiplication by a single monomial.
    pub fn shift(&self, by: Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|m| m.times(by)).collect(),
        }
    }

    /// Smallest `(ex, ey)` per coordinate; `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<(i64, i64)> {
        let ex = self.terms.iter().map(|m| m.ex).min()?;
        let ey = self.terms.iter().map(|m| m.ey).min()?;
        Some((ex, ey))
    }

    /// The same polynomial multiplied by the least monomial that makes all exponents nonnegative.
    pub fn clear_denominators(&self) -> Self {
        match self.min_exponents() {
            Some((ex, ey)) => self.shift(Monomial::new(-ex.min(0), -ey.min(0))),
            None => self.clone(),
        }
    }

    /// Substitute `x -> x^a y^b`, `y -> x^c y^d`, i.e. map exponent `(e1, e2)` to
    /// `(a e1 + c e2, b e1 + d e2)`.
    pub fn substitute(&self, matrix: [[i64; 2]; 2]) -> Self {
        let [[a, c], [b, d]] = matrix;
        Self::from_terms(
            self.terms
                .iter()
                .map(|m| (a * m.ex + c * m.ey, b * m.ex + d * m.ey)),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .symmetric_difference(&rhs.terms)
                .copied()
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(a.times(*b));
            }
        }
        out
    }
}

pub fn poly_add(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p + q
}

pub fn poly_mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p * q
}

pub fn antipode(p: &LaurentPoly) -> LaurentPoly {
    p.antipode()
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_poly(&s).map_err(serde::de::Error::custom)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

/// Parse `poly := term ('+' term)*`, `term := factor ('*' factor)*`,
/// `factor := '1' | ('x'|'y') ('^' signed-integer)?`. Whitespace is ignored.
pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .poly()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        p.toggle(self.term()?);
        while let Some(c) = self.peek() {
            if c != b'+' {
                return self.err(format!("expected '+', found '{}'", c as char));
            }
            self.pos += 1;
            p.toggle(self.term()?);
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<Monomial> {
        let mut m = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            m = m.times(self.factor()?);
        }
        Ok(m)
    }

    fn factor(&mut self) -> Result<Monomial> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(Monomial::ONE)
            }
            Some(v @ (b'x' | b'y')) => {
                self.pos += 1;
                let e = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.signed_int()?
                } else {
                    1
                };
                Ok(if v == b'x' {
                    Monomial::new(e, 0)
                } else {
                    Monomial::new(0, e)
                })
            }
            Some(c) => self.err(format!("expected '1', 'x' or 'y', found '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        self.skip_ws();
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return self.err("expected an integer exponent");
        }
        if matches!(self.src.get(self.pos), Some(b'.' | b'/' | b'e' | b'E')) {
            return self.err("exponents must be integers");
        }
        let digits: String = self.src[start..self.pos]
            .iter()
            .filter(|c| !c.is_ascii_whitespace())
            .map(|&c| c as char)
            .collect();
        match digits.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("exponent out of range")
            }
        }
    }
}

/// Dimension of `GF(2)[x^±1, y^±1] / <f, g>` over GF(2).
///
/// Both generators are shifted to nonnegative exponents and the ring is
/// extended by `u` with `x y u + 1`, which makes `x` and `y` invertible; the
/// dimension is the number of standard monomials of the reduced Gröbner basis
/// under lex with `u > x > y`.
pub fn laurent_quotient_dim(f: &LaurentPoly, g: &LaurentPoly) -> QuotientDim {
    laurent_quotient_dim_with(&[f.clone(), g.clone()], MonomialOrder::lex(&[2, 0, 1]))
}

/// As [`laurent_quotient_dim`] for any number of generators and a chosen order.
pub fn laurent_quotient_dim_with(gens: &[LaurentPoly], order: MonomialOrder) -> QuotientDim {
    let ring = PolyRing::new(&["x", "y", "u"], order);
    let mut polys: Vec<Poly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let p = p.clear_denominators();
            ring.poly(p.terms().map(|m| [m.ex as u32, m.ey as u32, 0]))
        })
        .collect();
    polys.push(ring.poly([[1, 1, 1], [0, 0, 0]]));
    buchberger(&ring, &polys).staircase_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn parses_figure_polynomial() {
        let f = p("1 + x + y + y^-1");
        let expect = LaurentPoly::from_terms([(0, 0), (1, 0), (0, 1), (0, -1)]);
        assert_eq!(f, expect);
        assert_eq!(p("1"), LaurentPoly::one());
        assert!(p("x*y^2 + x*y^2").is_zero());
        assert_eq!(p(" x ^ - 2 * y"), LaurentPoly::from_terms([(-2, 1)]));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_poly("1 + x^1.5") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("1 + z") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("").is_err());
        assert!(parse_poly("1 +").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("x y").is_err());
    }

    #[test]
    fn display_is_canonical_and_reparses() {
        let f = p("1 + x + y + y^-1");
        assert_eq!(f.to_string(), "y^-1 + 1 + y + x");
        assert_eq!(p(&f.to_string()), f);
        assert_eq!(p("x^2*y + x^-1*y").to_string(), "x^-1*y + x^2*y");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(p("1 + x + y + y^-1").antipode(), p("1 + x^-1 + y^-1 + y"));
        assert_eq!(p("1").antipode(), p("1"));
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("1 + x") * &p("1 + x"), p("1 + x^2"));
        // (1 + M + N)(1 + M^-1 + N^-1) with M = x, N = y, expanded term by term:
        // 1·1 + 1·M^-1 + 1·N^-1 + M·1 + M·M^-1 + M·N^-1 + N·1 + N·M^-1 + N·N^-1
        // = 3·1 + M + M^-1 + N + N^-1 + M N^-1 + M^-1 N, and 3·1 = 1 mod 2.
        let mut oracle = LaurentPoly::zero();
        for a in [(0, 0), (1, 0), (0, 1)] {
            for b in [(0, 0), (-1, 0), (0, -1)] {
                oracle = &oracle + &LaurentPoly::from_terms([(a.0 + b.0, a.1 + b.1)]);
            }
        }
        let expect = p("1 + x + x^-1 + y + y^-1 + x*y^-1 + x^-1*y");
        assert_eq!(oracle, expect);
        assert_eq!(&p("1 + x + y") * &p("1 + x^-1 + y^-1"), expect);
    }

    #[test]
    fn quotient_dimension_examples() {
        assert_eq!(
            laurent_quotient_dim(&p("1+x+y"), &p("1+x^-1+y^-1")),
            QuotientDim::Finite(2)
        );
        assert_eq!(
            laurent_quotient_dim(&p("1+x"), &p("1+x")),
            QuotientDim::Infinite
        );
    }

    #[test]
    fn quotient_dimension_order_independent() {
        let f = p("1 + x + x^2*y + x^-1*y");
        let g = f.antipode();
        let lex =
            laurent_quotient_dim_with(&[f.clone(), g.clone()], MonomialOrder::lex(&[2, 1, 0]));
        let grevlex = laurent_quotient_dim(&f, &g);
        assert_eq!(lex, grevlex);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..=4, -4i64..=4), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn antipode_is_ring_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.antipode().antipode(), a.clone());
            prop_assert_eq!((&a * &b).antipode(), &a.antipode() * &b.antipode());
            prop_assert_eq!((&a + &b).antipode(), &a.antipode() + &b.antipode());
            prop_assert!((&a + &a).is_zero());
            prop_assert_eq!(a.antipode().len(), a.len());
        }

        #[test]
        fn display_roundtrip(a in arb_poly()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a);
        }
    }
}
