//! Buchberger's algorithm over GF(2) in at most four variables.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

pub const MAX_VARS: usize = 4;

/// Exponent vector; entries past the ring's variable count are zero.
pub type Exps = [u32; MAX_VARS];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic; `precedence[0]` is the most significant variable.
    Lex { precedence: Vec<usize> },
    /// Graded reverse lexicographic with variable 0 largest.
    DegRevLex,
}

impl MonomialOrder {
    pub fn lex(precedence: &[usize]) -> Self {
        MonomialOrder::Lex {
            precedence: precedence.to_vec(),
        }
    }

    fn cmp(&self, a: &Exps, b: &Exps, nvars: usize) -> Ordering {
        match self {
            MonomialOrder::Lex { precedence } => {
                for &v in precedence {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                let da: u32 = a[..nvars].iter().sum();
                let db: u32 = b[..nvars].iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for v in (0..nvars).rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Variable names plus a monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    order: MonomialOrder,
}

/// Polynomial over GF(2), terms strictly decreasing in the ring's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<Exps>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Exps> {
        self.terms.first()
    }

    pub fn terms(&self) -> &[Exps] {
        &self.terms
    }
}

#[inline]
fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[inline]
fn lcm(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i].max(b[i]))
}

#[inline]
fn quotient(b: &Exps, a: &Exps) -> Exps {
    std::array::from_fn(|i| b[i] - a[i])
}

#[inline]
fn product(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i] + b[i])
}

fn coprime(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl PolyRing {
    pub fn new(names: &[&str], order: MonomialOrder) -> Self {
        assert!(
            !names.is_empty() && names.len() <= MAX_VARS,
            "1..={MAX_VARS} variables supported"
        );
        if let MonomialOrder::Lex { precedence } = &order {
            let mut seen = precedence.clone();
            seen.sort_unstable();
            assert_eq!(
                seen,
                (0..names.len()).collect::<Vec<_>>(),
                "precedence must permute the variables"
            );
        }
        PolyRing {
            names: names.iter().map(|s| s.to_string()).collect(),
            order,
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn cmp(&self, a: &Exps, b: &Exps) -> Ordering {
        self.order.cmp(a, b, self.nvars())
    }

    /// Build a polynomial from exponent vectors of length `nvars`; repeated monomials cancel.
    pub fn poly<const N: usize>(&self, terms: impl IntoIterator<Item = [u32; N]>) -> Poly {
        assert_eq!(N, self.nvars());
        let mut v: Vec<Exps> = terms
            .into_iter()
            .map(|t| {
                let mut e = [0; MAX_VARS];
                e[..N].copy_from_slice(&t);
                e
            })
            .collect();
        v.sort_by(|a, b| self.cmp(b, a));
        let mut out: Vec<Exps> = Vec::with_capacity(v.len());
        for t in v {
            if out.last() == Some(&t) {
                out.pop();
            } else {
                out.push(t);
            }
        }
        Poly { terms: out }
    }

    /// Parse a sum of monomials such as `N + M^2` using this ring's variable names.
    pub fn parse(&self, text: &str) -> Option<Poly> {
        let mut terms = Vec::new();
        for term in text.split('+') {
            let term = term.trim();
            let mut e = [0u32; MAX_VARS];
            if term != "1" {
                for factor in term.split('*') {
                    let factor = factor.trim();
                    let (name, pow) = match factor.split_once('^') {
                        Some((n, p)) => (n.trim(), p.trim().parse().ok()?),
                        None => (factor, 1),
                    };
                    let v = self.names.iter().position(|s| s == name)?;
                    e[v] += pow;
                }
            }
            terms.push(e);
        }
        let mut v = terms;
        v.sort_by(|a, b| self.cmp(b, a));
        let mut out: Vec<Exps> = Vec::new();
        for t in v {
            if out.last() == Some(&t) {
                out.pop();
            } else {
                out.push(t);
            }
        }
        Some(Poly { terms: out })
    }

    pub fn add(&self, p: &Poly, q: &Poly) -> Poly {
        let (a, b) = (&p.terms, &q.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.cmp(&a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn mul_monomial(&self, p: &Poly, m: &Exps) -> Poly {
        Poly {
            terms: p.terms.iter().map(|t| product(t, m)).collect(),
        }
    }

    pub fn s_polynomial(&self, f: &Poly, g: &Poly) -> Poly {
        let (lf, lg) = (f.leading().unwrap(), g.leading().unwrap());
        let l = lcm(lf, lg);
        self.add(
            &self.mul_monomial(f, &quotient(&l, lf)),
            &self.mul_monomial(g, &quotient(&l, lg)),
        )
    }

    /// Full reduction of `p` modulo `basis` (every term, not just the leading one).
    pub fn normal_form(&self, p: &Poly, basis: &[Poly]) -> Poly {
        let mut rest = p.clone();
        let mut out: Vec<Exps> = Vec::new();
        'outer: while let Some(&t) = rest.terms.first() {
            for g in basis {
                let lg = g.leading().expect("zero polynomial in basis");
                if divides(lg, &t) {
                    rest = self.add(&rest, &self.mul_monomial(g, &quotient(&t, lg)));
                    continue 'outer;
                }
            }
            out.push(t);
            rest.terms.remove(0);
        }
        Poly { terms: out }
    }

    pub fn display(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        p.terms
            .iter()
            .map(|t| self.display_monomial(t))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn display_monomial(&self, t: &Exps) -> String {
        // print variables from most to least significant
        let mut idx: Vec<usize> = match &self.order {
            MonomialOrder::Lex { precedence } => precedence.clone(),
            MonomialOrder::DegRevLex => (0..self.nvars()).collect(),
        };
        idx.retain(|&v| t[v] > 0);
        if idx.is_empty() {
            return "1".into();
        }
        idx.iter()
            .map(|&v| match t[v] {
                1 => self.names[v].clone(),
                e => format!("{}^{e}", self.names[v]),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Dimension of a quotient ring, or a marker that it is not finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDim::Finite(d) => Some(d),
            QuotientDim::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(d) => write!(f, "{d}"),
            QuotientDim::Infinite => f.write_str("INFINITE"),
        }
    }
}

impl Serialize for QuotientDim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            QuotientDim::Finite(d) => s.serialize_u64(*d as u64),
            QuotientDim::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// A reduced Gröbner basis with the ring it lives in.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: PolyRing,
    /// Sorted by increasing leading monomial.
    pub generators: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Exps> {
        self.generators
            .iter()
            .map(|g| *g.leading().unwrap())
            .collect()
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        self.ring.normal_form(p, &self.generators)
    }

    pub fn display(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| self.ring.display(g))
            .collect()
    }

    /// Per-variable bound from pure powers among the leading monomials, if every variable has one.
    fn box_bounds(&self) -> Option<Vec<u32>> {
        let n = self.ring.nvars();
        let lts = self.leading_monomials();
        (0..n)
            .map(|v| {
                lts.iter()
                    .filter(|t| (0..n).all(|w| w == v || t[w] == 0) && t[v] > 0)
                    .map(|t| t[v])
                    .min()
            })
            .collect()
    }

    /// Number of monomials outside the leading-term ideal.
    pub fn staircase_dimension(&self) -> QuotientDim {
        if self
            .generators
            .iter()
            .any(|g| g.leading() == Some(&[0; MAX_VARS]))
        {
            return QuotientDim::Finite(0);
        }
        match self.box_bounds() {
            Some(bounds) => QuotientDim::Finite(self.count_standard(&bounds, None)),
            None => QuotientDim::Infinite,
        }
    }

    /// The standard monomials themselves; `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Exps>> {
        if self
            .generators
            .iter()
            .any(|g| g.leading() == Some(&[0; MAX_VARS]))
        {
            return Some(Vec::new());
        }
        let bounds = self.box_bounds()?;
        let mut out = Vec::new();
        self.count_standard(&bounds, Some(&mut out));
        out.sort_by(|a, b| self.ring.cmp(a, b));
        Some(out)
    }

    fn count_standard(&self, bounds: &[u32], mut sink: Option<&mut Vec<Exps>>) -> usize {
        let lts = self.leading_monomials();
        let n = bounds.len();
        let mut e = [0u32; MAX_VARS];
        let mut count = 0;
        loop {
            if !lts.iter().any(|t| divides(t, &e)) {
                count += 1;
                if let Some(s) = sink.as_deref_mut() {
                    s.push(e);
                }
            }
            // odometer increment
            let mut v = 0;
            loop {
                if v == n {
                    return count;
                }
                e[v] += 1;
                if e[v] < bounds[v] {
                    break;
                }
                e[v] = 0;
                v += 1;
            }
        }
    }

    /// All S-polynomials of pairs of generators reduce to zero.
    pub fn is_groebner(&self) -> bool {
        is_groebner(&self.ring, &self.generators)
    }
}

/// Buchberger's criterion for an arbitrary generating set.
pub fn is_groebner(ring: &PolyRing, gens: &[Poly]) -> bool {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !ring
                .normal_form(&ring.s_polynomial(&gens[i], &gens[j]), gens)
                .is_zero()
            {
                return false;
            }
        }
    }
    true
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn buchberger(ring: &PolyRing, generators: &[Poly]) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    for g in generators {
        let r = ring.normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let pick = (0..pairs.len())
            .min_by(|&p, &q| {
                let (a, b) = pairs[p];
                let (c, d) = pairs[q];
                let l1 = lcm(basis[a].leading().unwrap(), basis[b].leading().unwrap());
                let l2 = lcm(basis[c].leading().unwrap(), basis[d].leading().unwrap());
                ring.cmp(&l1, &l2)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(pick);
        let (li, lj) = (*basis[i].leading().unwrap(), *basis[j].leading().unwrap());
        if coprime(&li, &lj) {
            continue;
        }
        // chain criterion: skip if some k with LT(k) | lcm has both (i,k) and (j,k) already handled
        let l = lcm(&li, &lj);
        let pending = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
        if (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].leading().unwrap(), &l)
                && !pending(i, k)
                && !pending(j, k)
        }) {
            continue;
        }
        let s = ring.s_polynomial(&basis[i], &basis[j]);
        let r = ring.normal_form(&s, &basis);
        if !r.is_zero() {
            let idx = basis.len();
            basis.push(r);
            for k in 0..idx {
                pairs.push((k, idx));
            }
        }
    }

    // minimal basis: drop generators whose leading term is divisible by another's
    let mut keep: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.leading().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = h.leading().unwrap();
            j != i && divides(lh, lg) && (lh != lg || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // interreduce tails
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        keep[i] = ring.normal_form(&keep[i], &others);
    }
    keep.sort_by(|a, b| ring.cmp(a.leading().unwrap(), b.leading().unwrap()));
    GroebnerBasis {
        ring: ring.clone(),
        generators: keep,
    }
}
