//! Minimum distance of CSS codes.
//!
//! Three solvers share one problem shape: find the lightest `v` with
//! `H v = 0` and `L v != 0`. For Z-type errors `H = h_x` and `L = l_x`.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codebuilder::{CssCode, LogicalBasis};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Exact,
    UpperBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Brute,
    Ilp,
    Randomized,
}

/// Which error type is being measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sector {
    /// Z errors: `ker h_x`, detected by `l_x`.
    Z,
    /// X errors: `ker h_z`, detected by `l_z`.
    X,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub nodes: u64,
    pub elapsed: f64,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub d: usize,
    pub n: usize,
    /// Support of a logical representative of weight `d`.
    pub witness: Vec<usize>,
    pub status: Status,
    pub method: Method,
    /// Proven lower bound; equals `d` when exact.
    pub lower_bound: usize,
    pub stats: Stats,
}

impl DistanceResult {
    pub fn witness_vec(&self) -> BitVec {
        BitVec::from_indices(self.n, self.witness.iter().copied())
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

fn sector_matrices<'a>(
    code: &'a CssCode,
    basis: &'a LogicalBasis,
    sector: Sector,
) -> (&'a BitMatrix, &'a BitMatrix) {
    match sector {
        Sector::Z => (&code.h_x, &basis.l_x),
        Sector::X => (&code.h_z, &basis.l_z),
    }
}

/// `H w = 0` and `L w != 0`.
pub fn is_logical(h: &BitMatrix, l: &BitMatrix, w: &BitVec) -> bool {
    h.mul_vec(w).is_zero() && !l.mul_vec(w).is_zero()
}

fn check_witness(h: &BitMatrix, l: &BitMatrix, r: &DistanceResult) {
    let w = r.witness_vec();
    assert!(is_logical(h, l, &w), "witness is not a nontrivial logical");
    assert_eq!(w.weight(), r.d);
}

fn require_logicals(basis: &LogicalBasis) -> Result<()> {
    if basis.k() == 0 {
        return Err(Error::NoLogicals);
    }
    Ok(())
}

/// Exhaustive search over supports of weight `1..=w_max`; `None` if no logical is that light.
pub fn distance_bruteforce(
    code: &CssCode,
    basis: &LogicalBasis,
    w_max: usize,
) -> Result<Option<DistanceResult>> {
    distance_bruteforce_sector(code, basis, w_max, Sector::Z)
}

pub fn distance_bruteforce_sector(
    code: &CssCode,
    basis: &LogicalBasis,
    w_max: usize,
    sector: Sector,
) -> Result<Option<DistanceResult>> {
    require_logicals(basis)?;
    let start = Instant::now();
    let (h, l) = sector_matrices(code, basis, sector);
    let n = h.ncols();
    // column syndromes with the logical syndrome appended
    let h_t = h.transpose();
    let l_t = l.transpose();
    let cols: Vec<BitVec> = (0..n).map(|q| h_t.row(q).concat(l_t.row(q))).collect();
    let m = h.nrows();
    let mut nodes = 0u64;

    fn rec(
        cols: &[BitVec],
        m: usize,
        from: usize,
        left: usize,
        acc: &BitVec,
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if left == 0 {
            let syn = (0..m).any(|i| acc.get(i));
            let log = (m..acc.len()).any(|i| acc.get(i));
            return !syn && log;
        }
        for q in from..=cols.len() - left {
            chosen.push(q);
            if rec(cols, m, q + 1, left - 1, &acc.xor(&cols[q]), chosen, nodes) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let zero = BitVec::zeros(m + l.nrows());
    for w in 1..=w_max.min(n) {
        let mut chosen = Vec::with_capacity(w);
        if rec(&cols, m, 0, w, &zero, &mut chosen, &mut nodes) {
            let r = DistanceResult {
                d: w,
                n,
                witness: chosen,
                status: Status::Exact,
                method: Method::Brute,
                lower_bound: w,
                stats: Stats {
                    nodes,
                    elapsed: start.elapsed().as_secs_f64(),
                    seed: None,
                },
            };
            check_witness(h, l, &r);
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Information-set sampling: lightest logical among kernel-basis rows and
/// pairs of rows after row reduction under random column orders.
pub fn distance_upper_randomized(
    code: &CssCode,
    basis: &LogicalBasis,
    trials: usize,
    seed: u64,
) -> Result<DistanceResult> {
    randomized_sector(code, basis, trials, seed, Sector::Z)
}

pub fn randomized_sector(
    code: &CssCode,
    basis: &LogicalBasis,
    trials: usize,
    seed: u64,
    sector: Sector,
) -> Result<DistanceResult> {
    require_logicals(basis)?;
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let start = Instant::now();
    let (h, l) = sector_matrices(code, basis, sector);
    let n = h.ncols();
    let kernel = h.kernel();

    let best = (0..trials)
        .into_par_iter()
        .filter_map(|t| isd_trial(&kernel, l, seed, t as u64).map(|v| (v.weight(), t, v)))
        .min_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    // the kernel basis itself contains a nontrivial vector since k >= 1
    let (d, _, w) = best.expect("every trial sees a logical");
    let r = DistanceResult {
        d,
        n,
        witness: w.support(),
        status: Status::UpperBound,
        method: Method::Randomized,
        lower_bound: 1,
        stats: Stats {
            nodes: trials as u64,
            elapsed: start.elapsed().as_secs_f64(),
            seed: Some(seed),
        },
    };
    check_witness(h, l, &r);
    Ok(r)
}

fn permute_cols(m: &BitMatrix, perm: &[usize]) -> BitMatrix {
    let rows = m
        .rows()
        .iter()
        .map(|r| BitVec::from_indices(perm.len(), (0..perm.len()).filter(|&j| r.get(perm[j]))))
        .collect();
    BitMatrix::from_rows(perm.len(), rows)
}

fn isd_trial(kernel: &BitMatrix, l: &BitMatrix, seed: u64, trial: u64) -> Option<BitVec> {
    let n = kernel.ncols();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let rows = permute_cols(kernel, &perm).echelon().matrix.into_rows();
    let lp = permute_cols(l, &perm);
    let nontrivial = |v: &BitVec| lp.rows().iter().any(|r| r.dot(v));

    let mut best: Option<BitVec> = None;
    let consider = |v: BitVec, best: &mut Option<BitVec>| {
        let w = v.weight();
        if best.as_ref().is_none_or(|b| w < b.weight()) && nontrivial(&v) {
            *best = Some(v);
        }
    };
    for (i, a) in rows.iter().enumerate() {
        consider(a.clone(), &mut best);
        for b in &rows[i + 1..] {
            consider(a.xor(b), &mut best);
        }
    }
    // undo the permutation
    best.map(|v| BitVec::from_indices(n, v.support().into_iter().map(|j| perm[j])))
}

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    /// Wall-clock cap; on expiry the incumbent is returned as an upper bound.
    pub budget: Option<Duration>,
    /// Seed and trial count for the initial upper bound; zero trials skips it.
    pub seed: u64,
    pub trials: usize,
    pub parallel: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            budget: None,
            seed: 0,
            trials: 0,
            parallel: true,
        }
    }
}

const UNDECIDED: u8 = 2;
const FALLBACK_TRIALS: usize = 20;

/// Search state of the check-driven branch and bound.
#[derive(Clone)]
struct Node {
    value: Vec<u8>,
    parity: Vec<bool>,
    undecided: Vec<u32>,
    odd: usize,
    weight: usize,
}

struct Problem<'a> {
    qubit_checks: Vec<Vec<usize>>,
    check_qubits: Vec<Vec<usize>>,
    logicals: &'a BitMatrix,
    max_col_weight: usize,
    n: usize,
}

impl<'a> Problem<'a> {
    fn new(h: &BitMatrix, l: &'a BitMatrix) -> Self {
        let n = h.ncols();
        let check_qubits: Vec<Vec<usize>> = h.rows().iter().map(|r| r.support()).collect();
        let mut qubit_checks = vec![Vec::new(); n];
        for (c, qs) in check_qubits.iter().enumerate() {
            for &q in qs {
                qubit_checks[q].push(c);
            }
        }
        let max_col_weight = qubit_checks.iter().map(Vec::len).max().unwrap_or(1).max(1);
        Problem {
            qubit_checks,
            check_qubits,
            logicals: l,
            max_col_weight,
            n,
        }
    }

    fn root(&self) -> Node {
        Node {
            value: vec![UNDECIDED; self.n],
            parity: vec![false; self.check_qubits.len()],
            undecided: self.check_qubits.iter().map(|qs| qs.len() as u32).collect(),
            odd: 0,
            weight: 0,
        }
    }

    fn set(&self, s: &mut Node, q: usize, one: bool) {
        s.value[q] = one as u8;
        for &c in &self.qubit_checks[q] {
            s.undecided[c] -= 1;
            if one {
                s.parity[c] ^= true;
                if s.parity[c] {
                    s.odd += 1;
                } else {
                    s.odd -= 1;
                }
            }
        }
        s.weight += one as usize;
    }

    fn unset(&self, s: &mut Node, q: usize) {
        let one = s.value[q] == 1;
        s.value[q] = UNDECIDED;
        for &c in &self.qubit_checks[q] {
            s.undecided[c] += 1;
            if one {
                s.parity[c] ^= true;
                if s.parity[c] {
                    s.odd += 1;
                } else {
                    s.odd -= 1;
                }
            }
        }
        s.weight -= one as usize;
    }

    fn ones(&self, s: &Node) -> BitVec {
        BitVec::from_indices(self.n, (0..self.n).filter(|&q| s.value[q] == 1))
    }

    fn bound(&self, s: &Node) -> usize {
        s.weight + s.odd.div_ceil(self.max_col_weight)
    }

    /// Odd check with the fewest undecided qubits; `None` when some odd check is stuck.
    fn pick(&self, s: &Node) -> Option<usize> {
        let mut best: Option<usize> = None;
        for c in 0..self.check_qubits.len() {
            if s.parity[c] {
                if s.undecided[c] == 0 {
                    return None;
                }
                if best.is_none_or(|b| s.undecided[c] < s.undecided[b]) {
                    best = Some(c);
                }
            }
        }
        best
    }

    fn branches(&self, s: &Node, c: usize) -> Vec<usize> {
        self.check_qubits[c]
            .iter()
            .copied()
            .filter(|&q| s.value[q] == UNDECIDED)
            .collect()
    }

    /// Depth-first search for a nontrivial logical of weight at most `limit`
    /// whose support contains the current ones.
    fn dfs(&self, s: &mut Node, limit: usize, ctl: &Control) -> Option<BitVec> {
        if ctl.tick() {
            return None;
        }
        if s.odd == 0 {
            let v = self.ones(s);
            // a satisfied proper subset of a minimal logical cannot exist
            return (s.weight > 0 && self.logicals.rows().iter().any(|r| r.dot(&v))).then_some(v);
        }
        if self.bound(s) > limit {
            return None;
        }
        let c = self.pick(s)?;
        let cand = self.branches(s, c);
        let mut found = None;
        for &q in &cand {
            self.set(s, q, true);
            found = self.dfs(s, limit, ctl);
            self.unset(s, q);
            if found.is_some() {
                break;
            }
            self.set(s, q, false);
        }
        for &q in &cand {
            if s.value[q] != UNDECIDED {
                self.unset(s, q);
            }
        }
        found
    }

    /// Subproblems `depth` levels below `s`, in branch order.
    fn frontier(
        &self,
        s: &mut Node,
        depth: usize,
        limit: usize,
        ctl: &Control,
        out: &mut Vec<Node>,
    ) {
        ctl.tick();
        if depth == 0 || s.odd == 0 {
            out.push(s.clone());
            return;
        }
        if self.bound(s) > limit {
            return;
        }
        let Some(c) = self.pick(s) else { return };
        let cand = self.branches(s, c);
        for &q in &cand {
            self.set(s, q, true);
            self.frontier(s, depth - 1, limit, ctl, out);
            self.unset(s, q);
            self.set(s, q, false);
        }
        for &q in &cand {
            self.unset(s, q);
        }
    }
}

struct Control {
    deadline: Option<Instant>,
    expired: AtomicBool,
    nodes: std::sync::atomic::AtomicU64,
}

impl Control {
    /// Counts a node; true when the search should unwind.
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if n.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.expired.store(true, Ordering::Relaxed);
                }
            }
        }
        self.expired.load(Ordering::Relaxed)
    }
}

/// Exact distance by branch and bound over check constraints.
///
/// Every branch fixes one more qubit of an unsatisfied check to 1. Because the
/// code is translation invariant, some minimum-weight logical contains qubit
/// `(cell 0, s=0)`, or else avoids sublattice 0 entirely and contains `(0, 1)`.
pub fn distance_exact(
    code: &CssCode,
    basis: &LogicalBasis,
    opts: &ExactOptions,
) -> Result<DistanceResult> {
    exact_sector(code, basis, opts, Sector::Z)
}

pub fn exact_sector(
    code: &CssCode,
    basis: &LogicalBasis,
    opts: &ExactOptions,
    sector: Sector,
) -> Result<DistanceResult> {
    require_logicals(basis)?;
    let start = Instant::now();
    let (h, l) = sector_matrices(code, basis, sector);
    let upper = if opts.trials > 0 {
        Some(randomized_sector(code, basis, opts.trials, opts.seed, sector)?.witness_vec())
    } else {
        None
    };
    let cells = code.torus.cells();

    let problem = Problem::new(h, l);
    let mut roots = Vec::new();
    let mut r0 = problem.root();
    problem.set(&mut r0, code.qubit(0, 0), true);
    roots.push(r0);
    let mut r1 = problem.root();
    for c in 0..cells {
        problem.set(&mut r1, code.qubit(c, 0), false);
    }
    problem.set(&mut r1, code.qubit(0, 1), true);
    roots.push(r1);

    let ctl = Control {
        deadline: opts.budget.map(|b| start + b),
        expired: AtomicBool::new(false),
        nodes: Default::default(),
    };

    let cap = upper.as_ref().map_or(code.n + 1, BitVec::weight);
    let mut best = upper;
    let mut lower = 1;
    let mut exact = true;
    // iterative deepening: exhausting `limit` proves d > limit
    for limit in 1..cap {
        let found = search_limit(&problem, &roots, limit, &ctl, opts.parallel);
        if ctl.expired.load(Ordering::Relaxed) {
            exact = false;
            break;
        }
        if let Some(v) = found {
            lower = v.weight();
            best = Some(v);
            break;
        }
        lower = limit + 1;
    }
    let best = match best {
        Some(b) => b,
        // out of time before any logical was seen
        None => randomized_sector(code, basis, FALLBACK_TRIALS, opts.seed, sector)?.witness_vec(),
    };
    if exact {
        lower = best.weight();
    }
    let r = DistanceResult {
        d: best.weight(),
        n: code.n,
        witness: best.support(),
        status: if exact {
            Status::Exact
        } else {
            Status::UpperBound
        },
        method: Method::Ilp,
        lower_bound: lower,
        stats: Stats {
            nodes: ctl.nodes.load(Ordering::Relaxed),
            elapsed: start.elapsed().as_secs_f64(),
            seed: Some(opts.seed),
        },
    };
    check_witness(h, l, &r);
    Ok(r)
}

fn search_limit(
    problem: &Problem,
    roots: &[Node],
    limit: usize,
    ctl: &Control,
    parallel: bool,
) -> Option<BitVec> {
    let mut frontier = Vec::new();
    for r in roots {
        problem.frontier(
            &mut r.clone(),
            if parallel { 3 } else { 0 },
            limit,
            ctl,
            &mut frontier,
        );
    }
    let run = |s: &Node| problem.dfs(&mut s.clone(), limit, ctl);
    if parallel {
        // first hit in branch order, so the witness matches a sequential run
        frontier.par_iter().find_map_first(run)
    } else {
        frontier.iter().find_map(run)
    }
}
