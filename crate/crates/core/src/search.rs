//! Exhaustive search over weight-8 codes `f = 1 + x + x^a y^b + x^c y^d`, ranking by
//! `kd²/n`, plus the checks that tie results back to the published tables.

use std::collections::{BTreeSet, HashSet};
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use log::{debug, info};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::codebuilder::{
    build_code, compute_k_quotient, compute_k_rank, doubly_even_check, logical_basis,
};
use crate::distance::{
    distance_exact, distance_upper_randomized, DistanceResult, ExactOptions, Status,
};
use crate::error::{Error, Result};
use crate::gf2poly::{laurent_quotient_dim, LaurentPoly, Monomial};
use crate::tables::TableRow;
use crate::torus::{canonicalize_torus, enumerate_decompositions, Cell, TwistedTorus};

/// When to run the exact solver and when to settle for a sampled upper bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistancePolicy {
    /// Exact distance for `n` up to this size; `None` means always exact.
    pub exact_max_n: Option<usize>,
    pub trials: usize,
    /// Wall-clock cap per exact run. Above `exact_max_n` a budget also
    /// enables an exact attempt after the randomized bound.
    pub budget_secs: Option<f64>,
}

impl Default for DistancePolicy {
    fn default() -> Self {
        DistancePolicy {
            exact_max_n: Some(64),
            trials: 200,
            budget_secs: None,
        }
    }
}

impl DistancePolicy {
    /// Parse `exact`, `randomized` or `exact:N,randomized`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::BadPolicy(spec.to_string());
        let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
        let exact_max_n = match parts.as_slice() {
            ["exact"] => None,
            ["randomized"] => Some(0),
            [e, "randomized"] => Some(
                e.strip_prefix("exact:")
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?,
            ),
            [e] if e.starts_with("exact:") => Some(e["exact:".len()..].parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        Ok(DistancePolicy {
            exact_max_n,
            ..Default::default()
        })
    }

    fn budget(&self) -> Option<Duration> {
        self.budget_secs.map(Duration::from_secs_f64)
    }

    pub fn exact_for(&self, n: usize) -> bool {
        self.exact_max_n.is_none_or(|m| n <= m)
    }

    /// Distance of a code under this policy.
    pub fn run(&self, code: &crate::codebuilder::CssCode, seed: u64) -> Result<DistanceResult> {
        let basis = logical_basis(code)?;
        if self.exact_for(code.n) || self.budget_secs.is_some() {
            let opts = ExactOptions {
                budget: self.budget(),
                seed,
                // an incumbent only pays off when the run may be cut short
                trials: if self.budget_secs.is_some() {
                    self.trials
                } else {
                    0
                },
                parallel: true,
            };
            distance_exact(code, &basis, &opts)
        } else {
            distance_upper_randomized(code, &basis, self.trials, seed)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub min_k: usize,
    pub distance: DistancePolicy,
    pub seed: u64,
    /// Exponent pairs range over the cells of the fundamental domain.
    pub domain: String,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n_min: 16,
            n_max: 16,
            min_k: 4,
            distance: DistancePolicy::default(),
            seed: 0,
            domain: "fundamental-domain".into(),
            out: None,
            jobs: 0,
        }
    }
}

impl SearchConfig {
    /// Hash of everything that affects results (not the output path or thread count).
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        hex(&Sha256::digest(json.as_bytes()))
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub f: LaurentPoly,
    pub torus: TwistedTorus,
}

impl Candidate {
    pub fn n(&self) -> usize {
        2 * self.torus.cells()
    }

    /// Identity used for resumption and seeding.
    pub fn key(&self) -> String {
        candidate_key(&self.f, &self.torus)
    }
}

fn candidate_key(f: &LaurentPoly, t: &TwistedTorus) -> String {
    format!(
        "{}|{},{}|{},{}|{}",
        2 * t.cells(),
        t.a1[0],
        t.a1[1],
        t.a2[0],
        t.a2[1],
        f
    )
}

/// All `1 + x + x^a y^b + x^c y^d` with two distinct cells of the fundamental domain
/// on every torus `(0, m), (l, q)` of size `n`.
pub fn enumerate_candidates(n: usize) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut duplicates = 0usize;
    for torus in enumerate_decompositions(n)? {
        let one = torus.reduce(Monomial::ONE);
        let x = torus.reduce(Monomial::new(1, 0));
        if one == x {
            continue;
        }
        let cells: Vec<Cell> = (0..torus.cells())
            .map(|i| torus.cell_at(i))
            .filter(|&c| c != one && c != x)
            .collect();
        for (i, p) in cells.iter().enumerate() {
            for q in &cells[i + 1..] {
                let key = (torus.hnf(), *p, *q);
                if !seen.insert(key) {
                    duplicates += 1;
                    continue;
                }
                let f = LaurentPoly::from_terms([(0, 0), (1, 0), (p.i, p.j), (q.i, q.j)]);
                out.push(Candidate { f, torus });
            }
        }
    }
    debug!(
        "n={n}: {} candidates, {duplicates} lattice duplicates dropped",
        out.len()
    );
    Ok(out)
}

/// One evaluated code.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub f: LaurentPoly,
    pub torus: TwistedTorus,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub metric: Ratio<u64>,
    pub locality: u64,
    pub distance: DistanceResult,
}

impl CodeRecord {
    pub fn key(&self) -> String {
        candidate_key(&self.f, &self.torus)
    }

    pub fn label(&self) -> String {
        format!("[[{},{},{}]]", self.n, self.k, self.d)
    }

    /// Copy without run statistics, for comparing results across runs.
    pub fn without_stats(&self) -> CodeRecord {
        let mut r = self.clone();
        r.distance.stats = Default::default();
        r
    }

    pub fn metric_f64(&self) -> f64 {
        *self.metric.numer() as f64 / *self.metric.denom() as f64
    }
}

pub fn metric(n: usize, k: usize, d: usize) -> Ratio<u64> {
    Ratio::new((k * d * d) as u64, n as u64)
}

/// Seed for one candidate, derived from the master seed and the candidate key.
pub fn candidate_seed(master: u64, key: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update(key.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("32-byte digest"))
}

/// `None` when `k < min_k`.
pub fn evaluate_candidate(
    f: &LaurentPoly,
    torus: &TwistedTorus,
    config: &SearchConfig,
) -> Result<Option<CodeRecord>> {
    let g = f.antipode();
    let k = compute_k_quotient(f, &g, torus);
    if k == 0 || k < config.min_k {
        return Ok(None);
    }
    let code = build_code(f, torus, None);
    let key = candidate_key(f, torus);
    let distance = config
        .distance
        .run(&code, candidate_seed(config.seed, &key))?;
    if distance.status == Status::UpperBound && config.distance.exact_for(code.n) {
        info!(
            "{key}: exact distance downgraded to upper bound {}",
            distance.d
        );
    }
    let de = doubly_even_check(&code);
    assert!(
        de.condition_holds,
        "{key}: weight-8 self-dual code is not doubly even"
    );
    let d = distance.d;
    Ok(Some(CodeRecord {
        f: f.clone(),
        torus: *torus,
        n: code.n,
        k,
        d,
        metric: metric(code.n, k, d),
        locality: locality_score(f, &g, torus),
        distance,
    }))
}

/// Largest squared distance between two qubits of one check, in units of a quarter
/// cell side squared.
///
/// Qubit `(cell, 0)` sits at the cell corner and `(cell, 1)` at its centre;
/// distances use the nearest periodic image.
pub fn locality_score(f: &LaurentPoly, g: &LaurentPoly, torus: &TwistedTorus) -> u64 {
    // work in half-cell units, where the centre offset is (1, 1)
    let pts: Vec<[i64; 2]> = f
        .terms()
        .map(|m| [2 * m.ex, 2 * m.ey])
        .chain(g.terms().map(|m| [2 * m.ex + 1, 2 * m.ey + 1]))
        .collect();
    let (u, v) = torus.reduced_basis();
    let (u, v) = ([2 * u[0], 2 * u[1]], [2 * v[0], 2 * v[1]]);
    let wrapped = |d: [i64; 2]| {
        let mut best = i64::MAX;
        for s in -2..=2 {
            for t in -2..=2 {
                let x = d[0] + s * u[0] + t * v[0];
                let y = d[1] + s * u[1] + t * v[1];
                best = best.min(x * x + y * y);
            }
        }
        best
    };
    let mut worst = 0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            worst = worst.max(wrapped([p[0] - q[0], p[1] - q[1]]));
        }
    }
    worst as u64
}

/// Highest metric, then lowest locality score, then smallest printed polynomial.
pub fn rank_and_select(records: &[CodeRecord]) -> Result<&CodeRecord> {
    records
        .iter()
        .min_by(|a, b| {
            b.metric
                .cmp(&a.metric)
                .then(a.locality.cmp(&b.locality))
                .then_with(|| a.f.to_string().cmp(&b.f.to_string()))
                .then_with(|| a.key().cmp(&b.key()))
        })
        .ok_or(Error::EmptyRecords)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub exponents: [i64; 4],
    pub delta: i64,
    pub k_max_predicted: usize,
    /// Twice the quotient dimension; `None` if the ideal is not zero-dimensional.
    pub k_max_computed: Option<usize>,
    pub torus_used: TwistedTorus,
    pub k_on_torus: usize,
    pub holds: bool,
}

/// Check `k_max = 4|ad - bc|` for `f = 1 + x^a y^b + x^c y^d`, both from the
/// Laurent quotient and on the torus `(3a, 3b), (c + a, d + b)`.
pub fn verify_theorem1(a: i64, b: i64, c: i64, d: i64) -> Result<Theorem1Report> {
    let delta = a * d - b * c;
    if delta == 0 {
        return Err(Error::ZeroDelta);
    }
    let f = LaurentPoly::from_terms([(0, 0), (a, b), (c, d)]);
    let g = f.antipode();
    let k_max_computed = laurent_quotient_dim(&f, &g).finite().map(|q| 2 * q);
    let torus = canonicalize_torus([3 * a, 3 * b], [c + a, d + b])?;
    let k_on_torus = compute_k_quotient(&f, &g, &torus);
    let predicted = 4 * delta.unsigned_abs() as usize;
    Ok(Theorem1Report {
        exponents: [a, b, c, d],
        delta,
        k_max_predicted: predicted,
        k_max_computed,
        torus_used: torus,
        k_on_torus,
        holds: k_max_computed == Some(predicted) && k_on_torus == predicted,
    })
}

/// Every `(a, b, c, d)` with entries in `[-r, r]` and nonzero determinant.
pub fn theorem1_sweep(r: i64) -> Vec<Theorem1Report> {
    let mut cases = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    if a * d - b * c != 0 {
                        cases.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    cases
        .par_iter()
        .map(|&[a, b, c, d]| verify_theorem1(a, b, c, d).expect("nonzero determinant"))
        .collect()
}

/// Written next to every search result so scores from other measures are not mixed up.
pub const LOCALITY_METRIC: &str =
    "max squared periodic distance between qubits of one check, quarter-cell units";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub version: String,
    pub locality_metric: String,
    pub config_hash: String,
    pub seed: u64,
    pub config: SearchConfig,
    pub completed: BTreeSet<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SizeSummary {
    pub n: usize,
    pub candidates: usize,
    pub records: usize,
    pub resumed: usize,
    pub winner: Option<CodeRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub config_hash: String,
    pub locality_metric: &'static str,
    pub sizes: Vec<SizeSummary>,
    /// Candidates whose exact distance hit the budget.
    pub downgraded: usize,
}

impl SearchReport {
    pub fn winners(&self) -> Vec<&CodeRecord> {
        self.sizes
            .iter()
            .filter_map(|s| s.winner.as_ref())
            .collect()
    }
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut p = out.as_os_str().to_owned();
    p.push(".manifest.json");
    PathBuf::from(p)
}

fn write_manifest(path: &Path, m: &Manifest) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string_pretty(m)?)?;
    fs::rename(tmp, path)?;
    Ok(())
}

/// Records already on disk; a torn final line is ignored.
fn load_records(path: &Path) -> Result<Vec<CodeRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for line in BufReader::new(File::open(path)?).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str(&line) {
            Ok(r) => out.push(r),
            Err(e) => debug!("skipping unreadable record: {e}"),
        }
    }
    Ok(out)
}

const CHUNK: usize = 256;

/// Run the sweep over `n_min..=n_max`, resuming from `config.out` when present.
pub fn run_search(config: &SearchConfig) -> Result<SearchReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| search_in_pool(config))
}

fn search_in_pool(config: &SearchConfig) -> Result<SearchReport> {
    let hash = config.hash();
    let mut manifest = Manifest {
        version: env!("CARGO_PKG_VERSION").to_string(),
        locality_metric: LOCALITY_METRIC.to_string(),
        config_hash: hash.clone(),
        seed: config.seed,
        config: config.clone(),
        completed: BTreeSet::new(),
    };
    let mut existing = Vec::new();
    let mut writer = None;
    if let Some(out) = &config.out {
        let mpath = manifest_path(out);
        if mpath.exists() {
            let old: Manifest = serde_json::from_str(&fs::read_to_string(&mpath)?)?;
            if old.config_hash != hash {
                return Err(Error::ManifestMismatch(old.config_hash));
            }
            manifest.completed = old.completed;
            existing = load_records(out)?;
        }
        write_manifest(&mpath, &manifest)?;
        writer = Some(OpenOptions::new().create(true).append(true).open(out)?);
    }

    let mut sizes = Vec::new();
    let mut downgraded = 0;
    for n in (config.n_min.max(2)..=config.n_max).filter(|n| n % 2 == 0) {
        let done: Vec<CodeRecord> = existing.iter().filter(|r| r.n == n).cloned().collect();
        let done_keys: HashSet<String> = done.iter().map(CodeRecord::key).collect();
        let candidates = enumerate_candidates(n)?;
        let mut records = done.clone();
        if !manifest.completed.contains(&n) {
            let todo: Vec<&Candidate> = candidates
                .iter()
                .filter(|c| !done_keys.contains(&c.key()))
                .collect();
            for chunk in todo.chunks(CHUNK) {
                let fresh: Vec<Option<CodeRecord>> = chunk
                    .par_iter()
                    .map(|c| evaluate_candidate(&c.f, &c.torus, config))
                    .collect::<Result<_>>()?;
                let fresh: Vec<CodeRecord> = fresh.into_iter().flatten().collect();
                if let Some(w) = writer.as_mut() {
                    for r in &fresh {
                        writeln!(w, "{}", serde_json::to_string(r)?)?;
                    }
                    w.flush()?;
                }
                records.extend(fresh);
            }
            manifest.completed.insert(n);
            if let Some(out) = &config.out {
                write_manifest(&manifest_path(out), &manifest)?;
            }
        }
        // order by key so the reduction does not depend on arrival order
        records.sort_by_key(CodeRecord::key);
        downgraded += records
            .iter()
            .filter(|r| r.distance.status == Status::UpperBound && config.distance.exact_for(r.n))
            .count();
        let winner = rank_and_select(&records).ok().cloned();
        info!(
            "n={n}: {} candidates, {} records, winner {}",
            candidates.len(),
            records.len(),
            winner
                .as_ref()
                .map_or("-".into(), |w| format!("{} {}", w.label(), w.f))
        );
        sizes.push(SizeSummary {
            n,
            candidates: candidates.len(),
            records: records.len(),
            resumed: done.len(),
            winner,
        });
    }
    Ok(SearchReport {
        config_hash: hash,
        locality_metric: LOCALITY_METRIC,
        sizes,
        downgraded,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub label: String,
    pub table: u8,
    pub n: usize,
    pub k_expected: usize,
    pub k_quotient: usize,
    pub k_rank: usize,
    pub k_pass: bool,
    pub d_expected: usize,
    pub distance: Option<DistanceResult>,
    /// `None` when distance was not computed for this row.
    pub d_pass: Option<bool>,
    /// Names each failing field with both values.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub rows: Vec<RowCheck>,
    pub passed: usize,
    pub failed: usize,
    pub downgraded: usize,
}

/// Recompute `k` (both ways) and, if `policy` is given, `d` for each row.
pub fn reproduce_table(
    rows: &[&TableRow],
    policy: Option<&DistancePolicy>,
    seed: u64,
) -> TableReport {
    let checks: Vec<RowCheck> = rows
        .iter()
        .map(|row| {
            let code = row.code();
            let kq = compute_k_quotient(&code.f, &code.g, &code.torus);
            let kr = compute_k_rank(&code);
            let mut failures = Vec::new();
            if kq != row.k {
                failures.push(format!("k (quotient): expected {}, got {kq}", row.k));
            }
            if kr != row.k {
                failures.push(format!("k (rank): expected {}, got {kr}", row.k));
            }
            let distance = policy.map(|p| p.run(&code, seed).expect("table rows encode qubits"));
            let d_pass = distance.as_ref().map(|r| r.d == row.d);
            if let Some(r) = &distance {
                if r.d != row.d {
                    failures.push(format!(
                        "d: expected {}, got {} ({:?})",
                        row.d, r.d, r.status
                    ));
                }
            }
            RowCheck {
                label: row.label(),
                table: row.table,
                n: row.n,
                k_expected: row.k,
                k_quotient: kq,
                k_rank: kr,
                k_pass: kq == row.k && kr == row.k,
                d_expected: row.d,
                distance,
                d_pass,
                failures,
            }
        })
        .collect();
    let failed = checks.iter().filter(|c| !c.failures.is_empty()).count();
    let downgraded = checks
        .iter()
        .filter(|c| {
            c.distance.as_ref().is_some_and(|r| {
                r.status == Status::UpperBound && policy.is_some_and(|p| p.exact_for(c.n))
            })
        })
        .count();
    TableReport {
        passed: checks.len() - failed,
        failed,
        downgraded,
        rows: checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::parse_poly;

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn candidate_streams() {
        assert!(enumerate_candidates(2).unwrap().is_empty());
        assert!(matches!(
            enumerate_candidates(7),
            Err(Error::InvalidQubitCount(7))
        ));
        let c16 = enumerate_candidates(16).unwrap();
        let t = canonicalize_torus([0, 4], [2, 2]).unwrap();
        assert!(c16.iter().any(|c| c.torus == t && c.f == p("1+x+y+y^3")));
        assert!(c16.iter().all(|c| c.f.len() == 4));
    }

    #[test]
    fn candidate_count_matches_direct_count() {
        // per torus: choose 2 of the cells other than those of 1 and x
        for n in [4usize, 8, 16, 24, 30] {
            let cells = n / 2;
            let mut expected = 0;
            for m in (1..=cells).filter(|m| cells % m == 0) {
                let l = cells / m;
                for q in 0..m {
                    // x lands on the cell of 1 only when l = 1 and q = 0
                    if l == 1 && q == 0 {
                        continue;
                    }
                    let free = cells - 2;
                    expected += free * free.saturating_sub(1) / 2;
                }
            }
            assert_eq!(enumerate_candidates(n).unwrap().len(), expected, "n={n}");
        }
    }

    #[test]
    fn evaluates_table_rows() {
        let cfg = SearchConfig::default();
        let r = evaluate_candidate(
            &p("1+x+y+y^-1"),
            &canonicalize_torus([0, 4], [2, 2]).unwrap(),
            &cfg,
        )
        .unwrap()
        .unwrap();
        assert_eq!((r.n, r.k, r.d), (16, 4, 4));
        assert_eq!(r.metric, Ratio::from_integer(4));
        let r = evaluate_candidate(
            &p("1+x+x^2*y+x^-1*y"),
            &canonicalize_torus([0, 7], [4, 3]).unwrap(),
            &cfg,
        )
        .unwrap()
        .unwrap();
        assert_eq!((r.n, r.k, r.d), (56, 6, 8));
        assert_eq!(r.metric, Ratio::new(48, 7));
        let strict = SearchConfig { min_k: 7, ..cfg };
        let none = evaluate_candidate(
            &p("1+x+x^2*y+x^-1*y"),
            &canonicalize_torus([0, 7], [4, 3]).unwrap(),
            &strict,
        );
        assert!(none.unwrap().is_none());
    }

    #[test]
    fn locality_units() {
        let t = canonicalize_torus([0, 10], [10, 0]).unwrap();
        assert_eq!(
            locality_score(&LaurentPoly::one(), &LaurentPoly::one(), &t),
            2
        );
        let f = p("1+x+y+y^-1");
        // corner y^-1 at (0,-1) and centre of y at (1/2, 3/2): 1/4 + 25/4
        assert_eq!(locality_score(&f, &f.antipode(), &t), 26);
    }

    #[test]
    fn selection_order() {
        let cfg = SearchConfig::default();
        let t = canonicalize_torus([0, 4], [2, 2]).unwrap();
        let a = evaluate_candidate(&p("1+x+y+y^3"), &t, &cfg)
            .unwrap()
            .unwrap();
        assert_eq!(rank_and_select(std::slice::from_ref(&a)).unwrap(), &a);
        assert!(matches!(rank_and_select(&[]), Err(Error::EmptyRecords)));
        let mut worse = a.clone();
        worse.metric = Ratio::new(3, 1);
        let mut farther = a.clone();
        farther.locality += 1;
        assert_eq!(rank_and_select(&[worse, farther, a.clone()]).unwrap(), &a);
    }

    #[test]
    fn theorem1_examples() {
        let r = verify_theorem1(1, 0, 0, 1).unwrap();
        assert_eq!(
            (r.k_max_predicted, r.k_max_computed, r.k_on_torus),
            (4, Some(4), 4)
        );
        assert_eq!(r.torus_used.cells(), 3);
        let r = verify_theorem1(2, 0, 0, 1).unwrap();
        assert!(r.holds && r.k_max_predicted == 8);
        let r = verify_theorem1(1, 2, 3, 1).unwrap();
        assert_eq!(r.delta, -5);
        assert!(r.holds && r.k_max_predicted == 20);
        assert!(matches!(verify_theorem1(1, 2, 2, 4), Err(Error::ZeroDelta)));
    }

    #[test]
    fn policy_parsing() {
        assert_eq!(
            DistancePolicy::parse("exact:64,randomized")
                .unwrap()
                .exact_max_n,
            Some(64)
        );
        assert_eq!(DistancePolicy::parse("exact").unwrap().exact_max_n, None);
        assert_eq!(
            DistancePolicy::parse("randomized").unwrap().exact_max_n,
            Some(0)
        );
        assert!(DistancePolicy::parse("ilp").is_err());
    }

    #[test]
    fn search_resumes_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = SearchConfig {
            n_min: 16,
            n_max: 16,
            out: Some(dir.path().join("r.jsonl")),
            jobs: 2,
            ..Default::default()
        };
        let first = run_search(&cfg).unwrap();
        let w = first.sizes[0].winner.clone().unwrap();
        assert_eq!((w.n, w.k, w.d), (16, 4, 4));
        let again = run_search(&cfg).unwrap();
        assert_eq!(again.sizes[0].resumed, first.sizes[0].records);
        assert_eq!(
            again.sizes[0].winner.as_ref().unwrap().without_stats(),
            w.without_stats()
        );
        let other = SearchConfig { seed: 9, ..cfg };
        assert!(matches!(
            run_search(&other),
            Err(Error::ManifestMismatch(_))
        ));
    }
}
