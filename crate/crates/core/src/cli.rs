//! The `sdbb` command line.
//!
//! Exit codes: 0 success, 1 other errors, 2 parse errors, 3 degenerate torus,
//! 4 ideal not zero-dimensional, 5 table mismatch, 6 exact distance cut short by
//! the budget (partial results are still printed).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::codebuilder::{
    build_code, compute_k_quotient, compute_k_rank, doubly_even_check, logical_basis,
};
use crate::distance::{
    distance_bruteforce, distance_exact, distance_upper_randomized, ExactOptions, Status,
};
use crate::error::Error;
use crate::gf2poly::groebner::{buchberger, MonomialOrder, PolyRing, QuotientDim};
use crate::gf2poly::{parse_poly, LaurentPoly};
use crate::logicalgates::gate_report;
use crate::search::{
    metric, reproduce_table, run_search, verify_theorem1, DistancePolicy, SearchConfig,
};
use crate::tables::rows_in;
use crate::torus::{canonicalize_torus, TwistedTorus};

/// Seed used when none is given; large table rows are checked against it.
pub const DEFAULT_SEED: u64 = 2024;

#[derive(Parser, Debug)]
#[command(
    name = "sdbb",
    version,
    about = "Self-dual bivariate bicycle codes on twisted tori"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Wall-clock budget in seconds for each exact distance run.
    #[arg(long, global = true)]
    pub budget: Option<f64>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// n, k and optionally d of one code.
    Params(ParamsArgs),
    /// Reduced Gröbner bases and quotient dimensions.
    Groebner(GroebnerArgs),
    /// Minimum distance of one code.
    Distance(DistanceArgs),
    /// Transversal CNOT, H and S checks.
    VerifyGates(CodeArgs),
    /// Exhaustive weight-8 search.
    Search(SearchArgs),
    /// Compare recomputed parameters with the published tables.
    Table(TableArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct CodeArgs {
    #[arg(long)]
    pub f: String,
    /// Second polynomial; defaults to the antipode of f.
    #[arg(long)]
    pub g: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a2: String,
}

#[derive(Args, Debug, Serialize)]
pub struct ParamsArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long)]
    pub with_distance: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct GroebnerArgs {
    #[command(subcommand)]
    pub mode: GroebnerMode,
}

#[derive(Subcommand, Debug, Serialize)]
pub enum GroebnerMode {
    /// f = 1 + x^a y^b + x^c y^d with its antipode.
    Theorem1 {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Polynomials with nonnegative exponents in the given variables.
    Custom {
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        /// Variable names, most significant first.
        #[arg(long, default_value = "x,y", value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum MethodArg {
    Exact,
    Brute,
    Randomized,
}

#[derive(Args, Debug, Serialize)]
pub struct DistanceArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long, value_enum, default_value = "exact")]
    pub method: MethodArg,
    #[arg(long)]
    pub wmax: Option<usize>,
    #[arg(long, default_value_t = 2000)]
    pub trials: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 16)]
    pub n_min: usize,
    #[arg(long, default_value_t = 16)]
    pub n_max: usize,
    #[arg(long, default_value_t = 4)]
    pub min_k: usize,
    #[arg(long, default_value = "exact:64,randomized")]
    pub distance: String,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct TableArgs {
    /// Which tables: 1, 2 or 1,2.
    #[arg(long, default_value = "1,2", value_delimiter = ',')]
    pub rows: Vec<u8>,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, default_value = "exact:110,randomized")]
    pub distance: String,
    #[arg(long, default_value_t = 2000)]
    pub trials: usize,
    /// Check k only.
    #[arg(long)]
    pub no_distance: bool,
}

#[derive(Debug, Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub version: String,
    pub config: Value,
    pub payload: Value,
    pub elapsed: f64,
}

/// Outcome of one invocation: exit code, standard output and diagnostics.
#[derive(Debug)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::DegenerateTorus => 3,
        Error::ZeroDelta => 4,
        _ => 1,
    }
}

fn parse_vec(text: &str) -> Result<[i64; 2], Error> {
    let parts: Vec<&str> = text
        .trim()
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .collect();
    let bad = |offset: usize| Error::Parse {
        offset,
        message: format!("expected two integers like 0,4, got {text:?}"),
    };
    if parts.len() != 2 {
        return Err(bad(0));
    }
    let a = parts[0].trim().parse().map_err(|_| bad(0))?;
    let b = parts[1]
        .trim()
        .parse()
        .map_err(|_| bad(parts[0].len() + 1))?;
    Ok([a, b])
}

struct Parsed {
    f: LaurentPoly,
    g: Option<LaurentPoly>,
    torus: TwistedTorus,
}

fn parse_code(args: &CodeArgs) -> Result<Parsed, Error> {
    let f = parse_poly(&args.f)?;
    let g = args.g.as_deref().map(parse_poly).transpose()?;
    let a1 = parse_vec(&args.a1)?;
    let a2 = parse_vec(&args.a2)?;
    Ok(Parsed {
        f,
        g,
        torus: canonicalize_torus(a1, a2)?,
    })
}

/// Result of a command before it is wrapped: payload plus a non-error exit code.
struct Done {
    payload: Value,
    code: i32,
    text: Option<String>,
}

impl Done {
    fn ok(payload: Value) -> Self {
        Done {
            payload,
            code: 0,
            text: None,
        }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run_cli<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> CliOutcome {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .expect("thread pool");
    let (name, config) = describe(cli);
    let result = pool.install(|| dispatch(cli));
    match result {
        Ok(done) => {
            let env = OutputEnvelope {
                command: name,
                version: env!("CARGO_PKG_VERSION").to_string(),
                config,
                payload: done.payload,
                elapsed: start.elapsed().as_secs_f64(),
            };
            let stdout = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&env).expect("envelope serializes") + "\n"
                }
                Format::Table => done.text.unwrap_or_else(|| render_plain(&env.payload)),
            };
            CliOutcome {
                code: done.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CliOutcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn describe(cli: &Cli) -> (String, Value) {
    let globals =
        json!({ "seed": cli.seed.unwrap_or(DEFAULT_SEED), "budget": cli.budget, "jobs": cli.jobs });
    let (name, args) = match &cli.command {
        Command::Params(a) => ("params", serde_json::to_value(a)),
        Command::Groebner(a) => ("groebner", serde_json::to_value(a)),
        Command::Distance(a) => ("distance", serde_json::to_value(a)),
        Command::VerifyGates(a) => ("verify-gates", serde_json::to_value(a)),
        Command::Search(a) => ("search", serde_json::to_value(a)),
        Command::Table(a) => ("table", serde_json::to_value(a)),
    };
    let mut config = args.expect("arguments serialize");
    if let Value::Object(m) = &mut config {
        m.insert("global".into(), globals);
    }
    (name.to_string(), config)
}

fn dispatch(cli: &Cli) -> Result<Done, Error> {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let budget = cli.budget.map(Duration::from_secs_f64);
    match &cli.command {
        Command::Params(a) => cmd_params(a, seed, budget),
        Command::Groebner(a) => cmd_groebner(&a.mode),
        Command::Distance(a) => cmd_distance(a, seed, budget),
        Command::VerifyGates(a) => cmd_verify_gates(a),
        Command::Search(a) => cmd_search(a, cli),
        Command::Table(a) => cmd_table(a, seed, cli.budget),
    }
}

fn cmd_params(a: &ParamsArgs, seed: u64, budget: Option<Duration>) -> Result<Done, Error> {
    let p = parse_code(&a.code)?;
    let code = build_code(&p.f, &p.torus, p.g.as_ref());
    let k = compute_k_rank(&code);
    let de = doubly_even_check(&code);
    let mut payload = json!({
        "n": code.n,
        "k": k,
        "k_quotient": compute_k_quotient(&code.f, &code.g, &code.torus),
        "self_dual": de.self_dual,
        "doubly_even": de.condition_holds,
        "torus": code.torus,
    });
    let mut exit = 0;
    if a.with_distance && k > 0 {
        let basis = logical_basis(&code)?;
        let opts = ExactOptions {
            budget,
            seed,
            trials: if budget.is_some() { 200 } else { 0 },
            parallel: true,
        };
        let r = distance_exact(&code, &basis, &opts)?;
        if r.status == Status::UpperBound {
            exit = 6;
        }
        let m = metric(code.n, k, r.d);
        payload["d"] = json!(r.d);
        payload["metric"] = json!(format!("{m}"));
        payload["metric_value"] = json!(*m.numer() as f64 / *m.denom() as f64);
        payload["distance"] = serde_json::to_value(&r)?;
    }
    Ok(Done {
        payload,
        code: exit,
        text: None,
    })
}

fn cmd_groebner(mode: &GroebnerMode) -> Result<Done, Error> {
    match mode {
        GroebnerMode::Theorem1 { a, b, c, d } => {
            let report = verify_theorem1(*a, *b, *c, *d)?;
            // M = x^a y^b, N = x^c y^d: f = 1 + M + N and MN times the antipode
            let ring = PolyRing::new(&["M", "N"], MonomialOrder::lex(&[1, 0]));
            let inputs = [
                ring.parse("1 + M + N").expect("fixed input"),
                ring.parse("M + N + M*N").expect("fixed input"),
            ];
            let gb = buchberger(&ring, &inputs);
            let dim = gb.staircase_dimension();
            let standard: Vec<String> = gb
                .standard_monomials()
                .unwrap_or_default()
                .iter()
                .map(|t| ring.display_monomial(t))
                .collect();
            let payload = json!({
                "variables": { "M": format!("x^{a}*y^{b}"), "N": format!("x^{c}*y^{d}") },
                "order": "lex N > M",
                "inputs": inputs.iter().map(|p| ring.display(p)).collect::<Vec<_>>(),
                "basis": gb.display(),
                "standard_monomials": standard,
                "dimension": dim,
                "delta": report.delta,
                "k_max": report.k_max_predicted,
                "k_max_laurent": report.k_max_computed,
                "torus": report.torus_used,
                "k_on_torus": report.k_on_torus,
                "holds": report.holds,
            });
            let code = if dim == QuotientDim::Infinite { 4 } else { 0 };
            Ok(Done {
                payload,
                code,
                text: None,
            })
        }
        GroebnerMode::Custom { gens, vars, order } => {
            let names: Vec<&str> = vars.iter().map(String::as_str).collect();
            let order = match order {
                OrderArg::Lex => MonomialOrder::lex(&(0..names.len()).collect::<Vec<_>>()),
                OrderArg::Grevlex => MonomialOrder::DegRevLex,
            };
            let ring = PolyRing::new(&names, order);
            let polys = gens
                .iter()
                .map(|g| {
                    ring.parse(g).ok_or_else(|| Error::Parse {
                        offset: 0,
                        message: format!("cannot read {g:?} over variables {}", vars.join(",")),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let gb = buchberger(&ring, &polys);
            let dim = gb.staircase_dimension();
            let standard = gb.standard_monomials().map(|v| {
                v.iter()
                    .map(|t| ring.display_monomial(t))
                    .collect::<Vec<_>>()
            });
            let payload = json!({
                "basis": gb.display(),
                "standard_monomials": standard,
                "dimension": dim,
            });
            let code = if dim == QuotientDim::Infinite { 4 } else { 0 };
            Ok(Done {
                payload,
                code,
                text: None,
            })
        }
    }
}

fn cmd_distance(a: &DistanceArgs, seed: u64, budget: Option<Duration>) -> Result<Done, Error> {
    let p = parse_code(&a.code)?;
    let code = build_code(&p.f, &p.torus, p.g.as_ref());
    let basis = logical_basis(&code)?;
    let (payload, exit) = match a.method {
        MethodArg::Exact => {
            let opts = ExactOptions {
                budget,
                seed,
                trials: if budget.is_some() { a.trials } else { 0 },
                parallel: true,
            };
            let r = distance_exact(&code, &basis, &opts)?;
            let exit = if r.status == Status::UpperBound { 6 } else { 0 };
            (serde_json::to_value(&r)?, exit)
        }
        MethodArg::Brute => {
            let w_max = a.wmax.unwrap_or(code.n);
            match distance_bruteforce(&code, &basis, w_max)? {
                Some(r) => (serde_json::to_value(&r)?, 0),
                None => (json!({ "status": "NOT_FOUND", "w_max": w_max }), 0),
            }
        }
        MethodArg::Randomized => (
            serde_json::to_value(distance_upper_randomized(&code, &basis, a.trials, seed)?)?,
            0,
        ),
    };
    Ok(Done {
        payload,
        code: exit,
        text: None,
    })
}

fn cmd_verify_gates(a: &CodeArgs) -> Result<Done, Error> {
    let p = parse_code(a)?;
    let code = build_code(&p.f, &p.torus, p.g.as_ref());
    let basis = logical_basis(&code)?;
    Ok(Done::ok(serde_json::to_value(gate_report(&code, &basis))?))
}

fn policy(spec: &str, trials: usize, budget: Option<f64>) -> Result<DistancePolicy, Error> {
    let mut p = DistancePolicy::parse(spec)?;
    p.trials = trials;
    p.budget_secs = budget;
    Ok(p)
}

fn cmd_search(a: &SearchArgs, cli: &Cli) -> Result<Done, Error> {
    let config = SearchConfig {
        n_min: a.n_min,
        n_max: a.n_max,
        min_k: a.min_k,
        distance: policy(&a.distance, a.trials, cli.budget)?,
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        out: a.out.clone(),
        jobs: cli.jobs,
        ..Default::default()
    };
    let report = run_search(&config)?;
    let mut text = String::new();
    for s in &report.sizes {
        match &s.winner {
            Some(w) => writeln!(
                text,
                "{:<16} {:<30} ({},{}) ({},{})  {:.2}  locality {}",
                w.label(),
                w.f.to_string(),
                w.torus.a1[0],
                w.torus.a1[1],
                w.torus.a2[0],
                w.torus.a2[1],
                w.metric_f64(),
                w.locality
            ),
            None => writeln!(text, "n={:<14} no code with k >= {}", s.n, a.min_k),
        }
        .expect("write to string");
    }
    let code = if report.downgraded > 0 { 6 } else { 0 };
    Ok(Done {
        payload: serde_json::to_value(&report)?,
        code,
        text: Some(text),
    })
}

fn cmd_table(a: &TableArgs, seed: u64, budget: Option<f64>) -> Result<Done, Error> {
    let rows: Vec<_> = rows_in(&a.rows)
        .into_iter()
        .filter(|r| a.max_n.is_none_or(|m| r.n <= m))
        .collect();
    let pol = if a.no_distance {
        None
    } else {
        Some(policy(&a.distance, a.trials, budget)?)
    };
    let report = reproduce_table(&rows, pol.as_ref(), seed);
    let mut text = String::new();
    for (row, check) in rows.iter().zip(&report.rows) {
        let status = if check.failures.is_empty() {
            "pass".to_string()
        } else {
            format!("FAIL {}", check.failures.join("; "))
        };
        let d = check.distance.as_ref().map_or("-".to_string(), |r| {
            format!(
                "d={}{}",
                r.d,
                if r.status == Status::Exact {
                    ""
                } else {
                    " (upper bound)"
                }
            )
        });
        writeln!(
            text,
            "{:<14} {:<30} ({},{}) ({},{})  {:<6} {:<20} {}",
            row.label(),
            row.f,
            row.a1[0],
            row.a1[1],
            row.a2[0],
            row.a2[1],
            row.metric,
            d,
            status
        )
        .expect("write to string");
    }
    writeln!(text, "{}/{} rows pass", report.passed, report.rows.len()).expect("write to string");
    let code = if report.failed > 0 {
        5
    } else if report.downgraded > 0 {
        6
    } else {
        0
    };
    Ok(Done {
        payload: serde_json::to_value(&report)?,
        code,
        text: Some(text),
    })
}

fn render_plain(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(m) = v {
        for (k, val) in m {
            let shown = match val {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(out, "{k}: {shown}").expect("write to string");
        }
    } else {
        writeln!(out, "{v}").expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, Value) {
        let out = run_cli(std::iter::once("sdbb").chain(args.iter().copied()));
        let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
        (out.code, v)
    }

    #[test]
    fn params_examples() {
        let (code, v) = run_args(&[
            "params",
            "--f",
            "1+x+y+y^-1",
            "--a1",
            "0,4",
            "--a2",
            "2,2",
            "--with-distance",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            (
                v["payload"]["n"].as_u64(),
                v["payload"]["k"].as_u64(),
                v["payload"]["d"].as_u64()
            ),
            (Some(16), Some(4), Some(4))
        );
        assert_eq!(v["command"], "params");
        let (code, v) = run_args(&["params", "--f", "1", "--a1", "0,1", "--a2", "1,0"]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["n"], 2);
        assert_eq!(v["payload"]["k"], 0);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_args(&["params", "--f", "1+z", "--a1", "0,4", "--a2", "2,2"]).0,
            2
        );
        assert_eq!(
            run_args(&["params", "--f", "1+x", "--a1", "1,2", "--a2", "2,4"]).0,
            3
        );
        assert_eq!(run_args(&["groebner", "custom", "--gen", "x"]).0, 4);
        assert_eq!(
            run_args(&["groebner", "theorem1", "--a", "1", "--b", "2", "--c", "2", "--d", "4"]).0,
            4
        );
        assert_eq!(run_args(&["frobnicate"]).0, 2);
    }

    #[test]
    fn groebner_modes() {
        let (code, v) = run_args(&[
            "groebner", "theorem1", "--a", "1", "--b", "0", "--c", "0", "--d", "1",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["dimension"], 2);
        assert_eq!(v["payload"]["k_max"], 4);
        let (_, v) = run_args(&[
            "groebner", "theorem1", "--a", "2", "--b", "1", "--c", "1", "--d", "2",
        ]);
        assert_eq!(v["payload"]["k_max"], 12);
        assert_eq!(v["payload"]["k_max_laurent"], 12);
        let (code, v) = run_args(&["groebner", "custom", "--gen", "x^2 + 1", "--gen", "y + x"]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["dimension"], 2);
    }

    #[test]
    fn distance_methods() {
        let base = [
            "distance",
            "--f",
            "1+x+y+y^-1",
            "--a1",
            "0,4",
            "--a2",
            "2,2",
        ];
        let with = |extra: &[&str]| run_args(&[&base[..], extra].concat());
        assert_eq!(with(&["--method", "exact"]).1["payload"]["d"], 4);
        assert_eq!(
            with(&["--method", "brute", "--wmax", "3"]).1["payload"]["status"],
            "NOT_FOUND"
        );
        let (_, v) = with(&["--method", "randomized", "--trials", "20", "--seed", "3"]);
        assert_eq!(v["payload"]["status"], "UPPER_BOUND");
        assert_eq!(v["payload"]["stats"]["seed"], 3);
    }

    #[test]
    fn gates_and_table() {
        let (code, v) = run_args(&[
            "verify-gates",
            "--f",
            "1+x+y+y^-1",
            "--a1",
            "0,4",
            "--a2",
            "2,2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["doubly_even"], true);
        for g in ["CNOT", "H", "S"] {
            assert_eq!(v["payload"]["gates"][g]["preserved"], true);
        }
        let (code, v) = run_args(&["table", "--rows", "1", "--max-n", "40"]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["passed"], 6);
    }

    #[test]
    fn table_format_lists_rows() {
        let out = run_cli([
            "sdbb", "table", "--rows", "1", "--max-n", "16", "--format", "table",
        ]);
        assert!(out.stdout.starts_with("[[16,4,4]]"));
        assert!(out.stdout.contains("(0,4) (2,2)"));
    }
}
