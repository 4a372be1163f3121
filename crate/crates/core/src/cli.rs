//! The `wrd` command line. [`run`] takes the arguments (without the program
//! name) and a stdin reader, and returns what to print and the exit code, so
//! it can be driven from tests.
//!
//! Exit codes: 0 success, 1 I/O failure or invalid certificate, 2 usage or
//! input error, 3 solver budget exhausted, 4 claim violated under `--strict`.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::generators::{generate, random_connected, FamilySpec};
use crate::graph::Graph;
use crate::products::{corona, lexicographic, ProductGraph, Sidecar};
use crate::solvers::{oracle, solve, solve_product, Certificate, Invariant, SolverConfig};
use crate::theorems::{find_claim, registry, summary_table, verify_claim, ClaimKind, ClaimReport, Instance, Named, Tally, Verdict};

#[derive(Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "wrd", version, about = "Weak Roman domination toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a family member (or `random <n> <p>`) as an edge list.
    Generate {
        family: String,
        params: Vec<String>,
        /// Seed for `random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build `G∘H` or `G⊙H` from two edge-list files (`-` for stdin).
    Product {
        kind: Kind,
        g: String,
        h: String,
        /// Write the index map here.
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Compute an invariant exactly.
    Solve {
        invariant: String,
        file: Option<String>,
        /// Sidecar from `product`; enables product-aware bounds.
        #[arg(long)]
        sidecar: Option<String>,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check claims on one instance, a claim's sweep, or the whole registry.
    Verify(VerifyArgs),
    /// Exhaustive reference value for small graphs.
    Oracle {
        invariant: String,
        file: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Order, size, degrees, connectivity and diameter.
    Info {
        file: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check a certificate from `solve --json` against the raw predicate.
    VerifyCert {
        invariant: String,
        file: Option<String>,
        #[arg(long)]
        cert: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Lex,
    Corona,
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Search-node budget; exhausting it exits with code 3.
    #[arg(long)]
    budget: Option<u64>,
    /// Turn off the derived lower bounds.
    #[arg(long)]
    plain: bool,
    /// Report wall time in `millis` (otherwise 0, keeping output reproducible).
    #[arg(long)]
    time: bool,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        let base = if self.plain { SolverConfig::plain() } else { SolverConfig::default() };
        SolverConfig { shards: self.shards, node_budget: self.budget, record_time: self.time, ..base }
    }
}

#[derive(Args)]
struct VerifyArgs {
    claim: Option<String>,
    /// Outer graph as a family spec, e.g. `path:7` or `"hk 4 2 2 2 2"`.
    #[arg(long, conflicts_with = "g_file")]
    g: Option<String>,
    #[arg(long)]
    g_file: Option<String>,
    /// Second graph, same forms as `--g`.
    #[arg(long, conflicts_with = "h_file")]
    h: Option<String>,
    #[arg(long)]
    h_file: Option<String>,
    /// Vertex tuple for the claim, e.g. `1,2,3,4`.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    /// Run the claim's sweep with outer graphs up to this order.
    #[arg(long, num_args = 0..=1, default_missing_value = "8", conflicts_with_all = ["g", "g_file"])]
    sweep: Option<usize>,
    /// Run every registered claim's sweep and print a summary table.
    #[arg(long, conflicts_with_all = ["claim", "sweep", "g", "g_file", "list"])]
    all: bool,
    /// Order cap for `--all`.
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// List the registered claims.
    #[arg(long, conflicts_with_all = ["claim", "sweep", "g", "g_file"])]
    list: bool,
    /// Exit with code 4 if any claim is violated.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    solver: SolverArgs,
}

/// A failure with its exit code.
struct Fail(i32, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded { .. }) { 3 } else { 2 };
        Fail(code, e.to_string())
    }
}

type Out = std::result::Result<(String, i32), Fail>;

struct Io<R> {
    stdin: Option<R>,
}

impl<R: Read> Io<R> {
    fn read(&mut self, path: Option<&str>) -> std::result::Result<String, Fail> {
        match path {
            None | Some("-") => {
                let mut r = self.stdin.take().ok_or_else(|| Fail(2, "stdin can be read only once".into()))?;
                let mut s = String::new();
                r.read_to_string(&mut s).map_err(|e| Fail(1, format!("stdin: {e}")))?;
                Ok(s)
            }
            Some(p) => fs::read_to_string(p).map_err(|e| Fail(1, format!("{p}: {e}"))),
        }
    }

    fn graph(&mut self, path: Option<&str>) -> std::result::Result<Graph, Fail> {
        let text = self.read(path)?;
        Graph::parse_edge_list(&text).map_err(|e| Fail(2, format!("{}: {e}", path.unwrap_or("stdin"))))
    }
}

/// Runs one command.
pub fn run<I, S, R>(args: I, stdin: R) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
    R: Read,
{
    let argv = std::iter::once("wrd".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut io = Io { stdin: Some(stdin) };
    match dispatch(cli.cmd, &mut io) {
        Ok((stdout, code)) => CliOutput { code, stdout, stderr: String::new() },
        Err(Fail(code, msg)) => CliOutput { code, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn dispatch<R: Read>(cmd: Cmd, io: &mut Io<R>) -> Out {
    match cmd {
        Cmd::Generate { family, params, seed } => cmd_generate(&family, &params, seed),
        Cmd::Product { kind, g, h, sidecar } => cmd_product(io, kind, &g, &h, sidecar.as_deref()),
        Cmd::Solve { invariant, file, sidecar, solver, json } => {
            cmd_solve(io, &invariant, file.as_deref(), sidecar.as_deref(), &solver, json)
        }
        Cmd::Verify(v) => cmd_verify(io, v),
        Cmd::Oracle { invariant, file, json } => {
            let inv: Invariant = invariant.parse()?;
            let g = io.graph(file.as_deref())?;
            let v = oracle(inv, &g)?;
            Ok((if json { format!("{}\n", json!({"schema": "1", "invariant": inv.id(), "value": v})) } else { format!("{inv} = {v}\n") }, 0))
        }
        Cmd::Info { file, json } => cmd_info(&io.graph(file.as_deref())?, json),
        Cmd::VerifyCert { invariant, file, cert } => cmd_verify_cert(io, &invariant, file.as_deref(), &cert),
    }
}

/// Tokens of a family spec written with spaces, colons or commas.
fn spec_tokens(s: &str) -> Vec<&str> {
    s.split(|c: char| c.is_whitespace() || c == ':' || c == ',').filter(|t| !t.is_empty()).collect()
}

fn random_from(params: &[&str], seed: Option<u64>) -> std::result::Result<Graph, Fail> {
    let bad = || Fail(2, "random takes <n> <p> (and a seed)".into());
    let n: usize = params.first().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let p: f64 = params.get(1).and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let seed = match seed {
        Some(s) => s,
        None => params.get(2).map_or(Ok(0), |t| t.parse().map_err(|_| bad()))?,
    };
    Ok(random_connected(n, p, seed)?)
}

fn cmd_generate(family: &str, params: &[String], seed: u64) -> Out {
    let g = if family == "random" {
        random_from(&params.iter().map(String::as_str).collect::<Vec<_>>(), Some(seed))?
    } else {
        let mut tokens = vec![family.to_string()];
        tokens.extend(params.iter().cloned());
        generate(&FamilySpec::parse(&tokens)?)?
    };
    Ok((g.to_edge_list(), 0))
}

fn cmd_product<R: Read>(io: &mut Io<R>, kind: Kind, g: &str, h: &str, sidecar: Option<&str>) -> Out {
    if g == "-" && h == "-" {
        return Err(Fail(2, "only one factor can come from stdin".into()));
    }
    let (g, h) = (io.graph(Some(g))?, io.graph(Some(h))?);
    let p = match kind {
        Kind::Lex => lexicographic(&g, &h)?,
        Kind::Corona => corona(&g, &h)?,
    };
    if let Some(path) = sidecar {
        let text = serde_json::to_string_pretty(&p.sidecar()).expect("serializable");
        fs::write(path, text + "\n").map_err(|e| Fail(1, format!("{path}: {e}")))?;
    }
    Ok((p.graph().to_edge_list(), 0))
}

fn cmd_solve<R: Read>(io: &mut Io<R>, inv: &str, file: Option<&str>, sidecar: Option<&str>, args: &SolverArgs, json: bool) -> Out {
    let inv: Invariant = inv.parse()?;
    let g = io.graph(file)?;
    let cfg = args.config();
    let r = match sidecar {
        None => solve(inv, &g, &cfg)?,
        Some(path) => {
            let text = io.read(Some(path))?;
            let sc: Sidecar = serde_json::from_str(&text).map_err(|e| Fail(2, format!("{path}: {e}")))?;
            let p = ProductGraph::from_sidecar(&sc)?;
            if p.graph() != &g {
                return Err(Fail(2, format!("{path}: sidecar does not describe this graph")));
            }
            solve_product(inv, &p, &cfg)?
        }
    };
    if json {
        return Ok((r.to_json() + "\n", 0));
    }
    let mut s = format!("{inv} = {}\n", r.value);
    match &r.certificate {
        Certificate::Set(set) => s += &format!("set: {:?}\n", set.to_vec()),
        Certificate::Function(f) => s += &format!("V1: {:?}\nV2: {:?}\n", f.v1().to_vec(), f.v2().to_vec()),
    }
    s += &format!("nodes: {}\n", r.nodes);
    Ok((s, 0))
}

fn cmd_info(g: &Graph, json: bool) -> Out {
    let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
    let (lo, hi, diam) = (g.min_degree(), g.max_degree(), g.diameter());
    if json {
        let v = json!({
            "n": g.n(), "m": g.m(), "tree": g.is_tree(), "connected": g.is_connected(),
            "min_degree": lo, "max_degree": hi, "components": sizes.len(),
            "component_sizes": sizes, "diameter": diam,
        });
        return Ok((format!("{v}\n"), 0));
    }
    let opt = |x: Option<usize>| x.map_or("none".to_string(), |d| d.to_string());
    Ok((
        format!(
            "n={} m={} tree={} connected={} min_degree={} max_degree={} components={} component_sizes={:?} diameter={}\n",
            g.n(),
            g.m(),
            g.is_tree(),
            g.is_connected(),
            opt(lo),
            opt(hi),
            sizes.len(),
            sizes,
            opt(diam)
        ),
        0,
    ))
}

fn cmd_verify_cert<R: Read>(io: &mut Io<R>, inv: &str, file: Option<&str>, cert: &str) -> Out {
    let inv: Invariant = inv.parse()?;
    let g = io.graph(file)?;
    let text = io.read(Some(cert))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Fail(2, format!("{cert}: {e}")))?;
    // either a `solve --json` result or a bare certificate
    let (body, claimed) = match v.get("certificate") {
        Some(c) => {
            if let Some(id) = v.get("invariant").and_then(|x| x.as_str()) {
                if id != inv.id() {
                    return Err(Fail(2, format!("certificate is for {id}, not {inv}")));
                }
            }
            (c, v.get("value").and_then(|x| x.as_u64()))
        }
        None => (&v, None),
    };
    let c = Certificate::from_json(body, g.n())?;
    let ok = c.validates(inv, &g) && claimed.map_or(true, |w| w == c.value() as u64);
    if ok {
        Ok((format!("valid {inv} certificate of weight {}\n", c.value()), 0))
    } else if !c.validates(inv, &g) {
        Ok((format!("invalid: not a {inv} certificate\n"), 1))
    } else {
        Ok((format!("invalid: weight {} does not match the stated value\n", c.value()), 1))
    }
}

fn named<R: Read>(io: &mut Io<R>, spec: Option<&str>, file: Option<&str>) -> std::result::Result<Option<Named>, Fail> {
    if let Some(path) = file {
        return Ok(Some(Named::custom(path, io.graph(Some(path))?)));
    }
    let Some(spec) = spec else { return Ok(None) };
    let tokens = spec_tokens(spec);
    if tokens.first() == Some(&"random") {
        return Ok(Some(Named::custom(format!("random({})", tokens[1..].join(",")), random_from(&tokens[1..], None)?)));
    }
    Ok(Some(Named::family(FamilySpec::parse(&tokens)?)?))
}

fn report_line(r: &ClaimReport) -> String {
    let mut parts = Vec::new();
    match (r.lhs, r.relation, r.rhs) {
        (Some(a), Some(rel), Some(b)) => parts.push(format!("{a} {rel} {b}")),
        (None, Some(rel), Some(b)) => parts.push(format!("value {rel} {b}")),
        _ => {}
    }
    if !r.detail.is_empty() {
        parts.push(r.detail.clone());
    }
    format!("{:<15} {} {}: {}\n", r.verdict.as_str(), r.claim, r.instance, parts.join("; "))
}

fn cmd_verify<R: Read>(io: &mut Io<R>, v: VerifyArgs) -> Out {
    if v.list {
        let mut s = String::new();
        for c in registry() {
            let kind = serde_json::to_value(c.kind).expect("serializable");
            s += &format!("{:<26} {:<12} {}\n", c.id, kind.as_str().unwrap_or_default(), c.statement);
        }
        return Ok((s, 0));
    }
    let cfg = v.solver.config();
    let mut reports = Vec::new();
    let mut out = String::new();
    if v.all {
        let mut rows = Vec::new();
        for c in registry() {
            let mut t = Tally::default();
            for inst in c.sweep(v.max_n) {
                let r = verify_claim(c.id, &inst, &cfg)?;
                t.add(r.verdict);
                reports.push(r);
            }
            rows.push((c, t));
        }
        if !v.json {
            out = summary_table(&rows);
        }
    } else {
        let id = v.claim.as_deref().ok_or_else(|| Fail(2, "give a claim id, --all or --list".into()))?;
        let claim = find_claim(id)?;
        let g = named(io, v.g.as_deref(), v.g_file.as_deref())?;
        let h = named(io, v.h.as_deref(), v.h_file.as_deref())?;
        match g {
            Some(g) => reports.push(verify_claim(id, &Instance { g, h, set: v.set.clone() }, &cfg)?),
            None => {
                if h.is_some() || v.set.is_some() {
                    return Err(Fail(2, "--h and --set need --g".into()));
                }
                for inst in claim.sweep(v.sweep.unwrap_or(v.max_n)) {
                    reports.push(verify_claim(id, &inst, &cfg)?);
                }
            }
        }
        if !v.json {
            out = reports.iter().map(report_line).collect();
        }
    }
    if v.json {
        out = reports.iter().map(|r| r.to_json() + "\n").collect();
    }
    let violated = reports.iter().any(|r| r.verdict == Verdict::Violated && r.kind != ClaimKind::Exploratory);
    let code = if v.strict && violated {
        4
    } else if reports.iter().any(|r| r.verdict == Verdict::BudgetExceeded) {
        3
    } else {
        0
    };
    Ok((out, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str, stdin: &str) -> CliOutput {
        run(args.split_whitespace(), stdin.as_bytes())
    }

    #[test]
    fn generate_then_solve() {
        let g = call("generate path 7", "");
        assert_eq!(g.code, 0);
        let s = call("solve gamma_r --json", &g.stdout);
        assert_eq!(s.code, 0, "{}", s.stderr);
        let v: serde_json::Value = serde_json::from_str(&s.stdout).unwrap();
        assert_eq!(v["value"], 3);
        assert_eq!(v["schema"], "1");
    }

    #[test]
    fn info_lines() {
        let comb = call("generate comb 6", "").stdout;
        assert!(call("info", &comb).stdout.starts_with("n=6 m=5 tree=true"));
        let out = call("info", &call("generate empty 3", "").stdout).stdout;
        assert!(out.contains("components=3"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call("solve gamma_t", "3 1\n0 1\n").code, 2);
        assert!(call("solve gamma_t", "3 1\n0 1\n").stderr.contains("total domination undefined"));
        let bad = call("info", "3 1\n0 x\n");
        assert_eq!(bad.code, 2);
        assert!(bad.stderr.contains("line 2"));
        assert_eq!(call("solve gamma_r --frobnicate", "").code, 2);
        assert_eq!(call("solve nope", "1 0\n").code, 2);
        let p = call("generate path 30", "").stdout;
        assert_eq!(call("solve gamma_r --budget 5", &p).code, 3);
    }

    #[test]
    fn verify_single_and_strict() {
        let ok = call("verify star_lex --g star:3 --h path:4", "");
        assert_eq!(ok.code, 0, "{}", ok.stderr);
        assert!(ok.stdout.starts_with("holds"));
        let bad = call("verify hk_base --g hk:4:1:1:1:1 --strict", "");
        assert_eq!(bad.code, 4);
        assert!(bad.stdout.starts_with("violated"));
        assert_eq!(call("verify --all --list", "").code, 2);
    }

    #[test]
    fn certificate_round_trip() {
        let dir = std::env::temp_dir().join(format!("wrd-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let cert = dir.join("c.json");
        let g = call("generate cycle 9", "").stdout;
        fs::write(&cert, call("solve gamma_r --json", &g).stdout).unwrap();
        let args = format!("verify-cert gamma_r --cert {}", cert.display());
        let r = call(&args, &g);
        assert_eq!(r.code, 0, "{}", r.stderr);
        fs::write(&cert, r#"{"V1":[0],"V2":[]}"#).unwrap();
        assert_eq!(call(&args, &g).code, 1);
        fs::remove_dir_all(&dir).unwrap();
    }
}
