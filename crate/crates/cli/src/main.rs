//! `cremona-lab`: command-line front end for the cremona-core toolkit.
//!
//! Every command prints a `CommandResult` JSON object on stdout:
//! `{"status": "ok"|"fail"|"error", "payload": ..., "seed_echo": ..., "timing": ms}`.
//! `status` maps to the process exit code: 0 for ok, 1 when a mathematical
//! verification fails, 2 on malformed input or misuse.  With `--pretty` a
//! human-readable summary is also written to stderr.  File arguments accept
//! `-` for stdin.  Commands that use randomness take `--seed`, defaulting to
//! the `CREMONA_LAB_SEED` environment variable, then 0; identical seeds give
//! byte-identical payloads.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cremona_core::catalog::{self, Level};
use cremona_core::constructions::{
    falpha, fn_map, glue, spampinato_lift, standard_involution, zorn_map, GlueBlock,
};
use cremona_core::cremona::{
    check_involution, multidegree, scheme_type, MapJson, RationalMap, MULTIDEGREE_TRIALS,
};
use cremona_core::groebner::hilbert::hilbert;
use cremona_core::groebner::{intersect, saturate, Ideal, IdealJson};
use cremona_core::jordan::{unitalize, Algebra, AlgebraJson};
use cremona_core::linalg::QMatrix;
use cremona_core::rng::SplitMix64;
use cremona_core::scalar::{parse_rat, Rat};
use cremona_core::Error;

#[derive(Parser)]
#[command(name = "cremona-lab", version, about = "Exact verification toolkit for quadro-quadric Cremona transformations and rank-3 Jordan algebras")]
struct Cli {
    /// Also print a human-readable summary to stderr
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify catalog tables or single entries
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Inspect algebras
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Operate on rational maps
    #[command(subcommand)]
    Map(MapCmd),
    /// Operate on polynomial ideals
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Build Cremona transformations from the constructive recipes
    #[command(subcommand)]
    Construct(ConstructCmd),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Verify a whole table: p2, p3, p4, p5, or nil
    Table {
        /// Table to verify: p2 | p3 | p4 | p5 | nil
        space: String,
        /// Skip the geometric (Groebner-heavy) checks
        #[arg(long)]
        fast: bool,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Verify a single catalog entry
    Entry {
        id: String,
        /// Also run the geometric checks (scheme type, multidegree, decomposition)
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Print invariants of a catalog algebra or an algebra JSON file
    Info {
        /// Catalog id (e.g. J5_9) or path to an algebra JSON file ("-" for stdin)
        target: String,
    },
}

#[derive(Subcommand)]
enum MapCmd {
    /// Check that a map is a Cremona involution and print its scaling factor
    CheckInvolution { file: String },
    /// Compute the multidegree of an involution by random linear sections
    Multidegree {
        file: String,
        #[command(flatten)]
        seed: SeedArg,
        /// Number of independent agreeing trials required
        #[arg(long, default_value_t = MULTIDEGREE_TRIALS)]
        trials: u32,
    },
    /// Classify the base scheme by its Hilbert polynomial
    Type { file: String },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Hilbert series, polynomial, dimension and degree of a homogeneous ideal
    Hilbert { file: String },
    /// Saturate the first ideal with respect to the second
    Saturate { ideal: String, by: String },
    /// Intersect two ideals
    Intersect { a: String, b: String },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The elementary involution F^(a1,a2,a3) of P^(2+a1+a2+a3)
    Falpha { a1: usize, a2: usize, a3: usize },
    /// The involution F_n of P^(2n) built from n quadratic blocks
    #[command(name = "fn")]
    FnMap { n: usize },
    /// The standard involution of P^(n-1) (needs n >= 3)
    Standard { n: usize },
    /// Spampinato lift: a quadratic involution of P^(n-1) to a cubo-cubic one of P^n
    Spampinato { file: String },
    /// Zorn-style cubic involution attached to a rank-3 algebra
    Zorn {
        /// Catalog id or path to an algebra JSON file ("-" for stdin)
        target: String,
        /// Verify the involution identity at 20 seeded rational points
        /// instead of symbolically (exact at each point)
        #[arg(long)]
        sampled: bool,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Glue semisimple and radical blocks from a GluingSpec JSON file
    Glue { file: String },
}

#[derive(Args)]
struct SeedArg {
    /// RNG seed (default: CREMONA_LAB_SEED environment variable, then 0)
    #[arg(long)]
    seed: Option<u64>,
}

impl SeedArg {
    fn resolve(&self) -> u64 {
        self.seed
            .or_else(|| std::env::var("CREMONA_LAB_SEED").ok()?.parse().ok())
            .unwrap_or(0)
    }
}

/// Outcome of a command: payload plus the verdict that picks the exit code.
struct Outcome {
    ok: bool,
    payload: Value,
    seed_echo: Option<u64>,
    summary: String,
}

impl Outcome {
    fn ok(payload: Value, summary: impl Into<String>) -> Self {
        Outcome { ok: true, payload, seed_echo: None, summary: summary.into() }
    }

    fn fail(payload: Value, summary: impl Into<String>) -> Self {
        Outcome { ok: false, payload, seed_echo: None, summary: summary.into() }
    }

    fn with_seed(mut self, seed: u64) -> Self {
        self.seed_echo = Some(seed);
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli.cmd);
    let ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(o) => {
            let mut out = json!({ "status": if o.ok { "ok" } else { "fail" }, "payload": o.payload });
            if let Some(s) = o.seed_echo {
                out["seed_echo"] = json!(s);
            }
            out["timing"] = json!(ms);
            println!("{out}");
            if cli.pretty {
                eprintln!("{} ({ms} ms)", o.summary);
            }
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            // mathematical verdicts exit 1; structural problems exit 2
            let tool_error = match &e {
                CliError::Core(err) => err.is_structural(),
                CliError::Tool(_) => true,
            };
            let status = if tool_error { "error" } else { "fail" };
            let out = json!({ "status": status, "payload": { "message": e.to_string() }, "timing": ms });
            println!("{out}");
            if cli.pretty {
                eprintln!("{status}: {e} ({ms} ms)");
            }
            ExitCode::from(if tool_error { 2 } else { 1 })
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Tool(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Tool(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn tool(msg: impl Into<String>) -> CliError {
    CliError::Tool(msg.into())
}

type CliResult = Result<Outcome, CliError>;

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| tool(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| tool(format!("reading {path}: {e}")))
    }
}

fn read_map(path: &str) -> Result<RationalMap, CliError> {
    let j: MapJson = serde_json::from_str(&read_input(path)?)
        .map_err(|e| tool(format!("{path}: bad map JSON: {e}")))?;
    Ok(RationalMap::from_json(&j)?)
}

fn read_ideal(path: &str) -> Result<Ideal, CliError> {
    let j: IdealJson = serde_json::from_str(&read_input(path)?)
        .map_err(|e| tool(format!("{path}: bad ideal JSON: {e}")))?;
    Ok(Ideal::from_json(&j)?)
}

/// Resolve a catalog id or an algebra JSON file to an algebra.
fn resolve_algebra(target: &str) -> Result<(String, Algebra), CliError> {
    match catalog::entry(target) {
        Ok(e) => Ok((e.id.clone(), e.algebra()?)),
        Err(Error::UnknownEntry(_)) => {
            if let Ok(a) = catalog::nilalgebra(target) {
                return Ok((target.to_string(), a));
            }
            if target != "-" && !std::path::Path::new(target).exists() {
                return Err(tool(format!(
                    "'{target}' is neither a catalog id nor a readable file"
                )));
            }
            let j: AlgebraJson = serde_json::from_str(&read_input(target)?)
                .map_err(|e| tool(format!("{target}: bad algebra JSON: {e}")))?;
            Ok((target.to_string(), Algebra::from_json(&j)?))
        }
        Err(e) => Err(e.into()),
    }
}

fn map_payload(f: &RationalMap) -> Value {
    serde_json::to_value(f.to_json()).expect("map serialization")
}

fn run(cmd: &Cmd) -> CliResult {
    match cmd {
        Cmd::Verify(v) => run_verify(v),
        Cmd::Algebra(AlgebraCmd::Info { target }) => run_algebra_info(target),
        Cmd::Map(m) => run_map(m),
        Cmd::Ideal(i) => run_ideal(i),
        Cmd::Construct(c) => run_construct(c),
    }
}

fn run_verify(cmd: &VerifyCmd) -> CliResult {
    match cmd {
        VerifyCmd::Table { space, fast, seed } => {
            let seed = seed.resolve();
            let level = if *fast { Level::Fast } else { Level::Full };
            let rows: Vec<(String, Result<(), Error>)> = match space.to_lowercase().as_str() {
                "nil" => catalog::catalog()
                    .nilalgebras
                    .iter()
                    .map(|n| (n.id.clone(), verify_nil(&n.id)))
                    .collect(),
                s @ ("p2" | "p3" | "p4" | "p5") => {
                    catalog::verify_table(Some(&s.to_uppercase()), level, seed)
                }
                other => return Err(tool(format!("unknown table '{other}': expected p2, p3, p4, p5 or nil"))),
            };
            let failures: Vec<Value> = rows
                .iter()
                .filter_map(|(id, r)| {
                    r.as_ref().err().map(|e| json!({ "id": id, "reason": e.to_string() }))
                })
                .collect();
            let pass = rows.len() - failures.len();
            let payload = json!({
                "space": space.to_lowercase(),
                "level": if *fast { "fast" } else { "full" },
                "pass": pass,
                "fail": failures.len(),
                "failures": failures,
            });
            let summary = format!("table {space}: {pass} passed, {} failed", failures.len());
            let out = if failures.is_empty() {
                Outcome::ok(payload, summary)
            } else {
                Outcome::fail(payload, summary)
            };
            Ok(out.with_seed(seed))
        }
        VerifyCmd::Entry { id, full, seed } => {
            let seed = seed.resolve();
            let e = catalog::entry(id)?;
            let level = if *full { Level::Full } else { Level::Fast };
            let payload_base = json!({
                "id": e.id,
                "space": e.space,
                "level": if *full { "full" } else { "fast" },
            });
            match catalog::verify_entry(e, level, seed) {
                Ok(()) => {
                    let mut p = payload_base;
                    p["ok"] = json!(true);
                    Ok(Outcome::ok(p, format!("{id}: all checks passed")).with_seed(seed))
                }
                Err(err) if err.is_structural() => Err(err.into()),
                Err(err) => {
                    let mut p = payload_base;
                    p["ok"] = json!(false);
                    p["reason"] = json!(err.to_string());
                    Ok(Outcome::fail(p, format!("{id}: FAILED: {err}")).with_seed(seed))
                }
            }
        }
    }
}

/// A nil building block verifies when it is non-unital and its
/// unitalization is a rank-3 Jordan algebra whose radical is the block.
fn verify_nil(id: &str) -> Result<(), Error> {
    let nil = catalog::nilalgebra(id)?;
    if nil.is_unital() {
        return Err(Error::math(format!("{id}: expected a non-unital algebra")));
    }
    let j = unitalize(&nil)?;
    j.check_jordan()?;
    let rank = j.rank()?;
    if rank != 3 {
        return Err(Error::WrongRank { found: rank, expected: 3 });
    }
    let rad = j.radical_dim()?;
    if rad != nil.dim() {
        return Err(Error::math(format!(
            "{id}: radical of the unitalization has dimension {rad}, expected {}",
            nil.dim()
        )));
    }
    Ok(())
}

fn run_algebra_info(target: &str) -> CliResult {
    let (name, alg) = resolve_algebra(target)?;
    let rank = alg.rank()?;
    let rad = alg.radical_dim()?;
    let mut payload = json!({
        "id": name,
        "dim": alg.dim(),
        "basis": alg.basis_names(),
        "unital": alg.is_unital(),
        "rank": rank,
        "radical_dim": rad,
        "jordan": alg.check_jordan().is_ok(),
    });
    if alg.is_unital() && rank == 3 {
        let (t, s, n) = alg.trace_forms()?;
        let adj = alg.adjoint_components()?;
        payload["trace"] = json!(t.to_string());
        payload["quadratic_trace"] = json!(s.to_string());
        payload["norm"] = json!(n.to_string());
        payload["adjoint"] = json!(adj.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        payload["adjoint_map"] = map_payload(&alg.adjoint_map()?);
    }
    let summary = format!("{name}: dim {}, rank {rank}, radical dim {rad}", alg.dim());
    Ok(Outcome::ok(payload, summary))
}

fn run_map(cmd: &MapCmd) -> CliResult {
    match cmd {
        MapCmd::CheckInvolution { file } => {
            let f = read_map(file)?;
            match check_involution(&f) {
                Ok(c) => {
                    let payload = json!({
                        "involution": true,
                        "degree": f.degree(),
                        "scaling": c.to_string(),
                    });
                    Ok(Outcome::ok(payload, format!("involution of degree {} with scaling {c}", f.degree())))
                }
                Err(e @ Error::NotInvolution { .. }) => {
                    let payload = json!({ "involution": false, "reason": e.to_string() });
                    Ok(Outcome::fail(payload, format!("not an involution: {e}")))
                }
                Err(e) => Err(e.into()),
            }
        }
        MapCmd::Multidegree { file, seed, trials } => {
            let f = read_map(file)?;
            let seed = seed.resolve();
            let md = multidegree(&f, seed, *trials)?;
            let md_str: Vec<String> = md.iter().map(|d| d.to_string()).collect();
            let payload = json!({ "mdeg": md_str, "seed": seed, "trials": trials });
            Ok(Outcome::ok(payload, format!("multidegree ({})", md_str.join(", "))).with_seed(seed))
        }
        MapCmd::Type { file } => {
            let f = read_map(file)?;
            let (ty, inv) = scheme_type(&f)?;
            let payload = json!({
                "type": ty.to_string(),
                "dimension": inv.dimension,
                "degree": inv.degree.to_string(),
                "hilbert_polynomial": inv.hp_string(),
            });
            Ok(Outcome::ok(payload, format!("base scheme of type {ty}, Hilbert polynomial {}", inv.hp_string())))
        }
    }
}

fn run_ideal(cmd: &IdealCmd) -> CliResult {
    match cmd {
        IdealCmd::Hilbert { file } => {
            let i = read_ideal(file)?;
            let inv = hilbert(&i)?;
            let payload = json!({
                "dimension": inv.dimension,
                "degree": inv.degree.to_string(),
                "hilbert_polynomial": inv.hp_string(),
                "series_numerator": inv.series_numerator.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "regularity_bound": inv.regularity_bound,
            });
            Ok(Outcome::ok(payload, format!(
                "dim {}, degree {}, HP {}", inv.dimension, inv.degree, inv.hp_string()
            )))
        }
        IdealCmd::Saturate { ideal, by } => {
            let i = read_ideal(ideal)?;
            let j = read_ideal(by)?;
            let (s, steps) = saturate(&i, &j)?;
            let payload = json!({ "ideal": serde_json::to_value(s.to_json()).unwrap(), "steps": steps });
            Ok(Outcome::ok(payload, format!("saturation stabilized after {steps} quotient rounds")))
        }
        IdealCmd::Intersect { a, b } => {
            let i = read_ideal(a)?;
            let j = read_ideal(b)?;
            let meet = intersect(&i, &j)?;
            let payload = json!({ "ideal": serde_json::to_value(meet.to_json()).unwrap() });
            Ok(Outcome::ok(payload, format!("intersection has {} generators", meet.gens().len())))
        }
    }
}

fn run_construct(cmd: &ConstructCmd) -> CliResult {
    match cmd {
        ConstructCmd::Falpha { a1, a2, a3 } => {
            let f = falpha((*a1, *a2, *a3))?;
            let c = check_involution(&f)?;
            Ok(Outcome::ok(
                map_payload(&f),
                format!("F^({a1},{a2},{a3}) on P^{}, scaling {c}", f.vars().len() - 1),
            ))
        }
        ConstructCmd::FnMap { n } => {
            let f = fn_map(*n)?;
            let c = check_involution(&f)?;
            Ok(Outcome::ok(
                map_payload(&f),
                format!("F_{n} on P^{}, scaling {c}", f.vars().len() - 1),
            ))
        }
        ConstructCmd::Standard { n } => {
            let f = standard_involution(*n)?;
            Ok(Outcome::ok(
                map_payload(&f),
                format!("standard involution of P^{}", n - 1),
            ))
        }
        ConstructCmd::Spampinato { file } => {
            let f = read_map(file)?;
            let g = spampinato_lift(&f)?;
            check_involution(&g)?;
            Ok(Outcome::ok(
                map_payload(&g),
                format!("cubo-cubic lift to P^{}", g.vars().len() - 1),
            ))
        }
        ConstructCmd::Zorn { target, sampled, seed } => {
            let (name, alg) = resolve_algebra(target)?;
            let z = zorn_map(&alg)?;
            let mut payload = map_payload(&z);
            let summary;
            if *sampled {
                let seed = seed.resolve();
                sampled_involution_check(&z, seed)?;
                payload["check"] = json!({ "mode": "sampled", "points": 20, "seed": seed });
                summary = format!(
                    "Zorn map of {name} on P^{}: involution verified at 20 seeded points",
                    z.vars().len() - 1
                );
                return Ok(Outcome::ok(payload, summary).with_seed(seed));
            }
            let c = check_involution(&z)?;
            payload["check"] = json!({ "mode": "symbolic", "scaling_degree": c.homogeneous_degree() });
            summary = format!(
                "Zorn map of {name} on P^{}: symbolic involution, scaling degree {:?}",
                z.vars().len() - 1,
                c.homogeneous_degree()
            );
            Ok(Outcome::ok(payload, summary))
        }
        ConstructCmd::Glue { file } => {
            let spec: GluingSpecJson = serde_json::from_str(&read_input(file)?)
                .map_err(|e| tool(format!("{file}: bad gluing spec: {e}")))?;
            let fss = RationalMap::from_json(&spec.fss)?;
            if !spec.twists.is_empty() && spec.twists.len() != spec.blocks.len() {
                return Err(tool(format!(
                    "{} twists for {} blocks; provide one twist (or null) per block, or none",
                    spec.twists.len(),
                    spec.blocks.len()
                )));
            }
            let mut blocks = Vec::new();
            for (k, b) in spec.blocks.iter().enumerate() {
                let map = RationalMap::from_json(b)?;
                let twist = match spec.twists.get(k).and_then(|t| t.as_ref()) {
                    Some(rows) => Some(parse_matrix(rows)?),
                    None => None,
                };
                blocks.push(GlueBlock { map, twist });
            }
            let g = glue(&fss, &blocks)?;
            check_involution(&g)?;
            Ok(Outcome::ok(
                map_payload(&g),
                format!("glued involution on P^{} from {} blocks", g.vars().len() - 1, blocks.len()),
            ))
        }
    }
}

#[derive(serde::Deserialize)]
struct GluingSpecJson {
    #[serde(rename = "Fss")]
    fss: MapJson,
    blocks: Vec<MapJson>,
    #[serde(default)]
    twists: Vec<Option<Vec<Vec<String>>>>,
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<QMatrix, CliError> {
    let parsed: Result<Vec<Vec<Rat>>, Error> = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rat(s)).collect())
        .collect();
    Ok(QMatrix::from_rows(parsed?))
}

/// Exact involution check at 20 seeded rational points: z(z(p)) must be
/// projectively equal to p at every point outside the base locus.
fn sampled_involution_check(z: &RationalMap, seed: u64) -> Result<(), CliError> {
    let n = z.vars().len();
    let mut rng = SplitMix64::new(seed);
    let mut good = 0;
    let mut draws = 0;
    while good < 20 {
        draws += 1;
        if draws > 200 {
            return Err(tool("could not find 20 points outside the base locus"));
        }
        let p: Vec<Rat> = (0..n).map(|_| Rat::from_integer(rng.int_in(-9, 9).into())).collect();
        let q: Vec<Rat> = z.components().iter().map(|c| c.eval(&p)).collect();
        if q.iter().all(|x| x == &Rat::from_integer(0.into())) {
            continue;
        }
        let r: Vec<Rat> = z.components().iter().map(|c| c.eval(&q)).collect();
        let Some(i) = (0..n).find(|&i| !num_is_zero(&p[i]) && !num_is_zero(&r[i])) else {
            continue;
        };
        let ratio = &r[i] / &p[i];
        for k in 0..n {
            if r[k] != &ratio * &p[k] {
                return Err(Error::NotInvolution { component: k }.into());
            }
        }
        good += 1;
    }
    Ok(())
}

fn num_is_zero(r: &Rat) -> bool {
    r == &Rat::from_integer(0.into())
}
