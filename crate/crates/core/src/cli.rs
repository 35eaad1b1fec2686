//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` rejects a certificate, 2 on
//! usage, input, or solver errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::cliques::{clique_graph, maximum_cliques_capped, DEFAULT_CLIQUE_CAP};
use crate::counterexample::{
    build_counterexample, feasible_params, verify_counterexample, Rational,
    DEFAULT_ENUMERATION_LIMIT,
};
use crate::error::{Error, Result};
use crate::generators::{gnp, named_graph, seeded_rng};
use crate::graph::{strong_product, Graph};
use crate::hitting::{verify_certificate, CertificateDoc, Solver};
use crate::io::{read_graph_file, write_graph, GraphFormat};
use crate::oracle::{oracle_hitting_max, OracleLimits, DEFAULT_ORACLE_MAX_N};
use crate::structure::{analyze_component, recognize_hole_product};
use crate::transversal::DEFAULT_STEP_BUDGET;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hitclique",
    version,
    about = "Stable sets hitting maximum cliques"
)]
pub struct Cli {
    #[command(flatten)]
    pub limits: Limits,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Limits {
    /// Largest graph the exhaustive oracle accepts.
    #[arg(long, global = true, env = "HITCLIQUE_MAX_N", default_value_t = DEFAULT_ORACLE_MAX_N)]
    pub max_n: usize,
    /// Maximum number of cliques enumerated before giving up.
    #[arg(long, global = true, env = "HITCLIQUE_CLIQUE_CAP", default_value_t = DEFAULT_CLIQUE_CAP)]
    pub clique_cap: usize,
    /// Local-search steps before the transversal solver backtracks.
    #[arg(long, global = true, env = "HITCLIQUE_STEP_BUDGET", default_value_t = DEFAULT_STEP_BUDGET)]
    pub step_budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a named, product, or random graph.
    Generate(GenerateArgs),
    /// Report clique number, maximum degree, maximum cliques and their
    /// clique graph.
    Analyze(AnalyzeArgs),
    /// Find a stable set hitting every maximum clique, or an odd hole
    /// product certificate.
    Solve(SolveArgs),
    /// Re-check a certificate against a graph.
    Verify(VerifyArgs),
    /// Build and check a graph where no stable set hits all large maximal
    /// cliques.
    Counterexample(CounterexampleArgs),
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Output graph format (edgelist, graph6, json); guessed from the
    /// output extension otherwise.
    #[arg(long)]
    pub format: Option<GraphFormat>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Strong product of two named graphs, e.g. `--product C5 K3`.
    #[arg(long, num_args = 2, value_names = ["G", "H"], conflicts_with_all = ["graph", "random"])]
    pub product: Option<Vec<String>>,
    /// A named graph: C<k>, P<l>, K<m>, petersen, or `AxB`.
    #[arg(long, conflicts_with = "random")]
    pub graph: Option<String>,
    /// G(n, p) on this many vertices.
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    pub input: PathBuf,
    /// Input graph format; guessed from the extension otherwise.
    #[arg(long = "input-format")]
    pub input_format: Option<GraphFormat>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Classify each clique-graph component and test for a hole product.
    #[arg(long)]
    pub structure: bool,
    /// Also run the exhaustive oracle (subject to --max-n).
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Certificate file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    pub certificate: PathBuf,
}

#[derive(Args, Debug)]
pub struct CounterexampleArgs {
    /// ε as a fraction `p/q` with 0 < ε < 1.
    #[arg(long)]
    pub epsilon: String,
    #[arg(long, requires = "t")]
    pub k: Option<usize>,
    #[arg(long, requires = "k")]
    pub t: Option<usize>,
    /// Instances up to this many vertices have their maximal cliques
    /// enumerated; larger ones use the closed-form census.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    pub enumeration_limit: usize,
    /// Where to write the graph; the report always goes to stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<GraphFormat>,
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let limits = cli.limits;
    match &cli.command {
        Command::Generate(a) => generate(a, out),
        Command::Analyze(a) => analyze(a, limits, out),
        Command::Solve(a) => solve(a, limits, out),
        Command::Verify(a) => verify(a, limits, out),
        Command::Counterexample(a) => counterexample(a, out),
    }
}

fn emit_graph(g: &Graph, o: &OutputArgs, out: &mut dyn Write) -> Result<()> {
    let format = o
        .format
        .or_else(|| o.output.as_deref().map(GraphFormat::from_path))
        .unwrap_or(GraphFormat::EdgeList);
    let text = write_graph(g, format);
    match &o.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json<T: Serialize>(value: &T, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match path {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<i32> {
    let g = if let Some(pair) = &a.product {
        strong_product(&named_graph(&pair[0])?, &named_graph(&pair[1])?)?
    } else if let Some(name) = &a.graph {
        named_graph(name)?
    } else if let Some(n) = a.random {
        gnp(n, a.density, &mut seeded_rng(a.seed))?
    } else {
        return Err(Error::InvalidParameter(
            "generate needs one of --product, --graph, --random".into(),
        ));
    };
    emit_graph(&g, &a.out, out)?;
    Ok(EXIT_OK)
}

fn load(input: &InputArgs) -> Result<Graph> {
    read_graph_file(&input.input, input.input_format)
}

fn analyze(a: &AnalyzeArgs, limits: Limits, out: &mut dyn Write) -> Result<i32> {
    let g = load(&a.input)?;
    let (omega, family) = maximum_cliques_capped(&g, limits.clique_cap)?;
    let cg = clique_graph(&family)?;
    let hajnal = crate::cliques::hajnal_check_with_omega(&g, &family, omega)?;
    let mut report = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "omega": omega,
        "delta": g.max_degree(),
        "meets_two_thirds_bound": crate::meets_two_thirds_bound(omega, g.max_degree()),
        "maximum_cliques": family.to_lists(),
        "clique_graph_components": cg.components(),
        "hajnal": hajnal,
    });
    if a.structure {
        let components: Vec<serde_json::Value> = (0..cg.components().len())
            .map(|i| match analyze_component(&g, &cg, i) {
                Ok(c) => json!({
                    "component": c.component,
                    "intersection_size": c.intersection_size,
                    "classification": c.classification.name(),
                    "order": c.classification.order(),
                }),
                Err(e) => json!({
                    "component": cg.components()[i],
                    "classification": "unsupported",
                    "reason": e.to_string(),
                }),
            })
            .collect();
        report["structure"] = json!(components);
        report["hole_product"] = json!(if g.is_connected() {
            recognize_hole_product(&g)
        } else {
            None
        });
    }
    if a.oracle {
        let found = oracle_hitting_max(
            &g,
            &OracleLimits {
                max_n: limits.max_n,
                clique_cap: limits.clique_cap,
            },
        )?;
        report["oracle"] = json!({
            "hitting_set_exists": found.is_some(),
            "vertices": found.map(|s| s.to_vec()),
        });
    }
    emit_json(&report, None, out)?;
    Ok(EXIT_OK)
}

fn solve(a: &SolveArgs, limits: Limits, out: &mut dyn Write) -> Result<i32> {
    let g = load(&a.input)?;
    let solver = Solver {
        clique_cap: limits.clique_cap,
        step_budget: limits.step_budget,
    };
    let doc = match solver.hitting_stable_set(&g) {
        Ok(cert) => cert.to_doc(g.n()),
        Err(Error::Precondition(reason)) => CertificateDoc::Unsupported { reason },
        Err(e) => return Err(e),
    };
    emit_json(&doc, a.output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn verify(a: &VerifyArgs, limits: Limits, out: &mut dyn Write) -> Result<i32> {
    let g = load(&a.input)?;
    let text = std::fs::read_to_string(&a.certificate)?;
    let doc: CertificateDoc = serde_json::from_str(&text)?;
    let verdict = verify_certificate(&g, &doc, limits.clique_cap)?;
    emit_json(
        &json!({ "valid": verdict.valid, "reason": verdict.reason }),
        None,
        out,
    )?;
    Ok(if verdict.valid {
        EXIT_OK
    } else {
        EXIT_REJECTED
    })
}

fn parse_epsilon(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("epsilon must look like p/q, got {s:?}"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn counterexample(a: &CounterexampleArgs, out: &mut dyn Write) -> Result<i32> {
    let eps = parse_epsilon(&a.epsilon)?;
    let (k, t) = match (a.k, a.t) {
        (Some(k), Some(t)) => (k, t),
        _ => feasible_params(eps)?,
    };
    let inst = build_counterexample(k, t, eps)?;
    if a.output.is_some() || a.format.is_some() {
        let o = OutputArgs {
            output: a.output.clone(),
            format: a.format,
        };
        if o.output.is_none() {
            return Err(Error::InvalidParameter("--format needs --output".into()));
        }
        emit_graph(&inst.graph, &o, out)?;
    }
    let report = verify_counterexample(&inst, a.enumeration_limit)?;
    emit_json(&report, None, out)?;
    Ok(if report.refuted {
        EXIT_REJECTED
    } else {
        EXIT_OK
    })
}
