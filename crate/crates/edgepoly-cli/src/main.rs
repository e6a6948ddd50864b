//! Command-line front end: parse graphs, run the library computations, and
//! emit machine-readable JSON reports.
//!
//! Exit codes: 0 on success, 1 on any input error (one-line diagnostic on
//! stderr), 2 when `verify` has a failing claim.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use edgepoly::census::census;
use edgepoly::epsilon::{
    closed_kd_minus_kmn, closed_two_bipartite, epsilon_direct, g_argmax, g_of_a,
    max_complete_bipartite_components, triangle_upper_bound,
};
use edgepoly::graph::{fixture_g_prime, Graph};
use edgepoly::random::{monte_carlo, RandomModelSpec};
use edgepoly::search::{
    anneal, bipartite_local, exhaustive, verify_claims, AnnealSchedule, SearchParams,
    SearchReport,
};

#[derive(Parser)]
#[command(
    name = "edgepoly",
    about = "Edge counts of graph edge polytopes: formulas, bounds, random models, search",
    version
)]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    /// Falls back to the EDGEPOLY_THREADS environment variable.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Add a human-readable summary after the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Count the edges of the edge polytope of a graph.
    Eps(GraphInput),
    /// Induced-subgraph statistics (a, b, c, triangles, psi) of a graph.
    Census(GraphInput),
    /// Triangle-weighted exact rational upper bound on the edge count.
    Bound(GraphInput),
    /// Closed-form values.
    #[command(subcommand)]
    Closed(ClosedCmd),
    /// Monte Carlo estimation over a random-graph model.
    Random(RandomCmd),
    /// Maximizer search.
    Search(SearchCmd),
    /// Re-check the numeric claims this tool is built around.
    Verify,
    /// Emit a graph in the edge-list text format.
    Gen(GenCmd),
}

#[derive(Args)]
struct GraphInput {
    /// Graph file in edge-list format; "-" or absent reads stdin.
    file: Option<String>,

    /// Generate the input instead of reading a file.
    #[arg(long, value_enum, conflicts_with = "file")]
    family: Option<FamilyKind>,

    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    /// Complete graph on d vertices.
    Kd,
    /// Complete bipartite graph with parts m and n.
    Kmn,
    /// Cycle on n vertices.
    Cycle,
    /// Path on n vertices.
    Path,
    /// Edgeless graph on d vertices.
    Empty,
    /// Complete graph minus a complete bipartite block on vertices 1..m+n.
    KdMinusKmn,
}

#[derive(Subcommand)]
enum ClosedCmd {
    /// eps(K_d - K_{m,n}) by the exact closed form.
    Kmn {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// eps of K_d minus two balanced bipartite blocks of sizes a*d and (1/2-a)*d.
    TwoBipartite {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        a_num: u64,
        #[arg(long)]
        a_den: u64,
    },
    /// The quartic g(a) giving the leading d^4 coefficient of that family.
    G {
        #[arg(long)]
        a: f64,
    },
    /// Maximizers and maximum of g on [0, 1/2].
    GArgmax,
    /// Maximum eps over complements made of complete bipartite components.
    MaxComponents {
        #[arg(long)]
        d: usize,
    },
}

#[derive(Args)]
struct RandomCmd {
    /// gnp: every pair an edge with probability p; cb: complete graph minus
    /// a random bipartite subgraph.
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    d: usize,
    /// Probability; accepts the literal tokens "1/sqrt3" and "3-sqrt5".
    #[arg(long)]
    p: String,
    #[arg(long)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Gnp,
    Cb,
}

#[derive(Args)]
struct SearchCmd {
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    restarts: usize,
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[arg(long, default_value_t = 2.0)]
    t_start: f64,
    #[arg(long, default_value_t = 0.01)]
    t_end: f64,
    /// Confirm the d = 8 exhaustive run (2^28 graphs, minutes of work).
    #[arg(long)]
    allow_slow: bool,
    /// Emit one JSON line per restart before the final report.
    #[arg(long)]
    progress: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    BipartiteLocal,
    Anneal,
}

#[derive(Args)]
struct GenCmd {
    #[arg(long, value_enum, required_unless_present = "fixture", conflicts_with = "fixture")]
    family: Option<FamilyKind>,
    /// Named fixture; "g_prime" is the 20-vertex, 4203-scoring graph.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

// ============================================================================
// Input plumbing
// ============================================================================

fn fail(msg: impl std::fmt::Display) -> CliError {
    CliError(msg.to_string())
}

struct CliError(String);

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn need(opt: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    opt.ok_or_else(|| fail(format!("family {family} requires --{flag}")))
}

fn build_family(kind: FamilyKind, d: Option<usize>, m: Option<usize>, n: Option<usize>) -> CliResult<Graph> {
    Ok(match kind {
        FamilyKind::Kd => Graph::complete(need(d, "d", "kd")?)?,
        FamilyKind::Kmn => Graph::complete_bipartite(need(m, "m", "kmn")?, need(n, "n", "kmn")?)?,
        FamilyKind::Cycle => Graph::cycle(need(n, "n", "cycle")?)?,
        FamilyKind::Path => Graph::path(need(n, "n", "path")?)?,
        FamilyKind::Empty => Graph::empty(need(d, "d", "empty")?)?,
        FamilyKind::KdMinusKmn => {
            let (d, m, n) = (
                need(d, "d", "kd-minus-kmn")?,
                need(m, "m", "kd-minus-kmn")?,
                need(n, "n", "kd-minus-kmn")?,
            );
            let block = Graph::complete_bipartite(m, n)?;
            let embedding: Vec<usize> = (1..=(m + n)).collect();
            Graph::complete(d)?.subtract(&block, &embedding)?
        }
    })
}

fn load_graph(input: &GraphInput) -> CliResult<Graph> {
    if let Some(kind) = input.family {
        return build_family(kind, input.d, input.m, input.n);
    }
    let text = match input.file.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| fail(format!("cannot read stdin: {e}")))?;
            buf
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| fail(format!("cannot read {path}: {e}")))?,
    };
    Ok(Graph::parse(&text)?)
}

fn parse_probability(token: &str) -> CliResult<f64> {
    match token {
        "1/sqrt3" => Ok(1.0 / 3f64.sqrt()),
        "3-sqrt5" => Ok(3.0 - 5f64.sqrt()),
        other => other
            .parse::<f64>()
            .map_err(|_| fail(format!("cannot parse probability {other:?}"))),
    }
}

fn edges_json(g: &Graph) -> serde_json::Value {
    json!(g
        .edges()
        .iter()
        .map(|e| vec![e.u(), e.v()])
        .collect::<Vec<_>>())
}

fn eps_u64(value: u128) -> u64 {
    u64::try_from(value).expect("eps fits in 64 bits for any graph under the vertex cap")
}

// ============================================================================
// Verbs
// ============================================================================

fn run_eps(input: &GraphInput, pretty: bool) -> CliResult<u8> {
    let g = load_graph(input)?;
    let b = epsilon_direct(&g)?;
    println!(
        "{}",
        json!({
            "epsilon": eps_u64(b.epsilon),
            "shared": eps_u64(b.shared),
            "disjoint_ok": eps_u64(b.disjoint_ok),
        })
    );
    if pretty {
        println!(
            "# d={} edges={} epsilon={} (shared {}, disjoint {})",
            g.vertex_count(),
            g.edge_count(),
            b.epsilon,
            b.shared,
            b.disjoint_ok
        );
    }
    Ok(0)
}

fn run_census(input: &GraphInput) -> CliResult<u8> {
    let g = load_graph(input)?;
    let c = census(&g);
    println!(
        "{}",
        json!({
            "d": g.vertex_count(),
            "edge_count": c.edge_count,
            "sum_deg_sq": c.sum_deg_sq,
            "k3": c.k3,
            "a": c.a,
            "b": c.b,
            "c": c.c,
            "psi": c.psi,
        })
    );
    Ok(0)
}

fn run_bound(input: &GraphInput) -> CliResult<u8> {
    let g = load_graph(input)?;
    let bound = triangle_upper_bound(&g)?;
    println!(
        "{}",
        json!({
            "d": g.vertex_count(),
            "bound_num": bound.num() as i64,
            "bound_den": bound.den() as i64,
        })
    );
    Ok(0)
}

fn run_closed(cmd: &ClosedCmd) -> CliResult<u8> {
    let value = match cmd {
        ClosedCmd::Kmn { d, m, n } => json!({
            "epsilon": eps_u64(closed_kd_minus_kmn(*d, *m, *n)?),
        }),
        ClosedCmd::TwoBipartite { d, a_num, a_den } => json!({
            "epsilon": eps_u64(closed_two_bipartite(*d, *a_num, *a_den)?),
        }),
        ClosedCmd::G { a } => json!({ "a": a, "g": g_of_a(*a)? }),
        ClosedCmd::GArgmax => {
            let opt = g_argmax();
            json!({ "a_minus": opt.a_minus, "a_plus": opt.a_plus, "max": opt.max })
        }
        ClosedCmd::MaxComponents { d } => {
            let (max, components) = max_complete_bipartite_components(*d)?;
            json!({ "max": eps_u64(max), "components": components })
        }
    };
    println!("{value}");
    Ok(0)
}

fn run_random(cmd: &RandomCmd) -> CliResult<u8> {
    let p = parse_probability(&cmd.p)?;
    let spec = match cmd.model {
        ModelArg::Gnp => RandomModelSpec::gnp(cmd.d, p, cmd.seed, cmd.samples),
        ModelArg::Cb => RandomModelSpec::complement_bipartite(cmd.d, p, cmd.seed, cmd.samples),
    };
    let report = monte_carlo(&spec)?;
    println!(
        "{}",
        json!({
            "model": match cmd.model { ModelArg::Gnp => "gnp", ModelArg::Cb => "cb" },
            "d": cmd.d,
            "p": p,
            "samples": report.samples,
            "seed": cmd.seed,
            "mean": report.mean,
            "std_error": report.std_error,
            "normalized": report.normalized,
            "exact_expectation": report.exact_expectation,
        })
    );
    Ok(0)
}

fn search_report_json(rep: &SearchReport) -> serde_json::Value {
    let parameters = match &rep.parameters {
        SearchParams::Exhaustive { allow_slow } => json!({ "allow_slow": allow_slow }),
        SearchParams::BipartiteLocal { restarts, max_steps } => {
            json!({ "restarts": restarts, "max_steps": max_steps })
        }
        SearchParams::Anneal(s) => {
            json!({ "t_start": s.t_start, "t_end": s.t_end, "steps": s.steps })
        }
    };
    json!({
        "mode": rep.mode.name(),
        "d": rep.d,
        // heuristic modes only ever certify a lower bound on mu_d
        "exact": matches!(rep.parameters, SearchParams::Exhaustive { .. }),
        "best_eps": eps_u64(rep.best_eps),
        "evaluated": rep.evaluated,
        "seed": rep.seed,
        "parameters": parameters,
        "incumbents": rep.incumbents.iter().map(edges_json).collect::<Vec<_>>(),
    })
}

fn run_search(cmd: &SearchCmd, pretty: bool) -> CliResult<u8> {
    let report = match cmd.mode {
        ModeArg::Exhaustive => exhaustive(cmd.d, cmd.allow_slow)?,
        ModeArg::BipartiteLocal => bipartite_local(cmd.d, cmd.seed, cmd.restarts, cmd.steps)?,
        ModeArg::Anneal => anneal(
            cmd.d,
            cmd.seed,
            AnnealSchedule {
                t_start: cmd.t_start,
                t_end: cmd.t_end,
                steps: cmd.steps,
            },
        )?,
    };
    if cmd.progress {
        for (restart, score) in report.restart_scores.iter().enumerate() {
            println!(
                "{}",
                json!({ "restart": restart, "score": eps_u64(*score) })
            );
        }
    }
    println!("{}", search_report_json(&report));
    if pretty {
        println!(
            "# {} d={} best={}{} over {} candidates; {} incumbent(s)",
            report.mode.name(),
            report.d,
            report.best_eps,
            if matches!(report.parameters, SearchParams::Exhaustive { .. }) {
                " (exact mu_d)"
            } else {
                " (lower bound on mu_d)"
            },
            report.evaluated,
            report.incumbents.len()
        );
    }
    Ok(0)
}

fn run_verify(pretty: bool) -> CliResult<u8> {
    let claims = verify_claims();
    for c in &claims {
        println!(
            "{}",
            json!({
                "claim": c.id,
                "description": c.description,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.pass,
            })
        );
    }
    let failed = claims.iter().filter(|c| !c.pass).count();
    if pretty {
        println!("# claim  status  description");
        for c in &claims {
            println!(
                "# {:>5}  {}  {}",
                c.id,
                if c.pass { "PASS" } else { "FAIL" },
                c.description
            );
        }
        println!("# {} of {} claims pass", claims.len() - failed, claims.len());
    }
    Ok(if failed > 0 { 2 } else { 0 })
}

fn run_gen(cmd: &GenCmd) -> CliResult<u8> {
    let g = match (&cmd.family, &cmd.fixture) {
        (Some(kind), None) => build_family(*kind, cmd.d, cmd.m, cmd.n)?,
        (None, Some(name)) if name == "g_prime" => fixture_g_prime(),
        (None, Some(name)) => return Err(fail(format!("unknown fixture {name:?}"))),
        _ => return Err(fail("gen requires exactly one of --family or --fixture")),
    };
    print!("{}", g.serialize());
    Ok(0)
}

fn dispatch(cli: &Cli) -> CliResult<u8> {
    match &cli.verb {
        Verb::Eps(input) => run_eps(input, cli.pretty),
        Verb::Census(input) => run_census(input),
        Verb::Bound(input) => run_bound(input),
        Verb::Closed(cmd) => run_closed(cmd),
        Verb::Random(cmd) => run_random(cmd),
        Verb::Search(cmd) => run_search(cmd, cli.pretty),
        Verb::Verify => run_verify(cli.pretty),
        Verb::Gen(cmd) => run_gen(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };

    let threads = cli.threads.or_else(|| {
        std::env::var("EDGEPOLY_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });

    let outcome = match threads {
        Some(n) if n >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| fail(format!("cannot build thread pool: {e}")))
            .and_then(|pool| pool.install(|| dispatch(&cli))),
        Some(_) => Err(fail("--threads must be at least 1")),
        None => dispatch(&cli),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
