//! The `ehf` command line. Every command prints one JSON envelope; exit
//! codes are 0 (success), 1 (negative verdict), 2 (input error) and 3
//! (budget or guardrail).

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ehf_core::connectivity::{
    dominated_balanced_separator, gyarfas_path, is_balanced_separator, max_banana, min_separator, DomsepStrategy,
};
use ehf_core::hubpart::{hub_dimension, hub_partition, HdimSearch};
use ehf_core::io::{parse_graph, parse_td, parse_weights, write_graph, write_td, GraphFormat};
use ehf_core::search::DEFAULT_BUDGET;
use ehf_core::solvers::{brute_force, ptas_vertex_cover, qptas_stable_set, solve_on_td, Problem, QptasOptions};
use ehf_core::structures::{class_membership, find_structure, hubs, Kind, Membership, Target};
use ehf_core::treedec::{atomic_td, treewidth_exact, AtomicMode, LEAN_MAX_N};
use ehf_core::weights::{half, parse_rational};
use ehf_core::{Budget, Error, Graph, Outcome, TreeDecomposition, WeightFunction};

use crate::experiments::{run_experiment, Measure};
use crate::generators::{generate, Family, GeneratorSpec};
use crate::report::{envelope, Timing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ehf", version, about = "Structure detection, decompositions and solvers for even-hole-free graphs")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search budget (nodes) for budgeted operations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Also write the JSON envelope to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Graph format for output files; input format is detected.
    #[arg(long, global = true, value_enum, default_value_t = Fmt::Edgelist)]
    format: Fmt,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fmt {
    Edgelist,
    Dimacs,
    Pace,
}

impl From<Fmt> for GraphFormat {
    fn from(f: Fmt) -> Self {
        match f {
            Fmt::Edgelist => GraphFormat::Edgelist,
            Fmt::Dimacs => GraphFormat::Dimacs,
            Fmt::Pace => GraphFormat::Pace,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Look for induced structures (C4, EVEN_HOLE, THETA, PRISM, PYRAMID, WHEEL, EVEN_WHEEL or all).
    Detect {
        graph: PathBuf,
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Class membership; exit 1 on a violation.
    Class {
        graph: PathBuf,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Largest banana and smallest separator between two vertices.
    Banana {
        graph: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Balanced separators: a Gyárfás path and a dominated separator.
    Separator {
        graph: PathBuf,
        /// Weight file (`v p [q]` per line); uniform when absent.
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        d_max: usize,
        #[arg(long, value_enum, default_value_t = Strategy::Exhaustive)]
        strategy: Strategy,
    },
    /// Tree decomposition tools.
    #[command(subcommand)]
    Td(TdCmd),
    /// Solve one of the optimisation problems.
    Solve(SolveArgs),
    /// Hub partition and hub dimension with respect to a pair.
    Hubpart {
        graph: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Exact minimum number of layers (at most 12 hubs).
        #[arg(long)]
        exhaustive: bool,
        /// Forward-degree bound for the dimension; the greedy's own by default.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Generate a graph from a seeded family.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        /// Write the graph here (in --format).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Treewidth or banana size against log n over a family.
    Experiment {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        family: String,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Number of seeds per n, starting at --seed.
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        #[arg(long)]
        t: Option<usize>,
        /// Nonadjacent pairs sampled per instance (banana).
        #[arg(long, default_value_t = 20)]
        pairs: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Strategy {
    Exhaustive,
    Guided,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Logtw,
    Banana,
}

#[derive(Subcommand, Debug)]
enum TdCmd {
    /// Check a PACE .td file against a graph; exit 1 when invalid.
    Validate { graph: PathBuf, td: PathBuf },
    /// Rewrite a graph in --format.
    Convert {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact treewidth (n <= 20), bounds otherwise.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k-atomic decomposition.
    Atomic {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        heuristic: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two bags catching every a-b path.
    Basket {
        graph: PathBuf,
        td: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// A centre node for a weighting.
    Center {
        graph: PathBuf,
        td: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SolveArgs {
    graph: PathBuf,
    /// STABLE_SET, VERTEX_COVER, FEEDBACK_VERTEX_SET, DOMINATING_SET, R_COLORING or COLORING.
    #[arg(long)]
    problem: String,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    method: Method,
    /// Decomposition to run the DP on; exact treewidth otherwise.
    #[arg(long)]
    td: Option<PathBuf>,
    /// Accuracy for the approximation schemes, e.g. 1/2.
    #[arg(long, default_value = "1/2")]
    eps: String,
    /// Dominated-part size for the QPTAS.
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Run the QPTAS beyond its size guardrail.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Exact,
    Brute,
    Ptas,
    Qptas,
}

/// A command's result plus the exit code it implies.
struct Done {
    result: Value,
    code: i32,
    detail: Option<Value>,
}

fn ok(result: Value) -> Done {
    Done { result, code: EXIT_OK, detail: None }
}

/// Parses `args`, runs the command, prints the envelope and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let start = Instant::now();
    let name = command_name(&cli.cmd);
    match execute(&cli) {
        Ok(done) => {
            let timing = Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1000.0, detail: done.detail };
            let env = envelope(name, done.result, timing);
            let text = serde_json::to_string_pretty(&env).expect("JSON values serialise");
            println!("{text}");
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
            done.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guardrail(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Detect { .. } => "detect",
        Cmd::Class { .. } => "class",
        Cmd::Banana { .. } => "banana",
        Cmd::Separator { .. } => "separator",
        Cmd::Td(TdCmd::Validate { .. }) => "td validate",
        Cmd::Td(TdCmd::Convert { .. }) => "td convert",
        Cmd::Td(TdCmd::Exact { .. }) => "td exact",
        Cmd::Td(TdCmd::Atomic { .. }) => "td atomic",
        Cmd::Td(TdCmd::Basket { .. }) => "td basket",
        Cmd::Td(TdCmd::Center { .. }) => "td center",
        Cmd::Solve(_) => "solve",
        Cmd::Hubpart { .. } => "hubpart",
        Cmd::Generate { .. } => "generate",
        Cmd::Experiment { .. } => "experiment",
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    parse_graph(&read(path)?)
}

fn load_td(path: &Path, g: &Graph) -> Result<TreeDecomposition, Error> {
    let (td, n) = parse_td(&read(path)?)?;
    if n != g.n() {
        return Err(Error::Input(format!("decomposition is for {n} vertices, graph has {}", g.n())));
    }
    Ok(td)
}

fn load_weights(path: Option<&Path>, g: &Graph) -> Result<WeightFunction, Error> {
    match path {
        Some(p) => parse_weights(&read(p)?, g.n()),
        None => WeightFunction::uniform(g.n()),
    }
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialise")
}

fn parse_target(s: &str) -> Result<Target, Error> {
    let norm = s.trim().to_ascii_uppercase().replace('-', "_");
    if norm == "EVEN_WHEEL" {
        return Ok(Target::EvenWheel);
    }
    Kind::parse(&norm).map(Target::Kind).ok_or_else(|| Error::Input(format!("unknown structure '{s}'")))
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Kind(k) => k.name(),
        Target::EvenWheel => "EVEN_WHEEL",
    }
}

fn execute(cli: &Cli) -> Result<Done, Error> {
    let mut budget = Budget::new(cli.budget);
    match &cli.cmd {
        Cmd::Detect { graph, kind } => {
            let g = load_graph(graph)?;
            let targets: Vec<Target> = if kind.eq_ignore_ascii_case("all") {
                Kind::ALL.iter().map(|&k| Target::Kind(k)).chain([Target::EvenWheel]).collect()
            } else {
                vec![parse_target(kind)?]
            };
            let mut out = Vec::new();
            let mut indeterminate = false;
            for t in targets {
                let r = find_structure(&g, t, &mut budget);
                indeterminate |= matches!(r, Outcome::Indeterminate);
                out.push(json!({ "target": target_name(t), "outcome": to_json(&r) }));
            }
            let code = if indeterminate { EXIT_BUDGET } else { EXIT_OK };
            Ok(Done { result: json!({ "n": g.n(), "m": g.m(), "searches": out }), code, detail: None })
        }
        Cmd::Class { graph, t } => {
            let g = load_graph(graph)?;
            let m = class_membership(&g, *t, &mut budget);
            let code = match m {
                Membership::InC { .. } => EXIT_OK,
                Membership::Indeterminate => EXIT_BUDGET,
                _ => EXIT_NEGATIVE,
            };
            let mut v = to_json(&m);
            v["label"] = json!(m.label());
            Ok(Done { result: v, code, detail: None })
        }
        Cmd::Banana { graph, a, b } => {
            let g = load_graph(graph)?;
            let banana = max_banana(&g, *a, *b)?;
            let sep = min_separator(&g, *a, *b)?;
            Ok(ok(json!({ "k": banana.k, "banana": to_json(&banana), "min_separator": to_json(&sep) })))
        }
        Cmd::Separator { graph, weights, d_max, strategy } => {
            let g = load_graph(graph)?;
            let w = load_weights(weights.as_deref(), &g)?;
            let path = if g.is_connected() && g.n() > 0 {
                let p = gyarfas_path(&g, &w)?;
                let closed = g.neighborhood(&p.vertices().iter().copied().collect(), true)?;
                let verdict = is_balanced_separator(&g, &w, &closed, &half())?;
                json!({ "path": p.vertices(), "closed_neighbourhood": to_json(&closed), "verdict": to_json(&verdict) })
            } else {
                Value::Null
            };
            let strat = match strategy {
                Strategy::Exhaustive => DomsepStrategy::Exhaustive,
                Strategy::Guided => DomsepStrategy::Guided,
            };
            let y = dominated_balanced_separator(&g, &w, *d_max, strat)?;
            let code = if y.is_none() && matches!(strategy, Strategy::Exhaustive) { EXIT_NEGATIVE } else { EXIT_OK };
            let result = json!({ "gyarfas": path, "dominated": { "d_max": d_max, "strategy": to_json(&strat), "y": to_json(&y) } });
            Ok(Done { result, code, detail: None })
        }
        Cmd::Td(td_cmd) => run_td(td_cmd, cli, &mut budget),
        Cmd::Solve(args) => run_solve(args, &mut budget),
        Cmd::Hubpart { graph, a, b, exhaustive, d } => {
            let g = load_graph(graph)?;
            let report = hubs(&g, &mut budget);
            if !report.complete {
                return Err(Error::Guardrail("hub enumeration ran out of budget".into()));
            }
            let p = hub_partition(&g, *a, *b, &report.hubs)?;
            let search = if *exhaustive { HdimSearch::Exhaustive } else { HdimSearch::Greedy };
            let dim = hub_dimension(&g, *a, *b, search, *d, &mut Budget::new(cli.budget))?;
            let log_n = (g.n().max(2) as f64).log2();
            Ok(ok(json!({
                "layers": to_json(&p.layers), "d": p.d, "k": p.k, "a": a, "b": b, "d_graph": p.d_graph,
                "hubs": to_json(&report.hubs), "dimension": to_json(&dim),
                "d_over_4_log2_n": p.d as f64 / 4.0 * log_n,
            })))
        }
        Cmd::Generate { family, n, t, p, out } => {
            let fam = Family::parse(family, *t)?;
            let spec = GeneratorSpec { family: fam, n: *n, seed: cli.seed, p: *p };
            let gen = generate(&spec)?;
            let text = write_graph(&gen.graph, cli.format.into());
            write_out(out.as_ref(), &text)?;
            Ok(ok(json!({
                "spec": to_json(&spec), "generated": to_json(&gen),
                "n": gen.graph.n(), "edges": gen.graph.edges(),
            })))
        }
        Cmd::Experiment { which, family, n, seeds, t, pairs } => {
            let fam = Family::parse(family, *t)?;
            let seed_list: Vec<u64> = (cli.seed..cli.seed + seeds).collect();
            let measure = match which {
                Which::Logtw => Measure::Treewidth,
                Which::Banana => Measure::Banana { pairs: *pairs },
            };
            let (report, timings) = run_experiment(measure, fam, n, &seed_list, cli.budget.max(1 << 26))?;
            Ok(Done { result: to_json(&report), code: EXIT_OK, detail: Some(to_json(&timings)) })
        }
    }
}

fn run_td(cmd: &TdCmd, cli: &Cli, budget: &mut Budget) -> Result<Done, Error> {
    match cmd {
        TdCmd::Validate { graph, td } => {
            let g = load_graph(graph)?;
            let td = load_td(td, &g)?;
            let r = td.validate(&g);
            let code = if r.valid { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Done { result: to_json(&r), code, detail: None })
        }
        TdCmd::Convert { graph, out } => {
            let g = load_graph(graph)?;
            let text = write_graph(&g, cli.format.into());
            write_out(out.as_ref(), &text)?;
            Ok(ok(json!({ "format": to_json(&GraphFormat::from(cli.format)), "text": text })))
        }
        TdCmd::Exact { graph, out } => {
            let g = load_graph(graph)?;
            let r = treewidth_exact(&g, budget);
            let text = write_td(&r.td, g.n());
            write_out(out.as_ref(), &text)?;
            Ok(ok(json!({ "lower": r.lower, "upper": r.upper, "exact": r.exact, "td": to_json(&r.td), "pace": text })))
        }
        TdCmd::Atomic { graph, k, heuristic, out } => {
            let g = load_graph(graph)?;
            let mode = if *heuristic { AtomicMode::Heuristic } else { AtomicMode::Exhaustive };
            let r = atomic_td(&g, *k, mode)?;
            write_out(out.as_ref(), &write_td(&r.td, g.n()))?;
            let tight = r.td.is_tight(&g)?;
            let lean = if g.n() <= LEAN_MAX_N { Some(r.td.is_k_lean(&g, *k, true)?.lean) } else { None };
            Ok(ok(json!({ "atomic": to_json(&r), "tight": tight, "lean": lean })))
        }
        TdCmd::Basket { graph, td, a, b } => {
            let g = load_graph(graph)?;
            let td = load_td(td, &g)?;
            let (t1, t2) = td.basket_pair(&g, *a, *b)?;
            Ok(ok(json!({ "t1": t1, "t2": t2, "union": to_json(&td.bag(t1).union(td.bag(t2))) })))
        }
        TdCmd::Center { graph, td, weights } => {
            let g = load_graph(graph)?;
            let td = load_td(td, &g)?;
            let w = load_weights(weights.as_deref(), &g)?;
            let t = td.center(&g, &w)?;
            Ok(ok(json!({ "center": t, "bag": to_json(td.bag(t)) })))
        }
    }
}

fn run_solve(args: &SolveArgs, budget: &mut Budget) -> Result<Done, Error> {
    let g = load_graph(&args.graph)?;
    let problem = Problem::parse(&args.problem, args.r)?;
    let sol = match args.method {
        Method::Exact => {
            let td = match &args.td {
                Some(p) => load_td(p, &g)?,
                None => treewidth_exact(&g, budget).td,
            };
            solve_on_td(&g, problem, &td)?
        }
        Method::Brute => brute_force(&g, problem)?,
        Method::Ptas => {
            if problem != Problem::VertexCover {
                return Err(Error::Input("the PTAS solves VERTEX_COVER".into()));
            }
            ptas_vertex_cover(&g, &parse_rational(&args.eps)?, budget)?
        }
        Method::Qptas => {
            if problem != Problem::StableSet {
                return Err(Error::Input("the QPTAS solves STABLE_SET".into()));
            }
            let mut o = QptasOptions::new(parse_rational(&args.eps)?, args.d);
            o.force = args.force;
            o.budget = budget.limit();
            qptas_stable_set(&g, &o)?
        }
    };
    let code = if sol.feasible { EXIT_OK } else { EXIT_NEGATIVE };
    Ok(Done { result: to_json(&sol), code, detail: None })
}
