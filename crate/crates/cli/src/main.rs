//! Command-line front end: compute single invariants, emit derived graphs,
//! run the check catalog, and hunt for conjecture counterexamples.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 failed checks or
//! engine disagreement, 3 findings (counterexample certificates) with no
//! failures.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use midgraph::families::FamilySpec;
use midgraph::graph::Graph;
use midgraph::harness::{hunt, verify, ConjectureId, HuntConfig, Report, SweepConfig, TheoremId};
use midgraph::solver::{
    bnb_solve, edge_cover_number, oracle_solve, InvariantKind, SolverResult, DEFAULT_BUDGET,
};
use midgraph::transform;

const BUDGET_ENV: &str = "MIDGRAPH_DOM_BUDGET_SECS";

#[derive(Parser)]
#[command(
    name = "midgraph",
    version,
    about = "Exact domination-style invariants on middle graphs and related derived graphs",
    after_help = "Graph specs: a family (see `midgraph list`) or file:PATH with JSON \
                  {\"n\": <int>, \"edges\": [[i,j], ...]}."
)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of a graph or of a derived graph.
    Compute {
        /// Family spec (e.g. cycle:9) or file:PATH.
        graph: String,
        /// Derivation applied first: none, middle, line, corona1, corona2,
        /// join:p, complement, spanning_tree, or a comma-separated chain
        /// such as join:2,middle.
        #[arg(long, default_value = "none")]
        derive: String,
        /// gamma, gamma_c, gamma_tilde_c, or rho.
        #[arg(long)]
        invariant: String,
        /// oracle, bnb, or both (both asserts agreement).
        #[arg(long, default_value = "bnb")]
        engine: String,
        /// Per-instance budget in seconds (overrides MIDGRAPH_DOM_BUDGET_SECS).
        #[arg(long)]
        budget: Option<u64>,
        /// Also write the (derived) graph as DOT.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Build a derived graph and emit it as JSON and/or DOT.
    Derive {
        /// Family spec or file:PATH.
        graph: String,
        /// middle, line, corona1, corona2, join:p, complement,
        /// spanning_tree, or a comma-separated chain.
        #[arg(long)]
        operation: String,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        #[arg(long)]
        emit_json: Option<PathBuf>,
    },
    /// Run cataloged checks over their default sweeps.
    Verify {
        /// A check id (see `midgraph list`) or `all`.
        #[arg(long)]
        theorem: String,
        /// Cap on the source-graph order for every sweep.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Directory for per-check JSON and Markdown reports.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep for conjecture counterexamples over all connected graphs.
    Hunt {
        /// 7.1, 7.6, or 7.5-inventory.
        #[arg(long)]
        conjecture: String,
        /// Sweep all connected graphs on 2..=N vertices.
        #[arg(long, default_value_t = 6)]
        exhaustive_n: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List check ids, conjectures, and the family grammar.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode> {
    match command {
        Command::Compute {
            graph,
            derive,
            invariant,
            engine,
            budget,
            emit_dot,
        } => run_compute(&graph, &derive, &invariant, &engine, budget, emit_dot),
        Command::Derive {
            graph,
            operation,
            emit_dot,
            emit_json,
        } => run_derive(&graph, &operation, emit_dot, emit_json),
        Command::Verify {
            theorem,
            max_n,
            budget,
            out,
        } => run_verify(&theorem, max_n, resolve_budget(budget), out),
        Command::Hunt {
            conjecture,
            exhaustive_n,
            budget,
            out,
        } => run_hunt(&conjecture, exhaustive_n, resolve_budget(budget), out),
        Command::List => {
            run_list();
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve_budget(flag: Option<u64>) -> Duration {
    if let Some(secs) = flag {
        return Duration::from_secs(secs);
    }
    match std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
    {
        Some(secs) if secs > 0 => Duration::from_secs(secs),
        _ => DEFAULT_BUDGET,
    }
}

fn load_graph(spec: &str) -> Result<Graph> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        return Ok(Graph::from_json_str(&text)?);
    }
    let family: FamilySpec = spec.parse()?;
    if let FamilySpec::AllConnected(_) = family {
        bail!("'{spec}' denotes an instance stream; pass a single-graph family");
    }
    Ok(midgraph::families::make(&family)?)
}

/// A derivation result: the graph plus display labels when provenance is
/// tracked.
struct Derived {
    graph: Graph,
    labels: Option<Vec<String>>,
    description: String,
}

fn apply_one(op: &str, g: &Graph) -> Result<Derived> {
    let plain = |graph: Graph, description: &str| Derived {
        graph,
        labels: None,
        description: description.to_string(),
    };
    Ok(match op {
        "middle" => {
            let m = transform::middle_graph(g)?;
            Derived {
                labels: Some(m.labels()),
                graph: m.graph,
                description: "middle".into(),
            }
        }
        "line" => {
            let l = transform::line_graph(g)?;
            Derived {
                labels: Some(l.labels()),
                graph: l.graph,
                description: "line".into(),
            }
        }
        "corona1" => plain(transform::corona_k1(g)?, "corona1"),
        "corona2" => plain(transform::corona_p2(g)?, "corona2"),
        "complement" => plain(g.complement(), "complement"),
        "spanning_tree" => plain(transform::spanning_tree(g)?, "spanning_tree"),
        _ => {
            if let Some(p) = op.strip_prefix("join:") {
                let p: usize = p
                    .parse()
                    .map_err(|_| anyhow!("bad join parameter in '{op}'"))?;
                plain(transform::join_empty(g, p)?, &format!("join:{p}"))
            } else {
                bail!("unknown derivation '{op}'");
            }
        }
    })
}

/// Applies a comma-separated derivation chain left to right, e.g.
/// `join:2,middle`. Provenance labels come from the final step when it
/// tracks them.
fn apply_derivation(chain: &str, g: &Graph) -> Result<Derived> {
    if chain == "none" {
        return Ok(Derived {
            graph: g.clone(),
            labels: None,
            description: "none".into(),
        });
    }
    let mut current = Derived {
        graph: g.clone(),
        labels: None,
        description: String::new(),
    };
    for op in chain.split(',') {
        let next = apply_one(op.trim(), &current.graph)?;
        current = next;
    }
    current.description = chain.to_string();
    Ok(current)
}

fn parse_invariant(s: &str) -> Result<Option<InvariantKind>> {
    Ok(match s {
        "gamma" => Some(InvariantKind::Domination),
        "gamma_c" => Some(InvariantKind::ConnectedDomination),
        "gamma_tilde_c" => Some(InvariantKind::OuterConnectedDomination),
        "rho" => None,
        _ => bail!("unknown invariant '{s}' (expected gamma, gamma_c, gamma_tilde_c, rho)"),
    })
}

fn describe_witness(result: &SolverResult, labels: Option<&[String]>) -> String {
    result
        .witness
        .iter()
        .map(|v| match labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn run_compute(
    graph_spec: &str,
    derive: &str,
    invariant: &str,
    engine: &str,
    budget: Option<u64>,
    emit_dot: Option<PathBuf>,
) -> Result<ExitCode> {
    let base = load_graph(graph_spec)?;
    println!(
        "graph: {graph_spec} (order {}, size {})",
        base.order(),
        base.size()
    );
    let derived = apply_derivation(derive, &base)?;
    if derived.description != "none" {
        println!(
            "derived: {} (order {}, size {})",
            derived.description,
            derived.graph.order(),
            derived.graph.size()
        );
    }
    if let Some(path) = emit_dot {
        fs::write(&path, derived.graph.to_dot(derived.labels.as_deref()))
            .with_context(|| format!("writing {}", path.display()))?;
        println!("dot written to {}", path.display());
    }
    let target = &derived.graph;
    let labels = derived.labels.as_deref();
    match parse_invariant(invariant)? {
        None => {
            let value = edge_cover_number(target)?;
            println!("rho = {value}");
        }
        Some(kind) => {
            let budget = resolve_budget(budget);
            let mut results = Vec::new();
            match engine {
                "oracle" => results.push(oracle_solve(target, kind)?),
                "bnb" => results.push(bnb_solve(target, kind, budget)?),
                "both" => {
                    results.push(oracle_solve(target, kind)?);
                    results.push(bnb_solve(target, kind, budget)?);
                }
                _ => bail!("unknown engine '{engine}' (expected oracle, bnb, both)"),
            }
            println!("{} = {}", invariant, results[0].value);
            for r in &results {
                println!(
                    "engine {}: witness [{}], nodes {}, elapsed {} ms",
                    r.engine,
                    describe_witness(r, labels),
                    r.stats.nodes,
                    r.stats.elapsed_ms
                );
            }
            if results.len() == 2 && results[0].value != results[1].value {
                eprintln!(
                    "error: engine disagreement: oracle {} vs branch-and-bound {}",
                    results[0].value, results[1].value
                );
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_derive(
    graph_spec: &str,
    operation: &str,
    emit_dot: Option<PathBuf>,
    emit_json: Option<PathBuf>,
) -> Result<ExitCode> {
    let base = load_graph(graph_spec)?;
    let derived = apply_derivation(operation, &base)?;
    let mut wrote = false;
    if let Some(path) = &emit_dot {
        fs::write(path, derived.graph.to_dot(derived.labels.as_deref()))
            .with_context(|| format!("writing {}", path.display()))?;
        wrote = true;
    }
    if let Some(path) = &emit_json {
        fs::write(path, derived.graph.to_json_string())
            .with_context(|| format!("writing {}", path.display()))?;
        wrote = true;
    }
    if !wrote {
        println!("{}", derived.graph.to_json_string());
    }
    Ok(ExitCode::SUCCESS)
}

fn write_reports(
    out: &Option<PathBuf>,
    name: &str,
    report: &Report,
    elapsed_ms: u64,
) -> Result<()> {
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        fs::write(dir.join(format!("{name}.json")), report.to_json(elapsed_ms))?;
        fs::write(dir.join(format!("{name}.md")), report.to_markdown())?;
    }
    Ok(())
}

fn print_summary(report: &Report) {
    let s = &report.summary;
    println!(
        "{}: {} instances, {} passed, {} failed, {} skipped, {} timeouts, {} findings",
        report.sweep, s.instances, s.passed, s.failed, s.skipped, s.timeouts, s.findings
    );
    for r in &report.records {
        if matches!(
            r.status,
            midgraph::harness::Status::Fail
                | midgraph::harness::Status::Timeout
                | midgraph::harness::Status::Finding
        ) {
            let mut detail = Vec::new();
            if let (Some(p), Some(c)) = (&r.predicted, &r.computed) {
                detail.push(format!("predicted {p}, computed {c}"));
            }
            detail.extend(r.note.clone());
            println!("  {} {}: {}", r.status, r.label, detail.join("; "));
        }
    }
    for c in &report.certificates {
        println!(
            "  certificate [{}] {}: {} graph={}",
            c.kind,
            c.label,
            c.note,
            c.graph.to_json_string()
        );
    }
}

fn run_verify(
    theorem: &str,
    max_n: usize,
    budget: Duration,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let ids: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![TheoremId::from_str(theorem)?]
    };
    let cfg = SweepConfig { max_n, budget };
    let mut any_failed = false;
    let mut any_finding = false;
    for id in ids {
        let started = Instant::now();
        let report = verify(id, &cfg)?;
        print_summary(&report);
        write_reports(&out, id.id(), &report, started.elapsed().as_millis() as u64)?;
        any_failed |= report.summary.failed > 0;
        any_finding |= report.summary.findings > 0;
    }
    Ok(exit_for(any_failed, any_finding))
}

fn run_hunt(
    conjecture: &str,
    exhaustive_n: usize,
    budget: Duration,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let id = ConjectureId::from_str(conjecture)?;
    let cfg = HuntConfig {
        exhaustive_n,
        budget,
    };
    let started = Instant::now();
    let report = hunt(id, &cfg)?;
    print_summary(&report);
    write_reports(
        &out,
        &format!("conjecture-{}", id.id()),
        &report,
        started.elapsed().as_millis() as u64,
    )?;
    Ok(exit_for(
        report.summary.failed > 0,
        report.summary.findings > 0,
    ))
}

fn exit_for(any_failed: bool, any_finding: bool) -> ExitCode {
    if any_failed {
        ExitCode::from(2)
    } else if any_finding {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_list() {
    println!("checks (verify --theorem <id>):");
    for t in TheoremId::ALL {
        println!(
            "  {:<9} {}  [default: {}]",
            t.id(),
            t.title(),
            t.default_range()
        );
    }
    println!();
    println!("conjecture hunts (hunt --conjecture <id>):");
    for c in ConjectureId::ALL {
        println!("  {:<14} {}", c.id(), c.title());
    }
    println!();
    println!("families:");
    println!("  path:n  cycle:n  star:n  complete:n  complete_bipartite:n1,n2");
    println!("  wheel:n (hub plus a cycle on n-1 vertices)");
    println!("  friendship:k (k triangles sharing a hub; order 2k+1)");
    println!("  random_tree:n:seed=S  random_connected:n:seed=S");
    println!("  all_connected:n (sweeps only; every connected graph up to isomorphism, n <= 8)");
    println!("  file:PATH (JSON {{\"n\": <int>, \"edges\": [[i,j], ...]}})");
    println!();
    println!("environment: {BUDGET_ENV} overrides the default 60 s per-instance budget.");
}
