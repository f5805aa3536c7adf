//! Command implementations for the `lexeuler` binary.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but has no
//! answer (not Eulerian, search limit hit), 2 for usage and parse errors.

use std::fmt::Display;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use lexeuler::format::{parse_dictionary, parse_graph, write_graph, EMPTY_NAME};
use lexeuler::oracle::{
    best_count, enumerate_eulerian_trails, random_eulerian_graph, GeneratorConfig, OracleError,
};
use lexeuler::{
    build_debruijn_graph, minimal_debruijn_sequence, minimal_eulerian_trail, validate_sequence,
    DebruijnError, EulerianReport, LabeledDigraph, Symbol, TrailError, VertexId,
};
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lexeuler",
    version,
    about = "Minimal Eulerian trails and de Bruijn sequences"
)]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report whether a graph file is Eulerian.
    Check { graph: PathBuf },
    /// Minimal Eulerian trail from a start vertex.
    Euler {
        graph: PathBuf,
        /// Start vertex (default: smallest vertex name with arcs).
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum, default_value_t = TrailEmit::Label)]
        emit: TrailEmit,
    },
    /// Minimal de Bruijn sequence of a dictionary file.
    Debruijn {
        dictionary: PathBuf,
        #[arg(long, value_enum, default_value_t = DebruijnEmit::Sequence)]
        emit: DebruijnEmit,
    },
    /// List the labels of every Eulerian trail from a start vertex.
    Enumerate {
        graph: PathBuf,
        #[arg(long)]
        start: Option<String>,
        /// Maximum number of search states.
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
    },
    /// Count Eulerian trails from a start vertex with the BEST theorem.
    Count {
        graph: PathBuf,
        #[arg(long)]
        start: Option<String>,
    },
    /// Time the trail engine on random graphs of doubling size.
    Bench {
        #[arg(long, default_value_t = 1024)]
        vertices: usize,
        /// Cycles in the first row; doubled on every following row.
        #[arg(long, default_value_t = 64)]
        cycles: usize,
        /// Label alphabet size (default: the row's cycle count).
        #[arg(long)]
        alphabet: Option<u32>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 5)]
        rows: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TrailEmit {
    Label,
    Trail,
    Stats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DebruijnEmit {
    Sequence,
    Graph,
    Both,
}

/// A failed command: the exit code and the message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn domain(message: impl Display) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: message.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("write failed: {e}"))
    }
}

type CmdResult = Result<u8, Failure>;

/// Runs `cli`, writing results to `out`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Check { graph } => cmd_check(graph, cli.json, out),
        Command::Euler { graph, start, emit } => {
            cmd_euler(graph, start.as_deref(), *emit, cli.json, out)
        }
        Command::Debruijn { dictionary, emit } => cmd_debruijn(dictionary, *emit, cli.json, out),
        Command::Enumerate {
            graph,
            start,
            limit,
        } => cmd_enumerate(graph, start.as_deref(), *limit, cli.json, out),
        Command::Count { graph, start } => cmd_count(graph, start.as_deref(), cli.json, out),
        Command::Bench {
            vertices,
            cycles,
            alphabet,
            seed,
            repeats,
            rows,
        } => {
            let plan = BenchPlan {
                vertices: *vertices,
                cycles: *cycles,
                alphabet: *alphabet,
                seed: *seed,
                repeats: (*repeats).max(1),
                rows: *rows,
            };
            cmd_bench(&plan, cli.json, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<LabeledDigraph<char>, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn resolve_start(g: &LabeledDigraph<char>, start: Option<&str>) -> Result<VertexId, Failure> {
    match start {
        Some(name) => g
            .vertex(name)
            .ok_or_else(|| Failure::usage(format!("unknown vertex {name}"))),
        // vertex ids of parsed graphs follow name order
        None => g
            .vertices()
            .find(|&v| g.has_arcs(v))
            .ok_or_else(|| Failure::usage("graph has no arcs; pass --start")),
    }
}

fn not_eulerian(report: &EulerianReport) -> Failure {
    let mut lines: Vec<String> = report
        .offending_vertices
        .iter()
        .map(|d| {
            format!(
                "not eulerian: vertex {} unbalanced (in {}, out {})",
                d.vertex, d.in_degree, d.out_degree
            )
        })
        .collect();
    if !report.strongly_connected_support {
        lines.push("not eulerian: arcs do not form a single strongly connected component".into());
    }
    Failure::domain(lines.join("\n"))
}

fn trail_failure(e: TrailError) -> Failure {
    match e {
        TrailError::NotEulerian(report) => not_eulerian(&report),
        TrailError::UnknownVertex(_) | TrailError::IsolatedStart(_) => Failure::usage(e),
        TrailError::SpliceMismatch { .. } => Failure::domain(e),
    }
}

fn word<L: Symbol>(symbols: &[L]) -> String {
    symbols.iter().map(ToString::to_string).collect()
}

fn report_json(g: &LabeledDigraph<char>, r: &EulerianReport) -> Value {
    json!({
        "eulerian": r.is_eulerian,
        "balanced": r.balanced,
        "strongly_connected": r.strongly_connected_support,
        "vertices": g.vertex_count(),
        "arcs": g.arc_count(),
        "unbalanced": r.offending_vertices.iter().map(|d| json!({
            "vertex": d.vertex, "in_degree": d.in_degree, "out_degree": d.out_degree,
        })).collect::<Vec<_>>(),
    })
}

pub fn cmd_check(path: &Path, as_json: bool, out: &mut dyn Write) -> CmdResult {
    let g = load_graph(path)?;
    let r = g.check_eulerian();
    if as_json {
        writeln!(out, "{}", report_json(&g, &r))?;
    } else {
        writeln!(out, "eulerian: {}", r.is_eulerian)?;
        writeln!(out, "balanced: {}", r.balanced)?;
        writeln!(out, "strongly connected: {}", r.strongly_connected_support)?;
        writeln!(out, "vertices: {}", g.vertex_count())?;
        writeln!(out, "arcs: {}", g.arc_count())?;
        for d in &r.offending_vertices {
            writeln!(
                out,
                "unbalanced: {} (in {}, out {})",
                d.vertex, d.in_degree, d.out_degree
            )?;
        }
    }
    Ok(if r.is_eulerian { EXIT_OK } else { EXIT_DOMAIN })
}

pub fn cmd_euler(
    path: &Path,
    start: Option<&str>,
    emit: TrailEmit,
    as_json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let g = load_graph(path)?;
    let r = resolve_start(&g, start)?;
    let (trail, stats) = minimal_eulerian_trail(&g, r).map_err(trail_failure)?;
    let label = word(trail.label());
    let bound = if stats.within_visit_bound() {
        "ok"
    } else {
        "VIOLATED"
    };
    if as_json {
        let v = match emit {
            TrailEmit::Label => json!({ "start": g.name(r), "label": label }),
            TrailEmit::Trail => json!({
                "start": g.name(r),
                "label": label,
                "vertices": trail.vertices().iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
            }),
            TrailEmit::Stats => json!({
                "arcs": stats.arcs_total,
                "arc_visits": stats.arc_visits,
                "splices": stats.splices,
                "visit_bound_ok": stats.within_visit_bound(),
            }),
        };
        writeln!(out, "{v}")?;
    } else {
        match emit {
            TrailEmit::Label => writeln!(out, "{label}")?,
            TrailEmit::Trail => writeln!(out, "{}", trail.display(&g))?,
            TrailEmit::Stats => {
                writeln!(out, "arcs: {}", stats.arcs_total)?;
                writeln!(out, "arc_visits: {}", stats.arc_visits)?;
                writeln!(out, "splices: {}", stats.splices)?;
                writeln!(out, "arc_visits ≤ 2·|A|: {bound}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_debruijn(
    path: &Path,
    emit: DebruijnEmit,
    as_json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let dict = parse_dictionary(&read(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let graph_text = || write_graph(build_debruijn_graph(&dict).graph());
    let sequence = match emit {
        DebruijnEmit::Graph => None,
        _ => {
            let s = minimal_debruijn_sequence(&dict).map_err(|e| match e {
                DebruijnError::NoDeBruijnSequence(report) => not_eulerian(&report),
                other => Failure::domain(other),
            })?;
            if !validate_sequence(s.symbols(), &dict) {
                return Err(Failure::domain(
                    "internal error: sequence failed validation",
                ));
            }
            Some(s.to_string())
        }
    };
    let graph = matches!(emit, DebruijnEmit::Graph | DebruijnEmit::Both).then(graph_text);
    if as_json {
        let mut v = json!({ "span": dict.span(), "words": dict.len() });
        if let Some(s) = &sequence {
            v["sequence"] = json!(s);
        }
        if let Some(text) = &graph {
            let arcs: Vec<Vec<&str>> = text.lines().map(|l| l.split(' ').collect()).collect();
            v["graph"] = json!(arcs);
            v["empty_vertex_name"] = json!(EMPTY_NAME);
        }
        writeln!(out, "{v}")?;
    } else {
        if let Some(s) = &sequence {
            writeln!(out, "{s}")?;
        }
        if let Some(text) = &graph {
            write!(out, "{text}")?;
        }
    }
    Ok(EXIT_OK)
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::NotEulerian(report) => not_eulerian(&report),
        OracleError::UnknownVertex(_) => Failure::usage(e),
        other => Failure::domain(other),
    }
}

pub fn cmd_enumerate(
    path: &Path,
    start: Option<&str>,
    limit: u64,
    as_json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let g = load_graph(path)?;
    let r = resolve_start(&g, start)?;
    let e = enumerate_eulerian_trails(&g, r, limit).map_err(oracle_failure)?;
    let labels: Vec<String> = e.labels.iter().map(|l| word(l)).collect();
    if as_json {
        writeln!(
            out,
            "{}",
            json!({ "start": g.name(r), "count": e.count, "labels": labels })
        )?;
    } else {
        for l in &labels {
            writeln!(out, "{l}")?;
        }
        writeln!(out, "count: {}", e.count)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_count(
    path: &Path,
    start: Option<&str>,
    as_json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let g = load_graph(path)?;
    let r = resolve_start(&g, start)?;
    let count = best_count(&g, r).map_err(oracle_failure)?;
    if as_json {
        // decimal string: counts overflow JSON numbers quickly
        writeln!(
            out,
            "{}",
            json!({ "start": g.name(r), "count": count.to_string() })
        )?;
    } else {
        writeln!(out, "{count}")?;
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchPlan {
    pub vertices: usize,
    pub cycles: usize,
    pub alphabet: Option<u32>,
    pub seed: u64,
    pub repeats: usize,
    pub rows: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub arcs: usize,
    pub best: Duration,
    pub arc_visits: usize,
}

impl BenchRow {
    pub fn visits_per_arc(&self) -> f64 {
        self.arc_visits as f64 / self.arcs.max(1) as f64
    }

    pub fn ns_per_arc(&self) -> f64 {
        self.best.as_nanos() as f64 / self.arcs.max(1) as f64
    }
}

/// Row `i` uses `cycles · 2^i` cycles. Failed rows carry the error text.
pub fn bench_rows(plan: &BenchPlan) -> Vec<Result<BenchRow, String>> {
    (0..plan.rows)
        .map(|i| {
            let cycles = plan.cycles << i;
            let cfg = GeneratorConfig {
                vertex_count: plan.vertices,
                cycle_count: cycles,
                alphabet_size: plan.alphabet.unwrap_or(cycles as u32),
                seed: plan.seed.wrapping_add(i as u64),
            };
            let g = random_eulerian_graph(cfg).map_err(|e| e.to_string())?;
            let r = g.vertices().find(|&v| g.has_arcs(v)).ok_or("empty graph")?;
            let mut best = Duration::MAX;
            let mut arc_visits = 0;
            for _ in 0..plan.repeats {
                let started = Instant::now();
                let (_, stats) = minimal_eulerian_trail(&g, r).map_err(|e| e.to_string())?;
                best = best.min(started.elapsed());
                arc_visits = stats.arc_visits;
            }
            Ok(BenchRow {
                arcs: g.arc_count(),
                best,
                arc_visits,
            })
        })
        .collect()
}

pub fn cmd_bench(plan: &BenchPlan, as_json: bool, out: &mut dyn Write) -> CmdResult {
    let rows = bench_rows(plan);
    let all_ok = rows.iter().flatten().all(|r| r.arc_visits <= 2 * r.arcs);
    if as_json {
        let v: Vec<Value> = rows
            .iter()
            .map(|row| match row {
                Ok(r) => json!({
                    "arcs": r.arcs,
                    "seconds": r.best.as_secs_f64(),
                    "ns_per_arc": r.ns_per_arc(),
                    "visits_per_arc": r.visits_per_arc(),
                }),
                Err(e) => json!({ "error": e }),
            })
            .collect();
        writeln!(out, "{}", json!({ "rows": v, "visit_bound_ok": all_ok }))?;
    } else {
        writeln!(
            out,
            "{:>10} {:>12} {:>10} {:>11}",
            "arcs", "time_ms", "ns/arc", "visits/arc"
        )?;
        for (i, row) in rows.iter().enumerate() {
            match row {
                Ok(r) => writeln!(
                    out,
                    "{:>10} {:>12.3} {:>10.1} {:>11.2}",
                    r.arcs,
                    r.best.as_secs_f64() * 1e3,
                    r.ns_per_arc(),
                    r.visits_per_arc()
                )?,
                Err(e) => writeln!(out, "row {i}: {e}")?,
            }
        }
        writeln!(
            out,
            "arc_visits ≤ 2·|A|: {}",
            if all_ok { "ok" } else { "VIOLATED" }
        )?;
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_DOMAIN })
}
