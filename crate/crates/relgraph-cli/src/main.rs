//! CLI surface: corpus ingestion, per-graph analysis, reliability classes,
//! distillation tools, marked-structure optimization, and percentile
//! reports.
//!
//! Exit codes: 0 on success, 2 on input errors, 3 when a resource cap fires.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use relgraph::db;
use relgraph::format;
use relgraph::graph::Multigraph;
use relgraph::optimizer::{
    algorithm1, export_lp, min_mu_exhaustive, minimize_kj, minimize_jk, minimize_obstructions,
    Outcome,
};
use relgraph::reliability::{class_filtration, Order};
use relgraph::structure::{distill, gamma_table, subdivide, MarkedStructure};
use relgraph::Error as RgError;

#[derive(Parser)]
#[command(
    name = "relgraph",
    about = "Exact all-terminal reliability analysis of multigraphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    NearZero,
    NearOne,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::NearZero => Order::NearZero,
            OrderArg::NearOne => Order::NearOne,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OptimizeOrder {
    Kj,
    Jk,
    Obstruction,
}

#[derive(Subcommand)]
enum Command {
    /// Build a JSONL database from graph6/sparse6 files.
    Ingest {
        /// Input files, one graph per line.
        paths: Vec<PathBuf>,
        /// Output database path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Lift the default analysis caps.
        #[arg(long)]
        force: bool,
    },
    /// Metrics, unreliability polynomial, and tree data for one graph.
    Analyze {
        /// graph6 or sparse6 line.
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Reliability-class filtration over a pool of graphs.
    Classes {
        /// File of graph6/sparse6 lines sharing (n, m).
        pool: PathBuf,
        #[arg(long, value_enum, default_value = "near-zero")]
        order: OrderArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Suppress degree-2 vertices into a structure graph.
    Distill {
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace each structure edge by a path of the given length.
    Subdivide {
        graph: String,
        /// Comma-separated chain lengths, one per structure edge.
        #[arg(long)]
        lengths: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gamma table of a marked structure.
    Gamma {
        graph: String,
        /// Comma-separated long-chain edge ids (empty for none).
        #[arg(long, default_value = "")]
        marks: String,
        #[arg(long)]
        lambda: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal long-chain markings of a structure graph.
    Optimize {
        /// Structure graph line; alternatively use --pool to optimize the
        /// near-zero winner of a pool.
        #[arg(long, conflicts_with = "pool")]
        graph: Option<String>,
        #[arg(long)]
        pool: Option<PathBuf>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        lambda: usize,
        #[arg(long, value_enum, default_value = "kj")]
        order: OptimizeOrder,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identify (or refute) a candidate uniformly most reliable marked
    /// structure over a pool of cubic graphs.
    Algorithm1 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        lambda: usize,
        /// File of cubic graphs on 2(r-1) vertices.
        #[arg(long)]
        pool: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// LP-format export of the separation objective mu_d.
    ExportLp {
        graph: String,
        #[arg(long)]
        lambda: usize,
        #[arg(long, default_value = "1")]
        distance: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Percentile ranks over a database of records sharing (n, m).
    Percentiles {
        /// JSONL database produced by `ingest`.
        #[arg(long)]
        db: PathBuf,
        /// Grid: either "start:stop:step" or a comma-separated list.
        #[arg(long, default_value = "0.05:0.8:0.05")]
        grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("RELGRAPH_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<RgError>() {
                Some(RgError::Resource(_)) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn parse_ids(text: &str) -> anyhow::Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| anyhow::anyhow!("bad id '{t}': {e}"))
        })
        .collect()
}

fn load_pool(path: &PathBuf) -> anyhow::Result<(Vec<String>, Vec<Multigraph>)> {
    let content = fs::read_to_string(path)?;
    let mut lines = Vec::new();
    let mut graphs = Vec::new();
    for line in content.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(format::parse_line(line)?);
        lines.push(line.to_string());
    }
    if graphs.is_empty() {
        anyhow::bail!("pool file {} holds no graphs", path.display());
    }
    Ok((lines, graphs))
}

fn marked_to_json(ms: &MarkedStructure) -> serde_json::Value {
    let ids: Vec<String> = ms.long_chains.iter().map(|e| e.to_string()).collect();
    json!({
        "structure": db::canonical_encoding(&ms.structure),
        "long_chains": ms.long_chains,
        "serialized": format!("{} {}", db::canonical_encoding(&ms.structure), ids.join(",")),
    })
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Ingest { paths, out, force } => {
            if paths.is_empty() {
                anyhow::bail!("ingest requires at least one input file");
            }
            let mut inputs = Vec::new();
            for p in &paths {
                inputs.push((p.display().to_string(), fs::read_to_string(p)?));
            }
            let (records, errors) = db::ingest(&inputs, force);
            for e in &errors {
                eprintln!("{e}");
            }
            emit(&out, &db::to_jsonl(&records))?;
            eprintln!("{} records, {} errors", records.len(), errors.len());
            if !errors.is_empty() {
                return Err(RgError::input(format!("{} lines failed to ingest", errors.len())).into());
            }
            Ok(())
        }
        Command::Analyze { graph, out, force } => {
            let g = format::parse_line(&graph)?;
            let record = db::build_record(&g, force)?;
            let mut value = serde_json::to_value(&record)?;
            let balance = relgraph::spanning::is_tree_balanced(&g)?;
            value["tree_balance_witness"] = json!({
                "max_edge": balance.max_edge,
                "min_edge": balance.min_edge,
                "max_value": balance.max_value.to_string(),
                "min_value": balance.min_value.to_string(),
            });
            emit(&out, &format!("{}\n", serde_json::to_string_pretty(&value)?))?;
            Ok(())
        }
        Command::Classes { pool, order, out } => {
            let (lines, graphs) = load_pool(&pool)?;
            let filt = class_filtration(&graphs, order.into())?;
            let levels: Vec<serde_json::Value> = filt
                .levels
                .iter()
                .map(|(k, survivors)| json!({ "k": k, "survivors": survivors }))
                .collect();
            let final_lines: Vec<&String> = filt
                .final_survivors()
                .iter()
                .map(|&i| &lines[i])
                .collect();
            let doc = json!({
                "order": match filt.order {
                    Order::NearZero => "near-zero",
                    Order::NearOne => "near-one",
                },
                "levels": levels,
                "final_survivors": final_lines,
            });
            emit(&out, &format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
            Ok(())
        }
        Command::Distill { graph, out } => {
            let g = format::parse_line(&graph)?;
            let d = distill(&g)?;
            let doc = json!({
                "structure": db::canonical_encoding(&d.structure),
                "n_structure": d.structure.vertex_count(),
                "chains": d.structure.edges().iter().zip(&d.chain_lengths).zip(&d.origin_labels)
                    .map(|((edge, len), path)| json!({
                        "endpoints": [edge.0, edge.1],
                        "length": len,
                        "path": path,
                    }))
                    .collect::<Vec<_>>(),
            });
            emit(&out, &format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
            Ok(())
        }
        Command::Subdivide { graph, lengths, out } => {
            let s = format::parse_line(&graph)?;
            let lengths = parse_ids(&lengths)?;
            let g = subdivide(&s, &lengths)?;
            emit(&out, &format!("{}\n", db::canonical_encoding(&g)))?;
            Ok(())
        }
        Command::Gamma {
            graph,
            marks,
            lambda,
            out,
        } => {
            let s = format::parse_line(&graph)?;
            let marks = parse_ids(&marks)?;
            if let Some(l) = lambda {
                if l != marks.len() {
                    anyhow::bail!("--lambda {l} disagrees with {} marks", marks.len());
                }
            }
            let ms = MarkedStructure::new(s, marks)?;
            let gt = gamma_table(&ms)?;
            let rows: Vec<Vec<String>> = gt
                .gamma
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect();
            let doc = json!({
                "r": gt.r,
                "lambda": ms.lambda(),
                "long_chains": ms.long_chains,
                "gamma": rows,
            });
            emit(&out, &format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
            Ok(())
        }
        Command::Optimize {
            graph,
            pool,
            r,
            lambda,
            order,
            out,
        } => {
            let s = match (graph, pool) {
                (Some(line), None) => format::parse_line(&line)?,
                (None, Some(path)) => {
                    let (_, graphs) = load_pool(&path)?;
                    let filt = class_filtration(&graphs, Order::NearZero)?;
                    graphs[filt.final_survivors()[0]].clone()
                }
                _ => anyhow::bail!("provide exactly one of --graph or --pool"),
            };
            if let Some(r) = r {
                if s.vertex_count() != 2 * (r - 1) {
                    anyhow::bail!(
                        "structure has {} vertices; expected 2(r-1) = {}",
                        s.vertex_count(),
                        2 * (r - 1)
                    );
                }
            }
            let markings = match order {
                OptimizeOrder::Kj => minimize_kj(&s, lambda)?,
                OptimizeOrder::Jk => minimize_jk(&s, lambda)?,
                OptimizeOrder::Obstruction => minimize_obstructions(&s, lambda)?,
            };
            let doc = json!({
                "structure": db::canonical_encoding(&s),
                "lambda": lambda,
                "count": markings.len(),
                "markings": markings,
            });
            emit(&out, &format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
            Ok(())
        }
        Command::Algorithm1 {
            r,
            lambda,
            pool,
            out,
        } => {
            let (_, graphs) = load_pool(&pool)?;
            let verdict = algorithm1(r, lambda, &graphs)?;
            let doc = match &verdict.outcome {
                Outcome::Candidate { candidates } => json!({
                    "kind": "candidate",
                    "winner": verdict.winner,
                    "pool_note": verdict.pool_note,
                    "candidates": candidates.iter().map(|c| {
                        let mut v = marked_to_json(&c.marked);
                        v["pool_index"] = json!(c.pool_index);
                        v
                    }).collect::<Vec<_>>(),
                }),
                Outcome::NoUniform { reason, evidence } => json!({
                    "kind": "no-uniform",
                    "winner": verdict.winner,
                    "pool_note": verdict.pool_note,
                    "reason": format!("{reason:?}"),
                    "evidence": evidence,
                }),
            };
            emit(&out, &format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
            Ok(())
        }
        Command::ExportLp {
            graph,
            lambda,
            distance,
            out,
        } => {
            let s = format::parse_line(&graph)?;
            let text = export_lp(&s, lambda, distance)?;
            let optimum = min_mu_exhaustive(&s, lambda, distance)?;
            emit(&out, &text)?;
            eprintln!("exhaustive optimum: {optimum}");
            Ok(())
        }
        Command::Percentiles { db: dbpath, grid, out } => {
            let content = fs::read_to_string(&dbpath)?;
            let records = db::from_jsonl(&content)?;
            let points = parse_grid(&grid)?;
            let rows = db::percentiles(&records, &points, None)?;
            emit(&out, &db::percentiles_csv(&rows))?;
            Ok(())
        }
    }
}

fn parse_grid(spec: &str) -> anyhow::Result<Vec<f64>> {
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            anyhow::bail!("grid must be start:stop:step or a comma list");
        }
        let (start, stop, step): (f64, f64, f64) =
            (parts[0].parse()?, parts[1].parse()?, parts[2].parse()?);
        if step <= 0.0 {
            anyhow::bail!("grid step must be positive");
        }
        let mut points = Vec::new();
        let mut i = 0;
        loop {
            let p = start + step * i as f64;
            if p > stop + 1e-12 {
                break;
            }
            points.push((p * 1e9).round() / 1e9);
            i += 1;
        }
        Ok(points)
    } else {
        spec.split(',')
            .map(|t| t.trim().parse::<f64>().map_err(Into::into))
            .collect()
    }
}
