//! Graph records, JSONL database construction, and percentile-rank tables.
//!
//! A record is reproducible bit-exactly from its encoding line: big integers
//! are serialized as decimal strings, records are sorted by (n, m, id), and
//! the id is the SHA-256 of the canonical (re-emitted, header-free) encoding.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use rayon::prelude::*;

use crate::cutsets::has_nontrivial_cutsets_up_to;
use crate::error::{Error, Result};
use crate::format;
use crate::graph::Multigraph;
use crate::reliability::{unrel_bruteforce, unrel_exact, UnrelPoly};
use crate::spanning::{is_tree_balanced, tree_number};

/// One database row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    /// SHA-256 of the canonical encoding line.
    pub id: String,
    /// Canonical header-free graph6 (simple) or sparse6 (multigraph) line.
    pub encoding: String,
    pub n: usize,
    pub m: usize,
    pub r: i64,
    pub girth: Option<usize>,
    pub edge_connectivity: usize,
    /// Bernstein coefficients b_0..b_m as decimal strings.
    pub bernstein: Vec<String>,
    pub tree_number: String,
    pub tree_balanced: bool,
    /// Largest g with no non-trivial cut set of <= g(k-2) edges, for regular
    /// graphs of degree >= 3; absent otherwise.
    pub g_free: Option<usize>,
    pub is_simple: bool,
}

impl GraphRecord {
    pub fn graph(&self) -> Result<Multigraph> {
        format::parse_line(&self.encoding)
    }

    pub fn poly(&self) -> Result<UnrelPoly> {
        let bernstein: Vec<BigUint> = self
            .bernstein
            .iter()
            .map(|s| {
                BigUint::parse_bytes(s.as_bytes(), 10)
                    .ok_or_else(|| Error::input(format!("bad coefficient {s}")))
            })
            .collect::<Result<_>>()?;
        UnrelPoly::from_bernstein(bernstein)
    }
}

/// Edge count below which the 2^m scan is used instead of
/// deletion-contraction.
pub const BRUTE_DEFAULT_LIMIT: usize = 22;

/// Canonical encoding: header-free graph6 for simple graphs, sparse6
/// otherwise.
pub fn canonical_encoding(g: &Multigraph) -> String {
    if g.is_simple() {
        format::emit_graph6(g).expect("simple graph encodes as graph6")
    } else {
        format::emit_sparse6(g)
    }
}

fn record_id(encoding: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(encoding.as_bytes());
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Builds the full record for one graph. `force` lifts the brute-force
/// threshold and the enumeration budgets.
pub fn build_record(g: &Multigraph, force: bool) -> Result<GraphRecord> {
    g.require_analyzable("build_record")?;
    let encoding = canonical_encoding(g);
    let metrics = g.metrics();
    let poly = if g.edge_count() <= BRUTE_DEFAULT_LIMIT
        || (force && g.edge_count() <= crate::reliability::BRUTEFORCE_EDGE_LIMIT)
    {
        unrel_bruteforce(g)?
    } else {
        unrel_exact(g)?
    };
    let trees = tree_number(g)?;
    let balance = is_tree_balanced(g)?;
    let g_free = match metrics.is_k_regular {
        Some(k) if k >= 3 => Some(has_nontrivial_cutsets_up_to(g, None)?.g_free),
        _ => None,
    };
    Ok(GraphRecord {
        id: record_id(&encoding),
        encoding,
        n: g.vertex_count(),
        m: g.edge_count(),
        r: g.redundancy(),
        girth: metrics.girth,
        edge_connectivity: metrics.edge_connectivity,
        bernstein: poly.bernstein.iter().map(|b| b.to_string()).collect(),
        tree_number: trees.to_string(),
        tree_balanced: balance.balanced,
        g_free,
        is_simple: g.is_simple(),
    })
}

/// A per-line ingestion failure, tagged with its source and line number.
#[derive(Debug, Clone)]
pub struct IngestError {
    pub source: String,
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for IngestError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.source, self.line, self.message)
    }
}

/// Ingests graph6/sparse6 text content. Lines are processed in parallel;
/// failures are collected rather than aborting the run. Records come back
/// sorted by (n, m, id) with exact duplicates dropped.
pub fn ingest(inputs: &[(String, String)], force: bool) -> (Vec<GraphRecord>, Vec<IngestError>) {
    let mut tasks = Vec::new();
    for (source, content) in inputs {
        for (lineno, line) in content.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            tasks.push((source.clone(), lineno + 1, line.to_string()));
        }
    }
    let results: Vec<std::result::Result<GraphRecord, IngestError>> = tasks
        .par_iter()
        .map(|(source, lineno, line)| {
            format::parse_line(line)
                .and_then(|g| build_record(&g, force))
                .map_err(|e| IngestError {
                    source: source.clone(),
                    line: *lineno,
                    message: e.to_string(),
                })
        })
        .collect();
    let mut records = Vec::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(e) => errors.push(e),
        }
    }
    records.sort_by(|a, b| (a.n, a.m, &a.id).cmp(&(b.n, b.m, &b.id)));
    records.dedup_by(|a, b| a.id == b.id && a.encoding == b.encoding);
    (records, errors)
}

/// Serializes records as JSONL, one record per line.
pub fn to_jsonl(records: &[GraphRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

/// Parses a JSONL database.
pub fn from_jsonl(content: &str) -> Result<Vec<GraphRecord>> {
    content
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            serde_json::from_str(l).map_err(|e| Error::input(format!("bad record line: {e}")))
        })
        .collect()
}

pub const DEFAULT_P_MAX: f64 = 0.8;

/// One percentile-table row.
#[derive(Debug, Clone)]
pub struct PercentileRow {
    pub p: f64,
    pub id: String,
    pub unreliability: f64,
    /// 0 = most reliable at this p, 1 = least; ties share the mean rank.
    pub normalized_rank: f64,
    pub girth: Option<usize>,
}

/// Ranks every record at every grid point. All records must share (n, m);
/// grid points must lie in [0, p_max].
pub fn percentiles(
    records: &[GraphRecord],
    grid: &[f64],
    p_max: Option<f64>,
) -> Result<Vec<PercentileRow>> {
    if records.is_empty() {
        return Err(Error::input("percentiles require at least one record"));
    }
    let p_max = p_max.unwrap_or(DEFAULT_P_MAX);
    let (n0, m0) = (records[0].n, records[0].m);
    if records.iter().any(|r| r.n != n0 || r.m != m0) {
        return Err(Error::input("percentiles require records sharing (n, m)"));
    }
    if grid.iter().any(|&p| !(0.0..=p_max).contains(&p)) {
        return Err(Error::input(format!(
            "grid points must lie in [0, {p_max}]"
        )));
    }
    let polys: Vec<UnrelPoly> = records.iter().map(|r| r.poly()).collect::<Result<_>>()?;
    let count = records.len();
    let mut rows = Vec::with_capacity(grid.len() * count);
    for &p in grid {
        let values: Vec<f64> = polys.iter().map(|u| u.eval_f64(p)).collect();
        let mut order: Vec<usize> = (0..count).collect();
        order.sort_by(|&a, &b| {
            values[a]
                .partial_cmp(&values[b])
                .unwrap()
                .then_with(|| records[a].id.cmp(&records[b].id))
        });
        // mean rank over ties
        let mut rank = vec![0.0f64; count];
        let mut i = 0;
        while i < count {
            let mut j = i;
            while j + 1 < count && values[order[j + 1]] == values[order[i]] {
                j += 1;
            }
            let mean = (i + j) as f64 / 2.0;
            for &idx in &order[i..=j] {
                rank[idx] = mean;
            }
            i = j + 1;
        }
        let denom = if count > 1 { (count - 1) as f64 } else { 1.0 };
        for idx in 0..count {
            rows.push(PercentileRow {
                p,
                id: records[idx].id.clone(),
                unreliability: values[idx],
                normalized_rank: rank[idx] / denom,
                girth: records[idx].girth,
            });
        }
    }
    Ok(rows)
}

/// CSV with a header, stable float formatting.
pub fn percentiles_csv(rows: &[PercentileRow]) -> String {
    let mut out = String::from("p,id,unreliability,normalized_rank,girth\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.p,
            r.id,
            r.unreliability,
            r.normalized_rank,
            r.girth.map_or(String::from("inf"), |g| g.to_string())
        ));
    }
    out
}
