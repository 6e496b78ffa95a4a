#![allow(dead_code)]

use std::path::PathBuf;

use relgraph::format;
use relgraph::Multigraph;

pub fn cycle(n: usize) -> Multigraph {
    Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph::new(n, edges).unwrap()
}

pub fn petersen() -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Multigraph::new(10, edges).unwrap()
}

/// Wagner graph (Moebius-Kantor ladder V8): 8-cycle plus the four diameters.
pub fn wagner() -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend((0..4).map(|i| (i, i + 4)));
    Multigraph::new(8, edges).unwrap()
}

/// Heawood graph: the unique cubic girth-6 graph on 14 vertices.
pub fn heawood() -> Multigraph {
    relgraph::girth6_family(14).unwrap()
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> Multigraph {
    Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../testdata")
        .join(name)
}

pub fn load_corpus(name: &str) -> Vec<Multigraph> {
    let content = std::fs::read_to_string(testdata(name))
        .unwrap_or_else(|e| panic!("reading {name}: {e}"));
    content
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| format::parse_line(l).unwrap_or_else(|e| panic!("parsing {l}: {e}")))
        .collect()
}
