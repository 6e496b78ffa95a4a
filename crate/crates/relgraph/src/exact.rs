//! Exact unreliability by weighted deletion-contraction.
//!
//! Each edge carries a pair of polynomials (work, fail) in the failure
//! probability p, initially (1-p, p). Series, parallel, loop, leaf and
//! bridge reductions collapse the graph between factoring steps; reduced
//! kernels are memoized under a normalized labeled representation (equal
//! keys imply equal weighted graphs, so memoization never changes results,
//! it only saves work).
//!
//! Reduction rules, conditioning on edge states:
//!   loop e:          R(G) = (w_e + f_e) * R(G - e)
//!   parallel e1,e2:  one edge with (w1w2 + w1f2 + f1w2, f1f2)
//!   leaf u via e:    R(G) = w_e * R(G - u)
//!   series via w:    one edge with (w1w2, w1f2 + f1w2); the both-fail
//!                    state isolates w and contributes nothing
//!   bridge e:        R(G) = w_e * R(G / e)

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::poly::{power_to_bernstein, Poly};
use crate::reliability::UnrelPoly;

pub const EXACT_EDGE_LIMIT: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct WEdge {
    u: usize,
    v: usize,
    work: Vec<BigInt>,
    fail: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct WGraph {
    n: usize,
    edges: Vec<WEdge>,
}

impl WEdge {
    fn work_poly(&self) -> Poly {
        Poly {
            coeffs: self.work.clone(),
        }
    }

    fn fail_poly(&self) -> Poly {
        Poly {
            coeffs: self.fail.clone(),
        }
    }
}

impl WGraph {
    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            if e.u != e.v {
                deg[e.v] += 1;
            } else {
                deg[e.u] += 1;
            }
        }
        deg
    }

    fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    fn remove_vertex(&mut self, x: usize) {
        self.edges.retain(|e| e.u != x && e.v != x);
        for e in &mut self.edges {
            if e.u > x {
                e.u -= 1;
            }
            if e.v > x {
                e.v -= 1;
            }
        }
        self.n -= 1;
    }

    /// Contract edge `idx`: merge its endpoints, keep all other edges.
    fn contract(&self, idx: usize) -> WGraph {
        let (a, b) = {
            let e = &self.edges[idx];
            (e.u.min(e.v), e.u.max(e.v))
        };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, e) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            let map = |x: usize| {
                let y = if x == b { a } else { x };
                if y > b {
                    y - 1
                } else {
                    y
                }
            };
            let (mut u, mut v) = (map(e.u), map(e.v));
            if u > v {
                std::mem::swap(&mut u, &mut v);
            }
            edges.push(WEdge {
                u,
                v,
                work: e.work.clone(),
                fail: e.fail.clone(),
            });
        }
        WGraph {
            n: self.n - 1,
            edges,
        }
    }

    fn delete(&self, idx: usize) -> WGraph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        WGraph { n: self.n, edges }
    }

    /// Deterministic relabeling (stable sort by degree) plus edge-list
    /// sorting; equal keys are equal weighted graphs.
    fn memo_key(&self) -> WGraph {
        let deg = self.degrees();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (deg[v], v));
        let mut rank = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut edges: Vec<WEdge> = self
            .edges
            .iter()
            .map(|e| {
                let (mut u, mut v) = (rank[e.u], rank[e.v]);
                if u > v {
                    std::mem::swap(&mut u, &mut v);
                }
                WEdge {
                    u,
                    v,
                    work: e.work.clone(),
                    fail: e.fail.clone(),
                }
            })
            .collect();
        edges.sort_by(|a, b| (a.u, a.v).cmp(&(b.u, b.v)).then_with(|| a.work.cmp(&b.work)));
        WGraph { n: self.n, edges }
    }
}

/// Applies loop/parallel/leaf/series reductions to a fixpoint.
/// Returns the multiplicative factor accumulated along the way; a zero
/// factor signals a disconnected graph.
fn reduce(mut g: WGraph) -> (Poly, WGraph) {
    let mut factor = Poly::constant(1);
    'outer: loop {
        // loops
        if let Some(i) = g.edges.iter().position(|e| e.u == e.v) {
            let e = g.edges.remove(i);
            factor = factor.mul(&e.work_poly().add(&e.fail_poly()));
            continue;
        }
        if g.n <= 1 {
            break;
        }
        let deg = g.degrees();
        // isolated vertex in a multi-vertex graph: disconnected
        if let Some(x) = (0..g.n).find(|&v| deg[v] == 0) {
            if g.n > 1 {
                return (Poly::zero(), g);
            }
            let _ = x;
        }
        // parallel edges
        for i in 0..g.edges.len() {
            for j in i + 1..g.edges.len() {
                if g.edges[i].u == g.edges[j].u && g.edges[i].v == g.edges[j].v {
                    let (w1, f1) = (g.edges[i].work_poly(), g.edges[i].fail_poly());
                    let (w2, f2) = (g.edges[j].work_poly(), g.edges[j].fail_poly());
                    let work = w1.mul(&w2).add(&w1.mul(&f2)).add(&f1.mul(&w2));
                    let fail = f1.mul(&f2);
                    g.edges[i].work = work.coeffs;
                    g.edges[i].fail = fail.coeffs;
                    g.edges.remove(j);
                    continue 'outer;
                }
            }
        }
        // leaf
        if let Some(x) = (0..g.n).find(|&v| deg[v] == 1) {
            let idx = g
                .edges
                .iter()
                .position(|e| e.u == x || e.v == x)
                .expect("degree-1 vertex has an edge");
            factor = factor.mul(&g.edges[idx].work_poly());
            g.remove_vertex(x);
            continue;
        }
        // series through a degree-2 vertex
        if let Some(x) = (0..g.n).find(|&v| deg[v] == 2) {
            let mut inc = g
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.u == x || e.v == x);
            let (i1, e1) = inc.next().expect("degree 2");
            let (i2, e2) = inc.next().expect("degree 2");
            let a = if e1.u == x { e1.v } else { e1.u };
            let b = if e2.u == x { e2.v } else { e2.u };
            debug_assert_ne!(a, b, "parallel pair should have merged first");
            let (w1, f1) = (e1.work_poly(), e1.fail_poly());
            let (w2, f2) = (e2.work_poly(), e2.fail_poly());
            let work = w1.mul(&w2);
            let fail = w1.mul(&f2).add(&f1.mul(&w2));
            let (i1, i2) = (i1.min(i2), i1.max(i2));
            g.edges.remove(i2);
            g.edges.remove(i1);
            g.edges.push(WEdge {
                u: a.min(b),
                v: a.max(b),
                work: work.coeffs,
                fail: fail.coeffs,
            });
            g.remove_vertex(x);
            continue;
        }
        break;
    }
    (factor, g)
}

fn reliability(g: WGraph, memo: &mut HashMap<WGraph, Poly>) -> Poly {
    let (factor, kernel) = reduce(g);
    if factor.is_zero() {
        return Poly::zero();
    }
    if kernel.n <= 1 {
        return factor;
    }
    let key = kernel.memo_key();
    if let Some(r) = memo.get(&key) {
        return factor.mul(r);
    }
    // factoring edge: endpoints with the largest degree sum tend to create
    // parallels fastest after contraction
    let deg = kernel.degrees();
    let idx = (0..kernel.edges.len())
        .max_by_key(|&i| deg[kernel.edges[i].u] + deg[kernel.edges[i].v])
        .expect("kernel has edges");
    let work = kernel.edges[idx].work_poly();
    let fail = kernel.edges[idx].fail_poly();

    let contracted = kernel.contract(idx);
    let mut total = work.mul(&reliability(contracted, memo));
    let deleted = kernel.delete(idx);
    if deleted.is_connected() {
        total = total.add(&fail.mul(&reliability(deleted, memo)));
    }
    memo.insert(key, total.clone());
    factor.mul(&total)
}

/// Exact unreliability polynomial via deletion-contraction.
pub fn unreliability(g: &Multigraph) -> Result<UnrelPoly> {
    g.require_analyzable("unrel_exact")?;
    let m = g.edge_count();
    if m > EXACT_EDGE_LIMIT {
        return Err(Error::resource(format!(
            "deletion-contraction capped at m <= {EXACT_EDGE_LIMIT}, got m = {m}"
        )));
    }
    let wg = WGraph {
        n: g.vertex_count(),
        edges: g
            .edges()
            .iter()
            .map(|&(u, v)| WEdge {
                u: u as usize,
                v: v as usize,
                work: Poly::q().coeffs,
                fail: Poly::p().coeffs,
            })
            .collect(),
    };
    let mut memo = HashMap::new();
    let r = reliability(wg, &mut memo);
    let u = Poly::constant(1).sub(&r);
    let a = u.coeffs_padded(m + 1);
    let b = power_to_bernstein(&a);
    let mut bernstein = Vec::with_capacity(m + 1);
    for x in b {
        if x.is_negative() {
            return Err(Error::input(
                "internal error: negative Bernstein coefficient",
            ));
        }
        bernstein.push(x.to_biguint().expect("nonnegative"));
    }
    UnrelPoly::from_bernstein(bernstein)
}
