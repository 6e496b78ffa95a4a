//! Spanning-tree counts via the matrix-tree theorem, tree-balance testing,
//! and the tree-number polynomial in the chain-length variable c.
//!
//! Determinants are computed by fraction-free (Bareiss) elimination over
//! unbounded integers; no floating point enters any count.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::cutsets::FixedPopcount;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

/// Fraction-free determinant of an integer matrix (consumed).
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let dim = a.len();
    if dim == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..dim - 1 {
        if a[k][k].is_zero() {
            match (k + 1..dim).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..dim {
            for j in k + 1..dim {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[dim - 1][dim - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn tree_number_masked(g: &Multigraph, removed: u64) -> BigInt {
    let n = g.vertex_count();
    if n == 1 {
        return BigInt::one();
    }
    // Laplacian minor (drop last row/column); parallel edges weight the
    // entries with their multiplicity
    let mut lap = vec![vec![BigInt::zero(); n - 1]; n - 1];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        // the mask only addresses the first 64 edges; callers that remove
        // edges enforce m <= 63
        if (e < 64 && removed >> e & 1 == 1) || u == v {
            continue;
        }
        let (u, v) = (u as usize, v as usize);
        if u < n - 1 {
            lap[u][u] += 1;
        }
        if v < n - 1 {
            lap[v][v] += 1;
        }
        if u < n - 1 && v < n - 1 {
            lap[u][v] -= 1;
            lap[v][u] -= 1;
        }
    }
    bareiss_det(lap)
}

/// Number of spanning trees (Kirchhoff); 0 for disconnected input.
pub fn tree_number(g: &Multigraph) -> Result<BigUint> {
    if g.has_loops() {
        return Err(Error::input("tree_number: graph has loops"));
    }
    let det = tree_number_masked(g, 0);
    debug_assert!(!det.is_negative());
    Ok(det.to_biguint().unwrap_or_default())
}

/// `T(G - e)`; 0 when e is a bridge.
pub fn tree_number_minus_edge(g: &Multigraph, e: EdgeId) -> Result<BigUint> {
    if e >= g.edge_count() {
        return Err(Error::input(format!("edge id {e} out of range")));
    }
    if g.has_loops() {
        return Err(Error::input("tree_number_minus_edge: graph has loops"));
    }
    if g.edge_count() > 63 {
        return Err(Error::input("mask kernels require m <= 63"));
    }
    let det = tree_number_masked(g, 1u64 << e);
    Ok(det.to_biguint().unwrap_or_default())
}

/// Outcome of the tree-balance test with extremal witnesses.
#[derive(Debug, Clone)]
pub struct BalanceReport {
    pub balanced: bool,
    pub max_edge: EdgeId,
    pub min_edge: EdgeId,
    pub max_value: BigUint,
    pub min_value: BigUint,
}

/// A graph is tree-balanced iff `T(G - e)` is the same for every edge.
pub fn is_tree_balanced(g: &Multigraph) -> Result<BalanceReport> {
    g.require_analyzable("is_tree_balanced")?;
    if g.edge_count() == 0 {
        return Err(Error::input("is_tree_balanced: graph has no edges"));
    }
    let values: Vec<BigUint> = (0..g.edge_count())
        .map(|e| tree_number_minus_edge(g, e))
        .collect::<Result<_>>()?;
    let (max_edge, max_value) = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(e, v)| (e, v.clone()))
        .unwrap();
    let (min_edge, min_value) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)))
        .map(|(e, v)| (e, v.clone()))
        .unwrap();
    Ok(BalanceReport {
        balanced: max_value == min_value,
        max_edge,
        min_edge,
        max_value,
        min_value,
    })
}

/// Tree number of a subdivision as a polynomial in the short-chain length c:
/// `T = sum_i coeffs[i] * c^i`, where chain e has length `c + r_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePoly {
    pub redundancy: usize,
    /// `coeffs[i]` multiplies `c^i`; length `redundancy + 1`.
    pub coeffs: Vec<BigInt>,
}

impl TreePoly {
    pub fn eval(&self, c: i64) -> BigInt {
        let c = BigInt::from(c);
        let mut acc = BigInt::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc * &c + coeff;
        }
        acc
    }
}

/// Expands `T = sum_{X subset E(S)} T(S - X) (prod_{e in X} r_e) c^(r-|X|)`.
/// Only subsets of edges with nonzero `r_e` contribute; `T(S - X)` values
/// are memoized by mask.
pub fn tree_poly(s: &Multigraph, r_assign: &[i64]) -> Result<TreePoly> {
    s.require_analyzable("tree_poly")?;
    if r_assign.len() != s.edge_count() {
        return Err(Error::input("tree_poly: r_assign must cover every edge"));
    }
    let m = s.edge_count();
    if m > 63 {
        return Err(Error::input("mask kernels require m <= 63"));
    }
    let r = s.redundancy();
    if r < 0 {
        return Err(Error::input("tree_poly: structure graph must be connected"));
    }
    let r = r as usize;
    let nonzero: Vec<EdgeId> = (0..m).filter(|&e| r_assign[e] != 0).collect();
    if nonzero.len() > 24 {
        return Err(Error::resource(format!(
            "tree_poly scans 2^{} subsets; at most 24 edges may carry nonzero r",
            nonzero.len()
        )));
    }
    let mut coeffs = vec![BigInt::zero(); r + 1];
    let mut memo: HashMap<u64, BigInt> = HashMap::new();
    for choice in 0u64..(1 << nonzero.len()) {
        let size = choice.count_ones() as usize;
        if size > r {
            continue;
        }
        let mut mask = 0u64;
        let mut product = BigInt::one();
        for (bit, &e) in nonzero.iter().enumerate() {
            if choice >> bit & 1 == 1 {
                mask |= 1 << e;
                product *= BigInt::from(r_assign[e]);
            }
        }
        let trees = memo
            .entry(mask)
            .or_insert_with(|| tree_number_masked(s, mask))
            .clone();
        if trees.is_zero() {
            continue;
        }
        coeffs[r - size] += trees * product;
    }
    Ok(TreePoly {
        redundancy: r,
        coeffs,
    })
}

/// `sum over spanning trees T of S of prod_{e not in T} lengths[e]` —
/// the tree number of the subdivision where chain e gets `lengths[e]` edges.
/// Computed by direct spanning-tree enumeration, independently of both
/// [`tree_poly`] and the matrix-tree route.
pub fn tree_number_of_subdivision(s: &Multigraph, lengths: &[usize]) -> Result<BigUint> {
    s.require_analyzable("tree_number_of_subdivision")?;
    if lengths.len() != s.edge_count() {
        return Err(Error::input("lengths must cover every edge"));
    }
    if lengths.iter().any(|&l| l < 1) {
        return Err(Error::input("chain lengths must be at least 1"));
    }
    let n = s.vertex_count();
    let m = s.edge_count();
    if m > 63 {
        return Err(Error::input("mask kernels require m <= 63"));
    }
    if n == 1 {
        return Ok(BigUint::one());
    }
    let mut total = BigUint::zero();
    for mask in FixedPopcount::new(m, n - 1) {
        // mask is a candidate spanning tree (edge set of size n-1)
        let mut dsu = crate::cutsets::Dsu::new(n);
        let mut acyclic = true;
        for e in 0..m {
            if mask >> e & 1 == 1 {
                let (u, v) = s.endpoints(e);
                if !dsu.union(u, v) {
                    acyclic = false;
                    break;
                }
            }
        }
        if !acyclic {
            continue;
        }
        let mut product = BigUint::one();
        for e in 0..m {
            if mask >> e & 1 == 0 {
                product *= BigUint::from(lengths[e]);
            }
        }
        total += product;
    }
    Ok(total)
}
