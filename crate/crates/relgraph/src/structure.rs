//! Structure graphs (distillations), subdivisions, the two-part
//! decomposition of the unreliability polynomial, gamma tables for marked
//! structures, and the derived obstruction counts (alpha, beta, mu, rho).
//!
//! A chain is a maximal path of degree-2 vertices; suppressing all of them
//! yields the structure graph whose edges are the chains. A marked structure
//! designates lambda chains as long (length c+1 instead of c).

use num_bigint::BigUint;
use num_traits::Zero;

use crate::cutsets::{self, EdgeMask};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};
use crate::poly::{binomial, power_to_bernstein, Poly};

/// Result of suppressing all degree-2 vertices.
#[derive(Debug, Clone)]
pub struct Distillation {
    pub structure: Multigraph,
    /// Edge count of each chain, indexed by structure edge id.
    pub chain_lengths: Vec<usize>,
    /// Ordered original-vertex path per chain, endpoints included.
    pub origin_labels: Vec<Vec<usize>>,
}

/// Suppresses chains of degree-2 vertices into single edges.
pub fn distill(g: &Multigraph) -> Result<Distillation> {
    g.require_analyzable("distill")?;
    let n = g.vertex_count();
    let deg = g.degrees();
    if deg.iter().any(|&d| d < 2) {
        return Err(Error::input("distill requires minimum degree 2"));
    }
    if deg.iter().all(|&d| d == 2) {
        return Err(Error::input(
            "distill: graph is a cycle; no structure vertices exist",
        ));
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0usize;
    for v in 0..n {
        if deg[v] != 2 {
            label[v] = next;
            next += 1;
        }
    }
    let inc = g.incidence();
    let mut used = vec![false; g.edge_count()];
    let mut edges = Vec::new();
    let mut chain_lengths = Vec::new();
    let mut origin_labels = Vec::new();
    for s in 0..n {
        if label[s] == usize::MAX {
            continue;
        }
        for &start in &inc[s] {
            if used[start] {
                continue;
            }
            // walk through degree-2 vertices until the next structure vertex
            let mut path = vec![s];
            let mut length = 0usize;
            let mut prev_edge = start;
            let (a, b) = g.endpoints(start);
            let mut cur = if a == s { b } else { a };
            used[start] = true;
            length += 1;
            path.push(cur);
            while label[cur] == usize::MAX {
                let e = inc[cur]
                    .iter()
                    .copied()
                    .find(|&e| e != prev_edge && !used[e])
                    .expect("degree-2 vertex has a second edge");
                used[e] = true;
                let (a, b) = g.endpoints(e);
                cur = if a == cur { b } else { a };
                prev_edge = e;
                length += 1;
                path.push(cur);
            }
            edges.push((label[s], label[cur]));
            chain_lengths.push(length);
            origin_labels.push(path);
        }
    }
    let structure = Multigraph::new(next, edges)?;
    Ok(Distillation {
        structure,
        chain_lengths,
        origin_labels,
    })
}

/// Replaces each structure edge by a path with `lengths[e]` edges. Structure
/// vertices keep their ids; interior vertices are appended in edge order.
pub fn subdivide(s: &Multigraph, lengths: &[usize]) -> Result<Multigraph> {
    if lengths.len() != s.edge_count() {
        return Err(Error::input("lengths must cover every structure edge"));
    }
    if lengths.iter().any(|&l| l < 1) {
        return Err(Error::input("chain lengths must be at least 1"));
    }
    let ns = s.vertex_count();
    let mut n = ns;
    let mut edges = Vec::new();
    for (e, &(u, v)) in s.edges().iter().enumerate() {
        let (u, v) = (u as usize, v as usize);
        let mut prev = u;
        for _ in 1..lengths[e] {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
    }
    Multigraph::new(n, edges)
}

/// Splits `n - 2(r-1) = (c-1) * 3(r-1) + lambda` into the short-chain length
/// c >= 1 and the long-chain count 0 <= lambda < 3(r-1).
pub fn c_lambda(n: usize, r: usize) -> Result<(usize, usize)> {
    if r < 2 {
        return Err(Error::input("c_lambda requires redundancy r >= 2"));
    }
    let ns = 2 * (r - 1);
    if n < ns {
        return Err(Error::input(format!(
            "n = {n} is below the structure size 2(r-1) = {ns}"
        )));
    }
    let chains = 3 * (r - 1);
    let extra = n - ns;
    let lambda = extra % chains;
    let c = 1 + (extra - lambda) / chains;
    Ok((c, lambda))
}

/// A cubic structure graph with a designated set of long chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedStructure {
    pub structure: Multigraph,
    /// Sorted ids of the long chains.
    pub long_chains: Vec<EdgeId>,
}

impl MarkedStructure {
    pub fn new(structure: Multigraph, mut long_chains: Vec<EdgeId>) -> Result<Self> {
        let k = structure.require_regular("MarkedStructure")?;
        if k != 3 {
            return Err(Error::input("marked structure must be cubic"));
        }
        if !structure.is_connected() {
            return Err(Error::input("marked structure must be connected"));
        }
        long_chains.sort_unstable();
        long_chains.dedup();
        if long_chains.len() >= structure.edge_count() {
            return Err(Error::input("lambda must be less than the chain count"));
        }
        if long_chains.iter().any(|&e| e >= structure.edge_count()) {
            return Err(Error::input("long chain id out of range"));
        }
        Ok(MarkedStructure {
            structure,
            long_chains,
        })
    }

    pub fn lambda(&self) -> usize {
        self.long_chains.len()
    }

    pub fn long_mask(&self) -> EdgeMask {
        self.long_chains.iter().fold(0u64, |m, &e| m | 1 << e)
    }

    pub fn redundancy(&self) -> usize {
        self.structure.redundancy() as usize
    }
}

/// The triangular array gamma[k][j]: pairs (X, L') where X is a
/// disconnecting k-subset of chains and L' a j-subset of the long chains
/// inside X. Column j = 0 is the structure graph's Bernstein vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTable {
    pub r: usize,
    /// `gamma[k][j]` for `0 <= j <= k <= 3(r-1)`.
    pub gamma: Vec<Vec<BigUint>>,
}

impl GammaTable {
    /// Flattened row-major (k, j) traversal, the near-zero comparison order.
    pub fn flatten_kj(&self) -> Vec<BigUint> {
        self.gamma.iter().flatten().cloned().collect()
    }
}

/// Builds the full gamma table by scanning all chain subsets (requires at
/// most 24 chains).
pub fn gamma_table(ms: &MarkedStructure) -> Result<GammaTable> {
    let g = &ms.structure;
    let m = g.edge_count();
    if m > 24 {
        return Err(Error::resource(format!(
            "gamma table scans 2^{m} chain subsets; 3(r-1) <= 24 required"
        )));
    }
    let long = ms.long_mask();
    // counts[k][l]: disconnecting k-subsets containing exactly l long chains
    let mut counts = vec![vec![0u64; m + 1]; m + 1];
    for mask in 1u64..(1 << m) {
        if cutsets::mask_disconnects(g, mask) {
            let k = mask.count_ones() as usize;
            let l = (mask & long).count_ones() as usize;
            counts[k][l] += 1;
        }
    }
    let r = ms.redundancy();
    let mut gamma = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut row = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let mut total = BigUint::zero();
            for l in j..=k {
                if counts[k][l] != 0 {
                    total += binomial(l, j) * BigUint::from(counts[k][l]);
                }
            }
            row.push(total);
        }
        gamma.push(row);
    }
    Ok(GammaTable { r, gamma })
}

/// Type-(1) Bernstein coefficients `b_k = sum_j gamma[k][j] c^(k-j)`.
pub fn b1_coeffs(gt: &GammaTable, c: usize) -> Vec<BigUint> {
    let c = BigUint::from(c);
    gt.gamma
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let mut acc = BigUint::zero();
            for (j, coeff) in row.iter().enumerate() {
                acc += coeff * c.pow((k - j) as u32);
            }
            acc
        })
        .collect()
}

/// Bernstein vector (over m edges) of the type-(1) polynomial
/// `U1 = sum_k b1_k p^k (1-p)^(m-k)`.
pub fn u1_poly(gt: &GammaTable, c: usize, m: usize) -> Result<Vec<BigUint>> {
    let b1 = b1_coeffs(gt, c);
    if b1.len() > m + 1 {
        return Err(Error::input("m is smaller than the chain count"));
    }
    let mut out = b1;
    out.resize(m + 1, BigUint::zero());
    Ok(out)
}

/// Bernstein vector (over m = sum of lengths edges) of the type-(2)
/// polynomial `U2 = 1 - prod_e (q^c_e + c_e p q^(c_e - 1))`, the probability
/// that some chain loses at least two edges.
pub fn u2_poly(lengths: &[usize]) -> Result<Vec<BigUint>> {
    if lengths.iter().any(|&l| l < 1) {
        return Err(Error::input("chain lengths must be at least 1"));
    }
    let m: usize = lengths.iter().sum();
    let mut product = Poly::constant(1);
    for &c_e in lengths {
        // q^c + c p q^(c-1)
        let term = Poly::bernstein_term(0, c_e)
            .add(&Poly::constant(c_e as i64).mul(&Poly::bernstein_term(1, c_e - 1)));
        product = product.mul(&term);
    }
    let u2 = Poly::constant(1).sub(&product);
    let bernstein = power_to_bernstein(&u2.coeffs_padded(m + 1));
    bernstein
        .into_iter()
        .map(|x| {
            x.to_biguint()
                .ok_or_else(|| Error::input("internal error: negative U2 coefficient"))
        })
        .collect()
}

/// Verifies the exact decomposition U = U1 + U2 for a distillable graph
/// whose chain lengths are all c or c+1. The long chains are the ones of
/// length c+1.
pub fn decompose_check(g: &Multigraph) -> Result<bool> {
    let d = distill(g)?;
    let min_len = *d.chain_lengths.iter().min().expect("chains exist");
    if d.chain_lengths.iter().any(|&l| l > min_len + 1) {
        return Err(Error::input(
            "decompose_check requires chain lengths c and c+1 only",
        ));
    }
    let long: Vec<EdgeId> = (0..d.chain_lengths.len())
        .filter(|&e| d.chain_lengths[e] == min_len + 1)
        .collect();
    let ms = MarkedStructure::new(d.structure.clone(), long)?;
    let gt = gamma_table(&ms)?;
    let m = g.edge_count();
    let b1 = u1_poly(&gt, min_len, m)?;
    let b2 = u2_poly(&d.chain_lengths)?;
    let direct = crate::reliability::unrel_exact(g)?;
    let combined: Vec<BigUint> = b1.iter().zip(b2.iter()).map(|(x, y)| x + y).collect();
    Ok(combined == direct.bernstein)
}

/// All-pairs chain distances: `dist[e][f]` per the edge-distance convention
/// (0 on the diagonal, 1 for chains sharing a vertex).
pub fn edge_distance_matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let m = g.edge_count();
    let per_vertex: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.bfs_distances(v)).collect();
    let mut dist = vec![vec![0usize; m]; m];
    for e in 0..m {
        let (a, b) = g.endpoints(e);
        for f in 0..m {
            if e == f {
                continue;
            }
            let (c, d) = g.endpoints(f);
            let best = per_vertex[a][c]
                .min(per_vertex[a][d])
                .min(per_vertex[b][c])
                .min(per_vertex[b][d]);
            dist[e][f] = 1 + best;
        }
    }
    dist
}

/// mu_d counts for d = 1..=max_d over the given long-chain set.
pub fn separation_vector(dist: &[Vec<usize>], long_chains: &[EdgeId], max_d: usize) -> Vec<u64> {
    let mut mu = vec![0u64; max_d];
    for (i, &e) in long_chains.iter().enumerate() {
        for &f in &long_chains[i + 1..] {
            let d = dist[e][f];
            if d >= 1 && d <= max_d {
                mu[d - 1] += 1;
            }
        }
    }
    mu
}

/// Structural counts controlling the low-order gamma entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionProfile {
    /// `alpha[i]`: structure vertices incident to exactly i long chains.
    pub alpha: [u64; 4],
    /// `beta[i]`: chains with exactly i long chains among their adjacent
    /// chains (the chain itself not counted).
    pub beta: [u64; 5],
    /// Separation vector, `mu[d-1]` = long-chain pairs at distance d, for
    /// 1 <= d <= g_free - 3 (the range the comparison lemmas cover).
    pub mu: Vec<u64>,
    /// Pair counts for every distance up to the largest observed; reported
    /// for diagnostics, never compared.
    pub mu_diagnostic: Vec<u64>,
    /// `rho[e][k-3]`: disconnecting k-chain-subsets containing chain e, for
    /// 3 <= k <= 3(r-1).
    pub rho: Vec<Vec<u64>>,
}

/// Computes alpha/beta/mu/rho for a marked cubic structure. `g_free` bounds
/// the compared range of the separation vector.
pub fn obstruction_profile(ms: &MarkedStructure, g_free: usize) -> Result<ObstructionProfile> {
    let g = &ms.structure;
    let m = g.edge_count();
    if m > 24 {
        return Err(Error::resource("obstruction profile requires m <= 24"));
    }
    let long = ms.long_mask();

    let mut alpha = [0u64; 4];
    let inc = g.incidence();
    for v in 0..g.vertex_count() {
        let count = inc[v].iter().filter(|&&e| long >> e & 1 == 1).count();
        alpha[count.min(3)] += 1;
    }

    let mut beta = [0u64; 5];
    for e in 0..m {
        let (a, b) = g.endpoints(e);
        let mut adjacent: Vec<EdgeId> = inc[a]
            .iter()
            .chain(inc[b].iter())
            .copied()
            .filter(|&f| f != e)
            .collect();
        adjacent.sort_unstable();
        adjacent.dedup();
        let count = adjacent.iter().filter(|&&f| long >> f & 1 == 1).count();
        beta[count.min(4)] += 1;
    }

    let dist = edge_distance_matrix(g);
    let max_seen = dist.iter().flatten().copied().max().unwrap_or(0);
    let mu_diagnostic = separation_vector(&dist, &ms.long_chains, max_seen);
    let mu_limit = g_free.saturating_sub(3);
    let mu = mu_diagnostic.iter().take(mu_limit).copied().collect();

    let chains = 3 * (ms.redundancy() - 1);
    let mut rho = vec![Vec::new(); m];
    if chains >= 3 {
        let mut per_edge = vec![vec![0u64; chains + 1]; m];
        for mask in 1u64..(1 << m) {
            let k = mask.count_ones() as usize;
            if k < 3 || k > chains {
                continue;
            }
            if cutsets::mask_disconnects(g, mask) {
                let mut bits = mask;
                while bits != 0 {
                    let e = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    per_edge[e][k] += 1;
                }
            }
        }
        for e in 0..m {
            rho[e] = per_edge[e][3..=chains].to_vec();
        }
    }

    Ok(ObstructionProfile {
        alpha,
        beta,
        mu,
        mu_diagnostic,
        rho,
    })
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    fn petersen() -> Multigraph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Multigraph::new(10, edges).unwrap()
    }

    fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph::new(n, edges).unwrap()
    }

    fn theta() -> Multigraph {
        Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn ints(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn distill_uniformly_subdivided_k4() {
        let k4 = complete(4);
        let sub = subdivide(&k4, &[2; 6]).unwrap();
        assert_eq!(sub.vertex_count(), 10);
        assert_eq!(sub.edge_count(), 12);
        let d = distill(&sub).unwrap();
        assert_eq!(d.structure.vertex_count(), 4);
        assert_eq!(d.structure.edge_count(), 6);
        assert!(d.chain_lengths.iter().all(|&l| l == 2));
        assert_eq!(d.chain_lengths.iter().sum::<usize>(), sub.edge_count());
    }

    #[test]
    fn distill_theta_with_mixed_lengths() {
        // two hubs joined by internally disjoint paths of lengths 3, 3, 4
        let g = Multigraph::new(
            9,
            [
                (0, 2),
                (2, 3),
                (3, 1),
                (0, 4),
                (4, 5),
                (5, 1),
                (0, 6),
                (6, 7),
                (7, 8),
                (8, 1),
            ],
        )
        .unwrap();
        let d = distill(&g).unwrap();
        assert_eq!(d.structure.vertex_count(), 2);
        assert_eq!(d.structure.edges(), &[(0, 1), (0, 1), (0, 1)]);
        let mut lengths = d.chain_lengths.clone();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![3, 3, 4]);
    }

    #[test]
    fn distill_rejects_degenerate_inputs() {
        let cycle = Multigraph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(distill(&cycle).is_err());
        let path = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(distill(&path).is_err());
    }

    #[test]
    fn subdivide_distill_roundtrip() {
        let s = petersen();
        let lengths: Vec<usize> = (0..15).map(|e| 1 + (e * 7 + 3) % 4).collect();
        let big = subdivide(&s, &lengths).unwrap();
        assert_eq!(
            big.vertex_count(),
            10 + lengths.iter().map(|l| l - 1).sum::<usize>()
        );
        let d = distill(&big).unwrap();
        assert_eq!(d.structure.vertex_count(), 10);
        // chains come back possibly reordered; compare as multisets keyed by
        // endpoints and length
        let mut got: Vec<(u32, u32, usize)> = d
            .structure
            .edges()
            .iter()
            .zip(&d.chain_lengths)
            .map(|(&(u, v), &l)| (u, v, l))
            .collect();
        let mut want: Vec<(u32, u32, usize)> = s
            .edges()
            .iter()
            .zip(&lengths)
            .map(|(&(u, v), &l)| (u, v, l))
            .collect();
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn c_lambda_examples() {
        assert_eq!(c_lambda(100, 8).unwrap(), (5, 2));
        assert_eq!(c_lambda(10, 6).unwrap(), (1, 0));
        assert_eq!(c_lambda(14, 8).unwrap(), (1, 0));
        assert!(c_lambda(10, 8).is_err());
        // identity: n = 2(r-1) + (c-1)*3(r-1) + lambda
        for r in 2..10 {
            for n in (2 * (r - 1))..(2 * (r - 1) + 40) {
                let (c, lambda) = c_lambda(n, r).unwrap();
                assert!(c >= 1 && lambda < 3 * (r - 1));
                assert_eq!(n, 2 * (r - 1) + (c - 1) * 3 * (r - 1) + lambda);
            }
        }
    }

    #[test]
    fn theta_gamma_table() {
        // removing any two of three parallel chains leaves the third one
        // connecting both hubs, so only the full triple disconnects
        let ms = MarkedStructure::new(theta(), vec![0]).unwrap();
        let gt = gamma_table(&ms).unwrap();
        assert_eq!(gt.r, 2);
        assert_eq!(gt.gamma[1], ints(&[0, 0]));
        assert_eq!(gt.gamma[2], ints(&[0, 0, 0]));
        assert_eq!(gt.gamma[3], ints(&[1, 1, 0, 0]));
    }

    #[test]
    fn k4_gamma_column_zero_is_bernstein() {
        let ms = MarkedStructure::new(complete(4), vec![]).unwrap();
        let gt = gamma_table(&ms).unwrap();
        let b = crate::reliability::unrel_bruteforce(&complete(4)).unwrap();
        for k in 0..=6 {
            assert_eq!(gt.gamma[k][0], b.bernstein[k], "k = {k}");
        }
    }

    #[test]
    fn trivial_three_cut_structures_have_gamma31_2lambda() {
        let g = petersen();
        for marking in [vec![0], vec![0, 7], vec![2, 5, 11]] {
            let lambda = marking.len();
            let ms = MarkedStructure::new(g.clone(), marking).unwrap();
            let gt = gamma_table(&ms).unwrap();
            assert_eq!(gt.gamma[3][1], BigUint::from(2 * lambda));
        }
    }

    #[test]
    fn b1_closed_form_cubic() {
        // b1_3 = n c^3 + 2 lambda c^2 + (alpha2 + 3 alpha3) c + alpha3
        let g = petersen();
        let marking = vec![0usize, 1, 10];
        let ms = MarkedStructure::new(g.clone(), marking).unwrap();
        let gt = gamma_table(&ms).unwrap();
        let profile = obstruction_profile(&ms, 4).unwrap();
        for c in [1usize, 2, 5] {
            let coeffs = b1_coeffs(&gt, c);
            let expect = BigUint::from(10 * c * c * c)
                + BigUint::from(2 * 3 * c * c)
                + BigUint::from((profile.alpha[2] + 3 * profile.alpha[3]) as usize * c)
                + BigUint::from(profile.alpha[3]);
            assert_eq!(coeffs[3], expect, "c = {c}");
        }
    }

    #[test]
    fn lambda_zero_b1_is_scaled_bernstein() {
        let ms = MarkedStructure::new(complete(4), vec![]).unwrap();
        let gt = gamma_table(&ms).unwrap();
        let b = crate::reliability::unrel_bruteforce(&complete(4)).unwrap();
        let c = 3usize;
        let coeffs = b1_coeffs(&gt, c);
        for k in 0..=6 {
            assert_eq!(
                coeffs[k],
                &b.bernstein[k] * BigUint::from(c).pow(k as u32),
                "k = {k}"
            );
        }
    }

    #[test]
    fn u2_zero_for_unit_lengths() {
        let u2 = u2_poly(&[1, 1, 1, 1]).unwrap();
        assert!(u2.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn u2_counts_double_failures_in_chains() {
        // theta with lengths (2,2,2): the 2-subsets inside one chain
        let u2 = u2_poly(&[2, 2, 2]).unwrap();
        assert_eq!(u2[0], BigUint::zero());
        assert_eq!(u2[1], BigUint::zero());
        assert_eq!(u2[2], BigUint::from(3u32));
        // full failure set is always a type-2 event here
        assert_eq!(u2[6], BigUint::one());
    }

    #[test]
    fn decomposition_on_subdivided_theta() {
        let sub = subdivide(&theta(), &[2, 2, 2]).unwrap();
        assert!(decompose_check(&sub).unwrap());
    }

    #[test]
    fn decomposition_rejects_wild_lengths() {
        let sub = subdivide(&theta(), &[2, 2, 4]).unwrap();
        assert!(decompose_check(&sub).is_err());
    }

    #[test]
    fn obstruction_profile_matching_marking() {
        // spokes of the Petersen graph form a perfect matching
        let g = petersen();
        let spokes: Vec<EdgeId> = (0..15)
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                u < 5 && v >= 5
            })
            .collect();
        assert_eq!(spokes.len(), 5);
        let ms = MarkedStructure::new(g, spokes).unwrap();
        let p = obstruction_profile(&ms, 4).unwrap();
        assert_eq!(p.alpha[2], 0);
        assert_eq!(p.alpha[3], 0);
        assert_eq!(p.alpha[1], 10);
        assert_eq!(p.mu, vec![0]);
    }

    #[test]
    fn obstruction_profile_empty_marking() {
        let ms = MarkedStructure::new(petersen(), vec![]).unwrap();
        let p = obstruction_profile(&ms, 4).unwrap();
        assert_eq!(p.beta[0], 15);
        assert_eq!(p.beta[1..].iter().sum::<u64>(), 0);
        assert_eq!(p.alpha[0], 10);
    }

    #[test]
    fn rho_uniform_on_edge_transitive_structure() {
        let ms = MarkedStructure::new(petersen(), vec![0]).unwrap();
        let p = obstruction_profile(&ms, 4).unwrap();
        for e in 1..15 {
            assert_eq!(p.rho[e], p.rho[0], "edge {e}");
        }
        // rho_3 counts the two endpoint stars among disconnecting 3-sets
        assert_eq!(p.rho[0][0], 2);
    }
}
