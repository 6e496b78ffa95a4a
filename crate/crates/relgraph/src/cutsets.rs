//! Disconnecting edge sets, minimal cut sets, skeletons, and the
//! trivial/non-trivial classification for regular graphs.
//!
//! Edge subsets are dense bitmasks over edge ids; the mask kernels require
//! `m <= 63`. A disconnecting set is *minimal* iff no proper subset
//! disconnects, equivalently iff removal leaves exactly two components and
//! every removed edge crosses between them. The *skeleton* of a cut is the
//! smaller side (ties: the side containing vertex 0).

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

pub type EdgeMask = u64;

pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 28;

/// One disconnecting edge set together with its classification data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRecord {
    pub edges: EdgeMask,
    pub size: usize,
    pub minimal: bool,
    /// Smaller side of the split (ties: side containing vertex 0). For
    /// non-minimal sets this is the complement of a largest component.
    pub skeleton: Vec<usize>,
    pub skeleton_is_tree: bool,
}

impl CutRecord {
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        (0..64).filter(|&e| self.edges >> e & 1 == 1).collect()
    }
}

pub(crate) struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while cur != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb as u32;
        true
    }
}

/// Whether removing the masked edges disconnects the graph.
pub(crate) fn mask_disconnects(g: &Multigraph, removed: EdgeMask) -> bool {
    let n = g.vertex_count();
    let mut dsu = Dsu::new(n);
    let mut merges = 0usize;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if removed >> e & 1 == 0 && dsu.union(u as usize, v as usize) {
            merges += 1;
            if merges == n - 1 {
                return false;
            }
        }
    }
    n > 1 && merges < n - 1
}

/// Edges with exactly one endpoint in `x`.
pub fn boundary(g: &Multigraph, x: &[usize]) -> Result<Vec<EdgeId>> {
    let n = g.vertex_count();
    if x.is_empty() || x.len() >= n {
        return Err(Error::input("boundary requires a nonempty proper subset"));
    }
    let mut inside = vec![false; n];
    for &v in x {
        if v >= n {
            return Err(Error::input(format!("vertex {v} out of range")));
        }
        inside[v] = true;
    }
    Ok(g.edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| inside[u as usize] != inside[v as usize])
        .map(|(e, _)| e)
        .collect())
}

fn mask_of(edges: &[EdgeId]) -> EdgeMask {
    edges.iter().fold(0u64, |m, &e| m | 1 << e)
}

/// Components of `g` after removing the masked edges.
fn components_without(g: &Multigraph, removed: EdgeMask) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut dsu = Dsu::new(n);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if removed >> e & 1 == 0 {
            dsu.union(u as usize, v as usize);
        }
    }
    let mut groups: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        groups.entry(dsu.find(v)).or_default().push(v);
    }
    let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
    comps.sort_by_key(|c| c[0]);
    comps
}

fn build_record(g: &Multigraph, mask: EdgeMask) -> CutRecord {
    let comps = components_without(g, mask);
    debug_assert!(comps.len() >= 2);
    let minimal = comps.len() == 2 && {
        let mut side = vec![false; g.vertex_count()];
        for &v in &comps[0] {
            side[v] = true;
        }
        (0..g.edge_count()).all(|e| {
            if mask >> e & 1 == 1 {
                let (u, v) = g.endpoints(e);
                side[u] != side[v]
            } else {
                true
            }
        })
    };
    // skeleton: complement of a largest component; among equally large
    // components prefer dropping one that avoids vertex 0, so the skeleton
    // keeps the side containing vertex 0 on ties.
    let largest = comps
        .iter()
        .enumerate()
        .max_by_key(|(_, c)| (c.len(), !c.contains(&0)))
        .map(|(i, _)| i)
        .unwrap();
    let mut skeleton: Vec<usize> = comps
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != largest)
        .flat_map(|(_, c)| c.iter().copied())
        .collect();
    skeleton.sort_unstable();
    let skeleton_is_tree = subgraph_is_tree(g, mask, &skeleton);
    CutRecord {
        edges: mask,
        size: mask.count_ones() as usize,
        minimal,
        skeleton,
        skeleton_is_tree,
    }
}

fn subgraph_is_tree(g: &Multigraph, removed: EdgeMask, verts: &[usize]) -> bool {
    let inside: std::collections::HashSet<usize> = verts.iter().copied().collect();
    let mut count = 0usize;
    let mut dsu = Dsu::new(g.vertex_count());
    let mut merges = 0usize;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if removed >> e & 1 == 1 {
            continue;
        }
        let (u, v) = (u as usize, v as usize);
        if inside.contains(&u) && inside.contains(&v) {
            count += 1;
            if dsu.union(u, v) {
                merges += 1;
            }
        }
    }
    count == verts.len() - 1 && merges == verts.len() - 1
}

fn subset_budget(m: usize, max_k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 1..=max_k.min(m) {
        binom = binom * (m - k + 1) as u128 / k as u128;
        total += binom;
    }
    total
}

/// Every edge subset of size <= `max_k` whose removal disconnects `g`,
/// sorted by (size, mask value). Each record carries its minimality flag.
pub fn enumerate_disconnecting_sets(
    g: &Multigraph,
    max_k: usize,
    budget: Option<u64>,
) -> Result<Vec<CutRecord>> {
    let m = g.edge_count();
    if m > 63 {
        return Err(Error::input(format!(
            "mask kernels require m <= 63, got m = {m}"
        )));
    }
    g.require_analyzable("enumerate_disconnecting_sets")?;
    let max_k = max_k.min(m);
    let budget = budget.unwrap_or(DEFAULT_SUBSET_BUDGET);
    if subset_budget(m, max_k) > budget as u128 {
        return Err(Error::resource(format!(
            "subset scan over {} sets exceeds budget {budget}; raise the cap to proceed",
            subset_budget(m, max_k)
        )));
    }
    let mut records = Vec::new();
    for k in 1..=max_k {
        for mask in FixedPopcount::new(m, k) {
            if mask_disconnects(g, mask) {
                records.push(build_record(g, mask));
            }
        }
    }
    Ok(records)
}

/// Disconnecting edge masks bucketed by subset size, `masks[k]` holding the
/// size-k sets in increasing mask order. Shared kernel for coefficient
/// counting and the gamma machinery.
pub fn disconnecting_masks_by_size(
    g: &Multigraph,
    max_k: usize,
    budget: Option<u64>,
) -> Result<Vec<Vec<EdgeMask>>> {
    let m = g.edge_count();
    if m > 63 {
        return Err(Error::input(format!(
            "mask kernels require m <= 63, got m = {m}"
        )));
    }
    let max_k = max_k.min(m);
    let budget = budget.unwrap_or(DEFAULT_SUBSET_BUDGET);
    if subset_budget(m, max_k) > budget as u128 {
        return Err(Error::resource(format!(
            "subset scan over {} sets exceeds budget {budget}",
            subset_budget(m, max_k)
        )));
    }
    let mut buckets = vec![Vec::new(); max_k + 1];
    for k in 1..=max_k {
        for mask in FixedPopcount::new(m, k) {
            if mask_disconnects(g, mask) {
                buckets[k].push(mask);
            }
        }
    }
    Ok(buckets)
}

/// Gosper's hack: masks of fixed popcount in increasing numeric order.
pub(crate) struct FixedPopcount {
    cur: u64,
    limit: u64,
    done: bool,
}

impl FixedPopcount {
    pub(crate) fn new(m: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= m && m <= 63);
        FixedPopcount {
            cur: (1u64 << k) - 1,
            limit: 1u64 << m,
            done: false,
        }
    }
}

impl Iterator for FixedPopcount {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done || self.cur >= self.limit {
            return None;
        }
        let out = self.cur;
        let u = self.cur & self.cur.wrapping_neg();
        let v = self.cur + u;
        if v == 0 {
            self.done = true;
        } else {
            self.cur = v | ((v ^ out) / u) >> 2;
        }
        Some(out)
    }
}

/// Minimal cut sets with at most `max_size` edges, found skeleton-first:
/// enumerate connected vertex subsets (the smaller side), keep those whose
/// complement is also connected and whose boundary is small enough.
pub fn minimal_cuts_up_to(g: &Multigraph, max_size: usize) -> Result<Vec<CutRecord>> {
    g.require_analyzable("minimal_cuts_up_to")?;
    let n = g.vertex_count();
    let m = g.edge_count();
    if m > 63 {
        return Err(Error::input(format!(
            "mask kernels require m <= 63, got m = {m}"
        )));
    }
    if n > 63 {
        return Err(Error::input("skeleton enumeration requires n <= 63"));
    }
    let mut nbr_mask = vec![0u64; n];
    for &(u, v) in g.edges() {
        nbr_mask[u as usize] |= 1 << v;
        nbr_mask[v as usize] |= 1 << u;
    }
    let max_side = n / 2;
    let mut records = Vec::new();
    let full: u64 = if n == 63 { !0 >> 1 } else { (1 << n) - 1 };

    for root in 0..n {
        let below: u64 = (1u64 << root) | ((1u64 << root) - 1);
        let forbidden = below & !(1 << root);
        grow(
            g,
            &nbr_mask,
            1 << root,
            nbr_mask[root] & !below,
            forbidden,
            max_side,
            max_size,
            full,
            &mut records,
        );
    }
    records.sort_by_key(|r| (r.size, r.edges));
    records.dedup_by_key(|r| r.edges);
    Ok(records)
}

// connected subsets whose minimum vertex is fixed by the initial forbidden
// mask, grown one vertex at a time
#[allow(clippy::too_many_arguments)]
fn grow(
    g: &Multigraph,
    nbr_mask: &[u64],
    subset: u64,
    cand: u64,
    forbidden: u64,
    max_side: usize,
    max_size: usize,
    full: u64,
    records: &mut Vec<CutRecord>,
) {
    let size = subset.count_ones() as usize;
    consider(g, subset, max_side, max_size, full, records);
    if size == max_side {
        return;
    }
    let mut cand = cand;
    let mut forbidden = forbidden;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let nsub = subset | 1 << v;
        let ncand = (cand | nbr_mask[v]) & !nsub & !forbidden;
        grow(
            g, nbr_mask, nsub, ncand, forbidden, max_side, max_size, full, records,
        );
        forbidden |= 1 << v;
    }
}

fn consider(
    g: &Multigraph,
    subset: u64,
    max_side: usize,
    max_size: usize,
    full: u64,
    records: &mut Vec<CutRecord>,
) {
    let n = g.vertex_count();
    let size = subset.count_ones() as usize;
    if size == 0 || size > max_side || subset == full {
        return;
    }
    // exact-half splits are seen from both sides; keep the one with vertex 0
    if 2 * size == n && subset & 1 == 0 {
        return;
    }
    let mut cut = 0u64;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if (subset >> u & 1) != (subset >> v & 1) {
            cut |= 1 << e;
        }
    }
    if cut.count_ones() as usize > max_size {
        return;
    }
    // both sides connected <=> the boundary is a minimal cut
    if !side_connected(g, subset) || !side_connected(g, full & !subset) {
        return;
    }
    let verts: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
    let skeleton_is_tree = subgraph_is_tree(g, cut, &verts);
    records.push(CutRecord {
        edges: cut,
        size: cut.count_ones() as usize,
        minimal: true,
        skeleton: verts,
        skeleton_is_tree,
    });
}

fn side_connected(g: &Multigraph, side: u64) -> bool {
    let count = side.count_ones() as usize;
    if count == 0 {
        return false;
    }
    let mut dsu = Dsu::new(g.vertex_count());
    let mut merges = 0;
    for &(u, v) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        if side >> u & 1 == 1 && side >> v & 1 == 1 && dsu.union(u, v) {
            merges += 1;
        }
    }
    merges == count - 1
}

/// Whether a minimal cut of a k-regular girth-g graph is trivial: its
/// skeleton is a tree with at most g-1 vertices whose boundary is the cut.
pub fn classify_trivial(g: &Multigraph, cut: &CutRecord) -> Result<bool> {
    g.require_regular("classify_trivial")?;
    if !cut.minimal {
        return Err(Error::input("classify_trivial requires a minimal cut"));
    }
    let girth = match g.girth() {
        Some(girth) => girth,
        None => return Ok(false),
    };
    if !cut.skeleton_is_tree || cut.skeleton.len() + 1 > girth {
        return Ok(false);
    }
    let mut b = boundary(g, &cut.skeleton)?;
    b.sort_unstable();
    Ok(mask_of(&b) == cut.edges)
}

/// Report on non-trivial cut sets up to a given size.
#[derive(Debug, Clone)]
pub struct TrivialityReport {
    /// Largest g such that the scan found no non-trivial cut set with at
    /// most g(k-2) edges; bounded by the scanned size.
    pub g_free: usize,
    /// All non-trivial minimal cuts of the smallest witnessed size.
    pub witnesses: Vec<CutRecord>,
    /// The edge-count bound that was actually scanned.
    pub checked_size: usize,
}

/// Scans minimal cuts of a k-regular graph up to `size` edges (default
/// girth*(k-2)) and classifies them.
pub fn has_nontrivial_cutsets_up_to(
    g: &Multigraph,
    size: Option<usize>,
) -> Result<TrivialityReport> {
    let k = g.require_regular("has_nontrivial_cutsets_up_to")?;
    g.require_analyzable("has_nontrivial_cutsets_up_to")?;
    if k < 3 {
        return Err(Error::input(
            "triviality classification requires degree at least 3",
        ));
    }
    let girth = g
        .girth()
        .ok_or_else(|| Error::input("acyclic regular graph is impossible for k >= 3"))?;
    let size = size.unwrap_or(girth * (k - 2));
    let cuts = minimal_cuts_up_to(g, size)?;
    let mut nontrivial: Vec<CutRecord> = Vec::new();
    for cut in cuts {
        if !classify_trivial(g, &cut)? {
            nontrivial.push(cut);
        }
    }
    let g_free = match nontrivial.iter().map(|c| c.size).min() {
        Some(smin) => (smin - 1) / (k - 2),
        None => size / (k - 2),
    };
    let witnesses = match nontrivial.iter().map(|c| c.size).min() {
        Some(smin) => nontrivial.into_iter().filter(|c| c.size == smin).collect(),
        None => Vec::new(),
    };
    Ok(TrivialityReport {
        g_free,
        witnesses,
        checked_size: size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
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

    fn petersen() -> Multigraph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Multigraph::new(10, edges).unwrap()
    }

    #[test]
    fn boundary_counts_on_petersen() {
        let g = petersen();
        assert_eq!(boundary(&g, &[0]).unwrap().len(), 3);
        // adjacent pair: 2*3 - 2 = 4
        assert_eq!(boundary(&g, &[0, 1]).unwrap().len(), 4);
        // the outer 5-cycle: 5*(3-2) = 5
        assert_eq!(boundary(&g, &[0, 1, 2, 3, 4]).unwrap().len(), 5);
        assert!(boundary(&g, &[]).is_err());
        assert!(boundary(&g, &(0..10).collect::<Vec<_>>()).is_err());
    }

    #[test]
    fn boundary_regular_identity_random_subsets() {
        // |boundary(X)| = k*n(X) - 2*m(X) for k-regular graphs
        let g = petersen();
        for bits in [0b1u64, 0b1011, 0b100110011, 0b111110000] {
            let x: Vec<usize> = (0..10).filter(|&v| bits >> v & 1 == 1).collect();
            let inside: std::collections::HashSet<_> = x.iter().copied().collect();
            let internal = g
                .edges()
                .iter()
                .filter(|&&(u, v)| inside.contains(&(u as usize)) && inside.contains(&(v as usize)))
                .count();
            assert_eq!(boundary(&g, &x).unwrap().len(), 3 * x.len() - 2 * internal);
        }
    }

    #[test]
    fn c4_pairs_all_minimal() {
        let g = cycle(4);
        let recs = enumerate_disconnecting_sets(&g, 2, None).unwrap();
        assert_eq!(recs.len(), 6);
        assert!(recs.iter().all(|r| r.size == 2 && r.minimal));
    }

    #[test]
    fn tree_bridges() {
        let g = Multigraph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let recs = enumerate_disconnecting_sets(&g, 1, None).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(recs.iter().all(|r| r.minimal));
    }

    #[test]
    fn petersen_three_cuts_are_the_stars() {
        let g = petersen();
        let recs = enumerate_disconnecting_sets(&g, 3, None).unwrap();
        assert_eq!(recs.len(), 10);
        for r in &recs {
            assert_eq!(r.size, 3);
            assert!(r.minimal);
            assert_eq!(r.skeleton.len(), 1);
            assert!(r.skeleton_is_tree);
            assert!(classify_trivial(&g, r).unwrap());
        }
    }

    #[test]
    fn minimal_enumerator_agrees_with_subset_scan() {
        for g in [cycle(6), complete(4), petersen()] {
            let max = 5.min(g.edge_count());
            let mut scan: Vec<EdgeMask> = enumerate_disconnecting_sets(&g, max, None)
                .unwrap()
                .into_iter()
                .filter(|r| r.minimal)
                .map(|r| r.edges)
                .collect();
            let mut grown: Vec<EdgeMask> = minimal_cuts_up_to(&g, max)
                .unwrap()
                .into_iter()
                .map(|r| r.edges)
                .collect();
            scan.sort_unstable();
            grown.sort_unstable();
            assert_eq!(scan, grown, "mismatch on graph with n={}", g.vertex_count());
        }
    }

    #[test]
    fn minimal_cuts_split_in_two_and_match_boundary() {
        let g = petersen();
        for r in minimal_cuts_up_to(&g, 5).unwrap() {
            let mut b = boundary(&g, &r.skeleton).unwrap();
            b.sort_unstable();
            assert_eq!(mask_of(&b), r.edges);
            assert_eq!(b.len(), r.size);
        }
    }

    #[test]
    fn petersen_pentagon_cut_is_nontrivial() {
        let g = petersen();
        let cuts = minimal_cuts_up_to(&g, 5).unwrap();
        let pentagon = cuts
            .iter()
            .find(|r| r.skeleton == vec![0, 1, 2, 3, 4])
            .expect("outer cycle cut");
        assert_eq!(pentagon.size, 5);
        assert!(!pentagon.skeleton_is_tree);
        assert!(!classify_trivial(&g, pentagon).unwrap());

        let report = has_nontrivial_cutsets_up_to(&g, None).unwrap();
        assert_eq!(report.checked_size, 5);
        assert!(!report.witnesses.is_empty());
        assert!(report.witnesses.iter().all(|w| w.size == 5));
        assert_eq!(report.g_free, 4);
    }

    #[test]
    fn k4_has_no_nontrivial_cuts() {
        // In K4 every 3-cut is a vertex star (the triangle boundary and the
        // opposite star coincide) and every 4-cut has a single-edge skeleton.
        let g = complete(4);
        let report = has_nontrivial_cutsets_up_to(&g, Some(3)).unwrap();
        assert!(report.witnesses.is_empty());
        assert_eq!(report.g_free, 3);
    }

    #[test]
    fn girth6_family_free_up_to_five_with_hexagon_witnesses_at_six() {
        for n in [14usize, 16, 18] {
            let g = crate::graph::girth6_family(n).unwrap();
            let at5 = has_nontrivial_cutsets_up_to(&g, Some(5)).unwrap();
            assert!(at5.witnesses.is_empty(), "unexpected witness at n={n}");
            assert_eq!(at5.g_free, 5);
            // the girth cycle itself induces a minimal 6-cut with a cycle
            // skeleton, so g_free never reaches the girth
            let at6 = has_nontrivial_cutsets_up_to(&g, Some(6)).unwrap();
            assert!(!at6.witnesses.is_empty());
            assert_eq!(at6.g_free, 5);
            assert!(at6.witnesses.iter().all(|w| w.size == 6 && !w.skeleton_is_tree));
            // the girth cycles themselves are among the witnesses
            assert!(at6.witnesses.iter().any(|w| w.skeleton.len() == 6));
        }
    }

    #[test]
    fn every_nonminimal_contains_a_minimal() {
        let g = petersen();
        let recs = enumerate_disconnecting_sets(&g, 4, None).unwrap();
        let minimal: Vec<EdgeMask> = recs
            .iter()
            .filter(|r| r.minimal)
            .map(|r| r.edges)
            .collect();
        for r in recs.iter().filter(|r| !r.minimal) {
            assert!(
                minimal.iter().any(|&m| m & r.edges == m && m != r.edges),
                "non-minimal set {:#b} contains no minimal cut",
                r.edges
            );
        }
    }

    #[test]
    fn budget_cap_fires() {
        let g = crate::graph::girth6_family(22).unwrap();
        let err = enumerate_disconnecting_sets(&g, 33, Some(1 << 10)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }
}
