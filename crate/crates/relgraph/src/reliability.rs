//! Exact unreliability polynomials in Bernstein form, representation
//! conversions, evaluation, near-zero/near-one comparison, and the
//! reliability-class filtration.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::cutsets;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::poly;

/// Exact unreliability polynomial `U(p) = sum b_k p^k (1-p)^(m-k)`.
///
/// `b_k` counts the edge subsets of size k whose simultaneous failure
/// disconnects the graph. Coefficients are unbounded integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrelPoly {
    pub m: usize,
    pub bernstein: Vec<BigUint>,
}

impl UnrelPoly {
    pub fn from_bernstein(bernstein: Vec<BigUint>) -> Result<Self> {
        if bernstein.is_empty() {
            return Err(Error::input("bernstein vector must have length m + 1"));
        }
        Ok(UnrelPoly {
            m: bernstein.len() - 1,
            bernstein,
        })
    }

    /// Power-basis coefficients `a_0..a_m` (exact integers).
    pub fn power_coeffs(&self) -> Vec<BigInt> {
        let b: Vec<BigInt> = self
            .bernstein
            .iter()
            .map(|x| BigInt::from(x.clone()))
            .collect();
        poly::bernstein_to_power(&b)
    }

    /// Evaluation at a float `p` with compensated summation.
    pub fn eval_f64(&self, p: f64) -> f64 {
        assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
        let q = 1.0 - p;
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (k, b) in self.bernstein.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let term =
                b.to_f64().unwrap_or(f64::MAX) * p.powi(k as i32) * q.powi((self.m - k) as i32);
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        sum.clamp(0.0, 1.0)
    }

    /// Exact evaluation at the rational `num/den`, returned as a reduced
    /// fraction: `U(num/den) = sum b_k num^k (den-num)^(m-k) / den^m`.
    pub fn eval_rational(&self, num: u64, den: u64) -> (BigUint, BigUint) {
        assert!(den > 0 && num <= den, "p must lie in [0, 1]");
        let num = BigUint::from(num);
        let den = BigUint::from(den);
        let diff = &den - &num;
        let mut acc = BigUint::zero();
        for (k, b) in self.bernstein.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc += b * num.pow(k as u32) * diff.pow((self.m - k) as u32);
        }
        let total = den.pow(self.m as u32);
        let g = num_integer::gcd(acc.clone(), total.clone());
        (acc / &g, total / g)
    }
}

pub const BRUTEFORCE_EDGE_LIMIT: usize = 28;

/// Exact unreliability by scanning all 2^m edge subsets.
pub fn unrel_bruteforce(g: &Multigraph) -> Result<UnrelPoly> {
    g.require_analyzable("unrel_bruteforce")?;
    let m = g.edge_count();
    if m > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::resource(format!(
            "2^{m} subset scan is too large; use unrel_exact for m > {BRUTEFORCE_EDGE_LIMIT}"
        )));
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let mut counts = vec![0u64; m + 1];
    for mask in 0u64..(1 << m) {
        let mut dsu = cutsets::Dsu::new(n);
        let mut merges = 0;
        for (e, &(u, v)) in edges.iter().enumerate() {
            if mask >> e & 1 == 0 && dsu.union(u as usize, v as usize) {
                merges += 1;
            }
        }
        if n > 1 && merges < n - 1 {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    UnrelPoly::from_bernstein(counts.into_iter().map(BigUint::from).collect())
}

/// Exact unreliability via weighted deletion-contraction; same output
/// contract as [`unrel_bruteforce`] but good to m <= 60.
pub fn unrel_exact(g: &Multigraph) -> Result<UnrelPoly> {
    crate::exact::unreliability(g)
}

/// Bernstein prefix `b_0..b_max_k` by direct subset counting; used when only
/// the leading coefficients are needed (partial filtrations).
pub fn bernstein_prefix(g: &Multigraph, max_k: usize, budget: Option<u64>) -> Result<Vec<BigUint>> {
    let buckets = cutsets::disconnecting_masks_by_size(g, max_k, budget)?;
    Ok(buckets.iter().map(|b| BigUint::from(b.len())).collect())
}

/// Lexicographic comparison of `(b_1..b_m)`: the smaller vector is the more
/// reliable graph near zero.
pub fn compare_near_zero(x: &UnrelPoly, y: &UnrelPoly) -> Result<Ordering> {
    if x.m != y.m {
        return Err(Error::input("comparison requires equal edge counts"));
    }
    Ok(x.bernstein[1..].cmp(&y.bernstein[1..]))
}

/// Lexicographic comparison of the reversed vector `(b_m..b_1)`.
pub fn compare_near_one(x: &UnrelPoly, y: &UnrelPoly) -> Result<Ordering> {
    if x.m != y.m {
        return Err(Error::input("comparison requires equal edge counts"));
    }
    let xr: Vec<&BigUint> = x.bernstein[1..].iter().rev().collect();
    let yr: Vec<&BigUint> = y.bernstein[1..].iter().rev().collect();
    Ok(xr.cmp(&yr))
}

/// Numerical sanity harness for the coefficient-comparison lemma: given
/// `compare_near_zero(x, y) <= Equal`, checks `U_x(p) <= U_y(p)` on the grid
/// `p = 2^-j` for `j = 1..=samples`, requiring strictness to show up unless
/// the vectors are identical. Exact rational arithmetic throughout.
pub fn verify_coefficient_comparison(x: &UnrelPoly, y: &UnrelPoly, samples: u32) -> Result<bool> {
    if x.m != y.m {
        return Err(Error::input("comparison requires equal edge counts"));
    }
    if x.bernstein == y.bernstein {
        return Ok(true);
    }
    let mut strict_seen = false;
    for j in 1..=samples {
        let (xn, xd) = x.eval_rational(1, 1 << j);
        let (yn, yd) = y.eval_rational(1, 1 << j);
        let lhs = xn * &yd;
        let rhs = yn * &xd;
        match lhs.cmp(&rhs) {
            Ordering::Greater => {
                if strict_seen {
                    // ordering may flip once we leave the near-zero interval
                    break;
                }
                return Ok(false);
            }
            Ordering::Less => strict_seen = true,
            Ordering::Equal => {}
        }
    }
    Ok(strict_seen)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    NearZero,
    NearOne,
}

/// Survivors of the sequential coefficient-minimization filtration.
#[derive(Debug, Clone)]
pub struct ClassFiltration {
    pub order: Order,
    /// `(k, surviving input indices)` per level; level k of the near-zero
    /// order minimizes b_k, level k of the near-one order minimizes b_(m-k).
    pub levels: Vec<(usize, Vec<usize>)>,
}

impl ClassFiltration {
    pub fn final_survivors(&self) -> &[usize] {
        self.levels.last().map(|(_, s)| s.as_slice()).unwrap_or(&[])
    }
}

/// Runs the filtration over precomputed Bernstein vectors `b_0..b_m`
/// (all of equal length).
pub fn filtration_from_vectors(keys: &[Vec<BigUint>], order: Order) -> Result<ClassFiltration> {
    if keys.is_empty() {
        return Err(Error::input("filtration requires at least one graph"));
    }
    let m = keys[0].len() - 1;
    if keys.iter().any(|k| k.len() != m + 1) {
        return Err(Error::input("filtration requires equal edge counts"));
    }
    let mut survivors: Vec<usize> = (0..keys.len()).collect();
    let mut levels = Vec::with_capacity(m);
    for step in 1..=m {
        let coeff = match order {
            Order::NearZero => step,
            Order::NearOne => m - step,
        };
        let best = survivors
            .iter()
            .map(|&i| &keys[i][coeff])
            .min()
            .expect("nonempty survivors")
            .clone();
        survivors.retain(|&i| keys[i][coeff] == best);
        levels.push((step, survivors.clone()));
    }
    Ok(ClassFiltration { order, levels })
}

/// Full filtration over a pool of graphs sharing (n, m). Polynomials are
/// computed in parallel.
pub fn class_filtration(graphs: &[Multigraph], order: Order) -> Result<ClassFiltration> {
    if graphs.is_empty() {
        return Err(Error::input("filtration requires at least one graph"));
    }
    let (n0, m0) = (graphs[0].vertex_count(), graphs[0].edge_count());
    if graphs
        .iter()
        .any(|g| g.vertex_count() != n0 || g.edge_count() != m0)
    {
        return Err(Error::input("filtration pool must share (n, m)"));
    }
    let polys: Vec<Result<UnrelPoly>> = graphs
        .par_iter()
        .map(|g| {
            if g.edge_count() <= 20 {
                unrel_bruteforce(g)
            } else {
                unrel_exact(g)
            }
        })
        .collect();
    let mut keys = Vec::with_capacity(polys.len());
    for p in polys {
        keys.push(p?.bernstein);
    }
    filtration_from_vectors(&keys, order)
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

    fn ints(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn c4_vector() {
        let u = unrel_bruteforce(&cycle(4)).unwrap();
        assert_eq!(u.bernstein, ints(&[0, 0, 6, 4, 1]));
    }

    #[test]
    fn tree_vector_is_binomial() {
        let tree = Multigraph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let u = unrel_bruteforce(&tree).unwrap();
        assert_eq!(u.bernstein, ints(&[0, 4, 6, 4, 1]));
    }

    #[test]
    fn k4_vector_matches_tree_count() {
        // b_3 = C(6,3) - T(K4) = 20 - 16: exactly the complements of the 16
        // spanning trees stay connected.
        let u = unrel_bruteforce(&complete(4)).unwrap();
        assert_eq!(u.bernstein, ints(&[0, 0, 0, 4, 15, 6, 1]));
    }

    #[test]
    fn eval_boundaries_and_rational() {
        let u = unrel_bruteforce(&cycle(4)).unwrap();
        assert_eq!(u.eval_f64(0.0), 0.0);
        assert_eq!(u.eval_f64(1.0), 1.0);
        let (num, den) = u.eval_rational(1, 2);
        assert_eq!((num, den), (BigUint::from(11u32), BigUint::from(16u32)));
        assert!((u.eval_f64(0.5) - 11.0 / 16.0).abs() < 1e-12);
    }

    #[test]
    fn monotone_on_grid() {
        let u = unrel_bruteforce(&complete(4)).unwrap();
        let mut prev = 0.0;
        for i in 0..=50 {
            let val = u.eval_f64(i as f64 / 50.0);
            assert!(val + 1e-12 >= prev);
            prev = val;
        }
    }

    #[test]
    fn compare_k4_beats_doubled_c4() {
        // a 4-vertex multigraph with doubled edges: same n = 4, m = 6
        let doubled =
            Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (0, 3)]).unwrap();
        let k4 = unrel_bruteforce(&complete(4)).unwrap();
        let d = unrel_bruteforce(&doubled).unwrap();
        assert_eq!(compare_near_zero(&k4, &d).unwrap(), Ordering::Less);
        assert_eq!(compare_near_zero(&k4, &k4).unwrap(), Ordering::Equal);
    }

    #[test]
    fn mismatched_sizes_error() {
        let a = unrel_bruteforce(&cycle(4)).unwrap();
        let b = unrel_bruteforce(&cycle(5)).unwrap();
        assert!(compare_near_zero(&a, &b).is_err());
    }

    #[test]
    fn coefficient_comparison_harness() {
        let k4 = unrel_bruteforce(&complete(4)).unwrap();
        let doubled =
            Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (0, 3)]).unwrap();
        let d = unrel_bruteforce(&doubled).unwrap();
        assert!(verify_coefficient_comparison(&k4, &d, 20).unwrap());
        // equal polynomials: vacuously true
        assert!(verify_coefficient_comparison(&k4, &k4, 20).unwrap());
        // reversed pair: asymmetry detected
        assert!(!verify_coefficient_comparison(&d, &k4, 20).unwrap());
    }

    #[test]
    fn singleton_filtration_survives_every_level() {
        let g = cycle(5);
        let f = class_filtration(std::slice::from_ref(&g), Order::NearZero).unwrap();
        assert_eq!(f.levels.len(), 5);
        assert!(f.levels.iter().all(|(_, s)| s == &vec![0]));
    }

    #[test]
    fn filtration_level_one_keeps_bridgeless() {
        // pool: a bridged multigraph vs C4 with a doubled edge (equal n, m)
        let bridged = Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 3)]).unwrap();
        let sturdy = Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let f = class_filtration(&[bridged, sturdy], Order::NearZero).unwrap();
        assert_eq!(f.levels[0].1, vec![1]);
    }

    #[test]
    fn prefix_matches_bruteforce() {
        let g = complete(4);
        let full = unrel_bruteforce(&g).unwrap();
        let prefix = bernstein_prefix(&g, 4, None).unwrap();
        assert_eq!(&full.bernstein[..5], prefix.as_slice());
    }
}
