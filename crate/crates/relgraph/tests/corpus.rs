//! Tests driven by the cubic-graph corpus under testdata/.

mod common;

use std::collections::BTreeMap;

use num_bigint::BigUint;

use common::*;
use relgraph::cutsets::has_nontrivial_cutsets_up_to;
use relgraph::poly::binomial;
use relgraph::reliability::{class_filtration, unrel_exact, Order};
use relgraph::spanning::{is_tree_balanced, tree_number, tree_number_of_subdivision};
use relgraph::structure::{
    edge_distance_matrix, gamma_table, separation_vector, MarkedStructure,
};

#[test]
fn corpus_counts_and_regularity() {
    for (file, count) in [
        ("cubic04.g6", 1usize),
        ("cubic06.g6", 2),
        ("cubic08.g6", 5),
        ("cubic10.g6", 19),
        ("cubic12.g6", 85),
        ("cubic14.g6", 509),
    ] {
        let pool = load_corpus(file);
        assert_eq!(pool.len(), count, "{file}");
        for g in &pool {
            assert!(g.is_connected());
            assert!(g.degrees().iter().all(|&d| d == 3));
        }
    }
}

#[test]
fn near_one_identity_across_corpus() {
    // b_r = C(m, r) - T(G) at r = m - (n - 1)
    for file in ["cubic06.g6", "cubic08.g6", "cubic10.g6"] {
        for g in load_corpus(file) {
            let r = g.redundancy() as usize;
            let u = unrel_exact(&g).unwrap();
            let trees = tree_number(&g).unwrap();
            assert_eq!(&u.bernstein[r] + trees, binomial(g.edge_count(), r));
        }
    }
}

#[test]
fn theorem_extensional_on_cubic10() {
    // A_{g(k-2)} = D_{n,m}(g) at g = 4: the level-4 survivors are exactly
    // the graphs free of non-trivial cuts with at most 4 edges (= Petersen)
    let pool = load_corpus("cubic10.g6");
    let filt = class_filtration(&pool, Order::NearZero).unwrap();
    let survivors_at_4: Vec<usize> = filt.levels[3].1.clone();
    let free: Vec<usize> = (0..pool.len())
        .filter(|&i| {
            has_nontrivial_cutsets_up_to(&pool[i], Some(4))
                .unwrap()
                .witnesses
                .is_empty()
        })
        .collect();
    assert_eq!(survivors_at_4, free);
    assert_eq!(free.len(), 1);
    assert_eq!(pool[free[0]].girth(), Some(5));
}

#[test]
fn gamma_k1_invariant_under_single_markings() {
    // for structures whose cuts of size <= g_free are all trivial, the
    // column gamma[k][1] with k <= g_free does not depend on the marking
    for g in load_corpus("cubic10.g6") {
        let report = has_nontrivial_cutsets_up_to(&g, None).unwrap();
        let g_free = report.g_free;
        let mut reference: Option<Vec<BigUint>> = None;
        for e in 0..g.edge_count() {
            let ms = MarkedStructure::new(g.clone(), vec![e]).unwrap();
            let gt = gamma_table(&ms).unwrap();
            let column: Vec<BigUint> = (1..=g_free.min(gt.gamma.len() - 1))
                .map(|k| gt.gamma[k][1].clone())
                .collect();
            match &reference {
                None => reference = Some(column),
                Some(r) => assert_eq!(r, &column, "marking {e} changes gamma[k][1]"),
            }
        }
    }
}

#[test]
fn gamma_k2_is_a_function_of_mu() {
    // pairs of long chains with the same separation prefix give the same
    // gamma[k][2] for k < g_free; gamma[k][2] for a 2-marking counts the
    // disconnecting k-sets containing both long chains
    for g in [petersen(), heawood()] {
        let g_free = has_nontrivial_cutsets_up_to(&g, None).unwrap().g_free;
        let dist = edge_distance_matrix(&g);
        let m = g.edge_count();
        let buckets =
            relgraph::cutsets::disconnecting_masks_by_size(&g, g_free - 1, None).unwrap();
        let mut groups: BTreeMap<Vec<u64>, Vec<Vec<usize>>> = BTreeMap::new();
        for e in 0..m {
            for f in e + 1..m {
                let marking = vec![e, f];
                let mu = separation_vector(&dist, &marking, g_free.saturating_sub(2));
                let pair = (1u64 << e) | (1u64 << f);
                let column: Vec<usize> = (2..g_free)
                    .map(|k| buckets[k].iter().filter(|&&x| x & pair == pair).count())
                    .collect();
                groups.entry(mu).or_default().push(column);
            }
        }
        for (mu, columns) in groups {
            for c in &columns {
                assert_eq!(c, &columns[0], "mu = {mu:?} splits gamma[k][2]");
            }
        }
    }
}

#[test]
fn equal_distance_pairs_share_cut_membership_counts() {
    // all chain pairs at distance d lie in equally many disconnecting
    // k-sets, for d <= k - 2 < g_free (small version; the acceptance suite
    // runs the full criterion)
    let g = petersen();
    let g_free = has_nontrivial_cutsets_up_to(&g, None).unwrap().g_free;
    let dist = edge_distance_matrix(&g);
    let buckets = relgraph::cutsets::disconnecting_masks_by_size(&g, g_free - 1, None).unwrap();
    for k in 3..g_free {
        for d in 1..=(k - 2) {
            let mut counts = BTreeMap::new();
            for e in 0..g.edge_count() {
                for f in e + 1..g.edge_count() {
                    if dist[e][f] != d {
                        continue;
                    }
                    let pair = (1u64 << e) | (1u64 << f);
                    let c = buckets[k].iter().filter(|&&x| x & pair == pair).count();
                    counts.entry(c).or_insert(0usize);
                    *counts.get_mut(&c).unwrap() += 1;
                }
            }
            assert!(counts.len() <= 1, "k={k} d={d}: counts {counts:?}");
        }
    }
}

#[test]
fn shift_mechanism_on_unbalanced_corpus_structures() {
    // every non-tree-balanced cubic-8 structure rewards moving a length
    // unit toward the max witness once chains are long enough
    let c = 50usize;
    let mut unbalanced = 0;
    for g in load_corpus("cubic08.g6") {
        let report = is_tree_balanced(&g).unwrap();
        if report.balanced {
            continue;
        }
        unbalanced += 1;
        let m = g.edge_count();
        let balanced = vec![c; m];
        let mut shifted = balanced.clone();
        shifted[report.max_edge] += 1;
        shifted[report.min_edge] -= 1;
        assert!(
            tree_number_of_subdivision(&g, &shifted).unwrap()
                > tree_number_of_subdivision(&g, &balanced).unwrap()
        );
    }
    assert!(unbalanced > 0, "corpus should contain unbalanced structures");
}

#[test]
fn girth6_family_14_is_the_corpus_girth6_graph() {
    let pool = load_corpus("cubic14.g6");
    let girth6: Vec<&relgraph::Multigraph> =
        pool.iter().filter(|g| g.girth() == Some(6)).collect();
    assert_eq!(girth6.len(), 1, "the (3,6)-cage is unique on 14 vertices");
    let from_family = heawood();
    assert_eq!(
        unrel_exact(girth6[0]).unwrap(),
        unrel_exact(&from_family).unwrap()
    );
    assert_eq!(
        tree_number(girth6[0]).unwrap(),
        tree_number(&from_family).unwrap()
    );
}

#[test]
fn wagner_is_in_the_cubic8_corpus() {
    let pool = load_corpus("cubic08.g6");
    let w = unrel_exact(&wagner()).unwrap();
    let matches = pool
        .iter()
        .filter(|g| unrel_exact(g).unwrap() == w)
        .count();
    assert_eq!(matches, 1);
}
