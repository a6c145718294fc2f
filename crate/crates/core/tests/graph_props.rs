//! Structural invariants of the graph module, checked against independent
//! brute-force recomputation.

mod common;

use bcolor_core::{generate, girth, load_dimacs, subdivide, write_dimacs, FamilySpec, Girth};
use common::*;

#[test]
fn subdivision_scales_girth() {
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 50 {
        seed += 1;
        let n = 5 + (seed as usize % 6);
        let g = random_graph(n, 0.4, seed);
        let Girth::Finite(base) = girth(&g) else {
            continue;
        };
        for t in [1usize, 2] {
            let sub = subdivide(&g, t);
            assert_eq!(
                girth(&sub),
                Girth::Finite((t + 1) * base),
                "seed {seed}, t {t}"
            );
        }
        checked += 1;
    }
}

#[test]
fn crown_graphs_are_bipartite_and_regular() {
    for n in 2..=10usize {
        let g = generate(FamilySpec::Crown(n)).unwrap();
        assert!(g.is_bipartite());
        assert_eq!(g.vertex_count(), 2 * n);
        assert_eq!(g.edge_count(), n * (n - 1));
        assert!(g.vertices().all(|v| g.degree(v) == n - 1));
    }
}

#[test]
fn dimacs_round_trip_is_identity() {
    for seed in 0..100u64 {
        let n = 1 + (seed as usize % 12);
        let g = random_graph(n, 0.35, seed);
        let loaded = load_dimacs(&write_dimacs(&g)).unwrap();
        assert_eq!(loaded.graph, g, "seed {seed}");
        assert_eq!(loaded.merged_duplicates, 0);
    }
}

#[test]
fn girth_matches_subset_enumeration() {
    for seed in 0..60u64 {
        let n = 4 + (seed as usize % 7); // up to 10
        let g = random_graph(n, 0.35, 1000 + seed);
        let by_subsets = subset_girth_up_to(&g, 8);
        match (girth(&g), by_subsets) {
            (Girth::Finite(a), Some(b)) => assert_eq!(a, b, "seed {seed}"),
            (Girth::Finite(a), None) => assert!(a > 8, "seed {seed}"),
            (Girth::Acyclic, None) => {}
            (Girth::Acyclic, Some(b)) => panic!("seed {seed}: oracle found cycle {b} in a forest"),
        }
    }
}

#[test]
fn girth_matches_edge_removal_oracle() {
    for seed in 0..80u64 {
        let n = 3 + (seed as usize % 10);
        let g = random_graph(n, 0.3, 2000 + seed);
        let expected = naive_girth(&g);
        match (girth(&g), expected) {
            (Girth::Finite(a), Some(b)) => assert_eq!(a, b, "seed {seed}"),
            (Girth::Acyclic, None) => {}
            (got, want) => panic!("seed {seed}: girth {got:?} vs oracle {want:?}"),
        }
    }
    // fixed shapes
    assert_eq!(
        naive_girth(&generate(FamilySpec::Petersen).unwrap()),
        Some(5)
    );
    assert_eq!(naive_girth(&random_tree(15, 3)), None);
}

#[test]
fn random_trees_are_trees() {
    for seed in 0..50u64 {
        let n = 2 + (seed as usize % 15);
        let t = random_tree(n, seed);
        assert_eq!(t.edge_count(), n - 1);
        assert_eq!(girth(&t), Girth::Acyclic);
    }
}
