//! Cleaning and chromatic-number invariants over randomized inputs.

mod common;

use bcolor_core::{
    b_vertices, chromatic_number, clean_color, clean_to_b_coloring, is_b_coloring, is_proper,
    normalize, Budget,
};
use common::*;

#[test]
fn cleaning_preserves_properness_and_b_vertices() {
    // 200 random (graph, coloring, cleanable class) triples
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 200 {
        seed += 1;
        let n = 5 + (seed as usize % 8);
        let g = random_graph(n, 0.35, seed);
        let c = random_proper_coloring(&g, seed ^ 0xABCD);
        if c.palette() < 2 {
            continue;
        }
        let report = b_vertices(&g, &c).unwrap();
        let Some(&drop) = report.classes_without_b_vertex().first() else {
            continue;
        };
        let before: Vec<usize> = report
            .all()
            .into_iter()
            .filter(|&v| c.color(v) != Some(drop))
            .collect();
        let cleaned = clean_color(&g, &c, drop).unwrap();
        assert!(is_proper(&g, &cleaned).unwrap(), "seed {seed}");
        assert_eq!(cleaned.palette(), c.palette() - 1, "seed {seed}");
        let after = b_vertices(&g, &cleaned).unwrap().all();
        for v in before {
            assert!(after.contains(&v), "seed {seed}: b-vertex {v} lost");
        }
        checked += 1;
    }
}

#[test]
fn clean_to_b_coloring_reaches_a_b_coloring() {
    for seed in 0..150u64 {
        let n = 4 + (seed as usize % 9);
        let g = random_graph(n, 0.3, 7000 + seed);
        let c = random_proper_coloring(&g, seed);
        let b = clean_to_b_coloring(&g, &c).unwrap();
        assert!(is_b_coloring(&g, &b).unwrap(), "seed {seed}");
        assert!(b.palette() <= c.palette(), "seed {seed}");
        // a b-coloring is a fixpoint
        let again = clean_to_b_coloring(&g, &b).unwrap();
        assert_eq!(again, b, "seed {seed}");
    }
}

#[test]
fn chromatic_number_matches_exhaustive_enumeration() {
    for seed in 0..120u64 {
        let n = 1 + (seed as usize % 8);
        let g = random_graph(n, 0.45, 4000 + seed);
        let r = chromatic_number(&g, &mut Budget::default_exact());
        assert!(r.exact, "seed {seed}");
        assert_eq!(r.chi, brute_chromatic(&g), "seed {seed}");
        assert!(is_proper(&g, &r.witness).unwrap());
        assert_eq!(r.witness.palette(), r.chi);
    }
}

#[test]
fn chromatic_witnesses_are_b_colorings() {
    for seed in 0..60u64 {
        let n = 3 + (seed as usize % 8);
        let g = random_graph(n, 0.4, 5000 + seed);
        let r = chromatic_number(&g, &mut Budget::default_exact());
        assert!(r.exact);
        assert!(
            is_b_coloring(&g, &r.witness).unwrap(),
            "seed {seed}: an optimal coloring cannot be cleaned"
        );
    }
}

#[test]
fn normalize_is_idempotent_and_partition_preserving() {
    for seed in 0..80u64 {
        let n = 2 + (seed as usize % 10);
        let g = random_graph(n, 0.3, 6000 + seed);
        let c = random_proper_coloring(&g, seed);
        let norm = normalize(&c).unwrap();
        assert_eq!(normalize(&norm).unwrap(), norm);
        for u in 0..n {
            for v in 0..n {
                assert_eq!(
                    c.color(u) == c.color(v),
                    norm.color(u) == norm.color(v),
                    "seed {seed}: partition changed"
                );
            }
        }
    }
}
