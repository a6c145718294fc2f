//! Exact search for a b-coloring with a prescribed number of colors.

use crate::coloring::Coloring;
use crate::cover::{solve, CoverInstance};
use crate::graph::Graph;
use crate::{Budget, SearchResult};

/// Searches for a b-coloring of `g` with exactly `k` colors.
///
/// Any b-coloring with k colors has, per color, a b-vertex of degree at
/// least k-1; after a color permutation the k smallest such representatives
/// appear in ascending order. The search therefore enumerates ascending
/// k-subsets of the degree-qualified vertices, fixes representative i on
/// color i, and asks the cover solver for a proper completion in which
/// every representative sees all other colors. Exhausting all subsets
/// proves absence; the budget turns an overlong run into `Unknown`.
pub fn b_coloring_search(g: &Graph, k: usize, budget: &mut Budget) -> SearchResult<Coloring> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return SearchResult::Absent;
    }
    if k == 1 {
        return if g.edge_count() == 0 {
            SearchResult::Found(Coloring::from_raw(vec![1; n], 1))
        } else {
            SearchResult::Absent
        };
    }
    let qualified: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 >= k).collect();
    if qualified.len() < k {
        return SearchResult::Absent;
    }

    let full_mask: u128 = if k >= 128 {
        return SearchResult::Unknown;
    } else {
        (1u128 << k) - 1
    };

    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if !budget.tick() {
            return SearchResult::Unknown;
        }
        let reps: Vec<usize> = combo.iter().map(|&i| qualified[i]).collect();
        let inst = CoverInstance {
            g,
            k,
            preassigned: reps.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect(),
            covers: reps
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, full_mask & !(1u128 << i)))
                .collect(),
        };
        match solve(&inst, budget) {
            SearchResult::Found(colors) => {
                let coloring = Coloring::from_raw(colors, k);
                debug_assert!(crate::bcolor::is_b_coloring(g, &coloring).unwrap());
                return SearchResult::Found(coloring);
            }
            SearchResult::Unknown => return SearchResult::Unknown,
            SearchResult::Absent => {}
        }
        if !next_combination(&mut combo, qualified.len()) {
            return SearchResult::Absent;
        }
    }
}

/// Advances `idx` to the next ascending k-combination of `0..n`.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bcolor::is_b_coloring;
    use crate::coloring::chromatic_number;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn cube_has_no_three_color_b_coloring() {
        let g = generate(FamilySpec::Hypercube(3)).unwrap();
        let r = b_coloring_search(&g, 3, &mut Budget::default_exact());
        assert!(r.is_absent());
    }

    #[test]
    fn cube_has_two_and_four() {
        let g = generate(FamilySpec::Hypercube(3)).unwrap();
        for k in [2usize, 4] {
            let r = b_coloring_search(&g, k, &mut Budget::default_exact());
            let c = r.found().expect("cube has a b-coloring here");
            assert_eq!(c.palette(), k);
            assert!(is_b_coloring(&g, &c).unwrap());
        }
    }

    #[test]
    fn chromatic_witness_level_always_exists() {
        for spec in [
            FamilySpec::Cycle(5),
            FamilySpec::Petersen,
            FamilySpec::Crown(4),
        ] {
            let g = generate(spec).unwrap();
            let chi = chromatic_number(&g, &mut Budget::default_exact());
            assert!(chi.exact);
            let r = b_coloring_search(&g, chi.chi, &mut Budget::default_exact());
            assert!(r.is_found());
        }
    }

    #[test]
    fn crown_gap_is_proven_absent() {
        let g = generate(FamilySpec::Crown(4)).unwrap();
        assert!(b_coloring_search(&g, 3, &mut Budget::default_exact()).is_absent());
        assert!(b_coloring_search(&g, 4, &mut Budget::default_exact()).is_found());
    }

    #[test]
    fn tiny_budget_reports_unknown() {
        let g = generate(FamilySpec::Crown(6)).unwrap();
        let r = b_coloring_search(&g, 4, &mut Budget::new(3));
        assert!(r.is_unknown());
    }

    #[test]
    fn degenerate_palettes() {
        let g = Graph::empty(3);
        assert!(b_coloring_search(&g, 1, &mut Budget::default_exact()).is_found());
        assert!(b_coloring_search(&g, 2, &mut Budget::default_exact()).is_absent());
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(b_coloring_search(&edge, 1, &mut Budget::default_exact()).is_absent());
        assert!(b_coloring_search(&edge, 2, &mut Budget::default_exact()).is_found());
        assert!(b_coloring_search(&edge, 3, &mut Budget::default_exact()).is_absent());
    }
}
