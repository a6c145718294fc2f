//! Exact partial Grundy number by backtracking, capped by the stair factor.

use crate::coloring::Coloring;
use crate::cover::{solve, CoverInstance};
use crate::graph::Graph;
use crate::grundy::stair::staircase_bound;
use crate::grundy::{stair_sequence, GrundyError, StairMode};
use crate::{Budget, SearchResult};

/// Searches for a partial Grundy coloring with exactly `k` colors.
///
/// Classes are not interchangeable here (the Grundy condition orders them),
/// so the search picks one Grundy representative per class 2..=k — a vertex
/// of degree at least i-1 whose neighborhood must cover `{1..i-1}` — and
/// asks the cover solver for a proper completion. Class 1 needs no
/// representative: the representative of class 2 forces a color-1 neighbor,
/// and color-1 vertices are Grundy vacuously.
pub fn partial_grundy_with_k(g: &Graph, k: usize, budget: &mut Budget) -> SearchResult<Coloring> {
    let n = g.vertex_count();
    if n == 0 || k == 0 || k > n {
        return SearchResult::Absent;
    }
    if k == 1 {
        return if g.edge_count() == 0 {
            SearchResult::Found(Coloring::from_raw(vec![1; n], 1))
        } else {
            SearchResult::Absent
        };
    }
    if k > 128 {
        return SearchResult::Unknown;
    }
    let mut reps: Vec<usize> = Vec::with_capacity(k - 1);
    let mut used = vec![false; n];
    choose_reps(g, k, k, &mut reps, &mut used, budget)
}

/// Picks representatives for classes k, k-1, ..., 2 (ascending vertex ids at
/// each level), then defers to the cover solver.
fn choose_reps(
    g: &Graph,
    k: usize,
    class: usize,
    reps: &mut Vec<usize>,
    used: &mut Vec<bool>,
    budget: &mut Budget,
) -> SearchResult<Coloring> {
    if class == 1 {
        if !budget.tick() {
            return SearchResult::Unknown;
        }
        let inst = CoverInstance {
            g,
            k,
            preassigned: reps
                .iter()
                .enumerate()
                .map(|(idx, &v)| (v, k - idx))
                .collect(),
            covers: reps
                .iter()
                .enumerate()
                .map(|(idx, &v)| {
                    let own = k - idx;
                    (v, (1u128 << (own - 1)) - 1)
                })
                .collect(),
        };
        return match solve(&inst, budget) {
            SearchResult::Found(colors) => {
                let coloring = Coloring::from_raw(colors, k);
                debug_assert!(crate::grundy::grundy_vertices(g, &coloring)
                    .unwrap()
                    .is_partial_grundy());
                SearchResult::Found(coloring)
            }
            other => other.map(|_| unreachable!()),
        };
    }
    if !budget.tick() {
        return SearchResult::Unknown;
    }
    let mut saw_unknown = false;
    for v in 0..g.vertex_count() {
        if used[v] || g.degree(v) + 1 < class {
            continue;
        }
        used[v] = true;
        reps.push(v);
        match choose_reps(g, k, class - 1, reps, used, budget) {
            SearchResult::Found(c) => return SearchResult::Found(c),
            SearchResult::Unknown => saw_unknown = true,
            SearchResult::Absent => {}
        }
        reps.pop();
        used[v] = false;
        if saw_unknown {
            return SearchResult::Unknown;
        }
    }
    if saw_unknown {
        SearchResult::Unknown
    } else {
        SearchResult::Absent
    }
}

/// Exact partial Grundy number: the largest k admitting a partial Grundy
/// coloring, searched downward from the stair factor (an upper bound).
/// `Unknown` when the budget gives out before the answer is pinned.
pub fn partial_grundy_oracle(g: &Graph, budget: &mut Budget) -> SearchResult<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return SearchResult::Found(0);
    }
    let cap = match stair_sequence(g, StairMode::Exact, budget) {
        Ok(fs) => fs.s(),
        Err(GrundyError::BudgetExhausted) => staircase_bound(&g.degree_sequence_desc()),
        Err(_) => return SearchResult::Unknown,
    };
    for k in (1..=cap).rev() {
        match partial_grundy_with_k(g, k, budget) {
            SearchResult::Found(_) => return SearchResult::Found(k),
            SearchResult::Absent => {}
            SearchResult::Unknown => return SearchResult::Unknown,
        }
    }
    // every graph with a vertex admits the one-color coloring of its
    // edgeless core; reaching this point means the budget interfered
    SearchResult::Unknown
}
