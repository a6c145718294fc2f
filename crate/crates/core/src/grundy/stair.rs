//! Feasible sequences of maximum size: exact backtracking and the
//! min-degree greedy heuristic.

use crate::graph::Graph;
use crate::grundy::{FeasibleSequence, GrundyError};
use crate::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StairMode {
    /// Maximum-size sequence by top-down backtracking.
    Exact,
    /// Top-down single pass picking the eligible vertex of minimum current
    /// degree (ties: smallest id). A heuristic; never larger than exact.
    Greedy,
}

/// Builds a feasible sequence of `g`. In exact mode the result has maximum
/// size s(G), found by trying sizes downward from the degree staircase
/// bound; feasibility is monotone (dropping w_1 keeps a sequence feasible),
/// so the first size that works is the maximum.
///
/// The canonical exact sequence picks w_s first, then w_{s-1}, and so on,
/// each time the smallest eligible id. Witness sets take the i-1 smallest
/// surviving neighbors of w_i.
pub fn stair_sequence(
    g: &Graph,
    mode: StairMode,
    budget: &mut Budget,
) -> Result<FeasibleSequence, GrundyError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GrundyError::EmptyGraph);
    }
    let order = match mode {
        StairMode::Exact => exact_order(g, budget)?,
        StairMode::Greedy => greedy_order(g),
    };
    let witnesses = witnesses_for(g, &order);
    let fs = FeasibleSequence { order, witnesses };
    debug_assert!(fs.validate(g).is_ok());
    Ok(fs)
}

/// Largest s such that the descending degree sequence satisfies
/// degs[i] >= s-1-i for every i < s. An upper bound on s(G), since the
/// i-th sequence vertex from the top needs that much degree in a subgraph.
pub(crate) fn staircase_bound(degs_desc: &[usize]) -> usize {
    let n = degs_desc.len();
    let mut best = 0;
    for s in 1..=n {
        if (0..s).all(|i| degs_desc[i] + i + 1 >= s) {
            best = s;
        }
    }
    best
}

fn exact_order(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, GrundyError> {
    let n = g.vertex_count();
    let ub = staircase_bound(&g.degree_sequence_desc());
    for s in (1..=ub).rev() {
        let mut removed = vec![false; n];
        let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut rev = Vec::with_capacity(s);
        if dfs(g, s, &mut deg, &mut removed, &mut rev, budget)? {
            rev.reverse();
            return Ok(rev);
        }
    }
    unreachable!("a single vertex is always a feasible sequence")
}

fn dfs(
    g: &Graph,
    level: usize,
    deg: &mut Vec<usize>,
    removed: &mut Vec<bool>,
    rev: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<bool, GrundyError> {
    if level == 0 {
        return Ok(true);
    }
    if !budget.tick() {
        return Err(GrundyError::BudgetExhausted);
    }
    // remaining degrees must still carry a staircase of height `level`
    let mut remaining: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| !removed[v])
        .map(|v| deg[v])
        .collect();
    remaining.sort_unstable_by(|a, b| b.cmp(a));
    if staircase_bound(&remaining) < level {
        return Ok(false);
    }
    for v in 0..g.vertex_count() {
        if removed[v] || deg[v] + 1 < level {
            continue;
        }
        removed[v] = true;
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
        rev.push(v);
        if dfs(g, level - 1, deg, removed, rev, budget)? {
            return Ok(true);
        }
        rev.pop();
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] += 1;
            }
        }
        removed[v] = false;
    }
    Ok(false)
}

fn greedy_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let ub = staircase_bound(&g.degree_sequence_desc());
    for s in (1..=ub).rev() {
        let mut removed = vec![false; n];
        let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut rev = Vec::with_capacity(s);
        let mut ok = true;
        for level in (1..=s).rev() {
            let pick = (0..n)
                .filter(|&v| !removed[v] && deg[v] + 1 >= level)
                .min_by_key(|&v| (deg[v], v));
            match pick {
                Some(v) => {
                    removed[v] = true;
                    for &u in g.neighbors(v) {
                        if !removed[u] {
                            deg[u] -= 1;
                        }
                    }
                    rev.push(v);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            rev.reverse();
            return rev;
        }
    }
    vec![0]
}

fn witnesses_for(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let s = order.len();
    let mut pos = vec![0usize; n];
    for (idx, &w) in order.iter().enumerate() {
        pos[w] = idx + 1;
    }
    let mut out = Vec::with_capacity(s.saturating_sub(1));
    for i in 2..=s {
        let w = order[i - 1];
        let wit: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&z| pos[z] == 0 || pos[z] <= i)
            .take(i - 1)
            .collect();
        debug_assert_eq!(wit.len(), i - 1);
        out.push(wit);
    }
    out
}
