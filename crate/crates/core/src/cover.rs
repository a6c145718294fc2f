//! Backtracking completion of partial colorings under neighborhood-cover
//! constraints. Shared by the exact b-coloring search and the partial
//! Grundy search: both fix a few representative vertices and require each
//! representative's neighborhood to collect a prescribed set of colors.

use crate::graph::Graph;
use crate::{Budget, SearchResult};

pub(crate) struct CoverInstance<'a> {
    pub g: &'a Graph,
    /// Colors range over `1..=k`.
    pub k: usize,
    /// Fixed assignments, pairwise distinct vertices.
    pub preassigned: Vec<(usize, usize)>,
    /// `(vertex, mask)`: the vertex's neighborhood must end up containing
    /// every color whose bit is set (bit c-1 for color c).
    pub covers: Vec<(usize, u128)>,
}

struct State<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    missing: Vec<u128>,
    free: Vec<usize>,
    cover_vertex: Vec<usize>,
    covers_touching: Vec<Vec<usize>>,
    uncolored: usize,
}

/// Solves a cover instance, returning a total coloring in `1..=k`.
pub(crate) fn solve(inst: &CoverInstance<'_>, budget: &mut Budget) -> SearchResult<Vec<usize>> {
    let n = inst.g.vertex_count();
    if inst.k == 0 || inst.k > 128 {
        return SearchResult::Unknown;
    }
    let mut colors = vec![0usize; n];
    for &(v, c) in &inst.preassigned {
        debug_assert!(c >= 1 && c <= inst.k);
        if colors[v] != 0 && colors[v] != c {
            return SearchResult::Absent;
        }
        colors[v] = c;
    }
    for &(v, c) in &inst.preassigned {
        if inst.g.neighbors(v).iter().any(|&u| colors[u] == c) {
            return SearchResult::Absent;
        }
    }

    let mut missing = Vec::with_capacity(inst.covers.len());
    let mut free = Vec::with_capacity(inst.covers.len());
    let mut cover_vertex = Vec::with_capacity(inst.covers.len());
    let mut covers_touching = vec![Vec::new(); n];
    for (idx, &(v, mask)) in inst.covers.iter().enumerate() {
        let mut miss = mask;
        let mut free_count = 0usize;
        for &u in inst.g.neighbors(v) {
            if colors[u] == 0 {
                free_count += 1;
                covers_touching[u].push(idx);
            } else {
                miss &= !(1u128 << (colors[u] - 1));
            }
        }
        if miss.count_ones() as usize > free_count {
            return SearchResult::Absent;
        }
        missing.push(miss);
        free.push(free_count);
        cover_vertex.push(v);
    }

    let uncolored = colors.iter().filter(|&&c| c == 0).count();
    let mut state = State {
        g: inst.g,
        k: inst.k,
        colors,
        missing,
        free,
        cover_vertex,
        covers_touching,
        uncolored,
    };
    match dfs(&mut state, budget) {
        SearchResult::Found(()) => SearchResult::Found(state.colors),
        SearchResult::Absent => SearchResult::Absent,
        SearchResult::Unknown => SearchResult::Unknown,
    }
}

fn dfs(state: &mut State<'_>, budget: &mut Budget) -> SearchResult<()> {
    if state.uncolored == 0 {
        debug_assert!(state.missing.iter().all(|&m| m == 0));
        return SearchResult::Found(());
    }
    if !budget.tick() {
        return SearchResult::Unknown;
    }
    let v = pick_vertex(state);
    let mut any_unknown = false;
    for c in 1..=state.k {
        if state.g.neighbors(v).iter().any(|&u| state.colors[u] == c) {
            continue;
        }
        // assign and update the covers around v
        state.colors[v] = c;
        state.uncolored -= 1;
        let bit = 1u128 << (c - 1);
        let touched = state.covers_touching[v].clone();
        let mut saved: Vec<(usize, u128, usize)> = Vec::with_capacity(touched.len());
        let mut feasible = true;
        for &t in &touched {
            saved.push((t, state.missing[t], state.free[t]));
            state.free[t] -= 1;
            state.missing[t] &= !bit;
            if state.missing[t].count_ones() as usize > state.free[t] {
                feasible = false;
            }
        }
        if feasible {
            match dfs(state, budget) {
                SearchResult::Found(()) => return SearchResult::Found(()),
                SearchResult::Unknown => any_unknown = true,
                SearchResult::Absent => {}
            }
        }
        for &(t, miss, fr) in saved.iter().rev() {
            state.missing[t] = miss;
            state.free[t] = fr;
        }
        state.colors[v] = 0;
        state.uncolored += 1;
        if any_unknown {
            return SearchResult::Unknown;
        }
    }
    if any_unknown {
        SearchResult::Unknown
    } else {
        SearchResult::Absent
    }
}

/// Branch vertex choice: an uncolored neighbor of the tightest unsatisfied
/// cover when one exists, otherwise the most saturated uncolored vertex.
fn pick_vertex(state: &State<'_>) -> usize {
    let mut tight: Option<(usize, usize)> = None; // (slack, cover idx)
    for t in 0..state.missing.len() {
        let need = state.missing[t].count_ones() as usize;
        if need == 0 {
            continue;
        }
        let slack = state.free[t] - need;
        if tight.is_none_or(|(s, _)| slack < s) {
            tight = Some((slack, t));
        }
    }
    if let Some((_, t)) = tight {
        let v = state.cover_vertex[t];
        return state
            .g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&u| state.colors[u] == 0)
            .expect("unsatisfied cover has an uncolored neighbor");
    }
    let mut best = usize::MAX;
    let mut best_key = (0usize, 0usize);
    for v in 0..state.g.vertex_count() {
        if state.colors[v] != 0 {
            continue;
        }
        let mut nbr: Vec<usize> = state
            .g
            .neighbors(v)
            .iter()
            .map(|&u| state.colors[u])
            .filter(|&c| c != 0)
            .collect();
        nbr.sort_unstable();
        nbr.dedup();
        let key = (nbr.len(), state.g.degree(v));
        if best == usize::MAX || key > best_key {
            best = v;
            best_key = key;
        }
    }
    best
}
