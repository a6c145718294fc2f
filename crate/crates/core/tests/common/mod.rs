//! Shared corpus builders and independent brute-force oracles for the
//! integration and acceptance suites. The oracles deliberately avoid the
//! library's algorithms: girth by per-edge shortest-path, chromatic number
//! by plain recursive enumeration, spectra by filtering all proper
//! colorings.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bcolor_core::{generate, greedy_coloring, subdivide, Coloring, FamilySpec, Graph};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_tree(n: usize, seed: u64) -> Graph {
    generate(FamilySpec::RandomTree { n, seed }).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Center 0 with `arms` children, each child carrying `arm_leaves` leaves.
pub fn star_of_stars(arms: usize, arm_leaves: usize) -> Graph {
    let mut edges = Vec::new();
    for child in 1..=arms {
        edges.push((0, child));
        for j in 0..arm_leaves {
            edges.push((child, arms + 1 + (child - 1) * arm_leaves + j));
        }
    }
    Graph::from_edges(1 + arms + arms * arm_leaves, &edges).unwrap()
}

/// A random proper coloring: first-fit along a shuffled vertex order.
pub fn random_proper_coloring(g: &Graph, seed: u64) -> Coloring {
    let mut order: Vec<usize> = g.vertices().collect();
    order.shuffle(&mut rng(seed));
    greedy_coloring(g, &order).unwrap()
}

// ---------------------------------------------------------------------------
// brute-force oracles
// ---------------------------------------------------------------------------

/// Girth as min over edges (u, v) of (shortest u-v path avoiding that edge)
/// plus one. Exact and independent of the per-root BFS in the library.
pub fn naive_girth(g: &Graph) -> Option<usize> {
    use std::collections::VecDeque;
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[u] = 0;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            if best.is_none_or(|b| len < b) {
                best = Some(len);
            }
        }
    }
    best
}

/// Smallest subset of size 3..=cap whose vertices can be arranged into a
/// cycle of the graph, or None.
pub fn subset_girth_up_to(g: &Graph, cap: usize) -> Option<usize> {
    let n = g.vertex_count();
    for len in 3..=cap.min(n) {
        let mut subset = Vec::with_capacity(len);
        if any_cycle_subset(g, 0, len, &mut subset) {
            return Some(len);
        }
    }
    None
}

fn any_cycle_subset(g: &Graph, from: usize, len: usize, subset: &mut Vec<usize>) -> bool {
    if subset.len() == len {
        return subset_is_cycle(g, subset);
    }
    for v in from..g.vertex_count() {
        subset.push(v);
        if any_cycle_subset(g, v + 1, len, subset) {
            return true;
        }
        subset.pop();
    }
    false
}

fn subset_is_cycle(g: &Graph, subset: &[usize]) -> bool {
    // every member needs two neighbors inside the subset
    for &v in subset {
        let deg_in = g.neighbors(v).iter().filter(|u| subset.contains(u)).count();
        if deg_in < 2 {
            return false;
        }
    }
    // search for a Hamiltonian cycle on the subset, anchored at its minimum
    let anchor = subset[0];
    let mut path = vec![anchor];
    let mut used = vec![false; subset.len()];
    used[0] = true;
    hamiltonian_cycle(g, subset, &mut path, &mut used)
}

fn hamiltonian_cycle(
    g: &Graph,
    subset: &[usize],
    path: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if path.len() == subset.len() {
        return g.has_edge(*path.last().unwrap(), path[0]);
    }
    let last = *path.last().unwrap();
    for (idx, &v) in subset.iter().enumerate() {
        if used[idx] || !g.has_edge(last, v) {
            continue;
        }
        used[idx] = true;
        path.push(v);
        if hamiltonian_cycle(g, subset, path, used) {
            return true;
        }
        path.pop();
        used[idx] = false;
    }
    false
}

/// Chromatic number by plain recursive enumeration with properness pruning.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if brute_colorable(g, k, 0, &mut colors) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

fn brute_colorable(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for c in 1..=k {
        if g.neighbors(v).iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if brute_colorable(g, k, v + 1, colors) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

/// m(G) straight from the definition: the largest k such that at least k
/// vertices have degree at least k-1.
pub fn brute_m(g: &Graph) -> usize {
    let n = g.vertex_count();
    (1..=n)
        .filter(|&k| (0..n).filter(|&v| g.degree(v) + 1 >= k).count() >= k)
        .max()
        .unwrap_or(0)
}

/// All palette sizes admitting a b-coloring, by enumerating every proper
/// coloring with colors at most `kmax` and checking the b-condition on the
/// classes actually used (label-independent). Exponential: keep n small.
pub fn brute_b_spectrum(g: &Graph, kmax: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut colors = vec![0usize; g.vertex_count()];
    brute_spectrum_rec(g, kmax, 0, &mut colors, &mut out);
    out
}

fn brute_spectrum_rec(
    g: &Graph,
    kmax: usize,
    v: usize,
    colors: &mut Vec<usize>,
    out: &mut BTreeSet<usize>,
) {
    let n = g.vertex_count();
    if v == n {
        let used: BTreeSet<usize> = colors.iter().copied().collect();
        let k = used.len();
        if out.contains(&k) {
            return;
        }
        let all_have_b = used.iter().all(|&class| {
            (0..n).any(|x| {
                colors[x] == class && {
                    let seen: BTreeSet<usize> = g.neighbors(x).iter().map(|&u| colors[u]).collect();
                    used.iter()
                        .all(|&other| other == class || seen.contains(&other))
                }
            })
        });
        if all_have_b {
            out.insert(k);
        }
        return;
    }
    for c in 1..=kmax {
        if g.neighbors(v).iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        brute_spectrum_rec(g, kmax, v + 1, colors, out);
        colors[v] = 0;
    }
}

/// Maximum palette of a partial Grundy coloring by enumerating all proper
/// colorings whose used colors are exactly 1..=u. Exponential: keep n small.
pub fn brute_partial_grundy(g: &Graph, kmax: usize) -> usize {
    let mut best = 0usize;
    let mut colors = vec![0usize; g.vertex_count()];
    brute_pg_rec(g, kmax, 0, &mut colors, &mut best);
    best
}

fn brute_pg_rec(g: &Graph, kmax: usize, v: usize, colors: &mut Vec<usize>, best: &mut usize) {
    let n = g.vertex_count();
    if v == n {
        let max_used = colors.iter().copied().max().unwrap_or(0);
        if max_used <= *best {
            return;
        }
        let mut present = vec![false; max_used + 1];
        for &c in colors.iter() {
            present[c] = true;
        }
        if !(1..=max_used).all(|c| present[c]) {
            return;
        }
        let ok = (1..=max_used).all(|class| {
            (0..n).any(|x| {
                colors[x] == class && {
                    let mut seen = vec![false; class];
                    for &u in g.neighbors(x) {
                        if colors[u] < class {
                            seen[colors[u]] = true;
                        }
                    }
                    (1..class).all(|c| seen[c])
                }
            })
        });
        if ok {
            *best = max_used;
        }
        return;
    }
    for c in 1..=kmax {
        if g.neighbors(v).iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        brute_pg_rec(g, kmax, v + 1, colors, best);
        colors[v] = 0;
    }
}

// ---------------------------------------------------------------------------
// corpora
// ---------------------------------------------------------------------------

/// At least 30 instances of girth >= 8: double/triple subdivisions of K4,
/// K5 and the Petersen graph, plus seeded random trees.
pub fn girth8_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let k4 = complete(4);
    let k5 = complete(5);
    let pet = generate(FamilySpec::Petersen).unwrap();
    out.push(("K4 subdivided t=2".into(), subdivide(&k4, 2)));
    out.push(("K4 subdivided t=3".into(), subdivide(&k4, 3)));
    out.push(("K5 subdivided t=2".into(), subdivide(&k5, 2)));
    out.push(("K5 subdivided t=3".into(), subdivide(&k5, 3)));
    out.push(("petersen subdivided t=1".into(), subdivide(&pet, 1)));
    out.push(("petersen subdivided t=2".into(), subdivide(&pet, 2)));
    out.push(("petersen subdivided t=3".into(), subdivide(&pet, 3)));
    for seed in 1..=23u64 {
        let n = 6 + ((seed as usize) * 3) % 11;
        out.push((
            format!("random tree n={n} seed={seed}"),
            random_tree(n, seed),
        ));
    }
    out
}

/// The girth >= 8 corpus plus extra girth-7 and forest instances, including
/// trees whose m(G) rises above 2*chi so that the iris pipeline is
/// genuinely exercised.
pub fn girth7_corpus() -> Vec<(String, Graph)> {
    let mut out = girth8_corpus();
    out.push(("C7".into(), generate(FamilySpec::Cycle(7)).unwrap()));
    out.push(("star of stars 4x3".into(), star_of_stars(4, 3)));
    out.push(("star of stars 5x4".into(), star_of_stars(5, 4)));
    out.push((
        "spider 3x2".into(),
        generate(FamilySpec::Spider {
            legs: 3,
            leg_length: 2,
        })
        .unwrap(),
    ));
    out.push((
        "figure-one tree".into(),
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 8),
                (3, 9),
            ],
        )
        .unwrap(),
    ));
    out.push((
        "crown(4) subdivided t=2".into(),
        subdivide(&generate(FamilySpec::Crown(4)).unwrap(), 2),
    ));
    out.push((
        "K33 subdivided t=2".into(),
        subdivide(&generate(FamilySpec::CompleteBipartite(3, 3)).unwrap(), 2),
    ));
    out.push(("C7 with legs".into(), c7_with_legs()));
    out
}

/// C7 with a 2-edge leg hanging off vertices 0..=3: girth exactly 7, odd
/// chromatic number, and m(G) = 4.
pub fn c7_with_legs() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    for i in 0..4usize {
        let mid = 7 + 2 * i;
        edges.push((i, mid));
        edges.push((mid, mid + 1));
    }
    Graph::from_edges(15, &edges).unwrap()
}
