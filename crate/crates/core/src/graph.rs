//! Simple undirected graphs with dense 0-based vertex ids, the generator
//! families used throughout the test corpus, girth, and edge subdivision.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Range;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("bad family parameter: {0}")]
    BadParameter(String),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
}

/// Immutable simple undirected graph.
///
/// Adjacency lists are sorted and deduplicated at construction and never
/// change afterwards, so a `Graph` is safe to share freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged silently; self-loops and out-of-range
    /// endpoints are errors.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for &w in &[u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(|l| l.len()).sum::<usize>() / 2;
        Ok(Graph { adj, edge_count })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.adj.len()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn degree_sequence_desc(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(|l| l.len()).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph {{ n: {}, m: {} }}",
            self.vertex_count(),
            self.edge_count
        )
    }
}

/// Length of a shortest cycle, or `Acyclic` for forests.
///
/// The derived order makes `Acyclic` compare greater than every finite
/// girth, matching its role as an infinite cycle length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// True when the girth is at least `bound`. Forests satisfy every bound.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(v) => v >= bound,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(v) => Some(v),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(v) => write!(f, "{v}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// Exact girth by breadth-first search from every root, O(n·m).
///
/// For each root, every non-tree edge `(u, v)` seen while expanding `u`
/// yields a closed walk of length `dist[u] + dist[v] + 1` containing a
/// cycle no longer than that; for a root on a shortest cycle the antipodal
/// edge attains the girth exactly.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // any candidate from this depth on has length >= 2*dist[u] + 1
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    match best {
        Some(l) => Girth::Finite(l),
        None => Girth::Acyclic,
    }
}

/// Replaces every edge by a path with `t` internal vertices.
///
/// Original vertices keep their ids; the internal vertices of the i-th edge
/// (in `Graph::edges` order) are `n + i*t .. n + (i+1)*t`, laid out from the
/// smaller endpoint towards the larger. Every cycle length is multiplied by
/// `t + 1`, so the girth scales by the same factor.
pub fn subdivide(g: &Graph, t: usize) -> Graph {
    if t == 0 {
        return g.clone();
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let mut new_edges = Vec::with_capacity(edges.len() * (t + 1));
    for (idx, &(u, v)) in edges.iter().enumerate() {
        let base = n + idx * t;
        let mut prev = u;
        for j in 0..t {
            new_edges.push((prev, base + j));
            prev = base + j;
        }
        new_edges.push((prev, v));
    }
    Graph::from_edges(n + edges.len() * t, &new_edges).expect("subdivision preserves simplicity")
}

/// The graph families used by the examples and the test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    /// K_{n,n} minus a perfect matching.
    Crown(usize),
    Hypercube(usize),
    Petersen,
    RandomTree {
        n: usize,
        seed: u64,
    },
    Spider {
        legs: usize,
        leg_length: usize,
    },
}

/// Builds the named family with a fixed, documented vertex labeling.
///
/// Crown(n): side A is `0..n`, side B is `n..2n`, with an edge `(i, n+j)`
/// iff `i != j`. Hypercube(d): vertex ids are the d-bit strings, adjacent
/// when they differ in one bit. Spider: center 0, leg i occupies
/// `1 + i*len .. 1 + (i+1)*len` walking outwards.
pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    let bad = |msg: String| Err(GraphError::BadParameter(msg));
    match spec {
        FamilySpec::Path(n) => {
            if n == 0 {
                return bad("path requires n >= 1".into());
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return bad("cycle requires n >= 3".into());
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star(leaves) => {
            if leaves == 0 {
                return bad("star requires at least one leaf".into());
            }
            let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
            Graph::from_edges(leaves + 1, &edges)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad("complete bipartite requires both sides non-empty".into());
            }
            let mut edges = Vec::with_capacity(a * b);
            for i in 0..a {
                for j in 0..b {
                    edges.push((i, a + j));
                }
            }
            Graph::from_edges(a + b, &edges)
        }
        FamilySpec::Crown(n) => {
            if n < 2 {
                return bad("crown requires n >= 2".into());
            }
            let mut edges = Vec::with_capacity(n * (n - 1));
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        edges.push((i, n + j));
                    }
                }
            }
            Graph::from_edges(2 * n, &edges)
        }
        FamilySpec::Hypercube(d) => {
            if d == 0 || d > 10 {
                return bad(format!("hypercube dimension {d} outside 1..=10"));
            }
            let n = 1usize << d;
            let mut edges = Vec::new();
            for v in 0..n {
                for bit in 0..d {
                    let u = v ^ (1 << bit);
                    if v < u {
                        edges.push((v, u));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, 5 + i));
            }
            Graph::from_edges(10, &edges)
        }
        FamilySpec::RandomTree { n, seed } => {
            if n == 0 {
                return bad("random tree requires n >= 1".into());
            }
            Ok(random_tree(n, seed))
        }
        FamilySpec::Spider { legs, leg_length } => {
            if legs == 0 || leg_length == 0 {
                return bad("spider requires legs >= 1 and leg length >= 1".into());
            }
            let n = 1 + legs * leg_length;
            let mut edges = Vec::with_capacity(n - 1);
            for leg in 0..legs {
                let first = 1 + leg * leg_length;
                edges.push((0, first));
                for j in 1..leg_length {
                    edges.push((first + j - 1, first + j));
                }
            }
            Graph::from_edges(n, &edges)
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seeded uniform labelled tree via a Pruefer sequence.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).unwrap();
    }
    let mut state = seed ^ 0xD1B5_4A32_D192_ED03;
    let seq: Vec<usize> = (0..n - 2)
        .map(|_| (splitmix64(&mut state) % n as u64) as usize)
        .collect();
    let mut degree = vec![1usize; n];
    for &a in &seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &a in &seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1 && !used[v])
            .expect("pruefer decode always has a leaf");
        edges.push((leaf, a));
        used[leaf] = true;
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1 && !used[v]).collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("pruefer decode yields a simple tree")
}
