//! Everything b-chromatic: b-vertex analysis, the m(G) degree bound,
//! k-irises, the dependence machinery behind the descent move system, exact
//! b-coloring search, spectra and b-continuity.

mod descent;
mod iris;
mod search;
mod spectrum;

pub use descent::{default_descent_target, descend_once, DescentOutcome};
pub use iris::iris_b_coloring;
pub use search::b_coloring_search;
pub use spectrum::{b_spectrum, theorem2_constructor, SpectrumReport};

use thiserror::Error;

use crate::coloring::{Coloring, ColoringError};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BColoringError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("vertex {vertex} has color {actual}, expected class {expected}")]
    MixedClass {
        vertex: usize,
        expected: usize,
        actual: usize,
    },
    #[error("vertex {0} is a b-vertex")]
    IsBVertex(usize),
    #[error("color {color} outside palette 1..={palette}")]
    BadColor { color: usize, palette: usize },
    #[error("class {0} has no b-vertex; not a b-coloring")]
    NotBColoring(usize),
    #[error("descent requires at least 2 colors, got {0}")]
    PaletteTooSmall(usize),
    #[error("girth {0} is below 7 and the graph is not a forest")]
    PreconditionGirth(usize),
    #[error("iris has k={k}, construction needs k >= 2*chi = {twice_chi}")]
    IrisTooSmall { k: usize, twice_chi: usize },
    #[error("invalid iris certificate: {0}")]
    InsufficientNeighbors(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

// ---------------------------------------------------------------------------
// raw helpers over plain color slices (1-based colors, always total)
// ---------------------------------------------------------------------------

/// True iff `v`'s neighborhood meets every color class other than its own.
pub(crate) fn is_b_vertex_raw(g: &Graph, colors: &[usize], k: usize, v: usize) -> bool {
    let own = colors[v];
    let mut seen = vec![false; k + 1];
    let mut count = 0usize;
    for &u in g.neighbors(v) {
        let c = colors[u];
        if c != own && !seen[c] {
            seen[c] = true;
            count += 1;
        }
    }
    count == k - 1
}

pub(crate) fn b_sets_raw(g: &Graph, colors: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut sets = vec![Vec::new(); k];
    for v in 0..g.vertex_count() {
        if is_b_vertex_raw(g, colors, k, v) {
            sets[colors[v] - 1].push(v);
        }
    }
    sets
}

pub(crate) fn b_set_of_color_raw(
    g: &Graph,
    colors: &[usize],
    k: usize,
    color: usize,
) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| colors[v] == color && is_b_vertex_raw(g, colors, k, v))
        .collect()
}

/// Colors `j != class_color` whose every b-vertex has all of its
/// `class_color`-colored neighbors inside `set`. Colors whose b-vertices
/// have no `class_color` neighbors at all qualify vacuously.
pub(crate) fn dependent_on_raw(
    g: &Graph,
    colors: &[usize],
    k: usize,
    class_color: usize,
    set: &[usize],
    bsets: &[Vec<usize>],
) -> Vec<usize> {
    let mut in_set = vec![false; g.vertex_count()];
    for &x in set {
        in_set[x] = true;
    }
    (1..=k)
        .filter(|&j| {
            j != class_color
                && bsets[j - 1].iter().all(|&y| {
                    g.neighbors(y)
                        .iter()
                        .all(|&z| colors[z] != class_color || in_set[z])
                })
        })
        .collect()
}

/// Proper recolor options for `x` (colors in `1..=k` other than its own and
/// absent from its neighborhood), ascending.
pub(crate) fn proper_options_raw(g: &Graph, colors: &[usize], k: usize, x: usize) -> Vec<usize> {
    let own = colors[x];
    let mut taken = vec![false; k + 1];
    for &u in g.neighbors(x) {
        taken[colors[u]] = true;
    }
    (1..=k).filter(|&c| c != own && !taken[c]).collect()
}

/// The proper recolor options for `x` that create no new b-vertex of color
/// `j`. Checked by trial: only `x` and its `j`-colored neighbors can change
/// status.
pub(crate) fn safe_colors_raw(
    g: &Graph,
    colors: &mut [usize],
    k: usize,
    x: usize,
    j: usize,
) -> Vec<usize> {
    let own = colors[x];
    let options = proper_options_raw(g, colors, k, x);
    let j_neighbors: Vec<usize> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| colors[y] == j)
        .collect();
    let was_b: Vec<bool> = j_neighbors
        .iter()
        .map(|&y| is_b_vertex_raw(g, colors, k, y))
        .collect();
    let mut out = Vec::new();
    for cnew in options {
        colors[x] = cnew;
        let mut safe = true;
        if cnew == j && is_b_vertex_raw(g, colors, k, x) {
            safe = false;
        }
        if safe {
            for (idx, &y) in j_neighbors.iter().enumerate() {
                if !was_b[idx] && is_b_vertex_raw(g, colors, k, y) {
                    safe = false;
                    break;
                }
            }
        }
        colors[x] = own;
        if safe {
            out.push(cnew);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Per-class b-vertex sets of a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BVertexReport {
    per_color: Vec<Vec<usize>>,
}

impl BVertexReport {
    pub fn palette(&self) -> usize {
        self.per_color.len()
    }

    /// B_i, ascending vertex ids.
    pub fn of_color(&self, color: usize) -> &[usize] {
        &self.per_color[color - 1]
    }

    /// The union B(psi), ascending.
    pub fn all(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.per_color.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn classes_without_b_vertex(&self) -> Vec<usize> {
        (1..=self.per_color.len())
            .filter(|&c| self.per_color[c - 1].is_empty())
            .collect()
    }

    pub fn is_b_coloring(&self) -> bool {
        self.per_color.iter().all(|s| !s.is_empty())
    }
}

/// Computes the exact b-vertex sets of a total, proper, normalized coloring.
pub fn b_vertices(g: &Graph, c: &Coloring) -> Result<BVertexReport, BColoringError> {
    let (colors, k) = c.check_total_proper_normalized(g)?;
    Ok(BVertexReport {
        per_color: b_sets_raw(g, &colors, k),
    })
}

/// True iff every class of the coloring contains a b-vertex.
pub fn is_b_coloring(g: &Graph, c: &Coloring) -> Result<bool, BColoringError> {
    Ok(b_vertices(g, c)?.is_b_coloring())
}

/// The m(G) bound: m is the largest k with at least k vertices of degree at
/// least k-1; D(G) collects the vertices of degree at least m-1; the graph
/// is tight when |D(G)| = m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDegreeReport {
    pub m: usize,
    pub d: Vec<usize>,
    pub tight: bool,
}

pub fn m_degree(g: &Graph) -> Result<MDegreeReport, BColoringError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(BColoringError::EmptyGraph);
    }
    let degs = g.degree_sequence_desc();
    let m = (1..=n).rfind(|&k| degs[k - 1] >= k - 1).unwrap_or(1);
    let d: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 >= m).collect();
    let tight = d.len() == m;
    Ok(MDegreeReport { m, d, tight })
}

/// A vertex `center` with at least k-1 neighbors of degree at least k-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrisCertificate {
    pub k: usize,
    /// The iris vertex u.
    pub center: usize,
    /// k-1 neighbors of u, each of degree at least k-1, ascending ids.
    pub witness: Vec<usize>,
}

impl IrisCertificate {
    pub fn validate(&self, g: &Graph) -> Result<(), BColoringError> {
        let fail = |msg: String| Err(BColoringError::InsufficientNeighbors(msg));
        if self.center >= g.vertex_count() {
            return fail(format!("center {} out of range", self.center));
        }
        if self.witness.len() + 1 < self.k {
            return fail(format!(
                "witness has {} vertices, k={} needs at least {}",
                self.witness.len(),
                self.k,
                self.k - 1
            ));
        }
        let mut prev: Option<usize> = None;
        for &v in &self.witness {
            if Some(v) <= prev {
                return fail("witness ids must be strictly ascending".into());
            }
            prev = Some(v);
            if v >= g.vertex_count() || !g.has_edge(self.center, v) {
                return fail(format!("witness {v} is not a neighbor of the center"));
            }
            if g.degree(v) + 1 < self.k {
                return fail(format!(
                    "witness {v} has degree {} < {}",
                    g.degree(v),
                    self.k - 1
                ));
            }
        }
        Ok(())
    }
}

/// Finds a k-iris if one exists: centers are scanned in ascending id and
/// the witness takes the k-1 smallest qualifying neighbors, so the result
/// is the lexicographically least certificate.
pub fn find_iris(g: &Graph, k: usize) -> Option<IrisCertificate> {
    if k == 0 {
        return None;
    }
    for center in g.vertices() {
        let qualifying: Vec<usize> = g
            .neighbors(center)
            .iter()
            .copied()
            .filter(|&v| g.degree(v) + 1 >= k)
            .collect();
        if qualifying.len() + 1 >= k {
            return Some(IrisCertificate {
                k,
                center,
                witness: qualifying.into_iter().take(k - 1).collect(),
            });
        }
    }
    None
}

/// U(K): the colors dependent on a set K inside class `class_color` of a
/// b-coloring.
pub fn dependent_colors(
    g: &Graph,
    c: &Coloring,
    class_color: usize,
    set: &[usize],
) -> Result<Vec<usize>, BColoringError> {
    let (colors, k) = c.check_total_proper_normalized(g)?;
    if class_color == 0 || class_color > k {
        return Err(BColoringError::BadColor {
            color: class_color,
            palette: k,
        });
    }
    for &x in set {
        if x >= g.vertex_count() {
            return Err(BColoringError::VertexOutOfRange(x));
        }
        if colors[x] != class_color {
            return Err(BColoringError::MixedClass {
                vertex: x,
                expected: class_color,
                actual: colors[x],
            });
        }
    }
    let bsets = b_sets_raw(g, &colors, k);
    if let Some(cls) = (1..=k).find(|&i| bsets[i - 1].is_empty()) {
        return Err(BColoringError::NotBColoring(cls));
    }
    Ok(dependent_on_raw(g, &colors, k, class_color, set, &bsets))
}

/// Role of a non-b-vertex in the descent move system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    /// |U(x)| >= 2.
    Useful,
    /// |U(x)| <= 1.
    Useless,
}

/// Classifies a non-b-vertex as useful or useless by |U({x})|.
pub fn classify_vertex(g: &Graph, c: &Coloring, x: usize) -> Result<VertexClass, BColoringError> {
    let (colors, k) = c.check_total_proper_normalized(g)?;
    if x >= g.vertex_count() {
        return Err(BColoringError::VertexOutOfRange(x));
    }
    if is_b_vertex_raw(g, &colors, k, x) {
        return Err(BColoringError::IsBVertex(x));
    }
    let u = dependent_colors(g, c, colors[x], &[x])?;
    Ok(if u.len() >= 2 {
        VertexClass::Useful
    } else {
        VertexClass::Useless
    })
}

/// Colors that are safe for `(x, j)`: proper recolor options for `x` whose
/// application creates no new b-vertex of color `j`. An empty result means
/// `x` is j-imutable.
pub fn safe_colors(
    g: &Graph,
    c: &Coloring,
    x: usize,
    j: usize,
) -> Result<Vec<usize>, BColoringError> {
    let (mut colors, k) = c.check_total_proper_normalized(g)?;
    if x >= g.vertex_count() {
        return Err(BColoringError::VertexOutOfRange(x));
    }
    if j == 0 || j > k {
        return Err(BColoringError::BadColor {
            color: j,
            palette: k,
        });
    }
    Ok(safe_colors_raw(g, &mut colors, k, x, j))
}
