//! Proper colorings: representation, verification, greedy and exact
//! chromatic number, normalization, and color cleaning.

use thiserror::Error;

use crate::bcolor;
use crate::graph::Graph;
use crate::Budget;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring leaves vertex {0} unassigned")]
    NotTotal(usize),
    #[error("vertex {vertex} has color {color} outside 1..={palette}")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        palette: usize,
    },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("edge ({u}, {v}) is monochromatic in color {color}")]
    Monochromatic { u: usize, v: usize, color: usize },
    #[error("coloring is not normalized: color {0} is unused")]
    NotNormalized(usize),
    #[error("order is not a permutation of the vertices")]
    BadPermutation,
    #[error("color {color} outside palette 1..={palette}")]
    BadColor { color: usize, palette: usize },
    #[error("class {color} contains b-vertex {vertex}, cleaning is undefined")]
    HasBVertex { color: usize, vertex: usize },
    #[error("vertex {vertex} sees every other color, no free color to clean into")]
    NoFreeColor { vertex: usize },
}

/// A total or partial assignment of vertices to colors `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
    palette: usize,
}

impl Coloring {
    /// A total coloring. Every color must lie in `1..=palette`.
    pub fn new_total(colors: Vec<usize>, palette: usize) -> Result<Self, ColoringError> {
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > palette {
                return Err(ColoringError::ColorOutOfRange {
                    vertex: v,
                    color: c,
                    palette,
                });
            }
        }
        Ok(Coloring {
            colors: colors.into_iter().map(Some).collect(),
            palette,
        })
    }

    /// A partial coloring; `None` marks unassigned vertices.
    pub fn new_partial(colors: Vec<Option<usize>>, palette: usize) -> Result<Self, ColoringError> {
        for (v, c) in colors.iter().enumerate() {
            if let Some(c) = c {
                if *c == 0 || *c > palette {
                    return Err(ColoringError::ColorOutOfRange {
                        vertex: v,
                        color: *c,
                        palette,
                    });
                }
            }
        }
        Ok(Coloring { colors, palette })
    }

    /// Internal constructor for already-validated total colorings.
    pub(crate) fn from_raw(colors: Vec<usize>, palette: usize) -> Self {
        debug_assert!(colors.iter().all(|&c| c >= 1 && c <= palette));
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
            palette,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|c| c.is_some())
    }

    /// The raw color vector of a total coloring.
    pub fn total_colors(&self) -> Result<Vec<usize>, ColoringError> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(ColoringError::NotTotal(v)))
            .collect()
    }

    /// Distinct colors in use, ascending.
    pub fn used_colors(&self) -> Vec<usize> {
        let mut used = vec![false; self.palette + 1];
        for c in self.colors.iter().flatten() {
            used[*c] = true;
        }
        (1..=self.palette).filter(|&c| used[c]).collect()
    }

    pub fn class_members(&self, color: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == Some(color))
            .collect()
    }

    /// Total and using every color in `1..=palette` at least once.
    pub fn is_normalized(&self) -> bool {
        self.is_total() && self.used_colors().len() == self.palette
    }

    /// Validates that the coloring is total, proper on `g`, and normalized;
    /// returns the raw colors and the palette size.
    pub fn check_total_proper_normalized(
        &self,
        g: &Graph,
    ) -> Result<(Vec<usize>, usize), ColoringError> {
        if self.colors.len() != g.vertex_count() {
            return Err(ColoringError::LengthMismatch {
                got: self.colors.len(),
                expected: g.vertex_count(),
            });
        }
        let colors = self.total_colors()?;
        for (u, v) in g.edges() {
            if colors[u] == colors[v] {
                return Err(ColoringError::Monochromatic {
                    u,
                    v,
                    color: colors[u],
                });
            }
        }
        let mut used = vec![false; self.palette + 1];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = (1..=self.palette).find(|&c| !used[c]) {
            return Err(ColoringError::NotNormalized(missing));
        }
        Ok((colors, self.palette))
    }

    /// Solution file text: `s <k>` then `v <id> <color>` per vertex,
    /// 0-based ids ascending. Bit-exact for golden tests.
    pub fn to_solution_string(&self) -> Result<String, ColoringError> {
        let colors = self.total_colors()?;
        let mut out = format!("s {}\n", self.palette);
        for (v, c) in colors.iter().enumerate() {
            out.push_str(&format!("v {v} {c}\n"));
        }
        Ok(out)
    }

    /// Parses the solution file format produced by [`to_solution_string`].
    ///
    /// [`to_solution_string`]: Coloring::to_solution_string
    pub fn parse_solution(text: &str) -> Result<Coloring, SolutionError> {
        let mut palette: Option<usize> = None;
        let mut colors: Vec<usize> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('c') {
                continue;
            }
            let mut tokens = s.split_whitespace();
            match tokens.next() {
                Some("s") => {
                    if palette.is_some() {
                        return Err(SolutionError::DuplicateHeader { line });
                    }
                    match (tokens.next().and_then(|t| t.parse().ok()), tokens.next()) {
                        (Some(k), None) => palette = Some(k),
                        _ => return Err(SolutionError::Malformed { line }),
                    }
                }
                Some("v") => {
                    let k = palette.ok_or(SolutionError::MissingHeader)?;
                    let id = tokens.next().and_then(|t| t.parse::<usize>().ok());
                    let color = tokens.next().and_then(|t| t.parse::<usize>().ok());
                    let (id, color) = match (id, color, tokens.next()) {
                        (Some(i), Some(c), None) => (i, c),
                        _ => return Err(SolutionError::Malformed { line }),
                    };
                    if id != colors.len() {
                        return Err(SolutionError::BadVertexOrder { line, vertex: id });
                    }
                    if color == 0 || color > k {
                        return Err(SolutionError::ColorOutOfRange { line, color, k });
                    }
                    colors.push(color);
                }
                _ => return Err(SolutionError::Malformed { line }),
            }
        }
        let palette = palette.ok_or(SolutionError::MissingHeader)?;
        Ok(Coloring::from_raw(colors, palette))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolutionError {
    #[error("missing 's' header line")]
    MissingHeader,
    #[error("line {line}: duplicate 's' header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed")]
    Malformed { line: usize },
    #[error("line {line}: vertex {vertex} out of order (ids must ascend from 0)")]
    BadVertexOrder { line: usize, vertex: usize },
    #[error("line {line}: color {color} outside 1..={k}")]
    ColorOutOfRange { line: usize, color: usize, k: usize },
}

/// True iff no edge of `g` is monochromatic. The coloring must be total.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.vertex_count() != g.vertex_count() {
        return Err(ColoringError::LengthMismatch {
            got: c.vertex_count(),
            expected: g.vertex_count(),
        });
    }
    let colors = c.total_colors()?;
    Ok(g.edges().into_iter().all(|(u, v)| colors[u] != colors[v]))
}

/// First-fit coloring along `order`: each vertex takes the least color
/// absent from its already-colored neighbors. Uses at most Δ+1 colors.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring, ColoringError> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(ColoringError::BadPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(ColoringError::BadPermutation);
        }
        seen[v] = true;
    }
    let mut colors = vec![0usize; n];
    let mut max_used = 0usize;
    for &v in order {
        let c = least_free_color(g, &colors, v, 0);
        colors[v] = c;
        max_used = max_used.max(c);
    }
    if n == 0 {
        return Ok(Coloring {
            colors: Vec::new(),
            palette: 0,
        });
    }
    Ok(Coloring::from_raw(colors, max_used))
}

/// Least color >= 1 not used by any colored neighbor of `v` and different
/// from `exclude` (pass 0 for no exclusion).
pub(crate) fn least_free_color(g: &Graph, colors: &[usize], v: usize, exclude: usize) -> usize {
    let mut taken: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&u| colors[u])
        .filter(|&c| c != 0)
        .collect();
    taken.sort_unstable();
    taken.dedup();
    let mut c = 1;
    for t in taken {
        if c == exclude {
            c += 1;
        }
        if t == c {
            c += 1;
        } else if t > c {
            break;
        }
    }
    if c == exclude {
        c += 1;
    }
    c
}

/// Relabels the used colors to `1..=k` preserving the class partition.
/// Colors are renumbered in increasing order of their smallest member
/// vertex id, which makes the form canonical for golden-file tests.
pub fn normalize(c: &Coloring) -> Result<Coloring, ColoringError> {
    let colors = c.total_colors()?;
    let (out, k) = normalize_raw(&colors);
    Ok(Coloring::from_raw(out, k))
}

pub(crate) fn normalize_raw(colors: &[usize]) -> (Vec<usize>, usize) {
    let max = colors.iter().copied().max().unwrap_or(0);
    let mut first_member = vec![usize::MAX; max + 1];
    for (v, &c) in colors.iter().enumerate() {
        if first_member[c] == usize::MAX {
            first_member[c] = v;
        }
    }
    let mut used: Vec<usize> = (1..=max)
        .filter(|&c| first_member[c] != usize::MAX)
        .collect();
    used.sort_by_key(|&c| first_member[c]);
    let mut map = vec![0usize; max + 1];
    for (new, &old) in used.iter().enumerate() {
        map[old] = new + 1;
    }
    let out: Vec<usize> = colors.iter().map(|&c| map[c]).collect();
    (out, used.len())
}

/// Result of an exact (or budget-bounded) chromatic number computation.
///
/// When `exact` is false the search ran out of budget: `chi` is a verified
/// upper bound (the witness uses that many colors) and `lower_bound` is the
/// best lower bound established.
#[derive(Debug, Clone)]
pub struct ChromaticResult {
    pub chi: usize,
    pub lower_bound: usize,
    pub exact: bool,
    pub witness: Coloring,
}

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// saturation-ordered (DSATUR) branching, canonical color limits.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> ChromaticResult {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticResult {
            chi: 0,
            lower_bound: 0,
            exact: true,
            witness: Coloring {
                colors: Vec::new(),
                palette: 0,
            },
        };
    }
    if g.edge_count() == 0 {
        return ChromaticResult {
            chi: 1,
            lower_bound: 1,
            exact: true,
            witness: Coloring::from_raw(vec![1; n], 1),
        };
    }
    let clique = greedy_clique(g);
    let lower = clique.len().max(2);
    let (ub, greedy) = dsatur_greedy(g);
    if ub == lower {
        return ChromaticResult {
            chi: ub,
            lower_bound: ub,
            exact: true,
            witness: Coloring::from_raw(greedy, ub),
        };
    }

    let mut search = ChiSearch {
        g,
        colors: vec![0; n],
        best: greedy,
        best_k: ub,
        lower,
        exhausted: false,
    };
    search.recurse(0, 0, budget);
    let exact = !search.exhausted;
    ChromaticResult {
        chi: search.best_k,
        lower_bound: if exact { search.best_k } else { lower },
        exact,
        witness: Coloring::from_raw(search.best, search.best_k),
    }
}

struct ChiSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
    exhausted: bool,
}

impl ChiSearch<'_> {
    fn recurse(&mut self, colored: usize, max_used: usize, budget: &mut Budget) {
        if self.exhausted || self.best_k == self.lower {
            return;
        }
        if !budget.tick() {
            self.exhausted = true;
            return;
        }
        let n = self.g.vertex_count();
        if colored == n {
            // max_used < best_k is guaranteed by the color limit below
            self.best_k = max_used;
            self.best = self.colors.clone();
            return;
        }
        let v = self.pick_vertex();
        let limit = (max_used + 1).min(self.best_k - 1);
        for c in 1..=limit {
            if self.g.neighbors(v).iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.recurse(colored + 1, max_used.max(c), budget);
            self.colors[v] = 0;
            if self.exhausted {
                return;
            }
        }
    }

    /// DSATUR rule: max saturation, then max degree, then least id.
    fn pick_vertex(&self) -> usize {
        let mut best_v = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for v in 0..self.g.vertex_count() {
            if self.colors[v] != 0 {
                continue;
            }
            let mut nbr_colors: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .map(|&u| self.colors[u])
                .filter(|&c| c != 0)
                .collect();
            nbr_colors.sort_unstable();
            nbr_colors.dedup();
            let key = (nbr_colors.len(), self.g.degree(v));
            if best_v == usize::MAX || key > best_key {
                best_v = v;
                best_key = key;
            }
        }
        best_v
    }
}

fn dsatur_greedy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let mut max_used = 0usize;
    for _ in 0..n {
        let mut best_v = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for v in 0..n {
            if colors[v] != 0 {
                continue;
            }
            let mut nbr: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&u| colors[u])
                .filter(|&c| c != 0)
                .collect();
            nbr.sort_unstable();
            nbr.dedup();
            let key = (nbr.len(), g.degree(v));
            if best_v == usize::MAX || key > best_key {
                best_v = v;
                best_key = key;
            }
        }
        let c = least_free_color(g, &colors, best_v, 0);
        colors[best_v] = c;
        max_used = max_used.max(c);
    }
    (max_used, colors)
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// Removes color `drop` from a coloring whose class `drop` has no b-vertex.
///
/// Every vertex of the dropped class moves, in ascending id, to the
/// smallest other color absent from its neighborhood; the result is then
/// renormalized to `1..=k-1`. B-vertices outside the dropped class keep
/// their status with respect to the remaining palette.
pub fn clean_color(g: &Graph, c: &Coloring, drop: usize) -> Result<Coloring, ColoringError> {
    let (mut colors, k) = c.check_total_proper_normalized(g)?;
    if drop == 0 || drop > k {
        return Err(ColoringError::BadColor {
            color: drop,
            palette: k,
        });
    }
    let bset = bcolor::b_set_of_color_raw(g, &colors, k, drop);
    if let Some(&v) = bset.first() {
        return Err(ColoringError::HasBVertex {
            color: drop,
            vertex: v,
        });
    }
    for v in 0..g.vertex_count() {
        if colors[v] != drop {
            continue;
        }
        let mut taken = vec![false; k + 1];
        for &u in g.neighbors(v) {
            taken[colors[u]] = true;
        }
        let free = (1..=k).find(|&cc| cc != drop && !taken[cc]);
        match free {
            Some(cc) => colors[v] = cc,
            None => return Err(ColoringError::NoFreeColor { vertex: v }),
        }
    }
    let (out, new_k) = normalize_raw(&colors);
    debug_assert_eq!(new_k, k - 1);
    Ok(Coloring::from_raw(out, new_k))
}

/// Repeatedly cleans the lowest-indexed b-vertex-free class until every
/// class has a b-vertex. Any proper coloring reaches a b-coloring in at
/// most k-1 cleanings.
pub fn clean_to_b_coloring(g: &Graph, c: &Coloring) -> Result<Coloring, ColoringError> {
    let mut current = normalize(c)?;
    current.check_total_proper_normalized(g)?;
    loop {
        let (colors, k) = current.check_total_proper_normalized(g)?;
        let free_class = (1..=k).find(|&i| bcolor::b_set_of_color_raw(g, &colors, k, i).is_empty());
        match free_class {
            Some(i) => current = clean_color(g, &current, i)?,
            None => return Ok(current),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn is_proper_examples() {
        let c3 = generate(FamilySpec::Cycle(3)).unwrap();
        let ok = Coloring::new_total(vec![1, 2, 3], 3).unwrap();
        assert!(is_proper(&c3, &ok).unwrap());

        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let bad = Coloring::new_total(vec![1, 1], 1).unwrap();
        assert!(!is_proper(&edge, &bad).unwrap());

        let crown = generate(FamilySpec::Crown(4)).unwrap();
        let sides = Coloring::new_total(vec![1, 1, 1, 1, 2, 2, 2, 2], 2).unwrap();
        assert!(is_proper(&crown, &sides).unwrap());

        let partial = Coloring::new_partial(vec![Some(1), None], 2).unwrap();
        assert!(matches!(
            is_proper(&edge, &partial),
            Err(ColoringError::NotTotal(1))
        ));
    }

    #[test]
    fn greedy_examples() {
        let p3 = path(3);
        let c = greedy_coloring(&p3, &[0, 1, 2]).unwrap();
        assert_eq!(c.total_colors().unwrap(), vec![1, 2, 1]);

        let c4 = generate(FamilySpec::Cycle(4)).unwrap();
        let c = greedy_coloring(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(c.palette(), 2);

        let crown6 = generate(FamilySpec::Crown(6)).unwrap();
        let order: Vec<usize> = (0..12).rev().collect();
        let c = greedy_coloring(&crown6, &order).unwrap();
        assert!(c.palette() <= 6);
        assert!(is_proper(&crown6, &c).unwrap());

        assert!(matches!(
            greedy_coloring(&p3, &[0, 0, 1]),
            Err(ColoringError::BadPermutation)
        ));
    }

    #[test]
    fn normalize_examples() {
        let c = Coloring::new_total(vec![5, 9, 5], 9).unwrap();
        let n = normalize(&c).unwrap();
        assert_eq!(n.total_colors().unwrap(), vec![1, 2, 1]);
        assert_eq!(n.palette(), 2);
        assert_eq!(normalize(&n).unwrap(), n);

        let c = Coloring::new_total(vec![2, 1], 2).unwrap();
        assert_eq!(normalize(&c).unwrap().total_colors().unwrap(), vec![1, 2]);
    }

    #[test]
    fn chromatic_examples() {
        let mut b = Budget::default_exact();
        let c7 = generate(FamilySpec::Cycle(7)).unwrap();
        let r = chromatic_number(&c7, &mut b);
        assert!(r.exact);
        assert_eq!(r.chi, 3);
        assert!(is_proper(&c7, &r.witness).unwrap());

        let crown = generate(FamilySpec::Crown(4)).unwrap();
        let r = chromatic_number(&crown, &mut Budget::default_exact());
        assert_eq!((r.chi, r.exact), (2, true));

        let pet = generate(FamilySpec::Petersen).unwrap();
        let r = chromatic_number(&pet, &mut Budget::default_exact());
        assert_eq!((r.chi, r.exact), (3, true));
        assert_eq!(r.witness.palette(), 3);
    }

    #[test]
    fn chromatic_witness_is_b_coloring() {
        // optimal colorings cannot be cleaned
        for spec in [
            FamilySpec::Cycle(7),
            FamilySpec::Petersen,
            FamilySpec::Crown(5),
            FamilySpec::Hypercube(3),
        ] {
            let g = generate(spec).unwrap();
            let r = chromatic_number(&g, &mut Budget::default_exact());
            assert!(r.exact);
            assert!(crate::bcolor::is_b_coloring(&g, &r.witness).unwrap());
        }
    }

    #[test]
    fn clean_color_p3() {
        let p3 = path(3);
        let c = Coloring::new_total(vec![1, 2, 3], 3).unwrap();
        let cleaned = clean_color(&p3, &c, 3).unwrap();
        assert_eq!(cleaned.total_colors().unwrap(), vec![1, 2, 1]);
        assert_eq!(cleaned.palette(), 2);
    }

    #[test]
    fn clean_color_rejects_b_vertex_class() {
        let p3 = path(3);
        let c = Coloring::new_total(vec![1, 2, 3], 3).unwrap();
        // class 2 = {v1}, and v1 sees colors 1 and 3, so it is a b-vertex
        assert!(matches!(
            clean_color(&p3, &c, 2),
            Err(ColoringError::HasBVertex {
                color: 2,
                vertex: 1
            })
        ));
    }

    #[test]
    fn optimal_c7_coloring_cannot_be_cleaned() {
        let c7 = generate(FamilySpec::Cycle(7)).unwrap();
        let r = chromatic_number(&c7, &mut Budget::default_exact());
        for drop in 1..=r.chi {
            assert!(matches!(
                clean_color(&c7, &r.witness, drop),
                Err(ColoringError::HasBVertex { .. })
            ));
        }
    }

    #[test]
    fn clean_to_b_coloring_examples() {
        let star = generate(FamilySpec::Star(5)).unwrap();
        let greedy = greedy_coloring(&star, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(greedy.palette(), 2);
        let b = clean_to_b_coloring(&star, &greedy).unwrap();
        assert_eq!(b, greedy); // already a b-coloring, fixpoint

        let p3 = path(3);
        let c = Coloring::new_total(vec![1, 2, 3], 3).unwrap();
        let b = clean_to_b_coloring(&p3, &c).unwrap();
        assert_eq!(b.palette(), 2);
        assert!(crate::bcolor::is_b_coloring(&p3, &b).unwrap());
    }

    #[test]
    fn solution_round_trip() {
        let c = Coloring::new_total(vec![1, 2, 1, 3], 3).unwrap();
        let text = c.to_solution_string().unwrap();
        assert_eq!(text, "s 3\nv 0 1\nv 1 2\nv 2 1\nv 3 3\n");
        let back = Coloring::parse_solution(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn solution_parse_errors() {
        assert!(matches!(
            Coloring::parse_solution("v 0 1\n"),
            Err(SolutionError::MissingHeader)
        ));
        assert!(matches!(
            Coloring::parse_solution("s 2\nv 1 1\n"),
            Err(SolutionError::BadVertexOrder { vertex: 1, .. })
        ));
        assert!(matches!(
            Coloring::parse_solution("s 2\nv 0 3\n"),
            Err(SolutionError::ColorOutOfRange { color: 3, .. })
        ));
    }
}
