//! Partial Grundy colorings: Grundy-vertex analysis, feasible sequences and
//! the stair factor, the girth-conditioned optimal construction, and an
//! exact oracle.

mod construct;
mod oracle;
mod stair;

pub use construct::{construct_partial_grundy, construct_partial_grundy_report, ConstructReport};
pub use oracle::{partial_grundy_oracle, partial_grundy_with_k};
pub use stair::{stair_sequence, StairMode};

use serde_json::{json, Value};
use thiserror::Error;

use crate::coloring::{Coloring, ColoringError};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrundyError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("invalid feasible sequence: {0}")]
    InvalidSequence(String),
    #[error("exact stair search exhausted its budget")]
    BudgetExhausted,
    #[error("no color below m(v{vertex}) avoids the forbidden set")]
    NoFreeColor { vertex: usize },
    #[error("greedy extension needed more than s colors at vertex {vertex}")]
    PaletteOverflow { vertex: usize },
}

/// Per-class Grundy vertex sets of a coloring.
///
/// A vertex is a Grundy vertex when its neighborhood meets every class
/// smaller than its own color; color-1 vertices qualify vacuously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyReport {
    per_color: Vec<Vec<usize>>,
}

impl GrundyReport {
    pub fn palette(&self) -> usize {
        self.per_color.len()
    }

    pub fn of_color(&self, color: usize) -> &[usize] {
        &self.per_color[color - 1]
    }

    pub fn classes_without_grundy_vertex(&self) -> Vec<usize> {
        (1..=self.per_color.len())
            .filter(|&c| self.per_color[c - 1].is_empty())
            .collect()
    }

    /// True iff every class has a Grundy vertex.
    pub fn is_partial_grundy(&self) -> bool {
        self.per_color.iter().all(|s| !s.is_empty())
    }
}

pub(crate) fn is_grundy_vertex_raw(g: &Graph, colors: &[usize], v: usize) -> bool {
    let own = colors[v];
    let mut seen = vec![false; own];
    let mut count = 0usize;
    for &u in g.neighbors(v) {
        let c = colors[u];
        if c < own && !seen[c] {
            seen[c] = true;
            count += 1;
        }
    }
    count == own - 1
}

/// Computes the exact Grundy-vertex sets of a total, proper, normalized
/// coloring.
pub fn grundy_vertices(g: &Graph, c: &Coloring) -> Result<GrundyReport, GrundyError> {
    let (colors, k) = c.check_total_proper_normalized(g)?;
    let mut per_color = vec![Vec::new(); k];
    for v in 0..g.vertex_count() {
        if is_grundy_vertex_raw(g, &colors, v) {
            per_color[colors[v] - 1].push(v);
        }
    }
    Ok(GrundyReport { per_color })
}

/// An ordering (w_1..w_s) with witnesses: in G_i, the graph with the later
/// sequence vertices removed, w_i keeps at least i-1 neighbors, and N_i
/// records i-1 of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleSequence {
    /// w_1..w_s.
    pub order: Vec<usize>,
    /// witnesses[idx] is N_{idx+2}, for positions 2..=s; sorted ascending.
    pub witnesses: Vec<Vec<usize>>,
}

impl FeasibleSequence {
    pub fn s(&self) -> usize {
        self.order.len()
    }

    /// N_i for a 1-based position i in 2..=s.
    pub fn witness_for(&self, i: usize) -> &[usize] {
        &self.witnesses[i - 2]
    }

    /// Checks the defining conditions against a graph.
    pub fn validate(&self, g: &Graph) -> Result<(), GrundyError> {
        let fail = |msg: String| Err(GrundyError::InvalidSequence(msg));
        let s = self.s();
        if s == 0 {
            return fail("sequence is empty".into());
        }
        if self.witnesses.len() + 1 != s {
            return fail(format!(
                "expected {} witness sets, found {}",
                s - 1,
                self.witnesses.len()
            ));
        }
        let n = g.vertex_count();
        let mut pos = vec![0usize; n];
        for (idx, &w) in self.order.iter().enumerate() {
            if w >= n {
                return fail(format!("vertex {w} out of range"));
            }
            if pos[w] != 0 {
                return fail(format!("vertex {w} repeats"));
            }
            pos[w] = idx + 1;
        }
        for i in 2..=s {
            let w = self.order[i - 1];
            // neighbors surviving in G_i: position 0 (not in sequence) or <= i
            let alive: Vec<usize> = g
                .neighbors(w)
                .iter()
                .copied()
                .filter(|&z| pos[z] == 0 || pos[z] <= i)
                .collect();
            if alive.len() < i - 1 {
                return fail(format!(
                    "w_{i} = v{w} has only {} neighbors in G_{i}, needs {}",
                    alive.len(),
                    i - 1
                ));
            }
            let wit = self.witness_for(i);
            if wit.len() != i - 1 {
                return fail(format!("N_{i} has {} vertices, needs {}", wit.len(), i - 1));
            }
            let mut prev: Option<usize> = None;
            for &x in wit {
                if Some(x) <= prev {
                    return fail(format!("N_{i} is not strictly ascending"));
                }
                prev = Some(x);
                if !alive.contains(&x) {
                    return fail(format!(
                        "N_{i} member v{x} is not a neighbor of w_{i} in G_{i}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// JSON document: `{"s":…, "order":[w_1..w_s], "witnesses":{"2":[…],…}}`.
    pub fn to_json(&self) -> Value {
        let mut witnesses = serde_json::Map::new();
        for i in 2..=self.s() {
            witnesses.insert(i.to_string(), json!(self.witness_for(i)));
        }
        json!({
            "s": self.s(),
            "order": self.order,
            "witnesses": witnesses,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn grundy_vertices_on_p3() {
        let g = generate(FamilySpec::Path(3)).unwrap();
        let c = Coloring::new_total(vec![1, 2, 1], 2).unwrap();
        let r = grundy_vertices(&g, &c).unwrap();
        // color-1 vertices are vacuous Grundy vertices, v1 sees color 1
        assert_eq!(r.of_color(1), &[0, 2]);
        assert_eq!(r.of_color(2), &[1]);
        assert!(r.is_partial_grundy());
    }

    #[test]
    fn complete_bipartite_sides_are_partial_grundy() {
        let g = generate(FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let c = Coloring::new_total(vec![1, 1, 1, 2, 2, 2], 2).unwrap();
        let r = grundy_vertices(&g, &c).unwrap();
        assert!(r.is_partial_grundy());
    }

    #[test]
    fn sequence_validation() {
        let c7 = generate(FamilySpec::Cycle(7)).unwrap();
        let fs = FeasibleSequence {
            order: vec![5, 3, 0],
            witnesses: vec![vec![2], vec![1, 6]],
        };
        fs.validate(&c7).unwrap();
        assert_eq!(fs.s(), 3);
        assert_eq!(fs.witness_for(3), &[1, 6]);

        let bad = FeasibleSequence {
            order: vec![5, 3, 0],
            witnesses: vec![vec![2], vec![1]],
        };
        assert!(bad.validate(&c7).is_err());

        let repeated = FeasibleSequence {
            order: vec![0, 3, 0],
            witnesses: vec![vec![2], vec![1, 6]],
        };
        assert!(repeated.validate(&c7).is_err());
    }

    #[test]
    fn sequence_json_shape() {
        let fs = FeasibleSequence {
            order: vec![5, 3, 0],
            witnesses: vec![vec![2], vec![1, 6]],
        };
        let v = fs.to_json();
        assert_eq!(v["s"], 3);
        assert_eq!(v["order"], json!([5, 3, 0]));
        assert_eq!(v["witnesses"]["3"], json!([1, 6]));
    }
}
