//! b-spectrum computation, the b-continuity verdict, and the descent
//! pipeline that walks the spectrum downward on girth >= 7 graphs.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::bcolor::{
    b_coloring_search, default_descent_target, descend_once, iris_b_coloring, m_degree,
    BColoringError, DescentOutcome,
};
use crate::coloring::{chromatic_number, Coloring};
use crate::graph::{girth, Girth, Graph};
use crate::{Budget, SearchResult, Ternary};

/// The set of palette sizes admitting a b-coloring, with witnesses.
///
/// `members` collects every k in `[chi, m]` for which a b-coloring was
/// found; `undecided` the k where the budget ran out. When `chi` is exact
/// and nothing is undecided the spectrum is exhaustive and the continuity
/// verdict is definite.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub chi: usize,
    pub chi_exact: bool,
    pub m: usize,
    pub girth: Girth,
    pub members: Vec<usize>,
    pub witnesses: BTreeMap<usize, Coloring>,
    pub undecided: Vec<usize>,
    pub continuous: Ternary,
}

impl SpectrumReport {
    pub fn exhaustive(&self) -> bool {
        self.chi_exact && self.undecided.is_empty()
    }

    /// b(G) = max S_b, available once the search was exhaustive.
    pub fn b_number(&self) -> Option<usize> {
        if self.exhaustive() {
            self.members.last().copied()
        } else {
            None
        }
    }

    /// Versioned JSON document; witnesses are embedded as solution-file
    /// payloads keyed by k.
    pub fn to_json(&self) -> Value {
        let girth_json = match self.girth {
            Girth::Finite(v) => json!(v),
            Girth::Acyclic => json!("acyclic"),
        };
        let witnesses: BTreeMap<String, Value> = self
            .witnesses
            .iter()
            .map(|(k, c)| {
                (
                    k.to_string(),
                    Value::String(c.to_solution_string().expect("witnesses are total")),
                )
            })
            .collect();
        json!({
            "version": 1,
            "chi": self.chi,
            "m": self.m,
            "girth": girth_json,
            "spectrum": self.members,
            "continuous": self.continuous.to_json(),
            "witnesses": witnesses,
        })
    }
}

/// Runs `b_coloring_search` for every k in `[chi, m]` and assembles the
/// spectrum. Each k receives a fresh budget of `budget_per_task` steps, as
/// does the chromatic number computation.
pub fn b_spectrum(g: &Graph, budget_per_task: u64) -> Result<SpectrumReport, BColoringError> {
    if g.vertex_count() == 0 {
        return Err(BColoringError::EmptyGraph);
    }
    let md = m_degree(g)?;
    let chi_res = chromatic_number(g, &mut Budget::new(budget_per_task));
    let mut members = Vec::new();
    let mut witnesses = BTreeMap::new();
    let mut undecided = Vec::new();
    for k in chi_res.chi..=md.m {
        let mut budget = Budget::new(budget_per_task);
        match b_coloring_search(g, k, &mut budget) {
            SearchResult::Found(c) => {
                members.push(k);
                witnesses.insert(k, c);
            }
            SearchResult::Absent => {}
            SearchResult::Unknown => undecided.push(k),
        }
    }
    let continuous = if chi_res.exact && undecided.is_empty() {
        match members.last() {
            Some(&b) => {
                let interval: Vec<usize> = (chi_res.chi..=b).collect();
                if members == interval {
                    Ternary::True
                } else {
                    Ternary::False
                }
            }
            None => Ternary::Unknown,
        }
    } else {
        Ternary::Unknown
    };
    Ok(SpectrumReport {
        chi: chi_res.chi,
        chi_exact: chi_res.exact,
        m: md.m,
        girth: girth(g),
        members,
        witnesses,
        undecided,
        continuous,
    })
}

/// Walks the spectrum downward from a verified b-coloring on a graph of
/// girth at least 7 (or a forest).
///
/// Each step tries `descend_once` with the default target. A `Reduced`
/// outcome continues directly; an `Iris` outcome is turned into a
/// (k-1)-coloring by the iris construction when k-1 >= 2*chi, and otherwise
/// by a budgeted direct search (whose definite absence or exhaustion stops
/// the walk, legitimately below 2*chi). A `Stuck` outcome on these graphs
/// contradicts the girth >= 7 guarantee and is surfaced loudly.
pub fn theorem2_constructor(
    g: &Graph,
    start: &Coloring,
    budget_per_task: u64,
) -> Result<Vec<Coloring>, BColoringError> {
    match girth(g) {
        Girth::Finite(v) if v < 7 => return Err(BColoringError::PreconditionGirth(v)),
        _ => {}
    }
    let report = crate::bcolor::b_vertices(g, start)?;
    if let Some(cls) = report.classes_without_b_vertex().first() {
        return Err(BColoringError::NotBColoring(*cls));
    }
    let chi_res = chromatic_number(g, &mut Budget::new(budget_per_task));
    let mut out = vec![start.clone()];
    let mut current = start.clone();
    while current.palette() > chi_res.chi.max(1) {
        let k = current.palette();
        let target = default_descent_target(g, &current)?;
        let next = match descend_once(g, &current, target)? {
            DescentOutcome::Reduced(c) => c,
            DescentOutcome::Iris(cert) => {
                if cert.k >= 2 * chi_res.chi {
                    iris_b_coloring(g, &cert, &chi_res)?
                } else {
                    let mut budget = Budget::new(budget_per_task);
                    match b_coloring_search(g, k - 1, &mut budget) {
                        SearchResult::Found(c) => c,
                        SearchResult::Absent | SearchResult::Unknown => break,
                    }
                }
            }
            DescentOutcome::Stuck { log, .. } => {
                return Err(BColoringError::InternalContradiction(format!(
                    "descent stuck at k={k} on a girth>=7 instance; last log: {:?}",
                    log.last()
                )));
            }
        };
        if !crate::bcolor::is_b_coloring(g, &next)? {
            return Err(BColoringError::InternalContradiction(format!(
                "descent produced a non-b-coloring at k={}",
                next.palette()
            )));
        }
        out.push(next.clone());
        current = next;
    }
    Ok(out)
}
