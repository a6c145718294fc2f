//! Toolkit for b-colorings and partial Grundy colorings of simple graphs.
//!
//! The crate provides:
//!
//! * [`graph`] — immutable undirected graphs, the generator families used by
//!   the test corpus, girth, and edge subdivision;
//! * [`dimacs`] — DIMACS `.col` reading and writing;
//! * [`coloring`] — proper colorings, greedy and exact chromatic number, and
//!   color cleaning;
//! * [`bcolor`] — b-vertex analysis, the m(G) degree bound, k-irises, the
//!   descent move system, exact b-coloring search, b-spectra and b-continuity;
//! * [`grundy`] — Grundy vertices, feasible sequences and the stair factor,
//!   and the optimal partial Grundy construction for graphs of girth at
//!   least 7.
//!
//! Every exact search is budgeted in deterministic step counts; exhausting a
//! budget is reported as [`SearchResult::Unknown`], never silently treated as
//! absence.

pub mod bcolor;
pub mod coloring;
mod cover;
pub mod dimacs;
pub mod graph;
pub mod grundy;

pub use bcolor::{
    b_coloring_search, b_spectrum, b_vertices, default_descent_target, dependent_colors,
    descend_once, find_iris, iris_b_coloring, is_b_coloring, m_degree, safe_colors,
    theorem2_constructor, BColoringError, BVertexReport, DescentOutcome, IrisCertificate,
    MDegreeReport, SpectrumReport, VertexClass,
};
pub use coloring::{
    chromatic_number, clean_color, clean_to_b_coloring, greedy_coloring, is_proper, normalize,
    ChromaticResult, Coloring, ColoringError, SolutionError,
};
pub use dimacs::{load_dimacs, write_dimacs, DimacsError, DimacsLoad};
pub use graph::{generate, girth, subdivide, FamilySpec, Girth, Graph, GraphError};
pub use grundy::{
    construct_partial_grundy, construct_partial_grundy_report, grundy_vertices,
    partial_grundy_oracle, partial_grundy_with_k, stair_sequence, ConstructReport,
    FeasibleSequence, GrundyError, GrundyReport, StairMode,
};

/// Deterministic step budget for exact searches.
///
/// A step is one unit of search work (a branch node, a candidate set, one
/// level of a stair search). Budgets make every exact result reproducible:
/// the same graph and the same limit always exhaust at the same point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    /// Default step allowance for one exact task.
    pub const DEFAULT_STEPS: u64 = 10_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn default_exact() -> Self {
        Budget::new(Self::DEFAULT_STEPS)
    }

    /// Consumes one step. Returns `false` once the limit is reached.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.used < self.limit {
            self.used += 1;
            true
        } else {
            false
        }
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

/// Outcome of a budgeted exact search.
///
/// `Absent` is a definite proof of non-existence; `Unknown` means the budget
/// ran out first. The two are never conflated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult<T> {
    Found(T),
    Absent,
    Unknown,
}

impl<T> SearchResult<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchResult::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchResult::Absent)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, SearchResult::Unknown)
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchResult::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchResult<U> {
        match self {
            SearchResult::Found(t) => SearchResult::Found(f(t)),
            SearchResult::Absent => SearchResult::Absent,
            SearchResult::Unknown => SearchResult::Unknown,
        }
    }
}

/// Three-valued verdict for properties that may be undecided under a budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ternary {
    True,
    False,
    Unknown,
}

impl Ternary {
    pub fn to_json(self) -> serde_json::Value {
        match self {
            Ternary::True => serde_json::Value::Bool(true),
            Ternary::False => serde_json::Value::Bool(false),
            Ternary::Unknown => serde_json::Value::String("unknown".to_owned()),
        }
    }
}
