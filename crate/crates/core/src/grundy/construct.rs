//! Building a partial Grundy coloring with s colors from a feasible
//! sequence of size s.
//!
//! The primary pass colors each w_i with i and then walks the witness union
//! N in non-decreasing order of m(x) = min{i : w_i adjacent to x}, giving x
//! the least color below m(x) that avoids the forbidden set
//! F = N(x) ∪ N(N_W(x)). On girth >= 7 inputs this greedy pass can still
//! collide when several witnesses tie on m(x) around the same w_i (the tie
//! group blocks itself through N(w_i)); a bounded repair search over color
//! choices and alternative witness sets then completes the construction.
//! Below girth 7 the greedy outcome is reported as-is.

use crate::coloring::Coloring;
use crate::graph::{girth, Graph};
use crate::grundy::{FeasibleSequence, GrundyError};

/// How the construction ran, for diagnostics and tests.
#[derive(Debug, Clone)]
pub struct ConstructReport {
    /// False when the paper-order greedy pass succeeded unassisted.
    pub repaired: bool,
    /// The witness sets actually used (the input's, unless repaired).
    pub witnesses_used: Vec<Vec<usize>>,
    /// Loop assignments `(vertex, color, m(vertex))`, in coloring order.
    pub assignments: Vec<(usize, usize, usize)>,
}

pub fn construct_partial_grundy(g: &Graph, fs: &FeasibleSequence) -> Result<Coloring, GrundyError> {
    construct_partial_grundy_report(g, fs).map(|(c, _)| c)
}

pub fn construct_partial_grundy_report(
    g: &Graph,
    fs: &FeasibleSequence,
) -> Result<(Coloring, ConstructReport), GrundyError> {
    fs.validate(g)?;
    let s = fs.s();
    if s < 2 {
        return Err(GrundyError::InvalidSequence(
            "construction needs a sequence of size at least 2".into(),
        ));
    }

    match greedy_pass(g, &fs.order, &fs.witnesses) {
        Ok((colors, assignments)) => {
            let report = ConstructReport {
                repaired: false,
                witnesses_used: fs.witnesses.clone(),
                assignments,
            };
            finish(g, s, colors, report)
        }
        Err(failed_at) => {
            if girth(g).at_least(7) {
                if let Some((colors, witnesses, assignments)) = repair_search(g, fs) {
                    let report = ConstructReport {
                        repaired: true,
                        witnesses_used: witnesses,
                        assignments,
                    };
                    return finish(g, s, colors, report);
                }
            }
            Err(GrundyError::NoFreeColor { vertex: failed_at })
        }
    }
}

/// min{i in 2..=s : w_i adjacent to x}, given the position table.
fn m_value(g: &Graph, pos: &[usize], x: usize) -> Option<usize> {
    g.neighbors(x)
        .iter()
        .filter(|&&z| pos[z] >= 2)
        .map(|&z| pos[z])
        .min()
}

struct Layout {
    pos: Vec<usize>,           // vertex -> sequence position (1-based, 0 = absent)
    loop_vertices: Vec<usize>, // members of N \ W, in (m, id) coloring order
    m_of: Vec<usize>,          // vertex -> m(x) for loop vertices
}

fn layout(g: &Graph, order: &[usize], witnesses: &[Vec<usize>]) -> Layout {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (idx, &w) in order.iter().enumerate() {
        pos[w] = idx + 1;
    }
    let mut in_n = vec![false; n];
    for wit in witnesses {
        for &x in wit {
            in_n[x] = true;
        }
    }
    let mut m_of = vec![0usize; n];
    let mut loop_vertices: Vec<usize> = Vec::new();
    for x in 0..n {
        if !in_n[x] || pos[x] >= 2 {
            continue; // pre-colored sequence members are skipped by the loop
        }
        let m = m_value(g, &pos, x).expect("witness members neighbor some w_i");
        m_of[x] = m;
        loop_vertices.push(x);
    }
    loop_vertices.sort_by_key(|&x| (m_of[x], x));
    Layout {
        pos,
        loop_vertices,
        m_of,
    }
}

/// The paper-order greedy pass. Returns the partial colors (0 = unset) and
/// the assignment trace, or the vertex where no color below m(x) was free.
#[allow(clippy::type_complexity)]
fn greedy_pass(
    g: &Graph,
    order: &[usize],
    witnesses: &[Vec<usize>],
) -> Result<(Vec<usize>, Vec<(usize, usize, usize)>), usize> {
    let n = g.vertex_count();
    let lay = layout(g, order, witnesses);
    let mut colors = vec![0usize; n];
    for (idx, &w) in order.iter().enumerate() {
        if idx + 1 >= 2 {
            colors[w] = idx + 1;
        }
    }
    let mut assignments = Vec::new();
    for &x in &lay.loop_vertices {
        let ell = lay.m_of[x];
        // forbidden: colors on N(x) and on N(w) for sequence neighbors w
        let mut forbidden = vec![false; order.len() + 2];
        for &y in g.neighbors(x) {
            if colors[y] != 0 {
                forbidden[colors[y]] = true;
            }
            if lay.pos[y] >= 2 {
                for &z in g.neighbors(y) {
                    if colors[z] != 0 {
                        forbidden[colors[z]] = true;
                    }
                }
            }
        }
        match (1..ell).find(|&c| !forbidden[c]) {
            Some(c) => {
                colors[x] = c;
                assignments.push((x, c, ell));
            }
            None => return Err(x),
        }
    }
    Ok((colors, assignments))
}

/// Bounded completion search used when the greedy pass fails on a girth >= 7
/// input: backtracking over the loop colors (domains `1..m(x)`, properness
/// against colored vertices, distinct colors inside every witness set),
/// first over the given witness family and then over alternatives.
#[allow(clippy::type_complexity)]
fn repair_search(
    g: &Graph,
    fs: &FeasibleSequence,
) -> Option<(Vec<usize>, Vec<Vec<usize>>, Vec<(usize, usize, usize)>)> {
    const FAMILY_CAP: usize = 20_000;
    const NODES_PER_FAMILY: u64 = 50_000;

    let s = fs.s();
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (idx, &w) in fs.order.iter().enumerate() {
        pos[w] = idx + 1;
    }
    // eligible witness choices per position
    let mut eligible: Vec<Vec<usize>> = Vec::with_capacity(s - 1);
    for i in 2..=s {
        let w = fs.order[i - 1];
        let alive: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&z| pos[z] == 0 || pos[z] <= i)
            .collect();
        eligible.push(alive);
    }

    // the input family goes first
    if let Some((colors, assigns)) = backtrack(g, &fs.order, &fs.witnesses, NODES_PER_FAMILY) {
        return Some((colors, fs.witnesses.clone(), assigns));
    }
    let mut tried = 0usize;
    let mut family_iter = WitnessFamilies::new(&eligible, (2..=s).map(|i| i - 1).collect());
    while let Some(family) = family_iter.next_family() {
        tried += 1;
        if tried > FAMILY_CAP {
            return None;
        }
        if family == fs.witnesses {
            continue;
        }
        if let Some((colors, assigns)) = backtrack(g, &fs.order, &family, NODES_PER_FAMILY) {
            return Some((colors, family, assigns));
        }
    }
    None
}

/// Enumerates witness families: the cartesian product of ascending
/// (i-1)-combinations of each eligible set, odometer order.
struct WitnessFamilies<'a> {
    eligible: &'a [Vec<usize>],
    sizes: Vec<usize>,
    state: Vec<Vec<usize>>, // index combinations
    done: bool,
}

impl<'a> WitnessFamilies<'a> {
    fn new(eligible: &'a [Vec<usize>], sizes: Vec<usize>) -> Self {
        let mut done = false;
        let mut state = Vec::with_capacity(eligible.len());
        for (lvl, need) in sizes.iter().enumerate() {
            if eligible[lvl].len() < *need {
                done = true;
            }
            state.push((0..*need).collect());
        }
        WitnessFamilies {
            eligible,
            sizes,
            state,
            done,
        }
    }

    fn next_family(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.done {
            return None;
        }
        let family: Vec<Vec<usize>> = self
            .state
            .iter()
            .enumerate()
            .map(|(lvl, combo)| combo.iter().map(|&i| self.eligible[lvl][i]).collect())
            .collect();
        // advance the odometer
        let mut lvl = self.state.len();
        loop {
            if lvl == 0 {
                self.done = true;
                break;
            }
            lvl -= 1;
            if next_combination(&mut self.state[lvl], self.eligible[lvl].len()) {
                break;
            }
            self.state[lvl] = (0..self.sizes[lvl]).collect();
        }
        Some(family)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Backtracking over the loop colors for one witness family.
#[allow(clippy::type_complexity)]
fn backtrack(
    g: &Graph,
    order: &[usize],
    witnesses: &[Vec<usize>],
    node_cap: u64,
) -> Option<(Vec<usize>, Vec<(usize, usize, usize)>)> {
    let n = g.vertex_count();
    let lay = layout(g, order, witnesses);
    let mut colors = vec![0usize; n];
    for (idx, &w) in order.iter().enumerate() {
        if idx + 1 >= 2 {
            colors[w] = idx + 1;
        }
    }
    // witness sets containing each loop vertex
    let mut sets_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (si, wit) in witnesses.iter().enumerate() {
        for &x in wit {
            if lay.pos[x] < 2 {
                sets_of[x].push(si);
            }
        }
    }
    let mut nodes = 0u64;
    let vars = lay.loop_vertices.clone();
    if rec(
        g,
        witnesses,
        &lay,
        &vars,
        0,
        &mut colors,
        &mut sets_of,
        &mut nodes,
        node_cap,
    ) {
        let assignments = vars.iter().map(|&x| (x, colors[x], lay.m_of[x])).collect();
        Some((colors, assignments))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn rec(
    g: &Graph,
    witnesses: &[Vec<usize>],
    lay: &Layout,
    vars: &[usize],
    idx: usize,
    colors: &mut Vec<usize>,
    sets_of: &mut Vec<Vec<usize>>,
    nodes: &mut u64,
    node_cap: u64,
) -> bool {
    if idx == vars.len() {
        return true;
    }
    *nodes += 1;
    if *nodes > node_cap {
        return false;
    }
    let x = vars[idx];
    let ell = lay.m_of[x];
    'colors: for c in 1..ell {
        for &y in g.neighbors(x) {
            if colors[y] == c {
                continue 'colors;
            }
        }
        for &si in &sets_of[x] {
            for &y in &witnesses[si] {
                if y != x && colors[y] == c {
                    continue 'colors;
                }
            }
        }
        colors[x] = c;
        if rec(
            g,
            witnesses,
            lay,
            vars,
            idx + 1,
            colors,
            sets_of,
            nodes,
            node_cap,
        ) {
            return true;
        }
        colors[x] = 0;
    }
    false
}

/// Greedy extension of the remaining vertices and final packaging. The
/// palette stays within s: a vertex forced beyond s would certify a partial
/// Grundy coloring with more than s colors, contradicting the stair bound.
fn finish(
    g: &Graph,
    s: usize,
    mut colors: Vec<usize>,
    report: ConstructReport,
) -> Result<(Coloring, ConstructReport), GrundyError> {
    for v in 0..g.vertex_count() {
        if colors[v] != 0 {
            continue;
        }
        let c = crate::coloring::least_free_color(g, &colors, v, 0);
        if c > s {
            return Err(GrundyError::PaletteOverflow { vertex: v });
        }
        colors[v] = c;
    }
    Ok((Coloring::from_raw(colors, s), report))
}
