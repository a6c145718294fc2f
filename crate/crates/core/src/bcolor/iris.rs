//! Building a b-coloring with k colors from a k-iris when the girth is at
//! least 7 (or the graph is a forest) and k >= 2*chi.

use crate::bcolor::{b_sets_raw, BColoringError, IrisCertificate};
use crate::coloring::{ChromaticResult, Coloring};
use crate::graph::{girth, Girth, Graph};

/// Extends a k-iris into a full b-coloring with exactly k colors.
///
/// The iris center u gets color 1 and k-1 high-degree neighbors u_2..u_k get
/// colors 2..k; each u_i hands the colors {2..k}\{i} to k-2 of its other
/// neighbors, which together with u makes every u_i (and u itself) a
/// b-vertex. Vertices outside that tree T that see a color in {1..chi} form
/// a set B which is colored by the chi-witness shifted into {chi+1..2chi};
/// the rest reuses the chi-witness directly. Girth at least 7 keeps T a
/// tree of diameter 4 and gives every vertex of B at most one neighbor in
/// T, which is what makes the three layers compatible.
pub fn iris_b_coloring(
    g: &Graph,
    iris: &IrisCertificate,
    chi_witness: &ChromaticResult,
) -> Result<Coloring, BColoringError> {
    match girth(g) {
        Girth::Finite(v) if v < 7 => return Err(BColoringError::PreconditionGirth(v)),
        _ => {}
    }
    iris.validate(g)?;
    let k = iris.k;
    let chi = chi_witness.chi;
    if k < 2 * chi {
        return Err(BColoringError::IrisTooSmall {
            k,
            twice_chi: 2 * chi,
        });
    }
    let (chi_colors, chi_palette) = chi_witness.witness.check_total_proper_normalized(g)?;
    if chi_palette != chi {
        return Err(BColoringError::InternalContradiction(format!(
            "chromatic witness uses {chi_palette} colors, result says chi = {chi}"
        )));
    }
    if k < 2 {
        return Err(BColoringError::IrisTooSmall { k, twice_chi: 2 });
    }

    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let internal = |msg: String| BColoringError::InternalContradiction(msg);

    colors[iris.center] = 1;
    let spokes: Vec<usize> = iris.witness.iter().copied().take(k - 1).collect();
    for (i, &ui) in spokes.iter().enumerate() {
        if colors[ui] != 0 {
            return Err(internal(format!("witness v{ui} assigned twice")));
        }
        colors[ui] = i + 2;
    }
    for (i, &ui) in spokes.iter().enumerate() {
        let own = i + 2;
        let fill: Vec<usize> = g
            .neighbors(ui)
            .iter()
            .copied()
            .filter(|&w| w != iris.center)
            .take(k - 2)
            .collect();
        if fill.len() < k - 2 {
            return Err(BColoringError::InsufficientNeighbors(format!(
                "witness v{ui} has only {} neighbors besides the center, needs {}",
                fill.len(),
                k - 2
            )));
        }
        let palette: Vec<usize> = (2..=k).filter(|&c| c != own).collect();
        for (&w, &c) in fill.iter().zip(palette.iter()) {
            if colors[w] != 0 {
                return Err(internal(format!(
                    "vertex v{w} is shared between iris branches; girth precondition violated"
                )));
            }
            colors[w] = c;
        }
    }

    // B: uncolored vertices adjacent to a tree color in {1..chi}
    let in_b: Vec<bool> = (0..n)
        .map(|v| {
            colors[v] == 0
                && g.neighbors(v)
                    .iter()
                    .any(|&t| colors[t] != 0 && colors[t] <= chi)
        })
        .collect();
    for v in 0..n {
        if colors[v] != 0 {
            continue;
        }
        colors[v] = if in_b[v] {
            chi_colors[v] + chi
        } else {
            chi_colors[v]
        };
    }

    let out = Coloring::from_raw(colors, k);
    let (raw, palette) = out
        .check_total_proper_normalized(g)
        .map_err(|e| internal(format!("construction produced an invalid coloring: {e}")))?;
    let bsets = b_sets_raw(g, &raw, palette);
    if let Some(cls) = (1..=palette).find(|&i| bsets[i - 1].is_empty()) {
        return Err(internal(format!(
            "construction left class {cls} without a b-vertex"
        )));
    }
    Ok(out)
}
