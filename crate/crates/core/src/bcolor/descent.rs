//! One descent attempt: given a b-coloring with k colors, try to reach a
//! b-coloring with k-1 colors by a sequence of local moves concentrated on
//! one target color, falling back to a (k-1)-iris certificate.

use crate::bcolor::{
    b_set_of_color_raw, b_sets_raw, dependent_on_raw, find_iris, is_b_vertex_raw,
    proper_options_raw, safe_colors_raw, BColoringError, IrisCertificate,
};
use crate::coloring::{clean_color, Coloring};
use crate::graph::{girth, Graph};

/// Result of one descent attempt.
///
/// `Reduced` carries a verified b-coloring with k-1 colors. `Iris` carries a
/// (k-1)-iris on a graph of girth at least 7 (or a forest), where the iris
/// is the usable alternative outcome. `Stuck` reports the final coloring and
/// the move log; on girth >= 7 inputs with k >= chi+1 it indicates a bug.
#[derive(Debug, Clone)]
pub enum DescentOutcome {
    Reduced(Coloring),
    Iris(IrisCertificate),
    Stuck {
        coloring: Coloring,
        log: Vec<String>,
    },
}

/// Default target for descent: the class with the fewest b-vertices,
/// ties broken by the smallest color index.
pub fn default_descent_target(g: &Graph, c: &Coloring) -> Result<usize, BColoringError> {
    let (colors, k) = c.check_total_proper_normalized(g)?;
    let bsets = b_sets_raw(g, &colors, k);
    if let Some(cls) = (1..=k).find(|&i| bsets[i - 1].is_empty()) {
        return Err(BColoringError::NotBColoring(cls));
    }
    Ok((1..=k).min_by_key(|&i| (bsets[i - 1].len(), i)).unwrap())
}

/// Applies the descent move system to the class `target` until it reduces
/// the palette, finds an iris, or runs out of moves.
///
/// Per iteration the moves are tried in order, each scanning ascending ids:
///
/// (a) a useless vertex of the target class with U(x) empty is recolored to
///     its smallest proper option, shrinking the class;
/// (b) a useless vertex with U(x) = {d} is recolored so that class d loses
///     all b-vertices, then d is cleaned: done, k-1 colors. The recolor is
///     only applied if some proper option actually leaves d b-vertex-free;
/// (c) for a b-vertex u of the target color and a color j with no b-vertex
///     of j adjacent to u and no color outside {target} depending on
///     N^j(u), every vertex of N^j(u) being useless and target-mutable:
///     recolor each of them to a safe color, re-checking safety as colors
///     move (the whole move is rolled back if safety is lost). Afterwards
///     either the target class is b-vertex-free (clean: done) or its
///     b-vertex set shrank.
///
/// When no move applies, a (k-1)-iris is searched; it is returned only when
/// the girth precondition (>= 7 or forest) makes it usable, otherwise the
/// attempt is Stuck.
pub fn descend_once(
    g: &Graph,
    c: &Coloring,
    target: usize,
) -> Result<DescentOutcome, BColoringError> {
    let (mut colors, k) = c.check_total_proper_normalized(g)?;
    if k < 2 {
        return Err(BColoringError::PaletteTooSmall(k));
    }
    if target == 0 || target > k {
        return Err(BColoringError::BadColor {
            color: target,
            palette: k,
        });
    }
    {
        let bsets = b_sets_raw(g, &colors, k);
        if let Some(cls) = (1..=k).find(|&i| bsets[i - 1].is_empty()) {
            return Err(BColoringError::NotBColoring(cls));
        }
    }

    let n = g.vertex_count();
    let mut log: Vec<String> = Vec::new();
    let cap = n * k * k + 8;

    for _ in 0..cap {
        let bsets = b_sets_raw(g, &colors, k);
        let b_target = bsets[target - 1].clone();
        debug_assert!(!b_target.is_empty());

        // moves (a) and (b) scan the non-b vertices of the target class
        let mut singles: Vec<(usize, usize)> = Vec::new();
        let mut moved = false;
        for x in 0..n {
            if colors[x] != target || b_target.binary_search(&x).is_ok() {
                continue;
            }
            let u_of_x = dependent_on_raw(g, &colors, k, target, &[x], &bsets);
            match u_of_x.len() {
                0 => {
                    let cnew = proper_options_raw(g, &colors, k, x)
                        .into_iter()
                        .next()
                        .expect("a non-b-vertex always has a proper recolor option");
                    colors[x] = cnew;
                    log.push(format!("free recolor: v{x} -> {cnew}"));
                    moved = true;
                    break;
                }
                1 => singles.push((x, u_of_x[0])),
                _ => {}
            }
        }
        if moved {
            continue;
        }

        for &(x, d) in &singles {
            let old = colors[x];
            let mut done: Option<Coloring> = None;
            for cnew in proper_options_raw(g, &colors, k, x) {
                colors[x] = cnew;
                if b_set_of_color_raw(g, &colors, k, d).is_empty() {
                    log.push(format!("recolor v{x} -> {cnew}, clean color {d}"));
                    let tmp = Coloring::from_raw(colors.clone(), k);
                    done = Some(clean_color(g, &tmp, d)?);
                    break;
                }
                colors[x] = old;
            }
            if let Some(reduced) = done {
                debug_assert!(crate::bcolor::is_b_coloring(g, &reduced).unwrap());
                return Ok(DescentOutcome::Reduced(reduced));
            }
        }
        // A blocked single can still be recolored: every proper option keeps
        // class d non-empty of b-vertices here (new ones replace the old),
        // so the result stays a b-coloring while the target class shrinks.
        if let Some(&(x, d)) = singles.first() {
            let cnew = proper_options_raw(g, &colors, k, x)
                .into_iter()
                .next()
                .expect("a non-b-vertex always has a proper recolor option");
            colors[x] = cnew;
            log.push(format!(
                "shrink recolor: v{x} -> {cnew} (class {d} keeps replacement b-vertices)"
            ));
            continue;
        }

        // move (c): bulk recoloring of N^j(u) for a target b-vertex u
        'bulk: for &u in &b_target {
            for j in 1..=k {
                if j == target {
                    continue;
                }
                // (ii) must fail: u has no b-vertex of color j next to it
                if g.neighbors(u)
                    .iter()
                    .any(|&y| colors[y] == j && is_b_vertex_raw(g, &colors, k, y))
                {
                    continue;
                }
                let nju: Vec<usize> = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&y| colors[y] == j)
                    .collect();
                debug_assert!(!nju.is_empty());
                // (iii) must fail: nothing outside {target} depends on N^j(u)
                let u_nju = dependent_on_raw(g, &colors, k, j, &nju, &bsets);
                if u_nju.iter().any(|&d| d != target) {
                    continue;
                }
                // every member must be useless and target-mutable
                let mut eligible = true;
                for &x in &nju {
                    let ux = dependent_on_raw(g, &colors, k, j, &[x], &bsets);
                    if ux.len() >= 2 || safe_colors_raw(g, &mut colors, k, x, target).is_empty() {
                        eligible = false;
                        break;
                    }
                }
                if !eligible {
                    continue;
                }

                let before_b_target = b_target.len();
                let mut trail: Vec<(usize, usize)> = Vec::new();
                let mut aborted = false;
                for &x in &nju {
                    match safe_colors_raw(g, &mut colors, k, x, target).first() {
                        Some(&cnew) => {
                            trail.push((x, colors[x]));
                            colors[x] = cnew;
                        }
                        None => {
                            aborted = true;
                            break;
                        }
                    }
                }
                if aborted {
                    for &(x, old) in trail.iter().rev() {
                        colors[x] = old;
                    }
                    log.push(format!("abort bulk move at u=v{u} class {j}: safety lost"));
                    continue;
                }
                log.push(format!(
                    "bulk move u=v{u} class {j}: recolored {} vertices",
                    trail.len()
                ));
                let bt = b_set_of_color_raw(g, &colors, k, target);
                if bt.is_empty() {
                    let tmp = Coloring::from_raw(colors.clone(), k);
                    let reduced = clean_color(g, &tmp, target)?;
                    debug_assert!(crate::bcolor::is_b_coloring(g, &reduced).unwrap());
                    return Ok(DescentOutcome::Reduced(reduced));
                }
                debug_assert!(bt.len() < before_b_target);
                moved = true;
                break 'bulk;
            }
        }
        if moved {
            continue;
        }

        log.push("no move applies".into());
        return Ok(finish_without_move(g, k, colors, log));
    }

    log.push("iteration cap reached".into());
    Ok(DescentOutcome::Stuck {
        coloring: Coloring::from_raw(colors, k),
        log,
    })
}

fn finish_without_move(
    g: &Graph,
    k: usize,
    colors: Vec<usize>,
    mut log: Vec<String>,
) -> DescentOutcome {
    match find_iris(g, k - 1) {
        Some(cert) if girth(g).at_least(7) => DescentOutcome::Iris(cert),
        Some(cert) => {
            log.push(format!(
                "{}-iris at v{} found but girth < 7: lemma inapplicable",
                cert.k, cert.center
            ));
            DescentOutcome::Stuck {
                coloring: Coloring::from_raw(colors, k),
                log,
            }
        }
        None => {
            log.push(format!("no {}-iris exists", k - 1));
            DescentOutcome::Stuck {
                coloring: Coloring::from_raw(colors, k),
                log,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bcolor::is_b_coloring;
    use crate::coloring::Coloring;
    use crate::graph::{generate, FamilySpec};

    fn spider_coloring() -> (Graph, Coloring) {
        let g = generate(FamilySpec::Spider {
            legs: 3,
            leg_length: 2,
        })
        .unwrap();
        // center 1; branch vertices 2, 3, 2; their leaves 3, 2, 1
        let c = Coloring::new_total(vec![1, 2, 3, 3, 2, 2, 1], 3).unwrap();
        assert!(is_b_coloring(&g, &c).unwrap());
        (g, c)
    }

    #[test]
    fn spider_descends_to_two_colors() {
        let (g, c) = spider_coloring();
        match descend_once(&g, &c, 3).unwrap() {
            DescentOutcome::Reduced(out) => {
                assert_eq!(out.palette(), 2);
                assert!(is_b_coloring(&g, &out).unwrap());
            }
            other => panic!("expected Reduced, got {other:?}"),
        }
        // target 2 also works
        match descend_once(&g, &c, 2).unwrap() {
            DescentOutcome::Reduced(out) => assert_eq!(out.palette(), 2),
            other => panic!("expected Reduced, got {other:?}"),
        }
    }

    #[test]
    fn spider_target_one_yields_iris() {
        // with the target on color 1 no move applies, and the tree (girth
        // treated as infinite) has a 2-iris
        let (g, c) = spider_coloring();
        match descend_once(&g, &c, 1).unwrap() {
            DescentOutcome::Iris(cert) => {
                assert_eq!(cert.k, 2);
                cert.validate(&g).unwrap();
            }
            other => panic!("expected Iris, got {other:?}"),
        }
    }

    #[test]
    fn crown_four_gets_stuck() {
        let g = generate(FamilySpec::Crown(4)).unwrap();
        // classes are the removed matching pairs {i, 4+i}
        let c = Coloring::new_total(vec![1, 2, 3, 4, 1, 2, 3, 4], 4).unwrap();
        assert!(is_b_coloring(&g, &c).unwrap());
        let target = default_descent_target(&g, &c).unwrap();
        assert_eq!(target, 1);
        match descend_once(&g, &c, target).unwrap() {
            DescentOutcome::Stuck { coloring, log } => {
                assert!(is_b_coloring(&g, &coloring).unwrap());
                assert!(log.iter().any(|l| l.contains("inapplicable")));
            }
            other => panic!("expected Stuck, got {other:?}"),
        }
    }

    #[test]
    fn default_target_prefers_fewest_b_vertices() {
        let (g, c) = spider_coloring();
        // all three classes have exactly one b-vertex, ties break low
        assert_eq!(default_descent_target(&g, &c).unwrap(), 1);
    }

    #[test]
    fn rejects_non_b_colorings() {
        let p3 = generate(FamilySpec::Path(3)).unwrap();
        let c = Coloring::new_total(vec![1, 2, 3], 3).unwrap();
        assert!(matches!(
            descend_once(&p3, &c, 1),
            Err(BColoringError::NotBColoring(_))
        ));
    }
}
