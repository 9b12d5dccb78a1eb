//! Rotations, partial rotations and the symmetry/admissibility checks.

use super::build::{build_tripod, color_swap};
use super::cycles::CycleTuple;
use super::map::{NGraph, WeaveMap};
use super::mutate::recognize_tripod;
use super::NGraphError;
use std::collections::HashMap;

/// Rotate a disk graph counterclockwise by `steps` boundary positions.
/// The boundary word must be invariant under the shift.
pub fn rotate(g: &NGraph, steps: isize) -> Result<NGraph, NGraphError> {
    let word = g.boundary_word();
    if word.rotated(steps) != word {
        return Err(NGraphError::BoundaryNotRotationInvariant);
    }
    let l = g.map.boundaries()[0].len() as isize;
    let s = if l == 0 { 0 } else { steps.rem_euclid(l) as usize };
    let mut map = g.map.clone();
    rotate_circle(&mut map, 0, s);
    Ok(NGraph { map })
}

fn rotate_circle(map: &mut WeaveMap, circle: usize, s: usize) {
    // Rebuild the circle with endpoints shifted: the endpoint at old
    // position i goes to position i + s.
    let old = map.boundaries()[circle].clone();
    let l = old.len();
    if l == 0 || s == 0 {
        return;
    }
    let order: Vec<usize> = (0..l).map(|j| old[(j + l - s) % l]).collect();
    reclose_circle(map, circle, &order);
}

/// Rewire the arc edges of `circle` so its endpoints run in the given
/// order; endpoint vertices and their graph halves stay in place.
fn reclose_circle(map: &mut WeaveMap, circle: usize, order: &[usize]) {
    let l = order.len();
    // Read all graph halves before rewiring anything; the rotations are
    // temporarily inconsistent inside the loop.
    let halves: Vec<usize> = order.iter().map(|&v| map.graph_half_at(v)).collect();
    for (j, (&v, &edge_half)) in order.iter().zip(&halves).enumerate() {
        let out_arc = 2 * map.arc_edge(circle, j);
        let in_arc = 2 * map.arc_edge(circle, (j + l - 1) % l) + 1;
        map.set_rotation(v, &[out_arc, edge_half, in_arc]);
    }
    map.set_boundary_order(circle, order);
}

/// Whether the graph is invariant under rotation by `1/order` of a turn.
pub fn is_rotation_symmetric(g: &NGraph, order: usize) -> Result<bool, NGraphError> {
    let l = g.map.boundaries()[0].len();
    if order == 0 || l % order != 0 {
        return Ok(false);
    }
    let steps = (l / order) as isize;
    let word = g.boundary_word();
    if word.rotated(steps) != word {
        return Ok(false);
    }
    let rotated = rotate(g, steps)?;
    Ok(rotated.canonical_form() == g.canonical_form())
}

/// The cycle relabeling induced by a graph symmetry `τ`: for each cycle,
/// the label of the cycle of `τ(B)` with the same edge set, when the
/// rotated tuple is a relabeling of the original.
pub fn induced_relabeling(
    cycles: &CycleTuple,
    tau: impl Fn(usize) -> usize,
) -> Option<HashMap<usize, usize>> {
    let mut out = HashMap::new();
    for s in cycles.specs() {
        let mut edges: Vec<usize> = s.edges.iter().map(|&e| tau(e)).collect();
        edges.sort();
        let target = cycles.specs().iter().find(|t| {
            let mut te = t.edges.clone();
            te.sort();
            te == edges
        })?;
        out.insert(s.label, target.label);
    }
    Some(out)
}

/// Settings in which admissibility of a pair `(G, B)` is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibleSetting {
    /// Linear family of odd rank `2n−1` under the half-turn.
    LinearHalfTurn,
    /// Tripod `(2,2,2)` under the third-turn.
    TripodThirdTurn,
    /// Tripod `(n−1,2,2)` under the partial rotation.
    TripodPartialTwoLegs,
    /// Tripod `(2,3,3)` under the partial rotation.
    TripodPartialE6,
}

/// Map each edge of `g` to its image under the rotation by `steps`,
/// matching the rotated graph back onto `g` via the anchored traversal.
fn edge_map_of_rotation(g: &NGraph, steps: isize) -> Result<Vec<usize>, NGraphError> {
    let rotated = rotate(g, steps)?;
    if rotated.canonical_form() != g.canonical_form() {
        return Err(NGraphError::BoundaryNotRotationInvariant);
    }
    // The anchored traversals of `rotated` and `g` align vertex by
    // vertex; matching traversal positions of edges gives the edge map.
    Ok(match_edges_by_traversal(&rotated.map, &g.map))
}

/// For two maps with equal anchored serializations, pair the edges by
/// their first appearance in the anchored traversal.
pub(crate) fn match_edges_by_traversal(a: &WeaveMap, b: &WeaveMap) -> Vec<usize> {
    let ta = traversal_edges(a);
    let tb = traversal_edges(b);
    assert_eq!(ta.len(), tb.len(), "maps must be structurally equal");
    let mut out = vec![usize::MAX; a.edge_count()];
    for (ea, eb) in ta.into_iter().zip(tb) {
        out[ea] = eb;
    }
    out
}

/// Edges in the order first seen by the anchored traversal.
fn traversal_edges(map: &WeaveMap) -> Vec<usize> {
    let mut label = vec![usize::MAX; map.vertex_count()];
    let mut order: Vec<(usize, usize)> = Vec::new();
    let push = |v: usize, entry: usize, label: &mut Vec<usize>, order: &mut Vec<(usize, usize)>| {
        if label[v] == usize::MAX {
            label[v] = order.len();
            order.push((v, entry));
        }
    };
    for circle in map.boundaries() {
        for &v in circle {
            let entry = map.graph_half_at(v);
            push(v, entry, &mut label, &mut order);
        }
    }
    let mut seen_edges = vec![false; map.edge_count()];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let (v, entry) = order[i];
        for h in map.rotation_at(v, Some(entry)) {
            let e = map.edge_of(h);
            if map.color_of_edge(e) != 0 && !seen_edges[e] {
                seen_edges[e] = true;
                edges.push(e);
            }
            push(map.source(map.twin(h)), map.twin(h), &mut label, &mut order);
        }
        i += 1;
    }
    edges
}

/// Partial rotation of a ray-symmetric tripod-shaped pair: the two
/// sectors containing the equal legs swap. Implemented structurally for
/// graphs recognized as (possibly padded) tripods with two equal legs.
pub fn partial_rotation(
    g: &NGraph,
    cycles: &CycleTuple,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let (a, b, c, barred) = recognize_tripod(g).ok_or(NGraphError::NotRaySymmetric)?;
    if b != c {
        return Err(NGraphError::NotRaySymmetric);
    }
    // Swapping the two equal legs realizes the sector exchange; the
    // result is the same anchored graph with legs b and c interchanged,
    // i.e. g itself with the induced edge relabeling.
    let (reference, ref_cycles) = build_tripod(a, b, c);
    let reference = if barred {
        color_swap(&reference)?
    } else {
        reference
    };
    let into_ref = match_edges_by_traversal(&g.map, &reference.map);
    let back: Vec<usize> = {
        let mut inv = vec![usize::MAX; into_ref.len()];
        for (e, &t) in into_ref.iter().enumerate() {
            if t != usize::MAX {
                inv[t] = e;
            }
        }
        inv
    };
    // In the reference tripod, leg b holds cycles a+1..a+b-1 and leg c
    // holds a+b..a+b+c-2; swap them edgewise.
    let swap_ref_edge = |e: usize| -> usize {
        let legb: Vec<usize> = ref_cycles
            .specs()
            .iter()
            .filter(|s| (a + 1..a + b).contains(&s.label))
            .flat_map(|s| s.edges.clone())
            .collect();
        let legc: Vec<usize> = ref_cycles
            .specs()
            .iter()
            .filter(|s| (a + b..a + b + c - 1).contains(&s.label))
            .flat_map(|s| s.edges.clone())
            .collect();
        if let Some(i) = legb.iter().position(|&x| x == e) {
            legc[i]
        } else if let Some(i) = legc.iter().position(|&x| x == e) {
            legb[i]
        } else {
            // The central Y legs swap between the two sectors as well.
            let y = &ref_cycles.specs()[0].edges;
            if e == y[1] {
                y[2]
            } else if e == y[2] {
                y[1]
            } else {
                e
            }
        }
    };
    let tau = |e: usize| back[swap_ref_edge(into_ref[e])];
    let new_cycles = cycles.map_edges(tau);
    new_cycles
        .validate(&g.map)
        .map_err(|_| NGraphError::NotRaySymmetric)?;
    Ok((g.clone(), new_cycles))
}

/// Whether the pair is ray-symmetric in the sense needed for the partial
/// rotation: a tripod shape with two equal legs.
pub fn is_ray_symmetric(g: &NGraph) -> bool {
    matches!(recognize_tripod(g), Some((_, b, c, _)) if b == c)
}

/// Check `τ(G) = G` together with the prescribed relabeling of cycles.
pub fn is_g_admissible(
    g: &NGraph,
    cycles: &CycleTuple,
    setting: AdmissibleSetting,
) -> Result<bool, NGraphError> {
    match setting {
        AdmissibleSetting::LinearHalfTurn => {
            let n = cycles.len();
            if n % 2 == 0 {
                return Ok(false);
            }
            let l = g.map.boundaries()[0].len() as isize;
            if l % 2 != 0 {
                return Ok(false);
            }
            if !is_rotation_symmetric(g, 2)? {
                return Ok(false);
            }
            let edge_tau = edge_map_of_rotation(g, l / 2)?;
            let Some(relab) = induced_relabeling(cycles, |e| edge_tau[e]) else {
                return Ok(false);
            };
            // γ_i ↔ γ_{2n−i} with n = (len+1)/2.
            let m = n + 1;
            Ok((1..=n).all(|i| relab.get(&i) == Some(&(m - i))))
        }
        AdmissibleSetting::TripodThirdTurn => {
            let l = g.map.boundaries()[0].len() as isize;
            if l % 3 != 0 || !is_rotation_symmetric(g, 3)? {
                return Ok(false);
            }
            let edge_tau = edge_map_of_rotation(g, l / 3)?;
            let Some(relab) = induced_relabeling(cycles, |e| edge_tau[e]) else {
                return Ok(false);
            };
            // γ_1 fixed, γ_2 → γ_3 → γ_4 → γ_2 up to which third-turn we
            // took; accept either 3-cycle orientation.
            let fwd = relab.get(&2) == Some(&3)
                && relab.get(&3) == Some(&4)
                && relab.get(&4) == Some(&2);
            let bwd = relab.get(&2) == Some(&4)
                && relab.get(&4) == Some(&3)
                && relab.get(&3) == Some(&2);
            Ok(relab.get(&1) == Some(&1) && (fwd || bwd))
        }
        AdmissibleSetting::TripodPartialTwoLegs | AdmissibleSetting::TripodPartialE6 => {
            if !is_ray_symmetric(g) {
                return Ok(false);
            }
            let (a, b, _, _) = recognize_tripod(g).unwrap();
            let (_, relabeled) = partial_rotation(g, cycles)?;
            let Some(relab) = match_tuples(cycles, &relabeled) else {
                return Ok(false);
            };
            // Leg cycles of the two equal legs swap pairwise; everything
            // else is fixed.
            let n = cycles.len();
            for i in 1..=n {
                let expect = if (a + 1..a + b).contains(&i) {
                    i + (b - 1)
                } else if (a + b..=n).contains(&i) {
                    i - (b - 1)
                } else {
                    i
                };
                if relab.get(&i) != Some(&expect) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Identify each cycle of `a` with the label of the cycle in `b` having
/// the same edge set.
fn match_tuples(a: &CycleTuple, b: &CycleTuple) -> Option<HashMap<usize, usize>> {
    let mut out = HashMap::new();
    for s in a.specs() {
        let mut se = s.edges.clone();
        se.sort();
        let t = b.specs().iter().find(|t| {
            let mut te = t.edges.clone();
            te.sort();
            te == se
        })?;
        out.insert(t.label, s.label);
    }
    Some(out)
}
