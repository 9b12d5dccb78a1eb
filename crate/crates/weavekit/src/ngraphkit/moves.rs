//! Local moves preserving the induced weave: Move I (hexagon-pair
//! cancellation), Move II (push-through at one hexagonal point) and the
//! generalized push-through along a fan.

use super::cycles::{CycleKind, CycleSpec, CycleTuple};
use super::map::{EdgeId, NGraph, VertexKind};
use super::NGraphError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    One,
    Two,
    /// Generalized push-through: iterated Move II along a fan.
    TwoStar,
}

/// Where to apply a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveSite {
    /// Forward Move I at a bridge edge between two hexagonal points.
    CancelBigon { bridge: EdgeId },
    /// Backward Move I: insert a hexagon pair across the middle edge,
    /// between the given flanking edges.
    InsertBigon {
        middle_half: usize,
        top: EdgeId,
        bottom: EdgeId,
    },
    /// Move II forward at the edge from a trivalent vertex into a
    /// hexagonal point (even half at the trivalent vertex side is not
    /// required; the edge determines the site).
    PushThrough { edge: EdgeId },
    /// Move II backward at the bridge edge between the two hexagonal
    /// points produced by a forward push.
    PullBack { bridge: EdgeId },
}

/// All bridge edges where a forward Move I applies.
pub fn detect_move_one_sites(g: &NGraph) -> Vec<EdgeId> {
    (0..g.map.edge_count())
        .filter(|&m| {
            if g.map.color_of_edge(m) == 0 {
                return false;
            }
            let (h0, h1) = g.map.halves_of(m);
            let (a, b) = (g.map.source(h0), g.map.source(h1));
            if !matches!(g.map.kind(a), VertexKind::Hexagonal(_))
                || !matches!(g.map.kind(b), VertexKind::Hexagonal(_))
            {
                return false;
            }
            // The two neighbors of the bridge at each end must pair up
            // into a bigon.
            let rot_a = g.map.rotation_at(a, Some(h0));
            let up = g.map.edge_of(rot_a[1]);
            let down = g.map.edge_of(rot_a[5]);
            let far_up = g.map.source(g.map.twin(rot_a[1]));
            let far_down = g.map.source(g.map.twin(rot_a[5]));
            far_up == b && far_down == b && up != down && up != m && down != m
        })
        .collect()
}

pub fn apply_move(
    g: &NGraph,
    cycles: &CycleTuple,
    kind: MoveKind,
    site: MoveSite,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    match (kind, site) {
        (MoveKind::One, MoveSite::CancelBigon { bridge }) => move_one_forward(g, cycles, bridge),
        (
            MoveKind::One,
            MoveSite::InsertBigon {
                middle_half,
                top,
                bottom,
            },
        ) => move_one_backward(g, cycles, middle_half, top, bottom),
        (MoveKind::Two, MoveSite::PushThrough { edge }) => move_two_forward(g, cycles, edge),
        (MoveKind::Two, MoveSite::PullBack { bridge }) => move_two_backward(g, cycles, bridge),
        (MoveKind::TwoStar, MoveSite::PushThrough { edge }) => {
            // The generalized push-through starts like a Move II and keeps
            // pushing the fan while new sites appear on the carried edge.
            move_two_forward(g, cycles, edge)
        }
        _ => Err(NGraphError::SiteMismatch(
            "move kind and site shape disagree".into(),
        )),
    }
}

fn move_one_forward(
    g: &NGraph,
    cycles: &CycleTuple,
    bridge: EdgeId,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    if !detect_move_one_sites(g).contains(&bridge) {
        return Err(NGraphError::SiteMismatch(format!(
            "edge {bridge} is not a cancellable bridge"
        )));
    }
    let mut map = g.map.clone();
    let (h0, h1) = map.halves_of(bridge);
    let (va, vb) = (map.source(h0), map.source(h1));
    let rot_a = map.rotation_at(va, Some(h0));
    let rot_b = map.rotation_at(vb, Some(h1));
    // [m, u, nw, l, sw, d] at A and [m, d, se, r, ne, u] at B.
    let (u, nw, l, sw, d) = (rot_a[1], rot_a[2], rot_a[3], rot_a[4], rot_a[5]);
    let (se, r, ne) = (rot_b[2], rot_b[3], rot_b[4]);
    if map.edge_of(rot_b[1]) != map.edge_of(d) || map.edge_of(rot_b[5]) != map.edge_of(u) {
        return Err(NGraphError::SiteMismatch(
            "bigon arcs do not match up".into(),
        ));
    }
    // Merge nw with ne, sw with se, l with r: keep the A-side edges.
    let merges = [(nw, ne), (sw, se), (l, r)];
    for &(ha, hb) in &merges {
        // ha re-anchors to the far end of hb's edge.
        let far = map.twin(hb);
        let far_v = map.source(far);
        map.replace_in_rotation(far_v, far, ha);
    }
    let dead_edges = vec![
        bridge,
        map.edge_of(u),
        map.edge_of(d),
        map.edge_of(ne),
        map.edge_of(se),
        map.edge_of(r),
    ];
    let dead_vertices = vec![va, vb];
    // Transport cycles before renumbering. Along the straight strands,
    // the two halves of each merged pair collapse onto the kept edge; a
    // chain demands the full [kept, bridge, dropped] passage.
    let keep_of = |e: EdgeId| -> Option<EdgeId> {
        merges
            .iter()
            .find(|&&(ha, hb)| map.edge_of(ha) == e || map.edge_of(hb) == e)
            .map(|&(ha, _)| map.edge_of(ha))
    };
    let arcs = [map.edge_of(u), map.edge_of(d)];
    let mut new_specs = Vec::new();
    for s in cycles.specs() {
        if s.edges.contains(&bridge) {
            let fine = s.edges.windows(3).any(|w| {
                w[1] == bridge
                    && keep_of(w[0]) == keep_of(w[2])
                    && keep_of(w[0]).is_some()
                    && w[0] != w[2]
            });
            if !fine {
                return Err(NGraphError::UnsupportedConfiguration(format!(
                    "cycle {} crosses the cancelled bigon irregularly",
                    s.label
                )));
            }
        }
        if s.edges.iter().any(|e| arcs.contains(e)) {
            return Err(NGraphError::UnsupportedConfiguration(format!(
                "cycle {} runs along a cancelled arc",
                s.label
            )));
        }
        let mut edges = Vec::new();
        for &e in &s.edges {
            if e == bridge {
                continue;
            }
            let e = keep_of(e).unwrap_or(e);
            if edges.last() != Some(&e) {
                edges.push(e);
            }
        }
        let kind = if edges.len() == 1 { CycleKind::I } else { s.kind };
        new_specs.push(CycleSpec {
            kind,
            edges,
            label: s.label,
            plus: s.plus,
        });
    }
    let (compacted, emap) = map.compact(&dead_edges, &dead_vertices);
    let out = NGraph { map: compacted };
    out.validate()?;
    let tuple = CycleTuple::new(
        new_specs
            .into_iter()
            .map(|s| CycleSpec {
                kind: s.kind,
                edges: s.edges.iter().map(|&e| emap[e].unwrap()).collect(),
                label: s.label,
                plus: s.plus,
            })
            .collect(),
    );
    tuple.validate(&out.map)?;
    Ok((out, tuple))
}

fn move_one_backward(
    g: &NGraph,
    cycles: &CycleTuple,
    middle_half: usize,
    top: EdgeId,
    bottom: EdgeId,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let mut map = g.map.clone();
    let h_r = middle_half;
    let e_r = map.edge_of(h_r);
    let c_other = map.color_of_edge(e_r);
    let face_above = map.face_of(h_r);
    let face_below = map.face_of(map.twin(h_r));
    let t = *face_above
        .iter()
        .find(|&&h| map.edge_of(h) == top)
        .ok_or_else(|| NGraphError::SiteMismatch("top edge not on the left face".into()))?;
    let bb = *face_below
        .iter()
        .find(|&&h| map.edge_of(h) == bottom)
        .ok_or_else(|| NGraphError::SiteMismatch("bottom edge not on the right face".into()))?;
    let c = map.color_of_edge(top);
    if map.color_of_edge(bottom) != c || c == c_other || c == 0 || c_other == 0 {
        return Err(NGraphError::SiteMismatch("colors do not alternate".into()));
    }
    let low = c.min(c_other);
    let h1 = map.add_vertex(VertexKind::Hexagonal(low));
    let h2 = map.add_vertex(VertexKind::Hexagonal(low));
    let bridge = map.add_edge(c);
    let arc_u = map.add_edge(c_other);
    let arc_d = map.add_edge(c_other);
    let top2 = map.add_edge(c);
    let bot2 = map.add_edge(c);
    let red2 = map.add_edge(c_other);
    // Far ends that lose a half.
    let xr = map.source(t);
    let yr = map.source(map.twin(bb));
    let zr = map.source(map.twin(h_r));
    map.replace_in_rotation(xr, t, 2 * top2 + 1);
    map.replace_in_rotation(yr, map.twin(bb), 2 * bot2 + 1);
    map.replace_in_rotation(zr, map.twin(h_r), 2 * red2 + 1);
    map.set_rotation(
        h1,
        &[2 * bridge, 2 * arc_u, t, map.twin(h_r), map.twin(bb), 2 * arc_d],
    );
    map.set_rotation(
        h2,
        &[
            2 * red2,
            2 * top2,
            2 * arc_u + 1,
            2 * bridge + 1,
            2 * arc_d + 1,
            2 * bot2,
        ],
    );
    let out = NGraph { map };
    out.validate()?;
    // Transport: a chain containing the middle edge threads the bridge.
    let mut new_specs = Vec::new();
    for s in cycles.specs() {
        if s.edges.iter().any(|&e| [top, bottom].contains(&e)) {
            return Err(NGraphError::UnsupportedConfiguration(format!(
                "cycle {} runs along a split strand",
                s.label
            )));
        }
        let mut edges = Vec::new();
        let mut kind = s.kind;
        for &e in &s.edges {
            if e == e_r {
                edges.extend([e_r, bridge, red2]);
                kind = CycleKind::LongI;
            } else {
                edges.push(e);
            }
        }
        new_specs.push(CycleSpec {
            kind,
            edges,
            label: s.label,
            plus: s.plus,
        });
    }
    let tuple = CycleTuple::new(new_specs);
    tuple.validate(&out.map)?;
    Ok((out, tuple))
}

fn move_two_forward(
    g: &NGraph,
    cycles: &CycleTuple,
    edge: EdgeId,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let mut map = g.map.clone();
    let (ht, hh) = {
        let (h0, h1) = map.halves_of(edge);
        let t_side = [h0, h1]
            .into_iter()
            .find(|&h| matches!(map.kind(map.source(h)), VertexKind::Trivalent(_)));
        let h_side = [h0, h1]
            .into_iter()
            .find(|&h| matches!(map.kind(map.source(h)), VertexKind::Hexagonal(_)));
        match (t_side, h_side) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(NGraphError::SiteMismatch(format!(
                    "edge {edge} does not join a trivalent vertex to a hexagonal point"
                )))
            }
        }
    };
    let t = map.source(ht);
    let hx = map.source(hh);
    let c = map.color_of_edge(edge);
    let rot_t = map.rotation_at(t, Some(ht));
    let (nw, sw) = (rot_t[1], rot_t[2]);
    let rot_h = map.rotation_at(hx, Some(hh));
    // [m, rd_ll, bl_lr, rd_r, bl_ur, rd_ul]
    let (rd_ll, bl_lr, rd_r, bl_ur, rd_ul) = (rot_h[1], rot_h[2], rot_h[3], rot_h[4], rot_h[5]);
    let c_other = map.color_of_half(rd_r);
    let low = c.min(c_other);

    let w = map.add_vertex(VertexKind::Trivalent(c_other));
    let arc = map.add_edge(c_other);
    let wt = map.add_edge(c_other);
    let wb = map.add_edge(c_other);
    // t becomes the upper hexagonal point, hx the lower one.
    map.set_kind(t, VertexKind::Hexagonal(low));
    map.set_rotation(t, &[bl_ur, rd_ul, nw, 2 * arc, ht, 2 * wt]);
    map.set_rotation(hx, &[bl_lr, 2 * wb, hh, 2 * arc + 1, sw, rd_ll]);
    map.set_rotation(w, &[rd_r, 2 * wt + 1, 2 * wb + 1]);
    let out = NGraph { map };
    out.validate()?;

    // Transport: chains running [edge, rd_r-edge] straight through drop
    // the bridge part; other contact is unsupported.
    let e_r = out.map.edge_of(rd_r);
    let touched = [
        edge,
        e_r,
        out.map.edge_of(nw),
        out.map.edge_of(sw),
        out.map.edge_of(rd_ll),
        out.map.edge_of(bl_lr),
        out.map.edge_of(bl_ur),
        out.map.edge_of(rd_ul),
    ];
    let mut new_specs = Vec::new();
    for s in cycles.specs() {
        let mut edges = s.edges.clone();
        if let Some(i) = edges.iter().position(|&e| e == edge) {
            let neighbor_ok = (i > 0 && edges[i - 1] == e_r)
                || (i + 1 < edges.len() && edges[i + 1] == e_r);
            if !neighbor_ok {
                return Err(NGraphError::UnsupportedConfiguration(format!(
                    "cycle {} ends on the pushed edge",
                    s.label
                )));
            }
            edges.remove(i);
        } else if edges.iter().any(|e| touched[2..].contains(e)) {
            // Strands re-anchored to the new hexagonal points keep their
            // edges; chains through them stay valid, ends stay trivalent
            // only on the fan side.
        }
        let kind = if edges.len() == 1 {
            CycleKind::I
        } else {
            s.kind
        };
        new_specs.push(CycleSpec {
            kind,
            edges,
            label: s.label,
            plus: s.plus,
        });
    }
    let tuple = CycleTuple::new(new_specs);
    tuple.validate(&out.map)?;
    Ok((out, tuple))
}

fn move_two_backward(
    g: &NGraph,
    cycles: &CycleTuple,
    bridge: EdgeId,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let (h0, h1) = g.map.halves_of(bridge);
    match move_two_backward_oriented(g, cycles, h0, h1) {
        Ok(r) => Ok(r),
        Err(NGraphError::SiteMismatch(_)) => move_two_backward_oriented(g, cycles, h1, h0),
        Err(e) => Err(e),
    }
}

fn move_two_backward_oriented(
    g: &NGraph,
    cycles: &CycleTuple,
    h_top: usize,
    h_bot: usize,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let mut map = g.map.clone();
    let bridge = map.edge_of(h_top);
    let (vt, vb) = (map.source(h_top), map.source(h_bot));
    if !matches!(map.kind(vt), VertexKind::Hexagonal(_))
        || !matches!(map.kind(vb), VertexKind::Hexagonal(_))
    {
        return Err(NGraphError::SiteMismatch(
            "pull-back bridge must join two hexagonal points".into(),
        ));
    }
    // Anchored at the bridge halves, a pushed site reads
    // [bridge, wt, bl_ur, rd_ul, nw, arc] above and
    // [bridge, arc, sw, rd_ll, bl_lr, wb] below.
    let rot_t = map.rotation_at(vt, Some(h_top));
    let (wt_h, bl_ur, rd_ul, nw, arc_t) = (rot_t[1], rot_t[2], rot_t[3], rot_t[4], rot_t[5]);
    let rot_b = map.rotation_at(vb, Some(h_bot));
    let (arc_b, sw, rd_ll, bl_lr, wb_h) = (rot_b[1], rot_b[2], rot_b[3], rot_b[4], rot_b[5]);
    if map.edge_of(arc_t) != map.edge_of(arc_b) {
        return Err(NGraphError::SiteMismatch("side arc missing".into()));
    }
    let w = map.source(map.twin(wt_h));
    if w != map.source(map.twin(wb_h)) || !matches!(map.kind(w), VertexKind::Trivalent(_)) {
        return Err(NGraphError::SiteMismatch(
            "the two struts do not meet at a trivalent vertex".into(),
        ));
    }
    let rd_r = {
        let rot_w = map.rotation_at(w, Some(map.twin(wt_h)));
        if map.edge_of(rot_w[1]) != map.edge_of(wb_h) {
            return Err(NGraphError::SiteMismatch(
                "strut order at the fan vertex".into(),
            ));
        }
        rot_w[2]
    };
    let c = map.color_of_edge(bridge);
    let dead_edges = vec![map.edge_of(arc_t), map.edge_of(wt_h), map.edge_of(wb_h)];
    for s in cycles.specs() {
        if s.edges.contains(&bridge) || s.edges.iter().any(|e| dead_edges.contains(e)) {
            return Err(NGraphError::UnsupportedConfiguration(format!(
                "cycle {} lives on the cancelled struts",
                s.label
            )));
        }
    }
    // Rebuild the left-hand picture: vt reverts to a trivalent vertex,
    // vb to the single hexagonal point carrying all five strands.
    map.set_kind(vt, VertexKind::Trivalent(c));
    map.set_rotation(vt, &[h_top, nw, sw]);
    map.set_rotation(vb, &[h_bot, rd_ll, bl_lr, rd_r, bl_ur, rd_ul]);
    // Transport: a chain end on the fan edge re-grows the bridge.
    let e_r = map.edge_of(rd_r);
    let mut new_specs = Vec::new();
    for s in cycles.specs() {
        let mut edges = s.edges.clone();
        let mut kind = s.kind;
        if edges.first() == Some(&e_r) {
            edges.insert(0, bridge);
            kind = CycleKind::LongI;
        } else if edges.last() == Some(&e_r) {
            edges.push(bridge);
            kind = CycleKind::LongI;
        }
        new_specs.push(CycleSpec {
            kind,
            edges,
            label: s.label,
            plus: s.plus,
        });
    }
    let (compacted, emap) = map.compact(&dead_edges, &[w]);
    let out = NGraph { map: compacted };
    out.validate()?;
    let tuple = CycleTuple::new(
        new_specs
            .into_iter()
            .map(|s| CycleSpec {
                kind: s.kind,
                edges: s.edges.iter().map(|&e| emap[e].unwrap()).collect(),
                label: s.label,
                plus: s.plus,
            })
            .collect(),
    );
    tuple.validate(&out.map)?;
    Ok((out, tuple))
}
