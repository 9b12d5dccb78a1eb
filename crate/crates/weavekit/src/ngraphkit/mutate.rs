//! Legendrian mutation: local surgeries at I- and Y-cycles, with cycle
//! transport, plus the Coxeter composite.

use super::build::{build_tripod, color_swap};
use super::cycles::{CycleKind, CycleSpec, CycleTuple};
use super::map::{NGraph, VertexKind};
use super::padding::{concat_annulus_graph, coxeter_padding};
use super::NGraphError;

/// Mutate the pair `(g, cycles)` along the cycle labeled `k`.
pub fn legendrian_mutate(
    g: &NGraph,
    cycles: &CycleTuple,
    k: usize,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    cycles.validate(&g.map)?;
    let spec = cycles
        .by_label(k)
        .ok_or(NGraphError::UnmutableCycle(k))?
        .clone();
    match spec.kind {
        CycleKind::I => mutate_i(g, cycles, &spec),
        CycleKind::Y => mutate_y(g, cycles, &spec),
        CycleKind::LongI => Err(NGraphError::UnmutableCycle(k)),
    }
}

/// I-cycle surgery: the edge turns inside its quadrilateral of
/// neighboring strands; the four outer half-edges re-pair.
fn mutate_i(
    g: &NGraph,
    cycles: &CycleTuple,
    spec: &CycleSpec,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let mut map = g.map.clone();
    let e = spec.edges[0];
    let (he_l, he_r) = map.halves_of(e);
    let l = map.source(he_l);
    let r = map.source(he_r);
    // Rotations starting from the shared edge.
    let rot_l = map.rotation_at(l, Some(he_l));
    let rot_r = map.rotation_at(r, Some(he_r));
    let (l1, l2) = (rot_l[1], rot_l[2]);
    let (r1, r2) = (rot_r[1], rot_r[2]);
    // Other cycles may own at most one of the four strands each.
    for other in cycles.specs() {
        if other.label == spec.label {
            continue;
        }
        let t = other
            .edges
            .iter()
            .filter(|&&f| [l1, l2, r1, r2].iter().any(|&h| map.edge_of(h) == f))
            .count();
        if t > 1 {
            return Err(NGraphError::UnsupportedConfiguration(format!(
                "cycle {} wraps around the mutating edge {}",
                other.label, spec.label
            )));
        }
    }
    map.set_rotation(l, &[he_l, r2, l1]);
    map.set_rotation(r, &[he_r, l2, r1]);
    let out = NGraph { map };
    out.validate()?;
    let mut new_cycles = cycles.clone();
    flip_tag(&mut new_cycles, spec.label);
    Ok((out, new_cycles))
}

/// Y-cycle surgery: the hexagonal point re-emits the opposite color; a
/// hexagon of new points appears around it and neighboring cycle ends
/// extend into long I-cycles.
fn mutate_y(
    g: &NGraph,
    cycles: &CycleTuple,
    spec: &CycleSpec,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let mut map = g.map.clone();
    let c = map.color_of_edge(spec.edges[0]);
    // The hexagonal center and the spoke halves in rotation order.
    let center = {
        let (h0, h1) = map.halves_of(spec.edges[0]);
        if matches!(map.kind(map.source(h0)), VertexKind::Hexagonal(_)) {
            map.source(h0)
        } else {
            map.source(h1)
        }
    };
    let center_rot = map.rotation_at(center, None);
    let spoke_halves: Vec<usize> = center_rot
        .iter()
        .copied()
        .filter(|&h| spec.edges.contains(&map.edge_of(h)))
        .collect();
    if spoke_halves.len() != 3 {
        return Err(NGraphError::BadCycle(format!(
            "cycle {} does not emanate from one hexagonal point",
            spec.label
        )));
    }
    // Rotation at the center starting from a spoke: [s1, r1, s2, r2, s3, r3].
    let rot = map.rotation_at(center, Some(spoke_halves[0]));
    let s = [rot[0], rot[2], rot[4]];
    let r = [rot[1], rot[3], rot[5]];
    if r.iter().any(|&h| spec.edges.contains(&map.edge_of(h))) {
        return Err(NGraphError::BadCycle(format!(
            "cycle {} spokes are not alternating at the center",
            spec.label
        )));
    }
    let c_other = map.color_of_half(r[0]);
    // Other cycles may not touch the spokes or the r-edges, and may use at
    // most one of the x/y strands.
    let forbidden: Vec<usize> = spec
        .edges
        .iter()
        .copied()
        .chain(r.iter().map(|&h| map.edge_of(h)))
        .collect();
    // Leaf data at each spoke end: v_i with rotation [s_i, x_i, y_i].
    let mut v = [0usize; 3];
    let mut x = [0usize; 3];
    let mut y = [0usize; 3];
    for i in 0..3 {
        let far = map.twin(s[i]);
        v[i] = map.source(far);
        if !matches!(map.kind(v[i]), VertexKind::Trivalent(_)) {
            return Err(NGraphError::BadCycle(format!(
                "cycle {} leg {} does not end at a trivalent vertex",
                spec.label, i
            )));
        }
        let rot_v = map.rotation_at(v[i], Some(far));
        x[i] = rot_v[1];
        y[i] = rot_v[2];
    }
    let moved: Vec<usize> = x.iter().chain(y.iter()).map(|&h| map.edge_of(h)).collect();
    for other in cycles.specs() {
        if other.label == spec.label {
            continue;
        }
        if other.edges.iter().any(|f| forbidden.contains(f)) {
            return Err(NGraphError::UnsupportedConfiguration(format!(
                "cycle {} runs through the mutating hexagonal point",
                other.label
            )));
        }
        if other
            .edges
            .iter()
            .filter(|f| moved.contains(f))
            .count()
            > 1
        {
            return Err(NGraphError::UnsupportedConfiguration(format!(
                "cycle {} meets the mutating star more than once",
                other.label
            )));
        }
    }

    // New vertices and edges. h_new[i] sits in the slot of r[i].
    let low = c.min(c_other);
    let h_new: Vec<usize> = (0..3)
        .map(|_| map.add_vertex(VertexKind::Hexagonal(low)))
        .collect();
    let beta: Vec<usize> = (0..3).map(|_| map.add_edge(c)).collect();
    // hex_a[i] joins t_i to h_i; hex_b[i] joins h_i to t_{i+1}.
    let hex_a: Vec<usize> = (0..3).map(|_| map.add_edge(c_other)).collect();
    let hex_b: Vec<usize> = (0..3).map(|_| map.add_edge(c_other)).collect();

    // Spokes change color; β edges take the old color.
    for &e in &spec.edges {
        map.set_edge_color(e, c_other);
    }
    // Center: same six slots, colors swapped.
    map.set_rotation(
        center,
        &[
            s[0],
            2 * beta[0],
            s[1],
            2 * beta[1],
            s[2],
            2 * beta[2],
        ],
    );
    // Old spoke ends become trivalent of the other color.
    for i in 0..3 {
        let prev = (i + 2) % 3;
        map.set_kind(v[i], VertexKind::Trivalent(c_other));
        map.set_rotation(
            v[i],
            &[2 * hex_a[i], map.twin(s[i]), 2 * hex_b[prev] + 1],
        );
    }
    // New hexagonal points: [hex_a, y_i, r_i, x_{i+1}, hex_b, β].
    for i in 0..3 {
        let next = (i + 1) % 3;
        map.set_rotation(
            h_new[i],
            &[
                2 * hex_a[i] + 1,
                y[i],
                r[i],
                x[next],
                2 * hex_b[i],
                2 * beta[i] + 1,
            ],
        );
    }

    // Transport the cycles.
    let mut new_specs = Vec::new();
    for other in cycles.specs() {
        if other.label == spec.label {
            new_specs.push(CycleSpec {
                kind: CycleKind::Y,
                edges: spec.edges.clone(),
                label: spec.label,
                plus: !spec.plus,
            });
            continue;
        }
        let mut edges = other.edges.clone();
        let mut kind = other.kind;
        // An end lying on a moved strand extends around the new hexagon.
        for i in 0..3 {
            let next = (i + 1) % 3;
            for (moved_half, ext) in [(y[i], hex_b[i]), (x[next], hex_a[i])] {
                let f = map.edge_of(moved_half);
                if !edges.contains(&f) {
                    continue;
                }
                kind = CycleKind::LongI;
                if edges.first() == Some(&f) {
                    edges.insert(0, ext);
                } else if edges.last() == Some(&f) {
                    edges.push(ext);
                } else {
                    return Err(NGraphError::UnsupportedConfiguration(format!(
                        "cycle {} touches the mutating star mid-chain",
                        other.label
                    )));
                }
            }
        }
        new_specs.push(CycleSpec {
            kind,
            edges,
            label: other.label,
            plus: other.plus,
        });
    }
    let out = NGraph { map };
    out.validate()?;
    let tuple = CycleTuple::new(new_specs);
    tuple.validate(&out.map)?;
    Ok((out, tuple))
}

fn flip_tag(cycles: &mut CycleTuple, label: usize) {
    let specs: Vec<CycleSpec> = cycles
        .specs()
        .iter()
        .map(|s| {
            let mut s = s.clone();
            if s.label == label {
                s.plus = !s.plus;
            }
            s
        })
        .collect();
    *cycles = CycleTuple::new(specs);
}

/// The Legendrian Coxeter mutation `μ = ∏_- μ_γ · ∏_+ μ_γ`.
///
/// Standard tripods take the padding route; tuples of I-cycles take the
/// explicit mutation sequence.
pub fn legendrian_coxeter_mutation(
    g: &NGraph,
    cycles: &CycleTuple,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    if let Some((a, b, c, barred)) = recognize_tripod(g) {
        let padding = coxeter_padding(a, b, c, barred);
        let swapped = color_swap(g)?;
        let (glued, edge_map) = concat_annulus_graph(&padding, &swapped, 0)?;
        let transported = cycles.map_edges(|e| edge_map[e].expect("cycle edge survives gluing"));
        return Ok((glued, transported));
    }
    let mut cur = (g.clone(), cycles.clone());
    let mut order: Vec<(bool, usize)> = cycles.specs().iter().map(|s| (!s.plus, s.label)).collect();
    order.sort();
    for (_, label) in order {
        cur = legendrian_mutate(&cur.0, &cur.1, label)?;
    }
    Ok(cur)
}

/// `μ^r` on the standard tripod `(G(a,b,c), B(a,b,c))`, realized by
/// piling Coxeter paddings with alternating colors.
pub fn legendrian_coxeter_power(
    a: usize,
    b: usize,
    c: usize,
    r: usize,
) -> Result<(NGraph, CycleTuple), NGraphError> {
    let (mut g, mut cycles) = if r % 2 == 0 {
        build_tripod(a, b, c)
    } else {
        let (g0, t0) = build_tripod(a, b, c);
        (color_swap(&g0)?, t0)
    };
    for i in (0..r).rev() {
        let padding = coxeter_padding(a, b, c, i % 2 == 1);
        let (glued, edge_map) = concat_annulus_graph(&padding, &g, 0)?;
        cycles = cycles.map_edges(|e| edge_map[e].expect("cycle edge survives gluing"));
        g = glued;
    }
    Ok((g, cycles))
}

/// Recognize a standard tripod (or its color swap) structurally; returns
/// `(a, b, c, barred)`.
pub fn recognize_tripod(g: &NGraph) -> Option<(usize, usize, usize, bool)> {
    for barred in [false, true] {
        if let Some((a, b, c)) = tripod_params(g, barred) {
            let (reference, _) = build_tripod(a, b, c);
            let reference = if barred {
                color_swap(&reference).ok()?
            } else {
                reference
            };
            if reference.canonical_form() == g.canonical_form() {
                return Some((a, b, c, barred));
            }
        }
    }
    None
}

fn tripod_params(g: &NGraph, barred: bool) -> Option<(usize, usize, usize)> {
    let sigma = if barred { 2 } else { 1 };
    let word = g.boundary_word();
    if word.strands() != 3 {
        return None;
    }
    let letters = word.letters();
    let marks: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, &l)| l != sigma)
        .map(|(i, _)| i)
        .collect();
    if marks.len() != 3 || marks[0] != 0 {
        return None;
    }
    let a = marks[1] - marks[0] - 2;
    let b = marks[2] - marks[1] - 2;
    let c = letters.len() - marks[2] - 2;
    if a >= 1 && b >= 1 && c >= 1 {
        Some((a, b, c))
    } else {
        None
    }
}
