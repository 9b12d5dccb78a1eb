//! Constructors for the standard families: the linear zig-zag 2-graphs
//! and the tripod 3-graphs, together with their chosen cycle tuples.

use super::cycles::{CycleKind, CycleSpec, CycleTuple};
use super::map::{NGraph, VertexKind, WeaveMap, BLUE, RED};
use super::NGraphError;

/// The 2-graph with a zig-zag path of `n+1` trivalent vertices, `n`
/// interior edges carrying the I-cycles `γ_1..γ_n`, and boundary
/// `σ1^{n+3}`. Its intersection quiver is the alternating path.
pub fn build_linear(n: usize) -> (NGraph, CycleTuple) {
    assert!(n >= 1);
    let mut map = WeaveMap::new(2);
    let verts: Vec<_> = (0..=n)
        .map(|_| map.add_vertex(VertexKind::Trivalent(BLUE)))
        .collect();
    let interior: Vec<_> = (0..n).map(|_| map.add_edge(BLUE)).collect();
    // Legs: v_0 gets two, the last vertex two, middles one each.
    let leg = |map: &mut WeaveMap| -> usize { map.add_edge(BLUE) };
    let v0_left = leg(&mut map);
    let v0_down = leg(&mut map);
    let mut mid_legs = Vec::new();
    for _ in 1..n {
        mid_legs.push(leg(&mut map));
    }
    let last_cw = leg(&mut map);
    let last_ccw = leg(&mut map);

    // Rotations. Even-indexed vertices hang low, odd ones high. The even
    // half of edge e is written 2e; interior edge i runs v_i → v_{i+1}
    // with its even half at v_i.
    let eh = |e: usize| 2 * e;
    let th = |e: usize| 2 * e + 1;
    map.set_rotation(verts[0], &[eh(interior[0]), eh(v0_left), eh(v0_down)]);
    for i in 1..n {
        let prev = th(interior[i - 1]);
        let next = eh(interior[i]);
        let l = eh(mid_legs[i - 1]);
        if i % 2 == 1 {
            map.set_rotation(verts[i], &[l, prev, next]);
        } else {
            map.set_rotation(verts[i], &[l, next, prev]);
        }
    }
    map.set_rotation(verts[n], &[th(interior[n - 1]), eh(last_cw), eh(last_ccw)]);

    // Boundary, counterclockwise from v_0's left leg.
    let mut endpoints: Vec<(usize, usize)> = Vec::new();
    let stub = |map: &mut WeaveMap, e: usize| {
        let v = map.add_vertex(VertexKind::Boundary(0));
        (v, th(e))
    };
    endpoints.push(stub(&mut map, v0_left));
    endpoints.push(stub(&mut map, v0_down));
    let mut i = 2;
    while i < n {
        endpoints.push(stub(&mut map, mid_legs[i - 1]));
        i += 2;
    }
    if n % 2 == 0 {
        endpoints.push(stub(&mut map, last_cw));
        endpoints.push(stub(&mut map, last_ccw));
        let mut j = n - 1;
        loop {
            endpoints.push(stub(&mut map, mid_legs[j - 1]));
            if j == 1 {
                break;
            }
            j -= 2;
        }
    } else {
        endpoints.push(stub(&mut map, last_cw));
        endpoints.push(stub(&mut map, last_ccw));
        if n >= 3 {
            let mut j = n - 2;
            loop {
                endpoints.push(stub(&mut map, mid_legs[j - 1]));
                if j <= 2 {
                    break;
                }
                j -= 2;
            }
        }
    }
    map.close_boundary(&endpoints, false);

    let cycles = CycleTuple::new(
        (0..n)
            .map(|i| CycleSpec {
                kind: CycleKind::I,
                edges: vec![interior[i]],
                label: i + 1,
                plus: i % 2 == 0,
            })
            .collect(),
    );
    (NGraph { map }, cycles)
}

/// The tripod 3-graph: one central hexagonal point, three red spokes to
/// the boundary, and blue zig-zag fans of `a`, `b`, `c` trivalent
/// vertices. Boundary `σ2 σ1^{a+1} σ2 σ1^{b+1} σ2 σ1^{c+1}`.
pub fn build_tripod(a: usize, b: usize, c: usize) -> (NGraph, CycleTuple) {
    assert!(a >= 1 && b >= 1 && c >= 1);
    let mut map = WeaveMap::new(3);
    let center = map.add_vertex(VertexKind::Hexagonal(BLUE));
    let spokes: Vec<usize> = (0..3).map(|_| map.add_edge(BLUE)).collect();
    let reds: Vec<usize> = (0..3).map(|_| map.add_edge(RED)).collect();
    // Center rotation: [s_a, r_ab, s_b, r_bc, s_c, r_ca].
    map.set_rotation(
        center,
        &[
            2 * spokes[0],
            2 * reds[0],
            2 * spokes[1],
            2 * reds[1],
            2 * spokes[2],
            2 * reds[2],
        ],
    );

    struct Leg {
        edges: Vec<usize>,
        // Boundary legs in the per-sector counterclockwise order, as
        // graph-edge halves at their future endpoints.
        boundary: Vec<usize>,
    }

    let build_leg = |map: &mut WeaveMap, p: usize, spoke: usize| -> Leg {
        let verts: Vec<usize> = (0..p)
            .map(|_| map.add_vertex(VertexKind::Trivalent(BLUE)))
            .collect();
        let edges: Vec<usize> = (0..p - 1).map(|_| map.add_edge(BLUE)).collect();
        let legs: Vec<usize> = (0..p + 1).map(|_| map.add_edge(BLUE)).collect();
        // Edge f_j joins w_j → w_{j+1}, even half at w_j. The spoke's even
        // half sits at the center.
        for j in 0..p {
            let prev = if j == 0 { 2 * spoke + 1 } else { 2 * edges[j - 1] + 1 };
            if j + 1 == p {
                // Last vertex carries legs p-1 (clockwise) and p.
                map.set_rotation(verts[j], &[prev, 2 * legs[p - 1], 2 * legs[p]]);
            } else if j % 2 == 0 {
                map.set_rotation(verts[j], &[prev, 2 * edges[j], 2 * legs[j]]);
            } else {
                map.set_rotation(verts[j], &[prev, 2 * legs[j], 2 * edges[j]]);
            }
        }
        // Per-sector boundary order: even vertices ascending, then the
        // last vertex's pair, then remaining odd vertices descending.
        let mut order: Vec<usize> = Vec::new();
        let mut j = 1; // vertex index w_2 is verts[1]
        while j + 1 < p {
            order.push(legs[j]);
            j += 2;
        }
        order.push(legs[p - 1]);
        order.push(legs[p]);
        let mut j: isize = if p % 2 == 0 { p as isize - 2 } else { p as isize - 3 };
        while j >= 0 {
            order.push(legs[j as usize]);
            j -= 2;
        }
        Leg {
            edges,
            boundary: order.iter().map(|&e| 2 * e + 1).collect(),
        }
    };

    let legs = [
        build_leg(&mut map, a, spokes[0]),
        build_leg(&mut map, b, spokes[1]),
        build_leg(&mut map, c, spokes[2]),
    ];

    // Boundary counterclockwise from the red endpoint before leg a.
    let mut endpoints: Vec<(usize, usize)> = Vec::new();
    for (i, leg) in legs.iter().enumerate() {
        let red_half = 2 * reds[(i + 2) % 3] + 1;
        let v = map.add_vertex(VertexKind::Boundary(0));
        endpoints.push((v, red_half));
        for &h in &leg.boundary {
            let v = map.add_vertex(VertexKind::Boundary(0));
            endpoints.push((v, h));
        }
    }
    map.close_boundary(&endpoints, false);

    let mut specs = vec![CycleSpec {
        kind: CycleKind::Y,
        edges: spokes.clone(),
        label: 1,
        plus: true,
    }];
    let mut label = 2;
    for leg in &legs {
        for (j, &e) in leg.edges.iter().enumerate() {
            specs.push(CycleSpec {
                kind: CycleKind::I,
                edges: vec![e],
                label,
                plus: j % 2 == 1,
            });
            label += 1;
        }
    }
    (NGraph { map }, CycleTuple::new(specs))
}

/// Exchange colors 1 and 2 of a 3-graph.
pub fn color_swap(g: &NGraph) -> Result<NGraph, NGraphError> {
    if g.map.n_strands != 3 {
        return Err(NGraphError::WrongStrandCount {
            expected: 3,
            got: g.map.n_strands,
        });
    }
    let mut map = g.map.clone();
    for e in 0..map.edge_count() {
        match map.color_of_edge(e) {
            BLUE => map.set_edge_color(e, RED),
            RED => map.set_edge_color(e, BLUE),
            _ => {}
        }
    }
    for v in 0..map.vertex_count() {
        if let VertexKind::Trivalent(c) = map.kind(v) {
            map.set_kind(v, VertexKind::Trivalent(3 - c));
        }
    }
    Ok(NGraph { map })
}

/// A 2-graph with two trivalent vertices joined by three parallel edges
/// and an empty boundary; it has faces not touching the boundary.
pub fn theta_graph() -> NGraph {
    let mut map = WeaveMap::new(2);
    let u = map.add_vertex(VertexKind::Trivalent(BLUE));
    let v = map.add_vertex(VertexKind::Trivalent(BLUE));
    let e: Vec<usize> = (0..3).map(|_| map.add_edge(BLUE)).collect();
    map.set_rotation(u, &[2 * e[0], 2 * e[1], 2 * e[2]]);
    map.set_rotation(v, &[2 * e[2] + 1, 2 * e[1] + 1, 2 * e[0] + 1]);
    map.close_boundary(&[], false);
    map.outer_face_hint = Some(2 * e[2]);
    NGraph { map }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_shapes() {
        for n in 1..=7 {
            let (g, cycles) = build_linear(n);
            g.validate().unwrap();
            assert_eq!(g.boundary_word().to_string(), format!("s1^{}", n + 3));
            assert_eq!(cycles.specs().len(), n);
        }
    }

    #[test]
    fn linear_one_shape() {
        let (g, _) = build_linear(1);
        assert_eq!(g.boundary_word().to_string(), "s1^4");
        // 2 trivalent vertices + 4 endpoints.
        assert_eq!(
            (0..g.map.vertex_count())
                .filter(|&v| matches!(g.map.kind(v), VertexKind::Trivalent(_)))
                .count(),
            2
        );
    }

    #[test]
    fn tripod_shapes() {
        for (a, b, c) in [(1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 2, 4)] {
            let (g, cycles) = build_tripod(a, b, c);
            g.validate().unwrap();
            let mut expect = String::new();
            for p in [a, b, c] {
                expect.push_str(&format!("s2s1^{}", p + 1));
            }
            let expect = expect.replace("s1^1", "s1");
            assert_eq!(g.boundary_word().to_string(), expect);
            assert_eq!(cycles.specs().len(), a + b + c - 2);
        }
    }

    #[test]
    fn color_swap_is_involutive_and_swaps_word() {
        let (g, _) = build_tripod(2, 1, 3);
        let swapped = color_swap(&g).unwrap();
        swapped.validate().unwrap();
        assert_eq!(
            swapped.boundary_word(),
            g.boundary_word().color_swapped()
        );
        assert_eq!(color_swap(&swapped).unwrap(), g);
    }

    #[test]
    fn linear_faces_all_touch_boundary() {
        let (g, _) = build_linear(1);
        let faces = g.faces();
        let material: Vec<_> = faces.iter().filter(|f| f.material).collect();
        assert_eq!(material.len(), 4);
        assert!(material.iter().all(|f| f.touches_boundary()));
    }

    #[test]
    fn theta_graph_has_interior_face() {
        let g = theta_graph();
        g.validate().unwrap();
        let faces = g.faces();
        let interior = faces
            .iter()
            .filter(|f| f.material && !f.touches_boundary())
            .count();
        assert!(interior >= 1);
    }

    #[test]
    fn tripod_faces_all_touch_boundary() {
        for (a, b, c) in [(1, 1, 1), (2, 2, 2), (3, 2, 4)] {
            let (g, _) = build_tripod(a, b, c);
            for f in g.faces() {
                if f.material {
                    assert!(f.touches_boundary());
                }
            }
        }
    }
}
