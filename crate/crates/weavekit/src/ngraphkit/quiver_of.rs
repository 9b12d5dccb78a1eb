//! Intersection quivers: signed intersections of cycles computed at
//! shared trivalent vertices with the clockwise rotation convention.

use super::cycles::{half_at, CycleTuple};
use super::map::NGraph;
use super::NGraphError;
use crate::clusterkit::Quiver;
use std::collections::HashMap;

/// The quiver of a pair `(G, B)`: vertex per cycle label, entry
/// `b_{i,j}` the algebraic intersection number.
pub fn quiver_of(g: &NGraph, cycles: &CycleTuple) -> Result<Quiver, NGraphError> {
    cycles.validate(&g.map)?;
    let n = cycles.len();
    let specs = cycles.specs();
    // Map labels onto 0..n in label order.
    let mut labels: Vec<usize> = specs.iter().map(|s| s.label).collect();
    labels.sort();
    let index_of: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

    // Edge-sharing between distinct cycles is out of scope.
    let mut edge_owner: HashMap<usize, usize> = HashMap::new();
    for s in specs {
        for &e in &s.edges {
            if let Some(&other) = edge_owner.get(&e) {
                if other != s.label {
                    return Err(NGraphError::UnsupportedConfiguration(format!(
                        "cycles {other} and {} share an edge",
                        s.label
                    )));
                }
            }
            edge_owner.insert(e, s.label);
        }
    }

    let mut b = vec![vec![0i64; n]; n];
    for (ia, sa) in specs.iter().enumerate() {
        for sb in specs.iter().skip(ia + 1) {
            let leaves_a = sa.leaf_incidences(&g.map);
            let leaves_b = sb.leaf_incidences(&g.map);
            let mut shared = 0usize;
            let mut total = 0i64;
            for &(va, ea) in &leaves_a {
                for &(vb, eb) in &leaves_b {
                    if va != vb {
                        continue;
                    }
                    shared += 1;
                    let ha = half_at(&g.map, ea, va);
                    let hb = half_at(&g.map, eb, vb);
                    if g.map.rot_next(ha) == hb {
                        total += 1;
                    } else if g.map.rot_next(hb) == ha {
                        total -= 1;
                    } else {
                        return Err(NGraphError::UnsupportedConfiguration(format!(
                            "cycles {} and {} meet a vertex without adjacency",
                            sa.label, sb.label
                        )));
                    }
                }
            }
            if shared > 1 {
                return Err(NGraphError::UnsupportedConfiguration(format!(
                    "cycles {} and {} share {shared} vertices",
                    sa.label, sb.label
                )));
            }
            let i = index_of[&sa.label];
            let j = index_of[&sb.label];
            b[i][j] = total;
            b[j][i] = -total;
        }
    }
    let mut q = Quiver::new(n, n);
    for i in 0..n {
        for j in 0..n {
            if b[i][j] > 0 {
                q.add_arrow(i, j, b[i][j] as usize);
            }
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ngraphkit::{build_linear, build_tripod};

    fn arrows(q: &Quiver) -> Vec<(usize, usize)> {
        q.arrows().map(|(a, b, _)| (a, b)).collect()
    }

    #[test]
    fn linear_quiver_is_alternating_path() {
        for n in 1..=7 {
            let (g, cycles) = build_linear(n);
            let q = quiver_of(&g, &cycles).unwrap();
            assert_eq!(q.m(), n);
            for i in 0..n.saturating_sub(1) {
                let expect = if i % 2 == 0 { 1 } else { -1 };
                assert_eq!(q.b(i, i + 1), expect, "edge {i} of A{n}");
            }
            // No long-range arrows.
            for i in 0..n {
                for j in i + 2..n {
                    assert_eq!(q.b(i, j), 0);
                }
            }
        }
    }

    #[test]
    fn tripod_quiver_matches_reference_shape() {
        for (a, b, c) in [(1, 1, 1), (2, 2, 2), (3, 2, 4), (4, 4, 4), (1, 2, 3)] {
            let (g, cycles) = build_tripod(a, b, c);
            let q = quiver_of(&g, &cycles).unwrap();
            assert_eq!(q, reference_tripod(a, b, c), "tripod ({a},{b},{c})");
        }
    }

    #[test]
    fn disjoint_cycles_have_no_arrow() {
        let (g, cycles) = build_linear(3);
        let q = quiver_of(&g, &cycles).unwrap();
        assert_eq!(q.b(0, 2), 0);
    }

    #[test]
    fn antisymmetry() {
        let (g, cycles) = build_tripod(2, 3, 2);
        let q = quiver_of(&g, &cycles).unwrap();
        for i in 0..q.m() {
            for j in 0..q.m() {
                assert_eq!(q.b(i, j), -q.b(j, i));
            }
        }
    }

    /// The tripod quiver: central vertex 0 with arrows into each leg,
    /// legs alternately oriented.
    pub fn reference_tripod(a: usize, b: usize, c: usize) -> Quiver {
        let n = a + b + c - 2;
        let mut q = Quiver::new(n, n);
        let mut base = 1;
        for p in [a, b, c] {
            if p >= 2 {
                q.add_arrow(0, base, 1);
                for j in 0..p.saturating_sub(2) {
                    let u = base + j;
                    if j % 2 == 0 {
                        q.add_arrow(u + 1, u, 1);
                    } else {
                        q.add_arrow(u, u + 1, 1);
                    }
                }
                base += p - 1;
            }
        }
        q
    }
}
