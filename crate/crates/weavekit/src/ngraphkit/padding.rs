//! Annular graphs: the Coxeter paddings and concatenation.

use super::map::{EdgeId, NGraph, VertexKind, WeaveMap, BLUE, RED};
use super::{BraidWord, NGraphError};
use serde::{Deserialize, Serialize};

/// An N-graph on the annulus; circle 0 is the outer boundary, circle 1
/// the inner one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnularNGraph {
    pub map: WeaveMap,
}

impl AnnularNGraph {
    pub fn outer_word(&self) -> BraidWord {
        self.map.boundary_word(0)
    }

    pub fn inner_word(&self) -> BraidWord {
        self.map.boundary_word(1)
    }

    pub fn validate(&self) -> Result<(), NGraphError> {
        if self.map.boundaries().len() != 2 {
            return Err(NGraphError::InvalidMap(
                "annular graph needs two boundary circles".into(),
            ));
        }
        self.map.validate()
    }

    pub fn canonical_form(&self) -> String {
        self.map.anchored_serialization()
    }

    /// The annulus with no interior vertices: every outer position runs
    /// straight to the matching inner position.
    pub fn parallel(word: &BraidWord) -> Self {
        let mut map = WeaveMap::new(word.strands());
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for &l in word.letters() {
            let e = map.add_edge(l as u8);
            let vo = map.add_vertex(VertexKind::Boundary(0));
            let vi = map.add_vertex(VertexKind::Boundary(1));
            outer.push((vo, 2 * e));
            inner.push((vi, 2 * e + 1));
        }
        map.close_boundary(&outer, false);
        map.close_boundary(&inner, true);
        AnnularNGraph { map }
    }
}

/// The Coxeter padding: an annular 3-graph whose outer boundary spells
/// `σ2 σ1^{a+1} σ2 σ1^{b+1} σ2 σ1^{c+1}` and whose inner boundary spells
/// the color-swapped word, built from a cyclic chain of `a+b+c`
/// hexagonal points.
pub fn coxeter_padding(a: usize, b: usize, c: usize, barred: bool) -> AnnularNGraph {
    let params = [a, b, c];
    let mut map = WeaveMap::new(3);

    let hp: Vec<Vec<usize>> = params
        .iter()
        .map(|&p| {
            (0..p)
                .map(|_| map.add_vertex(VertexKind::Hexagonal(BLUE)))
                .collect()
        })
        .collect();
    // Chains between consecutive hexagonal points of one sector.
    let mut red_chain = Vec::new();
    let mut blue_chain = Vec::new();
    for &p in &params {
        red_chain.push((0..p.saturating_sub(1)).map(|_| map.add_edge(RED)).collect::<Vec<_>>());
        blue_chain.push((0..p.saturating_sub(1)).map(|_| map.add_edge(BLUE)).collect::<Vec<_>>());
    }
    // Outer legs.
    let red_out: Vec<usize> = (0..3).map(|_| map.add_edge(RED)).collect();
    let blue_out: Vec<Vec<usize>> = params
        .iter()
        .map(|&p| (0..p).map(|_| map.add_edge(BLUE)).collect())
        .collect();
    let pre: Vec<usize> = (0..3).map(|_| map.add_edge(BLUE)).collect();
    // Inner legs: one blue and p+1 reds per sector.
    let inner_blue: Vec<usize> = (0..3).map(|_| map.add_edge(BLUE)).collect();
    let inner_red: Vec<Vec<usize>> = params
        .iter()
        .map(|&p| (0..=p).map(|_| map.add_edge(RED)).collect())
        .collect();

    for k in 0..3 {
        let p = params[k];
        let next = (k + 1) % 3;
        for j in 0..p {
            let first = j == 0;
            let last = j + 1 == p;
            let pair_a: (usize, usize) = if first {
                // The two outer legs before the radial one.
                (2 * pre[k], 2 * red_out[k])
            } else {
                (2 * blue_chain[k][j - 1] + 1, 2 * red_chain[k][j - 1] + 1)
            };
            let pair_b: (usize, usize) = if last {
                // Attachments into the next sector's inner legs.
                (2 * inner_red[next][0], 2 * inner_blue[next])
            } else {
                (2 * red_chain[k][j], 2 * blue_chain[k][j])
            };
            map.set_rotation(
                hp[k][j],
                &[
                    pair_a.0,
                    pair_a.1,
                    2 * blue_out[k][j],
                    pair_b.0,
                    pair_b.1,
                    2 * inner_red[k][j + 1],
                ],
            );
        }
    }

    // Outer circle, anchored at sector 0's σ2 endpoint.
    let mut outer = Vec::new();
    for k in 0..3 {
        let next = (k + 1) % 3;
        let mut legs = vec![red_out[k]];
        legs.extend(blue_out[k].iter().copied());
        legs.push(pre[next]);
        for e in legs {
            let v = map.add_vertex(VertexKind::Boundary(0));
            outer.push((v, 2 * e + 1));
        }
    }
    map.close_boundary(&outer, false);

    // Inner circle.
    let mut inner = Vec::new();
    for k in 0..3 {
        let mut legs = vec![inner_blue[k]];
        legs.extend(inner_red[k].iter().copied());
        for e in legs {
            let v = map.add_vertex(VertexKind::Boundary(1));
            inner.push((v, 2 * e + 1));
        }
    }
    map.close_boundary(&inner, true);

    let mut g = AnnularNGraph { map };
    if barred {
        for e in 0..g.map.edge_count() {
            match g.map.color_of_edge(e) {
                BLUE => g.map.set_edge_color(e, RED),
                RED => g.map.set_edge_color(e, BLUE),
                _ => {}
            }
        }
    }
    g
}

fn remap_parity(h: usize, new_edge: EdgeId) -> usize {
    2 * new_edge + (h & 1)
}

struct Splice<'a> {
    map: &'a WeaveMap,
    edge_map: Vec<Option<EdgeId>>,
    /// For merged leg edges: the new half carried by the far (interior)
    /// side of this map's leg.
    far_half: Vec<Option<usize>>,
}

impl<'a> Splice<'a> {
    fn half(&self, h: usize) -> usize {
        if let Some(nh) = self.far_half[self.map.edge_of(h)] {
            return nh;
        }
        remap_parity(h, self.edge_map[self.map.edge_of(h)].expect("edge survives"))
    }
}

/// Glue an annulus onto a disk graph whose outer word matches the
/// annulus's inner word under the cyclic `offset`: inner position `p`
/// meets disk position `p + offset`. Returns the glued disk graph and
/// the edge relabeling of the inner graph.
pub fn concat_annulus_graph(
    annulus: &AnnularNGraph,
    disk: &NGraph,
    offset: usize,
) -> Result<(NGraph, Vec<Option<EdgeId>>), NGraphError> {
    let merged = splice(&annulus.map, &disk.map, offset, false)?;
    Ok((NGraph { map: merged.0 }, merged.1))
}

/// Glue an annulus onto another annulus (outer of `inner` meets inner of
/// `outer`). Returns the combined annulus and the edge relabeling of the
/// inner piece.
pub fn concat_annulus_annulus(
    outer: &AnnularNGraph,
    inner: &AnnularNGraph,
    offset: usize,
) -> Result<(AnnularNGraph, Vec<Option<EdgeId>>), NGraphError> {
    let merged = splice(&outer.map, &inner.map, offset, true)?;
    Ok((AnnularNGraph { map: merged.0 }, merged.1))
}

fn splice(
    annulus: &WeaveMap,
    inner_map: &WeaveMap,
    offset: usize,
    inner_is_annulus: bool,
) -> Result<(WeaveMap, Vec<Option<EdgeId>>), NGraphError> {
    if annulus.n_strands != inner_map.n_strands {
        return Err(NGraphError::WrongStrandCount {
            expected: annulus.n_strands,
            got: inner_map.n_strands,
        });
    }
    let ring = annulus.boundaries()[1].clone();
    let disk_outer = inner_map.boundaries()[0].clone();
    let l = ring.len();
    if disk_outer.len() != l {
        return Err(NGraphError::BoundaryMismatch(0));
    }
    let is_arc = |m: &WeaveMap, e: EdgeId| m.color_of_edge(e) == 0;

    let mut out = WeaveMap::new(annulus.n_strands);

    // Vertices: inner-map interior, then annulus interior.
    let mut vmap_d = vec![usize::MAX; inner_map.vertex_count()];
    for v in 0..inner_map.vertex_count() {
        match inner_map.kind(v) {
            VertexKind::Boundary(_) => {}
            k => vmap_d[v] = out.add_vertex(k),
        }
    }
    let mut vmap_a = vec![usize::MAX; annulus.vertex_count()];
    for v in 0..annulus.vertex_count() {
        match annulus.kind(v) {
            VertexKind::Boundary(_) => {}
            k => vmap_a[v] = out.add_vertex(k),
        }
    }

    // Inner-map edges keep their relative order (arcs dropped).
    let mut dmap: Vec<Option<EdgeId>> = vec![None; inner_map.edge_count()];
    for e in 0..inner_map.edge_count() {
        if !is_arc(inner_map, e) {
            dmap[e] = Some(out.add_edge(inner_map.color_of_edge(e)));
        }
    }
    // Annulus edges except arcs and the legs that merge.
    let mut amap: Vec<Option<EdgeId>> = vec![None; annulus.edge_count()];
    let mut afar: Vec<Option<usize>> = vec![None; annulus.edge_count()];
    let dfar: Vec<Option<usize>> = vec![None; inner_map.edge_count()];
    let merged_legs: Vec<EdgeId> = ring
        .iter()
        .map(|&w| annulus.edge_of(annulus.graph_half_at(w)))
        .collect();
    for e in 0..annulus.edge_count() {
        if !is_arc(annulus, e) && !merged_legs.contains(&e) {
            amap[e] = Some(out.add_edge(annulus.color_of_edge(e)));
        }
    }
    // Merge each inner leg of the annulus with the matching disk leg.
    for (p, &w) in ring.iter().enumerate() {
        let q = (p + offset) % l;
        let v_disk = disk_outer[q];
        let h_a = annulus.graph_half_at(w);
        let h_d = inner_map.graph_half_at(v_disk);
        if annulus.color_of_half(h_a) != inner_map.color_of_half(h_d) {
            return Err(NGraphError::BoundaryMismatch(p));
        }
        let e_d = inner_map.edge_of(h_d);
        let e_a = annulus.edge_of(h_a);
        // The merged edge keeps the disk id; the annulus far half becomes
        // its odd half, the disk far half its even half.
        afar[e_a] = Some(2 * dmap[e_d].expect("leg is a graph edge") + 1);
    }
    // The far half of each merged disk leg takes the even side.
    let mut dfar = dfar;
    for (p, &_w) in ring.iter().enumerate() {
        let q = (p + offset) % l;
        let h_d = inner_map.graph_half_at(disk_outer[q]);
        let e_d = inner_map.edge_of(h_d);
        dfar[e_d] = Some(2 * dmap[e_d].unwrap());
    }

    let disk_splice = Splice {
        map: inner_map,
        edge_map: dmap.clone(),
        far_half: dfar,
    };
    let ann_splice = Splice {
        map: annulus,
        edge_map: amap,
        far_half: afar,
    };

    // Rotations of surviving vertices.
    for v in 0..inner_map.vertex_count() {
        if vmap_d[v] == usize::MAX {
            continue;
        }
        let rot: Vec<usize> = inner_map
            .rotation_at(v, None)
            .into_iter()
            .map(|h| disk_splice.half(h))
            .collect();
        out.set_rotation(vmap_d[v], &rot);
    }
    for v in 0..annulus.vertex_count() {
        if vmap_a[v] == usize::MAX {
            continue;
        }
        let rot: Vec<usize> = annulus
            .rotation_at(v, None)
            .into_iter()
            .map(|h| ann_splice.half(h))
            .collect();
        out.set_rotation(vmap_a[v], &rot);
    }

    // Boundaries: the annulus outer circle always survives.
    let outer_spec: Vec<(usize, usize)> = annulus.boundaries()[0]
        .iter()
        .map(|&v| {
            let h = ann_splice.half(annulus.graph_half_at(v));
            (out.add_vertex(VertexKind::Boundary(0)), h)
        })
        .collect();
    out.close_boundary(&outer_spec, false);
    if inner_is_annulus {
        let inner_spec: Vec<(usize, usize)> = inner_map.boundaries()[1]
            .iter()
            .map(|&v| {
                let h = disk_splice.half(inner_map.graph_half_at(v));
                (out.add_vertex(VertexKind::Boundary(1)), h)
            })
            .collect();
        out.close_boundary(&inner_spec, true);
    }
    out.validate().map_err(|e| {
        NGraphError::InvalidMap(format!("splice produced an invalid map: {e}"))
    })?;
    Ok((out, dmap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ngraphkit::{build_tripod, quiver_of};

    #[test]
    fn padding_words() {
        for (a, b, c) in [(1, 1, 1), (2, 2, 2), (3, 2, 4)] {
            let pad = coxeter_padding(a, b, c, false);
            pad.validate().unwrap();
            assert_eq!(pad.outer_word(), BraidWord::tripod(a, b, c));
            assert_eq!(
                pad.inner_word(),
                BraidWord::tripod(a, b, c).color_swapped()
            );
            let barred = coxeter_padding(a, b, c, true);
            barred.validate().unwrap();
            assert_eq!(barred.outer_word(), BraidWord::tripod(a, b, c).color_swapped());
        }
    }

    #[test]
    fn padding_glues_onto_swapped_tripod() {
        for (a, b, c) in [(1, 1, 1), (2, 2, 2), (1, 2, 3)] {
            let pad = coxeter_padding(a, b, c, false);
            let (g, cycles) = build_tripod(a, b, c);
            let swapped = super::super::color_swap(&g).unwrap();
            let (glued, edge_map) = concat_annulus_graph(&pad, &swapped, 0).unwrap();
            glued.validate().unwrap();
            assert_eq!(glued.boundary_word(), BraidWord::tripod(a, b, c));
            // Cycles carry over; the quiver is unchanged.
            let moved = cycles.map_edges(|e| edge_map[e].unwrap());
            let q0 = quiver_of(&swapped, &cycles).unwrap();
            let q1 = quiver_of(&glued, &moved).unwrap();
            assert_eq!(q0, q1);
        }
    }

    #[test]
    fn paddings_stack() {
        let c0 = coxeter_padding(2, 2, 2, false);
        let c1 = coxeter_padding(2, 2, 2, true);
        let (stacked, _) = concat_annulus_annulus(&c0, &c1, 0).unwrap();
        stacked.validate().unwrap();
        assert_eq!(stacked.outer_word(), BraidWord::tripod(2, 2, 2));
        assert_eq!(stacked.inner_word(), BraidWord::tripod(2, 2, 2));
    }

    #[test]
    fn parallel_annulus_is_identity() {
        let (g, _) = build_tripod(2, 1, 2);
        let pad = AnnularNGraph::parallel(&g.boundary_word());
        let (glued, _) = concat_annulus_graph(&pad, &g, 0).unwrap();
        assert_eq!(glued.canonical_form(), g.canonical_form());
    }

    #[test]
    fn mismatched_words_rejected() {
        let (g, _) = build_tripod(1, 1, 1);
        let pad = coxeter_padding(1, 1, 2, false);
        assert!(concat_annulus_graph(&pad, &g, 0).is_err());
    }

    #[test]
    fn stacking_is_associative() {
        let (g, _) = build_tripod(1, 1, 1);
        let c = coxeter_padding(1, 1, 1, false);
        let cbar = coxeter_padding(1, 1, 1, true);
        let swapped_then_g = {
            let (cc, _) = concat_annulus_annulus(&c, &cbar, 0).unwrap();
            let (r, _) = concat_annulus_graph(&cc, &g, 0).unwrap();
            r
        };
        let one_at_a_time = {
            let (inner, _) = concat_annulus_graph(&cbar, &g, 0).unwrap();
            let (r, _) = concat_annulus_graph(&c, &inner, 0).unwrap();
            r
        };
        assert_eq!(swapped_then_g.canonical_form(), one_at_a_time.canonical_form());
    }
}
