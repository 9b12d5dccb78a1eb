//! The half-edge combinatorial map underlying an N-graph.
//!
//! Half-edges `2e` and `2e+1` are the two sides of edge `e`; `next`
//! walks counterclockwise around the source vertex. The disk boundary is
//! part of the map: each boundary endpoint is a 3-valent vertex carrying
//! its graph edge and the two circle arcs, so faces of the complement
//! come straight out of the face traversal `h ↦ σ⁻¹(twin(h))`.

use super::{BraidWord, NGraphError};
use serde::{Deserialize, Serialize};

pub type HalfId = usize;
pub type VertexId = usize;
pub type EdgeId = usize;

/// Color index of σ1 edges.
pub const BLUE: u8 = 1;
/// Color index of σ2 edges.
pub const RED: u8 = 2;
/// Color tag for boundary arcs.
pub const ARC: u8 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexKind {
    /// Monochromatic 3-valent vertex of the given color.
    Trivalent(u8),
    /// 6-valent vertex alternating between colors `c` and `c+1`.
    Hexagonal(u8),
    /// Transversal crossing of two edges with colors differing by > 1.
    Crossing(u8, u8),
    /// An endpoint on the given boundary circle.
    Boundary(usize),
}

/// A face of the map: its half-edge orbit and the boundary arcs it runs
/// along, as `(circle, arc index)` pairs.
#[derive(Debug, Clone)]
pub struct Face {
    pub halves: Vec<HalfId>,
    pub arcs: Vec<(usize, usize)>,
    pub material: bool,
    /// Set when the face was designated boundary-adjacent by a hint on a
    /// map whose circles carry no endpoints.
    pub hinted: bool,
}

impl Face {
    pub fn touches_boundary(&self) -> bool {
        !self.arcs.is_empty() || self.hinted
    }
}

/// The raw map. `boundaries[c]` lists the endpoint vertices of circle `c`
/// in counterclockwise order; circle 0 is the outer one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeaveMap {
    pub n_strands: usize,
    kinds: Vec<VertexKind>,
    next: Vec<HalfId>,
    vert: Vec<VertexId>,
    color: Vec<u8>,
    boundaries: Vec<Vec<VertexId>>,
    /// Arc edges per circle, `arc_edges[c][j]` joining endpoint `j` to
    /// `j+1`; the even half sits at endpoint `j` pointing counterclockwise.
    arc_edges: Vec<Vec<EdgeId>>,
    /// For maps whose graph component is disjoint from all circles, a
    /// half-edge on the face regarded as touching the boundary.
    pub outer_face_hint: Option<HalfId>,
}

impl WeaveMap {
    pub fn new(n_strands: usize) -> Self {
        WeaveMap {
            n_strands,
            kinds: Vec::new(),
            next: Vec::new(),
            vert: Vec::new(),
            color: Vec::new(),
            boundaries: Vec::new(),
            arc_edges: Vec::new(),
            outer_face_hint: None,
        }
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> VertexId {
        self.kinds.push(kind);
        self.kinds.len() - 1
    }

    /// Allocate an edge; both halves start unattached (`vert = MAX`).
    pub fn add_edge(&mut self, color: u8) -> EdgeId {
        let e = self.color.len();
        self.color.push(color);
        self.next.push(usize::MAX);
        self.next.push(usize::MAX);
        self.vert.push(usize::MAX);
        self.vert.push(usize::MAX);
        e
    }

    pub fn twin(&self, h: HalfId) -> HalfId {
        h ^ 1
    }

    pub fn edge_of(&self, h: HalfId) -> EdgeId {
        h / 2
    }

    pub fn halves_of(&self, e: EdgeId) -> (HalfId, HalfId) {
        (2 * e, 2 * e + 1)
    }

    pub fn color_of_edge(&self, e: EdgeId) -> u8 {
        self.color[e]
    }

    pub fn set_edge_color(&mut self, e: EdgeId, c: u8) {
        self.color[e] = c;
    }

    pub fn color_of_half(&self, h: HalfId) -> u8 {
        self.color[h / 2]
    }

    pub fn source(&self, h: HalfId) -> VertexId {
        self.vert[h]
    }

    pub fn target(&self, h: HalfId) -> VertexId {
        self.vert[h ^ 1]
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kinds[v]
    }

    pub fn set_kind(&mut self, v: VertexId, k: VertexKind) {
        self.kinds[v] = k;
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.color.len()
    }

    pub fn half_count(&self) -> usize {
        self.next.len()
    }

    pub fn boundaries(&self) -> &[Vec<VertexId>] {
        &self.boundaries
    }

    pub fn arc_edge(&self, circle: usize, j: usize) -> EdgeId {
        self.arc_edges[circle][j]
    }

    /// Replace the endpoint order of a circle; callers must rewire the
    /// arc rotations to match.
    pub fn set_boundary_order(&mut self, circle: usize, order: &[VertexId]) {
        self.boundaries[circle] = order.to_vec();
    }

    /// Install the counterclockwise rotation at `v`.
    pub fn set_rotation(&mut self, v: VertexId, halves: &[HalfId]) {
        for (i, &h) in halves.iter().enumerate() {
            self.vert[h] = v;
            self.next[h] = halves[(i + 1) % halves.len()];
        }
    }

    /// σ: next half counterclockwise at the same vertex.
    pub fn rot_next(&self, h: HalfId) -> HalfId {
        self.next[h]
    }

    /// σ⁻¹ by cycling (vertex degrees are at most 6).
    pub fn rot_prev(&self, h: HalfId) -> HalfId {
        let mut cur = h;
        loop {
            let n = self.next[cur];
            if n == h {
                return cur;
            }
            cur = n;
        }
    }

    /// The rotation cycle at `v`, starting from `start` when given.
    pub fn rotation_at(&self, v: VertexId, start: Option<HalfId>) -> Vec<HalfId> {
        let s = start.unwrap_or_else(|| {
            (0..self.half_count())
                .find(|&h| self.vert[h] == v)
                .expect("vertex has a half-edge")
        });
        let mut out = vec![s];
        let mut cur = self.next[s];
        while cur != s {
            out.push(cur);
            cur = self.next[cur];
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation_at(v, None).len()
    }

    /// Create a boundary circle from endpoint vertices listed
    /// counterclockwise, each paired with its graph-edge half. Installs
    /// the arc edges and endpoint rotations. `inner = true` for an
    /// annulus hole, whose endpoints see the material on the outside.
    pub fn close_boundary(
        &mut self,
        endpoints: &[(VertexId, HalfId)],
        inner: bool,
    ) -> usize {
        let circle = self.boundaries.len();
        let l = endpoints.len();
        let mut arcs = Vec::with_capacity(l);
        for _ in 0..l {
            arcs.push(self.add_edge(ARC));
        }
        for (j, &(v, edge_half)) in endpoints.iter().enumerate() {
            self.kinds[v] = VertexKind::Boundary(circle);
            let out_arc = 2 * arcs[j];
            let in_arc = 2 * arcs[(j + l - 1) % l] + 1;
            if inner {
                self.set_rotation(v, &[edge_half, out_arc, in_arc]);
            } else {
                self.set_rotation(v, &[out_arc, edge_half, in_arc]);
            }
            self.vert[edge_half] = v;
        }
        self.boundaries.push(endpoints.iter().map(|&(v, _)| v).collect());
        self.arc_edges.push(arcs);
        circle
    }

    /// The braid word read counterclockwise along a circle.
    pub fn boundary_word(&self, circle: usize) -> BraidWord {
        let letters: Vec<usize> = self.boundaries[circle]
            .iter()
            .map(|&v| {
                let h = self.graph_half_at(v);
                self.color_of_half(h) as usize
            })
            .collect();
        BraidWord::new(self.n_strands, letters).expect("edge colors are valid letters")
    }

    /// The unique graph-edge half at a boundary endpoint.
    pub fn graph_half_at(&self, v: VertexId) -> HalfId {
        *self
            .rotation_at(v, None)
            .iter()
            .find(|&&h| self.color_of_half(h) != ARC)
            .expect("endpoint carries a graph edge")
    }

    /// Face containing `h`, via `h ↦ σ⁻¹(twin(h))`.
    pub fn face_of(&self, h: HalfId) -> Vec<HalfId> {
        let mut out = vec![h];
        let mut cur = self.rot_prev(self.twin(h));
        while cur != h {
            out.push(cur);
            cur = self.rot_prev(self.twin(cur));
        }
        out
    }

    /// All faces. Outside faces (beyond the outer circle, inside holes)
    /// are flagged non-material.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = vec![false; self.half_count()];
        let mut outside: Vec<HalfId> = Vec::new();
        for (c, arcs) in self.arc_edges.iter().enumerate() {
            if arcs.is_empty() {
                continue;
            }
            // Outer circle: the face of the clockwise halves; hole: the
            // face of the counterclockwise halves.
            let h = if c == 0 { 2 * arcs[0] + 1 } else { 2 * arcs[0] };
            outside.push(h);
        }
        let mut faces = Vec::new();
        let mark = |face: &[HalfId], seen: &mut Vec<bool>| {
            for &h in face {
                seen[h] = true;
            }
        };
        for h in outside {
            if seen[h] {
                continue;
            }
            let f = self.face_of(h);
            mark(&f, &mut seen);
            faces.push(Face {
                halves: f,
                arcs: Vec::new(),
                material: false,
                hinted: false,
            });
        }
        for h in 0..self.half_count() {
            if seen[h] || self.vert[h] == usize::MAX {
                continue;
            }
            let f = self.face_of(h);
            mark(&f, &mut seen);
            faces.push(Face {
                halves: f,
                arcs: Vec::new(),
                material: true,
                hinted: false,
            });
        }
        if let Some(hint) = self.outer_face_hint {
            for face in &mut faces {
                if face.halves.contains(&hint) {
                    face.hinted = true;
                }
            }
        }
        // Record arc incidences of material faces.
        let mut arc_lookup = std::collections::HashMap::new();
        for (c, arcs) in self.arc_edges.iter().enumerate() {
            for (j, &e) in arcs.iter().enumerate() {
                arc_lookup.insert(e, (c, j));
            }
        }
        for face in &mut faces {
            if !face.material {
                continue;
            }
            for &h in &face.halves {
                if let Some(&(c, j)) = arc_lookup.get(&(h / 2)) {
                    face.arcs.push((c, j));
                }
            }
        }
        faces
    }

    /// Structural validation of the whole map.
    pub fn validate(&self) -> Result<(), NGraphError> {
        let hn = self.half_count();
        let fail = |m: String| Err(NGraphError::InvalidMap(m));
        // Every half attached, next a permutation consistent with vert.
        let mut indeg = vec![0usize; hn];
        for h in 0..hn {
            if self.vert[h] == usize::MAX || self.next[h] == usize::MAX {
                return fail(format!("half {h} unattached"));
            }
            if self.vert[self.next[h]] != self.vert[h] {
                return fail(format!("next({h}) leaves the vertex"));
            }
            indeg[self.next[h]] += 1;
        }
        if indeg.iter().any(|&d| d != 1) {
            return fail("next is not a permutation".into());
        }
        // Rotation cycles match vertex degrees and kinds.
        let mut vertex_halves: Vec<Vec<HalfId>> = vec![Vec::new(); self.vertex_count()];
        for h in 0..hn {
            vertex_halves[self.vert[h]].push(h);
        }
        for v in 0..self.vertex_count() {
            if vertex_halves[v].is_empty() {
                return fail(format!("vertex {v} has no half-edges"));
            }
            let rot = self.rotation_at(v, Some(vertex_halves[v][0]));
            if rot.len() != vertex_halves[v].len() {
                return fail(format!("vertex {v} rotation does not cover its halves"));
            }
            let colors: Vec<u8> = rot.iter().map(|&h| self.color_of_half(h)).collect();
            match self.kinds[v] {
                VertexKind::Trivalent(c) => {
                    if rot.len() != 3 || colors.iter().any(|&x| x != c) {
                        return fail(format!("vertex {v} is not trivalent of color {c}"));
                    }
                    if c == 0 || c as usize >= self.n_strands {
                        return fail(format!("vertex {v} has invalid color {c}"));
                    }
                }
                VertexKind::Hexagonal(c) => {
                    if rot.len() != 6 {
                        return fail(format!("vertex {v} is not 6-valent"));
                    }
                    let ok_a = colors == alternating(c, c + 1);
                    let ok_b = colors == alternating(c + 1, c);
                    if !(ok_a || ok_b) {
                        return fail(format!("vertex {v} colors are not alternating"));
                    }
                    if c == 0 || (c + 1) as usize >= self.n_strands {
                        return fail(format!("vertex {v} has invalid colors"));
                    }
                }
                VertexKind::Crossing(c1, c2) => {
                    if rot.len() != 4 || colors != vec![c1, c2, c1, c2] {
                        return fail(format!("vertex {v} is not a transversal crossing"));
                    }
                    if (c1 as i32 - c2 as i32).abs() <= 1 {
                        return fail(format!("crossing {v} colors too close"));
                    }
                }
                VertexKind::Boundary(circle) => {
                    if rot.len() != 3 {
                        return fail(format!("endpoint {v} is not 3-valent"));
                    }
                    let arcs = rot
                        .iter()
                        .filter(|&&h| self.color_of_half(h) == ARC)
                        .count();
                    if arcs != 2 {
                        return fail(format!("endpoint {v} lacks its two arcs"));
                    }
                    if circle >= self.boundaries.len() || !self.boundaries[circle].contains(&v) {
                        return fail(format!("endpoint {v} not on its circle"));
                    }
                }
            }
        }
        // Arc edges trace each circle in order.
        for (c, arcs) in self.arc_edges.iter().enumerate() {
            let l = arcs.len();
            for j in 0..l {
                let h = 2 * arcs[j];
                let (a, b) = (self.vert[h], self.vert[h ^ 1]);
                if a != self.boundaries[c][j] || b != self.boundaries[c][(j + 1) % l] {
                    return fail(format!("arc {j} of circle {c} misplaced"));
                }
            }
        }
        // Face traversal must partition the halves (guaranteed by next
        // being a permutation) and satisfy Euler's relation when the map
        // is connected.
        if self.is_connected() {
            let v = self.vertex_count() as i64;
            let e = self.edge_count() as i64;
            let f = self.faces().len() as i64;
            if v - e + f != 2 {
                return fail(format!("Euler check failed: V-E+F = {}", v - e + f));
            }
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for h in self.rotation_at(v, None) {
                let w = self.vert[h ^ 1];
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count()
    }

    /// Rebuild the rotation at `v` with `old` replaced by `new`.
    pub fn replace_in_rotation(&mut self, v: VertexId, old: HalfId, new: HalfId) {
        let rot: Vec<HalfId> = self
            .rotation_at(v, None)
            .into_iter()
            .map(|h| if h == old { new } else { h })
            .collect();
        self.set_rotation(v, &rot);
    }

    /// Drop the given edges and vertices, renumbering everything else.
    /// Rotations must not reference dropped halves. Returns the map and
    /// the edge renumbering.
    pub fn compact(
        &self,
        dead_edges: &[EdgeId],
        dead_vertices: &[VertexId],
    ) -> (WeaveMap, Vec<Option<EdgeId>>) {
        let mut out = WeaveMap::new(self.n_strands);
        let mut vmap = vec![usize::MAX; self.vertex_count()];
        for v in 0..self.vertex_count() {
            if !dead_vertices.contains(&v) {
                vmap[v] = out.add_vertex(self.kinds[v]);
            }
        }
        let mut emap: Vec<Option<EdgeId>> = vec![None; self.edge_count()];
        for e in 0..self.edge_count() {
            if !dead_edges.contains(&e) {
                emap[e] = Some(out.add_edge(self.color[e]));
            }
        }
        let half = |h: HalfId| -> HalfId { 2 * emap[h / 2].expect("live edge") + (h & 1) };
        for v in 0..self.vertex_count() {
            if vmap[v] == usize::MAX {
                continue;
            }
            let rot: Vec<HalfId> = self.rotation_at(v, None).into_iter().map(half).collect();
            out.set_rotation(vmap[v], &rot);
        }
        for (c, circle) in self.boundaries.iter().enumerate() {
            out.boundaries.push(circle.iter().map(|&v| vmap[v]).collect());
            out.arc_edges.push(
                self.arc_edges[c]
                    .iter()
                    .map(|&e| emap[e].expect("arcs survive compaction"))
                    .collect(),
            );
        }
        out.outer_face_hint = self.outer_face_hint.map(half);
        (out, emap)
    }

    /// Deterministic serialization anchored at boundary position 0 of the
    /// outer circle. Two maps are equal as anchored maps iff their
    /// serializations agree.
    pub fn anchored_serialization(&self) -> String {
        let mut label = vec![usize::MAX; self.vertex_count()];
        let mut order: Vec<(VertexId, HalfId)> = Vec::new();
        let push = |v: VertexId,
                        entry: HalfId,
                        label: &mut Vec<usize>,
                        order: &mut Vec<(VertexId, HalfId)>| {
            if label[v] == usize::MAX {
                label[v] = order.len();
                order.push((v, entry));
            }
        };
        for circle in self.boundaries.iter() {
            for &v in circle {
                let entry = self.graph_half_at(v);
                push(v, entry, &mut label, &mut order);
            }
        }
        if order.is_empty() {
            if let Some(hint) = self.outer_face_hint {
                push(self.vert[hint], hint, &mut label, &mut order);
            }
        }
        let mut i = 0;
        while i < order.len() {
            let (v, entry) = order[i];
            for h in self.rotation_at(v, Some(entry)) {
                let w = self.vert[h ^ 1];
                push(w, h ^ 1, &mut label, &mut order);
            }
            i += 1;
        }
        let mut s = format!("N{};", self.n_strands);
        for circle in &self.boundaries {
            s.push_str(&format!("B{};", circle.len()));
        }
        for &(v, entry) in &order {
            let kind = match self.kinds[v] {
                VertexKind::Trivalent(c) => format!("T{c}"),
                VertexKind::Hexagonal(c) => format!("H{c}"),
                VertexKind::Crossing(a, b) => format!("X{a}.{b}"),
                VertexKind::Boundary(c) => format!("E{c}"),
            };
            s.push_str(&kind);
            s.push('[');
            for h in self.rotation_at(v, Some(entry)) {
                s.push_str(&format!("{}:{},", self.color_of_half(h), label[self.vert[h ^ 1]]));
            }
            s.push_str("];");
        }
        s
    }
}

fn alternating(a: u8, b: u8) -> Vec<u8> {
    vec![a, b, a, b, a, b]
}

/// An N-graph on the disk: a map with a single boundary circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NGraph {
    pub map: WeaveMap,
}

impl NGraph {
    pub fn n_strands(&self) -> usize {
        self.map.n_strands
    }

    pub fn boundary_word(&self) -> BraidWord {
        self.map.boundary_word(0)
    }

    pub fn validate(&self) -> Result<(), NGraphError> {
        if self.map.boundaries().len() != 1 {
            return Err(NGraphError::InvalidMap(
                "disk graph needs exactly one boundary circle".into(),
            ));
        }
        self.map.validate()
    }

    pub fn canonical_form(&self) -> String {
        self.map.anchored_serialization()
    }

    pub fn faces(&self) -> Vec<Face> {
        self.map.faces()
    }
}
