//! Cycle specifications: good subgraphs representing one-cycles.

use super::map::{EdgeId, VertexKind, WeaveMap};
use super::NGraphError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleKind {
    /// A single edge between two trivalent vertices.
    I,
    /// A chain of edges passing straight through hexagonal points.
    LongI,
    /// Three monochromatic edges from one hexagonal point to three
    /// trivalent vertices.
    Y,
}

/// A good subgraph: a tree whose univalent vertices are trivalent in the
/// ambient graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpec {
    pub kind: CycleKind,
    /// Edge list; ordered along the chain for long I-cycles.
    pub edges: Vec<EdgeId>,
    /// 1-based label, the quiver vertex index.
    pub label: usize,
    /// Bipartition tag where defined; `+` cycles mutate first under the
    /// Coxeter mutation.
    pub plus: bool,
}

impl CycleSpec {
    /// The trivalent endpoints of the subgraph, each with the cycle edge
    /// incident there.
    pub fn leaf_incidences(&self, map: &WeaveMap) -> Vec<(usize, EdgeId)> {
        let mut out = Vec::new();
        for &e in &self.edges {
            let (h0, h1) = map.halves_of(e);
            for h in [h0, h1] {
                let v = map.source(h);
                if matches!(map.kind(v), VertexKind::Trivalent(_)) {
                    out.push((v, e));
                }
            }
        }
        out
    }

    /// Validate the shape of the subgraph against the map.
    pub fn validate(&self, map: &WeaveMap) -> Result<(), NGraphError> {
        let fail = |m: String| Err(NGraphError::BadCycle(m));
        match self.kind {
            CycleKind::I => {
                if self.edges.len() != 1 {
                    return fail(format!("I-cycle {} needs one edge", self.label));
                }
                let (h0, h1) = map.halves_of(self.edges[0]);
                for h in [h0, h1] {
                    if !matches!(map.kind(map.source(h)), VertexKind::Trivalent(_)) {
                        return fail(format!(
                            "I-cycle {} endpoint is not trivalent",
                            self.label
                        ));
                    }
                }
            }
            CycleKind::Y => {
                if self.edges.len() != 3 {
                    return fail(format!("Y-cycle {} needs three edges", self.label));
                }
                let c = map.color_of_edge(self.edges[0]);
                // One common hexagonal point, three trivalent far ends.
                let mut shared: Option<usize> = None;
                for &e in &self.edges {
                    if map.color_of_edge(e) != c {
                        return fail(format!("Y-cycle {} is not monochromatic", self.label));
                    }
                    let (h0, h1) = map.halves_of(e);
                    let hexs: Vec<usize> = [h0, h1]
                        .iter()
                        .map(|&h| map.source(h))
                        .filter(|&v| matches!(map.kind(v), VertexKind::Hexagonal(_)))
                        .collect();
                    if hexs.len() != 1 {
                        return fail(format!(
                            "Y-cycle {} edge must join a hexagonal point to a trivalent vertex",
                            self.label
                        ));
                    }
                    match shared {
                        None => shared = Some(hexs[0]),
                        Some(s) if s == hexs[0] => {}
                        _ => return fail(format!("Y-cycle {} legs split", self.label)),
                    }
                }
                if self.leaf_incidences(map).len() != 3 {
                    return fail(format!("Y-cycle {} needs three leaves", self.label));
                }
            }
            CycleKind::LongI => {
                if self.edges.len() < 2 {
                    return fail(format!("long I-cycle {} too short", self.label));
                }
                // Consecutive edges meet at hexagonal points through
                // opposite slots; ends are trivalent.
                for w in self.edges.windows(2) {
                    let shared = shared_vertex(map, w[0], w[1]).ok_or_else(|| {
                        NGraphError::BadCycle(format!(
                            "long I-cycle {} edges do not chain",
                            self.label
                        ))
                    })?;
                    if !matches!(map.kind(shared), VertexKind::Hexagonal(_)) {
                        return fail(format!(
                            "long I-cycle {} interior junction is not hexagonal",
                            self.label
                        ));
                    }
                    // Opposite way: three rotation steps apart.
                    let h_in = half_at(map, w[0], shared);
                    let h_out = half_at(map, w[1], shared);
                    let mut h = h_in;
                    for _ in 0..3 {
                        h = map.rot_next(h);
                    }
                    if h != h_out {
                        return fail(format!(
                            "long I-cycle {} does not pass straight through",
                            self.label
                        ));
                    }
                }
                if self.leaf_incidences(map).len() != 2 {
                    return fail(format!("long I-cycle {} needs two leaves", self.label));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn shared_vertex(map: &WeaveMap, e1: EdgeId, e2: EdgeId) -> Option<usize> {
    let (a0, a1) = map.halves_of(e1);
    let (b0, b1) = map.halves_of(e2);
    for ha in [a0, a1] {
        for hb in [b0, b1] {
            if map.source(ha) == map.source(hb) {
                return Some(map.source(ha));
            }
        }
    }
    None
}

pub(crate) fn half_at(map: &WeaveMap, e: EdgeId, v: usize) -> usize {
    let (h0, h1) = map.halves_of(e);
    if map.source(h0) == v {
        h0
    } else {
        assert_eq!(map.source(h1), v);
        h1
    }
}

/// A labeled tuple of cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTuple {
    specs: Vec<CycleSpec>,
}

impl CycleTuple {
    pub fn new(specs: Vec<CycleSpec>) -> Self {
        let mut labels: Vec<usize> = specs.iter().map(|s| s.label).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), specs.len(), "cycle labels must be distinct");
        CycleTuple { specs }
    }

    pub fn specs(&self) -> &[CycleSpec] {
        &self.specs
    }

    pub fn by_label(&self, label: usize) -> Option<&CycleSpec> {
        self.specs.iter().find(|s| s.label == label)
    }

    pub fn len(&self) -> usize {
        self.specs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }

    pub fn validate(&self, map: &WeaveMap) -> Result<(), NGraphError> {
        for s in &self.specs {
            s.validate(map)?;
        }
        Ok(())
    }

    /// Relabel cycle `labels[i] → i+1` order, used by symmetry checks.
    pub fn map_edges(&self, f: impl Fn(EdgeId) -> EdgeId) -> CycleTuple {
        CycleTuple {
            specs: self
                .specs
                .iter()
                .map(|s| CycleSpec {
                    kind: s.kind,
                    edges: s.edges.iter().map(|&e| f(e)).collect(),
                    label: s.label,
                    plus: s.plus,
                })
                .collect(),
        }
    }
}
