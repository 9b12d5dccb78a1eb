//! Exchange-graph enumeration: breadth-first search over all mutation
//! directions, deduplicating seeds by their unordered cluster.

use super::matrix::{mutate_matrix, ExchangeMatrix};
use super::seed::{mutate_seed, ClusterKey, Seed};
use super::ClusterError;
use crate::rootdata::RootVector;
use serde::Serialize;
use std::collections::HashMap;

/// The exchange graph of a seed pattern.
#[derive(Debug, Clone, Serialize)]
pub struct ExchangeGraph {
    pub seeds: Vec<Seed>,
    #[serde(skip)]
    pub index: HashMap<ClusterKey, usize>,
    /// Edges `(from, to, direction)`, recorded once per unordered pair.
    pub edges: Vec<(usize, usize, usize)>,
}

impl ExchangeGraph {
    pub fn vertex_count(&self) -> usize {
        self.seeds.len()
    }

    /// Distinct cluster variables over all mutable slots of all seeds.
    pub fn variable_count(&self) -> usize {
        let mut keys: Vec<String> = Vec::new();
        for s in &self.seeds {
            for v in &s.vars[..s.n()] {
                keys.push(v.canonical_key());
            }
        }
        keys.sort();
        keys.dedup();
        keys.len()
    }

    /// Vertex degrees; `n`-regular for a complete finite-type graph.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.seeds.len()];
        for &(a, b, _) in &self.edges {
            d[a] += 1;
            if b != a {
                d[b] += 1;
            }
        }
        d
    }
}

/// Enumerate the full exchange graph from `s0`, stopping with
/// `CapExceeded` once more than `cap` vertices appear.
pub fn enumerate_exchange_graph(s0: &Seed, cap: usize) -> Result<ExchangeGraph, ClusterError> {
    let mut seeds = vec![s0.clone()];
    let mut index = HashMap::new();
    index.insert(s0.cluster_key(), 0usize);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    while let Some(v) = frontier.pop() {
        let seed = seeds[v].clone();
        for k in 0..seed.n() {
            let next = mutate_seed(&seed, k)?;
            let key = next.cluster_key();
            let to = match index.get(&key) {
                Some(&i) => i,
                None => {
                    if seeds.len() >= cap {
                        return Err(ClusterError::CapExceeded(cap));
                    }
                    let i = seeds.len();
                    seeds.push(next);
                    index.insert(key, i);
                    frontier.push(i);
                    i
                }
            };
            if v < to {
                edges.push((v, to, k));
            }
        }
    }
    Ok(ExchangeGraph {
        seeds,
        index,
        edges,
    })
}

/// A seed in the tropical shadow: denominator vectors plus the matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DVectorSeed {
    pub dvecs: Vec<RootVector>,
    pub matrix: ExchangeMatrix,
}

impl DVectorSeed {
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let n = matrix.n();
        DVectorSeed {
            dvecs: (0..n).map(|i| RootVector::neg_simple(n, i)).collect(),
            matrix,
        }
    }

    fn key(&self) -> Vec<RootVector> {
        let mut v = self.dvecs.clone();
        v.sort();
        v
    }
}

/// Tropical mutation of denominator vectors:
/// `d'_k = −d_k + max(Σ_j [b_jk]_+ d_j, Σ_j [−b_jk]_+ d_j)` with the max
/// taken componentwise. Valid in finite type, where it shadows the Laurent
/// computation exactly; cross-checked against it in the tests.
pub fn mutate_dvector(s: &DVectorSeed, k: usize) -> Result<DVectorSeed, ClusterError> {
    let n = s.matrix.n();
    if k >= n {
        return Err(ClusterError::BadDirection(k));
    }
    let dim = s.dvecs[0].0.len();
    let mut pos = vec![0i64; dim];
    let mut neg = vec![0i64; dim];
    for j in 0..n {
        let b = s.matrix.b(j, k);
        if b > 0 {
            for (acc, &x) in pos.iter_mut().zip(&s.dvecs[j].0) {
                *acc += b * x;
            }
        } else if b < 0 {
            for (acc, &x) in neg.iter_mut().zip(&s.dvecs[j].0) {
                *acc += -b * x;
            }
        }
    }
    let mut out = s.dvecs.clone();
    out[k] = RootVector(
        (0..dim)
            .map(|t| -s.dvecs[k].0[t] + pos[t].max(neg[t]))
            .collect(),
    );
    Ok(DVectorSeed {
        dvecs: out,
        matrix: mutate_matrix(&s.matrix, k)?,
    })
}

/// The exchange graph computed in the tropical shadow. Much lighter than
/// the Laurent route; used for the large long-running enumerations.
#[derive(Debug, Clone)]
pub struct DVectorGraph {
    pub vertex_count: usize,
    pub variable_count: usize,
    pub degrees: Vec<usize>,
}

pub fn enumerate_dvector_graph(
    s0: &DVectorSeed,
    cap: usize,
) -> Result<DVectorGraph, ClusterError> {
    let mut index: HashMap<Vec<RootVector>, usize> = HashMap::new();
    let mut states = vec![s0.clone()];
    index.insert(s0.key(), 0);
    let mut degrees = vec![0usize];
    let mut vars: std::collections::BTreeSet<RootVector> = s0.dvecs.iter().cloned().collect();
    let mut frontier = vec![0usize];
    while let Some(v) = frontier.pop() {
        let state = states[v].clone();
        for k in 0..state.matrix.n() {
            let next = mutate_dvector(&state, k)?;
            vars.insert(next.dvecs[k].clone());
            let key = next.key();
            match index.get(&key) {
                Some(&to) => {
                    if v < to {
                        degrees[v] += 1;
                        degrees[to] += 1;
                    }
                }
                None => {
                    if states.len() >= cap {
                        return Err(ClusterError::CapExceeded(cap));
                    }
                    let i = states.len();
                    index.insert(key, i);
                    states.push(next);
                    degrees.push(0);
                    degrees[v] += 1;
                    degrees[i] += 1;
                    frontier.push(i);
                }
            }
        }
    }
    Ok(DVectorGraph {
        vertex_count: states.len(),
        variable_count: vars.len(),
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clusterkit::initial_seed_of_type;
    use crate::rootdata::DynkinType;

    fn ty(s: &str) -> DynkinType {
        DynkinType::parse(s).unwrap()
    }

    #[test]
    fn a2_graph_is_a_pentagon() {
        let g = enumerate_exchange_graph(&initial_seed_of_type(ty("A2")), 100).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges.len(), 5);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn a3_counts() {
        let g = enumerate_exchange_graph(&initial_seed_of_type(ty("A3")), 100).unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.variable_count(), 9);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn d4_counts() {
        let g = enumerate_exchange_graph(&initial_seed_of_type(ty("D4")), 100).unwrap();
        assert_eq!(g.vertex_count(), 50);
        assert_eq!(g.variable_count(), 16);
    }

    #[test]
    fn cap_exceeded_reported() {
        let g = enumerate_exchange_graph(&initial_seed_of_type(ty("A3")), 5);
        assert_eq!(g.unwrap_err(), ClusterError::CapExceeded(5));
    }

    #[test]
    fn tropical_route_agrees_on_small_types() {
        for t in ["A2", "A3", "A4", "D4", "D5"] {
            let s = initial_seed_of_type(ty(t));
            let full = enumerate_exchange_graph(&s, 100_000).unwrap();
            let trop =
                enumerate_dvector_graph(&DVectorSeed::initial(s.matrix.clone()), 100_000).unwrap();
            assert_eq!(full.vertex_count(), trop.vertex_count, "seeds for {t}");
            assert_eq!(full.variable_count(), trop.variable_count, "vars for {t}");
        }
    }
}
