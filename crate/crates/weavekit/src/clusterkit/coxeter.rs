//! Bipartite splits and the Coxeter mutation `μ_Q = μ_- μ_+`.

use super::matrix::ExchangeMatrix;
use super::quiver::{mutate_quiver, Quiver};
use super::seed::{mutate_seed, ClusterKey, Seed};
use super::yseed::{mutate_y, YSeedNumeric};
use super::ClusterError;
use std::collections::HashSet;

/// The sign split of a bipartite sign pattern: every positive entry
/// `b(i,j) > 0` forces `i ∈ I_+`, `j ∈ I_-`. Vertices incident to no
/// arrow join `I_+` (the least vertex of a trivial component is `+`).
pub fn bipartite_split_matrix(b: &ExchangeMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = b.n();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 0..n {
        let has_out = (0..n).any(|j| b.b(i, j) > 0);
        let has_in = (0..n).any(|j| b.b(i, j) < 0);
        match (has_out, has_in) {
            (true, true) => return None,
            (false, true) => minus.push(i),
            _ => plus.push(i),
        }
    }
    Some((plus, minus))
}

/// Bipartite split of a quiver over its mutable part.
pub fn bipartite_split(q: &Quiver) -> Option<(Vec<usize>, Vec<usize>)> {
    bipartite_split_matrix(&q.exchange_matrix())
}

fn split_or_err(b: &ExchangeMatrix) -> Result<(Vec<usize>, Vec<usize>), ClusterError> {
    bipartite_split_matrix(b).ok_or(ClusterError::NotBipartite)
}

/// `μ_Q` on a seed: all of `I_+` (mutations there commute), then `I_-`.
pub fn coxeter_mutation_seed(s: &Seed) -> Result<Seed, ClusterError> {
    let (plus, minus) = split_or_err(&s.matrix)?;
    let mut cur = s.clone();
    for k in plus.into_iter().chain(minus) {
        cur = mutate_seed(&cur, k)?;
    }
    Ok(cur)
}

pub fn coxeter_mutation_quiver(q: &Quiver) -> Result<Quiver, ClusterError> {
    let (plus, minus) = split_or_err(&q.exchange_matrix())?;
    let mut cur = q.clone();
    for k in plus.into_iter().chain(minus) {
        cur = mutate_quiver(&cur, k)?;
    }
    Ok(cur)
}

pub fn coxeter_mutation_y(s: &YSeedNumeric) -> Result<YSeedNumeric, ClusterError> {
    let (plus, minus) = split_or_err(&s.matrix)?;
    let mut cur = s.clone();
    for k in plus.into_iter().chain(minus) {
        cur = mutate_y(&cur, k)?;
    }
    Ok(cur)
}

/// The orbit of a seed under iterated Coxeter mutation.
#[derive(Debug, Clone)]
pub struct CoxeterOrbit {
    /// Seeds `μ_Q^0(s), μ_Q^1(s), …` up to recurrence or the cap.
    pub seeds: Vec<Seed>,
    /// True when the initial cluster recurred within the cap; the period
    /// then equals `seeds.len()`.
    pub periodic: bool,
}

/// Iterate `μ_Q` until the initial unordered cluster recurs or `cap`
/// iterations pass.
pub fn coxeter_orbit(s: &Seed, cap: usize) -> Result<CoxeterOrbit, ClusterError> {
    assert!(cap >= 1);
    let start = s.cluster_key();
    let mut seeds = vec![s.clone()];
    let mut seen: HashSet<ClusterKey> = HashSet::new();
    seen.insert(start.clone());
    let mut cur = s.clone();
    for _ in 0..cap {
        cur = coxeter_mutation_seed(&cur)?;
        if cur.cluster_key() == start {
            return Ok(CoxeterOrbit {
                seeds,
                periodic: true,
            });
        }
        seeds.push(cur.clone());
        if seeds.len() > cap {
            break;
        }
    }
    seeds.truncate(cap);
    Ok(CoxeterOrbit {
        seeds,
        periodic: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clusterkit::ExchangeMatrix;

    #[test]
    fn tripod_split() {
        // Q(2,2,2): central 0 a source toward 1, 2, 3.
        let q = Quiver::from_arrows(4, 4, [(0, 1), (0, 2), (0, 3)]);
        let (p, m) = bipartite_split(&q).unwrap();
        assert_eq!(p, vec![0]);
        assert_eq!(m, vec![1, 2, 3]);
    }

    #[test]
    fn oriented_triangle_not_bipartite() {
        let q = Quiver::from_arrows(3, 3, [(0, 1), (1, 2), (2, 0)]);
        assert!(bipartite_split(&q).is_none());
    }

    #[test]
    fn isolated_vertex_is_plus() {
        let q = Quiver::new(1, 1);
        let (p, m) = bipartite_split(&q).unwrap();
        assert_eq!(p, vec![0]);
        assert!(m.is_empty());
    }

    #[test]
    fn coxeter_on_a2() {
        // μ_Q = μ_2 μ_1 on the A2 seed: matrix returns to itself.
        let b = ExchangeMatrix::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let s = Seed::initial(b.clone());
        let t = coxeter_mutation_seed(&s).unwrap();
        assert_eq!(t.matrix, b);
        assert_ne!(t.cluster_key(), s.cluster_key());
    }

    #[test]
    fn a1_orbit_period_two() {
        let b = ExchangeMatrix::skew_symmetric(vec![vec![0]]).unwrap();
        let s = Seed::initial(b);
        let orbit = coxeter_orbit(&s, 10).unwrap();
        assert!(orbit.periodic);
        assert_eq!(orbit.seeds.len(), 2);
    }

    #[test]
    fn a2_orbit_period_five() {
        let b = ExchangeMatrix::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let orbit = coxeter_orbit(&Seed::initial(b), 20).unwrap();
        assert!(orbit.periodic);
        assert_eq!(orbit.seeds.len(), 5);
    }
}
