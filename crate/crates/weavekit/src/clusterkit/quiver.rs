//! Quivers: directed multigraphs without loops or 2-cycles, carried
//! around as skew-symmetric adjacency data with a mutable/frozen split.

use super::matrix::ExchangeMatrix;
use super::ClusterError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A quiver on `m` vertices of which the first `n` are mutable.
/// Arrows are stored as a multiset over ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    m: usize,
    n_mutable: usize,
    arrows: BTreeMap<(usize, usize), usize>,
}

impl Quiver {
    pub fn new(m: usize, n_mutable: usize) -> Self {
        assert!(n_mutable <= m);
        Quiver {
            m,
            n_mutable,
            arrows: BTreeMap::new(),
        }
    }

    /// Build from arrow pairs `(src, tgt)`, 0-based.
    pub fn from_arrows(
        m: usize,
        n_mutable: usize,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut q = Quiver::new(m, n_mutable);
        for (a, b) in arrows {
            q.add_arrow(a, b, 1);
        }
        q
    }

    pub fn add_arrow(&mut self, src: usize, tgt: usize, mult: usize) {
        assert!(src < self.m && tgt < self.m && src != tgt);
        // Cancel against opposite arrows so no 2-cycles survive.
        let back = self.arrows.get(&(tgt, src)).copied().unwrap_or(0);
        if back >= mult {
            if back == mult {
                self.arrows.remove(&(tgt, src));
            } else {
                self.arrows.insert((tgt, src), back - mult);
            }
        } else {
            if back > 0 {
                self.arrows.remove(&(tgt, src));
            }
            *self.arrows.entry((src, tgt)).or_insert(0) += mult - back;
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_mutable(&self) -> usize {
        self.n_mutable
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.arrows.iter().map(|(&(a, b), &k)| (a, b, k))
    }

    /// Signed arrow count from `i` to `j`.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        let fwd = self.arrows.get(&(i, j)).copied().unwrap_or(0) as i64;
        let back = self.arrows.get(&(j, i)).copied().unwrap_or(0) as i64;
        fwd - back
    }

    /// Full `m×m` signed adjacency.
    pub fn adjacency_full(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.m]; self.m];
        for (&(i, j), &k) in &self.arrows {
            a[i][j] += k as i64;
            a[j][i] -= k as i64;
        }
        a
    }

    /// The `n×m` exchange matrix (rows = mutable vertices).
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let a = self.adjacency_full();
        ExchangeMatrix::new(
            self.n_mutable,
            self.m,
            a.into_iter().take(self.n_mutable).collect(),
        )
        .expect("quiver adjacency is skew-symmetric")
    }

    /// Rebuild a quiver from a skew-symmetric matrix over all `m` vertices.
    /// Arrows between frozen vertices cannot be represented in an `n×m`
    /// matrix and are taken to be absent.
    pub fn from_exchange_matrix(b: &ExchangeMatrix) -> Result<Self, ClusterError> {
        if !b.is_principal_skew_symmetric() {
            return Err(ClusterError::NotSkewSymmetric);
        }
        let mut q = Quiver::new(b.m(), b.n());
        for i in 0..b.n() {
            for j in 0..b.m() {
                let v = b.b(i, j);
                if v > 0 {
                    q.add_arrow(i, j, v as usize);
                } else if v < 0 && j >= b.n() {
                    q.add_arrow(j, i, (-v) as usize);
                }
            }
        }
        Ok(q)
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm over the arrow digraph.
        let mut indeg = vec![0usize; self.m];
        for (&(_, j), &k) in &self.arrows {
            indeg[j] += k;
        }
        let mut stack: Vec<usize> = (0..self.m).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        let mut removed = vec![false; self.m];
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            seen += 1;
            for (&(a, b), &k) in &self.arrows {
                if a == v {
                    indeg[b] -= k;
                    if indeg[b] == 0 && !removed[b] {
                        stack.push(b);
                    }
                }
            }
        }
        seen == self.m
    }

    /// Underlying unoriented edges among mutable vertices.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        self.arrows
            .keys()
            .filter(|&&(a, b)| a < self.n_mutable && b < self.n_mutable)
            .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect()
    }

    /// Search the mutation class for an acyclic representative and classify
    /// its Cartan counterpart; `None` when none is found within `cap`
    /// visited quivers (infinite type, or cap too small).
    pub fn finite_type(&self, cap: usize) -> Option<Vec<crate::rootdata::DynkinType>> {
        use std::collections::{HashSet, VecDeque};
        if self.n_mutable == 0 {
            return Some(vec![]);
        }
        let principal = |q: &Quiver| -> Quiver {
            let mut p = Quiver::new(q.n_mutable, q.n_mutable);
            for (a, b, k) in q.arrows() {
                if a < q.n_mutable && b < q.n_mutable {
                    p.add_arrow(a, b, k);
                }
            }
            p
        };
        let start = principal(self);
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.adjacency_full());
        queue.push_back(start);
        while let Some(q) = queue.pop_front() {
            if q.is_acyclic() {
                let c = q.exchange_matrix().cartan_counterpart();
                return crate::rootdata::classify_finite_cartan(&c);
            }
            if seen.len() >= cap {
                return None;
            }
            for k in 0..q.n_mutable {
                let next = mutate_quiver(&q, k).expect("mutable index");
                let key = next.adjacency_full();
                if seen.insert(key) {
                    queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Quiver mutation at `k`, defined through the adjacency matrix.
pub fn mutate_quiver(q: &Quiver, k: usize) -> Result<Quiver, ClusterError> {
    if k >= q.n_mutable() {
        return Err(ClusterError::BadDirection(k));
    }
    // Mutate the full m×m skew-symmetric adjacency so frozen-frozen arrows
    // (absent here by construction) never enter.
    let a = q.adjacency_full();
    let m = q.m();
    let mut out = Quiver::new(m, q.n_mutable());
    let entry = |i: usize, j: usize| -> i64 {
        if i == k || j == k {
            -a[i][j]
        } else {
            a[i][j] + (a[i][k].abs() * a[k][j] + a[i][k] * a[k][j].abs()) / 2
        }
    };
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let v = entry(i, j);
            if v > 0 {
                out.add_arrow(i, j, v as usize);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clusterkit::mutate_matrix;

    #[test]
    fn a2_quiver_mutation_reverses_arrow() {
        let q = Quiver::from_arrows(2, 2, [(0, 1)]);
        let m = mutate_quiver(&q, 0).unwrap();
        assert_eq!(m.b(1, 0), 1);
        assert_eq!(m.b(0, 1), -1);
    }

    #[test]
    fn linear_a3_center_mutation() {
        // 1→2←3, mutate at 2: arrows reverse, no 2-cycles remain.
        let q = Quiver::from_arrows(3, 3, [(0, 1), (2, 1)]);
        let m = mutate_quiver(&q, 1).unwrap();
        assert_eq!(m.b(1, 0), 1);
        assert_eq!(m.b(1, 2), 1);
        assert_eq!(m.b(0, 2), 0);
        let back = mutate_quiver(&m, 1).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn mutation_matches_matrix_mutation() {
        let q = Quiver::from_arrows(3, 3, [(0, 1), (1, 2)]);
        for k in 0..3 {
            let via_quiver = mutate_quiver(&q, k).unwrap().exchange_matrix();
            let via_matrix = mutate_matrix(&q.exchange_matrix(), k).unwrap();
            assert_eq!(via_quiver, via_matrix);
        }
    }

    #[test]
    fn involution_on_quivers() {
        let q = Quiver::from_arrows(4, 4, [(0, 1), (2, 1), (2, 3)]);
        for k in 0..4 {
            assert_eq!(mutate_quiver(&mutate_quiver(&q, k).unwrap(), k).unwrap(), q);
        }
    }

    #[test]
    fn finite_type_detection() {
        use crate::rootdata::DynkinType;
        // Oriented 3-cycle is mutation equivalent to linear A3.
        let tri = Quiver::from_arrows(3, 3, [(0, 1), (1, 2), (2, 0)]);
        assert_eq!(
            tri.finite_type(100),
            Some(vec![DynkinType::parse("A3").unwrap()])
        );
        // Markov quiver is of infinite type.
        let mut markov = Quiver::new(3, 3);
        markov.add_arrow(0, 1, 2);
        markov.add_arrow(1, 2, 2);
        markov.add_arrow(2, 0, 2);
        assert_eq!(markov.finite_type(200), None);
    }
}
