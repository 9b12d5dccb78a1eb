//! Facet combinatorics: the Coxeter mutation acting on the facets of the
//! generalized associahedron. Facets are labeled by almost positive
//! roots; the action is the piecewise-linear involution pair `τ_-, τ_+`
//! on those labels, with `μ_Q^r(F_β) = F_{(τ_-τ_+)^r(β)}`.

use super::quiver::Quiver;
use super::seed::Seed;
use super::ClusterError;
use crate::rootdata::{cartan_matrix, coxeter_number, DynkinType, RootVector};
use std::collections::BTreeMap;

/// The bipartite initial seed of a finite type: Dynkin diagram edges
/// oriented from the color class of vertex 1 into the other class.
pub fn initial_seed_of_type(t: DynkinType) -> Seed {
    Seed::initial(initial_quiver_of_type(t).exchange_matrix())
}

pub fn initial_quiver_of_type(t: DynkinType) -> Quiver {
    let n = t.rank;
    let edges = t.diagram_edges();
    let color = diagram_two_coloring(t);
    Quiver::from_arrows(
        n,
        n,
        edges.iter().map(|&(a, b)| {
            if color[a - 1] {
                (a - 1, b - 1)
            } else {
                (b - 1, a - 1)
            }
        }),
    )
}

/// Two-color the Dynkin diagram; vertex 1 is `+` (true).
pub fn diagram_two_coloring(t: DynkinType) -> Vec<bool> {
    let n = t.rank;
    let edges = t.diagram_edges();
    let mut color = vec![None::<bool>; n];
    color[0] = Some(true);
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for &(a, b) in &edges {
            let (a, b) = (a - 1, b - 1);
            for (x, y) in [(a, b), (b, a)] {
                if x == v && color[y].is_none() {
                    color[y] = Some(!color[v].unwrap());
                    stack.push(y);
                }
            }
        }
    }
    color.into_iter().map(|c| c.unwrap()).collect()
}

/// `μ_Q^r(F_{−α_i})` for `r ∈ {0..e}`, `i ∈ [n]` (0-based `i`), as the
/// labeling root of each image facet.
#[derive(Debug, Clone)]
pub struct FacetTable {
    pub entries: BTreeMap<(usize, usize), RootVector>,
    pub half_coxeter: usize,
}

pub fn facet_orbit_table(t: DynkinType) -> Result<FacetTable, ClusterError> {
    let h = coxeter_number(t);
    if h % 2 != 0 {
        return Err(ClusterError::OddCoxeterNumber);
    }
    let e = h / 2;
    let n = t.rank;
    let cartan = cartan_matrix(t);
    let color = diagram_two_coloring(t);
    let reflect = |beta: &RootVector, i: usize| -> RootVector {
        let pairing: i64 = (0..n).map(|j| cartan.entry(i, j) * beta.0[j]).sum();
        let mut out = beta.clone();
        out.0[i] -= pairing;
        out
    };
    let tau = |beta: &RootVector, plus: bool| -> RootVector {
        // Negative simple roots of the other sign class are fixed; those
        // of this class flip sign; positive roots reflect.
        if let Some(i) = (0..n).find(|&i| {
            beta.0[i] == -1 && beta.0.iter().enumerate().all(|(j, &c)| j == i || c == 0)
        }) {
            if color[i] == plus {
                let mut out = beta.clone();
                out.0[i] = 1;
                return out;
            }
            return beta.clone();
        }
        let mut out = beta.clone();
        for i in 0..n {
            if color[i] == plus {
                out = reflect(&out, i);
            }
        }
        out
    };
    let mut entries = BTreeMap::new();
    for i in 0..n {
        let mut beta = RootVector::neg_simple(n, i);
        for r in 0..=e {
            entries.insert((r, i), beta.clone());
            beta = tau(&tau(&beta, true), false);
        }
    }
    Ok(FacetTable {
        entries,
        half_coxeter: e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::almost_positive_roots;

    #[test]
    fn a3_initial_quiver_is_alternating() {
        let q = initial_quiver_of_type(DynkinType::parse("A3").unwrap());
        assert_eq!(q.b(0, 1), 1);
        assert_eq!(q.b(2, 1), 1);
    }

    #[test]
    fn a3_facet_table_matches_reference() {
        let t = DynkinType::parse("A3").unwrap();
        let table = facet_orbit_table(t).unwrap();
        assert_eq!(table.half_coxeter, 2);
        let rv = |v: Vec<i64>| RootVector(v);
        let expect = [
            ((0, 0), rv(vec![-1, 0, 0])),
            ((0, 1), rv(vec![0, -1, 0])),
            ((0, 2), rv(vec![0, 0, -1])),
            ((1, 0), rv(vec![1, 1, 0])),
            ((1, 1), rv(vec![0, 1, 0])),
            ((1, 2), rv(vec![0, 1, 1])),
            ((2, 0), rv(vec![0, 0, 1])),
            ((2, 1), rv(vec![1, 1, 1])),
            ((2, 2), rv(vec![1, 0, 0])),
        ];
        for (k, v) in expect {
            assert_eq!(table.entries.get(&k), Some(&v), "entry {k:?}");
        }
    }

    #[test]
    fn facet_map_is_a_bijection_onto_almost_positive_roots() {
        for name in ["A3", "A5", "D4", "D5", "E6", "A1"] {
            let t = DynkinType::parse(name).unwrap();
            let table = facet_orbit_table(t).unwrap();
            let mut seen: Vec<&RootVector> = table.entries.values().collect();
            seen.sort();
            seen.dedup();
            let mut expect = almost_positive_roots(t);
            expect.sort();
            assert_eq!(seen.len(), table.entries.len(), "collision for {name}");
            assert_eq!(
                seen.into_iter().cloned().collect::<Vec<_>>(),
                expect,
                "range mismatch for {name}"
            );
        }
    }

    #[test]
    fn odd_coxeter_number_rejected() {
        let t = DynkinType::parse("A2").unwrap();
        assert_eq!(
            facet_orbit_table(t).unwrap_err(),
            ClusterError::OddCoxeterNumber
        );
    }
}
