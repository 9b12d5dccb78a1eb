//! Folding of seed patterns: group actions on quiver vertices,
//! admissibility, folded matrices, orbit mutations, global foldability
//! and enumeration of folded patterns.
//!
//! The folded matrix stores `b^G_{I,J} = Σ_{i∈I} b_{i,j}`; the folded
//! pattern itself mutates with the negative transpose of that matrix,
//! which is the row-wise companion `Σ_{j∈J} b_{i,j}`. Only the latter
//! makes the folded mutation agree with the orbit mutation upstairs.

use crate::clusterkit::{
    mutate_matrix, mutate_seed, mutate_y, ClusterError, ExchangeMatrix, Quiver, Seed, YSeedNumeric,
};
use crate::laurent::LaurentPoly;
use crate::rootdata::CartanMatrix;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FoldError {
    #[error("action is not a permutation of the vertex set")]
    BadAction,
    #[error("quiver is not admissible for this action: {0}")]
    NotAdmissible(String),
    #[error("mutations within the orbit do not commute")]
    NonCommuting,
    #[error("cap of {0} states exceeded")]
    CapExceeded(usize),
    #[error("seed is not admissible: variables differ along an orbit")]
    NotPsiAdmissible,
    #[error(transparent)]
    Cluster(#[from] ClusterError),
}

/// A cyclic group action on the vertex set `[m]`, given by its generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexAction {
    perm: Vec<usize>,
    order: usize,
}

impl VertexAction {
    pub fn new(perm: Vec<usize>) -> Result<Self, FoldError> {
        let m = perm.len();
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || seen[p] {
                return Err(FoldError::BadAction);
            }
            seen[p] = true;
        }
        let mut order = 1;
        let mut cur = perm.clone();
        let id: Vec<usize> = (0..m).collect();
        while cur != id {
            cur = cur.iter().map(|&i| perm[i]).collect();
            order += 1;
            if order > m {
                return Err(FoldError::BadAction);
            }
        }
        Ok(VertexAction { perm, order })
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn m(&self) -> usize {
        self.perm.len()
    }

    /// Orbits ordered by size, then least element; this puts singleton
    /// orbits first, matching the worked folded-matrix examples.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.perm.len()];
        let mut orbits = Vec::new();
        for s in 0..self.perm.len() {
            if seen[s] {
                continue;
            }
            let mut orbit = vec![s];
            seen[s] = true;
            let mut cur = self.perm[s];
            while cur != s {
                seen[cur] = true;
                orbit.push(cur);
                cur = self.perm[cur];
            }
            orbit.sort();
            orbits.push(orbit);
        }
        orbits.sort_by_key(|o| (o.len(), o[0]));
        orbits
    }

    /// The standard foldings: the half-turn on a path of odd rank, the
    /// leg swap on the fork of `D_n`, the diagram flip of `E_6`, and the
    /// third-turn of the `D_4` star.
    pub fn standard_a_odd(n2: usize) -> Self {
        // A_{2n-1}: i ↦ 2n−i on 1-based labels.
        assert!(n2 % 2 == 1 && n2 >= 3);
        VertexAction::new((0..n2).map(|i| n2 - 1 - i).collect()).unwrap()
    }

    pub fn standard_d_fork(m: usize) -> Self {
        // D_{n+1}: swap the two fork tips (1-based n, n+1).
        assert!(m >= 4);
        let mut p: Vec<usize> = (0..m).collect();
        p.swap(m - 2, m - 1);
        VertexAction::new(p).unwrap()
    }

    pub fn standard_e6() -> Self {
        // 1↔6, 3↔5, fixing 2 and 4 (1-based).
        VertexAction::new(vec![5, 1, 4, 3, 2, 0]).unwrap()
    }

    pub fn standard_d4_triality() -> Self {
        // 1 → 3 → 4 → 1, fixing 2 (1-based).
        VertexAction::new(vec![2, 1, 3, 0]).unwrap()
    }
}

/// One violated admissibility condition with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// (a): an orbit mixes mutable and frozen indices.
    MutabilityMixed { i: usize, j: usize },
    /// (b): `b_{i,j} ≠ b_{g(i),g(j)}`.
    NotEquivariant { i: usize, j: usize },
    /// (c): `b_{i,i'} ≠ 0` inside a mutable orbit.
    ArrowInsideOrbit { i: usize, j: usize },
    /// (d): `b_{i,j}·b_{i',j} < 0`.
    MixedSigns { i: usize, i2: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluate conditions (a)–(d) on the full signed adjacency of a quiver.
pub fn check_admissible(q: &Quiver, a: &VertexAction) -> AdmissibilityReport {
    let m = q.m();
    let n = q.n_mutable();
    assert_eq!(a.m(), m);
    let mut violations = Vec::new();
    for i in 0..m {
        let gi = a.apply(i);
        if (i < n) != (gi < n) {
            violations.push(Violation::MutabilityMixed { i, j: gi });
        }
    }
    for i in 0..m {
        for j in 0..m {
            if q.b(i, j) != q.b(a.apply(i), a.apply(j)) {
                violations.push(Violation::NotEquivariant { i, j });
            }
        }
    }
    for orbit in a.orbits() {
        if orbit[0] >= n {
            continue;
        }
        for (xi, &i) in orbit.iter().enumerate() {
            for &i2 in &orbit[xi + 1..] {
                if q.b(i, i2) != 0 {
                    violations.push(Violation::ArrowInsideOrbit { i, j: i2 });
                }
                for j in 0..n {
                    if q.b(i, j) * q.b(i2, j) < 0 {
                        violations.push(Violation::MixedSigns { i, i2, j });
                    }
                }
            }
        }
    }
    AdmissibilityReport { violations }
}

/// The folded matrix `b^G_{I,J} = Σ_{i∈I} b_{i,j}`, rows over all orbits,
/// columns over mutable orbits, in the `orbits()` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldedMatrix {
    pub orbits: Vec<Vec<usize>>,
    pub mutable_orbits: usize,
    pub entries: Vec<Vec<i64>>,
}

impl FoldedMatrix {
    /// Cartan counterpart of the (square part of the) folded matrix.
    pub fn cartan_counterpart(&self) -> CartanMatrix {
        let k = self.mutable_orbits;
        CartanMatrix::new(
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| if i == j { 2 } else { -self.entries[i][j].abs() })
                        .collect()
                })
                .collect(),
        )
        .expect("folded counterpart is a Cartan matrix")
    }

    /// The mutation companion: the folded pattern mutates with
    /// `−(B^G)^T` under the row convention used everywhere else.
    pub fn mutation_matrix(&self) -> ExchangeMatrix {
        let k = self.mutable_orbits;
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|i| (0..self.orbits.len()).map(|j| -self.entries[j][i]).collect())
            .collect();
        ExchangeMatrix::new(k, self.orbits.len(), rows).expect("companion is skew-symmetrizable")
    }
}

pub fn fold_matrix(q: &Quiver, a: &VertexAction) -> Result<FoldedMatrix, FoldError> {
    let report = check_admissible(q, a);
    if !report.is_admissible() {
        return Err(FoldError::NotAdmissible(format!(
            "{} violations, first {:?}",
            report.violations.len(),
            report.violations.first()
        )));
    }
    let orbits = a.orbits();
    let n = q.n_mutable();
    let mutable_orbits = orbits.iter().filter(|o| o[0] < n).count();
    // Mutable orbits come first under the (size, min) order only if all
    // frozen orbits sort later; enforce by partitioning.
    let mut ordered: Vec<Vec<usize>> = orbits.iter().filter(|o| o[0] < n).cloned().collect();
    ordered.extend(orbits.iter().filter(|o| o[0] >= n).cloned());
    let entries: Vec<Vec<i64>> = ordered
        .iter()
        .map(|oi| {
            (0..mutable_orbits)
                .map(|j| {
                    let rep = ordered[j][0];
                    oi.iter().map(|&i| q.b(i, rep)).sum()
                })
                .collect()
        })
        .collect();
    Ok(FoldedMatrix {
        orbits: ordered,
        mutable_orbits,
        entries,
    })
}

/// Composite mutation along a mutable orbit, with the defensive check
/// that the order of mutations inside the orbit does not matter.
pub fn orbit_mutation_quiver(q: &Quiver, orbit: &[usize]) -> Result<Quiver, FoldError> {
    let mut fwd = q.clone();
    for &i in orbit {
        fwd = crate::clusterkit::mutate_quiver(&fwd, i)?;
    }
    let mut rev = q.clone();
    for &i in orbit.iter().rev() {
        rev = crate::clusterkit::mutate_quiver(&rev, i)?;
    }
    if fwd != rev {
        return Err(FoldError::NonCommuting);
    }
    Ok(fwd)
}

pub fn orbit_mutation_seed(s: &Seed, orbit: &[usize]) -> Result<Seed, FoldError> {
    let mut fwd = s.clone();
    for &i in orbit {
        fwd = mutate_seed(&fwd, i)?;
    }
    let mut rev = s.clone();
    for &i in orbit.iter().rev() {
        rev = mutate_seed(&rev, i)?;
    }
    if fwd != rev {
        return Err(FoldError::NonCommuting);
    }
    Ok(fwd)
}

pub fn orbit_mutation_y(s: &YSeedNumeric, orbit: &[usize]) -> Result<YSeedNumeric, FoldError> {
    let mut fwd = s.clone();
    for &i in orbit {
        fwd = mutate_y(&fwd, i)?;
    }
    let mut rev = s.clone();
    for &i in orbit.iter().rev() {
        rev = mutate_y(&rev, i)?;
    }
    if fwd != rev {
        return Err(FoldError::NonCommuting);
    }
    Ok(fwd)
}

/// A folded numeric Y-seed: one rational per mutable orbit plus the
/// folded matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedSeedNumeric {
    pub yvals: Vec<BigRational>,
    pub matrix: FoldedMatrix,
}

impl FoldedSeedNumeric {
    /// Fold an orbit-constant Y-seed by identification.
    pub fn fold(s: &YSeedNumeric, a: &VertexAction) -> Result<Self, FoldError> {
        let q = Quiver::from_exchange_matrix(&s.matrix).map_err(FoldError::Cluster)?;
        let matrix = fold_matrix(&q, a)?;
        let mut yvals = Vec::new();
        for orbit in matrix.orbits.iter().take(matrix.mutable_orbits) {
            let v = &s.yvals[orbit[0]];
            if orbit.iter().any(|&i| &s.yvals[i] != v) {
                return Err(FoldError::NotPsiAdmissible);
            }
            yvals.push(v.clone());
        }
        Ok(FoldedSeedNumeric {
            yvals,
            matrix,
        })
    }

    /// X-mutation at a folded direction, using the mutation companion.
    pub fn mutate(&self, k: usize) -> Result<Self, FoldError> {
        let b = self.matrix.mutation_matrix();
        let y = YSeedNumeric::new(self.yvals.clone(), b.clone())?;
        let moved = mutate_y(&y, k)?;
        // Transport the folded matrix by re-folding the mutated companion:
        // μ_k(−(B^G)^T) = −(μ_k(B^G))^T entrywise.
        let mutated_companion = mutate_matrix(&b, k)?;
        let k_orbits = self.matrix.mutable_orbits;
        let entries: Vec<Vec<i64>> = (0..self.matrix.orbits.len())
            .map(|j| {
                (0..k_orbits)
                    .map(|i| -mutated_companion.b(i, j))
                    .collect()
            })
            .collect();
        Ok(FoldedSeedNumeric {
            yvals: moved.yvals,
            matrix: FoldedMatrix {
                orbits: self.matrix.orbits.clone(),
                mutable_orbits: k_orbits,
                entries,
            },
        })
    }
}

/// Breadth-first search over orbit-mutation sequences; true iff every
/// reached labeled quiver is admissible.
pub fn check_globally_foldable(
    q: &Quiver,
    a: &VertexAction,
    cap: usize,
) -> Result<bool, FoldError> {
    if !check_admissible(q, a).is_admissible() {
        return Ok(false);
    }
    let orbits: Vec<Vec<usize>> = a
        .orbits()
        .into_iter()
        .filter(|o| o[0] < q.n_mutable())
        .collect();
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    seen.insert(q.adjacency_full());
    let mut queue = VecDeque::new();
    queue.push_back(q.clone());
    while let Some(state) = queue.pop_front() {
        for orbit in &orbits {
            let next = match orbit_mutation_quiver(&state, orbit) {
                Ok(n) => n,
                Err(FoldError::NonCommuting) => return Ok(false),
                Err(e) => return Err(e),
            };
            if !check_admissible(&next, a).is_admissible() {
                return Ok(false);
            }
            let key = next.adjacency_full();
            if seen.insert(key) {
                if seen.len() > cap {
                    return Err(FoldError::CapExceeded(cap));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(true)
}

/// The folded exchange graph: folded seeds reached by orbit mutations,
/// deduplicated by their unordered folded cluster.
#[derive(Debug, Clone)]
pub struct FoldedPattern {
    pub folded_seed_count: usize,
    pub folded_variable_count: usize,
    /// Every reached state satisfied the fold/mutate commutation
    /// `(μ_I(B))^G = μ_I(B^G)` with the companion convention.
    pub commutation_checked: usize,
}

pub fn enumerate_folded_pattern(
    s0: &Seed,
    a: &VertexAction,
    cap: usize,
) -> Result<FoldedPattern, FoldError> {
    let n = s0.n();
    let orbits: Vec<Vec<usize>> = a.orbits().into_iter().filter(|o| o[0] < n).collect();
    let k = orbits.len();
    // ψ: identify the variables of each orbit.
    let mut class = vec![0usize; s0.m()];
    let all_orbits = a.orbits();
    for (ci, orbit) in all_orbits.iter().enumerate() {
        for &i in orbit {
            class[i] = ci;
        }
    }
    let fold_seed = |s: &Seed| -> Result<Vec<String>, FoldError> {
        let q = Quiver::from_exchange_matrix(&s.matrix).map_err(FoldError::Cluster)?;
        if !check_admissible(&q, a).is_admissible() {
            return Err(FoldError::NotAdmissible("state not admissible".into()));
        }
        let mut keys = Vec::with_capacity(k);
        for orbit in &orbits {
            let folded: Vec<LaurentPoly> = orbit
                .iter()
                .map(|&i| s.vars[i].identify_vars(&class, all_orbits.len()))
                .collect();
            if folded.windows(2).any(|w| w[0] != w[1]) {
                return Err(FoldError::NotPsiAdmissible);
            }
            keys.push(folded[0].canonical_key());
        }
        keys.sort();
        Ok(keys)
    };

    let mut commutation_checked = 0usize;
    let mut index: HashMap<Vec<String>, usize> = HashMap::new();
    let mut states = vec![s0.clone()];
    index.insert(fold_seed(s0)?, 0);
    let mut vars: HashSet<String> = HashSet::new();
    for key in index.keys() {
        vars.extend(key.iter().cloned());
    }
    let mut frontier = vec![0usize];
    while let Some(v) = frontier.pop() {
        let state = states[v].clone();
        let folded_here = fold_matrix(
            &Quiver::from_exchange_matrix(&state.matrix).map_err(FoldError::Cluster)?,
            a,
        )?;
        for (oi, orbit) in orbits.iter().enumerate() {
            let next = orbit_mutation_seed(&state, orbit)?;
            // Commutation: fold after mutating = mutate the fold.
            let folded_next = fold_matrix(
                &Quiver::from_exchange_matrix(&next.matrix).map_err(FoldError::Cluster)?,
                a,
            )?;
            let companion_next = mutate_matrix(&folded_here.mutation_matrix(), oi)?;
            if folded_next.mutation_matrix() != companion_next {
                return Err(FoldError::NotAdmissible(
                    "fold/mutate commutation failed".into(),
                ));
            }
            commutation_checked += 1;
            let key = fold_seed(&next)?;
            vars.extend(key.iter().cloned());
            if !index.contains_key(&key) {
                if states.len() >= cap {
                    return Err(FoldError::CapExceeded(cap));
                }
                let i = states.len();
                index.insert(key, i);
                states.push(next);
                frontier.push(i);
            }
        }
    }
    Ok(FoldedPattern {
        folded_seed_count: states.len(),
        folded_variable_count: vars.len(),
        commutation_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clusterkit::initial_quiver_of_type;
    use crate::rootdata::{classify_finite_cartan, DynkinType};

    fn d4_star_center_source() -> Quiver {
        Quiver::from_arrows(4, 4, [(1, 0), (1, 2), (1, 3)])
    }

    #[test]
    fn d4_star_is_admissible() {
        let q = d4_star_center_source();
        let a = VertexAction::standard_d4_triality();
        assert!(check_admissible(&q, &a).is_admissible());
    }

    #[test]
    fn a3_path_is_admissible() {
        let q = Quiver::from_arrows(3, 3, [(0, 1), (2, 1)]);
        let a = VertexAction::new(vec![2, 1, 0]).unwrap();
        assert!(check_admissible(&q, &a).is_admissible());
    }

    #[test]
    fn arrow_inside_orbit_violates() {
        let q = Quiver::from_arrows(3, 3, [(0, 2), (0, 1)]);
        let a = VertexAction::new(vec![2, 1, 0]).unwrap();
        let report = check_admissible(&q, &a);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ArrowInsideOrbit { .. })));
    }

    #[test]
    fn d4_folds_to_the_g2_matrix() {
        let q = d4_star_center_source();
        let a = VertexAction::standard_d4_triality();
        let f = fold_matrix(&q, &a).unwrap();
        assert_eq!(f.orbits, vec![vec![1], vec![0, 2, 3]]);
        assert_eq!(f.entries, vec![vec![0, 1], vec![-3, 0]]);
        let g2 = DynkinType::parse("G2").unwrap();
        assert_eq!(classify_finite_cartan(&f.cartan_counterpart()), Some(vec![g2]));
        assert_eq!(
            classify_finite_cartan(&f.mutation_matrix().cartan_counterpart()),
            Some(vec![g2])
        );
    }

    #[test]
    fn identity_action_fold_is_principal_part() {
        let q = Quiver::from_arrows(2, 2, [(0, 1)]);
        let a = VertexAction::new(vec![0, 1]).unwrap();
        let f = fold_matrix(&q, &a).unwrap();
        assert_eq!(f.entries, vec![vec![0, 1], vec![-1, 0]]);
    }

    #[test]
    fn a3_fold_has_rank_two_counterpart() {
        let q = Quiver::from_arrows(3, 3, [(0, 1), (2, 1)]);
        let a = VertexAction::new(vec![2, 1, 0]).unwrap();
        let f = fold_matrix(&q, &a).unwrap();
        // Orbits: {2} then {1,3} in 1-based labels.
        assert_eq!(f.orbits, vec![vec![1], vec![0, 2]]);
        assert_eq!(f.entries, vec![vec![0, -1], vec![2, 0]]);
        let b2 = DynkinType::parse("B2").unwrap();
        assert_eq!(classify_finite_cartan(&f.cartan_counterpart()), Some(vec![b2]));
    }

    #[test]
    fn standard_foldings_globally_foldable() {
        let cases: Vec<(Quiver, VertexAction)> = vec![
            (
                initial_quiver_of_type(DynkinType::parse("A3").unwrap()),
                VertexAction::standard_a_odd(3),
            ),
            (
                initial_quiver_of_type(DynkinType::parse("D4").unwrap()),
                VertexAction::standard_d_fork(4),
            ),
            (d4_star_center_source(), VertexAction::standard_d4_triality()),
        ];
        for (q, a) in cases {
            assert_eq!(check_globally_foldable(&q, &a, 100_000), Ok(true));
        }
    }

    #[test]
    fn violating_quiver_fails_global_foldability_immediately() {
        let q = Quiver::from_arrows(3, 3, [(0, 2), (0, 1)]);
        let a = VertexAction::new(vec![2, 1, 0]).unwrap();
        assert_eq!(check_globally_foldable(&q, &a, 100), Ok(false));
    }

    #[test]
    fn folded_a3_has_six_seeds() {
        let q = Quiver::from_arrows(3, 3, [(0, 1), (2, 1)]);
        let a = VertexAction::new(vec![2, 1, 0]).unwrap();
        let s0 = Seed::initial(q.exchange_matrix());
        let pattern = enumerate_folded_pattern(&s0, &a, 10_000).unwrap();
        assert_eq!(pattern.folded_seed_count, 6);
    }

    #[test]
    fn folded_d4_has_eight_seeds() {
        let q = d4_star_center_source();
        let a = VertexAction::standard_d4_triality();
        let s0 = Seed::initial(q.exchange_matrix());
        let pattern = enumerate_folded_pattern(&s0, &a, 10_000).unwrap();
        assert_eq!(pattern.folded_seed_count, 8);
        assert_eq!(pattern.folded_variable_count, 8);
    }

    #[test]
    fn folded_coxeter_compatibility_on_d4() {
        use crate::clusterkit::{bipartite_split_matrix, coxeter_mutation_y};
        use rand::SeedableRng;
        let q = d4_star_center_source();
        let a = VertexAction::standard_d4_triality();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        // Orbit-constant initialization.
        let b = q.exchange_matrix();
        let mut y = YSeedNumeric::generic(b.clone(), &mut rng);
        for orbit in a.orbits() {
            for &i in &orbit[1..] {
                y.yvals[i] = y.yvals[orbit[0]].clone();
            }
        }
        // Upstairs Coxeter mutation is a sequence of orbit mutations since
        // the bipartite classes are unions of orbits.
        let (plus, minus) = bipartite_split_matrix(&y.matrix).unwrap();
        let _ = (plus, minus);
        let upstairs = coxeter_mutation_y(&y).unwrap();
        let folded_up = FoldedSeedNumeric::fold(&upstairs, &a).unwrap();
        // Downstairs: Coxeter mutation of the folded seed: mutate the `+`
        // orbits then the `-` orbits of the folded companion.
        let folded = FoldedSeedNumeric::fold(&y, &a).unwrap();
        let (fp, fm) = bipartite_split_matrix(&folded.matrix.mutation_matrix()).unwrap();
        let mut cur = folded;
        for k in fp.into_iter().chain(fm) {
            cur = cur.mutate(k).unwrap();
        }
        assert_eq!(cur.yvals, folded_up.yvals);
        assert_eq!(cur.matrix.entries, folded_up.matrix.entries);
    }
}
