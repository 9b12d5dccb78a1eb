//! Finite-type root-system data.
//!
//! Dynkin types are labeled as in Humphreys: `A_n` is the path
//! `1 - 2 - … - n`, `D_n` attaches `n-1` and `n` to `n-2`, `E_n` hangs
//! vertex `2` off vertex `4` of the path `1 - 3 - 4 - 5 - …`, `B_n`
//! (resp. `C_n`) has a double edge pointing from `n-1` to `n` (resp.
//! from `n` to `n-1`), `F_4` doubles `2 > 3` and `G_2` triples `1 < 2`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootDataError {
    #[error("rank {rank} is not valid for family {family:?}")]
    InvalidRank { family: DynkinFamily, rank: usize },
    #[error("matrix is not a generalized Cartan matrix: {0}")]
    NotGeneralizedCartan(String),
    #[error("positive-root closure did not terminate (cap {0} exceeded)")]
    ClosureCapExceeded(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DynkinFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// An irreducible finite Dynkin type, e.g. `A3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: DynkinFamily,
    pub rank: usize,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl DynkinType {
    pub fn new(family: DynkinFamily, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            DynkinFamily::A => rank >= 1,
            DynkinFamily::B => rank >= 2,
            DynkinFamily::C => rank >= 3,
            DynkinFamily::D => rank >= 4,
            DynkinFamily::E => (6..=8).contains(&rank),
            DynkinFamily::F => rank == 4,
            DynkinFamily::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(RootDataError::InvalidRank { family, rank })
        }
    }

    /// Parse notation like `A3`, `e6`, `G2`.
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        let s = s.trim();
        let (fam, rest) = s.split_at(1);
        let family = match fam.to_ascii_uppercase().as_str() {
            "A" => DynkinFamily::A,
            "B" => DynkinFamily::B,
            "C" => DynkinFamily::C,
            "D" => DynkinFamily::D,
            "E" => DynkinFamily::E,
            "F" => DynkinFamily::F,
            "G" => DynkinFamily::G,
            _ => {
                return Err(RootDataError::NotGeneralizedCartan(format!(
                    "unknown family in {s:?}"
                )))
            }
        };
        let rank: usize = rest.parse().map_err(|_| RootDataError::InvalidRank {
            family,
            rank: 0,
        })?;
        DynkinType::new(family, rank)
    }

    /// Edges of the Dynkin diagram as unordered pairs of 1-based labels.
    pub fn diagram_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            DynkinFamily::A | DynkinFamily::B | DynkinFamily::C | DynkinFamily::F | DynkinFamily::G => {
                (1..n).map(|i| (i, i + 1)).collect()
            }
            DynkinFamily::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            DynkinFamily::E => {
                let mut e = vec![(1, 3), (3, 4), (2, 4)];
                for i in 4..n {
                    e.push((i, i + 1));
                }
                e
            }
        }
    }
}

/// A symmetrizable generalized Cartan matrix with integer entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, RootDataError> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(RootDataError::NotGeneralizedCartan("not square".into()));
            }
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(RootDataError::NotGeneralizedCartan(format!(
                    "diagonal entry ({i},{i}) is {} != 2",
                    entries[i][i]
                )));
            }
            for j in 0..n {
                if i != j {
                    if entries[i][j] > 0 {
                        return Err(RootDataError::NotGeneralizedCartan(format!(
                            "positive off-diagonal entry at ({i},{j})"
                        )));
                    }
                    if (entries[i][j] == 0) != (entries[j][i] == 0) {
                        return Err(RootDataError::NotGeneralizedCartan(format!(
                            "zero pattern not symmetric at ({i},{j})"
                        )));
                    }
                }
            }
        }
        let m = CartanMatrix { entries };
        if m.symmetrizer().is_none() {
            return Err(RootDataError::NotGeneralizedCartan(
                "not symmetrizable".into(),
            ));
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Positive integers `d` with `diag(d) · C` symmetric, when they exist.
    /// Found by propagating ratios along diagram edges componentwise.
    pub fn symmetrizer(&self) -> Option<Vec<i64>> {
        let n = self.rank();
        // d_i * c_ij = d_j * c_ji; propagate over the graph of nonzero entries.
        let mut d: Vec<Option<(i64, i64)>> = vec![None; n]; // rational d_i as (num, den)
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some((1, 1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let (ni, di) = d[i].unwrap();
                for j in 0..n {
                    if i == j || self.entries[i][j] == 0 {
                        continue;
                    }
                    // d_j = d_i * c_ij / c_ji
                    let nj = ni * self.entries[i][j];
                    let dj = di * self.entries[j][i];
                    let (nj, dj) = if dj < 0 { (-nj, -dj) } else { (nj, dj) };
                    match d[j] {
                        None => {
                            d[j] = Some((nj, dj));
                            stack.push(j);
                        }
                        Some((nj0, dj0)) => {
                            if nj * dj0 != nj0 * dj {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        // Scale to positive integers.
        let mut lcm: i64 = 1;
        for v in &d {
            let (_, den) = v.unwrap();
            lcm = num_integer::lcm(lcm, den);
        }
        let mut out = Vec::with_capacity(n);
        let mut g: i64 = 0;
        for v in &d {
            let (num, den) = v.unwrap();
            if num <= 0 {
                return None;
            }
            let val = num * (lcm / den);
            g = num_integer::gcd(g, val);
            out.push(val);
        }
        for v in &mut out {
            *v /= g;
        }
        Some(out)
    }

    /// Leading principal minors, exactly, by fraction-free elimination.
    fn leading_principal_minors(&self) -> Vec<BigInt> {
        let n = self.rank();
        (1..=n)
            .map(|k| {
                let mut m: Vec<Vec<BigInt>> = (0..k)
                    .map(|i| (0..k).map(|j| BigInt::from(self.entries[i][j])).collect())
                    .collect();
                bareiss_det(&mut m)
            })
            .collect()
    }

    /// Whether the symmetrized matrix is positive definite, tested via
    /// exact leading principal minors of `diag(d) · C`.
    pub fn is_positive_definite(&self) -> bool {
        // diag(d)·C has the same leading-minor signs as C up to positive
        // factors, so testing C's minors of the symmetrized matrix directly:
        let Some(d) = self.symmetrizer() else {
            return false;
        };
        let n = self.rank();
        let sym = CartanMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| d[i] * self.entries[i][j]).collect())
                .collect(),
        };
        sym.leading_principal_minors()
            .iter()
            .all(|m| m.is_positive())
    }
}

fn bareiss_det(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// An integer vector of coefficients over the simple roots `α_1..α_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn neg_simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = -1;
        RootVector(v)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// Either a positive root or `-α_i`; the latter for exactly one `i`.
    pub fn is_almost_positive_in(&self, positive: &BTreeSet<RootVector>) -> bool {
        if positive.contains(self) {
            return true;
        }
        let negs = self.0.iter().filter(|&&c| c == -1).count();
        let zeros = self.0.iter().filter(|&&c| c == 0).count();
        negs == 1 && negs + zeros == self.0.len()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The standard Cartan matrix of `t` under the labeling above.
pub fn cartan_matrix(t: DynkinType) -> CartanMatrix {
    let n = t.rank;
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
    }
    for (a, b) in t.diagram_edges() {
        m[a - 1][b - 1] = -1;
        m[b - 1][a - 1] = -1;
    }
    match t.family {
        // Double/triple edges; c_ij = -<α_j, α_i^∨>-style asymmetry fixed so
        // that classify(cartan(t)) = t and the folded examples come out right.
        DynkinFamily::B => m[n - 1][n - 2] = -2,
        DynkinFamily::C => m[n - 2][n - 1] = -2,
        DynkinFamily::F => m[2][1] = -2,
        DynkinFamily::G => {
            m[1][0] = -3;
        }
        _ => {}
    }
    CartanMatrix::new(m).expect("table matrices are valid")
}

/// The Coxeter number `h`.
pub fn coxeter_number(t: DynkinType) -> usize {
    let n = t.rank;
    match t.family {
        DynkinFamily::A => n + 1,
        DynkinFamily::B | DynkinFamily::C => 2 * n,
        DynkinFamily::D => 2 * n - 2,
        DynkinFamily::E => match n {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        DynkinFamily::F => 12,
        DynkinFamily::G => 6,
    }
}

/// All positive roots, as coefficient vectors over the simple roots; the
/// closure of the simple roots under simple reflections, guarded by an
/// iteration cap proportional to `n·h`.
pub fn positive_roots(t: DynkinType) -> BTreeSet<RootVector> {
    positive_roots_of_cartan(&cartan_matrix(t)).expect("finite type terminates")
}

/// Positive roots of an arbitrary finite-type Cartan matrix.
pub fn positive_roots_of_cartan(c: &CartanMatrix) -> Result<BTreeSet<RootVector>, RootDataError> {
    let n = c.rank();
    let cap = 10 * n * (2 * n + 30) + 100;
    let mut roots: BTreeSet<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
    let mut frontier: Vec<RootVector> = roots.iter().cloned().collect();
    let mut steps = 0usize;
    while let Some(beta) = frontier.pop() {
        for i in 0..n {
            steps += 1;
            if steps > cap * cap {
                return Err(RootDataError::ClosureCapExceeded(cap * cap));
            }
            // s_i(β) = β − (Σ_j c_{i,j} β_j) α_i
            let pairing: i64 = (0..n).map(|j| c.entry(i, j) * beta.0[j]).collect::<Vec<_>>().iter().sum();
            let mut refl = beta.clone();
            refl.0[i] -= pairing;
            if refl.is_positive() && !roots.contains(&refl) {
                roots.insert(refl.clone());
                frontier.push(refl);
            }
        }
    }
    Ok(roots)
}

/// The almost positive roots `Φ_{≥-1} = Φ⁺ ∪ (-Π)`.
pub fn almost_positive_roots(t: DynkinType) -> Vec<RootVector> {
    let n = t.rank;
    let mut v: Vec<RootVector> = (0..n).map(|i| RootVector::neg_simple(n, i)).collect();
    v.extend(positive_roots(t));
    v
}

/// Decompose a generalized Cartan matrix into the multiset of irreducible
/// finite-type components, or `None` when the symmetrization is not
/// positive definite.
pub fn classify_finite_cartan(c: &CartanMatrix) -> Option<Vec<DynkinType>> {
    if !c.is_positive_definite() {
        return None;
    }
    let n = c.rank();
    // Connected components of the underlying diagram.
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = ncomp;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && c.entry(i, j) != 0 && comp[j] == usize::MAX {
                    comp[j] = ncomp;
                    stack.push(j);
                }
            }
        }
        ncomp += 1;
    }
    let mut types = Vec::new();
    for k in 0..ncomp {
        let idx: Vec<usize> = (0..n).filter(|&i| comp[i] == k).collect();
        let sub: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| c.entry(i, j)).collect())
            .collect();
        types.push(identify_irreducible(&sub)?);
    }
    types.sort();
    Some(types)
}

/// Match an irreducible positive-definite component against the catalog by
/// searching for a label permutation.
fn identify_irreducible(sub: &[Vec<i64>]) -> Option<DynkinType> {
    let n = sub.len();
    let candidates: Vec<DynkinType> = [
        DynkinFamily::A,
        DynkinFamily::B,
        DynkinFamily::C,
        DynkinFamily::D,
        DynkinFamily::E,
        DynkinFamily::F,
        DynkinFamily::G,
    ]
    .iter()
    .filter_map(|&f| DynkinType::new(f, n).ok())
    .collect();
    for t in candidates {
        let target = cartan_matrix(t);
        if permutation_equal(sub, target.rows()) {
            return Some(t);
        }
    }
    None
}

/// Backtracking search for a permutation `p` with `a[p(i)][p(j)] = b[i][j]`.
fn permutation_equal(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let mut assign: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn rec(
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        'next: for cand in 0..n {
            if used[cand] {
                continue;
            }
            for j in 0..i {
                let pj = assign[j].unwrap();
                if a[cand][pj] != b[i][j] || a[pj][cand] != b[j][i] {
                    continue 'next;
                }
            }
            assign[i] = Some(cand);
            used[cand] = true;
            if rec(a, b, assign, used, i + 1) {
                return true;
            }
            assign[i] = None;
            used[cand] = false;
        }
        false
    }
    rec(a, b, &mut assign, &mut used, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> DynkinType {
        DynkinType::parse(s).unwrap()
    }

    #[test]
    fn cartan_small_cases() {
        assert_eq!(cartan_matrix(ty("A2")).rows(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix(ty("A1")).rows(), &[vec![2]]);
        assert_eq!(cartan_matrix(ty("G2")).rows(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(DynkinType::new(DynkinFamily::B, 1).is_err());
        assert!(DynkinType::new(DynkinFamily::C, 2).is_err());
        assert!(DynkinType::new(DynkinFamily::D, 3).is_err());
        assert!(DynkinType::new(DynkinFamily::E, 9).is_err());
        assert!(DynkinType::new(DynkinFamily::F, 5).is_err());
        assert!(DynkinType::new(DynkinFamily::G, 3).is_err());
    }

    #[test]
    fn coxeter_numbers_table() {
        assert_eq!(coxeter_number(ty("A3")), 4);
        assert_eq!(coxeter_number(ty("D4")), 6);
        assert_eq!(coxeter_number(ty("G2")), 6);
        assert_eq!(coxeter_number(ty("E6")), 12);
        assert_eq!(coxeter_number(ty("E7")), 18);
        assert_eq!(coxeter_number(ty("E8")), 30);
        assert_eq!(coxeter_number(ty("F4")), 12);
        assert_eq!(coxeter_number(ty("B4")), 8);
        assert_eq!(coxeter_number(ty("C5")), 10);
        assert_eq!(coxeter_number(ty("D6")), 10);
    }

    #[test]
    fn positive_roots_a2() {
        let roots = positive_roots(ty("A2"));
        let expect: BTreeSet<RootVector> = [vec![1, 0], vec![0, 1], vec![1, 1]]
            .into_iter()
            .map(RootVector)
            .collect();
        assert_eq!(roots, expect);
    }

    #[test]
    fn positive_roots_a1_and_d4() {
        assert_eq!(positive_roots(ty("A1")).len(), 1);
        assert_eq!(positive_roots(ty("D4")).len(), 12);
    }

    #[test]
    fn positive_root_counts_match_nh_over_2() {
        for t in all_types_up_to_rank(8) {
            let h = coxeter_number(t);
            let count = positive_roots(t).len();
            assert_eq!(count, t.rank * h / 2, "count mismatch for {t}");
        }
    }

    #[test]
    fn classify_round_trips() {
        for t in all_types_up_to_rank(8) {
            let got = classify_finite_cartan(&cartan_matrix(t));
            assert_eq!(got, Some(vec![t]), "classification failed for {t}");
        }
    }

    #[test]
    fn classify_examples() {
        let a2 = CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(classify_finite_cartan(&a2), Some(vec![ty("A2")]));
        let g2 = CartanMatrix::new(vec![vec![2, -1], vec![-3, 2]]).unwrap();
        assert_eq!(classify_finite_cartan(&g2), Some(vec![ty("G2")]));
        let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(classify_finite_cartan(&affine), None);
    }

    #[test]
    fn classify_reducible() {
        // A2 ⊕ A1
        let m = CartanMatrix::new(vec![
            vec![2, 0, -1],
            vec![0, 2, 0],
            vec![-1, 0, 2],
        ])
        .unwrap();
        assert_eq!(classify_finite_cartan(&m), Some(vec![ty("A1"), ty("A2")]));
    }

    #[test]
    fn rejects_bad_cartan_input() {
        assert!(CartanMatrix::new(vec![vec![1]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, 0], vec![-1, 2]]).is_err());
    }

    #[test]
    fn roots_have_nonnegative_coords() {
        for t in all_types_up_to_rank(6) {
            for r in positive_roots(t) {
                assert!(r.0.iter().all(|&c| c >= 0));
            }
        }
    }

    pub fn all_types_up_to_rank(max: usize) -> Vec<DynkinType> {
        let mut v = Vec::new();
        for n in 1..=max {
            for f in [
                DynkinFamily::A,
                DynkinFamily::B,
                DynkinFamily::C,
                DynkinFamily::D,
                DynkinFamily::E,
                DynkinFamily::F,
                DynkinFamily::G,
            ] {
                if let Ok(t) = DynkinType::new(f, n) {
                    v.push(t);
                }
            }
        }
        v
    }
}
