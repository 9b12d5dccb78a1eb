//! Boundary flag construction and face flag solving.

use super::linalg::{self, QVec};
use super::FlagError;
use crate::ngraphkit::{Face, NGraph};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A full flag in rational N-space, stored as one basis per proper level:
/// `levels[j]` spans `F^{j+1}` (so `levels` has `N−1` entries).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub n: usize,
    pub levels: Vec<Vec<QVec>>,
}

impl Flag {
    /// Exactness checks: dimensions and nesting.
    pub fn validate(&self) -> Result<(), FlagError> {
        for (j, basis) in self.levels.iter().enumerate() {
            if basis.len() != j + 1 || linalg::rank(basis) != j + 1 {
                return Err(FlagError::InconsistentClosure(format!(
                    "level {} has wrong dimension",
                    j + 1
                )));
            }
            if j > 0 && !linalg::in_span(basis, &self.levels[j - 1]) {
                return Err(FlagError::InconsistentClosure(format!(
                    "level {} does not contain level {}",
                    j + 1,
                    j
                )));
            }
        }
        Ok(())
    }

    pub fn level(&self, j: usize) -> &[QVec] {
        &self.levels[j - 1]
    }

    /// Subspace equality at a level against another flag.
    pub fn level_eq(&self, other: &Flag, j: usize) -> bool {
        linalg::in_span(self.level(j), other.level(j))
            && linalg::in_span(other.level(j), self.level(j))
    }

    /// Apply an invertible matrix to every level.
    pub fn transform(&self, m: &[QVec]) -> Flag {
        let apply = |v: &QVec| -> QVec {
            (0..self.n)
                .map(|i| linalg::dot(&m[i], v))
                .collect()
        };
        Flag {
            n: self.n,
            levels: self
                .levels
                .iter()
                .map(|basis| basis.iter().map(apply).collect())
                .collect(),
        }
    }
}

/// Flags on the boundary arcs of the outer circle, indexed by arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryFlags {
    pub arcs: Vec<Flag>,
}

/// Flags on the material faces, indexed like `NGraph::faces()`.
#[derive(Debug, Clone)]
pub struct FlagAssignment {
    pub flags: Vec<Option<Flag>>,
    pub faces: Vec<Face>,
}

impl FlagAssignment {
    pub fn flag_of(&self, face: usize) -> &Flag {
        self.flags[face].as_ref().expect("material face has a flag")
    }
}

fn rational(rng: &mut impl Rng) -> BigRational {
    BigRational::from_integer(rng.gen_range(-97i64..=97).into())
}

/// Build generic boundary flags for the faces of `g`: the face flags
/// are drawn level by level along the equivalence classes forced by the
/// interior edges, so the assignment closes up around the circle by
/// construction; arcs inherit their face's flag.
pub fn generic_boundary_flags(g: &NGraph, seed: u64) -> Result<BoundaryFlags, FlagError> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..16 {
        match try_generic(g, &mut rng) {
            Ok(bf) => return Ok(bf),
            Err(FlagError::DegenerateDraw(_)) if attempt + 1 < 16 => continue,
            Err(e) => return Err(e),
        }
    }
    Err(FlagError::DegenerateDraw(16))
}

fn try_generic(g: &NGraph, rng: &mut impl Rng) -> Result<BoundaryFlags, FlagError> {
    let n = g.n_strands();
    let word = g.boundary_word();
    let l = word.len();
    if l == 0 {
        return Err(FlagError::InconsistentClosure("empty boundary".into()));
    }
    let faces = g.faces();
    let nf = faces.len();
    let mut face_of_half: HashMap<usize, usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &h in &f.halves {
            face_of_half.insert(h, i);
        }
    }
    // Union-find over (face, level), joined across interior edges whose
    // color differs from the level.
    let idx = |f: usize, j: usize| f * n + j;
    let mut parent: Vec<usize> = (0..nf * n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
            r
        } else {
            i
        }
    }
    let mut edges_between: Vec<(usize, usize, usize)> = Vec::new();
    for e in 0..g.map.edge_count() {
        let c = g.map.color_of_edge(e) as usize;
        if c == 0 {
            continue;
        }
        let (h0, h1) = g.map.halves_of(e);
        let (Some(&fa), Some(&fb)) = (face_of_half.get(&h0), face_of_half.get(&h1)) else {
            continue;
        };
        if !faces[fa].material || !faces[fb].material {
            continue;
        }
        if fa == fb {
            return Err(FlagError::InconsistentClosure(format!(
                "edge {e} bounds one face on both sides"
            )));
        }
        edges_between.push((fa, fb, c));
        for j in 1..n {
            if j != c {
                let (a, b) = (idx(fa, j), idx(fb, j));
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    // Class incidence: within a face, the level-j class must contain
    // the level-(j-1) class. Assign classes by constrained search:
    // constrained classes first, free draws otherwise.
    let mut class_members: std::collections::BTreeMap<(usize, usize), Vec<usize>> =
        Default::default();
    for (f, face) in faces.iter().enumerate() {
        if !face.material {
            continue;
        }
        for j in 1..n {
            class_members
                .entry((j, find(&mut parent, idx(f, j))))
                .or_default()
                .push(f);
        }
    }
    let mut value: HashMap<usize, Vec<QVec>> = HashMap::new();
    let class_keys: Vec<(usize, usize)> = class_members.keys().copied().collect();
    let mut remaining: Vec<(usize, usize)> = class_keys.clone();
    while !remaining.is_empty() {
        // Prefer a class with assigned neighbors; otherwise start a free
        // top-level draw.
        let pick = remaining
            .iter()
            .position(|&(j, root)| {
                class_members[&(j, root)].iter().any(|&f| {
                    let mut has = false;
                    if j >= 2 {
                        has |= value.contains_key(&find(&mut parent, idx(f, j - 1)));
                    }
                    if j + 1 < n {
                        has |= value.contains_key(&find(&mut parent, idx(f, j + 1)));
                    }
                    has
                })
            })
            .or_else(|| {
                remaining
                    .iter()
                    .enumerate()
                    .filter(|(_, &(j, _))| j == n - 1)
                    .map(|(i, _)| i)
                    .next()
            })
            .unwrap_or(0);
        let (j, root) = remaining.remove(pick);
        // Must contain the span of assigned lower neighbors...
        let mut span: Vec<QVec> = Vec::new();
        // ...and lie inside the intersection of assigned upper neighbors.
        let mut uppers: Vec<Vec<QVec>> = Vec::new();
        for &f in &class_members[&(j, root)] {
            if j >= 2 {
                if let Some(b) = value.get(&find(&mut parent, idx(f, j - 1))) {
                    for v in b {
                        let mut cand = span.clone();
                        cand.push(v.clone());
                        if linalg::rank(&cand) > span.len() {
                            span.push(v.clone());
                        }
                    }
                }
            }
            if j + 1 < n {
                if let Some(b) = value.get(&find(&mut parent, idx(f, j + 1))) {
                    uppers.push(b.clone());
                }
            }
        }
        if span.len() > j {
            return Err(FlagError::DegenerateDraw(1));
        }
        // Solution space: vectors lying in every assigned upper space.
        let ambient: Vec<QVec> = intersect_all(n, &uppers);
        if linalg::rank(&ambient) < j || !spans_contain(&ambient, &span) {
            return Err(FlagError::DegenerateDraw(1));
        }
        let mut basis = span;
        let mut guard = 0;
        while basis.len() < j {
            let coeffs: Vec<BigRational> = (0..ambient.len()).map(|_| rational(rng)).collect();
            let mut v = linalg::zeros(n);
            for (cf, u) in coeffs.iter().zip(&ambient) {
                v = linalg::add(&v, &linalg::scale(u, cf));
            }
            let mut cand = basis.clone();
            cand.push(v.clone());
            if linalg::rank(&cand) > basis.len() {
                basis.push(v);
            }
            guard += 1;
            if guard > 64 {
                return Err(FlagError::DegenerateDraw(1));
            }
        }
        value.insert(root, basis);
    }
    // Audit nesting inside every face.
    for (f, face) in faces.iter().enumerate() {
        if !face.material {
            continue;
        }
        for j in 2..n {
            let low = value[&find(&mut parent, idx(f, j - 1))].clone();
            let high = value[&find(&mut parent, idx(f, j))].clone();
            if !linalg::in_span(&high, &low) {
                return Err(FlagError::DegenerateDraw(1));
            }
        }
    }
    // Disequalities across every interior edge.
    for &(fa, fb, c) in &edges_between {
        if c >= n {
            continue;
        }
        let a = value[&find(&mut parent, idx(fa, c))].clone();
        let b = value[&find(&mut parent, idx(fb, c))].clone();
        if linalg::in_span(&a, &b) {
            return Err(FlagError::DegenerateDraw(1));
        }
    }
    // Arc flags from their faces.
    let mut arc_face = vec![usize::MAX; l];
    for (i, f) in faces.iter().enumerate() {
        for &(_, j) in &f.arcs {
            arc_face[j] = i;
        }
    }
    let mut arcs = Vec::with_capacity(l);
    for (j, &f) in arc_face.iter().enumerate() {
        if f == usize::MAX {
            return Err(FlagError::InconsistentClosure(format!(
                "arc {j} touches no material face"
            )));
        }
        let levels: Vec<Vec<QVec>> = (1..n)
            .map(|lv| value[&find(&mut parent, idx(f, lv))].clone())
            .collect();
        let flag = Flag { n, levels };
        flag.validate()?;
        arcs.push(flag);
    }
    Ok(BoundaryFlags { arcs })
}

/// Assign flags to every material face: boundary-touching faces take
/// their arc's flag; interior faces are reconstructed from the edge
/// constraints where that determines them. Every interior edge is
/// audited afterwards.
pub fn solve_face_flags(g: &NGraph, bf: &BoundaryFlags) -> Result<FlagAssignment, FlagError> {
    let n = g.n_strands();
    let faces = g.faces();
    let mut flags: Vec<Option<Flag>> = vec![None; faces.len()];
    // Half-edge to face index.
    let mut face_of_half: HashMap<usize, usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &h in &f.halves {
            face_of_half.insert(h, i);
        }
    }
    for (i, f) in faces.iter().enumerate() {
        if !f.material {
            continue;
        }
        if let Some(&(_, j0)) = f.arcs.first() {
            let flag = &bf.arcs[j0];
            for &(_, j) in &f.arcs {
                if bf.arcs[j] != *flag {
                    return Err(FlagError::ConstraintViolated(j));
                }
            }
            flags[i] = Some(flag.clone());
        }
    }

    // Interior reconstruction: levels of undetermined faces are tied to
    // neighbors across every edge whose color differs from the level.
    let interior: Vec<usize> = faces
        .iter()
        .enumerate()
        .filter(|(i, f)| f.material && flags[*i].is_none())
        .map(|(i, _)| i)
        .collect();
    if !interior.is_empty() {
        solve_interior(g, &faces, &mut flags, &face_of_half, n, &interior)?;
    }

    // Audit every interior graph edge.
    for e in 0..g.map.edge_count() {
        let c = g.map.color_of_edge(e) as usize;
        if c == 0 {
            continue;
        }
        let (h0, h1) = g.map.halves_of(e);
        let (Some(&fa), Some(&fb)) = (face_of_half.get(&h0), face_of_half.get(&h1)) else {
            continue;
        };
        if fa == fb {
            return Err(FlagError::ConstraintViolated(e));
        }
        if !faces[fa].material || !faces[fb].material {
            continue;
        }
        let (x, y) = (flags[fa].as_ref().unwrap(), flags[fb].as_ref().unwrap());
        for j in 1..n {
            let eq = x.level_eq(y, j);
            if (j == c) == eq {
                return Err(FlagError::ConstraintViolated(e));
            }
        }
    }
    Ok(FlagAssignment { flags, faces })
}

fn solve_interior(
    g: &NGraph,
    faces: &[Face],
    flags: &mut [Option<Flag>],
    face_of_half: &HashMap<usize, usize>,
    n: usize,
    interior: &[usize],
) -> Result<(), FlagError> {
    // Union-find over (face, level) pairs joined across edges of a
    // different color.
    let nf = faces.len();
    let idx = |f: usize, j: usize| f * n + j;
    let mut parent: Vec<usize> = (0..nf * n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
            r
        } else {
            i
        }
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for e in 0..g.map.edge_count() {
        let c = g.map.color_of_edge(e) as usize;
        if c == 0 {
            continue;
        }
        let (h0, h1) = g.map.halves_of(e);
        let (Some(&fa), Some(&fb)) = (face_of_half.get(&h0), face_of_half.get(&h1)) else {
            continue;
        };
        if !faces[fa].material || !faces[fb].material || fa == fb {
            continue;
        }
        for j in 1..n {
            if j != c {
                union(&mut parent, idx(fa, j), idx(fb, j));
            }
        }
    }
    // Known class values from boundary-determined faces.
    let mut value: HashMap<usize, Vec<QVec>> = HashMap::new();
    for f in 0..nf {
        if let Some(flag) = &flags[f] {
            for j in 1..n {
                let root = find(&mut parent, idx(f, j));
                value.entry(root).or_insert_with(|| flag.level(j).to_vec());
            }
        }
    }
    // Iterate: a class whose members' lower levels span its dimension is
    // determined by that span.
    let mut changed = true;
    while changed {
        changed = false;
        for &f in interior {
            for j in 1..n {
                let root = find(&mut parent, idx(f, j));
                if value.contains_key(&root) {
                    continue;
                }
                // Collect known lower subspaces of every member face.
                let mut span: Vec<QVec> = Vec::new();
                for mf in 0..nf {
                    for mj in 1..n {
                        if find(&mut parent, idx(mf, mj)) != root {
                            continue;
                        }
                        if mj >= 2 {
                            let low = find(&mut parent, idx(mf, mj - 1));
                            if let Some(b) = value.get(&low) {
                                span.extend(b.iter().cloned());
                            }
                        }
                    }
                }
                if !span.is_empty() && linalg::rank(&span) == j {
                    let mut basis = Vec::new();
                    for v in span {
                        let mut cand = basis.clone();
                        cand.push(v.clone());
                        if linalg::rank(&cand) > basis.len() {
                            basis.push(v);
                        }
                    }
                    value.insert(root, basis);
                    changed = true;
                }
            }
        }
    }
    for &f in interior {
        let mut levels = Vec::new();
        for j in 1..n {
            let root = find(&mut parent, idx(f, j));
            match value.get(&root) {
                Some(b) if b.len() == j => levels.push(b.clone()),
                _ => return Err(FlagError::InteriorFace(f)),
            }
        }
        let flag = Flag { n, levels };
        flag.validate()
            .map_err(|_| FlagError::InteriorFace(f))?;
        flags[f] = Some(flag);
    }
    Ok(())
}

/// Basis of the intersection of the given subspaces of Q^n (all of Q^n
/// when the list is empty).
fn intersect_all(n: usize, spaces: &[Vec<QVec>]) -> Vec<QVec> {
    let mut basis: Vec<QVec> = (0..n)
        .map(|i| {
            let mut v = linalg::zeros(n);
            v[i] = linalg::one();
            v
        })
        .collect();
    for space in spaces {
        basis = intersect_two(&basis, space);
    }
    basis
}

fn intersect_two(a: &[QVec], b: &[QVec]) -> Vec<QVec> {
    // Solve for combinations of `a` lying in span(b): nullspace method.
    let out: Vec<QVec> = a
        .iter()
        .map(|v| v.clone())
        .collect();
    if out.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = out[0].len();
    // Coefficient vectors x with A^T x in span(b): equivalently
    // rank([b; A^T x]) == rank(b).  Set up: find all x in Q^{|a|} with
    // proj_{complement}(A^T x) = 0 using a basis of the complement of b.
    // Simpler for small sizes: brute force via row reduction of the
    // combined system [aᵀ | -bᵀ].
    let k = a.len();
    let m = b.len();
    let rows = n;
    let cols = k + m;
    let mut mat: Vec<QVec> = (0..rows)
        .map(|r| {
            let mut row: QVec = Vec::with_capacity(cols);
            for av in a {
                row.push(av[r].clone());
            }
            for bv in b {
                row.push(-bv[r].clone());
            }
            row
        })
        .collect();
    // Row reduce and extract the nullspace.
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let pv = mat[r][c].clone();
        for x in &mut mat[r] {
            *x /= &pv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f2 = mat[i][c].clone();
                let row = mat[r].clone();
                for (x, y) in mat[i].iter_mut().zip(&row) {
                    *x -= &f2 * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut out_basis: Vec<QVec> = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        // Back-substitute a kernel vector with 1 at the free column.
        let mut x = vec![num_traits::Zero::zero(); cols];
        x[free] = linalg::one();
        for (row, &pc) in pivots.iter().enumerate() {
            let mut acc: BigRational = num_traits::Zero::zero();
            for c in 0..cols {
                if c != pc && !mat[row][c].is_zero() {
                    acc += &mat[row][c] * &x[c];
                }
            }
            x[pc] = -acc;
        }
        // The intersection vector is A^T (first k coordinates).
        let mut v = linalg::zeros(n);
        for (cf, av) in x[..k].iter().zip(a) {
            v = linalg::add(&v, &linalg::scale(av, cf));
        }
        if !linalg::is_zero(&v) {
            let mut cand = out_basis.clone();
            cand.push(v.clone());
            if linalg::rank(&cand) > out_basis.len() {
                out_basis.push(v);
            }
        }
    }
    out_basis
}

fn spans_contain(ambient: &[QVec], span: &[QVec]) -> bool {
    span.iter().all(|v| linalg::in_span(ambient, &[v.clone()]))
}
