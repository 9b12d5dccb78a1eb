//! Monodromy evaluation: cross-ratios at I-cycles, triple ratios at
//! Y-cycles, and the transport route for long I-cycles.

use super::linalg::{self, QVec};
use super::solver::FlagAssignment;
use super::transport::{loop_of_cycle, normalized_transport};
use super::FlagError;
use crate::clusterkit::Quiver;
use crate::ngraphkit::{quiver_of, CycleKind, CycleSpec, CycleTuple, NGraph, VertexKind};
use num_rational::BigRational;
use num_traits::Zero;

/// `⟨v1,v2,v3,v4⟩ = (v1∧v2)(v3∧v4) / ((v2∧v3)(v4∧v1))` on coordinate
/// pairs in a two-dimensional quotient.
pub fn cross_ratio(
    v1: &[BigRational; 2],
    v2: &[BigRational; 2],
    v3: &[BigRational; 2],
    v4: &[BigRational; 2],
) -> Result<BigRational, FlagError> {
    let num = linalg::wedge2(v1, v2) * linalg::wedge2(v3, v4);
    let den = linalg::wedge2(v2, v3) * linalg::wedge2(v4, v1);
    if den.is_zero() || num.is_zero() {
        return Err(FlagError::ZeroWedge);
    }
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YSense {
    Upper,
    Lower,
}

/// The triple ratio `B(a)C(b)A(c) / (B(c)C(a)A(b))` (upper sense) or its
/// reciprocal pattern (lower sense); lines as 3-vectors, planes as pairs
/// of spanning 3-vectors.
pub fn triple_ratio(
    lines: [&QVec; 3],
    planes: [&[QVec]; 3],
    sense: YSense,
) -> Result<BigRational, FlagError> {
    let [a, b, c] = lines;
    let cov: Vec<QVec> = planes.iter().map(|p| linalg::plane_covector(p)).collect();
    let (ca, cb, cc) = (&cov[0], &cov[1], &cov[2]);
    let pair = |cv: &QVec, line: &QVec| -> Result<BigRational, FlagError> {
        let v = linalg::dot(cv, line);
        if v.is_zero() {
            Err(FlagError::ZeroPairing)
        } else {
            Ok(v)
        }
    };
    let num = pair(cb, a)? * pair(cc, b)? * pair(ca, c)?;
    let den = pair(cb, c)? * pair(cc, a)? * pair(ca, b)?;
    match sense {
        YSense::Upper => Ok(num / den),
        YSense::Lower => Ok(den / num),
    }
}

/// The microlocal monodromy of a cycle with respect to a flag
/// assignment. I- and Y-cycles evaluate their closed formulas; long
/// I-cycles go through the parallel-transport route. The two routes are
/// checked against each other in the tests.
pub fn monodromy(
    g: &NGraph,
    fa: &FlagAssignment,
    cycle: &CycleSpec,
) -> Result<BigRational, FlagError> {
    match cycle.kind {
        CycleKind::I => monodromy_i(g, fa, cycle),
        CycleKind::Y => monodromy_y(g, fa, cycle),
        CycleKind::LongI => normalized_transport(g, fa, cycle),
    }
}

/// Faces around an I-cycle in loop order, starting from the face behind
/// the smaller endpoint.
fn monodromy_i(
    g: &NGraph,
    fa: &FlagAssignment,
    cycle: &CycleSpec,
) -> Result<BigRational, FlagError> {
    let walk = loop_of_cycle(g, cycle)?;
    let c = g.map.color_of_edge(cycle.edges[0]) as usize;
    // Four faces in loop order; start at a face whose sheet is `c`.
    let start = walk
        .steps
        .iter()
        .position(|s| s.sheet == c)
        .ok_or(FlagError::NoSheetAssignment)?;
    let faces: Vec<usize> = (0..4)
        .map(|i| walk.steps[(start + i) % 4].face)
        .collect();
    let n = g.n_strands();
    // Coordinates of each face's c-level line in the 2-dim quotient
    // F^{c+1}/F^{c-1}.
    let coords = quotient_pair_coords(g, fa, &faces, c, n)?;
    let raw = cross_ratio(&coords[0], &coords[1], &coords[2], &coords[3])?;
    Ok(-raw.recip())
}

fn quotient_pair_coords(
    g: &NGraph,
    fa: &FlagAssignment,
    faces: &[usize],
    c: usize,
    n: usize,
) -> Result<Vec<[BigRational; 2]>, FlagError> {
    let _ = g;
    // An ambient basis for the quotient: the common F^{c+1} modulo the
    // common F^{c-1}.
    let f0 = fa.flag_of(faces[0]);
    let upper: Vec<QVec> = if c < n - 1 {
        f0.level(c + 1).to_vec()
    } else {
        (0..n)
            .map(|i| {
                let mut v = linalg::zeros(n);
                v[i] = linalg::one();
                v
            })
            .collect()
    };
    let lower: Vec<QVec> = if c >= 2 { f0.level(c - 1).to_vec() } else { Vec::new() };
    // Pick two completion vectors of `upper` past `lower`.
    let mut basis = lower.clone();
    let mut completion = Vec::new();
    for u in &upper {
        let mut cand = basis.clone();
        cand.push(u.clone());
        if linalg::rank(&cand) > basis.len() {
            basis.push(u.clone());
            completion.push(u.clone());
        }
    }
    if completion.len() != 2 {
        return Err(FlagError::Unsupported("quotient is not a plane".into()));
    }
    let mut out = Vec::new();
    for &f in faces {
        let flag = fa.flag_of(f);
        // A representative of F^c not in F^{c-1}.
        let rep = flag
            .level(c)
            .iter()
            .find(|v| {
                let mut cand = lower.clone();
                cand.push((*v).clone());
                linalg::rank(&cand) == lower.len() + 1
            })
            .ok_or(FlagError::ZeroWedge)?;
        // rep = α·completion[0] + β·completion[1] + (lower part).
        let mut full = lower.clone();
        full.extend(completion.iter().cloned());
        let sol = linalg::solve_in_span(&full, rep).ok_or(FlagError::ConstraintViolated(0))?;
        out.push([
            sol[lower.len()].clone(),
            sol[lower.len() + 1].clone(),
        ]);
    }
    Ok(out)
}

/// The three outer faces behind the legs of a Y-cycle, counterclockwise.
fn monodromy_y(
    g: &NGraph,
    fa: &FlagAssignment,
    cycle: &CycleSpec,
) -> Result<BigRational, FlagError> {
    if g.n_strands() != 3 {
        return Err(FlagError::Unsupported(
            "triple ratios need three strands".into(),
        ));
    }
    let walk = loop_of_cycle(g, cycle)?;
    // The face behind each leg is entered after the first of the two
    // consecutive crossings at that trivalent leaf.
    let mut outer: Vec<usize> = Vec::new();
    let len = walk.steps.len();
    for i in 0..len {
        let cur = &walk.steps[i];
        let nxt = &walk.steps[(i + 1) % len];
        let v = g.map.source(cur.crossing);
        if g.map.source(nxt.crossing) == v
            && matches!(g.map.kind(v), VertexKind::Trivalent(_))
        {
            outer.push(cur.face);
        }
    }
    if outer.len() != 3 {
        return Err(FlagError::Unsupported(format!(
            "expected 3 outer faces, found {}",
            outer.len()
        )));
    }
    let c = g.map.color_of_edge(cycle.edges[0]);
    let hex_low = {
        // The hexagonal point's low color tells upper from lower.
        let shared = cycle
            .edges
            .iter()
            .flat_map(|&e| {
                let (h0, h1) = g.map.halves_of(e);
                [g.map.source(h0), g.map.source(h1)]
            })
            .find(|&v| matches!(g.map.kind(v), VertexKind::Hexagonal(_)))
            .ok_or_else(|| FlagError::Unsupported("Y-cycle without hexagonal point".into()))?;
        match g.map.kind(shared) {
            VertexKind::Hexagonal(low) => low,
            _ => unreachable!(),
        }
    };
    let sense = if c == hex_low {
        YSense::Upper
    } else {
        YSense::Lower
    };
    let flags: Vec<&super::solver::Flag> = outer.iter().map(|&f| fa.flag_of(f)).collect();
    let lines: Vec<QVec> = flags.iter().map(|f| f.level(1)[0].clone()).collect();
    let planes: Vec<Vec<QVec>> = flags.iter().map(|f| f.level(2).to_vec()).collect();
    triple_ratio(
        [&lines[0], &lines[1], &lines[2]],
        [&planes[0], &planes[1], &planes[2]],
        sense,
    )
}

/// The seed extraction: monodromies ordered by cycle label, plus the
/// intersection quiver.
pub fn extract_seed(
    g: &NGraph,
    cycles: &CycleTuple,
    fa: &FlagAssignment,
) -> Result<(Vec<BigRational>, Quiver), FlagError> {
    let mut labeled: Vec<(usize, BigRational)> = Vec::new();
    for s in cycles.specs() {
        labeled.push((s.label, monodromy(g, fa, s)?));
    }
    labeled.sort_by_key(|&(l, _)| l);
    let q = quiver_of(g, cycles)?;
    Ok((labeled.into_iter().map(|(_, v)| v).collect(), q))
}
