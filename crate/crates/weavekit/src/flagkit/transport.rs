//! Monodromy by parallel transport: walk the contour of the cycle's
//! subgraph, carry a representative of the sheet line through every wall
//! crossing, and read off the returning scalar.

use super::linalg::{self, QVec};
use super::solver::{Flag, FlagAssignment};
use super::FlagError;
use crate::ngraphkit::{CycleSpec, NGraph};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::HashMap;

/// One arc of the contour: after crossing `crossing` (a half-edge at a
/// vertex of the subgraph, pointing away from it), the loop runs on
/// `sheet` inside `face`.
#[derive(Debug, Clone)]
pub struct LoopStep {
    pub crossing: usize,
    pub face: usize,
    pub sheet: usize,
}

#[derive(Debug, Clone)]
pub struct CycleLoop {
    pub steps: Vec<LoopStep>,
}

/// Contour walk around the subgraph `T` of the cycle: from a half-edge
/// `h` of `T`, scan the rotation at the far vertex counterclockwise
/// after the twin; non-`T` halves are emitted as crossings, the first
/// `T`-half continues the walk.
pub fn loop_of_cycle(g: &NGraph, cycle: &CycleSpec) -> Result<CycleLoop, FlagError> {
    let map = &g.map;
    let in_t = |h: usize| cycle.edges.contains(&map.edge_of(h));
    // Start at the lowest-id trivalent leaf.
    let leaves = cycle.leaf_incidences(map);
    let &(v0, e0) = leaves
        .iter()
        .min_by_key(|&&(v, _)| v)
        .ok_or_else(|| FlagError::Unsupported("cycle has no trivalent leaf".into()))?;
    let h0 = {
        let (ha, hb) = map.halves_of(e0);
        if map.source(ha) == v0 {
            ha
        } else {
            hb
        }
    };
    let mut crossings = Vec::new();
    let mut h = h0;
    loop {
        let t = map.twin(h);
        let mut cur = map.rot_next(t);
        loop {
            if in_t(cur) {
                break;
            }
            crossings.push(cur);
            cur = map.rot_next(cur);
        }
        h = cur;
        if h == h0 {
            break;
        }
        if crossings.len() > 4 * map.half_count() {
            return Err(FlagError::Unsupported("contour does not close".into()));
        }
    }
    // Faces entered after each crossing.
    let faces = g.faces();
    let mut face_of_half = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &x in &f.halves {
            face_of_half.insert(x, i);
        }
    }
    let face_seq: Vec<usize> = crossings
        .iter()
        .map(|&x| *face_of_half.get(&x).expect("crossing half lies in a face"))
        .collect();
    // Sheet assignment: crossing an edge of color c toggles the sheet
    // between c and c+1 when the current sheet is one of them.
    let n = map.n_strands;
    let colors: Vec<usize> = crossings.iter().map(|&x| map.color_of_half(x) as usize).collect();
    let closes = |start: usize| -> Option<Vec<usize>> {
        let mut sheets = Vec::with_capacity(colors.len());
        let mut s = start;
        for &c in &colors {
            // The crossing moves the loop from the previous face into the
            // face after it; the sheet recorded is the one inside the face
            // entered, i.e. after the toggle.
            if s == c {
                s = c + 1;
            } else if s == c + 1 {
                s = c;
            }
            sheets.push(s);
        }
        // Closure: after all crossings we must be back at the start.
        if s == start {
            Some(sheets)
        } else {
            None
        }
    };
    let mut valid: Vec<(usize, Vec<usize>)> = (1..=n)
        .filter_map(|s| closes(s).map(|v| (s, v)))
        .collect();
    if valid.is_empty() {
        return Err(FlagError::NoSheetAssignment);
    }
    if valid.len() > 1 {
        // Pure one-color chains close from both adjacent sheets; the face
        // behind a leaf runs on the sheet matching the leaf color.
        let leaf_color = map.color_of_edge(e0) as usize;
        // The first crossing of the walk is emitted at... the far end of
        // h0; find a step entered after the first crossing at v0 itself:
        // the two crossings at v0 appear consecutively; the face after
        // the first carries the leaf color.
        let pos = crossings
            .iter()
            .position(|&x| map.source(x) == v0)
            .expect("leaf emits crossings");
        valid.retain(|(_, sheets)| sheets[pos] == leaf_color);
        if valid.len() != 1 {
            return Err(FlagError::NoSheetAssignment);
        }
    }
    let sheets = valid.pop().unwrap().1;
    Ok(CycleLoop {
        steps: crossings
            .into_iter()
            .zip(face_seq)
            .zip(sheets)
            .map(|((crossing, face), sheet)| LoopStep {
                crossing,
                face,
                sheet,
            })
            .collect(),
    })
}

/// A representative vector of the sheet line `F^s/F^{s-1}` of a face.
fn representative(flag: &Flag, s: usize, n: usize) -> Result<QVec, FlagError> {
    let lower: Vec<QVec> = if s >= 2 { flag.level(s - 1).to_vec() } else { Vec::new() };
    let upper: Vec<QVec> = if s <= n - 1 {
        flag.level(s).to_vec()
    } else {
        (0..n)
            .map(|i| {
                let mut v = linalg::zeros(n);
                v[i] = linalg::one();
                v
            })
            .collect()
    };
    upper
        .iter()
        .find(|v| {
            let mut cand = lower.clone();
            cand.push((*v).clone());
            linalg::rank(&cand) == lower.len() + 1
        })
        .cloned()
        .ok_or(FlagError::ZeroWedge)
}

/// The normalized transport value: the X-variable convention negates
/// the raw holonomy, and inverts it when the loop runs over the lower
/// sheet behind its leaves.
pub fn normalized_transport(
    g: &NGraph,
    fa: &FlagAssignment,
    cycle: &CycleSpec,
) -> Result<BigRational, FlagError> {
    let raw = transport_monodromy(g, fa, cycle)?;
    let walk = loop_of_cycle(g, cycle)?;
    // Leaf sheet convention: compare the sheet of the face behind the
    // start leaf with the leaf's color.
    let map = &g.map;
    let leaves = cycle.leaf_incidences(map);
    let &(v0, e0) = leaves.iter().min_by_key(|&&(v, _)| v).unwrap();
    let leaf_color = map.color_of_edge(e0) as usize;
    let pos = walk
        .steps
        .iter()
        .position(|s| map.source(s.crossing) == v0)
        .ok_or(FlagError::NoSheetAssignment)?;
    if walk.steps[pos].sheet == leaf_color {
        Ok(-raw.recip())
    } else {
        Ok(-raw)
    }
}

/// Compose the canonical wall-crossing transports around the loop and
/// return the total scalar.
pub fn transport_monodromy(
    g: &NGraph,
    fa: &FlagAssignment,
    cycle: &CycleSpec,
) -> Result<BigRational, FlagError> {
    let walk = loop_of_cycle(g, cycle)?;
    let n = g.n_strands();
    let len = walk.steps.len();
    let start_face = walk.steps[len - 1].face;
    let start_sheet = walk.steps[len - 1].sheet;
    let start_flag = fa.flag_of(start_face);
    let v0 = representative(start_flag, start_sheet, n)?;
    let mut v = v0.clone();
    let mut sheet = start_sheet;
    for i in 0..len {
        let step = &walk.steps[i];
        let c = g.map.color_of_half(step.crossing) as usize;
        if sheet == c {
            // Up: F^c/F^{c-1} → F^{c+1}/F^c: the representative stays,
            // now reduced modulo the far side's F^c.
            sheet = c + 1;
        } else if sheet == c + 1 {
            // Down: decompose v = u + w with u in the far F^c and w in
            // the near F^c; carry u.
            let far: Vec<QVec> = fa.flag_of(step.face).level(c).to_vec();
            let from_face = walk.steps[(i + len - 1) % len].face;
            let near: Vec<QVec> = fa.flag_of(from_face).level(c).to_vec();
            let mut basis = far.clone();
            basis.extend(near.iter().cloned());
            let sol = linalg::solve_in_span(&basis, &v)
                .ok_or(FlagError::ConstraintViolated(g.map.edge_of(step.crossing)))?;
            let mut u = linalg::zeros(n);
            for (cf, b) in sol.iter().take(far.len()).zip(&far) {
                u = linalg::add(&u, &linalg::scale(b, cf));
            }
            if linalg::is_zero(&u) {
                return Err(FlagError::ZeroWedge);
            }
            v = u;
            sheet = c;
        }
    }
    // v represents the same line as v0: solve v = λ·v0 mod F^{s-1}.
    let lower: Vec<QVec> = if start_sheet >= 2 {
        start_flag.level(start_sheet - 1).to_vec()
    } else {
        Vec::new()
    };
    let mut basis = vec![v0];
    basis.extend(lower);
    let sol = linalg::solve_in_span(&basis, &v).ok_or(FlagError::NoSheetAssignment)?;
    if sol[0].is_zero() {
        return Err(FlagError::ZeroWedge);
    }
    Ok(sol[0].clone())
}

