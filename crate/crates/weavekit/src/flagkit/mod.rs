//! Exact flag assignments on the faces of an N-graph and microlocal
//! monodromy evaluation over the rationals.

mod linalg;
mod monodromy;
mod solver;
mod transport;

pub use linalg::{det3, plane_covector, rank, solve_in_span, wedge2, QVec};
pub use monodromy::{cross_ratio, extract_seed, monodromy, triple_ratio, YSense};
pub use solver::{generic_boundary_flags, solve_face_flags, BoundaryFlags, Flag, FlagAssignment};
pub use transport::{normalized_transport, transport_monodromy};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlagError {
    #[error("degenerate draw persisted after {0} retries")]
    DegenerateDraw(usize),
    #[error("boundary flags admit no consistent closure: {0}")]
    InconsistentClosure(String),
    #[error("face {0} touches no boundary arc and is not determined by its neighbors")]
    InteriorFace(usize),
    #[error("flag constraint violated across edge {0}")]
    ConstraintViolated(usize),
    #[error("zero wedge: cyclically consecutive lines coincide")]
    ZeroWedge,
    #[error("zero pairing between a line and a plane covector")]
    ZeroPairing,
    #[error("sheet assignment along the cycle does not close")]
    NoSheetAssignment,
    #[error("cycle or graph shape not supported: {0}")]
    Unsupported(String),
    #[error("graph error: {0}")]
    Graph(String),
}

impl From<crate::ngraphkit::NGraphError> for FlagError {
    fn from(e: crate::ngraphkit::NGraphError) -> Self {
        FlagError::Graph(e.to_string())
    }
}

/// Equivariance of the seed extraction with the cluster X-mutation: both
/// sides computed independently and compared exactly.
pub fn check_equivariance(
    g: &crate::ngraphkit::NGraph,
    cycles: &crate::ngraphkit::CycleTuple,
    bf: &BoundaryFlags,
    k: usize,
) -> Result<bool, FlagError> {
    use crate::clusterkit::{mutate_y, YSeedNumeric};
    let fa = solve_face_flags(g, bf)?;
    let (y0, q0) = extract_seed(g, cycles, &fa)?;
    let (gm, cm) = crate::ngraphkit::legendrian_mutate(g, cycles, k)?;
    let fam = solve_face_flags(&gm, bf)?;
    let (y1, q1) = extract_seed(&gm, &cm, &fam)?;
    // The X-mutation downstairs; labels are 1-based, directions 0-based.
    let seed = YSeedNumeric::new(y0, q0.exchange_matrix())
        .map_err(|e| FlagError::Unsupported(e.to_string()))?;
    let moved = mutate_y(&seed, k - 1).map_err(|e| FlagError::Unsupported(e.to_string()))?;
    Ok(moved.yvals == y1 && moved.matrix == q1.exchange_matrix())
}
