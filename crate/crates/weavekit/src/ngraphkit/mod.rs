//! Planar colored combinatorial maps on the disk and annulus with a
//! braid boundary: constructors for the standard linear and tripod
//! families, Coxeter paddings, cycles and intersection quivers,
//! Legendrian mutations, local moves and symmetry checks.

mod braid;
mod build;
mod cycles;
mod map;
mod moves;
mod mutate;
mod padding;
mod quiver_of;
mod symmetry;

pub use braid::BraidWord;
pub use build::{build_linear, build_tripod, color_swap, theta_graph};
pub use cycles::{CycleKind, CycleSpec, CycleTuple};
pub use map::{
    EdgeId, Face, HalfId, NGraph, VertexId, VertexKind, WeaveMap, BLUE, RED,
};
pub use moves::{apply_move, detect_move_one_sites, MoveKind, MoveSite};
pub use mutate::{legendrian_coxeter_mutation, legendrian_coxeter_power, legendrian_mutate};
pub use padding::{concat_annulus_annulus, concat_annulus_graph, coxeter_padding, AnnularNGraph};
pub use quiver_of::quiver_of;
pub use symmetry::{
    is_g_admissible, is_ray_symmetric, is_rotation_symmetric, partial_rotation, rotate,
    AdmissibleSetting,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NGraphError {
    #[error("letter {0} out of range for {1} strands")]
    BadLetter(usize, usize),
    #[error("operation requires N = {expected}, graph has N = {got}")]
    WrongStrandCount { expected: usize, got: usize },
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("boundary words do not match at position {0}")]
    BoundaryMismatch(usize),
    #[error("boundary word is not invariant under this rotation")]
    BoundaryNotRotationInvariant,
    #[error("graph is not ray-symmetric in the required sense")]
    NotRaySymmetric,
    #[error("cycle {0} is not of a kind that can be mutated")]
    UnmutableCycle(usize),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("move site does not match the required local pattern: {0}")]
    SiteMismatch(String),
    #[error("graph and cycle data disagree: {0}")]
    BadCycle(String),
}
