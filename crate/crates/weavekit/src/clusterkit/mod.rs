//! Seeds, mutations, Coxeter mutation, exchange-graph enumeration,
//! denominator vectors, facet combinatorics and brick quivers.

mod brick;
mod coxeter;
mod facet;
mod graph;
mod matrix;
mod quiver;
mod seed;
mod yseed;

pub use brick::quiver_from_brick;
pub use coxeter::{
    bipartite_split, bipartite_split_matrix, coxeter_mutation_quiver, coxeter_mutation_seed,
    coxeter_mutation_y, coxeter_orbit, CoxeterOrbit,
};
pub use facet::{facet_orbit_table, initial_quiver_of_type, initial_seed_of_type, FacetTable};
pub use graph::{
    enumerate_dvector_graph, enumerate_exchange_graph, mutate_dvector, DVectorGraph, DVectorSeed,
    ExchangeGraph,
};
pub use matrix::{mutate_matrix, ExchangeMatrix};
pub use quiver::{mutate_quiver, Quiver};
pub use seed::{denominator_vector, mutate_seed, ClusterKey, Seed};
pub use yseed::{mutate_y, YSeedNumeric};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClusterError {
    #[error("mutation index {0} is frozen or out of range")]
    BadDirection(usize),
    #[error("matrix principal part is not skew-symmetrizable")]
    NotSkewSymmetrizable,
    #[error("matrix is not skew-symmetric, cannot represent a quiver")]
    NotSkewSymmetric,
    #[error("quiver is not bipartite")]
    NotBipartite,
    #[error("Laurent division failed; invalid seed or implementation bug")]
    NonLaurentDivision,
    #[error("y-value hit -1, mutation undefined for this initialization")]
    DegenerateYValue,
    #[error("enumeration cap of {0} vertices exceeded")]
    CapExceeded(usize),
    #[error("Coxeter number is odd; the facet table needs h even")]
    OddCoxeterNumber,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
