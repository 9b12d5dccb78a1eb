//! Cluster seed patterns of finite and infinite type, quiver folding,
//! colored trivalent graphs on the disk with their one-cycles, and exact
//! flag monodromy over the rationals.
//!
//! The crate is split along the main objects:
//!
//! * [`rootdata`] — Dynkin types, Cartan matrices, positive roots and
//!   recognition of finite-type Cartan matrices;
//! * [`laurent`] — multivariate Laurent polynomials with exact integer
//!   coefficients and exact division;
//! * [`clusterkit`] — exchange matrices, quivers, seeds, numeric
//!   Y-seeds, Coxeter mutation, exchange-graph enumeration, denominator
//!   vectors, facet orbits and brick-diagram quivers;
//! * [`foldkit`] — group actions on quiver vertices, admissibility,
//!   folded matrices and folded seed patterns;
//! * [`ngraphkit`] — planar colored graphs on the disk and annulus with
//!   a braid boundary, their cycles, intersection quivers, local
//!   surgeries and symmetry checks;
//! * [`flagkit`] — exact flag assignments on faces and microlocal
//!   monodromy evaluation.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod clusterkit;
pub mod flagkit;
pub mod foldkit;
pub mod laurent;
pub mod ngraphkit;
pub mod rootdata;

pub use clusterkit::{ClusterKey, ExchangeMatrix, Quiver, Seed, YSeedNumeric};
pub use laurent::LaurentPoly;
pub use ngraphkit::{AnnularNGraph, BraidWord, CycleSpec, CycleTuple, NGraph};
pub use rootdata::{CartanMatrix, DynkinFamily, DynkinType, RootVector};
