//! Order polytopes and poset polytopes of finite posets, the toric codes they
//! define over finite fields, and closed-form predictions of those codes'
//! parameters from the shape of the poset.
//!
//! The layers build on each other:
//!
//! * [`poset`] — finite posets given by their covers, ideals, ranks, trees;
//! * [`catalog`] — small-poset enumerations and named examples;
//! * [`geometry`] — exact lattice polytopes, polar duals, reflexivity;
//! * [`field`] — table-driven `GF(p^k)`;
//! * [`code`] — generator matrices and exact minimum distance;
//! * [`predictor`] — distance formulas with replayable certificates;
//! * [`suite`] — structural check suites and prediction sweeps.

pub mod catalog;
pub mod code;
pub mod error;
pub mod field;
pub mod geometry;
pub mod poset;
pub mod predictor;
pub mod suite;

pub use error::{Error, ErrorKind, Result};
pub use field::GaloisField;
pub use geometry::{AffineTransform, LatticePoint, LatticePolytope};
pub use poset::{Ideal, Poset};
