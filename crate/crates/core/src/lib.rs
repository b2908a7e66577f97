//! Modular convex hulls of flag pairs in finite semimodular lattices.
//!
//! The hull of two flags `C`, `D` in a semimodular lattice of rank `n` embeds
//! into `2^[n]` as a union-closed family with a full-length chain; the union
//! of its full-length chains is an antimatroid whose flags are exactly the
//! flags on shortest galleries from `C` to `D`. This crate computes all of
//! those objects and checks the relationships by brute force.

pub mod cli;
pub mod family;
pub mod flags;
pub mod generators;
pub mod hull;
pub mod lattice;
pub mod render;
pub mod verify;

pub use family::{AxiomViolation, FamilyError, SetFamily};
pub use flags::{
    enumerate_flags, flag_distance, DEFAULT_FLAG_BUDGET, flags_adjacent, gallery_distance_bfs, jordan_holder, Flag,
    FlagError, Gallery, JhPermutation,
};
pub use generators::{load_lattice, GenError, GeneratorSpec};
pub use verify::{VerificationReport, VerifyConfig};
pub use hull::{hull_as_preantimatroid, mconv_fixpoint, mconv_recursive, phi, HullError, HullResult};
pub use lattice::{ElementId, Interval, Lattice, LatticeError};
