//! Depth parameters of matroids represented over prime fields.
//!
//! Matroids are given by matrices over GF(p). The crate computes contraction
//! depth, deletion depth and their subspace variants exactly on small
//! instances, together with checkable certificates, and converts matrices to
//! and from the rooted-tree encoding used to bound dual tree-depth.

pub mod depth;
pub mod duality;
pub mod error;
pub mod field;
pub mod format;
pub mod graph;
pub mod linalg;
pub mod matrix_tree;
pub mod matroid;
pub mod search;

pub use depth::{DepthCertificate, DepthSolver, Limits, Param};
pub use duality::{dual, SubspaceMatroid};
pub use error::{Error, Result};
pub use field::Field;
pub use linalg::{Matrix, Vector};
pub use matrix_tree::MatrixTree;
pub use matroid::{GroundSubset, Label, RepMatroid};
