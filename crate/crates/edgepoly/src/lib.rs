//! Exact analysis toolkit for edge polytopes of finite simple graphs.
//!
//! The edge polytope of a graph G on n vertices is the convex hull of
//! the points e_i + e_j over the edges ij of G. Everything here is
//! computed exactly: combinatorial formulas where they exist, rational
//! arithmetic where geometry is unavoidable.

pub mod bits;
pub mod error;
pub mod facets;
pub mod graph;
pub mod lp;
pub mod neighborly;
pub mod oracle;
pub mod randexp;
pub mod rng;
pub mod skeleton;
pub mod walks;

pub use error::{Error, Result};
pub use graph::Graph;
