//! Exact tools for the maximum density of four-cycles in graphs whose
//! forbidden subgraph has chromatic number `r + 1`.
//!
//! * [`graph`]: small graphs, canonical forms, counting, the 4-vertex catalog.
//! * [`multipartite`]: closed-form C4 and K4 counts in complete multipartite graphs.
//! * [`flag`]: flags, flag products and the unlabeling operator.
//! * [`arith`]: polynomials and rational functions over Q, Sturm sequences.
//! * [`certificate`]: derivation and proof of the density bound.
//! * [`extremal`]: exhaustive search over labeled graphs.

pub mod arith;
pub mod certificate;
pub mod error;
pub mod extremal;
pub mod flag;
pub mod graph;
pub mod multipartite;
pub mod report;

pub use error::{Error, Result};
