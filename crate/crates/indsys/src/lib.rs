//! Discrete problems as weighted independence systems.
//!
//! A problem is a work set of `n` weighted elements together with a
//! downward-closed feasibility region given by a membership oracle. The
//! crate computes the auxiliary sets of a feasible solution (closure union,
//! adjoint, residual), constructs and enumerates support solutions (maximal
//! feasible ones), measures whether adjoint sets are computable within the
//! exact extension-query budget, and ships the classic encodings used to
//! exercise all of it: arc selection for minimum chain partitions of a DAG,
//! partial graph colorings, matchings, and the cycles-plus-edges
//! reformulation of Hamiltonian-cycle search.
//!
//! Everything is deterministic: solutions are canonical sorted id sequences,
//! ties break lexicographically, and randomized generators are pure
//! functions of their seed.

mod bits;
pub mod error;

pub mod auxiliary;
pub mod family;
pub mod model;
pub mod oracle;
pub mod problems;
pub mod solver;

pub use error::{Error, Result};
pub use model::{ProblemInstance, Solution, SupportSet};
pub use oracle::MembershipOracle;
