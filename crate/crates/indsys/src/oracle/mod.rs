//! Membership oracles deciding whether a subset of the work set is feasible.
//!
//! Every oracle answers two kinds of query: full membership (`is_feasible`)
//! and the single-extension predicate (`extension_feasible`). The distinction
//! matters because the fast auxiliary-set computations are specified in terms
//! of extension queries only, and [`InstrumentedOracle`] counts the two kinds
//! separately.

mod explicit;
mod instrument;

pub use explicit::{ExplicitOracle, FullListOracle, PowerSetOracle};
pub use instrument::{CallCounters, CallStats, InstrumentedOracle};

/// Decides the predicate "this subset is feasible".
///
/// Implementations must be deterministic (identical queries give identical
/// answers) and are expected to be downward closed: removing an element from
/// a feasible subset keeps it feasible. Downward closure is not assumed
/// silently; [`crate::model::validate_downward_closure`] checks it.
///
/// Queries take sorted, duplicate-free id slices. Out-of-range handling is
/// done by the typed wrappers on [`crate::model::ProblemInstance`]; oracle
/// implementations may panic on malformed input.
pub trait MembershipOracle: Send + Sync {
    /// Number of elements in the work set.
    fn element_count(&self) -> usize;

    /// Full membership query: is `subset` feasible?
    fn is_feasible(&self, subset: &[usize]) -> bool;

    /// Single-extension query: is `base ∪ {extra}` feasible?
    ///
    /// `base` must be feasible and must not contain `extra`. The default
    /// implementation materializes the extended subset and asks for full
    /// membership; concrete oracles override it with a local check where
    /// one exists.
    fn extension_feasible(&self, base: &[usize], extra: usize) -> bool {
        let mut extended = Vec::with_capacity(base.len() + 1);
        let split = base.partition_point(|&e| e < extra);
        extended.extend_from_slice(&base[..split]);
        extended.push(extra);
        extended.extend_from_slice(&base[split..]);
        self.is_feasible(&extended)
    }
}
