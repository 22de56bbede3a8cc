use std::collections::BTreeSet;

use super::MembershipOracle;
use crate::error::{Error, Result};

/// Feasibility region represented by its maximal sets.
///
/// A subset is feasible iff it is contained in one of the maximal sets, so
/// the represented region is downward closed by construction. The maximal
/// sets must form an antichain (no set contains another); this is the
/// compressed canonical form of a finite downward-closed family.
#[derive(Debug, Clone)]
pub struct ExplicitOracle {
    n: usize,
    maximal_sets: Vec<Vec<usize>>,
}

impl ExplicitOracle {
    /// Builds the oracle, validating ids, canonical order and the antichain
    /// property. An empty list of maximal sets would make every subset
    /// (including the empty one) infeasible and is rejected.
    pub fn new(n: usize, maximal_sets: Vec<Vec<usize>>) -> Result<Self> {
        if maximal_sets.is_empty() {
            return Err(Error::EmptyFeasibleRegion);
        }
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(maximal_sets.len());
        for set in maximal_sets {
            let mut set = set;
            set.sort_unstable();
            for window in set.windows(2) {
                if window[0] == window[1] {
                    return Err(Error::DuplicateElement { element: window[0] });
                }
            }
            if let Some(&element) = set.iter().find(|&&e| e >= n) {
                return Err(Error::ElementOutOfRange { element, n });
            }
            canonical.push(set);
        }
        canonical.sort();
        canonical.dedup();
        for a in &canonical {
            for b in &canonical {
                if a != b && is_subset(a, b) {
                    return Err(Error::NotAntichain {
                        contained: a.clone(),
                        container: b.clone(),
                    });
                }
            }
        }
        Ok(Self {
            n,
            maximal_sets: canonical,
        })
    }

    /// The maximal sets, sorted lexicographically.
    pub fn maximal_sets(&self) -> &[Vec<usize>] {
        &self.maximal_sets
    }
}

impl MembershipOracle for ExplicitOracle {
    fn element_count(&self) -> usize {
        self.n
    }

    fn is_feasible(&self, subset: &[usize]) -> bool {
        self.maximal_sets.iter().any(|m| is_subset(subset, m))
    }

    fn extension_feasible(&self, base: &[usize], extra: usize) -> bool {
        self.maximal_sets
            .iter()
            .any(|m| m.binary_search(&extra).is_ok() && is_subset(base, m))
    }
}

/// True iff every element of `a` occurs in the sorted slice `b`.
fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|e| b.binary_search(e).is_ok())
}

/// Feasibility region stored as the literal list of all feasible subsets.
///
/// Exists as an independent cross-check route for [`ExplicitOracle`]; lookup
/// and subset-of-maximal-set must agree on every query. Only practical at
/// small n.
#[derive(Debug, Clone)]
pub struct FullListOracle {
    n: usize,
    feasible: BTreeSet<Vec<usize>>,
}

impl FullListOracle {
    pub fn new(n: usize, feasible: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for mut subset in feasible {
            subset.sort_unstable();
            subset.dedup();
            if let Some(&element) = subset.iter().find(|&&e| e >= n) {
                return Err(Error::ElementOutOfRange { element, n });
            }
            set.insert(subset);
        }
        if set.is_empty() {
            return Err(Error::EmptyFeasibleRegion);
        }
        Ok(Self { n, feasible: set })
    }
}

impl MembershipOracle for FullListOracle {
    fn element_count(&self) -> usize {
        self.n
    }

    fn is_feasible(&self, subset: &[usize]) -> bool {
        self.feasible.contains(subset)
    }
}

/// The trivial region in which every subset is feasible.
#[derive(Debug, Clone)]
pub struct PowerSetOracle {
    n: usize,
}

impl PowerSetOracle {
    pub fn new(n: usize) -> Self {
        Self { n }
    }
}

impl MembershipOracle for PowerSetOracle {
    fn element_count(&self) -> usize {
        self.n
    }

    fn is_feasible(&self, _subset: &[usize]) -> bool {
        true
    }

    fn extension_feasible(&self, _base: &[usize], _extra: usize) -> bool {
        true
    }
}
