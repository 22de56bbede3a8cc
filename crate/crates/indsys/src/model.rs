//! The problem model: a work set of `n` weighted elements, a feasibility
//! region given by a membership oracle, and solutions as canonical subsets.
//!
//! A problem instance pairs the oracle with nonnegative integer weights; the
//! objective of a solution is the sum of its element weights. A *support
//! solution* is a feasible solution with no feasible proper superset.

use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bits;
use crate::error::{Error, Result};
use crate::oracle::{CallCounters, InstrumentedOracle, MembershipOracle};

/// Objective values are plain nonnegative integers.
pub type ObjectiveValue = u64;

/// Exhaustive subset scans refuse to run past this size.
pub const EXHAUSTIVE_GUARD: usize = 20;

/// A subset of the work set in canonical form: strictly increasing element
/// identifiers. Set equality is sequence equality, and the derived `Ord` is
/// the lexicographic order used for deterministic tie-breaking everywhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Solution(Vec<usize>);

impl Solution {
    /// Canonicalizes (sorts) the given ids; duplicates are rejected.
    pub fn new(mut ids: Vec<usize>) -> Result<Self> {
        ids.sort_unstable();
        for window in ids.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicateElement { element: window[0] });
            }
        }
        Ok(Self(ids))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.0.binary_search(&element).is_ok()
    }

    /// Returns a copy with `element` inserted at its sorted position.
    pub fn with_element(&self, element: usize) -> Self {
        let mut ids = self.0.clone();
        let at = ids.partition_point(|&e| e < element);
        ids.insert(at, element);
        Self(ids)
    }

    pub fn is_subset_of(&self, other: &Solution) -> bool {
        self.0.iter().all(|e| other.0.binary_search(e).is_ok())
    }

    pub(crate) fn from_sorted(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Self(ids)
    }

    pub(crate) fn from_mask(mask: u32) -> Self {
        Self(bits::ids_of(mask))
    }

    pub(crate) fn mask(&self) -> u32 {
        bits::mask_of(&self.0)
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A discrete problem: `n` weighted elements plus a feasibility oracle.
///
/// Instances are immutable after construction and safe to query from many
/// threads; the only interior mutation anywhere is the counter block of an
/// instrumented oracle.
#[derive(Clone)]
pub struct ProblemInstance {
    n: usize,
    weights: Vec<u64>,
    oracle: Arc<dyn MembershipOracle>,
    label: String,
    warnings: Vec<String>,
}

impl ProblemInstance {
    /// Builds an instance over the oracle's work set.
    ///
    /// Rejects work sets of fewer than two elements, weight vectors of the
    /// wrong length, and oracles that declare the empty subset infeasible
    /// (a downward-closed nonempty region always contains it). Zero weights
    /// are accepted with a warning.
    pub fn new(
        weights: Vec<u64>,
        oracle: Arc<dyn MembershipOracle>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = oracle.element_count();
        if n <= 1 {
            return Err(Error::TooFewElements { n });
        }
        if weights.len() != n {
            return Err(Error::WeightCountMismatch {
                expected: n,
                got: weights.len(),
            });
        }
        if !oracle.is_feasible(&[]) {
            return Err(Error::EmptyFeasibleRegion);
        }
        let mut warnings = Vec::new();
        let zeros = weights.iter().filter(|&&w| w == 0).count();
        if zeros > 0 {
            warnings.push(format!(
                "{zeros} element(s) have zero weight; equal-objective solutions may differ in size"
            ));
        }
        Ok(Self {
            n,
            weights,
            oracle,
            label: label.into(),
            warnings,
        })
    }

    /// Convenience constructor with all weights equal to one.
    pub fn with_unit_weights(
        oracle: Arc<dyn MembershipOracle>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = oracle.element_count();
        Self::new(vec![1; n], oracle, label)
    }

    pub fn element_count(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, element: usize) -> u64 {
        self.weights[element]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn oracle(&self) -> &dyn MembershipOracle {
        self.oracle.as_ref()
    }

    /// A copy of this instance whose oracle counts its queries, plus the
    /// handle for reading and resetting the counters.
    pub fn instrumented(&self) -> (ProblemInstance, Arc<CallCounters>) {
        let wrapped = InstrumentedOracle::new(Arc::clone(&self.oracle));
        let counters = wrapped.counters();
        let instance = ProblemInstance {
            n: self.n,
            weights: self.weights.clone(),
            oracle: Arc::new(wrapped),
            label: self.label.clone(),
            warnings: self.warnings.clone(),
        };
        (instance, counters)
    }

    fn check_range(&self, solution: &Solution) -> Result<()> {
        match solution.elements().last() {
            Some(&last) if last >= self.n => Err(Error::ElementOutOfRange {
                element: last,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// Full membership query with id-range validation.
    pub fn is_feasible(&self, solution: &Solution) -> Result<bool> {
        self.check_range(solution)?;
        Ok(self.oracle.is_feasible(solution.elements()))
    }

    /// Single-extension query with id-range and disjointness validation.
    pub fn extension_feasible(&self, base: &Solution, extra: usize) -> Result<bool> {
        self.check_range(base)?;
        if extra >= self.n {
            return Err(Error::ElementOutOfRange {
                element: extra,
                n: self.n,
            });
        }
        if base.contains(extra) {
            return Err(Error::ElementAlreadyPresent { element: extra });
        }
        Ok(self.oracle.extension_feasible(base.elements(), extra))
    }

    /// Validates feasibility, mapping `false` to an error. Costs one full
    /// membership query.
    pub fn check_feasible(&self, solution: &Solution) -> Result<()> {
        if self.is_feasible(solution)? {
            Ok(())
        } else {
            Err(Error::InfeasibleSolution(solution.elements().to_vec()))
        }
    }
}

impl fmt::Debug for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemInstance")
            .field("n", &self.n)
            .field("weights", &self.weights)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// Sum of the weights of the solution's elements; zero for the empty one.
pub fn objective(instance: &ProblemInstance, solution: &Solution) -> Result<ObjectiveValue> {
    match solution
        .elements()
        .iter()
        .find(|&&e| e >= instance.element_count())
    {
        Some(&element) => Err(Error::ElementOutOfRange {
            element,
            n: instance.element_count(),
        }),
        None => Ok(solution
            .elements()
            .iter()
            .map(|&e| instance.weight(e))
            .sum()),
    }
}

/// True iff the feasible `solution` has no feasible single-element
/// extension, which under downward closure is maximality.
pub fn is_support(instance: &ProblemInstance, solution: &Solution) -> Result<bool> {
    instance.check_feasible(solution)?;
    let oracle = instance.oracle();
    Ok((0..instance.element_count())
        .filter(|&r| !solution.contains(r))
        .all(|r| !oracle.extension_feasible(solution.elements(), r)))
}

/// All support solutions of an instance, lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    solutions: Vec<Solution>,
    truncated: bool,
}

impl SupportSet {
    pub(crate) fn new(mut solutions: Vec<Solution>, truncated: bool) -> Self {
        solutions.sort();
        solutions.dedup();
        Self {
            solutions,
            truncated,
        }
    }

    pub fn solutions(&self) -> &[Solution] {
        &self.solutions
    }

    pub fn cardinality(&self) -> u64 {
        self.solutions.len() as u64
    }

    /// True when enumeration stopped at a caller-provided limit, so the set
    /// is a prefix of the real one.
    pub fn truncated(&self) -> bool {
        self.truncated
    }
}

/// How to drive [`validate_downward_closure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    /// Scan every subset; refuses past [`EXHAUSTIVE_GUARD`].
    Exhaustive,
    /// Test `count` random subsets drawn with the given seed.
    Sample { count: u64, seed: u64 },
}

/// Outcome of a downward-closure validation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    /// No violation found.
    pub pass: bool,
    /// A feasible set together with an infeasible proper subset of it.
    pub counterexample: Option<(Solution, Solution)>,
    /// Feasible subsets whose sub-subsets were examined.
    pub feasible_checked: u64,
}

/// Checks that removing an element from a feasible subset keeps it feasible.
///
/// Closure under single-element removal is equivalent to closure under
/// arbitrary subsets, so a PASS certifies the full property; a violation is
/// reported as the pair (feasible set, infeasible one-element-removed
/// subset), smallest removed subset first.
pub fn validate_downward_closure(
    instance: &ProblemInstance,
    mode: ValidationMode,
) -> Result<ClosureReport> {
    let n = instance.element_count();
    let oracle = instance.oracle();
    let mut feasible_checked = 0u64;

    let check_removals = |subset: &[usize]| -> Option<(Solution, Solution)> {
        // Removing elements from largest to smallest yields candidate
        // subsets in ascending lexicographic order.
        for i in (0..subset.len()).rev() {
            let mut smaller = subset.to_vec();
            smaller.remove(i);
            if !oracle.is_feasible(&smaller) {
                return Some((
                    Solution::from_sorted(subset.to_vec()),
                    Solution::from_sorted(smaller),
                ));
            }
        }
        None
    };

    match mode {
        ValidationMode::Exhaustive => {
            if n > EXHAUSTIVE_GUARD {
                return Err(Error::SizeGuard {
                    what: "exhaustive downward-closure validation",
                    guard: EXHAUSTIVE_GUARD,
                    n,
                });
            }
            for mask in 0..(1u32 << n) {
                let subset = bits::ids_of(mask);
                if oracle.is_feasible(&subset) {
                    feasible_checked += 1;
                    if let Some(pair) = check_removals(&subset) {
                        return Ok(ClosureReport {
                            pass: false,
                            counterexample: Some(pair),
                            feasible_checked,
                        });
                    }
                }
            }
        }
        ValidationMode::Sample { count, seed } => {
            let mut rng = StdRng::seed_from_u64(seed);
            for _ in 0..count {
                let subset: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
                if oracle.is_feasible(&subset) {
                    feasible_checked += 1;
                    if let Some(pair) = check_removals(&subset) {
                        return Ok(ClosureReport {
                            pass: false,
                            counterexample: Some(pair),
                            feasible_checked,
                        });
                    }
                }
            }
        }
    }
    Ok(ClosureReport {
        pass: true,
        counterexample: None,
        feasible_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{ExplicitOracle, FullListOracle, PowerSetOracle};

    pub(crate) fn two_maximal_instance() -> ProblemInstance {
        let oracle = Arc::new(ExplicitOracle::new(3, vec![vec![0, 1], vec![2]]).unwrap());
        ProblemInstance::new(vec![1, 2, 3], oracle, "two-maximal").unwrap()
    }

    #[test]
    fn solution_canonicalizes_and_rejects_duplicates() {
        let s = Solution::new(vec![2, 0]).unwrap();
        assert_eq!(s.elements(), &[0, 2]);
        assert_eq!(s.to_string(), "{0,2}");
        assert_eq!(
            Solution::new(vec![1, 1]).unwrap_err(),
            Error::DuplicateElement { element: 1 }
        );
    }

    #[test]
    fn objective_of_empty_solution_is_zero() {
        let inst = two_maximal_instance();
        assert_eq!(objective(&inst, &Solution::empty()).unwrap(), 0);
    }

    #[test]
    fn objective_sums_weights() {
        let oracle = Arc::new(PowerSetOracle::new(2));
        let inst = ProblemInstance::new(vec![3, 5], oracle, "pair").unwrap();
        let s = Solution::new(vec![0, 1]).unwrap();
        assert_eq!(objective(&inst, &s).unwrap(), 8);
    }

    #[test]
    fn distinct_supports_may_share_objective() {
        let inst = two_maximal_instance();
        let a = Solution::new(vec![0, 1]).unwrap();
        let b = Solution::new(vec![2]).unwrap();
        assert_eq!(objective(&inst, &a).unwrap(), 3);
        assert_eq!(objective(&inst, &b).unwrap(), 3);
    }

    #[test]
    fn objective_rejects_out_of_range() {
        let inst = two_maximal_instance();
        let s = Solution::new(vec![0, 7]).unwrap();
        assert_eq!(
            objective(&inst, &s).unwrap_err(),
            Error::ElementOutOfRange { element: 7, n: 3 }
        );
    }

    #[test]
    fn extension_query_validates_inputs() {
        let inst = two_maximal_instance();
        let s = Solution::new(vec![0]).unwrap();
        assert_eq!(
            inst.extension_feasible(&s, 0).unwrap_err(),
            Error::ElementAlreadyPresent { element: 0 }
        );
        assert_eq!(
            inst.extension_feasible(&s, 9).unwrap_err(),
            Error::ElementOutOfRange { element: 9, n: 3 }
        );
    }

    #[test]
    fn support_examples() {
        let inst = two_maximal_instance();
        assert!(is_support(&inst, &Solution::new(vec![2]).unwrap()).unwrap());
        assert!(!is_support(&inst, &Solution::new(vec![0]).unwrap()).unwrap());
        assert_eq!(
            is_support(&inst, &Solution::new(vec![0, 2]).unwrap()).unwrap_err(),
            Error::InfeasibleSolution(vec![0, 2])
        );
    }

    #[test]
    fn full_set_is_support_in_power_set_system() {
        let oracle = Arc::new(PowerSetOracle::new(3));
        let inst = ProblemInstance::with_unit_weights(oracle, "power3").unwrap();
        assert!(is_support(&inst, &Solution::new(vec![0, 1, 2]).unwrap()).unwrap());
    }

    #[test]
    fn downward_closure_passes_on_power_set() {
        let oracle = Arc::new(PowerSetOracle::new(2));
        let inst = ProblemInstance::with_unit_weights(oracle, "power2").unwrap();
        let report = validate_downward_closure(&inst, ValidationMode::Exhaustive).unwrap();
        assert!(report.pass);
        assert_eq!(report.feasible_checked, 4);
    }

    #[test]
    fn downward_closure_passes_on_two_maximal() {
        let inst = two_maximal_instance();
        let report = validate_downward_closure(&inst, ValidationMode::Exhaustive).unwrap();
        assert!(report.pass, "{:?}", report.counterexample);
    }

    #[test]
    fn downward_closure_finds_counterexample() {
        // Q = {∅, {0,1}}: missing {0} and {1}.
        let oracle = Arc::new(FullListOracle::new(2, vec![vec![], vec![0, 1]]).unwrap());
        let inst = ProblemInstance::with_unit_weights(oracle, "gap").unwrap();
        let report = validate_downward_closure(&inst, ValidationMode::Exhaustive).unwrap();
        assert!(!report.pass);
        let (whole, part) = report.counterexample.unwrap();
        assert_eq!(whole.elements(), &[0, 1]);
        assert_eq!(part.elements(), &[0]);
    }

    #[test]
    fn downward_closure_guard_refuses_large_n() {
        let oracle = Arc::new(PowerSetOracle::new(24));
        let inst = ProblemInstance::with_unit_weights(oracle, "big").unwrap();
        assert!(matches!(
            validate_downward_closure(&inst, ValidationMode::Exhaustive),
            Err(Error::SizeGuard { .. })
        ));
        // Sampling mode is the escape hatch.
        let report = validate_downward_closure(
            &inst,
            ValidationMode::Sample {
                count: 64,
                seed: 0,
            },
        )
        .unwrap();
        assert!(report.pass);
    }

    #[test]
    fn instance_rejects_degenerate_inputs() {
        let one = Arc::new(PowerSetOracle::new(1));
        assert_eq!(
            ProblemInstance::with_unit_weights(one, "one").unwrap_err(),
            Error::TooFewElements { n: 1 }
        );
        let three = Arc::new(PowerSetOracle::new(3));
        assert_eq!(
            ProblemInstance::new(vec![1, 2], three, "short").unwrap_err(),
            Error::WeightCountMismatch {
                expected: 3,
                got: 2
            }
        );
        let gap = Arc::new(FullListOracle::new(2, vec![vec![0]]).unwrap());
        assert_eq!(
            ProblemInstance::with_unit_weights(gap, "no-empty").unwrap_err(),
            Error::EmptyFeasibleRegion
        );
    }

    #[test]
    fn zero_weights_warn() {
        let oracle = Arc::new(PowerSetOracle::new(2));
        let inst = ProblemInstance::new(vec![0, 1], oracle, "zero").unwrap();
        assert_eq!(inst.warnings().len(), 1);
    }

    #[test]
    fn extension_weight_additivity() {
        let inst = two_maximal_instance();
        for mask in 0u32..8 {
            let base = Solution::from_mask(mask);
            if !inst.is_feasible(&base).unwrap() {
                continue;
            }
            for r in 0..3 {
                if base.contains(r) || !inst.extension_feasible(&base, r).unwrap() {
                    continue;
                }
                let extended = base.with_element(r);
                assert_eq!(
                    objective(&inst, &extended).unwrap(),
                    objective(&inst, &base).unwrap() + inst.weight(r)
                );
            }
        }
    }
}
