//! Auxiliary sets attached to a feasible solution π:
//!
//! * `W(π)` — the union of all feasible supersets of π (the closure union);
//! * `S(π)` — the adjoint set `R ∖ W(π)`: elements that can never join π in
//!   any feasible completion;
//! * `R(π)` — the residual set `W(π) ∖ π`: elements each individually
//!   adjoinable to π.
//!
//! Downward closure collapses the superset scan to a single-extension scan:
//! `W(π) = π ∪ {r ∉ π : π ∪ {r} feasible}`, because any feasible superset
//! containing `r` shrinks to the feasible `π ∪ {r}`. The scan route costs
//! exactly one extension query per element outside π and no membership
//! queries; the brute-force route stays available as an independent oracle.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits;
use crate::error::{Error, Result};
use crate::model::{ProblemInstance, Solution, EXHAUSTIVE_GUARD};

/// The three auxiliary sets of one feasible solution. Together with the
/// solution itself, adjoint and residual partition the work set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryTriple {
    pub for_solution: Solution,
    pub closure_union: Solution,
    pub adjoint: Solution,
    pub residual: Solution,
}

/// Computes the triple for a solution already known to be feasible.
///
/// Feasibility is **not** re-checked here: the scan issues exactly
/// `n − |π|` extension queries and zero membership queries, which is the
/// call budget the instrumentation contract pins down. Use
/// [`auxiliary_triple`] when feasibility still needs verifying.
pub fn scan_auxiliary(instance: &ProblemInstance, solution: &Solution) -> AuxiliaryTriple {
    let n = instance.element_count();
    let oracle = instance.oracle();
    let base = solution.elements();
    let mut closure_union = Vec::with_capacity(n);
    let mut adjoint = Vec::new();
    let mut residual = Vec::new();
    let mut in_base = base.iter().peekable();
    for r in 0..n {
        if in_base.peek() == Some(&&r) {
            in_base.next();
            closure_union.push(r);
        } else if oracle.extension_feasible(base, r) {
            closure_union.push(r);
            residual.push(r);
        } else {
            adjoint.push(r);
        }
    }
    AuxiliaryTriple {
        for_solution: solution.clone(),
        closure_union: Solution::from_sorted(closure_union),
        adjoint: Solution::from_sorted(adjoint),
        residual: Solution::from_sorted(residual),
    }
}

/// Validating wrapper around [`scan_auxiliary`]; an infeasible solution is
/// a domain error.
pub fn auxiliary_triple(instance: &ProblemInstance, solution: &Solution) -> Result<AuxiliaryTriple> {
    instance.check_feasible(solution)?;
    Ok(scan_auxiliary(instance, solution))
}

/// `W(π)` via the single-extension scan.
pub fn closure_union_fast(instance: &ProblemInstance, solution: &Solution) -> Result<Solution> {
    Ok(auxiliary_triple(instance, solution)?.closure_union)
}

/// `S(π) = R ∖ W(π)`.
pub fn adjoint_set(instance: &ProblemInstance, solution: &Solution) -> Result<Solution> {
    Ok(auxiliary_triple(instance, solution)?.adjoint)
}

/// `R(π) = W(π) ∖ π`; every returned element extends π feasibly.
pub fn residual_set(instance: &ProblemInstance, solution: &Solution) -> Result<Solution> {
    Ok(auxiliary_triple(instance, solution)?.residual)
}

/// `W(π)` the long way: enumerate every superset of π and union the feasible
/// ones. Exponential in `n − |π|`; kept as the independent cross-check for
/// the scan route.
pub fn closure_union_bruteforce(
    instance: &ProblemInstance,
    solution: &Solution,
) -> Result<Solution> {
    let n = instance.element_count();
    if n > EXHAUSTIVE_GUARD {
        return Err(Error::SizeGuard {
            what: "brute-force closure union",
            guard: EXHAUSTIVE_GUARD,
            n,
        });
    }
    instance.check_feasible(solution)?;
    let oracle = instance.oracle();
    let base = solution.mask();
    let complement = !base & ((1u32 << n) - 1);
    let mut union = 0u32;
    // Enumerates submasks of the complement, including 0.
    let mut extra = complement;
    loop {
        let candidate = base | extra;
        if candidate & !union != 0 || union == 0 {
            let ids = bits::ids_of(candidate);
            if oracle.is_feasible(&ids) {
                union |= candidate;
            }
        }
        if extra == 0 {
            break;
        }
        extra = (extra - 1) & complement;
    }
    Ok(Solution::from_mask(union))
}

/// Structural properties checkable by exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralCheck {
    /// Growing a feasible solution can only grow its adjoint set:
    /// feasible π₁ ⊂ π₂ implies S(π₁) ⊆ S(π₂).
    AdjointMonotonicity = 1,
    /// Residual elements extend feasibly, and nothing else does:
    /// r ∈ R(π) iff r ∉ π and π ∪ {r} is feasible.
    ResidualExtension = 2,
    /// Supports are exactly the solutions with empty residual, and then
    /// π ∪ S(π) covers the whole work set.
    SupportCharacterization = 3,
}

impl StructuralCheck {
    pub fn from_number(k: u8) -> Option<Self> {
        match k {
            1 => Some(Self::AdjointMonotonicity),
            2 => Some(Self::ResidualExtension),
            3 => Some(Self::SupportCharacterization),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        self as u8
    }
}

/// Outcome of one structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: StructuralCheck,
    pub pass: bool,
    pub cases_checked: u64,
    /// Human-readable description of the first violation, if any.
    pub counterexample: Option<String>,
    pub detail: CheckDetail,
}

/// Check-specific observations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckDetail {
    /// How often the adjoint inclusion was strict versus an equality; the
    /// inclusion itself is what the check asserts.
    Monotonicity { strict: u64, equal: u64 },
    Extension,
    /// The supports found during the scan, lexicographically sorted.
    Supports(Vec<Solution>),
}

const CHECK_GUARD: usize = 12;

/// Runs one structural check exhaustively over all feasible solutions
/// (pairs, for monotonicity). Guarded at n ≤ 12.
///
/// The feasible family is enumerated by full membership over all `2^n`
/// subsets, independent of the extension-scan route under test.
pub fn check_structural(
    instance: &ProblemInstance,
    check: StructuralCheck,
) -> Result<CheckReport> {
    let n = instance.element_count();
    if n > CHECK_GUARD {
        return Err(Error::SizeGuard {
            what: "structural check",
            guard: CHECK_GUARD,
            n,
        });
    }
    let oracle = instance.oracle();
    let all = (1u32 << n) - 1;
    let mut feasible: Vec<u32> = Vec::new();
    let mut feasible_set: BTreeSet<u32> = BTreeSet::new();
    for mask in 0..=all {
        if oracle.is_feasible(&bits::ids_of(mask)) {
            feasible.push(mask);
            feasible_set.insert(mask);
        }
    }

    // Adjoint masks per feasible solution, via the extension scan.
    let adjoint_of: BTreeMap<u32, u32> = feasible
        .iter()
        .map(|&mask| {
            let triple = scan_auxiliary(instance, &Solution::from_mask(mask));
            (mask, triple.adjoint.mask())
        })
        .collect();
    let residual_of = |mask: u32| all & !mask & !adjoint_of[&mask];

    let mut cases = 0u64;
    match check {
        StructuralCheck::AdjointMonotonicity => {
            let mut strict = 0u64;
            let mut equal = 0u64;
            for &outer in &feasible {
                if outer == 0 {
                    continue; // no proper submasks
                }
                // Proper submasks of `outer`, all feasible by closure but
                // looked up rather than assumed.
                let mut sub = (outer - 1) & outer;
                loop {
                    if feasible_set.contains(&sub) {
                        cases += 1;
                        let s_inner = adjoint_of[&sub];
                        let s_outer = adjoint_of[&outer];
                        if s_inner & !s_outer != 0 {
                            return Ok(CheckReport {
                                check,
                                pass: false,
                                cases_checked: cases,
                                counterexample: Some(format!(
                                    "π1 = {} ⊂ π2 = {} but S(π1) = {} ⊄ S(π2) = {}",
                                    Solution::from_mask(sub),
                                    Solution::from_mask(outer),
                                    Solution::from_mask(s_inner),
                                    Solution::from_mask(s_outer),
                                )),
                                detail: CheckDetail::Monotonicity { strict, equal },
                            });
                        }
                        if s_inner == s_outer {
                            equal += 1;
                        } else {
                            strict += 1;
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & outer;
                }
            }
            Ok(CheckReport {
                check,
                pass: true,
                cases_checked: cases,
                counterexample: None,
                detail: CheckDetail::Monotonicity { strict, equal },
            })
        }
        StructuralCheck::ResidualExtension => {
            for &mask in &feasible {
                let residual = residual_of(mask);
                let solution = Solution::from_mask(mask);
                for r in 0..n {
                    if mask & (1 << r) != 0 {
                        continue;
                    }
                    cases += 1;
                    let in_residual = residual & (1 << r) != 0;
                    // Independent route: full membership of the extension.
                    let extended_feasible = feasible_set.contains(&(mask | (1 << r)));
                    if in_residual != extended_feasible {
                        let verdict = if in_residual {
                            "r ∈ R(π) but π ∪ {r} is infeasible"
                        } else {
                            "π ∪ {r} is feasible but r ∉ R(π)"
                        };
                        return Ok(CheckReport {
                            check,
                            pass: false,
                            cases_checked: cases,
                            counterexample: Some(format!("π = {solution}, r = {r}: {verdict}")),
                            detail: CheckDetail::Extension,
                        });
                    }
                }
            }
            Ok(CheckReport {
                check,
                pass: true,
                cases_checked: cases,
                counterexample: None,
                detail: CheckDetail::Extension,
            })
        }
        StructuralCheck::SupportCharacterization => {
            let mut supports = Vec::new();
            for &mask in &feasible {
                cases += 1;
                let solution = Solution::from_mask(mask);
                // Maximality judged against the full feasible list.
                let maximal = !feasible
                    .iter()
                    .any(|&other| other != mask && other & mask == mask);
                let residual_empty = residual_of(mask) == 0;
                if maximal != residual_empty {
                    let verdict = if maximal {
                        "maximal but R(π) ≠ ∅"
                    } else {
                        "R(π) = ∅ but a feasible proper superset exists"
                    };
                    return Ok(CheckReport {
                        check,
                        pass: false,
                        cases_checked: cases,
                        counterexample: Some(format!("π = {solution}: {verdict}")),
                        detail: CheckDetail::Supports(supports),
                    });
                }
                if maximal {
                    if mask | adjoint_of[&mask] != all {
                        return Ok(CheckReport {
                            check,
                            pass: false,
                            cases_checked: cases,
                            counterexample: Some(format!(
                                "support π = {solution}: π ∪ S(π) = {} ≠ R",
                                Solution::from_mask(mask | adjoint_of[&mask]),
                            )),
                            detail: CheckDetail::Supports(supports),
                        });
                    }
                    supports.push(solution);
                }
            }
            supports.sort();
            Ok(CheckReport {
                check,
                pass: true,
                cases_checked: cases,
                counterexample: None,
                detail: CheckDetail::Supports(supports),
            })
        }
    }
}
