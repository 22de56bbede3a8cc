//! Construction and enumeration of support solutions.
//!
//! * [`greedy_construct`] grows a single support solution by repeated
//!   residual-set extension — the residual set is exactly the set of
//!   elements that extend feasibly, and an empty residual is the stopping
//!   certificate.
//! * [`enumerate_support`] lists every support solution by canonical
//!   depth-first extension.
//! * [`frontier_run`] expands all feasible solutions breadth-first, one
//!   element per layer, the way a machine examining every alternative at
//!   once would; layer widths are reported and supports harvested.
//! * [`lookahead_profile`] measures, via an instrumented oracle, whether
//!   adjoint sets are computed within the exact extension-query budget —
//!   the operational version of "effectively determined".

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::auxiliary::scan_auxiliary;
use crate::error::{Error, Result};
use crate::family::InstanceFamily;
use crate::model::{
    objective, ObjectiveValue, ProblemInstance, Solution, SupportSet, EXHAUSTIVE_GUARD,
};

/// Optimization direction for [`greedy_construct`] and [`extremal_support`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Max => "max",
            Sense::Min => "min",
        })
    }
}

/// One extension step of the greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub chosen: usize,
    /// Residual-set size right before the choice.
    pub residual_size: usize,
    /// Extension queries spent computing that residual set.
    pub predicate_calls: u64,
}

/// Audit trail of a greedy construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    /// All extension queries spent, including the final empty-residual scan.
    pub total_extension_calls: u64,
    pub result: Solution,
}

/// Grows a support solution from the empty one: recompute the residual set,
/// adjoin the best element by `(sense, lowest id)`, stop when the residual
/// is empty. Always terminates within `n` rounds and never needs a full
/// membership query; total extension queries are at most `n(n+1)/2 + n`.
pub fn greedy_construct(instance: &ProblemInstance, sense: Sense) -> (Solution, GreedyTrace) {
    let n = instance.element_count();
    let mut current = Solution::empty();
    let mut steps = Vec::new();
    let mut total_calls = 0u64;
    loop {
        let residual = scan_auxiliary(instance, &current).residual;
        let calls = (n - current.len()) as u64;
        total_calls += calls;
        if residual.is_empty() {
            break;
        }
        // Ties go to the lowest id: iterate ascending, replace only on a
        // strictly better weight.
        let mut chosen = residual.elements()[0];
        for &r in &residual.elements()[1..] {
            let better = match sense {
                Sense::Max => instance.weight(r) > instance.weight(chosen),
                Sense::Min => instance.weight(r) < instance.weight(chosen),
            };
            if better {
                chosen = r;
            }
        }
        steps.push(GreedyStep {
            chosen,
            residual_size: residual.len(),
            predicate_calls: calls,
        });
        current = current.with_element(chosen);
    }
    let trace = GreedyTrace {
        steps,
        total_extension_calls: total_calls,
        result: current.clone(),
    };
    (current, trace)
}

/// Enumerates all support solutions by canonical depth-first extension:
/// a solution is only extended by ids above its maximum, so every feasible
/// solution is visited exactly once, in lexicographic order. Maximality is
/// decided on the full residual set, not just the canonical tail.
///
/// Without a `limit` the element count is guarded at 20; with one, the
/// enumeration stops after `limit` supports and the result is flagged
/// truncated.
pub fn enumerate_support(instance: &ProblemInstance, limit: Option<u64>) -> Result<SupportSet> {
    let n = instance.element_count();
    if limit.is_none() && n > EXHAUSTIVE_GUARD {
        return Err(Error::SizeGuard {
            what: "support enumeration",
            guard: EXHAUSTIVE_GUARD,
            n,
        });
    }
    let mut supports = Vec::new();
    let mut truncated = false;
    let mut stack: Vec<Solution> = vec![Solution::empty()];
    while let Some(current) = stack.pop() {
        let residual = scan_auxiliary(instance, &current).residual;
        if residual.is_empty() {
            // Truncate only when one more support genuinely exists.
            if limit.is_some_and(|limit| supports.len() as u64 >= limit) {
                truncated = true;
                break;
            }
            supports.push(current);
            continue;
        }
        let floor = current.elements().last().map_or(0, |&m| m + 1);
        // Push descending so the lexicographically smallest child pops first.
        for &r in residual.elements().iter().rev() {
            if r >= floor {
                stack.push(current.with_element(r));
            }
        }
        // A solution whose residual is nonempty is not a support, but it may
        // still be a canonical leaf (all residual elements below the floor);
        // those were already reached through another branch.
    }
    Ok(SupportSet::new(supports, truncated))
}

/// Layer-by-layer picture of the breadth-first run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierStats {
    /// `(depth, number of feasible solutions of that size)`, nonempty
    /// layers only.
    pub layers: Vec<(usize, u64)>,
    pub support_count: u64,
    pub max_layer_width: u64,
}

/// Layer cap for the breadth-first frontier.
pub const FRONTIER_MEMORY_GUARD: usize = 1 << 22;

/// Expands every feasible solution simultaneously, one element per layer;
/// layer `k` holds all feasible solutions of size `k`. Supports (solutions
/// with no feasible extension at all) are counted as they appear and
/// returned unless `stats_only` is set.
pub fn frontier_run(
    instance: &ProblemInstance,
    stats_only: bool,
) -> Result<(FrontierStats, Option<SupportSet>)> {
    let n = instance.element_count();
    if n > EXHAUSTIVE_GUARD {
        return Err(Error::SizeGuard {
            what: "frontier enumeration",
            guard: EXHAUSTIVE_GUARD,
            n,
        });
    }
    let mut layers = Vec::new();
    let mut supports = Vec::new();
    let mut support_count = 0u64;
    let mut layer: Vec<Solution> = vec![Solution::empty()];
    let mut depth = 0usize;
    loop {
        layers.push((depth, layer.len() as u64));
        let mut next = Vec::new();
        for current in &layer {
            let residual = scan_auxiliary(instance, current).residual;
            if residual.is_empty() {
                support_count += 1;
                if !stats_only {
                    supports.push(current.clone());
                }
                continue;
            }
            // Canonical extension keeps the next layer duplicate-free.
            let floor = current.elements().last().map_or(0, |&m| m + 1);
            for &r in residual.elements() {
                if r >= floor {
                    next.push(current.with_element(r));
                }
            }
            if next.len() > FRONTIER_MEMORY_GUARD {
                return Err(Error::FrontierMemory {
                    layer: depth + 1,
                    guard: FRONTIER_MEMORY_GUARD,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
        depth += 1;
    }
    let stats = FrontierStats {
        max_layer_width: layers.iter().map(|&(_, w)| w).max().unwrap_or(0),
        support_count,
        layers,
    };
    let set = (!stats_only).then(|| SupportSet::new(supports, false));
    Ok((stats, set))
}

/// Some support solution with the requested objective value, or `None`;
/// among candidates the lexicographically smallest is returned.
pub fn find_support_with_value(
    instance: &ProblemInstance,
    target: ObjectiveValue,
) -> Result<Option<Solution>> {
    let supports = enumerate_support(instance, None)?;
    for s in supports.solutions() {
        if objective(instance, s)? == target {
            return Ok(Some(s.clone()));
        }
    }
    Ok(None)
}

/// The support solution with extremal objective value, ties broken
/// lexicographically. Exhaustive over the support set.
pub fn extremal_support(
    instance: &ProblemInstance,
    sense: Sense,
) -> Result<(Solution, ObjectiveValue)> {
    let supports = enumerate_support(instance, None)?;
    let mut best: Option<(Solution, ObjectiveValue)> = None;
    for s in supports.solutions() {
        let value = objective(instance, s)?;
        let better = match &best {
            None => true,
            Some((_, best_value)) => match sense {
                Sense::Max => value > *best_value,
                Sense::Min => value < *best_value,
            },
        };
        if better {
            best = Some((s.clone(), value));
        }
    }
    // The empty solution is always feasible, so at least one support exists.
    Ok(best.expect("support set of a valid instance is nonempty"))
}

/// One row of a support-count growth table.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    /// The family's size parameter.
    pub size: usize,
    /// Work-set size of the generated instance.
    pub elements: usize,
    pub support_count: u64,
    /// Ratio to the previous row's count, when defined.
    pub ratio: Option<f64>,
}

/// Exact `Card(B)` per size for a generated family, with successive ratios
/// as an informal growth indicator. Exponential-looking growth is evidence,
/// not proof, of nontriviality.
pub fn nontriviality_profile(
    family: &dyn InstanceFamily,
    sizes: &[usize],
    seed: u64,
) -> Result<Vec<GrowthRow>> {
    let mut rows: Vec<GrowthRow> = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let instance = family.generate(size, seed)?;
        let supports = enumerate_support(&instance, None)?;
        let count = supports.cardinality();
        let ratio = rows
            .last()
            .filter(|prev| prev.support_count > 0)
            .map(|prev| count as f64 / prev.support_count as f64);
        rows.push(GrowthRow {
            size,
            elements: instance.element_count(),
            support_count: count,
            ratio,
        });
    }
    Ok(rows)
}

/// How [`lookahead_profile`] picks the solutions it measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileMode {
    /// Every feasible solution; guarded at n ≤ 16.
    Exhaustive,
    /// `count` random feasible solutions reached by seeded extension walks.
    Sample { count: u64, seed: u64 },
}

/// Verdict of the call-budget measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LookaheadClass {
    /// Every adjoint set was computed in exactly `n − |π|` extension
    /// queries and no membership queries.
    NoLookahead,
    ExceedsBudget,
}

impl fmt::Display for LookaheadClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LookaheadClass::NoLookahead => "no-lookahead (operational)",
            LookaheadClass::ExceedsBudget => "exceeds budget",
        })
    }
}

/// Measured oracle usage of adjoint-set computation across solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LookaheadProfile {
    /// Extension queries per adjoint computation, keyed by solution size.
    /// Within the budget this is exactly `n − size`.
    pub per_size_calls: BTreeMap<usize, u64>,
    pub solutions_profiled: u64,
    pub membership_calls: u64,
    pub classification: LookaheadClass,
    /// Wall time spent inside oracle queries. The budget bounds the query
    /// *count*; a slow oracle shows up here instead.
    pub oracle_wall_time: Duration,
}

const PROFILE_GUARD: usize = 16;

/// Computes the adjoint set of each selected feasible solution against an
/// instrumented copy of the instance and checks the exact call budget.
pub fn lookahead_profile(
    instance: &ProblemInstance,
    mode: ProfileMode,
) -> Result<LookaheadProfile> {
    let n = instance.element_count();
    let solutions: Vec<Solution> = match mode {
        ProfileMode::Exhaustive => {
            if n > PROFILE_GUARD {
                return Err(Error::SizeGuard {
                    what: "exhaustive lookahead profile",
                    guard: PROFILE_GUARD,
                    n,
                });
            }
            collect_feasible(instance)
        }
        ProfileMode::Sample { count, seed } => sample_feasible(instance, count, seed),
    };

    let (probe, counters) = instance.instrumented();
    let mut per_size: BTreeMap<usize, u64> = BTreeMap::new();
    let mut within_budget = true;
    for solution in &solutions {
        let before = counters.snapshot();
        let _ = scan_auxiliary(&probe, solution);
        let after = counters.snapshot();
        let ext = after.extension_predicate_calls - before.extension_predicate_calls;
        let full = after.full_membership_calls - before.full_membership_calls;
        let budget = (n - solution.len()) as u64;
        if ext != budget || full != 0 {
            within_budget = false;
        }
        per_size
            .entry(solution.len())
            .and_modify(|calls| *calls = (*calls).max(ext))
            .or_insert(ext);
    }
    let totals = counters.snapshot();
    Ok(LookaheadProfile {
        per_size_calls: per_size,
        solutions_profiled: solutions.len() as u64,
        membership_calls: totals.full_membership_calls,
        classification: if within_budget {
            LookaheadClass::NoLookahead
        } else {
            LookaheadClass::ExceedsBudget
        },
        oracle_wall_time: totals.wall_time,
    })
}

/// All feasible solutions in lexicographic order, by canonical extension.
fn collect_feasible(instance: &ProblemInstance) -> Vec<Solution> {
    let mut out = Vec::new();
    let mut stack = vec![Solution::empty()];
    while let Some(current) = stack.pop() {
        let residual = scan_auxiliary(instance, &current).residual;
        let floor = current.elements().last().map_or(0, |&m| m + 1);
        for &r in residual.elements().iter().rev() {
            if r >= floor {
                stack.push(current.with_element(r));
            }
        }
        out.push(current);
    }
    out
}

/// Random feasible solutions via seeded extension walks from the empty one.
fn sample_feasible(instance: &ProblemInstance, count: u64, seed: u64) -> Vec<Solution> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let mut current = Solution::empty();
        loop {
            let residual = scan_auxiliary(instance, &current).residual;
            if residual.is_empty() || rng.random_bool(0.3) {
                break;
            }
            let pick = residual.elements()[rng.random_range(0..residual.len())];
            current = current.with_element(pick);
        }
        out.push(current);
    }
    out
}
