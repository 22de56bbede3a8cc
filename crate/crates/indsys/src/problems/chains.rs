use std::ops::ControlFlow;
use std::sync::Arc;

use super::digraph::Digraph;
use super::matching::{max_bipartite_matching, visit_maximum_matchings, MatchingOracle};
use crate::error::{Error, Result};
use crate::model::ProblemInstance;

/// A partition of a DAG's vertices into chains (sequences totally ordered by
/// reachability), together with the bipartite matching that induced it.
///
/// In the split graph every vertex appears as an out-copy on the left and an
/// in-copy on the right, and each closure arc `(u, v)` is an edge between
/// `u`'s out-copy and `v`'s in-copy. A matching there assigns each vertex at
/// most one successor and at most one predecessor, so matched arcs link up
/// into chains; the chain count is `|V| − |matching|`, which a maximum
/// matching makes minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPartition {
    chains: Vec<Vec<usize>>,
    matching: Vec<(usize, usize)>,
}

impl ChainPartition {
    /// Wraps explicit chains; the matching is read off consecutive pairs.
    pub fn from_chains(chains: Vec<Vec<usize>>) -> Self {
        let mut matching: Vec<(usize, usize)> = chains
            .iter()
            .flat_map(|chain| chain.windows(2).map(|w| (w[0], w[1])))
            .collect();
        matching.sort_unstable();
        Self { chains, matching }
    }

    fn from_matching(vertex_count: usize, matching: Vec<(usize, usize)>) -> Self {
        let mut successor = vec![None; vertex_count];
        let mut has_predecessor = vec![false; vertex_count];
        for &(u, v) in &matching {
            successor[u] = Some(v);
            has_predecessor[v] = true;
        }
        let mut chains = Vec::new();
        for (start, _) in has_predecessor.iter().enumerate().filter(|(_, &p)| !p) {
            let mut chain = vec![start];
            let mut current = start;
            while let Some(next) = successor[current] {
                chain.push(next);
                current = next;
            }
            chains.push(chain);
        }
        Self { chains, matching }
    }

    /// Chains ordered by their first vertex.
    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    /// The comparable pairs used, i.e. the split-graph matching.
    pub fn matching(&self) -> &[(usize, usize)] {
        &self.matching
    }

    pub fn chain_count(&self) -> usize {
        self.chains.len()
    }

    /// True iff every consecutive pair in every chain is an arc of `d`
    /// itself, not merely of its closure.
    pub fn uses_only_original_arcs(&self, d: &Digraph) -> bool {
        self.matching.iter().all(|&(u, v)| d.has_arc(u, v))
    }

    /// Structural validity against a closure: the chains partition the
    /// vertex set and consecutive vertices are comparable.
    fn validate(&self, closure: &Digraph) -> Result<()> {
        let n = closure.vertex_count();
        let mut seen = vec![false; n];
        for chain in &self.chains {
            if chain.is_empty() {
                return Err(Error::InvalidChainPartition("empty chain".into()));
            }
            for &v in chain {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertices: n,
                    });
                }
                if seen[v] {
                    return Err(Error::InvalidChainPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
                seen[v] = true;
            }
            for w in chain.windows(2) {
                if !closure.has_arc(w[0], w[1]) {
                    return Err(Error::InvalidChainPartition(format!(
                        "consecutive vertices {} and {} are incomparable",
                        w[0], w[1]
                    )));
                }
            }
        }
        if let Some(missing) = (0..n).find(|&v| !seen[v]) {
            return Err(Error::InvalidChainPartition(format!(
                "vertex {missing} is not covered"
            )));
        }
        Ok(())
    }
}

/// Split-graph edges of the closure: one `(tail, head)` edge per closure arc.
fn split_edges(closure: &Digraph) -> Vec<(usize, usize)> {
    closure.arcs().to_vec()
}

/// Partitions the vertices of an acyclic digraph into the minimum number of
/// chains: maximum matching on the split graph of the transitive closure,
/// then chains read off the matched arcs.
pub fn min_chain_partition(d: &Digraph) -> Result<ChainPartition> {
    let closure = d.transitive_closure()?;
    let n = d.vertex_count();
    let matching = max_bipartite_matching(n, n, &split_edges(&closure));
    Ok(ChainPartition::from_matching(n, matching))
}

/// Result of an alternating-transformation search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformOutcome {
    /// A minimum chain partition whose consecutive pairs are all original
    /// arcs, when one exists.
    pub result: Option<ChainPartition>,
    /// Maximum matchings examined before stopping.
    pub matchings_examined: u64,
}

/// Desk-scale bound for the exhaustive transformation search.
pub const ALTERNATING_SEARCH_GUARD: usize = 12;

/// Searches for a minimum chain partition in which every consecutive chain
/// pair is an arc of the original digraph, starting from `start`.
///
/// Moving between maximum matchings is what alternating chains and cycles
/// do, so the search enumerates all maximum matchings of the split graph in
/// canonical order and returns the first one whose chains qualify. This is
/// deliberately exhaustive: choosing the right alternating structure is
/// exactly the step that cannot be driven by local extension queries.
///
/// `start` must be a structurally valid chain partition of the closure (it
/// need not be minimum); if it already qualifies it is returned unchanged.
pub fn alternating_transform_search(
    d: &Digraph,
    start: &ChainPartition,
) -> Result<TransformOutcome> {
    let n = d.vertex_count();
    if n > ALTERNATING_SEARCH_GUARD {
        return Err(Error::SizeGuard {
            what: "alternating transformation search",
            guard: ALTERNATING_SEARCH_GUARD,
            n,
        });
    }
    let closure = d.transitive_closure()?;
    start.validate(&closure)?;
    if start.uses_only_original_arcs(d) {
        return Ok(TransformOutcome {
            result: Some(start.clone()),
            matchings_examined: 0,
        });
    }
    let mut found = None;
    let examined = visit_maximum_matchings(n, n, &split_edges(&closure), |matching| {
        let candidate = ChainPartition::from_matching(n, matching.to_vec());
        if candidate.uses_only_original_arcs(d) {
            found = Some(candidate);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(TransformOutcome {
        result: found,
        matchings_examined: examined,
    })
}

/// The chain-partition problem as an independence system over closure arcs.
#[derive(Debug, Clone)]
pub struct ArcSelectionSystem {
    pub instance: ProblemInstance,
    /// Element legend: element `i` selects `arcs[i]`.
    pub arcs: Vec<(usize, usize)>,
}

impl ArcSelectionSystem {
    /// Decodes a solution into the selected closure arcs.
    pub fn arcs_of(&self, elements: &[usize]) -> Vec<(usize, usize)> {
        elements.iter().map(|&e| self.arcs[e]).collect()
    }
}

/// Recasts minimum chain partition over an acyclic digraph as an
/// independence system: elements are the closure arcs, a subset is feasible
/// iff no vertex gains two successors or two predecessors (a partial
/// matching of the split graph), and the support solutions are exactly the
/// maximal matchings. All weights are one.
pub fn chain_partition_system(d: &Digraph, label: impl Into<String>) -> Result<ArcSelectionSystem> {
    let closure = d.transitive_closure()?;
    let arcs = closure.arcs().to_vec();
    if arcs.len() <= 1 {
        return Err(Error::DegenerateSystem(format!(
            "closure has {} arc(s); the arc-selection system needs at least 2",
            arcs.len()
        )));
    }
    // Out- and in-copies live in disjoint label spaces.
    let endpoints = arcs.iter().map(|&(u, v)| (2 * u, 2 * v + 1)).collect();
    let oracle = Arc::new(MatchingOracle::new(endpoints));
    let instance = ProblemInstance::with_unit_weights(oracle, label)?;
    Ok(ArcSelectionSystem { instance, arcs })
}
