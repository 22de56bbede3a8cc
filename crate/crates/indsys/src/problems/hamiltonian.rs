use super::graph::Graph;
use crate::error::{Error, Result};

/// One part of a cycles-and-edges partition: a simple cycle of at least
/// three vertices (listed in traversal order) or a single edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionPart {
    Cycle(Vec<usize>),
    Edge(usize, usize),
}

impl PartitionPart {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            PartitionPart::Cycle(vs) => vs.clone(),
            PartitionPart::Edge(a, b) => vec![*a, *b],
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, PartitionPart::Cycle(_))
    }
}

/// A vertex-disjoint cover of the whole graph by cycles and single edges.
/// Singleton parts are not allowed, so a one-part partition with a cycle is
/// literally a Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclesEdgesPartition {
    pub parts: Vec<PartitionPart>,
}

impl CyclesEdgesPartition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
}

/// Size bound for the exhaustive partition search.
pub const HAMILTONIAN_GUARD: usize = 8;

/// Finds a minimum-cardinality partition of all vertices into simple cycles
/// (length ≥ 3) and single edges, or `None` when no such cover exists (for
/// example with an isolated vertex, or a 3-vertex path). Exhaustive search,
/// guarded at |V| ≤ 8; the first minimum in canonical exploration order is
/// returned, so results are deterministic.
pub fn hamiltonian_partition_bruteforce(graph: &Graph) -> Result<Option<CyclesEdgesPartition>> {
    let n = graph.vertex_count();
    if n > HAMILTONIAN_GUARD {
        return Err(Error::SizeGuard {
            what: "cycles-and-edges partition search",
            guard: HAMILTONIAN_GUARD,
            n,
        });
    }
    if n == 0 {
        return Ok(Some(CyclesEdgesPartition { parts: Vec::new() }));
    }

    struct Search<'g> {
        graph: &'g Graph,
        covered: Vec<bool>,
        parts: Vec<PartitionPart>,
        best: Option<CyclesEdgesPartition>,
    }

    impl Search<'_> {
        fn descend(&mut self) {
            let n = self.graph.vertex_count();
            let Some(lowest) = (0..n).find(|&v| !self.covered[v]) else {
                let better = match &self.best {
                    None => true,
                    Some(best) => self.parts.len() < best.part_count(),
                };
                if better {
                    self.best = Some(CyclesEdgesPartition {
                        parts: self.parts.clone(),
                    });
                }
                return;
            };
            // One more part is unavoidable; prune when that cannot improve.
            if let Some(best) = &self.best {
                if self.parts.len() + 1 >= best.part_count() {
                    return;
                }
            }
            // Edge parts through the lowest uncovered vertex, then cycles.
            for w in self.graph.neighbors(lowest) {
                if self.covered[w] {
                    continue;
                }
                self.covered[lowest] = true;
                self.covered[w] = true;
                self.parts.push(PartitionPart::Edge(lowest, w));
                self.descend();
                self.parts.pop();
                self.covered[lowest] = false;
                self.covered[w] = false;
            }
            self.covered[lowest] = true;
            let mut path = vec![lowest];
            self.extend_cycle(&mut path);
            self.covered[lowest] = false;
        }

        /// Grows a simple path from the anchor (its minimum vertex) over
        /// uncovered vertices; closing back to the anchor at length ≥ 3
        /// yields a cycle part. Requiring `path[1] < path.last()` keeps one
        /// traversal direction per cycle.
        fn extend_cycle(&mut self, path: &mut Vec<usize>) {
            let anchor = path[0];
            let last = *path.last().unwrap();
            if path.len() >= 3 && path[1] < last && self.graph.has_edge(last, anchor) {
                self.parts.push(PartitionPart::Cycle(path.clone()));
                self.descend();
                self.parts.pop();
            }
            for w in self.graph.neighbors(last) {
                if self.covered[w] || w == anchor {
                    continue;
                }
                self.covered[w] = true;
                path.push(w);
                self.extend_cycle(path);
                path.pop();
                self.covered[w] = false;
            }
        }
    }

    let mut search = Search {
        graph,
        covered: vec![false; n],
        parts: Vec::new(),
        best: None,
    };
    search.descend();
    Ok(search.best)
}

/// Hamiltonicity via the partition reformulation: the graph is Hamiltonian
/// iff the minimum cycles-and-edges partition is a single cycle part.
pub fn is_hamiltonian(graph: &Graph) -> Result<bool> {
    Ok(match hamiltonian_partition_bruteforce(graph)? {
        Some(partition) => partition.part_count() == 1 && partition.parts[0].is_cycle(),
        None => false,
    })
}

/// Direct route: search for a Hamiltonian cycle over vertex permutations
/// (first vertex fixed, directions deduplicated). Returns the first cycle
/// found in canonical order.
pub fn hamiltonian_cycle_direct(graph: &Graph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    if n < 3 {
        return None;
    }

    fn extend(graph: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = graph.vertex_count();
        let last = *path.last().unwrap();
        if path.len() == n {
            return graph.has_edge(last, path[0]) && path[1] < path[n - 1];
        }
        for v in 1..n {
            if !used[v] && graph.has_edge(last, v) {
                used[v] = true;
                path.push(v);
                if extend(graph, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }

    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    extend(graph, &mut path, &mut used).then_some(path)
}
