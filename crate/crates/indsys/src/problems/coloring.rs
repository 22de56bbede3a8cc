use std::sync::Arc;

use super::graph::Graph;
use crate::error::{Error, Result};
use crate::model::ProblemInstance;
use crate::oracle::MembershipOracle;

/// Partial proper colorings of a graph as an independence system.
///
/// Elements are `(vertex, color)` assignments, numbered `vertex * k + color`.
/// A subset is feasible iff no vertex receives two colors and no edge has
/// both endpoints on the same color. Support solutions of size `|V|` are
/// exactly the proper total colorings; smaller supports are partial
/// colorings that cannot be extended at all.
#[derive(Debug, Clone)]
pub struct ColoringSystem {
    pub instance: ProblemInstance,
    pub graph: Graph,
    pub colors: usize,
}

impl ColoringSystem {
    pub fn element_of(&self, vertex: usize, color: usize) -> usize {
        vertex * self.colors + color
    }

    /// Decodes an element id into its `(vertex, color)` assignment.
    pub fn assignment_of(&self, element: usize) -> (usize, usize) {
        (element / self.colors, element % self.colors)
    }
}

/// Builds the k-coloring system over a graph; `n = k * |V|`, unit weights.
pub fn coloring_system(graph: Graph, colors: usize, label: impl Into<String>) -> Result<ColoringSystem> {
    if colors == 0 {
        return Err(Error::DegenerateSystem("color count must be at least 1".into()));
    }
    let oracle = Arc::new(ColoringOracle::new(graph.clone(), colors));
    let instance = ProblemInstance::with_unit_weights(oracle, label)?;
    Ok(ColoringSystem {
        instance,
        graph,
        colors,
    })
}

/// Feasibility oracle behind [`ColoringSystem`]. The extension check is
/// local: one pass over the new vertex's neighbors.
#[derive(Debug, Clone)]
pub struct ColoringOracle {
    adjacency: Vec<Vec<usize>>,
    colors: usize,
}

impl ColoringOracle {
    fn new(graph: Graph, colors: usize) -> Self {
        let adjacency = (0..graph.vertex_count())
            .map(|v| graph.neighbors(v))
            .collect();
        Self { adjacency, colors }
    }

    fn decode(&self, element: usize) -> (usize, usize) {
        (element / self.colors, element % self.colors)
    }
}

impl MembershipOracle for ColoringOracle {
    fn element_count(&self) -> usize {
        self.adjacency.len() * self.colors
    }

    fn is_feasible(&self, subset: &[usize]) -> bool {
        let mut assigned: Vec<Option<usize>> = vec![None; self.adjacency.len()];
        for &element in subset {
            let (vertex, color) = self.decode(element);
            if assigned[vertex].is_some() {
                return false;
            }
            assigned[vertex] = Some(color);
        }
        for (vertex, neighbors) in self.adjacency.iter().enumerate() {
            let Some(color) = assigned[vertex] else {
                continue;
            };
            // Each edge is seen from both sides; checking v < u once would
            // also do, but the scan is cheap at this scale.
            if neighbors
                .iter()
                .any(|&u| assigned[u] == Some(color))
            {
                return false;
            }
        }
        true
    }

    fn extension_feasible(&self, base: &[usize], extra: usize) -> bool {
        let (vertex, color) = self.decode(extra);
        for &element in base {
            let (v, c) = self.decode(element);
            if v == vertex {
                return false;
            }
            if c == color && self.adjacency[vertex].binary_search(&v).is_ok() {
                return false;
            }
        }
        true
    }
}

/// Counts proper total k-colorings by scanning all `k^|V|` assignments.
/// The independent cross-check for support counting; exponential on purpose.
pub fn count_proper_colorings_bruteforce(graph: &Graph, colors: usize) -> u64 {
    let n = graph.vertex_count();
    if n == 0 {
        return 1;
    }
    let mut assignment = vec![0usize; n];
    let mut count = 0u64;
    loop {
        if graph
            .edges()
            .iter()
            .all(|&(a, b)| assignment[a] != assignment[b])
        {
            count += 1;
        }
        // Odometer increment over base-k digits.
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            assignment[i] += 1;
            if assignment[i] < colors {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{enumerate_support, frontier_run};

    #[test]
    fn triangle_with_two_colors_has_no_total_coloring() {
        let system = coloring_system(Graph::cycle(3), 2, "triangle-k2").unwrap();
        assert_eq!(system.instance.element_count(), 6);
        let supports = enumerate_support(&system.instance, None).unwrap();
        assert_eq!(supports.cardinality(), 6);
        assert!(supports.solutions().iter().all(|s| s.len() == 2));
        assert_eq!(count_proper_colorings_bruteforce(&Graph::cycle(3), 2), 0);
    }

    #[test]
    fn triangle_frontier_layers() {
        let system = coloring_system(Graph::cycle(3), 2, "triangle-k2").unwrap();
        let (stats, _) = frontier_run(&system.instance, true).unwrap();
        assert_eq!(stats.layers, vec![(0, 1), (1, 6), (2, 6)]);
        assert_eq!(stats.support_count, 6);
    }

    #[test]
    fn adjacent_same_color_is_infeasible() {
        let system = coloring_system(Graph::cycle(3), 2, "triangle-k2").unwrap();
        let pair = vec![system.element_of(0, 0), system.element_of(1, 0)];
        assert!(!system.instance.oracle().is_feasible(&pair));
    }

    #[test]
    fn single_vertex_three_colors() {
        let graph = Graph::new(1, vec![]).unwrap();
        let system = coloring_system(graph, 3, "vertex-k3").unwrap();
        let supports = enumerate_support(&system.instance, None).unwrap();
        assert_eq!(supports.cardinality(), 3);
        assert!(supports.solutions().iter().all(|s| s.len() == 1));
    }

    #[test]
    fn path3_with_two_colors() {
        let graph = Graph::path(3);
        let system = coloring_system(graph.clone(), 2, "path3-k2").unwrap();
        let supports = enumerate_support(&system.instance, None).unwrap();
        // Two total colorings plus two stuck partial ones.
        assert_eq!(supports.cardinality(), 4);
        let full: Vec<_> = supports.solutions().iter().filter(|s| s.len() == 3).collect();
        assert_eq!(full.len() as u64, count_proper_colorings_bruteforce(&graph, 2));
        assert_eq!(full.len(), 2);
        let stuck: Vec<_> = supports.solutions().iter().filter(|s| s.len() == 2).collect();
        assert_eq!(stuck.len(), 2);
    }

    #[test]
    fn element_mapping_is_a_bijection() {
        let system = coloring_system(Graph::path(3), 2, "path3-k2").unwrap();
        for element in 0..system.instance.element_count() {
            let (v, c) = system.assignment_of(element);
            assert_eq!(system.element_of(v, c), element);
        }
    }
}
