//! Brute-force oracles and seeded generators shared by the integration
//! suites. Everything here recomputes results from first principles and
//! stays independent of the library's fast paths.
#![allow(dead_code)] // each test binary uses its own subset of the helpers

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use indsys::model::{ProblemInstance, Solution};
use indsys::problems::{Digraph, Graph};

pub fn ids_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|&b| mask & (1 << b) != 0).collect()
}

/// Every feasible subset, by full membership over all 2^n masks.
pub fn naive_feasible_masks(instance: &ProblemInstance) -> Vec<u32> {
    let n = instance.element_count();
    assert!(n <= 20, "naive scan wants small n");
    let oracle = instance.oracle();
    (0..(1u32 << n))
        .filter(|&m| oracle.is_feasible(&ids_of(m)))
        .collect()
}

/// Support solutions the slow way: feasible subsets that are maximal within
/// the full feasible list. Lexicographically sorted.
pub fn naive_supports(instance: &ProblemInstance) -> Vec<Solution> {
    let feasible = naive_feasible_masks(instance);
    let mut supports: Vec<Solution> = feasible
        .iter()
        .filter(|&&m| !feasible.iter().any(|&o| o != m && o & m == m))
        .map(|&m| Solution::new(ids_of(m)).unwrap())
        .collect();
    supports.sort();
    supports
}

/// Union of all feasible supersets of `base`, by scanning every superset
/// with full membership queries.
pub fn naive_closure_union(instance: &ProblemInstance, base: u32) -> u32 {
    let n = instance.element_count();
    let oracle = instance.oracle();
    let complement = !base & ((1u32 << n) - 1);
    let mut union = 0;
    let mut extra = complement;
    loop {
        let candidate = base | extra;
        if oracle.is_feasible(&ids_of(candidate)) {
            union |= candidate;
        }
        if extra == 0 {
            break;
        }
        extra = (extra - 1) & complement;
    }
    union
}

/// Minimum chain-partition size by exhaustive assignment of vertices (in
/// topological order) to comparable chains.
pub fn brute_min_chain_count(d: &Digraph) -> usize {
    let closure = d.transitive_closure().expect("DAG expected");
    let order = d.topological_order().expect("DAG expected");

    fn descend(
        order: &[usize],
        at: usize,
        chain_ends: &mut Vec<usize>,
        closure: &Digraph,
        best: &mut usize,
    ) {
        if chain_ends.len() >= *best {
            return;
        }
        if at == order.len() {
            *best = chain_ends.len();
            return;
        }
        let v = order[at];
        for i in 0..chain_ends.len() {
            if closure.has_arc(chain_ends[i], v) {
                let saved = chain_ends[i];
                chain_ends[i] = v;
                descend(order, at + 1, chain_ends, closure, best);
                chain_ends[i] = saved;
            }
        }
        chain_ends.push(v);
        descend(order, at + 1, chain_ends, closure, best);
        chain_ends.pop();
    }

    let mut best = d.vertex_count() + 1;
    descend(&order, 0, &mut Vec::new(), &closure, &mut best);
    best
}

/// Random DAG: arcs only go forward along a shuffled vertex order.
pub fn random_dag(seed: u64, vertices: usize, arc_probability: f64) -> Digraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..vertices).collect();
    order.shuffle(&mut rng);
    let mut arcs = Vec::new();
    for i in 0..vertices {
        for j in (i + 1)..vertices {
            if rng.random_bool(arc_probability) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Digraph::new(vertices, arcs).expect("forward arcs form a DAG")
}

pub fn random_graph(seed: u64, vertices: usize, edge_probability: f64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in (u + 1)..vertices {
            if rng.random_bool(edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertices, edges).expect("simple edges")
}

/// A few feasible solutions of an instance, reached by seeded random
/// extension walks from the empty solution.
pub fn sample_feasible_solutions(
    instance: &ProblemInstance,
    count: usize,
    seed: u64,
) -> Vec<Solution> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut current = Solution::empty();
        loop {
            let residual = indsys::auxiliary::scan_auxiliary(instance, &current).residual;
            if residual.is_empty() || rng.random_bool(0.35) {
                break;
            }
            let pick = residual.elements()[rng.random_range(0..residual.len())];
            current = current.with_element(pick);
        }
        out.push(current);
    }
    out
}
