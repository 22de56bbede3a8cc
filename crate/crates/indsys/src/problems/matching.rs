use std::ops::ControlFlow;

use crate::oracle::MembershipOracle;

/// Maximum-cardinality matching in a bipartite graph by repeated augmenting-
/// path search (Kuhn's algorithm). Left vertices are processed in ascending
/// order and neighbor lists are sorted, so the result is deterministic.
///
/// Returns the matching as sorted `(left, right)` pairs.
pub fn max_bipartite_matching(
    left: usize,
    right: usize,
    edges: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let mut adjacency = vec![Vec::new(); left];
    for &(u, v) in edges {
        debug_assert!(u < left && v < right);
        adjacency[u].push(v);
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }
    let mut owner: Vec<Option<usize>> = vec![None; right];

    fn augment(
        u: usize,
        adjacency: &[Vec<usize>],
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &v in &adjacency[u] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let free = match owner[v] {
                None => true,
                Some(previous) => augment(previous, adjacency, owner, visited),
            };
            if free {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }

    for u in 0..left {
        let mut visited = vec![false; right];
        augment(u, &adjacency, &mut owner, &mut visited);
    }
    let mut matching: Vec<(usize, usize)> = owner
        .iter()
        .enumerate()
        .filter_map(|(v, &u)| u.map(|u| (u, v)))
        .collect();
    matching.sort_unstable();
    matching
}

/// Visits every maximum-cardinality matching in canonical order.
///
/// Left vertices are decided in ascending order; for each the branches are
/// "match to each free neighbor, ascending" and then "leave unmatched".
/// Branches that can no longer reach the maximum cardinality are pruned.
/// The callback receives the matching as sorted pairs and may stop the
/// enumeration early; the return value is the number of maximum matchings
/// visited.
pub fn visit_maximum_matchings(
    left: usize,
    right: usize,
    edges: &[(usize, usize)],
    mut visit: impl FnMut(&[(usize, usize)]) -> ControlFlow<()>,
) -> u64 {
    let target = max_bipartite_matching(left, right, edges).len();
    let mut adjacency = vec![Vec::new(); left];
    for &(u, v) in edges {
        adjacency[u].push(v);
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }

    struct State<'a, F> {
        adjacency: &'a [Vec<usize>],
        target: usize,
        taken: Vec<bool>,
        chosen: Vec<(usize, usize)>,
        visited: u64,
        visit: F,
    }

    fn descend<F: FnMut(&[(usize, usize)]) -> ControlFlow<()>>(
        state: &mut State<'_, F>,
        u: usize,
    ) -> ControlFlow<()> {
        let left = state.adjacency.len();
        if u == left {
            if state.chosen.len() == state.target {
                state.visited += 1;
                let mut matching = state.chosen.clone();
                matching.sort_unstable();
                return (state.visit)(&matching);
            }
            return ControlFlow::Continue(());
        }
        // Even matching every remaining vertex cannot reach the target.
        if state.chosen.len() + (left - u) < state.target {
            return ControlFlow::Continue(());
        }
        for i in 0..state.adjacency[u].len() {
            let v = state.adjacency[u][i];
            if !state.taken[v] {
                state.taken[v] = true;
                state.chosen.push((u, v));
                let flow = descend(state, u + 1);
                state.chosen.pop();
                state.taken[v] = false;
                flow?;
            }
        }
        descend(state, u + 1)
    }

    let mut state = State {
        adjacency: &adjacency,
        target,
        taken: vec![false; right],
        chosen: Vec::new(),
        visited: 0,
        visit: &mut visit,
    };
    let _ = descend(&mut state, 0);
    state.visited
}

/// Feasibility oracle for matchings: elements are edges with two endpoint
/// labels, and a subset is feasible iff no label is used twice. Undirected
/// matchings use the vertex pair as labels; arc selections in a split
/// bipartite graph use distinct out/in label spaces.
#[derive(Debug, Clone)]
pub struct MatchingOracle {
    endpoints: Vec<(usize, usize)>,
}

impl MatchingOracle {
    pub fn new(endpoints: Vec<(usize, usize)>) -> Self {
        Self { endpoints }
    }
}

impl MembershipOracle for MatchingOracle {
    fn element_count(&self) -> usize {
        self.endpoints.len()
    }

    fn is_feasible(&self, subset: &[usize]) -> bool {
        let mut labels: Vec<usize> = subset
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.endpoints[e];
                [a, b]
            })
            .collect();
        labels.sort_unstable();
        labels.windows(2).all(|w| w[0] != w[1])
    }

    fn extension_feasible(&self, base: &[usize], extra: usize) -> bool {
        let (a, b) = self.endpoints[extra];
        base.iter().all(|&e| {
            let (x, y) = self.endpoints[e];
            x != a && x != b && y != a && y != b
        })
    }
}
