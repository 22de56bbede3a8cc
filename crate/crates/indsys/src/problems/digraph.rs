use crate::error::{Error, Result};

/// A simple directed graph: no self-loops, no duplicate arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut arcs = arcs;
        arcs.sort_unstable();
        for &(u, v) in &arcs {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex,
                        vertices: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        for window in arcs.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicateArc(window[0].0, window[0].1));
            }
        }
        Ok(Self { vertex_count, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        out
    }

    /// Kahn's algorithm; a leftover vertex means a cycle, which is walked
    /// out and returned in the error.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let succ = self.successors();
        let mut indegree = vec![0usize; self.vertex_count];
        for &(_, v) in &self.arcs {
            indegree[v] += 1;
        }
        let mut queue: Vec<usize> = (0..self.vertex_count).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            order.push(u);
            for &v in &succ[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push(v);
                }
            }
        }
        if order.len() == self.vertex_count {
            return Ok(order);
        }
        // Every remaining vertex has an incoming arc from another remaining
        // vertex; walking successors inside the remainder must loop.
        let remaining: Vec<bool> = {
            let mut r = vec![true; self.vertex_count];
            for &v in &order {
                r[v] = false;
            }
            r
        };
        let start = (0..self.vertex_count).find(|&v| remaining[v]).unwrap();
        let mut path = vec![start];
        let mut seen = vec![false; self.vertex_count];
        seen[start] = true;
        let mut current = start;
        loop {
            let next = succ[current]
                .iter()
                .copied()
                .find(|&v| remaining[v])
                .expect("vertex inside a cycle region has a successor in it");
            if seen[next] {
                let from = path.iter().position(|&v| v == next).unwrap();
                return Err(Error::CyclicDigraph(path[from..].to_vec()));
            }
            seen[next] = true;
            path.push(next);
            current = next;
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Reachability closure: an arc `(u, v)` for every nonempty path from
    /// `u` to `v`. Defined for acyclic digraphs only.
    pub fn transitive_closure(&self) -> Result<Digraph> {
        self.topological_order()?;
        let succ = self.successors();
        let mut closure_arcs = Vec::new();
        for u in 0..self.vertex_count {
            let mut reached = vec![false; self.vertex_count];
            let mut stack: Vec<usize> = succ[u].clone();
            while let Some(v) = stack.pop() {
                if !reached[v] {
                    reached[v] = true;
                    stack.extend(succ[v].iter().copied());
                }
            }
            closure_arcs.extend((0..self.vertex_count).filter(|&v| reached[v]).map(|v| (u, v)));
        }
        Digraph::new(self.vertex_count, closure_arcs)
    }
}
