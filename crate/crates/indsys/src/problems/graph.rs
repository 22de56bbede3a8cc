use crate::error::{Error, Result};

/// A simple undirected graph; edges are stored as sorted `(min, max)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex,
                        vertices: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for window in normalized.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicateArc(window[0].0, window[0].1));
            }
        }
        Ok(Self {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn path(vertex_count: usize) -> Self {
        let edges = (1..vertex_count).map(|v| (v - 1, v)).collect();
        Self::new(vertex_count, edges).expect("path edges are valid")
    }

    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..vertex_count).map(|v| (v - 1, v)).collect();
        edges.push((0, vertex_count - 1));
        Self::new(vertex_count, edges).expect("cycle edges are valid")
    }

    pub fn complete(vertex_count: usize) -> Self {
        let edges = (0..vertex_count)
            .flat_map(|u| ((u + 1)..vertex_count).map(move |v| (u, v)))
            .collect();
        Self::new(vertex_count, edges).expect("complete-graph edges are valid")
    }

    /// Star with `leaves` leaves around center 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Self::new(leaves + 1, edges).expect("star edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}
