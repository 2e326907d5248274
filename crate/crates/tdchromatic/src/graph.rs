//! Immutable simple undirected graphs on vertices `0..n-1`.
//!
//! Adjacency is stored as one bitmask per vertex, which keeps the solvers'
//! inner loops branch-free and makes structural checks cheap. Every public
//! constructor validates the representation invariants: no self-loops,
//! symmetric adjacency, and vertex ids exactly `0..n-1`.

use crate::error::{Error, Result};

/// A simple undirected graph, immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Hard representation limit (adjacency rows are single `u64` masks).
    pub const MAX_ORDER: usize = 64;

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > Self::MAX_ORDER {
            return Err(Error::InvalidParameter(format!(
                "order {n} exceeds the representation limit of {}",
                Self::MAX_ORDER
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse (set
    /// semantics); self-loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, w) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
            if u == w {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= 1 << w;
            g.adj[w] |= 1 << u;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        u < self.n && w < self.n && self.adj[u] & (1 << w) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// All edges `(u, w)` with `u < w`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for w in self.neighbors(u) {
                if w > u {
                    out.push((u, w));
                }
            }
        }
        out
    }

    /// Mask with one bit per vertex.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Checks the representation invariants. All constructors in this crate
    /// uphold them; this is exposed so tests can assert it after every
    /// operation.
    pub fn check_invariants(&self) -> Result<()> {
        if self.adj.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "adjacency rows {} != order {}",
                self.adj.len(),
                self.n
            )));
        }
        let full = self.full_mask();
        for v in 0..self.n {
            if self.adj[v] & !full != 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} has neighbors outside 0..{}",
                    self.n
                )));
            }
            if self.adj[v] & (1 << v) != 0 {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {v}")));
            }
            let mut m = self.adj[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                if self.adj[w] & (1 << v) == 0 {
                    return Err(Error::InvalidGraph(format!(
                        "asymmetric edge {v}-{w}"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Iterates the set bits of a mask as vertex ids.
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    BitIter(mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_dedups_and_symmetrizes() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        g.check_invariants().unwrap();
    }

    #[test]
    fn self_loop_rejected() {
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn edges_sorted() {
        let g = Graph::from_edges(4, [(2, 3), (0, 3), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (2, 3)]);
    }
}
