//! Structural predicates: connectivity, bridges, cut vertices.
//!
//! Bridges and cut vertices are computed by definition — delete the
//! candidate and see whether the component count grows. At the orders this
//! crate targets that is plenty fast and leaves nothing to get subtly wrong.

use crate::graph::Graph;
use crate::ops;

/// Summary of the structure checks used as theorem preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub is_connected: bool,
    pub bridges: Vec<(usize, usize)>,
    pub cut_vertices: Vec<usize>,
    pub degrees: Vec<usize>,
    pub has_isolated: bool,
}

/// Number of connected components (0 for the empty graph).
pub fn component_count(g: &Graph) -> usize {
    let n = g.order();
    let mut seen = 0u64;
    let full = g.full_mask();
    let mut count = 0;
    while seen != full {
        let start = (!seen & full).trailing_zeros() as usize;
        if start >= n {
            break;
        }
        let mut frontier = 1u64 << start;
        let mut comp = frontier;
        while frontier != 0 {
            let next = ops::neighborhood_union(g, frontier) & !comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        count += 1;
    }
    count
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g) <= 1
}

/// Edges whose deletion increases the component count.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let base = component_count(g);
    g.edges()
        .into_iter()
        .filter(|&(u, w)| {
            let h = ops::remove_edge(g, u, w).expect("edge from edge list");
            component_count(&h) > base
        })
        .collect()
}

/// Vertices whose deletion increases the component count.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let base = component_count(g);
    (0..g.order())
        .filter(|&v| {
            let h = ops::remove_vertex(g, v).expect("vertex in range");
            component_count(&h) > base
        })
        .collect()
}

pub fn has_isolated_vertex(g: &Graph) -> bool {
    (0..g.order()).any(|v| g.degree(v) == 0)
}

pub fn structural_predicates(g: &Graph) -> StructuralReport {
    StructuralReport {
        is_connected: is_connected(g),
        bridges: bridges(g),
        cut_vertices: cut_vertices(g),
        degrees: g.degrees(),
        has_isolated: has_isolated_vertex(g),
    }
}
