//! The graph operations under study: vertex/edge removal, vertex/edge
//! contraction, neighborhood-edge removal, plus join and corona.
//!
//! All operations are pure and return freshly labeled graphs. After a vertex
//! disappears the survivors keep their relative order, compacted to
//! `0..n-2`; a merged vertex occupies the smaller endpoint's slot. This
//! makes outputs deterministic and test fixtures byte-stable.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}

fn check_edge(g: &Graph, u: usize, w: usize) -> Result<()> {
    check_vertex(g, u)?;
    check_vertex(g, w)?;
    if u == w || !g.has_edge(u, w) {
        Err(Error::MissingEdge(u, w))
    } else {
        Ok(())
    }
}

/// Join `g + h`: disjoint union plus all edges between the two vertex sets.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, w)| (u + ng, w + ng)));
    edges.extend((0..ng).flat_map(|u| (0..nh).map(move |w| (u, ng + w))));
    Graph::from_edges(ng + nh, edges)
}

/// Corona `g ∘ h`: one private copy of `h` per vertex of `g`, with vertex
/// `i` of `g` joined to all of copy `i`. Copy `i` occupies
/// `n_g + i*n_h ..`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let mut edges = g.edges();
    for i in 0..ng {
        let base = ng + i * nh;
        edges.extend(h.edges().into_iter().map(|(u, w)| (base + u, base + w)));
        edges.extend((0..nh).map(|w| (i, base + w)));
    }
    Graph::from_edges(ng + nh * ng, edges)
}

/// `G - v`: deletes `v` and all incident edges, compacting labels.
pub fn remove_vertex(g: &Graph, v: usize) -> Result<Graph> {
    check_vertex(g, v)?;
    let relabel = |x: usize| if x > v { x - 1 } else { x };
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(u, w)| u != v && w != v)
        .map(|(u, w)| (relabel(u), relabel(w)));
    Graph::from_edges(g.order() - 1, edges)
}

/// `G - e`: removes a single edge, keeping the vertex set.
pub fn remove_edge(g: &Graph, u: usize, w: usize) -> Result<Graph> {
    check_edge(g, u, w)?;
    let (a, b) = (u.min(w), u.max(w));
    let edges = g.edges().into_iter().filter(|&e| e != (a, b));
    Graph::from_edges(g.order(), edges)
}

/// `G / e`: merges the endpoints of `e` into one vertex adjacent to
/// `(N(u) ∪ N(w)) \ {u, w}`. Parallel edges collapse and no loop is kept.
/// The merged vertex takes `min(u, w)`'s slot.
pub fn contract_edge(g: &Graph, u: usize, w: usize) -> Result<Graph> {
    check_edge(g, u, w)?;
    let (keep, gone) = (u.min(w), u.max(w));
    let relabel = |x: usize| {
        let x = if x == gone { keep } else { x };
        if x > gone {
            x - 1
        } else {
            x
        }
    };
    let edges = g
        .edges()
        .into_iter()
        .filter(|&e| e != (keep, gone))
        .map(|(a, b)| (relabel(a), relabel(b)));
    Graph::from_edges(g.order() - 1, edges)
}

/// `G / v`: deletes `v` and puts a clique on its open neighborhood.
/// Neighbors that were already adjacent remain simply adjacent.
pub fn contract_vertex(g: &Graph, v: usize) -> Result<Graph> {
    check_vertex(g, v)?;
    let relabel = |x: usize| if x > v { x - 1 } else { x };
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, w)| u != v && w != v)
        .map(|(u, w)| (relabel(u), relabel(w)))
        .collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            edges.push((relabel(a), relabel(b)));
        }
    }
    Graph::from_edges(g.order() - 1, edges)
}

/// `G ⊙ v`: removes every edge between two neighbors of `v`; `v` itself and
/// its incident edges stay.
pub fn odot(g: &Graph, v: usize) -> Result<Graph> {
    check_vertex(g, v)?;
    let nbrs = g.neighbor_mask(v);
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(u, w)| !(nbrs & (1 << u) != 0 && nbrs & (1 << w) != 0));
    Graph::from_edges(g.order(), edges)
}

/// Open-neighborhood union of a vertex set given as a mask.
pub(crate) fn neighborhood_union(g: &Graph, set: u64) -> u64 {
    bits(set).fold(0, |acc, v| acc | g.neighbor_mask(v))
}
