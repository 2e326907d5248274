//! Graph isomorphism by pruned backtracking.
//!
//! Intended for the small orders this crate works at (≤ 12 or so). Vertices
//! are matched in a fixed order; candidates must agree on degree and on the
//! multiset of neighbor degrees, which collapses the search space for
//! everything the harness produces.

use crate::graph::Graph;

/// Per-vertex invariant: degree plus sorted neighbor degrees.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// True iff an adjacency-preserving bijection between `g` and `h` exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    {
        let mut a = sig_g.clone();
        let mut b = sig_h.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }

    // Match the most constrained vertices first: rarest signature, then
    // highest degree.
    let mut order: Vec<usize> = (0..n).collect();
    let rarity = |v: usize| sig_g.iter().filter(|s| **s == sig_g[v]).count();
    order.sort_by_key(|&v| (rarity(v), usize::MAX - sig_g[v].0, v));

    let mut mapping = vec![usize::MAX; n]; // g vertex -> h vertex
    let mut used = vec![false; n];
    backtrack(g, h, &sig_g, &sig_h, &order, 0, &mut mapping, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g: &Graph,
    h: &Graph,
    sig_g: &[(usize, Vec<usize>)],
    sig_h: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for cand in 0..h.order() {
        if used[cand] || sig_h[cand] != sig_g[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| g.has_edge(v, p) == h.has_edge(cand, mapping[p]));
        if !consistent {
            continue;
        }
        mapping[v] = cand;
        used[cand] = true;
        if backtrack(g, h, sig_g, sig_h, order, depth + 1, mapping, used) {
            return true;
        }
        used[cand] = false;
        mapping[v] = usize::MAX;
    }
    false
}
