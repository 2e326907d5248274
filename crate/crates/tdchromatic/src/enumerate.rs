//! Exhaustive enumeration of small labeled connected graphs, plus seeded
//! random connected graphs for spot checks.
//!
//! Enumeration walks upper-triangle adjacency bitmasks in ascending order,
//! so the stream is deterministic and every labeled graph on `n` vertices
//! appears exactly once. The optional dedup stream keeps one representative
//! per isomorphism class by bucketing on cheap invariants and falling back
//! to the isomorphism test inside a bucket.

use std::collections::HashMap;

use rand::Rng;

use crate::analysis::is_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::is_isomorphic;

/// Hard cap on exhaustive enumeration order.
pub const ENUM_CAP: usize = 8;

/// Pairs `(u, w)` with `u < w` in the bit order used by the mask walk.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for w in u + 1..n {
            pairs.push((u, w));
        }
    }
    pairs
}

/// Builds the graph selected by an upper-triangle edge mask.
fn mask_to_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// Stream of every labeled connected graph on `n` vertices, ascending by
/// adjacency bitmask.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = mask_to_graph(self.n, &self.pairs, self.next_mask);
            self.next_mask += 1;
            if is_connected(&g) {
                return Some(g);
            }
        }
        None
    }
}

/// Enumerates every labeled connected graph on `n` vertices exactly once.
pub fn connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    if n == 0 || n > ENUM_CAP {
        return Err(Error::ResourceGuard {
            what: "enumeration",
            order: n,
            cap: ENUM_CAP,
        });
    }
    let pairs = pair_list(n);
    let end = 1u64 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next_mask: 0,
        end,
    })
}

/// Bucket key of cheap isomorphism invariants.
fn bucket_key(g: &Graph) -> (usize, Vec<usize>) {
    let mut degs = g.degrees();
    degs.sort_unstable();
    (g.edge_count(), degs)
}

/// Stream of one representative per isomorphism class of connected graphs
/// on `n` vertices, in enumeration order of the representatives.
pub struct ConnectedGraphsDedup {
    inner: ConnectedGraphs,
    seen: HashMap<(usize, Vec<usize>), Vec<Graph>>,
}

impl Iterator for ConnectedGraphsDedup {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        for g in self.inner.by_ref() {
            let bucket = self.seen.entry(bucket_key(&g)).or_default();
            if bucket.iter().any(|kept| is_isomorphic(kept, &g)) {
                continue;
            }
            bucket.push(g.clone());
            return Some(g);
        }
        None
    }
}

/// Dedup variant of [`connected_graphs`].
pub fn connected_graphs_dedup(n: usize) -> Result<ConnectedGraphsDedup> {
    Ok(ConnectedGraphsDedup {
        inner: connected_graphs(n)?,
        seen: HashMap::new(),
    })
}

/// Samples a random connected graph on `n >= 2` vertices by redrawing a
/// G(n, p) until it is connected. Deterministic for a fixed RNG state.
pub fn random_connected<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Result<Graph> {
    if n < 2 || n > Graph::MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "random connected graph needs order in 2..={}, got {n}",
            Graph::MAX_ORDER
        )));
    }
    let pairs = pair_list(n);
    loop {
        let edges = pairs.iter().copied().filter(|_| rng.random_bool(edge_prob));
        let g = Graph::from_edges(n, edges)?;
        if is_connected(&g) {
            return Ok(g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labeled_counts_match_known_values() {
        // Labeled connected graphs on 1..=6 vertices.
        let expected = [1u64, 1, 4, 38, 728, 26704];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let got = connected_graphs(n).unwrap().count() as u64;
            assert_eq!(got, want, "n={n}");
        }
    }

    #[test]
    fn n2_single_graph() {
        let graphs: Vec<Graph> = connected_graphs(2).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].edges(), vec![(0, 1)]);
    }

    #[test]
    fn dedup_counts_match_known_values() {
        // Connected graphs up to isomorphism on 1..=6 vertices.
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(connected_graphs_dedup(n).unwrap().count(), want, "n={n}");
        }
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            connected_graphs(9),
            Err(Error::ResourceGuard { .. })
        ));
    }

    #[test]
    fn random_connected_is_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let g1 = random_connected(8, 0.4, &mut a).unwrap();
        let g2 = random_connected(8, 0.4, &mut b).unwrap();
        assert_eq!(g1, g2);
        assert!(is_connected(&g1));
    }
}
