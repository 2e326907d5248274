//! Colorings, total dominator certificates, and their predicate checkers.
//!
//! A coloring maps every vertex to a color in `1..=k` with every color used.
//! A total dominator coloring additionally requires each vertex to be
//! adjacent to *every* vertex of some color class; the certificate records
//! one such class per vertex so a third party can re-check the claim
//! without re-running any search.

use crate::analysis::has_isolated_vertex;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A surjective vertex coloring with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Validates that colors form `1..=k` with no unused color.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::ColoringMismatch("empty coloring".into()));
        }
        let k = *colors.iter().max().unwrap();
        if k == 0 {
            return Err(Error::ColoringMismatch("colors must start at 1".into()));
        }
        let mut used = vec![false; k as usize + 1];
        for &c in &colors {
            if c == 0 || c > k {
                return Err(Error::ColoringMismatch(format!(
                    "color {c} outside 1..={k}"
                )));
            }
            used[c as usize] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c as usize]) {
            return Err(Error::ColoringMismatch(format!(
                "color {missing} unused; classes must be 1..=k"
            )));
        }
        Ok(Coloring { colors, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Membership mask per class, indexed `0..k` (class `c` at `c-1`).
    pub fn class_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.k as usize];
        for (v, &c) in self.colors.iter().enumerate() {
            masks[c as usize - 1] |= 1 << v;
        }
        masks
    }
}

fn check_cover(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::ColoringMismatch(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.order()
        )));
    }
    Ok(())
}

/// True iff no edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_cover(g, c)?;
    Ok(g
        .edges()
        .into_iter()
        .all(|(u, w)| c.color(u) != c.color(w)))
}

/// A coloring together with, per vertex, a color class it totally
/// dominates. Independently re-checkable against the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDCertificate {
    pub coloring: Coloring,
    /// `dominated_class[v]` is a class id whose every member is adjacent
    /// to `v`.
    pub dominated_class: Vec<u32>,
}

/// Checks whether `c` is a total dominator coloring of `g`. Returns a
/// certificate picking, for each vertex, the smallest class id it totally
/// dominates; `None` when some vertex dominates no class.
///
/// Errors when `g` has an isolated vertex (the notion is undefined then)
/// or when the coloring does not cover the vertex set.
pub fn is_td_coloring(g: &Graph, c: &Coloring) -> Result<Option<TDCertificate>> {
    check_cover(g, c)?;
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    if !is_proper(g, c)? {
        return Ok(None);
    }
    let masks = c.class_masks();
    let mut dominated = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let nbrs = g.neighbor_mask(v);
        let found = masks
            .iter()
            .enumerate()
            .find(|(_, &m)| m != 0 && m & !nbrs == 0)
            .map(|(i, _)| i as u32 + 1);
        match found {
            Some(class) => dominated.push(class),
            None => return Ok(None),
        }
    }
    Ok(Some(TDCertificate {
        coloring: c.clone(),
        dominated_class: dominated,
    }))
}

/// Re-validates a full certificate against a graph, with a precise reason
/// on rejection. Unlike [`is_td_coloring`] this checks the *claimed*
/// dominated classes, so it also accepts certificates that do not pick the
/// smallest qualifying class.
pub fn validate_certificate(g: &Graph, cert: &TDCertificate) -> Result<()> {
    let c = &cert.coloring;
    check_cover(g, c)?;
    if has_isolated_vertex(g) {
        return Err(Error::Certificate(
            "graph has an isolated vertex; no TD-coloring exists".into(),
        ));
    }
    if cert.dominated_class.len() != g.order() {
        return Err(Error::Certificate(format!(
            "certificate lists {} dominated classes for {} vertices",
            cert.dominated_class.len(),
            g.order()
        )));
    }
    for (u, w) in g.edges() {
        if c.color(u) == c.color(w) {
            return Err(Error::Certificate(format!(
                "edge {u}-{w} is monochromatic (color {})",
                c.color(u)
            )));
        }
    }
    let masks = c.class_masks();
    for v in 0..g.order() {
        let class = cert.dominated_class[v];
        if class == 0 || class > c.k() {
            return Err(Error::Certificate(format!(
                "vertex {v} claims class {class}, outside 1..={}",
                c.k()
            )));
        }
        let members = masks[class as usize - 1];
        if members == 0 {
            return Err(Error::Certificate(format!(
                "vertex {v} claims empty class {class}"
            )));
        }
        let non_neighbors = members & !g.neighbor_mask(v);
        if non_neighbors != 0 {
            let witness = non_neighbors.trailing_zeros();
            return Err(Error::Certificate(format!(
                "vertex {v} does not dominate class {class}: member {witness} is not adjacent"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    fn coloring(v: &[u32]) -> Coloring {
        Coloring::new(v.to_vec()).unwrap()
    }

    #[test]
    fn proper_examples() {
        let c4 = build_family(FamilySpec::Cycle(4)).unwrap();
        assert!(is_proper(&c4, &coloring(&[1, 2, 1, 2])).unwrap());

        let k3 = build_family(FamilySpec::Complete(3)).unwrap();
        assert!(!is_proper(&k3, &coloring(&[1, 1, 2])).unwrap());

        let p4 = build_family(FamilySpec::Path(4)).unwrap();
        assert!(is_proper(&p4, &coloring(&[1, 2, 3, 1])).unwrap());
    }

    #[test]
    fn surjectivity_enforced() {
        assert!(Coloring::new(vec![1, 3]).is_err());
        assert!(Coloring::new(vec![0, 1]).is_err());
        assert!(Coloring::new(vec![]).is_err());
    }

    #[test]
    fn td_c4_two_classes() {
        let c4 = build_family(FamilySpec::Cycle(4)).unwrap();
        let cert = is_td_coloring(&c4, &coloring(&[1, 2, 1, 2]))
            .unwrap()
            .expect("C4 alternating 2-coloring is a TD-coloring");
        validate_certificate(&c4, &cert).unwrap();
    }

    #[test]
    fn td_p4_three_classes() {
        let p4 = build_family(FamilySpec::Path(4)).unwrap();
        let cert = is_td_coloring(&p4, &coloring(&[1, 2, 3, 1]))
            .unwrap()
            .expect("valid TD-coloring");
        assert_eq!(cert.dominated_class, vec![2, 3, 2, 3]);
    }

    #[test]
    fn td_p4_two_classes_fails() {
        let p4 = build_family(FamilySpec::Path(4)).unwrap();
        assert!(is_td_coloring(&p4, &coloring(&[1, 2, 1, 2]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn isolated_vertex_is_an_error() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            is_td_coloring(&g, &coloring(&[1, 2, 1])),
            Err(Error::IsolatedVertex(2))
        ));
    }

    #[test]
    fn validate_rejects_corruption() {
        let c4 = build_family(FamilySpec::Cycle(4)).unwrap();
        let cert = is_td_coloring(&c4, &coloring(&[1, 2, 1, 2]))
            .unwrap()
            .unwrap();

        let mut bad = cert.clone();
        bad.dominated_class[0] = 1; // vertex 0 is in class 1 itself
        assert!(validate_certificate(&c4, &bad).is_err());

        let mut bad = cert;
        bad.coloring = coloring(&[1, 2, 2, 2]);
        assert!(validate_certificate(&c4, &bad).is_err());
    }
}
