//! Canonical constructors for the graph families used throughout the crate.
//!
//! Every family has a fixed, documented labeling so constructions are
//! byte-stable across runs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops;

/// A named graph family together with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n >= 1` vertices, edges `i - i+1`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Complete bipartite graph; left side `0..m`, right side `m..m+n`.
    CompleteBipartite(usize, usize),
    /// Star with `n >= 1` leaves: center `0`, leaves `1..=n`.
    Star(usize),
    /// `P_n ∘ K_1` for `n >= 2`: path `0..n`, leaf of path vertex `i` is `n+i`.
    CoronaPathK1(usize),
    /// `C_n ∘ K_1` for `n >= 3`, labeled like [`FamilySpec::CoronaPathK1`].
    CoronaCycleK1(usize),
    /// The arbitrarily-large-gap construction for `n >= 2`: a path
    /// `0..n`, one pendant leaf `n+i` per path vertex `i`, and an apex
    /// vertex `2n` adjacent to every leaf. Deleting the apex yields
    /// `P_n ∘ K_1`.
    Theorem25Gadget(usize),
}

impl FamilySpec {
    /// Checks the family's minimum-order constraint.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let ok = match *self {
            Path(n) => n >= 1,
            Cycle(n) => n >= 3,
            Complete(n) => n >= 1,
            CompleteBipartite(m, n) => m >= 1 && n >= 1,
            Star(leaves) => leaves >= 1,
            CoronaPathK1(n) => n >= 2,
            CoronaCycleK1(n) => n >= 3,
            Theorem25Gadget(n) => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{self} is below the family's minimum order"
            )))
        }
    }

    /// Parses CLI specs such as `path:9`, `cbip:2,4`, `gadget:5`.
    pub fn parse(s: &str) -> Result<Self> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family spec `{s}` missing `kind:params`")))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad family parameter `{p}`")))
            })
            .collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "family `{kind}` takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match kind {
            "path" => {
                want(1)?;
                FamilySpec::Path(nums[0])
            }
            "cycle" => {
                want(1)?;
                FamilySpec::Cycle(nums[0])
            }
            "complete" => {
                want(1)?;
                FamilySpec::Complete(nums[0])
            }
            "cbip" => {
                want(2)?;
                FamilySpec::CompleteBipartite(nums[0], nums[1])
            }
            "star" => {
                want(1)?;
                FamilySpec::Star(nums[0])
            }
            "corona-path" => {
                want(1)?;
                FamilySpec::CoronaPathK1(nums[0])
            }
            "corona-cycle" => {
                want(1)?;
                FamilySpec::CoronaCycleK1(nums[0])
            }
            "gadget" => {
                want(1)?;
                FamilySpec::Theorem25Gadget(nums[0])
            }
            _ => return Err(Error::Parse(format!("unknown family kind `{kind}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use FamilySpec::*;
        match *self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteBipartite(m, n) => write!(f, "cbip:{m},{n}"),
            Star(n) => write!(f, "star:{n}"),
            CoronaPathK1(n) => write!(f, "corona-path:{n}"),
            CoronaCycleK1(n) => write!(f, "corona-cycle:{n}"),
            Theorem25Gadget(n) => write!(f, "gadget:{n}"),
        }
    }
}

/// Index of the apex vertex in `Theorem25Gadget(n)`.
pub fn gadget_apex(n: usize) -> usize {
    2 * n
}

/// Builds the canonical labeled graph of a family.
pub fn build_family(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    match spec {
        Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Cycle(n) => {
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, edges)
        }
        Complete(n) => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))))
        }
        CompleteBipartite(m, n) => Graph::from_edges(
            m + n,
            (0..m).flat_map(move |u| (m..m + n).map(move |w| (u, w))),
        ),
        Star(leaves) => Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))),
        CoronaPathK1(n) => {
            let path = build_family(Path(n))?;
            let k1 = build_family(Complete(1))?;
            ops::corona(&path, &k1)
        }
        CoronaCycleK1(n) => {
            let cycle = build_family(Cycle(n))?;
            let k1 = build_family(Complete(1))?;
            ops::corona(&cycle, &k1)
        }
        Theorem25Gadget(n) => {
            let apex = gadget_apex(n);
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            for i in 0..n {
                edges.push((i, n + i)); // pendant leaf
                edges.push((n + i, apex)); // apex to leaf
            }
            Graph::from_edges(2 * n + 1, edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;
    use crate::ops;

    #[test]
    fn path_4() {
        let g = build_family(FamilySpec::Path(4)).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn gadget_3_structure() {
        // Construction rule: n-1 path edges + n pendants + n apex edges.
        let n = 3;
        let g = build_family(FamilySpec::Theorem25Gadget(n)).unwrap();
        assert_eq!(g.order(), 2 * n + 1);
        assert_eq!(g.edge_count(), (n - 1) + n + n);
        // Deleting the apex leaves P3 ∘ K1.
        let no_apex = ops::remove_vertex(&g, gadget_apex(n)).unwrap();
        let corona = build_family(FamilySpec::CoronaPathK1(n)).unwrap();
        assert!(is_isomorphic(&no_apex, &corona));
    }

    #[test]
    fn gadget_apex_removal_is_corona_for_range() {
        for n in 2..=6 {
            let g = build_family(FamilySpec::Theorem25Gadget(n)).unwrap();
            let no_apex = ops::remove_vertex(&g, gadget_apex(n)).unwrap();
            let corona = build_family(FamilySpec::CoronaPathK1(n)).unwrap();
            assert!(is_isomorphic(&no_apex, &corona), "n={n}");
        }
    }

    #[test]
    fn corona_path_k1_3() {
        let g = build_family(FamilySpec::CoronaPathK1(3)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn undersized_families_rejected() {
        assert!(build_family(FamilySpec::Cycle(2)).is_err());
        assert!(build_family(FamilySpec::CoronaPathK1(1)).is_err());
        assert!(build_family(FamilySpec::Theorem25Gadget(1)).is_err());
        assert!(build_family(FamilySpec::Star(0)).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["path:9", "cbip:2,4", "gadget:5", "corona-cycle:4"] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!(FamilySpec::parse("wheel:5").is_err());
        assert!(FamilySpec::parse("path:0").is_err());
    }
}
