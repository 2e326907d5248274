//! Text formats: edge lists, DIMACS `.col` input, and certificates.
//!
//! Edge-list format: first line `n m`, then `m` lines `u w` with 0-based
//! ids; blank lines and `#` comments are ignored. The writer emits edges
//! sorted lexicographically, so write→read round-trips byte-identically.
//!
//! DIMACS input: `p edge n m` then `e u v` lines with 1-based ids.
//!
//! Certificate format: a `k=<value>` line followed by one line per vertex,
//! `v color dominated_class`.

use crate::coloring::{Coloring, TDCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn significant_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_two(line: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad {what} line `{line}`")))?;
    let b = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad {what} line `{line}`")))?;
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens on {what} line `{line}`")));
    }
    Ok((a, b))
}

/// Parses the edge-list format.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = significant_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge-list input".into()))?;
    let (n, m) = parse_two(header, "header")?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_two(line, "edge")?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

/// Writes the edge-list format, edges sorted lexicographically.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, w) in g.edges() {
        out.push_str(&format!("{u} {w}\n"));
    }
    out
}

/// Parses DIMACS `.col`-style input (`p edge n m`, `e u v`, 1-based).
pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let mut it = rest.split_whitespace();
            let format = it.next().unwrap_or("");
            if format != "edge" && format != "edges" && format != "col" {
                return Err(Error::Parse(format!("unsupported DIMACS format `{format}`")));
            }
            let declared = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad problem line `{line}`")))?;
            n = Some(declared);
        } else if let Some(rest) = line.strip_prefix('e') {
            let (u, w) = parse_two(rest.trim(), "edge")?;
            if u == 0 || w == 0 {
                return Err(Error::Parse(
                    "DIMACS vertex ids are 1-based; got 0".into(),
                ));
            }
            edges.push((u - 1, w - 1));
        } else {
            return Err(Error::Parse(format!("unrecognized DIMACS line `{line}`")));
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing DIMACS problem line".into()))?;
    Graph::from_edges(n, edges)
}

/// Reads either supported graph format, sniffing DIMACS by its problem line.
pub fn read_graph_auto(text: &str) -> Result<Graph> {
    let dimacs = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("p ") || l.starts_with('c'));
    if dimacs {
        read_dimacs(text)
    } else {
        read_edge_list(text)
    }
}

/// Serializes a certificate: `k=<value>` then `v color dominated_class`.
pub fn write_certificate(cert: &TDCertificate) -> String {
    let mut out = format!("k={}\n", cert.coloring.k());
    for v in 0..cert.coloring.len() {
        out.push_str(&format!(
            "{v} {} {}\n",
            cert.coloring.color(v),
            cert.dominated_class[v]
        ));
    }
    out
}

/// Parses the certificate format. Structural validation against a graph is
/// a separate step ([`crate::coloring::validate_certificate`]).
pub fn read_certificate(text: &str) -> Result<TDCertificate> {
    let mut lines = significant_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty certificate input".into()))?;
    let k: u32 = header
        .strip_prefix("k=")
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `k=<value>`, got `{header}`")))?;
    let mut rows = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<u32> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad certificate line `{line}`")))
        };
        let v = parse(it.next())?;
        let color = parse(it.next())?;
        let dominated = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens on `{line}`")));
        }
        rows.push((v as usize, color, dominated));
    }
    let n = rows.len();
    let mut colors = vec![0u32; n];
    let mut dominated_class = vec![0u32; n];
    let mut seen = vec![false; n];
    for (v, color, dominated) in rows {
        if v >= n || seen[v] {
            return Err(Error::Parse(format!(
                "certificate rows must cover each vertex exactly once (vertex {v})"
            )));
        }
        seen[v] = true;
        colors[v] = color;
        dominated_class[v] = dominated;
    }
    let coloring = Coloring::new(colors)
        .map_err(|e| Error::Certificate(format!("invalid coloring in certificate: {e}")))?;
    if coloring.k() != k {
        return Err(Error::Certificate(format!(
            "header claims k={k} but coloring uses {} classes",
            coloring.k()
        )));
    }
    Ok(TDCertificate {
        coloring,
        dominated_class,
    })
}
