//! Reader and writer for the DIMACS .col subset: `c` comment lines, one
//! `p edge <n> <m>` header, and `e <u> <v>` edge lines with 1-based
//! vertices. The format carries no partition metadata.

use crate::{Error, Result};
use edgesum_core::Graph;

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Dimacs {
        line,
        message: message.into(),
    }
}

fn number(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| bad(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| bad(line, format!("{what} {tok:?} is not a number")))
}

/// Parses a DIMACS document. Indices are shifted to 0-based; the edge list
/// must match the header count exactly.
pub fn parse(input: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(bad(line, "second p line"));
                }
                match tok.next() {
                    Some("edge") => {}
                    other => return Err(bad(line, format!("expected \"edge\", got {other:?}"))),
                }
                let n = number(line, tok.next(), "vertex count")?;
                let m = number(line, tok.next(), "edge count")?;
                if tok.next().is_some() {
                    return Err(bad(line, "trailing tokens after p line"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| bad(line, "e line before p line"))?;
                let u = number(line, tok.next(), "endpoint")?;
                let v = number(line, tok.next(), "endpoint")?;
                if tok.next().is_some() {
                    return Err(bad(line, "trailing tokens after e line"));
                }
                if u == 0 || v == 0 {
                    return Err(bad(line, "vertices are 1-based"));
                }
                if u > n || v > n {
                    return Err(bad(line, format!("vertex beyond declared count {n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(bad(line, format!("unknown record {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| bad(0, "no p line"))?;
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            listed: edges.len(),
        });
    }
    Graph::new(n, &edges).map_err(Error::Core)
}

/// Renders a graph back into the same subset, endpoints 1-based, edges in
/// the graph's insertion order.
pub fn write(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
