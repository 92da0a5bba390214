//! Edge colorings and their verification.
//!
//! Colors are positive integers keyed by edge index. The zero value is
//! reserved inside construction routines for "not yet colored" and never
//! escapes into an [`EdgeColoring`].

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An assignment of a positive color to every edge of some graph, in edge
/// index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// Wraps a color vector, rejecting any zero entry. Length is checked
    /// against a graph only at verification time.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(e) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ColorOutOfRange { edge: e, color: 0, limit: u32::MAX });
        }
        Ok(EdgeColoring { colors })
    }

    /// Color of edge `e`.
    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    /// All colors in edge index order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Number of colored edges.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    /// Whether the coloring covers no edges.
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Sum of all edge colors.
    pub fn sum(&self) -> u64 {
        self.colors.iter().map(|&c| u64::from(c)).sum()
    }

    /// Largest color used, 0 for an empty coloring.
    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// The same coloring with every color raised by `k`. The sum grows by
    /// `k` times the edge count and properness is preserved.
    pub fn shifted(&self, k: u32) -> EdgeColoring {
        EdgeColoring {
            colors: self.colors.iter().map(|&c| c.checked_add(k).expect("color overflow")).collect(),
        }
    }

    /// The same coloring with colors `a` and `b` exchanged everywhere.
    /// Properness is preserved; the sum changes by `(b - a)` per moved edge.
    pub fn transposed(&self, a: u32, b: u32) -> EdgeColoring {
        EdgeColoring {
            colors: self
                .colors
                .iter()
                .map(|&c| {
                    if c == a {
                        b
                    } else if c == b {
                        a
                    } else {
                        c
                    }
                })
                .collect(),
        }
    }
}

/// Outcome of checking a coloring against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// True when no two adjacent edges share a color.
    pub proper: bool,
    /// Sum of all edge colors.
    pub sum: u64,
    /// Largest color used, 0 when there are no edges.
    pub max_color: u32,
    /// Every pair of adjacent edges sharing a color, smaller index first,
    /// ascending; empty iff `proper`.
    pub violations: Vec<(usize, usize)>,
    /// Colors seen at each vertex, ascending, duplicates removed.
    pub vertex_colors: Vec<Vec<u32>>,
}

/// Checks `c` against `g`: properness, color sum, maximum color, and the
/// colors incident to each vertex. The only error is a length mismatch;
/// an improper coloring yields `proper: false` plus its violation list.
pub fn verify_coloring(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    if c.len() != g.edge_count() {
        return Err(Error::ColoringSizeMismatch { edges: g.edge_count(), colors: c.len() });
    }
    let mut violations = Vec::new();
    let mut vertex_colors = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let mut incident: Vec<(u32, usize)> = g.neighbors(v).map(|(_, e)| (c.color(e), e)).collect();
        incident.sort_unstable();
        let mut start = 0;
        while start < incident.len() {
            let mut end = start + 1;
            while end < incident.len() && incident[end].0 == incident[start].0 {
                end += 1;
            }
            for i in start..end {
                for j in i + 1..end {
                    violations.push((incident[i].1, incident[j].1));
                }
            }
            start = end;
        }
        let mut seen: Vec<u32> = incident.iter().map(|&(col, _)| col).collect();
        seen.dedup();
        vertex_colors.push(seen);
    }
    violations.sort_unstable();
    violations.dedup();
    Ok(VerificationReport {
        proper: violations.is_empty(),
        sum: c.sum(),
        max_color: c.max_color(),
        violations,
        vertex_colors,
    })
}
