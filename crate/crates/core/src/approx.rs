//! Approximation pipeline for regular graphs, with exact rational bounds,
//! plus closed forms for complete graphs.
//!
//! For an r-regular graph the minimum color sum is at least nr(r+1)/4, with
//! equality exactly when an r-edge-coloring exists. Coloring with the fan
//! kernel and then applying the sequential swap lands within
//! nr(r²+4r+1)/(4(r+1)), a factor of at most 1 + 2r/(r+1)² above optimal.

use alloc::vec::Vec;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernels::{clique_factorization, vizing_color};
use crate::sequential::swap_to_sequential;

/// Exact rational used for bounds and ratios.
pub type Rational = num_rational::Ratio<i64>;

/// What the approximation pipeline produced for one regular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReport {
    /// Vertex count.
    pub n: usize,
    /// Common degree.
    pub r: usize,
    /// The constructed proper coloring, colors within `1..=r+1`.
    pub coloring: EdgeColoring,
    /// Sum of the constructed coloring.
    pub achieved_sum: u64,
    /// nr(r+1)/4, a floor under every proper coloring.
    pub lower_bound: Rational,
    /// nr(r²+4r+1)/(4(r+1)), a ceiling over the constructed coloring.
    pub formula_upper: Rational,
    /// 1 + 2r/(r+1)², the guaranteed worst-case factor over optimal.
    pub ratio_bound: Rational,
    /// The vertices made sequential by the swap, at least ⌈n/(r+1)⌉ of them.
    pub sequential_vertices: Vec<usize>,
}

impl ApproxReport {
    /// True for degrees 1 and 2, where the guarantee is loose and instances
    /// are easy to solve exactly anyway.
    pub fn small_r(&self) -> bool {
        self.r < 3
    }

    /// How many vertices the swap made sequential.
    pub fn sequential_set_size(&self) -> usize {
        self.sequential_vertices.len()
    }
}

/// nr(r+1)/4: no proper coloring of an r-regular graph on n vertices sums
/// below this, and it is met exactly when r colors suffice.
pub fn regular_lower_bound(n: usize, r: usize) -> Rational {
    Rational::new((n * r * (r + 1)) as i64, 4)
}

/// nr(r²+4r+1)/(4(r+1)): what the pipeline's coloring never exceeds.
pub fn formula_upper_bound(n: usize, r: usize) -> Rational {
    Rational::new((n * r * (r * r + 4 * r + 1)) as i64, (4 * (r + 1)) as i64)
}

/// 1 + 2r/(r+1)²: quotient of the two bounds above. Decreasing in r from
/// its maximum 11/8 at r = 3.
pub fn ratio_bound(r: usize) -> Rational {
    Rational::new((r * r + 4 * r + 1) as i64, ((r + 1) * (r + 1)) as i64)
}

/// Minimum color sum of the complete graph on n vertices:
/// n(n²-1)/4 for odd n, (n-1)n²/4 for even n.
pub fn kn_exact_sum(n: usize) -> u64 {
    let n = n as u64;
    if n % 2 == 1 {
        n * (n * n - 1) / 4
    } else {
        n.saturating_sub(1) * n * n / 4
    }
}

/// A coloring of `Graph::complete(n)` meeting [`kn_exact_sum`], using n-1
/// colors for even n and n colors for odd n. Errors when n < 2 leaves
/// nothing to color.
pub fn kn_optimal_coloring(n: usize) -> Result<EdgeColoring> {
    if n < 2 {
        return Err(Error::NoEdges);
    }
    Ok(clique_factorization(n, 0).coloring)
}

/// Runs the two-stage pipeline on an r-regular graph with r >= 1: fan-kernel
/// coloring into `1..=r+1`, then the sequential swap. The result is proper,
/// stays within the formula bound, and is optimal whenever it uses only r
/// colors.
pub fn approx_sum_regular(g: &Graph) -> Result<ApproxReport> {
    let r = g.regular_degree().ok_or(Error::NotRegular)?;
    if r == 0 {
        return Err(Error::NoEdges);
    }
    let first = vizing_color(g);
    let (coloring, sequential_vertices) = swap_to_sequential(g, &first)?;
    let n = g.vertex_count();
    Ok(ApproxReport {
        n,
        r,
        achieved_sum: coloring.sum(),
        coloring,
        lower_bound: regular_lower_bound(n, r),
        formula_upper: formula_upper_bound(n, r),
        ratio_bound: ratio_bound(r),
        sequential_vertices,
    })
}
