//! Sequential colorings: proper colorings in which designated vertices see
//! exactly the colors `1..=degree`.
//!
//! A vertex with that property contributes the least any vertex of its
//! degree can. Two routes produce such vertices: a single color
//! transposition that works on any regular graph, and a peeling
//! construction for bipartite graphs whose chosen side dominates degrees
//! edge-wise.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{verify_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Side};
use crate::matching::regular_matchings;

/// For each color `i` in `1..=t`, the vertices at which `i` does not appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingColorTable {
    /// `sets[i - 1]` lists the vertices missing color `i`, ascending.
    pub sets: Vec<Vec<usize>>,
    /// The smallest color whose set is largest.
    pub chosen: u32,
}

impl MissingColorTable {
    /// The set for the chosen color.
    pub fn largest(&self) -> &[usize] {
        &self.sets[(self.chosen - 1) as usize]
    }
}

/// Tabulates, for every color in `1..=t`, which vertices miss it under `c`,
/// and picks the color with the biggest set (smallest color wins ties).
///
/// Fails if the coloring length does not match or any edge color exceeds `t`.
pub fn missing_sets(g: &Graph, c: &EdgeColoring, t: u32) -> Result<MissingColorTable> {
    if c.len() != g.edge_count() {
        return Err(Error::ColoringSizeMismatch { edges: g.edge_count(), colors: c.len() });
    }
    if let Some(e) = (0..c.len()).find(|&e| c.color(e) > t) {
        return Err(Error::ColorOutOfRange { edge: e, color: c.color(e), limit: t });
    }
    let n = g.vertex_count();
    let mut seen = vec![false; n * t as usize];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let col = (c.color(e) - 1) as usize;
        seen[u * t as usize + col] = true;
        seen[v * t as usize + col] = true;
    }
    let mut sets = vec![Vec::new(); t as usize];
    for v in 0..n {
        for i in 0..t as usize {
            if !seen[v * t as usize + i] {
                sets[i].push(v);
            }
        }
    }
    let best = sets
        .iter()
        .enumerate()
        .max_by_key(|(i, s)| (s.len(), usize::MAX - i))
        .map(|(i, _)| i as u32 + 1)
        .expect("t >= 1 yields at least one set");
    Ok(MissingColorTable { sets, chosen: best })
}

/// Upgrades a proper coloring of an r-regular graph that stays within
/// `1..=r+1` into one where a large vertex set is sequential.
///
/// Every vertex misses exactly one of the r+1 colors, so the sets of the
/// missing-color table partition the vertices and the biggest one holds at
/// least ⌈n/(r+1)⌉ vertices. Transposing its color with r+1 makes each of
/// its vertices see exactly `1..=r`. Returns the new coloring and that
/// vertex set; the sum never increases.
pub fn swap_to_sequential(g: &Graph, c: &EdgeColoring) -> Result<(EdgeColoring, Vec<usize>)> {
    let r = g.regular_degree().ok_or(Error::NotRegular)? as u32;
    let rep = verify_coloring(g, c)?;
    if let Some(&(first, second)) = rep.violations.first() {
        return Err(Error::ImproperColoring { first, second });
    }
    if let Some(e) = (0..c.len()).find(|&e| c.color(e) > r + 1) {
        return Err(Error::ColorOutOfRange { edge: e, color: c.color(e), limit: r + 1 });
    }
    let table = missing_sets(g, c, r + 1)?;
    let winners = table.largest().to_vec();
    let swapped = if table.chosen == r + 1 {
        c.clone()
    } else {
        c.transposed(table.chosen, r + 1)
    };
    Ok((swapped, winners))
}

/// Whether every vertex in `vertices` sees exactly the colors
/// `1..=degree(v)` under `c`.
pub fn is_sequential(g: &Graph, c: &EdgeColoring, vertices: &[usize]) -> Result<bool> {
    if c.len() != g.edge_count() {
        return Err(Error::ColoringSizeMismatch { edges: g.edge_count(), colors: c.len() });
    }
    for &v in vertices {
        let mut seen: Vec<u32> = g.neighbors(v).map(|(_, e)| c.color(e)).collect();
        seen.sort_unstable();
        let want: Vec<u32> = (1..=g.degree(v) as u32).collect();
        if seen != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Properly colors a bipartite graph with colors `1..=Δ` so that every
/// vertex of the chosen side is sequential. Requires degree dominance:
/// `d(u) >= d(w)` for every edge with `u` on the chosen side.
///
/// Works by peeling color classes from Δ downward. At level k, the edges
/// incident to chosen-side vertices of current degree k form a subgraph
/// whose degree-k vertices (on either side) all get matched by one
/// regularize-and-match round; those edges take color k. Dominance ensures
/// opposite-side degree-k vertices only neighbor chosen-side degree-k
/// vertices, so the level drops uniformly and the condition survives every
/// peel. The edge sum lands exactly on the sum of d(u)(d(u)+1)/2 over the
/// chosen side.
pub fn u_sequential_color(g: &Graph, bp: &Bipartition, side: Side) -> Result<EdgeColoring> {
    if bp.sides().len() != g.vertex_count() {
        return Err(Error::PartitionSizeMismatch {
            expected: g.vertex_count(),
            got: bp.sides().len(),
        });
    }
    let oriented: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            if bp.side(a) == side {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    for &(u, w) in &oriented {
        if bp.side(u) == bp.side(w) {
            return Err(Error::EdgeInsidePart { u: u.min(w), v: u.max(w) });
        }
        if g.degree(u) < g.degree(w) {
            return Err(Error::DominanceViolated { u, w });
        }
    }

    let n = g.vertex_count();
    let m = g.edge_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; m];
    let mut colors = vec![0u32; m];

    for k in (1..=g.max_degree()).rev() {
        // Chosen-side vertices sitting at the current level.
        let mut on_level = vec![false; n];
        let mut left = Vec::new();
        for v in 0..n {
            if bp.side(v) == side && deg[v] == k {
                on_level[v] = true;
                left.push(v);
            }
        }
        let mut left_index = vec![usize::MAX; n];
        for (i, &v) in left.iter().enumerate() {
            left_index[v] = i;
        }

        // Subgraph of live edges whose chosen endpoint is on the level.
        let mut right = Vec::new();
        let mut right_index = vec![usize::MAX; n];
        let mut pairs = Vec::new();
        let mut pair_ids = Vec::new();
        for (e, &(u, w)) in oriented.iter().enumerate() {
            if !alive[e] || !on_level[u] {
                continue;
            }
            if right_index[w] == usize::MAX {
                right_index[w] = right.len();
                right.push(w);
            }
            pairs.push((left_index[u], right_index[w]));
            pair_ids.push(e);
        }

        let size = left.len().max(right.len());
        let mut pair_edge = vec![vec![None; size]; size];
        for (&(l, r), &e) in pairs.iter().zip(pair_ids.iter()) {
            pair_edge[l][r] = Some(e);
        }
        let matching = regular_matchings(left.len(), right.len(), k, &pairs, 1)?;
        for &(l, r) in &matching[0] {
            let Some(e) = pair_edge.get(l).and_then(|row| row.get(r)).copied().flatten() else {
                continue;
            };
            let (u, w) = oriented[e];
            colors[e] = k as u32;
            alive[e] = false;
            deg[u] -= 1;
            deg[w] -= 1;
        }

        // Peel audit: the level must have dropped everywhere, and dominance
        // must survive on what remains.
        if left.iter().any(|&u| deg[u] != k - 1) {
            return Err(Error::Internal("level vertex left unmatched by the peel"));
        }
        if deg.iter().any(|&d| d > k - 1) {
            return Err(Error::Internal("peel left a vertex above the next level"));
        }
        for (e, &(u, w)) in oriented.iter().enumerate() {
            if alive[e] && deg[u] < deg[w] {
                return Err(Error::Internal("dominance lost during peel"));
            }
        }
    }

    if alive.iter().any(|&a| a) {
        return Err(Error::Internal("peeling finished with uncolored edges"));
    }
    EdgeColoring::new(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::vizing_color;

    fn c4_13() -> (Graph, EdgeColoring) {
        let g = Graph::cycle(4);
        let c = EdgeColoring::new(vec![1, 3, 1, 3]).unwrap();
        (g, c)
    }

    #[test]
    fn table_on_alternating_cycle() {
        let (g, c) = c4_13();
        let table = missing_sets(&g, &c, 3).unwrap();
        assert_eq!(table.sets, vec![vec![], vec![0, 1, 2, 3], vec![]]);
        assert_eq!(table.chosen, 2);
        assert_eq!(table.largest(), &[0, 1, 2, 3]);
    }

    #[test]
    fn table_rejects_colors_beyond_t() {
        let (g, c) = c4_13();
        assert_eq!(
            missing_sets(&g, &c, 2),
            Err(Error::ColorOutOfRange { edge: 1, color: 3, limit: 2 })
        );
    }

    #[test]
    fn table_ties_break_to_smaller_color() {
        // single edge, colored 1: colors 2 and 3 both missed everywhere
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let c = EdgeColoring::new(vec![1]).unwrap();
        let table = missing_sets(&g, &c, 3).unwrap();
        assert_eq!(table.chosen, 2);
    }

    #[test]
    fn swap_lowers_alternating_cycle() {
        let (g, c) = c4_13();
        assert_eq!(c.sum(), 8);
        let (swapped, winners) = swap_to_sequential(&g, &c).unwrap();
        assert_eq!(swapped.colors(), &[1, 2, 1, 2]);
        assert_eq!(swapped.sum(), 6);
        assert_eq!(winners, vec![0, 1, 2, 3]);
        assert!(is_sequential(&g, &swapped, &winners).unwrap());
    }

    #[test]
    fn swap_is_identity_when_top_color_dominates() {
        // C_4 colored 1,2,1,2: color 3 is missing everywhere already
        let g = Graph::cycle(4);
        let c = EdgeColoring::new(vec![1, 2, 1, 2]).unwrap();
        let (swapped, winners) = swap_to_sequential(&g, &c).unwrap();
        assert_eq!(swapped, c);
        assert_eq!(winners, vec![0, 1, 2, 3]);
    }

    #[test]
    fn swap_rejects_irregular_improper_and_overflow() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = EdgeColoring::new(vec![1, 2]).unwrap();
        assert_eq!(swap_to_sequential(&path, &c), Err(Error::NotRegular));

        let g = Graph::cycle(4);
        let clash = EdgeColoring::new(vec![1, 1, 1, 2]).unwrap();
        assert_eq!(
            swap_to_sequential(&g, &clash),
            Err(Error::ImproperColoring { first: 0, second: 1 })
        );

        let high = EdgeColoring::new(vec![1, 4, 1, 4]).unwrap();
        assert_eq!(
            swap_to_sequential(&g, &high),
            Err(Error::ColorOutOfRange { edge: 1, color: 4, limit: 3 })
        );
    }

    #[test]
    fn swap_guarantee_on_cubic_graphs() {
        for g in [Graph::complete(4), Graph::petersen(), k33().0] {
            let c = vizing_color(&g);
            let (swapped, winners) = swap_to_sequential(&g, &c).unwrap();
            let n = g.vertex_count();
            assert!(winners.len() >= n.div_ceil(4), "|R| = {} on n = {n}", winners.len());
            assert!(is_sequential(&g, &swapped, &winners).unwrap());
            let rep = verify_coloring(&g, &swapped).unwrap();
            assert!(rep.proper);
            assert!(rep.max_color <= 4);
            assert!(swapped.sum() <= c.sum());
        }
    }

    fn k33() -> (Graph, Bipartition) {
        let mut edges = Vec::new();
        for u in 0..3 {
            for w in 3..6 {
                edges.push((u, w));
            }
        }
        let g = Graph::new(6, &edges).unwrap();
        let bp = Bipartition::new(
            &g,
            vec![Side::U, Side::U, Side::U, Side::W, Side::W, Side::W],
        )
        .unwrap();
        (g, bp)
    }

    #[test]
    fn missing_sets_partition_regular_vertices() {
        let (g, _) = k33();
        let c = vizing_color(&g);
        let table = missing_sets(&g, &c, 4).unwrap();
        let total: usize = table.sets.iter().map(Vec::len).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn star_center_becomes_sequential() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let bp = Bipartition::new(&g, vec![Side::U, Side::W, Side::W, Side::W]).unwrap();
        let c = u_sequential_color(&g, &bp, Side::U).unwrap();
        assert_eq!(c.sum(), 6);
        assert!(is_sequential(&g, &c, &[0]).unwrap());
    }

    #[test]
    fn balanced_biregular_graph_is_fully_sequential() {
        let (g, bp) = k33();
        let c = u_sequential_color(&g, &bp, Side::U).unwrap();
        assert_eq!(c.sum(), 18);
        assert!(is_sequential(&g, &c, &[0, 1, 2, 3, 4, 5]).unwrap());
        assert!(verify_coloring(&g, &c).unwrap().proper);
    }

    #[test]
    fn uneven_side_degrees_still_peel() {
        // chosen side degrees {3, 1} on disjoint neighborhoods
        let g = Graph::new(6, &[(0, 2), (0, 3), (0, 4), (1, 5)]).unwrap();
        let bp = Bipartition::new(
            &g,
            vec![Side::U, Side::U, Side::W, Side::W, Side::W, Side::W],
        )
        .unwrap();
        let c = u_sequential_color(&g, &bp, Side::U).unwrap();
        assert_eq!(c.sum(), 7);
        assert_eq!(c.color(3), 1);
        assert!(is_sequential(&g, &c, &[0, 1]).unwrap());
    }

    #[test]
    fn dominance_violation_reports_witness() {
        // vertex 1 has degree 1 but its neighbor 2 has degree 2
        let g = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
        let bp = Bipartition::new(
            &g,
            vec![Side::U, Side::U, Side::W, Side::W, Side::W],
        )
        .unwrap();
        assert_eq!(
            u_sequential_color(&g, &bp, Side::U),
            Err(Error::DominanceViolated { u: 1, w: 2 })
        );
    }

    #[test]
    fn chosen_side_may_be_w() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let bp = Bipartition::new(&g, vec![Side::W, Side::U, Side::U, Side::U]).unwrap();
        let c = u_sequential_color(&g, &bp, Side::W).unwrap();
        assert_eq!(c.sum(), 6);
        assert!(is_sequential(&g, &c, &[0]).unwrap());
    }

    #[test]
    fn isolated_vertices_and_empty_graphs_are_fine() {
        let g = Graph::new(3, &[]).unwrap();
        let bp = Bipartition::new(&g, vec![Side::U, Side::W, Side::U]).unwrap();
        let c = u_sequential_color(&g, &bp, Side::U).unwrap();
        assert!(c.is_empty());
    }
}
