//! Baseline proper edge colorings: a fan-rotation kernel that colors any
//! simple graph with at most Δ+1 colors, a matching-based kernel that colors
//! bipartite graphs with exactly Δ colors, and a rotational one-factorization
//! of complete graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{complete_edge_index, Bipartition, Graph};
use crate::matching::regular_matchings;

/// Working state for the fan-rotation kernel: for every vertex, which edge
/// currently holds each color. Colors range over `1..=palette`.
struct FanState {
    palette: u32,
    colors: Vec<u32>,
    holder: Vec<Vec<Option<usize>>>,
}

impl FanState {
    fn new(g: &Graph) -> Self {
        let palette = g.max_degree() as u32 + 1;
        FanState {
            palette,
            colors: vec![0; g.edge_count()],
            holder: vec![vec![None; palette as usize]; g.vertex_count()],
        }
    }

    fn free_at(&self, v: usize, c: u32) -> bool {
        self.holder[v][(c - 1) as usize].is_none()
    }

    fn smallest_free(&self, v: usize) -> u32 {
        (1..=self.palette)
            .find(|&c| self.free_at(v, c))
            .expect("a vertex of degree d has a free color among d+1")
    }

    fn smallest_common_free(&self, u: usize, v: usize) -> Option<u32> {
        (1..=self.palette).find(|&c| self.free_at(u, c) && self.free_at(v, c))
    }

    fn assign(&mut self, g: &Graph, e: usize, c: u32) {
        let (u, v) = g.endpoints(e);
        let old = self.colors[e];
        if old != 0 {
            self.holder[u][(old - 1) as usize] = None;
            self.holder[v][(old - 1) as usize] = None;
        }
        self.colors[e] = c;
        if c != 0 {
            debug_assert!(self.holder[u][(c - 1) as usize].is_none());
            debug_assert!(self.holder[v][(c - 1) as usize].is_none());
            self.holder[u][(c - 1) as usize] = Some(e);
            self.holder[v][(c - 1) as usize] = Some(e);
        }
    }

    /// The maximal alternating path from `v` whose first edge has color `a`,
    /// then `b`, then `a` again, and so on.
    fn alternating_path(&self, g: &Graph, v: usize, a: u32, b: u32) -> Vec<usize> {
        let mut path = Vec::new();
        let (mut cur, mut want) = (v, a);
        while let Some(e) = self.holder[cur][(want - 1) as usize] {
            path.push(e);
            let (x, y) = g.endpoints(e);
            cur = if x == cur { y } else { x };
            want = if want == a { b } else { a };
        }
        path
    }
}

/// Properly colors any simple graph with colors from `1..=Δ+1`.
///
/// This is the classic fan construction: for each uncolored edge (u, v),
/// build a maximal fan of u starting at v, flip one alternating path, rotate
/// a fan prefix, and drop in a freed color. One shortcut keeps sums small:
/// when some color is already free at both endpoints, the smallest such
/// color is taken directly. Runs in O(mn) and never fails.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let mut st = FanState::new(g);
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if let Some(c) = st.smallest_common_free(u, v) {
            st.assign(g, e, c);
            continue;
        }

        // Maximal fan of u starting at v: each next fan edge's color is free
        // at the previous fan vertex.
        let mut fan = vec![v];
        let mut in_fan = vec![false; g.vertex_count()];
        in_fan[v] = true;
        loop {
            let tail = *fan.last().expect("fan never empties");
            let next = g.neighbors(u).find(|&(x, ex)| {
                !in_fan[x] && st.colors[ex] != 0 && st.free_at(tail, st.colors[ex])
            });
            match next {
                Some((x, _)) => {
                    in_fan[x] = true;
                    fan.push(x);
                }
                None => break,
            }
        }

        let c = st.smallest_free(u);
        let d = st.smallest_free(*fan.last().expect("fan never empties"));
        if c != d {
            // Flip the maximal path from u alternating d, c, d, ...; once
            // flipped, d is free at u. Clear the whole path before writing
            // the swapped colors: mid-flip, an edge's new color is still
            // held by its successor.
            let path = st.alternating_path(g, u, d, c);
            let flips: Vec<(usize, u32)> = path
                .iter()
                .map(|&pe| (pe, if st.colors[pe] == c { d } else { c }))
                .collect();
            for &(pe, _) in &flips {
                st.assign(g, pe, 0);
            }
            for &(pe, flipped) in &flips {
                st.assign(g, pe, flipped);
            }
        }

        // First fan vertex with d free, scanning only while the prefix is
        // still a fan under the flipped colors.
        let mut w = None;
        for (i, &x) in fan.iter().enumerate() {
            if i > 0 {
                let ex = g.edge_between(u, fan[i]).expect("fan vertices neighbor u");
                if st.colors[ex] == 0 || !st.free_at(fan[i - 1], st.colors[ex]) {
                    break;
                }
            }
            if st.free_at(x, d) {
                w = Some(i);
                break;
            }
        }
        let w = w.expect("some fan prefix ends at a vertex missing d");

        // Rotate: every fan edge before w takes its successor's color.
        for i in 0..w {
            let here = g.edge_between(u, fan[i]).expect("fan vertices neighbor u");
            let ahead = g.edge_between(u, fan[i + 1]).expect("fan vertices neighbor u");
            let moved = st.colors[ahead];
            st.assign(g, ahead, 0);
            st.assign(g, here, moved);
        }
        let last = g.edge_between(u, fan[w]).expect("fan vertices neighbor u");
        st.assign(g, last, d);
    }
    EdgeColoring::new(st.colors).expect("every edge was assigned a positive color")
}

/// Properly colors a bipartite graph with colors from `1..=Δ` exactly.
///
/// The graph is padded to a Δ-regular bipartite multigraph and split into Δ
/// perfect matchings, one per color. Matchings holding more real edges take
/// smaller colors, and each real edge takes the smallest color among the
/// matchings covering its vertex pair.
pub fn koenig_color(g: &Graph, bp: &Bipartition) -> Result<EdgeColoring> {
    check_bipartition(g, bp)?;
    let delta = g.max_degree();
    if delta == 0 {
        return EdgeColoring::new(Vec::new());
    }

    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut side_index = vec![usize::MAX; g.vertex_count()];
    for (v, slot) in side_index.iter_mut().enumerate() {
        match bp.side(v) {
            crate::graph::Side::U => {
                *slot = left.len();
                left.push(v);
            }
            crate::graph::Side::W => {
                *slot = right.len();
                right.push(v);
            }
        }
    }

    let size = left.len().max(right.len());
    let mut pair_edge = vec![vec![None; size]; size];
    let mut pairs = Vec::with_capacity(g.edge_count());
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let (u, w) = match bp.side(a) {
            crate::graph::Side::U => (a, b),
            crate::graph::Side::W => (b, a),
        };
        let (l, r) = (side_index[u], side_index[w]);
        pair_edge[l][r] = Some(e);
        pairs.push((l, r));
    }

    let rounds = regular_matchings(left.len(), right.len(), delta, &pairs, delta)?;

    // Bigger real classes get smaller colors; ties keep extraction order.
    let mut order: Vec<usize> = (0..rounds.len()).collect();
    let real_count = |round: &[(usize, usize)]| {
        round.iter().filter(|&&(l, r)| pair_edge[l][r].is_some()).count()
    };
    let counts: Vec<usize> = rounds.iter().map(|m| real_count(m)).collect();
    order.sort_by_key(|&t| (usize::MAX - counts[t], t));
    let mut color_of_round = vec![0u32; rounds.len()];
    for (rank, &t) in order.iter().enumerate() {
        color_of_round[t] = rank as u32 + 1;
    }

    // A pair backed by filler multiplicity shows up in several matchings;
    // its real edge takes the cheapest of those colors.
    let mut colors = vec![0u32; g.edge_count()];
    for (t, matching) in rounds.iter().enumerate() {
        for &(l, r) in matching {
            if let Some(e) = pair_edge[l][r] {
                if colors[e] == 0 || color_of_round[t] < colors[e] {
                    colors[e] = color_of_round[t];
                }
            }
        }
    }
    if colors.contains(&0) {
        return Err(Error::Internal("matching rounds missed a real edge"));
    }
    EdgeColoring::new(colors)
}

fn check_bipartition(g: &Graph, bp: &Bipartition) -> Result<()> {
    if bp.sides().len() != g.vertex_count() {
        return Err(Error::PartitionSizeMismatch {
            expected: g.vertex_count(),
            got: bp.sides().len(),
        });
    }
    for &(u, v) in g.edges() {
        if bp.side(u) == bp.side(v) {
            return Err(Error::EdgeInsidePart { u, v });
        }
    }
    Ok(())
}

/// A one-factorization of the complete graph, with colors displaced by a
/// fixed offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueColoring {
    /// Colors for the edges of `Graph::complete(n)`, in that edge order.
    pub coloring: EdgeColoring,
    /// For odd `n`: the one color in `offset+1 ..= offset+n` that vertex `v`
    /// does not see, namely `offset + v + 1`. `None` for even `n`.
    pub missing_colors: Option<Vec<u32>>,
}

/// Optimally colors the complete graph on `n` vertices with colors starting
/// just above `offset`.
///
/// Even `n`: n-1 perfect matchings on colors `offset+1 ..= offset+n-1`, via
/// the rotation with vertex n-1 held fixed; every vertex sees every color.
/// Odd `n`: n near-perfect matchings on colors `offset+1 ..= offset+n`; the
/// class of color `offset+1+j` pairs the vertices with `a + b = 2j (mod n)`
/// and leaves exactly vertex `j` out, so the missing colors are pairwise
/// distinct across vertices.
pub fn clique_factorization(n: usize, offset: u32) -> CliqueColoring {
    let mut colors = vec![0u32; n * n.saturating_sub(1) / 2];
    let mut paint = |a: usize, b: usize, c: u32| {
        colors[complete_edge_index(n, a.min(b), a.max(b))] = c;
    };
    if n % 2 == 0 {
        for j in 0..n.saturating_sub(1) {
            let c = offset + 1 + j as u32;
            paint(n - 1, j, c);
            for i in 1..=(n - 2) / 2 {
                paint((j + i) % (n - 1), (j + n - 1 - i) % (n - 1), c);
            }
        }
        CliqueColoring {
            coloring: EdgeColoring::new(colors).expect("rotation covers every edge"),
            missing_colors: None,
        }
    } else {
        for j in 0..n {
            let c = offset + 1 + j as u32;
            for i in 1..=(n - 1) / 2 {
                paint((j + i) % n, (j + n - i) % n, c);
            }
        }
        CliqueColoring {
            coloring: EdgeColoring::new(colors).expect("rotation covers every edge"),
            missing_colors: Some((0..n).map(|v| offset + 1 + v as u32).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::graph::Side;

    fn assert_proper_within(g: &Graph, c: &EdgeColoring, limit: u32) {
        let rep = verify_coloring(g, c).unwrap();
        assert!(rep.proper, "violations: {:?}", rep.violations);
        assert!(rep.max_color <= limit, "used {} > {}", rep.max_color, limit);
    }

    #[test]
    fn fan_kernel_stays_within_delta_plus_one() {
        for g in [
            Graph::new(2, &[(0, 1)]).unwrap(),
            Graph::cycle(5),
            Graph::complete(4),
            Graph::complete(7),
            Graph::petersen(),
            Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap(),
        ] {
            let c = vizing_color(&g);
            assert_proper_within(&g, &c, g.max_degree() as u32 + 1);
        }
    }

    #[test]
    fn fan_kernel_single_edge_uses_color_one() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(vizing_color(&g).colors(), &[1]);
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
    fn bipartite_kernel_uses_exactly_delta() {
        let (g, bp) = k33();
        let c = koenig_color(&g, &bp).unwrap();
        assert_proper_within(&g, &c, 3);
        let rep = verify_coloring(&g, &c).unwrap();
        // 3-regular, so each vertex sees all of 1..=3
        assert!(rep.vertex_colors.iter().all(|s| s == &[1, 2, 3]));
    }

    #[test]
    fn bipartite_kernel_star_center_sees_full_range() {
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let bp = Bipartition::new(
            &g,
            vec![Side::U, Side::W, Side::W, Side::W, Side::W, Side::W],
        )
        .unwrap();
        let c = koenig_color(&g, &bp).unwrap();
        let rep = verify_coloring(&g, &c).unwrap();
        assert!(rep.proper);
        assert_eq!(rep.vertex_colors[0], vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn bipartite_kernel_rejects_in_side_edges() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let other = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let bp = Bipartition::new(&other, vec![Side::U, Side::W, Side::W]).unwrap();
        assert_eq!(koenig_color(&g, &bp), Err(Error::EdgeInsidePart { u: 1, v: 2 }));
    }

    #[test]
    fn triangle_factorization_misses_one_color_per_vertex() {
        let cf = clique_factorization(3, 0);
        assert_eq!(cf.coloring.colors(), &[3, 2, 1]);
        assert_eq!(cf.missing_colors, Some(vec![1, 2, 3]));
    }

    #[test]
    fn factorizations_are_proper_and_tight() {
        for n in 2..=9usize {
            for offset in [0u32, 4] {
                let g = Graph::complete(n);
                let cf = clique_factorization(n, offset);
                let rep = verify_coloring(&g, &cf.coloring).unwrap();
                assert!(rep.proper, "n={n} offset={offset}");
                let span = if n % 2 == 0 { n - 1 } else { n } as u32;
                assert!(rep.max_color <= offset + span);
                for v in 0..n {
                    let seen = &rep.vertex_colors[v];
                    assert_eq!(seen.len(), n - 1);
                    match &cf.missing_colors {
                        None => {
                            let all: Vec<u32> = (offset + 1..=offset + span).collect();
                            assert_eq!(seen, &all);
                        }
                        Some(miss) => {
                            assert_eq!(miss[v], offset + 1 + v as u32);
                            assert!(!seen.contains(&miss[v]));
                            assert!(seen.iter().all(|&c| c > offset && c <= offset + span));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_sum_shifts_linearly() {
        let base = clique_factorization(5, 0).coloring.sum();
        let moved = clique_factorization(5, 7).coloring.sum();
        assert_eq!(moved, base + 7 * 10);
    }
}
