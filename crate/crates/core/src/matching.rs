//! Bipartite matching machinery shared by the coloring kernels.
//!
//! The key primitive: pad a bipartite graph with filler vertices and filler
//! edge multiplicity until it is k-regular, then pull out perfect matchings.
//! Restricted to the real edges, each matching saturates every vertex whose
//! real degree is already k, because such vertices receive no filler.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

const INF: u32 = u32::MAX;

/// Hopcroft-Karp maximum matching. `adj[l]` lists right neighbors of left
/// vertex `l`. Returns the right mate of each left vertex, in deterministic
/// (index) order of discovery.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], right_size: usize) -> Vec<Option<usize>> {
    let left_size = adj.len();
    let mut match_l: Vec<Option<usize>> = vec![None; left_size];
    let mut match_r: Vec<Option<usize>> = vec![None; right_size];
    let mut dist = vec![INF; left_size];

    loop {
        // BFS layering from unmatched left vertices.
        let mut queue = VecDeque::new();
        for l in 0..left_size {
            if match_l[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut reachable_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match match_r[r] {
                    None => reachable_free_right = true,
                    Some(l2) => {
                        if dist[l2] == INF {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
        if !reachable_free_right {
            break;
        }
        for l in 0..left_size {
            if match_l[l].is_none() {
                augment(l, adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }
    match_l
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    match_l: &mut [Option<usize>],
    match_r: &mut [Option<usize>],
    dist: &mut [u32],
) -> bool {
    for &r in &adj[l] {
        let ok = match match_r[r] {
            None => true,
            Some(l2) => dist[l2] == dist[l] + 1 && augment(l2, adj, match_l, match_r, dist),
        };
        if ok {
            match_l[l] = Some(r);
            match_r[r] = Some(l);
            return true;
        }
    }
    dist[l] = INF;
    false
}

/// Pads the bipartite graph with `left`/`right` real vertices and simple
/// `real` edges (index pairs into the two sides) to a k-regular bipartite
/// multigraph, then extracts `rounds` perfect matchings.
///
/// Requirements: every real vertex has degree at most `k`, `rounds <= k`,
/// and the real edges are distinct pairs. Filler multiplicity only lands on
/// vertex pairs with remaining capacity, so a vertex of real degree `k` is
/// matched through a real edge in every round.
///
/// Each returned matching is a list of `(l, r)` pairs over padded indices;
/// pairs involving filler vertices or filler multiplicity are the caller's
/// to ignore.
pub(crate) fn regular_matchings(
    left: usize,
    right: usize,
    k: usize,
    real: &[(usize, usize)],
    rounds: usize,
) -> Result<Vec<Vec<(usize, usize)>>> {
    debug_assert!(rounds <= k);
    let size = left.max(right);
    if size == 0 || k == 0 {
        return Ok(vec![Vec::new(); rounds]);
    }
    let mut mult = vec![vec![0u32; size]; size];
    let mut deg_l = vec![0usize; size];
    let mut deg_r = vec![0usize; size];
    for &(l, r) in real {
        mult[l][r] += 1;
        deg_l[l] += 1;
        deg_r[r] += 1;
    }
    if deg_l.iter().chain(deg_r.iter()).any(|&d| d > k) {
        return Err(Error::Internal("regularization target below a real degree"));
    }

    // Spread filler multiplicity over deficient pairs, two pointers.
    let (mut li, mut ri) = (0, 0);
    while li < size {
        if deg_l[li] == k {
            li += 1;
            continue;
        }
        while deg_r[ri] == k {
            ri += 1;
        }
        let t = (k - deg_l[li]).min(k - deg_r[ri]);
        mult[li][ri] += t as u32;
        deg_l[li] += t;
        deg_r[ri] += t;
    }
    debug_assert!(deg_r.iter().all(|&d| d == k));

    let mut out = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let adj: Vec<Vec<usize>> = (0..size)
            .map(|l| (0..size).filter(|&r| mult[l][r] > 0).collect())
            .collect();
        let match_l = hopcroft_karp(&adj, size);
        let mut matching = Vec::with_capacity(size);
        for (l, mate) in match_l.iter().enumerate() {
            let r = mate.ok_or(Error::Internal("regular multigraph lost its perfect matching"))?;
            mult[l][r] -= 1;
            matching.push((l, r));
        }
        out.push(matching);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_a_square() {
        // 2x2 complete bipartite
        let adj = vec![vec![0, 1], vec![0, 1]];
        let m = hopcroft_karp(&adj, 2);
        assert!(m.iter().all(Option::is_some));
        assert_ne!(m[0], m[1]);
    }

    #[test]
    fn finds_maximum_not_just_maximal() {
        // greedy 0->0 would strand left 1; augmenting path must fix it
        let adj = vec![vec![0], vec![0, 1], vec![1, 2]];
        let m = hopcroft_karp(&adj, 3);
        assert_eq!(m, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn respects_isolated_left() {
        let adj = vec![vec![], vec![0]];
        let m = hopcroft_karp(&adj, 1);
        assert_eq!(m, vec![None, Some(0)]);
    }

    #[test]
    fn regularized_rounds_saturate_full_degree_vertices() {
        // star: left 0 joined to right 0,1,2; k = 3
        let real = [(0, 0), (0, 1), (0, 2)];
        let rounds = regular_matchings(1, 3, 3, &real, 3).unwrap();
        assert_eq!(rounds.len(), 3);
        let mut seen: Vec<usize> = rounds
            .iter()
            .map(|m| {
                // left 0 has full degree, so each round matches it via a real edge
                m.iter().find(|&&(l, _)| l == 0).unwrap().1
            })
            .collect();
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2]);
    }

    #[test]
    fn rounds_partition_real_edges_of_a_regular_graph() {
        // the four edges of a 4-cycle, written bipartite: left {0,1}, right {0,1}
        let real = [(0, 0), (0, 1), (1, 0), (1, 1)];
        let rounds = regular_matchings(2, 2, 2, &real, 2).unwrap();
        let mut covered: Vec<(usize, usize)> = rounds.concat();
        covered.sort_unstable();
        assert_eq!(covered, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }
}
