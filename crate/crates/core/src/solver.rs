//! Desk-scale exact minimum-sum oracle and small decision procedures.
//!
//! The solver is a branch-and-bound search over proper colorings. It exists
//! to certify the constructions in the other modules on small instances, not
//! to scale: intended for graphs with roughly 25 edges or fewer.
//!
//! Colors are capped at 2Δ-1 without losing any optimum: an edge has at most
//! 2Δ-2 neighboring edges, so an edge colored above 2Δ-1 always has a free
//! smaller color, and moving to it strictly lowers the sum.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{verify_coloring, EdgeColoring};
use crate::graph::{Bipartition, Graph, Side};
use crate::kernels::vizing_color;

/// Cooperative budget for the search. [`exact_sum`] asks once per expanded
/// node; stateful implementations may sample their real clock as rarely as
/// they like.
pub trait Budget {
    /// True when the search should stop and return its incumbent.
    fn exhausted(&mut self, nodes: u64) -> bool;
}

/// Never stops the search.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&mut self, _nodes: u64) -> bool {
        false
    }
}

/// Stops after a fixed number of expanded nodes. Deterministic, so tests can
/// exercise truncation reproducibly.
#[derive(Debug, Clone, Copy)]
pub struct NodeBudget {
    pub limit: u64,
}

impl Budget for NodeBudget {
    fn exhausted(&mut self, nodes: u64) -> bool {
        nodes >= self.limit
    }
}

/// What the search returned: the best coloring it saw and whether the search
/// space was exhausted (making that coloring a certified optimum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Sum of `coloring`.
    pub sum: u64,
    /// Best proper coloring found.
    pub coloring: EdgeColoring,
    /// True when every branch was either explored or safely pruned.
    pub optimal: bool,
    /// Search tree nodes expanded; deterministic for a given instance.
    pub nodes_expanded: u64,
}

struct Search<'a, B: Budget> {
    g: &'a Graph,
    /// Edge ids in branching order.
    order: Vec<usize>,
    /// Bit c set on a vertex: color c is taken there. Bit 0 unused.
    used: Vec<u128>,
    /// Colors 1..=cap are available as mask bits.
    palette: u128,
    /// Current assignment by edge id, 0 for unassigned.
    chosen: Vec<u32>,
    /// Unassigned incident edges per vertex.
    remaining: Vec<usize>,
    /// Assigned edges per color, indexed by color (slot 0 unused).
    class_sizes: Vec<u64>,
    /// No color class can ever exceed this: ⌊(vertices of degree > 0)/2⌋.
    class_cap: u64,
    partial: u64,
    best_sum: u64,
    best: Vec<u32>,
    nodes: u64,
    budget: &'a mut B,
    stopped: bool,
}

impl<'a, B: Budget> Search<'a, B> {
    /// Two admissible estimates of the cheapest way to finish from `pos`:
    /// the sum of each unassigned edge's cheapest free color, and a per-
    /// vertex relaxation. Future assignments only remove options, so neither
    /// can overshoot.
    fn remaining_bounds(&self, pos: usize) -> (u64, u64) {
        let mut per_edge = 0u64;
        for &e in &self.order[pos..] {
            let (u, v) = self.g.endpoints(e);
            let free = !(self.used[u] | self.used[v]) & self.palette;
            per_edge += free.trailing_zeros() as u64;
        }
        let mut per_vertex = 0u64;
        for v in 0..self.g.vertex_count() {
            let mut free = !self.used[v] & self.palette;
            for _ in 0..self.remaining[v] {
                per_vertex += free.trailing_zeros() as u64;
                free &= free - 1;
            }
        }
        (per_edge, per_vertex.div_ceil(2))
    }

    /// Third admissible estimate: every color class is a matching, so color
    /// c can take at most class_cap - class_sizes[c] more edges; fill the
    /// unassigned edges into the cheapest remaining capacity. Exactly tight
    /// on complete graphs.
    fn class_fill_bound(&self, pos: usize) -> u64 {
        let mut rem = (self.order.len() - pos) as u64;
        let mut sum = 0u64;
        for c in 1..self.class_sizes.len() {
            if rem == 0 {
                return sum;
            }
            let take = (self.class_cap - self.class_sizes[c]).min(rem);
            sum += c as u64 * take;
            rem -= take;
        }
        if rem > 0 {
            // Even the relaxed capacities cannot hold the rest.
            return u64::MAX / 2;
        }
        sum
    }

    fn descend(&mut self, pos: usize) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if self.budget.exhausted(self.nodes) {
            self.stopped = true;
            return;
        }
        if pos == self.order.len() {
            // Pruning tests strict improvement, so this is a new best.
            self.best_sum = self.partial;
            self.best = self.chosen.clone();
            return;
        }
        let (per_edge, per_vertex) = self.remaining_bounds(pos);
        let bound = per_edge.max(per_vertex).max(self.class_fill_bound(pos));
        if self.partial + bound >= self.best_sum {
            return;
        }
        let e = self.order[pos];
        let (u, v) = self.g.endpoints(e);
        // The other unassigned edges cost at least their share of the
        // per-edge estimate, whatever color this edge takes.
        let start = !(self.used[u] | self.used[v]) & self.palette;
        let rest = per_edge - start.trailing_zeros() as u64;
        let mut free = start;
        while free != 0 {
            let c = free.trailing_zeros();
            free &= free - 1;
            if self.partial + c as u64 + rest >= self.best_sum {
                break;
            }
            if self.class_sizes[c as usize] >= self.class_cap {
                continue;
            }
            let bit = 1u128 << c;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            self.class_sizes[c as usize] += 1;
            self.chosen[e] = c;
            self.partial += c as u64;
            self.descend(pos + 1);
            self.partial -= c as u64;
            self.chosen[e] = 0;
            self.class_sizes[c as usize] -= 1;
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            if self.stopped {
                return;
            }
        }
    }
}

/// Edge ids sorted for branching: highest endpoint-degree total first, ties
/// by index. Constrained edges early means earlier contradictions.
fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order = (0..g.edge_count()).collect::<Vec<_>>();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (usize::MAX - (g.degree(u) + g.degree(v)), e)
    });
    order
}

/// Exact minimum color sum by branch and bound, searching colors in
/// [1, 2Δ-1]. The budget is polled once per node; when it trips, the best
/// coloring seen so far comes back with `optimal` false.
pub fn exact_sum<B: Budget>(g: &Graph, budget: &mut B) -> SolveResult {
    let cap = 2 * g.max_degree().max(1) - 1;
    exact_sum_capped(g, budget, cap as u32)
}

/// [`exact_sum`] with an explicit color cap, for auditing that wider caps
/// change nothing. Caps below 2Δ-1 are raised to it; caps above 127 are
/// unsupported.
pub fn exact_sum_capped<B: Budget>(g: &Graph, budget: &mut B, cap: u32) -> SolveResult {
    if g.edge_count() == 0 {
        return SolveResult {
            sum: 0,
            coloring: EdgeColoring::new(Vec::new()).expect("empty coloring"),
            optimal: true,
            nodes_expanded: 0,
        };
    }
    let cap = cap.max(2 * g.max_degree() as u32 - 1);
    assert!(cap <= 127, "solver supports at most 127 colors");

    let seed = vizing_color(g);
    let audit = verify_coloring(g, &seed).expect("seed coloring covers all edges");
    assert!(audit.proper, "seed coloring must be proper");
    assert!(seed.max_color() <= cap, "seed coloring must fit the cap");

    let active = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).count();
    let mut search = Search {
        g,
        order: branching_order(g),
        used: vec![0u128; g.vertex_count()],
        palette: ((1u128 << cap) - 1) << 1,
        chosen: vec![0u32; g.edge_count()],
        remaining: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
        class_sizes: vec![0u64; cap as usize + 1],
        class_cap: (active / 2) as u64,
        partial: 0,
        best_sum: seed.sum(),
        best: seed.colors().to_vec(),
        nodes: 0,
        budget,
        stopped: false,
    };
    search.descend(0);

    let coloring = EdgeColoring::new(search.best).expect("incumbent is a full coloring");
    SolveResult {
        sum: search.best_sum,
        coloring,
        optimal: !search.stopped,
        nodes_expanded: search.nodes,
    }
}

/// ⌈(1/2)·Σ_v d(v)(d(v)+1)/2⌉: every vertex must see its degree's worth of
/// distinct colors, and each edge is seen from two vertices.
pub fn general_lower_bound(g: &Graph) -> u64 {
    let per_vertex = (0..g.vertex_count())
        .map(|v| {
            let d = g.degree(v) as u64;
            d * (d + 1) / 2
        })
        .sum::<u64>();
    per_vertex.div_ceil(2)
}

/// Σ_{v on side} d(v)(d(v)+1)/2, equivalently Σ_i i·|side_{≥i}|: the least
/// any coloring can spend as seen from one side of a bipartition.
pub fn bipartite_onesided_lower_bound(g: &Graph, bp: &Bipartition, side: Side) -> u64 {
    bp.vertices_on(side)
        .map(|v| {
            let d = g.degree(v) as u64;
            d * (d + 1) / 2
        })
        .sum()
}

/// Which vertices a sequential coloring must serve exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Targets {
    /// One side of the bipartition.
    OnSide(Side),
    /// Every vertex.
    All,
}

/// Whether a Δ-coloring exists in which every target vertex v sees exactly
/// the colors {1, …, d(v)}. Backtracking search; exponential in the worst
/// case, intended for small instances.
///
/// A proper coloring where every edge at a target v stays within [1, d(v)]
/// puts d(v) distinct colors inside a d(v)-sized range, which is exactly the
/// sequential condition; so the search only needs per-edge color caps.
pub fn decide_sequential(g: &Graph, bp: &Bipartition, targets: Targets) -> bool {
    assert_eq!(
        bp.sides().len(),
        g.vertex_count(),
        "bipartition must describe this graph"
    );
    let delta = g.max_degree();
    let targeted = |v: usize| match targets {
        Targets::OnSide(s) => bp.side(v) == s,
        Targets::All => true,
    };
    let order = branching_order(g);
    let caps = (0..g.edge_count())
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let mut cap = delta;
            if targeted(u) {
                cap = cap.min(g.degree(u));
            }
            if targeted(v) {
                cap = cap.min(g.degree(v));
            }
            cap as u32
        })
        .collect::<Vec<_>>();

    fn fill(
        g: &Graph,
        order: &[usize],
        caps: &[u32],
        used: &mut [u128],
        pos: usize,
    ) -> bool {
        let Some(&e) = order.get(pos) else {
            return true;
        };
        let (u, v) = g.endpoints(e);
        let palette = if caps[e] >= 127 {
            !1u128
        } else {
            ((1u128 << caps[e]) - 1) << 1
        };
        let mut free = !(used[u] | used[v]) & palette;
        while free != 0 {
            let c = free.trailing_zeros();
            free &= free - 1;
            let bit = 1u128 << c;
            used[u] |= bit;
            used[v] |= bit;
            if fill(g, order, caps, used, pos + 1) {
                return true;
            }
            used[u] &= !bit;
            used[v] &= !bit;
        }
        false
    }

    let mut used = vec![0u128; g.vertex_count()];
    fill(g, &order, &caps, &mut used, 0)
}
