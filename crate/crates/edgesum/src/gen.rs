//! Seeded instance generators and the colon/comma mini-syntax that names
//! them on the command line. The same spec and seed always produce the
//! same graph, byte for byte.

use crate::json::parse_condition;
use crate::{Error, Result};
use edgesum_core::split::Condition;
use edgesum_core::{Bipartition, Graph, Side, SplitDecomposition};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// How many fresh pairings the regular-graph generator tries before giving
/// up on a degree sequence.
const PAIRING_RETRIES: usize = 200;

/// One parsed generator request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Complete { n: usize },
    Cycle { n: usize },
    Petersen,
    RandomRegular { n: usize, r: usize },
    BipartiteDominant { dominant: usize, dominated: usize },
    Split { clique: usize, independent: usize, condition: Condition },
}

/// A generated graph plus whichever partition metadata its family defines.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub bipartition: Option<Bipartition>,
    pub split: Option<SplitDecomposition>,
}

impl Instance {
    fn plain(graph: Graph) -> Instance {
        Instance {
            graph,
            bipartition: None,
            split: None,
        }
    }
}

fn spec_err(spec: &str, reason: &'static str) -> Error {
    Error::BadGenSpec {
        spec: spec.to_string(),
        reason,
    }
}

/// Parses specs such as `complete:5`, `random-regular:10,3`, or
/// `split:3,2,thm11`.
pub fn parse_spec(spec: &str) -> Result<GenSpec> {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, r),
        None => (spec, ""),
    };
    let args: Vec<&str> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',').collect()
    };
    let int = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| spec_err(spec, "expected a non-negative integer argument"))
    };
    match name {
        "complete" => match args.as_slice() {
            [n] => Ok(GenSpec::Complete { n: int(n)? }),
            _ => Err(spec_err(spec, "complete takes one argument: complete:<n>")),
        },
        "cycle" => match args.as_slice() {
            [n] => {
                let n = int(n)?;
                if n < 3 {
                    return Err(spec_err(spec, "a cycle needs at least three vertices"));
                }
                Ok(GenSpec::Cycle { n })
            }
            _ => Err(spec_err(spec, "cycle takes one argument: cycle:<n>")),
        },
        "petersen" => match args.as_slice() {
            [] => Ok(GenSpec::Petersen),
            _ => Err(spec_err(spec, "petersen takes no arguments")),
        },
        "random-regular" => match args.as_slice() {
            [n, r] => {
                let (n, r) = (int(n)?, int(r)?);
                if r >= n {
                    return Err(spec_err(spec, "degree must be below the vertex count"));
                }
                if n * r % 2 != 0 {
                    return Err(spec_err(spec, "vertex count times degree must be even"));
                }
                Ok(GenSpec::RandomRegular { n, r })
            }
            _ => Err(spec_err(spec, "expected random-regular:<n>,<r>")),
        },
        "bipartite-dominant" => match args.as_slice() {
            [a, b] => {
                let (a, b) = (int(a)?, int(b)?);
                if a == 0 || b == 0 {
                    return Err(spec_err(spec, "both sides must be nonempty"));
                }
                Ok(GenSpec::BipartiteDominant {
                    dominant: a,
                    dominated: b,
                })
            }
            _ => Err(spec_err(spec, "expected bipartite-dominant:<u>,<w>")),
        },
        "split" => {
            let (sizes, condition) = match args.as_slice() {
                [c, i] => ((c, i), Condition::CliqueDominant),
                [c, i, cond] => (
                    (c, i),
                    parse_condition(cond)
                        .ok_or_else(|| spec_err(spec, "condition must be thm10 or thm11"))?,
                ),
                _ => {
                    return Err(spec_err(
                        spec,
                        "expected split:<clique>,<independent>[,thm10|thm11]",
                    ))
                }
            };
            let (clique, independent) = (int(sizes.0)?, int(sizes.1)?);
            if clique == 0 {
                return Err(spec_err(spec, "the clique must be nonempty"));
            }
            Ok(GenSpec::Split {
                clique,
                independent,
                condition,
            })
        }
        _ => Err(spec_err(spec, "unknown family")),
    }
}

/// Builds the instance a spec describes, deterministically for the seed.
pub fn realize(spec: &GenSpec, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *spec {
        GenSpec::Complete { n } => Ok(Instance::plain(Graph::complete(n))),
        GenSpec::Cycle { n } => Ok(Instance::plain(Graph::cycle(n))),
        GenSpec::Petersen => Ok(Instance::plain(Graph::petersen())),
        GenSpec::RandomRegular { n, r } => Ok(Instance::plain(random_regular(n, r, &mut rng)?)),
        GenSpec::BipartiteDominant {
            dominant,
            dominated,
        } => {
            let (graph, bp) = bipartite_dominant(dominant, dominated, &mut rng)?;
            Ok(Instance {
                graph,
                bipartition: Some(bp),
                split: None,
            })
        }
        GenSpec::Split {
            clique,
            independent,
            condition,
        } => {
            let (graph, sd) = split_instance(clique, independent, condition, &mut rng)?;
            Ok(Instance {
                graph,
                bipartition: None,
                split: Some(sd),
            })
        }
    }
}

/// Uniform-ish random r-regular graph by the pairing model: r stubs per
/// vertex, shuffled and read off in pairs; pairings with loops or repeated
/// edges are thrown away and redrawn.
pub fn random_regular(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if r >= n || n * r % 2 != 0 {
        return Err(Error::GenerationFailed(
            "degree sequence is not realizable as a simple graph",
        ));
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    for _ in 0..PAIRING_RETRIES {
        stubs.shuffle(rng);
        let mut seen = HashSet::with_capacity(n * r / 2);
        let mut edges = Vec::with_capacity(n * r / 2);
        let ok = stubs.chunks(2).all(|pair| {
            let (a, b) = (pair[0], pair[1]);
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return false;
            }
            edges.push((a, b));
            true
        });
        if ok {
            return Graph::new(n, &edges).map_err(Error::Core);
        }
    }
    Err(Error::GenerationFailed("pairing model kept colliding"))
}

fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0usize; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Removes edges until `keep` accepts every remaining edge under the
/// current degrees. Each removal lowers both endpoint degrees, so this
/// terminates, in the worst case on the empty edge set.
fn repair_edges(
    n: usize,
    mut edges: Vec<(usize, usize)>,
    keep: impl Fn(&[usize], usize, usize) -> bool,
) -> Vec<(usize, usize)> {
    loop {
        let d = degrees(n, &edges);
        match edges.iter().position(|&(u, v)| !keep(&d, u, v)) {
            Some(at) => {
                edges.remove(at);
            }
            None => return edges,
        }
    }
}

/// Random bipartite graph whose first `dominant` vertices form side U and
/// outweigh their neighbors: every edge (u, w) ends with d(u) >= d(w).
/// Starts from small random W-degrees and deletes offending edges.
pub fn bipartite_dominant(
    dominant: usize,
    dominated: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Graph, Bipartition)> {
    let mut edges = Vec::new();
    let mut pool: Vec<usize> = (0..dominant).collect();
    for w in 0..dominated {
        let t = rng.gen_range(1..=dominant.min(3));
        pool.shuffle(rng);
        for &u in &pool[..t] {
            edges.push((u, dominant + w));
        }
    }
    let edges = repair_edges(dominant + dominated, edges, |d, u, v| d[u] >= d[v]);
    let g = Graph::new(dominant + dominated, &edges)?;
    let sides = (0..dominant + dominated)
        .map(|v| if v < dominant { Side::U } else { Side::W })
        .collect();
    let bp = Bipartition::new(&g, sides)?;
    Ok((g, bp))
}

/// Random bipartite graph with every degree at most `max_deg`: pairs are
/// drawn at a random density, then a single pass keeps an edge only while
/// both endpoints have room.
pub fn bounded_bipartite(
    a: usize,
    b: usize,
    max_deg: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Graph, Bipartition)> {
    let density = rng.gen_range(0.25..0.75);
    let mut deg = vec![0usize; a + b];
    let mut edges = Vec::new();
    for u in 0..a {
        for w in 0..b {
            if rng.gen_bool(density) && deg[u] < max_deg && deg[a + w] < max_deg {
                deg[u] += 1;
                deg[a + w] += 1;
                edges.push((u, a + w));
            }
        }
    }
    let g = Graph::new(a + b, &edges)?;
    let sides = (0..a + b)
        .map(|v| if v < a { Side::U } else { Side::W })
        .collect();
    let bp = Bipartition::new(&g, sides)?;
    Ok((g, bp))
}

/// Bipartite graph whose two sides carry the same degree multiset, drawn
/// from 1..=min(3, k). Largest demands connect to the largest remaining
/// capacities; `None` when the drawn multiset resists that greedy.
pub fn balanced_bipartite(k: usize, rng: &mut ChaCha8Rng) -> Option<(Graph, Bipartition)> {
    let mut demand: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=k.min(3))).collect();
    demand.sort_unstable_by(|x, y| y.cmp(x));
    let mut capacity = demand.clone();
    let mut edges = Vec::new();
    for (u, &d) in demand.iter().enumerate() {
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&w| (usize::MAX - capacity[w], w));
        if capacity[order[d - 1]] == 0 {
            return None;
        }
        for &w in &order[..d] {
            capacity[w] -= 1;
            edges.push((u, k + w));
        }
    }
    let g = Graph::new(2 * k, &edges).ok()?;
    let sides = (0..2 * k)
        .map(|v| if v < k { Side::U } else { Side::W })
        .collect();
    let bp = Bipartition::new(&g, sides).ok()?;
    Some((g, bp))
}

/// Arbitrary small graph: random order, random density.
pub fn mixed_graph(rng: &mut ChaCha8Rng) -> Result<Graph> {
    let n = rng.gen_range(2..=10);
    let density = rng.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).map_err(Error::Core)
}

/// Arbitrary small bipartite graph with its partition.
pub fn random_bipartite(rng: &mut ChaCha8Rng) -> Result<(Graph, Bipartition)> {
    let a = rng.gen_range(1..=5);
    let b = rng.gen_range(1..=5);
    let density = rng.gen_range(0.2..0.8);
    let mut edges = Vec::new();
    for u in 0..a {
        for w in 0..b {
            if rng.gen_bool(density) {
                edges.push((u, a + w));
            }
        }
    }
    let g = Graph::new(a + b, &edges)?;
    let sides = (0..a + b)
        .map(|v| if v < a { Side::U } else { Side::W })
        .collect();
    let bp = Bipartition::new(&g, sides)?;
    Ok((g, bp))
}

/// Split graph satisfying the requested degree condition: vertices
/// 0..clique are pairwise adjacent, the rest are independent, and the
/// cross edges are repaired until the condition holds on each of them.
///
/// With n = clique size, a cross edge (u, v) satisfies the clique-dominant
/// comparison d(u) - d(v) >= n - 1 exactly when u has at least as many
/// cross edges as v, and the independent-dominant comparison in the
/// mirrored case, so the repair works on cross degrees alone.
pub fn split_instance(
    clique: usize,
    independent: usize,
    condition: Condition,
    rng: &mut ChaCha8Rng,
) -> Result<(Graph, SplitDecomposition)> {
    if clique == 0 {
        return Err(Error::GenerationFailed("the clique must be nonempty"));
    }
    let n = clique + independent;
    let mut cross = Vec::new();
    let mut pool: Vec<usize> = (0..clique).collect();
    for v in clique..n {
        let t = rng.gen_range(0..=clique.min(3));
        pool.shuffle(rng);
        for &u in &pool[..t] {
            cross.push((u, v));
        }
    }
    // Repair on the cross-edge subgraph; clique-internal degrees shift both
    // sides of the comparison by the same n - 1.
    let cross = repair_edges(n, cross, |d, u, v| match condition {
        Condition::CliqueDominant => d[u] >= d[v],
        Condition::IndependentDominant => d[v] >= d[u],
    });
    let mut edges = Vec::new();
    for i in 0..clique {
        for j in i + 1..clique {
            edges.push((i, j));
        }
    }
    edges.extend(cross);
    let g = Graph::new(n, &edges)?;
    let sd = SplitDecomposition::new(&g, (0..clique).collect(), (clique..n).collect())?;
    Ok((g, sd))
}
