//! JSON documents for graphs, colorings, and command reports. Field names
//! are part of the CLI contract; rationals travel as reduced "p/q" strings
//! so nothing is rounded.

use crate::{Error, Result};
use edgesum_core::approx::{ApproxReport, Rational};
use edgesum_core::solver::SolveResult;
use edgesum_core::split::{Condition, Parity, SplitBoundReport, Strategy};
use edgesum_core::{
    Bipartition, EdgeColoring, Graph, Side, SplitDecomposition, VerificationReport,
};
use serde::{Deserialize, Serialize};

/// Renders a rational as "p/q", keeping the denominator even when it is 1
/// so the field stays uniform.
pub fn rational_string(x: Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn integer_string(x: u64) -> String {
    format!("{x}/1")
}

/// External name of a degree condition. These two tokens are the CLI and
/// JSON vocabulary for `--condition` and generator specs.
pub fn condition_token(c: Condition) -> &'static str {
    match c {
        Condition::CliqueDominant => "thm10",
        Condition::IndependentDominant => "thm11",
    }
}

/// Inverse of [`condition_token`].
pub fn parse_condition(s: &str) -> Option<Condition> {
    match s {
        "thm10" => Some(Condition::CliqueDominant),
        "thm11" => Some(Condition::IndependentDominant),
        _ => None,
    }
}

/// One side tag per vertex in a graph document's `bipartition` array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SideTag {
    U,
    W,
}

impl From<SideTag> for Side {
    fn from(t: SideTag) -> Side {
        match t {
            SideTag::U => Side::U,
            SideTag::W => Side::W,
        }
    }
}

impl From<Side> for SideTag {
    fn from(s: Side) -> SideTag {
        match s {
            Side::U => SideTag::U,
            Side::W => SideTag::W,
        }
    }
}

/// The `split_partition` object: clique and independent vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartitionDoc {
    #[serde(rename = "C")]
    pub clique: Vec<usize>,
    #[serde(rename = "I")]
    pub independent: Vec<usize>,
}

/// A graph on disk: vertex count, edge list, and whichever partition
/// metadata the instance carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<Vec<SideTag>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_partition: Option<SplitPartitionDoc>,
}

impl GraphDoc {
    pub fn from_parts(
        g: &Graph,
        bp: Option<&Bipartition>,
        sd: Option<&SplitDecomposition>,
    ) -> GraphDoc {
        GraphDoc {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            bipartition: bp.map(|b| b.sides().iter().map(|&s| s.into()).collect()),
            split_partition: sd.map(|s| SplitPartitionDoc {
                clique: s.clique().to_vec(),
                independent: s.independent().to_vec(),
            }),
        }
    }

    /// Rebuilds the graph and validates every piece of attached metadata.
    pub fn into_parts(
        self,
    ) -> Result<(Graph, Option<Bipartition>, Option<SplitDecomposition>)> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::new(self.n, &edges)?;
        let bp = match self.bipartition {
            Some(tags) => Some(Bipartition::new(
                &g,
                tags.into_iter().map(Side::from).collect(),
            )?),
            None => None,
        };
        let sd = match self.split_partition {
            Some(p) => Some(SplitDecomposition::new(&g, p.clique, p.independent)?),
            None => None,
        };
        Ok((g, bp, sd))
    }

    pub fn parse(input: &str) -> Result<Self> {
        Ok(serde_json::from_str(input)?)
    }
}

/// A coloring on disk. `sequential_vertices` appears only on reports that
/// certify a sequential vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub colors: Vec<u32>,
    pub sum: u64,
    pub max_color: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequential_vertices: Option<Vec<usize>>,
}

impl ColoringDoc {
    pub fn new(c: &EdgeColoring) -> ColoringDoc {
        ColoringDoc {
            colors: c.colors().to_vec(),
            sum: c.sum(),
            max_color: c.max_color(),
            sequential_vertices: None,
        }
    }

    pub fn with_sequential(c: &EdgeColoring, vertices: Vec<usize>) -> ColoringDoc {
        ColoringDoc {
            sequential_vertices: Some(vertices),
            ..ColoringDoc::new(c)
        }
    }

    /// Validates the color array and cross-checks the document's own sum
    /// and max fields against it.
    pub fn coloring(&self) -> Result<EdgeColoring> {
        let c = EdgeColoring::new(self.colors.clone())?;
        if self.sum != c.sum() || self.max_color != c.max_color() {
            return Err(Error::Usage(
                "coloring document sum or max_color disagrees with its colors",
            ));
        }
        Ok(c)
    }

    pub fn parse(input: &str) -> Result<Self> {
        Ok(serde_json::from_str(input)?)
    }
}

/// Report of the regular-graph approximation pipeline. The four bound
/// fields are exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxDoc {
    pub n: usize,
    pub r: usize,
    pub achieved_sum: String,
    pub lower_bound: String,
    pub formula_upper: String,
    pub ratio_bound: String,
    pub coloring: ColoringDoc,
}

impl ApproxDoc {
    pub fn new(rep: &ApproxReport) -> ApproxDoc {
        ApproxDoc {
            n: rep.n,
            r: rep.r,
            achieved_sum: integer_string(rep.achieved_sum),
            lower_bound: rational_string(rep.lower_bound),
            formula_upper: rational_string(rep.formula_upper),
            ratio_bound: rational_string(rep.ratio_bound),
            coloring: ColoringDoc::with_sequential(
                &rep.coloring,
                rep.sequential_vertices.clone(),
            ),
        }
    }
}

/// Report of the exact search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub sum: u64,
    pub optimal: bool,
    pub nodes_expanded: u64,
    pub coloring: ColoringDoc,
}

impl SolveDoc {
    pub fn new(res: &SolveResult) -> SolveDoc {
        SolveDoc {
            sum: res.sum,
            optimal: res.optimal,
            nodes_expanded: res.nodes_expanded,
            coloring: ColoringDoc::new(&res.coloring),
        }
    }
}

/// Report of the split-graph bound: both strategy terms are always present
/// so the minimum can be audited.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitDoc {
    pub condition: String,
    pub parity: String,
    pub term_clique_high: u64,
    pub term_clique_low: u64,
    pub bound: u64,
    pub strategy_chosen: String,
    pub coloring: ColoringDoc,
}

impl SplitDoc {
    pub fn new(rep: &SplitBoundReport) -> SplitDoc {
        SplitDoc {
            condition: condition_token(rep.condition).to_string(),
            parity: match rep.parity {
                Parity::Even => "even",
                Parity::Odd => "odd",
            }
            .to_string(),
            term_clique_high: rep.term_clique_high,
            term_clique_low: rep.term_clique_low,
            bound: rep.bound,
            strategy_chosen: match rep.strategy_chosen {
                Strategy::CliqueHigh => "clique-high",
                Strategy::CliqueLow => "clique-low",
            }
            .to_string(),
            coloring: ColoringDoc::new(&rep.coloring),
        }
    }
}

/// Verdict of checking a coloring document against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub proper: bool,
    pub sum: u64,
    pub max_color: u32,
    pub violations: Vec<[usize; 2]>,
}

impl VerifyDoc {
    pub fn new(rep: &VerificationReport) -> VerifyDoc {
        VerifyDoc {
            proper: rep.proper,
            sum: rep.sum,
            max_color: rep.max_color,
            violations: rep.violations.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Pretty-prints any document with a trailing newline, the byte format
/// every command emits.
pub fn render<T: Serialize>(doc: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(doc)? + "\n")
}
