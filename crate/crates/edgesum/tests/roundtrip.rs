//! Round-trip properties for the two file formats: whatever the writers
//! emit, the parsers rebuild exactly.

use edgesum::json::{ColoringDoc, GraphDoc};
use edgesum::{dimacs, json};
use edgesum_core::{Bipartition, EdgeColoring, Graph, Side, SplitDecomposition};
use proptest::prelude::*;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = all_pairs(n);
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&p, _)| p)
                .collect();
            Graph::new(n, &edges).expect("pair subsets are simple")
        })
    })
}

fn arb_bipartite(max_side: usize) -> impl Strategy<Value = (Graph, Bipartition)> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(a, b)| {
        prop::collection::vec(any::<bool>(), a * b).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = mask
                .iter()
                .enumerate()
                .filter(|(_, &keep)| keep)
                .map(|(i, _)| (i / b, a + i % b))
                .collect();
            let g = Graph::new(a + b, &edges).expect("crossing edges are simple");
            let sides = (0..a + b)
                .map(|v| if v < a { Side::U } else { Side::W })
                .collect();
            let bp = Bipartition::new(&g, sides).expect("construction is two-sided");
            (g, bp)
        })
    })
}

fn arb_split(max_clique: usize) -> impl Strategy<Value = (Graph, SplitDecomposition)> {
    (1..=max_clique, 0..=3usize).prop_flat_map(|(c, i)| {
        prop::collection::vec(any::<bool>(), c * i).prop_map(move |mask| {
            let mut edges = all_pairs(c);
            edges.extend(
                mask.iter()
                    .enumerate()
                    .filter(|(_, &keep)| keep)
                    .map(|(k, _)| (k / i.max(1), c + k % i.max(1))),
            );
            let g = Graph::new(c + i, &edges).expect("clique plus crossings is simple");
            let sd = SplitDecomposition::new(&g, (0..c).collect(), (c..c + i).collect())
                .expect("construction is a split partition");
            (g, sd)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimacs_write_then_parse_is_identity(g in arb_graph(9)) {
        let back = dimacs::parse(&dimacs::write(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn plain_graph_documents_round_trip(g in arb_graph(9)) {
        let text = json::render(&GraphDoc::from_parts(&g, None, None)).unwrap();
        let (back, bp, sd) = GraphDoc::parse(&text).unwrap().into_parts().unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert!(bp.is_none() && sd.is_none());
    }

    #[test]
    fn bipartition_metadata_round_trips((g, bp) in arb_bipartite(5)) {
        let text = json::render(&GraphDoc::from_parts(&g, Some(&bp), None)).unwrap();
        let (back, bp2, _) = GraphDoc::parse(&text).unwrap().into_parts().unwrap();
        let bp2 = bp2.unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(bp2.sides(), bp.sides());
    }

    #[test]
    fn split_metadata_round_trips((g, sd) in arb_split(4)) {
        let text = json::render(&GraphDoc::from_parts(&g, None, Some(&sd))).unwrap();
        let (back, _, sd2) = GraphDoc::parse(&text).unwrap().into_parts().unwrap();
        let sd2 = sd2.unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(sd2.clique(), sd.clique());
        prop_assert_eq!(sd2.independent(), sd.independent());
    }

    #[test]
    fn coloring_documents_round_trip(colors in prop::collection::vec(1u32..=7, 0..20)) {
        let c = EdgeColoring::new(colors).unwrap();
        let text = json::render(&ColoringDoc::new(&c)).unwrap();
        let back = ColoringDoc::parse(&text).unwrap().coloring().unwrap();
        prop_assert_eq!(back.colors(), c.colors());
    }
}
