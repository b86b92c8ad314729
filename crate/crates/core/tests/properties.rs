use proptest::prelude::*;
use ramsey_core::constructions::{verify_witness, Verdict};
use ramsey_core::cycles::{circumference, girth};
use ramsey_core::graph6::{parse_graph6, write_graph6};
use ramsey_core::matching::{
    connected_matching_number, hall_deficiency, matching_number, max_fan_blades, max_matching,
};
use ramsey_core::search::{engine_accepts, SearchProblem};
use ramsey_core::{SimpleGraph, TwoColoring, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn degree_sum_and_complement(g in graph(20)) {
        let n = g.n();
        let sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
        prop_assert!(g.min_degree() <= g.max_degree());
        prop_assert!(n == 0 || g.max_degree() < n);
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn components_partition_vertices(g in graph(20)) {
        let comps = g.components();
        let mut all: Vec<usize> = comps.iter().flat_map(|c| c.iter()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        for c in &comps {
            prop_assert!(g.induced_subgraph(c).unwrap().0.is_connected());
        }
        for (u, v) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(u) && c.contains(v)));
        }
        for w in comps.windows(2) {
            prop_assert!(w[0].len() >= w[1].len());
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn matching_is_maximum_and_monotone(g in graph(14), extra in any::<(u8, u8)>()) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.size(), matching_number(&g));
        let n = g.n();
        if n >= 2 {
            let (u, v) = (extra.0 as usize % n, extra.1 as usize % n);
            if u != v {
                let mut h = g.clone();
                h.add_edge(u, v);
                prop_assert!(matching_number(&h) >= matching_number(&g));
                prop_assert!(connected_matching_number(&h).size >= connected_matching_number(&g).size);
                for c in 0..n {
                    prop_assert!(max_fan_blades(&h, c).unwrap().0 >= max_fan_blades(&g, c).unwrap().0);
                }
            }
        }
    }

    #[test]
    fn canonical_matching_is_lexicographically_first(g in graph(8)) {
        // Any other maximum matching found by brute force is not lexicographically smaller.
        let m = max_matching(&g);
        let edges: Vec<_> = g.edges().collect();
        let size = m.size();
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut chosen = Vec::new();
        fn rec(edges: &[(usize, usize)], i: usize, used: u64, size: usize, chosen: &mut Vec<(usize, usize)>, best: &mut Option<Vec<(usize, usize)>>) {
            if chosen.len() == size {
                if best.as_ref().is_none_or(|b| chosen.as_slice() < b.as_slice()) {
                    *best = Some(chosen.clone());
                }
                return;
            }
            for j in i..edges.len() {
                let (u, v) = edges[j];
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    chosen.push((u, v));
                    rec(edges, j + 1, used | 1 << u | 1 << v, size, chosen, best);
                    chosen.pop();
                }
            }
        }
        rec(&edges, 0, 0, size, &mut chosen, &mut best);
        prop_assert_eq!(Some(m.edges), best);
    }

    #[test]
    fn hall_identity_on_bipartite(p in 0usize..7, q in 0usize..7, bits in proptest::collection::vec(any::<bool>(), 49)) {
        let mut g = SimpleGraph::new(p + q);
        for i in 0..p {
            for j in 0..q {
                if bits[i * 7 + j] {
                    g.add_edge(i, p + j);
                }
            }
        }
        let x = VertexSet::range(p);
        let y: VertexSet = (p..p + q).collect();
        let h = hall_deficiency(&g, &x, &y).unwrap();
        prop_assert_eq!(matching_number(&g), p - h.deficiency);
        let reach: VertexSet = h.violator.iter().flat_map(|v| g.neighbors(v)).collect();
        prop_assert_eq!(h.violator.len() - reach.len().min(h.violator.len()), h.deficiency);
    }

    #[test]
    fn cycles_and_matchings_agree(g in graph(10)) {
        let c = circumference(&g).unwrap();
        if let Some(w) = &c.witness {
            prop_assert!(w.is_valid_in(&g));
        }
        if let Some((len, w)) = girth(&g) {
            prop_assert!(w.is_valid_in(&g) && len <= c.length && len >= 3);
        }
        prop_assert!(connected_matching_number(&g).size >= c.length / 2);
    }

    #[test]
    fn certificates_revalidate(g in graph(12), m in 3usize..7, f in 1usize..4) {
        let c = TwoColoring::from_red(g);
        let cert = verify_witness(&c, m, f).unwrap();
        prop_assert!(cert.validate(&c));
        let p = SearchProblem::new(c.n().max(1), m, f).unwrap();
        if c.n() >= 1 {
            prop_assert_eq!(engine_accepts(&p, &c), cert.verdict == Verdict::Avoids);
        }
        if cert.verdict == Verdict::Avoids {
            for v in 0..c.n() {
                prop_assert_eq!(verify_witness(&c.delete_vertex(v), m, f).unwrap().verdict, Verdict::Avoids);
            }
        }
    }
}
