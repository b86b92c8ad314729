//! Cross-checks against small independent oracles written directly from
//! the definitions.

use std::collections::BTreeSet;

use ramsey_core::census::graphs_up_to_isomorphism;
use ramsey_core::cycles::{circumference, cycle_spectrum, girth, has_cycle_of_length};
use ramsey_core::graph6::{parse_graph6, write_graph6};
use ramsey_core::matching::{berge_deficiency, max_fan_blades, max_matching, odd_components_after_removal};
use ramsey_core::{SimpleGraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// graph6 straight from the format description: N(n) header, then the
/// upper triangle column by column, six bits per byte, zero padded.
fn oracle_graph6(n: usize, edges: &[(usize, usize)]) -> String {
    let has = |i: usize, j: usize| edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(has(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for k in 0..6 {
            v <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                v |= 1;
            }
        }
        out.push(v + 63);
    }
    String::from_utf8(out).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn graph6_matches_independent_encoder() {
    assert_eq!(oracle_graph6(5, &[]), "D??");
    let k5: Vec<_> = SimpleGraph::complete(5).edges().collect();
    assert_eq!(oracle_graph6(5, &k5), "D~{");
    assert_eq!(write_graph6(&SimpleGraph::new(5)), "D??");
    assert_eq!(write_graph6(&SimpleGraph::complete(5)), "D~{");
    let c7 = SimpleGraph::cycle(7);
    assert_eq!(parse_graph6(&write_graph6(&c7)).unwrap(), c7);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(0..=80);
        let p: f64 = rng.gen();
        let g = random_graph(&mut rng, n, p);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(write_graph6(&g), oracle_graph6(n, &edges));
    }
}

/// Largest matching by trying every edge at the lowest unmatched vertex.
fn brute_matching(adj: &[u64], set: u64) -> usize {
    if set == 0 {
        return 0;
    }
    let v = set.trailing_zeros() as usize;
    let rest = set & !(1 << v);
    let mut best = brute_matching(adj, rest);
    let mut nb = adj[v] & rest;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        best = best.max(1 + brute_matching(adj, rest & !(1 << w)));
    }
    best
}

fn masks(g: &SimpleGraph) -> Vec<u64> {
    g.to_masks().unwrap()
}

#[test]
fn matching_equals_brute_force_up_to_six() {
    for level in graphs_up_to_isomorphism(6).unwrap() {
        for g in level {
            let all = (1u64 << g.n()) - 1;
            let m = max_matching(&g);
            assert!(m.is_valid_in(&g));
            assert_eq!(m.size(), brute_matching(&masks(&g), all), "{g:?}");
        }
    }
}

#[test]
fn petersen_values() {
    let p = SimpleGraph::petersen();
    assert_eq!(brute_matching(&masks(&p), (1 << 10) - 1), 5);
    assert_eq!(max_matching(&p).size(), 5);
    assert_eq!(girth(&p).unwrap().0, 5);
    assert_eq!(circumference(&p).unwrap().length, 9);
    assert_eq!(naive_spectrum(&p), BTreeSet::from([5, 6, 8, 9]));
    let outer: VertexSet = (0..5).collect();
    assert_eq!(p.induced_subgraph(&outer).unwrap().0, SimpleGraph::cycle(5));
}

/// Every cycle length, by extending simple paths from their smallest vertex.
fn naive_spectrum(g: &SimpleGraph) -> BTreeSet<usize> {
    fn walk(g: &SimpleGraph, start: usize, v: usize, used: &mut Vec<bool>, len: usize, out: &mut BTreeSet<usize>) {
        for w in g.neighbors(v) {
            if w == start && len >= 3 {
                out.insert(len);
            }
            if w > start && !used[w] {
                used[w] = true;
                walk(g, start, w, used, len + 1, out);
                used[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.n() {
        let mut used = vec![false; g.n()];
        used[s] = true;
        walk(g, s, s, &mut used, 1, &mut out);
    }
    out
}

/// Shortest cycle length read off the naive spectrum.
fn naive_girth(g: &SimpleGraph) -> Option<usize> {
    let spectrum = naive_spectrum(g);
    spectrum.first().copied()
}

#[test]
fn spectrum_matches_naive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..400 {
        let n = rng.gen_range(0..=9);
        let p: f64 = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let spectrum = cycle_spectrum(&g).unwrap();
        assert_eq!(spectrum, naive_spectrum(&g), "{g:?}");
        let c = circumference(&g).unwrap();
        assert_eq!(c.length, spectrum.last().copied().unwrap_or(0));
        if let Some(w) = &c.witness {
            assert!(w.is_valid_in(&g) && w.len() == c.length);
        }
        assert_eq!(girth(&g).map(|x| x.0), naive_girth(&g));
        for k in 3..=n {
            let found = has_cycle_of_length(&g, k).unwrap();
            assert_eq!(found.is_some(), spectrum.contains(&k));
            if let Some(cyc) = found {
                assert!(cyc.is_valid_in(&g) && cyc.len() == k);
            }
        }
    }
}

/// `max_S q(G - S) - |S|` by trying every subset, counting components directly.
fn brute_tutte_berge(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut best = 0i64;
    for s in 0u32..1 << n {
        let mut seen = vec![false; n];
        let mut odd = 0;
        for v in 0..n {
            if s >> v & 1 == 1 || seen[v] {
                continue;
            }
            let mut stack = vec![v];
            seen[v] = true;
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for y in g.neighbors(x) {
                    if s >> y & 1 == 0 && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            odd += size % 2;
        }
        best = best.max(odd as i64 - s.count_ones() as i64);
    }
    best as usize
}

#[test]
fn tutte_berge_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(0..=12);
        let p: f64 = rng.gen_range(0.05..0.6);
        let g = random_graph(&mut rng, n, p);
        let w = berge_deficiency(&g).unwrap();
        assert_eq!(w.deficiency, brute_tutte_berge(&g), "{g:?}");
        let q = odd_components_after_removal(&g, &w.witness_set).unwrap();
        assert_eq!(q - w.witness_set.len(), w.deficiency);
    }
}

#[test]
fn fan_reduction_matches_neighborhood_matching() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let p: f64 = rng.gen();
        let g = random_graph(&mut rng, n, p);
        for v in 0..n {
            let (count, fan) = max_fan_blades(&g, v).unwrap();
            assert!(fan.is_valid_in(&g));
            let hood = g.row(v)[0];
            assert_eq!(count, brute_matching(&masks(&g), hood));
        }
    }
}
