//! Exact cycle lengths inside one block by dynamic programming over vertex
//! subsets, plus a rotation/extension heuristic for blocks that are too
//! large for the exact program.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;

/// Blocks up to this order are handled exactly.
pub const EXACT_BLOCK_LIMIT: usize = 24;

/// For each cycle length found in the graph, one cycle of that length.
///
/// `target` restricts the search to one length and stops at the first hit.
/// Cycles are rooted at their smallest vertex `s`: `ends[mask]` holds the
/// vertices `v` such that some path from `s` visits exactly `{s} ∪ mask`
/// and finishes at `v`, where `mask` ranges over vertices above `s`.
pub(crate) fn cycles_by_length(adj: &[u32], target: Option<usize>) -> BTreeMap<usize, Vec<usize>> {
    let k = adj.len();
    assert!(k <= EXACT_BLOCK_LIMIT);
    let mut found = BTreeMap::new();
    if k < 3 {
        return found;
    }
    let max_len = target.unwrap_or(k);
    let mut ends = vec![0u32; 1 << (k - 1)];
    for s in 0..k.saturating_sub(2) {
        let width = k - s - 1;
        let shift = s + 1;
        let above = adj[s] >> shift;
        if above.count_ones() < 2 {
            continue;
        }
        let slots = 1usize << width;
        ends[..slots].fill(0);
        for v in 0..width {
            if above >> v & 1 == 1 {
                ends[1 << v] = 1 << v;
            }
        }
        // ends[] is indexed by relative masks; relative bit i is vertex s + 1 + i.
        let rel = |v: usize| adj[v] >> shift;
        for mask in 1..slots {
            let e = ends[mask];
            if e == 0 {
                continue;
            }
            let len = mask.count_ones() as usize + 1;
            if len >= 3 && e & above != 0 && (target.is_none() || target == Some(len)) && !found.contains_key(&len) {
                let end = (e & above).trailing_zeros() as usize;
                found.insert(len, reconstruct(&ends, &adj_rel(adj, shift), s, mask, end));
                if target.is_some() {
                    return found;
                }
            }
            if len >= max_len {
                continue;
            }
            let mut free = !(mask as u32) & ((1u32 << width) - 1);
            while free != 0 {
                let w = free.trailing_zeros() as usize;
                free &= free - 1;
                if rel(w + shift) & e != 0 {
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    found
}

fn adj_rel(adj: &[u32], shift: usize) -> Vec<u32> {
    adj[shift..].iter().map(|&a| a >> shift).collect()
}

fn reconstruct(ends: &[u32], rel: &[u32], s: usize, mask: usize, end: usize) -> Vec<usize> {
    let shift = s + 1;
    let mut path = vec![end];
    let mut mask = mask;
    let mut v = end;
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        let prev = (ends[mask] & rel[v]).trailing_zeros() as usize;
        path.push(prev);
        v = prev;
    }
    let mut cycle = vec![s];
    cycle.extend(path.iter().rev().map(|&v| v + shift));
    cycle
}

/// A long cycle found by greedy path growth with Pósa rotations, tried
/// from every start vertex. A lower bound on the circumference only.
pub(crate) fn heuristic_long_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        let path = grow_path(g, start);
        if let Some(cycle) = best_cycle_on_path(g, &path) {
            if best.as_ref().is_none_or(|b| cycle.len() > b.len()) {
                best = Some(cycle);
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == n) {
            break;
        }
    }
    best
}

fn grow_path(g: &SimpleGraph, start: usize) -> Vec<usize> {
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = vec![start];
    on_path[start] = true;
    let mut rotations = 0;
    let rotation_limit = 4 * n;
    loop {
        let end = *path.last().expect("nonempty");
        // Extend toward the unvisited neighbor with the fewest unvisited neighbors.
        let next = g
            .neighbors(end)
            .filter(|&w| !on_path[w])
            .min_by_key(|&w| (g.neighbors(w).filter(|&x| !on_path[x]).count(), w));
        if let Some(w) = next {
            on_path[w] = true;
            path.push(w);
            continue;
        }
        if rotations >= rotation_limit {
            break;
        }
        // Rotate: end is adjacent to path[i]; reverse the tail after i.
        let len = path.len();
        let pivot = (0..len.saturating_sub(2))
            .rev()
            .find(|&i| g.has_edge(end, path[i]) && g.neighbors(path[i + 1]).any(|w| !on_path[w]));
        match pivot {
            Some(i) => {
                path[i + 1..].reverse();
                rotations += 1;
            }
            None => break,
        }
    }
    path
}

fn best_cycle_on_path(g: &SimpleGraph, path: &[usize]) -> Option<Vec<usize>> {
    let mut best: Option<(usize, usize)> = None;
    for i in 0..path.len() {
        if let Some(j) = (i + 2..path.len()).rev().find(|&j| g.has_edge(path[i], path[j])) {
            if best.is_none_or(|(a, b)| j - i > b - a) {
                best = Some((i, j));
            }
        }
    }
    best.map(|(i, j)| path[i..=j].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks(g: &SimpleGraph) -> Vec<u32> {
        g.to_masks().unwrap().into_iter().map(|m| m as u32).collect()
    }

    #[test]
    fn petersen_lengths() {
        let found = cycles_by_length(&masks(&SimpleGraph::petersen()), None);
        assert_eq!(found.keys().copied().collect::<Vec<_>>(), [5, 6, 8, 9]);
        for (len, cycle) in &found {
            assert_eq!(cycle.len(), *len);
        }
    }

    #[test]
    fn target_stops_early() {
        let found = cycles_by_length(&masks(&SimpleGraph::complete(6)), Some(4));
        assert_eq!(found.len(), 1);
        assert_eq!(found[&4].len(), 4);
    }

    #[test]
    fn heuristic_finds_hamiltonian_cycle_of_a_cycle() {
        let c = heuristic_long_cycle(&SimpleGraph::cycle(40)).unwrap();
        assert_eq!(c.len(), 40);
    }
}
