//! Graphs up to isomorphism on a few vertices, for exhaustive sweeps.
//!
//! Canonical forms come from individualization and refinement: refine an
//! ordered partition to an equitable one, branch on the vertices of the
//! first non-singleton cell, and keep the largest adjacency code over all
//! discrete leaves. Twin vertices in the branching cell are interchangeable,
//! so only one per twin class is tried.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Codes pack the upper triangle into a `u64`.
pub const MAX_CANONICAL_ORDER: usize = 11;

type Partition = Vec<Vec<usize>>;

fn refine(adj: &[u64], mut cells: Partition) -> Partition {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: usize| (adj[v] & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut cell = core::mem::take(&mut cells[c]);
                cell.sort_by_key(|&v| (count(v), v));
                let mut fragments: Partition = Vec::new();
                for v in cell {
                    match fragments.last_mut() {
                        Some(f) if count(f[0]) == count(v) => f.push(v),
                        _ => fragments.push(vec![v]),
                    }
                }
                cells.splice(c..=c, fragments);
                continue 'outer;
            }
        }
        return cells;
    }
}

fn code(adj: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | (adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn search(adj: &[u64], cells: Partition, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let k = code(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| k > *b) {
            *best = Some((k, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = tried.iter().any(|&u| {
            let pair = 1u64 << u | 1u64 << v;
            adj[u] & !pair == adj[v] & !pair
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(adj, next, best);
    }
}

/// Canonical labelling: `order[i]` is the vertex placed at position `i`.
fn canonical_order(g: &SimpleGraph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge { size: n, limit: MAX_CANONICAL_ORDER });
    }
    let adj = g.to_masks().expect("small graph");
    let mut best = None;
    search(&adj, vec![(0..n).collect()], &mut best);
    Ok(best.unwrap_or((0, Vec::new())))
}

/// An isomorphism invariant that determines the graph up to isomorphism.
pub fn canonical_code(g: &SimpleGraph) -> Result<u64> {
    Ok(canonical_order(g)?.0)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &SimpleGraph) -> Result<SimpleGraph> {
    let (_, order) = canonical_order(g)?;
    let mut h = SimpleGraph::new(g.n());
    for (i, &u) in order.iter().enumerate() {
        for (j, &v) in order.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j);
            }
        }
    }
    Ok(h)
}

/// One representative per isomorphism class for every order `0..=max_n`.
/// Level `n` is produced by adding a vertex to each level `n - 1` graph in
/// every possible way.
pub fn graphs_up_to_isomorphism(max_n: usize) -> Result<Vec<Vec<SimpleGraph>>> {
    if max_n > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge { size: max_n, limit: MAX_CANONICAL_ORDER });
    }
    let mut levels = vec![vec![SimpleGraph::new(0)]];
    for n in 1..=max_n {
        let mut seen = BTreeSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 1] {
            let base = g.to_masks().expect("small graph");
            for hood in 0u64..1 << (n - 1) {
                let mut rows = base.clone();
                rows.push(hood);
                for (v, row) in rows.iter_mut().enumerate().take(n - 1) {
                    *row |= (hood >> v & 1) << (n - 1);
                }
                let h = SimpleGraph::from_masks(&rows);
                let (k, _) = canonical_order(&h)?;
                if seen.insert(k) {
                    level.push(canonical_form(&h)?);
                }
            }
        }
        levels.push(level);
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_six() {
        let levels = graphs_up_to_isomorphism(6).unwrap();
        let counts: Vec<usize> = levels.iter().map(|l| l.len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn relabelled_graphs_share_a_code() {
        let p = SimpleGraph::petersen();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let mut q = SimpleGraph::new(10);
        for (u, v) in p.edges() {
            q.add_edge(perm[u], perm[v]);
        }
        assert_eq!(canonical_code(&p).unwrap(), canonical_code(&q).unwrap());
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        assert_ne!(
            canonical_code(&SimpleGraph::cycle(6)).unwrap(),
            canonical_code(&SimpleGraph::disjoint_cliques(&[3, 3])).unwrap()
        );
    }
}
