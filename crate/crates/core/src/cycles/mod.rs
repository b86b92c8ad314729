//! Cycle structure: girth, circumference, cycles of a given length, the
//! cycle spectrum, 2-connectivity, and checkers for Dirac's circumference
//! bound and Bondy's pancyclicity theorem.
//!
//! Every cycle lies inside a single block (maximal 2-connected piece), so the
//! exact routines split the graph into blocks and run a subset dynamic
//! program on each block of order at most [`EXACT_BLOCK_LIMIT`]. Complete
//! blocks are answered directly.

mod longest;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::lemmas::CheckStatus;

pub use longest::EXACT_BLOCK_LIMIT;

const NONE: usize = usize::MAX;

/// A cycle given by its vertices in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct CycleEmbedding {
    pub vertices: Vec<usize>,
}

impl CycleEmbedding {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        let k = self.vertices.len();
        let distinct: BTreeSet<usize> = self.vertices.iter().copied().collect();
        k >= 3 && distinct.len() == k && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    fn relabel(mut self, map: &[usize]) -> Self {
        for v in &mut self.vertices {
            *v = map[*v];
        }
        self
    }
}

/// Shortest cycle, or `None` for a forest.
pub fn girth(g: &SimpleGraph) -> Option<(usize, CycleEmbedding)> {
    let n = g.n();
    let mut best: Option<(usize, usize, usize, usize)> = None;
    let mut dist = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        bfs(g, root, &mut dist, &mut parent, &mut queue);
        for (u, w) in g.edges() {
            if dist[u] == NONE || dist[w] == NONE || parent[u] == w || parent[w] == u {
                continue;
            }
            let len = dist[u] + dist[w] + 1;
            if best.is_none_or(|(b, ..)| len < b) {
                best = Some((len, root, u, w));
            }
        }
        if best.is_some_and(|(b, ..)| b == 3) {
            break;
        }
    }
    let (len, root, u, w) = best?;
    // At a root achieving the minimum the two tree paths share only the root.
    bfs(g, root, &mut dist, &mut parent, &mut queue);
    let walk = |mut v: usize| {
        let mut p = vec![v];
        while v != root {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let mut vertices = walk(u);
    vertices.reverse();
    let mut back = walk(w);
    back.pop();
    vertices.extend(back);
    let cycle = CycleEmbedding { vertices };
    debug_assert!(cycle.len() == len && cycle.is_valid_in(g));
    Some((len, cycle))
}

fn bfs(g: &SimpleGraph, root: usize, dist: &mut [usize], parent: &mut [usize], queue: &mut VecDeque<usize>) {
    dist.fill(NONE);
    parent.fill(NONE);
    dist[root] = 0;
    queue.clear();
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == NONE {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
}

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks with at least one edge, in discovery order.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

pub fn blocks(g: &SimpleGraph) -> BlockDecomposition {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // Frames: (vertex, parent, next neighbor index).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        stack.push((root, NONE, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, p, idx) = *frame;
            if idx < adj[v].len() {
                frame.2 += 1;
                let w = adj[v][idx];
                if disc[w] == NONE {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if p == NONE {
                continue;
            }
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                if p != root {
                    is_cut[p] = true;
                }
                let mut members = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    members.push(a);
                    members.push(b);
                    if (a, b) == (p, v) {
                        break;
                    }
                }
                blocks.push(VertexSet::from(members));
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    BlockDecomposition { blocks, cut_vertices: (0..n).filter(|&v| is_cut[v]).collect() }
}

/// One cycle for every length found in the graph.
struct Spectrum {
    witnesses: BTreeMap<usize, CycleEmbedding>,
    exact: bool,
}

/// Cycles inside a block of order `k`, relabelled to `g`.
fn block_cycles(
    g: &SimpleGraph,
    block: &VertexSet,
    target: Option<usize>,
    heuristic: bool,
) -> Result<(BTreeMap<usize, CycleEmbedding>, bool)> {
    let (h, map) = g.induced_subgraph(block)?;
    let k = h.n();
    let mut out = BTreeMap::new();
    if k < 3 {
        return Ok((out, true));
    }
    if h.is_complete() {
        let lengths: Vec<usize> = match target {
            Some(t) if t <= k => vec![t],
            Some(_) => vec![],
            None => (3..=k).collect(),
        };
        for len in lengths {
            out.insert(len, CycleEmbedding { vertices: map[..len].to_vec() });
        }
        return Ok((out, true));
    }
    if k <= EXACT_BLOCK_LIMIT {
        let masks: Vec<u32> = h.to_masks().expect("small block").into_iter().map(|m| m as u32).collect();
        for (len, cycle) in longest::cycles_by_length(&masks, target) {
            out.insert(len, CycleEmbedding { vertices: cycle }.relabel(&map));
        }
        return Ok((out, true));
    }
    if !heuristic {
        return Err(Error::TooLarge { size: k, limit: EXACT_BLOCK_LIMIT });
    }
    if let Some(cycle) = longest::heuristic_long_cycle(&h) {
        let cycle = CycleEmbedding { vertices: cycle }.relabel(&map);
        if target.is_none_or(|t| t == cycle.len()) {
            out.insert(cycle.len(), cycle);
        }
    }
    Ok((out, false))
}

fn spectrum_of(g: &SimpleGraph, heuristic: bool) -> Result<Spectrum> {
    let mut witnesses = BTreeMap::new();
    let mut exact = true;
    for block in blocks(g).blocks {
        let (found, block_exact) = block_cycles(g, &block, None, heuristic)?;
        exact &= block_exact;
        for (len, cycle) in found {
            witnesses.entry(len).or_insert(cycle);
        }
    }
    Ok(Spectrum { witnesses, exact })
}

/// Longest cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Circumference {
    /// Length of a longest cycle; 0 for a forest.
    pub length: usize,
    pub witness: Option<CycleEmbedding>,
    /// False when some block was too large and only a heuristic lower bound was found.
    pub exact: bool,
}

/// Exact circumference; fails when a non-complete block exceeds [`EXACT_BLOCK_LIMIT`].
pub fn circumference(g: &SimpleGraph) -> Result<Circumference> {
    circumference_with(g, false)
}

/// Circumference; with `heuristic` set, oversized blocks contribute a
/// rotation/extension lower bound and the result is marked inexact.
pub fn circumference_with(g: &SimpleGraph, heuristic: bool) -> Result<Circumference> {
    let Spectrum { witnesses, exact } = spectrum_of(g, heuristic)?;
    Ok(match witnesses.into_iter().next_back() {
        Some((length, cycle)) => Circumference { length, witness: Some(cycle), exact },
        None => Circumference { length: 0, witness: None, exact },
    })
}

/// A cycle of length exactly `k`, if one exists.
pub fn has_cycle_of_length(g: &SimpleGraph, k: usize) -> Result<Option<CycleEmbedding>> {
    if k < 3 {
        return Err(Error::InvalidParameter("cycle length must be at least 3".into()));
    }
    for block in blocks(g).blocks.into_iter().filter(|b| b.len() >= k) {
        let (mut found, _) = block_cycles(g, &block, Some(k), false)?;
        if let Some(cycle) = found.remove(&k) {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

/// All lengths `k` such that the graph contains a cycle of length `k`.
pub fn cycle_spectrum(g: &SimpleGraph) -> Result<BTreeSet<usize>> {
    Ok(spectrum_of(g, false)?.witnesses.into_keys().collect())
}

/// Whether the spectrum is the full interval from girth to circumference.
pub fn is_weakly_pancyclic(g: &SimpleGraph) -> Result<bool> {
    let spectrum = cycle_spectrum(g)?;
    Ok(match (spectrum.first(), spectrum.last()) {
        (Some(&lo), Some(&hi)) => spectrum.len() == hi - lo + 1,
        _ => true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum TwoConnectivity {
    TwoConnected,
    /// Fewer than three vertices.
    TooSmall,
    Disconnected,
    CutVertex(usize),
}

impl TwoConnectivity {
    pub fn holds(self) -> bool {
        self == TwoConnectivity::TwoConnected
    }
}

/// 2-connectivity; graphs on fewer than three vertices count as not 2-connected.
pub fn is_two_connected(g: &SimpleGraph) -> TwoConnectivity {
    if g.n() < 3 {
        return TwoConnectivity::TooSmall;
    }
    if !g.is_connected() {
        return TwoConnectivity::Disconnected;
    }
    match blocks(g).cut_vertices.iter().next() {
        Some(v) => TwoConnectivity::CutVertex(v),
        None => TwoConnectivity::TwoConnected,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct DiracReport {
    pub status: CheckStatus,
    pub n: usize,
    pub min_degree: usize,
    /// `min(2δ, n)`.
    pub bound: usize,
    pub circumference: Option<usize>,
    pub witness: Option<CycleEmbedding>,
}

/// Checks `c(G) >= min(2δ, n)` on a 2-connected graph.
pub fn check_dirac(g: &SimpleGraph) -> Result<DiracReport> {
    let n = g.n();
    let min_degree = g.min_degree();
    let bound = (2 * min_degree).min(n);
    let connectivity = is_two_connected(g);
    if !connectivity.holds() {
        return Ok(DiracReport {
            status: CheckStatus::HypothesisNotMet("graph is not 2-connected".to_string()),
            n,
            min_degree,
            bound,
            circumference: None,
            witness: None,
        });
    }
    let c = circumference(g)?;
    Ok(DiracReport {
        status: if c.length >= bound { CheckStatus::Holds } else { CheckStatus::Violated },
        n,
        min_degree,
        bound,
        circumference: Some(c.length),
        witness: c.witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum BondyVerdict {
    Pancyclic,
    /// The graph is `K_{r,r}`.
    ExceptionKrr {
        r: usize,
    },
    HypothesisNotMet,
    /// Minimum degree at least n/2, not `K_{r,r}`, yet some length in `3..=n` is missing.
    Violated {
        missing: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct BondyReport {
    pub verdict: BondyVerdict,
    pub n: usize,
    pub min_degree: usize,
    pub spectrum: Option<BTreeSet<usize>>,
}

/// `K_{r,r}` recognised structurally: the complement is two disjoint cliques of order r.
pub fn balanced_complete_bipartite_order(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let complement = g.complement();
    let parts = complement.components();
    let r = n / 2;
    let is_krr = parts.len() == 2
        && parts
            .iter()
            .all(|p| p.len() == r && complement.induced_subgraph(p).map(|(h, _)| h.is_complete()).unwrap_or(false));
    is_krr.then_some(r)
}

/// Bondy: `δ(G) >= n/2` implies pancyclic unless `G = K_{r,r}`.
pub fn check_bondy(g: &SimpleGraph) -> Result<BondyReport> {
    let n = g.n();
    let min_degree = g.min_degree();
    let report = |verdict, spectrum| BondyReport { verdict, n, min_degree, spectrum };
    if n == 0 || 2 * min_degree < n {
        return Ok(report(BondyVerdict::HypothesisNotMet, None));
    }
    if let Some(r) = balanced_complete_bipartite_order(g) {
        return Ok(report(BondyVerdict::ExceptionKrr { r }, None));
    }
    let spectrum = cycle_spectrum(g)?;
    let missing: Vec<usize> = (3..=n).filter(|k| !spectrum.contains(k)).collect();
    let verdict = if missing.is_empty() { BondyVerdict::Pancyclic } else { BondyVerdict::Violated { missing } };
    Ok(report(verdict, Some(spectrum)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&SimpleGraph::complete(4)).unwrap().0, 3);
        let (len, cycle) = girth(&SimpleGraph::petersen()).unwrap();
        assert_eq!(len, 5);
        assert!(cycle.is_valid_in(&SimpleGraph::petersen()));
        assert!(girth(&SimpleGraph::path(6)).is_none());
        assert!(girth(&SimpleGraph::star(4).disjoint_union(&SimpleGraph::path(3))).is_none());
        assert_eq!(girth(&SimpleGraph::cycle(7)).unwrap().1.len(), 7);
    }

    #[test]
    fn circumference_examples() {
        assert_eq!(circumference(&SimpleGraph::complete_bipartite(3, 3)).unwrap().length, 6);
        let c = circumference(&SimpleGraph::petersen()).unwrap();
        assert_eq!(c.length, 9);
        assert!(c.witness.unwrap().is_valid_in(&SimpleGraph::petersen()));
        let p4 = circumference(&SimpleGraph::path(4)).unwrap();
        assert_eq!((p4.length, p4.witness), (0, None));
    }

    #[test]
    fn fixed_length_examples() {
        let c = has_cycle_of_length(&SimpleGraph::complete(5), 4).unwrap().unwrap();
        assert!(c.len() == 4 && c.is_valid_in(&SimpleGraph::complete(5)));
        assert!(has_cycle_of_length(&SimpleGraph::cycle(7), 6).unwrap().is_none());
        assert!(has_cycle_of_length(&SimpleGraph::petersen(), 10).unwrap().is_none());
        assert!(has_cycle_of_length(&SimpleGraph::petersen(), 9).unwrap().is_some());
        assert!(has_cycle_of_length(&SimpleGraph::petersen(), 2).is_err());
    }

    #[test]
    fn spectrum_examples() {
        let s = |g: &SimpleGraph| cycle_spectrum(g).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(s(&SimpleGraph::complete(5)), [3, 4, 5]);
        assert_eq!(s(&SimpleGraph::complete_bipartite(3, 3)), [4, 6]);
        assert_eq!(s(&SimpleGraph::petersen()), [5, 6, 8, 9]);
        assert!(!is_weakly_pancyclic(&SimpleGraph::petersen()).unwrap());
        assert!(is_weakly_pancyclic(&SimpleGraph::complete(5)).unwrap());
    }

    #[test]
    fn two_connectivity_examples() {
        assert_eq!(is_two_connected(&SimpleGraph::cycle(5)), TwoConnectivity::TwoConnected);
        let bowtie = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(is_two_connected(&bowtie), TwoConnectivity::CutVertex(2));
        assert_eq!(is_two_connected(&SimpleGraph::path(3)), TwoConnectivity::CutVertex(1));
        assert_eq!(is_two_connected(&SimpleGraph::complete(2)), TwoConnectivity::TooSmall);
        assert_eq!(is_two_connected(&SimpleGraph::disjoint_cliques(&[3, 3])), TwoConnectivity::Disconnected);
    }

    #[test]
    fn block_decomposition_of_bowtie_with_tail() {
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let d = blocks(&g);
        let mut sets = d.blocks.clone();
        sets.sort();
        assert_eq!(sets, [VertexSet::from([0, 1, 2]), VertexSet::from([2, 3, 4]), VertexSet::from([4, 5])]);
        assert_eq!(d.cut_vertices, VertexSet::from([2, 4]));
    }

    #[test]
    fn dirac_examples() {
        let r = check_dirac(&SimpleGraph::complete(4)).unwrap();
        assert_eq!((r.bound, r.circumference, r.status), (4, Some(4), CheckStatus::Holds));
        let r = check_dirac(&SimpleGraph::cycle(5)).unwrap();
        assert_eq!((r.bound, r.circumference), (4, Some(5)));
        let r = check_dirac(&SimpleGraph::petersen()).unwrap();
        assert_eq!((r.bound, r.circumference, r.status), (6, Some(9), CheckStatus::Holds));
        assert!(matches!(check_dirac(&SimpleGraph::path(4)).unwrap().status, CheckStatus::HypothesisNotMet(_)));
    }

    #[test]
    fn bondy_examples() {
        assert_eq!(check_bondy(&SimpleGraph::complete(5)).unwrap().verdict, BondyVerdict::Pancyclic);
        assert_eq!(
            check_bondy(&SimpleGraph::complete_bipartite(3, 3)).unwrap().verdict,
            BondyVerdict::ExceptionKrr { r: 3 }
        );
        assert_eq!(check_bondy(&SimpleGraph::cycle(4)).unwrap().verdict, BondyVerdict::ExceptionKrr { r: 2 });
        assert_eq!(check_bondy(&SimpleGraph::cycle(5)).unwrap().verdict, BondyVerdict::HypothesisNotMet);
    }

    #[test]
    fn large_complete_blocks_skip_the_subset_program() {
        let g = SimpleGraph::complete(40);
        assert_eq!(circumference(&g).unwrap().length, 40);
        assert!(has_cycle_of_length(&g, 33).unwrap().unwrap().is_valid_in(&g));
        let big = SimpleGraph::cycle(30);
        assert!(matches!(circumference(&big), Err(Error::TooLarge { size: 30, .. })));
        let h = circumference_with(&big, true).unwrap();
        assert_eq!((h.length, h.exact), (30, false));
    }
}
