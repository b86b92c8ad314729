//! Maximum matchings in general graphs and the quantities built on them:
//! Tutte–Berge and Hall deficiencies, connected matchings, and fans.
//!
//! A fan with center `v` is a matching inside the neighborhood of `v`, so
//! the largest fan at `v` has exactly `ν(G[N(v)])` blades.

mod blossom;

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

pub(crate) use blossom::Blossom;

/// Vertex-disjoint edges `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Every edge present in `g` and no vertex used twice.
    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        let covered = self.vertices();
        covered.len() == 2 * self.edges.len() && self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }

    fn relabel(&self, map: &[usize]) -> Matching {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (map[u], map[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Matching { edges }
    }
}

/// Size of a maximum matching, `ν(G)`.
pub fn matching_number(g: &SimpleGraph) -> usize {
    Blossom::maximum(g).size()
}

/// A maximum matching; among all maximum matchings the one whose sorted
/// edge list is lexicographically smallest.
pub fn max_matching(g: &SimpleGraph) -> Matching {
    let mut state = Blossom::maximum(g);
    let mut edges = Vec::with_capacity(state.size());
    for u in 0..g.n() {
        if !state.is_alive(u) {
            continue;
        }
        let mut chosen = false;
        for v in g.neighbors(u).filter(|&v| v > u) {
            if !state.is_alive(v) {
                continue;
            }
            let mut trial = state.clone();
            if trial.try_remove_edge_ends(u, v) {
                state = trial;
                edges.push((u, v));
                chosen = true;
                break;
            }
        }
        if !chosen {
            // No maximum matching of the remaining graph covers u.
            debug_assert!(state.mate(u).is_none());
            state.delete(u);
        }
    }
    Matching { edges }
}

/// A matching whose edges all lie in one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ConnectedMatching {
    pub size: usize,
    pub component: VertexSet,
    pub matching: Matching,
}

/// The largest connected matching: the best maximum matching over the
/// components (first component in `components()` order on ties).
pub fn connected_matching_number(g: &SimpleGraph) -> ConnectedMatching {
    let mut best = ConnectedMatching { size: 0, component: VertexSet::new(), matching: Matching::default() };
    for (i, comp) in g.components().into_iter().enumerate() {
        // Components come largest first; a component of order s carries at most s/2 edges.
        if i > 0 && comp.len() / 2 <= best.size {
            break;
        }
        let (sub, map) = g.induced_subgraph(&comp).expect("component in range");
        if i == 0 || matching_number(&sub) > best.size {
            let m = max_matching(&sub);
            if i == 0 || m.size() > best.size {
                best = ConnectedMatching { size: m.size(), component: comp, matching: m.relabel(&map) };
            }
        }
    }
    best
}

/// Number of odd-order components of `G - S`.
pub fn odd_components_after_removal(g: &SimpleGraph, s: &VertexSet) -> Result<usize> {
    s.check_range(g.n())?;
    let keep: VertexSet = (0..g.n()).filter(|&v| !s.contains(v)).collect();
    let (rest, _) = g.induced_subgraph(&keep)?;
    Ok(rest.components().iter().filter(|c| c.len() % 2 == 1).count())
}

/// A set `S` attaining the Tutte–Berge maximum of `q(G - S) - |S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct DeficiencyWitness {
    /// `|V| - 2ν(G)`.
    pub deficiency: usize,
    pub witness_set: VertexSet,
    /// `q(G - S)` for the witness set.
    pub odd_components: usize,
    /// Whether the set came from the exhaustive subset search.
    pub exhaustive: bool,
}

/// Largest order for which the Tutte–Berge witness is found by trying every subset.
pub const EXHAUSTIVE_DEFICIENCY_LIMIT: usize = 20;

/// Tutte–Berge deficiency `|V| - 2ν(G)` with a set `S` attaining
/// `q(G - S) - |S|`. For `n <= 20` subsets are tried by increasing size
/// (lexicographic within a size) and the first attaining set is returned;
/// larger graphs use the Gallai–Edmonds set `A(G)`.
pub fn berge_deficiency(g: &SimpleGraph) -> Result<DeficiencyWitness> {
    let n = g.n();
    let deficiency = n - 2 * matching_number(g);
    if n <= EXHAUSTIVE_DEFICIENCY_LIMIT {
        let masks = g.to_masks().expect("small graph");
        let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
        let mut best: Option<(isize, u32, usize)> = None;
        'sizes: for k in 0..=n {
            for s in subsets_of_size(n, k) {
                let q = odd_components_mask(&masks, full & !s);
                let value = q as isize - k as isize;
                if best.is_none_or(|(b, _, _)| value > b) {
                    best = Some((value, s, q));
                    if value == deficiency as isize {
                        break 'sizes;
                    }
                }
            }
        }
        let (_, s, q) = best.expect("at least the empty set");
        return Ok(DeficiencyWitness {
            deficiency,
            witness_set: (0..n).filter(|&v| s >> v & 1 == 1).collect(),
            odd_components: q,
            exhaustive: true,
        });
    }
    let witness_set = gallai_edmonds_barrier(g);
    let odd_components = odd_components_after_removal(g, &witness_set)?;
    if odd_components < witness_set.len() || odd_components - witness_set.len() != deficiency {
        return Err(Error::InvalidParameter(alloc::format!(
            "Gallai-Edmonds barrier failed to certify deficiency {deficiency}"
        )));
    }
    Ok(DeficiencyWitness { deficiency, witness_set, odd_components, exhaustive: false })
}

/// `A(G)`: neighbors of the vertices missed by some maximum matching,
/// excluding those vertices themselves.
pub fn gallai_edmonds_barrier(g: &SimpleGraph) -> VertexSet {
    let base = Blossom::maximum(g);
    let missable: Vec<bool> = (0..g.n())
        .map(|v| match base.mate(v) {
            None => true,
            Some(_) => {
                let mut trial = base.clone();
                let partner = trial.delete(v).expect("matched");
                trial.augment_from(partner)
            }
        })
        .collect();
    (0..g.n()).filter(|&v| !missable[v] && g.neighbors(v).any(|u| missable[u])).collect()
}

/// Iterates the `k`-subsets of `0..n` as bitmasks in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1 << n;
    let mut next: Option<u64> = if k <= n { Some((1u64 << k) - 1) } else { None };
    core::iter::from_fn(move || {
        let s = next?;
        if s >= limit {
            return None;
        }
        next = if s == 0 {
            None
        } else {
            let c = s & s.wrapping_neg();
            let r = s + c;
            Some((((r ^ s) >> 2) / c) | r)
        };
        Some(s as u32)
    })
}

fn odd_components_mask(masks: &[u64], mut remaining: u32) -> usize {
    let mut odd = 0;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = (masks[v] as u32) & remaining & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        remaining &= !comp;
        odd += (comp.count_ones() % 2) as usize;
    }
    odd
}

/// Hall deficiency of a bipartite graph with parts `X`, `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct HallDeficiency {
    /// `max(0, max_{S ⊆ X} |S| - |N(S)|)`, which equals `|X| - ν(G)`.
    pub deficiency: usize,
    /// A subset of `X` attaining the maximum (empty when the deficiency is 0).
    pub violator: VertexSet,
    pub matching: Matching,
}

/// Hall deficiency of `g` with respect to the parts `x` and `y`. Every edge
/// of `g` must join `x` to `y`.
pub fn hall_deficiency(g: &SimpleGraph, x: &VertexSet, y: &VertexSet) -> Result<HallDeficiency> {
    x.check_range(g.n())?;
    y.check_range(g.n())?;
    if let Some(v) = x.iter().find(|&v| y.contains(v)) {
        return Err(Error::OverlappingSets(v));
    }
    if let Some((u, v)) =
        g.edges().find(|&(u, v)| !((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u))))
    {
        return Err(Error::NotBipartite(u, v));
    }
    let state = Blossom::maximum(g);
    let size = state.size();
    // X-vertices reachable from unmatched X-vertices by alternating paths.
    let mut reached = alloc::vec![false; g.n()];
    let mut stack: Vec<usize> = x.iter().filter(|&v| state.mate(v).is_none()).collect();
    for &v in &stack {
        reached[v] = true;
    }
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if let Some(next) = state.mate(w) {
                if !reached[next] {
                    reached[next] = true;
                    stack.push(next);
                }
            }
        }
    }
    Ok(HallDeficiency {
        deficiency: x.len() - size,
        violator: x.iter().filter(|&v| reached[v]).collect(),
        matching: Matching { edges: state.pairs() },
    })
}

/// Triangles `center-x-y` sharing the center; `(x, y)` are the blades.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct FanEmbedding {
    pub center: usize,
    pub blades: Vec<(usize, usize)>,
}

impl FanEmbedding {
    pub fn blade_count(&self) -> usize {
        self.blades.len()
    }

    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        let blades = Matching { edges: self.blades.clone() };
        self.center < g.n()
            && blades.is_valid_in(g)
            && !blades.vertices().contains(self.center)
            && self.blades.iter().all(|&(x, y)| g.has_edge(self.center, x) && g.has_edge(self.center, y))
    }

    /// Keeps only the first `k` blades.
    pub fn truncated(mut self, k: usize) -> FanEmbedding {
        self.blades.truncate(k);
        self
    }
}

fn neighborhood(g: &SimpleGraph, v: usize) -> VertexSet {
    g.neighbors(v).collect()
}

/// Largest number of blades of a fan centered at `v`, with a fan attaining it.
pub fn max_fan_blades(g: &SimpleGraph, v: usize) -> Result<(usize, FanEmbedding)> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let (sub, map) = g.induced_subgraph(&neighborhood(g, v))?;
    let m = max_matching(&sub).relabel(&map);
    Ok((m.size(), FanEmbedding { center: v, blades: m.edges }))
}

/// Blade counts of the largest fan at every center (sizes only).
pub fn fan_blade_profile(g: &SimpleGraph) -> Vec<usize> {
    (0..g.n())
        .map(|v| {
            let (sub, _) = g.induced_subgraph(&neighborhood(g, v)).expect("in range");
            matching_number(&sub)
        })
        .collect()
}

/// A fan with at least `blades` blades at the first center that has one.
pub fn find_fan(g: &SimpleGraph, blades: usize) -> Result<Option<FanEmbedding>> {
    if blades == 0 {
        return Err(Error::InvalidParameter("a fan needs at least one blade".into()));
    }
    for v in 0..g.n() {
        if g.degree(v) / 2 < blades {
            continue;
        }
        let (sub, _) = g.induced_subgraph(&neighborhood(g, v))?;
        if matching_number(&sub) >= blades {
            return Ok(Some(max_fan_blades(g, v)?.1));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_examples() {
        assert_eq!(max_matching(&SimpleGraph::complete(4)).size(), 2);
        assert_eq!(max_matching(&SimpleGraph::cycle(5)).size(), 2);
        let p = max_matching(&SimpleGraph::petersen());
        assert_eq!(p.size(), 5);
        assert!(p.is_valid_in(&SimpleGraph::petersen()));
        assert_eq!(max_matching(&SimpleGraph::new(0)).size(), 0);
    }

    #[test]
    fn canonical_matching_is_lexicographically_smallest() {
        assert_eq!(max_matching(&SimpleGraph::complete(4)).edges, [(0, 1), (2, 3)]);
        // C_6 has two perfect matchings; the smaller starts with (0,1).
        assert_eq!(max_matching(&SimpleGraph::cycle(6)).edges, [(0, 1), (2, 3), (4, 5)]);
        // Path 0-1-2-3: (0,1) then (2,3).
        assert_eq!(max_matching(&SimpleGraph::path(4)).edges, [(0, 1), (2, 3)]);
        // Star: the center pairs with its smallest leaf.
        assert_eq!(max_matching(&SimpleGraph::star(3)).edges, [(0, 1)]);
    }

    #[test]
    fn connected_matching_examples() {
        assert_eq!(connected_matching_number(&SimpleGraph::disjoint_cliques(&[2, 2])).size, 1);
        assert_eq!(connected_matching_number(&SimpleGraph::path(5)).size, 2);
        let c7 = connected_matching_number(&SimpleGraph::cycle(7));
        assert_eq!(c7.size, 3);
        assert_eq!(c7.component, VertexSet::range(7));
        // Larger component with a smaller matching loses.
        let g = SimpleGraph::star(4).disjoint_union(&SimpleGraph::complete(4));
        let cm = connected_matching_number(&g);
        assert_eq!(cm.size, 2);
        assert_eq!(cm.component, VertexSet::from([5, 6, 7, 8]));
        assert!(cm.matching.is_valid_in(&g));
    }

    #[test]
    fn berge_examples() {
        let w = berge_deficiency(&SimpleGraph::star(3)).unwrap();
        assert_eq!((w.deficiency, w.witness_set.clone()), (2, VertexSet::from([0])));
        let w = berge_deficiency(&SimpleGraph::complete(4)).unwrap();
        assert_eq!((w.deficiency, w.witness_set.len()), (0, 0));
        let w = berge_deficiency(&SimpleGraph::disjoint_cliques(&[3, 3, 3])).unwrap();
        assert_eq!((w.deficiency, w.witness_set.len(), w.odd_components), (3, 0, 3));
    }

    #[test]
    fn gallai_edmonds_path_for_large_graphs() {
        // 7 disjoint stars K_{1,3}: deficiency 14, barrier = the 7 centers.
        let g = (0..7).fold(SimpleGraph::new(0), |g, _| g.disjoint_union(&SimpleGraph::star(3)));
        let w = berge_deficiency(&g).unwrap();
        assert!(!w.exhaustive);
        assert_eq!(w.deficiency, 14);
        assert_eq!(w.witness_set, (0..7).map(|i| 4 * i).collect());
    }

    #[test]
    fn hall_examples() {
        let g = SimpleGraph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let h = hall_deficiency(&g, &VertexSet::from([0, 1]), &VertexSet::from([2])).unwrap();
        assert_eq!((h.deficiency, h.violator), (1, VertexSet::from([0, 1])));
        let c6 = SimpleGraph::cycle(6);
        let h = hall_deficiency(&c6, &VertexSet::from([0, 2, 4]), &VertexSet::from([1, 3, 5])).unwrap();
        assert_eq!((h.deficiency, h.violator.len()), (0, 0));
        let e = SimpleGraph::new(5);
        let h = hall_deficiency(&e, &VertexSet::from([0, 1, 2]), &VertexSet::from([3, 4])).unwrap();
        assert_eq!((h.deficiency, h.violator), (3, VertexSet::from([0, 1, 2])));
        assert_eq!(
            hall_deficiency(&SimpleGraph::complete(3), &VertexSet::from([0]), &VertexSet::from([1, 2])),
            Err(Error::NotBipartite(1, 2))
        );
    }

    #[test]
    fn fan_examples() {
        let (k, fan) = max_fan_blades(&SimpleGraph::complete(5), 2).unwrap();
        assert_eq!(k, 2);
        assert!(fan.is_valid_in(&SimpleGraph::complete(5)));
        assert_eq!(max_fan_blades(&SimpleGraph::fan(3), 0).unwrap().0, 3);
        assert_eq!(max_fan_blades(&SimpleGraph::star(6), 0).unwrap().0, 0);
        let f = find_fan(&SimpleGraph::complete(7), 3).unwrap().unwrap();
        assert!(f.blade_count() >= 3 && f.is_valid_in(&SimpleGraph::complete(7)));
        assert_eq!(find_fan(&SimpleGraph::complete_bipartite(3, 3), 1).unwrap(), None);
        assert!(find_fan(&SimpleGraph::complete(3), 0).is_err());
    }

    #[test]
    fn subset_iteration_counts() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 0).collect::<Vec<_>>(), [0]);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), [7]);
        assert_eq!(subsets_of_size(0, 0).collect::<Vec<_>>(), [0]);
    }
}
