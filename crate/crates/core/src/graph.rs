//! Undirected simple graphs, vertex sets and red/blue colorings of `K_n`.
//!
//! Vertices are the dense indices `0..n`. Adjacency is a bit matrix, one row
//! of `u64` words per vertex, so pair queries are O(1) and neighborhood
//! intersections cost O(n/64).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) const fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterator over the set bits of a word slice, in increasing order.
#[derive(Clone)]
pub struct Bits<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Bits<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        Bits { words, index: 0, current: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// A sorted set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(transparent))]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Checks that every member lies in `0..n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.first_common(other).is_none()
    }

    fn first_common(&self, other: &VertexSet) -> Option<usize> {
        self.iter().find(|&v| other.contains(v))
    }

    /// Membership bit rows sized for an `n`-vertex graph.
    pub(crate) fn to_words(&self, n: usize) -> Vec<u64> {
        let mut words = vec![0u64; words_for(n)];
        for v in self.iter() {
            words[v / 64] |= 1 << (v % 64);
        }
        words
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

/// An undirected loopless graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        SimpleGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for v in 0..n {
            let row = g.row_mut(v);
            for (w, word) in row.iter_mut().enumerate() {
                let lo = w * 64;
                let hi = (lo + 64).min(n);
                *word = if hi - lo == 64 { !0 } else { (1u64 << (hi - lo)) - 1 };
            }
            row[v / 64] &= !(1 << (v % 64));
        }
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(alloc::format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from bitmask adjacency rows (`n <= 64`).
    pub fn from_masks(rows: &[u64]) -> Self {
        let n = rows.len();
        assert!(n <= 64, "mask rows support at most 64 vertices");
        let mut g = SimpleGraph::new(n);
        for (u, &row) in rows.iter().enumerate() {
            for v in Bits::new(&[row]) {
                if v > u && v < n {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Adjacency rows as single `u64` masks, when `n <= 64`.
    pub fn to_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some((0..self.n).map(|v| self.row(v).first().copied().unwrap_or(0)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Inserts the edge `uv`.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        let w = self.words;
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge {u}-{v}");
        let w = self.words;
        self.rows[u * w + v / 64] &= !(1 << (v % 64));
        self.rows[v * w + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Bits<'_> {
        Bits::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Minimum degree; 0 for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the empty vertex set.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.common_neighbors(u, v) == 0)
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::complete(self.n);
        for (dst, src) in g.rows.iter_mut().zip(&self.rows) {
            *dst &= !src;
        }
        g
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing
    /// order, together with the map from new to original indices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(SimpleGraph, Vec<usize>)> {
        s.check_range(self.n)?;
        let map: Vec<usize> = s.iter().collect();
        let mut g = SimpleGraph::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Same vertex set; keeps only the edges with one end in `a` and the other in `b`.
    pub fn bipartite_between(&self, a: &VertexSet, b: &VertexSet) -> Result<SimpleGraph> {
        a.check_range(self.n)?;
        b.check_range(self.n)?;
        if let Some(v) = a.first_common(b) {
            return Err(Error::OverlappingSets(v));
        }
        let mut g = SimpleGraph::new(self.n);
        for u in a.iter() {
            for v in b.iter() {
                if self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// The subgraph on the same vertex set restricted to vertices of `keep`
    /// (all other vertices become isolated).
    pub fn restrict(&self, keep: &VertexSet) -> SimpleGraph {
        let mask = keep.to_words(self.n);
        let mut g = self.clone();
        for v in 0..self.n {
            let inside = mask[v / 64] >> (v % 64) & 1 == 1;
            for (word, m) in g.row_mut(v).iter_mut().zip(&mask) {
                *word = if inside { *word & m } else { 0 };
            }
        }
        g
    }

    /// Connected components, largest first, ties broken lexicographically.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            parts.push(VertexSet::from(members));
        }
        parts.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-coloring of the vertices as `(side 0, side 1)`, or `None`
    /// when the graph has an odd cycle. Each component puts its smallest
    /// vertex on side 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| side[v] == 0).collect();
        let right = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some((left, right))
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.n;
        let mut g = SimpleGraph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        g
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(k + 1);
        for v in 1..=k {
            g.add_edge(0, v);
        }
        g
    }

    /// `K_{p,q}` with parts `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> SimpleGraph {
        SimpleGraph::new(p).join(&SimpleGraph::new(q))
    }

    /// Disjoint cliques of the given sizes, laid out consecutively.
    pub fn disjoint_cliques(sizes: &[usize]) -> SimpleGraph {
        sizes.iter().fold(SimpleGraph::new(0), |g, &s| g.disjoint_union(&SimpleGraph::complete(s)))
    }

    /// The fan `F_k`: center 0 and blades `(2i+1, 2i+2)`.
    pub fn fan(k: usize) -> SimpleGraph {
        let mut g = SimpleGraph::star(2 * k);
        for i in 0..k {
            g.add_edge(2 * i + 1, 2 * i + 2);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> SimpleGraph {
        let mut g = SimpleGraph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }
}

/// A red/blue coloring of the edges of `K_n`, stored as its red graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    red: SimpleGraph,
}

impl TwoColoring {
    pub fn from_red(red: SimpleGraph) -> Self {
        TwoColoring { red }
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &SimpleGraph {
        &self.red
    }

    pub fn into_red(self) -> SimpleGraph {
        self.red
    }

    pub fn blue_graph(&self) -> SimpleGraph {
        self.red.complement()
    }

    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red.has_edge(u, v)
    }

    pub fn is_blue(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n() && v < self.n() && !self.red.has_edge(u, v)
    }

    /// The coloring induced on `s` (relabelled), with the index map.
    pub fn restrict(&self, s: &VertexSet) -> Result<(TwoColoring, Vec<usize>)> {
        let (red, map) = self.red.induced_subgraph(s)?;
        Ok((TwoColoring::from_red(red), map))
    }

    /// The coloring with vertex `v` deleted.
    pub fn delete_vertex(&self, v: usize) -> TwoColoring {
        let keep: VertexSet = (0..self.n()).filter(|&u| u != v).collect();
        self.restrict(&keep).expect("in range").0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        assert_eq!(SimpleGraph::complete(0).edge_count(), 0);
        assert_eq!(SimpleGraph::complete(3).edge_count(), 3);
        let k5 = SimpleGraph::complete(5);
        assert_eq!(k5.edge_count(), 10);
        assert!((0..5).all(|v| k5.degree(v) == 4));
        let k70 = SimpleGraph::complete(70);
        assert_eq!(k70.edge_count(), 70 * 69 / 2);
        assert!(!k70.has_edge(65, 65));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(SimpleGraph::complete(4).complement(), SimpleGraph::new(4));
        let c5 = SimpleGraph::cycle(5).complement();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(c5.is_connected());
        let k33c = SimpleGraph::complete_bipartite(3, 3).complement();
        assert_eq!(k33c, SimpleGraph::disjoint_cliques(&[3, 3]));
    }

    #[test]
    fn induced_subgraphs() {
        let (k3, map) = SimpleGraph::complete(5).induced_subgraph(&VertexSet::from([0, 2, 4])).unwrap();
        assert_eq!(k3, SimpleGraph::complete(3));
        assert_eq!(map, vec![0, 2, 4]);
        let (e3, _) = SimpleGraph::cycle(6).induced_subgraph(&VertexSet::from([0, 2, 4])).unwrap();
        assert_eq!(e3.edge_count(), 0);
        let (outer, _) = SimpleGraph::petersen().induced_subgraph(&VertexSet::range(5)).unwrap();
        assert_eq!(outer, SimpleGraph::cycle(5));
        assert!(SimpleGraph::complete(3).induced_subgraph(&VertexSet::from([3])).is_err());
    }

    #[test]
    fn bipartite_between_examples() {
        let g = SimpleGraph::complete(4).bipartite_between(&VertexSet::from([0, 1]), &VertexSet::from([2, 3])).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        let e = SimpleGraph::new(4).bipartite_between(&VertexSet::from([0]), &VertexSet::from([1, 2])).unwrap();
        assert_eq!(e.edge_count(), 0);
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        let same = k33.bipartite_between(&VertexSet::from([0, 1, 2]), &VertexSet::from([3, 4, 5])).unwrap();
        assert_eq!(same, k33);
        assert_eq!(
            k33.bipartite_between(&VertexSet::from([0, 1]), &VertexSet::from([1, 2])),
            Err(Error::OverlappingSets(1))
        );
    }

    #[test]
    fn component_examples() {
        let parts = SimpleGraph::disjoint_cliques(&[3, 3]).components();
        assert_eq!(parts, vec![VertexSet::from([0, 1, 2]), VertexSet::from([3, 4, 5])]);
        assert_eq!(SimpleGraph::path(4).components().len(), 1);
        let singles = SimpleGraph::new(5).components();
        assert_eq!(singles.len(), 5);
        assert!(singles.iter().all(|s| s.len() == 1));
        let mixed = SimpleGraph::new(1).disjoint_union(&SimpleGraph::path(3)).components();
        assert_eq!(mixed, vec![VertexSet::from([1, 2, 3]), VertexSet::from([0])]);
    }

    #[test]
    fn coloring_projection() {
        let c = TwoColoring::from_red(SimpleGraph::complete(6));
        assert_eq!(c.blue_graph().edge_count(), 0);
        let c = TwoColoring::from_red(SimpleGraph::new(4));
        assert_eq!(c.blue_graph(), SimpleGraph::complete(4));
        let c = TwoColoring::from_red(SimpleGraph::cycle(5));
        let blue = c.blue_graph();
        assert_eq!(blue.edge_count(), 5);
        assert_eq!(c.red().edge_count() + blue.edge_count(), 10);
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(SimpleGraph::cycle(5).bipartition().is_none());
        let (a, b) = SimpleGraph::cycle(6).bipartition().unwrap();
        assert_eq!(a, VertexSet::from([0, 2, 4]));
        assert_eq!(b, VertexSet::from([1, 3, 5]));
    }

    #[test]
    fn fan_and_petersen_shapes() {
        let f3 = SimpleGraph::fan(3);
        assert_eq!(f3.n(), 7);
        assert_eq!(f3.edge_count(), 9);
        let p = SimpleGraph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(p.is_triangle_free());
    }
}
