//! Augmenting-path search with blossom contraction (Edmonds).
//!
//! The search state supports deleting vertices, which the canonical
//! (lexicographically smallest) matching and the Gallai–Edmonds extraction
//! both rely on.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;

pub(crate) const NONE: usize = usize::MAX;

#[derive(Clone)]
pub(crate) struct Blossom<'g> {
    g: &'g SimpleGraph,
    alive: Vec<bool>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    pub(crate) fn new(g: &'g SimpleGraph) -> Self {
        let n = g.n();
        Blossom {
            g,
            alive: vec![true; n],
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// A maximum matching of the whole graph.
    pub(crate) fn maximum(g: &'g SimpleGraph) -> Self {
        let mut b = Blossom::new(g);
        b.greedy();
        b.saturate();
        b
    }

    pub(crate) fn mate(&self, v: usize) -> Option<usize> {
        match self.mate[v] {
            NONE => None,
            u => Some(u),
        }
    }

    pub(crate) fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub(crate) fn size(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    fn greedy(&mut self) {
        let g = self.g;
        for v in 0..g.n() {
            if !self.alive[v] || self.mate[v] != NONE {
                continue;
            }
            if let Some(u) = g.neighbors(v).find(|&u| self.alive[u] && self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    /// Augments until maximum. One pass over the free vertices suffices: a
    /// vertex with no augmenting path never regains one after augmentations.
    pub(crate) fn saturate(&mut self) {
        for v in 0..self.g.n() {
            if self.alive[v] && self.mate[v] == NONE {
                self.augment_from(v);
            }
        }
    }

    /// Searches for an augmenting path from the free vertex `root` and
    /// applies it. Returns whether the matching grew.
    pub(crate) fn augment_from(&mut self, root: usize) -> bool {
        debug_assert!(self.alive[root] && self.mate[root] == NONE);
        match self.find_path(root) {
            Some(end) => {
                self.flip(end);
                true
            }
            None => false,
        }
    }

    /// Deletes `v`, unmatching it. Returns its former partner.
    pub(crate) fn delete(&mut self, v: usize) -> Option<usize> {
        self.alive[v] = false;
        let partner = self.mate(v);
        if let Some(u) = partner {
            self.mate[u] = NONE;
            self.mate[v] = NONE;
        }
        partner
    }

    fn flip(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.lca_mark.fill(false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let g = self.g;
        let n = g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in g.neighbors(v) {
                if !self.alive[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub(crate) fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.g.n())
            .filter_map(|u| match self.mate[u] {
                v if v != NONE && u < v => Some((u, v)),
                _ => None,
            })
            .collect()
    }

    /// Deletes `u` and `v` and reports whether the remaining live graph still
    /// has a matching of size `size() - 1` (before deletion), i.e. whether
    /// the edge `uv` lies in some maximum matching of the live graph. On
    /// success the state holds a maximum matching of the reduced graph; on
    /// failure the caller restores from a clone.
    pub(crate) fn try_remove_edge_ends(&mut self, u: usize, v: usize) -> bool {
        if self.mate[u] == v {
            self.delete(u);
            self.delete(v);
            return true;
        }
        let pu = self.delete(u);
        let pv = self.delete(v);
        match (pu, pv) {
            (Some(a), Some(b)) => self.augment_from(a) || self.augment_from(b),
            _ => true,
        }
    }
}
