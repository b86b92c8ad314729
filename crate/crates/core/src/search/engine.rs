//! Depth-first vertex-extension search over red/blue colorings of `K_N`.
//!
//! Vertex `i` is introduced by choosing its red neighborhood among
//! `0..i`; masks are tried in increasing numeric order. After each
//! extension only cycles and fans through the new vertex are rechecked.
//!
//! Symmetry rules (sound: every good coloring has a relabelling obeying them):
//! * vertex 0 has maximum red degree `d`, and its red neighbors are `1..=d`;
//! * within each of the blocks `1..=d` and `d+1..N`, the red neighbors of
//!   vertex 1 (other than itself) come first.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TwoColoring};

/// Largest `N` the bitmask engine handles.
pub const MAX_SEARCH_ORDER: usize = 64;

/// Default number of vertices fixed in a task prefix.
pub const DEFAULT_SPLIT_DEPTH: usize = 5;

/// Budget checks happen every this many nodes.
const BUDGET_STRIDE: u64 = 1024;

/// A stop signal polled during the search.
pub trait Budget {
    fn exhausted(&self) -> bool;
}

/// Never runs out.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

impl<F: Fn() -> bool> Budget for F {
    fn exhausted(&self) -> bool {
        self()
    }
}

/// Does `K_N` arrow (red `C_cycle`, blue `F_fan`)?
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchProblem {
    pub n: usize,
    pub cycle: usize,
    pub fan: usize,
    pub symmetry: bool,
    pub split_depth: usize,
}

impl SearchProblem {
    pub fn new(n: usize, cycle: usize, fan: usize) -> Result<Self> {
        if !(1..=MAX_SEARCH_ORDER).contains(&n) {
            return Err(Error::InvalidParameter(alloc::format!("N must lie in 1..={MAX_SEARCH_ORDER}, got {n}")));
        }
        if cycle < 3 {
            return Err(Error::InvalidParameter("cycle length must be at least 3".into()));
        }
        if fan < 1 {
            return Err(Error::InvalidParameter("a fan needs at least one blade".into()));
        }
        Ok(SearchProblem { n, cycle, fan, symmetry: true, split_depth: DEFAULT_SPLIT_DEPTH })
    }

    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }

    pub fn with_split_depth(mut self, depth: usize) -> Self {
        self.split_depth = depth.max(1);
        self
    }

    /// Vertices colored in every task prefix.
    pub fn prefix_len(&self) -> usize {
        self.n.min(self.split_depth)
    }
}

/// A colored prefix: `back[i]` is the red neighborhood of vertex `i` within `0..i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Task {
    pub back: Vec<u64>,
}

/// All task prefixes in search order, with the nodes spent producing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskList {
    pub tasks: Vec<Task>,
    pub prefix_nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TaskOutcome {
    /// No good coloring extends the prefix.
    Exhausted { nodes: u64 },
    /// The first good coloring in search order below the prefix.
    Found { nodes: u64, coloring: TwoColoring },
    /// Stopped early; the task must be rerun from scratch.
    Interrupted { nodes: u64 },
}

impl TaskOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            TaskOutcome::Exhausted { nodes }
            | TaskOutcome::Found { nodes, .. }
            | TaskOutcome::Interrupted { nodes } => *nodes,
        }
    }
}

struct State<'p> {
    p: &'p SearchProblem,
    /// Full symmetric red rows over the placed vertices.
    red: Vec<u64>,
    placed: usize,
    /// Red degree of vertex 0 once a blue edge at 0 fixes it.
    d: Option<usize>,
    nodes: u64,
}

enum Step {
    Continue,
    Found,
    Stop,
}

impl<'p> State<'p> {
    fn new(p: &'p SearchProblem) -> Self {
        State { p, red: vec![0; p.n], placed: 1, d: None, nodes: 1 }
    }

    /// Replays a prefix; the prefix was valid when generated.
    fn from_task(p: &'p SearchProblem, task: &Task) -> Self {
        let mut s = State::new(p);
        s.nodes = 0;
        for (i, &r) in task.back.iter().enumerate().skip(1) {
            let accepted = s.push(i, r);
            debug_assert!(accepted);
        }
        s
    }

    fn back_masks(&self) -> Vec<u64> {
        (0..self.placed).map(|i| self.red[i] & low(i)).collect()
    }

    fn coloring(&self) -> TwoColoring {
        TwoColoring::from_red(SimpleGraph::from_masks(&self.red[..self.placed]))
    }

    /// Symmetry rules that only look at the choice of mask `r` for vertex `i`.
    fn mask_allowed(&self, i: usize, r: u64) -> bool {
        if !self.p.symmetry || i < 2 {
            return true;
        }
        let red_to_0 = r & 1 == 1;
        let prev_red_to_0 = self.red[i - 1] & 1 == 1;
        if red_to_0 && !prev_red_to_0 {
            return false;
        }
        if i >= 3 && red_to_0 == prev_red_to_0 && r >> 1 & 1 == 1 && self.red[i - 1] >> 1 & 1 == 0 {
            return false;
        }
        true
    }

    /// Adds vertex `i` with red back-neighborhood `r`; returns false (and
    /// leaves the state unchanged) if the result is not good.
    fn push(&mut self, i: usize, r: u64) -> bool {
        debug_assert_eq!(i, self.placed);
        self.red[i] = r;
        for j in bits(r) {
            self.red[j] |= 1 << i;
        }
        self.placed = i + 1;
        let old_d = self.d;
        if self.p.symmetry && self.d.is_none() && r & 1 == 0 {
            self.d = Some(i - 1);
        }
        if self.degree_ok(i, r) && !self.red_cycle_through(i) && !self.blue_fan_touching(i) {
            return true;
        }
        self.pop(i, old_d);
        false
    }

    fn pop(&mut self, i: usize, old_d: Option<usize>) {
        for j in bits(self.red[i] & low(i)) {
            self.red[j] &= !(1 << i);
        }
        self.red[i] = 0;
        self.placed = i;
        self.d = old_d;
    }

    fn degree_ok(&self, i: usize, r: u64) -> bool {
        let Some(d) = self.d else { return true };
        let over = |v: usize| self.red[v].count_ones() as usize > d;
        !over(i) && !bits(r).any(over)
    }

    /// A red cycle of the target length through the newest vertex `i`:
    /// a red path on `cycle - 1` vertices joining two red neighbors of `i`.
    fn red_cycle_through(&self, i: usize) -> bool {
        let m = self.p.cycle;
        if m > self.placed {
            return false;
        }
        let ends = self.red[i] & low(i);
        if ends.count_ones() < 2 {
            return false;
        }
        bits(ends).any(|u| {
            let targets = ends & !low(u + 1);
            self.path_to(u, targets, 1 << u | 1 << i, m - 2)
        })
    }

    /// A red path of exactly `edges` edges from `v` avoiding `used`, ending in `targets`.
    fn path_to(&self, v: usize, targets: u64, used: u64, edges: usize) -> bool {
        let next = self.red[v] & !used;
        if edges == 1 {
            return next & targets != 0;
        }
        bits(next).any(|w| self.path_to(w, targets, used | 1 << w, edges - 1))
    }

    fn blue_row(&self, v: usize) -> u64 {
        !self.red[v] & low(self.placed) & !(1 << v)
    }

    /// A blue fan with `fan` blades must use a blue edge at `i`, so its
    /// center is `i` or a blue neighbor of `i`.
    fn blue_fan_touching(&self, i: usize) -> bool {
        let f = self.p.fan;
        let blue: Vec<u64> = (0..self.placed).map(|v| self.blue_row(v)).collect();
        let centers = blue[i] | 1 << i;
        bits(centers).any(|c| {
            let hood = blue[c];
            hood.count_ones() as usize >= 2 * f && has_matching(&blue, hood, f)
        })
    }

    /// Depth-first search from the current state. Returns `Found` with the
    /// state holding a complete good coloring.
    fn dfs(&mut self, budget: &dyn Budget) -> Step {
        let i = self.placed;
        if i == self.p.n {
            return Step::Found;
        }
        for r in 0..1u64 << i {
            if !self.mask_allowed(i, r) {
                continue;
            }
            let old_d = self.d;
            if !self.push(i, r) {
                continue;
            }
            self.nodes += 1;
            if self.nodes.is_multiple_of(BUDGET_STRIDE) && budget.exhausted() {
                return Step::Stop;
            }
            match self.dfs(budget) {
                Step::Continue => self.pop(i, old_d),
                other => return other,
            }
        }
        Step::Continue
    }

    /// Enumerates valid prefixes of `depth` vertices in search order.
    fn collect_prefixes(&mut self, depth: usize, out: &mut Vec<Task>) {
        let i = self.placed;
        if i == depth {
            out.push(Task { back: self.back_masks() });
            return;
        }
        for r in 0..1u64 << i {
            if !self.mask_allowed(i, r) {
                continue;
            }
            let old_d = self.d;
            if self.push(i, r) {
                self.nodes += 1;
                self.collect_prefixes(depth, out);
                self.pop(i, old_d);
            }
        }
    }
}

fn low(k: usize) -> u64 {
    if k >= 64 {
        !0
    } else {
        (1u64 << k) - 1
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let b = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(b)
    })
}

/// Whether the graph `adj` restricted to `set` has a matching of size `need`.
pub(crate) fn has_matching(adj: &[u64], set: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (set.count_ones() as usize) < 2 * need {
        return false;
    }
    let v = set.trailing_zeros() as usize;
    let rest = set & !(1 << v);
    if need == 1 {
        return adj[v] & rest != 0 || bits(rest).any(|w| adj[w] & rest != 0);
    }
    bits(adj[v] & rest).any(|w| has_matching(adj, rest & !(1 << w), need - 1)) || has_matching(adj, rest, need)
}

/// Prefixes of `min(N, split_depth)` vertices, in the order the sequential search visits them.
pub fn task_list(p: &SearchProblem) -> TaskList {
    let mut s = State::new(p);
    let mut tasks = Vec::new();
    s.collect_prefixes(p.prefix_len(), &mut tasks);
    TaskList { tasks, prefix_nodes: s.nodes }
}

/// Searches below one prefix.
pub fn run_task(p: &SearchProblem, task: &Task, budget: &dyn Budget) -> TaskOutcome {
    let mut s = State::from_task(p, task);
    match s.dfs(budget) {
        Step::Found => TaskOutcome::Found { nodes: s.nodes, coloring: s.coloring() },
        Step::Continue => TaskOutcome::Exhausted { nodes: s.nodes },
        Step::Stop => TaskOutcome::Interrupted { nodes: s.nodes },
    }
}

/// Whether a complete coloring avoids both targets, by the engine's own detectors.
pub fn engine_accepts(p: &SearchProblem, c: &TwoColoring) -> bool {
    let Some(masks) = c.red().to_masks() else { return false };
    let unpruned = p.with_symmetry(false);
    let mut s = State::new(&unpruned);
    masks.iter().enumerate().skip(1).all(|(i, &row)| s.push(i, row & low(i)))
}
