//! Executable checkers for the auxiliary lemmas of cycle/fan Ramsey
//! arguments, a diagnostic audit of the reduced-graph claims, and seeded
//! generators of hypothesis-satisfying random instances.
//!
//! Every checker separates an unmet hypothesis (a normal report state) from
//! a violated conclusion (which can only mean an implementation bug).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::constructions::{star_matching_ramsey, Family};
use crate::cycles::{self, circumference_with, is_two_connected};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TwoColoring, VertexSet};
use crate::matching::{self, connected_matching_number, fan_blade_profile, matching_number};
use crate::ratio::{RatioParam, Rational};
use crate::search::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum CheckStatus {
    Holds,
    HypothesisNotMet(String),
    Violated,
}

impl CheckStatus {
    pub fn is_violation(&self) -> bool {
        *self == CheckStatus::Violated
    }
}

/// A coloring of some pairs of `K_n`; the remaining pairs are absent and
/// count as non-edges in both colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTwoColoring {
    red: SimpleGraph,
    blue: SimpleGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "lowercase"))]
pub enum PairState {
    Red,
    Blue,
    Absent,
}

impl PartialTwoColoring {
    /// All pairs absent.
    pub fn new(n: usize) -> Self {
        PartialTwoColoring { red: SimpleGraph::new(n), blue: SimpleGraph::new(n) }
    }

    pub fn from_graphs(red: SimpleGraph, blue: SimpleGraph) -> Result<Self> {
        if red.n() != blue.n() {
            return Err(Error::InvalidParameter("red and blue graphs differ in order".into()));
        }
        if let Some((u, v)) = red.edges().find(|&(u, v)| blue.has_edge(u, v)) {
            return Err(Error::InvalidParameter(format!("pair {u}-{v} is both red and blue")));
        }
        Ok(PartialTwoColoring { red, blue })
    }

    pub fn from_coloring(c: &TwoColoring) -> Self {
        PartialTwoColoring { red: c.red().clone(), blue: c.blue_graph() }
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &SimpleGraph {
        &self.red
    }

    pub fn blue(&self) -> &SimpleGraph {
        &self.blue
    }

    pub fn state(&self, u: usize, v: usize) -> PairState {
        if self.red.has_edge(u, v) {
            PairState::Red
        } else if self.blue.has_edge(u, v) {
            PairState::Blue
        } else {
            PairState::Absent
        }
    }

    pub fn set(&mut self, u: usize, v: usize, state: PairState) {
        self.red.remove_edge(u, v);
        self.blue.remove_edge(u, v);
        match state {
            PairState::Red => self.red.add_edge(u, v),
            PairState::Blue => self.blue.add_edge(u, v),
            PairState::Absent => {}
        }
    }

    /// Absent pairs at each vertex.
    pub fn defect_profile(&self) -> Vec<usize> {
        let n = self.n();
        (0..n).map(|v| n.saturating_sub(1) - self.red.degree(v) - self.blue.degree(v)).collect()
    }

    pub fn max_defect(&self) -> usize {
        self.defect_profile().into_iter().max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "lowercase"))]
pub enum Color {
    Red,
    Blue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ComponentLemmaReport {
    pub status: CheckStatus,
    pub min_degree: usize,
    /// Largest monochromatic component (red preferred on ties).
    pub color: Color,
    pub component: VertexSet,
}

/// Edges of `host` are colored red if they lie in `red` and blue otherwise.
/// If `δ(host) >= 3n/4`, some monochromatic component has more than `δ` vertices.
pub fn check_component_lemma(host: &SimpleGraph, red: &SimpleGraph) -> Result<ComponentLemmaReport> {
    let n = host.n();
    if red.n() != n {
        return Err(Error::InvalidParameter("coloring and host differ in order".into()));
    }
    if let Some((u, v)) = red.edges().find(|&(u, v)| !host.has_edge(u, v)) {
        return Err(Error::InvalidParameter(format!("red edge {u}-{v} is not a host edge")));
    }
    let blue = host_minus(host, red);
    let min_degree = host.min_degree();
    let largest = |g: &SimpleGraph| g.components().into_iter().next().unwrap_or_default();
    let (r, b) = (largest(red), largest(&blue));
    let (color, component) = if r.len() >= b.len() { (Color::Red, r) } else { (Color::Blue, b) };
    let status = if n == 0 || 4 * min_degree < 3 * n {
        CheckStatus::HypothesisNotMet(format!("minimum degree {min_degree} < 3n/4 for n = {n}"))
    } else if component.len() > min_degree {
        CheckStatus::Holds
    } else {
        CheckStatus::Violated
    };
    Ok(ComponentLemmaReport { status, min_degree, color, component })
}

fn host_minus(host: &SimpleGraph, red: &SimpleGraph) -> SimpleGraph {
    let mut blue = host.clone();
    for (u, v) in red.edges() {
        blue.remove_edge(u, v);
    }
    blue
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct FigajLuczakReport {
    pub status: CheckStatus,
    pub edges: usize,
    /// `(1 - eps)|V1||V2|`.
    pub edge_threshold: Rational,
    /// `(1 - 3eps)(|V1| + |V2|)`.
    pub order_threshold: Rational,
    /// `(1 - 3eps)|V2|`.
    pub matching_threshold: Rational,
    pub component: VertexSet,
    pub matching: matching::Matching,
}

/// Bipartite `g` with parts `V1`, `V2`, `|V1| >= |V2|`, `0 < eps < 1/100` and
/// at least `(1 - eps)|V1||V2|` edges has a component of order at least
/// `(1 - 3eps)(|V1| + |V2|)` with a matching of size at least `(1 - 3eps)|V2|`.
pub fn check_figaj_luczak(g: &SimpleGraph, v1: &VertexSet, v2: &VertexSet, eps: Rational) -> Result<FigajLuczakReport> {
    if v1.len() < v2.len() {
        return Err(Error::InvalidParameter("need |V1| >= |V2|".into()));
    }
    let cross = g.bipartite_between(v1, v2)?;
    if let Some((u, v)) = g.edges().find(|&(u, v)| !cross.has_edge(u, v)) {
        return Err(Error::NotBipartite(u, v));
    }
    let (p, q) = (v1.len() as i64, v2.len() as i64);
    let one = Rational::from_integer(1);
    let edges = g.edge_count();
    let edge_threshold = (one - eps) * (p * q);
    let order_threshold = (one - eps * 3) * (p + q);
    let matching_threshold = (one - eps * 3) * q;

    let mut keep: VertexSet = v1.iter().collect();
    for v in v2.iter() {
        keep.insert(v);
    }
    let (sub, map) = g.induced_subgraph(&keep)?;
    // The best component: largest order, then largest matching.
    let mut best: Option<(usize, usize, VertexSet)> = None;
    for comp in sub.components() {
        let (h, _) = sub.induced_subgraph(&comp)?;
        let nu = matching_number(&h);
        if best.as_ref().is_none_or(|(o, m, _)| (comp.len(), nu) > (*o, *m)) {
            best = Some((comp.len(), nu, comp));
        }
    }
    let (order, nu, comp) = best.unwrap_or((0, 0, VertexSet::new()));
    let component: VertexSet = comp.iter().map(|v| map[v]).collect();
    let (h, hmap) = g.induced_subgraph(&component)?;
    let m = matching::max_matching(&h);
    debug_assert_eq!(m.size(), nu);
    let matching = matching::Matching {
        edges: {
            let mut e: Vec<_> = m.edges.iter().map(|&(a, b)| (hmap[a].min(hmap[b]), hmap[a].max(hmap[b]))).collect();
            e.sort_unstable();
            e
        },
    };

    let status = if !(eps > Rational::from_integer(0) && eps < Rational::new(1, 100)) {
        CheckStatus::HypothesisNotMet(format!("eps = {eps} outside (0, 1/100)"))
    } else if Rational::from_integer(edges as i64) < edge_threshold {
        CheckStatus::HypothesisNotMet(format!("{edges} edges < {edge_threshold}"))
    } else if Rational::from_integer(order as i64) >= order_threshold
        && Rational::from_integer(nu as i64) >= matching_threshold
    {
        CheckStatus::Holds
    } else {
        CheckStatus::Violated
    };
    Ok(FigajLuczakReport { status, edges, edge_threshold, order_threshold, matching_threshold, component, matching })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum StarMatchingOutcome {
    /// `K_N` arrows and a good coloring of `K_{N-1}` exists.
    Confirmed,
    /// A good coloring at the formula value, or none one below.
    Refuted,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct StarMatchingReport {
    pub k: u64,
    pub n1: u64,
    pub n2: u64,
    pub formula_value: u64,
    pub outcome: StarMatchingOutcome,
    /// Colors 1..=3 of the pairs `(u, v)`, `u < v`, in lexicographic order, of
    /// a good coloring of `K_{value-1}`.
    pub good_coloring_below: Option<Vec<u8>>,
    /// A good coloring of `K_value`, which would refute the formula.
    pub good_coloring_at_value: Option<Vec<u8>>,
    pub nodes: u64,
}

/// Largest `N` for the exhaustive 3-coloring search.
pub const STAR_MATCHING_MAX_ORDER: u64 = 10;

/// Confirms `R(S_k, n1·K_2, n2·K_2) = 2n1 + n2 - 1` (for `k <= n1`) by
/// searching all 3-colorings of `K_N` and `K_{N-1}`. Color 1 must avoid a
/// star with `k` edges, colors 2 and 3 matchings of sizes `n1` and `n2`.
pub fn check_star_matching_small(k: u64, n1: u64, n2: u64, budget: &dyn Budget) -> Result<StarMatchingReport> {
    let value = star_matching_ramsey(k, n1, n2, None)?.value;
    if value > STAR_MATCHING_MAX_ORDER {
        return Err(Error::TooLarge { size: value as usize, limit: STAR_MATCHING_MAX_ORDER as usize });
    }
    let limits = [k as usize, n1 as usize, n2 as usize];
    let mut nodes = 0;
    let mut run = |n: usize| -> Option<Option<Vec<u8>>> {
        let mut s = ThreeColorSearch::new(n, limits);
        let found = s.search(0, budget);
        nodes += s.nodes;
        match found {
            SearchStep::Stop => None,
            SearchStep::Found => Some(Some(s.colors())),
            SearchStep::Continue => Some(None),
        }
    };
    let at_value = run(value as usize);
    let below = if value >= 1 { run(value as usize - 1) } else { Some(None) };
    let (outcome, good_at, good_below) = match (at_value, below) {
        (Some(at), Some(below)) => {
            let ok = at.is_none() && below.is_some();
            let outcome = if ok { StarMatchingOutcome::Confirmed } else { StarMatchingOutcome::Refuted };
            (outcome, at, below)
        }
        _ => (StarMatchingOutcome::BudgetExhausted, None, None),
    };
    Ok(StarMatchingReport {
        k,
        n1,
        n2,
        formula_value: value,
        outcome,
        good_coloring_below: good_below,
        good_coloring_at_value: good_at,
        nodes,
    })
}

enum SearchStep {
    Continue,
    Found,
    Stop,
}

struct ThreeColorSearch {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// Adjacency masks per color.
    adj: [Vec<u64>; 3],
    chosen: Vec<u8>,
    /// Forbidden: color-1 degree `limits[0]`, color-2 and color-3 matchings of `limits[1]`, `limits[2]`.
    limits: [usize; 3],
    nodes: u64,
}

impl ThreeColorSearch {
    fn new(n: usize, limits: [usize; 3]) -> Self {
        ThreeColorSearch {
            n,
            pairs: (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
            adj: [vec![0; n], vec![0; n], vec![0; n]],
            chosen: Vec::new(),
            limits,
            nodes: 0,
        }
    }

    fn colors(&self) -> Vec<u8> {
        self.chosen.iter().map(|c| c + 1).collect()
    }

    fn good(&self, color: usize, u: usize, v: usize) -> bool {
        let adj = &self.adj[color];
        if color == 0 {
            let k = self.limits[0];
            return (adj[u].count_ones() as usize) < k && (adj[v].count_ones() as usize) < k;
        }
        let all = if self.n >= 64 { !0 } else { (1u64 << self.n) - 1 };
        !crate::search::has_matching_in(adj, all, self.limits[color])
    }

    fn search(&mut self, index: usize, budget: &dyn Budget) -> SearchStep {
        if index == self.pairs.len() {
            return SearchStep::Found;
        }
        let (u, v) = self.pairs[index];
        for color in 0..3 {
            self.adj[color][u] |= 1 << v;
            self.adj[color][v] |= 1 << u;
            if self.good(color, u, v) {
                self.nodes += 1;
                if self.nodes.is_multiple_of(1024) && budget.exhausted() {
                    return SearchStep::Stop;
                }
                self.chosen.push(color as u8);
                match self.search(index + 1, budget) {
                    SearchStep::Continue => {}
                    other => return other,
                }
                self.chosen.pop();
            }
            self.adj[color][u] &= !(1 << v);
            self.adj[color][v] &= !(1 << u);
        }
        SearchStep::Continue
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum ClaimsRegime {
    /// `1/2 <= a < 1`.
    PartI,
    /// `a >= 1`.
    PartII,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ClaimEvaluation {
    pub claim: String,
    /// The audited quantity (0/1 for the connectivity claim).
    pub value: usize,
    pub threshold: Option<Rational>,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ClaimsAudit {
    pub t: usize,
    pub max_red_connected_matching: usize,
    pub max_blue_fan_blades: usize,
    pub min_red_degree: usize,
    pub red_two_connected: bool,
    pub red_circumference: usize,
    /// False when the circumference is only a heuristic lower bound.
    pub red_circumference_exact: bool,
    pub claims: Vec<ClaimEvaluation>,
}

/// Evaluates the four reduced-graph claims (connected matching, blue fan,
/// red minimum degree, red 2-connectivity) on a concrete partial coloring.
/// Purely diagnostic: the thresholds are evaluated, never asserted.
pub fn claims_audit(
    h: &PartialTwoColoring,
    a: RatioParam,
    beta: Rational,
    regime: ClaimsRegime,
    defect_cap: usize,
) -> Result<ClaimsAudit> {
    let in_regime = match regime {
        ClaimsRegime::PartI => Family::for_ratio(a) == Family::W1,
        ClaimsRegime::PartII => Family::for_ratio(a) == Family::W4,
    };
    if !in_regime {
        return Err(Error::Regime(format!("a = {a} does not belong to {regime:?}")));
    }
    let defect = h.max_defect();
    if defect > defect_cap {
        return Err(Error::InvalidParameter(format!("a vertex has {defect} absent pairs, above the cap {defect_cap}")));
    }
    let t = h.n();
    let red = h.red();
    let cm = connected_matching_number(red).size;
    let blades = fan_blade_profile(h.blue()).into_iter().max().unwrap_or(0);
    let min_deg = red.min_degree();
    let two_connected = is_two_connected(red).holds();
    let circ = circumference_with(red, true)?;

    let ar = a.to_rational();
    let tt = Rational::from_integer(t as i64);
    let c15 = Rational::new(15, 100) * beta;
    let c05 = Rational::new(5, 100) * beta;
    let (cm_bound, fan_bound, deg_bound) = match regime {
        ClaimsRegime::PartI => {
            let d = ar * 2 + 2;
            ((ar / d - c15) * tt, (Rational::from_integer(1) / d - c05) * tt, ar / d * tt + 1)
        }
        ClaimsRegime::PartII => (
            (Rational::new(1, 4) - c15) * tt,
            (Rational::from_integer(1) / (ar * 4) - c05) * tt,
            (ar * 2 - 1) / (ar * 4) * tt + 1,
        ),
    };
    let q = |x: usize| Rational::from_integer(x as i64);
    let claims = vec![
        ClaimEvaluation {
            claim: "red connected matching <= threshold".into(),
            value: cm,
            threshold: Some(cm_bound),
            satisfied: q(cm) <= cm_bound,
        },
        ClaimEvaluation {
            claim: "blue fan blades < threshold".into(),
            value: blades,
            threshold: Some(fan_bound),
            satisfied: q(blades) < fan_bound,
        },
        ClaimEvaluation {
            claim: "red minimum degree >= threshold".into(),
            value: min_deg,
            threshold: Some(deg_bound),
            satisfied: q(min_deg) >= deg_bound,
        },
        ClaimEvaluation {
            claim: "red graph 2-connected".into(),
            value: two_connected as usize,
            threshold: None,
            satisfied: two_connected,
        },
    ];
    Ok(ClaimsAudit {
        t,
        max_red_connected_matching: cm,
        max_blue_fan_blades: blades,
        min_red_degree: min_deg,
        red_two_connected: two_connected,
        red_circumference: circ.length,
        red_circumference_exact: circ.exact,
        claims,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct DiracChainReport {
    pub status: CheckStatus,
    pub two_connected: bool,
    pub min_degree: usize,
    pub circumference: usize,
    pub connected_matching: usize,
    /// `c >= min(2δ, n)`, checked only for 2-connected graphs.
    pub dirac_holds: Option<bool>,
    /// `connected matching >= ⌊c/2⌋`.
    pub matching_holds: bool,
}

/// If `g` is 2-connected then `c(g) >= min(2δ, n)`; always the connected
/// matching number is at least `⌊c(g)/2⌋`.
pub fn dirac_chain_check(g: &SimpleGraph) -> Result<DiracChainReport> {
    let c = cycles::circumference(g)?.length;
    let cm = connected_matching_number(g).size;
    let two_connected = is_two_connected(g).holds();
    let min_degree = g.min_degree();
    let dirac_holds = two_connected.then(|| c >= (2 * min_degree).min(g.n()));
    let matching_holds = cm >= c / 2;
    let status = if dirac_holds != Some(false) && matching_holds { CheckStatus::Holds } else { CheckStatus::Violated };
    Ok(DiracChainReport {
        status,
        two_connected,
        min_degree,
        circumference: c,
        connected_matching: cm,
        dirac_holds,
        matching_holds,
    })
}

/// A host graph on `4..=max_n` vertices with `δ >= 3n/4` and a random red
/// subset of its edges.
pub fn random_component_instance<R: Rng + ?Sized>(rng: &mut R, max_n: usize) -> (SimpleGraph, SimpleGraph) {
    let n = rng.gen_range(4..=max_n.max(4));
    let min_deg = (3 * n).div_ceil(4);
    let mut host = SimpleGraph::complete(n);
    let mut pairs: Vec<(usize, usize)> = host.edges().collect();
    pairs.shuffle(rng);
    let removals = rng.gen_range(0..=pairs.len());
    for &(u, v) in pairs.iter().take(removals) {
        if host.degree(u) > min_deg && host.degree(v) > min_deg {
            host.remove_edge(u, v);
        }
    }
    let mut red = SimpleGraph::new(n);
    let p_red: f64 = rng.gen();
    for (u, v) in host.edges() {
        if rng.gen_bool(p_red) {
            red.add_edge(u, v);
        }
    }
    (host, red)
}

/// A random dense bipartite instance: parts `V1 = 0..p`, `V2 = p..p+q` with
/// `p >= q`, `eps = k/1000` for `k` in `1..=9`, and at most `⌊eps·p·q⌋`
/// cross pairs missing.
pub fn random_figaj_luczak_instance<R: Rng + ?Sized>(
    rng: &mut R,
    max_part: usize,
) -> (SimpleGraph, VertexSet, VertexSet, Rational) {
    let p = rng.gen_range(1..=max_part.max(1));
    let q = rng.gen_range(1..=p);
    let eps = Rational::new(rng.gen_range(1..=9), 1000);
    let v1 = VertexSet::range(p);
    let v2: VertexSet = (p..p + q).collect();
    let mut g = SimpleGraph::new(p + q);
    let mut cross: Vec<(usize, usize)> = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))).collect();
    cross.shuffle(rng);
    let allowed = (eps * (p * q) as i64).to_integer() as usize;
    let missing = rng.gen_range(0..=allowed);
    for &(u, v) in &cross[missing..] {
        g.add_edge(u, v);
    }
    (g, v1, v2, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::Unlimited;
    use rand::SeedableRng;

    #[test]
    fn component_examples() {
        let r = check_component_lemma(&SimpleGraph::complete(8), &SimpleGraph::complete_bipartite(4, 4)).unwrap();
        assert_eq!(r.status, CheckStatus::Holds);
        assert_eq!((r.color, r.component.len(), r.min_degree), (Color::Red, 8, 7));
        let r = check_component_lemma(&SimpleGraph::complete(5), &SimpleGraph::complete(5)).unwrap();
        assert_eq!((r.status, r.component.len()), (CheckStatus::Holds, 5));
        let r = check_component_lemma(&SimpleGraph::cycle(8), &SimpleGraph::new(8)).unwrap();
        assert!(matches!(r.status, CheckStatus::HypothesisNotMet(_)));
    }

    #[test]
    fn figaj_luczak_examples() {
        let eps = Rational::new(5, 1000);
        let k55 = SimpleGraph::complete_bipartite(5, 5);
        let parts = (VertexSet::range(5), (5..10).collect::<VertexSet>());
        let r = check_figaj_luczak(&k55, &parts.0, &parts.1, eps).unwrap();
        assert_eq!((r.status, r.component.len(), r.matching.size()), (CheckStatus::Holds, 10, 5));

        let mut g = SimpleGraph::complete_bipartite(100, 100);
        for i in 0..100 {
            g.remove_edge(i, 100 + i);
        }
        let (v1, v2) = (VertexSet::range(100), (100..200).collect::<VertexSet>());
        let r = check_figaj_luczak(&g, &v1, &v2, eps).unwrap();
        assert!(matches!(r.status, CheckStatus::HypothesisNotMet(_)));
        assert_eq!(r.edges, 9900);

        let mut g = SimpleGraph::complete_bipartite(100, 100);
        for i in 0..40 {
            g.remove_edge(i, 100 + (i * 7) % 100);
        }
        let r = check_figaj_luczak(&g, &v1, &v2, eps).unwrap();
        assert_eq!(r.status, CheckStatus::Holds);
        assert!(r.matching.is_valid_in(&g));
    }

    #[test]
    fn star_matching_examples() {
        for (k, n1, n2, v) in [(1, 1, 1, 2), (1, 2, 1, 4), (2, 2, 2, 5)] {
            let r = check_star_matching_small(k, n1, n2, &Unlimited).unwrap();
            assert_eq!(r.formula_value, v);
            assert_eq!(r.outcome, StarMatchingOutcome::Confirmed);
        }
    }

    #[test]
    fn claims_examples() {
        let red = SimpleGraph::disjoint_cliques(&[5, 5]);
        let h = PartialTwoColoring::from_coloring(&TwoColoring::from_red(red));
        let a = RatioParam::new(1, 2).unwrap();
        let audit = claims_audit(&h, a, Rational::new(1, 100), ClaimsRegime::PartI, 0).unwrap();
        assert_eq!(audit.max_red_connected_matching, 2);
        assert_eq!(audit.max_blue_fan_blades, 0);
        assert!(!audit.red_two_connected);

        let h = PartialTwoColoring::from_coloring(&TwoColoring::from_red(SimpleGraph::complete(7)));
        let audit = claims_audit(&h, a, Rational::new(1, 100), ClaimsRegime::PartI, 0).unwrap();
        assert_eq!((audit.max_red_connected_matching, audit.max_blue_fan_blades), (3, 0));
        assert!(audit.red_two_connected);
        assert!(claims_audit(&h, a, Rational::new(1, 100), ClaimsRegime::PartII, 0).is_err());
    }

    #[test]
    fn partial_coloring_defects() {
        let mut h = PartialTwoColoring::new(4);
        h.set(0, 1, PairState::Red);
        h.set(1, 2, PairState::Blue);
        assert_eq!(h.defect_profile(), [2, 1, 2, 3]);
        assert_eq!(h.state(2, 1), PairState::Blue);
        h.set(1, 2, PairState::Absent);
        assert_eq!(h.state(1, 2), PairState::Absent);
    }

    #[test]
    fn dirac_chain_examples() {
        let r = dirac_chain_check(&SimpleGraph::cycle(6)).unwrap();
        assert_eq!((r.circumference, r.connected_matching, r.status), (6, 3, CheckStatus::Holds));
        let r = dirac_chain_check(&SimpleGraph::complete(5)).unwrap();
        assert_eq!((r.circumference, r.connected_matching), (5, 2));
        let r = dirac_chain_check(&SimpleGraph::petersen()).unwrap();
        assert_eq!((r.circumference, r.connected_matching), (9, 5));
    }

    #[test]
    fn generators_meet_hypotheses() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (host, red) = random_component_instance(&mut rng, 12);
            assert!(4 * host.min_degree() >= 3 * host.n());
            assert!(red.edges().all(|(u, v)| host.has_edge(u, v)));
            let (g, v1, v2, eps) = random_figaj_luczak_instance(&mut rng, 30);
            let r = check_figaj_luczak(&g, &v1, &v2, eps).unwrap();
            assert_eq!(r.status, CheckStatus::Holds);
        }
    }
}
