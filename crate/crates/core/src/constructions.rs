//! Lower-bound colorings for `R(C_{2⌊an⌋}, F_n)`, the piecewise bound and
//! asymptotic formulas, literature reference values, and a verifier that
//! certifies a coloring has no red `C_m` and no blue `F_n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::cycles::{self, CycleEmbedding};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TwoColoring, VertexSet};
use crate::matching::{self, FanEmbedding};
use crate::ratio::{RatioParam, Rational};

/// `⌊p·n/q⌋`.
pub fn floor_an(a: RatioParam, n: u64) -> u64 {
    ((a.p() as u128 * n as u128) / a.q() as u128) as u64
}

/// Which lower-bound construction applies to `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "lowercase"))]
pub enum Family {
    /// `1/2 <= a < 1`: red `K_{2L-1} ∪ K_{n-2} ∪ K_{n-2}`.
    W1,
    /// `2/5 <= a < 1/2`: red `3K_{2L-1}`.
    W2,
    /// `0 < a < 2/5`: red `K_{L-1}` joined to `2n` independent vertices.
    W3,
    /// `a >= 1`: red `2K_{2L-1}`.
    W4,
    /// Triangle versus `F_n`: red `K_{2n,2n}`.
    W5,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::W1, Family::W2, Family::W3, Family::W4, Family::W5];

    /// The family whose regime contains `a` (never `W5`).
    pub fn for_ratio(a: RatioParam) -> Family {
        // a = p/q compared by cross-multiplication.
        let (p, q) = (a.p() as u128, a.q() as u128);
        if p >= q {
            Family::W4
        } else if 2 * p >= q {
            Family::W1
        } else if 5 * p >= 2 * q {
            Family::W2
        } else {
            Family::W3
        }
    }

    fn regime(self) -> &'static str {
        match self {
            Family::W1 => "1/2 <= a < 1",
            Family::W2 => "2/5 <= a < 1/2",
            Family::W3 => "0 < a < 2/5",
            Family::W4 => "a >= 1",
            Family::W5 => "cycle length 3, no ratio",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::W1 => "w1",
            Family::W2 => "w2",
            Family::W3 => "w3",
            Family::W4 => "w4",
            Family::W5 => "w5",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| format!("{f}").eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// `R(C_{2⌊an⌋}, F_n) >= lower_bound_value(a, n)`, piecewise in `a`.
/// Negative only for degenerate inputs where `⌊an⌋ = 0` in the `6L - 2` branch.
pub fn lower_bound_value(a: RatioParam, n: u64) -> i64 {
    let l = floor_an(a, n) as i64;
    let n = n as i64;
    match Family::for_ratio(a) {
        Family::W4 => 4 * l - 1,
        Family::W1 => 2 * l + 2 * n - 4,
        Family::W2 => 6 * l - 2,
        _ => l + 2 * n,
    }
}

/// Coefficient of `n` in the asymptotic value: `2 + 2a` on `[1/2, 1)`, `4a` from 1 on.
pub fn asymptotic_main_term(a: RatioParam) -> Result<Rational> {
    let r = a.to_rational();
    match Family::for_ratio(a) {
        Family::W4 => Ok(r * 4),
        Family::W1 => Ok(r * 2 + 2),
        _ => Err(Error::Regime(format!("no asymptotic formula for a = {a} < 1/2"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct TableRow {
    pub a: RatioParam,
    pub lower_bound: i64,
    /// `main_term · n`, absent below `a = 1/2`.
    pub main_term_n: Option<Rational>,
    /// `(main_term · n - lower_bound) / n`.
    pub gap: Option<Rational>,
}

pub fn asymptotic_table(a_list: &[RatioParam], n: u64) -> Vec<TableRow> {
    a_list
        .iter()
        .map(|&a| {
            let lower_bound = lower_bound_value(a, n);
            let main_term_n = asymptotic_main_term(a).ok().map(|c| c * n as i64);
            TableRow { a, lower_bound, main_term_n, gap: main_term_n.map(|m| (m - lower_bound) / n as i64) }
        })
        .collect()
}

/// A lower-bound construction request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ConstructionSpec {
    pub family: Family,
    /// Required for W1 to W4, ignored by W5.
    pub a: Option<RatioParam>,
    pub n: u64,
}

impl ConstructionSpec {
    pub fn new(family: Family, a: Option<RatioParam>, n: u64) -> Self {
        ConstructionSpec { family, a, n }
    }

    /// The cycle length `m` the construction is meant to avoid.
    pub fn cycle_length(&self) -> Result<u64> {
        match self.family {
            Family::W5 => Ok(3),
            _ => Ok(2 * self.big_l()?),
        }
    }

    fn big_l(&self) -> Result<u64> {
        let a = self.a.ok_or_else(|| Error::InvalidParameter(format!("family {} needs a", self.family)))?;
        Ok(floor_an(a, self.n))
    }

    /// Checks the regime and returns `⌊an⌋` (0 for W5).
    pub fn validate(&self) -> Result<u64> {
        let family = self.family;
        if family == Family::W5 {
            if self.n < 1 {
                return Err(Error::Regime("W5 needs n >= 1".into()));
            }
            return Ok(0);
        }
        let a = self.a.ok_or_else(|| Error::InvalidParameter(format!("family {family} needs a")))?;
        if Family::for_ratio(a) != family {
            return Err(Error::Regime(format!("{family} needs {}, got a = {a}", family.regime())));
        }
        if self.n < 2 {
            return Err(Error::Regime(format!("{family} needs n >= 2")));
        }
        let l = floor_an(a, self.n);
        if l < 2 {
            return Err(Error::Regime(format!("{family} needs ⌊an⌋ >= 2, got {l}")));
        }
        Ok(l)
    }

    /// Number of vertices of the construction.
    pub fn order(&self) -> Result<u64> {
        let l = self.validate()?;
        let n = self.n;
        Ok(match self.family {
            Family::W1 => 2 * l + 2 * n - 5,
            Family::W2 => 6 * l - 3,
            Family::W3 => l - 1 + 2 * n,
            Family::W4 => 4 * l - 2,
            Family::W5 => 4 * n,
        })
    }
}

/// Largest coloring built here: vertices are stored in dense bit rows.
pub const MAX_WITNESS_ORDER: u64 = 1 << 16;

pub fn build_witness(spec: &ConstructionSpec) -> Result<TwoColoring> {
    let l = spec.validate()? as usize;
    let order = spec.order()?;
    if order > MAX_WITNESS_ORDER {
        return Err(Error::TooLarge { size: order as usize, limit: MAX_WITNESS_ORDER as usize });
    }
    let n = spec.n as usize;
    let red = match spec.family {
        Family::W1 => SimpleGraph::disjoint_cliques(&[2 * l - 1, n - 2, n - 2]),
        Family::W2 => SimpleGraph::disjoint_cliques(&[2 * l - 1; 3]),
        Family::W3 => SimpleGraph::complete(l - 1).join(&SimpleGraph::new(2 * n)),
        Family::W4 => SimpleGraph::disjoint_cliques(&[2 * l - 1; 2]),
        Family::W5 => SimpleGraph::complete_bipartite(2 * n, 2 * n),
    };
    debug_assert_eq!(red.n() as u64, order);
    Ok(TwoColoring::from_red(red))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum Verdict {
    Avoids,
    ContainsRedCycle,
    ContainsBlueFan,
}

/// How a red component was shown to have no cycle of the target length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum CycleMethod {
    /// Fewer vertices than the cycle length.
    TooSmall,
    /// A clique of order `s` contains `C_k` exactly for `3 <= k <= s`.
    Clique,
    /// Bipartite, and the target length is odd.
    BipartiteOddTarget,
    /// `K_{p,q}` contains `C_k` exactly for even `4 <= k <= 2·min(p, q)`.
    CompleteBipartite,
    /// An independent set `I` caps every cycle at `2(s - |I|)` vertices.
    IndependentSetBound,
    /// Block-wise exact subset program.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct RedComponentEvidence {
    pub size: usize,
    pub method: CycleMethod,
    /// Known for cliques, complete bipartite components and the exact method.
    pub circumference: Option<usize>,
    /// Upper bound on the length of any cycle in the component.
    pub cycle_length_bound: usize,
}

/// How the blue blade counts were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum FanMethod {
    /// Red is a disjoint union of cliques, so blue is complete multipartite.
    CompleteMultipartite,
    /// Blue is a disjoint union of cliques.
    BlueCliques,
    /// Blue has no triangle, so no blade anywhere.
    TriangleFree,
    /// Maximum matching in every blue neighborhood.
    PerCenterMatching,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum Evidence {
    Structure {
        red_components: Vec<RedComponentEvidence>,
        fan_method: FanMethod,
        /// Largest blue fan at each vertex.
        blades_per_center: Vec<usize>,
    },
    RedCycle(CycleEmbedding),
    BlueFan(FanEmbedding),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Certificate {
    pub verdict: Verdict,
    pub target_cycle: usize,
    pub target_fan: usize,
    pub evidence: Evidence,
}

impl Certificate {
    pub fn max_blue_blades(&self) -> Option<usize> {
        match &self.evidence {
            Evidence::Structure { blades_per_center, .. } => Some(blades_per_center.iter().copied().max().unwrap_or(0)),
            _ => None,
        }
    }

    /// Re-checks the certificate against the coloring: embeddings must be
    /// genuine and of the target size, structural evidence must be reproduced.
    pub fn validate(&self, c: &TwoColoring) -> bool {
        match (&self.verdict, &self.evidence) {
            (Verdict::ContainsRedCycle, Evidence::RedCycle(cycle)) => {
                cycle.len() == self.target_cycle && cycle.is_valid_in(c.red())
            }
            (Verdict::ContainsBlueFan, Evidence::BlueFan(fan)) => {
                fan.blade_count() >= self.target_fan && fan.is_valid_in(&c.blue_graph())
            }
            (Verdict::Avoids, Evidence::Structure { .. }) => {
                verify_witness(c, self.target_cycle, self.target_fan).as_ref() == Ok(self)
            }
            _ => false,
        }
    }
}

/// Certifies that `c` has no red `C_m` and no blue fan with `n_fan` blades,
/// or returns an embedded counterexample. A red cycle is reported before a
/// blue fan. Red components outside the structural fast paths must have
/// blocks small enough for the exact cycle program.
pub fn verify_witness(c: &TwoColoring, m: usize, n_fan: usize) -> Result<Certificate> {
    if m < 3 {
        return Err(Error::InvalidParameter("cycle length must be at least 3".into()));
    }
    if n_fan < 1 {
        return Err(Error::InvalidParameter("a fan needs at least one blade".into()));
    }
    let certificate = |verdict, evidence| Certificate { verdict, target_cycle: m, target_fan: n_fan, evidence };
    let red = c.red();
    let components = red.components();
    let mut red_components = Vec::with_capacity(components.len());
    let mut red_cliques = true;
    for comp in &components {
        let (sub, map) = red.induced_subgraph(comp)?;
        red_cliques &= sub.is_complete();
        match red_component(&sub, m)? {
            Ok(ev) => red_components.push(ev),
            Err(cycle) => {
                let vertices = cycle.into_iter().map(|v| map[v]).collect();
                return Ok(certificate(Verdict::ContainsRedCycle, Evidence::RedCycle(CycleEmbedding { vertices })));
            }
        }
    }

    let blue = c.blue_graph();
    let (fan_method, blades_per_center) = if red_cliques {
        (FanMethod::CompleteMultipartite, multipartite_blades(&components, c.n()))
    } else if let Some(sizes) = clique_components(&blue) {
        (FanMethod::BlueCliques, sizes.into_iter().map(|s| (s - 1) / 2).collect())
    } else if blue.is_triangle_free() {
        (FanMethod::TriangleFree, vec![0; c.n()])
    } else {
        (FanMethod::PerCenterMatching, matching::fan_blade_profile(&blue))
    };
    if let Some(center) = blades_per_center.iter().position(|&b| b >= n_fan) {
        let fan = match fan_method {
            FanMethod::CompleteMultipartite => multipartite_fan(&components, c.n(), center, n_fan),
            _ => matching::max_fan_blades(&blue, center)?.1.truncated(n_fan),
        };
        debug_assert!(fan.is_valid_in(&blue));
        return Ok(certificate(Verdict::ContainsBlueFan, Evidence::BlueFan(fan)));
    }
    Ok(certificate(Verdict::Avoids, Evidence::Structure { red_components, fan_method, blades_per_center }))
}

/// Evidence that a connected red graph has no `C_m`, or a `C_m` in its labels.
fn red_component(sub: &SimpleGraph, m: usize) -> Result<core::result::Result<RedComponentEvidence, Vec<usize>>> {
    let s = sub.n();
    let ev = |method, circumference: Option<usize>, bound| {
        Ok(Ok(RedComponentEvidence { size: s, method, circumference, cycle_length_bound: bound }))
    };
    if s < m {
        let circumference = (s < 3).then_some(0);
        return ev(CycleMethod::TooSmall, circumference, s);
    }
    if sub.is_complete() {
        // s >= m >= 3.
        return Ok(Err((0..m).collect()));
    }
    if let Some((x, y)) = sub.bipartition() {
        let (p, q) = (x.len(), y.len());
        if sub.edge_count() == p * q && p.min(q) >= 1 {
            let c = if p.min(q) >= 2 { 2 * p.min(q) } else { 0 };
            if m % 2 == 1 || m > c {
                return ev(CycleMethod::CompleteBipartite, Some(c), c);
            }
            let k = m / 2;
            let vertices = (0..k).flat_map(|i| [x.as_slice()[i], y.as_slice()[i]]).collect();
            return Ok(Err(vertices));
        }
        if m % 2 == 1 {
            let bound = 2 * p.min(q);
            return ev(CycleMethod::BipartiteOddTarget, None, bound);
        }
    }
    let independent = greedy_independent_set(sub);
    let bound = 2 * (s - independent);
    if bound < m {
        return ev(CycleMethod::IndependentSetBound, None, bound);
    }
    match cycles::has_cycle_of_length(sub, m)? {
        Some(cycle) => Ok(Err(cycle.vertices)),
        None => {
            let c = cycles::circumference(sub)?.length;
            ev(CycleMethod::Exact, Some(c), c)
        }
    }
}

/// Size of an independent set chosen greedily by minimum remaining degree.
fn greedy_independent_set(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut size = 0;
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (degree[v], v)) {
        size += 1;
        alive[v] = false;
        let dropped: Vec<usize> = g.neighbors(v).filter(|&w| alive[w]).collect();
        for &w in &dropped {
            alive[w] = false;
        }
        for &w in &dropped {
            for x in g.neighbors(w) {
                degree[x] = degree[x].saturating_sub(1);
            }
        }
    }
    size
}

/// Component orders when every component of `g` is a clique.
fn clique_components(g: &SimpleGraph) -> Option<Vec<usize>> {
    let mut size = vec![0; g.n()];
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp).ok()?;
        if !sub.is_complete() {
            return None;
        }
        for v in comp.iter() {
            size[v] = comp.len();
        }
    }
    Some(size)
}

/// Blade counts when blue is complete multipartite with the given parts:
/// the neighborhood of `v` is complete multipartite on the other parts, with
/// matching number `min(⌊S/2⌋, S - M)` for total order `S` and largest part `M`.
fn multipartite_blades(parts: &[VertexSet], n: usize) -> Vec<usize> {
    let mut blades = vec![0; n];
    for (i, part) in parts.iter().enumerate() {
        let others = parts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.len());
        let total: usize = others.clone().sum();
        let largest = others.max().unwrap_or(0);
        for v in part.iter() {
            blades[v] = (total / 2).min(total - largest);
        }
    }
    blades
}

fn multipartite_fan(parts: &[VertexSet], n: usize, center: usize, want: usize) -> FanEmbedding {
    let mut others: Vec<&VertexSet> = parts.iter().filter(|p| !p.contains(center)).collect();
    // Largest part first; `parts` is already sorted that way.
    others.sort_by_key(|p| core::cmp::Reverse(p.len()));
    let order: Vec<usize> = others.iter().flat_map(|p| p.iter()).collect();
    let total = order.len();
    let largest = others.first().map_or(0, |p| p.len());
    let half = total / 2;
    let pairs: Vec<(usize, usize)> = if largest > half {
        (0..total - largest).map(|i| (order[i], order[largest + i])).collect()
    } else {
        (0..half).map(|i| (order[i], order[i + half])).collect()
    };
    debug_assert!(pairs.iter().all(|&(x, y)| x < n && y < n));
    FanEmbedding { center, blades: pairs.into_iter().take(want).map(|(x, y)| (x.min(y), x.max(y))).collect() }
}

/// Cycle/fan Ramsey values with a closed form in the literature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum LiteratureFamily {
    /// `R(C_3, F_n) = 4n + 1` for all `n >= 2`.
    TriangleFan { n: u64 },
    /// `R(C_{2m+1}, F_n) = 4n + 1` for fixed `m` and large `n`.
    OddCycleFan { m: u64, n: u64 },
    /// `R(C_n, F_m) = 2n - 1` for all `n > 3m`.
    CycleFan { n: u64, m: u64 },
    /// `R(F_m, F_n) = 4n + 1` for fixed `m >= 1` and large `n`.
    FanFan { m: u64, n: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct LiteratureValue {
    pub value: u64,
    pub validity: String,
    /// Set when the formula is only known for sufficiently large `n`.
    pub large_n_only: bool,
}

pub fn literature_value(family: LiteratureFamily) -> Result<LiteratureValue> {
    let value =
        |value, validity: &str, large_n_only| Ok(LiteratureValue { value, validity: validity.into(), large_n_only });
    match family {
        LiteratureFamily::TriangleFan { n } if n >= 2 => value(4 * n + 1, "all n >= 2", false),
        LiteratureFamily::TriangleFan { n } => Err(Error::NotAsserted(format!("R(C_3, F_{n}) needs n >= 2"))),
        LiteratureFamily::OddCycleFan { m, n } if m >= 1 && n >= 1 => {
            value(4 * n + 1, "fixed m, sufficiently large n", true)
        }
        LiteratureFamily::CycleFan { n, m } if m >= 1 && n > 3 * m => value(2 * n - 1, "n > 3m", false),
        LiteratureFamily::FanFan { m, n } if m >= 1 && n >= 1 => {
            value(4 * n + 1, "fixed m >= 1, sufficiently large n", true)
        }
        other => Err(Error::NotAsserted(format!("{other:?} is outside the stated validity range"))),
    }
}

/// How to read the `k > n1` branch of the star/matchings formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum StarMatchingInterpretation {
    /// Read the unnamed parameter as `t = k`.
    TEqualsK,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct StarMatchingValue {
    pub value: u64,
    /// True when the value came from the interpreted `k > n1` branch.
    pub interpreted: bool,
}

/// `R(S_k, n1·K_2, n2·K_2)` for `n1 >= n2 >= 1`: `2n1 + n2 - 1` when
/// `k <= n1`. The other branch is only returned under an explicit interpretation.
pub fn star_matching_ramsey(
    k: u64,
    n1: u64,
    n2: u64,
    interpretation: Option<StarMatchingInterpretation>,
) -> Result<StarMatchingValue> {
    if k < 1 || n2 < 1 || n1 < n2 {
        return Err(Error::InvalidParameter(format!("need k >= 1 and n1 >= n2 >= 1, got k={k}, n1={n1}, n2={n2}")));
    }
    if k <= n1 {
        return Ok(StarMatchingValue { value: 2 * n1 + n2 - 1, interpreted: false });
    }
    match interpretation {
        Some(StarMatchingInterpretation::TEqualsK) => {
            Ok(StarMatchingValue { value: n1 + n2 - 1 + k, interpreted: true })
        }
        None => {
            Err(Error::NotAsserted(format!("k = {k} > n1 = {n1}: formula ambiguous in source, pass an interpretation")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: u64, q: u64) -> RatioParam {
        RatioParam::new(p, q).unwrap()
    }

    #[test]
    fn floor_examples() {
        assert_eq!(floor_an(r(1, 3), 10), 3);
        assert_eq!(floor_an(r(1, 2), 7), 3);
        assert_eq!(floor_an(r(3, 2), 10), 15);
    }

    #[test]
    fn regimes_at_boundaries() {
        assert_eq!(Family::for_ratio(r(1, 2)), Family::W1);
        assert_eq!(Family::for_ratio(r(1, 1)), Family::W4);
        assert_eq!(Family::for_ratio(r(2, 5)), Family::W2);
        assert_eq!(Family::for_ratio(r(39, 100)), Family::W3);
        assert_eq!(Family::for_ratio(r(99, 100)), Family::W1);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_value(r(1, 2), 100), 296);
        assert_eq!(lower_bound_value(r(1, 1), 10), 39);
        assert_eq!(lower_bound_value(r(2, 5), 10), 22);
        assert_eq!(lower_bound_value(r(1, 4), 8), 18);
    }

    #[test]
    fn main_term_examples() {
        assert_eq!(asymptotic_main_term(r(1, 2)).unwrap(), Rational::from_integer(3));
        assert_eq!(asymptotic_main_term(r(1, 1)).unwrap(), Rational::from_integer(4));
        assert_eq!(asymptotic_main_term(r(3, 2)).unwrap(), Rational::from_integer(6));
        assert!(asymptotic_main_term(r(1, 4)).is_err());
    }

    #[test]
    fn table_examples() {
        let rows = asymptotic_table(&[r(3, 4), r(1, 1), r(1, 4)], 1_000_000);
        assert_eq!(rows[0].lower_bound, 3_499_996);
        assert_eq!(rows[0].main_term_n, Some(Rational::from_integer(3_500_000)));
        assert_eq!(rows[0].gap, Some(Rational::new(4, 1_000_000)));
        assert_eq!(rows[1].gap, Some(Rational::new(1, 1_000_000)));
        assert_eq!((rows[2].main_term_n, rows[2].gap), (None, None));
        assert_eq!(asymptotic_table(&[r(1, 4)], 100)[0].lower_bound, 225);
        assert!(asymptotic_table(&[], 5).is_empty());
    }

    #[test]
    fn witness_shapes() {
        let w1 = build_witness(&ConstructionSpec::new(Family::W1, Some(r(1, 2)), 10)).unwrap();
        assert_eq!(w1.n(), 25);
        let sizes: Vec<usize> = w1.red().components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, [9, 8, 8]);
        let w4 = build_witness(&ConstructionSpec::new(Family::W4, Some(r(1, 1)), 3)).unwrap();
        assert_eq!(w4.n(), 10);
        assert_eq!(w4.blue_graph(), SimpleGraph::complete_bipartite(5, 5));
        let w4 = build_witness(&ConstructionSpec::new(Family::W4, Some(r(1, 1)), 5)).unwrap();
        assert_eq!(w4.n(), 18);
        assert_eq!(w4.blue_graph(), SimpleGraph::complete_bipartite(9, 9));
        let w3 = build_witness(&ConstructionSpec::new(Family::W3, Some(r(1, 4)), 8)).unwrap();
        assert_eq!(w3.n(), 17);
        assert_eq!(w3.red().degree(0), 16);
        assert_eq!(w3.red().edge_count(), 16);
        assert!(build_witness(&ConstructionSpec::new(Family::W2, Some(r(1, 2)), 10)).is_err());
    }

    #[test]
    fn verify_examples() {
        let w1 = build_witness(&ConstructionSpec::new(Family::W1, Some(r(1, 2)), 10)).unwrap();
        let cert = verify_witness(&w1, 10, 10).unwrap();
        assert_eq!(cert.verdict, Verdict::Avoids);
        assert_eq!(cert.max_blue_blades(), Some(8));
        assert!(cert.validate(&w1));

        let blue_k5 = TwoColoring::from_red(SimpleGraph::new(5));
        let cert = verify_witness(&blue_k5, 3, 2).unwrap();
        assert_eq!(cert.verdict, Verdict::ContainsBlueFan);
        assert!(cert.validate(&blue_k5));

        let w5 = build_witness(&ConstructionSpec::new(Family::W5, None, 2)).unwrap();
        assert_eq!(w5.n(), 8);
        assert_eq!(verify_witness(&w5, 3, 2).unwrap().verdict, Verdict::Avoids);
        let cert = verify_witness(&w5, 4, 2).unwrap();
        assert_eq!(cert.verdict, Verdict::ContainsRedCycle);
        assert!(cert.validate(&w5));
    }

    #[test]
    fn exact_path_finds_cycle_in_irregular_component() {
        let c = TwoColoring::from_red(SimpleGraph::petersen());
        let cert = verify_witness(&c, 9, 20).unwrap();
        assert_eq!(cert.verdict, Verdict::ContainsRedCycle);
        assert!(cert.validate(&c));
        let cert = verify_witness(&c, 10, 20).unwrap();
        assert_eq!(cert.verdict, Verdict::Avoids);
        assert!(cert.validate(&c));
    }

    #[test]
    fn literature_examples() {
        assert_eq!(literature_value(LiteratureFamily::TriangleFan { n: 2 }).unwrap().value, 9);
        assert_eq!(literature_value(LiteratureFamily::CycleFan { n: 7, m: 2 }).unwrap().value, 13);
        let ff = literature_value(LiteratureFamily::FanFan { m: 1, n: 5 }).unwrap();
        assert_eq!((ff.value, ff.large_n_only), (21, true));
        assert!(literature_value(LiteratureFamily::CycleFan { n: 6, m: 2 }).is_err());
        assert!(literature_value(LiteratureFamily::TriangleFan { n: 1 }).is_err());
    }

    #[test]
    fn star_matching_examples() {
        assert_eq!(star_matching_ramsey(1, 2, 1, None).unwrap().value, 4);
        assert_eq!(star_matching_ramsey(2, 2, 2, None).unwrap().value, 5);
        assert_eq!(star_matching_ramsey(1, 1, 1, None).unwrap().value, 2);
        assert!(star_matching_ramsey(3, 2, 1, None).is_err());
        let v = star_matching_ramsey(3, 2, 1, Some(StarMatchingInterpretation::TEqualsK)).unwrap();
        assert_eq!((v.value, v.interpreted), (5, true));
    }
}
