//! Exhaustive arrowing checks and small Ramsey numbers `R(C_m, F_n)`.
//!
//! The search is split into independent tasks (colored prefixes of the first
//! few vertices). Results are defined in task order so that any scheduler
//! that runs the tasks and merges them with [`merge_outcomes`] reproduces
//! the sequential report exactly, node counts included.

mod audit;
mod engine;

use alloc::vec::Vec;

use crate::constructions::{verify_witness, Verdict};
use crate::error::{Error, Result};
use crate::graph::TwoColoring;

pub use audit::{random_coloring_audit, AuditMode, AuditReport};
pub(crate) use engine::has_matching as has_matching_in;
pub use engine::{
    engine_accepts, run_task, task_list, Budget, SearchProblem, Task, TaskList, TaskOutcome, Unlimited,
    DEFAULT_SPLIT_DEPTH, MAX_SEARCH_ORDER,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "kebab-case"))]
pub enum SearchResult {
    /// Every coloring contains a red cycle or a blue fan.
    Arrows,
    GoodColoringFound,
    ExactValue(usize),
    /// No arrowing `N` up to the limit.
    ExceedsMax,
    BudgetExhausted,
}

/// Outcome of an arrowing search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub problem: SearchProblem,
    pub result: SearchResult,
    /// A good coloring of `K_N` when one exists.
    pub witness: Option<TwoColoring>,
    /// Accepted partial colorings, counted in task order up to the witness.
    pub nodes_expanded: u64,
    pub tasks_total: usize,
    /// Index of the task holding the witness.
    pub witness_task: Option<usize>,
}

/// Combines per-task outcomes given in task order. Outcomes after the
/// first `Found` are ignored. Missing or interrupted outcomes before any
/// `Found` make the result `BudgetExhausted`.
pub fn merge_outcomes(problem: SearchProblem, list: &TaskList, outcomes: &[Option<TaskOutcome>]) -> SearchReport {
    let mut nodes = list.prefix_nodes;
    let mut report = SearchReport {
        problem,
        result: SearchResult::Arrows,
        witness: None,
        nodes_expanded: 0,
        tasks_total: list.tasks.len(),
        witness_task: None,
    };
    for index in 0..list.tasks.len() {
        match outcomes.get(index).and_then(|o| o.as_ref()) {
            Some(TaskOutcome::Exhausted { nodes: k }) => nodes += k,
            Some(TaskOutcome::Found { nodes: k, coloring }) => {
                nodes += k;
                report.result = SearchResult::GoodColoringFound;
                report.witness = Some(coloring.clone());
                report.witness_task = Some(index);
                break;
            }
            Some(TaskOutcome::Interrupted { nodes: k }) => {
                nodes += k;
                report.result = SearchResult::BudgetExhausted;
            }
            None => report.result = SearchResult::BudgetExhausted,
        }
    }
    report.nodes_expanded = nodes;
    report
}

/// Sequential arrowing search: does every coloring of `K_N` contain a red
/// `C_m` or a blue fan with `n_fan` blades?
pub fn arrows(problem: SearchProblem, budget: &dyn Budget) -> Result<SearchReport> {
    let list = task_list(&problem);
    let mut outcomes = Vec::with_capacity(list.tasks.len());
    for task in &list.tasks {
        if budget.exhausted() {
            break;
        }
        let outcome = run_task(&problem, task, budget);
        let stop = !matches!(outcome, TaskOutcome::Exhausted { .. });
        outcomes.push(Some(outcome));
        if stop {
            break;
        }
    }
    let report = merge_outcomes(problem, &list, &outcomes);
    check_witness(&report)?;
    Ok(report)
}

/// Re-verifies a reported good coloring with the independent verifier and
/// checks that every vertex-deleted subcoloring is still good.
pub fn check_witness(report: &SearchReport) -> Result<()> {
    let Some(c) = &report.witness else { return Ok(()) };
    let p = &report.problem;
    let good = |c: &TwoColoring| -> Result<bool> {
        if c.n() == 0 {
            return Ok(true);
        }
        Ok(verify_witness(c, p.cycle, p.fan)?.verdict == Verdict::Avoids)
    };
    if c.n() != p.n || !good(c)? {
        return Err(Error::Inconsistent("search returned a coloring that fails verification".into()));
    }
    for v in 0..c.n() {
        if !good(&c.delete_vertex(v))? {
            return Err(Error::Inconsistent("restriction of a good coloring is not good".into()));
        }
    }
    Ok(())
}

/// Smallest arrowing `N`, with per-`N` reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactReport {
    pub cycle: usize,
    pub fan: usize,
    pub max_n: usize,
    pub result: SearchResult,
    /// Good coloring on `value - 1` vertices.
    pub witness: Option<TwoColoring>,
    pub steps: Vec<SearchReport>,
}

impl ExactReport {
    pub fn value(&self) -> Option<usize> {
        match self.result {
            SearchResult::ExactValue(v) => Some(v),
            _ => None,
        }
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.steps.iter().map(|s| s.nodes_expanded).sum()
    }
}

/// Runs the arrowing search for `N = 1, 2, ...` up to `max_n` and stops at
/// the first arrowing `N`. `step` runs one arrowing search, which lets the
/// caller substitute a parallel driver.
pub fn ramsey_exact_with<F>(
    cycle: usize,
    fan: usize,
    max_n: usize,
    template: SearchProblem,
    mut step: F,
) -> Result<ExactReport>
where
    F: FnMut(SearchProblem) -> Result<SearchReport>,
{
    let mut report =
        ExactReport { cycle, fan, max_n, result: SearchResult::ExceedsMax, witness: None, steps: Vec::new() };
    let mut previous: Option<TwoColoring> = None;
    for n in 1..=max_n.min(MAX_SEARCH_ORDER) {
        let mut problem = SearchProblem::new(n, cycle, fan)?;
        problem.symmetry = template.symmetry;
        problem.split_depth = template.split_depth;
        let r = step(problem)?;
        let result = r.result;
        let witness = r.witness.clone();
        report.steps.push(r);
        match result {
            SearchResult::Arrows => {
                report.result = SearchResult::ExactValue(n);
                report.witness = previous;
                return Ok(report);
            }
            SearchResult::GoodColoringFound => {
                // A good coloring at n restricts to one at n - 1, so arrowing is monotone.
                previous = witness;
            }
            _ => {
                report.result = SearchResult::BudgetExhausted;
                return Ok(report);
            }
        }
    }
    Ok(report)
}

pub fn ramsey_exact(cycle: usize, fan: usize, max_n: usize, budget: &dyn Budget) -> Result<ExactReport> {
    let template = SearchProblem::new(1, cycle, fan)?;
    ramsey_exact_with(cycle, fan, max_n, template, |p| arrows(p, budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrows_small_examples() {
        let r = arrows(SearchProblem::new(6, 3, 1).unwrap(), &Unlimited).unwrap();
        assert_eq!(r.result, SearchResult::Arrows);
        let r = arrows(SearchProblem::new(5, 3, 1).unwrap(), &Unlimited).unwrap();
        assert_eq!(r.result, SearchResult::GoodColoringFound);
        let w = r.witness.unwrap();
        assert_eq!(w.red().edge_count(), 5);
        assert!(w.red().components().len() == 1 && w.red().max_degree() == 2);
    }

    #[test]
    fn exact_small_values() {
        let r = ramsey_exact(3, 1, 10, &Unlimited).unwrap();
        assert_eq!(r.value(), Some(6));
        assert_eq!(r.witness.as_ref().unwrap().n(), 5);
        let r = ramsey_exact(4, 1, 10, &Unlimited).unwrap();
        assert_eq!(r.value(), Some(7));
    }

    #[test]
    fn budget_stops_search() {
        let r = arrows(SearchProblem::new(8, 3, 2).unwrap(), &|| true).unwrap();
        assert_eq!(r.result, SearchResult::BudgetExhausted);
    }

    #[test]
    fn exceeds_max_is_reported() {
        let r = ramsey_exact(3, 1, 4, &Unlimited).unwrap();
        assert_eq!(r.result, SearchResult::ExceedsMax);
        assert_eq!(r.value(), None);
    }
}
