//! Multi-threaded arrowing search over the core task split.
//!
//! Workers pull task indices from a shared counter. Once some task finds a
//! good coloring, tasks with larger indices are abandoned; the merged
//! report depends only on the task outcomes before the first witness, so it
//! is the same for every thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use ramsey_core::search::{
    check_witness, merge_outcomes, run_task, task_list, SearchProblem, SearchReport, SearchResult, TaskOutcome,
};

use crate::checkpoint::{Checkpoint, CompletedTask};
use crate::error::WorkbenchError;

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: SearchReport,
    /// Set when the budget ran out: every fully searched task.
    pub checkpoint: Option<Checkpoint>,
}

/// Runs `arrows` with `threads` workers until `deadline`. A checkpoint's
/// completed tasks are taken as already searched.
pub fn run_arrows(
    problem: SearchProblem,
    threads: usize,
    deadline: Option<Instant>,
    resume: Option<&Checkpoint>,
) -> Result<RunOutcome, WorkbenchError> {
    let list = task_list(&problem);
    let total = list.tasks.len();
    let mut initial: Vec<Option<TaskOutcome>> = vec![None; total];
    if let Some(cp) = resume {
        cp.check_matches(&problem, total)?;
        for t in &cp.completed {
            initial[t.task] = Some(TaskOutcome::Exhausted { nodes: t.nodes });
        }
    }
    let pending: Vec<usize> = (0..total).filter(|&i| initial[i].is_none()).collect();
    let outcomes = Mutex::new(initial);
    let next = AtomicUsize::new(0);
    let first_found = AtomicUsize::new(usize::MAX);
    let out_of_time = || deadline.is_some_and(|d| Instant::now() >= d);

    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&index) = pending.get(k) else { break };
                if index > first_found.load(Ordering::Acquire) || out_of_time() {
                    break;
                }
                let stop = || out_of_time() || first_found.load(Ordering::Acquire) < index;
                let outcome = run_task(&problem, &list.tasks[index], &stop);
                if matches!(outcome, TaskOutcome::Found { .. }) {
                    first_found.fetch_min(index, Ordering::AcqRel);
                }
                outcomes.lock().expect("no worker panicked")[index] = Some(outcome);
            });
        }
    });

    let outcomes = outcomes.into_inner().expect("no worker panicked");
    let report = merge_outcomes(problem, &list, &outcomes);
    check_witness(&report)?;
    let checkpoint = (report.result == SearchResult::BudgetExhausted).then(|| {
        let completed = outcomes
            .iter()
            .enumerate()
            .filter_map(|(task, o)| match o {
                Some(TaskOutcome::Exhausted { nodes }) => Some(CompletedTask { task, nodes: *nodes }),
                _ => None,
            })
            .collect();
        Checkpoint::new(problem, total, completed)
    });
    Ok(RunOutcome { report, checkpoint })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramsey_core::search::{arrows, Unlimited};

    #[test]
    fn matches_sequential_search() {
        for (n, m, f) in [(8, 3, 2), (9, 3, 2), (6, 4, 1), (5, 3, 1), (7, 5, 2)] {
            let p = SearchProblem::new(n, m, f).unwrap();
            let seq = arrows(p, &Unlimited).unwrap();
            for threads in [1, 3, 8] {
                let r = run_arrows(p, threads, None, None).unwrap();
                assert_eq!(r.report, seq);
                assert!(r.checkpoint.is_none());
            }
        }
    }

    #[test]
    fn expired_budget_checkpoints_and_resumes() {
        let p = SearchProblem::new(9, 3, 2).unwrap();
        let past = Instant::now();
        let r = run_arrows(p, 2, Some(past), None).unwrap();
        assert_eq!(r.report.result, SearchResult::BudgetExhausted);
        let cp = r.checkpoint.unwrap();
        let resumed = run_arrows(p, 2, None, Some(&cp)).unwrap();
        assert_eq!(resumed.report, arrows(p, &Unlimited).unwrap());
    }
}
