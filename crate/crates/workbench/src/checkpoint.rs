//! Resumable search frontier (`docs/checkpoint.md`).

use std::path::Path;

use serde::{Deserialize, Serialize};

use ramsey_core::search::SearchProblem;

use crate::error::WorkbenchError;
use crate::formats::write_file;

pub const CHECKPOINT_FORMAT: &str = "ramsey-workbench-checkpoint";
pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format: String,
    pub version: u32,
    pub problem: SearchProblem,
    pub tasks_total: usize,
    /// Tasks whose subtree was searched completely without a good coloring.
    pub completed: Vec<CompletedTask>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletedTask {
    pub task: usize,
    pub nodes: u64,
}

impl Checkpoint {
    pub fn new(problem: SearchProblem, tasks_total: usize, mut completed: Vec<CompletedTask>) -> Self {
        completed.sort_by_key(|t| t.task);
        Checkpoint { format: CHECKPOINT_FORMAT.into(), version: CHECKPOINT_VERSION, problem, tasks_total, completed }
    }

    pub fn parse(text: &str) -> Result<Self, WorkbenchError> {
        let c: Checkpoint = serde_json::from_str(text)?;
        if c.format != CHECKPOINT_FORMAT || c.version != CHECKPOINT_VERSION {
            return Err(WorkbenchError::Parse(format!("unsupported checkpoint {} version {}", c.format, c.version)));
        }
        if c.completed.iter().any(|t| t.task >= c.tasks_total) {
            return Err(WorkbenchError::Parse("checkpoint task index out of range".into()));
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self, WorkbenchError> {
        let text = std::fs::read_to_string(path).map_err(|e| WorkbenchError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), WorkbenchError> {
        write_file(path, &(serde_json::to_string_pretty(self)? + "\n"))
    }

    /// Rejects a checkpoint written for a different problem or task split.
    pub fn check_matches(&self, problem: &SearchProblem, tasks_total: usize) -> Result<(), WorkbenchError> {
        if &self.problem != problem || self.tasks_total != tasks_total {
            return Err(WorkbenchError::Usage("checkpoint belongs to a different search problem".into()));
        }
        Ok(())
    }
}
