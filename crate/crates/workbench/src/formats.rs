//! Text formats: graph6 files and `RAMSEY-COLORING v1` coloring files.

use std::fs;
use std::path::Path;

use ramsey_core::graph6::{parse_graph6, write_graph6};
use ramsey_core::{SimpleGraph, TwoColoring};

use crate::error::WorkbenchError;

pub const COLORING_HEADER: &str = "RAMSEY-COLORING v1";

/// Header line, then the graph6 string of the red graph. Blue is the complement.
pub fn write_coloring(c: &TwoColoring) -> String {
    format!("{COLORING_HEADER}\n{}\n", write_graph6(c.red()))
}

pub fn parse_coloring(text: &str) -> Result<TwoColoring, WorkbenchError> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    if header != COLORING_HEADER {
        return Err(WorkbenchError::Parse(format!("expected header `{COLORING_HEADER}`")));
    }
    let body = lines.next().ok_or_else(|| WorkbenchError::Parse("missing graph6 line".into()))?;
    if lines.any(|l| !l.is_empty()) {
        return Err(WorkbenchError::Parse("unexpected content after the graph6 line".into()));
    }
    let red = parse_graph6(body).map_err(|e| WorkbenchError::Parse(format!("red graph: {e}")))?;
    Ok(TwoColoring::from_red(red))
}

/// A graph6 file: one graph on the first line, optionally preceded by the
/// `>>graph6<<` marker. A coloring file is accepted too and yields its red graph.
pub fn parse_graph_text(text: &str) -> Result<SimpleGraph, WorkbenchError> {
    if text.starts_with(COLORING_HEADER) {
        return Ok(parse_coloring(text)?.into_red());
    }
    let line = text.lines().next().unwrap_or("");
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim_end_matches('\r');
    parse_graph6(line).map_err(|e| WorkbenchError::Parse(format!("graph6: {e}")))
}

fn read(path: &Path) -> Result<String, WorkbenchError> {
    fs::read_to_string(path).map_err(|e| WorkbenchError::Io(format!("{}: {e}", path.display())))
}

pub fn read_coloring(path: &Path) -> Result<TwoColoring, WorkbenchError> {
    parse_coloring(&read(path)?)
}

pub fn read_graph(path: &Path) -> Result<SimpleGraph, WorkbenchError> {
    parse_graph_text(&read(path)?)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), WorkbenchError> {
    fs::write(path, contents).map_err(|e| WorkbenchError::Io(format!("{}: {e}", path.display())))
}
