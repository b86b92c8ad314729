//! The JSON report envelope shared by every command (`docs/report-schema.json`).

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use ramsey_core::constructions::{verify_witness, Verdict};
use ramsey_core::cycles::CycleEmbedding;
use ramsey_core::matching::FanEmbedding;
use ramsey_core::{SimpleGraph, TwoColoring};

use crate::error::WorkbenchError;
use crate::formats::{parse_coloring, parse_graph_text, write_coloring};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: String,
    pub command: String,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub witnesses: Vec<Witness>,
    pub timing: Timing,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// `good-coloring`, `counterexample-coloring`, `graph`, `red-cycle`,
    /// `blue-fan`, `cycle`, `fan`, `matching`.
    pub kind: String,
    /// `ramsey-coloring-v1`, `graph6`, `vertex-list`, `fan` or `edge-list`.
    pub encoding: String,
    pub data: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    /// Null under `--stable-output`.
    pub wall_seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool_version: String,
    pub seed: Option<u64>,
    pub thread_count: usize,
}

impl JsonReport {
    pub fn new(command: &str, parameters: Map<String, Value>, result: Value) -> Self {
        JsonReport {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            parameters,
            result,
            witnesses: Vec::new(),
            timing: Timing { wall_seconds: None },
            provenance: Provenance { tool_version: env!("CARGO_PKG_VERSION").into(), seed: None, thread_count: 1 },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, WorkbenchError> {
        Ok(serde_json::from_str(text)?)
    }
}

impl Witness {
    pub fn coloring(kind: &str, c: &TwoColoring) -> Self {
        Witness { kind: kind.into(), encoding: "ramsey-coloring-v1".into(), data: Value::String(write_coloring(c)) }
    }

    pub fn graph(kind: &str, g: &SimpleGraph) -> Self {
        Witness {
            kind: kind.into(),
            encoding: "graph6".into(),
            data: Value::String(ramsey_core::graph6::write_graph6(g)),
        }
    }

    pub fn cycle(kind: &str, c: &CycleEmbedding) -> Self {
        Witness {
            kind: kind.into(),
            encoding: "vertex-list".into(),
            data: serde_json::to_value(&c.vertices).expect("vertex list serializes"),
        }
    }

    pub fn fan(kind: &str, f: &FanEmbedding) -> Self {
        Witness { kind: kind.into(), encoding: "fan".into(), data: serde_json::to_value(f).expect("fan serializes") }
    }

    pub fn edges(kind: &str, edges: &[(usize, usize)]) -> Self {
        Witness {
            kind: kind.into(),
            encoding: "edge-list".into(),
            data: serde_json::to_value(edges).expect("edge list serializes"),
        }
    }

    fn text(&self) -> Result<&str, WorkbenchError> {
        self.data
            .as_str()
            .ok_or_else(|| WorkbenchError::Parse(format!("{} witness data must be a string", self.encoding)))
    }

    /// Decodes a coloring witness.
    pub fn as_coloring(&self) -> Result<TwoColoring, WorkbenchError> {
        if self.encoding != "ramsey-coloring-v1" {
            return Err(WorkbenchError::Parse(format!("not a coloring witness: {}", self.encoding)));
        }
        parse_coloring(self.text()?)
    }

    pub fn as_graph(&self) -> Result<SimpleGraph, WorkbenchError> {
        if self.encoding != "graph6" {
            return Err(WorkbenchError::Parse(format!("not a graph6 witness: {}", self.encoding)));
        }
        parse_graph_text(self.text()?)
    }

    pub fn as_cycle(&self) -> Result<CycleEmbedding, WorkbenchError> {
        Ok(CycleEmbedding { vertices: serde_json::from_value(self.data.clone())? })
    }

    pub fn as_fan(&self) -> Result<FanEmbedding, WorkbenchError> {
        Ok(serde_json::from_value(self.data.clone())?)
    }

    pub fn as_edges(&self) -> Result<Vec<(usize, usize)>, WorkbenchError> {
        Ok(serde_json::from_value(self.data.clone())?)
    }
}

/// Re-parses every witness of a report and re-verifies the ones that carry
/// a claim: good colorings must avoid the targets named in `parameters`,
/// counterexample embeddings must be genuine in the embedded coloring.
pub fn reverify(report: &JsonReport) -> Result<(), WorkbenchError> {
    let param = |key: &str| {
        report.parameters.get(key).or_else(|| report.result.get(key)).and_then(Value::as_u64).map(|v| v as usize)
    };
    let targets = param("cycle").zip(param("fan"));
    let colorings: Vec<TwoColoring> = report
        .witnesses
        .iter()
        .filter(|w| w.encoding == "ramsey-coloring-v1")
        .map(Witness::as_coloring)
        .collect::<Result<_, _>>()?;
    let host = colorings.first();
    let graph = report.witnesses.iter().find(|w| w.encoding == "graph6").map(Witness::as_graph).transpose()?;
    let bad = |what: &str| {
        Err(WorkbenchError::Core(ramsey_core::Error::Inconsistent(format!("{what} witness fails re-verification"))))
    };
    for w in &report.witnesses {
        match w.kind.as_str() {
            "good-coloring" => {
                let c = w.as_coloring()?;
                if let Some((m, f)) = targets {
                    if c.n() > 0 && verify_witness(&c, m, f)?.verdict != Verdict::Avoids {
                        return bad("good-coloring");
                    }
                }
            }
            "red-cycle" => {
                let cyc = w.as_cycle()?;
                if let Some(c) = host {
                    if !cyc.is_valid_in(c.red()) || targets.is_some_and(|(m, _)| cyc.len() != m) {
                        return bad("red-cycle");
                    }
                }
            }
            "blue-fan" => {
                let fan = w.as_fan()?;
                if let Some(c) = host {
                    if !fan.is_valid_in(&c.blue_graph()) || targets.is_some_and(|(_, f)| fan.blade_count() < f) {
                        return bad("blue-fan");
                    }
                }
            }
            "cycle" => {
                let cyc = w.as_cycle()?;
                if graph.as_ref().is_some_and(|g| !cyc.is_valid_in(g)) {
                    return bad("cycle");
                }
            }
            "fan" => {
                let fan = w.as_fan()?;
                if graph.as_ref().is_some_and(|g| !fan.is_valid_in(g)) {
                    return bad("fan");
                }
            }
            "matching" => {
                let edges = w.as_edges()?;
                if let Some(g) = &graph {
                    let m = ramsey_core::matching::Matching { edges };
                    if !m.is_valid_in(g) {
                        return bad("matching");
                    }
                }
            }
            _ => {}
        }
    }
    Ok(())
}
