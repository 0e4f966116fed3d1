use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::expansion::{json_int, SchurExpansion};
use crate::stability::{ScanCell, SequenceReport};

/// One line of output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub command: String,
    /// Inputs in canonical text form.
    pub inputs: BTreeMap<String, String>,
    pub output: Output,
    pub engine: String,
    /// Only filled in when timing is requested, so default output stays
    /// byte-identical across runs.
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Output {
    Value(#[serde(with = "json_int")] BigInt),
    Expansion(SchurExpansion),
    Sequence(SequenceReport),
    Check(CheckOutcome),
    Cell(CellRecord),
    Summary(ScanSummary),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub index: usize,
    pub cell: ScanCell,
    /// Set when the cell breaks monotonicity in the conjectured family.
    pub potential_counterexample: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub cells: usize,
    pub failures: usize,
    pub potential_counterexamples: usize,
    pub observations: usize,
    pub passed: bool,
}

impl ResultRecord {
    pub fn new(command: &str, inputs: &[(&str, String)], output: Output) -> Self {
        ResultRecord {
            command: command.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            output,
            engine: crate::ENGINE_VERSION.to_string(),
            wall_ms: None,
        }
    }

    /// Canonical JSON: keys sorted at every level, no whitespace.
    pub fn to_json_line(&self) -> String {
        let value = serde_json::to_value(self).expect("records always serialize");
        serde_json::to_string(&value).expect("values always serialize")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}
