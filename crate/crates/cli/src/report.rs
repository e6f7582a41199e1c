//! Verification reports.
//!
//! The JSON payload is deterministic: stable key order and no timestamps, so
//! repeated runs are byte-identical. Wall time is part of the report but is
//! printed to stderr, never serialized.

use serde::Serialize;
use std::path::Path;
use std::time::Duration;

#[derive(Debug, Clone, Serialize)]
pub struct Metrics {
    pub states_explored: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub metrics: Metrics,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl VerificationReport {
    pub fn new(name: &str, pass: bool) -> Self {
        VerificationReport {
            schema: 1,
            name: name.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            witness: None,
            metrics: Metrics {
                states_explored: 0,
                depth: 0,
            },
            wall_time: Duration::ZERO,
        }
    }

    pub fn with_witness(mut self, witness: impl Serialize) -> Self {
        self.witness = Some(serde_json::to_value(witness).expect("serializable witness"));
        self
    }

    pub fn with_metrics(mut self, states_explored: usize, depth: usize) -> Self {
        self.metrics = Metrics {
            states_explored,
            depth,
        };
        self
    }

    pub fn emit(&self, json: Option<&Path>) -> anyhow::Result<i32> {
        println!(
            "{}: {}",
            self.name,
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            }
        );
        eprintln!("wall time: {:.3?}", self.wall_time);
        if let Some(path) = json {
            std::fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        }
        Ok(match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
        })
    }
}
