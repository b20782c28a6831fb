//! The output document shared by every subcommand.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use rootjones_core::Cyclotomic;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub seed: Option<u64>,
    pub wall_time_ms: f64,
    /// Per-step wall times, kept apart from `outputs` so that reruns compare
    /// equal.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub timings_ms: BTreeMap<String, f64>,
}

impl RunReport {
    /// Runs `f` and wraps its outputs with the elapsed time.
    pub fn timed<F>(command: &str, inputs: Value, seed: Option<u64>, f: F) -> anyhow::Result<Self>
    where
        F: FnOnce() -> anyhow::Result<Value>,
    {
        let start = Instant::now();
        let outputs = f()?;
        Ok(Self {
            command: command.to_string(),
            inputs,
            outputs,
            seed,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            timings_ms: BTreeMap::new(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// `key: value` lines, nested keys joined with dots.
    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("command: {}", self.command)];
        flatten("inputs", &self.inputs, &mut lines);
        flatten("outputs", &self.outputs, &mut lines);
        if let Some(seed) = self.seed {
            lines.push(format!("seed: {seed}"));
        }
        for (k, v) in &self.timings_ms {
            lines.push(format!("timings_ms.{k}: {v:.1}"));
        }
        lines.push(format!("wall_time_ms: {:.1}", self.wall_time_ms));
        lines.join("\n")
    }

    /// Equality ignoring wall times.
    pub fn same_result(&self, other: &RunReport) -> bool {
        self.command == other.command
            && self.inputs == other.inputs
            && self.outputs == other.outputs
            && self.seed == other.seed
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}: {s}")),
        _ => out.push(format!("{prefix}: {v}")),
    }
}

/// Exact element with its complex approximation.
pub fn exact_value(v: &Cyclotomic) -> Value {
    let (re, im) = v.to_complex();
    json!({
        "level": v.level(),
        "coefficients": v.coefficient_strings(),
        "re": re,
        "im": im,
    })
}
