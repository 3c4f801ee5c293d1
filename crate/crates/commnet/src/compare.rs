//! Scores a candidate network's statistics profile against a reference.
//!
//! Every compared metric gets one entry: each degree-type matrix cell, the
//! PLC-Fiber ratio, each average-degree-load value, the pathlength skewness
//! coefficient, and each per-type average edge betweenness. Map keys present
//! in only one profile compare against 0 so a silently missing node or edge
//! type fails loudly. Deltas are absolute differences (symmetric under
//! swapping the profiles); every metric passes when its delta is within the
//! absolute tolerance except AEBC, which scales with network size and
//! therefore passes when the delta is within `aebc_relative` of the
//! reference magnitude.

use crate::metrics::StatisticsProfile;
use crate::model::{EdgeType, NodeType};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

/// Per-metric absolute tolerances (`aebc_relative` is a fraction of the
/// reference value).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToleranceSpec {
    pub matrix_cell: f64,
    pub ratio: f64,
    pub adl: f64,
    pub skewness: f64,
    pub aebc_relative: f64,
}

impl Default for ToleranceSpec {
    fn default() -> Self {
        ToleranceSpec {
            matrix_cell: 0.01,
            ratio: 0.01,
            adl: 0.1,
            skewness: 0.05,
            aebc_relative: 0.05,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompareError {
    #[error("tolerance `{name}` must be non-negative, got {value}")]
    NegativeTolerance { name: &'static str, value: f64 },
}

impl ToleranceSpec {
    pub fn validate(&self) -> Result<(), CompareError> {
        for (name, value) in [
            ("matrix_cell", self.matrix_cell),
            ("ratio", self.ratio),
            ("adl", self.adl),
            ("skewness", self.skewness),
            ("aebc_relative", self.aebc_relative),
        ] {
            if value < 0.0 || value.is_nan() {
                return Err(CompareError::NegativeTolerance { name, value });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonEntry {
    pub name: String,
    pub reference: f64,
    pub candidate: f64,
    pub delta: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub entries: Vec<ComparisonEntry>,
    pub overall_pass: bool,
}

impl ComparisonReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Aligned plain-text table with one row per entry.
    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|e| e.name.len())
            .chain(["metric".len()])
            .max()
            .unwrap_or(6);
        let mut out = String::new();
        writeln!(
            out,
            "{:<width$}  {:>12}  {:>12}  {:>12}  result",
            "metric", "reference", "candidate", "delta"
        )
        .expect("write to String cannot fail");
        for entry in &self.entries {
            writeln!(
                out,
                "{:<width$}  {:>12.6}  {:>12.6}  {:>12.6}  {}",
                entry.name,
                entry.reference,
                entry.candidate,
                entry.delta,
                if entry.pass { "pass" } else { "FAIL" }
            )
            .expect("write to String cannot fail");
        }
        writeln!(
            out,
            "overall: {}",
            if self.overall_pass { "PASS" } else { "FAIL" }
        )
        .expect("write to String cannot fail");
        out
    }
}

/// Compares two profiles metric by metric. Entry order is deterministic:
/// `adl.*`, `aebc.*`, `matrix.*`, `plc_fiber_ratio`, `psl_skewness`.
pub fn compare_profiles(
    reference: &StatisticsProfile,
    candidate: &StatisticsProfile,
    tolerances: &ToleranceSpec,
) -> Result<ComparisonReport, CompareError> {
    tolerances.validate()?;
    let mut entries = Vec::new();

    let node_types: BTreeSet<NodeType> = reference
        .adl
        .keys()
        .chain(candidate.adl.keys())
        .copied()
        .collect();
    for node_type in node_types {
        let r = reference.adl.get(&node_type).copied().unwrap_or(0.0);
        let c = candidate.adl.get(&node_type).copied().unwrap_or(0.0);
        entries.push(absolute_entry(format!("adl.{node_type}"), r, c, tolerances.adl));
    }

    let edge_types: BTreeSet<EdgeType> = reference
        .aebc
        .keys()
        .chain(candidate.aebc.keys())
        .copied()
        .collect();
    for edge_type in edge_types {
        let r = reference.aebc.get(&edge_type).copied().unwrap_or(0.0);
        let c = candidate.aebc.get(&edge_type).copied().unwrap_or(0.0);
        let delta = (r - c).abs();
        entries.push(ComparisonEntry {
            name: format!("aebc.{edge_type}"),
            reference: r,
            candidate: c,
            delta,
            pass: delta <= tolerances.aebc_relative * r.abs(),
        });
    }

    let cells: BTreeSet<(NodeType, EdgeType)> = reference
        .degree_type_matrix
        .iter()
        .chain(candidate.degree_type_matrix.iter())
        .map(|(nt, et, _)| (nt, et))
        .collect();
    for (node_type, edge_type) in cells {
        let r = reference.degree_type_matrix.cell(node_type, edge_type);
        let c = candidate.degree_type_matrix.cell(node_type, edge_type);
        entries.push(absolute_entry(
            format!("matrix.{node_type}.{edge_type}"),
            r,
            c,
            tolerances.matrix_cell,
        ));
    }

    entries.push(absolute_entry(
        "plc_fiber_ratio".to_owned(),
        reference.plc_fiber_ratio,
        candidate.plc_fiber_ratio,
        tolerances.ratio,
    ));
    entries.push(absolute_entry(
        "psl_skewness".to_owned(),
        reference.psl_histogram.skewness,
        candidate.psl_histogram.skewness,
        tolerances.skewness,
    ));

    let overall_pass = entries.iter().all(|e| e.pass);
    Ok(ComparisonReport {
        entries,
        overall_pass,
    })
}

fn absolute_entry(name: String, reference: f64, candidate: f64, tolerance: f64) -> ComparisonEntry {
    let delta = (reference - candidate).abs();
    ComparisonEntry {
        name,
        reference,
        candidate,
        delta,
        pass: delta <= tolerance,
    }
}
