//! Self-contained records of the proof obligations behind one lower bound.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{MultipartiteSpec, SimpleGraph};
use crate::oracle::{is_potentially_with, Prefilter};
use crate::sequence::DegreeSequence;
use crate::witness::{dominance_check, WitnessSpec};

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// The oracle was not run because n exceeds the exhaustion limit.
    #[serde(rename = "skipped: over limit")]
    SkippedOverLimit,
}

impl CheckStatus {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedOverLimit => "skipped: over limit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
}

/// Check names, in the order they are recorded.
pub const DEGREES_MATCH: &str = "witness_degrees_match_sequence";
pub const GRAPHICAL: &str = "sequence_graphical";
pub const SUM_PLUS_TWO: &str = "sum_plus_two_equals_bound";
pub const DOMINANCE_FAILS: &str = "dominance_fails";
pub const NO_EMBEDDING: &str = "no_embedding_in_witness";
pub const ORACLE: &str = "oracle_not_potentially";

/// The JSON block emitted by `potseq certify`. Field order is fixed, so
/// the serialized form is byte-stable for fixed inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub parts: String,
    pub cut_index: usize,
    pub n: usize,
    pub parity_case: String,
    pub bound: i64,
    pub witness_graph6: String,
    pub witness_sequence: DegreeSequence,
    pub checks: Vec<Check>,
}

impl Certificate {
    /// Builds the witness for `spec` and runs every check. The exhaustive
    /// oracle runs only when `n <= oracle_limit`.
    pub fn issue(spec: &WitnessSpec, oracle_limit: usize) -> Result<Self> {
        let graph = spec.build()?;
        let sequence = spec.sequence();
        let target = spec.parts().complete_multipartite();

        let mut checks = vec![
            (
                DEGREES_MATCH,
                CheckStatus::from_bool(graph.degree_sequence() == sequence),
            ),
            (GRAPHICAL, CheckStatus::from_bool(sequence.is_graphical())),
            (
                SUM_PLUS_TWO,
                CheckStatus::from_bool(sequence.sum() as i64 + 2 == spec.bound()),
            ),
            (
                DOMINANCE_FAILS,
                CheckStatus::from_bool(!dominance_check(&sequence, spec.parts())?),
            ),
            (
                NO_EMBEDDING,
                CheckStatus::from_bool(!graph.contains_subgraph(&target)),
            ),
        ];
        let oracle = if spec.n() > oracle_limit || !sequence.is_graphical() {
            CheckStatus::SkippedOverLimit
        } else {
            CheckStatus::from_bool(!is_potentially_with(&sequence, &target, Prefilter::Off)?)
        };
        checks.push((ORACLE, oracle));

        Ok(Certificate {
            parts: spec.parts().to_string(),
            cut_index: spec.cut_index(),
            n: spec.n(),
            parity_case: spec.parity_case().to_string(),
            bound: spec.bound(),
            witness_graph6: graph.to_graph6(),
            witness_sequence: sequence,
            checks: checks
                .into_iter()
                .map(|(name, status)| Check {
                    name: name.to_string(),
                    status,
                })
                .collect(),
        })
    }

    /// True when no check failed (skipped checks do not count against it).
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.status)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    /// Human summary followed by the fenced JSON block.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "certificate for K_{{{}}} with i = {}, n = {} ({} case)\n",
            self.parts, self.cut_index, self.n, self.parity_case
        );
        out.push_str(&format!("bound {}\n", self.bound));
        for c in &self.checks {
            out.push_str(&format!("  {:<34} {}\n", c.name, c.status));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.all_passed() {
                "all checks pass"
            } else {
                "FAILED"
            }
        ));
        out.push_str("```certificate\n");
        out.push_str(&self.to_json());
        out.push_str("\n```\n");
        out
    }

    /// Extracts the certificate from [`Certificate::to_text`] output (or
    /// accepts bare JSON).
    pub fn from_text(text: &str) -> Result<Self> {
        let json = match text.split_once("```certificate\n") {
            Some((_, rest)) => rest.split("```").next().unwrap_or(""),
            None => text,
        };
        serde_json::from_str(json).map_err(|e| Error::InvalidSpec(format!("bad certificate: {e}")))
    }

    /// Recomputes the graph-level checks from the recorded graph6 string
    /// alone and reports whether each recorded status is reproduced.
    pub fn replay(&self) -> Result<bool> {
        let (parts, _) = MultipartiteSpec::normalized(crate::graph::parse_part_list(&self.parts)?)?;
        let spec = WitnessSpec::new(parts.clone(), self.cut_index, self.n)?;
        let graph = SimpleGraph::from_graph6(&self.witness_graph6)?;
        let degrees = graph.degree_sequence();
        let recomputed = [
            (DEGREES_MATCH, degrees == self.witness_sequence),
            (GRAPHICAL, degrees.is_graphical()),
            (
                SUM_PLUS_TWO,
                degrees.sum() as i64 + 2 == self.bound && self.bound == spec.bound(),
            ),
            (DOMINANCE_FAILS, !dominance_check(&degrees, &parts)?),
            (
                NO_EMBEDDING,
                !graph.contains_subgraph(&parts.complete_multipartite()),
            ),
        ];
        Ok(recomputed
            .iter()
            .all(|&(name, ok)| self.status(name) == Some(CheckStatus::from_bool(ok))))
    }
}
