//! Per-graph analysis records and the versioned report document the CLI
//! emits.
//!
//! Reports embed full certificates (covers, split certificates, hole and
//! claw witnesses) keyed to the graph6 word of each input, so a reloaded
//! report re-validates standalone.

use serde::{Deserialize, Serialize};

use crate::cycle_cover::{self, CertifyOutcome};
use crate::graph::{self, Graph};
use crate::holes::{self, CorollaryClassReport, HoleCertificate, HoleScan, RangeMode};
use crate::invariants;
use crate::quasiline::{self, ClawWitness, QuasiLineVerdict};
use crate::splittable::{self, DoubleCriticalVerdict, Hypotheses, SizeLimits, SplitOutcome};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCriticalRecord {
    /// False for disconnected graphs, where the notion does not apply.
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<DoubleCriticalVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueDropRecord {
    /// True when the graph is claw-free with a chromatic gap and inside the
    /// size guard.
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<invariants::CliqueWitness>,
    /// Applicable but no clique of size at most 5 found; this contradicts
    /// the guarantee for claw-free graphs and is surfaced as a finding.
    pub missing: bool,
}

/// One analyzed input graph. Sections are filled by the command that
/// produced the record; absent sections are omitted from the JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perfect: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perfection_obstruction: Option<HoleCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claw_free: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claw_witness: Option<ClawWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasi_line: Option<QuasiLineVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchored_cover: Option<CertifyOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hole_scan: Option<HoleScan>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corollary: Option<CorollaryClassReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub double_critical: Option<DoubleCriticalRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clique_drop: Option<CliqueDropRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<Hypotheses>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_outcomes: Option<Vec<SplitOutcome>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub parsed: usize,
    pub skipped: usize,
    pub hypothesis_passers: usize,
    pub certified: usize,
    pub flagged: usize,
}

/// The versioned report document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<VerificationSummary>,
    pub records: Vec<GraphRecord>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            seed: None,
            summary: None,
            records: Vec::new(),
        }
    }

    /// A report is clean when nothing in it flags a finding.
    pub fn is_clean(&self) -> bool {
        self.summary.as_ref().is_none_or(|s| s.flagged == 0)
            && self.records.iter().all(|r| record_findings(r).is_empty())
    }
}

fn record_skeleton(index: usize, id: &str, g: &Graph) -> GraphRecord {
    GraphRecord {
        index,
        id: id.to_string(),
        graph6: graph::encode_graph6(g).expect("graphs in reports fit graph6"),
        n: g.n(),
        edge_count: g.edge_count(),
        max_degree: invariants::max_degree(g),
        alpha: invariants::independence_number(g).size(),
        omega: invariants::max_clique(g).size(),
        chi: invariants::chromatic_number(g).0,
        perfect: None,
        perfection_obstruction: None,
        claw_free: None,
        claw_witness: None,
        quasi_line: None,
        anchored_cover: None,
        hole_scan: None,
        corollary: None,
        double_critical: None,
        clique_drop: None,
        hypotheses: None,
        split_outcomes: None,
        note: None,
        timing_ms: None,
    }
}

fn fill_splittability(record: &mut GraphRecord, g: &Graph, limits: &SizeLimits) {
    let hypotheses = splittable::check_hypotheses(g);
    if hypotheses.all_hold() {
        if g.n() <= limits.splittable_max_n {
            let verdict = splittable::verify_splittability(g, limits).expect("guard checked above");
            record.split_outcomes = Some(verdict.outcomes);
        } else {
            record.note = Some(format!(
                "splittability search skipped: n = {} exceeds the guard {}",
                g.n(),
                limits.splittable_max_n
            ));
        }
    }
    record.hypotheses = Some(hypotheses);
}

/// Full sweep: invariants plus every recognizer and checker.
pub fn analyze_record(
    index: usize,
    id: &str,
    g: &Graph,
    limits: &SizeLimits,
    odd_only: bool,
) -> GraphRecord {
    let mut record = record_skeleton(index, id, g);

    let obstruction = holes::perfection_obstruction(g);
    record.perfect = Some(obstruction.is_none());
    record.perfection_obstruction = obstruction;

    let claw = quasiline::find_claw(g);
    record.claw_free = Some(claw.is_none());
    record.claw_witness = claw;

    record.quasi_line = Some(quasiline::is_quasi_line(g));
    record.anchored_cover = Some(cycle_cover::certify(g));
    record.corollary = Some(holes::corollary_class_check(g));

    let mode = if odd_only {
        RangeMode::OddOnly
    } else {
        RangeMode::All
    };
    if 2 * record.alpha >= 5 {
        record.hole_scan =
            Some(holes::hole_free_in_range(g, 4, 2 * record.alpha - 1, mode).expect("valid range"));
    }

    record.double_critical = Some(match splittable::is_double_critical(g) {
        Ok(verdict) => DoubleCriticalRecord {
            applicable: true,
            verdict: Some(verdict),
        },
        Err(_) => DoubleCriticalRecord {
            applicable: false,
            verdict: None,
        },
    });

    record.clique_drop = Some(match splittable::small_clique_drop(g, limits) {
        Ok(witness) => CliqueDropRecord {
            applicable: true,
            reason: None,
            missing: witness.is_none(),
            witness,
        },
        Err(e) => CliqueDropRecord {
            applicable: false,
            reason: Some(e.to_string()),
            witness: None,
            missing: false,
        },
    });

    fill_splittability(&mut record, g, limits);
    record
}

/// Hypothesis gate plus splittability certificates.
pub fn theorem_record(index: usize, id: &str, g: &Graph, limits: &SizeLimits) -> GraphRecord {
    let mut record = record_skeleton(index, id, g);
    fill_splittability(&mut record, g, limits);
    record
}

/// Anchored-cover certification, cross-checked with the generic
/// recognizer.
pub fn lemma_record(index: usize, id: &str, g: &Graph) -> GraphRecord {
    let mut record = record_skeleton(index, id, g);
    record.anchored_cover = Some(cycle_cover::certify(g));
    record.quasi_line = Some(quasiline::is_quasi_line(g));
    record
}

/// Findings are conditions that make a run exit nonzero: construction
/// contradictions, exhaustive searches that should have succeeded, and
/// class members failing asserted properties.
pub fn record_findings(record: &GraphRecord) -> Vec<String> {
    let mut findings = Vec::new();
    if let Some(CertifyOutcome::Contradiction(c)) = &record.anchored_cover {
        findings.push(format!("anchored cover contradiction: {c:?}"));
    }
    if let Some(outcomes) = &record.split_outcomes {
        for outcome in outcomes {
            if outcome.counterexample {
                findings.push(format!(
                    "no ({}, {})-split found by exhaustive search",
                    outcome.s, outcome.t
                ));
            }
        }
    }
    if let Some(corollary) = &record.corollary {
        if corollary.contradiction {
            findings.push("hole-free class member is not perfect".to_string());
        }
    }
    if let Some(drop) = &record.clique_drop {
        if drop.missing {
            findings.push("no clique of size <= 5 with a short chromatic drop".to_string());
        }
    }
    findings
}

/// Re-validates every certificate embedded in a record against its graph.
pub fn revalidate_record(record: &GraphRecord) -> Result<(), String> {
    let g = graph::parse_graph6(&record.graph6).map_err(|e| format!("graph6: {e}"))?;
    if let Some(cert) = &record.perfection_obstruction {
        if !cert.is_valid_in(&g) {
            return Err("perfection obstruction fails validation".to_string());
        }
    }
    if let Some(witness) = &record.claw_witness {
        if !witness.is_valid_in(&g) {
            return Err("claw witness fails validation".to_string());
        }
    }
    if let Some(QuasiLineVerdict::QuasiLine(cover)) = &record.quasi_line {
        if !cover.is_valid_in(&g) {
            return Err("two-clique cover fails validation".to_string());
        }
    }
    if let Some(QuasiLineVerdict::Obstructed { vertex, odd_cycle }) = &record.quasi_line {
        if !quasiline::validate_neighborhood_obstruction(&g, *vertex, odd_cycle) {
            return Err("neighborhood obstruction fails validation".to_string());
        }
    }
    if let Some(CertifyOutcome::Certified(cert)) = &record.anchored_cover {
        if !cert.anchor.is_valid_in(&g) {
            return Err("anchor cycle fails validation".to_string());
        }
        if !cert.cover.is_valid_in(&g) {
            return Err("anchored cover fails validation".to_string());
        }
    }
    if let Some(CertifyOutcome::HypothesisFailure(cycle_cover::HypothesisFailure::ForbiddenHole(
        cert,
    ))) = &record.anchored_cover
    {
        if !cert.is_valid_in(&g) {
            return Err("forbidden hole certificate fails validation".to_string());
        }
    }
    if let Some(HoleScan::Violation(cert)) = &record.hole_scan {
        if !cert.is_valid_in(&g) {
            return Err("hole scan violation fails validation".to_string());
        }
    }
    if let Some(outcomes) = &record.split_outcomes {
        for outcome in outcomes {
            if let Some(cert) = &outcome.certificate {
                cert.validate_in(&g)
                    .map_err(|e| format!("({}, {})-split: {e}", outcome.s, outcome.t))?;
            }
        }
    }
    if let Some(drop) = &record.clique_drop {
        if let Some(witness) = &drop.witness {
            if !witness.is_clique_in(&g) {
                return Err("clique-drop witness is not a clique".to_string());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_c7_record() {
        let g = Graph::cycle(7).unwrap();
        let record = analyze_record(0, "c7", &g, &SizeLimits::default(), false);
        assert_eq!((record.alpha, record.omega, record.chi), (3, 2, 3));
        assert_eq!(record.perfect, Some(false));
        assert_eq!(record.claw_free, Some(true));
        assert!(record.quasi_line.as_ref().unwrap().is_quasi_line());
        assert!(matches!(
            record.anchored_cover,
            Some(CertifyOutcome::Certified(_))
        ));
        let outcomes = record.split_outcomes.as_ref().unwrap();
        assert_eq!(outcomes.len(), 1);
        assert!(outcomes[0].certificate.is_some());
        assert!(record_findings(&record).is_empty());
        assert_eq!(revalidate_record(&record), Ok(()));
    }

    #[test]
    fn analyze_claw_record() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let record = analyze_record(0, "claw", &g, &SizeLimits::default(), false);
        assert_eq!(record.claw_free, Some(false));
        assert!(record.claw_witness.is_some());
        assert!(!record.quasi_line.as_ref().unwrap().is_quasi_line());
        assert_eq!(revalidate_record(&record), Ok(()));
    }

    #[test]
    fn json_roundtrip_revalidates() {
        let g = Graph::cycle(7).unwrap();
        let record = analyze_record(3, "line 4", &g, &SizeLimits::default(), false);
        let mut report = Report::new("analyze");
        report.records.push(record);
        let json = serde_json::to_string_pretty(&report).unwrap();
        let reloaded: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(reloaded, report);
        for record in &reloaded.records {
            assert_eq!(revalidate_record(record), Ok(()));
        }
    }
}
