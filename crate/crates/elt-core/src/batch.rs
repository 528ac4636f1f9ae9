//! Corpus-level sweeps. Graph-level work is data-parallel under the
//! `parallel` feature (rayon) with a sequential path always available;
//! record order matches input order either way.

use std::time::Instant;

use crate::exec;
use crate::graph::Graph;
use crate::report::{self, GraphRecord, VerificationSummary};
use crate::splittable::SizeLimits;

#[derive(Debug, Clone)]
pub struct BatchOptions {
    pub limits: SizeLimits,
    pub odd_only: bool,
    pub timing: bool,
}

impl Default for BatchOptions {
    fn default() -> Self {
        BatchOptions {
            limits: SizeLimits::default(),
            odd_only: false,
            timing: true,
        }
    }
}

fn timed<F: FnOnce() -> GraphRecord>(timing: bool, f: F) -> GraphRecord {
    let start = Instant::now();
    let mut record = f();
    if timing {
        record.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    record
}

fn indexed(graphs: Vec<(String, Graph)>) -> Vec<(usize, String, Graph)> {
    graphs
        .into_iter()
        .enumerate()
        .map(|(i, (id, g))| (i, id, g))
        .collect()
}

pub fn analyze_batch(graphs: Vec<(String, Graph)>, opts: &BatchOptions) -> Vec<GraphRecord> {
    exec::map_collect(indexed(graphs), |(i, id, g)| {
        timed(opts.timing, || {
            report::analyze_record(i, &id, &g, &opts.limits, opts.odd_only)
        })
    })
}

pub fn analyze_batch_seq(graphs: Vec<(String, Graph)>, opts: &BatchOptions) -> Vec<GraphRecord> {
    exec::map_collect_seq(indexed(graphs), |(i, id, g)| {
        timed(opts.timing, || {
            report::analyze_record(i, &id, &g, &opts.limits, opts.odd_only)
        })
    })
}

pub fn theorem_batch(graphs: Vec<(String, Graph)>, opts: &BatchOptions) -> Vec<GraphRecord> {
    exec::map_collect(indexed(graphs), |(i, id, g)| {
        timed(opts.timing, || {
            report::theorem_record(i, &id, &g, &opts.limits)
        })
    })
}

pub fn theorem_batch_seq(graphs: Vec<(String, Graph)>, opts: &BatchOptions) -> Vec<GraphRecord> {
    exec::map_collect_seq(indexed(graphs), |(i, id, g)| {
        timed(opts.timing, || {
            report::theorem_record(i, &id, &g, &opts.limits)
        })
    })
}

pub fn lemma_batch(graphs: Vec<(String, Graph)>, opts: &BatchOptions) -> Vec<GraphRecord> {
    exec::map_collect(indexed(graphs), |(i, id, g)| {
        timed(opts.timing, || report::lemma_record(i, &id, &g))
    })
}

pub fn lemma_batch_seq(graphs: Vec<(String, Graph)>, opts: &BatchOptions) -> Vec<GraphRecord> {
    exec::map_collect_seq(indexed(graphs), |(i, id, g)| {
        timed(opts.timing, || report::lemma_record(i, &id, &g))
    })
}

/// Summary counters for a theorem sweep.
pub fn summarize_theorem(records: &[GraphRecord]) -> VerificationSummary {
    let mut summary = VerificationSummary {
        parsed: records.len(),
        ..Default::default()
    };
    for record in records {
        if record.note.is_some() {
            summary.skipped += 1;
        }
        let passes = record.hypotheses.as_ref().is_some_and(|h| h.all_hold());
        if passes {
            summary.hypothesis_passers += 1;
        }
        if let Some(outcomes) = &record.split_outcomes {
            let flagged = outcomes.iter().filter(|o| o.counterexample).count();
            summary.flagged += flagged;
            if flagged == 0 && !outcomes.is_empty() {
                summary.certified += 1;
            }
        }
    }
    summary
}

/// Summary counters for a lemma sweep; `flagged` counts construction
/// contradictions (recognizer mismatches included).
pub fn summarize_lemma(records: &[GraphRecord]) -> VerificationSummary {
    use crate::cycle_cover::CertifyOutcome;
    let mut summary = VerificationSummary {
        parsed: records.len(),
        ..Default::default()
    };
    for record in records {
        match &record.anchored_cover {
            Some(CertifyOutcome::Certified(_)) => {
                summary.hypothesis_passers += 1;
                summary.certified += 1;
            }
            Some(CertifyOutcome::Contradiction(_)) => {
                summary.hypothesis_passers += 1;
                summary.flagged += 1;
            }
            Some(CertifyOutcome::HypothesisFailure(_)) | None => {}
        }
    }
    summary
}
