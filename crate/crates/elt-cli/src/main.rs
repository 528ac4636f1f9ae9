//! Command-line front end: analyze single graphs, verify splittability and
//! anchored two-clique covers over corpora, generate corpus files, and
//! re-validate saved reports.
//!
//! Exit codes: 0 clean, 1 when a run surfaces a contradiction or
//! counterexample (or a reloaded certificate fails validation), 2 for
//! usage, I/O, and parse errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use elt_core::batch::{self, BatchOptions};
use elt_core::cycle_cover::CertifyOutcome;
use elt_core::generators::{self, AttachmentSpec, SplitMix64};
use elt_core::graph::{self, Graph};
use elt_core::holes::HoleScan;
use elt_core::report::{self, GraphRecord, Report};
use elt_core::splittable::SizeLimits;
use elt_core::{canon, quasiline};

#[derive(Parser)]
#[command(
    name = "elt",
    version,
    about = "Exact splittability and quasi-line certification for hole-restricted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant and recognizer sweep over one graph or a corpus
    Analyze(AnalyzeArgs),
    /// Hypothesis gate and splittability certificates over a corpus
    VerifyTheorem(VerifyArgs),
    /// Anchored two-clique-cover certification over a corpus
    VerifyLemma(VerifyArgs),
    /// Reload a JSON report and re-validate every embedded certificate
    Report(ReportArgs),
    /// Write corpus files (one graph6 word per line)
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for graph-level parallelism
    #[arg(long)]
    jobs: Option<usize>,
    /// Size guard for the splittability search
    #[arg(long, default_value_t = 16)]
    max_n: usize,
    /// Drop timing fields for byte-reproducible reports
    #[arg(long)]
    no_timing: bool,
    /// Seed recorded in the report (gen subcommands consume it)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Inline graph6 word
    #[arg(long, conflicts_with_all = ["input", "corpus"])]
    inline: Option<String>,
    /// File with a single graph: a graph6 word or an edge list ("n m" header)
    #[arg(long, conflicts_with = "corpus")]
    input: Option<PathBuf>,
    /// Corpus file: one graph6 word per line
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Scan odd hole lengths only in the hole-range report
    #[arg(long)]
    odd_only: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Corpus file: one graph6 word per line
    #[arg(long)]
    corpus: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ReportArgs {
    /// A JSON report produced by an earlier run
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    mode: GenMode,
}

#[derive(Subcommand)]
enum GenMode {
    /// Every labeled graph on n vertices (n <= 9)
    All {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One representative per isomorphism class, up to n vertices
    Canonical {
        #[arg(long)]
        n: usize,
        /// Emit only the graphs on exactly n vertices
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded Erdos-Renyi graphs
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structured instances around an induced odd cycle, filtered through
    /// the certification hypotheses
    Lemma {
        #[arg(long, default_value_t = 3)]
        alpha: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::VerifyTheorem(args) => cmd_verify(args, Sweep::Theorem),
        Command::VerifyLemma(args) => cmd_verify(args, Sweep::Lemma),
        Command::Report(args) => cmd_report(args),
        Command::Gen(args) => cmd_gen(args).map(|()| true),
    }
}

fn read_to_string(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_corpus(path: &Path) -> Result<Vec<(String, Graph)>, String> {
    let text = read_to_string(path)?;
    let mut graphs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let word = line.trim();
        if word.is_empty() || word.starts_with('#') {
            continue;
        }
        let g = graph::parse_graph6(word).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        graphs.push((format!("line {}", lineno + 1), g));
    }
    Ok(graphs)
}

/// A single-graph input file: either one graph6 word or an edge list whose
/// first non-comment line is the "n m" header.
fn load_single(path: &Path) -> Result<Graph, String> {
    let text = read_to_string(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| format!("{}: empty input", path.display()))?;
    let looks_like_edge_list = {
        let mut parts = first.split_whitespace();
        let a = parts.next().map(|t| t.parse::<usize>().is_ok());
        let b = parts.next().map(|t| t.parse::<usize>().is_ok());
        a == Some(true) && b == Some(true)
    };
    if looks_like_edge_list {
        graph::parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
    } else {
        graph::parse_graph6(first).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn batch_options(common: &CommonArgs) -> BatchOptions {
    if let Some(jobs) = common.jobs {
        elt_core::configure_jobs(jobs);
    }
    BatchOptions {
        limits: SizeLimits {
            splittable_max_n: common.max_n,
            ..SizeLimits::default()
        },
        odd_only: false,
        timing: !common.no_timing,
    }
}

fn emit(report: &Report, format: Format, out: Option<&PathBuf>) -> Result<(), String> {
    let rendered = match format {
        Format::Json => {
            let mut json = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
            json.push('\n');
            json
        }
        Format::Text => render_text(report),
    };
    match out {
        Some(path) => fs::write(path, rendered).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(rendered.as_bytes())
                .map_err(|e| e.to_string())
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<bool, String> {
    let opts = {
        let mut opts = batch_options(&args.common);
        opts.odd_only = args.odd_only;
        opts
    };
    let graphs: Vec<(String, Graph)> = if let Some(word) = &args.inline {
        vec![(
            "inline".to_string(),
            graph::parse_graph6(word).map_err(|e| e.to_string())?,
        )]
    } else if let Some(path) = &args.input {
        vec![(path.display().to_string(), load_single(path)?)]
    } else if let Some(path) = &args.corpus {
        load_corpus(path)?
    } else {
        return Err("one of --inline, --input, --corpus is required".to_string());
    };

    let records = batch::analyze_batch(graphs, &opts);
    let mut report = Report::new("analyze");
    report.seed = args.common.seed;
    report.records = records;
    let clean = report.is_clean();
    emit(&report, args.common.format, args.common.out.as_ref())?;
    Ok(clean)
}

enum Sweep {
    Theorem,
    Lemma,
}

fn cmd_verify(args: VerifyArgs, sweep: Sweep) -> Result<bool, String> {
    let opts = batch_options(&args.common);
    let graphs = load_corpus(&args.corpus)?;
    let (command, records, summary) = match sweep {
        Sweep::Theorem => {
            let records = batch::theorem_batch(graphs, &opts);
            let summary = batch::summarize_theorem(&records);
            ("verify-theorem", records, summary)
        }
        Sweep::Lemma => {
            let records = batch::lemma_batch(graphs, &opts);
            let summary = batch::summarize_lemma(&records);
            ("verify-lemma", records, summary)
        }
    };
    let mut report = Report::new(command);
    report.seed = args.common.seed;
    report.summary = Some(summary);
    report.records = records;
    let clean = report.is_clean();
    emit(&report, args.common.format, args.common.out.as_ref())?;
    Ok(clean)
}

fn cmd_report(args: ReportArgs) -> Result<bool, String> {
    let text = read_to_string(&args.input)?;
    let report: Report =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", args.input.display()))?;
    if report.schema_version != report::SCHEMA_VERSION {
        return Err(format!(
            "unsupported schema version {} (expected {})",
            report.schema_version,
            report::SCHEMA_VERSION
        ));
    }
    let mut failures = 0usize;
    for record in &report.records {
        if let Err(e) = report::revalidate_record(record) {
            eprintln!("record {} ({}): {e}", record.index, record.id);
            failures += 1;
        }
    }
    eprintln!(
        "revalidated {} records, {} failures",
        report.records.len(),
        failures
    );
    emit(&report, args.format, args.out.as_ref())?;
    Ok(failures == 0 && report.is_clean())
}

fn cmd_gen(args: GenArgs) -> Result<(), String> {
    let (words, out) = match args.mode {
        GenMode::All { n, out } => {
            let graphs = generators::all_graphs(n).map_err(|e| e.to_string())?;
            let words: Vec<String> = graphs
                .map(|g| graph::encode_graph6(&g).expect("n <= 9"))
                .collect();
            (words, out)
        }
        GenMode::Canonical { n, exact, out } => {
            let levels = canon::enumerate_canonical_upto(n).map_err(|e| e.to_string())?;
            let selected: Vec<Graph> = if exact {
                levels.into_iter().nth(n).unwrap()
            } else {
                levels.into_iter().flatten().collect()
            };
            let words = selected
                .iter()
                .map(|g| graph::encode_graph6(g).expect("canonical graphs are small"))
                .collect();
            (words, out)
        }
        GenMode::Random {
            n,
            p,
            count,
            seed,
            out,
        } => {
            let mut words = Vec::with_capacity(count);
            for k in 0..count {
                let g = generators::random_graph(n, p, seed.wrapping_add(k as u64))
                    .map_err(|e| e.to_string())?;
                words.push(graph::encode_graph6(&g).map_err(|e| e.to_string())?);
            }
            (words, out)
        }
        GenMode::Lemma {
            alpha,
            count,
            seed,
            out,
        } => {
            let mut rng = SplitMix64::new(seed);
            let mut words = Vec::with_capacity(count);
            let mut attempts = 0usize;
            while words.len() < count {
                attempts += 1;
                if attempts > count * 200 {
                    return Err(format!(
                        "gave up after {attempts} spec draws with only {} instances",
                        words.len()
                    ));
                }
                let spec: AttachmentSpec = generators::sample_spec(alpha, &mut rng);
                let instance_seed = rng.next_u64();
                match generators::anchored_instance(&spec, instance_seed) {
                    Ok(instance) => {
                        words.push(
                            graph::encode_graph6(&instance.graph).map_err(|e| e.to_string())?,
                        );
                    }
                    Err(generators::GeneratorError::BudgetExhausted { .. }) => continue,
                    Err(e) => return Err(e.to_string()),
                }
            }
            (words, out)
        }
    };
    let mut text = String::new();
    for word in &words {
        text.push_str(word);
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# {} (schema {})\n",
        report.command, report.schema_version
    ));
    for r in &report.records {
        out.push_str(&render_record(r));
    }
    if let Some(s) = &report.summary {
        out.push_str(&format!(
            "summary: parsed={} skipped={} hypothesis_passers={} certified={} flagged={}\n",
            s.parsed, s.skipped, s.hypothesis_passers, s.certified, s.flagged
        ));
    }
    out
}

fn render_record(r: &GraphRecord) -> String {
    let mut out = format!(
        "[{}] {} {}: n={} m={} max_deg={} alpha={} omega={} chi={}\n",
        r.index, r.id, r.graph6, r.n, r.edge_count, r.max_degree, r.alpha, r.omega, r.chi
    );
    if let Some(perfect) = r.perfect {
        match &r.perfection_obstruction {
            Some(cert) => out.push_str(&format!(
                "  perfect: {} ({:?} of length {}: {:?})\n",
                yes_no(perfect),
                cert.kind,
                cert.length(),
                cert.vertices
            )),
            None => out.push_str(&format!("  perfect: {}\n", yes_no(perfect))),
        }
    }
    if let Some(claw_free) = r.claw_free {
        match &r.claw_witness {
            Some(w) => out.push_str(&format!(
                "  claw-free: no (center {} leaves {:?})\n",
                w.center, w.leaves
            )),
            None => out.push_str(&format!("  claw-free: {}\n", yes_no(claw_free))),
        }
    }
    if let Some(verdict) = &r.quasi_line {
        match verdict {
            quasiline::QuasiLineVerdict::QuasiLine(_) => out.push_str("  quasi-line: yes\n"),
            quasiline::QuasiLineVerdict::Obstructed { vertex, odd_cycle } => out.push_str(
                &format!("  quasi-line: no (vertex {vertex}, odd cycle {odd_cycle:?})\n"),
            ),
        }
    }
    if let Some(outcome) = &r.anchored_cover {
        match outcome {
            CertifyOutcome::Certified(cert) => out.push_str(&format!(
                "  anchored cover: certified (anchor {:?})\n",
                cert.anchor.vertices
            )),
            CertifyOutcome::HypothesisFailure(f) => {
                out.push_str(&format!("  anchored cover: hypothesis failure ({f:?})\n"));
            }
            CertifyOutcome::Contradiction(c) => {
                out.push_str(&format!("  anchored cover: CONTRADICTION ({c:?})\n"));
            }
        }
    }
    if let Some(scan) = &r.hole_scan {
        match scan {
            HoleScan::Free => out.push_str("  hole scan: free\n"),
            HoleScan::Violation(cert) => out.push_str(&format!(
                "  hole scan: violation (length {}: {:?})\n",
                cert.length(),
                cert.vertices
            )),
        }
    }
    if let Some(c) = &r.corollary {
        out.push_str(&format!(
            "  hole-free class: member={} perfect={:?} contradiction={}\n",
            yes_no(c.in_class),
            c.perfect,
            c.contradiction
        ));
    }
    if let Some(dc) = &r.double_critical {
        match &dc.verdict {
            Some(v) => out.push_str(&format!(
                "  double-critical: {}{}\n",
                yes_no(v.double_critical),
                v.violating_edge
                    .map(|(u, w)| format!(" (violating edge {u}-{w})"))
                    .unwrap_or_default()
            )),
            None => out.push_str("  double-critical: not applicable (disconnected)\n"),
        }
    }
    if let Some(drop) = &r.clique_drop {
        if drop.applicable {
            match &drop.witness {
                Some(w) => {
                    out.push_str(&format!("  clique drop: found {:?}\n", w.vertices.to_vec()));
                }
                None => out.push_str("  clique drop: MISSING (finding)\n"),
            }
        } else if let Some(reason) = &drop.reason {
            out.push_str(&format!("  clique drop: not applicable ({reason})\n"));
        }
    }
    if let Some(h) = &r.hypotheses {
        out.push_str(&format!(
            "  hypotheses: alpha>=3:{} omega<chi:{} chi>=3:{} hole-free:{} => {}\n",
            yes_no(h.alpha_ok),
            yes_no(h.gap_ok),
            yes_no(h.chi_ok),
            yes_no(h.hole_scan.is_free()),
            yes_no(h.all_hold())
        ));
    }
    if let Some(outcomes) = &r.split_outcomes {
        for o in outcomes {
            match &o.certificate {
                Some(cert) => out.push_str(&format!(
                    "  split ({}, {}): S={:?} T={:?} chi_S={} chi_T={}\n",
                    o.s,
                    o.t,
                    cert.s_side.to_vec(),
                    cert.t_side.to_vec(),
                    cert.s_chi,
                    cert.t_chi
                )),
                None => out.push_str(&format!(
                    "  split ({}, {}): COUNTEREXAMPLE (no bipartition)\n",
                    o.s, o.t
                )),
            }
        }
    }
    if let Some(note) = &r.note {
        out.push_str(&format!("  note: {note}\n"));
    }
    if let Some(ms) = r.timing_ms {
        out.push_str(&format!("  time: {ms} ms\n"));
    }
    out
}
