//! Test-corpus construction: exhaustive labeled enumeration, seeded random
//! graphs, corpus files, and structured instances built around an induced
//! odd cycle with tri/quad attachments.

use std::io::BufRead;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{self, Graph, GraphError};
use crate::holes::{self, RangeMode};
use crate::invariants;

/// Exhaustive labeled enumeration guard: `2^(n choose 2)` graphs.
pub const ALL_GRAPHS_MAX_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("exhaustive enumeration supports n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("edge probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("attachment spec invalid: {0}")]
    BadSpec(String),
    #[error("no instance satisfying the hypotheses within {attempts} attempts")]
    BudgetExhausted { attempts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    BadWord {
        line: usize,
        #[source]
        source: graph::Graph6Error,
    },
    #[error("read failure: {0}")]
    Io(String),
}

/// Deterministic 64-bit generator (splitmix64). The constants are part of
/// the corpus format: identical seeds reproduce identical graphs on every
/// platform.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Bernoulli draw; exact at the endpoints.
    pub fn chance(&mut self, p: f64) -> bool {
        if p <= 0.0 {
            return false;
        }
        if p >= 1.0 {
            return true;
        }
        let threshold = (p * u64::MAX as f64) as u64;
        self.next_u64() < threshold
    }

    /// Uniform draw from `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Pairs `(u, v)`, `u < v`, in lexicographic order; the bit order of the
/// exhaustive enumeration.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices, in mask order over
/// the lexicographic pair list.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GeneratorError> {
    if n > ALL_GRAPHS_MAX_N {
        return Err(GeneratorError::TooLarge {
            n,
            max: ALL_GRAPHS_MAX_N,
        });
    }
    let pairs = pair_list(n);
    let count: u64 = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("pairs are in range")
    }))
}

/// Seeded Erdos-Renyi graph: every pair is an edge independently with
/// probability `p`. Bit-identical across runs and platforms for a fixed
/// seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GeneratorError::InvalidProbability(p));
    }
    let mut rng = SplitMix64::new(seed);
    let edges: Vec<(usize, usize)> = pair_list(n).into_iter().filter(|_| rng.chance(p)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Reads a corpus: one graph6 word per line, blank lines and `#` comments
/// ignored.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Graph>, CorpusError> {
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CorpusError::Io(e.to_string()))?;
        let word = line.trim();
        if word.is_empty() || word.starts_with('#') {
            continue;
        }
        let g = graph::parse_graph6(word).map_err(|source| CorpusError::BadWord {
            line: idx + 1,
            source,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Blueprint for a structured instance: an induced cycle of length
/// `2*alpha + 1` with clique attachments.
///
/// `tri_sizes[i]` vertices are attached to cycle positions `i, i+1, i+2`
/// and `quad_sizes[i]` vertices to `i..i+4`. Nonempty quad indices must sit
/// inside a window of at most 3 consecutive positions. Cross edges beyond
/// the mandated ones are sampled with probability `cross_edge_prob`, only
/// in the patterns the structure allows; `unrestricted` lifts the pattern
/// limits (and the hypothesis filter) to produce near-miss negatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentSpec {
    pub alpha: usize,
    pub tri_sizes: Vec<usize>,
    pub quad_sizes: Vec<usize>,
    /// Probability scaled by 1000 (deterministic integer representation);
    /// 250 means 0.25.
    pub cross_edge_per_mille: u32,
    pub unrestricted: bool,
}

impl AttachmentSpec {
    /// Bare cycle of length `2*alpha + 1`.
    pub fn bare(alpha: usize) -> Self {
        let m = 2 * alpha + 1;
        AttachmentSpec {
            alpha,
            tri_sizes: vec![0; m],
            quad_sizes: vec![0; m],
            cross_edge_per_mille: 250,
            unrestricted: false,
        }
    }

    pub fn cross_edge_prob(&self) -> f64 {
        self.cross_edge_per_mille as f64 / 1000.0
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        let m = 2 * self.alpha + 1;
        if self.alpha < 3 {
            return Err(GeneratorError::BadSpec(format!(
                "alpha must be at least 3, got {}",
                self.alpha
            )));
        }
        if self.tri_sizes.len() != m || self.quad_sizes.len() != m {
            return Err(GeneratorError::BadSpec(format!(
                "size arrays must have length {m}"
            )));
        }
        if self.cross_edge_per_mille > 1000 {
            return Err(GeneratorError::BadSpec(
                "cross_edge_per_mille above 1000".to_string(),
            ));
        }
        let occupied: Vec<usize> = (0..m).filter(|&j| self.quad_sizes[j] > 0).collect();
        for (a, &i) in occupied.iter().enumerate() {
            for &j in &occupied[a + 1..] {
                let d = (i.abs_diff(j)) % m;
                if d.min(m - d) > 2 {
                    return Err(GeneratorError::BadSpec(format!(
                        "quad indices {i} and {j} span more than 3 consecutive positions"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A structured instance with its planted layout, for classification
/// cross-checks.
#[derive(Debug, Clone)]
pub struct AnchoredInstance {
    pub graph: Graph,
    /// Cycle vertex at position `i` is `i` itself.
    pub cycle_len: usize,
    pub tri_vertices: Vec<Vec<usize>>,
    pub quad_vertices: Vec<Vec<usize>>,
}

/// Builds one sample of an attachment blueprint, without filtering.
fn sample_instance(
    spec: &AttachmentSpec,
    rng: &mut SplitMix64,
) -> Result<AnchoredInstance, GraphError> {
    let m = 2 * spec.alpha + 1;
    let mut next_vertex = m;
    let mut tri_vertices: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut quad_vertices: Vec<Vec<usize>> = Vec::with_capacity(m);
    for i in 0..m {
        let block: Vec<usize> = (0..spec.tri_sizes[i]).map(|k| next_vertex + k).collect();
        next_vertex += spec.tri_sizes[i];
        tri_vertices.push(block);
    }
    for i in 0..m {
        let block: Vec<usize> = (0..spec.quad_sizes[i]).map(|k| next_vertex + k).collect();
        next_vertex += spec.quad_sizes[i];
        quad_vertices.push(block);
    }
    let n = next_vertex;
    let at = |i: usize, d: isize| (i as isize + d).rem_euclid(m as isize) as usize;

    let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    let clique = |block: &[usize], edges: &mut Vec<(usize, usize)>| {
        for (a, &u) in block.iter().enumerate() {
            for &v in &block[a + 1..] {
                edges.push((u, v));
            }
        }
    };
    let complete = |x: &[usize], y: &[usize], edges: &mut Vec<(usize, usize)>| {
        for &u in x {
            for &v in y {
                edges.push((u, v));
            }
        }
    };
    for i in 0..m {
        // cycle adjacency of the attachments
        for &w in &tri_vertices[i] {
            for d in 0..3isize {
                edges.push((w, at(i, d)));
            }
        }
        for &w in &quad_vertices[i] {
            for d in 0..4isize {
                edges.push((w, at(i, d)));
            }
        }
        // attachment sets are cliques
        clique(&tri_vertices[i], &mut edges);
        clique(&quad_vertices[i], &mut edges);
        // mandated completeness: tri to the next tri, quad to its tris and
        // the next quad
        complete(&tri_vertices[i], &tri_vertices[at(i, 1)], &mut edges);
        complete(&quad_vertices[i], &tri_vertices[i], &mut edges);
        complete(&quad_vertices[i], &tri_vertices[at(i, 1)], &mut edges);
        complete(&quad_vertices[i], &quad_vertices[at(i, 1)], &mut edges);
    }

    let p = spec.cross_edge_prob();
    if spec.unrestricted {
        // arbitrary cross pairs among attachment vertices
        let attached: Vec<usize> = (m..n).collect();
        for (a, &u) in attached.iter().enumerate() {
            for &v in &attached[a + 1..] {
                if rng.chance(p) {
                    edges.push((u, v));
                }
            }
        }
    } else {
        // Optional tri-to-tri links at cyclic distance 2. Each tri vertex
        // takes at most one link role so nothing links both ways, and a
        // quad at j rules out back links in tri[j-1] and forward links in
        // tri[j+2], the combinations the structure forbids.
        let quad_present: Vec<bool> = (0..m).map(|j| !quad_vertices[j].is_empty()).collect();
        let mut fwd_role: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut back_role: Vec<Vec<usize>> = vec![Vec::new(); m];
        for i in 0..m {
            let fwd_allowed = !quad_present[at(i, -2)];
            let back_allowed = !quad_present[at(i, 1)];
            for &w in &tri_vertices[i] {
                match rng.below(3) {
                    1 if fwd_allowed => fwd_role[i].push(w),
                    2 if back_allowed => back_role[i].push(w),
                    _ => {}
                }
            }
        }
        for i in 0..m {
            for &w in &fwd_role[i] {
                for &c in &back_role[at(i, 2)] {
                    if rng.chance(p) {
                        edges.push((w, c));
                    }
                }
            }
        }
        // Optional quad sides: every quad vertex goes complete to the
        // previous tri, the next-next tri, or both, and may additionally
        // touch part of the side it is not complete to.
        for j in 0..m {
            for &b in &quad_vertices[j] {
                let side = rng.below(3);
                if side != 1 {
                    complete(&[b], &tri_vertices[at(j, -1)], &mut edges);
                } else {
                    for &c in &tri_vertices[at(j, -1)] {
                        if rng.chance(p) {
                            edges.push((b, c));
                        }
                    }
                }
                if side != 0 {
                    complete(&[b], &tri_vertices[at(j, 2)], &mut edges);
                } else {
                    for &c in &tri_vertices[at(j, 2)] {
                        if rng.chance(p) {
                            edges.push((b, c));
                        }
                    }
                }
            }
        }
    }

    Ok(AnchoredInstance {
        graph: Graph::from_edges(n, &edges)?,
        cycle_len: m,
        tri_vertices,
        quad_vertices,
    })
}

/// Draws a plausible attachment spec: small tri attachments anywhere, quad
/// attachments inside one random window of three consecutive indices.
/// Deterministic in the generator state.
pub fn sample_spec(alpha: usize, rng: &mut SplitMix64) -> AttachmentSpec {
    let m = 2 * alpha + 1;
    let mut spec = AttachmentSpec::bare(alpha);
    for i in 0..m {
        spec.tri_sizes[i] = match rng.below(6) {
            0..=2 => 0,
            3 | 4 => 1,
            _ => 2,
        };
    }
    let window = rng.below(m);
    for d in 0..3 {
        if rng.below(3) == 0 {
            spec.quad_sizes[(window + d) % m] = 1 + usize::from(rng.below(4) == 0);
        }
    }
    spec.cross_edge_per_mille = [0, 250, 500][rng.below(3)];
    spec
}

/// Default rejection-sampling budget.
pub const INSTANCE_BUDGET: usize = 10_000;

/// Builds a structured instance and, unless `spec.unrestricted` is set,
/// filters it through the four hypotheses: the independence number must be
/// exactly `alpha`, the hole range `4..=2*alpha-1` clean, the maximum
/// degree at most `n-2`, and the anchor cycle present. Rejected samples are
/// redrawn from the same deterministic stream until the budget runs out.
pub fn anchored_instance(
    spec: &AttachmentSpec,
    seed: u64,
) -> Result<AnchoredInstance, GeneratorError> {
    spec.validate()?;
    let mut rng = SplitMix64::new(seed);
    for _ in 0..INSTANCE_BUDGET {
        let instance = sample_instance(spec, &mut rng)?;
        if spec.unrestricted {
            return Ok(instance);
        }
        let g = &instance.graph;
        if invariants::independence_number(g).size() != spec.alpha {
            continue;
        }
        if !holes::hole_free_in_range(g, 4, 2 * spec.alpha - 1, RangeMode::All)
            .expect("alpha >= 3")
            .is_free()
        {
            continue;
        }
        if invariants::max_degree(g) + 2 > g.n() {
            continue;
        }
        if holes::find_induced_cycle(g, instance.cycle_len)
            .expect("cycle length >= 7")
            .is_none()
        {
            continue;
        }
        return Ok(instance);
    }
    Err(GeneratorError::BudgetExhausted {
        attempts: INSTANCE_BUDGET,
    })
}
