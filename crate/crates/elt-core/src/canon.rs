//! Canonical forms and isomorphism-free enumeration of small graphs.
//!
//! The canonical key of a graph is the lexicographically least adjacency
//! encoding over all vertex orders consistent with an iterated-refinement
//! coloring. Two graphs on the same vertex count are isomorphic iff their
//! keys agree. Keys drive the canonical corpora: every graph on `n + 1`
//! vertices contains an `n`-vertex induced subgraph, so extending each
//! canonical representative by one vertex in all possible ways and
//! deduplicating by key enumerates all isomorphism classes.

use thiserror::Error;

use crate::exec;
use crate::graph::{Graph, VertexSet};

/// The key packs `n choose 2` bits into a `u128`.
pub const CANONICAL_MAX_N: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonical form supports n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
}

/// Ranks items by their sort order; equal items share a rank.
fn rank_of<T: Ord + Clone>(items: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = items.to_vec();
    distinct.sort();
    distinct.dedup();
    items
        .iter()
        .map(|x| distinct.binary_search(x).unwrap())
        .collect()
}

/// Iterated neighborhood refinement. Returns the vertex cells ordered by
/// their invariant color, an ordering shared by all isomorphic copies.
fn ordered_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let triangles = |v: usize| -> usize {
        let nbrs = g.neighbors(v);
        nbrs.iter()
            .map(|u| g.neighbors(u).intersection(nbrs).len())
            .sum::<usize>()
            / 2
    };
    let initial: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), triangles(v))).collect();
    let mut colors = rank_of(&initial);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr_colors: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nbr_colors.sort_unstable();
                (colors[v], nbr_colors)
            })
            .collect();
        let next = rank_of(&sigs);
        if next == colors {
            break;
        }
        colors = next;
    }
    let color_count = colors.iter().copied().max().map_or(0, |c| c + 1);
    let mut cells = vec![Vec::new(); color_count];
    for v in 0..n {
        cells[colors[v]].push(v);
    }
    cells
}

struct KeySearch<'a> {
    g: &'a Graph,
    /// cell index owning each position
    owner: Vec<usize>,
    placed: Vec<usize>,
    total_bits: u32,
    best: Option<u128>,
}

impl KeySearch<'_> {
    fn run(&mut self, remaining: &mut [VertexSet], prefix: u128, bits: u32) {
        let p = self.placed.len();
        if p == self.owner.len() {
            debug_assert_eq!(bits, self.total_bits);
            // the best can shrink while a sibling subtree is explored, so
            // the leaf must re-check
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let cell = self.owner[p];
        let candidates = remaining[cell];
        for v in candidates.iter() {
            let mut chunk = 0u128;
            for &u in &self.placed {
                chunk = (chunk << 1) | u128::from(self.g.has_edge(u, v));
            }
            let new_bits = bits + p as u32;
            let new_prefix = (prefix << p) | chunk;
            if let Some(best) = self.best {
                // a prefix of the minimum never exceeds the corresponding
                // prefix of any later encoding, so this prune is safe
                if new_prefix > best >> (self.total_bits - new_bits) {
                    continue;
                }
            }
            self.placed.push(v);
            remaining[cell].remove(v);
            self.run(remaining, new_prefix, new_bits);
            remaining[cell].insert(v);
            self.placed.pop();
        }
    }
}

/// The canonical key: minimum adjacency encoding over all refinement-
/// respecting vertex orders. Equal keys characterize isomorphism for
/// graphs of equal vertex count.
pub fn canonical_key(g: &Graph) -> Result<u128, CanonError> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(CanonError::TooLarge {
            n,
            max: CANONICAL_MAX_N,
        });
    }
    if n <= 1 {
        return Ok(0);
    }
    let cells = ordered_cells(g);
    let mut owner = Vec::with_capacity(n);
    for (c, cell) in cells.iter().enumerate() {
        owner.extend(std::iter::repeat_n(c, cell.len()));
    }
    let mut remaining: Vec<VertexSet> = cells
        .iter()
        .map(|cell| cell.iter().copied().collect())
        .collect();
    let mut search = KeySearch {
        g,
        owner,
        placed: Vec::with_capacity(n),
        total_bits: (n * (n - 1) / 2) as u32,
        best: None,
    };
    search.run(&mut remaining, 0, 0);
    Ok(search.best.expect("at least one ordering exists"))
}

/// Rebuilds the graph a canonical key encodes.
pub fn graph_from_key(key: u128, n: usize) -> Graph {
    let total_bits = (n * (n - 1) / 2) as u32;
    let mut edges = Vec::new();
    let mut idx = 0u32;
    for p in 1..n {
        for q in 0..p {
            if key >> (total_bits - 1 - idx) & 1 == 1 {
                edges.push((q, p));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("key bits address valid pairs")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    if g.n() != h.n() {
        return Err(CanonError::SizeMismatch(g.n(), h.n()));
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

/// All canonical representatives on exactly `n` vertices, built by
/// extending the representatives on `n - 1` vertices with every possible
/// neighborhood of a new vertex and deduplicating by key.
///
/// Exponential in candidates; intended for `n <= 9` where the level sizes
/// stay in the hundreds of thousands.
pub fn enumerate_canonical_upto(n: usize) -> Result<Vec<Vec<Graph>>, CanonError> {
    if n > CANONICAL_MAX_N {
        return Err(CanonError::TooLarge {
            n,
            max: CANONICAL_MAX_N,
        });
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0).unwrap()]];
    for k in 1..=n {
        let parents = &levels[k - 1];
        let candidates: Vec<(usize, u64)> = (0..parents.len())
            .flat_map(|p| (0u64..1u64 << (k - 1)).map(move |mask| (p, mask)))
            .collect();
        let mut keys = exec::map_collect(candidates, |(p, mask)| {
            let parent = &parents[p];
            let mut edges: Vec<(usize, usize)> = parent.edges().collect();
            edges.extend(VertexSet::from_bits(mask).iter().map(|u| (u, k - 1)));
            let child = Graph::from_edges(k, &edges).expect("extension in range");
            canonical_key(&child).expect("k <= CANONICAL_MAX_N")
        });
        keys.sort_unstable();
        keys.dedup();
        levels.push(keys.into_iter().map(|key| graph_from_key(key, k)).collect());
    }
    Ok(levels)
}
