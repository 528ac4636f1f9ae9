//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! adjacency bitset per vertex.
//!
//! Every algorithm in this crate is exact and exponential in the worst case,
//! so the hard cap keeps set operations at a single machine word. Vertices
//! are dense integers `0..n`; external labels belong to the I/O layer.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard upper bound on the vertex count.
pub const MAX_VERTICES: usize = 64;

/// graph6 short form encodes at most 62 vertices.
pub const MAX_GRAPH6_VERTICES: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, the supported maximum is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap on vertex {0}")]
    OverlappingSets(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("graph6 long form (n > 62) is not supported")]
    LongFormUnsupported,
    #[error("illegal graph6 byte {byte:#x} at position {pos}")]
    IllegalChar { byte: u8, pos: usize },
    #[error("graph6 word too short: need {expected} payload bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("graph6 word too long: expected {expected} payload bytes, got {got}")]
    TrailingBytes { expected: usize, got: usize },
    #[error("padding bits after the upper triangle must be zero")]
    TrailingBits,
    #[error("graph on {0} vertices exceeds the graph6 short form limit of {MAX_GRAPH6_VERTICES}")]
    TooLarge(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing 'n m' header line")]
    MissingHeader,
    #[error("malformed line {line}: expected two integers")]
    Malformed { line: usize },
    #[error("header announces {expected} edges, found {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A set of vertices of some graph on at most 64 vertices.
///
/// The set does not remember which graph it belongs to; membership in the
/// vertex range is checked by the operations that combine a set with a graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub(crate) fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// Reports serialize vertex sets as sorted arrays so the JSON schema stays
// stable and human-readable.
impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        for &v in &members {
            if v >= MAX_VERTICES {
                return Err(serde::de::Error::custom(format!(
                    "vertex {v} out of range for a vertex set"
                )));
            }
        }
        Ok(members.into_iter().collect())
    }
}

/// An immutable simple undirected graph.
///
/// Invariants: the adjacency relation is symmetric and irreflexive, and no
/// bit outside `0..n` is ever set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    /// Cycle `C_k` with edges `(i, i+1 mod k)`; requires `k >= 3`.
    pub fn cycle(k: usize) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_edges(k, &edges)
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        u != v && self.adj[u] & (1u64 << v) != 0
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1u64 << v))
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u])
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Complement graph: `u ~ v` in the result iff `u != v` and not `u ~ v`
    /// here.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Checks that every member of `s` is a vertex of this graph.
    pub fn check_in_range(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertex_set()).min() {
            Some(v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Induced subgraph on `s`, relabeled to `0..|s|`, together with the map
    /// from new labels back to the original vertices (ascending).
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_in_range(s)?;
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        Ok((g, map))
    }

    /// True iff every pair inside `s` is an edge.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| {
            let rest = s.difference(VertexSet::singleton(v));
            rest.bits() & !self.adj[v] == 0
        })
    }

    /// True iff no pair inside `s` is an edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// True iff every cross pair between the disjoint sets `a` and `b` is an
    /// edge.
    pub fn is_complete_between(&self, a: VertexSet, b: VertexSet) -> Result<bool, GraphError> {
        self.check_in_range(a)?;
        self.check_in_range(b)?;
        if let Some(v) = a.intersection(b).min() {
            return Err(GraphError::OverlappingSets(v));
        }
        Ok(self.complete_between(a, b))
    }

    /// True iff no cross pair between the disjoint sets `a` and `b` is an
    /// edge.
    pub fn is_anticomplete_between(&self, a: VertexSet, b: VertexSet) -> Result<bool, GraphError> {
        self.check_in_range(a)?;
        self.check_in_range(b)?;
        if let Some(v) = a.intersection(b).min() {
            return Err(GraphError::OverlappingSets(v));
        }
        Ok(self.anticomplete_between(a, b))
    }

    /// Unchecked variant for internal callers whose sets are disjoint by
    /// construction.
    pub(crate) fn complete_between(&self, a: VertexSet, b: VertexSet) -> bool {
        debug_assert!(a.is_disjoint_from(b));
        a.iter().all(|v| b.bits() & !self.adj[v] == 0)
    }

    pub(crate) fn anticomplete_between(&self, a: VertexSet, b: VertexSet) -> bool {
        debug_assert!(a.is_disjoint_from(b));
        a.iter().all(|v| b.bits() & self.adj[v] == 0)
    }

    /// True iff the graph has a single connected component (vacuously true
    /// for graphs on at most one vertex).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_set().bits()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Pairs `(i, j)` with `i < j` in graph6 bit order: column-major over the
/// upper triangle, i.e. `(0,1), (0,2), (1,2), (0,3), ...`.
fn graph6_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

/// Decodes a graph6 word (short form, optional `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let word = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text).trim();
    let bytes = word.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b'~' {
        return Err(Graph6Error::LongFormUnsupported);
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Graph6Error::IllegalChar {
            byte: bytes[0],
            pos: 0,
        });
    }
    let n = (bytes[0] - 63) as usize;
    let payload = &bytes[1..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected,
            got: payload.len(),
        });
    }
    for (k, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::IllegalChar {
                byte: b,
                pos: k + 1,
            });
        }
    }
    let mut g = Graph::empty(n).expect("graph6 short form n <= 62");
    let mut bit_index = 0usize;
    for (i, j) in graph6_pairs(n) {
        let byte = payload[bit_index / 6] - 63;
        let bit = (byte >> (5 - bit_index % 6)) & 1;
        if bit == 1 {
            g.adj[i] |= 1u64 << j;
            g.adj[j] |= 1u64 << i;
        }
        bit_index += 1;
    }
    // Padding bits after the triangle must be zero.
    while bit_index < expected * 6 {
        let byte = payload[bit_index / 6] - 63;
        if (byte >> (5 - bit_index % 6)) & 1 != 0 {
            return Err(Graph6Error::TrailingBits);
        }
        bit_index += 1;
    }
    Ok(g)
}

/// Encodes a graph as a graph6 word (short form, no header).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for (i, j) in graph6_pairs(n) {
        acc = (acc << 1) | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(63 + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the edge-list text format: first line `n m`, then `m` lines `u v`
/// with 0-based endpoints. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::Malformed { line: header_no })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::Malformed { line: header_no })?;
    if parts.next().is_some() {
        return Err(EdgeListError::Malformed { line: header_no });
    }
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::Malformed { line: line_no })?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::Malformed { line: line_no })?;
        if parts.next().is_some() {
            return Err(EdgeListError::Malformed { line: line_no });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            expected: m,
            got: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Formats a graph in the edge-list text format.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
