//! Induced cycles (holes), antiholes, and the two perfection checkers.
//!
//! A hole is an induced cycle of length at least 4; an antihole is an
//! induced subgraph whose complement is a hole. Perfection is decided two
//! ways: by odd hole / odd antihole search, and by the definitional oracle
//! that checks `chi(H) = omega(H)` on every induced subgraph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants;

/// Definitional perfection oracle enumerates all `2^n` induced subgraphs.
pub const PERFECTION_ORACLE_MAX_N: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HoleError {
    #[error("induced cycles need length at least 3, got {0}")]
    LengthTooSmall(usize),
    #[error("invalid hole range [{lo}, {hi}]: need 4 <= lo <= hi")]
    InvalidRange { lo: usize, hi: usize },
    #[error("graph on {n} vertices exceeds the perfection oracle limit of {max}")]
    TooLargeForOracle { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced cycle certificate: `vertices` in cyclic order.
///
/// For `kind == Antihole` the same vertex list is an induced cycle of the
/// complement. Hole semantics start at length 4; length-3 certificates only
/// arise from explicit [`find_induced_cycle`] calls with `k = 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleCertificate {
    pub vertices: Vec<usize>,
    pub kind: HoleKind,
}

impl HoleCertificate {
    pub fn length(&self) -> usize {
        self.vertices.len()
    }

    /// Checks the cycle structure against the graph: pairwise distinct
    /// vertices, cyclically consecutive pairs adjacent, and all other pairs
    /// non-adjacent (in the complement for antiholes).
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 {
            return false;
        }
        let set: VertexSet = self.vertices.iter().copied().collect();
        if set.len() != k || g.check_in_range(set).is_err() {
            return false;
        }
        let host = match self.kind {
            HoleKind::Hole => g.clone(),
            HoleKind::Antihole => g.complement(),
        };
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if host.has_edge(self.vertices[i], self.vertices[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

/// Backtracking search for induced `k`-cycles.
///
/// Cycles are anchored at their smallest vertex, and of the two traversal
/// directions only the one whose second vertex is below its last survives,
/// so every cycle is visited exactly once, in lexicographic path order.
/// The visitor returns `true` to stop the search.
fn visit_induced_cycles(g: &Graph, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g.n();
    if k < 3 || k > n {
        return;
    }
    let full = VertexSet::full(n).bits();
    let mut path = Vec::with_capacity(k);
    for s in 0..n {
        let above = full & !(VertexSet::full(s + 1).bits());
        path.clear();
        path.push(s);
        for u1 in VertexSet::from_bits(g.neighbors(s).bits() & above).iter() {
            path.truncate(1);
            path.push(u1);
            let avail = above & !(1u64 << u1);
            if extend_cycle(g, k, s, &mut path, avail, visit) {
                return;
            }
        }
    }
}

fn extend_cycle(
    g: &Graph,
    k: usize,
    s: usize,
    path: &mut Vec<usize>,
    avail: u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    let step = g.neighbors(last).bits() & avail;
    if path.len() == k - 1 {
        // closing vertex: adjacent to both ends, above the second vertex
        let above_second = !(VertexSet::full(path[1] + 1).bits());
        let mut close = step & g.neighbors(s).bits() & above_second;
        while close != 0 {
            let w = close.trailing_zeros() as usize;
            close &= close - 1;
            path.push(w);
            let stop = visit(path);
            path.pop();
            if stop {
                return true;
            }
        }
        return false;
    }
    // interior vertex: must avoid the anchor's neighborhood
    let mut cands = step & !g.neighbors(s).bits();
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        path.push(w);
        let next_avail = (avail & !(1u64 << w)) & !g.neighbors(last).bits();
        let stop = extend_cycle(g, k, s, path, next_avail, visit);
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

/// First induced cycle of length exactly `k`, if any. Exact: `None` means
/// no such cycle exists. `k = 3` finds triangles, which are not holes.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Result<Option<HoleCertificate>, HoleError> {
    if k < 3 {
        return Err(HoleError::LengthTooSmall(k));
    }
    let mut found = None;
    visit_induced_cycles(g, k, &mut |cycle| {
        found = Some(HoleCertificate {
            vertices: cycle.to_vec(),
            kind: HoleKind::Hole,
        });
        true
    });
    Ok(found)
}

/// The lexicographically least induced `k`-cycle, ordered by sorted vertex
/// list. Used to pick a reproducible anchor when several cycles exist.
pub fn least_induced_cycle(g: &Graph, k: usize) -> Result<Option<HoleCertificate>, HoleError> {
    if k < 3 {
        return Err(HoleError::LengthTooSmall(k));
    }
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    visit_induced_cycles(g, k, &mut |cycle| {
        let mut sorted = cycle.to_vec();
        sorted.sort_unstable();
        if best.as_ref().is_none_or(|(b, _)| sorted < *b) {
            best = Some((sorted, cycle.to_vec()));
        }
        false
    });
    Ok(best.map(|(_, vertices)| HoleCertificate {
        vertices,
        kind: HoleKind::Hole,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RangeMode {
    All,
    OddOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleScan {
    Free,
    Violation(HoleCertificate),
}

impl HoleScan {
    pub fn is_free(&self) -> bool {
        matches!(self, HoleScan::Free)
    }

    pub fn violation(&self) -> Option<&HoleCertificate> {
        match self {
            HoleScan::Free => None,
            HoleScan::Violation(c) => Some(c),
        }
    }
}

/// Scans for holes with length in `[lo, hi]`, shortest first, so a reported
/// violation is minimal. `OddOnly` restricts the scan to odd lengths.
pub fn hole_free_in_range(
    g: &Graph,
    lo: usize,
    hi: usize,
    mode: RangeMode,
) -> Result<HoleScan, HoleError> {
    if lo < 4 || lo > hi {
        return Err(HoleError::InvalidRange { lo, hi });
    }
    for k in lo..=hi.min(g.n()) {
        if mode == RangeMode::OddOnly && k % 2 == 0 {
            continue;
        }
        if let Some(cert) = find_induced_cycle(g, k)? {
            return Ok(HoleScan::Violation(cert));
        }
    }
    Ok(HoleScan::Free)
}

/// Shortest odd hole (length 5, 7, ...), if any.
pub fn has_odd_hole(g: &Graph) -> Option<HoleCertificate> {
    let mut k = 5;
    while k <= g.n() {
        if let Some(cert) = find_induced_cycle(g, k).expect("k >= 5") {
            return Some(cert);
        }
        k += 2;
    }
    None
}

/// Shortest odd antihole, searched as an odd hole of the complement.
pub fn has_odd_antihole(g: &Graph) -> Option<HoleCertificate> {
    has_odd_hole(&g.complement()).map(|cert| HoleCertificate {
        vertices: cert.vertices,
        kind: HoleKind::Antihole,
    })
}

/// The obstruction to perfection, if any: an odd hole, else an odd antihole.
pub fn perfection_obstruction(g: &Graph) -> Option<HoleCertificate> {
    has_odd_hole(g).or_else(|| has_odd_antihole(g))
}

/// Perfection decided by odd hole / odd antihole search.
pub fn is_perfect(g: &Graph) -> bool {
    perfection_obstruction(g).is_none()
}

/// Perfection by definition: `chi(H) = omega(H)` for every induced subgraph
/// `H`. Exponential in subsets; serves as the cross-check oracle.
pub fn is_perfect_by_definition(g: &Graph) -> Result<bool, HoleError> {
    let n = g.n();
    if n > PERFECTION_ORACLE_MAX_N {
        return Err(HoleError::TooLargeForOracle {
            n,
            max: PERFECTION_ORACLE_MAX_N,
        });
    }
    for mask in 0u64..1u64 << n {
        let (h, _) = g.induced_subgraph(VertexSet::from_bits(mask)).unwrap();
        if invariants::chromatic_number(&h).0 != invariants::max_clique(&h).size() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership check for the class of graphs with no 4-hole and no odd hole
/// of length up to `2*alpha + 1`; members are asserted perfect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryClassReport {
    pub alpha: usize,
    pub in_class: bool,
    /// The hole excluding the graph from the class, when not a member.
    pub excluding_hole: Option<HoleCertificate>,
    /// SPGT perfection verdict, evaluated only for class members.
    pub perfect: Option<bool>,
    /// Set when a class member fails the perfection check; this would
    /// contradict the theorem the class is built on and is reported as a
    /// library-level failure by the callers.
    pub contradiction: bool,
}

pub fn corollary_class_check(g: &Graph) -> CorollaryClassReport {
    let alpha = invariants::independence_number(g).size();
    let four = find_induced_cycle(g, 4).expect("k = 4");
    let excluding_hole = match four {
        Some(cert) => Some(cert),
        None => {
            if 2 * alpha + 1 >= 5 {
                hole_free_in_range(g, 5, 2 * alpha + 1, RangeMode::OddOnly)
                    .expect("valid range")
                    .violation()
                    .cloned()
            } else {
                None
            }
        }
    };
    let in_class = excluding_hole.is_none();
    let perfect = in_class.then(|| is_perfect(g));
    CorollaryClassReport {
        alpha,
        in_class,
        excluding_hole,
        perfect,
        contradiction: perfect == Some(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn c7_contains_only_itself() {
        let c7 = Graph::cycle(7).unwrap();
        let cert = find_induced_cycle(&c7, 7).unwrap().unwrap();
        assert_eq!(cert.vertices, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(cert.is_valid_in(&c7));
        for k in 4..=6 {
            assert!(find_induced_cycle(&c7, k).unwrap().is_none());
            assert!(!oracle::has_induced_cycle_by_subsets(&c7, k));
        }
    }

    #[test]
    fn petersen_has_a_five_hole() {
        let p = petersen();
        let cert = find_induced_cycle(&p, 5).unwrap().unwrap();
        assert!(cert.is_valid_in(&p));
        assert!(oracle::has_induced_cycle_by_subsets(&p, 5));
    }

    #[test]
    fn length_below_three_is_an_error() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(find_induced_cycle(&g, 2), Err(HoleError::LengthTooSmall(2)));
    }

    #[test]
    fn triangles_are_found_but_are_not_holes() {
        let k4 = Graph::complete(4).unwrap();
        let t = find_induced_cycle(&k4, 3).unwrap().unwrap();
        assert_eq!(t.vertices, vec![0, 1, 2]);
        assert!(t.is_valid_in(&k4));
        assert!(has_odd_hole(&k4).is_none());
    }

    #[test]
    fn range_scans() {
        let c7 = Graph::cycle(7).unwrap();
        assert!(hole_free_in_range(&c7, 4, 5, RangeMode::All)
            .unwrap()
            .is_free());

        let p = petersen();
        let scan = hole_free_in_range(&p, 4, 7, RangeMode::All).unwrap();
        assert_eq!(scan.violation().unwrap().length(), 5);

        let c4 = Graph::cycle(4).unwrap();
        let scan = hole_free_in_range(&c4, 4, 4, RangeMode::All).unwrap();
        assert_eq!(scan.violation().unwrap().vertices, vec![0, 1, 2, 3]);

        // odd-only skips the 6-hole of C6
        let c6 = Graph::cycle(6).unwrap();
        assert!(hole_free_in_range(&c6, 4, 6, RangeMode::OddOnly)
            .unwrap()
            .is_free());
        assert!(!hole_free_in_range(&c6, 4, 6, RangeMode::All)
            .unwrap()
            .is_free());

        assert_eq!(
            hole_free_in_range(&c7, 3, 5, RangeMode::All),
            Err(HoleError::InvalidRange { lo: 3, hi: 5 })
        );
        assert_eq!(
            hole_free_in_range(&c7, 6, 5, RangeMode::All),
            Err(HoleError::InvalidRange { lo: 6, hi: 5 })
        );
    }

    #[test]
    fn odd_holes_and_antiholes() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(has_odd_hole(&c5).unwrap().length(), 5);
        assert_eq!(has_odd_antihole(&c5).unwrap().length(), 5);

        let c6 = Graph::cycle(6).unwrap();
        assert!(has_odd_hole(&c6).is_none());

        let co_c7 = Graph::cycle(7).unwrap().complement();
        let anti = has_odd_antihole(&co_c7).unwrap();
        assert_eq!(anti.length(), 7);
        assert_eq!(anti.kind, HoleKind::Antihole);
        assert!(anti.is_valid_in(&co_c7));
    }

    #[test]
    fn perfection_examples() {
        assert!(is_perfect(&Graph::cycle(6).unwrap()));
        assert!(is_perfect(&Graph::complete(4).unwrap()));

        let c7 = Graph::cycle(7).unwrap();
        let obstruction = perfection_obstruction(&c7).unwrap();
        assert_eq!(obstruction.length(), 7);
        assert!(obstruction.is_valid_in(&c7));
        assert!(!is_perfect(&c7));
    }

    #[test]
    fn perfection_by_definition_examples() {
        assert_eq!(
            is_perfect_by_definition(&Graph::cycle(5).unwrap()),
            Ok(false)
        );
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(is_perfect_by_definition(&p4), Ok(true));
        assert_eq!(
            is_perfect_by_definition(&Graph::cycle(6).unwrap()),
            Ok(true)
        );
        assert!(matches!(
            is_perfect_by_definition(&Graph::empty(13).unwrap()),
            Err(HoleError::TooLargeForOracle { n: 13, .. })
        ));
    }

    #[test]
    fn spgt_matches_definition_on_all_small_graphs() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(is_perfect(&g), is_perfect_by_definition(&g).unwrap());
            }
        }
    }

    #[test]
    fn cycle_search_matches_subset_oracle_on_random_graphs() {
        let mut state = 0x5eedu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..120 {
            let n = 8;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 10 < 4 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            for k in 3..=n {
                let oracle_cycles = oracle::induced_cycles_by_subsets(&g, k);
                let found = find_induced_cycle(&g, k).unwrap();
                assert_eq!(found.is_some(), !oracle_cycles.is_empty());
                if let Some(cert) = found {
                    assert!(cert.is_valid_in(&g));
                }
                // the least certificate matches the oracle's minimum
                if let Some(least) = least_induced_cycle(&g, k).unwrap() {
                    let mut mins: Vec<Vec<usize>> = oracle_cycles
                        .iter()
                        .map(|c| {
                            let mut s = c.clone();
                            s.sort_unstable();
                            s
                        })
                        .collect();
                    mins.sort();
                    let mut got = least.vertices.clone();
                    got.sort_unstable();
                    assert_eq!(got, mins[0]);
                }
            }
        }
    }

    #[test]
    fn corollary_class_examples() {
        let r = corollary_class_check(&Graph::complete(5).unwrap());
        assert!(r.in_class);
        assert_eq!(r.perfect, Some(true));
        assert!(!r.contradiction);

        let r = corollary_class_check(&Graph::cycle(7).unwrap());
        assert!(!r.in_class);
        assert_eq!(r.excluding_hole.unwrap().length(), 7);
        assert!(!r.contradiction);

        // the 3-cube has 4-holes, so no class membership and no assertion
        let q3 = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let r = corollary_class_check(&q3);
        assert!(!r.in_class);
        assert_eq!(r.excluding_hole.unwrap().length(), 4);
        assert_eq!(r.perfect, None);
    }
}
