//! Exact clique number, independence number, chromatic number, and
//! k-colorings by branch and bound.
//!
//! All searches are deterministic: given the same graph they return the same
//! witness, so certificates are reproducible across runs.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// A proper coloring: `assignment[v]` is the color of vertex `v`, colors are
/// contiguous from 0 and every color below `num_colors` is used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn empty() -> Self {
        Coloring {
            assignment: Vec::new(),
            num_colors: 0,
        }
    }

    /// Checks properness, completeness, and contiguity of color indices.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.assignment.len() != g.n() {
            return false;
        }
        if self.assignment.iter().any(|&c| c >= self.num_colors) {
            return false;
        }
        let mut used = vec![false; self.num_colors];
        for &c in &self.assignment {
            used[c] = true;
        }
        if used.iter().any(|&u| !u) {
            return false;
        }
        g.edges()
            .all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

/// A set of pairwise adjacent vertices. The same witness type carries
/// independent sets, which are cliques of the complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueWitness {
    pub vertices: VertexSet,
}

impl CliqueWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_clique_in(&self, g: &Graph) -> bool {
        g.check_in_range(self.vertices).is_ok() && g.is_clique(self.vertices)
    }

    pub fn is_independent_in(&self, g: &Graph) -> bool {
        g.check_in_range(self.vertices).is_ok() && g.is_independent(self.vertices)
    }
}

/// Maximum degree; 0 for the graph on no vertices.
pub fn max_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Exact maximum clique by branch and bound with a greedy-coloring upper
/// bound. Candidates are expanded in descending-degree order (ties by index).
pub fn max_clique(g: &Graph) -> CliqueWitness {
    let n = g.n();
    if n == 0 {
        return CliqueWitness {
            vertices: VertexSet::EMPTY,
        };
    }
    let mut static_order: Vec<usize> = g.vertices().collect();
    static_order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = VertexSet::EMPTY;
    let mut current = Vec::new();
    expand(
        g,
        &static_order,
        g.vertex_set().bits(),
        &mut current,
        &mut best,
    );
    CliqueWitness { vertices: best }
}

fn expand(
    g: &Graph,
    static_order: &[usize],
    cand: u64,
    current: &mut Vec<usize>,
    best: &mut VertexSet,
) {
    if cand == 0 {
        if current.len() > best.len() {
            *best = current.iter().copied().collect();
        }
        return;
    }
    // Greedy color classes over the candidates: vertices in class c have c
    // pairwise non-adjacent predecessors classes, so any clique inside the
    // first c classes has at most c vertices.
    let mut order = Vec::new();
    let mut bound = Vec::new();
    let mut remaining = cand;
    let mut class_no = 0usize;
    while remaining != 0 {
        class_no += 1;
        let mut class_mask = 0u64;
        for &v in static_order {
            if remaining & (1u64 << v) != 0 && g.neighbors(v).bits() & class_mask == 0 {
                class_mask |= 1u64 << v;
                order.push(v);
                bound.push(class_no);
            }
        }
        remaining &= !class_mask;
    }
    let mut cand = cand;
    for idx in (0..order.len()).rev() {
        let v = order[idx];
        if current.len() + bound[idx] <= best.len() {
            return;
        }
        current.push(v);
        expand(g, static_order, cand & g.neighbors(v).bits(), current, best);
        current.pop();
        cand &= !(1u64 << v);
    }
}

/// Exact maximum independent set, computed as a maximum clique of the
/// complement. The witness is independent in `g`.
pub fn independence_number(g: &Graph) -> CliqueWitness {
    max_clique(&g.complement())
}

/// Exact decision: returns a proper `k`-coloring iff one exists.
///
/// Backtracking over vertices in saturation order (ties by lowest index),
/// with color symmetry broken by only ever opening the next fresh color.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::empty());
    }
    if k == 0 {
        return None;
    }
    let k = k.min(n);
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut neighbor_colors: Vec<u64> = vec![0; n];
    if !color_rec(g, k, &mut assignment, &mut neighbor_colors, 0, 0) {
        return None;
    }
    let assignment: Vec<usize> = assignment.into_iter().map(|c| c.unwrap()).collect();
    let num_colors = assignment.iter().copied().max().unwrap() + 1;
    Some(Coloring {
        assignment,
        num_colors,
    })
}

fn color_rec(
    g: &Graph,
    k: usize,
    assignment: &mut Vec<Option<usize>>,
    neighbor_colors: &mut Vec<u64>,
    colored: usize,
    used: usize,
) -> bool {
    let n = g.n();
    if colored == n {
        return true;
    }
    // most saturated uncolored vertex, ties to the lowest index
    let mut v = usize::MAX;
    let mut best_sat = 0u32;
    for u in 0..n {
        if assignment[u].is_none() {
            let sat = neighbor_colors[u].count_ones();
            if v == usize::MAX || sat > best_sat {
                v = u;
                best_sat = sat;
            }
        }
    }
    let limit = used.min(k - 1);
    for c in 0..=limit {
        if neighbor_colors[v] & (1u64 << c) != 0 {
            continue;
        }
        assignment[v] = Some(c);
        let mut touched = 0u64;
        for u in g.neighbors(v).iter() {
            if assignment[u].is_none() && neighbor_colors[u] & (1u64 << c) == 0 {
                neighbor_colors[u] |= 1u64 << c;
                touched |= 1u64 << u;
            }
        }
        let new_used = used.max(c + 1);
        if color_rec(g, k, assignment, neighbor_colors, colored + 1, new_used) {
            return true;
        }
        for u in VertexSet::from_bits(touched).iter() {
            neighbor_colors[u] &= !(1u64 << c);
        }
        assignment[v] = None;
    }
    false
}

/// Greedy saturation-order coloring; an upper bound for the chromatic
/// number, never better than exact.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring::empty();
    }
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut neighbor_colors: Vec<u64> = vec![0; n];
    for _ in 0..n {
        let mut v = usize::MAX;
        let mut best_sat = 0u32;
        for u in 0..n {
            if assignment[u].is_none() {
                let sat = neighbor_colors[u].count_ones();
                if v == usize::MAX || sat > best_sat {
                    v = u;
                    best_sat = sat;
                }
            }
        }
        let c = (neighbor_colors[v].trailing_ones()) as usize;
        assignment[v] = Some(c);
        for u in g.neighbors(v).iter() {
            if assignment[u].is_none() {
                neighbor_colors[u] |= 1u64 << c;
            }
        }
    }
    let assignment: Vec<usize> = assignment.into_iter().map(|c| c.unwrap()).collect();
    let num_colors = assignment.iter().copied().max().unwrap() + 1;
    Coloring {
        assignment,
        num_colors,
    }
}

/// Exact chromatic number with an optimal coloring witness.
///
/// Searches `k` upward from the clique lower bound; the greedy coloring
/// caps the range from above.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    if g.n() == 0 {
        return (0, Coloring::empty());
    }
    let lb = max_clique(g).size();
    let greedy = greedy_coloring(g);
    let ub = greedy.num_colors;
    for k in lb..ub {
        if let Some(coloring) = k_colorable(g, k) {
            // k is the first feasible count, so the witness uses exactly k.
            debug_assert_eq!(coloring.num_colors, k);
            return (k, coloring);
        }
    }
    (ub, greedy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn petersen() -> Graph {
        // outer C5: 0..4, inner pentagram: 5..9, spokes i -(i+5)
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
    fn clique_number_examples() {
        assert_eq!(max_clique(&Graph::complete(6).unwrap()).size(), 6);
        assert_eq!(max_clique(&Graph::cycle(7).unwrap()).size(), 2);
        assert_eq!(max_clique(&Graph::empty(0).unwrap()).size(), 0);
        assert_eq!(max_clique(&Graph::empty(5).unwrap()).size(), 1);

        let p = petersen();
        assert_eq!(max_clique(&p).size(), oracle::max_clique_by_subsets(&p));
        assert_eq!(max_clique(&p).size(), 2);
    }

    #[test]
    fn clique_witness_is_a_clique() {
        let g = petersen();
        let w = max_clique(&g);
        assert!(w.is_clique_in(&g));
        assert_eq!(w.size(), w.vertices.len());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Graph::cycle(7).unwrap()).size(), 3);
        assert_eq!(independence_number(&Graph::complete(8).unwrap()).size(), 1);

        // C7 plus a vertex adjacent to v0, v1, v2
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend([(7, 0), (7, 1), (7, 2)]);
        let g = Graph::from_edges(8, &edges).unwrap();
        let w = independence_number(&g);
        assert_eq!(w.size(), oracle::max_independent_by_subsets(&g));
        assert_eq!(w.size(), 3);
        assert!(w.is_independent_in(&g));
    }

    #[test]
    fn colorability_examples() {
        let c7 = Graph::cycle(7).unwrap();
        assert!(k_colorable(&c7, 2).is_none());
        let col = k_colorable(&c7, 3).unwrap();
        assert!(col.is_valid(&c7));

        let p = petersen();
        let col = k_colorable(&p, 3).unwrap();
        assert!(col.is_valid(&p));
        assert!(oracle::colorable_by_assignments(&p, 3));
        assert!(!oracle::colorable_by_assignments(&p, 2));
        assert!(k_colorable(&p, 2).is_none());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(7).unwrap()).0, 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).0, 0);
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap()).0, 1);

        // K6 minus a perfect matching = K_{2,2,2}
        let k6 = Graph::complete(6).unwrap();
        let mut edges: Vec<(usize, usize)> = k6.edges().collect();
        edges.retain(|&(u, v)| !matches!((u, v), (0, 1) | (2, 3) | (4, 5)));
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(chromatic_number(&g).0, 3);
        assert_eq!(oracle::chromatic_by_assignments(&g), 3);

        let co_c7 = Graph::cycle(7).unwrap().complement();
        assert_eq!(chromatic_number(&co_c7).0, 4);
        assert_eq!(oracle::chromatic_by_assignments(&co_c7), 4);
    }

    #[test]
    fn chromatic_witness_is_optimal_and_valid() {
        let g = petersen();
        let (chi, coloring) = chromatic_number(&g);
        assert_eq!(chi, 3);
        assert_eq!(coloring.num_colors, chi);
        assert!(coloring.is_valid(&g));
        assert!(k_colorable(&g, chi - 1).is_none());
        assert!(chi >= max_clique(&g).size());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&Graph::cycle(7).unwrap()), 2);
        assert_eq!(max_degree(&Graph::complete(5).unwrap()), 4);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(max_degree(&star), 3);
        assert_eq!(max_degree(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn agrees_with_naive_enumeration_on_all_small_graphs() {
        // every labeled graph on up to 5 vertices
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
                assert_eq!(max_clique(&g).size(), oracle::max_clique_by_subsets(&g));
                assert_eq!(
                    independence_number(&g).size(),
                    oracle::max_independent_by_subsets(&g)
                );
                let (chi, coloring) = chromatic_number(&g);
                assert_eq!(chi, oracle::chromatic_by_assignments(&g));
                assert!(coloring.is_valid(&g));
                if chi > 0 {
                    assert!(k_colorable(&g, chi - 1).is_none());
                }
            }
        }
    }

    #[test]
    fn agrees_with_naive_enumeration_on_random_seven_vertex_graphs() {
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let mut edges = Vec::new();
            for u in 0..7 {
                for v in u + 1..7 {
                    if next() & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(7, &edges).unwrap();
            assert_eq!(max_clique(&g).size(), oracle::max_clique_by_subsets(&g));
            assert_eq!(chromatic_number(&g).0, oracle::chromatic_by_assignments(&g));
        }
    }
}
