//! Brute-force reference implementations.
//!
//! Everything here trades speed for obviousness: plain subset enumeration
//! and unpruned backtracking, written independently of the optimized search
//! code so the two can be cross-checked on desk-scale inputs. These run in
//! exponential time and are only meant for small graphs.

use crate::graph::{Graph, VertexSet};

/// All induced cycles of length `k`, found by checking every `k`-subset.
///
/// Each cycle is reported once, as a vertex list starting at its smallest
/// member with the smaller second vertex of the two directions.
pub fn induced_cycles_by_subsets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut found = Vec::new();
    if k < 3 || k > n {
        return found;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let set: VertexSet = subset.iter().copied().collect();
        if let Some(cycle) = cycle_order(g, set) {
            found.push(cycle);
        }
        // next k-combination of 0..n
        let mut i = k;
        loop {
            if i == 0 {
                return found;
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// If the induced subgraph on `set` is a single cycle, returns its vertices
/// in cyclic order (anchored at the minimum, direction with the smaller
/// second vertex); otherwise `None`.
fn cycle_order(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    let members = set.to_vec();
    let k = members.len();
    if k < 3 {
        return None;
    }
    for &v in &members {
        if g.neighbors(v).intersection(set).len() != 2 {
            return None;
        }
    }
    // All degrees are 2; the subgraph is a disjoint union of cycles. Walk
    // from the smallest member and check we visit everything.
    let start = members[0];
    let mut order = vec![start];
    let first_nbrs = g.neighbors(start).intersection(set).to_vec();
    let mut prev = start;
    let mut cur = *first_nbrs.iter().min().unwrap();
    while cur != start {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .intersection(set)
            .iter()
            .find(|&w| w != prev)
            .unwrap();
        prev = cur;
        cur = next;
    }
    if order.len() == k {
        Some(order)
    } else {
        None
    }
}

pub fn has_induced_cycle_by_subsets(g: &Graph, k: usize) -> bool {
    !induced_cycles_by_subsets(g, k).is_empty()
}

/// Maximum clique size by scanning every subset of the vertex set.
pub fn max_clique_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset oracle limited to small graphs");
    let mut best = 0;
    for mask in 0u64..1u64 << n {
        let set = VertexSet::from_bits(mask);
        if set.len() > best && g.is_clique(set) {
            best = set.len();
        }
    }
    best
}

/// Maximum independent set size by scanning every subset.
pub fn max_independent_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset oracle limited to small graphs");
    let mut best = 0;
    for mask in 0u64..1u64 << n {
        let set = VertexSet::from_bits(mask);
        if set.len() > best && g.is_independent(set) {
            best = set.len();
        }
    }
    best
}

/// Plain backtracking colorability check: vertices in index order, every
/// color tried, no saturation ordering and no symmetry breaking.
pub fn colorable_by_assignments(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if g.neighbors(v)
                .iter()
                .take_while(|&u| u < v)
                .all(|u| colors[u] != c)
            {
                colors.push(c);
                if rec(g, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    if g.n() == 0 {
        return true;
    }
    rec(g, k, &mut Vec::with_capacity(g.n()))
}

/// Chromatic number by trying `k = 0, 1, 2, ...` with the naive check.
pub fn chromatic_by_assignments(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&k| colorable_by_assignments(g, k))
        .expect("n colors always suffice")
}

/// Claw (induced `K_{1,3}`) detection by scanning every 4-subset.
pub fn find_claw_by_subsets(g: &Graph) -> Option<(usize, [usize; 3])> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    for (idx, &center) in quad.iter().enumerate() {
                        let mut leaves = [0usize; 3];
                        let mut j = 0;
                        for (l, &w) in quad.iter().enumerate() {
                            if l != idx {
                                leaves[j] = w;
                                j += 1;
                            }
                        }
                        if leaves.iter().all(|&w| g.has_edge(center, w))
                            && !g.has_edge(leaves[0], leaves[1])
                            && !g.has_edge(leaves[0], leaves[2])
                            && !g.has_edge(leaves[1], leaves[2])
                        {
                            return Some((center, leaves));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Unpruned bipartition enumeration: tries all `2^n` splits `(S, T)` and
/// returns the first with `chi(G[S]) >= s` and `chi(G[T]) >= t`, computing
/// both chromatic numbers exactly.
pub fn splittable_by_enumeration(g: &Graph, s: usize, t: usize) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    assert!(n <= 20, "bipartition oracle limited to small graphs");
    let full = VertexSet::full(n);
    for mask in 0u64..1u64 << n {
        let side_s = VertexSet::from_bits(mask);
        let side_t = full.difference(side_s);
        let (gs, _) = g.induced_subgraph(side_s).unwrap();
        if crate::invariants::chromatic_number(&gs).0 < s {
            continue;
        }
        let (gt, _) = g.induced_subgraph(side_t).unwrap();
        if crate::invariants::chromatic_number(&gt).0 >= t {
            return Some((side_s, side_t));
        }
    }
    None
}
