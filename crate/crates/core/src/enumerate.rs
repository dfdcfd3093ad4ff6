//! Small-graph enumeration and seeded random instances for property sweeps.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Hypergraph};

/// Largest order supported by [`nonisomorphic_graphs`] and [`labeled_graphs`].
pub const MAX_ENUM_ORDER: usize = 8;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut next = 0;
    for p in 0..n {
        for q in p + 1..n {
            idx[p][q] = next;
            idx[q][p] = next;
            next += 1;
        }
    }
    idx
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for p in 0..n {
        for q in p + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((p, q));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("code describes a simple graph")
}

/// Smallest edge code over all vertex orderings that list vertices by
/// non-decreasing degree. The set of such orderings is isomorphism
/// invariant, so two graphs get the same code iff they are isomorphic.
fn canonical_code(adj: &[u32], idx: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| adj[v].count_ones());
    let degree_at: Vec<u32> = by_degree.iter().map(|&v| adj[v].count_ones()).collect();

    fn place(
        pos: usize,
        order: &mut Vec<usize>,
        used: u32,
        adj: &[u32],
        degree_at: &[u32],
        idx: &[Vec<usize>],
        best: &mut u64,
    ) {
        let n = adj.len();
        if pos == n {
            let mut code = 0u64;
            for p in 0..n {
                for q in p + 1..n {
                    if adj[order[p]] >> order[q] & 1 == 1 {
                        code |= 1 << idx[p][q];
                    }
                }
            }
            *best = (*best).min(code);
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 0 && adj[v].count_ones() == degree_at[pos] {
                order.push(v);
                place(pos + 1, order, used | 1 << v, adj, degree_at, idx, best);
                order.pop();
            }
        }
    }

    let mut best = u64::MAX;
    place(0, &mut Vec::with_capacity(n), 0, adj, &degree_at, idx, &mut best);
    best
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// in increasing canonical-code order.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUM_ORDER, "enumeration supports at most {MAX_ENUM_ORDER} vertices");
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 1..=n {
        let idx = pair_index(m);
        let prev_idx = pair_index(m - 1);
        let mut next = BTreeSet::new();
        for &code in &codes {
            let mut base = vec![0u32; m];
            for p in 0..m - 1 {
                for q in p + 1..m - 1 {
                    if code >> prev_idx[p][q] & 1 == 1 {
                        base[p] |= 1 << q;
                        base[q] |= 1 << p;
                    }
                }
            }
            for nbrs in 0u32..(1 << (m - 1)) {
                let mut adj = base.clone();
                adj[m - 1] = nbrs;
                for (v, row) in adj.iter_mut().enumerate().take(m - 1) {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                next.insert(canonical_code(&adj, &idx));
            }
        }
        codes = next;
    }
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// Every labeled graph on `n` vertices (`2^(n choose 2)` of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= MAX_ENUM_ORDER, "enumeration supports at most {MAX_ENUM_ORDER} vertices");
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |code| graph_from_code(n, code))
}

/// Labeled graph number `code` on `n` vertices: bit `b` of `code` switches
/// on the `b`-th pair in lexicographic order.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    assert!(n <= MAX_ENUM_ORDER, "enumeration supports at most {MAX_ENUM_ORDER} vertices");
    graph_from_code(n, code)
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1 << (n * n.saturating_sub(1) / 2)
}

/// `G(n, p)` with the edge probability itself drawn from `[0.15, 0.85]`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("random graph is valid")
}

/// Hypergraph on a ground set of `1..=max_ground` elements with between 1
/// and `max_edges` distinct hyperedges. Small hyperedges (including
/// singletons) are favored so that non-zero defects are common.
pub fn random_hypergraph<R: Rng>(rng: &mut R, max_ground: u32, max_edges: usize) -> Hypergraph {
    let m = rng.gen_range(1..=max_ground);
    let target = rng.gen_range(1..=max_edges);
    let mut edges = BTreeSet::new();
    let ground: Vec<u32> = (1..=m).collect();
    // bounded number of draws; duplicates are simply skipped
    for _ in 0..target * 4 {
        if edges.len() == target {
            break;
        }
        let size = if rng.gen_bool(0.15) {
            1
        } else {
            rng.gen_range(1..=m.min(4)) as usize
        };
        let mut e: Vec<u32> = ground.choose_multiple(rng, size).copied().collect();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::new(m, edges).expect("random hypergraph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_class_counts() {
        // number of graphs on n unlabeled vertices
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(labeled_graphs(0).count(), 1);
    }

    #[test]
    fn random_instances_are_reproducible() {
        let a: Vec<Graph> = (0..5).map(|_| random_graph(&mut rng(7), 7)).collect();
        let b: Vec<Graph> = (0..5).map(|_| random_graph(&mut rng(7), 7)).collect();
        assert_eq!(a, b);
        let mut r1 = rng(3);
        let mut r2 = rng(3);
        for _ in 0..20 {
            let h = random_hypergraph(&mut r1, 8, 12);
            assert_eq!(h, random_hypergraph(&mut r2, 8, 12));
            assert!(h.ground() <= 8 && !h.edges().is_empty() && h.edges().len() <= 12);
        }
    }
}
