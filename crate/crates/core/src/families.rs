//! Generators for Kneser-type graph families, crowns and joins.
//!
//! Every set-labelled family orders its vertices by the lexicographic order
//! of their label sets, so vertex ids (and the JSON output) are stable.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Hypergraph};

fn k_subsets(n: u32, k: u32) -> impl Iterator<Item = Vec<u32>> {
    (1..=n).combinations(k as usize)
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    // both sorted
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Graph on the given sorted sets, adjacent iff disjoint. Sets must already
/// be in lexicographic order.
fn disjointness_graph(sets: Vec<Vec<u32>>) -> Graph {
    let mut edges = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i + 1) {
            if disjoint(a, b) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(sets.len(), edges)
        .and_then(|g| g.with_labels(sets))
        .expect("disjointness graph on distinct sets is valid")
}

/// True iff `set` (sorted, within `[n]`) has no two cyclically consecutive elements.
pub fn is_cyclically_stable(set: &[u32], n: u32) -> bool {
    if set.windows(2).any(|w| w[1] == w[0] + 1) {
        return false;
    }
    // n and 1 are consecutive in the cyclic order, except in the degenerate [1]
    !(n > 1 && set.first() == Some(&1) && set.last() == Some(&n))
}

/// Kneser graph `K(n,k)`: all `k`-subsets of `[n]`, adjacent iff disjoint.
/// `n < 2k` is allowed and gives an edgeless graph.
pub fn kneser(n: u32, k: u32) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(Error::input(format!("kneser({n},{k}) needs n >= k >= 1")));
    }
    Ok(disjointness_graph(k_subsets(n, k).collect()))
}

/// Schrijver graph `S(n,k)`: the subgraph of `K(n,k)` induced by the
/// cyclically stable `k`-subsets of `[n]`.
pub fn schrijver(n: u32, k: u32) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::input(format!("schrijver({n},{k}) needs n >= 2k >= 2")));
    }
    Ok(disjointness_graph(
        k_subsets(n, k)
            .filter(|s| is_cyclically_stable(s, n))
            .collect(),
    ))
}

/// Kneser graph `KG(h)`: one vertex per hyperedge, adjacent iff disjoint.
pub fn kneser_graph(h: &Hypergraph) -> Graph {
    disjointness_graph(h.edges().to_vec())
}

/// A Kneser representation of `g`.
///
/// Ground elements `1..=n` stand for the vertices and `n+1..` for the
/// non-edges of `g` in sorted order; vertex `v` is represented by its own
/// element together with every non-edge incident to it. Two such sets meet
/// exactly when the vertices are equal or non-adjacent, and the hyperedge
/// order coincides with the vertex order.
pub fn kneser_representation(g: &Graph) -> Hypergraph {
    let n = g.order();
    let mut sets: Vec<Vec<u32>> = (0..n).map(|v| vec![v as u32 + 1]).collect();
    let mut next = n as u32 + 1;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                sets[u].push(next);
                sets[v].push(next);
                next += 1;
            }
        }
    }
    let h = Hypergraph::new(next - 1, sets).expect("representation sets are distinct and non-empty");
    debug_assert_eq!(kneser_graph(&h).edges(), g.edges());
    h
}

/// Crown graph `K*_{n,n}`: `K_{n,n}` minus a perfect matching.
///
/// Vertex `(x, 1)` has id `x - 1` and `(x, 2)` has id `n + x - 1`.
pub fn crown(n: usize) -> Graph {
    let edges = (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, n + y)));
    Graph::new(2 * n, edges).expect("crown is valid")
}

/// Join `g1 + g2`: disjoint union plus every edge between the two parts.
/// `g1` keeps ids `0..|g1|`. Labels are dropped.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.order();
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (u + off, v + off)))
        .chain((0..off).flat_map(|a| (0..g2.order()).map(move |b| (a, off + b))));
    Graph::new(off + g2.order(), edges).expect("join is valid")
}
