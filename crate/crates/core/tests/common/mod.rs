//! Naive reference implementations used to cross-check the library.
#![allow(dead_code)]

use itertools::Itertools;
use minorforge::{Graph, Hypergraph};

pub fn is_proper_direct(g: &Graph, colors: &[u32]) -> bool {
    colors.len() == g.order() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Smallest k admitting a proper k-coloring, by plain backtracking.
pub fn brute_chi(g: &Graph) -> usize {
    fn extend(g: &Graph, v: usize, k: u32, colors: &mut Vec<u32>) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == c)) {
                colors.push(c);
                if extend(g, v + 1, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (0..=g.order() as u32)
        .find(|&k| extend(g, 0, k, &mut Vec::new()))
        .unwrap() as usize
}

pub fn is_bipartite_direct(g: &Graph) -> bool {
    brute_chi(g) <= 2
}

/// Longest sequence with strictly increasing colors whose odd and even
/// positions are complete to each other.
pub fn brute_longest_zigzag(g: &Graph, colors: &[u32]) -> usize {
    fn grow(g: &Graph, colors: &[u32], seq: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(seq.len());
        let last = seq.last().map(|&v| colors[v]);
        for v in 0..g.order() {
            if last.is_some_and(|c| colors[v] <= c) {
                continue;
            }
            // the new vertex must see every earlier vertex of the other parity
            let parity = seq.len() % 2;
            let ok = seq
                .iter()
                .enumerate()
                .filter(|(i, _)| i % 2 != parity)
                .all(|(_, &u)| g.has_edge(u, v));
            if ok {
                seq.push(v);
                grow(g, colors, seq, best);
                seq.pop();
            }
        }
    }
    let mut best = 0;
    grow(g, colors, &mut Vec::new(), &mut best);
    best
}

/// Minimum over proper colorings of the longest zigzag. Only the order of
/// the color classes matters, so every set partition into independent sets
/// is tried under every ordering of its blocks.
pub fn brute_zig(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut best = usize::MAX;
    let mut block_of = vec![0usize; n];
    fn partitions(g: &Graph, v: usize, blocks: usize, block_of: &mut Vec<usize>, best: &mut usize) {
        let n = g.order();
        if v == n {
            for order in (0..blocks).permutations(blocks) {
                let colors: Vec<u32> = block_of.iter().map(|&b| order[b] as u32 + 1).collect();
                *best = (*best).min(brute_longest_zigzag(g, &colors));
            }
            return;
        }
        for b in 0..=blocks {
            if (0..v).any(|u| block_of[u] == b && g.has_edge(u, v)) {
                continue;
            }
            block_of[v] = b;
            partitions(g, v + 1, blocks.max(b + 1), block_of, best);
        }
    }
    partitions(g, 0, 0, &mut block_of, &mut best);
    best
}

/// Minimum number of ground elements whose removal, together with the
/// hyperedges through them, leaves a 2-colorable hypergraph.
pub fn brute_cd(h: &Hypergraph) -> usize {
    let m = h.ground();
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |acc, &x| acc | 1 << (x - 1)))
        .collect();
    let all = (1u32 << m) - 1;
    (0..=all)
        .filter(|&removed| {
            let alive: Vec<u32> = masks.iter().copied().filter(|&e| e & removed == 0).collect();
            // brute force over which remaining elements get color 1
            let rest = all & !removed;
            let mut sub = rest;
            loop {
                if alive.iter().all(|&e| e & sub != 0 && e & !sub != 0) {
                    return true;
                }
                if sub == 0 {
                    return false;
                }
                sub = (sub - 1) & rest;
            }
        })
        .map(|removed| removed.count_ones() as usize)
        .min()
        .unwrap()
}

/// Isomorphism test by trying every vertex permutation (small graphs only).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    (0..a.order()).permutations(a.order()).any(|p| {
        a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
    })
}
