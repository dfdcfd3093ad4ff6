//! Exhaustive Hadwiger-number and odd-Hadwiger-number oracles for tiny graphs.
//!
//! Both search for the largest family of pairwise disjoint vertex sets that
//! are connected in some "tree" graph and pairwise touch through some "link"
//! graph. For ordinary minors both graphs are `g`. For odd minors a global
//! `{1,2}`-coloring `f` is fixed first: trees may only use bichromatic edges
//! (a set admits a spanning tree properly colored by `f` iff it is connected
//! through bichromatic edges) and links must be monochromatic.

use crate::error::{check_limit, Result};
use crate::graph::Graph;
use crate::limits::Limits;

const HARD_CAP: usize = 24;

fn is_connected(mask: u32, tree_adj: &[u32]) -> bool {
    let start = mask & mask.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = tree_adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

struct Packing {
    // connected sets grouped by their smallest vertex, with the vertices they touch
    sets_by_min: Vec<Vec<(u32, u32)>>,
    chosen: Vec<u32>,
    best: usize,
    cap: usize,
}

impl Packing {
    fn new(tree_adj: &[u32], link_adj: &[u32], best: usize, cap: usize) -> Self {
        let n = tree_adj.len();
        let mut sets_by_min = vec![Vec::new(); n];
        for mask in 1u32..(1u32 << n) {
            if !is_connected(mask, tree_adj) {
                continue;
            }
            let mut touch = 0;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                touch |= link_adj[v];
            }
            sets_by_min[mask.trailing_zeros() as usize].push((mask, touch & !mask));
        }
        Packing {
            sets_by_min,
            chosen: Vec::new(),
            best,
            cap,
        }
    }

    fn search(&mut self, available: u32) {
        let count = self.chosen.len();
        if count > self.best {
            self.best = count;
        }
        if self.best >= self.cap || count + available.count_ones() as usize <= self.best {
            return;
        }
        let v = available.trailing_zeros() as usize;
        for idx in 0..self.sets_by_min[v].len() {
            let (set, touch) = self.sets_by_min[v][idx];
            if set & !available != 0 || self.chosen.iter().any(|&c| touch & c == 0) {
                continue;
            }
            self.chosen.push(set);
            self.search(available & !set);
            self.chosen.pop();
            if self.best >= self.cap {
                return;
            }
        }
        self.search(available & !(1 << v));
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    g.adjacency_masks().into_iter().map(|m| m as u32).collect()
}

fn edge_bound(g: &Graph) -> usize {
    // K_k needs k(k-1)/2 edges
    let mut k = 1;
    while (k + 1) * k / 2 <= g.edge_count() {
        k += 1;
    }
    k.min(g.order())
}

/// Hadwiger number: the largest `k` such that `g` has a `K_k` minor.
pub fn clique_minor_number(g: &Graph, limits: &Limits) -> Result<usize> {
    let n = g.order();
    check_limit("graph for clique-minor oracle", n, limits.oracle.min(HARD_CAP))?;
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let mut p = Packing::new(&adj, &adj, 0, edge_bound(g));
    p.search((1u32 << n) - 1);
    Ok(p.best)
}

/// Largest `k` such that `g` contains `K_k` as an odd minor.
pub fn odd_clique_minor_number(g: &Graph, limits: &Limits) -> Result<usize> {
    let n = g.order();
    check_limit("graph for odd-clique-minor oracle", n, limits.oracle.min(HARD_CAP))?;
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let all = (1u32 << n) - 1;
    // an odd minor is a minor
    let cap = {
        let mut p = Packing::new(&adj, &adj, 0, edge_bound(g));
        p.search(all);
        p.best
    };
    let mut best = 1;
    // swapping both colors globally changes nothing, so vertex 0 keeps color 1
    for second in (0..=all).step_by(2) {
        if best >= cap {
            break;
        }
        let first = all & !second;
        let same = |v: usize| if second >> v & 1 == 1 { second } else { first };
        let tree_adj: Vec<u32> = (0..n).map(|v| adj[v] & !same(v)).collect();
        let link_adj: Vec<u32> = (0..n).map(|v| adj[v] & same(v)).collect();
        let mut p = Packing::new(&tree_adj, &link_adj, best, cap);
        p.search(all);
        best = p.best;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{crown, kneser};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn clique_minor_examples() {
        assert_eq!(clique_minor_number(&Graph::complete_bipartite(3, 3), &l()).unwrap(), 4);
        assert_eq!(clique_minor_number(&Graph::cycle(5), &l()).unwrap(), 3);
        assert_eq!(clique_minor_number(&Graph::path(6), &l()).unwrap(), 2);
        assert_eq!(clique_minor_number(&Graph::empty(3), &l()).unwrap(), 1);
        assert_eq!(clique_minor_number(&Graph::complete(6), &l()).unwrap(), 6);
        assert_eq!(clique_minor_number(&crown(4), &l()).unwrap(), 4);
        assert_eq!(clique_minor_number(&Graph::empty(0), &l()).unwrap(), 0);
    }

    #[test]
    fn odd_clique_minor_examples() {
        assert_eq!(odd_clique_minor_number(&Graph::complete_bipartite(3, 3), &l()).unwrap(), 2);
        assert_eq!(odd_clique_minor_number(&Graph::complete(4), &l()).unwrap(), 4);
        assert_eq!(odd_clique_minor_number(&Graph::cycle(5), &l()).unwrap(), 3);
        assert_eq!(odd_clique_minor_number(&Graph::cycle(6), &l()).unwrap(), 2);
        assert_eq!(odd_clique_minor_number(&Graph::empty(2), &l()).unwrap(), 1);
    }

    #[test]
    fn oracle_limit() {
        let petersen = kneser(5, 2).unwrap();
        assert!(clique_minor_number(&petersen, &l()).is_err());
        // Petersen graph has Hadwiger number 5
        let big = Limits { oracle: 10, ..l() };
        assert_eq!(clique_minor_number(&petersen, &big).unwrap(), 5);
    }
}
