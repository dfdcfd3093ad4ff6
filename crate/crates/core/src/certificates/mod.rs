//! Certificates for clique minors and odd clique minors, and their verifiers.
//!
//! An [`OddExpansion`] of order `k` is `k` vertex-disjoint trees with a
//! `{1,2}`-coloring that is proper on every tree, plus one monochromatic
//! edge between every pair of trees. A [`MinorModel`] is `k` disjoint
//! connected branch sets pairwise joined by an edge.

mod oracle;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_tree, Edge, Graph, Vertex};
use crate::report::{Check, ValidationReport};

pub use oracle::{clique_minor_number, odd_clique_minor_number};

/// Edge `u-v` of the host graph joining piece `i` (holding `u`) to piece `j`
/// (holding `v`). Serialized as `[i, j, u, v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 4]", into = "[usize; 4]")]
pub struct Connector {
    pub i: usize,
    pub j: usize,
    pub u: Vertex,
    pub v: Vertex,
}

impl From<[usize; 4]> for Connector {
    fn from([i, j, u, v]: [usize; 4]) -> Self {
        Connector { i, j, u, v }
    }
}

impl From<Connector> for [usize; 4] {
    fn from(c: Connector) -> Self {
        [c.i, c.j, c.u, c.v]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tree {
    pub vs: Vec<Vertex>,
    pub es: Vec<Edge>,
}

impl Tree {
    pub fn singleton(v: Vertex) -> Self {
        Tree {
            vs: vec![v],
            es: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OddExpansion {
    pub trees: Vec<Tree>,
    pub colors: BTreeMap<Vertex, u8>,
    pub connectors: Vec<Connector>,
}

impl OddExpansion {
    pub fn order(&self) -> usize {
        self.trees.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("expansion serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<Vertex>>,
    pub links: Vec<Connector>,
}

impl MinorModel {
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn empty() -> Self {
        MinorModel {
            branch_sets: Vec::new(),
            links: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("minor model serializes")
    }
}

/// Maps each vertex to the piece containing it, recording range and overlap
/// violations.
fn owners<'a>(
    n: usize,
    pieces: impl Iterator<Item = &'a Vec<Vertex>>,
    what: &str,
    report: &mut ValidationReport,
) -> Vec<Option<usize>> {
    let mut owner = vec![None; n];
    for (i, piece) in pieces.enumerate() {
        if piece.is_empty() {
            report.push(Check::NonEmpty, format!("{what} {i} is empty"));
        }
        for &v in piece {
            if v >= n {
                report.push(Check::VertexRange, format!("{what} {i} lists vertex {v} >= {n}"));
                continue;
            }
            match owner[v] {
                Some(j) if j != i => report.push(
                    Check::Disjointness,
                    format!("vertex {v} is in {what}s {j} and {i}"),
                ),
                Some(_) => report.push(
                    Check::Disjointness,
                    format!("vertex {v} listed twice in {what} {i}"),
                ),
                None => owner[v] = Some(i),
            }
        }
    }
    owner
}

/// Every unordered pair of the `k` pieces must be joined by exactly one
/// listed connector whose endpoints sit in the right pieces and form an edge
/// of `g`. `extra` performs additional per-connector checks.
fn check_connectors(
    g: &Graph,
    k: usize,
    connectors: &[Connector],
    owner: &[Option<usize>],
    check: Check,
    report: &mut ValidationReport,
    mut extra: impl FnMut(&Connector, &mut ValidationReport),
) {
    let mut covered = BTreeSet::new();
    for c in connectors {
        if c.i >= k || c.j >= k || c.i == c.j {
            report.push(check, format!("connector {c:?} names invalid pieces"));
            continue;
        }
        if !covered.insert((c.i.min(c.j), c.i.max(c.j))) {
            report.push(check, format!("pair ({}, {}) has more than one connector", c.i, c.j));
        }
        if owner.get(c.u).copied().flatten() != Some(c.i) || owner.get(c.v).copied().flatten() != Some(c.j) {
            report.push(
                check,
                format!("connector {c:?}: endpoints are not in pieces {} and {}", c.i, c.j),
            );
            continue;
        }
        if !g.has_edge(c.u, c.v) {
            report.push(check, format!("connector {c:?}: {}-{} is not an edge", c.u, c.v));
            continue;
        }
        extra(c, report);
    }
    for i in 0..k {
        for j in i + 1..k {
            if !covered.contains(&(i, j)) {
                report.push(check, format!("no connector between pieces {i} and {j}"));
            }
        }
    }
}

/// Verifies every odd-expansion condition inside `g`.
pub fn verify_odd_expansion(g: &Graph, x: &OddExpansion) -> ValidationReport {
    let n = g.order();
    let mut report = ValidationReport::default();
    let owner = owners(n, x.trees.iter().map(|t| &t.vs), "tree", &mut report);

    for (i, t) in x.trees.iter().enumerate() {
        if !is_tree(g, &t.vs, &t.es) {
            report.push(Check::TreeShape, format!("tree {i} is not a tree of the graph"));
        }
        for &v in &t.vs {
            match x.colors.get(&v) {
                Some(1 | 2) => {}
                Some(c) => report.push(Check::ColorDomain, format!("vertex {v} has color {c}")),
                None => report.push(Check::ColorDomain, format!("tree vertex {v} is uncolored")),
            }
        }
        for &(a, b) in &t.es {
            if let (Some(ca), Some(cb)) = (x.colors.get(&a), x.colors.get(&b)) {
                if ca == cb {
                    report.push(
                        Check::TreeColoring,
                        format!("tree {i} edge {a}-{b} is monochromatic"),
                    );
                }
            }
        }
    }
    for &v in x.colors.keys() {
        if owner.get(v).copied().flatten().is_none() {
            report.push(Check::ColorDomain, format!("vertex {v} is colored but in no tree"));
        }
    }

    check_connectors(
        g,
        x.trees.len(),
        &x.connectors,
        &owner,
        Check::Connector,
        &mut report,
        |c, report| {
            if x.colors.get(&c.u) != x.colors.get(&c.v) {
                report.push(
                    Check::Connector,
                    format!("connector {}-{} is not monochromatic", c.u, c.v),
                );
            }
        },
    );
    report
}

/// Verifies that `m` is a clique-minor model in `g`.
pub fn verify_minor_model(g: &Graph, m: &MinorModel) -> ValidationReport {
    let mut report = ValidationReport::default();
    let owner = owners(g.order(), m.branch_sets.iter(), "branch set", &mut report);
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            continue;
        }
        match g.check_vertex_set(set) {
            Ok(members) if !g.is_connected_within(&members) => {
                report.push(Check::Connectivity, format!("branch set {i} is not connected"));
            }
            _ => {}
        }
    }
    check_connectors(
        g,
        m.branch_sets.len(),
        &m.links,
        &owner,
        Check::Link,
        &mut report,
        |_, _| {},
    );
    report
}

/// Tree vertex sets become branch sets and connectors become links.
pub fn expansion_to_minor_model(g: &Graph, x: &OddExpansion) -> Result<MinorModel> {
    let report = verify_odd_expansion(g, x);
    if !report.is_valid() {
        return Err(Error::input(format!("invalid odd expansion: {report}")));
    }
    Ok(MinorModel {
        branch_sets: x.trees.iter().map(|t| t.vs.clone()).collect(),
        links: x.connectors.clone(),
    })
}

/// For each pair of pieces, the smallest edge `(u, v)` of `g` with `u` in
/// piece `i` and `v` in piece `j`, or `None` if some pair is not adjacent.
pub(crate) fn smallest_links(g: &Graph, pieces: &[Vec<Vertex>]) -> Option<Vec<Connector>> {
    let mut links = Vec::new();
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            let found = pieces[i]
                .iter()
                .flat_map(|&u| pieces[j].iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| g.has_edge(u, v))
                .min()?;
            links.push(Connector {
                i,
                j,
                u: found.0,
                v: found.1,
            });
        }
    }
    Some(links)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_trees(vs: &[Vertex]) -> Vec<Tree> {
        vs.iter().map(|&v| Tree::singleton(v)).collect()
    }

    #[test]
    fn order_one_singleton_is_valid() {
        let x = OddExpansion {
            trees: single_trees(&[0]),
            colors: BTreeMap::from([(0, 1)]),
            connectors: vec![],
        };
        assert!(verify_odd_expansion(&Graph::empty(1), &x).is_valid());
        let m = expansion_to_minor_model(&Graph::empty(1), &x).unwrap();
        assert_eq!(m.branch_sets, vec![vec![0]]);
    }

    #[test]
    fn k2_monochromatic_connector() {
        let k2 = Graph::complete(2);
        let mut x = OddExpansion {
            trees: single_trees(&[0, 1]),
            colors: BTreeMap::from([(0, 1), (1, 1)]),
            connectors: vec![Connector { i: 0, j: 1, u: 0, v: 1 }],
        };
        assert!(verify_odd_expansion(&k2, &x).is_valid());
        x.colors.insert(1, 2);
        let r = verify_odd_expansion(&k2, &x);
        assert!(r.has(Check::Connector));
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn expansion_rejects_structural_errors() {
        let p3 = Graph::path(3);
        // tree edge monochromatic, missing connector, colored stray vertex
        let x = OddExpansion {
            trees: vec![Tree { vs: vec![0, 1], es: vec![(0, 1)] }, Tree::singleton(1)],
            colors: BTreeMap::from([(0, 1), (1, 1), (2, 2)]),
            connectors: vec![],
        };
        let r = verify_odd_expansion(&p3, &x);
        assert!(r.has(Check::Disjointness));
        assert!(r.has(Check::TreeColoring));
        assert!(r.has(Check::ColorDomain));
        assert!(r.has(Check::Connector));

        let not_a_tree = OddExpansion {
            trees: vec![Tree { vs: vec![0, 2], es: vec![(0, 2)] }],
            colors: BTreeMap::from([(0, 1), (2, 2)]),
            connectors: vec![],
        };
        assert!(verify_odd_expansion(&p3, &not_a_tree).has(Check::TreeShape));
        assert!(expansion_to_minor_model(&p3, &not_a_tree).is_err());
    }

    #[test]
    fn c5_k3_model() {
        let c5 = Graph::cycle(5);
        let m = MinorModel {
            branch_sets: vec![vec![0, 1], vec![2], vec![3, 4]],
            links: vec![
                Connector { i: 0, j: 1, u: 1, v: 2 },
                Connector { i: 0, j: 2, u: 0, v: 4 },
                Connector { i: 1, j: 2, u: 2, v: 3 },
            ],
        };
        assert!(verify_minor_model(&c5, &m).is_valid());
        assert_eq!(smallest_links(&c5, &m.branch_sets).unwrap(), m.links);
    }

    #[test]
    fn overlapping_branch_sets_rejected() {
        let k3 = Graph::complete(3);
        let m = MinorModel {
            branch_sets: vec![vec![0, 1], vec![1, 2]],
            links: vec![Connector { i: 0, j: 1, u: 0, v: 2 }],
        };
        assert!(verify_minor_model(&k3, &m).has(Check::Disjointness));
    }

    #[test]
    fn non_adjacent_branch_sets_rejected() {
        let k33 = Graph::complete_bipartite(3, 3);
        let m = MinorModel {
            branch_sets: vec![vec![0], vec![1], vec![2]],
            links: vec![],
        };
        let r = verify_minor_model(&k33, &m);
        assert_eq!(r.violations.len(), 3);
        assert!(r.has(Check::Link));
        assert!(smallest_links(&k33, &m.branch_sets).is_none());
    }

    #[test]
    fn disconnected_branch_set_rejected() {
        let p4 = Graph::path(4);
        let m = MinorModel {
            branch_sets: vec![vec![0, 2], vec![1]],
            links: vec![Connector { i: 0, j: 1, u: 0, v: 1 }],
        };
        assert!(verify_minor_model(&p4, &m).has(Check::Connectivity));
    }

    #[test]
    fn certificate_json_shapes() {
        let x = OddExpansion {
            trees: vec![Tree { vs: vec![0, 1], es: vec![(0, 1)] }, Tree::singleton(2)],
            colors: BTreeMap::from([(0, 1), (1, 2), (2, 1)]),
            connectors: vec![Connector { i: 0, j: 1, u: 0, v: 2 }],
        };
        assert_eq!(
            x.to_json(),
            r#"{"trees":[{"vs":[0,1],"es":[[0,1]]},{"vs":[2],"es":[]}],"colors":{"0":1,"1":2,"2":1},"connectors":[[0,1,0,2]]}"#
        );
        let back: OddExpansion = serde_json::from_str(&x.to_json()).unwrap();
        assert_eq!(back, x);
        let m = MinorModel {
            branch_sets: vec![vec![0], vec![1]],
            links: vec![Connector { i: 0, j: 1, u: 0, v: 1 }],
        };
        assert_eq!(m.to_json(), r#"{"branch_sets":[[0],[1]],"links":[[0,1,0,1]]}"#);
    }
}
