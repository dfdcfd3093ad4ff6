//! Graph, hypergraph and coloring types plus the elementary predicates the
//! rest of the crate is built on.
//!
//! Vertices are dense ids `0..n`. Hypergraph ground elements and vertex
//! labels are 1-based integer sets, matching the usual `[n] = {1..n}`
//! convention for Kneser-type families.

use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
/// Unordered edge, always stored with `.0 < .1`.
pub type Edge = (Vertex, Vertex);

/// Normalizes an unordered pair.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Finite simple undirected graph with optional set-valued vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<Vec<u32>>>,
}

impl Graph {
    /// Builds a graph on `0..n`. Duplicate edges (in either orientation) are
    /// merged; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            set.insert(edge(u, v));
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in &set {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
            labels: None,
        })
    }

    /// Attaches one label set per vertex. Labels are normalized to sorted
    /// sets and must be pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<Vec<u32>>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::input(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let labels: Vec<Vec<u32>> = labels.into_iter().map(normalize_set).collect();
        let distinct: BTreeSet<&Vec<u32>> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::input("vertex labels are not pairwise distinct"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is valid")
    }

    /// Cycle `0-1-..-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is valid")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("complete bipartite graph is valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Sorted edge list, each edge as `(u, v)` with `u < v`.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    #[inline]
    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn labels(&self) -> Option<&[Vec<u32>]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&[u32]> {
        self.labels.as_ref().map(|l| l[v].as_slice())
    }

    /// Looks up the vertex carrying `label` (which must be sorted).
    pub fn vertex_with_label(&self, label: &[u32]) -> Option<Vertex> {
        let labels = self.labels.as_ref()?;
        labels.iter().position(|l| l.as_slice() == label)
    }

    /// Adjacency rows as `u64` masks; only valid for graphs with at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|row| row.ones().fold(0u64, |m, v| m | (1 << v)))
            .collect()
    }

    pub(crate) fn check_vertex_set(&self, s: &[Vertex]) -> Result<FixedBitSet> {
        let mut bits = FixedBitSet::with_capacity(self.n);
        for &v in s {
            if v >= self.n {
                return Err(Error::input(format!(
                    "vertex {v} out of range for {} vertices",
                    self.n
                )));
            }
            if bits.put(v) {
                return Err(Error::input(format!("vertex {v} listed twice")));
            }
        }
        Ok(bits)
    }

    /// Whether `g[members]` is connected. The empty set counts as disconnected.
    pub(crate) fn is_connected_within(&self, members: &FixedBitSet) -> bool {
        let Some(start) = members.ones().next() else {
            return false;
        };
        let reached = self.reach_within(start, members);
        reached.count_ones(..) == members.count_ones(..)
    }

    fn reach_within(&self, start: Vertex, members: &FixedBitSet) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].intersection(members) {
                if !seen.put(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// BFS spanning tree of `g[s]`, rooted at the smallest vertex and
    /// visiting neighbors in increasing order. Edges come back sorted.
    pub fn bfs_spanning_tree(&self, s: &[Vertex]) -> Result<Vec<Edge>> {
        let members = self.check_vertex_set(s)?;
        let Some(root) = members.ones().next() else {
            return Ok(Vec::new());
        };
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(root);
        let mut queue = VecDeque::from([root]);
        let mut tree = Vec::with_capacity(s.len().saturating_sub(1));
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].intersection(&members) {
                if !seen.put(w) {
                    tree.push(edge(u, w));
                    queue.push_back(w);
                }
            }
        }
        if tree.len() + 1 != s.len() {
            return Err(Error::input("vertex set does not induce a connected subgraph"));
        }
        tree.sort_unstable();
        Ok(tree)
    }

    /// Complement graph (labels dropped).
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(n, edges).expect("complement is valid")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(raw: &str) -> Result<Self> {
        Ok(serde_json::from_str(raw)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Vec<u32>>>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let g = Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))?;
        match j.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels,
        }
    }
}

fn normalize_set(mut s: Vec<u32>) -> Vec<u32> {
    s.sort_unstable();
    s.dedup();
    s
}

/// Hypergraph on the ground set `{1..m}`.
///
/// Hyperedges are non-empty sorted sets, kept in lexicographic order; the
/// position of a hyperedge in [`Hypergraph::edges`] is its vertex id in the
/// Kneser graph built from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    m: u32,
    edges: Vec<Vec<u32>>,
}

impl Hypergraph {
    pub fn new(m: u32, edges: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for e in edges {
            let e = normalize_set(e);
            if e.is_empty() {
                return Err(Error::input("empty hyperedge"));
            }
            if let Some(&x) = e.iter().find(|&&x| x == 0 || x > m) {
                return Err(Error::input(format!(
                    "element {x} outside ground set 1..={m}"
                )));
            }
            if !set.insert(e.clone()) {
                return Err(Error::input(format!("duplicate hyperedge {e:?}")));
            }
        }
        Ok(Hypergraph {
            m,
            edges: set.into_iter().collect(),
        })
    }

    /// Ground set size.
    #[inline]
    pub fn ground(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge_index(&self, e: &[u32]) -> Option<usize> {
        self.edges.binary_search_by(|x| x.as_slice().cmp(e)).ok()
    }

    /// Hyperedges that avoid `removed`, over the same ground set.
    pub fn without_elements(&self, removed: &[u32]) -> Hypergraph {
        Hypergraph {
            m: self.m,
            edges: self
                .edges
                .iter()
                .filter(|e| e.iter().all(|x| !removed.contains(x)))
                .cloned()
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(raw: &str) -> Result<Self> {
        Ok(serde_json::from_str(raw)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphJson {
    m: u32,
    edges: Vec<Vec<u32>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;

    fn try_from(j: HypergraphJson) -> Result<Self> {
        Hypergraph::new(j.m, j.edges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        HypergraphJson {
            m: h.m,
            edges: h.edges,
        }
    }
}

/// Total vertex coloring with positive integer colors; index = vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring(colors)
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of distinct colors used.
    pub fn distinct_colors(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    pub(crate) fn check_total(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.order() {
            return Err(Error::input(format!(
                "coloring covers {} vertices, graph has {}",
                self.0.len(),
                g.order()
            )));
        }
        if let Some(v) = self.0.iter().position(|&c| c == 0) {
            return Err(Error::input(format!("vertex {v} has color 0")));
        }
        Ok(())
    }
}

/// Two sides of a bipartite (sub)graph, each sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

impl Bipartition {
    pub fn contains(&self, v: Vertex) -> bool {
        self.side_a.binary_search(&v).is_ok() || self.side_b.binary_search(&v).is_ok()
    }

    /// `Some(true)` for side A, `Some(false)` for side B.
    pub fn side_of(&self, v: Vertex) -> Option<bool> {
        if self.side_a.binary_search(&v).is_ok() {
            Some(true)
        } else if self.side_b.binary_search(&v).is_ok() {
            Some(false)
        } else {
            None
        }
    }
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_total(g)?;
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// The unique bipartition of the connected subgraph `g[s]`, or `None` if it
/// has an odd cycle. The side holding the smallest vertex is side A.
pub fn bipartition_of(g: &Graph, s: &[Vertex]) -> Result<Option<Bipartition>> {
    let members = g.check_vertex_set(s)?;
    if !g.is_connected_within(&members) {
        return Err(Error::input("vertex set does not induce a connected subgraph"));
    }
    let root = members.ones().next().expect("non-empty");
    let mut side: Vec<Option<bool>> = vec![None; g.order()];
    side[root] = Some(true);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let su = side[u].expect("visited");
        for w in g.neighbor_set(u).intersection(&members) {
            match side[w] {
                None => {
                    side[w] = Some(!su);
                    queue.push_back(w);
                }
                Some(sw) if sw == su => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let (mut side_a, mut side_b) = (Vec::new(), Vec::new());
    for v in members.ones() {
        if side[v] == Some(true) {
            side_a.push(v);
        } else {
            side_b.push(v);
        }
    }
    Ok(Some(Bipartition { side_a, side_b }))
}

/// Maximal connected vertex sets, each sorted, ordered by smallest element.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut out = Vec::new();
    for v in 0..g.order() {
        if seen.contains(v) {
            continue;
        }
        let comp = g.reach_within(v, &all);
        seen.union_with(&comp);
        out.push(comp.ones().collect());
    }
    out
}

/// True iff every pair in `s1 x s2` is an edge. Vacuously true when either side is empty.
pub fn is_complete_between(g: &Graph, s1: &[Vertex], s2: &[Vertex]) -> Result<bool> {
    let a = g.check_vertex_set(s1)?;
    let b = g.check_vertex_set(s2)?;
    if !a.is_disjoint(&b) {
        return Err(Error::input("sides of a complete bipartite check overlap"));
    }
    Ok(a.ones().all(|u| b.is_subset(g.neighbor_set(u))))
}

/// True iff `(vs, es)` is a tree contained in `g`. Malformed input (edges
/// not in `g`, endpoints outside `vs`, repeated items) yields `false`.
pub fn is_tree(g: &Graph, vs: &[Vertex], es: &[Edge]) -> bool {
    let Ok(members) = g.check_vertex_set(vs) else {
        return false;
    };
    if vs.is_empty() || es.len() + 1 != vs.len() {
        return false;
    }
    let mut seen_edges = BTreeSet::new();
    let mut sub = vec![FixedBitSet::with_capacity(g.order()); g.order()];
    for &(u, v) in es {
        if !g.has_edge(u, v) || !members.contains(u) || !members.contains(v) {
            return false;
        }
        if !seen_edges.insert(edge(u, v)) {
            return false;
        }
        sub[u].insert(v);
        sub[v].insert(u);
    }
    // |E| = |V| - 1, so connected <=> acyclic
    let root = vs[0];
    let mut seen = FixedBitSet::with_capacity(g.order());
    seen.insert(root);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for w in sub[u].ones() {
            if !seen.put(w) {
                stack.push(w);
            }
        }
    }
    seen.count_ones(..) == vs.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_normalized_and_deduplicated() {
        let g = Graph::new(3, [(2, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert!(Graph::new(2, [(1, 1)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn labels_must_be_distinct() {
        let g = Graph::empty(2);
        assert!(g.clone().with_labels(vec![vec![1], vec![1]]).is_err());
        assert!(g.clone().with_labels(vec![vec![1]]).is_err());
        let g = g.with_labels(vec![vec![2, 1], vec![3]]).unwrap();
        assert_eq!(g.label(0), Some(&[1, 2][..]));
    }

    #[test]
    fn graph_json_is_byte_stable() {
        let g = Graph::from_json(r#"{"n":3,"edges":[[2,1],[0,1]]}"#).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let again = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(again, g);
        assert!(Graph::from_json(r#"{"n":1,"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph::new(3, [vec![]]).is_err());
        assert!(Hypergraph::new(3, [vec![4]]).is_err());
        assert!(Hypergraph::new(3, [vec![1, 2], vec![2, 1]]).is_err());
        let h = Hypergraph::new(3, [vec![3], vec![2, 1], vec![1]]).unwrap();
        assert_eq!(h.edges(), &[vec![1], vec![1, 2], vec![3]]);
        assert_eq!(h.to_json(), r#"{"m":3,"edges":[[1],[1,2],[3]]}"#);
    }

    #[test]
    fn is_proper_examples() {
        let g = Graph::empty(3);
        assert!(is_proper(&g, &Coloring::new(vec![1, 1, 1])).unwrap());
        let k2 = Graph::complete(2);
        assert!(!is_proper(&k2, &Coloring::new(vec![1, 1])).unwrap());
        let c5 = Graph::cycle(5);
        assert!(is_proper(&c5, &Coloring::new(vec![1, 2, 1, 2, 3])).unwrap());
        assert!(is_proper(&c5, &Coloring::new(vec![1, 2])).is_err());
    }

    #[test]
    fn bipartition_examples() {
        let p = Graph::path(3);
        let b = bipartition_of(&p, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(b.side_a, vec![0, 2]);
        assert_eq!(b.side_b, vec![1]);
        assert!(bipartition_of(&Graph::complete(3), &[0, 1, 2]).unwrap().is_none());
        let b = bipartition_of(&Graph::complete(3), &[1]).unwrap().unwrap();
        assert_eq!((b.side_a, b.side_b), (vec![1], vec![]));
        assert!(bipartition_of(&Graph::empty(2), &[0, 1]).is_err());
        assert!(bipartition_of(&p, &[]).is_err());
    }

    #[test]
    fn components_examples() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(connected_components(&Graph::cycle(4)), vec![vec![0, 1, 2, 3]]);
        assert!(connected_components(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn complete_between_examples() {
        let k22 = Graph::complete_bipartite(2, 2);
        assert!(is_complete_between(&k22, &[0, 1], &[2, 3]).unwrap());
        assert!(is_complete_between(&k22, &[], &[2, 3]).unwrap());
        let c4 = Graph::cycle(4);
        assert!(is_complete_between(&c4, &[0, 2], &[1, 3]).unwrap());
        assert!(!is_complete_between(&c4, &[0, 1], &[2, 3]).unwrap());
        assert!(is_complete_between(&c4, &[0, 1], &[1, 3]).is_err());
    }

    #[test]
    fn tree_examples() {
        let k3 = Graph::complete(3);
        assert!(is_tree(&k3, &[2], &[]));
        assert!(!is_tree(&k3, &[0, 1, 2], &[(0, 1), (1, 2), (0, 2)]));
        assert!(is_tree(&Graph::path(3), &[0, 1, 2], &[(0, 1), (1, 2)]));
        assert!(!is_tree(&k3, &[], &[]));
        // edge endpoint outside the vertex set
        assert!(!is_tree(&k3, &[0, 1], &[(1, 2)]));
        // disconnected with the right edge count
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_tree(&g, &[0, 1, 2, 3], &[(0, 1), (1, 2), (0, 2)]));
    }

    #[test]
    fn bfs_tree_spans() {
        let c5 = Graph::cycle(5);
        let t = c5.bfs_spanning_tree(&[0, 1, 2, 3]).unwrap();
        assert_eq!(t, vec![(0, 1), (1, 2), (2, 3)]);
        assert!(is_tree(&c5, &[0, 1, 2, 3], &t));
        assert!(c5.bfs_spanning_tree(&[0, 2]).is_err());
    }
}
