//! Exact chromatic number, zigzag number `zig(G)` and 2-colorability defect
//! `cd(H)` for desk-scale inputs.

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Result};
use crate::graph::{is_proper, Coloring, Graph, Hypergraph, Vertex};
use crate::limits::Limits;

/// A zigzag: colors strictly increase along `sequence`, and the odd-position
/// vertices are complete to the even-position vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagWitness {
    pub sequence: Vec<Vertex>,
    pub coloring: Coloring,
}

impl ZigzagWitness {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Vertices at odd positions `z_1, z_3, ...`.
    pub fn odd_side(&self) -> Vec<Vertex> {
        self.sequence.iter().copied().step_by(2).collect()
    }

    /// Vertices at even positions `z_2, z_4, ...`.
    pub fn even_side(&self) -> Vec<Vertex> {
        self.sequence.iter().copied().skip(1).step_by(2).collect()
    }
}

/// Checks the zigzag conditions for `seq` under `c`.
pub fn is_zigzag(g: &Graph, c: &Coloring, seq: &[Vertex]) -> Result<bool> {
    c.check_total(g)?;
    if seq.iter().any(|&v| v >= g.order()) {
        return Err(Error::input("zigzag vertex out of range"));
    }
    if seq.windows(2).any(|w| c.color(w[0]) >= c.color(w[1])) {
        return Ok(false);
    }
    let complete = seq.iter().step_by(2).all(|&a| {
        seq.iter().skip(1).step_by(2).all(|&b| g.has_edge(a, b))
    });
    Ok(complete)
}

/// Two color classes of a hypergraph 2-coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoring {
    pub x1: Vec<u32>,
    pub x2: Vec<u32>,
}

/// Minimal deletion set `U` for `cd(H)` and a 2-coloring of what remains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectWitness {
    pub u: Vec<u32>,
    pub coloring: TwoColoring,
}

impl DefectWitness {
    /// The coloring covers exactly `ground \ U` and no surviving hyperedge is
    /// monochromatic. Minimality is not checked here.
    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        let m = h.ground() as usize;
        let mut seen = vec![0u8; m + 1];
        let parts = [(&self.u, 3u8), (&self.coloring.x1, 1), (&self.coloring.x2, 2)];
        for (set, tag) in parts {
            for &x in set {
                if x == 0 || x as usize > m || seen[x as usize] != 0 {
                    return false;
                }
                seen[x as usize] = tag;
            }
        }
        if seen[1..].contains(&0) {
            return false;
        }
        h.without_elements(&self.u).edges().iter().all(|e| {
            let first = seen[e[0] as usize];
            e.iter().any(|&x| seen[x as usize] != first)
        })
    }
}

// ---------------------------------------------------------------------------
// chromatic number

struct ColorSearch<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    // neighbor_counts[v][c]: number of neighbors of v currently colored c
    neighbor_counts: Vec<Vec<u16>>,
    best: usize,
    best_colors: Vec<u32>,
    lower: usize,
}

impl ColorSearch<'_> {
    fn saturation(&self, v: Vertex, used: u32) -> usize {
        (1..=used as usize)
            .filter(|&c| self.neighbor_counts[v][c] > 0)
            .count()
    }

    fn assign(&mut self, v: Vertex, c: u32) {
        self.colors[v] = c;
        for w in self.g.neighbors(v) {
            self.neighbor_counts[w][c as usize] += 1;
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let c = self.colors[v] as usize;
        self.colors[v] = 0;
        for w in self.g.neighbors(v) {
            self.neighbor_counts[w][c] -= 1;
        }
    }

    fn search(&mut self, colored: usize, used: u32) {
        if used as usize >= self.best {
            return;
        }
        let n = self.g.order();
        if colored == n {
            self.best = used as usize;
            self.best_colors = self.colors.clone();
            return;
        }
        // DSATUR choice: max saturation, then max degree, then smallest id
        let v = (0..n)
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.saturation(v, used), self.g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex exists");
        let top = (used + 1).min(self.best as u32 - 1);
        for c in 1..=top {
            if self.neighbor_counts[v][c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            self.search(colored + 1, used.max(c));
            self.unassign(v);
            if self.best <= self.lower {
                return;
            }
        }
    }
}

fn greedy_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    for v in 0..g.order() {
        let mut clique = vec![v];
        let mut common = g.neighbor_set(v).clone();
        while let Some(w) = common.ones().next() {
            clique.push(w);
            common.intersect_with(g.neighbor_set(w));
        }
        best = best.max(clique.len());
    }
    best
}

/// Exact chromatic number with an optimal proper coloring (DSATUR branch and bound).
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<(usize, Coloring)> {
    let n = g.order();
    check_limit("graph for chromatic number", n, limits.chi)?;
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let mut s = ColorSearch {
        g,
        colors: vec![0; n],
        neighbor_counts: vec![vec![0; n + 2]; n],
        best: n + 1,
        best_colors: Vec::new(),
        lower: greedy_clique_size(g),
    };
    s.search(0, 0);
    let coloring = Coloring::new(s.best_colors);
    debug_assert!(is_proper(g, &coloring).unwrap_or(false));
    Ok((s.best, coloring))
}

// ---------------------------------------------------------------------------
// zigzags

struct ZigzagSearch<'a> {
    g: &'a Graph,
    c: &'a Coloring,
    // sorted distinct colors of `c`
    distinct: Vec<u32>,
    seq: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl ZigzagSearch<'_> {
    fn colors_above(&self, last: u32) -> usize {
        self.distinct.len() - self.distinct.partition_point(|&c| c <= last)
    }

    fn dfs(&mut self, last: u32, common_odd: &FixedBitSet, common_even: &FixedBitSet) {
        if self.seq.len() > self.best.len() {
            self.best = self.seq.clone();
        }
        if self.best.len() == self.distinct.len() {
            return;
        }
        if self.seq.len() + self.colors_above(last) <= self.best.len() {
            return;
        }
        // 1-based position of the next vertex
        let next_is_odd = self.seq.len() % 2 == 0;
        let pool = if next_is_odd { common_even } else { common_odd };
        let candidates: Vec<Vertex> = pool.ones().filter(|&v| self.c.color(v) > last).collect();
        for v in candidates {
            self.seq.push(v);
            if next_is_odd {
                let mut odd = common_odd.clone();
                odd.intersect_with(self.g.neighbor_set(v));
                self.dfs(self.c.color(v), &odd, common_even);
            } else {
                let mut even = common_even.clone();
                even.intersect_with(self.g.neighbor_set(v));
                self.dfs(self.c.color(v), common_odd, &even);
            }
            self.seq.pop();
            if self.best.len() == self.distinct.len() {
                return;
            }
        }
    }
}

/// A longest zigzag of `(g, c)`; among longest ones the lexicographically
/// smallest vertex sequence.
pub fn longest_zigzag(g: &Graph, c: &Coloring) -> Result<ZigzagWitness> {
    if !is_proper(g, c)? {
        return Err(Error::input("longest_zigzag needs a proper coloring"));
    }
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    let distinct: Vec<u32> = c.as_slice().iter().copied().sorted().dedup().collect();
    let mut s = ZigzagSearch {
        g,
        c,
        distinct,
        seq: Vec::new(),
        best: Vec::new(),
    };
    s.dfs(0, &all, &all);
    Ok(ZigzagWitness {
        sequence: s.best,
        coloring: c.clone(),
    })
}

/// Longest zigzag length when vertices in `classes[i]` get color `i + 1`
/// (other vertices uncolored). Masks over at most 64 vertices.
fn max_zigzag_masks(adj: &[u64], classes: &[u64]) -> usize {
    fn dfs(adj: &[u64], classes: &[u64], next: usize, odd: u64, even: u64, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        let next_is_odd = len % 2 == 0;
        for ci in next..classes.len() {
            if len + (classes.len() - ci) <= *best {
                return;
            }
            let mut cand = classes[ci] & if next_is_odd { even } else { odd };
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if next_is_odd {
                    dfs(adj, classes, ci + 1, odd & adj[v], even, len + 1, best);
                } else {
                    dfs(adj, classes, ci + 1, odd, even & adj[v], len + 1, best);
                }
            }
        }
    }
    let mut best = 0;
    dfs(adj, classes, 0, u64::MAX, u64::MAX, 0, &mut best);
    best
}

fn clique_number_masks(adj: &[u64]) -> usize {
    fn grow(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, rest & adj[v], size + 1, best);
        }
    }
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    grow(adj, all, 0, &mut best);
    best
}

struct ZigSearch<'a> {
    adj: &'a [u64],
    classes: Vec<u64>,
    best: usize,
    best_classes: Vec<u64>,
    lower: usize,
}

impl ZigSearch<'_> {
    fn is_independent(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & set != 0 {
                return false;
            }
        }
        true
    }

    fn enumerate(&mut self, remaining: u64) {
        // zigzags among already-colored vertices survive any completion
        let current = max_zigzag_masks(self.adj, &self.classes);
        if current >= self.best {
            return;
        }
        if remaining == 0 {
            self.best = current;
            self.best_classes = self.classes.clone();
            return;
        }
        let mut sub = remaining;
        while sub != 0 {
            if self.is_independent(sub) {
                self.classes.push(sub);
                self.enumerate(remaining & !sub);
                self.classes.pop();
                if self.best <= self.lower {
                    return;
                }
            }
            sub = (sub - 1) & remaining;
        }
    }
}

/// Exact `zig(g)`: the minimum over proper colorings of the longest zigzag,
/// with an optimal coloring and its longest zigzag.
///
/// Colorings are enumerated as ordered partitions into independent sets
/// (class `i` gets color `i`); a prefix is abandoned once its colored part
/// already holds a zigzag as long as the best complete coloring found.
pub fn zig(g: &Graph, limits: &Limits) -> Result<(usize, Coloring, ZigzagWitness)> {
    let n = g.order();
    check_limit("graph for zig", n, limits.zig.min(64))?;
    if n == 0 {
        let c = Coloring::new(Vec::new());
        let w = ZigzagWitness {
            sequence: Vec::new(),
            coloring: c.clone(),
        };
        return Ok((0, c, w));
    }
    let adj = g.adjacency_masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = ZigSearch {
        adj: &adj,
        classes: Vec::new(),
        best: usize::MAX,
        best_classes: Vec::new(),
        // every clique is a zigzag under any proper coloring
        lower: clique_number_masks(&adj),
    };
    s.enumerate(all);

    let mut colors = vec![0u32; n];
    for (i, &class) in s.best_classes.iter().enumerate() {
        for (v, c) in colors.iter_mut().enumerate() {
            if class >> v & 1 == 1 {
                *c = i as u32 + 1;
            }
        }
    }
    let coloring = Coloring::new(colors);
    let witness = longest_zigzag(g, &coloring)?;
    if witness.len() != s.best {
        return Err(Error::internal(format!(
            "zig search reported {} but the optimal coloring has a zigzag of length {}",
            s.best,
            witness.len()
        )));
    }
    Ok((s.best, coloring, witness))
}

// ---------------------------------------------------------------------------
// hypergraph 2-coloring and cd

/// Backtracking 2-coloring of the hyperedges over the ground elements not in
/// `excluded`. Returns color 1/2 per element (index 0 and excluded entries are 0).
fn two_color(m: u32, edges: &[&Vec<u32>], excluded: &[bool]) -> Option<Vec<u8>> {
    if edges.iter().any(|e| e.len() == 1) {
        return None;
    }
    let mut assign = vec![0u8; m as usize + 1];

    // Returns false on a monochromatic hyperedge; forces the last undecided
    // element of an otherwise monochromatic hyperedge.
    fn propagate(edges: &[&Vec<u32>], assign: &mut [u8], trail: &mut Vec<u32>) -> bool {
        loop {
            let mut changed = false;
            for e in edges {
                let mut undecided = None;
                let mut open = 0;
                let mut seen = [false; 3];
                for &x in e.iter() {
                    match assign[x as usize] {
                        0 => {
                            open += 1;
                            undecided = Some(x);
                        }
                        c => seen[c as usize] = true,
                    }
                }
                if seen[1] && seen[2] {
                    continue;
                }
                match open {
                    0 => return false,
                    1 => {
                        let x = undecided.expect("one open element");
                        assign[x as usize] = if seen[1] { 2 } else { 1 };
                        trail.push(x);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn solve(m: u32, edges: &[&Vec<u32>], excluded: &[bool], assign: &mut [u8]) -> bool {
        let mut trail = Vec::new();
        if propagate(edges, assign, &mut trail) {
            let next = (1..=m).find(|&x| assign[x as usize] == 0 && !excluded[x as usize]);
            match next {
                None => return true,
                Some(x) => {
                    for c in [1, 2] {
                        assign[x as usize] = c;
                        if solve(m, edges, excluded, assign) {
                            return true;
                        }
                    }
                    assign[x as usize] = 0;
                }
            }
        }
        for x in trail {
            assign[x as usize] = 0;
        }
        false
    }

    if solve(m, edges, excluded, &mut assign) {
        Some(assign)
    } else {
        None
    }
}

fn split_classes(assign: &[u8]) -> TwoColoring {
    let pick = |c: u8| {
        assign
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &a)| a == c)
            .map(|(x, _)| x as u32)
            .collect()
    };
    TwoColoring {
        x1: pick(1),
        x2: pick(2),
    }
}

/// A 2-coloring of the ground set with no monochromatic hyperedge, if one exists.
pub fn is_two_colorable(h: &Hypergraph) -> Option<TwoColoring> {
    let edges: Vec<&Vec<u32>> = h.edges().iter().collect();
    let excluded = vec![false; h.ground() as usize + 1];
    two_color(h.ground(), &edges, &excluded).map(|a| split_classes(&a))
}

/// 2-colorability defect `cd(h)` with the lexicographically smallest minimum
/// deletion set and a 2-coloring of the remainder.
pub fn cd(h: &Hypergraph, limits: &Limits) -> Result<(usize, DefectWitness)> {
    let m = h.ground();
    check_limit("hypergraph ground set for cd", m as usize, limits.cd)?;
    for size in 0..=m as usize {
        for u in (1..=m).combinations(size) {
            let mut excluded = vec![false; m as usize + 1];
            for &x in &u {
                excluded[x as usize] = true;
            }
            let edges: Vec<&Vec<u32>> = h
                .edges()
                .iter()
                .filter(|e| e.iter().all(|&x| !excluded[x as usize]))
                .collect();
            if let Some(assign) = two_color(m, &edges, &excluded) {
                let witness = DefectWitness {
                    u,
                    coloring: split_classes(&assign),
                };
                return Ok((size, witness));
            }
        }
    }
    unreachable!("deleting the whole ground set leaves no hyperedge")
}
