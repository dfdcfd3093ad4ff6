use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::bounds::{is_zigzag, longest_zigzag, ZigzagWitness};
use crate::certificates::{verify_odd_expansion, Connector, OddExpansion, Tree};
use crate::decompose::{bipartite_connected_partition, partition_coloring, PartitionCertificate};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};

/// Finds an edge `(a, b)` with `a` in `ti`, `b` in `tj` and `f(a) == f(b)`.
///
/// Takes a joining edge whose earlier-part endpoint lies in a part fully
/// contained in its tree set. The later endpoint then has neighbors on both
/// sides of that part, and `f` 2-colors the part's spanning tree properly,
/// so one of those neighbors has the later endpoint's color.
pub fn find_monochromatic_edge(
    g: &Graph,
    p: &PartitionCertificate,
    f: &BTreeMap<Vertex, u8>,
    ti: &[Vertex],
    tj: &[Vertex],
) -> Result<Edge> {
    let n = g.order();
    let set_i = g.check_vertex_set(ti)?;
    let set_j = g.check_vertex_set(tj)?;
    if !set_i.is_disjoint(&set_j) {
        return Err(Error::input("tree vertex sets overlap"));
    }
    let eta = p.part_index(n);
    let part_inside = |part: usize, set: &FixedBitSet| p.parts[part].iter().all(|&v| set.contains(v));
    let mut joined = false;
    for a in set_i.ones() {
        for b in g.neighbor_set(a).intersection(&set_j) {
            joined = true;
            let (Some(pa), Some(pb)) = (eta[a], eta[b]) else {
                return Err(Error::input("partition does not cover the trees"));
            };
            let (early_part, late, early_set, late_in_i) = if pa < pb {
                (pa, b, &set_i, false)
            } else if pb < pa {
                (pb, a, &set_j, true)
            } else {
                continue;
            };
            if !part_inside(early_part, early_set) {
                continue;
            }
            let Some(&fl) = f.get(&late) else {
                return Err(Error::input(format!("vertex {late} has no tree color")));
            };
            let hit = p.parts[early_part]
                .iter()
                .copied()
                .find(|&w| g.has_edge(w, late) && f.get(&w) == Some(&fl));
            match hit {
                Some(w) if late_in_i => return Ok((late, w)),
                Some(w) => return Ok((w, late)),
                None => {
                    return Err(Error::input(format!(
                        "vertex {late} sees only one color class of part {early_part}"
                    )))
                }
            }
        }
    }
    if joined {
        Err(Error::input(
            "no joining edge reaches a part contained in its tree",
        ))
    } else {
        Err(Error::input("no edge joins the two trees"))
    }
}

/// 2-colors a tree by BFS from its smallest vertex, which gets color 1.
fn color_tree(tree: &Tree, colors: &mut BTreeMap<Vertex, u8>) {
    let Some(&root) = tree.vs.iter().min() else { return };
    let mut local: BTreeMap<Vertex, u8> = BTreeMap::from([(root, 1)]);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let cu = local[&u];
        for &(a, b) in &tree.es {
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if let std::collections::btree_map::Entry::Vacant(e) = local.entry(other) {
                e.insert(3 - cu);
                queue.push_back(other);
            }
        }
    }
    colors.extend(local);
}

fn merge_trees(parts: &[&Tree], extra: Option<Edge>) -> Tree {
    let mut vs: Vec<Vertex> = parts.iter().flat_map(|t| t.vs.iter().copied()).collect();
    let mut es: Vec<Edge> = parts.iter().flat_map(|t| t.es.iter().copied()).collect();
    es.extend(extra);
    vs.sort_unstable();
    es.sort_unstable();
    Tree { vs, es }
}

/// Builds an odd `K_k` expansion with `k = floor(l/2) + 1` from a zigzag of
/// length `l >= 2` in the coloring induced by `p`.
pub fn extract_odd_expansion(
    g: &Graph,
    p: &PartitionCertificate,
    w: &ZigzagWitness,
) -> Result<OddExpansion> {
    let c = partition_coloring(g, p)?;
    if !is_zigzag(g, &c, &w.sequence)? {
        return Err(Error::input(
            "sequence is not a zigzag of the partition coloring",
        ));
    }
    let len = w.len();
    if len < 2 {
        return Err(Error::input("zigzag of length >= 2 required"));
    }
    let even_len = len - len % 2;
    let k = even_len / 2 + 1;
    let z = &w.sequence[..even_len];
    let eta = p.part_index(g.order());
    let part = |v: Vertex| eta[v].expect("partition covers every vertex");

    // spanning tree of every part, BFS from its smallest vertex
    let part_trees: Vec<Tree> = p
        .parts
        .iter()
        .map(|vs| {
            Ok(Tree {
                vs: vs.clone(),
                es: g.bfs_spanning_tree(vs)?,
            })
        })
        .collect::<Result<_>>()?;

    // same-part zigzag pairs are consecutive; orient them as (odd, even) position
    let mut matched = vec![false; even_len];
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..even_len - 1 {
        if part(z[i]) == part(z[i + 1]) {
            matched[i] = true;
            matched[i + 1] = true;
            pairs.push(if i % 2 == 0 { (z[i], z[i + 1]) } else { (z[i + 1], z[i]) });
        }
    }
    let r = pairs.len();

    let mut trees: Vec<Tree> = Vec::with_capacity(k);
    let mut colors = BTreeMap::new();
    let mut connectors = Vec::new();

    if r + 2 <= k {
        // extend the matching greedily to a perfect matching of the complete bipartite graph
        let free_x = (0..even_len).step_by(2).filter(|&i| !matched[i]).map(|i| z[i]);
        let free_y = (1..even_len).step_by(2).filter(|&i| !matched[i]).map(|i| z[i]);
        pairs.extend(free_x.zip(free_y));
        debug_assert_eq!(pairs.len(), k - 1);

        for &(x, _) in &pairs[..r] {
            trees.push(part_trees[part(x)].clone());
        }
        for &(x, y) in &pairs[r..k - 2] {
            trees.push(merge_trees(
                &[&part_trees[part(x)], &part_trees[part(y)]],
                Some(edge(x, y)),
            ));
        }
        let (x_last, y_last) = pairs[k - 2];
        trees.push(part_trees[part(x_last)].clone());
        trees.push(part_trees[part(y_last)].clone());
        for t in &trees {
            color_tree(t, &mut colors);
        }
        for a in 0..k {
            for b in a + 1..k {
                let (u, v) = find_monochromatic_edge(g, p, &colors, &trees[a].vs, &trees[b].vs)?;
                connectors.push(Connector { i: a, j: b, u, v });
            }
        }
    } else {
        // every zigzag pair shares a part; the last pair becomes two singletons
        let (x_last, y_last) = pairs[k - 2];
        for &(x, _) in &pairs[..k - 2] {
            trees.push(part_trees[part(x)].clone());
        }
        for t in &trees {
            color_tree(t, &mut colors);
        }
        trees.push(Tree::singleton(x_last));
        trees.push(Tree::singleton(y_last));
        colors.insert(x_last, 1);
        colors.insert(y_last, 1);
        for a in 0..k {
            for b in a + 1..k {
                let (u, v) = if a == k - 2 && b == k - 1 {
                    (x_last, y_last)
                } else {
                    find_monochromatic_edge(g, p, &colors, &trees[a].vs, &trees[b].vs)?
                };
                connectors.push(Connector { i: a, j: b, u, v });
            }
        }
    }

    let x = OddExpansion {
        trees,
        colors,
        connectors,
    };
    let report = verify_odd_expansion(g, &x);
    if !report.is_valid() {
        return Err(Error::internal(format!(
            "odd expansion from zigzag failed verification: {report}"
        )));
    }
    Ok(x)
}

/// Partition, induced coloring, longest zigzag, then extraction. Returns the
/// zigzag length `l` and an odd expansion of order `floor(l/2) + 1`
/// (order 0 for the empty graph).
pub fn odd_hadwiger_witness(g: &Graph) -> Result<(usize, OddExpansion)> {
    let p = bipartite_connected_partition(g)?;
    let c = partition_coloring(g, &p)?;
    let w = longest_zigzag(g, &c)?;
    let x = match w.len() {
        0 => OddExpansion {
            trees: Vec::new(),
            colors: BTreeMap::new(),
            connectors: Vec::new(),
        },
        1 => OddExpansion {
            trees: vec![Tree::singleton(w.sequence[0])],
            colors: BTreeMap::from([(w.sequence[0], 1)]),
            connectors: Vec::new(),
        },
        _ => extract_odd_expansion(g, &p, &w)?,
    };
    Ok((w.len(), x))
}
