use std::collections::BTreeMap;

use itertools::Itertools;

use crate::certificates::{expansion_to_minor_model, verify_odd_expansion, Connector, MinorModel, OddExpansion, Tree};
use crate::error::{Error, Result};
use crate::families::{is_cyclically_stable, schrijver};
use crate::graph::{Graph, Vertex};

fn vertex(g: &Graph, mut set: Vec<u32>) -> Result<Vertex> {
    set.sort_unstable();
    g.vertex_with_label(&set)
        .ok_or_else(|| Error::internal(format!("{set:?} is not a vertex of the Schrijver graph")))
}

/// Odd `K_{n-2k+2}` expansion in `S(n,k)`.
///
/// Base family: the cyclically stable `(k-1)`-subsets of `[2k-1]`, which form
/// an odd cycle. Apart from `A_0 = {2,4,..,2k-2}` each contains exactly one of
/// `1` and `2k-1`; the base color is 1 for `A_0` and for sets containing `1`,
/// and 2 for sets containing `2k-1`. For `i = 1..n-2k` the path tree `T_i` is
/// induced on `{A ∪ {i + color(A) + 2k - 2}}` and inherits the base coloring;
/// the last two trees are the single vertices `{1,3,..,2k-1}` and
/// `{2,4,..,2k-2,n}`, both colored 1.
pub fn schrijver_expansion(n: u32, k: u32) -> Result<OddExpansion> {
    let g = schrijver(n, k)?;
    let top = 2 * k - 1;
    let base: Vec<Vec<u32>> = (1..=top)
        .combinations((k - 1) as usize)
        .filter(|a| is_cyclically_stable(a, top))
        .collect();
    let a0: Vec<u32> = (1..k).map(|i| 2 * i).collect();
    let a1: Vec<u32> = (1..k).map(|i| 2 * i - 1).collect();
    let base_color = |a: &[u32]| -> Result<u8> {
        if a == a0.as_slice() {
            return Ok(1);
        }
        match (a.contains(&1), a.contains(&top)) {
            (true, false) => Ok(1),
            (false, true) => Ok(2),
            _ => Err(Error::internal(format!("base set {a:?} has no color"))),
        }
    };

    let path_count = (n - 2 * k) as usize;
    let mut trees = Vec::with_capacity(path_count + 2);
    let mut colors = BTreeMap::new();
    for i in 1..=n - 2 * k {
        let mut vs = Vec::with_capacity(base.len());
        for a in &base {
            let color = base_color(a)?;
            let mut x = a.clone();
            x.push(i + color as u32 + 2 * k - 2);
            let v = vertex(&g, x)?;
            // the added element exceeds 2k-1, so X ∩ [2k-1] = A
            colors.insert(v, color);
            vs.push(v);
        }
        vs.sort_unstable();
        let es = vs
            .iter()
            .tuple_combinations()
            .filter(|&(&a, &b)| g.has_edge(a, b))
            .map(|(&a, &b)| (a, b))
            .collect();
        trees.push(Tree { vs, es });
    }

    let odd_vertex = vertex(&g, (1..=k).map(|i| 2 * i - 1).collect())?;
    let even_vertex = vertex(&g, a0.iter().copied().chain([n]).collect())?;
    trees.push(Tree::singleton(odd_vertex));
    trees.push(Tree::singleton(even_vertex));
    colors.insert(odd_vertex, 1);
    colors.insert(even_vertex, 1);

    let with = |a: &[u32], extra: u32| -> Result<Vertex> {
        let mut x = a.to_vec();
        x.push(extra);
        vertex(&g, x)
    };
    let (odd_idx, even_idx) = (path_count, path_count + 1);
    let mut connectors = Vec::new();
    for i in 1..=path_count as u32 {
        let ti = i as usize - 1;
        let head = with(&a0, i + top)?;
        for j in i + 1..=path_count as u32 {
            let tail = with(&a1, j + top)?;
            connectors.push(Connector { i: ti, j: j as usize - 1, u: head, v: tail });
        }
        connectors.push(Connector { i: ti, j: odd_idx, u: head, v: odd_vertex });
        let tail = with(&a1, i + top)?;
        connectors.push(Connector { i: ti, j: even_idx, u: tail, v: even_vertex });
    }
    connectors.push(Connector {
        i: odd_idx,
        j: even_idx,
        u: odd_vertex,
        v: even_vertex,
    });

    let x = OddExpansion {
        trees,
        colors,
        connectors,
    };
    let report = verify_odd_expansion(&g, &x);
    if !report.is_valid() {
        return Err(Error::internal(format!(
            "Schrijver expansion S({n},{k}) failed verification: {report}"
        )));
    }
    Ok(x)
}

/// `K_{n-2k+2}` minor model in `S(n,k)`, read off the odd expansion.
pub fn schrijver_minor_model(n: u32, k: u32) -> Result<MinorModel> {
    let x = schrijver_expansion(n, k)?;
    expansion_to_minor_model(&schrijver(n, k)?, &x)
}
