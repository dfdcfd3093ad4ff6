use crate::bounds::cd;
use crate::certificates::{smallest_links, verify_minor_model, MinorModel};
use crate::error::{Error, Result};
use crate::families::kneser_graph;
use crate::graph::{Hypergraph, Vertex};
use crate::limits::Limits;

/// A `K_t` minor model in `KG(h)` with `t = cd(h)`. Vertex ids of the model
/// are hyperedge indices of `h`.
///
/// With `U` a minimum deletion set and `X_1, X_2` a 2-coloring of what is
/// left, elements `u` of `U` whose singleton is a hyperedge give singleton
/// branch sets. Every other `u` has hyperedges `e(u,1)`, `e(u,2)` with
/// `u in e(u,i) ⊆ X_i ∪ {u}`; for those `u_1 < .. < u_s` the branch sets are
/// `{e(u_x,1), e(u_{x+1},2)}` (indices mod `s`), which contracts the crown
/// `K*_{s,s}` they span onto `K_s`.
pub fn extract_minor_from_kneser_rep(h: &Hypergraph, limits: &Limits) -> Result<(usize, MinorModel)> {
    let (t, witness) = cd(h, limits)?;
    if t == 0 {
        return Ok((0, MinorModel::empty()));
    }
    let g = kneser_graph(h);

    let (u1, u2): (Vec<u32>, Vec<u32>) = witness
        .u
        .iter()
        .partition(|&&u| h.edge_index(&[u]).is_some());

    let mut branch_sets: Vec<Vec<Vertex>> = u1
        .iter()
        .map(|&u| vec![h.edge_index(&[u]).expect("singleton hyperedge")])
        .collect();

    let classes = [&witness.coloring.x1, &witness.coloring.x2];
    // e(u, i): lexicographically smallest hyperedge through u inside X_i ∪ {u}
    let pick = |u: u32, i: usize| -> Result<Vertex> {
        h.edges()
            .iter()
            .position(|e| e.contains(&u) && e.iter().all(|&x| x == u || classes[i].binary_search(&x).is_ok()))
            .ok_or_else(|| {
                Error::internal(format!(
                    "no hyperedge through {u} inside color class {}; deletion set is not minimal",
                    i + 1
                ))
            })
    };
    let chosen: Vec<[Vertex; 2]> = u2
        .iter()
        .map(|&u| Ok([pick(u, 0)?, pick(u, 1)?]))
        .collect::<Result<_>>()?;

    match chosen.len() {
        0 => {}
        1 => branch_sets.push(vec![chosen[0][0]]),
        2 => {
            branch_sets.push(vec![chosen[0][0]]);
            branch_sets.push(vec![chosen[1][1]]);
        }
        s => {
            for x in 0..s {
                let mut pair = vec![chosen[x][0], chosen[(x + 1) % s][1]];
                pair.sort_unstable();
                branch_sets.push(pair);
            }
        }
    }

    let links = smallest_links(&g, &branch_sets)
        .ok_or_else(|| Error::internal("branch sets in the Kneser graph are not pairwise adjacent"))?;
    let model = MinorModel { branch_sets, links };
    let report = verify_minor_model(&g, &model);
    if !report.is_valid() {
        return Err(Error::internal(format!(
            "minor model from Kneser representation failed verification: {report}"
        )));
    }
    debug_assert_eq!(model.order(), t);
    Ok((t, model))
}
