//! Ordered partitions into connected bipartite parts where every later
//! vertex sees either nothing or both sides of each earlier part, and the
//! proper coloring they induce.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition_of, Bipartition, Coloring, Graph, Vertex};
use crate::report::{Check, ValidationReport};

/// Ordered partition `X_1..X_n` of the vertex set with the recorded
/// bipartition `(A_i, B_i)` of every part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "PartitionJson", into = "PartitionJson")]
pub struct PartitionCertificate {
    pub parts: Vec<Vec<Vertex>>,
    pub sides: Vec<Bipartition>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionJson {
    parts: Vec<Vec<Vertex>>,
    sides: Vec<[Vec<Vertex>; 2]>,
}

impl From<PartitionJson> for PartitionCertificate {
    fn from(j: PartitionJson) -> Self {
        PartitionCertificate {
            parts: j.parts,
            sides: j
                .sides
                .into_iter()
                .map(|[side_a, side_b]| Bipartition { side_a, side_b })
                .collect(),
        }
    }
}

impl From<PartitionCertificate> for PartitionJson {
    fn from(p: PartitionCertificate) -> Self {
        PartitionJson {
            parts: p.parts,
            sides: p.sides.into_iter().map(|b| [b.side_a, b.side_b]).collect(),
        }
    }
}

impl PartitionCertificate {
    /// Part index (0-based) of every vertex of an `n`-vertex graph; `None`
    /// for uncovered or out-of-range vertices. Assumes disjoint parts.
    pub fn part_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut eta = vec![None; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v < n {
                    eta[v] = Some(i);
                }
            }
        }
        eta
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }
}

/// Greedy construction: seed each part with the smallest remaining vertex,
/// then keep absorbing the smallest remaining vertex whose neighbors in the
/// part all lie on one side (it joins the other side). A part is closed
/// when every remaining vertex touching it sees both of its sides.
pub fn bipartite_connected_partition(g: &Graph) -> Result<PartitionCertificate> {
    let n = g.order();
    let mut remaining = FixedBitSet::with_capacity(n);
    remaining.insert_range(..);
    let mut parts = Vec::new();
    let mut sides = Vec::new();

    while let Some(root) = remaining.ones().next() {
        remaining.set(root, false);
        let mut side_a = FixedBitSet::with_capacity(n);
        let mut side_b = FixedBitSet::with_capacity(n);
        side_a.insert(root);
        loop {
            let next = remaining.ones().find_map(|v| {
                let nbrs = g.neighbor_set(v);
                let sees_a = !nbrs.is_disjoint(&side_a);
                let sees_b = !nbrs.is_disjoint(&side_b);
                match (sees_a, sees_b) {
                    (true, false) => Some((v, false)),
                    (false, true) => Some((v, true)),
                    _ => None,
                }
            });
            let Some((v, to_a)) = next else { break };
            remaining.set(v, false);
            if to_a {
                side_a.insert(v);
            } else {
                side_b.insert(v);
            }
        }
        let mut part: Vec<Vertex> = side_a.union(&side_b).collect();
        part.sort_unstable();
        parts.push(part);
        sides.push(Bipartition {
            side_a: side_a.ones().collect(),
            side_b: side_b.ones().collect(),
        });
    }

    let p = PartitionCertificate { parts, sides };
    let report = verify_partition(g, &p);
    if !report.is_valid() {
        return Err(Error::internal(format!("greedy partition failed verification: {report}")));
    }
    Ok(p)
}

/// Checks coverage, disjointness, non-emptiness, connectivity,
/// bipartiteness, recorded sides and the cross-part neighbor rule.
pub fn verify_partition(g: &Graph, p: &PartitionCertificate) -> ValidationReport {
    let n = g.order();
    let mut report = ValidationReport::default();
    let mut owner: Vec<Option<usize>> = vec![None; n];

    for (i, part) in p.parts.iter().enumerate() {
        if part.is_empty() {
            report.push(Check::NonEmpty, format!("part {i} is empty"));
        }
        for &v in part {
            if v >= n {
                report.push(Check::VertexRange, format!("part {i} lists vertex {v} >= {n}"));
                continue;
            }
            match owner[v] {
                Some(j) => report.push(
                    Check::Disjointness,
                    format!("vertex {v} appears in parts {j} and {i}"),
                ),
                None => owner[v] = Some(i),
            }
        }
    }
    let uncovered: Vec<Vertex> = (0..n).filter(|&v| owner[v].is_none()).collect();
    if !uncovered.is_empty() {
        report.push(Check::Coverage, format!("vertices {uncovered:?} are in no part"));
    }
    if p.sides.len() != p.parts.len() {
        report.push(
            Check::RecordedSides,
            format!("{} parts but {} recorded bipartitions", p.parts.len(), p.sides.len()),
        );
    }
    if !report.is_valid() {
        // structural problems make the remaining checks meaningless
        return report;
    }

    let mut true_sides: Vec<Option<Bipartition>> = Vec::with_capacity(p.parts.len());
    for (i, part) in p.parts.iter().enumerate() {
        let members = g.check_vertex_set(part).expect("range and duplicates checked");
        if !g.is_connected_within(&members) {
            report.push(Check::Connectivity, format!("part {i} is not connected"));
            true_sides.push(None);
            continue;
        }
        match bipartition_of(g, part).expect("connected part") {
            None => {
                report.push(Check::Bipartite, format!("part {i} contains an odd cycle"));
                true_sides.push(None);
            }
            Some(b) => {
                if b != p.sides[i] {
                    report.push(
                        Check::RecordedSides,
                        format!(
                            "part {i}: recorded sides {:?}/{:?}, expected {:?}/{:?}",
                            p.sides[i].side_a, p.sides[i].side_b, b.side_a, b.side_b
                        ),
                    );
                }
                true_sides.push(Some(b));
            }
        }
    }

    for (j, part) in p.parts.iter().enumerate() {
        for &v in part {
            for (i, sides) in true_sides.iter().enumerate().take(j) {
                let Some(b) = sides else { continue };
                let sees_a = b.side_a.iter().any(|&u| g.has_edge(u, v));
                let sees_b = b.side_b.iter().any(|&u| g.has_edge(u, v));
                if sees_a != sees_b {
                    report.push(
                        Check::NeighborRule,
                        format!("vertex {v} in part {j} sees only one side of part {i}"),
                    );
                }
            }
        }
    }
    report
}

/// `c(x) = 2i - 1` for `x` in `A_i` and `2i` for `x` in `B_i` (parts numbered from 1).
pub fn partition_coloring(g: &Graph, p: &PartitionCertificate) -> Result<Coloring> {
    let report = verify_partition(g, p);
    if !report.is_valid() {
        return Err(Error::input(format!("invalid partition certificate: {report}")));
    }
    let mut colors = vec![0u32; g.order()];
    for (i, b) in p.sides.iter().enumerate() {
        let base = 2 * i as u32;
        for &v in &b.side_a {
            colors[v] = base + 1;
        }
        for &v in &b.side_b {
            colors[v] = base + 2;
        }
    }
    Ok(Coloring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_proper;

    fn bip(a: &[Vertex], b: &[Vertex]) -> Bipartition {
        Bipartition {
            side_a: a.to_vec(),
            side_b: b.to_vec(),
        }
    }

    #[test]
    fn connected_bipartite_graph_is_one_part() {
        for g in [Graph::complete_bipartite(3, 2), Graph::path(5), Graph::cycle(6)] {
            let p = bipartite_connected_partition(&g).unwrap();
            assert_eq!(p.parts, vec![(0..g.order()).collect::<Vec<_>>()]);
        }
    }

    #[test]
    fn c5_partition_and_coloring() {
        let c5 = Graph::cycle(5);
        let p = bipartite_connected_partition(&c5).unwrap();
        assert_eq!(p.parts, vec![vec![0, 1, 2, 3], vec![4]]);
        assert_eq!(p.sides, vec![bip(&[0, 2], &[1, 3]), bip(&[4], &[])]);
        let c = partition_coloring(&c5, &p).unwrap();
        assert_eq!(c.as_slice(), &[1, 2, 1, 2, 3]);
    }

    #[test]
    fn k4_partition_and_coloring() {
        let k4 = Graph::complete(4);
        let p = bipartite_connected_partition(&k4).unwrap();
        assert_eq!(p.parts, vec![vec![0, 1], vec![2, 3]]);
        let c = partition_coloring(&k4, &p).unwrap();
        assert_eq!(c.as_slice(), &[1, 2, 3, 4]);
        assert!(is_proper(&k4, &c).unwrap());
    }

    #[test]
    fn reversed_c5_partition_breaks_neighbor_rule() {
        let c5 = Graph::cycle(5);
        let p = PartitionCertificate {
            parts: vec![vec![4], vec![0, 1, 2, 3]],
            sides: vec![bip(&[4], &[]), bip(&[0, 2], &[1, 3])],
        };
        let r = verify_partition(&c5, &p);
        assert!(r.has(Check::NeighborRule));
        let offenders: Vec<&str> = r.violations.iter().map(|v| v.detail.as_str()).collect();
        assert_eq!(offenders.len(), 2, "{offenders:?}");
        assert!(partition_coloring(&c5, &p).is_err());
    }

    #[test]
    fn odd_cycle_part_is_reported() {
        let k3 = Graph::complete(3);
        let p = PartitionCertificate {
            parts: vec![vec![0, 1, 2]],
            sides: vec![bip(&[0, 2], &[1])],
        };
        assert!(verify_partition(&k3, &p).has(Check::Bipartite));
    }

    #[test]
    fn structural_violations() {
        let g = Graph::path(3);
        let p = PartitionCertificate {
            parts: vec![vec![0, 1], vec![1], vec![]],
            sides: vec![bip(&[0], &[1]), bip(&[1], &[]), bip(&[], &[])],
        };
        let r = verify_partition(&g, &p);
        assert!(r.has(Check::Disjointness));
        assert!(r.has(Check::Coverage));
        assert!(r.has(Check::NonEmpty));

        let wrong_sides = PartitionCertificate {
            parts: vec![vec![0, 1, 2]],
            sides: vec![bip(&[1], &[0, 2])],
        };
        assert!(verify_partition(&g, &wrong_sides).has(Check::RecordedSides));

        let disconnected = PartitionCertificate {
            parts: vec![vec![0, 2], vec![1]],
            sides: vec![bip(&[0, 2], &[]), bip(&[1], &[])],
        };
        assert!(verify_partition(&g, &disconnected).has(Check::Connectivity));
    }

    #[test]
    fn json_shape() {
        let p = bipartite_connected_partition(&Graph::cycle(5)).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"parts":[[0,1,2,3],[4]],"sides":[[[0,2],[1,3]],[[4],[]]]}"#
        );
        let back: PartitionCertificate = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn disconnected_graphs_start_new_parts() {
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        let p = bipartite_connected_partition(&g).unwrap();
        assert_eq!(p.parts, vec![vec![0, 1], vec![2], vec![3, 4]]);
    }
}
