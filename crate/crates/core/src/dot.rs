//! Graphviz DOT export, optionally overlaying a certificate.
//!
//! Pieces of a certificate (trees, branch sets, parts) get a fill color each.
//! For odd expansions the node outline shows the tree coloring (red for 1,
//! blue for 2), and connector or link edges are drawn bold.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::certificates::{MinorModel, OddExpansion};
use crate::decompose::PartitionCertificate;
use crate::graph::{edge, Edge, Graph, Vertex};

const PALETTE: [&str; 12] = [
    "lightblue",
    "palegreen",
    "khaki",
    "lightpink",
    "plum",
    "lightsalmon",
    "paleturquoise",
    "wheat",
    "thistle",
    "lightgray",
    "darkseagreen",
    "peachpuff",
];

#[derive(Clone, Copy, Debug)]
pub enum Overlay<'a> {
    None,
    Expansion(&'a OddExpansion),
    Minor(&'a MinorModel),
    Partition(&'a PartitionCertificate),
}

fn label_text(g: &Graph, v: Vertex) -> String {
    match g.label(v) {
        Some(set) => {
            let inner: Vec<String> = set.iter().map(u32::to_string).collect();
            format!("{{{}}}", inner.join(","))
        }
        None => v.to_string(),
    }
}

pub fn to_dot(g: &Graph, overlay: Overlay<'_>) -> String {
    let n = g.order();
    let mut piece: Vec<Option<usize>> = vec![None; n];
    let mut outline: Vec<Option<&str>> = vec![None; n];
    let mut structural: BTreeSet<Edge> = BTreeSet::new();
    let mut bold: BTreeSet<Edge> = BTreeSet::new();

    let mut assign = |sets: &mut dyn Iterator<Item = &Vec<Vertex>>| {
        for (i, set) in sets.enumerate() {
            for &v in set {
                if v < n {
                    piece[v] = Some(i);
                }
            }
        }
    };
    match overlay {
        Overlay::None => {}
        Overlay::Expansion(x) => {
            assign(&mut x.trees.iter().map(|t| &t.vs));
            for t in &x.trees {
                structural.extend(t.es.iter().map(|&(a, b)| edge(a, b)));
            }
            for (&v, &c) in &x.colors {
                if v < n {
                    outline[v] = Some(if c == 1 { "red" } else { "blue" });
                }
            }
            bold.extend(x.connectors.iter().map(|c| edge(c.u, c.v)));
        }
        Overlay::Minor(m) => {
            assign(&mut m.branch_sets.iter());
            bold.extend(m.links.iter().map(|c| edge(c.u, c.v)));
        }
        Overlay::Partition(p) => assign(&mut p.parts.iter()),
    }

    let mut out = String::from("graph G {\n  node [style=filled, fillcolor=white];\n");
    for v in 0..n {
        let mut attrs = vec![format!("label=\"{}\"", label_text(g, v))];
        if let Some(i) = piece[v] {
            attrs.push(format!("fillcolor={}", PALETTE[i % PALETTE.len()]));
        }
        if let Some(c) = outline[v] {
            attrs.push(format!("color={c}, penwidth=2"));
        }
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
    for &(u, v) in g.edges() {
        let e = (u, v);
        let style = if bold.contains(&e) {
            " [style=bold, penwidth=3]"
        } else if structural.contains(&e) || matches!(overlay, Overlay::None) {
            ""
        } else {
            " [color=gray]"
        };
        let _ = writeln!(out, "  {u} -- {v}{style};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::schrijver_expansion;
    use crate::families::schrijver;

    #[test]
    fn plain_graph_with_labels() {
        let g = schrijver(5, 2).unwrap();
        let dot = to_dot(&g, Overlay::None);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("label=\"{1,3}\""));
        assert_eq!(dot.matches(" -- ").count(), 5);
    }

    #[test]
    fn expansion_overlay_marks_connectors() {
        let g = schrijver(7, 2).unwrap();
        let x = schrijver_expansion(7, 2).unwrap();
        let dot = to_dot(&g, Overlay::Expansion(&x));
        assert_eq!(dot.matches("style=bold").count(), x.connectors.len());
        assert!(dot.contains("color=red"));
        assert!(dot.contains("color=blue"));
    }
}
