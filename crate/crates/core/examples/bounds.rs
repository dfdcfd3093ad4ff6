use minorforge::bounds::{cd, chromatic_number, zig};
use minorforge::families::{kneser, kneser_graph};
use minorforge::{Graph, Hypergraph, Limits};

fn main() -> minorforge::Result<()> {
    let limits = Limits::default();
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("C7", Graph::cycle(7)),
        ("K4", Graph::complete(4)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("complement of P5", Graph::path(5).complement()),
    ];
    println!("{:<24} {:>4} {:>4}  zigzag", "graph", "chi", "zig");
    for (name, g) in &graphs {
        let (chi, _) = chromatic_number(g, &limits)?;
        let (z, coloring, w) = zig(g, &limits)?;
        let colors: Vec<u32> = w.sequence.iter().map(|&v| coloring.color(v)).collect();
        println!("{name:<24} {chi:>4} {z:>4}  {:?} colored {:?}", w.sequence, colors);
    }

    // 2-subsets of [5]: the defect matches the chromatic number of the Petersen graph
    let pairs = Hypergraph::new(5, (1..=5).flat_map(|a| (a + 1..=5).map(move |b| vec![a, b])))?;
    let (d, w) = cd(&pairs, &limits)?;
    let (chi, _) = chromatic_number(&kneser_graph(&pairs), &limits)?;
    println!("cd = {d} (remove {:?}, then {:?} / {:?}), chi(KG) = {chi}", w.u, w.coloring.x1, w.coloring.x2);

    let big = Limits { chi: 40, ..limits };
    let (chi, _) = chromatic_number(&kneser(7, 3)?, &big)?;
    println!("chi(K(7,3)) = {chi}");
    Ok(())
}
