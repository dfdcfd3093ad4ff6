//! Odd clique expansion read off the longest zigzag of the coloring induced
//! by a bipartite-connected partition.
use minorforge::bounds::zig;
use minorforge::certificates::verify_odd_expansion;
use minorforge::constructions::odd_hadwiger_witness;
use minorforge::families::join;
use minorforge::{Graph, Limits};

fn main() -> minorforge::Result<()> {
    let graphs = [
        ("K6", Graph::complete(6)),
        ("C5", Graph::cycle(5)),
        ("C5 + C5", join(&Graph::cycle(5), &Graph::cycle(5))),
        ("path", Graph::path(6)),
    ];
    for (name, g) in &graphs {
        let (l, x) = odd_hadwiger_witness(g)?;
        let report = verify_odd_expansion(g, &x);
        print!("{name}: zigzag length {l}, odd K_{} expansion ({report})", x.order());
        if g.order() <= 8 {
            let (z, _, _) = zig(g, &Limits::default())?;
            print!(", zig = {z}");
        }
        println!();
        for (i, t) in x.trees.iter().enumerate() {
            let colors: Vec<u8> = t.vs.iter().map(|v| x.colors[v]).collect();
            println!("  tree {i}: {:?} colors {:?}", t.vs, colors);
        }
        for c in &x.connectors {
            println!("  trees {}-{} via {}-{}", c.i, c.j, c.u, c.v);
        }
    }
    Ok(())
}
