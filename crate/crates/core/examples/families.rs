use minorforge::families::{crown, join, kneser, kneser_graph, kneser_representation, schrijver};
use minorforge::Graph;

fn main() -> minorforge::Result<()> {
    let petersen = kneser(5, 2)?;
    println!("K(5,2): {} vertices, {} edges", petersen.order(), petersen.edge_count());

    for (n, k) in [(5, 2), (7, 3), (9, 4)] {
        let g = schrijver(n, k)?;
        println!("S({n},{k}): {} vertices, {} edges", g.order(), g.edge_count());
    }
    let s = schrijver(5, 2)?;
    for v in 0..s.order() {
        let nbrs: Vec<_> = s.neighbors(v).collect();
        println!("  {:?} -> {:?}", s.label(v).unwrap(), nbrs);
    }

    let c = crown(4);
    println!("crown(4): {} vertices, {} edges", c.order(), c.edge_count());
    let j = join(&Graph::cycle(5), &Graph::complete(2));
    println!("C5 + K2: {} vertices, {} edges", j.order(), j.edge_count());

    // any graph is the Kneser graph of some hypergraph
    let h = kneser_representation(&j);
    println!("representation of C5 + K2: ground {}, {} hyperedges", h.ground(), h.edges().len());
    assert_eq!(kneser_graph(&h).edges(), j.edges());
    Ok(())
}
