use minorforge::decompose::{bipartite_connected_partition, partition_coloring, verify_partition};
use minorforge::enumerate::{random_graph, rng};
use minorforge::graph::is_proper;
use minorforge::Graph;

fn show(name: &str, g: &Graph) -> minorforge::Result<()> {
    let p = bipartite_connected_partition(g)?;
    let c = partition_coloring(g, &p)?;
    println!("{name}: {} parts", p.len());
    for (part, sides) in p.parts.iter().zip(&p.sides) {
        println!("  {part:?}  A = {:?}  B = {:?}", sides.side_a, sides.side_b);
    }
    println!("  coloring {:?}, proper: {}", c.as_slice(), is_proper(g, &c)?);
    assert!(verify_partition(g, &p).is_valid());
    Ok(())
}

fn main() -> minorforge::Result<()> {
    show("C5", &Graph::cycle(5))?;
    show("K4", &Graph::complete(4))?;
    show("random 10-vertex graph", &random_graph(&mut rng(42), 10))?;
    Ok(())
}
