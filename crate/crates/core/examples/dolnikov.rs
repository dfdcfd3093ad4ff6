//! A clique minor of order cd(H) inside the Kneser graph of H.
use minorforge::bounds::{cd, chromatic_number};
use minorforge::certificates::verify_minor_model;
use minorforge::constructions::extract_minor_from_kneser_rep;
use minorforge::families::kneser_graph;
use minorforge::{Hypergraph, Limits};

fn main() -> minorforge::Result<()> {
    let limits = Limits::default();
    let h = Hypergraph::new(
        6,
        [vec![1], vec![2, 3], vec![3, 4], vec![2, 4], vec![4, 5], vec![5, 6], vec![1, 6], vec![2, 5, 6]],
    )?;
    let kg = kneser_graph(&h);
    let (d, w) = cd(&h, &limits)?;
    println!("cd = {d}, deletion set {:?}", w.u);

    let (t, m) = extract_minor_from_kneser_rep(&h, &limits)?;
    println!("K_{t} minor in KG(H) ({})", verify_minor_model(&kg, &m));
    for (i, set) in m.branch_sets.iter().enumerate() {
        let edges: Vec<&Vec<u32>> = set.iter().map(|&v| &h.edges()[v]).collect();
        println!("  branch set {i}: {edges:?}");
    }
    let (chi, _) = chromatic_number(&kg, &limits)?;
    println!("chi(KG(H)) = {chi} >= {t}");
    Ok(())
}
