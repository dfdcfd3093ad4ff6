//! Exhaustive Hadwiger and odd Hadwiger numbers next to what the
//! constructions certify. The last column uses the canonical Kneser
//! representation (vertices plus non-edges as ground set), whose defect is
//! often far below the Hadwiger number.
use minorforge::certificates::{clique_minor_number, odd_clique_minor_number};
use minorforge::constructions::{extract_minor_from_kneser_rep, odd_hadwiger_witness};
use minorforge::families::{crown, kneser_representation};
use minorforge::{Graph, Limits};

fn main() -> minorforge::Result<()> {
    let limits = Limits { cd: 40, ..Limits::default() };
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("crown(4)", crown(4)),
        ("K5", Graph::complete(5)),
        ("C7 complement", Graph::cycle(7).complement()),
    ];
    println!("{:<16} {:>6} {:>6} {:>8} {:>8}", "graph", "had", "odd", "zigzag", "rep cd");
    for (name, g) in &graphs {
        let had = clique_minor_number(g, &limits)?;
        let odd = odd_clique_minor_number(g, &limits)?;
        let from_zigzag = odd_hadwiger_witness(g)?.1.order();
        let from_rep = extract_minor_from_kneser_rep(&kneser_representation(g), &limits)?.0;
        println!("{name:<16} {had:>6} {odd:>6} {from_zigzag:>8} {from_rep:>8}");
    }
    Ok(())
}
