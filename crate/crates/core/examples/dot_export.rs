//! Writes S(7,2) with its odd K_5 expansion as Graphviz DOT.
//! cargo run --example dot_export | dot -Tsvg > s72.svg
use minorforge::constructions::schrijver_expansion;
use minorforge::dot::{to_dot, Overlay};
use minorforge::families::schrijver;

fn main() -> minorforge::Result<()> {
    let g = schrijver(7, 2)?;
    let x = schrijver_expansion(7, 2)?;
    print!("{}", to_dot(&g, Overlay::Expansion(&x)));
    Ok(())
}
