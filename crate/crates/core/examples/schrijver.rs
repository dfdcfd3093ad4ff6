//! Odd clique expansion of order n-2k+2 in the Schrijver graph S(n,k).
//! Usage: cargo run --example schrijver -- [n] [k]   (default 14 4)
use minorforge::certificates::verify_odd_expansion;
use minorforge::constructions::schrijver_expansion;
use minorforge::families::schrijver;

fn main() -> minorforge::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = match args[..] {
        [n, k, ..] => (n, k),
        _ => (14, 4),
    };
    let g = schrijver(n, k)?;
    let x = schrijver_expansion(n, k)?;
    println!(
        "S({n},{k}): {} vertices; odd K_{} expansion ({})",
        g.order(),
        x.order(),
        verify_odd_expansion(&g, &x)
    );
    for (i, t) in x.trees.iter().enumerate() {
        let sets: Vec<String> = t
            .vs
            .iter()
            .map(|&v| {
                let s: Vec<String> = g.label(v).unwrap().iter().map(u32::to_string).collect();
                format!("{}{{{}}}", if x.colors[&v] == 1 { "+" } else { "-" }, s.join(","))
            })
            .collect();
        println!("  tree {i}: {}", sets.join(" "));
    }
    Ok(())
}
