use minorforge::sweep::{parse_config, run_sweep};
use minorforge::Limits;

fn main() -> minorforge::Result<()> {
    let config = parse_config(
        r#"{"seed": 3, "checks": [
            {"property": "schrijver", "max_n": 12},
            {"property": "odd_hadwiger", "max_order": 5, "random": 50},
            {"property": "dolnikov", "random": 100, "max_ground": 8, "max_edges": 12},
            {"property": "decomposition", "max_order": 5, "random": 200, "random_max_order": 12}
        ]}"#,
    )?;
    let report = run_sweep(&config, &Limits::default());
    print!("{}", report.table());
    println!("all passed: {}", report.passed);
    Ok(())
}
