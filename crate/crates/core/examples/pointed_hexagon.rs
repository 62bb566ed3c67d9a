//! Pentagon versus pentagon plus an isolated vertex at c = sqrt(5)/5: five
//! and six equiangular lines in 3-space. Adding the vertex enlarges the
//! group from order 20 to 120 and makes its action 2-transitive.
//!
//!     cargo run --example pointed_hexagon

use gerbe::analysis::analyze_sheaf;
use gerbe::graph::Graph;
use gerbe::Config;

fn main() -> gerbe::Result<()> {
    let cfg = Config::default();
    let c = 5f64.sqrt() / 5.0;
    for (name, g) in [
        ("pentagon", Graph::cycle(5)),
        ("pointed hexagon", Graph::cycle(5).with_isolated(1)),
    ] {
        let a = analyze_sheaf(&g, 1.0, c, &cfg)?;
        println!("{name}:");
        println!("  lines             {}", a.line_count());
        println!(
            "  signature         {:?}",
            a.representation.space().signature()
        );
        println!("  |G|               {}", a.group.order());
        println!("  |G/{{+-id}}|        {}", a.group.order_mod_center());
        println!("  transitive        {}", a.orbits.is_transitive);
        println!("  2-transitive      {}", a.orbits.is_2_transitive);
        println!("  pair orbits       {}", a.orbits.pair_orbits);
    }
    Ok(())
}
