//! The triangle at both roots of its characteristic polynomial: three unit
//! vectors at 120 degrees in the plane, and three copies of one line.
//!
//!     cargo run --example triangle_representations

use gerbe::exactpoly::{char_poly, real_roots_with_multiplicity};
use gerbe::graph::{epsilon_matrix, Graph};
use gerbe::quadspace::{build_s, Representation};

fn main() -> gerbe::Result<()> {
    let g = Graph::complete(3);
    let e = epsilon_matrix(&g);
    println!("epsilon:\n{e}");
    let chi = char_poly(&e);
    println!("chi(x) = {chi}\n");

    for root in real_roots_with_multiplicity(&chi, 1e-12)? {
        let c = root.approx();
        let u = Representation::realize(&g, 1.0, c, 1e-9);
        let (p, q) = u.space().signature();
        println!("c = {} (multiplicity {})", root.value, root.multiplicity);
        println!("  dimension {}, signature ({p}, {q})", u.dim());
        for (i, v) in u.vectors().iter().enumerate() {
            let coords: Vec<String> = v.iter().map(|x| format!("{x:+.6}")).collect();
            println!("  u{} = ({})", i + 1, coords.join(", "));
        }
        let residual = u.gram().max_abs_diff(&build_s(&e, 1.0, c));
        println!("  Gram residual {residual:.2e}\n");
    }
    Ok(())
}
