//! Exact characteristic polynomials, their square-free factorizations and
//! certified real roots for a few small graphs.
//!
//!     cargo run --example exact_polynomials

use gerbe::exactpoly::{char_poly, real_roots_with_multiplicity, squarefree_decomposition};
use gerbe::graph::{epsilon_matrix, Graph};

fn main() -> gerbe::Result<()> {
    let graphs = [
        ("triangle", Graph::complete(3)),
        ("three isolated vertices", Graph::edgeless(3)),
        ("square", Graph::cycle(4)),
        ("pentagon", Graph::cycle(5)),
        (
            "pentagon + isolated vertex",
            Graph::cycle(5).with_isolated(1),
        ),
        ("K4", Graph::complete(4)),
        ("hexagon", Graph::cycle(6)),
    ];
    for (name, g) in &graphs {
        let chi = char_poly(&epsilon_matrix(g));
        println!("{name}");
        println!("  chi(x)   = {chi}");
        println!("  factored = {}", squarefree_decomposition(&chi)?);
        for r in real_roots_with_multiplicity(&chi, 1e-12)? {
            println!(
                "  root {:<22} mult {}  reduced dimension {}",
                r.value.to_string(),
                r.multiplicity,
                g.n() - r.multiplicity as usize
            );
        }
    }
    Ok(())
}
