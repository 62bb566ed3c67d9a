//! Each graph automorphism extends to exactly two elements of the sheaf
//! group (signs nu and -nu), so H embeds in G modulo {+-id}.
//!
//!     cargo run --example graph_symmetries

use gerbe::autgroup::{enumerate_group, extend_signs, SignedPermutation};
use gerbe::graph::{epsilon_matrix, graph_automorphisms, Graph};

fn main() -> gerbe::Result<()> {
    for (name, g) in [
        ("square", Graph::cycle(4)),
        ("pentagon", Graph::cycle(5)),
        (
            "K4 minus an edge",
            Graph::from_one_based(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])?,
        ),
    ] {
        let e = epsilon_matrix(&g);
        let h = graph_automorphisms(&g, 10)?;
        let group = enumerate_group(&e, 10)?;
        println!("{name}: |H| = {}, |G| = {}", h.len(), group.order());
        for sigma in &h {
            let signs = extend_signs(sigma, &e)?;
            assert_eq!(signs.len(), 2);
            for nu in signs {
                let a = SignedPermutation::new(sigma.clone(), nu, &e)?;
                assert!(group.contains(&a));
            }
        }
        println!("  every automorphism lifts to two group elements");
    }
    Ok(())
}
