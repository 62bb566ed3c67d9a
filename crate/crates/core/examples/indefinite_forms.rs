//! Away from the roots of chi the representation still exists, but the
//! quadratic form may be indefinite. Sweep c for the square and print the
//! signature, and show a non-Euclidean isometry being recovered.
//!
//!     cargo run --example indefinite_forms

use gerbe::graph::{epsilon_matrix, Graph};
use gerbe::quadspace::{build_s, gram_factorize, isometry_between, rank, Representation};

fn main() -> gerbe::Result<()> {
    let g = Graph::cycle(4);
    let e = epsilon_matrix(&g);
    println!("{:>8} {:>5} {:>10}", "c", "rank", "signature");
    for k in -8..=8 {
        let c = k as f64 / 4.0;
        let s = build_s(&e, 1.0, c);
        let (space, _) = gram_factorize(&s, 1e-9);
        let (p, q) = space.signature();
        println!(
            "{:>8.3} {:>5} {:>10}",
            c,
            rank(&s, 1e-9),
            format!("({p}, {q})")
        );
    }

    // the triangle at c = 2 lives in signature (2, 1); a boost in that space
    // maps the realization to another one with the same Gram matrix
    let u = Representation::realize(&Graph::complete(3), 1.0, 2.0, 1e-9);
    let signs = u.space().signs().to_vec();
    let t = signs
        .iter()
        .position(|&s| s < 0)
        .expect("one negative direction");
    let x = (t + 1) % 3;
    let (ch, sh) = (0.7f64.cosh(), 0.7f64.sinh());
    let boosted: Vec<Vec<f64>> = u
        .vectors()
        .iter()
        .map(|v| {
            let mut w = v.clone();
            w[x] = ch * v[x] + sh * v[t];
            w[t] = sh * v[x] + ch * v[t];
            w
        })
        .collect();
    let f = isometry_between(u.vectors(), &boosted, u.space(), u.space(), 1e-8)?;
    println!("\nrecovered boost (signs {:?}):\n{f}", signs);
    Ok(())
}
