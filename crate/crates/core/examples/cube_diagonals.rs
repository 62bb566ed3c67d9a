//! The square at c = -1/3 is realized by the four long diagonals of a cube.
//! Its sheaf group has order 48, and every element is an orthogonal map.
//!
//!     cargo run --example cube_diagonals

use gerbe::autgroup::{compose, enumerate_group, realize_isometry};
use gerbe::graph::{epsilon_matrix, Graph};
use gerbe::linalg::Matrix;
use gerbe::quadspace::Representation;

fn main() -> gerbe::Result<()> {
    let g = Graph::cycle(4);
    let u = Representation::realize(&g, 1.0, -1.0 / 3.0, 1e-9);
    println!("signature {:?}", u.space().signature());
    for v in u.vectors() {
        println!("  {:+.6?}", v);
    }

    let group = enumerate_group(&epsilon_matrix(&g), 10)?;
    println!(
        "|G| = {}, distinct permutations {}",
        group.order(),
        group.sigma_count()
    );

    let mut worst: f64 = 0.0;
    let mut mats = Vec::new();
    for a in group.elements() {
        let f = realize_isometry(a, &u, 1e-8)?;
        worst = worst.max((&f.transpose() * &f).max_abs_diff(&Matrix::identity(3)));
        mats.push(f);
    }
    println!("max |f^T f - I| = {worst:.2e}");

    // closure: the product of two realized elements realizes their composite
    let (a, b) = (&group.elements()[5], &group.elements()[17]);
    let ab = compose(a, b)?;
    let f_ab = realize_isometry(&ab, &u, 1e-8)?;
    let fa = realize_isometry(a, &u, 1e-8)?;
    let fb = realize_isometry(b, &u, 1e-8)?;
    let d1 = (&fa * &fb).max_abs_diff(&f_ab);
    let d2 = (&fb * &fa).max_abs_diff(&f_ab);
    println!("{a} * {b} = {ab}; matrix residual {:.2e}", d1.min(d2));
    Ok(())
}
