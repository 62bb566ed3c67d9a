//! When |c| = |omega| several vertices land on the same line. The square at
//! c = 1 collapses onto a single line: vertices 1, 3 on one side, 2, 4 on
//! the other. The linking rules between classes are checked, and the group
//! is computed after passing to one representative per line.
//!
//!     cargo run --example coincident_lines

use gerbe::analysis::analyze_sheaf;
use gerbe::graph::Graph;
use gerbe::report::render_linking;
use gerbe::Config;

fn main() -> gerbe::Result<()> {
    let cfg = Config::default();
    let cases = [
        ("square", Graph::cycle(4), 1.0),
        ("triangle", Graph::complete(3), -1.0),
        (
            "two disjoint edges",
            Graph::from_one_based(4, &[(1, 3), (2, 4)])?,
            -1.0,
        ),
        (
            "path on 4 vertices",
            Graph::from_one_based(4, &[(1, 2), (2, 3), (3, 4)])?,
            1.0,
        ),
    ];
    for (name, g, c) in cases {
        let a = analyze_sheaf(&g, 1.0, c, &cfg)?;
        println!("{name} at c = {c}: {} line(s)", a.line_count());
        println!(
            "  {}",
            a.partition.to_string().trim_end().replace('\n', "\n  ")
        );
        if let Some(l) = &a.linking {
            print!("{}", render_linking(l));
        }
        println!(
            "  restricted graph on {} vertex(es), |G| = {}\n",
            a.restricted_graph.n(),
            a.group.order()
        );
    }
    Ok(())
}
