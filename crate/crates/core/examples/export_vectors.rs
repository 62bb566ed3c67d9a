//! Writes a representation as CSV and JSON for external plotting.
//!
//!     cargo run --example export_vectors -- <graph-file> <c> [out-prefix]
//!
//! Without arguments the square at c = -1/3 is exported to ./square.*.

use gerbe::exactpoly::rational_to_f64 as to_f64;
use gerbe::graph::{parse_graph, Graph};
use gerbe::numbers::parse_rational;
use gerbe::quadspace::Representation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (g, c, prefix) = match args.as_slice() {
        [path, c, rest @ ..] => (
            parse_graph(&std::fs::read_to_string(path)?)?,
            parse_rational(c)?,
            rest.first()
                .cloned()
                .unwrap_or_else(|| "representation".into()),
        ),
        _ => (Graph::cycle(4), parse_rational("-1/3")?, "square".into()),
    };
    let u = Representation::realize(&g, 1.0, to_f64(&c), 1e-9);
    std::fs::write(format!("{prefix}.csv"), u.to_csv())?;
    std::fs::write(
        format!("{prefix}.json"),
        serde_json::to_string_pretty(&u.export())?,
    )?;
    println!(
        "wrote {prefix}.csv and {prefix}.json ({} vectors in dimension {})",
        g.n(),
        u.dim()
    );
    Ok(())
}
