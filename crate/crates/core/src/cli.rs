//! Command-line front end. [`run`] does all the work and returns the text to
//! print plus an exit code, so the binary stays a thin wrapper and tests can
//! drive every subcommand in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 bound exceeded.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::analysis::analyze_sheaf;
use crate::autgroup::realize_isometry;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::exactpoly::{char_poly, rational_to_f64, real_roots_with_multiplicity};
use crate::fixtures::{reference_fixtures, render_demo, run_demo};
use crate::graph::{epsilon_matrix, graph_automorphisms, parse_graph, Graph};
use crate::numbers::parse_number;
use crate::quadspace::{Representation, RepresentationExport};
use crate::report::{
    analyze, class_reports, poly_output, render_analysis, render_classes, render_group,
    render_linking, render_poly, ClassReport, GroupReport,
};
use crate::sheaf::LinkingReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gerbe",
    version,
    about = "Graph representations in quadratic spaces and their line-sheaf groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: chi, roots, and per-root rank, signature, lines and group.
    Analyze(FileArgs),
    /// Characteristic polynomial, its square-free factorization and real roots.
    Poly(FileArgs),
    /// Vectors of the reduced representation at one parameter point.
    Represent(RepresentArgs),
    /// Sheaf group on the distinct lines at one parameter point.
    Group(GroupArgs),
    /// Line classes at one parameter point.
    Classes(PointArgs),
    /// Reproduce the built-in reference examples.
    Demo(DemoArgs),
}

#[derive(Debug, Args)]
pub struct FileArgs {
    /// Graph file; omitted or `-` reads stdin.
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[group(id = "point", required = true, multiple = false, args = ["c", "root_index"])]
pub struct PointSelect {
    /// Off-diagonal parameter as an exact rational, e.g. -1/3.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Use the k-th real root of chi (1-based, ascending); c = root * omega.
    #[arg(long)]
    pub root_index: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub file: FileArgs,
    #[command(flatten)]
    pub point: PointSelect,
    /// Diagonal parameter, default 1.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Accept decimal inputs for --c and --omega.
    #[arg(long)]
    pub approx: bool,
}

#[derive(Debug, Args)]
pub struct RepresentArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Also write the vectors as CSV to this path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Emit every element as an isometry matrix.
    #[arg(long)]
    pub realize: bool,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long)]
    pub json: bool,
    /// Flip the expected chi of the named fixture (negative control).
    #[arg(long, hide = true)]
    pub corrupt_fixture: Option<String>,
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::SelfLoop(_)
        | Error::VertexOutOfRange { .. }
        | Error::DuplicateEdge(..)
        | Error::EmptyGraph
        | Error::InvalidNumber(_)
        | Error::RootIndex { .. }
        | Error::TrivialRepresentation
        | Error::Io(_) => EXIT_INPUT,
        Error::BoundExceeded { .. } => EXIT_BOUND,
        _ => EXIT_VERIFY,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentOutput {
    pub c: f64,
    pub dim: usize,
    pub signature: [usize; 2],
    pub representation: RepresentationExport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassesOutput {
    pub c: f64,
    pub classes: Vec<ClassReport>,
    pub linking: Option<LinkingReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsometryReport {
    pub element: String,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupOutput {
    pub c: f64,
    pub automorphism_group_order: usize,
    pub group: GroupReport,
    pub isometries: Option<Vec<IsometryReport>>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli, &Config::from_env(), stdin),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INPUT,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run_cli(cli: &Cli, cfg: &Config, stdin: &mut dyn Read) -> Outcome {
    match execute(cli, cfg, stdin) {
        Ok(o) => o,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e),
            code: exit_code(&e),
        },
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn read_graph(args: &FileArgs, stdin: &mut dyn Read) -> Result<Graph> {
    let text = match &args.file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {}", p.display(), e)))?
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    parse_graph(&text)
}

/// Resolves `(ω, c)` from the flags.
fn resolve_point(g: &Graph, p: &PointArgs, cfg: &Config) -> Result<(f64, f64)> {
    let omega = match &p.omega {
        Some(s) => rational_to_f64(&parse_number(s, p.approx)?),
        None => 1.0,
    };
    let c = match (&p.point.c, p.point.root_index) {
        (Some(s), _) => rational_to_f64(&parse_number(s, p.approx)?),
        (None, Some(k)) => {
            let roots =
                real_roots_with_multiplicity(&char_poly(&epsilon_matrix(g)), cfg.root_width)?;
            let count = roots.len();
            let r = k
                .checked_sub(1)
                .and_then(|i| roots.get(i))
                .ok_or(Error::RootIndex { index: k, count })?;
            r.approx() * omega
        }
        (None, None) => unreachable!("clap enforces one of --c/--root-index"),
    };
    if c == 0.0 {
        return Err(Error::TrivialRepresentation);
    }
    Ok((omega, c))
}

fn execute(cli: &Cli, cfg: &Config, stdin: &mut dyn Read) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze(a) => {
            let g = read_graph(a, stdin)?;
            let r = analyze(&g, cfg)?;
            Ok(Outcome::ok(if a.json {
                json(&r)
            } else {
                render_analysis(&r)
            }))
        }
        Command::Poly(a) => {
            let g = read_graph(a, stdin)?;
            let out = poly_output(&g, cfg)?;
            Ok(Outcome::ok(if a.json {
                json(&out)
            } else {
                render_poly(&out)
            }))
        }
        Command::Represent(r) => {
            let g = read_graph(&r.point.file, stdin)?;
            let (omega, c) = resolve_point(&g, &r.point, cfg)?;
            let u = Representation::realize(&g, omega, c, cfg.rank_tol);
            if let Some(path) = &r.csv {
                std::fs::write(path, u.to_csv())
                    .map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
            }
            let (p, q) = u.space().signature();
            let out = RepresentOutput {
                c,
                dim: u.dim(),
                signature: [p, q],
                representation: u.export(),
            };
            if r.point.file.json {
                return Ok(Outcome::ok(json(&out)));
            }
            let mut s = String::new();
            writeln!(s, "omega = {}, c = {}", omega, c).unwrap();
            writeln!(s, "dimension {}, signature ({}, {})", out.dim, p, q).unwrap();
            let signs: Vec<String> = u
                .space()
                .signs()
                .iter()
                .map(|x| format!("{:+}", x))
                .collect();
            writeln!(s, "form signs: [{}]", signs.join(", ")).unwrap();
            s.push_str(&u.to_csv());
            Ok(Outcome::ok(s))
        }
        Command::Classes(p) => {
            let g = read_graph(&p.file, stdin)?;
            let (omega, c) = resolve_point(&g, p, cfg)?;
            let a = analyze_sheaf(&g, omega, c, cfg)?;
            let out = ClassesOutput {
                c,
                classes: class_reports(&a.partition),
                linking: a.linking.clone(),
            };
            if p.file.json {
                return Ok(Outcome::ok(json(&out)));
            }
            let mut s = format!("c = {}, {} line(s)\n", c, out.classes.len());
            s.push_str(&render_classes(&out.classes));
            if let Some(l) = &out.linking {
                s.push_str(&render_linking(l));
            }
            Ok(Outcome::ok(s))
        }
        Command::Group(gr) => {
            let g = read_graph(&gr.point.file, stdin)?;
            let (omega, c) = resolve_point(&g, &gr.point, cfg)?;
            let a = analyze_sheaf(&g, omega, c, cfg)?;
            let h = graph_automorphisms(&g, cfg.max_n)?.len();
            let isometries = if gr.realize {
                Some(
                    a.group
                        .elements()
                        .iter()
                        .map(|e| {
                            realize_isometry(e, &a.restricted, cfg.isometry_tol).map(|m| {
                                IsometryReport {
                                    element: e.to_string(),
                                    matrix: m.to_rows(),
                                }
                            })
                        })
                        .collect::<Result<Vec<_>>>()?,
                )
            } else {
                None
            };
            let out = GroupOutput {
                c,
                automorphism_group_order: h,
                group: GroupReport::new(&a),
                isometries,
            };
            if gr.point.file.json {
                return Ok(Outcome::ok(json(&out)));
            }
            let mut s = format!("c = {}\n|H(graph)|       {}\n", c, h);
            s.push_str(&render_group(&out.group));
            for iso in out.isometries.iter().flatten() {
                writeln!(s, "# {}", iso.element).unwrap();
                for row in &iso.matrix {
                    let cells: Vec<String> = row.iter().map(|x| format!("{:.17e}", x)).collect();
                    writeln!(s, "{}", cells.join(",")).unwrap();
                }
            }
            Ok(Outcome::ok(s))
        }
        Command::Demo(d) => {
            let mut fixtures = reference_fixtures();
            if let Some(name) = &d.corrupt_fixture {
                let f = fixtures
                    .iter_mut()
                    .find(|f| f.name == name)
                    .ok_or_else(|| Error::Parse {
                        line: 0,
                        message: format!("unknown fixture {:?}", name),
                    })?;
                *f = f.corrupted();
            }
            let r = run_demo(&fixtures, cfg)?;
            let stdout = if d.json { json(&r) } else { render_demo(&r) };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code: if r.all_passed() { EXIT_OK } else { EXIT_VERIFY },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str], input: &str) -> Outcome {
        let mut argv = vec!["gerbe"];
        argv.extend_from_slice(args);
        run(argv, &mut input.as_bytes())
    }

    const SQUARE: &str = "4\n1 2\n2 3\n3 4\n4 1\n";

    #[test]
    fn poly_on_stdin() {
        let o = go(&["poly"], SQUARE);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("root 1: -1/3"));
    }

    #[test]
    fn negative_rational_is_accepted() {
        let o = go(&["group", "--c", "-1/3"], SQUARE);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("|G|              48"));
    }

    #[test]
    fn decimal_needs_approx() {
        assert_eq!(go(&["classes", "--c", "0.5"], SQUARE).code, EXIT_INPUT);
        assert_eq!(go(&["classes", "--c", "0.5", "--approx"], SQUARE).code, 0);
    }

    #[test]
    fn root_index_bounds() {
        assert_eq!(
            go(&["represent", "--root-index", "3"], SQUARE).code,
            EXIT_INPUT
        );
        assert_eq!(
            go(&["represent", "--root-index", "0"], SQUARE).code,
            EXIT_INPUT
        );
        assert_eq!(go(&["represent", "--root-index", "1"], SQUARE).code, 0);
    }

    #[test]
    fn c_and_root_index_conflict() {
        assert_eq!(
            go(&["classes", "--c", "1", "--root-index", "1"], SQUARE).code,
            EXIT_INPUT
        );
        assert_eq!(go(&["classes"], SQUARE).code, EXIT_INPUT);
    }

    #[test]
    fn parse_error_exits_two() {
        assert_eq!(go(&["poly"], "3\n1 1\n").code, EXIT_INPUT);
        assert_eq!(go(&["poly", "/nonexistent/graph.txt"], "").code, EXIT_INPUT);
    }

    #[test]
    fn bound_exits_three() {
        let cfg = Config {
            max_n: 3,
            ..Config::default()
        };
        let cli = Cli::try_parse_from(["gerbe", "analyze"]).unwrap();
        assert_eq!(run_cli(&cli, &cfg, &mut SQUARE.as_bytes()).code, EXIT_BOUND);
    }

    #[test]
    fn corrupted_demo_exits_one() {
        let o = go(&["demo", "--corrupt-fixture", "pentagon"], "");
        assert_eq!(o.code, EXIT_VERIFY);
        assert!(o.stdout.contains("3/4 fixtures pass"));
    }
}
