//! Built-in reference graphs with their known characteristic polynomials,
//! ranks and sheaf-group data, and the comparison run behind `demo`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{analyze_sheaf, sheaf_group};
use crate::autgroup::enumerate_group_naive;
use crate::config::Config;
use crate::error::Result;
use crate::exactpoly::{char_poly, real_roots_with_multiplicity, IntPolynomial};
use crate::graph::{epsilon_matrix, graph_automorphisms, Graph};
use crate::quadspace::{build_s, rank};

/// What a fixture's sheaf group should be compared against.
#[derive(Debug, Clone, PartialEq)]
pub enum ExpectedOrder {
    Exact(usize),
    /// The brute-force enumeration over all signed permutations.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedGroup {
    /// The root of `χ` (by approximate value) at which the group is taken.
    pub at: f64,
    pub order: ExpectedOrder,
    pub two_transitive: Option<bool>,
    pub note: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    /// `χ` as `unit · ∏ factor^e`, factors given by coefficients (lowest first).
    pub chi_unit: i64,
    pub chi_factors: Vec<(Vec<i64>, u32)>,
    /// `(root, n - μ)` for every real root.
    pub ranks: Vec<(f64, usize)>,
    pub automorphisms: Option<usize>,
    pub group: ExpectedGroup,
}

impl Fixture {
    pub fn expected_chi(&self) -> IntPolynomial {
        self.chi_factors
            .iter()
            .fold(IntPolynomial::constant(self.chi_unit), |acc, (f, e)| {
                &acc * &IntPolynomial::from_i64(f).pow(*e)
            })
    }

    /// A copy with a deliberately wrong `χ`, for negative controls.
    pub fn corrupted(&self) -> Fixture {
        let mut f = self.clone();
        f.chi_unit = -f.chi_unit;
        f
    }
}

/// Triangle, square, pentagon and pointed hexagon.
pub fn reference_fixtures() -> Vec<Fixture> {
    let r5 = 5f64.sqrt() / 5.0;
    vec![
        Fixture {
            name: "triangle",
            graph: Graph::complete(3),
            chi_unit: -1,
            chi_factors: vec![(vec![-1, 2], 1), (vec![1, 1], 2)],
            ranks: vec![(-1.0, 1), (0.5, 2)],
            automorphisms: Some(6),
            group: ExpectedGroup {
                at: 0.5,
                order: ExpectedOrder::BruteForce,
                two_transitive: None,
                note: None,
            },
        },
        Fixture {
            name: "square",
            graph: Graph::cycle(4),
            chi_unit: -1,
            chi_factors: vec![(vec![1, 3], 1), (vec![-1, 1], 3)],
            ranks: vec![(-1.0 / 3.0, 3), (1.0, 1)],
            automorphisms: Some(8),
            group: ExpectedGroup {
                at: -1.0 / 3.0,
                order: ExpectedOrder::Exact(48),
                two_transitive: None,
                note: None,
            },
        },
        Fixture {
            name: "pentagon",
            graph: Graph::cycle(5),
            chi_unit: 1,
            chi_factors: vec![(vec![-1, 0, 5], 2)],
            ranks: vec![(-r5, 3), (r5, 3)],
            automorphisms: Some(10),
            group: ExpectedGroup {
                at: r5,
                order: ExpectedOrder::BruteForce,
                two_transitive: None,
                note: Some("D5 has order 10; compare the quotient"),
            },
        },
        Fixture {
            name: "pointed hexagon",
            graph: Graph::cycle(5).with_isolated(1),
            chi_unit: -1,
            chi_factors: vec![(vec![-1, 0, 5], 3)],
            ranks: vec![(-r5, 3), (r5, 3)],
            automorphisms: Some(10),
            group: ExpectedGroup {
                at: r5,
                order: ExpectedOrder::Exact(120),
                two_transitive: Some(true),
                note: None,
            },
        },
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub what: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureResult {
    pub name: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemoReport {
    pub fixtures: Vec<FixtureResult>,
    pub passed: usize,
    pub total: usize,
}

impl DemoReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

fn check(what: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Check {
    let (expected, computed) = (expected.to_string(), computed.to_string());
    Check {
        what: what.into(),
        ok: expected == computed,
        expected,
        computed,
    }
}

pub fn run_fixture(f: &Fixture, cfg: &Config) -> Result<FixtureResult> {
    let g = &f.graph;
    let e = epsilon_matrix(g);
    let chi = char_poly(&e);
    let mut checks = vec![check("chi", f.expected_chi(), &chi)];
    let mut notes = Vec::new();

    let roots = real_roots_with_multiplicity(&chi, cfg.root_width)?;
    checks.push(check("real roots", f.ranks.len(), roots.len()));
    for &(at, expected_rank) in &f.ranks {
        let root = roots.iter().find(|r| (r.approx() - at).abs() < 1e-9);
        let label = format!("rank at c = {:.6}", at);
        match root {
            Some(r) => {
                let rk = rank(&build_s(&e, 1.0, r.approx()), cfg.rank_tol);
                checks.push(check(label.clone(), expected_rank, rk));
                checks.push(check(
                    format!("n - mu at c = {:.6}", at),
                    expected_rank,
                    g.n() - r.multiplicity as usize,
                ));
            }
            None => checks.push(check(label, expected_rank, "no such root")),
        }
    }

    if let Some(h) = f.automorphisms {
        checks.push(check("|H|", h, graph_automorphisms(g, cfg.max_n)?.len()));
    }

    let c = roots
        .iter()
        .map(|r| r.approx())
        .find(|x| (x - f.group.at).abs() < 1e-9)
        .unwrap_or(f.group.at);
    let a = analyze_sheaf(g, 1.0, c, cfg)?;
    let order = a.group.order();
    match f.group.order {
        ExpectedOrder::Exact(n) => checks.push(check(format!("|G| at c = {:.6}", c), n, order)),
        ExpectedOrder::BruteForce => {
            let brute = enumerate_group_naive(&epsilon_matrix(&a.restricted_graph), cfg.max_n)?;
            checks.push(check(
                format!("|G| at c = {:.6} (brute force)", c),
                brute.order(),
                order,
            ));
            checks.push(check(
                "pruned = brute-force elements",
                true,
                brute == sheaf_group(&epsilon_matrix(&a.restricted_graph), cfg.max_n)?,
            ));
        }
    }
    if let Some(t) = f.group.two_transitive {
        checks.push(check("2-transitive", t, a.orbits.is_2_transitive));
    }
    if let Some(note) = f.group.note {
        notes.push(format!(
            "{}: |G| = {}, |G/{{+-id}}| = {}",
            note,
            order,
            a.group.order_mod_center()
        ));
    }

    Ok(FixtureResult {
        name: f.name.to_string(),
        passed: checks.iter().all(|c| c.ok),
        checks,
        notes,
    })
}

pub fn run_demo(fixtures: &[Fixture], cfg: &Config) -> Result<DemoReport> {
    let results: Vec<FixtureResult> = fixtures
        .iter()
        .map(|f| run_fixture(f, cfg))
        .collect::<Result<_>>()?;
    Ok(DemoReport {
        passed: results.iter().filter(|r| r.passed).count(),
        total: results.len(),
        fixtures: results,
    })
}

pub fn render_demo(r: &DemoReport) -> String {
    let mut s = String::new();
    for f in &r.fixtures {
        writeln!(
            s,
            "== {} [{}]",
            f.name,
            if f.passed { "pass" } else { "FAIL" }
        )
        .unwrap();
        writeln!(
            s,
            "  {:<38} {:<32} {:<32} ",
            "check", "expected", "computed"
        )
        .unwrap();
        for c in &f.checks {
            writeln!(
                s,
                "  {:<38} {:<32} {:<32} {}",
                c.what,
                c.expected,
                c.computed,
                if c.ok { "ok" } else { "MISMATCH" }
            )
            .unwrap();
        }
        for n in &f.notes {
            writeln!(s, "  note: {}", n).unwrap();
        }
    }
    writeln!(s, "{}/{} fixtures pass", r.passed, r.total).unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        let r = run_demo(&reference_fixtures(), &Config::default()).unwrap();
        assert!(r.all_passed(), "{}", render_demo(&r));
        assert_eq!(r.total, 4);
    }

    #[test]
    fn corrupted_fixture_fails() {
        let bad = reference_fixtures()[1].corrupted();
        let r = run_demo(&[bad], &Config::default()).unwrap();
        assert!(!r.all_passed());
    }
}
