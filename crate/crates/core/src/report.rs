//! Serializable reports and their plain-text rendering. All vertex and root
//! indices in reports are 1-based.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{analyze_sheaf, SheafAnalysis};
use crate::autgroup::OrbitReport;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::exactpoly::{
    char_poly, real_roots_with_multiplicity, squarefree_decomposition, IntPolynomial, RootRecord,
    RootValue,
};
use crate::graph::{epsilon_matrix, graph_automorphisms, Graph};
use crate::quadspace::{build_s, rank};
use crate::sheaf::{LinePartition, LinkingReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> Self {
        GraphSummary {
            n: g.n(),
            edges: g.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub factor: String,
    pub coefficients: Vec<String>,
    pub multiplicity: u32,
}

/// `χ` with coefficients as decimal strings, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub text: String,
    pub coefficients: Vec<String>,
    pub unit: String,
    pub factored: String,
    pub factors: Vec<FactorReport>,
}

fn coefficient_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl PolyReport {
    pub fn new(chi: &IntPolynomial) -> Result<Self> {
        let sqf = squarefree_decomposition(chi)?;
        Ok(PolyReport {
            text: chi.to_string(),
            coefficients: coefficient_strings(chi),
            unit: sqf.unit.to_string(),
            factored: sqf.to_string(),
            factors: sqf
                .factors
                .iter()
                .map(|(f, e)| FactorReport {
                    factor: f.to_string(),
                    coefficients: coefficient_strings(f),
                    multiplicity: *e,
                })
                .collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSummary {
    pub index: usize,
    pub value: RootValue,
    pub multiplicity: u32,
    pub factor: String,
}

impl RootSummary {
    fn new(index: usize, r: &RootRecord) -> Self {
        RootSummary {
            index,
            value: r.value.clone(),
            multiplicity: r.multiplicity,
            factor: r.factor.to_string(),
        }
    }
}

/// Output of the `poly` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyOutput {
    pub char_poly: PolyReport,
    pub roots: Vec<RootSummary>,
}

pub fn poly_output(g: &Graph, cfg: &Config) -> Result<PolyOutput> {
    let chi = char_poly(&epsilon_matrix(g));
    let roots = real_roots_with_multiplicity(&chi, cfg.root_width)?;
    Ok(PolyOutput {
        char_poly: PolyReport::new(&chi)?,
        roots: roots
            .iter()
            .enumerate()
            .map(|(k, r)| RootSummary::new(k + 1, r))
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub class: usize,
    pub representative: usize,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

pub fn class_reports(p: &LinePartition) -> Vec<ClassReport> {
    let one_based = |v: Vec<usize>| v.into_iter().map(|i| i + 1).collect();
    (0..p.m())
        .map(|j| ClassReport {
            class: j + 1,
            representative: p.rep_index()[j] + 1,
            plus: one_based(p.block(j, 1)),
            minus: one_based(p.block(j, -1)),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    /// Number of distinct lines, i.e. vertices of `Γ_Y`.
    pub lines: usize,
    pub order: usize,
    pub sigma_count: usize,
    pub order_mod_center: usize,
    /// Line orbits, 1-based.
    pub orbits: Vec<Vec<usize>>,
    pub pair_orbits: usize,
    pub is_transitive: bool,
    pub is_2_transitive: bool,
}

impl GroupReport {
    pub fn new(a: &SheafAnalysis) -> Self {
        let OrbitReport {
            orbits,
            pair_orbits,
            is_transitive,
            is_2_transitive,
        } = &a.orbits;
        GroupReport {
            lines: a.line_count(),
            order: a.group.order(),
            sigma_count: a.group.sigma_count(),
            order_mod_center: a.group.order_mod_center(),
            orbits: orbits
                .iter()
                .map(|o| o.iter().map(|j| j + 1).collect())
                .collect(),
            pair_orbits: *pair_orbits,
            is_transitive: *is_transitive,
            is_2_transitive: *is_2_transitive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub index: usize,
    pub value: RootValue,
    pub multiplicity: u32,
    pub factor: String,
    pub rank: usize,
    /// `(p, q)` of the reduced representation's form.
    pub signature: [usize; 2],
    pub classes: Vec<ClassReport>,
    pub linking: Option<LinkingReport>,
    pub group: GroupReport,
}

/// Everything computed for one graph: `χ`, its roots, and at each root the
/// reduced representation's rank and signature, line classes and sheaf group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub epsilon: Vec<Vec<i8>>,
    pub automorphism_group_order: usize,
    pub char_poly: PolyReport,
    pub roots: Vec<RootReport>,
}

/// Builds the report, failing if any root violates `rank = n - μ`.
pub fn analyze(g: &Graph, cfg: &Config) -> Result<AnalysisReport> {
    if g.n() > cfg.max_n {
        return Err(Error::BoundExceeded {
            n: g.n(),
            bound: cfg.max_n,
        });
    }
    let e = epsilon_matrix(g);
    let chi = char_poly(&e);
    let records = real_roots_with_multiplicity(&chi, cfg.root_width)?;
    let mut roots = Vec::with_capacity(records.len());
    for (k, r) in records.iter().enumerate() {
        let c = r.approx();
        let rk = rank(&build_s(&e, 1.0, c), cfg.rank_tol);
        let expected = g.n() - r.multiplicity as usize;
        if rk != expected {
            return Err(Error::Verification(format!(
                "rank of S(1, {}) is {} but n - μ = {}",
                r.value, rk, expected
            )));
        }
        let a = analyze_sheaf(g, 1.0, c, cfg)?;
        roots.push(RootReport {
            index: k + 1,
            value: r.value.clone(),
            multiplicity: r.multiplicity,
            factor: r.factor.to_string(),
            rank: rk,
            signature: {
                let (p, q) = a.representation.space().signature();
                [p, q]
            },
            classes: class_reports(&a.partition),
            linking: a.linking.clone(),
            group: GroupReport::new(&a),
        });
    }
    Ok(AnalysisReport {
        graph: g.into(),
        epsilon: e.rows(),
        automorphism_group_order: graph_automorphisms(g, cfg.max_n)?.len(),
        char_poly: PolyReport::new(&chi)?,
        roots,
    })
}

fn edge_list(edges: &[[usize; 2]]) -> String {
    if edges.is_empty() {
        return "none".into();
    }
    edges
        .iter()
        .map(|[a, b]| format!("{}-{}", a, b))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_poly(out: &PolyOutput) -> String {
    let mut s = String::new();
    writeln!(s, "chi(x)   = {}", out.char_poly.text).unwrap();
    writeln!(s, "factored = {}", out.char_poly.factored).unwrap();
    if out.roots.is_empty() {
        writeln!(s, "no real roots").unwrap();
    }
    for r in &out.roots {
        writeln!(
            s,
            "root {}: {} (mult {}, factor {})",
            r.index, r.value, r.multiplicity, r.factor
        )
        .unwrap();
    }
    s
}

pub fn render_classes(classes: &[ClassReport]) -> String {
    let list = |v: &[usize]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut s = String::new();
    writeln!(s, "{:<6} {:<5} {:<20} X-", "class", "rep", "X+").unwrap();
    for c in classes {
        writeln!(
            s,
            "{:<6} {:<5} {:<20} {}",
            c.class,
            c.representative,
            format!("{{{}}}", list(&c.plus)),
            format!("{{{}}}", list(&c.minus))
        )
        .unwrap();
    }
    s
}

pub fn render_linking(r: &LinkingReport) -> String {
    let mark = |b: bool| if b { "pass" } else { "FAIL" };
    let mut s = String::new();
    writeln!(s, "class linking at c = {}:", r.c).unwrap();
    writeln!(
        s,
        "  all-or-nothing between blocks   {}",
        mark(r.all_or_nothing)
    )
    .unwrap();
    writeln!(
        s,
        "  cross-class sign rule           {}",
        mark(r.cross_class)
    )
    .unwrap();
    writeln!(
        s,
        "  within-class rule               {}",
        mark(r.within_class)
    )
    .unwrap();
    for f in &r.failures {
        writeln!(s, "  ! {}", f).unwrap();
    }
    s
}

pub fn render_group(g: &GroupReport) -> String {
    let orbits = g
        .orbits
        .iter()
        .map(|o| {
            format!(
                "{{{}}}",
                o.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect::<Vec<_>>()
        .join(" ");
    let mut s = String::new();
    writeln!(s, "lines            {}", g.lines).unwrap();
    writeln!(s, "|G|              {}", g.order).unwrap();
    writeln!(s, "N_sigma          {}", g.sigma_count).unwrap();
    writeln!(s, "|G/{{+-id}}|       {}", g.order_mod_center).unwrap();
    writeln!(s, "line orbits      {}", orbits).unwrap();
    writeln!(s, "pair orbits      {}", g.pair_orbits).unwrap();
    writeln!(s, "transitive       {}", g.is_transitive).unwrap();
    writeln!(s, "2-transitive     {}", g.is_2_transitive).unwrap();
    s
}

pub fn render_analysis(r: &AnalysisReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "graph: n = {}, edges: {}",
        r.graph.n,
        edge_list(&r.graph.edges)
    )
    .unwrap();
    writeln!(s, "|H(graph)| = {}", r.automorphism_group_order).unwrap();
    writeln!(s, "epsilon matrix:").unwrap();
    for row in &r.epsilon {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>2}", x)).collect();
        writeln!(s, "  [{}]", cells.join(" ")).unwrap();
    }
    writeln!(s, "chi(x)   = {}", r.char_poly.text).unwrap();
    writeln!(s, "factored = {}", r.char_poly.factored).unwrap();
    writeln!(s).unwrap();
    writeln!(
        s,
        "{:<4} {:<18} {:<5} {:<5} {:<10} {:<6} {:<6} {:<6} 2-trans",
        "#", "root", "mult", "rank", "signature", "lines", "|G|", "trans"
    )
    .unwrap();
    for root in &r.roots {
        writeln!(
            s,
            "{:<4} {:<18} {:<5} {:<5} {:<10} {:<6} {:<6} {:<6} {}",
            root.index,
            root.value.to_string(),
            root.multiplicity,
            root.rank,
            format!("({}, {})", root.signature[0], root.signature[1]),
            root.group.lines,
            root.group.order,
            root.group.is_transitive,
            root.group.is_2_transitive
        )
        .unwrap();
    }
    for root in &r.roots {
        if let Some(link) = &root.linking {
            writeln!(s).unwrap();
            writeln!(s, "line classes at root {} ({}):", root.index, root.value).unwrap();
            s.push_str(&render_classes(&root.classes));
            s.push_str(&render_linking(link));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_report() {
        let r = analyze(&Graph::complete(3), &Config::default()).unwrap();
        assert_eq!(r.char_poly.coefficients, vec!["1", "0", "-3", "-2"]);
        assert_eq!(r.char_poly.factored, "-(2*x - 1)*(x + 1)^2");
        let roots: Vec<(String, u32, usize)> = r
            .roots
            .iter()
            .map(|x| (x.value.to_string(), x.multiplicity, x.rank))
            .collect();
        assert_eq!(roots, vec![("-1".into(), 2, 1), ("1/2".into(), 1, 2)]);
        assert_eq!(r.automorphism_group_order, 6);
    }

    #[test]
    fn square_report_lists_group_of_order_48() {
        let r = analyze(&Graph::cycle(4), &Config::default()).unwrap();
        let at = r
            .roots
            .iter()
            .find(|x| x.value.to_string() == "-1/3")
            .unwrap();
        assert_eq!(at.group.order, 48);
        assert_eq!(at.signature, [3, 0]);
    }

    #[test]
    fn json_round_trip() {
        let r = analyze(&Graph::cycle(5).with_isolated(1), &Config::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rendering_is_stable() {
        let cfg = Config::default();
        let a = render_analysis(&analyze(&Graph::cycle(4), &cfg).unwrap());
        let b = render_analysis(&analyze(&Graph::cycle(4), &cfg).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("chi(x)   = -3*x^4 + 8*x^3 - 6*x^2 + 1\n"));
    }
}
