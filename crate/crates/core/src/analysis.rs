//! End-to-end computation for one parameter point: representation, line
//! classes, restriction to distinct lines, sheaf group and its orbits.

use crate::autgroup::{
    enumerate_group, enumerate_group_naive, orbits_on_lines, OrbitReport, SheafGroup,
};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{epsilon_matrix, Graph, SignMatrix};
use crate::quadspace::Representation;
use crate::sheaf::{
    check_class_linking, line_classes, restrict_to_y, LinePartition, LinkingReport,
};

/// Sheaf group of `m`; below three vertices the sign vector is not forced by
/// `σ`, so the brute-force enumeration is used there.
pub fn sheaf_group(m: &SignMatrix, max_n: usize) -> Result<SheafGroup> {
    if m.n() < 3 {
        enumerate_group_naive(m, max_n)
    } else {
        enumerate_group(m, max_n)
    }
}

#[derive(Debug, Clone)]
pub struct SheafAnalysis {
    pub representation: Representation,
    pub partition: LinePartition,
    /// `Γ_Y`: the graph induced on one representative per line.
    pub restricted_graph: Graph,
    pub restricted: Representation,
    /// Group computed on `Γ_Y`.
    pub group: SheafGroup,
    pub orbits: OrbitReport,
    /// Present when `|ω| = |c|`.
    pub linking: Option<LinkingReport>,
}

impl SheafAnalysis {
    /// Number of distinct lines.
    pub fn line_count(&self) -> usize {
        self.partition.m()
    }
}

/// Runs the full pipeline at `(ω, c)`, `c ≠ 0`.
pub fn analyze_sheaf(g: &Graph, omega: f64, c: f64, cfg: &Config) -> Result<SheafAnalysis> {
    if g.n() > cfg.max_n {
        return Err(Error::BoundExceeded {
            n: g.n(),
            bound: cfg.max_n,
        });
    }
    let u = Representation::realize(g, omega, c, cfg.rank_tol);
    let p = line_classes(&u, cfg.colinear_tol)?;
    let (gy, v) = restrict_to_y(g, &u, &p, cfg.rank_tol, cfg.colinear_tol)?;
    let group = sheaf_group(&epsilon_matrix(&gy), cfg.max_n)?;
    let orbits = orbits_on_lines(&group, &LinePartition::singletons(gy.n()))?;
    let linking = (omega != 0.0
        && (omega.abs() - c.abs()).abs() <= cfg.colinear_tol * omega.abs().max(1.0))
    .then(|| check_class_linking(g, &p, if c / omega > 0.0 { 1 } else { -1 }));
    Ok(SheafAnalysis {
        representation: u,
        partition: p,
        restricted_graph: gy,
        restricted: v,
        group,
        orbits,
        linking,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_at_one_reduces_to_a_single_line() {
        let a = analyze_sheaf(&Graph::cycle(4), 1.0, 1.0, &Config::default()).unwrap();
        assert_eq!(a.line_count(), 1);
        assert_eq!(a.group.order(), 2);
        assert!(a.linking.as_ref().unwrap().passed());
        assert!(a.orbits.is_transitive);
    }

    #[test]
    fn cube_diagonals_group() {
        let a = analyze_sheaf(&Graph::cycle(4), 1.0, -1.0 / 3.0, &Config::default()).unwrap();
        assert_eq!(a.line_count(), 4);
        assert_eq!(a.group.order(), 48);
        assert!(a.linking.is_none());
    }

    #[test]
    fn rejects_large_graphs() {
        let cfg = Config {
            max_n: 4,
            ..Config::default()
        };
        assert!(matches!(
            analyze_sheaf(&Graph::cycle(5), 1.0, 0.3, &cfg),
            Err(Error::BoundExceeded { n: 5, bound: 4 })
        ));
    }
}
