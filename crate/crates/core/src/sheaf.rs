//! The sheaf of lines `⟨u_i⟩` of a representation: coincident-line classes,
//! restriction to one vertex per line, and the linking structure of the
//! classes when `|ω| = |c|`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{epsilon_matrix, Graph, SignMatrix};
use crate::quadspace::{rank, Representation};

/// Partition of the vertices by the line their vector spans.
///
/// Class `j` has representative `rep_index[j]`, its smallest member. Vertex
/// `i` lies in class `class_of[i]` with `u_i = sign[i] · u_{rep}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePartition {
    rep_index: Vec<usize>,
    class_of: Vec<usize>,
    sign: Vec<i8>,
}

impl LinePartition {
    /// Every vertex on its own line.
    pub fn singletons(n: usize) -> Self {
        LinePartition {
            rep_index: (0..n).collect(),
            class_of: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    /// Builds a partition from a class assignment and orientation signs.
    /// Classes are renumbered by smallest member and signs made relative to
    /// that member.
    pub fn from_assignment(class_of: &[usize], sign: &[i8]) -> Result<Self> {
        if class_of.len() != sign.len() {
            return Err(Error::SizeMismatch {
                expected: class_of.len(),
                found: sign.len(),
            });
        }
        let mut relabel = std::collections::HashMap::new();
        let mut rep_index = Vec::new();
        let mut out_class = Vec::with_capacity(class_of.len());
        let mut out_sign = Vec::with_capacity(class_of.len());
        for (i, &c) in class_of.iter().enumerate() {
            let j = *relabel.entry(c).or_insert_with(|| {
                rep_index.push(i);
                rep_index.len() - 1
            });
            out_class.push(j);
            out_sign.push(sign[i] * sign[rep_index[j]]);
        }
        Ok(LinePartition {
            rep_index,
            class_of: out_class,
            sign: out_sign,
        })
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    /// Number of distinct lines.
    pub fn m(&self) -> usize {
        self.rep_index.len()
    }

    pub fn rep_index(&self) -> &[usize] {
        &self.rep_index
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.sign[i]
    }

    pub fn is_all_singletons(&self) -> bool {
        self.m() == self.n()
    }

    /// Members of class `j`, ascending.
    pub fn class(&self, j: usize) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.class_of[i] == j).collect()
    }

    /// `X_j^+` for `s = 1`, `X_j^-` for `s = -1`.
    pub fn block(&self, j: usize, s: i8) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.class_of[i] == j && self.sign[i] == s)
            .collect()
    }
}

impl fmt::Display for LinePartition {
    /// One class per line, e.g. `X1: +{1, 3} -{2, 4}` (1-based).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: Vec<usize>| {
            v.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        for j in 0..self.m() {
            write!(f, "X{}: +{{{}}}", j + 1, list(self.block(j, 1)))?;
            let minus = self.block(j, -1);
            if !minus.is_empty() {
                write!(f, " -{{{}}}", list(minus))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn normalized_direction(v: &[f64]) -> Option<Vec<f64>> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return None;
    }
    let mut d: Vec<f64> = v.iter().map(|x| x / norm).collect();
    // first clearly nonzero coordinate is made positive
    if let Some(&lead) = d.iter().find(|x| x.abs() > 1e-6) {
        if lead < 0.0 {
            d.iter_mut().for_each(|x| *x = -*x);
        }
    }
    Some(d)
}

/// Groups vertices whose vectors are colinear.
///
/// Directions are normalized once, then compared to class representatives
/// only, so the relation is an equivalence by construction. When `|ω| = |c|`
/// the result is also checked against [`combinatorial_line_classes`].
pub fn line_classes(u: &Representation, tol: f64) -> Result<LinePartition> {
    if u.is_trivial() {
        return Err(Error::TrivialRepresentation);
    }
    let dirs: Vec<Vec<f64>> = u
        .vectors()
        .iter()
        .map(|v| normalized_direction(v))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Verification("representation has a zero vector".into()))?;

    let mut rep_index: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(dirs.len());
    let mut sign = Vec::with_capacity(dirs.len());
    for (i, d) in dirs.iter().enumerate() {
        let found = rep_index
            .iter()
            .position(|&r| dirs[r].iter().zip(d).all(|(a, b)| (a - b).abs() <= tol));
        match found {
            Some(j) => {
                let r = rep_index[j];
                let dot: f64 = u.vectors()[i]
                    .iter()
                    .zip(&u.vectors()[r])
                    .map(|(a, b)| a * b)
                    .sum();
                class_of.push(j);
                sign.push(if dot < 0.0 { -1 } else { 1 });
            }
            None => {
                rep_index.push(i);
                class_of.push(rep_index.len() - 1);
                sign.push(1);
            }
        }
    }
    let p = LinePartition {
        rep_index,
        class_of,
        sign,
    };

    let (omega, c) = (u.omega(), u.c());
    if omega != 0.0 && (omega.abs() - c.abs()).abs() <= tol * omega.abs().max(1.0) {
        let s = if c / omega > 0.0 { 1 } else { -1 };
        let exact = combinatorial_line_classes(&epsilon_matrix(u.graph()), s);
        if exact != p {
            return Err(Error::Verification(format!(
                "numeric line classes disagree with the sign pattern of S:\n{}vs\n{}",
                p, exact
            )));
        }
    }
    Ok(p)
}

/// Line classes of the representation with parameters `(1, s)`, `s = ±1`,
/// read off `S(1, s)` alone: `i ≃ k` iff rows `i` and `k` agree up to sign.
pub fn combinatorial_line_classes(m: &SignMatrix, s: i8) -> LinePartition {
    assert!(s == 1 || s == -1, "combinatorial classes need c = ±1");
    let n = m.n();
    let entry = |i: usize, j: usize| if i == j { 1 } else { s * m.get(i, j) };
    let mut rep_index: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    let mut sign = Vec::with_capacity(n);
    for i in 0..n {
        let found = rep_index.iter().enumerate().find_map(|(j, &r)| {
            let t = entry(i, r);
            (0..n)
                .all(|k| entry(i, k) == t * entry(r, k))
                .then_some((j, t))
        });
        match found {
            Some((j, t)) => {
                class_of.push(j);
                sign.push(t);
            }
            None => {
                rep_index.push(i);
                class_of.push(rep_index.len() - 1);
                sign.push(1);
            }
        }
    }
    LinePartition {
        rep_index,
        class_of,
        sign,
    }
}

/// Restricts `(g, u)` to the class representatives `Y`.
///
/// The restricted representation lives in the same space; it is checked to be
/// reduced and to span the same set of lines as `u`.
pub fn restrict_to_y(
    g: &Graph,
    u: &Representation,
    p: &LinePartition,
    rank_tol: f64,
    colinear_tol: f64,
) -> Result<(Graph, Representation)> {
    if u.graph() != g {
        return Err(Error::GraphMismatch);
    }
    if p.n() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: p.n(),
        });
    }
    if u.is_trivial() {
        return Err(Error::TrivialRepresentation);
    }
    let r = rank(u.gram(), rank_tol);
    if r != u.dim() {
        return Err(Error::NotReduced {
            rank: r,
            dim: u.dim(),
        });
    }
    let v = u.restricted(p.rep_index());
    let rv = rank(v.gram(), rank_tol);
    if rv != v.dim() {
        return Err(Error::NotReduced {
            rank: rv,
            dim: v.dim(),
        });
    }
    let scale = u.omega().abs().max(1.0).sqrt();
    for i in 0..g.n() {
        let rep = &u.vectors()[p.rep_index()[p.class_of(i)]];
        let s = f64::from(p.sign(i));
        let err = u.vectors()[i]
            .iter()
            .zip(rep)
            .map(|(a, b)| (a - s * b).abs())
            .fold(0.0, f64::max);
        if err > colinear_tol * scale {
            return Err(Error::Verification(format!(
                "vertex {} is not on the line of its class representative (error {:e})",
                i + 1,
                err
            )));
        }
    }
    Ok((v.graph().clone(), v))
}

/// Outcome of checking the all-or-nothing linking rules between the blocks
/// `X_j^±` of a `|c| = 1` representation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LinkingReport {
    pub c: i8,
    /// Between any two blocks, edges are either all present or all absent.
    pub all_or_nothing: bool,
    /// `X_i^+∼X_j^+ ⇔ X_i^+≁X_j^- ⇔ X_i^-≁X_j^+ ⇔ X_i^-∼X_j^-` for `i ≠ j`.
    pub cross_class: bool,
    /// Blocks of one class are internally unlinked and mutually linked for
    /// `c = 1`, the opposite for `c = -1`.
    pub within_class: bool,
    pub failures: Vec<String>,
}

impl LinkingReport {
    pub fn passed(&self) -> bool {
        self.all_or_nothing && self.cross_class && self.within_class
    }
}

/// `Some(true)` if every pair across `a × b` (distinct vertices) is an edge,
/// `Some(false)` if none is, `None` if mixed or if there is no pair at all.
fn linkage(g: &Graph, a: &[usize], b: &[usize]) -> (Option<bool>, bool) {
    let mut linked = 0;
    let mut pairs = 0;
    for &x in a {
        for &y in b {
            if x != y {
                pairs += 1;
                if g.has_edge(x, y) {
                    linked += 1;
                }
            }
        }
    }
    if pairs == 0 {
        (None, true)
    } else if linked == pairs {
        (Some(true), true)
    } else if linked == 0 {
        (Some(false), true)
    } else {
        (None, false)
    }
}

/// Checks the linking rules for the class partition of a representation with
/// parameters `(1, c)`, `c = ±1`.
pub fn check_class_linking(g: &Graph, p: &LinePartition, c: i8) -> LinkingReport {
    assert!(c == 1 || c == -1, "class linking is defined for c = ±1");
    let mut report = LinkingReport {
        c,
        all_or_nothing: true,
        cross_class: true,
        within_class: true,
        failures: Vec::new(),
    };
    let m = p.m();
    let blocks: Vec<[Vec<usize>; 2]> = (0..m).map(|j| [p.block(j, 1), p.block(j, -1)]).collect();
    let name = |j: usize, s: usize| format!("X{}{}", j + 1, if s == 0 { "+" } else { "-" });

    let link = |report: &mut LinkingReport, (i, si): (usize, usize), (j, sj): (usize, usize)| {
        let (l, uniform) = linkage(g, &blocks[i][si], &blocks[j][sj]);
        if !uniform {
            report.all_or_nothing = false;
            report.failures.push(format!(
                "edges between {} and {} are neither all present nor all absent",
                name(i, si),
                name(j, sj)
            ));
        }
        l
    };

    for i in 0..m {
        let pp = link(&mut report, (i, 0), (i, 0));
        let mm = link(&mut report, (i, 1), (i, 1));
        let pm = link(&mut report, (i, 0), (i, 1));
        let unlinked_inside = c == 1;
        for (rel, expected, what) in [
            (pp, !unlinked_inside, format!("{} with itself", name(i, 0))),
            (mm, !unlinked_inside, format!("{} with itself", name(i, 1))),
            (
                pm,
                unlinked_inside,
                format!("{} with {}", name(i, 0), name(i, 1)),
            ),
        ] {
            if rel.is_some_and(|l| l != expected) {
                report.within_class = false;
                report.failures.push(format!(
                    "{} should be {} for c = {}",
                    what,
                    if expected { "linked" } else { "unlinked" },
                    c
                ));
            }
        }
        for j in i + 1..m {
            let pp = link(&mut report, (i, 0), (j, 0));
            let pm = link(&mut report, (i, 0), (j, 1));
            let mp = link(&mut report, (i, 1), (j, 0));
            let mm = link(&mut report, (i, 1), (j, 1));
            // X_i^+ and X_j^+ are never empty, so `pp` anchors the chain
            if let Some(s) = pp {
                let consistent = (pm != Some(s)) && (mp != Some(s)) && mm.is_none_or(|x| x == s);
                if !consistent {
                    report.cross_class = false;
                    report.failures.push(format!(
                        "linking between classes {} and {} breaks the sign rule",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadspace::QuadraticSpace;

    const TOL: f64 = 1e-9;

    #[test]
    fn triangle_at_minus_one_is_one_line() {
        let g = Graph::complete(3);
        let u = Representation::realize(&g, 1.0, -1.0, TOL);
        let p = line_classes(&u, 1e-8).unwrap();
        assert_eq!(p.m(), 1);
        assert_eq!(p.block(0, 1), vec![0, 1, 2]);
        assert!(p.block(0, -1).is_empty());

        let (gy, v) = restrict_to_y(&g, &u, &p, TOL, 1e-8).unwrap();
        assert_eq!(gy.n(), 1);
        assert_eq!(v.dim(), 1);

        let report = check_class_linking(&g, &p, -1);
        assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn square_at_one_folds_onto_one_line() {
        // all four vectors are ±e on the real line; opposite corners coincide
        let g = Graph::cycle(4);
        let u = Representation::realize(&g, 1.0, 1.0, TOL);
        assert_eq!(u.dim(), 1);
        let p = line_classes(&u, 1e-8).unwrap();
        assert_eq!(p.m(), 1);
        assert_eq!(p.block(0, 1), vec![0, 2]);
        assert_eq!(p.block(0, -1), vec![1, 3]);
        assert_eq!(p.to_string(), "X1: +{1, 3} -{2, 4}\n");

        let report = check_class_linking(&g, &p, 1);
        assert!(report.passed(), "{:?}", report);

        let (gy, v) = restrict_to_y(&g, &u, &p, TOL, 1e-8).unwrap();
        assert_eq!(gy.n(), 1);
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn square_at_minus_third_has_distinct_lines() {
        let g = Graph::cycle(4);
        let u = Representation::realize(&g, 1.0, -1.0 / 3.0, TOL);
        let p = line_classes(&u, 1e-8).unwrap();
        assert!(p.is_all_singletons());
        let (gy, v) = restrict_to_y(&g, &u, &p, TOL, 1e-8).unwrap();
        assert_eq!(gy, g);
        assert_eq!(v.vectors(), u.vectors());
        assert!(check_class_linking(&g, &p, 1).passed());
    }

    #[test]
    fn one_class_with_both_signs() {
        // two disjoint edges at c = -1: vertex 2 sits on the line of 1 with
        // the opposite orientation
        let g = Graph::from_one_based(4, &[(1, 3), (2, 4)]).unwrap();
        let u = Representation::realize(&g, 1.0, -1.0, TOL);
        let p = line_classes(&u, 1e-8).unwrap();
        assert_eq!(p, combinatorial_line_classes(&epsilon_matrix(&g), -1));
        assert_eq!(p.m(), 1);
        assert_eq!(p.block(0, -1), vec![1, 3]);
        assert!(check_class_linking(&g, &p, -1).passed());
    }

    #[test]
    fn rejects_trivial_representation() {
        let u = Representation::realize(&Graph::cycle(4), 1.0, 0.0, TOL);
        assert_eq!(line_classes(&u, 1e-8), Err(Error::TrivialRepresentation));
    }

    #[test]
    fn restrict_rejects_unreduced() {
        let g = Graph::cycle(4);
        let u = Representation::realize(&g, 1.0, -1.0 / 3.0, TOL)
            .padded(&[1])
            .unwrap();
        let p = LinePartition::singletons(4);
        assert!(matches!(
            restrict_to_y(&g, &u, &p, TOL, 1e-8),
            Err(Error::NotReduced { rank: 3, dim: 4 })
        ));
    }

    #[test]
    fn linking_failures_are_reported() {
        let g = Graph::from_one_based(3, &[(1, 2)]).unwrap();
        // claim 1, 2, 3 all coincide with the same orientation
        let p = LinePartition::from_assignment(&[0, 0, 0], &[1, 1, 1]).unwrap();
        let report = check_class_linking(&g, &p, 1);
        assert!(!report.all_or_nothing);
        assert!(!report.passed());
        assert!(!report.failures.is_empty());

        let p = LinePartition::from_assignment(&[0, 0, 1], &[1, 1, 1]).unwrap();
        let report = check_class_linking(&g, &p, 1);
        assert!(report.all_or_nothing);
        assert!(!report.within_class);
    }

    #[test]
    fn cross_class_violation() {
        // classes {1, 2} (opposite) and {3}; 3 linked to both 1 and 2
        let g = Graph::from_one_based(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let p = LinePartition::from_assignment(&[0, 0, 1], &[1, -1, 1]).unwrap();
        let report = check_class_linking(&g, &p, 1);
        assert!(!report.cross_class);
    }

    #[test]
    fn singleton_partition_passes() {
        let g = Graph::cycle(5);
        assert!(check_class_linking(&g, &LinePartition::singletons(5), 1).passed());
        assert!(check_class_linking(&g, &LinePartition::singletons(5), -1).passed());
    }

    #[test]
    fn assignment_normalizes_signs() {
        let p = LinePartition::from_assignment(&[5, 2, 5], &[-1, 1, 1]).unwrap();
        assert_eq!(p.rep_index(), &[0, 1]);
        assert_eq!((p.sign(0), p.sign(2)), (1, -1));
    }

    #[test]
    fn edgeless_pair_has_two_lines() {
        let g = Graph::edgeless(2);
        let u = Representation::new(
            g,
            1.0,
            0.5,
            QuadraticSpace::euclidean(2),
            vec![vec![1.0, 0.0], vec![0.5, 0.75f64.sqrt()]],
            TOL,
        )
        .unwrap();
        assert!(line_classes(&u, 1e-8).unwrap().is_all_singletons());
    }
}
