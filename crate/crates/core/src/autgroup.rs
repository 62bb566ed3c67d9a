//! The group `G` of signed permutations `(σ, ν)` preserving a sign matrix,
//! its realization as isometries of a representation, and its action on the
//! lines of the sheaf.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{epsilon_matrix, Permutation, SignMatrix};
use crate::linalg::Matrix;
use crate::quadspace::{isometry_between, Representation};
use crate::sheaf::LinePartition;

/// A pair `(σ, ν)` with `ν_i ν_j ε_{σ(i),σ(j)} = ε_ij` for all `i ≠ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    sigma: Permutation,
    nu: Vec<i8>,
}

impl SignedPermutation {
    /// Validates the sign condition against `m`.
    pub fn new(sigma: Permutation, nu: Vec<i8>, m: &SignMatrix) -> Result<Self> {
        let a = SignedPermutation::unchecked(sigma, nu)?;
        if a.n() != m.n() {
            return Err(Error::SizeMismatch {
                expected: m.n(),
                found: a.n(),
            });
        }
        match a.violation(m) {
            Some((i, j)) => Err(Error::InvalidElement(i + 1, j + 1)),
            None => Ok(a),
        }
    }

    /// Checks shapes only; the sign condition is not verified.
    pub fn unchecked(sigma: Permutation, nu: Vec<i8>) -> Result<Self> {
        if nu.len() != sigma.n() {
            return Err(Error::SizeMismatch {
                expected: sigma.n(),
                found: nu.len(),
            });
        }
        if nu.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidNumber(format!("sign vector {:?}", nu)));
        }
        Ok(SignedPermutation { sigma, nu })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            sigma: Permutation::identity(n),
            nu: vec![1; n],
        }
    }

    /// `(id, -1, …, -1)`.
    pub fn central(n: usize) -> Self {
        SignedPermutation {
            sigma: Permutation::identity(n),
            nu: vec![-1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.nu.len()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn nu(&self) -> &[i8] {
        &self.nu
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.nu.iter().all(|&s| s == 1)
    }

    /// First pair `(i, j)` breaking the sign condition, if any.
    pub fn violation(&self, m: &SignMatrix) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                self.nu[i] * self.nu[j] * m.get(self.sigma.apply(i), self.sigma.apply(j))
                    != m.get(i, j)
            })
    }

    pub fn satisfies(&self, m: &SignMatrix) -> bool {
        self.n() == m.n() && self.violation(m).is_none()
    }

    pub fn inverse(&self) -> SignedPermutation {
        let inv = self.sigma.inverse();
        let nu = (0..self.n()).map(|i| self.nu[inv.apply(i)]).collect();
        SignedPermutation { sigma: inv, nu }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nu: String = self
            .nu
            .iter()
            .map(|&s| if s > 0 { '+' } else { '-' })
            .collect();
        write!(f, "({}, {})", self.sigma, nu)
    }
}

/// `(σ, ν) * (σ', ν') = (σ∘σ', ν^{σ'}·ν')` with `ν^{σ'}_i = ν_{σ'(i)}`.
pub fn compose(a: &SignedPermutation, b: &SignedPermutation) -> Result<SignedPermutation> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    let nu = (0..a.n())
        .map(|i| a.nu[b.sigma.apply(i)] * b.nu[i])
        .collect();
    Ok(SignedPermutation {
        sigma: a.sigma.compose(&b.sigma),
        nu,
    })
}

/// The two sign vectors `±ν` making `(σ, ν)` satisfy the sign condition, or
/// none. `ν_1 = +1` forces `ν_j = ε_1j · ε_{σ(1)σ(j)}`.
pub fn extend_signs(s: &Permutation, m: &SignMatrix) -> Result<Vec<Vec<i8>>> {
    let n = m.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    if s.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: s.n(),
        });
    }
    let s0 = s.apply(0);
    let nu: Vec<i8> = (0..n)
        .map(|j| {
            if j == 0 {
                1
            } else {
                m.get(0, j) * m.get(s0, s.apply(j))
            }
        })
        .collect();
    let candidate = SignedPermutation {
        sigma: s.clone(),
        nu,
    };
    if candidate.violation(m).is_some() {
        return Ok(Vec::new());
    }
    let neg = candidate.nu.iter().map(|&x| -x).collect();
    Ok(vec![candidate.nu, neg])
}

/// Fully enumerated group of signed permutations preserving `ambient`,
/// sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafGroup {
    ambient: SignMatrix,
    elements: Vec<SignedPermutation>,
}

impl SheafGroup {
    pub fn ambient(&self) -> &SignMatrix {
        &self.ambient
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Number of distinct permutations `σ` occurring in the group.
    pub fn sigma_count(&self) -> usize {
        self.elements
            .iter()
            .map(|e| e.sigma.images())
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Order of the quotient by `{±id}`.
    pub fn order_mod_center(&self) -> usize {
        self.order() / 2
    }

    pub fn contains(&self, a: &SignedPermutation) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    pub fn position(&self, a: &SignedPermutation) -> Option<usize> {
        self.elements.binary_search(a).ok()
    }
}

fn check_bounds(n: usize, min: usize, max_n: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooFewVertices { n, min });
    }
    if n > max_n {
        return Err(Error::BoundExceeded { n, bound: max_n });
    }
    Ok(())
}

/// All `(σ, ν)` preserving `m`, by backtracking over partial maps `σ`.
///
/// With `ν_1 = +1` fixed, assigning `σ(k)` determines `ν_k`, and the sign
/// condition against every earlier index prunes the branch. Each complete `σ`
/// contributes `(σ, ν)` and `(σ, -ν)`. Top-level branches run in parallel.
pub fn enumerate_group(m: &SignMatrix, max_n: usize) -> Result<SheafGroup> {
    let n = m.n();
    check_bounds(n, 3, max_n)?;
    let mut elements: Vec<SignedPermutation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut search = Search {
                m,
                images: vec![first],
                nu: vec![1],
                used: vec![false; n],
                found: Vec::new(),
            };
            search.used[first] = true;
            search.extend();
            search.found
        })
        .collect();
    elements.sort();
    Ok(SheafGroup {
        ambient: m.clone(),
        elements,
    })
}

struct Search<'a> {
    m: &'a SignMatrix,
    images: Vec<usize>,
    nu: Vec<i8>,
    used: Vec<bool>,
    found: Vec<SignedPermutation>,
}

impl Search<'_> {
    fn extend(&mut self) {
        let n = self.m.n();
        let k = self.images.len();
        if k == n {
            let sigma = Permutation::from_images_unchecked(self.images.clone());
            let neg = self.nu.iter().map(|&x| -x).collect();
            self.found.push(SignedPermutation {
                sigma: sigma.clone(),
                nu: self.nu.clone(),
            });
            self.found.push(SignedPermutation { sigma, nu: neg });
            return;
        }
        let s0 = self.images[0];
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let nu_k = self.m.get(0, k) * self.m.get(s0, v);
            let consistent = (1..k)
                .all(|j| self.nu[j] * nu_k * self.m.get(self.images[j], v) == self.m.get(j, k));
            if !consistent {
                continue;
            }
            self.used[v] = true;
            self.images.push(v);
            self.nu.push(nu_k);
            self.extend();
            self.nu.pop();
            self.images.pop();
            self.used[v] = false;
        }
    }
}

/// Brute force over all of `S_n × {±1}^n`; the reference for
/// [`enumerate_group`]. Also covers `n < 3`, where `ν` is not determined up
/// to sign by `σ`.
pub fn enumerate_group_naive(m: &SignMatrix, max_n: usize) -> Result<SheafGroup> {
    let n = m.n();
    check_bounds(n, 1, max_n)?;
    let signs: Vec<Vec<i8>> = (0..1u32 << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect()
        })
        .collect();
    let mut elements: Vec<SignedPermutation> = Permutation::all(n)
        .into_par_iter()
        .flat_map_iter(|sigma| {
            signs
                .iter()
                .map(move |nu| SignedPermutation {
                    sigma: sigma.clone(),
                    nu: nu.clone(),
                })
                .filter(|a| a.violation(m).is_none())
                .collect::<Vec<_>>()
        })
        .collect();
    elements.sort();
    Ok(SheafGroup {
        ambient: m.clone(),
        elements,
    })
}

/// The isometry `f` of the representation space with `f(u_i) = ν_i u_{σ(i)}`.
pub fn realize_isometry(a: &SignedPermutation, u: &Representation, tol: f64) -> Result<Matrix> {
    let e = epsilon_matrix(u.graph());
    if a.n() != e.n() {
        return Err(Error::SizeMismatch {
            expected: e.n(),
            found: a.n(),
        });
    }
    if let Some((i, j)) = a.violation(&e) {
        return Err(Error::InvalidElement(i + 1, j + 1));
    }
    if u.is_trivial() {
        return Err(Error::TrivialRepresentation);
    }
    let images: Vec<Vec<f64>> = (0..a.n())
        .map(|i| {
            let s = f64::from(a.nu[i]);
            u.vectors()[a.sigma.apply(i)]
                .iter()
                .map(|x| s * x)
                .collect()
        })
        .collect();
    isometry_between(u.vectors(), &images, u.space(), u.space(), tol)
}

/// Orbits of the induced action on line classes.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OrbitReport {
    /// Orbits of line classes (0-based class indices), each ascending.
    pub orbits: Vec<Vec<usize>>,
    /// Number of orbits on ordered pairs of distinct lines.
    pub pair_orbits: usize,
    pub is_transitive: bool,
    pub is_2_transitive: bool,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// The permutation of line classes induced by `σ`, checked to be well
/// defined on every class member.
pub fn action_on_classes(a: &SignedPermutation, p: &LinePartition) -> Result<Vec<usize>> {
    let img: Vec<usize> = p
        .rep_index()
        .iter()
        .map(|&r| p.class_of(a.sigma.apply(r)))
        .collect();
    for i in 0..p.n() {
        if p.class_of(a.sigma.apply(i)) != img[p.class_of(i)] {
            return Err(Error::IllDefinedAction(format!(
                "{} sends vertex {} outside the image of its class",
                a,
                i + 1
            )));
        }
    }
    if img.iter().collect::<BTreeSet<_>>().len() != img.len() {
        return Err(Error::IllDefinedAction(format!(
            "{} does not permute the classes",
            a
        )));
    }
    Ok(img)
}

/// Orbit structure of `grp` on the lines of `p`, and on ordered pairs of
/// distinct lines. Fewer than two lines is never 2-transitive.
pub fn orbits_on_lines(grp: &SheafGroup, p: &LinePartition) -> Result<OrbitReport> {
    if grp.ambient.n() != p.n() {
        return Err(Error::SizeMismatch {
            expected: grp.ambient.n(),
            found: p.n(),
        });
    }
    let m = p.m();
    let actions: Vec<Vec<usize>> = grp
        .elements
        .iter()
        .map(|a| action_on_classes(a, p))
        .collect::<Result<_>>()?;

    let mut parent: Vec<usize> = (0..m).collect();
    let pair = |x: usize, y: usize| x * m + y;
    let mut pair_parent: Vec<usize> = (0..m * m).collect();
    for img in &actions {
        for x in 0..m {
            union(&mut parent, x, img[x]);
            for y in (0..m).filter(|&y| y != x) {
                union(&mut pair_parent, pair(x, y), pair(img[x], img[y]));
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut root_slot = vec![usize::MAX; m];
    for x in 0..m {
        let r = find(&mut parent, x);
        if root_slot[r] == usize::MAX {
            root_slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[root_slot[r]].push(x);
    }
    let pair_orbits = (0..m)
        .flat_map(|x| (0..m).filter(move |&y| y != x).map(move |y| (x, y)))
        .map(|(x, y)| find(&mut pair_parent, pair(x, y)))
        .collect::<BTreeSet<_>>()
        .len();
    Ok(OrbitReport {
        is_transitive: orbits.len() == 1,
        is_2_transitive: m >= 2 && pair_orbits == 1,
        orbits,
        pair_orbits,
    })
}
