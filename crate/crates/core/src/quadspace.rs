//! Realizing Gram matrices in diagonal quadratic spaces: construction,
//! reduction and summation of graph representations, and isometries between
//! systems with equal Gram matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{epsilon_matrix, Graph, SignMatrix};
use crate::linalg::{jacobi_eigen, Matrix};

/// Pivot threshold used when extracting a spanning subset from a Gram matrix.
pub const PIVOT_THRESHOLD: f64 = 1e-10;

/// `ℝ^r` with the diagonal form `α(x, y) = Σ signs[k]·x_k·y_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticSpace {
    signs: Vec<i8>,
}

impl QuadraticSpace {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidNumber(format!("form sign {}", bad)));
        }
        Ok(QuadraticSpace { signs })
    }

    pub fn euclidean(dim: usize) -> Self {
        QuadraticSpace {
            signs: vec![1; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `(p, q)`: number of positive and negative squares.
    pub fn signature(&self) -> (usize, usize) {
        let p = self.signs.iter().filter(|&&s| s > 0).count();
        (p, self.signs.len() - p)
    }

    pub fn form(&self, x: &[f64], y: &[f64]) -> f64 {
        self.signs
            .iter()
            .zip(x.iter().zip(y))
            .map(|(&s, (a, b))| f64::from(s) * a * b)
            .sum()
    }

    pub fn form_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.signs.iter().map(|&s| f64::from(s)).collect::<Vec<_>>())
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &QuadraticSpace) -> QuadraticSpace {
        QuadraticSpace {
            signs: [self.signs.as_slice(), other.signs.as_slice()].concat(),
        }
    }
}

/// Gram matrix of `vectors` under the form of `space`.
pub fn gram_matrix(space: &QuadraticSpace, vectors: &[Vec<f64>]) -> Matrix {
    let n = vectors.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = space.form(&vectors[i], &vectors[j]);
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    g
}

/// `S(ω, c)`: `ω` on the diagonal and `ε_ij · c` elsewhere.
pub fn build_s(m: &SignMatrix, omega: f64, c: f64) -> Matrix {
    Matrix::from_fn(m.n(), m.n(), |i, j| {
        if i == j {
            omega
        } else {
            f64::from(m.get(i, j)) * c
        }
    })
}

fn rank_threshold(eigenvalues: &[f64], tol: f64) -> f64 {
    let rho = eigenvalues.iter().map(|x| x.abs()).fold(0.0, f64::max);
    tol * rho.max(1.0)
}

/// Number of eigenvalues with `|λ| > tol · max(1, ρ(S))`.
pub fn rank(s: &Matrix, tol: f64) -> usize {
    let e = jacobi_eigen(s);
    let thr = rank_threshold(&e.values, tol);
    e.values.iter().filter(|x| x.abs() > thr).count()
}

/// Reduced realization of a symmetric matrix: `u_i` is row `i` of
/// `Q_r · |Λ_r|^{1/2}` over the retained eigenpairs, ordered by decreasing
/// eigenvalue, and the form carries their signs.
pub fn gram_factorize(s: &Matrix, tol: f64) -> (QuadraticSpace, Vec<Vec<f64>>) {
    let n = s.rows();
    let e = jacobi_eigen(s);
    let thr = rank_threshold(&e.values, tol);
    let mut kept: Vec<usize> = (0..n).filter(|&k| e.values[k].abs() > thr).collect();
    kept.sort_by(|&a, &b| e.values[b].total_cmp(&e.values[a]));
    let signs = kept
        .iter()
        .map(|&k| if e.values[k] > 0.0 { 1 } else { -1 })
        .collect();
    let scales: Vec<f64> = kept.iter().map(|&k| e.values[k].abs().sqrt()).collect();
    let vectors = (0..n)
        .map(|i| {
            kept.iter()
                .zip(&scales)
                .map(|(&k, s)| e.vectors[(i, k)] * s)
                .collect()
        })
        .collect();
    (QuadraticSpace { signs }, vectors)
}

/// Vectors `u_1..u_n` in a quadratic space with `α(u_i, u_i) = ω` and
/// `α(u_i, u_j) = ε_ij · c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    graph: Graph,
    omega: f64,
    c: f64,
    space: QuadraticSpace,
    vectors: Vec<Vec<f64>>,
    gram: Matrix,
}

impl Representation {
    /// Checks the defining relations within `tol · max(1, |ω|, |c|)`.
    pub fn new(
        graph: Graph,
        omega: f64,
        c: f64,
        space: QuadraticSpace,
        vectors: Vec<Vec<f64>>,
        tol: f64,
    ) -> Result<Self> {
        if vectors.len() != graph.n() {
            return Err(Error::SizeMismatch {
                expected: graph.n(),
                found: vectors.len(),
            });
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != space.dim()) {
            return Err(Error::SizeMismatch {
                expected: space.dim(),
                found: v.len(),
            });
        }
        let gram = gram_matrix(&space, &vectors);
        let target = build_s(&epsilon_matrix(&graph), omega, c);
        let residual = gram.max_abs_diff(&target);
        if residual > tol * omega.abs().max(c.abs()).max(1.0) {
            return Err(Error::GramMismatch { residual });
        }
        Ok(Representation {
            graph,
            omega,
            c,
            space,
            vectors,
            gram,
        })
    }

    /// The reduced representation with parameters `(ω, c)`, obtained by
    /// factorizing `S(ω, c)`.
    pub fn realize(graph: &Graph, omega: f64, c: f64, rank_tol: f64) -> Self {
        let s = build_s(&epsilon_matrix(graph), omega, c);
        let (space, vectors) = gram_factorize(&s, rank_tol);
        let gram = gram_matrix(&space, &vectors);
        Representation {
            graph: graph.clone(),
            omega,
            c,
            space,
            vectors,
            gram,
        }
    }

    /// The null representation: zero-dimensional, `ω = c = 0`.
    pub fn null(graph: &Graph) -> Self {
        let n = graph.n();
        Representation {
            graph: graph.clone(),
            omega: 0.0,
            c: 0.0,
            space: QuadraticSpace::euclidean(0),
            vectors: vec![Vec::new(); n],
            gram: Matrix::zeros(n, n),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// `S(u)`, computed from the vectors.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn is_trivial(&self) -> bool {
        self.c == 0.0
    }

    pub fn is_reduced(&self, rank_tol: f64) -> bool {
        rank(&self.gram, rank_tol) == self.dim()
    }

    /// Multiplies every vector by `√factor`, scaling both parameters.
    pub fn scaled(&self, factor: f64) -> Representation {
        assert!(factor > 0.0, "scale factor must be positive");
        let r = factor.sqrt();
        Representation {
            graph: self.graph.clone(),
            omega: self.omega * factor,
            c: self.c * factor,
            space: self.space.clone(),
            vectors: self
                .vectors
                .iter()
                .map(|v| v.iter().map(|x| x * r).collect())
                .collect(),
            gram: self.gram.scale(factor),
        }
    }

    /// Appends zero coordinates with the given form signs.
    pub fn padded(&self, extra_signs: &[i8]) -> Result<Representation> {
        let extra = QuadraticSpace::new(extra_signs.to_vec())?;
        Ok(Representation {
            graph: self.graph.clone(),
            omega: self.omega,
            c: self.c,
            space: self.space.direct_sum(&extra),
            vectors: self
                .vectors
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w.resize(v.len() + extra_signs.len(), 0.0);
                    w
                })
                .collect(),
            gram: self.gram.clone(),
        })
    }

    /// The representation of an induced subgraph, keeping the ambient space.
    pub(crate) fn restricted(&self, vertices: &[usize]) -> Representation {
        let vectors: Vec<Vec<f64>> = vertices.iter().map(|&i| self.vectors[i].clone()).collect();
        Representation {
            graph: self.graph.induced(vertices),
            omega: self.omega,
            c: self.c,
            gram: gram_matrix(&self.space, &vectors),
            space: self.space.clone(),
            vectors,
        }
    }

    /// One line per vector, comma-separated coordinates.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.vectors {
            let cells: Vec<String> = v.iter().map(|x| format!("{:.17e}", x)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn export(&self) -> RepresentationExport {
        RepresentationExport {
            omega: self.omega,
            c: self.c,
            signs: self.space.signs.clone(),
            vectors: self.vectors.clone(),
        }
    }
}

/// Serializable form of a representation, for external plotting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationExport {
    pub omega: f64,
    pub c: f64,
    pub signs: Vec<i8>,
    pub vectors: Vec<Vec<f64>>,
}

/// Coordinate-wise concatenation; the Gram matrices and parameters add.
pub fn sum_representations(u: &Representation, v: &Representation) -> Result<Representation> {
    if u.graph != v.graph {
        return Err(Error::GraphMismatch);
    }
    let vectors = u
        .vectors
        .iter()
        .zip(&v.vectors)
        .map(|(a, b)| [a.as_slice(), b.as_slice()].concat())
        .collect();
    Ok(Representation {
        graph: u.graph.clone(),
        omega: u.omega + v.omega,
        c: u.c + v.c,
        space: u.space.direct_sum(&v.space),
        vectors,
        gram: u.gram.add(&v.gram),
    })
}

/// Drops the null part: refactorizes `S(u)` in a space of dimension
/// `rank S(u)`.
pub fn reduce_representation(u: &Representation, rank_tol: f64) -> Representation {
    let (space, vectors) = gram_factorize(&u.gram, rank_tol);
    let gram = gram_matrix(&space, &vectors);
    Representation {
        graph: u.graph.clone(),
        omega: u.omega,
        c: u.c,
        space,
        vectors,
        gram,
    }
}

/// Indices of a maximal independent subset of rows of `g`, chosen by
/// elimination with complete pivoting.
fn spanning_rows(g: &Matrix, threshold: f64) -> Vec<usize> {
    let n = g.rows();
    let m = g.cols();
    let mut a = g.clone();
    let thr = threshold * g.max_abs().max(1.0);
    let mut row_used = vec![false; n];
    let mut col_used = vec![false; m];
    let mut chosen = Vec::new();
    loop {
        let mut best: Option<(usize, usize, f64)> = None;
        for i in (0..n).filter(|&i| !row_used[i]) {
            for j in (0..m).filter(|&j| !col_used[j]) {
                let v = a[(i, j)].abs();
                if best.is_none_or(|(_, _, b)| v > b) {
                    best = Some((i, j, v));
                }
            }
        }
        let Some((p, q, v)) = best else { break };
        if v <= thr {
            break;
        }
        row_used[p] = true;
        col_used[q] = true;
        chosen.push(p);
        for i in (0..n).filter(|&i| !row_used[i]) {
            let f = a[(i, q)] / a[(p, q)];
            if f != 0.0 {
                for j in 0..m {
                    a[(i, j)] -= f * a[(p, j)];
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// The linear map `f : (E, α) → (F, β)` with `f(u_i) = v_i`, as a
/// `dim F × dim E` matrix.
///
/// Both systems must span their spaces and have equal Gram matrices. `f` is
/// fixed on a spanning subset of the `u_i` and then checked on every vector
/// and against the two forms.
pub fn isometry_between(
    u: &[Vec<f64>],
    v: &[Vec<f64>],
    space_u: &QuadraticSpace,
    space_v: &QuadraticSpace,
    tol: f64,
) -> Result<Matrix> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    let gu = gram_matrix(space_u, u);
    let gv = gram_matrix(space_v, v);
    let residual = gu.max_abs_diff(&gv);
    let scale = gu.max_abs().max(1.0);
    if residual > tol * scale {
        return Err(Error::GramMismatch { residual });
    }
    let basis = spanning_rows(&gu, PIVOT_THRESHOLD);
    for space in [space_u, space_v] {
        if basis.len() != space.dim() {
            return Err(Error::DeficientSpan {
                rank: basis.len(),
                dim: space.dim(),
            });
        }
    }
    let r = basis.len();
    let ub = Matrix::from_fn(r, r, |i, k| u[basis[k]][i]);
    let vb = Matrix::from_fn(r, r, |i, k| v[basis[k]][i]);
    let ub_inv = ub.inverse(1e-14).ok_or(Error::DeficientSpan {
        rank: basis.len(),
        dim: r,
    })?;
    let f = &vb * &ub_inv;

    for (ui, vi) in u.iter().zip(v) {
        let fu = f.apply(ui);
        let err = fu
            .iter()
            .zip(vi)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if err > tol * scale {
            return Err(Error::Verification(format!(
                "isometry misses a vector by {:e}",
                err
            )));
        }
    }
    let pulled = &(&f.transpose() * &space_v.form_matrix()) * &f;
    let err = pulled.max_abs_diff(&space_u.form_matrix());
    if err > tol * scale {
        return Err(Error::Verification(format!(
            "map does not preserve the form (error {:e})",
            err
        )));
    }
    Ok(f)
}
