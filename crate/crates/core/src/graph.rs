//! Finite simple graphs, their sign matrices, and vertex permutations.
//!
//! Vertices are numbered `1..=n` in every textual form and `0..n` in memory.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite simple graph on `n ≥ 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// Builds a graph from 0-based edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Graph::edgeless(n);
        for (a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edges, as written in graph files.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Graph::edgeless(n);
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            g.insert_edge(a - 1, b - 1)?;
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for i in 0..n {
            for j in i + 1..n {
                g.set(i, j, true);
            }
        }
        g
    }

    /// The cycle `1 - 2 - … - n - 1`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j {
                g.set(i, j, true);
            }
        }
        g
    }

    /// The graph whose edges are given by the set bits of `mask`, taken over
    /// the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::edgeless(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.set(i, j, true);
                }
                bit += 1;
            }
        }
        g
    }

    /// Adds `extra` isolated vertices after the existing ones.
    pub fn with_isolated(&self, extra: usize) -> Self {
        let mut g = Graph::edgeless(self.n + extra);
        for (i, j) in self.edges() {
            g.set(i, j, true);
        }
        g
    }

    fn insert_edge(&mut self, a: usize, b: usize) -> Result<()> {
        for v in [a, b] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v + 1,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a + 1));
        }
        if self.has_edge(a, b) {
            return Err(Error::DuplicateEdge(a.min(b) + 1, a.max(b) + 1));
        }
        self.set(a, b, true);
        Ok(())
    }

    fn set(&mut self, a: usize, b: usize, linked: bool) {
        self.adj[a * self.n + b] = linked;
        self.adj[b * self.n + a] = linked;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.n + b]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.has_edge(v, w)).count()
    }

    /// Edges as 0-based pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// The subgraph induced on `vertices`, relabeled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::edgeless(vertices.len());
        for (a, &va) in vertices.iter().enumerate() {
            for (b, &vb) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(va, vb) {
                    g.set(a, b, true);
                }
            }
        }
        g
    }

    /// Renders the graph in the text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (i, j) in self.edges() {
            s.push_str(&format!("{} {}\n", i + 1, j + 1));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.n)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Parses the graph file format: `#` comment lines, then the vertex count,
/// then one `i j` edge per line with 1-based endpoints.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    let n = parse_index(header, first)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut g = Graph::edgeless(n);
    let mut seen = BTreeSet::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex indices, found {:?}", content),
            });
        }
        let a = parse_index(tokens[0], line)?;
        let b = parse_index(tokens[1], line)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
        }
        g.set(a - 1, b - 1, true);
    }
    Ok(g)
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("not a non-negative integer: {:?}", token),
    })
}

/// Symmetric ±1 matrix with unit diagonal; `-1` marks linked pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    /// Validates symmetry, `±1` entries and the unit diagonal.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &e) in row.iter().enumerate() {
                if e != 1 && e != -1 {
                    return Err(Error::InvalidSignMatrix(format!(
                        "entry ({}, {}) is {}",
                        i + 1,
                        j + 1,
                        e
                    )));
                }
                if i == j && e != 1 {
                    return Err(Error::InvalidSignMatrix(format!(
                        "diagonal entry {} is not +1",
                        i + 1
                    )));
                }
                if rows[j].get(i) != Some(&e) {
                    return Err(Error::InvalidSignMatrix(format!(
                        "not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
            entries.extend_from_slice(row);
        }
        Ok(SignMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[i8]>::to_vec)
            .collect()
    }

    /// Recovers the graph whose ε-matrix this is.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::edgeless(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) == -1 {
                    g.set(i, j, true);
                }
            }
        }
        g
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| format!("{:>2}", self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// The ε-matrix of `g`: `-1` on edges, `+1` elsewhere, including the diagonal.
pub fn epsilon_matrix(g: &Graph) -> SignMatrix {
    let n = g.n();
    let entries = (0..n * n).map(|k| if g.adj[k] { -1 } else { 1 }).collect();
    SignMatrix { n, entries }
}

/// A bijection of `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &v in &images {
            if v >= n || hit[v] {
                return Err(Error::InvalidPermutation(images));
            }
            hit[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(images.to_vec()));
        }
        Permutation::new(images.iter().map(|&v| v - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swaps `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations of different sizes"
        );
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// `P_σ M P_σ⁻¹`: the entry at `(σ(i), σ(j))` of the result is `m[i][j]`.
pub fn conjugate_matrix(s: &Permutation, m: &SignMatrix) -> Result<SignMatrix> {
    let n = m.n();
    if s.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: s.n(),
        });
    }
    let mut entries = vec![0i8; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[s.apply(i) * n + s.apply(j)] = m.get(i, j);
        }
    }
    Ok(SignMatrix { n, entries })
}

/// The automorphism group `H(Γ)`, sorted by image list.
///
/// Backtracks over partial vertex maps, pruning on degree and on adjacency to
/// the already mapped vertices.
pub fn graph_automorphisms(g: &Graph, max_n: usize) -> Result<Vec<Permutation>> {
    let n = g.n();
    if n > max_n {
        return Err(Error::BoundExceeded { n, bound: max_n });
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut found = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend_automorphism(g, &degrees, &mut images, &mut used, &mut found);
    Ok(found)
}

fn extend_automorphism(
    g: &Graph,
    degrees: &[usize],
    images: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut Vec<Permutation>,
) {
    let k = images.len();
    if k == g.n() {
        found.push(Permutation::from_images_unchecked(images.clone()));
        return;
    }
    for v in 0..g.n() {
        if used[v] || degrees[v] != degrees[k] {
            continue;
        }
        if (0..k).any(|j| g.has_edge(j, k) != g.has_edge(images[j], v)) {
            continue;
        }
        used[v] = true;
        images.push(v);
        extend_automorphism(g, degrees, images, used, found);
        images.pop();
        used[v] = false;
    }
}
