//! Linear representations of finite simple graphs in quadratic spaces and
//! the isometry groups of the sheaves of lines they span.
//!
//! A representation sends vertex `i` to a vector `u_i` with `α(u_i, u_i) = ω`
//! and `α(u_i, u_j) = ε_ij · c`, where `ε_ij = -1` on edges and `+1`
//! elsewhere. Reduced representations with `ω = 1` exist in dimension
//! `n - μ(c)`, `μ(c)` being the multiplicity of `c` as a root of
//! `χ(x) = det S(1, x)`. The isometries permuting the lines `⟨u_i⟩` form a
//! group of signed permutations computed here by exhaustive search.
//!
//! ```
//! use gerbe::graph::{epsilon_matrix, Graph};
//! use gerbe::autgroup::enumerate_group;
//!
//! let square = Graph::cycle(4);
//! let group = enumerate_group(&epsilon_matrix(&square), 10).unwrap();
//! assert_eq!(group.order(), 48);
//! ```

pub mod analysis;
pub mod autgroup;
pub mod cli;
pub mod config;
pub mod error;
pub mod exactpoly;
pub mod fixtures;
pub mod graph;
pub mod linalg;
pub mod numbers;
pub mod quadspace;
pub mod report;
pub mod sheaf;

pub use config::Config;
pub use error::{Error, Result};
pub use graph::{Graph, Permutation, SignMatrix};
