/// Default upper bound on the vertex count for exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 10;

/// Environment variable overriding [`Config::max_n`].
pub const MAX_N_ENV: &str = "GERBE_MAX_N";

/// Numeric tolerances and resource bounds shared by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Largest graph accepted by automorphism and sheaf-group enumeration.
    pub max_n: usize,
    /// Relative eigenvalue threshold for numeric rank.
    pub rank_tol: f64,
    /// Allowed entry-wise deviation of a realized Gram matrix.
    pub gram_tol: f64,
    /// Width of the isolating interval reported for irrational roots.
    pub root_width: f64,
    /// Distance below which two normalized directions count as the same line.
    pub colinear_tol: f64,
    /// Residual allowed when checking a realized isometry.
    pub isometry_tol: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: DEFAULT_MAX_N,
            rank_tol: 1e-9,
            gram_tol: 1e-9,
            root_width: 1e-12,
            colinear_tol: 1e-8,
            isometry_tol: 1e-8,
        }
    }
}

impl Config {
    /// Defaults, with `max_n` taken from `GERBE_MAX_N` when it parses.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(n) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            cfg.max_n = n;
        }
        cfg
    }
}
