/// Caps on the exponential parts of the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of cells in a configuration-space complex.
    pub max_cells: u128,
    /// Maximum number of simple cycles enumerated in a single graph.
    pub max_cycles: usize,
    /// Maximum column count of a boundary matrix handed to Smith normal form.
    pub max_snf_columns: usize,
    /// Maximum number of vertices in a universal-cover ball.
    pub max_ball_vertices: usize,
    /// Maximum number of smoothed vertices accepted by the subgraph oracles.
    pub max_oracle_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cells: 10_000_000,
            max_cycles: 1_000_000,
            max_snf_columns: 20_000,
            max_ball_vertices: 4_000_000,
            max_oracle_vertices: 15,
        }
    }
}

/// Environment variable overriding [`Limits::max_cells`].
pub const MAX_CELLS_ENV: &str = "BRAIDSCOPE_MAX_CELLS";

impl Limits {
    /// Default limits with `BRAIDSCOPE_MAX_CELLS` applied when set to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_CELLS_ENV) {
            if let Ok(v) = raw.trim().parse::<u128>() {
                if v > 0 {
                    limits.max_cells = v;
                }
            }
        }
        limits
    }
}
