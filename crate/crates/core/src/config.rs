//! Size guards for the computations whose cost grows factorially or
//! exponentially in `n`.

use std::sync::OnceLock;

/// Environment variable that overrides every `n`-valued bound at once.
pub const MAX_N_ENV: &str = "PEAKALG_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `n` for which permutations of `n` letters are enumerated.
    pub oracle_n: usize,
    /// Largest `n` for which the `2^n`-dimensional modules `M_I` are built.
    pub operator_n: usize,
    /// Largest operator dimension `d` accepted by the commutant solver
    /// (the unknown count is `d^2`).
    pub commutant_dim: usize,
    /// Largest algebra dimension accepted by the trace-form radical.
    pub radical_dim: usize,
    /// Largest dimension accepted by the minimal polynomial solver.
    pub minpoly_dim: usize,
    /// Largest `n` for decomposition matrices.
    pub decomp_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            oracle_n: 8,
            operator_n: 10,
            commutant_dim: 64,
            radical_dim: 400,
            minpoly_dim: 256,
            decomp_n: 10,
        }
    }
}

impl Bounds {
    /// Defaults, with `PEAKALG_MAX_N` (when set to an integer) replacing the
    /// `n`-valued bounds.
    pub fn from_env() -> Self {
        let mut bounds = Bounds::default();
        if let Some(n) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            bounds.oracle_n = n;
            bounds.operator_n = n;
            bounds.decomp_n = n;
        }
        bounds
    }

    /// Process-wide bounds, read once from the environment.
    pub fn global() -> &'static Bounds {
        static GLOBAL: OnceLock<Bounds> = OnceLock::new();
        GLOBAL.get_or_init(Bounds::from_env)
    }
}
