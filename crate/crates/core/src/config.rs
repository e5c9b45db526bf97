//! Shared tolerance knobs. Defaults are the documented engineering choices;
//! they are echoed into verdicts and certificates so results are
//! reproducible from the artifact alone.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Singular values below this times σ_max count as zero.
    pub numeric_rank_rel: f64,
    /// Acceptance bound on ‖Nᵀs‖ for an integer relation candidate.
    pub residual_tol: f64,
    /// γ weighting of the kernel block in the embedded relation lattice.
    pub lattice_scale: f64,
    /// Lovász parameter for LLL.
    pub lll_delta: f64,
    /// Rank tolerance for real-linear independence of values/matrices.
    pub independence_tol: f64,
    /// Residual bound for membership of f_{2n+1} in span(f₁…f_{2n}).
    pub dependence_tol: f64,
    /// Residual bound ‖exp(B) − word‖_F for accepted log-pool candidates.
    pub candidate_residual_tol: f64,
    /// Frobenius distance below which pool candidates are duplicates.
    pub pool_dedup_tol: f64,
    /// Joint-eigenvalue clustering tolerance for spectral projectors.
    pub cluster_tol: f64,
    /// Pairwise commutator bound for generator families.
    pub comm_tol: f64,
    /// Relative roundtrip bound ‖exp(log A) − A‖_F / ‖A‖_F.
    pub log_roundtrip_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            numeric_rank_rel: 1e-9,
            residual_tol: 1e-9,
            lattice_scale: 1e12,
            lll_delta: 0.99,
            independence_tol: 1e-8,
            dependence_tol: 1e-8,
            candidate_residual_tol: 1e-8,
            pool_dedup_tol: 1e-10,
            cluster_tol: 1e-8,
            comm_tol: 1e-8,
            log_roundtrip_rel: 1e-10,
        }
    }
}
