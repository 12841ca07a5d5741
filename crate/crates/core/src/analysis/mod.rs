//! Weight-polytope balancedness analysis and numeric-rank testing of
//! invariant families.

mod rank;
mod simplex;
mod weights;

pub use rank::{numeric_rank, RankReport};
pub use simplex::{affine_zero_solvable, convex_zero_feasible};
pub use weights::{
    frame_sweep, index_weight, is_affinely_balanced, is_balanced, weight_vectors, AnalysisError,
    FrameSweep, WeightSystem,
};

/// Default relative support threshold.
pub const SUPPORT_EPSILON: f64 = 1e-10;
