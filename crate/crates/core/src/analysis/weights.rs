//! Weight vectors and balancedness verdicts.
//!
//! Each basis element in a state's support gets an n-component vector of
//! rotation-generator eigenvalues (+1 for local indices 1 and 3, -1 for 0 and
//! 2, the eigenvalue of gamma1 gamma2 divided by i). Zero in the convex hull
//! of these vectors (balanced) is necessary for a homogeneous invariant to be
//! nonzero; zero in the affine hull (affinely balanced) is necessary for a
//! mixed invariant of unequal bidegree. Both are decided exactly over the
//! rationals.
//!
//! The semistability condition quantifies over every local frame; deciding it
//! for the given basis expansion is a semi-decision, and the randomized frame
//! sweep below can only strengthen a "not semistable" verdict, never prove
//! semistability.

use thiserror::Error;

use super::simplex::{affine_zero_solvable, convex_zero_feasible};
use crate::lorentz::{exp_element, LieAlgebraElement};
use crate::state::StateTensor;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("state has empty support at the given threshold")]
    EmptySupport,
    #[error("invariants must share one particle count, got {0} and {1}")]
    MixedParticleCounts(usize, usize),
    #[error("rank estimation needs at least {need} states for {names} invariants, got {got}")]
    TooFewStates {
        need: usize,
        names: usize,
        got: usize,
    },
}

/// Weight of one local basis index: the gamma1 gamma2 eigenvalue over i.
pub fn index_weight(j: usize) -> i64 {
    match j {
        1 | 3 => 1,
        _ => -1,
    }
}

/// The support of a state with its weight vectors and verdicts.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSystem {
    /// Basis multi-indices with |coefficient| above threshold, by flat index.
    pub support: Vec<Vec<usize>>,
    /// One weight vector in {-1,+1}^n per support element.
    pub weights: Vec<Vec<i64>>,
    pub balanced: bool,
    pub affinely_balanced: bool,
}

/// Build the weight system of a state. `support_epsilon` is relative to the
/// largest coefficient magnitude (default 1e-10); entries below it count as
/// exact zeros.
pub fn weight_vectors(
    s: &StateTensor<f64>,
    support_epsilon: f64,
) -> Result<WeightSystem, AnalysisError> {
    let n = s.particles();
    let max_c = s
        .coefficients()
        .iter()
        .map(|z| z.norm())
        .fold(0.0f64, f64::max);
    let threshold = support_epsilon.max(0.0) * max_c;
    let mut support = Vec::new();
    let mut weights = Vec::new();
    for (flat, z) in s.coefficients().iter().enumerate() {
        if z.norm() > threshold && z.norm() > 0.0 {
            let mut idx = vec![0usize; n];
            let mut f = flat;
            for p in (0..n).rev() {
                idx[p] = f & 3;
                f >>= 2;
            }
            weights.push(idx.iter().map(|&j| index_weight(j)).collect());
            support.push(idx);
        }
    }
    if support.is_empty() {
        return Err(AnalysisError::EmptySupport);
    }
    let balanced = convex_zero_feasible(&weights);
    let affinely_balanced = affine_zero_solvable(&weights);
    Ok(WeightSystem {
        support,
        weights,
        balanced,
        affinely_balanced,
    })
}

/// Whether zero lies in the convex hull of the weight vectors.
pub fn is_balanced(w: &WeightSystem) -> bool {
    convex_zero_feasible(&w.weights)
}

/// Whether zero lies in the affine hull of the weight vectors.
pub fn is_affinely_balanced(w: &WeightSystem) -> bool {
    affine_zero_solvable(&w.weights)
}

/// Summary of the randomized local-rotation sweep.
#[derive(Clone, Debug)]
pub struct FrameSweep {
    pub frames: usize,
    pub not_balanced_frames: usize,
    pub not_affinely_balanced_frames: usize,
}

/// Apply random local spatial rotations and re-evaluate the verdicts in each
/// rotated frame. A frame without balance witnesses non-semistability; no
/// number of balanced frames proves semistability.
pub fn frame_sweep(
    s: &StateTensor<f64>,
    frames: usize,
    seed: u64,
    support_epsilon: f64,
) -> Result<FrameSweep, AnalysisError> {
    let n = s.particles();
    let mut not_balanced = 0;
    let mut not_affane = 0;
    for f in 0..frames {
        let mut rotated = s.clone();
        for p in 0..n {
            let rot = random_rotation(seed.wrapping_add((f * n + p) as u64 + 1));
            rotated = rotated.apply_local(p, &rot).expect("particle in range");
        }
        let w = weight_vectors(&rotated, support_epsilon)?;
        if !w.balanced {
            not_balanced += 1;
        }
        if !w.affinely_balanced {
            not_affane += 1;
        }
    }
    Ok(FrameSweep {
        frames,
        not_balanced_frames: not_balanced,
        not_affinely_balanced_frames: not_affane,
    })
}

/// Spinor representation of a random spatial rotation (the three rotation
/// generators only, no boosts).
fn random_rotation(seed: u64) -> crate::mat4::Mat4<f64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut a = LieAlgebraElement::<f64>::zero();
    // slots 3, 4, 5 hold the (1,2), (1,3), (2,3) rotation coefficients
    for k in 3..6 {
        a.omega[k] = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
    }
    exp_element(&a)
}
