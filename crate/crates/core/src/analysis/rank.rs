//! Numeric rank of invariant families by singular values of the
//! values-on-random-states matrix.

use nalgebra::DMatrix;

use super::weights::AnalysisError;
use crate::catalog::{catalog, CatalogError};
use crate::state::StateTensor;

/// Rank estimate with the singular values around the cut.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub names: Vec<String>,
    pub states: usize,
    pub rank: usize,
    /// Smallest singular value counted into the rank.
    pub smallest_retained: f64,
    /// Largest singular value below the threshold (0 when none).
    pub largest_discarded: f64,
    pub singular_values: Vec<f64>,
}

/// Rank of the names x states value matrix, threshold `tol_rel` times the
/// largest singular value.
pub fn numeric_rank(
    names: &[&str],
    n_states: usize,
    seed: u64,
    tol_rel: f64,
) -> Result<RankReport, CatalogError> {
    let cat = catalog();
    let mut particles = None;
    for name in names {
        let e = cat.get(name)?;
        match particles {
            None => particles = Some(e.particles),
            Some(p) if p == e.particles => {}
            Some(p) => {
                return Err(CatalogError::ParticleMismatch {
                    name: name.to_string(),
                    expected: p,
                    got: e.particles,
                })
            }
        }
    }
    let particles = particles.expect("at least one name");
    let need = 2 * names.len();
    assert!(
        n_states >= need,
        "{}",
        AnalysisError::TooFewStates {
            need,
            names: names.len(),
            got: n_states
        }
    );

    let mut data = Vec::with_capacity(names.len() * n_states);
    for k in 0..n_states {
        let s = StateTensor::random(particles, seed.wrapping_add(k as u64))
            .expect("particle count in range");
        for name in names {
            data.push(cat.eval(name, &s)?);
        }
    }
    let m = DMatrix::from_row_slice(n_states, names.len(), &data);
    let svd = m.svd(false, false);
    let mut sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let smax = sv.first().cloned().unwrap_or(0.0);
    let threshold = tol_rel * smax;
    let rank = sv.iter().filter(|x| **x > threshold).count();
    let smallest_retained = if rank > 0 { sv[rank - 1] } else { 0.0 };
    let largest_discarded = if rank < sv.len() { sv[rank] } else { 0.0 };
    Ok(RankReport {
        names: names.iter().map(|s| s.to_string()).collect(),
        states: n_states,
        rank,
        smallest_retained,
        largest_discarded,
        singular_values: sv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicated_name_leaves_rank_unchanged() {
        let base = ["N1", "N2", "N3", "N4"];
        let dup = ["N1", "N2", "N3", "N4", "N1"];
        let a = numeric_rank(&base, 12, 3, 1e-8).unwrap();
        let b = numeric_rank(&dup, 12, 3, 1e-8).unwrap();
        assert_eq!(a.rank, 4);
        assert_eq!(b.rank, 4);
        assert!(b.largest_discarded < 1e-8 * b.smallest_retained.max(1.0));
    }

    #[test]
    fn mixed_particle_counts_rejected() {
        assert!(numeric_rank(&["I1", "V1"], 8, 0, 1e-8).is_err());
    }
}
