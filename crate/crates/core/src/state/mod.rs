//! Multiparticle state tensors: 4^n complex coefficients with the basis
//! indices of the n particles as tensor indices.
//!
//! Flat storage is row-major over particle order A, B, C, ... with the LAST
//! particle index varying fastest. This convention is normative for the JSON
//! state files and for mapping written-out psi_jkl subscripts.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gamma::{projector, ProjectorKind};
use crate::mat4::Mat4;
use crate::scalar::{czero, Real, C};
use crate::spinor::Spinor;

#[derive(Debug, Error, PartialEq)]
pub enum StateError {
    #[error("a state needs at least one particle")]
    EmptyState,
    #[error("basis index {0} out of range 0..=3")]
    BasisIndexOutOfRange(usize),
    #[error("particle index {index} out of range for {particles} particles")]
    ParticleOutOfRange { index: usize, particles: usize },
    #[error("sampler supports 1..=4 particles, got {0}")]
    ParticleCountOutOfRange(usize),
    #[error("coefficient list has length {got}, expected 4^{particles} = {expected}")]
    LengthMismatch {
        got: usize,
        expected: usize,
        particles: usize,
    },
    #[error("state file is not valid JSON: {0}")]
    Malformed(String),
}

/// An n-particle spinor state tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct StateTensor<R: Real> {
    particles: usize,
    coeffs: Vec<C<R>>,
}

impl<R: Real> StateTensor<R> {
    /// Zero tensor for n particles.
    pub fn zeros(particles: usize) -> Result<Self, StateError> {
        if particles == 0 {
            return Err(StateError::EmptyState);
        }
        Ok(StateTensor {
            particles,
            coeffs: vec![czero(); 1usize << (2 * particles)],
        })
    }

    pub fn from_coefficients(particles: usize, coeffs: Vec<C<R>>) -> Result<Self, StateError> {
        if particles == 0 {
            return Err(StateError::EmptyState);
        }
        let expected = 1usize << (2 * particles);
        if coeffs.len() != expected {
            return Err(StateError::LengthMismatch {
                got: coeffs.len(),
                expected,
                particles,
            });
        }
        Ok(StateTensor { particles, coeffs })
    }

    /// Basis product state with a single unit coefficient.
    pub fn basis_state(indices: &[usize]) -> Result<Self, StateError> {
        if indices.is_empty() {
            return Err(StateError::EmptyState);
        }
        for &j in indices {
            if j > 3 {
                return Err(StateError::BasisIndexOutOfRange(j));
            }
        }
        let mut s = Self::zeros(indices.len())?;
        let flat = s.flat_index(indices);
        s.coeffs[flat] = C::new(R::one(), R::zero());
        Ok(s)
    }

    /// Outer product of single-particle spinors.
    pub fn product_state(spinors: &[Spinor<R>]) -> Result<Self, StateError> {
        if spinors.is_empty() {
            return Err(StateError::EmptyState);
        }
        let n = spinors.len();
        let mut s = Self::zeros(n)?;
        let mut idx = vec![0usize; n];
        for flat in 0..s.coeffs.len() {
            s.unflatten(flat, &mut idx);
            let mut v = C::new(R::one(), R::zero());
            for (p, &j) in idx.iter().enumerate() {
                v *= spinors[p][j];
            }
            s.coeffs[flat] = v;
        }
        Ok(s)
    }

    /// Normalized state with standard complex Gaussian coefficients,
    /// deterministic per seed. Capped at 4 particles to keep brute-force
    /// oracles instant.
    pub fn random(particles: usize, seed: u64) -> Result<Self, StateError> {
        if particles == 0 || particles > 4 {
            return Err(StateError::ParticleCountOutOfRange(particles));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = Self::zeros(particles)?;
        for v in s.coeffs.iter_mut() {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            *v = C::new(R::real(re), R::real(im));
        }
        let norm = s.norm();
        Ok(s.scaled(C::new(R::one() / norm, R::zero())))
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn coefficients(&self) -> &[C<R>] {
        &self.coeffs
    }

    pub fn flat_index(&self, indices: &[usize]) -> usize {
        debug_assert_eq!(indices.len(), self.particles);
        indices.iter().fold(0usize, |acc, &j| acc * 4 + j)
    }

    fn unflatten(&self, mut flat: usize, out: &mut [usize]) {
        for p in (0..self.particles).rev() {
            out[p] = flat & 3;
            flat >>= 2;
        }
    }

    pub fn get(&self, indices: &[usize]) -> C<R> {
        self.coeffs[self.flat_index(indices)]
    }

    pub fn set(&mut self, indices: &[usize], v: C<R>) {
        let flat = self.flat_index(indices);
        self.coeffs[flat] = v;
    }

    pub fn norm_sqr(&self) -> R {
        self.coeffs
            .iter()
            .map(|z| z.norm_sqr())
            .fold(R::zero(), |x, y| x + y)
    }

    pub fn norm(&self) -> R {
        self.norm_sqr().sqrt()
    }

    pub fn scaled(&self, s: C<R>) -> Self {
        StateTensor {
            particles: self.particles,
            coeffs: self.coeffs.iter().map(|z| *z * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.particles, other.particles);
        StateTensor {
            particles: self.particles,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn max_diff(&self, other: &Self) -> R {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (*a - *b).norm())
            .fold(R::zero(), |x, y| x.max(y))
    }

    /// <self|other> with conjugation on self.
    pub fn inner(&self, other: &Self) -> C<R> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.conj() * *b)
            .fold(czero(), |x, y| x + y)
    }

    /// Contract a matrix against one particle index:
    /// psi'_{..j..} = sum_m M_{jm} psi_{..m..}.
    pub fn apply_local(&self, particle: usize, m: &Mat4<R>) -> Result<Self, StateError> {
        if particle >= self.particles {
            return Err(StateError::ParticleOutOfRange {
                index: particle,
                particles: self.particles,
            });
        }
        let stride = 1usize << (2 * (self.particles - 1 - particle));
        let mut out = self.clone();
        let block = stride * 4;
        for base in (0..self.coeffs.len()).step_by(block) {
            for off in 0..stride {
                let mut old = [czero(); 4];
                for j in 0..4 {
                    old[j] = self.coeffs[base + j * stride + off];
                }
                for j in 0..4 {
                    let mut acc = czero();
                    for k in 0..4 {
                        acc += m[(j, k)] * old[k];
                    }
                    out.coeffs[base + j * stride + off] = acc;
                }
            }
        }
        Ok(out)
    }

    /// Apply an energy or chirality projector to one particle. The result is
    /// generally unnormalized.
    pub fn project_local(&self, particle: usize, kind: ProjectorKind) -> Result<Self, StateError> {
        self.apply_local(particle, &projector(kind))
    }

    /// Relabel the laboratories: output index p is input index perm[p],
    /// so psi'_{i_0 .. i_{n-1}} = psi_{i_{perm[0]} .. i_{perm[n-1]}}.
    pub fn permute_particles(&self, perm: &[usize]) -> Result<Self, StateError> {
        if perm.len() != self.particles {
            return Err(StateError::ParticleOutOfRange {
                index: perm.len(),
                particles: self.particles,
            });
        }
        let n = self.particles;
        let mut out = Self::zeros(n)?;
        let mut idx = vec![0usize; n];
        let mut src = vec![0usize; n];
        for flat in 0..self.coeffs.len() {
            out.unflatten(flat, &mut idx);
            for p in 0..n {
                src[p] = idx[perm[p]];
            }
            out.coeffs[flat] = self.get(&src);
        }
        Ok(out)
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        StateTensor {
            particles: self.particles,
            coeffs: self.coeffs.iter().map(|z| z.conj()).collect(),
        }
    }

    /// The two-particle coefficient matrix with the first particle as row
    /// index and the second as column index.
    pub fn as_matrix(&self) -> Option<Mat4<R>> {
        if self.particles != 2 {
            return None;
        }
        let mut m = Mat4::zero();
        for j in 0..4 {
            for k in 0..4 {
                m[(j, k)] = self.coeffs[4 * j + k];
            }
        }
        Some(m)
    }

    pub fn from_matrix(m: &Mat4<R>) -> Self {
        let mut s = Self::zeros(2).unwrap();
        for j in 0..4 {
            for k in 0..4 {
                s.coeffs[4 * j + k] = m[(j, k)];
            }
        }
        s
    }
}

/// Serialized form of a state file:
/// `{"particles": n, "coefficients": [[re, im], ...]}` in flat order.
#[derive(Serialize, Deserialize)]
struct StateFile {
    particles: usize,
    coefficients: Vec<[f64; 2]>,
}

impl StateTensor<f64> {
    pub fn to_json(&self) -> String {
        let file = StateFile {
            particles: self.particles,
            coefficients: self.coeffs.iter().map(|z| [z.re, z.im]).collect(),
        };
        serde_json::to_string_pretty(&file).expect("state serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, StateError> {
        let file: StateFile =
            serde_json::from_str(text).map_err(|e| StateError::Malformed(e.to_string()))?;
        Self::from_coefficients(
            file.particles,
            file.coefficients
                .iter()
                .map(|[re, im]| Complex64::new(*re, *im))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::g;
    use crate::lorentz::random_proper_orthochronous;
    use crate::scalar::c;
    use proptest::prelude::*;

    #[test]
    fn basis_state_positions() {
        let s = StateTensor::<f64>::basis_state(&[0, 1]).unwrap();
        assert!((s.get(&[0, 1]) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((s.norm() - 1.0).abs() < 1e-15);
        let t = StateTensor::<f64>::basis_state(&[1, 0, 0]).unwrap();
        assert!((t.get(&[1, 0, 0]) - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(
            StateTensor::<f64>::basis_state(&[]).unwrap_err(),
            StateError::EmptyState
        );
    }

    #[test]
    fn product_state_is_outer_product() {
        let s = StateTensor::product_state(&[Spinor::<f64>::basis(0), Spinor::basis(1)]).unwrap();
        let b = StateTensor::basis_state(&[0, 1]).unwrap();
        assert!(s.max_diff(&b) < 1e-15);
    }

    #[test]
    fn random_state_is_deterministic_and_normalized() {
        let a = StateTensor::<f64>::random(3, 11).unwrap();
        let b = StateTensor::<f64>::random(3, 11).unwrap();
        assert!(a.max_diff(&b) == 0.0);
        assert!((a.norm() - 1.0).abs() < 1e-12);
        let other = StateTensor::<f64>::random(3, 12).unwrap();
        assert!(a.inner(&other).norm() < 1.0);
        assert_eq!(
            StateTensor::<f64>::random(5, 0).unwrap_err(),
            StateError::ParticleCountOutOfRange(5)
        );
    }

    #[test]
    fn apply_local_examples() {
        let s = StateTensor::<f64>::basis_state(&[0, 1]).unwrap();
        let id = Mat4::identity();
        assert!(s.apply_local(0, &id).unwrap().max_diff(&s) < 1e-15);
        // gamma0 phi0 = phi0
        let t = s.apply_local(0, &g(0)).unwrap();
        assert!(t.max_diff(&s) < 1e-15);
        assert!(s.apply_local(2, &id).is_err());
    }

    #[test]
    fn apply_local_inverse_round_trip() {
        let s = StateTensor::<f64>::random(2, 5).unwrap();
        let lambda = random_proper_orthochronous::<f64>(3, 1.0);
        // S then its inverse: for the spinor representation built from
        // generators, exp(-x) inverts exp(x)
        let inv = crate::lorentz::exp_element(&crate::lorentz::LieAlgebraElement {
            omega: crate::lorentz::random_element::<f64>(3, 1.0)
                .omega
                .map(|w| -w),
        });
        let round = s
            .apply_local(0, &lambda)
            .unwrap()
            .apply_local(0, &inv)
            .unwrap();
        assert!(round.max_diff(&s) < 1e-10);
    }

    #[test]
    fn projector_examples() {
        let s = StateTensor::<f64>::basis_state(&[2, 3]).unwrap();
        let p = s.project_local(0, ProjectorKind::Pplus).unwrap();
        assert!(p.norm() < 1e-15);
        let s01 = StateTensor::<f64>::basis_state(&[0, 1]).unwrap();
        let q = s01.project_local(0, ProjectorKind::Pplus).unwrap();
        assert!(q.max_diff(&s01) < 1e-15);
        let lr = s01
            .project_local(0, ProjectorKind::PL)
            .unwrap()
            .project_local(0, ProjectorKind::PR)
            .unwrap();
        assert!(lr.norm() < 1e-15);
    }

    #[test]
    fn json_round_trip_and_malformed() {
        let s = StateTensor::<f64>::random(2, 9).unwrap();
        let back = StateTensor::from_json(&s.to_json()).unwrap();
        assert!(s.max_diff(&back) < 1e-16);
        assert!(matches!(
            StateTensor::from_json("{oops"),
            Err(StateError::Malformed(_))
        ));
        assert!(matches!(
            StateTensor::from_json(r#"{"particles": 2, "coefficients": [[1.0, 0.0]]}"#),
            Err(StateError::LengthMismatch { .. })
        ));
    }

    proptest! {
        #[test]
        fn local_operations_on_different_particles_commute(seed in 0u64..200) {
            let s = StateTensor::<f64>::random(3, seed).unwrap();
            let m = random_proper_orthochronous::<f64>(seed.wrapping_add(1), 1.0);
            let n = random_proper_orthochronous::<f64>(seed.wrapping_add(2), 1.0);
            let ab = s.apply_local(0, &m).unwrap().apply_local(2, &n).unwrap();
            let ba = s.apply_local(2, &n).unwrap().apply_local(0, &m).unwrap();
            prop_assert!(ab.max_diff(&ba) < 1e-12);
        }
    }
}

pub mod examples;
