//! The four pointwise Lorentz invariant forms on pairs of spinors.
//!
//! Two bilinear forms psi^T M phi with M = C or C gamma5 (skew-symmetric) and
//! two sesquilinear forms psi^dagger M phi with M = gamma0 or gamma0 gamma5
//! (Hermitian and skew-Hermitian respectively). Exposed as scalar functions
//! so that index conventions live in one place downstream.

use crate::gamma::{special, Special};
use crate::scalar::{czero, Real, C};
use crate::spinor::Spinor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BilinearKind {
    C,
    C5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SesquilinearKind {
    G0,
    G05,
}

/// psi^T M phi with M = C or C gamma5.
pub fn bilinear<R: Real>(kind: BilinearKind, psi: &Spinor<R>, phi: &Spinor<R>) -> C<R> {
    let m = match kind {
        BilinearKind::C => special::<R>(Special::C),
        BilinearKind::C5 => special::<R>(Special::C5),
    };
    let mut acc = czero();
    for r in 0..4 {
        for c in 0..4 {
            acc += psi[r] * m[(r, c)] * phi[c];
        }
    }
    acc
}

/// psi^dagger M phi with M = gamma0 or gamma0 gamma5.
pub fn sesquilinear<R: Real>(kind: SesquilinearKind, psi: &Spinor<R>, phi: &Spinor<R>) -> C<R> {
    let m = match kind {
        SesquilinearKind::G0 => special::<R>(Special::G0),
        SesquilinearKind::G05 => special::<R>(Special::G05),
    };
    let mut acc = czero();
    for r in 0..4 {
        for c in 0..4 {
            acc += psi[r].conj() * m[(r, c)] * phi[c];
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{
        apply_antiunitary, discrete, random_proper_orthochronous, Antiunitary, Discrete,
    };
    use crate::scalar::c;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_spinor(rng: &mut ChaCha8Rng) -> Spinor<f64> {
        let mut s = Spinor::zero();
        for k in 0..4 {
            s[k] = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
        s
    }

    #[test]
    fn bilinear_c_examples() {
        let phi0 = Spinor::<f64>::basis(0);
        let phi1 = Spinor::<f64>::basis(1);
        // the (0,1) entry of C is i
        let v = bilinear(BilinearKind::C, &phi0, &phi1);
        assert!((v - c(0.0, 1.0)).norm() < 1e-12);
        let w = bilinear(BilinearKind::C, &phi1, &phi0);
        assert!((v + w).norm() < 1e-12);
    }

    #[test]
    fn skew_symmetry_exact_on_random_spinors() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let psi = random_spinor(&mut rng);
            let phi = random_spinor(&mut rng);
            for kind in [BilinearKind::C, BilinearKind::C5] {
                assert!(bilinear(kind, &psi, &psi).norm() < 1e-12 * psi.norm_sqr());
                let a = bilinear(kind, &psi, &phi);
                let b = bilinear(kind, &phi, &psi);
                assert!((a + b).norm() < 1e-12 * (a.norm() + 1.0));
            }
        }
    }

    #[test]
    fn sesquilinear_diagonal_and_hermiticity() {
        let phi0 = Spinor::<f64>::basis(0);
        let phi2 = Spinor::<f64>::basis(2);
        assert!((sesquilinear(SesquilinearKind::G0, &phi0, &phi0) - c(1.0, 0.0)).norm() < 1e-12);
        assert!((sesquilinear(SesquilinearKind::G0, &phi2, &phi2) + c(1.0, 0.0)).norm() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let psi = random_spinor(&mut rng);
            let phi = random_spinor(&mut rng);
            let a = sesquilinear(SesquilinearKind::G0, &psi, &phi);
            let b = sesquilinear(SesquilinearKind::G0, &phi, &psi);
            assert!((a - b.conj()).norm() < 1e-12 * (a.norm() + 1.0));
            let s = sesquilinear(SesquilinearKind::G05, &psi, &psi);
            assert!(s.re.abs() < 1e-12 * psi.norm_sqr());
            let x = sesquilinear(SesquilinearKind::G05, &psi, &phi);
            let y = sesquilinear(SesquilinearKind::G05, &phi, &psi);
            assert!((x + y.conj()).norm() < 1e-12 * (x.norm() + 1.0));
        }
    }

    #[test]
    fn forms_invariant_under_sampled_transformations() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..100u64 {
            let s = random_proper_orthochronous::<f64>(seed, 1.0);
            let psi = random_spinor(&mut rng);
            let phi = random_spinor(&mut rng);
            let spsi = s * psi;
            let sphi = s * phi;
            for kind in [BilinearKind::C, BilinearKind::C5] {
                let before = bilinear(kind, &psi, &phi);
                let after = bilinear(kind, &spsi, &sphi);
                assert!((before - after).norm() <= 1e-9 * before.norm().max(1.0));
            }
            for kind in [SesquilinearKind::G0, SesquilinearKind::G05] {
                let before = sesquilinear(kind, &psi, &phi);
                let after = sesquilinear(kind, &spsi, &sphi);
                assert!((before - after).norm() <= 1e-9 * before.norm().max(1.0));
            }
        }
    }

    #[test]
    fn parity_and_cpt_behaviour() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let psi = random_spinor(&mut rng);
        let phi = random_spinor(&mut rng);
        let p = discrete::<f64>(Discrete::P);
        let cpt = discrete::<f64>(Discrete::CPT);
        let tol = 1e-12;

        let check = |factor: f64, before: num_complex::Complex64, after: num_complex::Complex64| {
            assert!((after - before * c(factor, 0.0)).norm() < tol * (before.norm() + 1.0));
        };
        check(
            1.0,
            bilinear(BilinearKind::C, &psi, &phi),
            bilinear(BilinearKind::C, &(p * psi), &(p * phi)),
        );
        check(
            -1.0,
            bilinear(BilinearKind::C5, &psi, &phi),
            bilinear(BilinearKind::C5, &(p * psi), &(p * phi)),
        );
        check(
            1.0,
            sesquilinear(SesquilinearKind::G0, &psi, &phi),
            sesquilinear(SesquilinearKind::G0, &(p * psi), &(p * phi)),
        );
        check(
            -1.0,
            sesquilinear(SesquilinearKind::G05, &psi, &phi),
            sesquilinear(SesquilinearKind::G05, &(p * psi), &(p * phi)),
        );
        for kind in [BilinearKind::C, BilinearKind::C5] {
            check(
                -1.0,
                bilinear(kind, &psi, &phi),
                bilinear(kind, &(cpt * psi), &(cpt * phi)),
            );
        }
        for kind in [SesquilinearKind::G0, SesquilinearKind::G05] {
            check(
                -1.0,
                sesquilinear(kind, &psi, &phi),
                sesquilinear(kind, &(cpt * psi), &(cpt * phi)),
            );
        }
    }

    #[test]
    fn time_reversal_preserves_g0_magnitude() {
        // relative signs only; the absolute U(1) phases are conventional
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let psi = random_spinor(&mut rng);
        let phi = random_spinor(&mut rng);
        let tpsi = apply_antiunitary(Antiunitary::T, &psi);
        let tphi = apply_antiunitary(Antiunitary::T, &phi);
        let before = sesquilinear(SesquilinearKind::G0, &psi, &phi);
        let after = sesquilinear(SesquilinearKind::G0, &tpsi, &tphi);
        assert!((after.norm() - before.norm()).abs() < 1e-12);
    }
}
