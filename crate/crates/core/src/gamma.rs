//! Gamma matrices in the Dirac representation, together with the derived
//! matrices C, gamma5, C gamma5, gamma0 gamma5 and the energy/chirality
//! projectors.
//!
//! The metric signature is (+---), so gamma0 is Hermitian and gamma1..3 are
//! anti-Hermitian, and gamma_mu gamma_nu + gamma_nu gamma_mu = 2 g_mu_nu.

use thiserror::Error;

use crate::mat4::Mat4;
use crate::scalar::{c, Real, C};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("gamma index {0} out of range 0..=3")]
    IndexOutOfRange(usize),
    #[error("generator indices must differ, got ({0},{1})")]
    EqualGeneratorIndices(usize, usize),
}

/// Derived matrices of the gamma algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Special {
    /// C = i gamma1 gamma3
    C,
    /// C gamma5
    C5,
    /// gamma5
    G5,
    /// gamma0
    G0,
    /// gamma0 gamma5
    G05,
}

/// Energy and chirality projectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjectorKind {
    /// Positive energy, (I + gamma0)/2
    Pplus,
    /// Negative energy, (I - gamma0)/2
    Pminus,
    /// Left-handed chiral, (I - gamma5)/2
    PL,
    /// Right-handed chiral, (I + gamma5)/2
    PR,
}

fn pauli<R: Real>(k: usize) -> [[C<R>; 2]; 2] {
    match k {
        1 => [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        2 => [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
        3 => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        _ => unreachable!(),
    }
}

fn neg2<R: Real>(b: [[C<R>; 2]; 2]) -> [[C<R>; 2]; 2] {
    [[-b[0][0], -b[0][1]], [-b[1][0], -b[1][1]]]
}

fn zero2<R: Real>() -> [[C<R>; 2]; 2] {
    [[c(0.0, 0.0); 2]; 2]
}

/// The Dirac-representation gamma matrix for index `mu`.
pub fn gamma<R: Real>(mu: usize) -> Result<Mat4<R>, AlgebraError> {
    match mu {
        0 => {
            let one = c(1.0, 0.0);
            Ok(Mat4::diag([one, one, -one, -one]))
        }
        1..=3 => {
            let s = pauli(mu);
            Ok(Mat4::from_blocks(zero2(), s, neg2(s), zero2()))
        }
        _ => Err(AlgebraError::IndexOutOfRange(mu)),
    }
}

/// Infallible gamma accessor for literal indices.
pub(crate) fn g<R: Real>(mu: usize) -> Mat4<R> {
    gamma(mu).expect("gamma index in range")
}

/// gamma5 = i gamma0 gamma1 gamma2 gamma3.
pub fn gamma5<R: Real>() -> Mat4<R> {
    (g::<R>(0) * g(1) * g(2) * g(3)).scale(c(0.0, 1.0))
}

/// One of the derived matrices of the algebra.
pub fn special<R: Real>(name: Special) -> Mat4<R> {
    match name {
        // C = i gamma1 gamma3, block-diagonal (-sigma2, -sigma2).
        Special::C => (g::<R>(1) * g(3)).scale(c(0.0, 1.0)),
        Special::C5 => special::<R>(Special::C) * gamma5(),
        Special::G5 => gamma5(),
        Special::G0 => g(0),
        Special::G05 => g::<R>(0) * gamma5(),
    }
}

/// Energy or chirality projector.
pub fn projector<R: Real>(kind: ProjectorKind) -> Mat4<R> {
    let half = c(0.5, 0.0);
    match kind {
        ProjectorKind::Pplus => (Mat4::identity() + g(0)).scale(half),
        ProjectorKind::Pminus => (Mat4::identity() - g(0)).scale(half),
        ProjectorKind::PL => (Mat4::identity() - gamma5()).scale(half),
        ProjectorKind::PR => (Mat4::identity() + gamma5()).scale(half),
    }
}

/// Minkowski metric entry g_mu_nu with signature (+---).
pub fn metric<R: Real>(mu: usize, nu: usize) -> R {
    if mu != nu {
        R::zero()
    } else if mu == 0 {
        R::one()
    } else {
        -R::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Mat4<f64>;
    const TOL: f64 = 1e-12;

    #[test]
    fn gamma0_is_printed_diagonal() {
        let expect = M::diag([c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)]);
        assert!(gamma::<f64>(0).unwrap().approx_eq(&expect, TOL));
    }

    #[test]
    fn gamma_out_of_range_is_error() {
        assert_eq!(
            gamma::<f64>(4).unwrap_err(),
            AlgebraError::IndexOutOfRange(4)
        );
    }

    #[test]
    fn clifford_relations() {
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = g::<f64>(mu) * g(nu) + g(nu) * g(mu);
                let expect = M::identity().scale(c(2.0 * metric::<f64>(mu, nu), 0.0));
                assert!(
                    anti.approx_eq(&expect, TOL),
                    "clifford failed for ({mu},{nu})"
                );
            }
        }
    }

    #[test]
    fn gamma_squares() {
        // gamma0^2 = I, and the hermiticity pattern
        assert!((g::<f64>(0) * g(0)).approx_eq(&M::identity(), TOL));
        assert!(g::<f64>(0).dagger().approx_eq(&g(0), TOL));
        for k in 1..4 {
            assert!(g::<f64>(k).dagger().approx_eq(&(-g::<f64>(k)), TOL));
        }
    }

    #[test]
    fn conjugation_identities() {
        // gamma0 gamma_mu gamma0 = gamma_mu^dagger and C gamma_mu C = gamma_mu^T
        let cc = special::<f64>(Special::C);
        for mu in 0..4 {
            assert!((g::<f64>(0) * g(mu) * g(0)).approx_eq(&g::<f64>(mu).dagger(), TOL));
            assert!((cc * g(mu) * cc).approx_eq(&g::<f64>(mu).transpose(), TOL));
        }
    }

    #[test]
    fn c_is_printed_block_diagonal() {
        // block-diag(-sigma2, -sigma2)
        let i = c::<f64>(0.0, 1.0);
        let mut expect = M::zero();
        expect[(0, 1)] = i;
        expect[(1, 0)] = -i;
        expect[(2, 3)] = i;
        expect[(3, 2)] = -i;
        assert!(special::<f64>(Special::C).approx_eq(&expect, TOL));
    }

    #[test]
    fn c_involution_and_hermiticity() {
        let cc = special::<f64>(Special::C);
        assert!((cc * cc).approx_eq(&M::identity(), TOL));
        assert!(cc.dagger().approx_eq(&cc, TOL));
        assert!(cc.transpose().approx_eq(&(-cc), TOL));
    }

    #[test]
    fn gamma5_properties() {
        let g5 = gamma5::<f64>();
        let mut expect = M::zero();
        for k in 0..2 {
            expect[(k, k + 2)] = c(1.0, 0.0);
            expect[(k + 2, k)] = c(1.0, 0.0);
        }
        assert!(g5.approx_eq(&expect, TOL));
        assert!(g5.dagger().approx_eq(&g5, TOL));
        assert!(g5.transpose().approx_eq(&g5, TOL));
        assert!((g5 * g5).approx_eq(&M::identity(), TOL));
        for mu in 0..4 {
            let anti = g5 * g(mu) + g(mu) * g5;
            assert!(
                anti.approx_eq(&M::zero(), TOL),
                "gamma5 anticommutation {mu}"
            );
        }
    }

    #[test]
    fn antisymmetry_classes() {
        let c5 = special::<f64>(Special::C5);
        assert!(c5.transpose().approx_eq(&(-c5), TOL));
        let g05 = special::<f64>(Special::G05);
        // gamma0 gamma5 is real antisymmetric
        assert!(g05.transpose().approx_eq(&(-g05), TOL));
        assert!(g05.conj().approx_eq(&g05, TOL));
        let g0 = special::<f64>(Special::G0);
        assert!(g0.transpose().approx_eq(&g0, TOL));
        assert!(g0.conj().approx_eq(&g0, TOL));
    }

    #[test]
    fn projectors_idempotent_hermitian_complete() {
        use ProjectorKind::*;
        for kind in [Pplus, Pminus, PL, PR] {
            let p = projector::<f64>(kind);
            assert!((p * p).approx_eq(&p, TOL));
            assert!(p.dagger().approx_eq(&p, TOL));
        }
        let sum_e = projector::<f64>(Pplus) + projector(Pminus);
        let sum_c = projector::<f64>(PL) + projector(PR);
        assert!(sum_e.approx_eq(&M::identity(), TOL));
        assert!(sum_c.approx_eq(&M::identity(), TOL));
        assert!(projector::<f64>(Pplus).approx_eq(
            &M::diag([c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
            TOL
        ));
        assert!((projector::<f64>(PL) * projector(PR)).approx_eq(&M::zero(), TOL));
    }

    #[test]
    fn projector_kill_rules() {
        use ProjectorKind::*;
        let c5 = special::<f64>(Special::C5);
        let g05 = special::<f64>(Special::G05);
        let g0 = special::<f64>(Special::G0);
        for p in [projector::<f64>(Pplus), projector(Pminus)] {
            assert!((p * c5 * p).approx_eq(&M::zero(), TOL));
            assert!((p * g05 * p).approx_eq(&M::zero(), TOL));
        }
        for p in [projector::<f64>(PL), projector(PR)] {
            assert!((p * g0 * p).approx_eq(&M::zero(), TOL));
            assert!((p * g05 * p).approx_eq(&M::zero(), TOL));
        }
    }

    #[test]
    fn algebra_holds_in_f32() {
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = g::<f32>(mu) * g(nu) + g(nu) * g(mu);
                let expect =
                    Mat4::<f32>::identity().scale(C::new(2.0 * metric::<f32>(mu, nu), 0.0));
                assert!(anti.approx_eq(&expect, 1e-6));
            }
        }
    }
}
