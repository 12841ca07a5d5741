//! Spinor representation of the proper orthochronous Lorentz group, the
//! discrete P/CT/CPT matrices and the antiunitary T/C/CP maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gamma::{g, special, AlgebraError, Special};
use crate::mat4::Mat4;
use crate::scalar::{c, Real, C};
use crate::spinor::Spinor;

/// The six index pairs (rho, sigma) with rho < sigma, in the order used by
/// [`LieAlgebraElement::omega`].
pub const GENERATOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// An element of the Lie algebra of the spinor representation, stored as the
/// six independent coefficients omega_(rho sigma) for the pairs in
/// [`GENERATOR_PAIRS`]. Boost coefficients (the first three) should stay
/// moderate; the samplers clamp them to |omega| <= 3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LieAlgebraElement<R: Real> {
    pub omega: [R; 6],
}

impl<R: Real> LieAlgebraElement<R> {
    pub fn zero() -> Self {
        LieAlgebraElement {
            omega: [R::zero(); 6],
        }
    }

    /// The algebra element sum omega_(rho sigma) S^(rho sigma) over rho < sigma.
    ///
    /// With omega antisymmetric this equals (1/2) sum over all ordered pairs,
    /// so exp of it is the finite transformation; a rotation coefficient of
    /// 2 pi gives -I, the spinor double cover.
    pub fn matrix(&self) -> Mat4<R> {
        let mut m = Mat4::zero();
        for (k, (rho, sigma)) in GENERATOR_PAIRS.iter().enumerate() {
            m = m + generator::<R>(*rho, *sigma)
                .expect("valid pair")
                .scale(C::new(self.omega[k], R::zero()));
        }
        m
    }
}

/// Generator S^(rho sigma) = (1/4)[gamma_rho, gamma_sigma].
pub fn generator<R: Real>(rho: usize, sigma: usize) -> Result<Mat4<R>, AlgebraError> {
    if rho > 3 {
        return Err(AlgebraError::IndexOutOfRange(rho));
    }
    if sigma > 3 {
        return Err(AlgebraError::IndexOutOfRange(sigma));
    }
    if rho == sigma {
        return Err(AlgebraError::EqualGeneratorIndices(rho, sigma));
    }
    let comm = g::<R>(rho) * g(sigma) - g::<R>(sigma) * g(rho);
    Ok(comm.scale(c(0.25, 0.0)))
}

/// Finite transformation exp of a Lie algebra element.
pub fn exp_element<R: Real>(a: &LieAlgebraElement<R>) -> Mat4<R> {
    a.matrix().exp()
}

/// A random S(Lambda): all six coefficients drawn uniformly from
/// [-scale, scale], deterministic per seed. `scale` is clamped to (0, 3].
pub fn random_proper_orthochronous<R: Real>(seed: u64, scale: f64) -> Mat4<R> {
    exp_element(&random_element(seed, scale))
}

/// The Lie algebra element behind [`random_proper_orthochronous`].
pub fn random_element<R: Real>(seed: u64, scale: f64) -> LieAlgebraElement<R> {
    let scale = scale.clamp(f64::MIN_POSITIVE, 3.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut omega = [R::zero(); 6];
    for w in omega.iter_mut() {
        *w = R::real(rng.random_range(-scale..=scale));
    }
    LieAlgebraElement { omega }
}

/// Discrete transformations represented by plain matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Discrete {
    /// Parity, S(P) = gamma0.
    P,
    /// Charge-time, S(CT) = -i gamma0 gamma5.
    CT,
    /// S(CPT) = -i gamma5.
    CPT,
}

pub fn discrete<R: Real>(name: Discrete) -> Mat4<R> {
    match name {
        Discrete::P => g(0),
        Discrete::CT => special::<R>(Special::G05).scale(c(0.0, -1.0)),
        Discrete::CPT => special::<R>(Special::G5).scale(c(0.0, -1.0)),
    }
}

/// Which of the four invariant forms an invariance algebra belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    C,
    C5,
    G0,
    G05,
}

impl FormKind {
    /// Whether the form pairs the first argument transposed (bilinear) or
    /// conjugate-transposed (sesquilinear).
    pub fn is_bilinear(self) -> bool {
        matches!(self, FormKind::C | FormKind::C5)
    }

    pub fn matrix<R: Real>(self) -> Mat4<R> {
        match self {
            FormKind::C => special(Special::C),
            FormKind::C5 => special(Special::C5),
            FormKind::G0 => special(Special::G0),
            FormKind::G05 => special(Special::G05),
        }
    }
}

/// Generators of the largest connected matrix Lie group preserving one form.
///
/// The bilinear forms are each preserved by a real 20-dimensional algebra
/// (a copy of sp(4, C) viewed as real) and the sesquilinear forms by a real
/// 16-dimensional algebra (u(2,2)). A generator g annihilates a bilinear form
/// M when g^T M + M g = 0 and a sesquilinear form when g^dagger M + M g = 0.
pub fn form_invariance_algebra<R: Real>(kind: FormKind) -> Vec<Mat4<R>> {
    let i = c::<R>(0.0, 1.0);
    let g5 = special::<R>(Special::G5);
    let gg = |mu: usize, nu: usize| g::<R>(mu) * g(nu);
    let g5g = |mu: usize| g5 * g(mu);
    match kind {
        FormKind::C => vec![
            // skew-Hermitian half
            g5g(0),
            g5g(1).scale(i),
            g5g(2).scale(i),
            g5g(3).scale(i),
            gg(0, 1).scale(i),
            gg(0, 2).scale(i),
            gg(0, 3).scale(i),
            gg(1, 2),
            gg(1, 3),
            gg(2, 3),
            // Hermitian half
            g5g(0).scale(i),
            g5g(1),
            g5g(2),
            g5g(3),
            gg(0, 1),
            gg(0, 2),
            gg(0, 3),
            gg(1, 2).scale(i),
            gg(1, 3).scale(i),
            gg(2, 3).scale(i),
        ],
        FormKind::C5 => vec![
            g::<R>(0).scale(i),
            g(1),
            g(2),
            g(3),
            gg(0, 1).scale(i),
            gg(0, 2).scale(i),
            gg(0, 3).scale(i),
            gg(1, 2),
            gg(1, 3),
            gg(2, 3),
            g(0),
            g::<R>(1).scale(i),
            g::<R>(2).scale(i),
            g::<R>(3).scale(i),
            gg(0, 1),
            gg(0, 2),
            gg(0, 3),
            gg(1, 2).scale(i),
            gg(1, 3).scale(i),
            gg(2, 3).scale(i),
        ],
        FormKind::G0 => vec![
            g::<R>(0).scale(i),
            g5g(1).scale(i),
            g5g(2).scale(i),
            g5g(3).scale(i),
            gg(1, 2),
            gg(1, 3),
            gg(2, 3),
            Mat4::identity().scale(i),
            g::<R>(1).scale(i),
            g::<R>(2).scale(i),
            g::<R>(3).scale(i),
            g5g(0).scale(i),
            gg(0, 1),
            gg(0, 2),
            gg(0, 3),
            g5,
        ],
        FormKind::G05 => vec![
            g(1),
            g(2),
            g(3),
            gg(1, 2),
            gg(1, 3),
            gg(2, 3),
            g5g(0),
            Mat4::identity().scale(i),
            g(0),
            gg(0, 1),
            gg(0, 2),
            gg(0, 3),
            g5g(1),
            g5g(2),
            g5g(3),
            g5,
        ],
    }
}

/// The six generators shared by all four invariance algebras: the spinor
/// representation of the proper orthochronous Lorentz algebra.
pub fn shared_invariance_algebra<R: Real>() -> Vec<Mat4<R>> {
    let gg = |mu: usize, nu: usize| g::<R>(mu) * g(nu);
    vec![gg(1, 2), gg(1, 3), gg(2, 3), gg(0, 1), gg(0, 2), gg(0, 3)]
}

/// Antiunitary maps: complex conjugation followed by a fixed matrix.
///
/// These are exposed on spinors only; the U(1) phases below are fixed
/// choices and downstream code must not rely on them, only on relative signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Antiunitary {
    /// Time reversal, psi -> C psi*.
    T,
    /// Charge conjugation, psi -> i gamma2 psi*.
    Cconj,
    /// CP, psi -> i C gamma5 psi*.
    CP,
}

pub fn apply_antiunitary<R: Real>(name: Antiunitary, psi: &Spinor<R>) -> Spinor<R> {
    let conj = psi.conj();
    match name {
        Antiunitary::T => special::<R>(Special::C) * conj,
        Antiunitary::Cconj => g::<R>(2).scale(c(0.0, 1.0)) * conj,
        Antiunitary::CP => special::<R>(Special::C5).scale(c(0.0, 1.0)) * conj,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma5;

    type M = Mat4<f64>;
    const TOL: f64 = 1e-12;

    #[test]
    fn generator_examples() {
        let s12 = generator::<f64>(1, 2).unwrap();
        let direct = (g::<f64>(1) * g(2) - g::<f64>(2) * g(1)).scale(c(0.25, 0.0));
        assert!(s12.approx_eq(&direct, TOL));
        let sum = s12 + generator::<f64>(2, 1).unwrap();
        assert!(sum.approx_eq(&M::zero(), TOL));
        assert_eq!(
            generator::<f64>(1, 1).unwrap_err(),
            AlgebraError::EqualGeneratorIndices(1, 1)
        );
    }

    #[test]
    fn generators_commute_with_gamma5() {
        let g5 = gamma5::<f64>();
        for (rho, sigma) in GENERATOR_PAIRS {
            let s = generator::<f64>(rho, sigma).unwrap();
            assert!((s * g5 - g5 * s).approx_eq(&M::zero(), TOL));
        }
    }

    #[test]
    fn exp_of_zero_and_full_turn() {
        assert!(exp_element(&LieAlgebraElement::<f64>::zero()).approx_eq(&M::identity(), TOL));
        // 2 pi rotation flips the spinor sign
        let mut a = LieAlgebraElement::<f64>::zero();
        a.omega[3] = 2.0 * std::f64::consts::PI; // the (1,2) slot
        let full_turn = exp_element(&a);
        assert!(full_turn.approx_eq(&(-M::identity()), 1e-10));
    }

    #[test]
    fn sampler_is_deterministic_and_continuous() {
        let a = random_proper_orthochronous::<f64>(7, 1.0);
        let b = random_proper_orthochronous::<f64>(7, 1.0);
        assert!(a.approx_eq(&b, 0.0));
        let near_id = random_proper_orthochronous::<f64>(7, 1e-7);
        assert!(near_id.approx_eq(&M::identity(), 1e-6));
    }

    #[test]
    fn sampled_transforms_have_unit_determinant() {
        for seed in 0..20 {
            let s = random_proper_orthochronous::<f64>(seed, 1.0);
            assert!((s.det() - c(1.0, 0.0)).norm() < 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn sampled_transforms_preserve_the_four_forms() {
        let cc = special::<f64>(Special::C);
        let c5 = special::<f64>(Special::C5);
        let g0 = special::<f64>(Special::G0);
        let g05 = special::<f64>(Special::G05);
        for seed in 0..100 {
            let s = random_proper_orthochronous::<f64>(seed, 1.0);
            assert!(
                (s.transpose() * cc * s).approx_eq(&cc, 1e-9),
                "C seed {seed}"
            );
            assert!(
                (s.transpose() * c5 * s).approx_eq(&c5, 1e-9),
                "C5 seed {seed}"
            );
            assert!((s.dagger() * g0 * s).approx_eq(&g0, 1e-9), "G0 seed {seed}");
            assert!(
                (s.dagger() * g05 * s).approx_eq(&g05, 1e-9),
                "G05 seed {seed}"
            );
        }
    }

    #[test]
    fn discrete_maps_match_their_definitions() {
        assert!(discrete::<f64>(Discrete::P).approx_eq(&g(0), TOL));
        let ct = discrete::<f64>(Discrete::CT);
        assert!(ct.approx_eq(&special::<f64>(Special::G05).scale(c(0.0, -1.0)), TOL));
        let cpt = discrete::<f64>(Discrete::CPT);
        assert!((cpt * cpt).approx_eq(&(-M::identity()), TOL));
    }

    #[test]
    fn discrete_sign_flips_on_the_forms() {
        let cc = special::<f64>(Special::C);
        let c5 = special::<f64>(Special::C5);
        let g0 = special::<f64>(Special::G0);
        let g05 = special::<f64>(Special::G05);
        let p = discrete::<f64>(Discrete::P);
        assert!((p.transpose() * cc * p).approx_eq(&cc, TOL));
        assert!((p.transpose() * c5 * p).approx_eq(&(-c5), TOL));
        assert!((p.dagger() * g0 * p).approx_eq(&g0, TOL));
        assert!((p.dagger() * g05 * p).approx_eq(&(-g05), TOL));
        let s = discrete::<f64>(Discrete::CPT);
        assert!((s.transpose() * cc * s).approx_eq(&(-cc), TOL));
        assert!((s.transpose() * c5 * s).approx_eq(&(-c5), TOL));
        assert!((s.dagger() * g0 * s).approx_eq(&(-g0), TOL));
        assert!((s.dagger() * g05 * s).approx_eq(&(-g05), TOL));
    }

    #[test]
    fn antiunitary_squares_as_regression_values() {
        // Squares of the antiunitary maps, computed once and frozen:
        // T^2 = -1, C^2 = +1, CP^2 = -1.
        let psi = Spinor::<f64>::new([c(0.3, 0.1), c(-0.2, 0.7), c(0.0, -0.4), c(0.9, 0.2)]);
        let t2 = apply_antiunitary(Antiunitary::T, &apply_antiunitary(Antiunitary::T, &psi));
        assert!(t2.max_diff(&(-psi)) < TOL);
        let c2 = apply_antiunitary(
            Antiunitary::Cconj,
            &apply_antiunitary(Antiunitary::Cconj, &psi),
        );
        assert!(c2.max_diff(&psi) < TOL);
        let cp2 = apply_antiunitary(Antiunitary::CP, &apply_antiunitary(Antiunitary::CP, &psi));
        assert!(cp2.max_diff(&(-psi)) < TOL);
    }

    #[test]
    fn invariance_algebras_annihilate_their_forms() {
        for kind in [FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05] {
            let m = kind.matrix::<f64>();
            let gens = form_invariance_algebra::<f64>(kind);
            assert_eq!(gens.len(), if kind.is_bilinear() { 20 } else { 16 });
            for (idx, gen) in gens.iter().enumerate() {
                let lhs = if kind.is_bilinear() {
                    gen.transpose() * m + m * *gen
                } else {
                    gen.dagger() * m + m * *gen
                };
                assert!(
                    lhs.approx_eq(&M::zero(), TOL),
                    "{kind:?} generator {idx} fails"
                );
            }
        }
    }

    #[test]
    fn shared_algebra_annihilates_all_four_forms() {
        let gens = shared_invariance_algebra::<f64>();
        assert_eq!(gens.len(), 6);
        for gen in &gens {
            for kind in [FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05] {
                let m = kind.matrix::<f64>();
                let lhs = if kind.is_bilinear() {
                    gen.transpose() * m + m * *gen
                } else {
                    gen.dagger() * m + m * *gen
                };
                assert!(lhs.approx_eq(&M::zero(), TOL));
            }
        }
    }

    #[test]
    fn antiunitary_examples() {
        let phi0 = Spinor::<f64>::basis(0);
        let t = apply_antiunitary(Antiunitary::T, &phi0);
        assert!(t.max_diff(&(special::<f64>(Special::C) * phi0)) < TOL);
        let phi1 = Spinor::<f64>::basis(1);
        let cp = apply_antiunitary(Antiunitary::CP, &phi1);
        let expect = special::<f64>(Special::C5).scale(c(0.0, 1.0)) * phi1;
        assert!(cp.max_diff(&expect) < TOL);
    }
}
