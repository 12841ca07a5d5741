//! Time evolution of momentum-eigenstate spinors and the dynamical laws of
//! the invariant forms.
//!
//! # Reduced single-time generator
//!
//! For a momentum eigenstate psi(x) = chi(t) exp(i p.x) the Dirac equation
//! with electromagnetic potential A_mu(t) and pseudoscalar coupling g phi(t),
//!
//! ```text
//! sum_mu gamma^mu d_mu psi = (-i q sum_mu gamma^mu A_mu - i m + g gamma5 phi) psi,
//! ```
//!
//! turns the spatial derivatives into i p_k multiplications. Splitting off
//! the time term and left-multiplying by gamma0 (which squares to I) gives
//! the first-order system d chi / dt = M(t) chi with
//!
//! ```text
//! M(t) = -i q A_0(t) I  -  i m gamma0  -  i sum_k (p_k + q A_k(t)) gamma0 gamma^k
//!        + g phi(t) gamma0 gamma5.
//! ```
//!
//! All four terms are anti-Hermitian for real potentials (gamma0 gamma^k is
//! Hermitian, gamma0 gamma5 anti-Hermitian), so the flow is unitary and the
//! norm of chi is conserved exactly; the integrator below preserves it to
//! its own order. The free case at rest reduces to M = -i m gamma0, whose
//! flow is exp(-i m t) on the upper components and exp(+i m t) on the lower
//! ones.
//!
//! Potentials are functions of t only; spatially varying potentials would
//! break the momentum-eigenstate assumption and are rejected by construction.

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::forms::{bilinear, sesquilinear, BilinearKind, SesquilinearKind};
use crate::gamma::{g, special, Special};
use crate::mat4::Mat4;
use crate::scalar::c;
use crate::spinor::Spinor;
use crate::state::StateTensor;

#[derive(Debug, Error, PartialEq)]
pub enum DynamicsError {
    #[error("time step must be positive, got {0}")]
    NonpositiveStep(f64),
    #[error("trajectories have different grids ({0} vs {1} samples)")]
    GridMismatch(usize, usize),
    #[error("invariant evolution check needs a two-particle state, got {0}")]
    NotTwoParticles(usize),
}

/// Time-dependent potentials, functions of t only.
pub struct Potentials {
    pub a0: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub a1: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub a2: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub a3: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    /// The pseudoscalar field multiplying the coupling constant.
    pub phi: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl Potentials {
    pub fn zero() -> Self {
        Potentials {
            a0: Box::new(|_| 0.0),
            a1: Box::new(|_| 0.0),
            a2: Box::new(|_| 0.0),
            a3: Box::new(|_| 0.0),
            phi: Box::new(|_| 0.0),
        }
    }

    pub fn constant(a0: f64, a1: f64, a2: f64, a3: f64, phi: f64) -> Self {
        Potentials {
            a0: Box::new(move |_| a0),
            a1: Box::new(move |_| a1),
            a2: Box::new(move |_| a2),
            a3: Box::new(move |_| a3),
            phi: Box::new(move |_| phi),
        }
    }
}

pub struct EvolutionParams {
    pub momentum: [f64; 3],
    pub mass: f64,
    pub charge: f64,
    /// Pseudoscalar coupling constant.
    pub coupling: f64,
    pub potentials: Potentials,
    pub t0: f64,
    pub t1: f64,
    pub dt: f64,
}

impl EvolutionParams {
    pub fn free(mass: f64, t0: f64, t1: f64, dt: f64) -> Self {
        EvolutionParams {
            momentum: [0.0; 3],
            mass,
            charge: 0.0,
            coupling: 0.0,
            potentials: Potentials::zero(),
            t0,
            t1,
            dt,
        }
    }

    /// The reduced generator M(t) of d chi/dt = M chi.
    pub fn generator(&self, t: f64) -> Mat4<f64> {
        let a = [
            (self.potentials.a0)(t),
            (self.potentials.a1)(t),
            (self.potentials.a2)(t),
            (self.potentials.a3)(t),
        ];
        let phi = (self.potentials.phi)(t);
        let mut m = Mat4::identity().scale(c(0.0, -self.charge * a[0]));
        m = m + g::<f64>(0).scale(c(0.0, -self.mass));
        for k in 0..3 {
            let coeff = self.momentum[k] + self.charge * a[k + 1];
            m = m + (g::<f64>(0) * g(k + 1)).scale(c(0.0, -coeff));
        }
        m = m + special::<f64>(Special::G05).scale(c(self.coupling * phi, 0.0));
        m
    }

    fn grid(&self) -> Result<Vec<f64>, DynamicsError> {
        if self.dt <= 0.0 {
            return Err(DynamicsError::NonpositiveStep(self.dt));
        }
        let steps = ((self.t1 - self.t0) / self.dt).round() as usize;
        Ok((0..=steps).map(|k| self.t0 + k as f64 * self.dt).collect())
    }
}

/// A reduced-amplitude trajectory chi(t) on a uniform grid.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub spinors: Vec<Spinor<f64>>,
}

fn rk4_step<F: Fn(f64, &Spinor<f64>) -> Spinor<f64>>(
    f: &F,
    t: f64,
    y: &Spinor<f64>,
    dt: f64,
) -> Spinor<f64> {
    let k1 = f(t, y);
    let k2 = f(t + dt / 2.0, &(*y + k1.scale(c(dt / 2.0, 0.0))));
    let k3 = f(t + dt / 2.0, &(*y + k2.scale(c(dt / 2.0, 0.0))));
    let k4 = f(t + dt, &(*y + k3.scale(c(dt, 0.0))));
    *y + (k1 + k2.scale(c(2.0, 0.0)) + k3.scale(c(2.0, 0.0)) + k4).scale(c(dt / 6.0, 0.0))
}

/// Integrate the reduced amplitude with classical fourth-order Runge-Kutta.
pub fn evolve(chi0: &Spinor<f64>, params: &EvolutionParams) -> Result<Trajectory, DynamicsError> {
    let times = params.grid()?;
    let deriv = |t: f64, y: &Spinor<f64>| params.generator(t) * *y;
    let mut spinors = Vec::with_capacity(times.len());
    spinors.push(*chi0);
    let mut y = *chi0;
    for w in times.windows(2) {
        y = rk4_step(&deriv, w[0], &y, w[1] - w[0]);
        spinors.push(y);
    }
    Ok(Trajectory { times, spinors })
}

/// The four forms along a pair of trajectories.
pub fn form_along(
    kind: FormLaw,
    psi: &Trajectory,
    phi: &Trajectory,
) -> Result<Vec<C64>, DynamicsError> {
    if psi.times.len() != phi.times.len() {
        return Err(DynamicsError::GridMismatch(
            psi.times.len(),
            phi.times.len(),
        ));
    }
    Ok(psi
        .spinors
        .iter()
        .zip(&phi.spinors)
        .map(|(a, b)| form_value(kind, a, b))
        .collect())
}

/// Which form's dynamical law to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormLaw {
    C,
    C5,
    G0,
    G05,
}

fn form_value(kind: FormLaw, a: &Spinor<f64>, b: &Spinor<f64>) -> C64 {
    match kind {
        FormLaw::C => bilinear(BilinearKind::C, a, b),
        FormLaw::C5 => bilinear(BilinearKind::C5, a, b),
        FormLaw::G0 => sesquilinear(SesquilinearKind::G0, a, b),
        FormLaw::G05 => sesquilinear(SesquilinearKind::G05, a, b),
    }
}

fn sandwich(a: &Spinor<f64>, m: &Mat4<f64>, b: &Spinor<f64>, conjugate_left: bool) -> C64 {
    let mb = *m * *b;
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..4 {
        let left = if conjugate_left { a[k].conj() } else { a[k] };
        acc += left * mb[k];
    }
    acc
}

/// The time-derivative law of one form for momentum eigenstates: the local
/// potential terms plus i p_k in place of the spatial derivatives.
fn form_rhs(
    kind: FormLaw,
    a: &Spinor<f64>,
    b: &Spinor<f64>,
    params: &EvolutionParams,
    t: f64,
) -> C64 {
    let q = params.charge;
    let a0 = (params.potentials.a0)(t);
    let ak = [
        (params.potentials.a1)(t),
        (params.potentials.a2)(t),
        (params.potentials.a3)(t),
    ];
    let gphi = params.coupling * (params.potentials.phi)(t);
    let p = params.momentum;
    let cc = special::<f64>(Special::C);
    let c5 = special::<f64>(Special::C5);
    let g5 = special::<f64>(Special::G5);
    let g0 = g::<f64>(0);
    let i = C64::new(0.0, 1.0);
    match kind {
        FormLaw::C => {
            // 2 psi^T C (-i q A0 - i m gamma0) phi; the spatial bracket
            // cancels for equal momenta
            let m = cc.scale(c(0.0, -q * a0)) + (cc * g0).scale(c(0.0, -params.mass));
            sandwich(a, &m.scale(c(2.0, 0.0)), b, false)
        }
        FormLaw::C5 => {
            // 2 psi^T C gamma5 (-i q A0 + g phi gamma0 gamma5) phi
            let m = c5.scale(c(0.0, -q * a0)) + (c5 * g0 * g5).scale(c(gphi, 0.0));
            sandwich(a, &m.scale(c(2.0, 0.0)), b, false)
        }
        FormLaw::G0 => {
            // 2 psi^dag (-i q sum_k A_k gamma^k + g phi gamma5) phi
            //   - 2 i sum_k p_k psi^dag gamma^k phi
            let mut m = g5.scale(c(gphi, 0.0));
            for k in 0..3 {
                m = m + g::<f64>(k + 1).scale(c(0.0, -q * ak[k]));
                m = m + g::<f64>(k + 1).scale(c(0.0, -p[k]));
            }
            sandwich(a, &m.scale(c(2.0, 0.0)), b, true)
        }
        FormLaw::G05 => {
            // 2 psi^dag gamma5 (i q sum_k A_k gamma^k + i m) phi
            //   + 2 i sum_k p_k psi^dag gamma5 gamma^k phi
            let mut m = g5.scale(c(0.0, params.mass));
            for k in 0..3 {
                m = m + (g5 * g(k + 1)).scale(c(0.0, q * ak[k]));
                m = m + (g5 * g(k + 1)).scale(i * c(p[k], 0.0));
            }
            sandwich(a, &m.scale(c(2.0, 0.0)), b, true)
        }
    }
}

/// Max over interior grid points of |centered difference of the form minus
/// the dynamical law|, scaled by the largest form magnitude.
pub fn form_evolution_residual(
    kind: FormLaw,
    psi: &Trajectory,
    phi: &Trajectory,
    params: &EvolutionParams,
) -> Result<f64, DynamicsError> {
    let values = form_along(kind, psi, phi)?;
    let scale = values.iter().map(|v| v.norm()).fold(1.0f64, f64::max);
    let mut worst: f64 = 0.0;
    for k in 1..values.len().saturating_sub(1) {
        let dt = psi.times[k + 1] - psi.times[k - 1];
        let fd = (values[k + 1] - values[k - 1]) / dt;
        let rhs = form_rhs(kind, &psi.spinors[k], &phi.spinors[k], params, psi.times[k]);
        worst = worst.max((fd - rhs).norm() / scale);
    }
    Ok(worst)
}

/// Which invariant's single-side evolution to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvolvedInvariant {
    I1,
    I2,
}

/// Report of an Alice-side evolution of a two-particle invariant.
#[derive(Clone, Debug)]
pub struct InvariantEvolutionReport {
    /// Max |centered difference - dynamical law| over interior grid points,
    /// relative to the largest |value|.
    pub rhs_residual: f64,
    /// Max | |I(t)| - |I(t0)| | along the trajectory.
    pub abs_drift: f64,
    /// Least-squares phase slope of I(t), when |I| stays away from zero.
    pub phase_slope: Option<f64>,
    pub values: Vec<C64>,
    pub times: Vec<f64>,
}

fn rk4_tensor_step<F: Fn(f64, &StateTensor<f64>) -> StateTensor<f64>>(
    f: &F,
    t: f64,
    y: &StateTensor<f64>,
    dt: f64,
) -> StateTensor<f64> {
    let half = C64::new(dt / 2.0, 0.0);
    let k1 = f(t, y);
    let k2 = f(t + dt / 2.0, &y.add(&k1.scaled(half)));
    let k3 = f(t + dt / 2.0, &y.add(&k2.scaled(half)));
    let k4 = f(t + dt, &y.add(&k3.scaled(C64::new(dt, 0.0))));
    y.add(
        &k1.add(&k2.scaled(C64::new(2.0, 0.0)))
            .add(&k3.scaled(C64::new(2.0, 0.0)))
            .add(&k4)
            .scaled(C64::new(dt / 6.0, 0.0)),
    )
}

/// Evolve only the first particle of a two-particle state and check the
/// invariant's dynamical law along the way.
pub fn invariant_evolution_check(
    which: EvolvedInvariant,
    state0: &StateTensor<f64>,
    alice: &EvolutionParams,
) -> Result<InvariantEvolutionReport, DynamicsError> {
    if state0.particles() != 2 {
        return Err(DynamicsError::NotTwoParticles(state0.particles()));
    }
    let times = alice.grid()?;
    let deriv = |t: f64, y: &StateTensor<f64>| {
        y.apply_local(0, &alice.generator(t))
            .expect("two particles")
    };

    let cc = special::<f64>(Special::C);
    let c5 = special::<f64>(Special::C5);
    let g0 = g::<f64>(0);
    let value_of = |s: &StateTensor<f64>| -> C64 {
        let m = s.as_matrix().expect("two particles");
        match which {
            EvolvedInvariant::I1 => (m.transpose() * cc * m * cc).trace() * 0.5,
            EvolvedInvariant::I2 => (m.transpose() * c5 * m * c5).trace() * 0.5,
        }
    };
    // the time-derivative law for the Alice side: a U(1) rotation plus a
    // mass (bilinear C) or pseudoscalar (bilinear C gamma5) source trace
    let rhs_of = |s: &StateTensor<f64>, t: f64| -> C64 {
        let m = s.as_matrix().expect("two particles");
        let q = alice.charge;
        let a0 = (alice.potentials.a0)(t);
        let phase = C64::new(0.0, -2.0 * q * a0);
        match which {
            EvolvedInvariant::I1 => {
                let value = (m.transpose() * cc * m * cc).trace() * 0.5;
                let source = (m.transpose() * g0 * cc * m * cc).trace();
                phase * value + C64::new(0.0, -alice.mass) * source
            }
            EvolvedInvariant::I2 => {
                let value = (m.transpose() * c5 * m * c5).trace() * 0.5;
                let source = (m.transpose() * g0 * cc * m * c5).trace();
                let gphi = alice.coupling * (alice.potentials.phi)(t);
                phase * value + C64::new(-gphi, 0.0) * source
            }
        }
    };

    let mut states = Vec::with_capacity(times.len());
    states.push(state0.clone());
    let mut y = state0.clone();
    for w in times.windows(2) {
        y = rk4_tensor_step(&deriv, w[0], &y, w[1] - w[0]);
        states.push(y.clone());
    }
    let values: Vec<C64> = states.iter().map(&value_of).collect();
    let scale = values.iter().map(|v| v.norm()).fold(1.0f64, f64::max);
    let mut rhs_residual: f64 = 0.0;
    for k in 1..values.len().saturating_sub(1) {
        let dt = times[k + 1] - times[k - 1];
        let fd = (values[k + 1] - values[k - 1]) / dt;
        let rhs = rhs_of(&states[k], times[k]);
        rhs_residual = rhs_residual.max((fd - rhs).norm() / scale);
    }
    let abs0 = values[0].norm();
    let abs_drift = values
        .iter()
        .map(|v| (v.norm() - abs0).abs())
        .fold(0.0f64, f64::max);
    let min_abs = values
        .iter()
        .map(|v| v.norm())
        .fold(f64::INFINITY, f64::min);
    let phase_slope = if min_abs > 1e-6 {
        // unwrap the phase and fit a line through it
        let mut phases = Vec::with_capacity(values.len());
        let mut prev = values[0].arg();
        let mut offset = 0.0;
        for v in &values {
            let mut a = v.arg() + offset;
            while a - prev > std::f64::consts::PI {
                a -= 2.0 * std::f64::consts::PI;
                offset -= 2.0 * std::f64::consts::PI;
            }
            while a - prev < -std::f64::consts::PI {
                a += 2.0 * std::f64::consts::PI;
                offset += 2.0 * std::f64::consts::PI;
            }
            phases.push(a);
            prev = a;
        }
        let n = times.len() as f64;
        let tbar = times.iter().sum::<f64>() / n;
        let pbar = phases.iter().sum::<f64>() / n;
        let num: f64 = times
            .iter()
            .zip(&phases)
            .map(|(t, p)| (t - tbar) * (p - pbar))
            .sum();
        let den: f64 = times.iter().map(|t| (t - tbar) * (t - tbar)).sum();
        Some(num / den)
    } else {
        None
    };
    Ok(InvariantEvolutionReport {
        rhs_residual,
        abs_drift,
        phase_slope,
        values,
        times,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rel_err;
    use crate::state::examples::catalog_state;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_spinor(seed: u64) -> Spinor<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = Spinor::zero();
        for k in 0..4 {
            s[k] = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
        s
    }

    #[test]
    fn free_particle_closed_forms() {
        let m = 1.3;
        let params = EvolutionParams::free(m, 0.0, 10.0, 1e-3);
        for (j, sign) in [(0usize, -1.0), (1, -1.0), (2, 1.0), (3, 1.0)] {
            let traj = evolve(&Spinor::basis(j), &params).unwrap();
            let mut worst: f64 = 0.0;
            for (t, chi) in traj.times.iter().zip(&traj.spinors) {
                let expect = Spinor::basis(j).scale(c(0.0, sign * m * t).exp());
                worst = worst.max(chi.max_diff(&expect));
            }
            assert!(worst < 1e-8, "basis {j}: {worst}");
        }
    }

    #[test]
    fn norm_is_preserved_in_the_free_case() {
        let params = EvolutionParams::free(0.8, 0.0, 10.0, 1e-3);
        let traj = evolve(&random_spinor(5), &params).unwrap();
        let n0 = traj.spinors[0].norm();
        let n1 = traj.spinors.last().unwrap().norm();
        assert!((n1 / n0 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn nonpositive_step_is_rejected() {
        let params = EvolutionParams::free(1.0, 0.0, 1.0, 0.0);
        assert_eq!(
            evolve(&Spinor::basis(0), &params).unwrap_err(),
            DynamicsError::NonpositiveStep(0.0)
        );
    }

    #[test]
    fn rk4_order_four_against_matrix_exponential() {
        // constant generator: the flow is the matrix exponential
        let params = |dt: f64| EvolutionParams {
            momentum: [0.4, -0.2, 0.1],
            mass: 1.0,
            charge: 0.7,
            coupling: 0.3,
            potentials: Potentials::constant(0.5, 0.1, -0.2, 0.3, 0.8),
            t0: 0.0,
            t1: 1.0,
            dt,
        };
        let chi0 = random_spinor(11);
        let err_at = |dt: f64| {
            let p = params(dt);
            let traj = evolve(&chi0, &p).unwrap();
            let exact = p.generator(0.0).scale(c(p.t1, 0.0)).exp() * chi0;
            traj.spinors.last().unwrap().max_diff(&exact)
        };
        let e1 = err_at(0.05);
        let e2 = err_at(0.025);
        let ratio = e1 / e2;
        assert!(
            (10.0..=30.0).contains(&ratio),
            "expected ~16x error reduction, got {ratio} ({e1} vs {e2})"
        );
    }

    #[test]
    fn massless_bilinear_phase_law() {
        // m = 0, constant A0: psi^T C phi rotates with slope -2 q A0
        let q = 1.3;
        let a0 = 0.7;
        let params = EvolutionParams {
            momentum: [0.3, 0.0, -0.5],
            mass: 0.0,
            charge: q,
            coupling: 0.0,
            potentials: Potentials::constant(a0, 0.0, 0.0, 0.0, 0.0),
            t0: 0.0,
            t1: 5.0,
            dt: 1e-3,
        };
        let psi = evolve(&random_spinor(21), &params).unwrap();
        let phi = evolve(&random_spinor(22), &params).unwrap();
        let values = form_along(FormLaw::C, &psi, &phi).unwrap();
        let v0 = values[0];
        let mut worst: f64 = 0.0;
        for (t, v) in psi.times.iter().zip(&values) {
            let expect = v0 * c(0.0, -2.0 * q * a0 * t).exp();
            worst = worst.max(rel_err(*v, expect));
        }
        assert!(worst < 1e-7, "phase law violated: {worst}");
    }

    #[test]
    fn form_laws_hold_for_generic_parameters() {
        let params = EvolutionParams {
            momentum: [0.2, -0.4, 0.6],
            mass: 0.9,
            charge: 1.1,
            coupling: 0.5,
            potentials: Potentials {
                a0: Box::new(|t| 0.3 * (1.7 * t).sin()),
                a1: Box::new(|t| 0.2 * (0.9 * t).cos()),
                a2: Box::new(|_| 0.15),
                a3: Box::new(|t| 0.1 * t.sin()),
                phi: Box::new(|t| 0.4 * (1.1 * t).cos()),
            },
            t0: 0.0,
            t1: 2.0,
            dt: 1e-3,
        };
        let psi = evolve(&random_spinor(31), &params).unwrap();
        let phi = evolve(&random_spinor(32), &params).unwrap();
        for kind in [FormLaw::C, FormLaw::C5, FormLaw::G0, FormLaw::G05] {
            let r = form_evolution_residual(kind, &psi, &phi, &params).unwrap();
            assert!(r < 1e-5, "{kind:?}: residual {r}");
        }
    }

    #[test]
    fn form_residual_shrinks_with_the_step() {
        // the residual is dominated by the O(dt^2) centered-difference floor,
        // so halving dt buys about a factor of four
        let make = |dt: f64| EvolutionParams {
            momentum: [0.1, 0.2, -0.3],
            mass: 0.7,
            charge: 0.9,
            coupling: 0.2,
            potentials: Potentials::constant(0.4, 0.1, 0.0, -0.2, 0.5),
            t0: 0.0,
            t1: 1.0,
            dt,
        };
        let residual_at = |dt: f64| {
            let params = make(dt);
            let psi = evolve(&random_spinor(41), &params).unwrap();
            let phi = evolve(&random_spinor(42), &params).unwrap();
            form_evolution_residual(FormLaw::G05, &psi, &phi, &params).unwrap()
        };
        let r1 = residual_at(2e-3);
        let r2 = residual_at(1e-3);
        assert!(r1 / r2 > 3.0, "expected ~4x reduction, got {}", r1 / r2);
    }

    #[test]
    fn trace_identities_used_by_the_invariant_laws() {
        // Tr[Psi^T C gamma0 gamma^k Psi C] = 0 and the C gamma5 analog, for
        // arbitrary matrices
        let cc = special::<f64>(Special::C);
        let c5 = special::<f64>(Special::C5);
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for _ in 0..10 {
            let mut m = Mat4::<f64>::zero();
            for r in 0..4 {
                for col in 0..4 {
                    m[(r, col)] = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                }
            }
            for k in 1..4 {
                let t1 = (m.transpose() * cc * g::<f64>(0) * g(k) * m * cc).trace();
                assert!(t1.norm() < 1e-12, "C identity failed for mu={k}");
                let t2 = (m.transpose() * c5 * g::<f64>(0) * g(k) * m * c5).trace();
                assert!(t2.norm() < 1e-12, "C5 identity failed for mu={k}");
            }
        }
    }

    #[test]
    fn alice_side_invariant_laws() {
        let epr = catalog_state("epr2").unwrap().state;
        // massless: |I1| constant, phase slope -2 q A0
        let q = 0.8;
        let a0 = 0.6;
        let massless = EvolutionParams {
            momentum: [0.2, 0.1, 0.0],
            mass: 0.0,
            charge: q,
            coupling: 0.4,
            potentials: Potentials::constant(a0, 0.0, 0.1, 0.0, 0.3),
            t0: 0.0,
            t1: 3.0,
            dt: 1e-3,
        };
        let report = invariant_evolution_check(EvolvedInvariant::I1, &epr, &massless).unwrap();
        assert!(report.abs_drift < 1e-6, "drift {}", report.abs_drift);
        assert!(report.rhs_residual < 1e-5);
        let slope = report.phase_slope.unwrap();
        assert!((slope + 2.0 * q * a0).abs() < 1e-4, "slope {slope}");

        // g = 0: same law for the second invariant on a state where it is
        // nonzero
        let i2state = catalog_state("i2max").unwrap().state;
        let gzero = EvolutionParams {
            momentum: [0.0, 0.3, 0.2],
            mass: 1.1,
            charge: q,
            coupling: 0.0,
            potentials: Potentials::constant(a0, 0.05, 0.0, 0.1, 0.0),
            t0: 0.0,
            t1: 3.0,
            dt: 1e-3,
        };
        let report = invariant_evolution_check(EvolvedInvariant::I2, &i2state, &gzero).unwrap();
        assert!(report.abs_drift < 1e-6);
        assert!(report.rhs_residual < 1e-5);
        let slope = report.phase_slope.unwrap();
        assert!((slope + 2.0 * q * a0).abs() < 1e-4);

        // massive generic: only the law residual is asserted
        let generic = EvolutionParams {
            momentum: [0.1, -0.2, 0.3],
            mass: 0.9,
            charge: 0.7,
            coupling: 0.6,
            potentials: Potentials::constant(0.3, 0.1, -0.1, 0.2, 0.5),
            t0: 0.0,
            t1: 2.0,
            dt: 1e-3,
        };
        let report = invariant_evolution_check(EvolvedInvariant::I1, &epr, &generic).unwrap();
        assert!(report.rhs_residual < 1e-5, "{}", report.rhs_residual);
    }

    #[test]
    fn wrong_particle_count_is_rejected() {
        let w3 = catalog_state("w3").unwrap().state;
        let params = EvolutionParams::free(1.0, 0.0, 1.0, 0.1);
        assert_eq!(
            invariant_evolution_check(EvolvedInvariant::I1, &w3, &params).unwrap_err(),
            DynamicsError::NotTwoParticles(3)
        );
    }
}
