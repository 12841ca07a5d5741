//! Written-out coefficient expansions of the named two-particle
//! polynomials, machine-converted from their printed forms.
//!
//! These are the independent oracles against the trace/pattern definitions:
//! every function here must agree with the corresponding catalog entry on
//! random states, which is what `alt_forms_residual` asserts.

use num_complex::Complex64 as C64;

use crate::state::StateTensor;

fn cr(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn sq(z: C64) -> C64 {
    z * z
}

fn asq(z: C64) -> C64 {
    z * z.conj()
}

pub(crate) fn i1(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0) + p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2)
        + p(2, 0) * p(3, 1)
        - p(2, 1) * p(3, 0)
        + p(2, 2) * p(3, 3)
        - p(2, 3) * p(3, 2)
}

pub(crate) fn i2(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    p(1, 3) * p(2, 0) - p(1, 0) * p(2, 3) + p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)
        + p(0, 2) * p(3, 1)
        - p(0, 1) * p(3, 2)
        + p(0, 0) * p(3, 3)
        - p(0, 3) * p(3, 0)
}

pub(crate) fn i2a(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    p(0, 0) * p(1, 3) - p(0, 3) * p(1, 0) + p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2)
        + p(2, 2) * p(3, 1)
        - p(2, 1) * p(3, 2)
        + p(2, 0) * p(3, 3)
        - p(2, 3) * p(3, 0)
}

pub(crate) fn i2b(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1) + p(1, 3) * p(2, 2) - p(1, 2) * p(2, 3)
        + p(0, 0) * p(3, 1)
        - p(0, 1) * p(3, 0)
        + p(0, 2) * p(3, 3)
        - p(0, 3) * p(3, 2)
}

pub(crate) fn r1(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    asq(p(0, 3) * p(1, 2) - p(0, 2) * p(1, 3) + p(2, 3) * p(3, 2) - p(2, 2) * p(3, 3))
        - asq(p(1, 2) * p(0, 0) - p(0, 2) * p(1, 0) + p(2, 0) * p(3, 2) - p(2, 2) * p(3, 0))
        - asq(p(1, 3) * p(0, 0) - p(0, 3) * p(1, 0) + p(2, 0) * p(3, 3) - p(2, 3) * p(3, 0))
        + asq(p(1, 0) * p(0, 1) - p(1, 1) * p(0, 0) + p(2, 1) * p(3, 0) - p(2, 0) * p(3, 1))
        - asq(p(1, 2) * p(0, 1) - p(0, 2) * p(1, 1) + p(2, 1) * p(3, 2) - p(3, 1) * p(2, 2))
        - asq(p(1, 3) * p(0, 1) - p(1, 1) * p(0, 3) + p(2, 1) * p(3, 3) - p(2, 3) * p(3, 1))
}

pub(crate) fn r2(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (p(1, 2) * p(2, 3) - p(0, 2) * p(3, 3) + p(0, 3) * p(3, 2) - p(1, 3) * p(2, 2))
        * (q(0, 3) * q(1, 2) - q(0, 2) * q(1, 3) + q(2, 3) * q(3, 2) - q(2, 2) * q(3, 3))
        + (p(2, 2) * p(1, 0) - p(1, 2) * p(2, 0) + p(0, 2) * p(3, 0) - p(0, 0) * p(3, 2))
            * (q(0, 0) * q(1, 2) - q(0, 2) * q(1, 0) - q(2, 2) * q(3, 0) + q(2, 0) * q(3, 2))
        + (p(2, 3) * p(1, 0) - p(1, 3) * p(2, 0) + p(0, 3) * p(3, 0) - p(3, 3) * p(0, 0))
            * (q(0, 0) * q(1, 3) - q(0, 3) * q(1, 0) - q(2, 3) * q(3, 0) + q(2, 0) * q(3, 3))
        + (p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1) + p(0, 0) * p(3, 1) - p(0, 1) * p(3, 0))
            * (q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0) - q(2, 1) * q(3, 0) + q(2, 0) * q(3, 1))
        + (p(1, 1) * p(2, 2) - p(0, 1) * p(3, 2) + p(3, 1) * p(0, 2) - p(2, 1) * p(1, 2))
            * (q(0, 1) * q(1, 2) - q(0, 2) * q(1, 1) - q(2, 2) * q(3, 1) + q(2, 1) * q(3, 2))
        + (p(1, 1) * p(2, 3) - p(0, 1) * p(3, 3) + p(3, 1) * p(0, 3) - p(2, 1) * p(1, 3))
            * (q(0, 1) * q(1, 3) - q(0, 3) * q(1, 1) - q(2, 3) * q(3, 1) + q(2, 1) * q(3, 3))
}

pub(crate) fn r3(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    asq(p(2, 0) * p(1, 1) - p(1, 0) * p(2, 1) + p(0, 0) * p(3, 1) - p(0, 1) * p(3, 0))
        - asq(p(3, 0) * p(0, 3) - p(3, 3) * p(0, 0) + p(1, 0) * p(2, 3) - p(1, 3) * p(2, 0))
        - asq(p(2, 3) * p(1, 1) - p(3, 3) * p(0, 1) + p(3, 1) * p(0, 3) - p(2, 1) * p(1, 3))
        - asq(p(3, 0) * p(0, 2) - p(3, 2) * p(0, 0) + p(2, 2) * p(1, 0) - p(1, 2) * p(2, 0))
        - asq(p(3, 1) * p(0, 2) - p(3, 2) * p(0, 1) - p(2, 1) * p(1, 2) + p(2, 2) * p(1, 1))
        + asq(p(3, 3) * p(0, 2) - p(3, 2) * p(0, 3) + p(2, 2) * p(1, 3) - p(2, 3) * p(1, 2))
}

pub(crate) fn r4(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    asq(p(3, 0) * p(2, 1) - p(2, 0) * p(3, 1) + p(3, 2) * p(2, 3) - p(2, 2) * p(3, 3))
        - asq(p(2, 1) * p(0, 0) - p(2, 0) * p(0, 1) + p(0, 2) * p(2, 3) - p(2, 2) * p(0, 3))
        - asq(p(3, 1) * p(0, 0) - p(3, 0) * p(0, 1) + p(0, 2) * p(3, 3) - p(3, 2) * p(0, 3))
        + asq(p(1, 0) * p(0, 1) - p(1, 1) * p(0, 0) + p(1, 2) * p(0, 3) - p(0, 2) * p(1, 3))
        - asq(p(2, 1) * p(1, 0) - p(2, 0) * p(1, 1) + p(1, 2) * p(2, 3) - p(1, 3) * p(2, 2))
        - asq(p(3, 1) * p(1, 0) - p(1, 1) * p(3, 0) + p(1, 2) * p(3, 3) - p(3, 2) * p(1, 3))
}

pub(crate) fn r5(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (p(2, 1) * p(3, 2) - p(2, 0) * p(3, 3) + p(3, 0) * p(2, 3) - p(3, 1) * p(2, 2))
        * (q(3, 0) * q(2, 1) - q(2, 0) * q(3, 1) + q(3, 2) * q(2, 3) - q(2, 2) * q(3, 3))
        + (p(2, 2) * p(0, 1) - p(2, 1) * p(0, 2) + p(2, 0) * p(0, 3) - p(0, 0) * p(2, 3))
            * (q(0, 0) * q(2, 1) - q(2, 0) * q(0, 1) - q(2, 2) * q(0, 3) + q(0, 2) * q(2, 3))
        + (p(3, 2) * p(0, 1) - p(3, 1) * p(0, 2) + p(0, 3) * p(3, 0) - p(3, 3) * p(0, 0))
            * (q(0, 0) * q(3, 1) - q(3, 0) * q(0, 1) - q(3, 2) * q(0, 3) + q(0, 2) * q(3, 3))
        + (p(1, 1) * p(0, 2) - p(0, 1) * p(1, 2) + p(0, 0) * p(1, 3) - p(1, 0) * p(0, 3))
            * (q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0) - q(1, 2) * q(0, 3) + q(0, 2) * q(1, 3))
        + (p(1, 1) * p(2, 2) - p(1, 0) * p(2, 3) + p(1, 3) * p(2, 0) - p(1, 2) * p(2, 1))
            * (q(1, 0) * q(2, 1) - q(2, 0) * q(1, 1) - q(2, 2) * q(1, 3) + q(1, 2) * q(2, 3))
        + (p(1, 1) * p(3, 2) - p(1, 0) * p(3, 3) + p(1, 3) * p(3, 0) - p(1, 2) * p(3, 1))
            * (q(1, 0) * q(3, 1) - q(3, 0) * q(1, 1) - q(3, 2) * q(1, 3) + q(1, 2) * q(3, 3))
}

pub(crate) fn r6(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    asq(p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2) + p(0, 0) * p(1, 3) - p(1, 0) * p(0, 3))
        - asq(p(3, 0) * p(0, 3) - p(3, 3) * p(0, 0) + p(0, 1) * p(3, 2) - p(3, 1) * p(0, 2))
        - asq(p(3, 2) * p(1, 1) - p(3, 3) * p(1, 0) + p(1, 3) * p(3, 0) - p(1, 2) * p(3, 1))
        - asq(p(0, 3) * p(2, 0) - p(2, 3) * p(0, 0) + p(2, 2) * p(0, 1) - p(2, 1) * p(0, 2))
        - asq(p(1, 3) * p(2, 0) - p(2, 3) * p(1, 0) - p(1, 2) * p(2, 1) + p(2, 2) * p(1, 1))
        + asq(p(3, 3) * p(2, 0) - p(2, 3) * p(3, 0) + p(2, 2) * p(3, 1) - p(3, 2) * p(2, 1))
}

pub(crate) fn t1(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    sq(asq(p(0, 0)) + asq(p(1, 0)) - asq(p(2, 0)) - asq(p(3, 0)))
        + sq(asq(p(0, 1)) + asq(p(1, 1)) - asq(p(2, 1)) - asq(p(3, 1)))
        + sq(asq(p(0, 2)) + asq(p(1, 2)) - asq(p(2, 2)) - asq(p(3, 2)))
        + sq(asq(p(0, 3)) + asq(p(1, 3)) - asq(p(2, 3)) - asq(p(3, 3)))
        + cr(2.0)
            * asq(p(0, 1) * q(0, 0) + p(1, 1) * q(1, 0) - p(2, 1) * q(2, 0) - p(3, 1) * q(3, 0))
        - cr(2.0)
            * asq(p(0, 2) * q(0, 0) + p(1, 2) * q(1, 0) - p(2, 2) * q(2, 0) - p(3, 2) * q(3, 0))
        - cr(2.0)
            * asq(p(0, 2) * q(0, 1) + p(1, 2) * q(1, 1) - p(2, 2) * q(2, 1) - p(3, 2) * q(3, 1))
        - cr(2.0)
            * asq(p(0, 3) * q(0, 0) + p(1, 3) * q(1, 0) - p(2, 3) * q(2, 0) - p(3, 3) * q(3, 0))
        - cr(2.0)
            * asq(p(0, 3) * q(0, 1) + p(1, 3) * q(1, 1) - p(2, 3) * q(2, 1) - p(3, 3) * q(3, 1))
        + cr(2.0)
            * asq(p(0, 3) * q(0, 2) + p(1, 3) * q(1, 2) - p(2, 3) * q(2, 2) - p(3, 3) * q(3, 2))
        - sq(asq(p(0, 0)) + asq(p(1, 0)) - asq(p(2, 0)) - asq(p(3, 0))
            + asq(p(0, 1))
            + asq(p(1, 1))
            - asq(p(2, 1))
            - asq(p(3, 1))
            - asq(p(0, 2))
            - asq(p(1, 2))
            + asq(p(2, 2))
            + asq(p(3, 2))
            - asq(p(0, 3))
            - asq(p(1, 3))
            + asq(p(2, 3))
            + asq(p(3, 3)))
}

pub(crate) fn q1(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (p(0, 3) * q(0, 0) + p(0, 1) * q(0, 2) + p(1, 1) * q(1, 2) + p(1, 3) * q(1, 0))
        * (p(2, 2) * p(3, 0) - p(2, 0) * p(3, 2))
        + (p(0, 2) * q(0, 0) + p(1, 2) * q(1, 0) - p(0, 1) * q(0, 3) - p(1, 1) * q(1, 3))
            * (p(2, 0) * p(3, 3) - p(2, 3) * p(3, 0))
        + (p(0, 0) * q(0, 0) + p(1, 0) * q(1, 0) + p(0, 1) * q(0, 1) + p(1, 1) * q(1, 1))
            * (p(2, 3) * p(3, 2) - p(2, 2) * p(3, 3))
        + (p(0, 3) * q(0, 1) - p(0, 0) * q(0, 2) + p(1, 3) * q(1, 1) - p(1, 0) * q(1, 2))
            * (p(2, 2) * p(3, 1) - p(2, 1) * p(3, 2))
        + (p(0, 2) * q(0, 1) + p(1, 2) * q(1, 1) + p(0, 0) * q(0, 3) + p(1, 0) * q(1, 3))
            * (p(2, 1) * p(3, 3) - p(2, 3) * p(3, 1))
        + (p(0, 2) * q(0, 2) + p(0, 3) * q(0, 3) + p(1, 2) * q(1, 2) + p(1, 3) * q(1, 3))
            * (p(2, 0) * p(3, 1) - p(2, 1) * p(3, 0))
        + (p(2, 0) * q(2, 0) + p(2, 1) * q(2, 1) + p(3, 0) * q(3, 0) + p(3, 1) * q(3, 1))
            * (p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2))
        + (p(2, 2) * q(2, 0) - p(2, 1) * q(2, 3) + p(3, 2) * q(3, 0) - p(3, 1) * q(3, 3))
            * (p(0, 3) * p(1, 0) - p(0, 0) * p(1, 3))
        + (p(2, 3) * q(2, 0) + p(3, 3) * q(3, 0) + p(3, 1) * q(3, 2) + p(2, 1) * q(2, 2))
            * (p(0, 0) * p(1, 2) - p(0, 2) * p(1, 0))
        + (p(2, 2) * q(2, 1) + p(3, 2) * q(3, 1) + p(2, 0) * q(2, 3) + p(3, 0) * q(3, 3))
            * (p(0, 3) * p(1, 1) - p(0, 1) * p(1, 3))
        + (p(2, 0) * q(2, 2) - p(3, 3) * q(3, 1) - p(2, 3) * q(2, 1) + p(3, 0) * q(3, 2))
            * (p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2))
        + (p(2, 2) * q(2, 2) + p(2, 3) * q(2, 3) + p(3, 2) * q(3, 2) + p(3, 3) * q(3, 3))
            * (p(0, 1) * p(1, 0) - p(0, 0) * p(1, 1))
}

pub(crate) fn q2(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (p(0, 0) * q(0, 0) - p(0, 3) * q(0, 3) + p(3, 3) * q(3, 3) - p(3, 0) * q(3, 0))
        * (p(1, 2) * p(2, 1) - p(1, 1) * p(2, 2))
        + (p(0, 3) * q(0, 1) - p(3, 2) * q(3, 0) - p(3, 3) * q(3, 1) + p(0, 2) * q(0, 0))
            * (p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1))
        + (p(0, 0) * q(0, 1) - p(3, 2) * q(3, 3) - p(3, 0) * q(3, 1) + q(0, 3) * p(0, 2))
            * (p(1, 3) * p(2, 1) - p(1, 1) * p(2, 3))
        + (p(0, 3) * q(0, 2) - p(3, 3) * q(3, 2) - p(3, 1) * q(3, 0) + q(0, 0) * p(0, 1))
            * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0))
        + (p(3, 2) * q(3, 2) - p(0, 2) * q(0, 2) + q(0, 1) * p(0, 1) - p(3, 1) * q(3, 1))
            * (p(1, 0) * p(2, 3) - p(1, 3) * p(2, 0))
        + (p(3, 1) * q(3, 3) - p(0, 0) * q(0, 2) + p(3, 0) * q(3, 2) - p(0, 1) * q(0, 3))
            * (p(1, 3) * p(2, 2) - p(1, 2) * p(2, 3))
        + (p(1, 0) * q(1, 2) - p(2, 0) * q(2, 2) - p(2, 1) * q(2, 3) + p(1, 1) * q(1, 3))
            * (p(0, 3) * p(3, 2) - p(0, 2) * p(3, 3))
        + (p(1, 1) * q(1, 0) - p(2, 3) * q(2, 2) + p(1, 3) * q(1, 2) - p(2, 1) * q(2, 0))
            * (p(3, 0) * p(0, 2) - p(3, 2) * p(0, 0))
        + (p(1, 2) * q(1, 0) - p(2, 2) * q(2, 0) - p(2, 3) * q(2, 1) + q(1, 1) * p(1, 3))
            * (p(3, 1) * p(0, 0) - p(0, 1) * p(3, 0))
        + (p(1, 2) * q(1, 3) - p(2, 2) * q(2, 3) + p(1, 0) * q(1, 1) - p(2, 0) * q(2, 1))
            * (p(3, 3) * p(0, 1) - p(3, 1) * p(0, 3))
        + (p(1, 1) * q(1, 1) - p(1, 2) * q(1, 2) - p(2, 1) * q(2, 1) + p(2, 2) * q(2, 2))
            * (p(3, 0) * p(0, 3) - p(0, 0) * p(3, 3))
        + (p(1, 0) * q(1, 0) - p(1, 3) * q(1, 3) - p(2, 0) * q(2, 0) + p(2, 3) * q(2, 3))
            * (p(0, 1) * p(3, 2) - p(3, 1) * p(0, 2))
}

pub(crate) fn q3(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (p(2, 0) * q(0, 0) + p(2, 1) * q(0, 1) + p(3, 0) * q(1, 0) + p(3, 1) * q(1, 1))
        * (p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2))
        + (p(2, 3) * q(0, 1) - p(2, 0) * q(0, 2) + p(3, 3) * q(1, 1) - p(3, 0) * q(1, 2))
            * (p(0, 1) * p(1, 2) - p(0, 2) * p(1, 1))
        + (p(2, 3) * q(0, 0) + p(2, 1) * q(0, 2) + p(3, 3) * q(1, 0) + p(3, 1) * q(1, 2))
            * (p(0, 0) * p(1, 2) - p(0, 2) * p(1, 0))
        + (p(2, 2) * q(0, 1) + p(2, 0) * q(0, 3) + p(3, 2) * q(1, 1) + p(3, 0) * q(1, 3))
            * (p(0, 3) * p(1, 1) - p(0, 1) * p(1, 3))
        + (p(2, 2) * q(0, 0) - p(2, 1) * q(0, 3) + p(3, 2) * q(1, 0) - p(3, 1) * q(1, 3))
            * (p(0, 3) * p(1, 0) - p(0, 0) * p(1, 3))
        + (p(2, 2) * q(0, 2) + p(2, 3) * q(0, 3) + p(3, 2) * q(1, 2) + p(3, 3) * q(1, 3))
            * (p(0, 1) * p(1, 0) - p(0, 0) * p(1, 1))
        + (p(0, 0) * q(2, 0) + p(0, 1) * q(2, 1) + p(1, 0) * q(3, 0) + p(1, 1) * q(3, 1))
            * (p(2, 3) * p(3, 2) - p(2, 2) * p(3, 3))
        + (p(0, 0) * q(2, 2) - p(0, 3) * q(2, 1) - p(1, 3) * q(3, 1) + p(1, 0) * q(3, 2))
            * (p(2, 1) * p(3, 2) - p(2, 2) * p(3, 1))
        + (p(0, 3) * q(2, 0) + p(0, 1) * q(2, 2) + p(1, 3) * q(3, 0) + p(1, 1) * q(3, 2))
            * (p(2, 2) * p(3, 0) - p(2, 0) * p(3, 2))
        + (p(0, 2) * q(2, 1) + p(0, 0) * q(2, 3) + p(1, 2) * q(3, 1) + p(1, 0) * q(3, 3))
            * (p(2, 1) * p(3, 3) - p(2, 3) * p(3, 1))
        + (p(0, 2) * q(2, 0) - p(0, 1) * q(2, 3) + p(1, 2) * q(3, 0) - p(1, 1) * q(3, 3))
            * (p(2, 0) * p(3, 3) - p(2, 3) * p(3, 0))
        + (p(0, 2) * q(2, 2) + p(0, 3) * q(2, 3) + p(1, 2) * q(3, 2) + p(1, 3) * q(3, 3))
            * (p(2, 0) * p(3, 1) - p(2, 1) * p(3, 0))
}

pub(crate) fn q4(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (p(0, 0) * q(0, 0) - p(0, 3) * q(0, 3) - p(1, 3) * q(1, 3) + p(1, 0) * q(1, 0))
        * (p(2, 1) * p(3, 2) - p(2, 2) * p(3, 1))
        + (p(0, 3) * q(0, 1) + p(1, 2) * q(1, 0) + p(1, 3) * q(1, 1) + p(0, 2) * q(0, 0))
            * (p(2, 0) * p(3, 1) - p(2, 1) * p(3, 0))
        + (p(0, 0) * q(0, 1) + p(1, 0) * q(1, 1) + p(1, 2) * q(1, 3) + p(0, 2) * q(0, 3))
            * (p(2, 1) * p(3, 3) - p(2, 3) * p(3, 1))
        + (p(0, 3) * q(0, 2) + p(1, 3) * q(1, 2) + p(1, 1) * q(1, 0) + p(0, 1) * q(0, 0))
            * (p(2, 2) * p(3, 0) - p(2, 0) * p(3, 2))
        + (p(0, 0) * q(0, 2) + p(1, 0) * q(1, 2) + p(1, 1) * q(1, 3) + p(0, 1) * q(0, 3))
            * (p(2, 3) * p(3, 2) - p(2, 2) * p(3, 3))
        + (p(1, 1) * q(1, 1) - p(1, 2) * q(1, 2) - p(0, 2) * q(0, 2) + p(0, 1) * q(0, 1))
            * (p(2, 3) * p(3, 0) - p(2, 0) * p(3, 3))
        + (p(2, 1) * q(2, 0) + p(2, 3) * q(2, 2) + p(3, 1) * q(3, 0) + p(3, 3) * q(3, 2))
            * (p(0, 0) * p(1, 2) - p(0, 2) * p(1, 0))
        + (p(2, 2) * q(2, 0) + p(2, 3) * q(2, 1) + p(3, 2) * q(3, 0) + p(3, 3) * q(3, 1))
            * (p(1, 0) * p(0, 1) - p(0, 0) * p(1, 1))
        + (p(2, 0) * q(2, 1) + p(2, 2) * q(2, 3) + p(3, 0) * q(3, 1) + p(3, 2) * q(3, 3))
            * (p(0, 3) * p(1, 1) - p(0, 1) * p(1, 3))
        + (p(2, 1) * q(2, 1) - p(2, 2) * q(2, 2) + p(3, 1) * q(3, 1) - p(3, 2) * q(3, 2))
            * (p(0, 0) * p(1, 3) - p(0, 3) * p(1, 0))
        + (p(2, 0) * q(2, 2) + p(2, 1) * q(2, 3) + p(3, 0) * q(3, 2) + p(3, 1) * q(3, 3))
            * (p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2))
        + (p(2, 0) * q(2, 0) - p(2, 3) * q(2, 3) + p(3, 0) * q(3, 0) - p(3, 3) * q(3, 3))
            * (p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2))
}

pub(crate) fn t2(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (asq(p(0, 2))
            + asq(p(1, 2))
            - asq(p(2, 2))
            - asq(p(3, 2))
            + asq(p(0, 0))
            + asq(p(1, 0))
            - asq(p(2, 0))
            - asq(p(3, 0))) * (p(2, 0) * q(0, 2)
            - q(2, 0) * p(0, 2)
            + p(3, 0) * q(1, 2)
            - q(3, 0) * p(1, 2)
            - p(0, 0) * q(2, 2)
            + q(0, 0) * p(2, 2)
            - p(1, 0) * q(3, 2)
            + q(1, 0) * p(3, 2))
        - (asq(p(0, 3))
            + asq(p(1, 3))
            - asq(p(2, 3))
            - asq(p(3, 3))
            + asq(p(0, 1))
            + asq(p(1, 1))
            - asq(p(2, 1))
            - asq(p(3, 1))) * (q(2, 3) * p(0, 1)
            - p(2, 3) * q(0, 1)
            + q(3, 3) * p(1, 1)
            - p(3, 3) * q(1, 1)
            + p(0, 3) * q(2, 1)
            - q(0, 3) * p(2, 1)
            + p(1, 3) * q(3, 1)
            - q(1, 3) * p(3, 1))
        + (p(0, 2) * q(2, 2)
            - p(2, 2) * q(0, 2)
            - p(3, 2) * q(1, 2)
            + p(1, 2) * q(3, 2)
            + p(0, 0) * q(2, 0)
            - p(2, 0) * q(0, 0)
            - p(3, 0) * q(1, 0)
            + p(1, 0) * q(3, 0)) * (p(0, 0) * q(0, 2)
            + q(0, 0) * p(0, 2)
            + p(1, 0) * q(1, 2)
            + q(1, 0) * p(1, 2)
            - p(2, 0) * q(2, 2)
            - q(2, 0) * p(2, 2)
            - p(3, 0) * q(3, 2)
            - q(3, 0) * p(3, 2))
        + // this product is the row/column-relabel image of the previous one:
        // a plus-type bracket times a minus-type bracket; written with two
        // minus-type brackets the ten products do not sum to the trace form
        (p(0, 1) * q(0, 3)
            + p(0, 3) * q(0, 1)
            + p(1, 1) * q(1, 3)
            + p(1, 3) * q(1, 1)
            - p(2, 1) * q(2, 3)
            - p(2, 3) * q(2, 1)
            - p(3, 1) * q(3, 3)
            - p(3, 3) * q(3, 1)) * (p(0, 1) * q(2, 1)
            + p(0, 3) * q(2, 3)
            + p(1, 1) * q(3, 1)
            + p(1, 3) * q(3, 3)
            - p(2, 1) * q(0, 1)
            - p(2, 3) * q(0, 3)
            - p(3, 1) * q(1, 1)
            - p(3, 3) * q(1, 3))
        + (p(0, 0) * q(2, 1)
            - p(2, 0) * q(0, 1)
            - p(3, 0) * q(1, 1)
            + p(1, 0) * q(3, 1)
            - p(2, 2) * q(0, 3)
            - p(3, 2) * q(1, 3)
            + p(0, 2) * q(2, 3)
            + p(1, 2) * q(3, 3)) * (p(0, 3) * q(0, 0)
            + p(1, 3) * q(1, 0)
            - p(2, 3) * q(2, 0)
            - p(3, 3) * q(3, 0)
            + q(0, 2) * p(0, 1)
            + q(1, 2) * p(1, 1)
            - q(2, 2) * p(2, 1)
            - q(3, 2) * p(3, 1))
        + (q(0, 1) * p(0, 2)
            + q(1, 1) * p(1, 2)
            - q(2, 1) * p(2, 2)
            - q(3, 1) * p(3, 2)
            + q(0, 3) * p(0, 0)
            + q(1, 3) * p(1, 0)
            - q(2, 3) * p(2, 0)
            - q(3, 3) * p(3, 0)) * (q(2, 2) * p(0, 3)
            + q(3, 2) * p(1, 3)
            - q(0, 2) * p(2, 3)
            - q(1, 2) * p(3, 3)
            - p(2, 1) * q(0, 0)
            - p(3, 1) * q(1, 0)
            + p(0, 1) * q(2, 0)
            + p(1, 1) * q(3, 0))
        - (q(0, 1) * p(0, 0) + q(1, 1) * p(1, 0) - q(2, 1) * p(2, 0) - q(3, 1) * p(3, 0))
            * (q(2, 0) * p(0, 3) + q(3, 0) * p(1, 3)
                - q(0, 0) * p(2, 3)
                - q(1, 0) * p(3, 3)
                - p(2, 1) * q(0, 2)
                - p(3, 1) * q(1, 2)
                + p(0, 1) * q(2, 2)
                + p(1, 1) * q(3, 2))
        + (p(0, 1) * q(0, 0) + p(1, 1) * q(1, 0) - p(2, 1) * q(2, 0) - p(3, 1) * q(3, 0))
            * (p(2, 0) * q(0, 3) + p(3, 0) * q(1, 3)
                - p(0, 0) * q(2, 3)
                - p(1, 0) * q(3, 3)
                - q(2, 1) * p(0, 2)
                - q(3, 1) * p(1, 2)
                + q(0, 1) * p(2, 2)
                + q(1, 1) * p(3, 2))
        - (p(0, 3) * q(0, 2) + p(1, 3) * q(1, 2) - p(2, 3) * q(2, 2) - p(3, 3) * q(3, 2))
            * (p(0, 2) * q(2, 1) - p(2, 2) * q(0, 1) - p(3, 2) * q(1, 1)
                + p(1, 2) * q(3, 1)
                + q(2, 3) * p(0, 0)
                + q(3, 3) * p(1, 0)
                - q(0, 3) * p(2, 0)
                - q(1, 3) * p(3, 0))
        + (p(0, 2) * q(0, 3) + p(1, 2) * q(1, 3) - p(2, 2) * q(2, 3) - p(3, 2) * q(3, 3))
            * (q(0, 2) * p(2, 1) - q(2, 2) * p(0, 1) - q(3, 2) * p(1, 1)
                + q(1, 2) * p(3, 1)
                + p(2, 3) * q(0, 0)
                + p(3, 3) * q(1, 0)
                - p(0, 3) * q(2, 0)
                - p(1, 3) * q(3, 0))
}

pub(crate) fn n1n4_m_n2n3(s: &StateTensor<f64>) -> C64 {
    let p = |j: usize, k: usize| s.get(&[j, k]);
    let q = |j: usize, k: usize| s.get(&[j, k]).conj();
    let _ = &q;
    (p(2, 0) * q(0, 0) + p(2, 1) * q(0, 1) - p(2, 2) * q(0, 2) - p(2, 3) * q(0, 3)
        + p(3, 0) * q(1, 0)
        + p(3, 1) * q(1, 1)
        - p(3, 2) * q(1, 2)
        - p(3, 3) * q(1, 3)
        - p(0, 0) * q(2, 0)
        - p(0, 1) * q(2, 1)
        + p(0, 2) * q(2, 2)
        + p(0, 3) * q(2, 3)
        - p(1, 0) * q(3, 0)
        - p(1, 1) * q(3, 1)
        + p(1, 2) * q(3, 2)
        + p(1, 3) * q(3, 3))
        * (p(0, 2) * q(0, 0) + p(0, 3) * q(0, 1) - p(0, 0) * q(0, 2) - p(0, 1) * q(0, 3)
            + p(1, 2) * q(1, 0)
            + p(1, 3) * q(1, 1)
            - p(1, 0) * q(1, 2)
            - p(1, 1) * q(1, 3)
            - p(2, 2) * q(2, 0)
            - p(2, 3) * q(2, 1)
            + p(2, 0) * q(2, 2)
            + p(2, 1) * q(2, 3)
            - p(3, 2) * q(3, 0)
            - p(3, 3) * q(3, 1)
            + p(3, 0) * q(3, 2)
            + p(3, 1) * q(3, 3))
        + (p(2, 0) * q(0, 2) - p(2, 2) * q(0, 0) - p(2, 3) * q(0, 1) + p(2, 1) * q(0, 3)
            - p(3, 2) * q(1, 0)
            - p(3, 3) * q(1, 1)
            + p(3, 0) * q(1, 2)
            + p(3, 1) * q(1, 3)
            + p(0, 2) * q(2, 0)
            + p(0, 3) * q(2, 1)
            - p(0, 0) * q(2, 2)
            - p(0, 1) * q(2, 3)
            + p(1, 2) * q(3, 0)
            + p(1, 3) * q(3, 1)
            - p(1, 0) * q(3, 2)
            - p(1, 1) * q(3, 3))
            * (asq(p(0, 0)) + asq(p(0, 1)) - asq(p(0, 2)) - asq(p(0, 3))
                + asq(p(1, 0))
                + asq(p(1, 1))
                - asq(p(1, 2))
                - asq(p(1, 3))
                - asq(p(2, 0))
                - asq(p(2, 1))
                + asq(p(2, 2))
                + asq(p(2, 3))
                - asq(p(3, 0))
                - asq(p(3, 1))
                + asq(p(3, 2))
                + asq(p(3, 3)))
}
