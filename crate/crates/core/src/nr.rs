//! Non-relativistic spin-1/2 invariants used as reduction oracles: the
//! two-qubit concurrence, the three-qubit polynomials J1..J5 (J5 is the Kempe
//! invariant) and the bidegree (3,1) polynomial s2.
//!
//! J2, J3, J4 are stored as their published difference expressions plus
//! J1^2, which keeps the transcriptions directly auditable.

use num_complex::Complex64 as C64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NrError {
    #[error("expected a {expected}-qubit tensor, got {got} qubits")]
    WrongQubitCount { expected: usize, got: usize },
    #[error("J index {0} out of range 1..=5")]
    JIndexOutOfRange(usize),
}

/// An n-qubit coefficient tensor of length 2^n, row-major with the last
/// index fastest (same convention as the 4-level state tensors).
#[derive(Clone, Debug, PartialEq)]
pub struct QubitTensor {
    qubits: usize,
    coeffs: Vec<C64>,
}

impl QubitTensor {
    pub fn new(qubits: usize, coeffs: Vec<C64>) -> Self {
        assert_eq!(coeffs.len(), 1usize << qubits, "length must be 2^qubits");
        QubitTensor { qubits, coeffs }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn get(&self, indices: &[usize]) -> C64 {
        debug_assert_eq!(indices.len(), self.qubits);
        let flat = indices.iter().fold(0usize, |acc, &b| (acc << 1) | (b & 1));
        self.coeffs[flat]
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Apply a 2x2 matrix to one qubit.
    pub fn apply_local(&self, qubit: usize, m: &[[C64; 2]; 2]) -> Self {
        assert!(qubit < self.qubits);
        let stride = 1usize << (self.qubits - 1 - qubit);
        let mut out = self.clone();
        let block = stride * 2;
        for base in (0..self.coeffs.len()).step_by(block) {
            for off in 0..stride {
                let a = self.coeffs[base + off];
                let b = self.coeffs[base + stride + off];
                out.coeffs[base + off] = m[0][0] * a + m[0][1] * b;
                out.coeffs[base + stride + off] = m[1][0] * a + m[1][1] * b;
            }
        }
        out
    }
}

fn check(t: &QubitTensor, expected: usize) -> Result<(), NrError> {
    if t.qubits != expected {
        return Err(NrError::WrongQubitCount {
            expected,
            got: t.qubits,
        });
    }
    Ok(())
}

/// The two-qubit concurrence bilinear psi00 psi11 - psi01 psi10.
pub fn wootters_concurrence(t: &QubitTensor) -> Result<C64, NrError> {
    check(t, 2)?;
    Ok(t.get(&[0, 0]) * t.get(&[1, 1]) - t.get(&[0, 1]) * t.get(&[1, 0]))
}

/// The three-qubit local-unitary invariants J1..J5. J1 is the squared norm,
/// J2..J4 are recovered from the printed differences by adding J1^2, and J5
/// is the six-factor Kempe sum.
pub fn kempe_j(k: usize, t: &QubitTensor) -> Result<C64, NrError> {
    check(t, 3)?;
    let j1 = C64::new(t.norm_sqr(), 0.0);
    match k {
        1 => Ok(j1),
        2 => Ok(j2_m_j1sq(t) + j1 * j1),
        3 => Ok(j3_m_j1sq(t) + j1 * j1),
        4 => Ok(j4_m_j1sq(t) + j1 * j1),
        5 => Ok(j5_brute_force(t)),
        _ => Err(NrError::JIndexOutOfRange(k)),
    }
}

/// J5 = sum over all nine binary indices of
/// psi_ijk psi*_imn psi_omq psi*_rjq psi_rvn psi*_ovk.
fn j5_brute_force(t: &QubitTensor) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for m in 0..2 {
                    for n in 0..2 {
                        for o in 0..2 {
                            for q in 0..2 {
                                for r in 0..2 {
                                    for v in 0..2 {
                                        acc += t.get(&[i, j, k])
                                            * t.get(&[i, m, n]).conj()
                                            * t.get(&[o, m, q])
                                            * t.get(&[r, j, q]).conj()
                                            * t.get(&[r, v, n])
                                            * t.get(&[o, v, k]).conj();
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    acc
}

/// The bidegree (3,1) three-qubit polynomial s2.
pub fn s2(t: &QubitTensor) -> Result<C64, NrError> {
    check(t, 3)?;
    Ok(s2_expansion(t))
}

fn cr(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn asq(z: C64) -> C64 {
    z * z.conj()
}

pub(crate) fn j3_m_j1sq(t: &QubitTensor) -> C64 {
    let p = |i: usize, j: usize, k: usize| t.get(&[i, j, k]);
    let q = |i: usize, j: usize, k: usize| t.get(&[i, j, k]).conj();
    cr(2.0)
        * (p(0, 1, 0) * q(0, 0, 0)
            + p(0, 1, 1) * q(0, 0, 1)
            + p(1, 1, 0) * q(1, 0, 0)
            + p(1, 1, 1) * q(1, 0, 1))
        * (p(0, 0, 0) * q(0, 1, 0)
            + p(0, 0, 1) * q(0, 1, 1)
            + p(1, 0, 0) * q(1, 1, 0)
            + p(1, 0, 1) * q(1, 1, 1))
        - cr(2.0)
            * (asq(p(0, 1, 0)) + asq(p(0, 1, 1)) + asq(p(1, 1, 0)) + asq(p(1, 1, 1)))
            * (asq(p(0, 0, 0)) + asq(p(0, 0, 1)) + asq(p(1, 0, 0)) + asq(p(1, 0, 1)))
}

pub(crate) fn j2_m_j1sq(t: &QubitTensor) -> C64 {
    let p = |i: usize, j: usize, k: usize| t.get(&[i, j, k]);
    let q = |i: usize, j: usize, k: usize| t.get(&[i, j, k]).conj();
    cr(2.0)
        * (p(1, 0, 0) * q(0, 0, 0)
            + p(1, 0, 1) * q(0, 0, 1)
            + p(1, 1, 0) * q(0, 1, 0)
            + p(1, 1, 1) * q(0, 1, 1))
        * (p(0, 0, 0) * q(1, 0, 0)
            + p(0, 0, 1) * q(1, 0, 1)
            + p(0, 1, 0) * q(1, 1, 0)
            + p(0, 1, 1) * q(1, 1, 1))
        - cr(2.0)
            * (asq(p(0, 0, 0)) + asq(p(0, 0, 1)) + asq(p(0, 1, 0)) + asq(p(0, 1, 1)))
            * (asq(p(1, 0, 0)) + asq(p(1, 0, 1)) + asq(p(1, 1, 0)) + asq(p(1, 1, 1)))
}

pub(crate) fn j4_m_j1sq(t: &QubitTensor) -> C64 {
    let p = |i: usize, j: usize, k: usize| t.get(&[i, j, k]);
    let q = |i: usize, j: usize, k: usize| t.get(&[i, j, k]).conj();
    cr(2.0)
        * (p(0, 0, 1) * q(0, 0, 0)
            + p(0, 1, 1) * q(0, 1, 0)
            + p(1, 0, 1) * q(1, 0, 0)
            + p(1, 1, 1) * q(1, 1, 0))
        * (p(0, 0, 0) * q(0, 0, 1)
            + p(0, 1, 0) * q(0, 1, 1)
            + p(1, 0, 0) * q(1, 0, 1)
            + p(1, 1, 0) * q(1, 1, 1))
        - cr(2.0)
            * (asq(p(0, 0, 0)) + asq(p(0, 1, 0)) + asq(p(1, 0, 0)) + asq(p(1, 1, 0)))
            * (asq(p(0, 0, 1)) + asq(p(0, 1, 1)) + asq(p(1, 0, 1)) + asq(p(1, 1, 1)))
}

pub(crate) fn s2_expansion(t: &QubitTensor) -> C64 {
    let p = |i: usize, j: usize, k: usize| t.get(&[i, j, k]);
    let q = |i: usize, j: usize, k: usize| t.get(&[i, j, k]).conj();
    (p(0, 0, 0) * p(1, 1, 1) - p(0, 1, 1) * p(1, 0, 0) + p(0, 1, 0) * p(1, 0, 1)
        - p(0, 0, 1) * p(1, 1, 0))
        * (asq(p(0, 0, 0)) + asq(p(0, 0, 1)) + asq(p(1, 0, 0)) + asq(p(1, 0, 1)))
        + cr(2.0)
            * (p(0, 0, 1) * p(1, 0, 0) - p(0, 0, 0) * p(1, 0, 1))
            * (p(0, 1, 0) * q(0, 0, 0)
                + p(0, 1, 1) * q(0, 0, 1)
                + p(1, 1, 0) * q(1, 0, 0)
                + p(1, 1, 1) * q(1, 0, 1))
        + cr(2.0)
            * (p(0, 1, 0) * p(1, 1, 1) - p(0, 1, 1) * p(1, 1, 0))
            * (p(0, 0, 0) * q(0, 1, 0)
                + p(0, 0, 1) * q(0, 1, 1)
                + p(1, 0, 0) * q(1, 1, 0)
                + p(1, 0, 1) * q(1, 1, 1))
        + (p(0, 1, 1) * p(1, 0, 0) - p(0, 1, 0) * p(1, 0, 1) + p(0, 0, 1) * p(1, 1, 0)
            - p(0, 0, 0) * p(1, 1, 1))
            * (asq(p(0, 1, 0)) + asq(p(0, 1, 1)) + asq(p(1, 1, 0)) + asq(p(1, 1, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_qubits(n: usize, seed: u64) -> QubitTensor {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs: Vec<C64> = (0..1usize << n)
            .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        QubitTensor::new(n, coeffs)
    }

    fn random_product(seed: u64) -> QubitTensor {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut spinors = vec![];
        for _ in 0..3 {
            spinors.push([
                C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            ]);
        }
        let mut coeffs = vec![];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    coeffs.push(spinors[0][i] * spinors[1][j] * spinors[2][k]);
                }
            }
        }
        QubitTensor::new(3, coeffs)
    }

    /// exp of a random anti-Hermitian 2x2: a unitary, not necessarily special.
    fn random_local_unitary(seed: u64) -> [[C64; 2]; 2] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = C64::new(0.0, rng.random_range(-1.0..1.0));
        let d = C64::new(0.0, rng.random_range(-1.0..1.0));
        let b = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let x = [[a, b], [-b.conj(), d]];
        let zero = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        let mul = |a: &[[C64; 2]; 2], b: &[[C64; 2]; 2]| {
            let mut out = [[zero; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
                }
            }
            out
        };
        let scale = 1.0 / 16.0;
        let xs = [
            [x[0][0] * scale, x[0][1] * scale],
            [x[1][0] * scale, x[1][1] * scale],
        ];
        let mut result = [[one, zero], [zero, one]];
        let mut term = [[one, zero], [zero, one]];
        let mut factorial = 1.0;
        for k in 1..24 {
            term = mul(&term, &xs);
            factorial *= k as f64;
            for r in 0..2 {
                for c in 0..2 {
                    result[r][c] += term[r][c] / factorial;
                }
            }
        }
        for _ in 0..4 {
            result = mul(&result, &result);
        }
        result
    }

    #[test]
    fn concurrence_examples() {
        let inv = 1.0 / 2f64.sqrt();
        let bell = QubitTensor::new(
            2,
            vec![
                C64::new(inv, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(inv, 0.0),
            ],
        );
        assert!((wootters_concurrence(&bell).unwrap().norm() - 0.5).abs() < 1e-15);
        let basis01 = QubitTensor::new(
            2,
            vec![
                C64::new(0.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
            ],
        );
        assert!(wootters_concurrence(&basis01).unwrap().norm() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let a = [
                C64::new(rng.random_range(-1.0..1.0), 0.1),
                C64::new(0.4, rng.random_range(-1.0..1.0)),
            ];
            let b = [
                C64::new(rng.random_range(-1.0..1.0), -0.3),
                C64::new(0.2, rng.random_range(-1.0..1.0)),
            ];
            let prod =
                QubitTensor::new(2, vec![a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]);
            assert!(wootters_concurrence(&prod).unwrap().norm() < 1e-14);
        }
        assert_eq!(
            wootters_concurrence(&random_qubits(3, 0)).unwrap_err(),
            NrError::WrongQubitCount {
                expected: 2,
                got: 3
            }
        );
    }

    #[test]
    fn j1_is_norm_and_ghz_symmetry() {
        let inv = 1.0 / 2f64.sqrt();
        let mut coeffs = vec![C64::new(0.0, 0.0); 8];
        coeffs[0] = C64::new(inv, 0.0);
        coeffs[7] = C64::new(inv, 0.0);
        let ghz = QubitTensor::new(3, coeffs);
        let j1 = kempe_j(1, &ghz).unwrap();
        assert!((j1 - C64::new(1.0, 0.0)).norm() < 1e-14);
        let j2 = kempe_j(2, &ghz).unwrap();
        let j3 = kempe_j(3, &ghz).unwrap();
        let j4 = kempe_j(4, &ghz).unwrap();
        assert!((j2 - j3).norm() < 1e-14);
        assert!((j3 - j4).norm() < 1e-14);
        assert_eq!(kempe_j(6, &ghz).unwrap_err(), NrError::JIndexOutOfRange(6));
    }

    #[test]
    fn j5_closes_on_product_states() {
        // on a full product state the Kempe sum collapses to J1^3
        for seed in 0..10 {
            let t = random_product(seed);
            let j1 = kempe_j(1, &t).unwrap();
            let j5 = kempe_j(5, &t).unwrap();
            assert!((j5 - j1 * j1 * j1).norm() < 1e-12 * j5.norm().max(1.0));
        }
    }

    #[test]
    fn s2_vanishes_on_product_states() {
        for seed in 0..20 {
            let t = random_product(seed);
            assert!(s2(&t).unwrap().norm() < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn s2_ghz_like_closed_form() {
        // only psi000 and psi111 nonzero: the expansion collapses to
        // psi000 psi111 (|psi000|^2 - |psi111|^2)
        let a = C64::new(0.6, 0.2);
        let b = C64::new(-0.3, 0.7);
        let mut coeffs = vec![C64::new(0.0, 0.0); 8];
        coeffs[0] = a;
        coeffs[7] = b;
        let t = QubitTensor::new(3, coeffs);
        let expect = a * b * C64::new(a.norm_sqr() - b.norm_sqr(), 0.0);
        assert!((s2(&t).unwrap() - expect).norm() < 1e-14);
    }

    #[test]
    fn bidegree_scaling_laws() {
        let t = random_qubits(3, 42);
        let lambda = C64::new(0.7, -0.4);
        let scaled = QubitTensor::new(3, t.coefficients().iter().map(|z| z * lambda).collect());
        let l2 = lambda.norm_sqr();
        assert!((kempe_j(1, &scaled).unwrap() - kempe_j(1, &t).unwrap() * l2).norm() < 1e-12);
        for k in 2..=4 {
            let want = kempe_j(k, &t).unwrap() * l2 * l2;
            assert!((kempe_j(k, &scaled).unwrap() - want).norm() < 1e-11);
        }
        let want5 = kempe_j(5, &t).unwrap() * l2 * l2 * l2;
        assert!((kempe_j(5, &scaled).unwrap() - want5).norm() < 1e-11);
        let want_s2 = s2(&t).unwrap() * lambda * lambda * lambda * lambda.conj();
        assert!((s2(&scaled).unwrap() - want_s2).norm() < 1e-12);

        let two = random_qubits(2, 7);
        let scaled2 = QubitTensor::new(2, two.coefficients().iter().map(|z| z * lambda).collect());
        let want_c = wootters_concurrence(&two).unwrap() * lambda * lambda;
        assert!((wootters_concurrence(&scaled2).unwrap() - want_c).norm() < 1e-13);
    }

    #[test]
    fn local_unitary_invariance() {
        let t = random_qubits(3, 9);
        let mut u = t.clone();
        for qubit in 0..3 {
            u = u.apply_local(qubit, &random_local_unitary(100 + qubit as u64));
        }
        for k in 1..=5 {
            let a = kempe_j(k, &t).unwrap();
            let b = kempe_j(k, &u).unwrap();
            assert!(
                (a - b).norm() < 1e-10 * a.norm().max(1.0),
                "J{k}: {a} vs {b}"
            );
        }
        // the concurrence picks up the determinant of each local map, so pull
        // it out rather than restricting the sampler to special unitaries
        let two = random_qubits(2, 13);
        let mut v = two.clone();
        let mut det_product = C64::new(1.0, 0.0);
        for qubit in 0..2 {
            let m = random_local_unitary(200 + qubit as u64);
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            det_product *= det;
            v = v.apply_local(qubit, &m);
        }
        let a = wootters_concurrence(&two).unwrap();
        let b = wootters_concurrence(&v).unwrap();
        assert!((b - a * det_product).norm() < 1e-11 * a.norm().max(1.0));
    }
}
