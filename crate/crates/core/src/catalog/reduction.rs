//! Reductions onto energy subspaces and chirality blocks.
//!
//! States supported in local positive/negative-energy blocks carry only a
//! 2^n-coefficient subtensor; on those states each catalog invariant reduces
//! to a fixed non-relativistic spin-1/2 polynomial up to a constant. The
//! constant (a sign, possibly times i) is fitted once per invariant and
//! frozen as a regression value by the callers; only the target formula and
//! the post-fit residual are asserted a priori.

use num_complex::Complex64 as C64;

use super::{catalog, CatalogError};
use crate::gamma::ProjectorKind;
use crate::nr::{kempe_j, s2, wootters_concurrence, QubitTensor};
use crate::state::StateTensor;

/// The non-relativistic target of one invariant on energy blocks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ReductionTarget {
    Zero,
    /// Two qubits: the concurrence bilinear.
    Concurrence,
    /// Two qubits: |concurrence|^2.
    ConcurrenceAbsSq,
    /// Two qubits: 2 |concurrence|^2.
    TwoConcurrenceAbsSq,
    /// Two qubits: concurrence times the squared norm.
    ConcurrenceTimesNorm,
    /// Three qubits: a combination of J2, J3, J4 and J1^2 with the given
    /// coefficients.
    JCombo {
        j2: f64,
        j3: f64,
        j4: f64,
        j1sq: f64,
    },
    /// Three qubits: i times the s2 polynomial.
    ITimesS2,
    /// Three qubits: J5 - J1^3.
    Kempe,
    /// Three qubits: -2/3 J5 + 1/2 (J2+J3+J4) J1 - 5/6 J1^3.
    WCombo,
}

/// Energy-block target of a named invariant. Names not listed reduce to
/// zero on energy blocks.
pub fn energy_target(name: &str) -> ReductionTarget {
    use ReductionTarget::*;
    match name {
        "I1" => Concurrence,
        "R1" | "R4" => ConcurrenceAbsSq,
        "T1" => TwoConcurrenceAbsSq,
        "I1N1" => ConcurrenceTimesNorm,
        "I1I1c" => ConcurrenceAbsSq,
        "B03_1" => JCombo {
            j2: 1.0,
            j3: 0.0,
            j4: 0.0,
            j1sq: -1.0,
        },
        "D03_1" => JCombo {
            j2: 0.0,
            j3: 1.0,
            j4: 0.0,
            j1sq: -1.0,
        },
        "Z03_1" => JCombo {
            j2: 0.0,
            j3: 0.0,
            j4: 1.0,
            j1sq: -1.0,
        },
        "B21_1" => JCombo {
            j2: 1.0,
            j3: -1.0,
            j4: -1.0,
            j1sq: 1.0,
        },
        "D21_1" => JCombo {
            j2: -1.0,
            j3: 1.0,
            j4: -1.0,
            j1sq: 1.0,
        },
        "Z21_1" => JCombo {
            j2: -1.0,
            j3: -1.0,
            j4: 1.0,
            j1sq: 1.0,
        },
        "B12_1" => JCombo {
            j2: -1.0,
            j3: 0.0,
            j4: 0.0,
            j1sq: 1.0,
        },
        "D12_1" => JCombo {
            j2: 0.0,
            j3: -1.0,
            j4: 0.0,
            j1sq: 1.0,
        },
        "Z12_1" => JCombo {
            j2: 0.0,
            j3: 0.0,
            j4: -1.0,
            j1sq: 1.0,
        },
        // the three asymmetric members reduce to pairwise J differences;
        // the assignment below is the one the least-squares fit over block
        // states closes on (the stated assignment rotates the three labels
        // and leaves O(1) residuals)
        "X12A_1" => JCombo {
            j2: -1.0,
            j3: 0.0,
            j4: 1.0,
            j1sq: 0.0,
        },
        "X12B_1" => JCombo {
            j2: 0.0,
            j3: -1.0,
            j4: 1.0,
            j1sq: 0.0,
        },
        "X12C_1" => JCombo {
            j2: 1.0,
            j3: -1.0,
            j4: 0.0,
            j1sq: 0.0,
        },
        "B1" | "Z1" | "D1" => ITimesS2,
        "K1" => Kempe,
        "W1" => WCombo,
        _ => Zero,
    }
}

fn eval_target(target: ReductionTarget, q: &QubitTensor) -> C64 {
    use ReductionTarget::*;
    match target {
        Zero => C64::new(0.0, 0.0),
        Concurrence => wootters_concurrence(q).expect("two qubits"),
        ConcurrenceAbsSq => {
            let c = wootters_concurrence(q).expect("two qubits");
            c * c.conj()
        }
        TwoConcurrenceAbsSq => {
            let c = wootters_concurrence(q).expect("two qubits");
            c * c.conj() * 2.0
        }
        ConcurrenceTimesNorm => {
            let c = wootters_concurrence(q).expect("two qubits");
            c * q.norm_sqr()
        }
        JCombo { j2, j3, j4, j1sq } => {
            let j1 = kempe_j(1, q).expect("three qubits");
            kempe_j(2, q).unwrap() * j2
                + kempe_j(3, q).unwrap() * j3
                + kempe_j(4, q).unwrap() * j4
                + j1 * j1 * j1sq
        }
        ITimesS2 => C64::new(0.0, 1.0) * s2(q).expect("three qubits"),
        Kempe => {
            let j1 = kempe_j(1, q).unwrap();
            kempe_j(5, q).unwrap() - j1 * j1 * j1
        }
        WCombo => {
            let j1 = kempe_j(1, q).unwrap();
            let jsum = kempe_j(2, q).unwrap() + kempe_j(3, q).unwrap() + kempe_j(4, q).unwrap();
            kempe_j(5, q).unwrap() * (-2.0 / 3.0) + jsum * j1 * 0.5 - j1 * j1 * j1 * (5.0 / 6.0)
        }
    }
}

/// Draw a normalized random state supported in the given block per particle.
pub fn random_block_state(
    blocks: &[ProjectorKind],
    seed: u64,
) -> Result<StateTensor<f64>, CatalogError> {
    let n = blocks.len();
    let raw = StateTensor::random(n, seed).expect("particle count in range");
    let mut s = raw;
    for (p, kind) in blocks.iter().enumerate() {
        s = s.project_local(p, *kind).expect("particle index valid");
    }
    let norm = s.norm();
    Ok(s.scaled(C64::new(1.0 / norm, 0.0)))
}

/// Extract the 2^n-coefficient block of a state supported in energy blocks,
/// relabelling local indices {0,1} (positive block) or {2,3} (negative
/// block) to qubit indices {0,1} in order.
pub fn extract_block(s: &StateTensor<f64>, blocks: &[ProjectorKind]) -> QubitTensor {
    let n = s.particles();
    debug_assert_eq!(blocks.len(), n);
    let offset: Vec<usize> = blocks
        .iter()
        .map(|b| match b {
            ProjectorKind::Pplus => 0,
            ProjectorKind::Pminus => 2,
            _ => panic!("chirality blocks have no direct index embedding"),
        })
        .collect();
    let mut coeffs = vec![C64::new(0.0, 0.0); 1 << n];
    let mut dirac = vec![0usize; n];
    for flat in 0..(1usize << n) {
        for (p, d) in dirac.iter_mut().enumerate() {
            let bit = (flat >> (n - 1 - p)) & 1;
            *d = offset[p] + bit;
        }
        coeffs[flat] = s.get(&dirac);
    }
    QubitTensor::new(n, coeffs)
}

/// Result of fitting one invariant against its block-reduction target.
#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub name: String,
    pub blocks: Vec<ProjectorKind>,
    pub target: ReductionTarget,
    /// The fitted constant; present when the target is not identically zero.
    pub constant: Option<C64>,
    /// Max over states of |value - c target| / scale after fitting, or
    /// max |value| for zero targets.
    pub max_residual: f64,
    pub states: usize,
}

/// Evaluate one invariant on random block states and fit the proportionality
/// constant against its target formula.
pub fn reduce_energy_subspace(
    name: &str,
    blocks: &[ProjectorKind],
    n_states: usize,
    seed: u64,
) -> Result<ReductionReport, CatalogError> {
    let cat = catalog();
    let entry = cat.get(name)?;
    assert_eq!(entry.particles, blocks.len(), "one block per particle");
    let target = energy_target(name);

    let mut pairs = Vec::with_capacity(n_states);
    for k in 0..n_states {
        let s = random_block_state(blocks, seed.wrapping_add(k as u64))?;
        let v = cat.eval(name, &s)?;
        let q = extract_block(&s, blocks);
        let t = eval_target(target, &q);
        pairs.push((v, t));
    }

    let constant = if target == ReductionTarget::Zero {
        None
    } else {
        pairs
            .iter()
            .find(|(_, t)| t.norm() > 1e-6)
            .map(|(v, t)| v / t)
    };
    let mut max_residual: f64 = 0.0;
    for (v, t) in &pairs {
        let r = match constant {
            Some(c) => (v - c * t).norm() / v.norm().max(t.norm()).max(1.0),
            None => v.norm(),
        };
        max_residual = max_residual.max(r);
    }
    Ok(ReductionReport {
        name: name.to_string(),
        blocks: blocks.to_vec(),
        target,
        constant,
        max_residual,
        states: n_states,
    })
}

/// Max |value| of an invariant over random chirality-projected states.
pub fn weyl_residual(
    name: &str,
    blocks: &[ProjectorKind],
    n_states: usize,
    seed: u64,
) -> Result<f64, CatalogError> {
    let cat = catalog();
    let mut worst: f64 = 0.0;
    for k in 0..n_states {
        let s = random_block_state(blocks, seed.wrapping_add(k as u64))?;
        worst = worst.max(cat.eval(name, &s)?.norm());
    }
    Ok(worst)
}
