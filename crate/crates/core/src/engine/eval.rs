//! Pattern evaluation: the brute-force oracle sum and the planned executor.

use thiserror::Error;

use super::pattern::ContractionPattern;
use super::plan::{plan, EvaluationPlan, PlanStep};
use crate::mat4::Mat4;
use crate::scalar::{czero, Real, C};
use crate::state::StateTensor;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("pattern is for {pattern} particles but the state has {state}")]
    ParticleMismatch { pattern: usize, state: usize },
}

fn check_particles<R: Real>(p: &ContractionPattern, s: &StateTensor<R>) -> Result<(), EvalError> {
    if p.particles() != s.particles() {
        return Err(EvalError::ParticleMismatch {
            pattern: p.particles(),
            state: s.particles(),
        });
    }
    Ok(())
}

/// The oracle evaluator: the full sum over all index assignments 0..3.
///
/// The assignment space is exactly the product over pairings of their
/// (row, col) value pairs, since every index letter belongs to exactly one
/// pairing endpoint. Subtrees whose accumulated sandwich weight is exactly
/// zero are skipped; with sandwich entries in {0, +-1, +-i} this drops terms
/// that are identically zero and is an exact reorganization of the full sum.
pub fn evaluate_naive<R: Real>(
    p: &ContractionPattern,
    s: &StateTensor<R>,
) -> Result<C<R>, EvalError> {
    check_particles(p, s)?;
    let n = p.particles();
    let sandwiches: Vec<Mat4<R>> = p.pairings().iter().map(|q| q.sandwich.matrix()).collect();
    let mut indices = vec![vec![0usize; n]; p.factors().len()];
    let mut total = czero();
    let zero = czero::<R>();

    fn rec<R: Real>(
        depth: usize,
        weight: C<R>,
        p: &ContractionPattern,
        s: &StateTensor<R>,
        sandwiches: &[Mat4<R>],
        indices: &mut [Vec<usize>],
        total: &mut C<R>,
        zero: &C<R>,
        n: usize,
    ) {
        if depth == p.pairings().len() {
            let mut term = weight;
            for (f, factor) in p.factors().iter().enumerate() {
                let v = s.get(&indices[f]);
                term *= if factor.conjugated { v.conj() } else { v };
            }
            *total += term;
            return;
        }
        let pairing = &p.pairings()[depth];
        for r in 0..4 {
            for c in 0..4 {
                let w = sandwiches[depth][(r, c)];
                if w == *zero {
                    continue;
                }
                indices[pairing.row.factor][pairing.row.slot] = r;
                indices[pairing.col.factor][pairing.col.slot] = c;
                rec(
                    depth + 1,
                    weight * w,
                    p,
                    s,
                    sandwiches,
                    indices,
                    total,
                    zero,
                    n,
                );
            }
        }
    }

    rec(
        0,
        C::new(R::one(), R::zero()),
        p,
        s,
        &sandwiches,
        &mut indices,
        &mut total,
        &zero,
        n,
    );
    Ok(total)
}

/// Dense tensor with all axis dimensions equal to 4, axes labeled by pairing
/// id. Row-major with the last axis fastest.
struct DTensor<R: Real> {
    axes: Vec<usize>,
    data: Vec<C<R>>,
}

impl<R: Real> DTensor<R> {
    fn rank(&self) -> usize {
        self.axes.len()
    }

    fn scalar(&self) -> C<R> {
        debug_assert_eq!(self.data.len(), 1);
        self.data[0]
    }

    /// Contract the sandwich matrix into the axis labeled `label`:
    /// out[.. r ..] = sum_c M[r, c] in[.. c ..].
    fn absorb(&mut self, label: usize, m: &Mat4<R>) {
        let k = self
            .axes
            .iter()
            .position(|&a| a == label)
            .expect("absorb axis present");
        let stride = 1usize << (2 * (self.rank() - 1 - k));
        let block = stride * 4;
        let mut old = [czero::<R>(); 4];
        for base in (0..self.data.len()).step_by(block) {
            for off in 0..stride {
                for j in 0..4 {
                    old[j] = self.data[base + j * stride + off];
                }
                for j in 0..4 {
                    let mut acc = czero();
                    for c in 0..4 {
                        acc += m[(j, c)] * old[c];
                    }
                    self.data[base + j * stride + off] = acc;
                }
            }
        }
    }

    /// Reorder axes to the given new order (a permutation of self.axes).
    fn permuted(&self, new_axes: &[usize]) -> DTensor<R> {
        if new_axes == self.axes.as_slice() {
            return DTensor {
                axes: self.axes.clone(),
                data: self.data.clone(),
            };
        }
        let rank = self.rank();
        let positions: Vec<usize> = new_axes
            .iter()
            .map(|a| self.axes.iter().position(|b| b == a).expect("axis present"))
            .collect();
        let old_strides: Vec<usize> = (0..rank).map(|k| 1usize << (2 * (rank - 1 - k))).collect();
        let mut data = vec![czero(); self.data.len()];
        let mut idx = vec![0usize; rank];
        for (flat, slot) in data.iter_mut().enumerate() {
            let mut f = flat;
            for k in (0..rank).rev() {
                idx[k] = f & 3;
                f >>= 2;
            }
            let mut old_flat = 0usize;
            for k in 0..rank {
                old_flat += idx[k] * old_strides[positions[k]];
            }
            *slot = self.data[old_flat];
        }
        DTensor {
            axes: new_axes.to_vec(),
            data,
        }
    }

    /// Contract two tensors over their shared axes.
    fn contract(a: &DTensor<R>, b: &DTensor<R>, shared: &[usize]) -> DTensor<R> {
        let kept_a: Vec<usize> = a
            .axes
            .iter()
            .filter(|x| !shared.contains(x))
            .cloned()
            .collect();
        let kept_b: Vec<usize> = b
            .axes
            .iter()
            .filter(|x| !shared.contains(x))
            .cloned()
            .collect();
        let mut order_a = kept_a.clone();
        order_a.extend_from_slice(shared);
        let mut order_b = kept_b.clone();
        order_b.extend_from_slice(shared);
        let pa = a.permuted(&order_a);
        let pb = b.permuted(&order_b);
        let na = 1usize << (2 * kept_a.len());
        let nb = 1usize << (2 * kept_b.len());
        let ns = 1usize << (2 * shared.len());
        let mut data = vec![czero(); na * nb];
        for ia in 0..na {
            for ib in 0..nb {
                let mut acc = czero();
                for is in 0..ns {
                    acc += pa.data[ia * ns + is] * pb.data[ib * ns + is];
                }
                data[ia * nb + ib] = acc;
            }
        }
        let mut axes = kept_a;
        axes.extend_from_slice(&kept_b);
        DTensor { axes, data }
    }
}

/// Execute a plan produced by [`plan`] for this pattern.
pub fn execute_plan<R: Real>(
    plan: &EvaluationPlan,
    p: &ContractionPattern,
    s: &StateTensor<R>,
) -> Result<C<R>, EvalError> {
    check_particles(p, s)?;
    let n = p.particles();

    // axis label of (factor, slot) = id of the unique pairing touching it
    let mut axis_of = vec![vec![usize::MAX; n]; p.factors().len()];
    for (pid, q) in p.pairings().iter().enumerate() {
        axis_of[q.row.factor][q.row.slot] = pid;
        axis_of[q.col.factor][q.col.slot] = pid;
    }

    let mut nodes: Vec<Option<DTensor<R>>> = p
        .factors()
        .iter()
        .enumerate()
        .map(|(f, factor)| {
            let data: Vec<C<R>> = if factor.conjugated {
                s.coefficients().iter().map(|z| z.conj()).collect()
            } else {
                s.coefficients().to_vec()
            };
            Some(DTensor {
                axes: axis_of[f].clone(),
                data,
            })
        })
        .collect();

    for step in plan.steps() {
        match step {
            PlanStep::Absorb { pairing } => {
                let q = &p.pairings()[*pairing];
                let m = q.sandwich.matrix::<R>();
                nodes[q.col.factor]
                    .as_mut()
                    .expect("absorb target alive")
                    .absorb(*pairing, &m);
            }
            PlanStep::Merge { a, b, shared, .. } => {
                let ta = nodes[*a].take().expect("merge source alive");
                let tb = nodes[*b].take().expect("merge source alive");
                let merged = DTensor::contract(&ta, &tb, shared);
                nodes.push(Some(merged));
            }
        }
    }

    let mut result = C::new(R::one(), R::zero());
    let mut found = false;
    for node in nodes.into_iter().flatten() {
        debug_assert_eq!(node.rank(), 0);
        result *= node.scalar();
        found = true;
    }
    debug_assert!(found);
    Ok(result)
}

/// Evaluate through the planner. Agrees with [`evaluate_naive`] to relative
/// 1e-10; the oracle remains the reference.
pub fn evaluate<R: Real>(p: &ContractionPattern, s: &StateTensor<R>) -> Result<C<R>, EvalError> {
    let plan = plan(p);
    execute_plan(&plan, p, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::parse;
    use crate::scalar::rel_err;

    const V1: &str = "g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]";

    #[test]
    fn v1_on_basis_000_is_one() {
        let p = parse(V1).unwrap();
        let s = StateTensor::<f64>::basis_state(&[0, 0, 0]).unwrap();
        let v = evaluate_naive(&p, &s).unwrap();
        assert!((v - C::new(1.0, 0.0)).norm() < 1e-15);
        let w = evaluate(&p, &s).unwrap();
        assert!((w - v).norm() < 1e-15);
    }

    #[test]
    fn particle_mismatch_is_reported() {
        let p = parse(V1).unwrap();
        let s = StateTensor::<f64>::basis_state(&[0, 0]).unwrap();
        assert_eq!(
            evaluate_naive(&p, &s).unwrap_err(),
            EvalError::ParticleMismatch {
                pattern: 3,
                state: 2
            }
        );
    }

    #[test]
    fn two_zero_bidegree_patterns_vanish_on_three_particles() {
        // bidegree (2,0) sandwich contractions vanish identically by the
        // antisymmetry of C and C gamma5
        let texts = [
            "C[i l] C[j m] C[k n] Psi[i j k] Psi[l m n]",
            "C5[i l] C[j m] C5[k n] Psi[i j k] Psi[l m n]",
        ];
        for text in texts {
            let p = parse(text).unwrap();
            for seed in 0..5 {
                let s = StateTensor::<f64>::random(3, seed).unwrap();
                let v = evaluate_naive(&p, &s).unwrap();
                assert!(v.norm() < 1e-12, "{text} gave {v}");
            }
        }
    }

    #[test]
    fn planner_matches_oracle_on_random_states() {
        let texts = [
            V1,
            "C[j m] Psi[j k] Psi[m n] C[k n]",
            "g0[i j] C[m k] C[n l] Psi[j k l] Psi[q m n] g0[q r] C[p s] C[u t] Psi*[r s t] Psi*[i p u]",
        ];
        for text in texts {
            let p = parse(text).unwrap();
            for seed in 0..10 {
                let s = StateTensor::<f64>::random(p.particles(), seed).unwrap();
                let a = evaluate_naive(&p, &s).unwrap();
                let b = evaluate(&p, &s).unwrap();
                assert!(rel_err(a, b) < 1e-12, "{text}: {a} vs {b}");
            }
        }
    }
}
