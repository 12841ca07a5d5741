//! Greedy pairwise-contraction planning.
//!
//! Every pairing's sandwich matrix is first absorbed into its column factor,
//! which turns the pattern into a plain tensor network. Nodes are then merged
//! pairwise, smallest resulting tensor first. Optimal contraction ordering is
//! out of scope; the oracle evaluator guarantees correctness regardless.

use super::pattern::ContractionPattern;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanStep {
    /// Contract the sandwich matrix of this pairing into its column factor.
    Absorb { pairing: usize },
    /// Contract nodes `a` and `b` over the listed pairing axes. Node ids:
    /// 0..factors are the leaves, merges append new ids in order.
    Merge {
        a: usize,
        b: usize,
        shared: Vec<usize>,
        cost: u128,
    },
}

/// An executable contraction order with cost estimates (complex
/// multiplications, all index dimensions are 4).
#[derive(Clone, Debug)]
pub struct EvaluationPlan {
    steps: Vec<PlanStep>,
    estimated_flops: u128,
    naive_flops: u128,
}

impl EvaluationPlan {
    pub fn steps(&self) -> &[PlanStep] {
        &self.steps
    }

    /// Estimated multiplications when executing this plan.
    pub fn estimated_flops(&self) -> u128 {
        self.estimated_flops
    }

    /// Multiplications of the brute-force sum over all index assignments:
    /// (pairings + factors - 1) per assignment, 4^(2 pairings) assignments.
    pub fn naive_flops(&self) -> u128 {
        self.naive_flops
    }
}

fn pow4(k: usize) -> u128 {
    1u128 << (2 * k as u32)
}

/// Plan a pattern: absorb steps for every pairing, then greedy pairwise
/// merges picking the smallest intermediate tensor (ties by cost, then by
/// node id for determinism).
pub fn plan(p: &ContractionPattern) -> EvaluationPlan {
    let n = p.particles();
    let mut steps = Vec::new();
    let mut estimated: u128 = 0;

    for pid in 0..p.pairings().len() {
        steps.push(PlanStep::Absorb { pairing: pid });
        estimated += pow4(n + 1);
    }

    // live nodes: (node id, axis labels)
    let mut nodes: Vec<(usize, Vec<usize>)> = Vec::new();
    for (f, _) in p.factors().iter().enumerate() {
        let mut axes = Vec::new();
        for (pid, q) in p.pairings().iter().enumerate() {
            if q.row.factor == f || q.col.factor == f {
                axes.push(pid);
            }
        }
        nodes.push((f, axes));
    }
    let mut next_id = p.factors().len();

    while nodes.len() > 1 {
        let mut best: Option<(usize, usize, usize, u128)> = None; // (i, j, result_rank, cost)
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                let shared = nodes[i].1.iter().filter(|a| nodes[j].1.contains(a)).count();
                let ra = nodes[i].1.len();
                let rb = nodes[j].1.len();
                let result_rank = ra + rb - 2 * shared;
                let cost = pow4(ra + rb - shared);
                let connected = shared > 0;
                let candidate = (i, j, result_rank, cost);
                let better = match &best {
                    None => true,
                    Some((bi, bj, brank, bcost)) => {
                        let best_connected = nodes[*bi].1.iter().any(|a| nodes[*bj].1.contains(a));
                        if connected != best_connected {
                            connected
                        } else {
                            (result_rank, cost) < (*brank, *bcost)
                        }
                    }
                };
                if better {
                    best = Some(candidate);
                }
            }
        }
        let (i, j, _, cost) = best.expect("at least one merge candidate");
        let shared: Vec<usize> = nodes[i]
            .1
            .iter()
            .filter(|a| nodes[j].1.contains(a))
            .cloned()
            .collect();
        let mut axes: Vec<usize> = nodes[i]
            .1
            .iter()
            .filter(|a| !shared.contains(a))
            .cloned()
            .collect();
        axes.extend(nodes[j].1.iter().filter(|a| !shared.contains(a)).cloned());
        steps.push(PlanStep::Merge {
            a: nodes[i].0,
            b: nodes[j].0,
            shared,
            cost,
        });
        estimated += cost;
        let (id_j, _) = nodes.remove(j);
        let (id_i, _) = nodes.remove(i);
        let _ = (id_i, id_j);
        nodes.push((next_id, axes));
        next_id += 1;
    }

    let pairings = p.pairings().len();
    let factors = p.factors().len();
    let naive = (pairings as u128 + factors as u128 - 1) * pow4(2 * pairings);

    EvaluationPlan {
        steps,
        estimated_flops: estimated,
        naive_flops: naive,
    }
}
