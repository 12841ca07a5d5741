//! Property and verification suites shared by the command-line `check`
//! command and the acceptance tests. Every tolerance is pinned here.

use num_complex::Complex64 as C64;

use crate::analysis::{numeric_rank, weight_vectors, SUPPORT_EPSILON};
use crate::catalog::reduction::{
    energy_target, reduce_energy_subspace, weyl_residual, ReductionTarget,
};
use crate::catalog::{catalog, EvalMode, Expr};
use crate::dynamics::{
    evolve, form_along, form_evolution_residual, invariant_evolution_check, EvolutionParams,
    EvolvedInvariant, FormLaw, Potentials,
};
use crate::engine::{self, ContractionPattern};
use crate::forms::{bilinear, sesquilinear, BilinearKind, SesquilinearKind};
use crate::gamma::{g, gamma5, metric, projector, special, ProjectorKind, Special};
use crate::lorentz::{
    form_invariance_algebra, random_proper_orthochronous, shared_invariance_algebra, FormKind,
};
use crate::mat4::Mat4;
use crate::scalar::{c, rel_err};
use crate::spinor::Spinor;
use crate::state::examples::{all_catalog_states, catalog_state};
use crate::state::StateTensor;

/// One named check: a residual against a tolerance.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    fn push(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.checks.push(Check {
            name: name.into(),
            residual,
            tolerance,
        });
    }
}

fn new_report(suite: &'static str) -> SuiteReport {
    SuiteReport {
        suite,
        checks: Vec::new(),
    }
}

fn random_spinor(seed: u64) -> Spinor<f64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut s = Spinor::zero();
    for k in 0..4 {
        s[k] = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    }
    s
}

/// Gamma-algebra identities, projector rules and the form-invariance
/// algebras, all at 1e-12.
pub fn algebra_suite() -> SuiteReport {
    let mut rep = new_report("algebra");
    let tol = 1e-12;

    let mut clifford: f64 = 0.0;
    let mut conj_g0: f64 = 0.0;
    let mut conj_c: f64 = 0.0;
    let mut g5_anti: f64 = 0.0;
    let cc = special::<f64>(Special::C);
    let g5 = gamma5::<f64>();
    for mu in 0..4 {
        for nu in 0..4 {
            let anti = g::<f64>(mu) * g(nu) + g::<f64>(nu) * g(mu);
            let expect = Mat4::identity().scale(c(2.0 * metric::<f64>(mu, nu), 0.0));
            clifford = clifford.max(anti.max_diff(&expect));
        }
        conj_g0 = conj_g0.max((g::<f64>(0) * g(mu) * g(0)).max_diff(&g::<f64>(mu).dagger()));
        conj_c = conj_c.max((cc * g(mu) * cc).max_diff(&g::<f64>(mu).transpose()));
        g5_anti = g5_anti.max((g5 * g(mu) + g::<f64>(mu) * g5).max_norm());
    }
    rep.push("clifford_relations", clifford, tol);
    rep.push("gamma0_conjugation", conj_g0, tol);
    rep.push("c_conjugation", conj_c, tol);
    rep.push("gamma5_anticommutation", g5_anti, tol);

    let c5 = special::<f64>(Special::C5);
    rep.push("c_antisymmetry", (cc.transpose() + cc).max_norm(), tol);
    rep.push("c5_antisymmetry", (c5.transpose() + c5).max_norm(), tol);
    let g05 = special::<f64>(Special::G05);
    rep.push(
        "g0_real_symmetric",
        (g::<f64>(0).transpose() - g(0)).max_norm() + (g::<f64>(0).conj() - g(0)).max_norm(),
        tol,
    );
    rep.push(
        "g05_real_antisymmetric",
        (g05.transpose() + g05).max_norm() + (g05.conj() - g05).max_norm(),
        tol,
    );

    let mut kill: f64 = 0.0;
    for p in [ProjectorKind::Pplus, ProjectorKind::Pminus] {
        let pm = projector::<f64>(p);
        kill = kill.max((pm * c5 * pm).max_norm());
        kill = kill.max((pm * g05 * pm).max_norm());
    }
    for p in [ProjectorKind::PL, ProjectorKind::PR] {
        let pm = projector::<f64>(p);
        kill = kill.max((pm * g::<f64>(0) * pm).max_norm());
        kill = kill.max((pm * g05 * pm).max_norm());
    }
    rep.push("projector_kill_rules", kill, tol);

    for kind in [FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05] {
        let m = kind.matrix::<f64>();
        let mut worst: f64 = 0.0;
        for gen in form_invariance_algebra::<f64>(kind) {
            let lhs = if kind.is_bilinear() {
                gen.transpose() * m + m * gen
            } else {
                gen.dagger() * m + m * gen
            };
            worst = worst.max(lhs.max_norm());
        }
        rep.push(format!("invariance_algebra_{kind:?}"), worst, tol);
    }
    let mut shared: f64 = 0.0;
    for gen in shared_invariance_algebra::<f64>() {
        for kind in [FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05] {
            let m = kind.matrix::<f64>();
            let lhs = if kind.is_bilinear() {
                gen.transpose() * m + m * gen
            } else {
                gen.dagger() * m + m * gen
            };
            shared = shared.max(lhs.max_norm());
        }
    }
    rep.push("shared_invariance_algebra", shared, tol);
    rep
}

/// Invariance of the four forms (100 samples) and of every catalog invariant
/// (20 states x 5 transformations), 1e-8 relative.
pub fn invariance_suite(seed: u64) -> SuiteReport {
    let mut rep = new_report("invariance");
    let tol = 1e-8;

    let mut worst_forms = [0.0f64; 4];
    for k in 0..100u64 {
        let s = random_proper_orthochronous::<f64>(seed.wrapping_add(k), 1.0);
        let psi = random_spinor(seed.wrapping_add(1000 + k));
        let phi = random_spinor(seed.wrapping_add(2000 + k));
        let spsi = s * psi;
        let sphi = s * phi;
        let vals = [
            (
                bilinear(BilinearKind::C, &psi, &phi),
                bilinear(BilinearKind::C, &spsi, &sphi),
            ),
            (
                bilinear(BilinearKind::C5, &psi, &phi),
                bilinear(BilinearKind::C5, &spsi, &sphi),
            ),
            (
                sesquilinear(SesquilinearKind::G0, &psi, &phi),
                sesquilinear(SesquilinearKind::G0, &spsi, &sphi),
            ),
            (
                sesquilinear(SesquilinearKind::G05, &psi, &phi),
                sesquilinear(SesquilinearKind::G05, &spsi, &sphi),
            ),
        ];
        for (w, (a, b)) in worst_forms.iter_mut().zip(vals) {
            *w = w.max(rel_err(a, b));
        }
    }
    for (label, w) in ["form_C", "form_C5", "form_G0", "form_G05"]
        .iter()
        .zip(worst_forms)
    {
        rep.push(*label, w, tol);
    }

    let cat = catalog();
    for name in cat.names() {
        let entry = cat.get(name).expect("known");
        let mut worst: f64 = 0.0;
        for ks in 0..20u64 {
            let s = StateTensor::random(entry.particles, seed.wrapping_add(3000 + ks))
                .expect("in range");
            let before = cat.eval(name, &s).expect("evaluates");
            for kt in 0..5u64 {
                let mut t = s.clone();
                for p in 0..entry.particles {
                    let m = random_proper_orthochronous::<f64>(
                        seed.wrapping_add(4000 + 97 * ks + 13 * kt + p as u64),
                        1.0,
                    );
                    t = t.apply_local(p, &m).expect("in range");
                }
                let after = cat.eval(name, &t).expect("evaluates");
                worst = worst.max(rel_err(before, after));
            }
        }
        rep.push(format!("invariant_{name}"), worst, tol);
    }
    rep
}

/// Every expected magnitude of every example state, 1e-9 absolute.
pub fn examples_suite() -> SuiteReport {
    let mut rep = new_report("examples");
    let tol = 1e-9;
    let cat = catalog();
    for (state_name, entry) in all_catalog_states() {
        for exp in &entry.expected {
            let v = cat.eval(exp.invariant, &entry.state).expect("evaluates");
            rep.push(
                format!("{state_name}/{}", exp.invariant),
                (v.norm() - exp.abs).abs(),
                tol,
            );
        }
    }
    rep
}

/// The twelve linear dependencies of the 32-member family, 1e-9.
pub fn dependencies_suite(seed: u64) -> SuiteReport {
    let mut rep = new_report("dependencies");
    let tol = 1e-9;
    for (label, residual) in catalog()
        .dependency_residuals(20, seed)
        .expect("catalog evaluates")
    {
        rep.push(label, residual, tol);
    }
    rep
}

/// Span ranks of the four families (exact integer checks).
pub fn rank_suite(seed: u64) -> SuiteReport {
    let mut rep = new_report("rank");
    let cat = catalog();
    let cases: [(&str, usize, Option<(u32, u32)>, usize); 4] = [
        ("2p_22_family", 2, Some((2, 2)), 27),
        ("2p_31_family", 2, Some((3, 1)), 20),
        ("3p_22_selection", 3, Some((2, 2)), 21),
        ("3p_31_family", 3, Some((3, 1)), 20),
    ];
    for (label, particles, bidegree, expected) in cases {
        let names = cat.list(particles, bidegree);
        let report =
            numeric_rank(&names, 2 * names.len() + 10, seed, 1e-8).expect("rank evaluates");
        rep.push(
            format!("{label}_rank_{expected}"),
            (report.rank as f64 - expected as f64).abs(),
            0.5,
        );
    }
    rep
}

fn patterns_of(expr: &Expr, out: &mut Vec<ContractionPattern>) {
    match expr {
        Expr::Pattern(p) => out.push((**p).clone()),
        Expr::Named(_) => {}
        Expr::Scale(_, inner) | Expr::Conj(inner) => patterns_of(inner, out),
        Expr::Sum(v) | Expr::Prod(v) => v.iter().for_each(|e| patterns_of(e, out)),
    }
}

/// Planner-vs-oracle equivalence on every named pattern, and the transcribed
/// expansions against the trace forms, both at 1e-10.
pub fn oracle_suite(seed: u64) -> SuiteReport {
    let mut rep = new_report("oracle");
    let tol = 1e-10;
    let cat = catalog();

    let mut patterns: Vec<(String, ContractionPattern)> = Vec::new();
    for name in cat.names() {
        let entry = cat.get(name).expect("known");
        let mut collected = Vec::new();
        patterns_of(&entry.primary, &mut collected);
        for alt in &entry.alt_forms {
            patterns_of(alt, &mut collected);
        }
        for (k, p) in collected.into_iter().enumerate() {
            patterns.push((format!("{name}[{k}]"), p));
        }
    }
    for (label, pattern) in &patterns {
        let mut worst: f64 = 0.0;
        for k in 0..20u64 {
            let s =
                StateTensor::random(pattern.particles(), seed.wrapping_add(k)).expect("in range");
            let naive = engine::evaluate_naive(pattern, &s).expect("evaluates");
            let planned = engine::evaluate(pattern, &s).expect("evaluates");
            worst = worst.max(rel_err(naive, planned));
        }
        rep.push(format!("plan_vs_oracle_{label}"), worst, tol);
    }

    let expanded = [
        "I1",
        "I2",
        "I2A",
        "I2B",
        "R1",
        "R2",
        "R3",
        "R4",
        "R5",
        "R6",
        "T1",
        "T2",
        "Q1",
        "Q2",
        "Q3",
        "Q4",
        "N1N4mN2N3",
    ];
    for name in expanded {
        let mut worst: f64 = 0.0;
        for k in 0..50u64 {
            let s = StateTensor::random(2, seed.wrapping_add(500 + k)).expect("in range");
            let a = cat
                .eval_with(name, &s, EvalMode::Planned)
                .expect("evaluates");
            let b = cat.expansion_oracle(name, &s).expect("transcribed");
            worst = worst.max(rel_err(a, b));
        }
        rep.push(format!("expansion_{name}"), worst, tol);
    }
    rep
}

/// The frozen reduction constants: (name, blocks, expected constant).
/// Targets and the fitting procedure live in the reduction module; these
/// values were computed once and are asserted as regression values.
pub fn frozen_reduction_constants() -> Vec<(&'static str, Vec<ProjectorKind>, C64)> {
    use ProjectorKind::{Pminus as M, Pplus as P};
    let one = C64::new(1.0, 0.0);
    let neg = C64::new(-1.0, 0.0);
    let mut out = vec![
        ("I1", vec![P, P], one),
        ("I1", vec![P, M], one),
        ("I1", vec![M, P], one),
        ("I1", vec![M, M], one),
        ("R1", vec![P, P], one),
        ("R1", vec![M, M], one),
        ("R4", vec![P, P], one),
        ("T1", vec![P, P], neg),
        ("T1", vec![P, M], neg),
        ("I1N1", vec![P, P], one),
        ("I1N1", vec![P, M], neg),
        ("I1N1", vec![M, M], one),
        ("I1I1c", vec![P, P], one),
    ];
    let threes: [(&str, C64); 17] = [
        ("B03_1", one),
        ("D03_1", one),
        ("Z03_1", one),
        ("B21_1", one),
        ("D21_1", one),
        ("Z21_1", one),
        ("B12_1", one),
        ("D12_1", one),
        ("Z12_1", one),
        ("X12A_1", one),
        ("X12B_1", one),
        ("X12C_1", one),
        ("B1", one),
        ("Z1", one),
        ("D1", one),
        ("K1", one),
        ("W1", neg),
    ];
    for (name, cst) in threes {
        out.push((name, vec![P, P, P], cst));
    }
    out
}

/// Energy-subspace reductions with frozen constants (1e-8) and chirality
/// nullity (1e-10).
pub fn reductions_suite(seed: u64) -> SuiteReport {
    let mut rep = new_report("reductions");
    let cat = catalog();

    for (name, blocks, expected_c) in frozen_reduction_constants() {
        let report = reduce_energy_subspace(name, &blocks, 30, seed).expect("reduces");
        let fitted = report.constant.expect("nonzero target");
        let label: String = blocks
            .iter()
            .map(|b| match b {
                ProjectorKind::Pplus => "+",
                ProjectorKind::Pminus => "-",
                _ => "?",
            })
            .collect();
        rep.push(
            format!("constant_{name}_P{label}"),
            (fitted - expected_c).norm(),
            1e-8,
        );
        rep.push(
            format!("residual_{name}_P{label}"),
            report.max_residual,
            1e-8,
        );
    }

    // everything whose target is zero must vanish on energy blocks; the
    // factorizing products with an I1 or N1 factor are nonzero there and
    // carry nonzero targets or are skipped
    for name in cat.names() {
        let entry = cat.get(name).expect("known");
        if energy_target(name) != ReductionTarget::Zero {
            continue;
        }
        if entry.bidegree == (1, 1) {
            continue; // not indicators; nonzero on blocks by construction
        }
        if entry.particles == 2 && is_energy_block_factorizing(name) {
            continue;
        }
        let blocks = vec![ProjectorKind::Pplus; entry.particles];
        let report = reduce_energy_subspace(name, &blocks, 10, seed).expect("reduces");
        rep.push(format!("block_zero_{name}"), report.max_residual, 1e-10);
    }

    // chirality projections null every non-factorizing (2,2)/(3,1)/(3,3)
    // entry
    for name in cat.names() {
        let entry = cat.get(name).expect("known");
        let (k, l) = entry.bidegree;
        if (k, l) != (2, 2) && (k, l) != (3, 1) && (k, l) != (3, 3) {
            continue;
        }
        if entry.particles == 2 && entry.bidegree == (2, 2) && name.starts_with('I') {
            continue; // products of (2,0) x (0,2): nonzero on Weyl states
        }
        for kind in [ProjectorKind::PL, ProjectorKind::PR] {
            let blocks = vec![kind; entry.particles];
            let worst = weyl_residual(name, &blocks, 10, seed).expect("evaluates");
            let side = if kind == ProjectorKind::PL { "L" } else { "R" };
            rep.push(format!("weyl_zero_{name}_{side}"), worst, 1e-10);
        }
    }
    rep
}

/// Products whose factors are individually nonzero on energy blocks.
fn is_energy_block_factorizing(name: &str) -> bool {
    matches!(
        name,
        "I1I1c"
            | "I1I2c"
            | "I1I2Ac"
            | "I1I2Bc"
            | "I2I1c"
            | "I2AI1c"
            | "I2BI1c"
            | "I1N1"
            | "I1N2"
            | "I1N3"
            | "I1N4"
            | "I2N1"
            | "I2AN1"
            | "I2BN1"
    )
}

/// Balancedness verdicts and the vanishing of unequal-bidegree invariants on
/// states that are not affinely balanced.
pub fn balance_suite() -> SuiteReport {
    let mut rep = new_report("balance");
    let cat = catalog();
    let verdicts = [
        ("xccx", false, false),
        ("xccx2", false, false),
        ("xccx3", false, false),
        ("xccx4", false, false),
        ("xccx5", false, false),
        ("xccx6", false, false),
        ("utoy", false, false),
        ("utoya", false, false),
        ("w3", false, false),
        ("req1", false, true),
        ("req2", false, true),
        ("req3", false, true),
    ];
    for (name, balanced, affine) in verdicts {
        let state = catalog_state(name).expect("known").state;
        let w = weight_vectors(&state, SUPPORT_EPSILON).expect("nonempty support");
        rep.push(
            format!("balanced_{name}"),
            if w.balanced == balanced { 0.0 } else { 1.0 },
            0.5,
        );
        rep.push(
            format!("affinely_balanced_{name}"),
            if w.affinely_balanced == affine {
                0.0
            } else {
                1.0
            },
            0.5,
        );
        if !affine {
            let mut worst: f64 = 0.0;
            for inv in cat.list(state.particles(), None) {
                let entry = cat.get(inv).expect("known");
                if entry.bidegree.0 != entry.bidegree.1 {
                    worst = worst.max(cat.eval(inv, &state).expect("evaluates").norm());
                }
            }
            rep.push(format!("unequal_bidegree_zero_{name}"), worst, 1e-10);
        }
    }
    // the affinely balanced state is indicated by mixed members
    let req1 = catalog_state("req1").expect("known").state;
    for name in ["B1", "Z1", "D1", "W1"] {
        let v = cat.eval(name, &req1).expect("evaluates").norm();
        rep.push(
            format!("req1_nonzero_{name}"),
            if v > 1e-3 { 0.0 } else { 1.0 },
            0.5,
        );
    }
    rep
}

/// The dynamical checks: free closed forms, phase laws, single-side
/// invariant constancy, and integrator order.
pub fn dynamics_suite() -> SuiteReport {
    let mut rep = new_report("dynamics");

    let m = 1.3;
    let params = EvolutionParams::free(m, 0.0, 10.0, 1e-3);
    let mut worst: f64 = 0.0;
    for (j, sign) in [(0usize, -1.0), (1, -1.0), (2, 1.0), (3, 1.0)] {
        let traj = evolve(&Spinor::basis(j), &params).expect("evolves");
        for (t, chi) in traj.times.iter().zip(&traj.spinors) {
            let expect = Spinor::basis(j).scale(c(0.0, sign * m * t).exp());
            worst = worst.max(chi.max_diff(&expect));
        }
    }
    rep.push("free_closed_forms", worst, 1e-8);

    let q = 1.1;
    let a0 = 0.8;
    let slope_residual = |values: &[C64], times: &[f64]| -> f64 {
        let v0 = values[0];
        let mut worst: f64 = 0.0;
        for (t, v) in times.iter().zip(values) {
            let expect = v0 * c(0.0, -2.0 * q * a0 * t).exp();
            worst = worst.max((v - expect).norm() / v0.norm());
        }
        worst
    };
    let massless = EvolutionParams {
        momentum: [0.3, -0.1, 0.2],
        mass: 0.0,
        charge: q,
        coupling: 0.7,
        potentials: Potentials::constant(a0, 0.0, 0.0, 0.0, 0.4),
        t0: 0.0,
        t1: 4.0,
        dt: 1e-3,
    };
    let psi = evolve(&random_spinor(61), &massless).expect("evolves");
    let phi = evolve(&random_spinor(62), &massless).expect("evolves");
    let values = form_along(FormLaw::C, &psi, &phi).expect("grids match");
    rep.push(
        "phase_law_C_massless",
        slope_residual(&values, &psi.times),
        1e-4,
    );

    let gzero = EvolutionParams {
        momentum: [0.2, 0.4, 0.0],
        mass: 0.9,
        charge: q,
        coupling: 0.0,
        potentials: Potentials::constant(a0, 0.1, 0.0, -0.1, 0.0),
        t0: 0.0,
        t1: 4.0,
        dt: 1e-3,
    };
    let psi = evolve(&random_spinor(63), &gzero).expect("evolves");
    let phi = evolve(&random_spinor(64), &gzero).expect("evolves");
    let values = form_along(FormLaw::C5, &psi, &phi).expect("grids match");
    rep.push(
        "phase_law_C5_gzero",
        slope_residual(&values, &psi.times),
        1e-4,
    );

    let generic = EvolutionParams {
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
    let psi = evolve(&random_spinor(65), &generic).expect("evolves");
    let phi = evolve(&random_spinor(66), &generic).expect("evolves");
    for kind in [FormLaw::C, FormLaw::C5, FormLaw::G0, FormLaw::G05] {
        let r = form_evolution_residual(kind, &psi, &phi, &generic).expect("grids match");
        rep.push(format!("form_law_{kind:?}"), r, 1e-5);
    }

    let epr = catalog_state("epr2").expect("known").state;
    let alice = EvolutionParams {
        momentum: [0.15, 0.0, -0.25],
        mass: 0.0,
        charge: q,
        coupling: 0.3,
        potentials: Potentials::constant(a0, 0.05, 0.0, 0.0, 0.2),
        t0: 0.0,
        t1: 3.0,
        dt: 1e-3,
    };
    let report =
        invariant_evolution_check(EvolvedInvariant::I1, &epr, &alice).expect("two particles");
    rep.push("alice_I1_abs_constancy", report.abs_drift, 1e-6);
    rep.push(
        "alice_I1_phase_slope",
        (report.phase_slope.expect("nonzero value") + 2.0 * q * a0).abs(),
        1e-4,
    );
    rep.push("alice_I1_law_residual", report.rhs_residual, 1e-5);

    let order_params = |dt: f64| EvolutionParams {
        momentum: [0.4, -0.2, 0.1],
        mass: 1.0,
        charge: 0.7,
        coupling: 0.3,
        potentials: Potentials::constant(0.5, 0.1, -0.2, 0.3, 0.8),
        t0: 0.0,
        t1: 1.0,
        dt,
    };
    let chi0 = random_spinor(67);
    let err_at = |dt: f64| {
        let p = order_params(dt);
        let traj = evolve(&chi0, &p).expect("evolves");
        let exact = p.generator(0.0).scale(c(p.t1, 0.0)).exp() * chi0;
        traj.spinors.last().expect("nonempty").max_diff(&exact)
    };
    let ratio = err_at(0.05) / err_at(0.025);
    rep.push("rk4_order_ratio", (ratio - 16.0).abs(), 14.0);
    rep
}

/// All suites in a stable order.
pub fn all_suites(seed: u64) -> Vec<SuiteReport> {
    vec![
        algebra_suite(),
        invariance_suite(seed),
        examples_suite(),
        oracle_suite(seed),
        rank_suite(seed),
        dependencies_suite(seed),
        reductions_suite(seed),
        balance_suite(),
        dynamics_suite(),
    ]
}
