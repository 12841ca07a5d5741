//! Command implementations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use num_complex::Complex64 as C64;
use serde_json::json;

use spinor_invariants::analysis::{frame_sweep, numeric_rank, weight_vectors, SUPPORT_EPSILON};
use spinor_invariants::catalog::{catalog, CatalogError, ScopeClass};
use spinor_invariants::checks;
use spinor_invariants::dynamics::{
    evolve as integrate, form_along, invariant_evolution_check, EvolutionParams, EvolvedInvariant,
    FormLaw, Potentials,
};
use spinor_invariants::engine;
use spinor_invariants::state::examples::catalog_state;
use spinor_invariants::state::{StateError, StateTensor};
use spinor_invariants::Spinor;

use crate::output::{write_output, Table};
use crate::{CommonArgs, EXIT_BAD_PATTERN, EXIT_BAD_STATE, EXIT_CHECK_FAILED, EXIT_UNKNOWN_NAME};

#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code,
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        let code = match &e {
            CatalogError::UnknownName { .. } => EXIT_UNKNOWN_NAME,
            CatalogError::Pattern(_) => EXIT_BAD_PATTERN,
            _ => EXIT_BAD_STATE,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(EXIT_BAD_STATE, e.to_string())
    }
}

type CliResult = Result<ExitCode, CliError>;

fn load_state(path: &Path) -> Result<StateTensor<f64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(EXIT_BAD_STATE, format!("{}: {e}", path.display())))?;
    StateTensor::from_json(&text)
        .map_err(|e: StateError| CliError::new(EXIT_BAD_STATE, format!("{}: {e}", path.display())))
}

fn scope_label(scope: &ScopeClass) -> String {
    match scope {
        ScopeClass::AllParticles => "all".into(),
        ScopeClass::Subset(v) if v.is_empty() => "subset:none-specific".into(),
        ScopeClass::Subset(v) => format!(
            "subset:{}",
            v.iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        ScopeClass::NotIndicator => "not-indicator".into(),
    }
}

fn sig6(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x:.6e}").replace("e0", "e+0")
    }
}

/// Worker-thread cap: SPINOR_INV_THREADS, defaulting to the machine's
/// available parallelism.
fn thread_cap() -> usize {
    std::env::var("SPINOR_INV_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|n| *n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

type EvalRow = (String, C64, (u32, u32), String);

fn eval_one_state(path: &Path, names: Option<&str>) -> Result<(usize, Vec<EvalRow>), CliError> {
    let cat = catalog();
    let s = load_state(path)?;
    let selected: Vec<String> = match names {
        Some(csv) => csv.split(',').map(|x| x.trim().to_string()).collect(),
        None => cat
            .list(s.particles(), None)
            .into_iter()
            .map(String::from)
            .collect(),
    };
    let mut rows = Vec::new();
    for name in &selected {
        let entry = cat.get(name)?;
        let v = cat.eval(name, &s)?;
        rows.push((name.clone(), v, entry.bidegree, scope_label(&entry.scope)));
    }
    Ok((s.particles(), rows))
}

pub fn eval(states: &[PathBuf], names: Option<&str>, common: &CommonArgs) -> CliResult {
    // states evaluate independently on up to SPINOR_INV_THREADS workers;
    // results are assembled in input order so the output stays deterministic
    let cap = thread_cap().min(states.len().max(1));
    let mut results: Vec<Option<Result<(usize, Vec<EvalRow>), CliError>>> =
        (0..states.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunks = states.len().div_ceil(cap);
        for (slot, path) in results.chunks_mut(chunks).zip(states.chunks(chunks)) {
            scope.spawn(move || {
                for (out, p) in slot.iter_mut().zip(path.iter()) {
                    *out = Some(eval_one_state(p, names));
                }
            });
        }
    });

    let mut json_states = Vec::new();
    let mut table = Table::new(vec!["file", "name", "re", "im", "abs", "bidegree", "scope"]);
    for (path, result) in states.iter().zip(results) {
        let (particles, rows) = result.expect("worker filled the slot")?;
        let mut json_rows = Vec::new();
        for (name, v, bidegree, scope) in rows {
            table.row(vec![
                path.display().to_string(),
                name.clone(),
                sig6(v.re),
                sig6(v.im),
                sig6(v.norm()),
                format!("({},{})", bidegree.0, bidegree.1),
                scope.clone(),
            ]);
            json_rows.push(json!({
                "name": name,
                "re": v.re,
                "im": v.im,
                "abs": v.norm(),
                "bidegree": [bidegree.0, bidegree.1],
                "scope": scope,
            }));
        }
        json_states.push(json!({
            "file": path.display().to_string(),
            "particles": particles,
            "rows": json_rows,
        }));
    }
    let payload = json!({"schema": 1, "command": "eval", "states": json_states});
    write_output(common, &table, &payload)?;
    Ok(ExitCode::SUCCESS)
}

pub fn check(suite: &str, common: &CommonArgs) -> CliResult {
    let seed = common.seed;
    let reports = match suite {
        "algebra" => vec![checks::algebra_suite()],
        "invariance" => vec![checks::invariance_suite(seed)],
        "examples" => vec![checks::examples_suite()],
        "oracle" => vec![checks::oracle_suite(seed)],
        "rank" => vec![checks::rank_suite(seed)],
        "dependencies" => vec![checks::dependencies_suite(seed)],
        "reductions" => vec![checks::reductions_suite(seed)],
        "balance" => vec![checks::balance_suite()],
        "dynamics" => vec![checks::dynamics_suite()],
        "all" => checks::all_suites(seed),
        other => {
            return Err(CliError::new(
                EXIT_CHECK_FAILED,
                format!(
                    "unknown suite `{other}`; known: algebra, invariance, examples, oracle, \
                     rank, dependencies, reductions, balance, dynamics, all"
                ),
            ))
        }
    };
    let mut table = Table::new(vec!["suite", "check", "residual", "tolerance", "status"]);
    let mut json_suites = Vec::new();
    let mut all_passed = true;
    for rep in &reports {
        let mut json_checks = Vec::new();
        for check in &rep.checks {
            let tolerance = common.tol.unwrap_or(check.tolerance);
            let passed = check.residual <= tolerance;
            all_passed &= passed;
            table.row(vec![
                rep.suite.to_string(),
                check.name.clone(),
                sig6(check.residual),
                sig6(tolerance),
                if passed { "pass".into() } else { "FAIL".into() },
            ]);
            json_checks.push(json!({
                "name": check.name,
                "residual": check.residual,
                "tolerance": tolerance,
                "passed": passed,
            }));
        }
        json_suites.push(json!({
            "suite": rep.suite,
            "checks": json_checks,
        }));
    }
    let payload = json!({
        "schema": 1,
        "command": "check",
        "seed": seed,
        "suites": json_suites,
        "passed": all_passed,
    });
    write_output(common, &table, &payload)?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}

pub fn balance(states: &[PathBuf], frames: usize, common: &CommonArgs) -> CliResult {
    let mut table = Table::new(vec!["file", "quantity", "value"]);
    let mut json_states = Vec::new();
    for path in states {
        let s = load_state(path)?;
        let w = weight_vectors(&s, SUPPORT_EPSILON)
            .map_err(|e| CliError::new(EXIT_BAD_STATE, e.to_string()))?;
        let sweep = frame_sweep(&s, frames, common.seed, SUPPORT_EPSILON)
            .map_err(|e| CliError::new(EXIT_BAD_STATE, e.to_string()))?;
        let support: Vec<String> = w
            .support
            .iter()
            .map(|idx| {
                idx.iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect();
        let weights: Vec<String> = w
            .weights
            .iter()
            .map(|v| {
                format!(
                    "({})",
                    v.iter()
                        .map(|x| format!("{x:+}"))
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        let file = path.display().to_string();
        table.row(vec![file.clone(), "support".into(), support.join(" ")]);
        table.row(vec![file.clone(), "weights".into(), weights.join(" ")]);
        table.row(vec![
            file.clone(),
            "balanced".into(),
            if w.balanced {
                "yes".into()
            } else {
                "no".into()
            },
        ]);
        table.row(vec![
            file.clone(),
            "affinely balanced".into(),
            if w.affinely_balanced {
                "yes".into()
            } else {
                "no".into()
            },
        ]);
        table.row(vec![
            file.clone(),
            "frame sweep".into(),
            format!(
                "{} frames, {} not balanced, {} not affinely balanced",
                sweep.frames, sweep.not_balanced_frames, sweep.not_affinely_balanced_frames
            ),
        ]);
        json_states.push(json!({
            "file": file,
            "support": support,
            "weights": w.weights,
            "balanced": w.balanced,
            "affinely_balanced": w.affinely_balanced,
            "frame_sweep": {
                "frames": sweep.frames,
                "not_balanced_frames": sweep.not_balanced_frames,
                "not_affinely_balanced_frames": sweep.not_affinely_balanced_frames,
            },
        }));
    }
    let payload = json!({"schema": 1, "command": "balance", "states": json_states});
    write_output(common, &table, &payload)?;
    Ok(ExitCode::SUCCESS)
}

pub fn contract(pattern_text: &str, state: &Path, common: &CommonArgs) -> CliResult {
    let pattern =
        engine::parse(pattern_text).map_err(|e| CliError::new(EXIT_BAD_PATTERN, e.to_string()))?;
    let s = load_state(state)?;
    let plan = engine::plan(&pattern);
    let value = engine::execute_plan(&plan, &pattern, &s)
        .map_err(|e| CliError::new(EXIT_BAD_STATE, e.to_string()))?;
    let mut table = Table::new(vec!["quantity", "value"]);
    table.row(vec!["re".into(), sig6(value.re)]);
    table.row(vec!["im".into(), sig6(value.im)]);
    table.row(vec!["abs".into(), sig6(value.norm())]);
    table.row(vec![
        "plan flops".into(),
        plan.estimated_flops().to_string(),
    ]);
    table.row(vec!["naive flops".into(), plan.naive_flops().to_string()]);
    let payload = json!({
        "schema": 1,
        "command": "contract",
        "pattern": pattern_text,
        "particles": pattern.particles(),
        "re": value.re,
        "im": value.im,
        "abs": value.norm(),
        "plan_flops": plan.estimated_flops().to_string(),
        "naive_flops": plan.naive_flops().to_string(),
    });
    write_output(common, &table, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn family_names(family: &str) -> Option<Vec<&'static str>> {
    let cat = catalog();
    match family {
        "2p-2-2" => Some(cat.list(2, Some((2, 2)))),
        "2p-3-1" => Some(cat.list(2, Some((3, 1)))),
        "3p-2-2-selected" => Some(cat.list(3, Some((2, 2)))),
        "3p-3-1" => Some(cat.list(3, Some((3, 1)))),
        _ => None,
    }
}

pub fn rank(
    family: Option<&str>,
    names: Option<&str>,
    states: Option<usize>,
    common: &CommonArgs,
) -> CliResult {
    let owned: Vec<String>;
    let selected: Vec<&str> = match (family, names) {
        (Some(f), _) => family_names(f).ok_or_else(|| {
            CliError::new(
                EXIT_UNKNOWN_NAME,
                format!("unknown family `{f}`; known: 2p-2-2, 2p-3-1, 3p-2-2-selected, 3p-3-1"),
            )
        })?,
        (None, Some(csv)) => {
            owned = csv.split(',').map(|x| x.trim().to_string()).collect();
            owned.iter().map(|s| s.as_str()).collect()
        }
        (None, None) => {
            return Err(CliError::new(
                EXIT_UNKNOWN_NAME,
                "rank needs --family or --names",
            ))
        }
    };
    let n_states = states.unwrap_or(2 * selected.len() + 10);
    let tol = common.tol.unwrap_or(1e-8);
    let report = numeric_rank(&selected, n_states, common.seed, tol)?;
    let mut table = Table::new(vec!["quantity", "value"]);
    table.row(vec!["names".into(), report.names.len().to_string()]);
    table.row(vec!["states".into(), report.states.to_string()]);
    table.row(vec!["rank".into(), report.rank.to_string()]);
    table.row(vec![
        "smallest retained sv".into(),
        sig6(report.smallest_retained),
    ]);
    table.row(vec![
        "largest discarded sv".into(),
        sig6(report.largest_discarded),
    ]);
    let payload = json!({
        "schema": 1,
        "command": "rank",
        "names": report.names,
        "states": report.states,
        "seed": common.seed,
        "rank": report.rank,
        "smallest_retained": report.smallest_retained,
        "largest_discarded": report.largest_discarded,
        "singular_values": report.singular_values,
    });
    write_output(common, &table, &payload)?;
    Ok(ExitCode::SUCCESS)
}

pub struct EvolveArgs {
    pub t0: f64,
    pub t1: f64,
    pub dt: f64,
    pub mass: f64,
    pub charge: f64,
    pub coupling: f64,
    pub momentum: String,
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub phi: f64,
    pub psi0: String,
    pub phi0: String,
    pub state: Option<PathBuf>,
}

fn parse_floats(text: &str, expected: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let vals: Result<Vec<f64>, _> = text.split(',').map(|x| x.trim().parse::<f64>()).collect();
    let vals = vals.map_err(|e| CliError::new(EXIT_BAD_STATE, format!("{what}: {e}")))?;
    if vals.len() != expected {
        return Err(CliError::new(
            EXIT_BAD_STATE,
            format!("{what}: expected {expected} numbers, got {}", vals.len()),
        ));
    }
    Ok(vals)
}

fn parse_spinor(text: &str, what: &str) -> Result<Spinor, CliError> {
    let v = parse_floats(text, 8, what)?;
    Ok(Spinor::new([
        C64::new(v[0], v[1]),
        C64::new(v[2], v[3]),
        C64::new(v[4], v[5]),
        C64::new(v[6], v[7]),
    ]))
}

pub fn evolve(args: EvolveArgs, common: &CommonArgs) -> CliResult {
    let p = parse_floats(&args.momentum, 3, "--momentum")?;
    let params = EvolutionParams {
        momentum: [p[0], p[1], p[2]],
        mass: args.mass,
        charge: args.charge,
        coupling: args.coupling,
        potentials: Potentials::constant(args.a0, args.a1, args.a2, args.a3, args.phi),
        t0: args.t0,
        t1: args.t1,
        dt: args.dt,
    };
    let chi_psi = parse_spinor(&args.psi0, "--psi0")?;
    let chi_phi = parse_spinor(&args.phi0, "--phi0")?;
    let psi =
        integrate(&chi_psi, &params).map_err(|e| CliError::new(EXIT_BAD_STATE, e.to_string()))?;
    let phi =
        integrate(&chi_phi, &params).map_err(|e| CliError::new(EXIT_BAD_STATE, e.to_string()))?;
    let forms: Vec<Vec<C64>> = [FormLaw::C, FormLaw::C5, FormLaw::G0, FormLaw::G05]
        .iter()
        .map(|kind| form_along(*kind, &psi, &phi).expect("same grid"))
        .collect();

    let state0 = match &args.state {
        Some(path) => load_state(path)?,
        None => catalog_state("epr2").expect("shipped state").state,
    };
    let i1 = invariant_evolution_check(EvolvedInvariant::I1, &state0, &params)
        .map_err(|e| CliError::new(EXIT_BAD_STATE, e.to_string()))?;
    let i2 = invariant_evolution_check(EvolvedInvariant::I2, &state0, &params)
        .map_err(|e| CliError::new(EXIT_BAD_STATE, e.to_string()))?;

    // CSV: t, re/im of the four forms, |I1|, |I2|
    let mut csv = String::from("t,re_C,im_C,re_C5,im_C5,re_G0,im_G0,re_G05,im_G05,abs_I1,abs_I2\n");
    for (k, t) in psi.times.iter().enumerate() {
        csv.push_str(&format!(
            "{t},{},{},{},{},{},{},{},{},{},{}\n",
            forms[0][k].re,
            forms[0][k].im,
            forms[1][k].re,
            forms[1][k].im,
            forms[2][k].re,
            forms[2][k].im,
            forms[3][k].re,
            forms[3][k].im,
            i1.values[k].norm(),
            i2.values[k].norm(),
        ));
    }
    match &common.out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}
