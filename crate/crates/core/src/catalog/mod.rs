//! Every named invariant polynomial as a first-class evaluable object.
//!
//! Each entry stores a primary form (a contraction pattern or a composite of
//! patterns, products, conjugates and scalar prefactors), the alternate forms
//! printed alongside it, and where available an independently transcribed
//! coefficient expansion. Disagreement between any two routes fails the test
//! suite; transcription errors are the dominant risk in this catalog.

mod defs;
pub(crate) mod expansions;
pub mod reduction;

use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64 as C64;
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::engine::{self, ContractionPattern, EvalError, PatternError};
use crate::scalar::rel_err;
use crate::state::StateTensor;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown invariant `{name}`; known names: {available}")]
    UnknownName { name: String, available: String },
    #[error("invariant `{name}` is for {expected} particles, state has {got}")]
    ParticleMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("invariant `{0}` has no transcribed expansion")]
    NoExpansion(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// How to evaluate contraction patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMode {
    /// Through the greedy pairwise-contraction planner.
    Planned,
    /// Through the brute-force oracle sum.
    Naive,
}

/// A polynomial expression over contraction patterns and other named
/// invariants.
#[derive(Clone, Debug)]
pub enum Expr {
    Pattern(Arc<ContractionPattern>),
    Named(&'static str),
    Scale(C64, Box<Expr>),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    Conj(Box<Expr>),
}

/// Which particles a nonzero value implicates as entangled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScopeClass {
    /// Zero whenever any particle separates from the rest.
    AllParticles,
    /// Zero whenever one of the listed observers separates; an empty list
    /// means the polynomial vanishes on full product states only, without
    /// implicating a specific observer.
    Subset(Vec<usize>),
    /// Nonzero on some product states.
    NotIndicator,
}

pub struct NamedInvariant {
    pub name: &'static str,
    pub particles: usize,
    pub bidegree: (u32, u32),
    pub scope: ScopeClass,
    pub primary: Expr,
    pub alt_forms: Vec<Expr>,
    pub expansion: Option<fn(&StateTensor<f64>) -> C64>,
}

/// A linear dependency among named invariants: the weighted sum vanishes
/// identically.
pub struct DependencyEquation {
    pub label: &'static str,
    pub terms: Vec<(f64, &'static str)>,
}

pub struct Catalog {
    names: Vec<&'static str>,
    map: HashMap<&'static str, NamedInvariant>,
    dependencies: Vec<DependencyEquation>,
}

static CATALOG: Lazy<Catalog> = Lazy::new(Catalog::build);

/// The shared catalog instance.
pub fn catalog() -> &'static Catalog {
    &CATALOG
}

impl Catalog {
    fn build() -> Catalog {
        let (entries, dependencies) = defs::build();
        let names: Vec<&'static str> = entries.iter().map(|e| e.name).collect();
        let mut map = HashMap::new();
        for e in entries {
            let prior = map.insert(e.name, e);
            assert!(prior.is_none(), "duplicate invariant name");
        }
        Catalog {
            names,
            map,
            dependencies,
        }
    }

    pub fn get(&self, name: &str) -> Result<&NamedInvariant, CatalogError> {
        self.map.get(name).ok_or_else(|| CatalogError::UnknownName {
            name: name.to_string(),
            available: self.names.join(", "),
        })
    }

    /// All names, in the documented stable order.
    pub fn names(&self) -> &[&'static str] {
        &self.names
    }

    /// Names filtered by particle count and optionally bidegree, in stable
    /// catalog order.
    pub fn list(&self, particles: usize, bidegree: Option<(u32, u32)>) -> Vec<&'static str> {
        self.names
            .iter()
            .filter(|n| {
                let e = &self.map[**n];
                e.particles == particles && bidegree.is_none_or(|b| e.bidegree == b)
            })
            .cloned()
            .collect()
    }

    pub fn dependencies(&self) -> &[DependencyEquation] {
        &self.dependencies
    }

    fn eval_expr(
        &self,
        expr: &Expr,
        s: &StateTensor<f64>,
        mode: EvalMode,
    ) -> Result<C64, CatalogError> {
        match expr {
            Expr::Pattern(p) => {
                let v = match mode {
                    EvalMode::Planned => engine::evaluate(p, s)?,
                    EvalMode::Naive => engine::evaluate_naive(p, s)?,
                };
                Ok(v)
            }
            Expr::Named(name) => {
                let e = self.get(name)?;
                self.eval_expr(&e.primary, s, mode)
            }
            Expr::Scale(c, inner) => Ok(*c * self.eval_expr(inner, s, mode)?),
            Expr::Sum(terms) => {
                let mut acc = C64::new(0.0, 0.0);
                for t in terms {
                    acc += self.eval_expr(t, s, mode)?;
                }
                Ok(acc)
            }
            Expr::Prod(factors) => {
                let mut acc = C64::new(1.0, 0.0);
                for f in factors {
                    acc *= self.eval_expr(f, s, mode)?;
                }
                Ok(acc)
            }
            Expr::Conj(inner) => Ok(self.eval_expr(inner, s, mode)?.conj()),
        }
    }

    /// Value of the primary form, including the printed scalar prefactors.
    pub fn eval(&self, name: &str, s: &StateTensor<f64>) -> Result<C64, CatalogError> {
        self.eval_with(name, s, EvalMode::Planned)
    }

    pub fn eval_with(
        &self,
        name: &str,
        s: &StateTensor<f64>,
        mode: EvalMode,
    ) -> Result<C64, CatalogError> {
        let e = self.get(name)?;
        if e.particles != s.particles() {
            return Err(CatalogError::ParticleMismatch {
                name: name.to_string(),
                expected: e.particles,
                got: s.particles(),
            });
        }
        self.eval_expr(&e.primary, s, mode)
    }

    /// All values: primary, every alternate form, and the transcribed
    /// expansion when present.
    pub fn all_form_values(
        &self,
        name: &str,
        s: &StateTensor<f64>,
    ) -> Result<Vec<C64>, CatalogError> {
        let e = self.get(name)?;
        let mut values = vec![self.eval_expr(&e.primary, s, EvalMode::Planned)?];
        for alt in &e.alt_forms {
            values.push(self.eval_expr(alt, s, EvalMode::Planned)?);
        }
        if let Some(f) = e.expansion {
            values.push(f(s));
        }
        Ok(values)
    }

    /// Largest relative discrepancy among all forms of the invariant.
    pub fn alt_forms_residual(
        &self,
        name: &str,
        s: &StateTensor<f64>,
    ) -> Result<f64, CatalogError> {
        let values = self.all_form_values(name, s)?;
        let mut worst: f64 = 0.0;
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                worst = worst.max(rel_err(values[i], values[j]));
            }
        }
        Ok(worst)
    }

    /// The independently transcribed coefficient expansion.
    pub fn expansion_oracle(&self, name: &str, s: &StateTensor<f64>) -> Result<C64, CatalogError> {
        let e = self.get(name)?;
        if e.particles != s.particles() {
            return Err(CatalogError::ParticleMismatch {
                name: name.to_string(),
                expected: e.particles,
                got: s.particles(),
            });
        }
        match e.expansion {
            Some(f) => Ok(f(s)),
            None => Err(CatalogError::NoExpansion(name.to_string())),
        }
    }

    /// Residuals of the twelve (3,1)-family linear dependencies: max over
    /// seeded random 3-particle states of |sum| / sum |terms|.
    pub fn dependency_residuals(
        &self,
        n_states: usize,
        seed: u64,
    ) -> Result<Vec<(&'static str, f64)>, CatalogError> {
        let states: Vec<StateTensor<f64>> = (0..n_states)
            .map(|k| StateTensor::random(3, seed.wrapping_add(k as u64)).expect("3 particles"))
            .collect();
        let mut out = Vec::new();
        for eq in &self.dependencies {
            let mut worst: f64 = 0.0;
            for s in &states {
                let mut total = C64::new(0.0, 0.0);
                let mut scale = 0.0;
                for (coeff, name) in &eq.terms {
                    let v = self.eval(name, s)?;
                    total += C64::new(*coeff, 0.0) * v;
                    scale += v.norm();
                }
                if scale > 0.0 {
                    worst = worst.max(total.norm() / scale);
                }
            }
            out.push((eq.label, worst));
        }
        Ok(out)
    }
}
