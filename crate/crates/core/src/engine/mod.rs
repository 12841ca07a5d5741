//! Tensor sandwich contractions as an executable mini-language.
//!
//! A contraction pattern pairs index slots of copies of the state tensor Psi
//! and its conjugate Psi*, with C or C gamma5 sandwiched between two equally
//! conjugated copies and gamma0 or gamma0 gamma5 between a conjugated and an
//! unconjugated copy. Patterns are parsed from a small text grammar, checked
//! against the construction rules, and evaluated either by the brute-force
//! oracle sum or through a planned sequence of pairwise contractions.
//!
//! # Pattern grammar
//!
//! ```text
//! pattern  := atom (ws atom)*
//! atom     := sandwich | tensor
//! sandwich := ("C" | "C5" | "g0" | "g05") "[" letter ws letter "]"
//! tensor   := ("Psi" | "Psi*") "[" letter (ws letter)* "]"
//! letter   := "a".."z"
//! ```
//!
//! Each letter must appear exactly twice, once in a sandwich atom and once in
//! a tensor atom. The first bracket position of a sandwich atom is the row
//! index of the sandwiched matrix. All tensor atoms must have the same arity
//! (the particle count), and the two slots joined by a sandwich must sit at
//! the same particle position. Index placement is literal: the engine never
//! reorders matrix indices, so the sign conventions of antisymmetric
//! sandwiches are inherited from the pattern text.

mod eval;
mod parse;
mod pattern;
mod plan;

pub use eval::{evaluate, evaluate_naive, execute_plan, EvalError};
pub use parse::parse;
pub use pattern::{
    ContractionPattern, Factor, Pairing, PatternError, Sandwich, SlotRef, TensorOrient, TraceWord,
};
pub use plan::{plan, EvaluationPlan, PlanStep};
