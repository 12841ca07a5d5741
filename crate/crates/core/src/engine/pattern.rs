//! Contraction pattern data model and structural validation.

use thiserror::Error;

use crate::gamma::{special, Special};
use crate::mat4::Mat4;
use crate::scalar::Real;

/// The matrix sandwiched in one contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sandwich {
    /// C, between two equally conjugated copies.
    C,
    /// C gamma5, between two equally conjugated copies.
    C5,
    /// gamma0, between a conjugated and an unconjugated copy.
    G0,
    /// gamma0 gamma5, between a conjugated and an unconjugated copy.
    G05,
}

impl Sandwich {
    /// Whether this sandwich requires equal conjugation on both sides.
    pub fn is_bilinear(self) -> bool {
        matches!(self, Sandwich::C | Sandwich::C5)
    }

    /// Whether the sandwich carries a gamma5 (flips sign under local parity).
    pub fn has_gamma5(self) -> bool {
        matches!(self, Sandwich::C5 | Sandwich::G05)
    }

    pub fn matrix<R: Real>(self) -> Mat4<R> {
        match self {
            Sandwich::C => special(Special::C),
            Sandwich::C5 => special(Special::C5),
            Sandwich::G0 => special(Special::G0),
            Sandwich::G05 => special(Special::G05),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Sandwich::C => "C",
            Sandwich::C5 => "C5",
            Sandwich::G0 => "g0",
            Sandwich::G05 => "g05",
        }
    }
}

/// One copy of the state tensor in a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub conjugated: bool,
}

/// A (factor, slot) index position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SlotRef {
    pub factor: usize,
    pub slot: usize,
}

/// One sandwich contraction: value M[row, col] summed against the two tensor
/// slots. Row/col order preserves the literal index placement of the
/// defining expression, which carries the sign for antisymmetric sandwiches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub row: SlotRef,
    pub col: SlotRef,
    pub sandwich: Sandwich,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("malformed atom `{atom}`: {reason}")]
    MalformedAtom { atom: String, reason: String },
    #[error("index letter `{letter}` used {count} times, must be exactly 2")]
    IndexCount { letter: char, count: usize },
    #[error("index letter `{letter}` appears in two sandwich atoms")]
    IndexInTwoSandwiches { letter: char },
    #[error("index letter `{letter}` appears in two tensor atoms")]
    IndexInTwoTensors { letter: char },
    #[error("tensor atom arity {got} does not match {expected}")]
    ArityMismatch { got: usize, expected: usize },
    #[error("index letter `{letter}` pairs particle position {row_slot} with {col_slot}")]
    SlotMismatch {
        letter: char,
        row_slot: usize,
        col_slot: usize,
    },
    #[error("parity rule violated at letter `{letter}`: {sandwich} must join {requirement}")]
    ParityRule {
        letter: char,
        sandwich: &'static str,
        requirement: &'static str,
    },
    #[error("pattern has no tensor atoms")]
    NoTensors,
    #[error("slot {slot} of factor {factor} is not contracted by exactly one pairing")]
    SlotCoverage { factor: usize, slot: usize },
}

/// A validated contraction pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct ContractionPattern {
    particles: usize,
    factors: Vec<Factor>,
    pairings: Vec<Pairing>,
}

impl ContractionPattern {
    /// Validate the structural invariants: every (factor, slot) in exactly
    /// one pairing, both ends of a pairing at the same particle position, and
    /// the conjugation parity rule for each sandwich kind.
    pub fn new(
        particles: usize,
        factors: Vec<Factor>,
        pairings: Vec<Pairing>,
    ) -> Result<Self, PatternError> {
        if factors.is_empty() {
            return Err(PatternError::NoTensors);
        }
        let mut seen = vec![vec![0usize; particles]; factors.len()];
        for p in &pairings {
            for end in [p.row, p.col] {
                if end.factor >= factors.len() || end.slot >= particles {
                    return Err(PatternError::SlotCoverage {
                        factor: end.factor,
                        slot: end.slot,
                    });
                }
                seen[end.factor][end.slot] += 1;
            }
            if p.row.slot != p.col.slot {
                return Err(PatternError::SlotMismatch {
                    letter: '?',
                    row_slot: p.row.slot,
                    col_slot: p.col.slot,
                });
            }
            let same_conj = factors[p.row.factor].conjugated == factors[p.col.factor].conjugated;
            if p.sandwich.is_bilinear() != same_conj {
                return Err(PatternError::ParityRule {
                    letter: '?',
                    sandwich: p.sandwich.token(),
                    requirement: if p.sandwich.is_bilinear() {
                        "two equally conjugated copies"
                    } else {
                        "one conjugated and one unconjugated copy"
                    },
                });
            }
        }
        for (f, slots) in seen.iter().enumerate() {
            for (s, count) in slots.iter().enumerate() {
                if *count != 1 {
                    return Err(PatternError::SlotCoverage { factor: f, slot: s });
                }
            }
        }
        Ok(ContractionPattern {
            particles,
            factors,
            pairings,
        })
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    /// Bidegree (unconjugated copies, conjugated copies).
    pub fn bidegree(&self) -> (u32, u32) {
        let m = self.factors.iter().filter(|f| f.conjugated).count() as u32;
        (self.factors.len() as u32 - m, m)
    }

    /// Observers with at least one C or C gamma5 contraction. Nonzero values
    /// of the pattern indicate spinor entanglement involving these particles.
    pub fn bilinear_observers(&self) -> Vec<usize> {
        let mut hit = vec![false; self.particles];
        for p in &self.pairings {
            if p.sandwich.is_bilinear() {
                hit[p.row.slot] = true;
            }
        }
        (0..self.particles).filter(|&k| hit[k]).collect()
    }

    /// Parity of the gamma5 count per observer: true where the pattern flips
    /// sign under the parity transformation in that observer's lab.
    pub fn parity_odd_observers(&self) -> Vec<bool> {
        let mut odd = vec![false; self.particles];
        for p in &self.pairings {
            if p.sandwich.has_gamma5() {
                odd[p.row.slot] = !odd[p.row.slot];
            }
        }
        odd
    }
}

/// Orientation of a state-matrix factor inside a two-particle trace word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorOrient {
    /// Psi as a matrix: row index is particle A.
    Psi,
    /// Psi transposed: row index is particle B.
    PsiT,
    /// Entrywise conjugate: row index is particle A.
    PsiStar,
    /// Conjugate transpose: row index is particle B.
    PsiDagger,
}

impl TensorOrient {
    fn conjugated(self) -> bool {
        matches!(self, TensorOrient::PsiStar | TensorOrient::PsiDagger)
    }

    /// Whether the matrix row index is the particle-A slot.
    fn row_is_particle_a(self) -> bool {
        matches!(self, TensorOrient::Psi | TensorOrient::PsiStar)
    }
}

/// A two-particle trace word: the cyclic product
/// Tr[T_0 M_0 T_1 M_1 ...] of state-matrix factors and sandwich matrices.
///
/// [`TraceWord::pattern`] converts the word mechanically into index-pairing
/// form, so the catalog's trace definitions stay free of hand-transcribed
/// index strings.
#[derive(Clone, Debug)]
pub struct TraceWord(pub Vec<(TensorOrient, Sandwich)>);

impl TraceWord {
    pub fn pattern(&self) -> Result<ContractionPattern, PatternError> {
        let n = self.0.len();
        assert!(n > 0, "empty trace word");
        // junction k sits between element k-1 and element k of the matrix
        // product; tensor factor k has left junction 2k and right junction
        // 2k+1, the sandwich after it joins 2k+1 and 2k+2 (mod 2n).
        let factors: Vec<Factor> = self
            .0
            .iter()
            .map(|(t, _)| Factor {
                conjugated: t.conjugated(),
            })
            .collect();
        // map each junction index to the tensor slot it belongs to
        let mut ends = vec![SlotRef { factor: 0, slot: 0 }; 2 * n];
        for (k, (t, _)) in self.0.iter().enumerate() {
            let (row_slot, col_slot) = if t.row_is_particle_a() {
                (0, 1)
            } else {
                (1, 0)
            };
            ends[2 * k] = SlotRef {
                factor: k,
                slot: row_slot,
            };
            ends[2 * k + 1] = SlotRef {
                factor: k,
                slot: col_slot,
            };
        }
        let pairings: Vec<Pairing> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, (_, m))| Pairing {
                row: ends[2 * k + 1],
                col: ends[(2 * k + 2) % (2 * n)],
                sandwich: *m,
            })
            .collect();
        ContractionPattern::new(2, factors, pairings)
    }
}
