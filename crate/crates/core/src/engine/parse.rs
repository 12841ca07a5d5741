//! Text grammar for contraction patterns.

use super::pattern::{ContractionPattern, Factor, Pairing, PatternError, Sandwich, SlotRef};

#[derive(Debug)]
enum Atom {
    Sandwich {
        kind: Sandwich,
        row: char,
        col: char,
    },
    Tensor {
        conjugated: bool,
        letters: Vec<char>,
    },
}

fn scan_atoms(text: &str) -> Result<Vec<Atom>, PatternError> {
    let mut atoms = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest.find('[').ok_or_else(|| PatternError::MalformedAtom {
            atom: rest.split_whitespace().next().unwrap_or(rest).to_string(),
            reason: "missing `[`".into(),
        })?;
        let name = rest[..open].trim();
        let close = rest[open..].find(']').map(|k| open + k).ok_or_else(|| {
            PatternError::MalformedAtom {
                atom: name.to_string(),
                reason: "missing `]`".into(),
            }
        })?;
        let body = &rest[open + 1..close];
        let letters: Vec<char> = body
            .split_whitespace()
            .map(|tok| {
                let mut chars = tok.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) if c.is_ascii_lowercase() => Ok(c),
                    _ => Err(PatternError::MalformedAtom {
                        atom: format!("{name}[{body}]"),
                        reason: format!("index `{tok}` is not a single letter a-z"),
                    }),
                }
            })
            .collect::<Result<_, _>>()?;
        let atom = match name {
            "C" | "C5" | "g0" | "g05" => {
                if letters.len() != 2 {
                    return Err(PatternError::MalformedAtom {
                        atom: format!("{name}[{body}]"),
                        reason: "sandwich atoms take exactly two indices".into(),
                    });
                }
                let kind = match name {
                    "C" => Sandwich::C,
                    "C5" => Sandwich::C5,
                    "g0" => Sandwich::G0,
                    _ => Sandwich::G05,
                };
                Atom::Sandwich {
                    kind,
                    row: letters[0],
                    col: letters[1],
                }
            }
            "Psi" | "Psi*" => {
                if letters.is_empty() {
                    return Err(PatternError::MalformedAtom {
                        atom: name.to_string(),
                        reason: "tensor atoms need at least one index".into(),
                    });
                }
                Atom::Tensor {
                    conjugated: name == "Psi*",
                    letters,
                }
            }
            other => return Err(PatternError::UnknownAtom(other.to_string())),
        };
        atoms.push(atom);
        rest = rest[close + 1..].trim_start();
    }
    Ok(atoms)
}

/// Parse and validate a contraction pattern.
pub fn parse(text: &str) -> Result<ContractionPattern, PatternError> {
    let atoms = scan_atoms(text)?;

    let mut factors = Vec::new();
    let mut tensor_pos: Vec<(char, SlotRef)> = Vec::new();
    for atom in &atoms {
        if let Atom::Tensor {
            conjugated,
            letters,
        } = atom
        {
            let factor = factors.len();
            factors.push(Factor {
                conjugated: *conjugated,
            });
            for (slot, &letter) in letters.iter().enumerate() {
                if let Some((dup, _)) = tensor_pos.iter().find(|(c, _)| *c == letter) {
                    return Err(PatternError::IndexInTwoTensors { letter: *dup });
                }
                if letters.iter().filter(|&&c| c == letter).count() > 1 {
                    return Err(PatternError::IndexInTwoTensors { letter });
                }
                tensor_pos.push((letter, SlotRef { factor, slot }));
            }
        }
    }
    if factors.is_empty() {
        return Err(PatternError::NoTensors);
    }
    let particles = match atoms.iter().find_map(|a| match a {
        Atom::Tensor { letters, .. } => Some(letters.len()),
        _ => None,
    }) {
        Some(n) => n,
        None => return Err(PatternError::NoTensors),
    };
    for atom in &atoms {
        if let Atom::Tensor { letters, .. } = atom {
            if letters.len() != particles {
                return Err(PatternError::ArityMismatch {
                    got: letters.len(),
                    expected: particles,
                });
            }
        }
    }

    let mut sandwich_letters: Vec<char> = Vec::new();
    let mut pairings = Vec::new();
    for atom in &atoms {
        if let Atom::Sandwich { kind, row, col } = atom {
            for &letter in [row, col] {
                if sandwich_letters.contains(&letter) {
                    return Err(PatternError::IndexInTwoSandwiches { letter });
                }
                sandwich_letters.push(letter);
            }
            let lookup = |letter: char| -> Result<SlotRef, PatternError> {
                tensor_pos
                    .iter()
                    .find(|(c, _)| *c == letter)
                    .map(|(_, s)| *s)
                    .ok_or(PatternError::IndexCount { letter, count: 1 })
            };
            let row_ref = lookup(*row)?;
            let col_ref = lookup(*col)?;
            if row_ref.slot != col_ref.slot {
                return Err(PatternError::SlotMismatch {
                    letter: *row,
                    row_slot: row_ref.slot,
                    col_slot: col_ref.slot,
                });
            }
            let same_conj =
                factors[row_ref.factor].conjugated == factors[col_ref.factor].conjugated;
            if kind.is_bilinear() != same_conj {
                return Err(PatternError::ParityRule {
                    letter: *row,
                    sandwich: kind.token(),
                    requirement: if kind.is_bilinear() {
                        "two equally conjugated copies"
                    } else {
                        "one conjugated and one unconjugated copy"
                    },
                });
            }
            pairings.push(Pairing {
                row: row_ref,
                col: col_ref,
                sandwich: *kind,
            });
        }
    }

    // every tensor letter must be consumed by exactly one sandwich
    for (letter, _) in &tensor_pos {
        let count = 1 + sandwich_letters.iter().filter(|&&c| c == *letter).count();
        if count != 2 {
            return Err(PatternError::IndexCount {
                letter: *letter,
                count,
            });
        }
    }

    ContractionPattern::new(particles, factors, pairings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_v1_pattern() {
        let p = parse("g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]").unwrap();
        assert_eq!(p.particles(), 3);
        assert_eq!(p.factors().len(), 2);
        assert!(p.factors()[0].conjugated);
        assert!(!p.factors()[1].conjugated);
        assert_eq!(p.pairings().len(), 3);
        assert_eq!(p.bidegree(), (1, 1));
        // row of the first pairing is letter `l`: slot 0 of the Psi factor
        assert_eq!(p.pairings()[0].row, SlotRef { factor: 1, slot: 0 });
        assert_eq!(p.pairings()[0].col, SlotRef { factor: 0, slot: 0 });
    }

    #[test]
    fn unknown_atom_diagnostic() {
        assert_eq!(
            parse("Q[a b] Psi[a] Psi[b]").unwrap_err(),
            PatternError::UnknownAtom("Q".into())
        );
    }

    #[test]
    fn index_count_diagnostics() {
        // letter used once only
        let err = parse("C[j m] Psi[j k] Psi[m n] C[k x]").unwrap_err();
        assert!(matches!(err, PatternError::IndexCount { letter: 'x', .. }));
        // letter in two sandwich atoms
        let err = parse("C[j m] C[j m] Psi[j k] Psi[m n] C[k n]").unwrap_err();
        assert_eq!(err, PatternError::IndexInTwoSandwiches { letter: 'j' });
        // same letter twice in tensor atoms
        let err = parse("C[j m] Psi[j j] Psi[m n]").unwrap_err();
        assert_eq!(err, PatternError::IndexInTwoTensors { letter: 'j' });
    }

    #[test]
    fn arity_mismatch_diagnostic() {
        let err = parse("C[a b] Psi[a c] Psi[b d e]").unwrap_err();
        assert_eq!(
            err,
            PatternError::ArityMismatch {
                got: 3,
                expected: 2
            }
        );
    }

    #[test]
    fn slot_mismatch_diagnostic() {
        // letter a joins slot 0 of one factor with slot 1 of the other
        let err = parse("C[a b] C[c d] Psi[a c] Psi[d b]").unwrap_err();
        assert!(matches!(
            err,
            PatternError::SlotMismatch { letter: 'a', .. }
        ));
    }

    #[test]
    fn parity_rule_diagnostic() {
        // C joining Psi and Psi* is forbidden by construction
        let err = parse("C[i j] Psi[j k] Psi*[i n] g0[k n]").unwrap_err();
        assert!(matches!(
            err,
            PatternError::ParityRule { sandwich: "C", .. }
        ));
        // g0 joining two unconjugated copies is forbidden too
        let err = parse("g0[i j] Psi[j k] Psi[i n] C[k n]").unwrap_err();
        assert!(matches!(
            err,
            PatternError::ParityRule { sandwich: "g0", .. }
        ));
    }
}
