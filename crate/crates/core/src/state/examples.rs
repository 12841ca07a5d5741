//! The catalog of example states with their expected invariant magnitudes.
//!
//! Expected values store |value| only; the phases of the invariant values are
//! convention artifacts. Every expected magnitude is the published value for
//! that state, zeros included.

use std::collections::BTreeMap;

use num_complex::Complex64 as C64;

use super::{StateError, StateTensor};
use crate::spinor::Spinor;

/// An expected invariant magnitude for a catalog state.
#[derive(Clone, Debug, PartialEq)]
pub struct Expected {
    pub invariant: &'static str,
    pub abs: f64,
}

/// A named example state with its expected-value table.
pub struct CatalogEntry {
    pub name: &'static str,
    pub state: StateTensor<f64>,
    pub expected: Vec<Expected>,
    pub note: &'static str,
}

fn exp_list(pairs: &[(&'static str, f64)]) -> Vec<Expected> {
    pairs
        .iter()
        .map(|(n, a)| Expected {
            invariant: n,
            abs: *a,
        })
        .collect()
}

/// Superposition of two-particle basis states with complex weights.
fn superpose2(terms: &[(usize, usize, C64)]) -> StateTensor<f64> {
    let mut s = StateTensor::zeros(2).unwrap();
    for (j, k, w) in terms {
        s.set(&[*j, *k], *w);
    }
    s
}

fn superpose3(terms: &[(usize, usize, usize, C64)]) -> StateTensor<f64> {
    let mut s = StateTensor::zeros(3).unwrap();
    for (j, k, l, w) in terms {
        s.set(&[*j, *k, *l], *w);
    }
    s
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn im(x: f64) -> C64 {
    C64::new(0.0, x)
}

/// All catalog state names in stable order.
pub fn catalog_state_names() -> Vec<&'static str> {
    vec![
        "epr2", "i2max", "i2amax", "i2bmax", "xccx", "xccx2", "xccx3", "xccx4", "xccx5", "xccx6",
        "utoy", "utoya", "toi", "toi2", "req1", "req2", "req3", "w3",
    ]
}

/// Look up an example state by name. Unknown names list the valid ones.
pub fn catalog_state(name: &str) -> Result<CatalogEntry, StateError> {
    let inv_sqrt2 = 1.0 / 2f64.sqrt();
    let inv_sqrt3 = 1.0 / 3f64.sqrt();
    let inv_sqrt5 = 1.0 / 5f64.sqrt();

    // zero magnitudes shared by families of states below
    let twop_zero_q = [("Q1", 0.0), ("Q2", 0.0), ("Q3", 0.0), ("Q4", 0.0)];
    let twop_zero_i = [("I1", 0.0), ("I2", 0.0), ("I2A", 0.0), ("I2B", 0.0)];

    let entry = match name {
        "epr2" => CatalogEntry {
            name: "epr2",
            state: superpose2(&[(0, 1, re(inv_sqrt2)), (1, 0, im(-inv_sqrt2))]),
            expected: exp_list(&[
                ("I1", 0.5),
                ("I2", 0.0),
                ("I2A", 0.0),
                ("I2B", 0.0),
                ("R1", 0.25),
                ("R4", 0.25),
                ("T1", 0.5),
                ("R2", 0.0),
                ("R3", 0.0),
                ("R5", 0.0),
                ("R6", 0.0),
                ("T2", 0.0),
                ("N1N4mN2N3", 0.0),
                ("Q1", 0.0),
                ("Q2", 0.0),
                ("Q3", 0.0),
                ("Q4", 0.0),
            ]),
            note: "spinor EPR pair; maximal first bilinear invariant",
        },
        "i2max" => CatalogEntry {
            name: "i2max",
            state: superpose2(&[(1, 3, re(inv_sqrt2)), (2, 0, re(-inv_sqrt2))]),
            expected: exp_list(&[
                ("I2", 0.5),
                ("I1", 0.0),
                ("I2A", 0.0),
                ("I2B", 0.0),
                ("R3", 0.25),
                ("R6", 0.25),
                ("T1", 0.5),
                ("R1", 0.0),
                ("R2", 0.0),
                ("R4", 0.0),
                ("R5", 0.0),
                ("T2", 0.0),
                ("N1N4mN2N3", 0.0),
                ("Q1", 0.0),
                ("Q2", 0.0),
                ("Q3", 0.0),
                ("Q4", 0.0),
            ]),
            note: "maximal second bilinear invariant",
        },
        "i2amax" => CatalogEntry {
            name: "i2amax",
            state: superpose2(&[(0, 0, re(inv_sqrt2)), (1, 3, re(-inv_sqrt2))]),
            expected: exp_list(&[
                ("I2A", 0.5),
                ("I1", 0.0),
                ("I2", 0.0),
                ("I2B", 0.0),
                ("R1", 0.25),
                ("R6", 0.25),
                ("T1", 0.5),
                ("R2", 0.0),
                ("R3", 0.0),
                ("R4", 0.0),
                ("R5", 0.0),
                ("T2", 0.0),
                ("N1N4mN2N3", 0.0),
                ("Q1", 0.0),
                ("Q2", 0.0),
                ("Q3", 0.0),
                ("Q4", 0.0),
            ]),
            note: "maximal mixed bilinear invariant",
        },
        "i2bmax" => CatalogEntry {
            name: "i2bmax",
            state: superpose2(&[(1, 1, re(inv_sqrt2)), (2, 0, re(-inv_sqrt2))]),
            expected: exp_list(&[
                ("I2B", 0.5),
                ("I1", 0.0),
                ("I2", 0.0),
                ("I2A", 0.0),
                ("R3", 0.25),
                ("R4", 0.25),
                ("T1", 0.5),
                ("R1", 0.0),
                ("R2", 0.0),
                ("R5", 0.0),
                ("R6", 0.0),
                ("T2", 0.0),
                ("N1N4mN2N3", 0.0),
                ("Q1", 0.0),
                ("Q2", 0.0),
                ("Q3", 0.0),
                ("Q4", 0.0),
            ]),
            note: "maximal other mixed bilinear invariant",
        },
        "xccx" => CatalogEntry {
            name: "xccx",
            state: superpose2(&[(0, 1, re(inv_sqrt2)), (1, 3, re(inv_sqrt2))]),
            expected: {
                let mut v = exp_list(&[
                    ("R1", 0.25),
                    ("T1", 0.5),
                    ("R2", 0.0),
                    ("R3", 0.0),
                    ("R4", 0.0),
                    ("R5", 0.0),
                    ("R6", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "not indicated by any homogeneous invariant",
        },
        "xccx2" => CatalogEntry {
            name: "xccx2",
            state: superpose2(&[(0, 2, re(inv_sqrt2)), (3, 0, re(inv_sqrt2))]),
            expected: {
                let mut v = exp_list(&[
                    ("R3", 0.25),
                    ("T1", 0.5),
                    ("R1", 0.0),
                    ("R2", 0.0),
                    ("R4", 0.0),
                    ("R5", 0.0),
                    ("R6", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "",
        },
        "xccx3" => CatalogEntry {
            name: "xccx3",
            state: superpose2(&[(0, 0, re(inv_sqrt2)), (2, 1, re(inv_sqrt2))]),
            expected: {
                let mut v = exp_list(&[
                    ("R4", 0.25),
                    ("T1", 0.5),
                    ("R1", 0.0),
                    ("R2", 0.0),
                    ("R3", 0.0),
                    ("R5", 0.0),
                    ("R6", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "",
        },
        "xccx4" => CatalogEntry {
            name: "xccx4",
            state: superpose2(&[(0, 3, re(inv_sqrt2)), (2, 0, re(inv_sqrt2))]),
            expected: {
                let mut v = exp_list(&[
                    ("R6", 0.25),
                    ("T1", 0.5),
                    ("R1", 0.0),
                    ("R2", 0.0),
                    ("R3", 0.0),
                    ("R4", 0.0),
                    ("R5", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "",
        },
        "xccx5" => CatalogEntry {
            name: "xccx5",
            state: superpose2(&[(0, 2, re(inv_sqrt2)), (2, 0, re(inv_sqrt2))]),
            expected: {
                let mut v = exp_list(&[
                    ("T1", 0.5),
                    ("N1N4mN2N3", 1.0),
                    ("R1", 0.0),
                    ("R2", 0.0),
                    ("R3", 0.0),
                    ("R4", 0.0),
                    ("R5", 0.0),
                    ("R6", 0.0),
                    ("T2", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "",
        },
        "xccx6" => CatalogEntry {
            name: "xccx6",
            state: superpose2(&[
                (0, 2, re(inv_sqrt3)),
                (2, 0, C64::new(inv_sqrt3, inv_sqrt3)),
            ]),
            expected: {
                // published magnitudes; the T1 and T2 rows contradict the
                // published definitions of those polynomials on this state
                // (see the acceptance suite for the analysis)
                let mut v = exp_list(&[
                    ("T1", 4.0 / 3.0),
                    ("T2", 4.0 / 3.0),
                    ("N1N4mN2N3", 6.0 / 9.0),
                    ("R1", 0.0),
                    ("R2", 0.0),
                    ("R3", 0.0),
                    ("R4", 0.0),
                    ("R5", 0.0),
                    ("R6", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "published T1/T2 magnitudes are inconsistent with the printed expansions",
        },
        "utoy" => CatalogEntry {
            name: "utoy",
            state: superpose2(&[
                (0, 2, re(inv_sqrt3)),
                (1, 0, re(inv_sqrt3)),
                (2, 2, re(inv_sqrt3)),
            ]),
            expected: {
                let mut v = exp_list(&[
                    ("R1", 1.0 / 9.0),
                    ("R2", 1.0 / 9.0),
                    ("R3", 1.0 / 9.0),
                    ("R4", 0.0),
                    ("R5", 0.0),
                    ("R6", 0.0),
                    ("T1", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "",
        },
        "utoya" => CatalogEntry {
            name: "utoya",
            state: superpose2(&[
                (2, 0, re(inv_sqrt3)),
                (0, 1, re(inv_sqrt3)),
                (2, 2, re(inv_sqrt3)),
            ]),
            expected: {
                let mut v = exp_list(&[
                    ("R4", 1.0 / 9.0),
                    ("R5", 1.0 / 9.0),
                    ("R6", 1.0 / 9.0),
                    ("R1", 0.0),
                    ("R2", 0.0),
                    ("R3", 0.0),
                    ("T1", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v.extend(exp_list(&twop_zero_q));
                v
            },
            note: "lab swap of utoy",
        },
        "toi" => CatalogEntry {
            name: "toi",
            state: superpose2(&[
                (0, 2, re(inv_sqrt5)),
                (1, 1, re(inv_sqrt5)),
                (2, 2, re(-inv_sqrt5)),
                (3, 0, re(inv_sqrt5)),
                (3, 1, re(inv_sqrt5)),
            ]),
            expected: {
                let mut v = exp_list(&[
                    ("R1", 1.0 / 25.0),
                    ("R2", 1.0 / 25.0),
                    ("R3", 1.0 / 25.0),
                    ("R4", 1.0 / 25.0),
                    ("T1", 2.0 / 25.0),
                    ("R5", 0.0),
                    ("R6", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                    ("Q2", 1.0 / 25.0),
                    ("Q4", 1.0 / 25.0),
                    ("Q1", 0.0),
                    ("Q3", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v
            },
            note: "five-term state indicated by mixed bidegree (3,1) invariants",
        },
        "toi2" => CatalogEntry {
            name: "toi2",
            state: superpose2(&[
                (2, 0, re(inv_sqrt5)),
                (1, 1, re(inv_sqrt5)),
                (2, 2, re(-inv_sqrt5)),
                (0, 3, re(inv_sqrt5)),
                (1, 3, re(inv_sqrt5)),
            ]),
            expected: {
                let mut v = exp_list(&[
                    ("R1", 1.0 / 25.0),
                    ("R4", 1.0 / 25.0),
                    ("R5", 1.0 / 25.0),
                    ("R6", 1.0 / 25.0),
                    ("T1", 2.0 / 25.0),
                    ("R2", 0.0),
                    ("R3", 0.0),
                    ("T2", 0.0),
                    ("N1N4mN2N3", 0.0),
                    ("Q2", 1.0 / 25.0),
                    ("Q3", 1.0 / 25.0),
                    ("Q1", 0.0),
                    ("Q4", 0.0),
                ]);
                v.extend(exp_list(&twop_zero_i));
                v
            },
            note: "lab swap of toi",
        },
        "req1" => CatalogEntry {
            name: "req1",
            state: superpose3(&[
                (0, 0, 1, re(0.5)),
                (0, 1, 0, re(0.5)),
                (1, 0, 0, re(0.5)),
                (0, 0, 0, re(0.5)),
            ]),
            expected: {
                let mut v = exp_list(&[
                    ("B1", 0.125),
                    ("Z1", 0.125),
                    ("D1", 0.125),
                    ("W1", 1.0 / 16.0),
                ]);
                v.extend(zero_31_family_except(&["B1", "Z1", "D1"]));
                v
            },
            note: "affinely balanced but not balanced",
        },
        "req2" => CatalogEntry {
            name: "req2",
            state: superpose3(&[
                (0, 0, 3, re(0.5)),
                (0, 3, 0, re(0.5)),
                (3, 0, 0, re(0.5)),
                (2, 2, 2, re(0.5)),
            ]),
            expected: {
                let mut v = exp_list(&[("B8", 0.125), ("Z8", 0.125), ("D8", 0.125), ("W1", 0.0)]);
                v.extend(zero_31_family_except(&["B8", "Z8", "D8"]));
                v
            },
            note: "",
        },
        "req3" => CatalogEntry {
            name: "req3",
            state: superpose3(&[
                (0, 2, 0, re(0.5)),
                (0, 0, 1, re(0.5)),
                (0, 3, 2, re(0.5)),
                (1, 0, 2, re(0.5)),
            ]),
            expected: {
                let mut v = exp_list(&[("B6", 0.125), ("Z6", 0.125), ("D6", 0.125), ("W1", 0.0)]);
                v.extend(zero_31_family_except(&["B6", "Z6", "D6"]));
                v
            },
            note: "",
        },
        "w3" => CatalogEntry {
            name: "w3",
            state: superpose3(&[
                (0, 0, 1, re(inv_sqrt3)),
                (0, 1, 0, re(inv_sqrt3)),
                (1, 0, 0, re(inv_sqrt3)),
            ]),
            expected: {
                let mut v = exp_list(&[("W1", 4.0 / 27.0)]);
                v.extend(zero_31_family_except(&[]));
                v
            },
            note: "indicated only by a bidegree (3,3) invariant",
        },
        other => {
            return Err(StateError::Malformed(format!(
                "unknown catalog state `{other}`; known: {}",
                catalog_state_names().join(", ")
            )))
        }
    };
    Ok(entry)
}

/// Expected zeros for the whole 32-member (3,1) family minus the named ones.
fn zero_31_family_except(nonzero: &[&str]) -> Vec<Expected> {
    let mut out = Vec::new();
    for family in ["X", "Z", "B", "D"] {
        for k in 1..=8 {
            let name: &'static str = family_name(family, k);
            if !nonzero.contains(&name) {
                out.push(Expected {
                    invariant: name,
                    abs: 0.0,
                });
            }
        }
    }
    out
}

fn family_name(family: &str, k: usize) -> &'static str {
    const NAMES: [[&str; 8]; 4] = [
        ["X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"],
        ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8"],
        ["B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8"],
        ["D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8"],
    ];
    let row = match family {
        "X" => 0,
        "Z" => 1,
        "B" => 2,
        _ => 3,
    };
    NAMES[row][k - 1]
}

/// All catalog entries keyed by name.
pub fn all_catalog_states() -> BTreeMap<&'static str, CatalogEntry> {
    catalog_state_names()
        .into_iter()
        .map(|n| (n, catalog_state(n).expect("known name")))
        .collect()
}

/// Basis spinor helper reexported for state construction in tests and docs.
pub fn phi(j: usize) -> Spinor<f64> {
    Spinor::basis(j)
}
