//! Operator words built from multiplication and Demazure operators, and the
//! exhaustive relation suites for the polynomial representations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::demazure::{operators, DemazureOperator};
use crate::error::{AlgebraError, Result};
use crate::poly::{Even, Kind, Monomial, Polynomial, Spin, Variant};
use crate::scalar::Coeff;
use crate::weyl::WeylType;

/// A generator of the operator algebra: left multiplication by `x_i` or `∂_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    X(usize),
    D(usize),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::X(i) => write!(f, "x{i}"),
            Atom::D(i) => write!(f, "d{i}"),
        }
    }
}

/// Integer combination of products of atoms. In a product the rightmost
/// atom acts first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorExpr {
    pub terms: Vec<(i64, Vec<Atom>)>,
}

impl OperatorExpr {
    pub fn new(terms: Vec<(i64, Vec<Atom>)>) -> Self {
        OperatorExpr { terms }
    }

    pub fn identity() -> Self {
        OperatorExpr::new(vec![(1, vec![])])
    }

    /// Applies to `f`, propagating inexact even divisions.
    pub fn apply<C: Coeff, K: Kind>(
        &self,
        ops: &[DemazureOperator],
        f: &Polynomial<C, K>,
    ) -> Result<Polynomial<C, K>> {
        let mut out = Polynomial::zero(f.rank());
        for (c, word) in &self.terms {
            let g = apply_atoms(ops, word, f)?;
            out += &g.scale(&C::from_i64(*c));
        }
        Ok(out)
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, word)) in self.terms.iter().enumerate() {
            let body = if word.is_empty() {
                c.abs().to_string()
            } else {
                let w: Vec<String> = word.iter().map(Atom::to_string).collect();
                if c.abs() == 1 {
                    w.join(" ")
                } else {
                    format!("{} {}", c.abs(), w.join(" "))
                }
            };
            match (k, *c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Applies a product of atoms, rightmost first.
pub fn apply_atoms<C: Coeff, K: Kind>(
    ops: &[DemazureOperator],
    word: &[Atom],
    f: &Polynomial<C, K>,
) -> Result<Polynomial<C, K>> {
    let n = f.rank();
    let mut g = f.clone();
    for a in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = match *a {
            Atom::X(i) => {
                if i == 0 || i > n {
                    return Err(AlgebraError::IndexOutOfRange {
                        index: i,
                        context: format!("variables of rank {n}"),
                    });
                }
                g.mul_monomial_left(&Monomial::var(n, i), &C::one())
            }
            Atom::D(i) => ops
                .get(i.wrapping_sub(1))
                .ok_or_else(|| AlgebraError::IndexOutOfRange {
                    index: i,
                    context: "Demazure operators".into(),
                })?
                .try_apply(&g)?,
        };
    }
    Ok(g)
}

/// A family of operator identities `expr = 0`.
#[derive(Debug, Clone)]
pub struct RelationFamily {
    pub name: &'static str,
    pub statement: &'static str,
    pub instances: Vec<OperatorExpr>,
}

/// Outcome of one relation family.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: String,
    pub statement: String,
    pub instances: usize,
    pub evaluations: usize,
    pub passed: bool,
    pub division_errors: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RelationReport {
    pub variant: Variant,
    #[serde(rename = "type")]
    pub ty: WeylType,
    pub rank: usize,
    pub max_degree: u32,
    pub families: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.families.iter().all(|f| f.passed)
    }

    pub fn division_errors(&self) -> usize {
        self.families.iter().map(|f| f.division_errors).sum()
    }
}

fn x(i: usize) -> Atom {
    Atom::X(i)
}

fn d(i: usize) -> Atom {
    Atom::D(i)
}

fn rel(terms: Vec<(i64, Vec<Atom>)>) -> OperatorExpr {
    OperatorExpr::new(terms)
}

/// Defining relations of the spin nilHecke algebra (without the grading
/// family, which is checked separately).
pub fn spin_families(ty: WeylType, n: usize) -> Vec<RelationFamily> {
    let mut fams = Vec::new();
    let a_gens = n.saturating_sub(1);

    let mut v = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            v.push(rel(vec![(1, vec![x(i), x(j)]), (1, vec![x(j), x(i)])]));
        }
    }
    fams.push(RelationFamily {
        name: "anticommuting-variables",
        statement: "x_i x_j + x_j x_i = 0 (i != j)",
        instances: v,
    });
    fams.push(RelationFamily {
        name: "nil-square",
        statement: "d_i d_i = 0 (i < n)",
        instances: (1..=a_gens)
            .map(|i| rel(vec![(1, vec![d(i), d(i)])]))
            .collect(),
    });
    fams.push(RelationFamily {
        name: "braid",
        statement: "d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}",
        instances: (1..a_gens)
            .map(|i| {
                rel(vec![
                    (1, vec![d(i), d(i + 1), d(i)]),
                    (-1, vec![d(i + 1), d(i), d(i + 1)]),
                ])
            })
            .collect(),
    });
    let mut v = Vec::new();
    for i in 1..=a_gens {
        for j in i + 2..=a_gens {
            v.push(rel(vec![(1, vec![d(i), d(j)]), (1, vec![d(j), d(i)])]));
        }
    }
    fams.push(RelationFamily {
        name: "distant-anticommute",
        statement: "d_i d_j + d_j d_i = 0 (|i - j| > 1)",
        instances: v,
    });
    fams.push(RelationFamily {
        name: "dx-straightening-left",
        statement: "x_i d_i + d_i x_{i+1} = 1",
        instances: (1..=a_gens)
            .map(|i| {
                rel(vec![
                    (1, vec![x(i), d(i)]),
                    (1, vec![d(i), x(i + 1)]),
                    (-1, vec![]),
                ])
            })
            .collect(),
    });
    fams.push(RelationFamily {
        name: "dx-straightening-right",
        statement: "d_i x_i + x_{i+1} d_i = 1",
        instances: (1..=a_gens)
            .map(|i| {
                rel(vec![
                    (1, vec![d(i), x(i)]),
                    (1, vec![x(i + 1), d(i)]),
                    (-1, vec![]),
                ])
            })
            .collect(),
    });
    let mut v = Vec::new();
    for i in 1..=a_gens {
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            v.push(rel(vec![(1, vec![d(i), x(j)]), (1, vec![x(j), d(i)])]));
        }
    }
    fams.push(RelationFamily {
        name: "dx-anticommute",
        statement: "d_i x_j + x_j d_i = 0 (j != i, i+1)",
        instances: v,
    });

    match ty {
        WeylType::A => {}
        WeylType::B => {
            fams.push(RelationFamily {
                name: "b-nil-square",
                statement: "d_n d_n = 0",
                instances: vec![rel(vec![(1, vec![d(n), d(n)])])],
            });
            fams.push(RelationFamily {
                name: "b-quartic-braid",
                statement: "d_n d_{n-1} d_n d_{n-1} = -d_{n-1} d_n d_{n-1} d_n",
                instances: if n >= 2 {
                    vec![rel(vec![
                        (1, vec![d(n), d(n - 1), d(n), d(n - 1)]),
                        (1, vec![d(n - 1), d(n), d(n - 1), d(n)]),
                    ])]
                } else {
                    vec![]
                },
            });
            fams.push(RelationFamily {
                name: "b-distant-anticommute",
                statement: "d_n d_i + d_i d_n = 0 (i <= n-2)",
                instances: (1..=n.saturating_sub(2))
                    .map(|i| rel(vec![(1, vec![d(n), d(i)]), (1, vec![d(i), d(n)])]))
                    .collect(),
            });
            fams.push(RelationFamily {
                name: "b-dx-straightening",
                statement: "d_n x_n + x_n d_n = 1",
                instances: vec![rel(vec![
                    (1, vec![d(n), x(n)]),
                    (1, vec![x(n), d(n)]),
                    (-1, vec![]),
                ])],
            });
            fams.push(RelationFamily {
                name: "b-dx-anticommute",
                statement: "d_n x_i + x_i d_n = 0 (i < n)",
                instances: (1..n)
                    .map(|i| rel(vec![(1, vec![d(n), x(i)]), (1, vec![x(i), d(n)])]))
                    .collect(),
            });
        }
        WeylType::D => {
            fams.push(RelationFamily {
                name: "d-nil-square",
                statement: "d_n d_n = 0",
                instances: vec![rel(vec![(1, vec![d(n), d(n)])])],
            });
            fams.push(RelationFamily {
                name: "d-braid",
                statement: "d_n d_{n-2} d_n = d_{n-2} d_n d_{n-2}",
                instances: if n >= 3 {
                    vec![rel(vec![
                        (1, vec![d(n), d(n - 2), d(n)]),
                        (-1, vec![d(n - 2), d(n), d(n - 2)]),
                    ])]
                } else {
                    vec![]
                },
            });
            fams.push(RelationFamily {
                name: "d-distant-anticommute",
                statement: "d_n d_i + d_i d_n = 0 (i <= n-3)",
                instances: (1..=n.saturating_sub(3))
                    .map(|i| rel(vec![(1, vec![d(n), d(i)]), (1, vec![d(i), d(n)])]))
                    .collect(),
            });
            fams.push(RelationFamily {
                name: "d-commute",
                statement: "d_n d_{n-1} - d_{n-1} d_n = 0",
                instances: vec![rel(vec![
                    (1, vec![d(n), d(n - 1)]),
                    (-1, vec![d(n - 1), d(n)]),
                ])],
            });
            fams.push(RelationFamily {
                name: "d-dx-straightening-left",
                statement: "x_{n-1} d_n - d_n x_n = 1",
                instances: vec![rel(vec![
                    (1, vec![x(n - 1), d(n)]),
                    (-1, vec![d(n), x(n)]),
                    (-1, vec![]),
                ])],
            });
            fams.push(RelationFamily {
                name: "d-dx-straightening-right",
                statement: "d_n x_{n-1} - x_n d_n = 1",
                instances: vec![rel(vec![
                    (1, vec![d(n), x(n - 1)]),
                    (-1, vec![x(n), d(n)]),
                    (-1, vec![]),
                ])],
            });
            fams.push(RelationFamily {
                name: "d-dx-anticommute",
                statement: "d_n x_i + x_i d_n = 0 (i <= n-2)",
                instances: (1..=n.saturating_sub(2))
                    .map(|i| rel(vec![(1, vec![d(n), x(i)]), (1, vec![x(i), d(n)])]))
                    .collect(),
            });
        }
    }
    fams
}

/// Coxeter-nil relations of the classical nilHecke algebra plus the
/// straightening relations `x d_i - d_i s_i(x) = (x - s_i(x)) / α_i`.
pub fn even_families(ty: WeylType, n: usize) -> Result<Vec<RelationFamily>> {
    let ops = operators(Variant::Even, ty, n)?;
    let gens = ty.num_generators(n);
    let a_gens = n.saturating_sub(1);
    let mut fams = Vec::new();

    let mut v = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            v.push(rel(vec![(1, vec![x(i), x(j)]), (-1, vec![x(j), x(i)])]));
        }
    }
    fams.push(RelationFamily {
        name: "commuting-variables",
        statement: "x_i x_j = x_j x_i",
        instances: v,
    });
    fams.push(RelationFamily {
        name: "nil-square",
        statement: "d_i d_i = 0",
        instances: (1..=gens)
            .map(|i| rel(vec![(1, vec![d(i), d(i)])]))
            .collect(),
    });
    fams.push(RelationFamily {
        name: "braid",
        statement: "d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1} (i+1 < n)",
        instances: (1..a_gens)
            .map(|i| {
                rel(vec![
                    (1, vec![d(i), d(i + 1), d(i)]),
                    (-1, vec![d(i + 1), d(i), d(i + 1)]),
                ])
            })
            .collect(),
    });
    // Commuting pairs: A-type generators far apart, plus the last generator
    // with everything it is not joined to in the Coxeter graph.
    let mut v = Vec::new();
    for i in 1..=a_gens {
        for j in i + 2..=a_gens {
            v.push(rel(vec![(1, vec![d(i), d(j)]), (-1, vec![d(j), d(i)])]));
        }
    }
    let last_far = match ty {
        WeylType::A => 0,
        WeylType::B => n.saturating_sub(2),
        WeylType::D => n.saturating_sub(3),
    };
    for i in 1..=last_far {
        v.push(rel(vec![(1, vec![d(n), d(i)]), (-1, vec![d(i), d(n)])]));
    }
    if ty == WeylType::D {
        v.push(rel(vec![
            (1, vec![d(n), d(n - 1)]),
            (-1, vec![d(n - 1), d(n)]),
        ]));
    }
    fams.push(RelationFamily {
        name: "commute",
        statement: "d_i d_j = d_j d_i for non-adjacent nodes",
        instances: v,
    });
    match ty {
        WeylType::A => {}
        WeylType::B => fams.push(RelationFamily {
            name: "b-quartic-braid",
            statement: "d_n d_{n-1} d_n d_{n-1} = d_{n-1} d_n d_{n-1} d_n",
            instances: if n >= 2 {
                vec![rel(vec![
                    (1, vec![d(n), d(n - 1), d(n), d(n - 1)]),
                    (-1, vec![d(n - 1), d(n), d(n - 1), d(n)]),
                ])]
            } else {
                vec![]
            },
        }),
        WeylType::D => fams.push(RelationFamily {
            name: "d-braid",
            statement: "d_n d_{n-2} d_n = d_{n-2} d_n d_{n-2}",
            instances: if n >= 3 {
                vec![rel(vec![
                    (1, vec![d(n), d(n - 2), d(n)]),
                    (-1, vec![d(n - 2), d(n), d(n - 2)]),
                ])]
            } else {
                vec![]
            },
        }),
    }
    let mut v = Vec::new();
    for o in &ops {
        let alpha: Polynomial<BigInt, Even> = o.root();
        for j in 1..=n {
            let (neg, t) = o.point_action().image(j - 1);
            let xj = Polynomial::<BigInt, Even>::var(n, j);
            let sx = Polynomial::<BigInt, Even>::var(n, t + 1);
            let sx = if neg { -sx } else { sx };
            let c = xj
                .sub(&sx)
                .div_exact_right(&alpha)?
                .as_constant()
                .and_then(|c: BigInt| c.to_i64())
                .ok_or_else(|| {
                    AlgebraError::DivisionNotExact(format!(
                        "(x{j} - s(x{j}))/α is not an integer constant"
                    ))
                })?;
            let i = o.index();
            let s = if neg { 1 } else { -1 };
            v.push(rel(vec![
                (1, vec![x(j), d(i)]),
                (s, vec![d(i), x(t + 1)]),
                (-c, vec![]),
            ]));
        }
    }
    fams.push(RelationFamily {
        name: "dual-straightening",
        statement: "x d_i - d_i s_i(x) = (x - s_i(x)) / alpha_i",
        instances: v,
    });
    Ok(fams)
}

fn check_family<K: Kind>(
    ops: &[DemazureOperator],
    fam: &RelationFamily,
    monos: &[Monomial],
) -> RelationCheck {
    let results: Vec<(usize, Option<String>)> = fam
        .instances
        .par_iter()
        .map(|inst| {
            let mut div_errors = 0;
            let mut counter = None;
            for m in monos {
                let f = Polynomial::<BigInt, K>::monomial(m.clone());
                match inst.apply(ops, &f) {
                    Ok(g) if g.is_zero() => {}
                    Ok(g) => {
                        counter.get_or_insert_with(|| format!("({inst}) applied to {f} gives {g}"));
                    }
                    Err(e) => {
                        div_errors += 1;
                        counter.get_or_insert_with(|| format!("({inst}) applied to {f}: {e}"));
                    }
                }
            }
            (div_errors, counter)
        })
        .collect();
    let division_errors = results.iter().map(|r| r.0).sum();
    let counterexample = results.into_iter().find_map(|r| r.1);
    RelationCheck {
        family: fam.name.to_string(),
        statement: fam.statement.to_string(),
        instances: fam.instances.len(),
        evaluations: fam.instances.len() * monos.len(),
        passed: counterexample.is_none(),
        division_errors,
        counterexample,
    }
}

/// Every operator lowers degree by exactly one (q-degree by 2, flipping
/// parity) on every monomial.
fn check_grading<K: Kind>(ops: &[DemazureOperator], monos: &[Monomial]) -> RelationCheck {
    let mut counter = None;
    let mut division_errors = 0;
    for o in ops {
        for m in monos {
            let f = Polynomial::<BigInt, K>::monomial(m.clone());
            match o.try_apply(&f) {
                Ok(g) => {
                    let ok = g.is_zero()
                        || (g.is_homogeneous() && g.degree().map(|d| d + 1) == Some(m.degree()));
                    if !ok {
                        counter.get_or_insert_with(|| {
                            format!("d{} applied to {f} gives {g}", o.index())
                        });
                    }
                }
                Err(e) => {
                    division_errors += 1;
                    counter.get_or_insert_with(|| format!("d{} applied to {f}: {e}", o.index()));
                }
            }
        }
    }
    RelationCheck {
        family: "grading".into(),
        statement: "deg(d_i f) = deg(f) - 1 for monomials f".into(),
        instances: ops.len(),
        evaluations: ops.len() * monos.len(),
        passed: counter.is_none(),
        division_errors,
        counterexample: counter,
    }
}

/// Checks every defining relation on all monomials of degree at most
/// `max_degree`.
pub fn verify_relations(
    variant: Variant,
    ty: WeylType,
    n: usize,
    max_degree: u32,
) -> Result<RelationReport> {
    let ops = operators(variant, ty, n)?;
    let monos = Monomial::all_up_to_degree(n, max_degree);
    let families = match variant {
        Variant::Spin => {
            let mut v: Vec<RelationCheck> = spin_families(ty, n)
                .iter()
                .map(|f| check_family::<Spin>(&ops, f, &monos))
                .collect();
            v.push(check_grading::<Spin>(&ops, &monos));
            v
        }
        Variant::Even => {
            let mut v: Vec<RelationCheck> = even_families(ty, n)?
                .iter()
                .map(|f| check_family::<Even>(&ops, f, &monos))
                .collect();
            v.push(check_grading::<Even>(&ops, &monos));
            v
        }
    };
    Ok(RelationReport {
        variant,
        ty,
        rank: n,
        max_degree,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_counts() {
        assert_eq!(spin_families(WeylType::B, 2).len() + 1, 13);
        assert_eq!(spin_families(WeylType::D, 3).len() + 1, 15);
    }

    #[test]
    fn spin_b2_passes() {
        let r = verify_relations(Variant::Spin, WeylType::B, 2, 8).unwrap();
        assert_eq!(r.families.len(), 13);
        assert!(
            r.all_passed(),
            "{:#?}",
            r.families.iter().filter(|f| !f.passed).collect::<Vec<_>>()
        );
    }

    #[test]
    fn spin_b1_straightening() {
        let r = verify_relations(Variant::Spin, WeylType::B, 1, 8).unwrap();
        let f = r
            .families
            .iter()
            .find(|f| f.family == "b-dx-straightening")
            .unwrap();
        assert!(f.passed);
        assert_eq!(f.evaluations, 9);
        assert!(r.all_passed());
    }

    #[test]
    fn spin_d3_passes() {
        let r = verify_relations(Variant::Spin, WeylType::D, 3, 8).unwrap();
        assert!(
            r.all_passed(),
            "{:#?}",
            r.families.iter().filter(|f| !f.passed).collect::<Vec<_>>()
        );
        assert!(r
            .families
            .iter()
            .any(|f| f.family == "d-commute" && f.instances == 1));
    }

    #[test]
    fn even_suites_pass_without_division_errors() {
        for (ty, n) in [(WeylType::A, 3), (WeylType::B, 2), (WeylType::D, 3)] {
            let r = verify_relations(Variant::Even, ty, n, 6).unwrap();
            assert!(
                r.all_passed(),
                "{ty}{n}: {:#?}",
                r.families.iter().filter(|f| !f.passed).collect::<Vec<_>>()
            );
            assert_eq!(r.division_errors(), 0);
        }
    }

    #[test]
    fn a_wrong_sign_is_caught() {
        // The type B quartic braid with the sign of the even algebra fails.
        let ops = operators(Variant::Spin, WeylType::B, 2).unwrap();
        let bad = RelationFamily {
            name: "wrong",
            statement: "",
            instances: vec![OperatorExpr::new(vec![
                (1, vec![Atom::D(2), Atom::D(1), Atom::D(2), Atom::D(1)]),
                (-1, vec![Atom::D(1), Atom::D(2), Atom::D(1), Atom::D(2)]),
            ])],
        };
        let c = check_family::<Spin>(&ops, &bad, &Monomial::all_up_to_degree(2, 6));
        assert!(!c.passed);
        assert!(c.counterexample.is_some());
    }

    #[test]
    fn expression_display() {
        let e = OperatorExpr::new(vec![
            (1, vec![Atom::D(2), Atom::X(2)]),
            (1, vec![Atom::X(2), Atom::D(2)]),
            (-1, vec![]),
        ]);
        assert_eq!(e.to_string(), "d2 x2 + x2 d2 - 1");
    }
}
