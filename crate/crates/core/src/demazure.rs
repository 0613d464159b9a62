//! Demazure operators on skew and commutative polynomials.
//!
//! Spin operators are determined by their values on single variables and the
//! twisted Leibniz rule `∂(fg) = ∂(f) g + σ(f) ∂(g)`, where `σ` is the matching
//! point action. On a monomial `y1 y2 ... yd` (letters in canonical order)
//! this unrolls to
//!
//! `∂(y1 ... yd) = Σ_k σ(y1 ... y_{k-1}) ∂(y_k) y_{k+1} ... yd`.
//!
//! Even operators are the divided differences `(f - σ f) / α`.
//!
//! | type | index | spin `σ` | spin `∂(x_j)` | even `σ` | `α` |
//! |---|---|---|---|---|---|
//! | any | `i < n` | `x_i ↔ -x_{i+1}`, others `-x_j` | `1` for `j ∈ {i, i+1}` | swap | `x_i - x_{i+1}` |
//! | B | `n` | `x_j -> -x_j` | `1` for `j = n` | `x_n -> -x_n` | `2 x_n` |
//! | D | `n` | `x_{n-1} ↔ x_n`, others `-x_j` | `1` at `n-1`, `-1` at `n` | `x_{n-1} ↔ -x_n` | `x_{n-1} + x_n` |

use crate::error::{AlgebraError, Result};
use crate::poly::{Kind, Monomial, Polynomial, SignedSubstitution, Variant};
use crate::scalar::Coeff;
use crate::weyl::WeylType;

/// One simple Demazure operator `∂_i` of a given variant, type and rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DemazureOperator {
    variant: Variant,
    ty: WeylType,
    rank: usize,
    index: usize,
    sigma: SignedSubstitution,
}

/// Point action of the `i`-th simple reflection on polynomials.
pub fn point_action(
    variant: Variant,
    ty: WeylType,
    n: usize,
    i: usize,
) -> Result<SignedSubstitution> {
    ty.check_rank(n)?;
    if i == 0 || i > ty.num_generators(n) {
        return Err(AlgebraError::IndexOutOfRange {
            index: i,
            context: format!("generators of {ty}{n}"),
        });
    }
    let spin = variant == Variant::Spin;
    // Start from the action on variables away from the generator.
    let mut images: Vec<(bool, usize)> = (0..n).map(|j| (spin, j)).collect();
    if i < n {
        images[i - 1] = (spin, i);
        images[i] = (spin, i - 1);
        if !spin {
            images = (0..n).map(|j| (false, j)).collect();
            images.swap(i - 1, i);
        }
    } else {
        match (ty, spin) {
            (WeylType::B, true) => {}
            (WeylType::B, false) => images[n - 1] = (true, n - 1),
            (WeylType::D, true) => {
                images[n - 2] = (false, n - 1);
                images[n - 1] = (false, n - 2);
            }
            (WeylType::D, false) => {
                images[n - 2] = (true, n - 1);
                images[n - 1] = (true, n - 2);
            }
            (WeylType::A, _) => unreachable!("type A has no generator n"),
        }
    }
    Ok(SignedSubstitution::new(images))
}

impl DemazureOperator {
    pub fn new(variant: Variant, ty: WeylType, n: usize, i: usize) -> Result<Self> {
        let sigma = point_action(variant, ty, n, i)?;
        Ok(DemazureOperator {
            variant,
            ty,
            rank: n,
            index: i,
            sigma,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn weyl_type(&self) -> WeylType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn point_action(&self) -> &SignedSubstitution {
        &self.sigma
    }

    /// Spin value `∂(x_j)`, 1-based `j`.
    pub fn value_on_variable(&self, j: usize) -> i64 {
        let (i, n) = (self.index, self.rank);
        if i < n {
            i64::from(j == i || j == i + 1)
        } else if self.ty == WeylType::B {
            i64::from(j == n)
        } else if j == n {
            -1
        } else {
            i64::from(j == n - 1)
        }
    }

    /// Root `α` of the even operator as coefficients on the variables.
    pub fn root_coefficients(&self) -> Vec<i64> {
        let (i, n) = (self.index, self.rank);
        let mut r = vec![0; n];
        if i < n {
            r[i - 1] = 1;
            r[i] = -1;
        } else if self.ty == WeylType::B {
            r[n - 1] = 2;
        } else {
            r[n - 2] = 1;
            r[n - 1] = 1;
        }
        r
    }

    pub fn root<C: Coeff, K: Kind>(&self) -> Polynomial<C, K> {
        let mut p = Polynomial::zero(self.rank);
        for (j, c) in self.root_coefficients().into_iter().enumerate() {
            p.add_term(Monomial::var(self.rank, j + 1), C::from_i64(c));
        }
        p
    }

    fn check<C: Coeff, K: Kind>(&self, f: &Polynomial<C, K>) -> Result<()> {
        if K::VARIANT != self.variant {
            return Err(AlgebraError::TypeMismatch(format!(
                "{} operator applied to a {} polynomial",
                self.variant,
                K::VARIANT
            )));
        }
        if f.rank() != self.rank {
            return Err(AlgebraError::RankMismatch {
                expected: self.rank,
                found: f.rank(),
            });
        }
        Ok(())
    }

    /// Applies the operator, surfacing inexact even divisions as errors.
    pub fn try_apply<C: Coeff, K: Kind>(&self, f: &Polynomial<C, K>) -> Result<Polynomial<C, K>> {
        self.check(f)?;
        match self.variant {
            Variant::Spin => Ok(self.apply_spin(f)),
            Variant::Even => self.apply_even(f),
        }
    }

    /// Applies the operator.
    ///
    /// # Panics
    ///
    /// On variant or rank mismatch, or if an even division is not exact.
    pub fn apply<C: Coeff, K: Kind>(&self, f: &Polynomial<C, K>) -> Polynomial<C, K> {
        self.try_apply(f)
            .unwrap_or_else(|e| panic!("∂{}: {e}", self.index))
    }

    fn apply_spin<C: Coeff, K: Kind>(&self, f: &Polynomial<C, K>) -> Polynomial<C, K> {
        let mut out = Polynomial::zero(self.rank);
        for (m, c) in f.terms() {
            self.spin_monomial(m, c, &mut out);
        }
        out
    }

    /// Adds `c · ∂(x^m)` to `out`.
    fn spin_monomial<C: Coeff, K: Kind>(&self, m: &Monomial, c: &C, out: &mut Polynomial<C, K>) {
        let n = self.rank;
        let letters = m.letters();
        // σ(y1 ... y_{k-1}) as (negative?, monomial); suffix exponents shrink.
        let mut prefix_neg = false;
        let mut prefix = Monomial::one(n);
        let mut suffix = m.clone();
        for &y in &letters {
            suffix.0[y - 1] -= 1;
            let v = self.value_on_variable(y);
            if v != 0 {
                let (neg, prod) = prefix.mul::<K>(&suffix);
                let mut coeff = c.clone() * C::from_i64(v);
                if neg != prefix_neg {
                    coeff = -coeff;
                }
                out.add_term(prod, coeff);
            }
            let (flip, t) = self.sigma.image(y - 1);
            let (neg, p2) = prefix.mul::<K>(&Monomial::var(n, t + 1));
            prefix = p2;
            prefix_neg ^= neg ^ flip;
        }
    }

    fn apply_even<C: Coeff, K: Kind>(&self, f: &Polynomial<C, K>) -> Result<Polynomial<C, K>> {
        let diff = f.sub(&self.sigma.apply(f));
        if diff.is_zero() {
            return Ok(diff);
        }
        diff.div_exact_right(&self.root())
    }
}

/// All simple operators of a variant, type and rank, indexed from 1.
pub fn operators(variant: Variant, ty: WeylType, n: usize) -> Result<Vec<DemazureOperator>> {
    ty.check_rank(n)?;
    (1..=ty.num_generators(n))
        .map(|i| DemazureOperator::new(variant, ty, n, i))
        .collect()
}

/// `∂_{i1} ∘ ... ∘ ∂_{il}` applied to `f` (so `∂_{il}` acts first).
pub fn apply_word<C: Coeff, K: Kind>(
    ops: &[DemazureOperator],
    word: &[usize],
    f: &Polynomial<C, K>,
) -> Result<Polynomial<C, K>> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        let op = ops
            .get(i.wrapping_sub(1))
            .ok_or_else(|| AlgebraError::IndexOutOfRange {
                index: i,
                context: "operator word".into(),
            })?;
        g = op.try_apply(&g)?;
    }
    Ok(g)
}
