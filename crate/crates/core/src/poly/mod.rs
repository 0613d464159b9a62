//! Sparse polynomials over the skew-polynomial ring (pairwise anticommuting
//! variables) and over the ordinary commutative polynomial ring.
//!
//! Both rings share one representation: a map from exponent vectors to
//! nonzero coefficients, always in the canonical variable order
//! `x1^r1 x2^r2 ... xn^rn`. The commutation rule is a type-level [`Kind`]:
//! [`Spin`] picks up a sign whenever two distinct variables are swapped,
//! [`Even`] never does.

mod format;

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::marker::PhantomData;
use std::ops::{AddAssign, Mul, Neg, SubAssign};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::scalar::{Coeff, Scalar};

pub use format::{parse_polynomial, PolynomialJson, TermJson};

/// Which family of algebras an object belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Odd variables, odd Demazure operators.
    Spin,
    /// Commuting variables, classical Demazure operators.
    Even,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Spin => "spin",
            Variant::Even => "even",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "spin" | "odd" => Ok(Variant::Spin),
            "even" | "classical" => Ok(Variant::Even),
            other => Err(AlgebraError::Parse(format!("unknown variant `{other}`"))),
        }
    }
}

/// Commutation rule of the polynomial ring.
pub trait Kind: Copy + Clone + Debug + Default + PartialEq + Eq + Send + Sync + 'static {
    const VARIANT: Variant;

    /// True when reordering `x^a · x^b` into canonical form costs a sign.
    fn merge_is_negative(a: &Monomial, b: &Monomial) -> bool;
}

/// Pairwise anticommuting variables: `xi xj = -xj xi` for `i != j`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Spin;

/// Ordinary commuting variables.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Even;

impl Kind for Spin {
    const VARIANT: Variant = Variant::Spin;

    fn merge_is_negative(a: &Monomial, b: &Monomial) -> bool {
        // Each letter xj of the right factor passes every letter xi (i > j)
        // of the left factor: sign exponent is sum_{j < i} b_j a_i.
        let mut passed: u64 = 0;
        let mut below: u64 = 0;
        for (ai, bi) in a.0.iter().zip(&b.0) {
            passed += below * u64::from(*ai);
            below += u64::from(*bi);
        }
        passed % 2 == 1
    }
}

impl Kind for Even {
    const VARIANT: Variant = Variant::Even;

    fn merge_is_negative(_: &Monomial, _: &Monomial) -> bool {
        false
    }
}

/// Exponent vector of a canonically ordered monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x{:?}", self.0)
    }
}

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    /// The variable `x_i`, 1-based.
    pub fn var(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn q_degree(&self) -> i64 {
        2 * i64::from(self.degree())
    }

    pub fn parity(&self) -> u8 {
        (self.degree() % 2) as u8
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `x^self · x^other` as `(negative?, product)`.
    pub fn mul<K: Kind>(&self, other: &Monomial) -> (bool, Monomial) {
        debug_assert_eq!(self.rank(), other.rank());
        let neg = K::merge_is_negative(self, other);
        let exps = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        (neg, Monomial(exps))
    }

    /// Exponent vector `self - other` when `other` divides `self` termwise.
    pub fn checked_sub(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Expands into a word of single variables (1-based indices).
    pub fn letters(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
            .collect()
    }

    /// All monomials of the given total degree in `rank` variables, in
    /// increasing lexicographic order.
    pub fn all_of_degree(rank: usize, degree: u32) -> Vec<Monomial> {
        fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if cur.len() + 1 == rank {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(rank, left - e, cur, out);
                cur.pop();
            }
        }
        if rank == 0 {
            return if degree == 0 {
                vec![Monomial(vec![])]
            } else {
                vec![]
            };
        }
        let mut out = Vec::new();
        rec(rank, degree, &mut Vec::with_capacity(rank), &mut out);
        out.sort();
        out
    }

    /// All monomials of total degree at most `max_degree`.
    pub fn all_up_to_degree(rank: usize, max_degree: u32) -> Vec<Monomial> {
        (0..=max_degree)
            .flat_map(|d| Monomial::all_of_degree(rank, d))
            .collect()
    }
}

/// Ring endomorphism sending each variable to a signed variable,
/// `x_j -> ±x_{target(j)}`, with `target` a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedSubstitution {
    /// `(negate, target)` per source variable, 0-based targets.
    images: Vec<(bool, usize)>,
}

impl SignedSubstitution {
    pub fn identity(rank: usize) -> Self {
        SignedSubstitution {
            images: (0..rank).map(|j| (false, j)).collect(),
        }
    }

    /// Builds from `(negate, target)` pairs with 0-based targets.
    pub fn new(images: Vec<(bool, usize)>) -> Self {
        let mut seen = vec![false; images.len()];
        for &(_, t) in &images {
            assert!(
                t < images.len() && !seen[t],
                "substitution must permute variables"
            );
            seen[t] = true;
        }
        SignedSubstitution { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `x_j` (0-based) as `(negate, target)`.
    pub fn image(&self, j: usize) -> (bool, usize) {
        self.images[j]
    }

    pub fn compose(&self, inner: &SignedSubstitution) -> SignedSubstitution {
        // (self ∘ inner)(x_j) = self(±x_t) = ±self(x_t)
        SignedSubstitution {
            images: inner
                .images
                .iter()
                .map(|&(n1, t)| {
                    let (n2, u) = self.images[t];
                    (n1 ^ n2, u)
                })
                .collect(),
        }
    }

    pub fn apply_monomial<K: Kind>(&self, m: &Monomial) -> (bool, Monomial) {
        let n = self.rank();
        let mut neg = false;
        let mut exps = vec![0u32; n];
        for (j, &e) in m.0.iter().enumerate() {
            let (flip, t) = self.images[j];
            exps[t] += e;
            if flip && e % 2 == 1 {
                neg = !neg;
            }
        }
        if K::VARIANT == Variant::Spin {
            // Reorder the word t(1)^r1 t(2)^r2 ... into canonical order.
            let mut swaps: u64 = 0;
            for j in 0..n {
                for k in j + 1..n {
                    if self.images[j].1 > self.images[k].1 {
                        swaps += u64::from(m.0[j]) * u64::from(m.0[k]);
                    }
                }
            }
            if swaps % 2 == 1 {
                neg = !neg;
            }
        }
        (neg, Monomial(exps))
    }

    pub fn apply<C: Coeff, K: Kind>(&self, f: &Polynomial<C, K>) -> Polynomial<C, K> {
        assert_eq!(self.rank(), f.rank(), "substitution rank mismatch");
        let mut out = Polynomial::zero(f.rank());
        for (m, c) in f.terms() {
            let (neg, m2) = self.apply_monomial::<K>(m);
            out.add_term(m2, if neg { -c.clone() } else { c.clone() });
        }
        out
    }
}

/// Finite linear combination of canonical monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C, K> {
    rank: usize,
    terms: BTreeMap<Monomial, C>,
    kind: PhantomData<K>,
}

/// Integer skew polynomial, an element of the odd polynomial ring.
pub type SkewPolynomial = Polynomial<BigInt, Spin>;
/// Integer polynomial in commuting variables.
pub type EvenPolynomial = Polynomial<BigInt, Even>;

impl<C: Coeff, K: Kind> Debug for Polynomial<C, K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Coeff, K: Kind> Polynomial<C, K> {
    pub fn zero(rank: usize) -> Self {
        Polynomial {
            rank,
            terms: BTreeMap::new(),
            kind: PhantomData,
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, C::one())
    }

    pub fn constant(rank: usize, c: C) -> Self {
        Self::term(Monomial::one(rank), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero(m.rank());
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    /// The variable `x_i`, 1-based.
    pub fn var(rank: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(rank, i))
    }

    /// Builds from exponent vectors without reordering signs.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.len(), rank, "exponent vector length must equal rank");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Ordered product of single variables, e.g. `[2, 1]` is `x2 x1`.
    pub fn word(rank: usize, letters: &[usize]) -> Self {
        letters
            .iter()
            .fold(Self::one(rank), |acc, &i| acc.mul(&Self::var(rank, i)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, C> {
        self.terms
    }

    /// Number of terms; emptiness is [`Polynomial::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert_eq!(m.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn sub_term(&mut self, m: Monomial, c: &C) {
        self.add_term(m, -c.clone())
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// Degree-`d` component.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut p = Self::zero(self.rank);
        for (m, c) in &self.terms {
            if m.degree() == d {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.rank);
        }
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = c.clone() * s.clone();
        }
        p
    }

    /// Left multiplication by `c · x^m`.
    pub fn mul_monomial_left(&self, m: &Monomial, c: &C) -> Self {
        let mut p = Self::zero(self.rank);
        for (m2, c2) in &self.terms {
            let (neg, prod) = m.mul::<K>(m2);
            let v = c.clone() * c2.clone();
            p.add_term(prod, if neg { -v } else { v });
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "polynomial rank mismatch");
        let mut p = Self::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (neg, m) = ma.mul::<K>(mb);
                let v = ca.clone() * cb.clone();
                p.add_term(m, if neg { -v } else { v });
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.rank), |acc, _| acc.mul(self))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D, K> {
        let mut p = Polynomial::zero(self.rank);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    pub fn to_scalar(&self) -> Polynomial<Scalar, K> {
        self.map_coeffs(Coeff::to_scalar)
    }

    /// Leading-coefficient-free division by a constant, if exact.
    pub fn div_scalar(&self, d: &C) -> Option<Self> {
        let mut p = Self::zero(self.rank);
        for (m, c) in &self.terms {
            p.terms.insert(m.clone(), c.div_exact(d)?);
        }
        Some(p)
    }

    /// Exact division `self = q · divisor` (divisor on the right), computed
    /// by lexicographic leading-term elimination.
    pub fn div_exact_right(&self, divisor: &Self) -> Result<Self> {
        let (lm, lc) = divisor
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| AlgebraError::DivisionNotExact("division by zero".into()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let fail = || {
                AlgebraError::DivisionNotExact(format!("{} is not divisible by {}", self, divisor))
            };
            let qm = m.checked_sub(&lm).ok_or_else(fail)?;
            let (neg, _) = qm.mul::<K>(&lm);
            let qc = c.div_exact(&lc).ok_or_else(fail)?;
            let qc = if neg { -qc } else { qc };
            let t = Self::term(qm, qc.clone());
            rem = rem.sub(&t.mul(divisor));
            quot.add_term(t.terms.into_iter().next().unwrap().0, qc);
        }
        Ok(quot)
    }

    /// `(degree, parity)` of a homogeneous polynomial in the `(q, π)` grading.
    pub fn q_degree(&self) -> Option<i64> {
        if self.is_homogeneous() {
            self.degree().map(|d| 2 * i64::from(d))
        } else {
            None
        }
    }

    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Commutator `self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

impl<K: Kind> Polynomial<Scalar, K> {
    /// Integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt, K>> {
        let mut p = Polynomial::zero(self.rank);
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            p.add_term(m.clone(), c.to_integer());
        }
        Some(p)
    }

    pub fn is_in_domain(&self, domain: crate::scalar::ScalarDomain) -> bool {
        self.terms.values().all(|c| domain.contains(c))
    }
}

impl<C: Coeff, K: Kind> Polynomial<C, K> {
    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p += other;
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p -= other;
        p
    }
}

impl<C: Coeff, K: Kind> AddAssign<&Polynomial<C, K>> for Polynomial<C, K> {
    fn add_assign(&mut self, other: &Polynomial<C, K>) {
        assert_eq!(self.rank, other.rank, "polynomial rank mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coeff, K: Kind> SubAssign<&Polynomial<C, K>> for Polynomial<C, K> {
    fn sub_assign(&mut self, other: &Polynomial<C, K>) {
        assert_eq!(self.rank, other.rank, "polynomial rank mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Coeff, K: Kind> Mul for &Polynomial<C, K> {
    type Output = Polynomial<C, K>;
    fn mul(self, other: &Polynomial<C, K>) -> Polynomial<C, K> {
        Polynomial::mul(self, other)
    }
}

impl<C: Coeff, K: Kind> Neg for Polynomial<C, K> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Coeff, K: Kind> Neg for &Polynomial<C, K> {
    type Output = Polynomial<C, K>;
    fn neg(self) -> Polynomial<C, K> {
        -self.clone()
    }
}

impl<C: Coeff + One, K: Kind> Polynomial<C, K> {
    /// `true` when every coefficient is `±1`.
    pub fn is_signed_sum(&self) -> bool {
        self.terms.values().all(|c| c.abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sk(rank: usize, terms: &[(&[u32], i64)]) -> SkewPolynomial {
        SkewPolynomial::from_terms(rank, terms.iter().map(|(e, c)| (e.to_vec(), int(*c))))
    }

    /// Brute-force sign of `x^a · x^b`: write both as letter words,
    /// bubble-sort, count swaps of distinct letters.
    fn shuffle_sign(a: &Monomial, b: &Monomial) -> bool {
        let mut word = a.letters();
        word.extend(b.letters());
        let mut neg = false;
        for i in 0..word.len() {
            for j in 0..word.len() - 1 - i {
                if word[j] > word[j + 1] {
                    word.swap(j, j + 1);
                    neg = !neg;
                }
            }
        }
        neg
    }

    #[test]
    fn swapping_two_variables_costs_a_sign() {
        let (neg, m) = Monomial::var(2, 2).mul::<Spin>(&Monomial::var(2, 1));
        assert!(neg);
        assert_eq!(m, Monomial(vec![1, 1]));
        let (neg, m) = Monomial::var(2, 1).mul::<Spin>(&Monomial::var(2, 1));
        assert!(!neg);
        assert_eq!(m, Monomial(vec![2, 0]));
    }

    #[test]
    fn merge_sign_matches_letter_shuffle() {
        // x1x2 · x1x3: oracle says one swap of x2 past x1 → negative.
        let a = Monomial(vec![1, 1, 0]);
        let b = Monomial(vec![1, 0, 1]);
        assert!(shuffle_sign(&a, &b));
        let (neg, m) = a.mul::<Spin>(&b);
        assert!(neg);
        assert_eq!(m, Monomial(vec![2, 1, 1]));
        for a in Monomial::all_up_to_degree(3, 4) {
            for b in Monomial::all_up_to_degree(3, 4) {
                assert_eq!(a.mul::<Spin>(&b).0, shuffle_sign(&a, &b), "{a:?} {b:?}");
                assert!(!a.mul::<Even>(&b).0);
            }
        }
    }

    #[test]
    fn product_of_sum_and_difference() {
        let x1 = SkewPolynomial::var(2, 1);
        let x2 = SkewPolynomial::var(2, 2);
        let p = x1.add(&x2).mul(&x1.sub(&x2));
        assert_eq!(p, sk(2, &[(&[2, 0], 1), (&[1, 1], -2), (&[0, 2], -1)]));
        let e1 = EvenPolynomial::var(2, 1);
        let e2 = EvenPolynomial::var(2, 2);
        let q = e1.add(&e2).mul(&e1.sub(&e2));
        assert_eq!(q.len(), 2);
    }

    #[test]
    fn even_powers_are_central() {
        let x1sq = SkewPolynomial::var(2, 1).pow(2);
        let x2 = SkewPolynomial::var(2, 2);
        assert_eq!(x1sq.mul(&x2), x2.mul(&x1sq));
        assert!(x1sq.commutator(&x2).is_zero());
    }

    #[test]
    fn unit_law_and_zero_coefficients_dropped() {
        let f = sk(3, &[(&[1, 0, 2], 3), (&[0, 1, 0], -1)]);
        assert_eq!(f.mul(&SkewPolynomial::one(3)), f);
        assert_eq!(SkewPolynomial::one(3).mul(&f), f);
        let g = f.sub(&f);
        assert!(g.is_zero());
        assert_eq!(g.len(), 0);
    }

    #[test]
    fn word_builds_ordered_products() {
        assert_eq!(SkewPolynomial::word(2, &[2, 1]), sk(2, &[(&[1, 1], -1)]));
        assert_eq!(
            SkewPolynomial::word(3, &[3, 1, 2]),
            sk(3, &[(&[1, 1, 1], 1)])
        );
    }

    #[test]
    fn substitution_reorders_with_signs() {
        // x1 -> -x2, x2 -> -x1 applied to x1x2 gives x2x1 = -x1x2.
        let s = SignedSubstitution::new(vec![(true, 1), (true, 0)]);
        let f = SkewPolynomial::word(2, &[1, 2]);
        assert_eq!(s.apply(&f), -f.clone());
        let s2 = s.compose(&s);
        assert_eq!(s2, SignedSubstitution::identity(2));
    }

    #[test]
    fn exact_right_division() {
        let a = EvenPolynomial::var(2, 1).sub(&EvenPolynomial::var(2, 2));
        let f = EvenPolynomial::var(2, 1)
            .pow(3)
            .sub(&EvenPolynomial::var(2, 2).pow(3));
        let q = f.div_exact_right(&a).unwrap();
        assert_eq!(q.mul(&a), f);
        let g = EvenPolynomial::var(2, 1).pow(3);
        assert!(matches!(
            g.div_exact_right(&a),
            Err(AlgebraError::DivisionNotExact(_))
        ));
        let two_x = EvenPolynomial::var(1, 1).scale(&int(2));
        assert!(EvenPolynomial::var(1, 1).div_exact_right(&two_x).is_err());
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_up_to_degree(4, 8).len(), 495);
        let v = Monomial::all_of_degree(2, 3);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
