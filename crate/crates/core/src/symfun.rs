//! Symmetric polynomial rings: the common kernels of all Demazure operators.
//!
//! Generators (polynomial degree in brackets):
//!
//! * types B, spin and even: `ε_k = e_k(x1², ..., xn²)` `[2k]`
//! * type D: `ε_k = e_k(x²)` for `k < n` and `ε_n = x1⋯xn` `[n]`
//! * even type A: `ε_k = e_k(x1, ..., xn)` `[k]`
//!
//! Generator expressions are polynomials in commuting abstract variables,
//! variable `k` standing for `ε_k`. They are expanded in the order
//! `ε_1^{a_1} ⋯ ε_n^{a_n}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::demazure::operators;
use crate::error::{AlgebraError, Result};
use crate::kernels::{joint_kernel, same_span};
use crate::linalg::EchelonBasis;
use crate::poly::{Even, Kind, Monomial, Polynomial, Spin, Variant};
use crate::scalar::{Coeff, Scalar};
use crate::series::GradedRankSeries;
use crate::weyl::{WeylGroup, WeylType};

/// Polynomial in the abstract generators `ε_1, ..., ε_n`.
pub type GeneratorExpression = Polynomial<Scalar, Even>;

fn check_supported(variant: Variant, ty: WeylType, n: usize) -> Result<()> {
    ty.check_rank(n)?;
    if variant == Variant::Spin && ty == WeylType::A {
        return Err(AlgebraError::Unsupported(
            "generators of the spin type A ring".into(),
        ));
    }
    Ok(())
}

/// Polynomial degrees of the generators.
pub fn generator_degrees(variant: Variant, ty: WeylType, n: usize) -> Result<Vec<u32>> {
    check_supported(variant, ty, n)?;
    let n32 = n as u32;
    Ok((1..=n32)
        .map(|k| match ty {
            WeylType::A => k,
            WeylType::B => 2 * k,
            WeylType::D if k == n32 => n32,
            WeylType::D => 2 * k,
        })
        .collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `Σ_{|S| = k} Π_{i ∈ S} x_i^power` over the variables listed in `vars` (0-based).
fn elementary_in<C: Coeff, K: Kind>(
    rank: usize,
    vars: &[usize],
    k: usize,
    power: u32,
) -> Polynomial<C, K> {
    let mut f = Polynomial::zero(rank);
    for s in subsets(vars.len(), k) {
        let mut e = vec![0; rank];
        for i in s {
            e[vars[i]] = power;
        }
        f.add_term(Monomial(e), C::one());
    }
    f
}

/// The generator `ε_k` of the ring for `K::VARIANT`, type `ty`, rank `n`.
pub fn elementary<C: Coeff, K: Kind>(ty: WeylType, n: usize, k: usize) -> Result<Polynomial<C, K>> {
    check_supported(K::VARIANT, ty, n)?;
    if k == 0 || k > n {
        return Err(AlgebraError::IndexOutOfRange {
            index: k,
            context: format!("generators of rank {n}"),
        });
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(match ty {
        WeylType::A => elementary_in(n, &all, k, 1),
        WeylType::D if k == n => Polynomial::monomial(Monomial(vec![1; n])),
        _ => elementary_in(n, &all, k, 2),
    })
}

/// Operator-by-operator evidence for kernel membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership<C: Coeff, K: Kind> {
    /// `∂_i(f)` for `i = 1, ..., #generators`.
    pub images: Vec<Polynomial<C, K>>,
}

impl<C: Coeff, K: Kind> Membership<C, K> {
    pub fn is_member(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    /// First operator index (1-based) not annihilating the input.
    pub fn witness(&self) -> Option<(usize, &Polynomial<C, K>)> {
        self.images
            .iter()
            .enumerate()
            .find(|(_, g)| !g.is_zero())
            .map(|(i, g)| (i + 1, g))
    }
}

/// Applies every simple Demazure operator of the ambient to `f`.
pub fn in_lambda<C: Coeff, K: Kind>(
    ty: WeylType,
    n: usize,
    f: &Polynomial<C, K>,
) -> Result<Membership<C, K>> {
    let ops = operators(K::VARIANT, ty, n)?;
    let images = ops
        .iter()
        .map(|op| op.try_apply(f))
        .collect::<Result<_>>()?;
    Ok(Membership { images })
}

/// Expands a generator expression into a polynomial.
pub fn expand<K: Kind>(
    ty: WeylType,
    n: usize,
    expr: &GeneratorExpression,
) -> Result<Polynomial<Scalar, K>> {
    let gens: Vec<Polynomial<Scalar, K>> = (1..=n)
        .map(|k| elementary(ty, n, k))
        .collect::<Result<_>>()?;
    let mut out = Polynomial::zero(n);
    for (m, c) in expr.terms() {
        let mut p = Polynomial::constant(n, c.clone());
        for (g, &a) in gens.iter().zip(&m.0) {
            if a > 0 {
                p = p.mul(&g.pow(a));
            }
        }
        out += &p;
    }
    Ok(out)
}

/// Writes a symmetric polynomial `g(y)` in commuting variables as a polynomial
/// in `e_1(y), ..., e_n(y)` by repeatedly removing the lex-leading term.
fn reduce_symmetric(n: usize, mut g: Polynomial<Scalar, Even>) -> Result<GeneratorExpression> {
    let es: Vec<Polynomial<Scalar, Even>> = (1..=n)
        .map(|k| elementary_in(n, &(0..n).collect::<Vec<_>>(), k, 1))
        .collect();
    let mut expr = GeneratorExpression::zero(n);
    while let Some((m, c)) = g.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let mu = &m.0;
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::NotExpressible(format!(
                "leading exponent {mu:?} is not a partition"
            )));
        }
        let a: Vec<u32> = (0..n)
            .map(|k| mu[k] - mu.get(k + 1).copied().unwrap_or(0))
            .collect();
        let mut p = Polynomial::constant(n, c.clone());
        for (e, &ak) in es.iter().zip(&a) {
            if ak > 0 {
                p = p.mul(&e.pow(ak));
            }
        }
        g -= &p;
        expr.add_term(Monomial(a), c);
    }
    Ok(expr)
}

/// Splits `f` by exponent shape: returns `(all exponents even, halved)` or
/// `None` if some exponent is odd.
fn halve_all_even<K: Kind>(f: &Polynomial<Scalar, K>) -> Option<Polynomial<Scalar, Even>> {
    let mut g = Polynomial::zero(f.rank());
    for (m, c) in f.terms() {
        if m.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        g.add_term(Monomial(m.0.iter().map(|e| e / 2).collect()), c.clone());
    }
    Some(g)
}

/// `(ε_n^d)² = sign · ε_n^b`.
fn top_square_sign(variant: Variant, n: usize) -> i64 {
    match variant {
        Variant::Spin if (n * (n - 1) / 2) % 2 == 1 => -1,
        _ => 1,
    }
}

/// The unique generator expression of a member of the ring.
///
/// # Errors
///
/// `NotExpressible` if `f` is not in the ring (or if the expansion of the
/// result does not reproduce `f`, which would be an internal bug).
pub fn express_in_elementary<K: Kind>(
    ty: WeylType,
    n: usize,
    f: &Polynomial<Scalar, K>,
) -> Result<GeneratorExpression> {
    check_supported(K::VARIANT, ty, n)?;
    let not_even = || AlgebraError::NotExpressible("some exponent is odd".into());
    let expr = match ty {
        WeylType::A => {
            let g = Polynomial::from_terms(n, f.terms().map(|(m, c)| (m.0.clone(), c.clone())));
            reduce_symmetric(n, g)?
        }
        WeylType::B => reduce_symmetric(n, halve_all_even(f).ok_or_else(not_even)?)?,
        WeylType::D => {
            let mut even = Polynomial::<Scalar, K>::zero(n);
            let mut odd = Polynomial::<Scalar, K>::zero(n);
            for (m, c) in f.terms() {
                let odd_count = m.0.iter().filter(|e| *e % 2 == 1).count();
                if odd_count == 0 {
                    even.add_term(m.clone(), c.clone());
                } else if odd_count == n {
                    // x^r = x^{r-1} · x1⋯xn with no sign: r-1 is even.
                    odd.add_term(Monomial(m.0.iter().map(|e| e - 1).collect()), c.clone());
                } else {
                    return Err(AlgebraError::NotExpressible(format!(
                        "monomial {:?} mixes exponent parities",
                        m.0
                    )));
                }
            }
            let sign = Scalar::from_integer(BigInt::from(top_square_sign(K::VARIANT, n)));
            let mut out = GeneratorExpression::zero(n);
            for (part, extra) in [(even, 0), (odd, 1)] {
                let e = reduce_symmetric(n, halve_all_even(&part).ok_or_else(not_even)?)?;
                for (m, c) in e.terms() {
                    let mut a = m.0.clone();
                    let b = a[n - 1];
                    a[n - 1] = 2 * b + extra;
                    let c = if b % 2 == 1 { c * &sign } else { c.clone() };
                    out.add_term(Monomial(a), c);
                }
            }
            out
        }
    };
    if expand::<K>(ty, n, &expr)? != *f {
        return Err(AlgebraError::NotExpressible(
            "expansion does not reproduce the input".into(),
        ));
    }
    Ok(expr)
}

/// Text form of a generator expression, `e1^2*e3 - 2*e2`.
pub fn expression_string(expr: &GeneratorExpression) -> String {
    expr.to_string().replace('x', "e")
}

/// An element of a symmetric ring together with its generator expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaElement<K: Kind> {
    ty: WeylType,
    rank: usize,
    polynomial: Polynomial<Scalar, K>,
    expression: GeneratorExpression,
}

impl<K: Kind> LambdaElement<K> {
    /// Certifies membership and computes the generator expression.
    pub fn new(ty: WeylType, n: usize, f: Polynomial<Scalar, K>) -> Result<Self> {
        let cert = in_lambda(ty, n, &f)?;
        if let Some((i, g)) = cert.witness() {
            return Err(AlgebraError::NotInLambda(format!("∂{i}({f}) = {g}")));
        }
        let expression = express_in_elementary(ty, n, &f)?;
        Ok(LambdaElement {
            ty,
            rank: n,
            polynomial: f,
            expression,
        })
    }

    pub fn from_expression(
        ty: WeylType,
        n: usize,
        expression: GeneratorExpression,
    ) -> Result<Self> {
        let polynomial = expand(ty, n, &expression)?;
        Ok(LambdaElement {
            ty,
            rank: n,
            polynomial,
            expression,
        })
    }

    pub fn variant(&self) -> Variant {
        K::VARIANT
    }

    pub fn weyl_type(&self) -> WeylType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn polynomial(&self) -> &Polynomial<Scalar, K> {
        &self.polynomial
    }

    pub fn expression(&self) -> &GeneratorExpression {
        &self.expression
    }

    pub fn is_zero(&self) -> bool {
        self.polynomial.is_zero()
    }
}

impl<K: Kind> fmt::Display for LambdaElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&expression_string(&self.expression))
    }
}

/// Graded rank of the free generator basis, truncated at `q^t`.
///
/// A generator of polynomial degree `d` contributes `1/(1 - π^d q^{2d})`; the
/// even variant carries no parity.
pub fn hilbert_series(
    variant: Variant,
    ty: WeylType,
    n: usize,
    t: i64,
) -> Result<GradedRankSeries> {
    let mut s = GradedRankSeries::one().truncate(t);
    for d in generator_degrees(variant, ty, n)? {
        let p = if variant == Variant::Spin {
            (d % 2) as u8
        } else {
            0
        };
        let factor = GradedRankSeries::one().sub(&GradedRankSeries::monomial(
            2 * i64::from(d),
            p,
            BigInt::one(),
        ));
        s = s
            .mul(&factor.inverse(t).expect("unit constant term"))
            .truncate(t);
    }
    Ok(s)
}

/// `q^{-N} (1-q²)^{-n} / P(q)` with `P` the q-analogue of the group order:
/// `[2n]!!` (B), `[n][2n-2]!!` (D), `[n]!` (even A); `N = ℓ(w₀)`.
pub fn hilbert_closed_form(
    variant: Variant,
    ty: WeylType,
    n: usize,
    t: i64,
) -> Result<GradedRankSeries> {
    use crate::series::{double_factorial, factorial, q_integer};
    check_supported(variant, ty, n)?;
    let n32 = n as u32;
    let order = match ty {
        WeylType::A => factorial(n32),
        WeylType::B => double_factorial(n32),
        WeylType::D => q_integer(n32).mul(&double_factorial(n32 - 1)),
    }
    .at_pi_one();
    let shift = GradedRankSeries::monomial(-(ty.longest_length(n) as i64), 0, BigInt::one());
    let free = GradedRankSeries::one()
        .sub(&GradedRankSeries::monomial(2, 0, BigInt::one()))
        .pow(n32);
    // Invert the product P · (1 - q²)^n in one go; its lowest term is q^{-N}.
    let denom = order.mul(&free);
    let inv = denom
        .inverse(t + ty.longest_length(n) as i64)
        .expect("unit lowest term");
    Ok(shift.mul(&inv).truncate(t))
}

/// Dimension of the ring in polynomial degree `d`, computed as a joint kernel.
pub fn lambda_dimension<K: Kind>(ty: WeylType, n: usize, d: u32) -> Result<usize> {
    let ops = operators(K::VARIANT, ty, n)?;
    let slice: Vec<Polynomial<Scalar, K>> = Monomial::all_of_degree(n, d)
        .into_iter()
        .map(Polynomial::monomial)
        .collect();
    Ok(joint_kernel(&ops, n, &slice)?.len())
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct KkCase {
    pub k: usize,
    pub lhs: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct KkReport {
    pub rank: usize,
    pub cases: Vec<KkCase>,
}

impl KkReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

/// `ε'_k = Σ_{j=0}^{k} (-1)^j x1^{2j} ε_{k-j}` for `k = 0..=n`, where `ε'` are
/// the type B generators in the variables `x2, ..., xn`.
pub fn kk_identity_check(n: usize) -> Result<KkReport> {
    if n < 2 {
        return Err(AlgebraError::InvalidRank { ty: 'B', rank: n });
    }
    let rest: Vec<usize> = (1..n).collect();
    let all: Vec<usize> = (0..n).collect();
    let mut cases = Vec::new();
    for k in 0..=n {
        let lhs: Polynomial<BigInt, Spin> = elementary_in(n, &rest, k, 2);
        let mut rhs = Polynomial::<BigInt, Spin>::zero(n);
        for j in 0..=k {
            let mut e = vec![0; n];
            e[0] = 2 * j as u32;
            let x1 = Polynomial::term(
                Monomial(e),
                if j % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                },
            );
            rhs += &x1.mul(&elementary_in(n, &all, k - j, 2));
        }
        cases.push(KkCase {
            k,
            lhs: lhs.to_string(),
            passed: lhs == rhs,
        });
    }
    Ok(KkReport { rank: n, cases })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InvariantCase {
    pub degree: u32,
    pub kernel_dim: usize,
    pub invariant_dim: usize,
    pub orbit_sums_killed: bool,
    pub equal: bool,
}

/// Sum of `w(x^m)` over the whole group, for every monomial of degree `d`.
fn orbit_sums(group: &WeylGroup, n: usize, d: u32) -> Result<Vec<Polynomial<Scalar, Even>>> {
    use crate::demazure::point_action;
    use crate::poly::SignedSubstitution;
    let gens: Vec<SignedSubstitution> = (1..=group.weyl_type().num_generators(n))
        .map(|i| point_action(Variant::Even, group.weyl_type(), n, i))
        .collect::<Result<_>>()?;
    let actions: Vec<SignedSubstitution> = (0..group.len())
        .map(|k| {
            group
                .word(k)
                .iter()
                .fold(SignedSubstitution::identity(n), |acc, &i| {
                    acc.compose(&gens[i - 1])
                })
        })
        .collect();
    Ok(Monomial::all_of_degree(n, d)
        .into_iter()
        .map(|m| {
            let f = Polynomial::<Scalar, Even>::monomial(m);
            let mut s = Polynomial::zero(n);
            for a in &actions {
                s += &a.apply(&f);
            }
            s
        })
        .collect())
}

/// Compares, on each degree slice `d ≤ max_degree`, the joint kernel of the
/// even Demazure operators with the group invariants (spanned by orbit sums).
pub fn even_invariant_check(ty: WeylType, n: usize, max_degree: u32) -> Result<Vec<InvariantCase>> {
    let group = WeylGroup::new(ty, n)?;
    let ops = operators(Variant::Even, ty, n)?;
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let slice: Vec<Polynomial<Scalar, Even>> = Monomial::all_of_degree(n, d)
            .into_iter()
            .map(Polynomial::monomial)
            .collect();
        let kernel = joint_kernel(&ops, n, &slice)?;
        let sums: Vec<_> = orbit_sums(&group, n, d)?
            .into_iter()
            .filter(|f| !f.is_zero())
            .collect();
        let mut killed = true;
        for f in &sums {
            killed &= in_lambda(ty, n, f)?.is_member();
        }
        let mut e = EchelonBasis::untracked();
        for f in &sums {
            e.insert(crate::kernels::to_sparse(f));
        }
        out.push(InvariantCase {
            degree: d,
            kernel_dim: kernel.len(),
            invariant_dim: e.rank(),
            orbit_sums_killed: killed,
            equal: killed && same_span(&kernel, &sums),
        });
    }
    Ok(out)
}

/// The `ε_k` of type B lie in the type D ring and all generators commute.
pub fn b_generators_in_d(n: usize) -> Result<bool> {
    let mut ok = true;
    for k in 1..=n {
        let f: Polynomial<BigInt, Spin> = elementary(WeylType::B, n, k)?;
        ok &= in_lambda(WeylType::D, n, &f)?.is_member();
    }
    Ok(ok)
}

/// True when every pair of generators commutes as skew polynomials.
pub fn generators_commute(ty: WeylType, n: usize) -> Result<bool> {
    let gens: Vec<Polynomial<BigInt, Spin>> = (1..=n)
        .map(|k| elementary(ty, n, k))
        .collect::<Result<_>>()?;
    Ok(gens
        .iter()
        .all(|a| gens.iter().all(|b| a.commutator(b).is_zero())))
}

impl<K: Kind> LambdaElement<K> {
    /// Zero in the ring.
    pub fn zero(ty: WeylType, n: usize) -> Self {
        LambdaElement {
            ty,
            rank: n,
            polynomial: Polynomial::zero(n),
            expression: GeneratorExpression::zero(n),
        }
    }

    /// Product in the (commutative) ring.
    pub fn mul(&self, other: &Self) -> Self {
        LambdaElement {
            ty: self.ty,
            rank: self.rank,
            polynomial: self.polynomial.mul(&other.polynomial),
            expression: self.expression.mul(&other.expression),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        LambdaElement {
            ty: self.ty,
            rank: self.rank,
            polynomial: self.polynomial.add(&other.polynomial),
            expression: self.expression.add(&other.expression),
        }
    }

    /// Integer scalar in the ring.
    pub fn constant(ty: WeylType, n: usize, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(ty, n);
        }
        LambdaElement {
            ty,
            rank: n,
            polynomial: Polynomial::constant(n, c.clone()),
            expression: GeneratorExpression::constant(n, c),
        }
    }
}
