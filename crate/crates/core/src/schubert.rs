//! Schubert polynomials `𝔰_w = ∂_{w⁻¹w₀}(x^δ)` and the decomposition of
//! polynomials as `f = Σ_w 𝔰_w · c_w` with coefficients in the symmetric ring.
//!
//! Words are the canonical reduced words of [`SignedPermutation::reduced_word`],
//! which fixes the signs of the operators `∂_w`. The diagonal constants
//! `κ_w = ∂_w(𝔰_w)` are measured once per element and cached.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::demazure::{apply_word, operators, DemazureOperator};
use crate::error::{AlgebraError, Result};
use crate::kernels::to_sparse;
use crate::linalg::{determinant, rank};
use crate::poly::{Kind, Monomial, Polynomial, Variant};
use crate::scalar::{Coeff, Scalar, ScalarDomain};
use crate::symfun::LambdaElement;
use crate::weyl::{longest_word, SignedPermutation, WeylGroup, WeylType};

fn check_supported(variant: Variant, ty: WeylType, n: usize) -> Result<()> {
    ty.check_rank(n)?;
    if variant == Variant::Spin && ty == WeylType::A {
        return Err(AlgebraError::Unsupported(
            "spin type A Schubert polynomials".into(),
        ));
    }
    Ok(())
}

/// `δ = (2n-1, ..., 3, 1)` (B), `(2n-2, ..., 2, 0)` (D), `(n-1, ..., 0)` (A).
pub fn staircase(ty: WeylType, n: usize) -> Result<Monomial> {
    ty.check_rank(n)?;
    let n = n as u32;
    Ok(Monomial(
        (1..=n)
            .map(|i| match ty {
                WeylType::A => n - i,
                WeylType::B => 2 * (n - i) + 1,
                WeylType::D => 2 * (n - i),
            })
            .collect(),
    ))
}

/// `∂_{w₀}(x^δ)`, a constant.
pub fn top_constant<K: Kind>(ty: WeylType, n: usize) -> Result<BigInt> {
    check_supported(K::VARIANT, ty, n)?;
    let ops = operators(K::VARIANT, ty, n)?;
    let x: Polynomial<BigInt, K> = Polynomial::monomial(staircase(ty, n)?);
    let c = apply_word(&ops, &longest_word(ty, n), &x)?;
    c.as_constant()
        .ok_or_else(|| AlgebraError::ResidualNonzero(format!("∂_w0(x^δ) = {c} is not constant")))
}

#[derive(Debug)]
pub struct SchubertFamily<K: Kind> {
    ty: WeylType,
    rank: usize,
    group: WeylGroup,
    ops: Vec<DemazureOperator>,
    polys: Vec<Polynomial<BigInt, K>>,
    constants: Vec<BigInt>,
    table: OnceLock<Vec<Vec<Polynomial<BigInt, K>>>>,
}

impl<K: Kind> SchubertFamily<K> {
    pub fn new(ty: WeylType, n: usize) -> Result<Self> {
        check_supported(K::VARIANT, ty, n)?;
        let group = WeylGroup::new(ty, n)?;
        let ops = operators(K::VARIANT, ty, n)?;
        let top: Polynomial<BigInt, K> = Polynomial::monomial(staircase(ty, n)?);
        let w0 = group.longest().clone();
        let mut polys = Vec::with_capacity(group.len());
        let mut constants = Vec::with_capacity(group.len());
        for (k, w) in group.elements().iter().enumerate() {
            let v = w.inverse().compose(&w0)?;
            let s = apply_word(&ops, &v.reduced_word(), &top)?;
            let kappa = apply_word(&ops, group.word(k), &s)?
                .as_constant()
                .ok_or_else(|| {
                    AlgebraError::ResidualNonzero(format!("∂_w(𝔰_w) not constant for {w}"))
                })?;
            if kappa.is_zero() {
                return Err(AlgebraError::ResidualNonzero(format!(
                    "∂_w(𝔰_w) = 0 for {w}"
                )));
            }
            polys.push(s);
            constants.push(kappa);
        }
        Ok(SchubertFamily {
            ty,
            rank: n,
            group,
            ops,
            polys,
            constants,
            table: OnceLock::new(),
        })
    }

    pub fn weyl_type(&self) -> WeylType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn operators(&self) -> &[DemazureOperator] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polynomials(&self) -> &[Polynomial<BigInt, K>] {
        &self.polys
    }

    /// `𝔰_w` for the element with canonical index `k`.
    pub fn polynomial(&self, k: usize) -> &Polynomial<BigInt, K> {
        &self.polys[k]
    }

    pub fn get(&self, w: &SignedPermutation) -> Option<&Polynomial<BigInt, K>> {
        self.group.index_of(w).map(|k| &self.polys[k])
    }

    /// `κ_w = ∂_w(𝔰_w)`.
    pub fn constant(&self, k: usize) -> &BigInt {
        &self.constants[k]
    }

    /// `𝔰_e`.
    pub fn identity_constant(&self) -> &BigInt {
        self.polys[0]
            .terms()
            .next()
            .map(|(_, c)| c)
            .expect("𝔰_e is nonzero")
    }

    /// `∂_u` (canonical word) applied to `f`.
    pub fn apply_element<C: Coeff>(
        &self,
        u: usize,
        f: &Polynomial<C, K>,
    ) -> Result<Polynomial<C, K>> {
        apply_word(&self.ops, self.group.word(u), f)
    }

    /// `table[u][w] = ∂_u(𝔰_w)`, computed on first use.
    pub fn evaluation_table(&self) -> &[Vec<Polynomial<BigInt, K>>] {
        self.table.get_or_init(|| {
            use rayon::prelude::*;
            (0..self.group.len())
                .into_par_iter()
                .map(|u| {
                    self.polys
                        .iter()
                        .map(|s| self.apply_element(u, s).expect("valid word"))
                        .collect()
                })
                .collect()
        })
    }

    /// `∂_u(𝔰_w) = 0` when `ℓ(w) ≤ ℓ(u)`, `u ≠ w`.
    pub fn triangularity_holds(&self) -> bool {
        let t = self.evaluation_table();
        (0..self.len()).all(|u| {
            (0..self.len()).all(|w| {
                let lu = self.group.length_of(u);
                let lw = self.group.length_of(w);
                if u == w {
                    t[u][w].as_constant().as_ref() == Some(&self.constants[u])
                } else {
                    lw > lu || t[u][w].is_zero()
                }
            })
        })
    }

    /// Coefficients `c_w` with `f = Σ_w 𝔰_w · c_w`, indexed like the group.
    pub fn decompose(
        &self,
        f: &Polynomial<Scalar, K>,
        domain: ScalarDomain,
    ) -> Result<Vec<LambdaElement<K>>> {
        let n = self.rank;
        let mut residual = f.clone();
        let mut coeffs: Vec<Option<LambdaElement<K>>> = vec![None; self.len()];
        for u in (0..self.len()).rev() {
            if residual.is_zero() {
                break;
            }
            let d = self.apply_element(u, &residual)?;
            if d.is_zero() {
                continue;
            }
            let kappa = Scalar::from_integer(self.constants[u].clone());
            let mut c = Polynomial::zero(n);
            for (m, v) in d.terms() {
                c.add_term(m.clone(), domain.divide(v, &kappa)?);
            }
            residual -= &self.polys[u].to_scalar().mul(&c);
            coeffs[u] = Some(LambdaElement::new(self.ty, n, c)?);
        }
        if !residual.is_zero() {
            return Err(AlgebraError::ResidualNonzero(residual.to_string()));
        }
        Ok(coeffs
            .into_iter()
            .map(|c| c.unwrap_or_else(|| LambdaElement::zero(self.ty, n)))
            .collect())
    }

    /// `Σ_w 𝔰_w · c_w`.
    pub fn expand(&self, coeffs: &[LambdaElement<K>]) -> Polynomial<Scalar, K> {
        let mut out = Polynomial::zero(self.rank);
        for (s, c) in self.polys.iter().zip(coeffs) {
            if !c.is_zero() {
                out += &s.to_scalar().mul(c.polynomial());
            }
        }
        out
    }

    /// Rank of the family over ℚ.
    pub fn rank_over_q(&self) -> usize {
        rank(self.polys.iter().map(|s| to_sparse(&s.to_scalar())))
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BoxBasisReport {
    pub rank: usize,
    pub family_size: usize,
    pub box_dimension: usize,
    pub inside_box: bool,
    pub rank_over_q: usize,
    /// `(degree, determinant)` of the square change-of-basis block per degree.
    pub determinants: Vec<(u32, String)>,
    pub passed: bool,
}

/// The type B family spans exactly the box `{x^r : r_i ≤ 2n - 2i + 1}` over ℤ.
pub fn box_basis_check<K: Kind>(family: &SchubertFamily<K>) -> Result<BoxBasisReport> {
    if family.weyl_type() != WeylType::B {
        return Err(AlgebraError::Unsupported(
            "box basis check outside type B".into(),
        ));
    }
    let n = family.rank();
    let bound: Vec<u32> = (1..=n as u32).map(|i| 2 * (n as u32) - 2 * i + 1).collect();
    let in_box = |m: &Monomial| m.0.iter().zip(&bound).all(|(r, b)| r <= b);
    let inside_box = family
        .polynomials()
        .iter()
        .all(|s| s.terms().all(|(m, _)| in_box(m)));
    let box_monomials: Vec<Monomial> = Monomial::all_up_to_degree(n, n as u32 * n as u32)
        .into_iter()
        .filter(|m| in_box(m))
        .collect();
    let mut determinants = Vec::new();
    let mut unimodular = true;
    for d in 0..=family.group().longest_length() as u32 {
        let cols: Vec<&Monomial> = box_monomials.iter().filter(|m| m.degree() == d).collect();
        let rows: Vec<&Polynomial<BigInt, K>> = family
            .polynomials()
            .iter()
            .filter(|s| s.degree() == Some(d))
            .collect();
        let det = if rows.len() == cols.len() {
            let matrix: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|s| cols.iter().map(|m| s.coeff(m)).collect())
                .collect();
            determinant(&matrix)
        } else {
            BigInt::zero()
        };
        unimodular &= det.abs().is_one();
        determinants.push((d, det.to_string()));
    }
    let rank_over_q = family.rank_over_q();
    Ok(BoxBasisReport {
        rank: n,
        family_size: family.len(),
        box_dimension: box_monomials.len(),
        inside_box,
        rank_over_q,
        passed: inside_box
            && unimodular
            && rank_over_q == box_monomials.len()
            && family.len() == box_monomials.len(),
        determinants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Even, Spin};
    use crate::scalar::int;

    fn skew(s: &str, n: usize) -> Polynomial<Scalar, Spin> {
        parse_polynomial::<Spin>(s, Some(n)).unwrap()
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(WeylType::B, 3).unwrap().0, vec![5, 3, 1]);
        assert_eq!(staircase(WeylType::D, 3).unwrap().0, vec![4, 2, 0]);
        assert_eq!(staircase(WeylType::A, 3).unwrap().0, vec![2, 1, 0]);
    }

    #[test]
    fn small_families() {
        let b1 = SchubertFamily::<Spin>::new(WeylType::B, 1).unwrap();
        assert_eq!(b1.polynomial(0).to_string(), "1");
        assert_eq!(b1.polynomial(1).to_string(), "x1");
        let b2 = SchubertFamily::<Spin>::new(WeylType::B, 2).unwrap();
        assert_eq!(b2.polynomial(7).to_string(), "x1^3*x2");
        let d2 = SchubertFamily::<Spin>::new(WeylType::D, 2).unwrap();
        assert_eq!(d2.polynomial(0).to_string(), "2");
        let s1 = SignedPermutation::generator(WeylType::D, 2, 1).unwrap();
        assert_eq!(d2.get(&s1).unwrap().to_string(), "x1 + x2");
    }

    #[test]
    fn degrees_are_lengths() {
        for (ty, n) in [(WeylType::B, 2), (WeylType::B, 3), (WeylType::D, 3)] {
            let f = SchubertFamily::<Spin>::new(ty, n).unwrap();
            for k in 0..f.len() {
                let s = f.polynomial(k);
                assert!(s.is_homogeneous());
                assert_eq!(s.degree(), Some(f.group().length_of(k) as u32));
            }
        }
    }

    #[test]
    fn top_constants() {
        for n in 1..=3 {
            assert!(top_constant::<Spin>(WeylType::B, n).unwrap().abs().is_one());
        }
        assert_eq!(top_constant::<Spin>(WeylType::D, 2).unwrap(), int(2));
        assert_eq!(top_constant::<Spin>(WeylType::D, 3).unwrap().abs(), int(4));
    }

    #[test]
    fn triangularity() {
        for (ty, n) in [(WeylType::B, 2), (WeylType::D, 2), (WeylType::D, 3)] {
            let f = SchubertFamily::<Spin>::new(ty, n).unwrap();
            assert!(f.triangularity_holds(), "{ty}{n}");
        }
        let e = SchubertFamily::<Even>::new(WeylType::B, 2).unwrap();
        assert!(e.triangularity_holds());
    }

    #[test]
    fn box_basis_rank_one() {
        let f = SchubertFamily::<Spin>::new(WeylType::B, 1).unwrap();
        let r = box_basis_check(&f).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn rank_two_family_leaves_the_box() {
        // ∂1(x1^3 x2) = x1^2 x2 + x1 x2^2 has x2-exponent 2 > 1, yet the
        // box coordinates of the family are still unimodular in every degree.
        let f = SchubertFamily::<Spin>::new(WeylType::B, 2).unwrap();
        let r = box_basis_check(&f).unwrap();
        assert!(!r.inside_box);
        assert_eq!(r.rank_over_q, 8);
        assert!(r.determinants.iter().all(|(_, d)| d == "1" || d == "-1"));
    }

    #[test]
    fn decompositions() {
        let b1 = SchubertFamily::<Spin>::new(WeylType::B, 1).unwrap();
        let c = b1
            .decompose(&skew("x1^2", 1), ScalarDomain::Integer)
            .unwrap();
        assert_eq!(c[0].polynomial().to_string(), "x1^2");
        assert!(c[1].is_zero());

        let b2 = SchubertFamily::<Spin>::new(WeylType::B, 2).unwrap();
        for w in 0..b2.len() {
            let c = b2
                .decompose(&b2.polynomial(w).to_scalar(), ScalarDomain::Integer)
                .unwrap();
            for (v, cv) in c.iter().enumerate() {
                let expected = if v == w {
                    Scalar::one()
                } else {
                    Scalar::zero()
                };
                assert_eq!(
                    cv.polynomial().as_constant().unwrap_or_else(Scalar::zero),
                    expected
                );
            }
        }

        let d2 = SchubertFamily::<Spin>::new(WeylType::D, 2).unwrap();
        let f = skew("x1^2", 2);
        let c = d2.decompose(&f, ScalarDomain::Rational).unwrap();
        assert_eq!(d2.expand(&c), f);
        assert!(matches!(
            d2.decompose(&skew("1", 2), ScalarDomain::Integer),
            Err(AlgebraError::DomainCannotDivide { .. })
        ));
    }

    #[test]
    fn even_families_are_bases() {
        for (ty, n) in [(WeylType::A, 3), (WeylType::B, 2), (WeylType::D, 3)] {
            let f = SchubertFamily::<Even>::new(ty, n).unwrap();
            assert_eq!(f.rank_over_q(), f.len());
            let g = parse_polynomial::<Even>("x1^3 - 2 x2 x1 + 5", Some(n)).unwrap();
            let c = f.decompose(&g, ScalarDomain::Rational).unwrap();
            assert_eq!(f.expand(&c), g);
        }
    }
}
