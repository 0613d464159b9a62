//! The nilHecke algebras as operator algebras on their polynomial
//! representations.
//!
//! Elements are kept in PBW normal form `Σ c · x^r ∂_w`, with `∂_w` the
//! canonical-word operator. Products are computed by composing operators and
//! extracting PBW coefficients again from the action on Schubert polynomials:
//! by triangularity, `∂_u(𝔰_w)` vanishes for `ℓ(u) ≥ ℓ(w)`, `u ≠ w`, so
//! processing `w` by increasing length reads off one layer at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::poly::{Even, Kind, Monomial, Polynomial, Variant};
use crate::relations::{apply_atoms, Atom, OperatorExpr};
use crate::scalar::{scalar_to_string, Scalar, ScalarDomain};
use crate::schubert::SchubertFamily;
use crate::series::{double_factorial, factorial, pi_q_power, q_integer, GradedRankSeries};
use crate::symfun::{elementary, hilbert_closed_form, hilbert_series, LambdaElement};
use crate::weyl::{SignedPermutation, WeylGroup, WeylType};

type Poly<K> = Polynomial<Scalar, K>;

/// PBW coordinates: `(w, r) ↦ c` for the term `c · x^r ∂_w`, `w` given by its
/// canonical index in the group.
#[derive(Clone, PartialEq, Eq)]
pub struct NilHeckeElement<K: Kind> {
    ty: WeylType,
    rank: usize,
    terms: BTreeMap<(usize, Monomial), Scalar>,
    _kind: PhantomData<K>,
}

impl<K: Kind> fmt::Debug for NilHeckeElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<K: Kind> NilHeckeElement<K> {
    pub fn zero(ty: WeylType, rank: usize) -> Self {
        NilHeckeElement {
            ty,
            rank,
            terms: BTreeMap::new(),
            _kind: PhantomData,
        }
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Monomial, &Scalar)> {
        self.terms.iter().map(|((w, r), c)| (*w, r, c))
    }

    pub fn coeff(&self, w: usize, r: &Monomial) -> Scalar {
        self.terms
            .get(&(w, r.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: usize, r: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (w, r);
        let e = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.0, k.1.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.ty, self.rank);
        for (k, c) in &self.terms {
            out.add_term(k.0, k.1.clone(), c * s);
        }
        out
    }

    /// True when every coefficient lies in `domain`.
    pub fn is_in_domain(&self, domain: ScalarDomain) -> bool {
        self.terms.values().all(|c| domain.contains(c))
    }

    /// Smallest domain containing every coefficient.
    pub fn coefficient_domain(&self) -> ScalarDomain {
        self.terms
            .values()
            .map(ScalarDomain::of)
            .max()
            .unwrap_or(ScalarDomain::Integer)
    }

    fn check(&self, ty: WeylType, rank: usize) -> Result<()> {
        if self.ty != ty {
            return Err(AlgebraError::TypeMismatch(format!("{} vs {}", self.ty, ty)));
        }
        if self.rank != rank {
            return Err(AlgebraError::RankMismatch {
                expected: rank,
                found: self.rank,
            });
        }
        Ok(())
    }
}

/// One PBW term in serialized form.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PbwTermJson {
    pub element: String,
    pub word: Vec<usize>,
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// How `pbw_decompose` confirms that the extracted element equals the operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    /// Compare on every monomial of degree `≤ ℓ(w₀) + 2 + max(d/2, 0)`.
    Monomials,
    /// Compare on the Schubert polynomials only; sufficient when the operator
    /// is known to be right linear over the symmetric ring.
    Schubert,
}

/// Outcome of a preimage computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preimage<K: Kind> {
    Solved(NilHeckeElement<K>),
    /// The unique rational preimage has a coefficient outside the domain.
    Unsolvable {
        coefficient: String,
    },
}

impl<K: Kind> Preimage<K> {
    pub fn is_solved(&self) -> bool {
        matches!(self, Preimage::Solved(_))
    }
}

/// Square matrix over the symmetric ring, rows and columns in canonical
/// group order; column `w` holds the coefficients of `T(𝔰_w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixOverLambda<K: Kind> {
    ty: WeylType,
    rank: usize,
    entries: Vec<Vec<LambdaElement<K>>>,
}

impl<K: Kind> MatrixOverLambda<K> {
    pub fn zero(ty: WeylType, n: usize, size: usize) -> Self {
        MatrixOverLambda {
            ty,
            rank: n,
            entries: vec![vec![LambdaElement::zero(ty, n); size]; size],
        }
    }

    pub fn identity(ty: WeylType, n: usize, size: usize) -> Self {
        let mut m = Self::zero(ty, n, size);
        for i in 0..size {
            m.entries[i][i] = LambdaElement::constant(ty, n, Scalar::one());
        }
        m
    }

    /// `E_{v,w}`: the entry `(v, w)` is 1, all others 0.
    pub fn unit(ty: WeylType, n: usize, size: usize, v: usize, w: usize) -> Self {
        let mut m = Self::zero(ty, n, size);
        m.entries[v][w] = LambdaElement::constant(ty, n, Scalar::one());
        m
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, v: usize, w: usize) -> &LambdaElement<K> {
        &self.entries[v][w]
    }

    pub fn set(&mut self, v: usize, w: usize, e: LambdaElement<K>) {
        self.entries[v][w] = e;
    }

    pub fn entries(&self) -> &[Vec<LambdaElement<K>>] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        let s = self.size();
        let mut out = Self::zero(self.ty, self.rank, s);
        for v in 0..s {
            for w in 0..s {
                let mut acc = LambdaElement::zero(self.ty, self.rank);
                for u in 0..s {
                    let a = &self.entries[v][u];
                    let b = &other.entries[u][w];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.entries[v][w] = acc;
            }
        }
        out
    }

    /// Equality of the underlying polynomials.
    pub fn same_as(&self, other: &Self) -> bool {
        self.size() == other.size()
            && self
                .entries
                .iter()
                .flatten()
                .zip(other.entries.iter().flatten())
                .all(|(a, b)| a.polynomial() == b.polynomial())
    }

    /// Entry strings in generator notation, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect()
    }
}

impl<K: Kind> fmt::Display for MatrixOverLambda<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings = self.to_strings();
        let width = strings
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        for row in strings {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", cells.join("  "))?;
        }
        Ok(())
    }
}

/// The algebra of a given variant (through `K`), type and rank.
#[derive(Debug)]
pub struct NilHecke<K: Kind> {
    family: SchubertFamily<K>,
}

/// Boxed linear operator on the polynomial representation.
pub type Operator<'a, K> = dyn Fn(&Poly<K>) -> Result<Poly<K>> + Sync + 'a;

impl<K: Kind> NilHecke<K> {
    pub fn new(ty: WeylType, n: usize) -> Result<Self> {
        Ok(NilHecke {
            family: SchubertFamily::new(ty, n)?,
        })
    }

    pub fn family(&self) -> &SchubertFamily<K> {
        &self.family
    }

    pub fn group(&self) -> &WeylGroup {
        self.family.group()
    }

    pub fn weyl_type(&self) -> WeylType {
        self.family.weyl_type()
    }

    pub fn rank(&self) -> usize {
        self.family.rank()
    }

    pub fn zero(&self) -> NilHeckeElement<K> {
        NilHeckeElement::zero(self.weyl_type(), self.rank())
    }

    /// `c · x^r ∂_w`.
    pub fn pbw(&self, w: usize, r: Monomial, c: Scalar) -> NilHeckeElement<K> {
        let mut a = self.zero();
        a.add_term(w, r, c);
        a
    }

    pub fn unit(&self) -> NilHeckeElement<K> {
        self.pbw(0, Monomial::one(self.rank()), Scalar::one())
    }

    /// Left multiplication by `x_i`.
    pub fn x(&self, i: usize) -> Result<NilHeckeElement<K>> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(AlgebraError::IndexOutOfRange {
                index: i,
                context: format!("variables of rank {n}"),
            });
        }
        Ok(self.pbw(0, Monomial::var(n, i), Scalar::one()))
    }

    /// The generator `∂_i`.
    pub fn d(&self, i: usize) -> Result<NilHeckeElement<K>> {
        let s = SignedPermutation::generator(self.weyl_type(), self.rank(), i)?;
        let w = self
            .group()
            .index_of(&s)
            .expect("generators lie in the group");
        Ok(self.pbw(w, Monomial::one(self.rank()), Scalar::one()))
    }

    /// Element given by a polynomial `p` acting by left multiplication.
    pub fn multiplication(&self, p: &Poly<K>) -> NilHeckeElement<K> {
        let mut a = self.zero();
        for (m, c) in p.terms() {
            a.add_term(0, m.clone(), c.clone());
        }
        a
    }

    /// `(q-degree, parity)` of `x^r ∂_w`.
    pub fn term_grading(&self, w: usize, r: &Monomial) -> (i64, u8) {
        let l = self.group().length_of(w) as i64;
        let q = r.q_degree() - 2 * l;
        let p = if K::VARIANT == Variant::Spin {
            ((i64::from(r.degree()) + l) % 2) as u8
        } else {
            0
        };
        (q, p)
    }

    /// The q-degree if `a` is homogeneous.
    pub fn q_degree(&self, a: &NilHeckeElement<K>) -> Option<i64> {
        let mut degrees = a.terms().map(|(w, r, _)| self.term_grading(w, r).0);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// `Σ c · x^r ∂_w(f)`.
    pub fn apply(&self, a: &NilHeckeElement<K>, f: &Poly<K>) -> Result<Poly<K>> {
        a.check(self.weyl_type(), self.rank())?;
        let mut out = Polynomial::zero(self.rank());
        let mut last: Option<(usize, Poly<K>)> = None;
        for (w, r, c) in a.terms() {
            if last.as_ref().is_none_or(|(lw, _)| *lw != w) {
                last = Some((w, self.family.apply_element(w, f)?));
            }
            let dw = &last.as_ref().expect("set above").1;
            out += &dw.mul_monomial_left(r, c);
        }
        Ok(out)
    }

    /// Element of PBW form equal to the operator `op`.
    ///
    /// If `degree` is given the operator must be homogeneous of that
    /// q-degree; coefficients are divided by the diagonal constants inside
    /// `domain`.
    pub fn pbw_decompose(
        &self,
        op: &Operator<'_, K>,
        degree: Option<i64>,
        domain: ScalarDomain,
        verification: Verification,
    ) -> Result<NilHeckeElement<K>> {
        let images: Vec<Poly<K>> = (0..self.family.len())
            .into_par_iter()
            .map(|w| op(&self.family.polynomial(w).to_scalar()))
            .collect::<Result<_>>()?;
        self.extract(&images, degree, domain)
            .and_then(|a| self.verify(op, &a, degree, verification).map(|()| a))
    }

    /// Reads off PBW coefficients from the images `T(𝔰_w)`.
    fn extract(
        &self,
        images: &[Poly<K>],
        degree: Option<i64>,
        domain: ScalarDomain,
    ) -> Result<NilHeckeElement<K>> {
        let table = self.family.evaluation_table();
        let mut a = self.zero();
        for w in 0..self.family.len() {
            let mut residual = images[w].clone();
            for (u, r, c) in a.terms() {
                let t = &table[u][w];
                if !t.is_zero() {
                    residual -= &t.to_scalar().mul_monomial_left(r, c);
                }
            }
            if residual.is_zero() {
                continue;
            }
            let kappa = Scalar::from_integer(self.family.constant(w).clone());
            let mut layer = Vec::new();
            for (r, v) in residual.terms() {
                if let Some(d) = degree {
                    if self.term_grading(w, r).0 != d {
                        return Err(AlgebraError::ResidualNonzero(format!(
                            "operator is not homogeneous of degree {d}"
                        )));
                    }
                }
                layer.push((r.clone(), domain.divide(v, &kappa)?));
            }
            for (r, c) in layer {
                a.add_term(w, r, c);
            }
        }
        Ok(a)
    }

    fn verify(
        &self,
        op: &Operator<'_, K>,
        a: &NilHeckeElement<K>,
        degree: Option<i64>,
        verification: Verification,
    ) -> Result<()> {
        let n = self.rank();
        let tests: Vec<Poly<K>> = match verification {
            Verification::Schubert => (0..self.family.len())
                .map(|w| self.family.polynomial(w).to_scalar())
                .collect(),
            Verification::Monomials => {
                let shift = degree.map_or(0, |d| (d / 2).max(0)) as u32;
                let cap = self.group().longest_length() as u32 + 2 + shift;
                Monomial::all_up_to_degree(n, cap)
                    .into_iter()
                    .map(Polynomial::monomial)
                    .collect()
            }
        };
        tests.par_iter().try_for_each(|f| {
            let lhs = op(f)?;
            let rhs = self.apply(a, f)?;
            if lhs == rhs {
                Ok(())
            } else {
                Err(AlgebraError::ResidualNonzero(format!(
                    "operator and PBW form differ on {f}"
                )))
            }
        })
    }

    /// PBW form of an operator expression in `x_i` and `∂_i`.
    pub fn from_expression(&self, expr: &OperatorExpr) -> Result<NilHeckeElement<K>> {
        let ops = self.family.operators();
        let op = |f: &Poly<K>| expr.apply(ops, f);
        self.pbw_decompose(&op, None, ScalarDomain::Integer, Verification::Monomials)
    }

    /// PBW form of a single product of atoms, rightmost acting first.
    pub fn from_atoms(&self, word: &[Atom]) -> Result<NilHeckeElement<K>> {
        let ops = self.family.operators();
        let op = |f: &Poly<K>| apply_atoms(ops, word, f);
        self.pbw_decompose(&op, None, ScalarDomain::Rational, Verification::Schubert)
    }

    /// `a · b`, acting as `a ∘ b`.
    pub fn multiply(
        &self,
        a: &NilHeckeElement<K>,
        b: &NilHeckeElement<K>,
    ) -> Result<NilHeckeElement<K>> {
        a.check(self.weyl_type(), self.rank())?;
        b.check(self.weyl_type(), self.rank())?;
        let op = |f: &Poly<K>| self.apply(a, &self.apply(b, f)?);
        self.pbw_decompose(&op, None, ScalarDomain::Rational, Verification::Schubert)
    }

    /// Matrix of `a` in the Schubert basis with right coefficients.
    pub fn to_matrix(
        &self,
        a: &NilHeckeElement<K>,
        domain: ScalarDomain,
    ) -> Result<MatrixOverLambda<K>> {
        let size = self.family.len();
        let columns: Vec<Vec<LambdaElement<K>>> = (0..size)
            .into_par_iter()
            .map(|w| {
                let image = self.apply(a, &self.family.polynomial(w).to_scalar())?;
                self.family.decompose(&image, domain)
            })
            .collect::<Result<_>>()?;
        let mut m = MatrixOverLambda::zero(self.weyl_type(), self.rank(), size);
        for (w, col) in columns.into_iter().enumerate() {
            for (v, e) in col.into_iter().enumerate() {
                m.set(v, w, e);
            }
        }
        Ok(m)
    }

    /// `T_M(𝔰_w) = Σ_v 𝔰_v · M[v][w]`, extended right linearly.
    fn matrix_image(&self, m: &MatrixOverLambda<K>, w: usize) -> Poly<K> {
        let mut out = Polynomial::zero(self.rank());
        for v in 0..m.size() {
            let e = m.entry(v, w);
            if !e.is_zero() {
                out += &self.family.polynomial(v).to_scalar().mul(e.polynomial());
            }
        }
        out
    }

    /// An element whose matrix is `m`, with coefficients in `domain`.
    ///
    /// The rational preimage is unique (the representation is faithful); it
    /// is computed by layer extraction on the Schubert basis and then checked
    /// against `domain`. A solved witness is confirmed by recomputing its
    /// matrix over ℚ (in type D the entries of an integral element need not
    /// be integral).
    pub fn solve_preimage(
        &self,
        m: &MatrixOverLambda<K>,
        domain: ScalarDomain,
    ) -> Result<Preimage<K>> {
        if m.size() != self.family.len() {
            return Err(AlgebraError::RankMismatch {
                expected: self.family.len(),
                found: m.size(),
            });
        }
        let images: Vec<Poly<K>> = (0..m.size()).map(|w| self.matrix_image(m, w)).collect();
        let a = self.extract(&images, None, ScalarDomain::Rational)?;
        if let Some((_, _, c)) = a.terms().find(|(_, _, c)| !domain.contains(c)) {
            return Ok(Preimage::Unsolvable {
                coefficient: scalar_to_string(c),
            });
        }
        let back = self.to_matrix(&a, ScalarDomain::Rational)?;
        if !back.same_as(m) {
            return Err(AlgebraError::ResidualNonzero(
                "witness does not reproduce the matrix".into(),
            ));
        }
        Ok(Preimage::Solved(a))
    }

    /// Matrix unit `E_{v,w}`.
    pub fn matrix_unit(&self, v: usize, w: usize) -> MatrixOverLambda<K> {
        MatrixOverLambda::unit(self.weyl_type(), self.rank(), self.family.len(), v, w)
    }

    /// PBW basis elements `(w, r)` of q-degree `d`, in canonical order.
    pub fn pbw_basis(&self, d: i64) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        if d % 2 != 0 {
            return out;
        }
        for w in 0..self.family.len() {
            let r = d / 2 + self.group().length_of(w) as i64;
            if r >= 0 {
                for m in Monomial::all_of_degree(self.rank(), r as u32) {
                    out.push((w, m));
                }
            }
        }
        out
    }

    /// `(#basis, rank)` of the evaluation of the degree-`d` PBW basis on the
    /// Schubert polynomials.
    pub fn faithfulness_rank(&self, d: i64) -> (usize, usize) {
        let table = self.family.evaluation_table();
        let basis = self.pbw_basis(d);
        let mut e: EchelonBasis<(usize, Monomial)> = EchelonBasis::untracked();
        for (w, r) in &basis {
            let mut v = SparseVec::new();
            for (u, row) in table[*w].iter().enumerate() {
                for (m, c) in row.terms() {
                    let (neg, prod) = r.mul::<K>(m);
                    let c = Scalar::from_integer(if neg { -c.clone() } else { c.clone() });
                    v.insert((u, prod), c);
                }
            }
            e.insert(v);
        }
        (basis.len(), e.rank())
    }

    /// Sparse coordinates of a matrix, for independence checks.
    pub fn matrix_coordinates(m: &MatrixOverLambda<K>) -> SparseVec<(usize, usize, Monomial)> {
        let mut v = SparseVec::new();
        for (i, row) in m.entries().iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                for (mono, c) in e.polynomial().terms() {
                    v.insert((i, j, mono.clone()), c.clone());
                }
            }
        }
        v
    }

    /// Random homogeneous element of q-degree `d` with up to `terms` terms
    /// and coefficients in `-3..=3`.
    pub fn random_homogeneous<R: Rng>(
        &self,
        rng: &mut R,
        d: i64,
        terms: usize,
    ) -> NilHeckeElement<K> {
        let basis = self.pbw_basis(d);
        let mut a = self.zero();
        if basis.is_empty() {
            return a;
        }
        for _ in 0..terms {
            let (w, r) = basis[rng.gen_range(0..basis.len())].clone();
            let c: i64 = rng.gen_range(-3..=3);
            a.add_term(w, r, Scalar::from_integer(BigInt::from(c)));
        }
        a
    }

    /// Serialized terms, in canonical order.
    pub fn terms_json(&self, a: &NilHeckeElement<K>) -> Vec<PbwTermJson> {
        a.terms()
            .map(|(w, r, c)| PbwTermJson {
                element: self.group().element(w).to_string(),
                word: self.group().word(w).to_vec(),
                exponents: r.0.clone(),
                coeff: scalar_to_string(c),
            })
            .collect()
    }

    /// Text form `c*x1^2*d1*d2 + ...`, readable by the expression parser
    /// (terms with ∂_w written along the canonical word).
    pub fn format(&self, a: &NilHeckeElement<K>) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (w, r, c)) in a.terms().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            let x = Polynomial::<BigInt, K>::monomial(r.clone()).to_string();
            if x != "1" {
                factors.push(x);
            }
            factors.extend(self.group().word(w).iter().map(|i| format!("d{i}")));
            let neg = *c < Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            let body = match (factors.is_empty(), abs.is_one()) {
                (true, _) => scalar_to_string(&abs),
                (false, true) => factors.join("*"),
                (false, false) => format!("{}*{}", scalar_to_string(&abs), factors.join("*")),
            };
            match (idx, neg) {
                (0, true) => s.push_str(&format!("-{body}")),
                (0, false) => s.push_str(&body),
                (_, true) => s.push_str(&format!(" - {body}")),
                (_, false) => s.push_str(&format!(" + {body}")),
            }
        }
        s
    }
}

/// Which graded rank to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankTarget {
    /// The subalgebra generated by the `∂_i`.
    Nc,
    Nh,
    Lambda,
}

impl std::str::FromStr for RankTarget {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nc" => Ok(RankTarget::Nc),
            "nh" => Ok(RankTarget::Nh),
            "lambda" => Ok(RankTarget::Lambda),
            _ => Err(AlgebraError::Parse(format!("unknown rank target '{s}'"))),
        }
    }
}

impl fmt::Display for RankTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankTarget::Nc => "nc",
            RankTarget::Nh => "nh",
            RankTarget::Lambda => "lambda",
        })
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Graded rank by enumerating a homogeneous basis, truncated at `q^t`.
///
/// `nc`: `{∂_w}`; `nh`: `{x^r ∂_w}`; `lambda`: generator monomials.
pub fn graded_rank(
    target: RankTarget,
    variant: Variant,
    ty: WeylType,
    n: usize,
    t: i64,
) -> Result<GradedRankSeries> {
    let group = WeylGroup::new(ty, n)?;
    let parity = |p: i64| {
        if variant == Variant::Spin {
            (p % 2) as u8
        } else {
            0
        }
    };
    match target {
        RankTarget::Lambda => hilbert_series(variant, ty, n, t),
        RankTarget::Nc => {
            let mut s = GradedRankSeries::zero();
            for (l, count) in group.length_distribution().into_iter().enumerate() {
                s.add_coeff(-2 * l as i64, parity(l as i64), BigInt::from(count));
            }
            Ok(s.truncate(t))
        }
        RankTarget::Nh => {
            let mut s = GradedRankSeries::zero().truncate(t);
            for (l, count) in group.length_distribution().into_iter().enumerate() {
                let l = l as i64;
                let mut k = 0i64;
                while 2 * k - 2 * l <= t {
                    let monomials = binomial((k + n as i64 - 1) as u64, n as u64 - 1);
                    s.add_coeff(
                        2 * k - 2 * l,
                        parity(k + l),
                        monomials * BigInt::from(count),
                    );
                    k += 1;
                }
            }
            Ok(s)
        }
    }
}

/// Closed forms: `(πq)^{-ℓ(w₀)} P_π` for nc with `P_π` = `[2n]_π!!` (B),
/// `[n]_π [2n-2]_π!!` (D), `[n]!` (A); nc `/ (1 - πq²)^n` for nh. The even
/// variant uses `π = 1`.
pub fn graded_rank_closed_form(
    target: RankTarget,
    variant: Variant,
    ty: WeylType,
    n: usize,
    t: i64,
) -> Result<GradedRankSeries> {
    ty.check_rank(n)?;
    let n32 = n as u32;
    let nc = || {
        let order = match ty {
            WeylType::A => factorial(n32),
            WeylType::B => double_factorial(n32),
            WeylType::D => q_integer(n32).mul(&double_factorial(n32 - 1)),
        };
        let s = pi_q_power(-(ty.longest_length(n) as i64)).mul(&order);
        if variant == Variant::Spin {
            s
        } else {
            s.at_pi_one()
        }
    };
    match target {
        RankTarget::Lambda => hilbert_closed_form(variant, ty, n, t),
        RankTarget::Nc => Ok(nc().truncate(t)),
        RankTarget::Nh => {
            let p = if variant == Variant::Spin { 1 } else { 0 };
            let free = GradedRankSeries::one()
                .sub(&GradedRankSeries::monomial(2, p, BigInt::one()))
                .pow(n32)
                .inverse(t + ty.longest_length(n) as i64 * 2)
                .expect("unit constant term");
            Ok(nc().mul(&free).truncate(t))
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CenterDegree {
    pub q_degree: i64,
    pub basis_size: usize,
    pub commutant_dim: usize,
    pub symmetric_dim: usize,
    pub equal: bool,
    /// Commutant basis elements outside the symmetric span.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unexplained: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CenterReport {
    pub weyl_type: String,
    pub rank: usize,
    pub degree_cap: u32,
    /// Every `e_k(x1², ..., xn²)` commutes with every generator on all
    /// monomials of degree `≤ degree_cap`.
    pub generators_central: bool,
    /// Per q-degree comparison of the commutant with the symmetric slice.
    pub degrees: Vec<CenterDegree>,
}

impl CenterReport {
    pub fn passed(&self) -> bool {
        self.generators_central && self.degrees.iter().all(|d| d.equal)
    }
}

impl<K: Kind> NilHecke<K> {
    fn generators(&self) -> Result<Vec<NilHeckeElement<K>>> {
        let n = self.rank();
        let mut gens = Vec::new();
        for i in 1..=n {
            gens.push(self.x(i)?);
        }
        for i in 1..=self.weyl_type().num_generators(n) {
            gens.push(self.d(i)?);
        }
        Ok(gens)
    }

    /// Both directions of the description of the center as
    /// `ℤ[x1², ..., xn²]^{S_n}`:
    ///
    /// 1. `e_k(x²)` commutes with every generator on monomials of degree
    ///    `≤ degree_cap`;
    /// 2. for each q-degree in `[-2ℓ(w₀), degree_cap]` the PBW elements
    ///    commuting with all generators span exactly the symmetric slice.
    pub fn center_check(&self, degree_cap: u32) -> Result<CenterReport> {
        let n = self.rank();
        let ty = self.weyl_type();
        let gens = self.generators()?;
        let mut central = true;
        let tests: Vec<Poly<K>> = Monomial::all_up_to_degree(n, degree_cap)
            .into_iter()
            .map(Polynomial::monomial)
            .collect();
        for k in 1..=n {
            let e = squared_elementary::<K>(n, k);
            let ea = self.multiplication(&e);
            for g in &gens {
                for f in &tests {
                    let lhs = self.apply(&ea, &self.apply(g, f)?)?;
                    let rhs = self.apply(g, &self.apply(&ea, f)?)?;
                    central &= lhs == rhs;
                }
            }
        }
        let schubert: Vec<Poly<K>> = (0..self.family.len())
            .map(|w| self.family.polynomial(w).to_scalar())
            .collect();
        let lowest = -2 * self.group().longest_length() as i64;
        let mut degrees = Vec::new();
        let mut d = lowest;
        while d <= i64::from(degree_cap) {
            let basis = self.pbw_basis(d);
            // [b, g](𝔰_u) for every generator g and every u; the commutator
            // lies in the algebra, so vanishing on the Schubert basis suffices.
            let vectors: Vec<SparseVec<(usize, usize, Monomial)>> = basis
                .par_iter()
                .map(|(w, r)| {
                    let b = self.pbw(*w, r.clone(), Scalar::one());
                    let mut v = SparseVec::new();
                    for (gi, g) in gens.iter().enumerate() {
                        for (u, s) in schubert.iter().enumerate() {
                            let bg = self.apply(&b, &self.apply(g, s)?)?;
                            let gb = self.apply(g, &self.apply(&b, s)?)?;
                            for (m, c) in bg.sub(&gb).terms() {
                                v.insert((gi, u, m.clone()), c.clone());
                            }
                        }
                    }
                    Ok(v)
                })
                .collect::<Result<_>>()?;
            let kernel = crate::linalg::nullspace(vectors);
            let commutant: Vec<SparseVec<(usize, Monomial)>> = kernel
                .iter()
                .map(|combo| {
                    combo
                        .iter()
                        .map(|(j, c)| (basis[*j].clone(), c.clone()))
                        .collect()
                })
                .collect();
            let symmetric: Vec<SparseVec<(usize, Monomial)>> = symmetric_squares_slice::<K>(n, d)
                .into_iter()
                .map(|p| {
                    p.terms()
                        .map(|(m, c)| ((0, m.clone()), c.clone()))
                        .collect()
                })
                .collect();
            let equal = same_sparse_span(&commutant, &symmetric);
            let mut span = EchelonBasis::untracked();
            for v in &symmetric {
                span.insert(v.clone());
            }
            let unexplained = commutant
                .iter()
                .filter(|v| !span.contains(v))
                .map(|v| {
                    let mut a = self.zero();
                    for ((w, r), c) in v {
                        a.add_term(*w, r.clone(), c.clone());
                    }
                    self.format(&a)
                })
                .collect();
            degrees.push(CenterDegree {
                q_degree: d,
                basis_size: basis.len(),
                commutant_dim: commutant.len(),
                symmetric_dim: symmetric.len(),
                equal,
                unexplained,
            });
            d += 2;
        }
        Ok(CenterReport {
            weyl_type: ty.to_string(),
            rank: n,
            degree_cap,
            generators_central: central,
            degrees,
        })
    }
}

/// `e_k(x1², ..., xn²)`; squares commute in both variants, so no signs.
fn squared_elementary<K: Kind>(n: usize, k: usize) -> Poly<K> {
    let e = elementary::<Scalar, Even>(WeylType::A, n, k).expect("1 <= k <= n");
    Polynomial::from_terms(
        n,
        e.terms()
            .map(|(m, c)| (m.0.iter().map(|x| 2 * x).collect(), c.clone())),
    )
}

/// Basis of the q-degree `d` slice of `ℤ[x1², ..., xn²]^{S_n}`: monomials in
/// `e_k(x²)` (q-degree `4k`).
fn symmetric_squares_slice<K: Kind>(n: usize, d: i64) -> Vec<Poly<K>> {
    if d < 0 || d % 4 != 0 {
        return Vec::new();
    }
    let target = (d / 4) as u32;
    let gens: Vec<Poly<K>> = (1..=n).map(|k| squared_elementary(n, k)).collect();
    let mut out = Vec::new();
    // exponent vectors a with Σ k a_k = target
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, n: usize) {
        if k > n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut a = 0;
        while a * k as u32 <= left {
            cur.push(a);
            rec(k + 1, left - a * k as u32, cur, out, n);
            cur.pop();
            a += 1;
        }
    }
    let mut exps = Vec::new();
    rec(1, target, &mut Vec::new(), &mut exps, n);
    for a in exps {
        let mut p = Polynomial::one(n);
        for (g, &ak) in gens.iter().zip(&a) {
            if ak > 0 {
                p = p.mul(&g.pow(ak));
            }
        }
        out.push(p);
    }
    out
}

fn same_sparse_span<T: Ord + Clone + std::hash::Hash>(
    a: &[SparseVec<T>],
    b: &[SparseVec<T>],
) -> bool {
    let mut ea = EchelonBasis::untracked();
    for v in a {
        ea.insert(v.clone());
    }
    let mut eb = EchelonBasis::untracked();
    for v in b {
        eb.insert(v.clone());
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Spin};
    use crate::scalar::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn skew(s: &str, n: usize) -> Poly<Spin> {
        parse_polynomial::<Spin>(s, Some(n)).unwrap()
    }

    #[test]
    fn apply_basic_elements() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let x1 = nh.x(1).unwrap();
        let d1 = nh.d(1).unwrap();
        let xd = nh.multiply(&x1, &d1).unwrap();
        assert_eq!(nh.apply(&xd, &skew("x1", 1)).unwrap(), skew("x1", 1));
        let f = skew("3 x1^5 - x1^2 + 7", 1);
        assert_eq!(nh.apply(&nh.unit(), &f).unwrap(), f);
        // ∂ x + x ∂ - 1 = 0
        let dx = nh.multiply(&d1, &x1).unwrap();
        assert_eq!(dx.add(&xd), nh.unit());
    }

    #[test]
    fn pbw_of_dx() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let ops = nh.family().operators().to_vec();
        let op = |f: &Poly<Spin>| apply_atoms(&ops, &[Atom::D(1), Atom::X(1)], f);
        let a = nh
            .pbw_decompose(&op, Some(0), ScalarDomain::Integer, Verification::Monomials)
            .unwrap();
        assert_eq!(nh.format(&a), "1 - x1*d1");
        let id = |f: &Poly<Spin>| Ok(f.clone());
        let a = nh
            .pbw_decompose(&id, Some(0), ScalarDomain::Integer, Verification::Monomials)
            .unwrap();
        assert_eq!(a, nh.unit());
        let nh2 = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
        let ops2 = nh2.family().operators().to_vec();
        let dd = |f: &Poly<Spin>| apply_atoms(&ops2, &[Atom::D(1), Atom::D(1)], f);
        assert!(nh2
            .pbw_decompose(
                &dd,
                Some(-4),
                ScalarDomain::Integer,
                Verification::Monomials
            )
            .unwrap()
            .is_zero());
    }

    #[test]
    fn non_homogeneous_operator_rejected() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let ops = nh.family().operators().to_vec();
        let op = |f: &Poly<Spin>| Ok(f.add(&apply_atoms(&ops, &[Atom::D(1)], f)?));
        assert!(nh
            .pbw_decompose(&op, Some(0), ScalarDomain::Integer, Verification::Monomials)
            .is_err());
    }

    #[test]
    fn square_of_xd_against_operator_oracle() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let xd = nh.multiply(&nh.x(1).unwrap(), &nh.d(1).unwrap()).unwrap();
        let sq = nh.multiply(&xd, &xd).unwrap();
        for m in Monomial::all_up_to_degree(1, 6) {
            let f = Polynomial::monomial(m);
            let direct = nh.apply(&xd, &nh.apply(&xd, &f).unwrap()).unwrap();
            assert_eq!(nh.apply(&sq, &f).unwrap(), direct);
        }
    }

    #[test]
    fn rank_one_matrices() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let mx = nh
            .to_matrix(&nh.x(1).unwrap(), ScalarDomain::Integer)
            .unwrap();
        assert_eq!(mx.to_strings(), vec![vec!["0", "e1"], vec!["1", "0"]]);
        assert_eq!(mx.entry(0, 1).polynomial().to_string(), "x1^2");
        let md = nh
            .to_matrix(&nh.d(1).unwrap(), ScalarDomain::Integer)
            .unwrap();
        assert_eq!(md.to_strings(), vec![vec!["0", "1"], vec!["0", "0"]]);
        let mu = nh.to_matrix(&nh.unit(), ScalarDomain::Integer).unwrap();
        assert!(mu.same_as(&MatrixOverLambda::identity(WeylType::B, 1, 2)));
    }

    #[test]
    fn preimages_of_units() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let p = nh
            .solve_preimage(&nh.matrix_unit(0, 0), ScalarDomain::Integer)
            .unwrap();
        let Preimage::Solved(a) = p else {
            panic!("unsolvable")
        };
        let expected = nh.multiply(&nh.d(1).unwrap(), &nh.x(1).unwrap()).unwrap();
        assert_eq!(a, expected);
    }

    /// Dense oracle: express the matrix unit in the matrices of all PBW basis
    /// elements of the matching degree by Gaussian elimination.
    fn dense_preimage<K: Kind>(nh: &NilHecke<K>, v: usize, w: usize) -> NilHeckeElement<K> {
        let d = 2 * (nh.group().length_of(v) as i64 - nh.group().length_of(w) as i64);
        let basis = nh.pbw_basis(d);
        let mats: Vec<_> = basis
            .iter()
            .map(|(u, r)| {
                let m = nh
                    .to_matrix(
                        &nh.pbw(*u, r.clone(), Scalar::one()),
                        ScalarDomain::Rational,
                    )
                    .unwrap();
                NilHecke::matrix_coordinates(&m)
            })
            .collect();
        let target = NilHecke::matrix_coordinates(&nh.matrix_unit(v, w));
        let sol = crate::linalg::solve(mats, &target).expect("solvable over Q");
        let mut a = nh.zero();
        for (j, c) in sol {
            a.add_term(basis[j].0, basis[j].1.clone(), c);
        }
        a
    }

    #[test]
    fn preimage_matches_dense_oracle() {
        let nh = NilHecke::<Spin>::new(WeylType::D, 2).unwrap();
        for v in 0..4 {
            for w in 0..4 {
                let Preimage::Solved(a) = nh
                    .solve_preimage(&nh.matrix_unit(v, w), ScalarDomain::Rational)
                    .unwrap()
                else {
                    panic!()
                };
                assert_eq!(a, dense_preimage(&nh, v, w), "E_{v},{w}");
            }
        }
    }

    #[test]
    fn rank_one_unsolvable_over_integers_when_scaled() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let mut m = nh.matrix_unit(0, 0);
        m.set(0, 0, LambdaElement::constant(WeylType::B, 1, rat(1, 3)));
        assert_eq!(
            nh.solve_preimage(&m, ScalarDomain::Integer).unwrap(),
            Preimage::Unsolvable {
                coefficient: "1/3".into()
            }
        );
    }

    #[test]
    fn matrices_are_multiplicative() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let (da, db) = (2 * rng.gen_range(-2..=2), 2 * rng.gen_range(-2..=2));
            let a = nh.random_homogeneous(&mut rng, da, 3);
            let b = nh.random_homogeneous(&mut rng, db, 3);
            let ab = nh.multiply(&a, &b).unwrap();
            let lhs = nh.to_matrix(&ab, ScalarDomain::Integer).unwrap();
            let rhs = nh
                .to_matrix(&a, ScalarDomain::Integer)
                .unwrap()
                .mul(&nh.to_matrix(&b, ScalarDomain::Integer).unwrap());
            assert!(lhs.same_as(&rhs));
        }
    }

    #[test]
    fn pbw_round_trip_random() {
        let nh = NilHecke::<Spin>::new(WeylType::D, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let d = 2 * rng.gen_range(-3..=3);
            let a = nh.random_homogeneous(&mut rng, d, 4);
            let op = |f: &Poly<Spin>| nh.apply(&a, f);
            let b = nh
                .pbw_decompose(&op, Some(d), ScalarDomain::Integer, Verification::Monomials)
                .unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn faithful_in_small_degrees() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
        for d in (-8..=8).step_by(2) {
            let (size, rank) = nh.faithfulness_rank(d);
            assert_eq!(size, rank, "degree {d}");
        }
    }

    #[test]
    fn graded_ranks() {
        let s = graded_rank(RankTarget::Nc, Variant::Spin, WeylType::B, 1, 20).unwrap();
        assert_eq!(s.to_string(), "πq^-2 + 1 + O(q^21)");
        for n in 1..=3 {
            for target in [RankTarget::Nc, RankTarget::Nh] {
                let a = graded_rank(target, Variant::Spin, WeylType::B, n, 20).unwrap();
                let b = graded_rank_closed_form(target, Variant::Spin, WeylType::B, n, 20).unwrap();
                assert!(a.agrees_to(&b, 20), "{target} B{n}: {a} vs {b}");
            }
        }
        let a = graded_rank(RankTarget::Nh, Variant::Even, WeylType::A, 3, 20).unwrap();
        let b = graded_rank_closed_form(RankTarget::Nh, Variant::Even, WeylType::A, 3, 20).unwrap();
        assert!(a.agrees_to(&b, 20));
    }

    #[test]
    fn center_rank_one() {
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        let r = nh.center_check(8).unwrap();
        assert!(r.passed(), "{r:?}");
        // x1 does not commute with ∂1
        let x = nh.x(1).unwrap();
        let d = nh.d(1).unwrap();
        assert_ne!(nh.multiply(&x, &d).unwrap(), nh.multiply(&d, &x).unwrap());
    }

    #[test]
    fn right_multiplication_by_top_generator_is_central_in_type_d() {
        // f ↦ f·x1x2 is right linear over the symmetric ring, so it lies in
        // the algebra and commutes with every generator, yet it is not a
        // polynomial in x1², x2².
        let nh = NilHecke::<Spin>::new(WeylType::D, 2).unwrap();
        let e = skew("x1 x2", 2);
        let op = |f: &Poly<Spin>| Ok(f.mul(&e));
        let z = nh
            .pbw_decompose(&op, Some(4), ScalarDomain::Integer, Verification::Monomials)
            .unwrap();
        assert_eq!(z.coeff(0, &Monomial(vec![1, 1])), Scalar::one());
        assert!(z.len() > 1);
        for i in 1..=2 {
            for g in [nh.x(i).unwrap(), nh.d(i).unwrap()] {
                assert_eq!(nh.multiply(&z, &g).unwrap(), nh.multiply(&g, &z).unwrap());
            }
        }
        let r = nh.center_check(4).unwrap();
        assert!(r.generators_central);
        let d4 = r.degrees.iter().find(|d| d.q_degree == 4).unwrap();
        assert_eq!((d4.commutant_dim, d4.symmetric_dim), (2, 1));
        assert_eq!(d4.unexplained, vec![nh.format(&z)]);
    }

    #[test]
    fn even_matrix_units_rank_two() {
        let nh = NilHecke::<Even>::new(WeylType::A, 2).unwrap();
        for v in 0..2 {
            for w in 0..2 {
                assert!(nh
                    .solve_preimage(&nh.matrix_unit(v, w), ScalarDomain::Rational)
                    .unwrap()
                    .is_solved());
            }
        }
    }
}
