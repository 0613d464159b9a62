//! Kernels and images of Demazure operators on homogeneous slices.
//!
//! All computations are exact linear algebra over ℚ on the monomial basis of a
//! fixed degree, so "for every polynomial of degree d" statements are checked
//! as equalities of subspaces rather than by sampling.

use serde::Serialize;

use crate::demazure::{operators, DemazureOperator};
use crate::error::Result;
use crate::linalg::{axpy, nullspace, EchelonBasis, SparseVec};
use crate::poly::{Even, Kind, Monomial, Polynomial, Spin, Variant};
use crate::scalar::Scalar;
use crate::weyl::WeylType;

pub(crate) fn to_sparse<K: Kind>(f: &Polynomial<Scalar, K>) -> SparseVec<Monomial> {
    f.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

pub(crate) fn from_sparse<K: Kind>(rank: usize, v: &SparseVec<Monomial>) -> Polynomial<Scalar, K> {
    Polynomial::from_terms(rank, v.iter().map(|(m, c)| (m.0.clone(), c.clone())))
}

/// Basis of the common kernel of `ops` on `span(basis)`, as polynomials.
pub fn joint_kernel<K: Kind>(
    ops: &[DemazureOperator],
    rank: usize,
    basis: &[Polynomial<Scalar, K>],
) -> Result<Vec<Polynomial<Scalar, K>>> {
    let mut images = Vec::with_capacity(basis.len());
    for b in basis {
        let mut v: SparseVec<(usize, Monomial)> = SparseVec::new();
        for (i, op) in ops.iter().enumerate() {
            for (m, c) in op.try_apply(b)?.terms() {
                v.insert((i, m.clone()), c.clone());
            }
        }
        images.push(v);
    }
    Ok(nullspace(images)
        .into_iter()
        .map(|combo| {
            let mut acc = SparseVec::new();
            for (j, c) in &combo {
                axpy(&mut acc, c, &to_sparse(&basis[*j]));
            }
            from_sparse(rank, &acc)
        })
        .collect())
}

/// True when the two families span the same subspace.
pub fn same_span<K: Kind>(a: &[Polynomial<Scalar, K>], b: &[Polynomial<Scalar, K>]) -> bool {
    let mut ea = EchelonBasis::untracked();
    for f in a {
        ea.insert(to_sparse(f));
    }
    let mut eb = EchelonBasis::untracked();
    for f in b {
        eb.insert(to_sparse(f));
    }
    ea.rank() == eb.rank() && b.iter().all(|f| ea.contains(&to_sparse(f)))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct KernelImageCase {
    pub operator: usize,
    pub degree: u32,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub equal: bool,
}

/// `ker ∂ = im ∂` on every degree `d ≤ max_degree`, for every spin operator.
pub fn kernel_equals_image(
    ty: WeylType,
    n: usize,
    max_degree: u32,
) -> Result<Vec<KernelImageCase>> {
    let ops = operators(Variant::Spin, ty, n)?;
    let mut out = Vec::new();
    for op in &ops {
        for d in 0..=max_degree {
            let slice: Vec<Polynomial<Scalar, Spin>> = Monomial::all_of_degree(n, d)
                .into_iter()
                .map(Polynomial::monomial)
                .collect();
            let kernel = joint_kernel(std::slice::from_ref(op), n, &slice)?;
            let image: Vec<Polynomial<Scalar, Spin>> = Monomial::all_of_degree(n, d + 1)
                .into_iter()
                .map(|m| op.apply(&Polynomial::monomial(m)))
                .collect();
            let mut e = EchelonBasis::untracked();
            for f in &image {
                e.insert(to_sparse(f));
            }
            out.push(KernelImageCase {
                operator: op.index(),
                degree: d,
                kernel_dim: kernel.len(),
                image_dim: e.rank(),
                equal: same_span(&kernel, &image),
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CorrespondenceCase {
    pub rank: usize,
    /// Degree in the squared variables (polynomial degree is twice this).
    pub half_degree: u32,
    pub spin_kernel_dim: usize,
    pub even_kernel_dim: usize,
    pub equal: bool,
}

/// Pulls a combination of squared monomials back to exponent space `a ↦ x^{2a}`.
fn halve<K: Kind>(f: &Polynomial<Scalar, K>) -> SparseVec<Monomial> {
    f.terms()
        .map(|(m, c)| (Monomial(m.0.iter().map(|e| e / 2).collect()), c.clone()))
        .collect()
}

/// On each slice of polynomials in squared variables, the joint kernel of the
/// spin type A operators and that of the even type A operators coincide
/// (after identifying `x^{2a}` with `𝚡^{2a}`).
pub fn spin_even_kernel_correspondence(
    n: usize,
    max_degree: u32,
) -> Result<Vec<CorrespondenceCase>> {
    let spin_ops = operators(Variant::Spin, WeylType::A, n)?;
    let even_ops = operators(Variant::Even, WeylType::A, n)?;
    let mut out = Vec::new();
    for h in 0..=max_degree / 2 {
        let doubled: Vec<Monomial> = Monomial::all_of_degree(n, h)
            .into_iter()
            .map(|m| Monomial(m.0.iter().map(|e| 2 * e).collect()))
            .collect();
        let spin_slice: Vec<Polynomial<Scalar, Spin>> =
            doubled.iter().cloned().map(Polynomial::monomial).collect();
        let even_slice: Vec<Polynomial<Scalar, Even>> =
            doubled.iter().cloned().map(Polynomial::monomial).collect();
        let ks: Vec<Polynomial<Scalar, Even>> = joint_kernel(&spin_ops, n, &spin_slice)?
            .iter()
            .map(|f| from_sparse(n, &halve(f)))
            .collect();
        let ke: Vec<Polynomial<Scalar, Even>> = joint_kernel(&even_ops, n, &even_slice)?
            .iter()
            .map(|f| from_sparse(n, &halve(f)))
            .collect();
        out.push(CorrespondenceCase {
            rank: n,
            half_degree: h,
            spin_kernel_dim: ks.len(),
            even_kernel_dim: ke.len(),
            equal: same_span(&ks, &ke),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_is_image_small() {
        for (ty, n) in [(WeylType::B, 1), (WeylType::B, 2), (WeylType::D, 2)] {
            for c in kernel_equals_image(ty, n, 6).unwrap() {
                assert!(c.equal, "{ty}{n}: {c:?}");
                assert_eq!(c.kernel_dim, c.image_dim);
            }
        }
    }

    #[test]
    fn rank_one_type_b_kernel() {
        // ker ∂ on degree d of Z[x] is spanned by x^d iff d is even.
        let cases = kernel_equals_image(WeylType::B, 1, 5).unwrap();
        let dims: Vec<usize> = cases.iter().map(|c| c.kernel_dim).collect();
        assert_eq!(dims, vec![1, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn correspondence_rank_two() {
        let cases = spin_even_kernel_correspondence(2, 8).unwrap();
        assert!(cases.iter().all(|c| c.equal));
        // symmetric polynomials in two squared variables: floor(h/2) + 1
        let dims: Vec<usize> = cases.iter().map(|c| c.spin_kernel_dim).collect();
        assert_eq!(dims, vec![1, 1, 2, 2, 3]);
    }
}
