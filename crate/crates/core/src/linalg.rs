//! Exact sparse linear algebra over ℚ.
//!
//! Vectors are sparse maps from an ordered key type to nonzero rationals. An
//! [`EchelonBasis`] accepts vectors one at a time, keeps them in row echelon
//! form (each row's smallest key is its pivot, pivots are distinct) and
//! remembers how every stored row was combined from the inserted vectors, so
//! dependencies, kernels and solutions fall out of the same elimination.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::ops::Bound;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// `a += c · b`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(a: &mut SparseVec<K>, c: &Scalar, b: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, v) in b {
        let t = c * v;
        match a.get_mut(k) {
            Some(x) => {
                *x += t;
                if x.is_zero() {
                    a.remove(k);
                }
            }
            None => {
                a.insert(k.clone(), t);
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Row<K> {
    vec: SparseVec<K>,
    /// Coefficients on inserted vectors (by label) producing `vec`.
    combo: SparseVec<usize>,
}

/// Outcome of inserting a vector into an [`EchelonBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insertion {
    Independent,
    /// The inserted vector was dependent: the combination sums to zero over
    /// the inserted vectors (including the new one).
    Dependent(SparseVec<usize>),
}

#[derive(Debug, Clone)]
pub struct EchelonBasis<K: Ord + Clone + Hash> {
    rows: Vec<Row<K>>,
    pivots: HashMap<K, usize>,
    inserted: usize,
    track: bool,
}

impl<K: Ord + Clone + Hash> Default for EchelonBasis<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone + Hash> EchelonBasis<K> {
    pub fn new() -> Self {
        EchelonBasis {
            rows: Vec::new(),
            pivots: HashMap::new(),
            inserted: 0,
            track: true,
        }
    }

    /// A basis that does not record combinations (rank queries only).
    pub fn untracked() -> Self {
        EchelonBasis {
            track: false,
            ..Self::new()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination of inserted vectors that was subtracted.
    fn reduce_tracked(&self, mut v: SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut combo = SparseVec::new();
        let mut cursor: Option<K> = None;
        loop {
            let range = match &cursor {
                None => v.range::<K, _>(..),
                Some(c) => v.range::<K, _>((Bound::Excluded(c), Bound::Unbounded)),
            };
            let hit = range
                .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (k.clone(), c.clone(), r)))
                .next();
            let Some((k, c, r)) = hit else { break };
            let neg = -c;
            axpy(&mut v, &neg, &self.rows[r].vec);
            if self.track {
                axpy(&mut combo, &neg, &self.rows[r].combo);
            }
            cursor = Some(k);
        }
        (v, combo)
    }

    pub fn reduce(&self, v: SparseVec<K>) -> SparseVec<K> {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Inserts the next vector; its label is the number of vectors inserted
    /// before it.
    pub fn insert(&mut self, v: SparseVec<K>) -> Insertion {
        let label = self.inserted;
        self.inserted += 1;
        let (mut rem, mut combo) = self.reduce_tracked(v);
        if self.track {
            combo.insert(label, Scalar::one());
        }
        match rem.keys().next().cloned() {
            None => Insertion::Dependent(combo),
            Some(p) => {
                let inv = Scalar::one() / &rem[&p];
                for x in rem.values_mut() {
                    *x *= &inv;
                }
                if self.track {
                    for x in combo.values_mut() {
                        *x *= &inv;
                    }
                }
                self.pivots.insert(p, self.rows.len());
                self.rows.push(Row { vec: rem, combo });
                Insertion::Independent
            }
        }
    }

    /// Coefficients `a` with `Σ a_j v_j = target` over the inserted vectors,
    /// if `target` is in their span.
    pub fn solve(&self, target: &SparseVec<K>) -> Option<SparseVec<usize>> {
        assert!(self.track, "solve needs a tracked basis");
        let (rem, combo) = self.reduce_tracked(target.clone());
        if !rem.is_empty() {
            return None;
        }
        // target - Σ c_r row_r = 0 and combo = -Σ c_r combo_r.
        Some(combo.into_iter().map(|(k, v)| (k, -v)).collect())
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone + Hash>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut b = EchelonBasis::untracked();
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}

/// Basis of `{a : Σ a_j v_j = 0}`.
pub fn nullspace<K: Ord + Clone + Hash>(
    vectors: impl IntoIterator<Item = SparseVec<K>>,
) -> Vec<SparseVec<usize>> {
    let mut b = EchelonBasis::new();
    let mut out = Vec::new();
    for v in vectors {
        if let Insertion::Dependent(c) = b.insert(v) {
            out.push(c);
        }
    }
    out
}

/// Solves `Σ a_j v_j = target`.
pub fn solve<K: Ord + Clone + Hash>(
    vectors: impl IntoIterator<Item = SparseVec<K>>,
    target: &SparseVec<K>,
) -> Option<SparseVec<usize>> {
    let mut b = EchelonBasis::new();
    for v in vectors {
        b.insert(v);
    }
    b.solve(target)
}

/// Determinant of a square integer matrix (fraction-free elimination).
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// True when the integer matrix is square with determinant ±1.
pub fn is_unimodular(m: &[Vec<BigInt>]) -> bool {
    m.iter().all(|r| r.len() == m.len()) && determinant(m).abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn v(entries: &[(usize, i64)]) -> SparseVec<usize> {
        entries.iter().map(|&(k, c)| (k, rat(c, 1))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let vs = vec![
            v(&[(0, 1), (1, 2)]),
            v(&[(1, 1), (2, 1)]),
            v(&[(0, 1), (1, 4), (2, 2)]),
        ];
        assert_eq!(rank(vs.clone()), 2);
        let ker = nullspace(vs.clone());
        assert_eq!(ker.len(), 1);
        // v0 + 2 v1 - v2 = 0
        let mut sum = SparseVec::new();
        for (j, c) in &ker[0] {
            axpy(&mut sum, c, &vs[*j]);
        }
        assert!(sum.is_empty());
    }

    #[test]
    fn solving() {
        let vs = vec![v(&[(0, 2)]), v(&[(0, 1), (1, 3)])];
        let t = v(&[(0, 5), (1, 3)]);
        let a = solve(vs.clone(), &t).unwrap();
        let mut sum = SparseVec::new();
        for (j, c) in &a {
            axpy(&mut sum, c, &vs[*j]);
        }
        assert_eq!(sum, t);
        assert!(solve(vs, &v(&[(2, 1)])).is_none());
    }

    #[test]
    fn determinants() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(determinant(&m(&[&[2, 1], &[1, 1]])), BigInt::from(1));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])),
            BigInt::from(-3)
        );
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert!(is_unimodular(&m(&[&[1, 5], &[0, -1]])));
    }
}
