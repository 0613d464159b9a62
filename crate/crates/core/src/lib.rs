//! Exact computations in spin nilHecke algebras of types A, B and D and in
//! their classical (even) counterparts.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: skew and commutative polynomials with exact coefficients
//! * [`weyl`]: signed permutation groups, lengths, reduced words
//! * [`demazure`]: odd and even Demazure operators, relation suites
//! * [`schubert`]: Schubert polynomials and free-module decompositions
//! * [`symfun`], [`series`]: symmetric polynomial rings, graded ranks
//! * [`nilhecke`]: PBW elements, multiplication, matrices over the invariants

pub mod demazure;
pub mod error;
pub mod expr;
pub mod kernels;
mod lexer;
pub mod linalg;
pub mod nilhecke;
pub mod poly;
pub mod relations;
pub mod report;
pub mod scalar;
pub mod schubert;
pub mod series;
pub mod suites;
pub mod symfun;
pub mod weyl;

pub use error::{AlgebraError, Result};
pub use poly::{EvenPolynomial, Monomial, Polynomial, SkewPolynomial, Variant};
pub use scalar::{Scalar, ScalarDomain};
