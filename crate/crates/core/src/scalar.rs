//! Coefficient rings.
//!
//! Integer arithmetic uses [`BigInt`]. Every other scalar is a [`BigRational`]
//! tagged with the [`ScalarDomain`] it is supposed to live in: integers,
//! dyadic rationals (denominator a power of two) or all rationals. Divisions
//! are checked against the domain so that integrality questions become
//! explicit errors instead of silent promotions.

use std::fmt::{self, Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Rational scalars used for every non-integral computation.
pub type Scalar = BigRational;

/// Exact coefficient ring usable inside polynomials.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Zero
    + One
    + Signed
    + Send
    + Sync
    + for<'a> std::ops::AddAssign<&'a Self>
    + for<'a> std::ops::SubAssign<&'a Self>
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `self / d` when the quotient exists in this ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    fn to_scalar(&self) -> Scalar;
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    fn to_scalar(&self) -> Scalar {
        BigRational::from_integer(self.clone())
    }
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }

    fn to_scalar(&self) -> Scalar {
        self.clone()
    }
}

/// Base ring tag: ℤ, ℤ[½] or ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarDomain {
    Integer,
    Dyadic,
    Rational,
}

impl ScalarDomain {
    pub fn contains(self, v: &Scalar) -> bool {
        match self {
            ScalarDomain::Integer => v.is_integer(),
            ScalarDomain::Dyadic => is_power_of_two(v.denom()),
            ScalarDomain::Rational => true,
        }
    }

    /// Divides inside the domain, failing if the quotient leaves it.
    pub fn divide(self, value: &Scalar, divisor: &Scalar) -> Result<Scalar> {
        let err = || AlgebraError::DomainCannotDivide {
            value: value.to_string(),
            divisor: divisor.to_string(),
            domain: self,
        };
        if divisor.is_zero() {
            return Err(err());
        }
        let q = value / divisor;
        if self.contains(&q) {
            Ok(q)
        } else {
            Err(err())
        }
    }

    /// Smallest of the two domains in the inclusion ℤ ⊂ ℤ[½] ⊂ ℚ that contains `v`.
    pub fn of(v: &Scalar) -> ScalarDomain {
        if v.is_integer() {
            ScalarDomain::Integer
        } else if is_power_of_two(v.denom()) {
            ScalarDomain::Dyadic
        } else {
            ScalarDomain::Rational
        }
    }
}

impl Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarDomain::Integer => "integer",
            ScalarDomain::Dyadic => "dyadic",
            ScalarDomain::Rational => "rational",
        })
    }
}

impl FromStr for ScalarDomain {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "int" | "integer" | "z" => Ok(ScalarDomain::Integer),
            "dyadic" | "z[1/2]" => Ok(ScalarDomain::Dyadic),
            "rational" | "q" => Ok(ScalarDomain::Rational),
            other => Err(AlgebraError::Parse(format!(
                "unknown scalar domain `{other}`"
            ))),
        }
    }
}

fn is_power_of_two(d: &BigInt) -> bool {
    if !d.is_positive() {
        return false;
    }
    let trailing = d.trailing_zeros().unwrap_or(0);
    (d >> trailing).is_one()
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a scalar the way the text formats expect: `p` or `p/q`.
pub fn scalar_to_string(v: &Scalar) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("invalid scalar `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_membership() {
        assert!(ScalarDomain::Dyadic.contains(&rat(3, 8)));
        assert!(ScalarDomain::Dyadic.contains(&rat(-5, 1)));
        assert!(!ScalarDomain::Dyadic.contains(&rat(1, 6)));
        assert!(!ScalarDomain::Integer.contains(&rat(1, 2)));
        assert!(ScalarDomain::Rational.contains(&rat(1, 3)));
    }

    #[test]
    fn domain_division() {
        assert_eq!(
            ScalarDomain::Integer
                .divide(&rat(6, 1), &rat(2, 1))
                .unwrap(),
            rat(3, 1)
        );
        assert!(ScalarDomain::Integer
            .divide(&rat(1, 1), &rat(2, 1))
            .is_err());
        assert_eq!(
            ScalarDomain::Dyadic.divide(&rat(1, 1), &rat(4, 1)).unwrap(),
            rat(1, 4)
        );
        assert!(ScalarDomain::Dyadic.divide(&rat(1, 1), &rat(3, 1)).is_err());
        assert!(ScalarDomain::Rational
            .divide(&rat(1, 1), &rat(0, 1))
            .is_err());
    }

    #[test]
    fn smallest_domain() {
        assert_eq!(ScalarDomain::of(&rat(4, 2)), ScalarDomain::Integer);
        assert_eq!(ScalarDomain::of(&rat(1, 2)), ScalarDomain::Dyadic);
        assert_eq!(ScalarDomain::of(&rat(1, 12)), ScalarDomain::Rational);
    }

    #[test]
    fn scalar_text() {
        assert_eq!(parse_scalar("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(scalar_to_string(&rat(-1, 2)), "-1/2");
        assert_eq!(scalar_to_string(&rat(8, 2)), "4");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
    }

    #[test]
    fn integer_exact_division() {
        assert_eq!(int(12).div_exact(&int(-4)), Some(int(-3)));
        assert_eq!(int(13).div_exact(&int(4)), None);
        assert_eq!(int(1).div_exact(&int(0)), None);
    }
}
