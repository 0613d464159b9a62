//! Truncated Laurent series in `q` with a parity marker `π`, `π² = 1`.
//!
//! A series knows up to which `q`-exponent its coefficients are exact
//! (`precision`); products and inverses propagate that bound, so comparisons
//! are only ever made where both sides are known.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// `Σ c_{k,p} q^k π^p` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRankSeries {
    coeffs: BTreeMap<(i64, u8), BigInt>,
    /// Coefficients with `q`-exponent above this bound are unknown.
    /// `None` means the series is an exact Laurent polynomial.
    precision: Option<i64>,
}

impl GradedRankSeries {
    pub fn zero() -> Self {
        GradedRankSeries {
            coeffs: BTreeMap::new(),
            precision: None,
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// `c · q^k π^p`.
    pub fn monomial(k: i64, p: u8, c: BigInt) -> Self {
        let mut s = Self::zero();
        s.add_coeff(k, p, c);
        s
    }

    pub fn add_coeff(&mut self, k: i64, p: u8, c: BigInt) {
        if c.is_zero() || self.precision.is_some_and(|t| k > t) {
            return;
        }
        let e = self.coeffs.entry((k, p % 2)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(k, p % 2));
        }
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    /// Forgets everything above `q^t`.
    pub fn truncate(&self, t: i64) -> Self {
        let t = self.precision.map_or(t, |p| p.min(t));
        GradedRankSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((k, _), _)| *k <= t)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            precision: Some(t),
        }
    }

    pub fn coeff(&self, k: i64, p: u8) -> BigInt {
        self.coeffs
            .get(&(k, p % 2))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u8, &BigInt)> {
        self.coeffs.iter().map(|((k, p), c)| (*k, *p, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().map(|(k, _)| *k).min()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let precision = match (self.precision, other.precision) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        let mut s = GradedRankSeries {
            coeffs: BTreeMap::new(),
            precision,
        };
        for (k, p, c) in self.terms().chain(other.terms()) {
            s.add_coeff(k, p, c.clone());
        }
        s
    }

    pub fn neg(&self) -> Self {
        GradedRankSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
            precision: self.precision,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Exact up to min(T_a + min_b, T_b + min_a).
        let bound = |t: Option<i64>, m: Option<i64>| t.map(|t| t + m.unwrap_or(0));
        let pa = bound(self.precision, other.min_exponent());
        let pb = bound(other.precision, self.min_exponent());
        let precision = match (pa, pb) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        let mut s = GradedRankSeries {
            coeffs: BTreeMap::new(),
            precision,
        };
        for (ka, pa, ca) in self.terms() {
            for (kb, pb, cb) in other.terms() {
                s.add_coeff(ka + kb, pa + pb, ca * cb);
            }
        }
        s
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse computed up to `q^t`, if the lowest term is a
    /// unit `±q^m π^p`.
    pub fn inverse(&self, t: i64) -> Option<Self> {
        let m = self.min_exponent()?;
        let lowest: Vec<_> = self.terms().filter(|(k, _, _)| *k == m).collect();
        if lowest.len() != 1 || !lowest[0].2.abs().is_one() {
            return None;
        }
        let (_, p, c0) = lowest[0];
        let unit_inv = Self::monomial(-m, p, c0.clone());
        // self = u (1 + r) with r having only positive exponents.
        let r = self.mul(&unit_inv).sub(&Self::one());
        let r_min = r.min_exponent().unwrap_or(1);
        debug_assert!(r_min > 0);
        // (1 + r)^{-1} to q^{t + m}: Σ (-r)^j while j·r_min ≤ t + m.
        let target = t + m;
        let neg_r = r.neg().truncate(target);
        let mut acc = Self::one().truncate(target);
        let mut pw = Self::one().truncate(target);
        let mut j = 1;
        while j * r_min <= target {
            pw = pw.mul(&neg_r).truncate(target);
            acc = acc.add(&pw);
            j += 1;
        }
        let out = acc.mul(&unit_inv).truncate(t);
        Some(out)
    }

    /// Sets `π = 1`, leaving a `q`-series with parity 0.
    pub fn at_pi_one(&self) -> Self {
        let mut s = GradedRankSeries {
            coeffs: BTreeMap::new(),
            precision: self.precision,
        };
        for (k, _, c) in self.terms() {
            s.add_coeff(k, 0, c.clone());
        }
        s
    }

    /// Coefficientwise equality on all exponents `≤ t`.
    pub fn agrees_to(&self, other: &Self, t: i64) -> bool {
        let known = |s: &Self| s.precision.is_none_or(|p| p >= t);
        known(self) && known(other) && self.truncate(t).coeffs == other.truncate(t).coeffs
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            precision: self.precision,
            terms: self
                .terms()
                .map(|(k, p, c)| SeriesTermJson {
                    q: k,
                    pi: p,
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SeriesTermJson {
    pub q: i64,
    pub pi: u8,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SeriesJson {
    pub precision: Option<i64>,
    pub terms: Vec<SeriesTermJson>,
}

impl fmt::Display for GradedRankSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")?;
        }
        for (idx, (k, p, c)) in self.terms().enumerate() {
            let mut body = String::new();
            let mono = match (k, p) {
                (0, 0) => String::new(),
                (0, _) => "π".into(),
                (_, 0) => format!("q^{k}"),
                (_, _) => format!("πq^{k}"),
            };
            let a = c.abs();
            if mono.is_empty() {
                body.push_str(&a.to_string());
            } else if a.is_one() {
                body.push_str(&mono);
            } else {
                body.push_str(&format!("{a}{mono}"));
            }
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        if let Some(t) = self.precision {
            write!(f, " + O(q^{})", t + 1)?;
        }
        Ok(())
    }
}

/// `[m]_π = Σ_{k=0}^{m-1} π^{m-1-k} q^{m-1-2k}`.
pub fn q_integer(m: u32) -> GradedRankSeries {
    let mut s = GradedRankSeries::zero();
    for k in 0..m {
        s.add_coeff(
            i64::from(m) - 1 - 2 * i64::from(k),
            ((m - 1 - k) % 2) as u8,
            BigInt::one(),
        );
    }
    s
}

/// `[2n]_π!! = [2n]_π [2n-2]_π ... [2]_π`.
pub fn double_factorial(n: u32) -> GradedRankSeries {
    (1..=n).fold(GradedRankSeries::one(), |acc, k| acc.mul(&q_integer(2 * k)))
}

/// `[n]_π! = [n]_π ... [1]_π`.
pub fn factorial(n: u32) -> GradedRankSeries {
    (1..=n).fold(GradedRankSeries::one(), |acc, k| acc.mul(&q_integer(k)))
}

/// `(πq)^e`.
pub fn pi_q_power(e: i64) -> GradedRankSeries {
    GradedRankSeries::monomial(e, (e.rem_euclid(2)) as u8, BigInt::one())
}

/// `(1 - πq²)^{-n}` up to `q^t`.
pub fn free_odd_polynomial_rank(n: u32, t: i64) -> GradedRankSeries {
    let base = GradedRankSeries::one().sub(&GradedRankSeries::monomial(2, 1, BigInt::one()));
    base.pow(n).inverse(t).expect("unit constant term")
}

/// Drops π (sets all parities to 0); used for even-variant bookkeeping.
pub fn forget_parity(s: &GradedRankSeries) -> GradedRankSeries {
    s.at_pi_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers_satisfy_defining_identity() {
        // (πq - q^{-1}) [m]_π = π^m q^m - q^{-m}
        let lhs_factor = pi_q_power(1).sub(&GradedRankSeries::monomial(-1, 0, BigInt::one()));
        for m in 1..=8u32 {
            let lhs = lhs_factor.mul(&q_integer(m));
            let rhs = pi_q_power(i64::from(m)).sub(&GradedRankSeries::monomial(
                -i64::from(m),
                0,
                BigInt::one(),
            ));
            assert_eq!(lhs, rhs, "m = {m}");
        }
        assert_eq!(q_integer(2).to_string(), "q^-1 + πq^1");
    }

    #[test]
    fn inverse_of_geometric() {
        let s = GradedRankSeries::one().sub(&GradedRankSeries::monomial(4, 0, BigInt::one()));
        let inv = s.inverse(12).unwrap();
        let expected = (0..=3).fold(GradedRankSeries::zero(), |acc, k| {
            acc.add(&GradedRankSeries::monomial(4 * k, 0, BigInt::one()))
        });
        assert!(inv.agrees_to(&expected, 12));
        assert!(s.mul(&inv).agrees_to(&GradedRankSeries::one(), 12));
        let two = GradedRankSeries::monomial(0, 0, BigInt::from(2));
        assert!(two.inverse(5).is_none());
    }

    #[test]
    fn inverse_with_negative_lowest_term() {
        let d = double_factorial(2);
        let inv = d.inverse(20).unwrap();
        assert_eq!(inv.min_exponent(), Some(4));
        assert!(d.mul(&inv).agrees_to(&GradedRankSeries::one(), 16));
    }

    #[test]
    fn free_rank_expansion() {
        let s = free_odd_polynomial_rank(1, 6);
        for k in 0..=3 {
            assert_eq!(s.coeff(2 * k, (k % 2) as u8), BigInt::one());
        }
        let s2 = free_odd_polynomial_rank(2, 4);
        assert_eq!(s2.coeff(4, 0), BigInt::from(3));
    }

    #[test]
    fn pi_squares_to_one() {
        let p = GradedRankSeries::monomial(0, 1, BigInt::one());
        assert_eq!(p.mul(&p), GradedRankSeries::one());
    }
}
