//! Text and JSON forms of polynomials.
//!
//! Text output lists terms from the lexicographically largest exponent
//! vector down, e.g. `x1^2 - 2*x1*x2 - x2^2`. Input is parsed as an honest
//! ring expression, so `x2*x1` in the skew ring reads back as `-x1*x2`.

use std::fmt::{self, Display};

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Kind, Monomial, Polynomial};
use crate::error::{AlgebraError, Result};
use crate::lexer::{tokenize, Cursor, Token};
use crate::scalar::{parse_scalar, Coeff, Scalar};

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

fn term_text<C: Coeff>(m: &Monomial, c: &C) -> String {
    if m.is_one() {
        return c.to_string();
    }
    let mono = monomial_text(m);
    if c.is_one() {
        mono
    } else if (-c.clone()).is_one() {
        format!("-{mono}")
    } else {
        format!("{c}*{mono}")
    }
}

impl<C: Coeff, K: Kind> Display for Polynomial<C, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let t = term_text(m, c);
            match (k, t.strip_prefix('-')) {
                (0, _) => f.write_str(&t)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

/// `{"rank": n, "terms": [{"exp": [...], "coeff": "..."}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub rank: usize,
    pub terms: Vec<TermJson>,
}

impl<C: Coeff, K: Kind> Polynomial<C, K> {
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            rank: self.rank(),
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.0.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl<K: Kind> Polynomial<Scalar, K> {
    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        let mut p = Self::zero(json.rank);
        for t in &json.terms {
            if t.exp.len() != json.rank {
                return Err(AlgebraError::RankMismatch {
                    expected: json.rank,
                    found: t.exp.len(),
                });
            }
            p.add_term(Monomial(t.exp.clone()), parse_scalar(&t.coeff)?);
        }
        Ok(p)
    }
}

/// Parses text such as `3*x1^2*x2 - x3` or `(x1 + x2)(x1 - x2)`.
///
/// When `rank` is `None` it is the largest variable index that occurs
/// (at least 1).
pub fn parse_polynomial<K: Kind>(src: &str, rank: Option<usize>) -> Result<Polynomial<Scalar, K>> {
    let tokens = tokenize(src, &['x'])?;
    let max_index = tokens
        .iter()
        .filter_map(|t| match t {
            Token::Symbol(_, i) => Some(*i),
            _ => None,
        })
        .max()
        .unwrap_or(1);
    let rank = match rank {
        Some(n) if n < max_index => {
            return Err(AlgebraError::IndexOutOfRange {
                index: max_index,
                context: format!("polynomial of rank {n}"),
            })
        }
        Some(n) => n,
        None => max_index,
    };
    let mut cur = Cursor::new(tokens);
    let p = parse_sum::<K>(&mut cur, rank)?;
    if !cur.at_end() {
        return Err(AlgebraError::Parse(format!(
            "trailing input at {:?}",
            cur.peek()
        )));
    }
    Ok(p)
}

fn parse_sum<K: Kind>(cur: &mut Cursor, rank: usize) -> Result<Polynomial<Scalar, K>> {
    let mut acc = Polynomial::zero(rank);
    let mut negate = cur.eat(&Token::Minus);
    if !negate {
        cur.eat(&Token::Plus);
    }
    loop {
        let t = parse_product::<K>(cur, rank)?;
        if negate {
            acc -= &t;
        } else {
            acc += &t;
        }
        if cur.eat(&Token::Plus) {
            negate = false;
        } else if cur.eat(&Token::Minus) {
            negate = true;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_product<K: Kind>(cur: &mut Cursor, rank: usize) -> Result<Polynomial<Scalar, K>> {
    let mut acc = parse_power::<K>(cur, rank)?;
    loop {
        if cur.eat(&Token::Star) || cur.starts_factor() {
            acc = acc.mul(&parse_power::<K>(cur, rank)?);
        } else {
            return Ok(acc);
        }
    }
}

fn parse_power<K: Kind>(cur: &mut Cursor, rank: usize) -> Result<Polynomial<Scalar, K>> {
    let base = parse_atom::<K>(cur, rank)?;
    if cur.eat(&Token::Caret) {
        match cur.next() {
            Some(Token::Int(e)) => {
                let e = e
                    .to_u32()
                    .ok_or_else(|| AlgebraError::Parse(format!("exponent {e} too large")))?;
                Ok(base.pow(e))
            }
            other => Err(AlgebraError::Parse(format!(
                "expected exponent, found {other:?}"
            ))),
        }
    } else {
        Ok(base)
    }
}

fn parse_atom<K: Kind>(cur: &mut Cursor, rank: usize) -> Result<Polynomial<Scalar, K>> {
    match cur.next() {
        Some(Token::Int(n)) => {
            let mut v = Scalar::from_integer(n);
            if cur.eat(&Token::Slash) {
                match cur.next() {
                    Some(Token::Int(d)) if !d.is_zero() => v /= Scalar::from_integer(d),
                    other => {
                        return Err(AlgebraError::Parse(format!(
                            "expected nonzero denominator, found {other:?}"
                        )))
                    }
                }
            }
            Ok(Polynomial::constant(rank, v))
        }
        Some(Token::Symbol(_, i)) => Ok(Polynomial::var(rank, i)),
        Some(Token::LParen) => {
            let p = parse_sum::<K>(cur, rank)?;
            cur.expect(&Token::RParen)?;
            Ok(p)
        }
        Some(Token::Minus) => Ok(-parse_power::<K>(cur, rank)?),
        other => Err(AlgebraError::Parse(format!("unexpected token {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Even, Spin};

    #[test]
    fn text_round_trip() {
        let p = parse_polynomial::<Spin>("3*x1^2*x2 - x3", None).unwrap();
        assert_eq!(p.rank(), 3);
        assert_eq!(p.to_string(), "3*x1^2*x2 - x3");
        let q = parse_polynomial::<Spin>(&p.to_string(), Some(3)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parsing_respects_anticommutation() {
        let p = parse_polynomial::<Spin>("x2*x1", Some(2)).unwrap();
        assert_eq!(p.to_string(), "-x1*x2");
        let e = parse_polynomial::<Even>("x2*x1", Some(2)).unwrap();
        assert_eq!(e.to_string(), "x1*x2");
        let s = parse_polynomial::<Spin>("(x1 + x2)(x1 - x2)", None).unwrap();
        assert_eq!(s.to_string(), "x1^2 - 2*x1*x2 - x2^2");
    }

    #[test]
    fn rationals_and_zero() {
        let p = parse_polynomial::<Spin>("3/2*x1 - 1/2", None).unwrap();
        assert_eq!(p.to_string(), "3/2*x1 - 1/2");
        let z = parse_polynomial::<Spin>("x1 - x1", None).unwrap();
        assert_eq!(z.to_string(), "0");
        assert!(parse_polynomial::<Spin>("x3", Some(2)).is_err());
        assert!(parse_polynomial::<Spin>("x1 +", None).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = parse_polynomial::<Spin>("x1^2 - 2*x1*x2 + 1/4", None).unwrap();
        let j = p.to_json();
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(
            s,
            r#"{"rank":2,"terms":[{"exp":[2,0],"coeff":"1"},{"exp":[1,1],"coeff":"-2"},{"exp":[0,0],"coeff":"1/4"}]}"#
        );
        let back: PolynomialJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Polynomial::<Scalar, Spin>::from_json(&back).unwrap(), p);
    }
}
