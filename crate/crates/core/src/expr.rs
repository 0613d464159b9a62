//! Parser for operator expressions in `x<i>` and `d<i>`.
//!
//! Juxtaposition and `*` both mean composition (rightmost acts first), `^`
//! takes a nonnegative integer power, and integer scalars, `+`, `-` and
//! parentheses work as usual. `d1 x1 + x1 d1`, `2*x1^2*d1*d2` and
//! `(d1 - x2)(x1 + 3)` are all accepted.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::error::{AlgebraError, Result};
use crate::lexer::{tokenize, Cursor, Token};
use crate::relations::{Atom, OperatorExpr};

type Terms = BTreeMap<Vec<Atom>, i64>;

fn overflow() -> AlgebraError {
    AlgebraError::Parse("coefficient overflow".into())
}

fn add_into(acc: &mut Terms, word: Vec<Atom>, c: i64) -> Result<()> {
    let e = acc.entry(word.clone()).or_insert(0);
    *e = e.checked_add(c).ok_or_else(overflow)?;
    if *e == 0 {
        acc.remove(&word);
    }
    Ok(())
}

fn compose(a: &Terms, b: &Terms) -> Result<Terms> {
    let mut out = Terms::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_into(&mut out, w, ca.checked_mul(*cb).ok_or_else(overflow)?)?;
        }
    }
    Ok(out)
}

/// Parses an operator expression. Like terms are collected; the result is
/// sorted by word.
pub fn parse_operator(src: &str) -> Result<OperatorExpr> {
    let mut cur = Cursor::new(tokenize(src, &['x', 'd'])?);
    if cur.at_end() {
        return Err(AlgebraError::Parse("empty expression".into()));
    }
    let terms = sum(&mut cur)?;
    if !cur.at_end() {
        return Err(AlgebraError::Parse(format!(
            "trailing input at {:?}",
            cur.peek()
        )));
    }
    Ok(OperatorExpr::new(
        terms.into_iter().map(|(w, c)| (c, w)).collect(),
    ))
}

/// Largest index of an `x` or `d` in the expression.
pub fn max_index(expr: &OperatorExpr) -> usize {
    expr.terms
        .iter()
        .flat_map(|(_, w)| w.iter())
        .map(|a| match a {
            Atom::X(i) | Atom::D(i) => *i,
        })
        .max()
        .unwrap_or(0)
}

fn sum(cur: &mut Cursor) -> Result<Terms> {
    let mut acc = Terms::new();
    let mut negate = cur.eat(&Token::Minus);
    if !negate {
        cur.eat(&Token::Plus);
    }
    loop {
        for (w, c) in product(cur)? {
            add_into(&mut acc, w, if negate { -c } else { c })?;
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

fn product(cur: &mut Cursor) -> Result<Terms> {
    let mut acc = power(cur)?;
    while cur.eat(&Token::Star) || cur.starts_factor() {
        acc = compose(&acc, &power(cur)?)?;
    }
    Ok(acc)
}

fn power(cur: &mut Cursor) -> Result<Terms> {
    let base = atom(cur)?;
    if !cur.eat(&Token::Caret) {
        return Ok(base);
    }
    let e = match cur.next() {
        Some(Token::Int(e)) => e
            .to_u32()
            .ok_or_else(|| AlgebraError::Parse(format!("exponent {e} too large")))?,
        other => {
            return Err(AlgebraError::Parse(format!(
                "expected exponent, found {other:?}"
            )))
        }
    };
    let mut acc = Terms::from([(Vec::new(), 1)]);
    for _ in 0..e {
        acc = compose(&acc, &base)?;
    }
    Ok(acc)
}

fn atom(cur: &mut Cursor) -> Result<Terms> {
    match cur.next() {
        Some(Token::Int(n)) => {
            let c = n.to_i64().ok_or_else(overflow)?;
            let mut t = Terms::new();
            add_into(&mut t, Vec::new(), c)?;
            Ok(t)
        }
        Some(Token::Symbol('x', i)) => Ok(Terms::from([(vec![Atom::X(i)], 1)])),
        Some(Token::Symbol(_, i)) => Ok(Terms::from([(vec![Atom::D(i)], 1)])),
        Some(Token::LParen) => {
            let inner = sum(cur)?;
            cur.expect(&Token::RParen)?;
            Ok(inner)
        }
        other => Err(AlgebraError::Parse(format!("unexpected token {other:?}"))),
    }
}
