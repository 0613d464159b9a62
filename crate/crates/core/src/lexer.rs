//! Tokenizer shared by the polynomial and operator-expression parsers.

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Int(BigInt),
    /// A letter followed by a 1-based index, e.g. `x3` or `d1`.
    Symbol(char, usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

pub(crate) fn tokenize(src: &str, letters: &[char]) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let s = digits(&mut i);
                out.push(Token::Int(s.parse().expect("digit string")));
            }
            c if letters.contains(&c.to_ascii_lowercase()) => {
                i += 1;
                if i < chars.len() && chars[i] == '_' {
                    i += 1;
                }
                let s = digits(&mut i);
                let idx: usize = s.parse().map_err(|_| {
                    AlgebraError::Parse(format!("`{c}` must be followed by an index"))
                })?;
                if idx == 0 {
                    return Err(AlgebraError::Parse(format!("indices start at 1 in `{c}0`")));
                }
                out.push(Token::Symbol(c.to_ascii_lowercase(), idx));
            }
            other => {
                return Err(AlgebraError::Parse(format!(
                    "unexpected character `{other}` at position {i}"
                )))
            }
        }
    }
    Ok(out)
}

/// Cursor over a token stream.
pub(crate) struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(tokens: Vec<Token>) -> Self {
        Cursor { tokens, pos: 0 }
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    pub(crate) fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    pub(crate) fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, t: &Token) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(AlgebraError::Parse(format!(
                "expected {t:?}, found {:?}",
                self.peek()
            )))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    /// True when the next token can start a factor (juxtaposition product).
    pub(crate) fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Int(_)) | Some(Token::Symbol(..)) | Some(Token::LParen)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_of_a_polynomial() {
        let t = tokenize("3*x1^2*x_2 - x3", &['x']).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(t[2], Token::Symbol('x', 1));
        assert_eq!(t[6], Token::Symbol('x', 2));
        assert!(tokenize("x0", &['x']).is_err());
        assert!(tokenize("y1", &['x']).is_err());
        assert!(tokenize("d1 x2", &['x', 'd']).is_ok());
    }
}
