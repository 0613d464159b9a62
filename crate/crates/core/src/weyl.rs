//! Weyl groups of types A, B and D as groups of signed permutations.
//!
//! An element is stored in window notation `(w(1), ..., w(n))`. The group acts
//! on `±e_1, ..., ±e_n` by `w(e_i) = sign(w(i)) e_|w(i)|`, composition is
//! `(u∘v)(i) = u(v(i))` with `u(-k) = -u(k)`, and a word `(i1, ..., il)`
//! denotes `s_i1 ∘ ... ∘ s_il`.
//!
//! Generators, indexed from 1:
//!
//! * `s_i` (`i < n`) swaps the entries `i` and `i + 1`,
//! * type B, index `n`: negates entry `n`,
//! * type D, index `n`: window `(1, ..., n-2, -n, -(n-1))`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylType {
    A,
    B,
    D,
}

impl WeylType {
    pub fn letter(self) -> char {
        match self {
            WeylType::A => 'A',
            WeylType::B => 'B',
            WeylType::D => 'D',
        }
    }

    pub fn check_rank(self, n: usize) -> Result<()> {
        let min = if self == WeylType::D { 2 } else { 1 };
        if n < min {
            return Err(AlgebraError::InvalidRank {
                ty: self.letter(),
                rank: n,
            });
        }
        Ok(())
    }

    /// Number of simple reflections for `n` variables.
    pub fn num_generators(self, n: usize) -> usize {
        match self {
            WeylType::A => n.saturating_sub(1),
            WeylType::B | WeylType::D => n,
        }
    }

    /// Order of the group.
    pub fn order(self, n: usize) -> usize {
        let fact: usize = (1..=n).product();
        match self {
            WeylType::A => fact,
            WeylType::B => fact << n,
            WeylType::D => fact << (n - 1),
        }
    }

    /// Length of the longest element.
    pub fn longest_length(self, n: usize) -> usize {
        match self {
            WeylType::A => n * (n.saturating_sub(1)) / 2,
            WeylType::B => n * n,
            WeylType::D => n * (n - 1),
        }
    }

    /// Positive roots as coefficient vectors in `e_1, ..., e_n`.
    pub fn positive_roots(self, n: usize) -> Vec<Vec<i64>> {
        let mut roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut r = vec![0; n];
                r[i] = 1;
                r[j] = -1;
                roots.push(r.clone());
                if self != WeylType::A {
                    r[j] = 1;
                    roots.push(r);
                }
            }
            if self == WeylType::B {
                let mut r = vec![0; n];
                r[i] = 1;
                roots.push(r);
            }
        }
        roots
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for WeylType {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(WeylType::A),
            "b" => Ok(WeylType::B),
            "d" => Ok(WeylType::D),
            other => Err(AlgebraError::Parse(format!("unknown Weyl type `{other}`"))),
        }
    }
}

/// Root is positive iff its first nonzero coefficient is positive.
fn is_positive_root(r: &[i64]) -> bool {
    r.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    ty: WeylType,
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(ty: WeylType, n: usize) -> Self {
        SignedPermutation {
            ty,
            window: (1..=n as i32).collect(),
        }
    }

    pub fn from_window(ty: WeylType, window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        ty.check_rank(n)?;
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(AlgebraError::NotInGroup(format!(
                    "{window:?} is not a signed permutation"
                )));
            }
            seen[a - 1] = true;
        }
        let negatives = window.iter().filter(|&&v| v < 0).count();
        let ok = match ty {
            WeylType::A => negatives == 0,
            WeylType::B => true,
            WeylType::D => negatives % 2 == 0,
        };
        if !ok {
            return Err(AlgebraError::NotInGroup(format!(
                "{window:?} is not in type {ty}"
            )));
        }
        Ok(SignedPermutation { ty, window })
    }

    pub fn generator(ty: WeylType, n: usize, i: usize) -> Result<Self> {
        ty.check_rank(n)?;
        if i == 0 || i > ty.num_generators(n) {
            return Err(AlgebraError::IndexOutOfRange {
                index: i,
                context: format!("generators of {ty}{n}"),
            });
        }
        let mut w = Self::identity(ty, n);
        if i < n {
            w.window.swap(i - 1, i);
        } else if ty == WeylType::B {
            w.window[n - 1] = -(n as i32);
        } else {
            w.window[n - 2] = -(n as i32);
            w.window[n - 1] = -(n as i32 - 1);
        }
        Ok(w)
    }

    /// Evaluates a word `s_i1 ∘ ... ∘ s_il`.
    pub fn from_word(ty: WeylType, n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(ty, n);
        ty.check_rank(n)?;
        for &i in word {
            w = w.compose(&Self::generator(ty, n, i)?)?;
        }
        Ok(w)
    }

    pub fn weyl_type(&self) -> WeylType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// `w(k)` for a signed index `k`.
    pub fn apply(&self, k: i32) -> i32 {
        let v = self.window[k.unsigned_abs() as usize - 1];
        if k < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ty != other.ty || self.rank() != other.rank() {
            return Err(AlgebraError::TypeMismatch(format!(
                "cannot compose {}{} with {}{}",
                self.ty,
                self.rank(),
                other.ty,
                other.rank()
            )));
        }
        Ok(SignedPermutation {
            ty: self.ty,
            window: other.window.iter().map(|&k| self.apply(k)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            let target = v.unsigned_abs() as usize - 1;
            window[target] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPermutation {
            ty: self.ty,
            window,
        }
    }

    fn act_on_root(&self, r: &[i64]) -> Vec<i64> {
        let mut out = vec![0; r.len()];
        for (i, &c) in r.iter().enumerate() {
            if c != 0 {
                let v = self.window[i];
                let t = v.unsigned_abs() as usize - 1;
                out[t] += if v < 0 { -c } else { c };
            }
        }
        out
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.ty
            .positive_roots(self.rank())
            .iter()
            .filter(|r| !is_positive_root(&self.act_on_root(r)))
            .count()
    }

    fn simple_root(&self, i: usize) -> Vec<i64> {
        let n = self.rank();
        let mut r = vec![0; n];
        if i < n {
            r[i - 1] = 1;
            r[i] = -1;
        } else if self.ty == WeylType::B {
            r[n - 1] = 1;
        } else {
            r[n - 2] = 1;
            r[n - 1] = 1;
        }
        r
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        !is_positive_root(&self.act_on_root(&self.simple_root(i)))
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.ty.num_generators(self.rank()))
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    /// Canonical reduced word. The longest element uses its fixed
    /// factorization (see [`longest_word`]); every other element strips its
    /// smallest right descent repeatedly.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        if self.length() == self.ty.longest_length(n) {
            return longest_word(self.ty, n);
        }
        self.descent_word()
    }

    fn descent_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = w.right_descents().first().copied() {
            word.push(i);
            w = w
                .compose(&Self::generator(self.ty, self.rank(), i).expect("valid generator"))
                .expect("same group");
        }
        word.reverse();
        word
    }

    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "e".into()
        } else {
            w.iter()
                .map(|i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Parses `[2,-1,3]` window notation or a word like `s1 s2 s1`
    /// (also `1 2 1`, `e`, or the empty string).
    pub fn parse(ty: WeylType, n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let window = inner
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<i32>()
                        .map_err(|_| AlgebraError::Parse(format!("bad window entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if window.len() != n {
                return Err(AlgebraError::RankMismatch {
                    expected: n,
                    found: window.len(),
                });
            }
            return Self::from_window(ty, window);
        }
        if s.is_empty() || s == "e" || s == "id" {
            ty.check_rank(n)?;
            return Ok(Self::identity(ty, n));
        }
        let word = s
            .split(|c: char| c.is_whitespace() || c == ',' || c == '*')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let digits = t.trim_start_matches(['s', 'S', '_']);
                digits
                    .parse::<usize>()
                    .map_err(|_| AlgebraError::Parse(format!("bad generator `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(ty, n, &word)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Fixed reduced word of the longest element.
///
/// * A: `(s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1)`
/// * B: `s_{1..n..1} s_{2..n..2} ... s_{n-1,n,n-1} s_n`
/// * D: `prod_{k=1}^{n-2} (s_k ... s_{n-2} s_n s_{n-1} s_{n-2} ... s_k) · s_{n-1} s_n`
pub fn longest_word(ty: WeylType, n: usize) -> Vec<usize> {
    let mut w = Vec::new();
    match ty {
        WeylType::A => {
            for top in (1..n).rev() {
                w.extend(1..=top);
            }
        }
        WeylType::B => {
            for k in 1..n {
                w.extend(k..n);
                w.push(n);
                w.extend((k..n).rev());
            }
            w.push(n);
        }
        WeylType::D => {
            for k in 1..n.saturating_sub(1) {
                w.extend(k..=n - 2);
                w.push(n);
                w.push(n - 1);
                w.extend((k..=n - 2).rev());
            }
            w.push(n - 1);
            w.push(n);
        }
    }
    w
}

/// A finite Weyl group with its elements in canonical order:
/// by length, then by canonical reduced word.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    ty: WeylType,
    rank: usize,
    elements: Vec<SignedPermutation>,
    words: Vec<Vec<usize>>,
    index: HashMap<SignedPermutation, usize>,
}

impl WeylGroup {
    pub fn new(ty: WeylType, n: usize) -> Result<Self> {
        ty.check_rank(n)?;
        let gens: Vec<SignedPermutation> = (1..=ty.num_generators(n))
            .map(|i| SignedPermutation::generator(ty, n, i))
            .collect::<Result<_>>()?;
        let e = SignedPermutation::identity(ty, n);
        let mut seen = HashMap::new();
        seen.insert(e.clone(), ());
        let mut queue = VecDeque::from([e]);
        let mut all = Vec::new();
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let v = w.compose(g)?;
                if seen.insert(v.clone(), ()).is_none() {
                    queue.push_back(v);
                }
            }
            all.push(w);
        }
        let mut keyed: Vec<(usize, Vec<usize>, SignedPermutation)> = all
            .into_iter()
            .map(|w| (w.length(), w.reduced_word(), w))
            .collect();
        keyed.sort();
        let mut elements = Vec::with_capacity(keyed.len());
        let mut words = Vec::with_capacity(keyed.len());
        let mut index = HashMap::with_capacity(keyed.len());
        for (k, (_, word, w)) in keyed.into_iter().enumerate() {
            index.insert(w.clone(), k);
            elements.push(w);
            words.push(word);
        }
        Ok(WeylGroup {
            ty,
            rank: n,
            elements,
            words,
            index,
        })
    }

    pub fn weyl_type(&self) -> WeylType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &SignedPermutation {
        &self.elements[k]
    }

    /// Canonical reduced word of the `k`-th element.
    pub fn word(&self, k: usize) -> &[usize] {
        &self.words[k]
    }

    pub fn length_of(&self, k: usize) -> usize {
        self.words[k].len()
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn longest(&self) -> &SignedPermutation {
        self.elements.last().expect("nonempty group")
    }

    pub fn longest_length(&self) -> usize {
        self.ty.longest_length(self.rank)
    }

    pub fn identity(&self) -> &SignedPermutation {
        &self.elements[0]
    }

    /// Element counts by length.
    pub fn length_distribution(&self) -> Vec<usize> {
        let mut d = vec![0; self.longest_length() + 1];
        for w in &self.words {
            d[w.len()] += 1;
        }
        d
    }
}

/// Enumerates a Weyl group in canonical order.
pub fn enumerate(ty: WeylType, n: usize) -> Result<Vec<SignedPermutation>> {
    Ok(WeylGroup::new(ty, n)?.elements)
}
