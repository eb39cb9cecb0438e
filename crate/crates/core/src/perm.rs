//! Permutations, words and compositions, together with the classical
//! statistics (descents, major index, inversions), shuffle products and
//! descent-class enumeration.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, .., n}` stored as its word `σ(1) σ(2) .. σ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    /// Caller guarantees that `word` is a bijection of `{1..n}`.
    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The decreasing permutation `n .. 2 1`.
    pub fn reverse(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `σ(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// 0-based position of the value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).expect("value in range")
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation(
            other.0.iter().map(|&v| self.0[v - 1]).collect(),
        ))
    }

    /// Positions `i` (1-based) with `σ(i) > σ(i+1)`, increasing.
    pub fn descent_set(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(self.len(), &self.descent_set())
            .expect("descent set of a permutation is a valid subset")
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn inv(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// The word with every letter increased by `k`.
    pub fn shifted(&self, k: usize) -> Word {
        Word(self.0.iter().map(|&v| v + k).collect())
    }

    /// The element of `1 ⩂ self` whose letter `1` follows exactly `i` letters.
    pub fn insert_one_at(&self, i: usize) -> Result<Permutation> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len(),
            });
        }
        let mut w: Vec<usize> = self.0.iter().map(|&v| v + 1).collect();
        w.insert(i, 1);
        Ok(Permutation(w))
    }

    /// Removes the letter `1`, returning the standardized remainder and the
    /// number of letters that preceded `1`. Inverse of [`insert_one_at`].
    ///
    /// [`insert_one_at`]: Permutation::insert_one_at
    pub fn remove_one(&self) -> (Permutation, usize) {
        let pos = self.position_of(1);
        let rest = self.0.iter().filter(|&&v| v != 1).map(|&v| v - 1).collect();
        (Permutation(rest), pos)
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(Permutation)
    }

    /// Whether some subsequence is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k > self.len() {
            return false;
        }
        (0..self.len()).combinations(k).any(|idx| {
            let sub: Vec<usize> = idx.iter().map(|&i| self.0[i]).collect();
            standardize(&sub) == *pattern
        })
    }
}

/// Maps the j-th smallest letter of a word of distinct letters to `j`.
pub fn standardize(word: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| (word[i], i));
    let mut out = vec![0; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation(out)
}

pub(crate) fn fmt_letters(
    letters: &[usize],
    compact: bool,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if compact {
        for v in letters {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        write!(f, "{}", letters.iter().join(","))
    }
}

/// Splits on commas or whitespace; a separator-free string is read one digit per letter.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter `{t}` in `{s}`")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad letter `{c}` in `{s}`")))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, self.len() <= 9, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        let compact = !s.contains(|c: char| c == ',' || c.is_whitespace());
        if compact && letters.len() > 9 {
            return Err(Error::Parse(format!(
                "compact form `{s}` is only accepted for n <= 9; separate letters with commas"
            )));
        }
        Permutation::new(letters)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A general word over the non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of occurrences of each letter `0..alphabet_size`.
    pub fn evaluation(&self, alphabet_size: usize) -> Result<Vec<usize>> {
        let mut counts = vec![0; alphabet_size];
        for &letter in &self.0 {
            *counts.get_mut(letter).ok_or(Error::LetterOutOfRange {
                letter,
                alphabet_size,
            })? += 1;
        }
        Ok(counts)
    }

    pub fn shifted(&self, k: usize) -> Word {
        Word(self.0.iter().map(|&v| v + k).collect())
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Word(p.0.clone())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, self.0.iter().all(|&v| v <= 9), f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s).map(Word)
    }
}

/// All interleavings of `u` and `v`, with multiplicity, sorted lexicographically.
pub fn shuffle(u: &Word, v: &Word) -> Vec<Word> {
    let (m, n) = (u.len(), v.len());
    let mut out = Vec::new();
    // choose the positions taken by u
    for slots in (0..m + n).combinations(m) {
        let mut w = Vec::with_capacity(m + n);
        let (mut a, mut b) = (u.0.iter(), v.0.iter());
        let mut slots = slots.into_iter().peekable();
        for pos in 0..m + n {
            if slots.peek() == Some(&pos) {
                slots.next();
                w.push(*a.next().unwrap());
            } else {
                w.push(*b.next().unwrap());
            }
        }
        out.push(Word(w));
    }
    out.sort();
    out
}

/// `a ⧢ b[k]` where `k = |a|`; every term is a permutation of size `|a| + |b|`.
pub fn shifted_shuffle(a: &Permutation, b: &Permutation) -> Vec<Permutation> {
    shuffle(&Word::from(a), &b.shifted(a.len()))
        .into_iter()
        .map(|w| Permutation::from_vec_unchecked(w.0))
        .collect()
}

/// `id_{i_1} ⩂ id_{i_2} ⩂ .. ⩂ id_{i_r}`, sorted.
pub fn shifted_shuffle_of_identities(parts: &[usize]) -> Vec<Permutation> {
    let mut acc = vec![Permutation::identity(0)];
    for &part in parts {
        let block = Permutation::identity(part);
        acc = acc
            .iter()
            .flat_map(|a| shifted_shuffle(a, &block))
            .collect();
    }
    acc.sort();
    acc
}

/// A composition of `n`: a sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    /// The composition of `n` whose proper partial sums are `descents`.
    pub fn from_descent_set(n: usize, descents: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut last = 0;
        for &d in descents {
            if d <= last || d >= n {
                return Err(Error::InvalidComposition(format!(
                    "descent set {descents:?} is not an increasing subset of 1..{n}"
                )));
            }
            parts.push(d - last);
            last = d;
        }
        if n > 0 {
            parts.push(n - last);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The integer being composed.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `l(I)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Proper partial sums; the total `n` is not included.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// All `J` with `Des(J) ⊆ Des(self)`, i.e. `J` coarser than `self`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let des = self.descent_set();
        let n = self.size();
        des.iter()
            .copied()
            .powerset()
            .map(|subset| Composition::from_descent_set(n, &subset).unwrap())
            .collect()
    }

    pub fn is_coarser_than(&self, other: &Composition) -> bool {
        let theirs = other.descent_set();
        self.size() == other.size() && self.descent_set().iter().all(|d| theirs.contains(d))
    }

    /// The composition whose descent set is the complement in `{1..n-1}`.
    pub fn complement(&self) -> Composition {
        let n = self.size();
        let des = self.descent_set();
        let comp: Vec<usize> = (1..n).filter(|d| !des.contains(d)).collect();
        Composition::from_descent_set(n, &comp).unwrap()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `(2,1,1,2)`, `2,1,1,2`, `2 1 1 2` and the compact `2112`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        Composition::new(parse_letters(inner)?)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All `2^(n-1)` compositions of `n`, largest first part first, then
/// recursively in the same order (`(3), (2,1), (1,2), (1,1,1)`).
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n).rev() {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// `D_I`: the permutations of descent composition `I`, by filtering `S_n`.
pub fn descent_class(comp: &Composition) -> Vec<Permutation> {
    let des = comp.descent_set();
    Permutation::all(comp.size())
        .filter(|p| p.descent_set() == des)
        .collect()
}

/// `D_{<=I}`: permutations whose descent set is contained in `Des(I)`, by filtering `S_n`.
pub fn coarser_class(comp: &Composition) -> Vec<Permutation> {
    let des = comp.descent_set();
    Permutation::all(comp.size())
        .filter(|p| p.descent_set().iter().all(|d| des.contains(d)))
        .collect()
}

/// `D_{<=I}` as the inverses of `id_{i_1} ⩂ .. ⩂ id_{i_r}`, sorted.
pub fn coarser_class_by_shuffle(comp: &Composition) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = shifted_shuffle_of_identities(comp.parts())
        .iter()
        .map(Permutation::inverse)
        .collect();
    out.sort();
    out
}
