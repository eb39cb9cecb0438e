//! Codes: bijections from `S_n` onto sub-diagonal sequences.
//!
//! Four codes are implemented directly (Lehmer, inverse, major and
//! saillance codes). The inverse, major and saillance codes are also
//! *shuffle-compatible*: inserting the letter `1` after `i` letters of
//! `β` prepends `τ(β)(i)` to the code of `β`, for a permutation
//! `τ(β)` of `{0..n}`. [`CodeFamily`] packages an encoder with its `τ`
//! so that any such code can be encoded and decoded by the same
//! recursion ([`generic_encode`], [`generic_decode`]).
//!
//! The major code has no word-level (noncommutative) analogue of the
//! saillance-code step formula: in `123 ⩂ 1` the permutation `1423` has
//! major code `1010`, whose length-3 prefix `101` cannot be nondecreasing
//! for any fixed order on `{0, 1}`. See `step_alphabet` in the
//! verification module, which reports exactly that witness.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{fmt_letters, parse_letters, Permutation};

/// A sequence `c_1..c_n` with `0 <= c_i <= n - i`; the trailing zero is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubDiagonalCode(Vec<usize>);

impl SubDiagonalCode {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        for (j, &value) in entries.iter().enumerate() {
            if value > n - 1 - j {
                return Err(Error::NotSubDiagonal {
                    position: j + 1,
                    value,
                    bound: n - 1 - j,
                });
            }
        }
        Ok(SubDiagonalCode(entries))
    }

    pub fn zeros(n: usize) -> Self {
        SubDiagonalCode(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Nondecreasing rearrangement of the entries.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// Every sub-diagonal sequence of length `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = SubDiagonalCode> {
        let mut next = Some(vec![0; n]);
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            // odometer, last free digit fastest
            let mut j = n;
            while j > 0 {
                j -= 1;
                if succ[j] < n - 1 - j {
                    succ[j] += 1;
                    for x in &mut succ[j + 1..] {
                        *x = 0;
                    }
                    next = Some(succ);
                    break;
                }
            }
            Some(SubDiagonalCode(current))
        })
    }
}

impl fmt::Display for SubDiagonalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, self.len() <= 10, f)
    }
}

impl FromStr for SubDiagonalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubDiagonalCode::new(parse_letters(s)?)
    }
}

impl Serialize for SubDiagonalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A permutation of `{0..n}`, indexed `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TauPermutation(Vec<usize>);

impl TauPermutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let mut sorted = values.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidPermutation(format!(
                "{values:?} is not a bijection of 0..n"
            )));
        }
        Ok(TauPermutation(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    /// The index `i` with `τ(i) = value`.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.0.iter().position(|&v| v == value)
    }

    pub fn prefix_set(&self, k: usize) -> BTreeSet<usize> {
        self.0[..=k].iter().copied().collect()
    }
}

impl fmt::Display for TauPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, self.0.len() <= 10, f)
    }
}

impl Serialize for TauPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `c_i = #{ j > i : σ_j < σ_i }`.
pub fn lehmer_code(p: &Permutation) -> SubDiagonalCode {
    let w = p.as_slice();
    SubDiagonalCode(
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect(),
    )
}

pub fn lehmer_decode(code: &SubDiagonalCode) -> Permutation {
    let mut available: Vec<usize> = (1..=code.len()).collect();
    let word = code.0.iter().map(|&c| available.remove(c)).collect();
    Permutation::from_vec_unchecked(word)
}

/// `a_i` = number of values greater than `i` to the left of `i`.
pub fn inv_code(p: &Permutation) -> SubDiagonalCode {
    let w = p.as_slice();
    let pos = p.inverse();
    SubDiagonalCode(
        (1..=w.len())
            .map(|i| w[..pos.at(i) - 1].iter().filter(|&&x| x > i).count())
            .collect(),
    )
}

pub fn inv_decode(code: &SubDiagonalCode) -> Permutation {
    lehmer_decode(code).inverse()
}

fn word_maj(word: &[usize]) -> usize {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .sum()
}

/// `c_i = maj(σ^(i)) - maj(σ^(i+1))` where `σ^(i)` erases the letters smaller than `i`.
pub fn maj_code(p: &Permutation) -> SubDiagonalCode {
    let n = p.len();
    let majs: Vec<usize> = (1..=n + 1)
        .map(|i| {
            let sub: Vec<usize> = p.as_slice().iter().copied().filter(|&x| x >= i).collect();
            word_maj(&sub)
        })
        .collect();
    SubDiagonalCode((0..n).map(|i| majs[i] - majs[i + 1]).collect())
}

pub fn maj_decode(code: &SubDiagonalCode) -> Permutation {
    generic_decode(&CodeFamily::MAJCODE, code)
}

/// `a_i` = number of letters `>= r`, where `r` is the rightmost letter to
/// the left of `i` that exceeds `i` (`a_i = 0` if there is none).
pub fn s_code(p: &Permutation) -> SubDiagonalCode {
    let w = p.as_slice();
    let n = w.len();
    let pos = p.inverse();
    SubDiagonalCode(
        (1..=n)
            .map(|i| {
                w[..pos.at(i) - 1]
                    .iter()
                    .rev()
                    .find(|&&x| x > i)
                    .map_or(0, |&r| n + 1 - r)
            })
            .collect(),
    )
}

/// Start from `n`, then insert `n-1, .., 1`, letter `i` immediately after
/// the letter `n + 1 - a_i` (or first when `a_i = 0`).
pub fn s_decode(code: &SubDiagonalCode) -> Permutation {
    let n = code.len();
    if n == 0 {
        return Permutation::identity(0);
    }
    let mut word = vec![n];
    for i in (1..n).rev() {
        let a = code.0[i - 1];
        if a == 0 {
            word.insert(0, i);
        } else {
            let anchor = n + 1 - a;
            let at = word
                .iter()
                .position(|&x| x == anchor)
                .expect("anchor already placed");
            word.insert(at + 1, i);
        }
    }
    Permutation::from_vec_unchecked(word)
}

/// `τ_S(β)(0) = 0` and `τ_S(β)(i) = n + 1 - β(i)`.
pub fn tau_s(beta: &Permutation) -> TauPermutation {
    let n = beta.len();
    TauPermutation(
        std::iter::once(0)
            .chain(beta.as_slice().iter().map(|&b| n + 1 - b))
            .collect(),
    )
}

/// The identity of `{0..n}`, whatever `β`.
pub fn tau_i(beta: &Permutation) -> TauPermutation {
    TauPermutation((0..=beta.len()).collect())
}

/// Positions `0..=n` of `β`; `0` and `n` count as rises. The j-th descent
/// maps to `des - j`, the j-th rise to `des + j - 1`.
pub fn tau_m(beta: &Permutation) -> TauPermutation {
    let n = beta.len();
    let w = beta.as_slice();
    let des = beta.des();
    let (mut descents, mut rises) = (0, 0);
    TauPermutation(
        (0..=n)
            .map(|i| {
                if i >= 1 && i < n && w[i - 1] > w[i] {
                    descents += 1;
                    des - descents
                } else {
                    rises += 1;
                    des + rises - 1
                }
            })
            .collect(),
    )
}

/// A shuffle-compatible code: an encoder and its insertion permutation `τ`.
#[derive(Debug, Clone, Copy)]
pub struct CodeFamily {
    pub name: &'static str,
    pub encode: fn(&Permutation) -> SubDiagonalCode,
    pub tau: fn(&Permutation) -> TauPermutation,
}

impl PartialEq for CodeFamily {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for CodeFamily {}

impl CodeFamily {
    pub const INVCODE: CodeFamily = CodeFamily {
        name: "invcode",
        encode: inv_code,
        tau: tau_i,
    };
    pub const SCODE: CodeFamily = CodeFamily {
        name: "scode",
        encode: s_code,
        tau: tau_s,
    };
    pub const MAJCODE: CodeFamily = CodeFamily {
        name: "majcode",
        encode: maj_code,
        tau: tau_m,
    };

    pub const BUILTIN: [CodeFamily; 3] = [Self::INVCODE, Self::SCODE, Self::MAJCODE];

    /// Accepts `ic`/`invcode`, `sc`/`scode`, `mc`/`majcode`.
    pub fn by_name(name: &str) -> Result<CodeFamily> {
        match name.trim().to_ascii_lowercase().as_str() {
            "ic" | "invcode" | "inv" => Ok(Self::INVCODE),
            "sc" | "scode" => Ok(Self::SCODE),
            "mc" | "majcode" | "maj" => Ok(Self::MAJCODE),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn encode(&self, p: &Permutation) -> SubDiagonalCode {
        (self.encode)(p)
    }

    pub fn tau(&self, p: &Permutation) -> TauPermutation {
        (self.tau)(p)
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

/// Encodes by repeatedly removing the letter `1`: the code of `1 ⩂_i β`
/// is `(τ(β)(i), code(β))`.
pub fn generic_encode(family: &CodeFamily, p: &Permutation) -> SubDiagonalCode {
    let mut out = Vec::with_capacity(p.len());
    let mut current = p.clone();
    while !current.is_empty() {
        let (beta, i) = current.remove_one();
        out.push(family.tau(&beta).get(i));
        current = beta;
    }
    SubDiagonalCode(out)
}

/// Inverts [`generic_encode`] from the last entry backwards.
pub fn generic_decode(family: &CodeFamily, code: &SubDiagonalCode) -> Permutation {
    let mut beta = Permutation::identity(0);
    for &c in code.0.iter().rev() {
        let slot = family
            .tau(&beta)
            .position_of(c)
            .expect("sub-diagonal entry lies in 0..=|β|");
        beta = beta.insert_one_at(slot).expect("slot within 0..=|β|");
    }
    beta
}

/// A failure of shuffle-compatibility or of prefix stability for `β' = 1 ⩂_k β`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauWitness {
    pub beta: Permutation,
    pub k: usize,
    pub beta_prime: Permutation,
    pub tau_beta: TauPermutation,
    pub tau_beta_prime: TauPermutation,
}

impl fmt::Display for TauWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "beta={} k={} beta'={} tau(beta)={} tau(beta')={}",
            self.beta, self.k, self.beta_prime, self.tau_beta, self.tau_beta_prime
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Acceptability {
    pub family: &'static str,
    pub n: usize,
    /// Shuffle-compatible and prefix sets of `τ` stable under insertion.
    pub acceptable: bool,
    /// The stronger entrywise stability `τ(β')(i) = τ(β)(i)` for `i <= k`.
    pub entrywise_stable: bool,
    /// First `(β, i)` whose code is not `(τ(β)(i), code(β))`.
    pub incompatible: Option<TauWitness>,
    pub set_witness: Option<TauWitness>,
    pub entrywise_witness: Option<TauWitness>,
}

/// Checks, for every `β ∈ S_m` with `m < n` and every `k`, that the code
/// is shuffle-compatible with `τ` and that
/// `{τ(β')(i) : i <= k} = {τ(β)(i) : i <= k}` where `β' = 1 ⩂_k β`.
pub fn is_acceptable(family: &CodeFamily, n: usize) -> Acceptability {
    let mut incompatible = None;
    let mut set_witness = None;
    let mut entrywise_witness = None;
    for m in 0..n {
        for beta in Permutation::all(m) {
            let tau_beta = family.tau(&beta);
            let code_beta = family.encode(&beta);
            for k in 0..=m {
                let beta_prime = beta.insert_one_at(k).unwrap();
                let tau_prime = family.tau(&beta_prime);
                let witness = || TauWitness {
                    beta: beta.clone(),
                    k,
                    beta_prime: beta_prime.clone(),
                    tau_beta: tau_beta.clone(),
                    tau_beta_prime: tau_prime.clone(),
                };
                if incompatible.is_none() {
                    let code = family.encode(&beta_prime);
                    if code.0[0] != tau_beta.get(k) || code.0[1..] != code_beta.0[..] {
                        incompatible = Some(witness());
                    }
                }
                if set_witness.is_none() && tau_prime.prefix_set(k) != tau_beta.prefix_set(k) {
                    set_witness = Some(witness());
                }
                if entrywise_witness.is_none() && tau_prime.0[..=k] != tau_beta.0[..=k] {
                    entrywise_witness = Some(witness());
                }
            }
        }
    }
    Acceptability {
        family: family.name,
        n,
        acceptable: incompatible.is_none() && set_witness.is_none(),
        entrywise_stable: entrywise_witness.is_none(),
        incompatible,
        set_witness,
        entrywise_witness,
    }
}
