//! Sparse polynomials with integer coefficients in commuting
//! indeterminates indexed by `0, 1, 2, ..`.
//!
//! A monomial is kept as the nondecreasing word of its variable indices,
//! so `x_0^2 x_1 x_2` is `[0, 0, 1, 2]`. This is both the sorted-code
//! view used for the flagged functions and, with `V_k` in place of `x_k`,
//! the monomials of the tree expansions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use serde::Serialize;

/// Nondecreasing word of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut v: Vec<u8> = indices
            .into_iter()
            .map(|i| u8::try_from(i).expect("variable index fits in u8"))
            .collect();
        v.sort_unstable();
        Monomial(v)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `(index, exponent)` pairs, increasing index.
    pub fn exponents(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .dedup_with_count()
            .map(|(count, &i)| (i as usize, count))
            .collect()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend(self.0.iter().merge(other.0.iter()));
        Monomial(v)
    }

    /// `[0012]`, or `[0,1,10]` once an index exceeds 9.
    pub fn bracket(&self) -> String {
        format!("[{}]", self.word())
    }

    /// The index word without brackets.
    pub fn word(&self) -> String {
        if self.0.iter().all(|&i| i <= 9) {
            self.0.iter().join("")
        } else {
            self.0.iter().join(",")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(Monomial::one(), 1)
    }

    pub fn monomial(m: Monomial, coeff: i64) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · m`, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(coeff).expect("coefficient overflow");
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients, i.e. the value at `x_i = 1`.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: i64) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    /// Applies `f` to every monomial and collects like terms.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(f(m), c);
        }
        out
    }

    /// Univariate image under `x_j -> q^{weight(j)}`, as a dense coefficient list.
    pub fn specialize(&self, weight: impl Fn(usize) -> usize) -> Vec<i64> {
        let mut out: Vec<i64> = Vec::new();
        for (m, c) in self.terms() {
            let d: usize = m.indices().map(&weight).sum();
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            out[d] += c;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Terms in the bracket notation: `[001] + 2 [011]`; `0` for the zero polynomial.
    pub fn format_bracket(&self) -> String {
        self.format_terms(self.terms(), |m| m.bracket(), " ")
    }

    /// `V3*V0^3 + 4*V2*V1*V0^2`: factors by decreasing index, terms by
    /// decreasing index word.
    pub fn format_v(&self) -> String {
        let mut terms: Vec<(&Monomial, i64)> = self.terms().collect();
        terms.sort_by(|a, b| b.0 .0.iter().rev().cmp(a.0 .0.iter().rev()));
        self.format_terms(terms.into_iter(), format_v_monomial, "*")
    }

    fn format_terms<'a>(
        &self,
        terms: impl Iterator<Item = (&'a Monomial, i64)>,
        render: impl Fn(&Monomial) -> String,
        coeff_sep: &str,
    ) -> String {
        let mut out = String::new();
        for (idx, (m, c)) in terms.enumerate() {
            let body = render(m);
            let magnitude = c.unsigned_abs();
            let signed = if idx == 0 {
                if c < 0 {
                    "-"
                } else {
                    ""
                }
            } else if c < 0 {
                " - "
            } else {
                " + "
            };
            out.push_str(signed);
            if magnitude != 1 || body.is_empty() {
                out.push_str(&magnitude.to_string());
                if !body.is_empty() {
                    out.push_str(coeff_sep);
                }
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `[{"monomial": "00112", "coeff": 2}, ..]` entries.
    pub fn json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .map(|(m, c)| JsonTerm {
                monomial: m.word(),
                coeff: c,
            })
            .collect()
    }
}

fn format_v_monomial(m: &Monomial) -> String {
    m.exponents()
        .into_iter()
        .rev()
        .map(|(i, e)| {
            if e == 1 {
                format!("V{i}")
            } else {
                format!("V{i}^{e}")
            }
        })
        .join("*")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonTerm {
    pub monomial: String,
    pub coeff: i64,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_bracket())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(
                    a.times(b),
                    ca.checked_mul(cb).expect("coefficient overflow"),
                );
            }
        }
        out
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

impl FromIterator<Monomial> for Polynomial {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut out = Polynomial::zero();
        for m in iter {
            out.add_term(m, 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(idx: &[usize]) -> Monomial {
        Monomial::from_indices(idx.iter().copied())
    }

    #[test]
    fn arithmetic() {
        let x0 = Polynomial::monomial(m(&[0]), 1);
        let x1 = Polynomial::monomial(m(&[1]), 1);
        let s = &x0 + &x1;
        let sq = &s * &s;
        assert_eq!(sq.format_bracket(), "[00] + 2 [01] + [11]");
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.mass(), 4);
        assert_eq!((&x0 - &x1).format_bracket(), "[0] - [1]");
        assert_eq!((-&x0).format_bracket(), "-[0]");
    }

    #[test]
    fn bracket_edge_cases() {
        assert_eq!(Polynomial::one().format_bracket(), "[]");
        assert_eq!(Polynomial::zero().format_bracket(), "0");
        assert_eq!(
            Polynomial::monomial(Monomial::one(), 3).format_bracket(),
            "3 []"
        );
        assert_eq!(m(&[10, 0, 1]).bracket(), "[0,1,10]");
    }

    #[test]
    fn v_formatting() {
        let p: Polynomial = [m(&[3, 0, 0, 0]), m(&[1, 1, 1, 0])].into_iter().collect();
        let p = &p + &Polynomial::monomial(m(&[2, 1, 0, 0]), 4);
        assert_eq!(p.format_v(), "V3*V0^3 + 4*V2*V1*V0^2 + V1^3*V0");
    }

    #[test]
    fn specialization() {
        let p: Polynomial = [m(&[0, 1]), m(&[1, 1]), m(&[0, 0])].into_iter().collect();
        assert_eq!(p.specialize(|j| j), vec![1, 1, 1]);
    }
}
