//! Flagged complete homogeneous functions and flagged ribbon Schur
//! functions in the alphabets `X_m = {x_0, .., x_m}`.
//!
//! For a composition `I = (i_1, .., i_r)` of `n` the flag of alphabets is
//! `(X_{n-i_1}, X_{n-i_1-i_2}, .., X_0)` and
//! `h^I = h_{i_1}(X_{n-i_1}) h_{i_2}(X_{n-i_1-i_2}) .. h_{i_r}(X_0)`.
//! The ribbon `r_I` is obtained either by inclusion-exclusion over the
//! coarser compositions or as a determinant of flagged `h`'s.

use itertools::Itertools;

use crate::perm::Composition;
use crate::poly::{Monomial, Polynomial};

/// Alphabet sizes attached to a composition: the largest index of each
/// alphabet, `(n - i_1, n - i_1 - i_2, .., 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetFlag {
    pub composition: Composition,
    pub bounds: Vec<usize>,
}

impl AlphabetFlag {
    pub fn new(composition: &Composition) -> Self {
        let mut remaining = composition.size();
        let bounds = composition
            .parts()
            .iter()
            .map(|&p| {
                remaining -= p;
                remaining
            })
            .collect();
        AlphabetFlag {
            composition: composition.clone(),
            bounds,
        }
    }
}

/// `h_k(X_m)`: the sum of `x_{j_1} .. x_{j_k}` over `0 <= j_1 <= .. <= j_k <= m`.
pub fn h_flagged(k: usize, m: usize) -> Polynomial {
    (0..=m)
        .combinations_with_replacement(k)
        .map(Monomial::from_indices)
        .collect()
}

/// `h^I(X_I)`.
pub fn h_product(comp: &Composition) -> Polynomial {
    let flag = AlphabetFlag::new(comp);
    comp.parts()
        .iter()
        .zip(&flag.bounds)
        .fold(Polynomial::one(), |acc, (&k, &m)| &acc * &h_flagged(k, m))
}

/// `r_I(X_I) = Σ_{J <= I} (-1)^{l(I) - l(J)} h^J(X_J)`, each `J` with its own flag.
pub fn ribbon_flagged(comp: &Composition) -> Polynomial {
    let mut out = Polynomial::zero();
    for coarser in comp.coarsenings() {
        let term = h_product(&coarser);
        if (comp.length() - coarser.length()).is_multiple_of(2) {
            out = &out + &term;
        } else {
            out = &out - &term;
        }
    }
    out
}

/// `r_I(X_I)` as the determinant whose entry `(a, b)` is
/// `h_{i_a + .. + i_b}(X_{n - (i_1 + .. + i_b)})` for `a <= b`, `1` on the
/// subdiagonal and `0` below it. Expanded over permutations with sign.
pub fn ribbon_determinant(comp: &Composition) -> Polynomial {
    let parts = comp.parts();
    let r = parts.len();
    if r == 0 {
        return Polynomial::one();
    }
    let n = comp.size();
    let prefix: Vec<usize> = std::iter::once(0)
        .chain(parts.iter().scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        }))
        .collect();
    // upper[a][b] for a <= b
    let upper: Vec<Vec<Polynomial>> = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| {
                    if a <= b {
                        h_flagged(prefix[b + 1] - prefix[a], n - prefix[b + 1])
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        })
        .collect();

    // Leibniz expansion restricted to σ(a) >= a - 1, the only non-zero terms.
    fn expand(
        row: usize,
        used: &mut [bool],
        sign: i64,
        acc: Polynomial,
        upper: &[Vec<Polynomial>],
        perm: &mut Vec<usize>,
        out: &mut Polynomial,
    ) {
        let r = used.len();
        if row == r {
            *out = &*out + &acc.scale(sign);
            return;
        }
        for col in row.saturating_sub(1)..r {
            if used[col] {
                continue;
            }
            let entry = if col + 1 == row {
                Polynomial::one()
            } else {
                upper[row][col].clone()
            };
            if entry.is_zero() {
                continue;
            }
            // inversions added by placing `col` after the already chosen columns
            let new_inversions = perm.iter().filter(|&&c| c > col).count();
            let s = if new_inversions % 2 == 0 { sign } else { -sign };
            used[col] = true;
            perm.push(col);
            expand(row + 1, used, s, &acc * &entry, upper, perm, out);
            perm.pop();
            used[col] = false;
        }
    }

    let mut out = Polynomial::zero();
    expand(
        0,
        &mut vec![false; r],
        1,
        Polynomial::one(),
        &upper,
        &mut Vec::with_capacity(r),
        &mut out,
    );
    out
}

/// The monomial `x_c = x_{c_1} .. x_{c_n}` of a code.
pub fn monomial_of(entries: &[usize]) -> Monomial {
    Monomial::from_indices(entries.iter().copied())
}
