//! Exhaustive verification of the equidistribution theorems.
//!
//! Every check enumerates permutations up to a configured size and
//! compares two independently computed objects: code distributions over
//! descent classes against flagged ribbons, shuffle classes against
//! flagged `h` products, and so on. Work is split over compositions (or
//! sizes) and results are merged in a fixed order, so reports do not
//! depend on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::codes::{inv_code, is_acceptable, CodeFamily};
use crate::error::{Error, Result};
use crate::flagged::{h_product, monomial_of, ribbon_determinant, ribbon_flagged};
use crate::perm::{
    coarser_class_by_shuffle, compositions_of, descent_class, shifted_shuffle,
    shifted_shuffle_of_identities, Composition, Permutation,
};
use crate::poly::{Monomial, Polynomial};

pub const DEFAULT_BOUND: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` accepted by the sweeps.
    pub bound: usize,
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            bound: DEFAULT_BOUND,
            workers: 1,
        }
    }
}

impl VerifyConfig {
    pub fn with_workers(workers: usize) -> Self {
        VerifyConfig {
            workers: workers.max(1),
            ..Self::default()
        }
    }

    fn ensure(&self, n: usize) -> Result<()> {
        if n > self.bound {
            return Err(Error::BoundExceeded {
                n,
                bound: self.bound,
            });
        }
        Ok(())
    }
}

/// Maps `f` over `items` on up to `workers` scoped threads, keeping input order.
fn par_map<T: Sync, R: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    if workers <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Theorem,
    Coarse,
    NcInv,
    ScStep,
    Em,
    Fs,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Theorem,
        Check::Coarse,
        Check::NcInv,
        Check::ScStep,
        Check::Em,
        Check::Fs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Coarse => "coarse",
            Check::NcInv => "ncinv",
            Check::ScStep => "scstep",
            Check::Em => "em",
            Check::Fs => "fs",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if token == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(token.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The generating polynomial of sorted codes `f(σ^{-1})` over `σ ∈ D_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDistribution {
    pub composition: Composition,
    pub family: &'static str,
    pub size: usize,
    pub polynomial: Polynomial,
}

impl ClassDistribution {
    /// Sorted code of `f(σ^{-1})` for each member, in member order.
    pub fn sorted_codes(members: &[Permutation], family: &CodeFamily) -> Vec<Vec<usize>> {
        members
            .iter()
            .map(|s| family.encode(&s.inverse()).sorted())
            .collect()
    }

    fn from_members(comp: &Composition, family: &CodeFamily, members: &[Permutation]) -> Self {
        let polynomial = Self::sorted_codes(members, family)
            .iter()
            .map(|c| monomial_of(c))
            .collect();
        ClassDistribution {
            composition: comp.clone(),
            family: family.name,
            size: members.len(),
            polynomial,
        }
    }
}

pub fn class_distribution(
    comp: &Composition,
    family: &CodeFamily,
    config: &VerifyConfig,
) -> Result<ClassDistribution> {
    config.ensure(comp.size())?;
    Ok(ClassDistribution::from_members(
        comp,
        family,
        &descent_class(comp),
    ))
}

/// One verified statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub check: &'static str,
    pub subject: String,
    pub family: Option<&'static str>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckItem {
    fn new(
        check: Check,
        subject: impl Into<String>,
        family: Option<&'static str>,
        witness: Option<String>,
    ) -> Self {
        CheckItem {
            check: check.name(),
            subject: subject.into(),
            family,
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub families: Vec<&'static str>,
    pub checks: Vec<&'static str>,
    pub passed: bool,
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    fn new(n: usize, families: &[CodeFamily], checks: &[Check], items: Vec<CheckItem>) -> Self {
        VerificationReport {
            n,
            families: families.iter().map(|f| f.name).collect(),
            checks: checks.iter().map(|c| c.name()).collect(),
            passed: items.iter().all(|i| i.passed),
            items,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check with pass counts, then every failure with its witness.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let items: Vec<&CheckItem> = self.items.iter().filter(|i| i.check == *check).collect();
            let ok = items.iter().filter(|i| i.passed).count();
            let status = if ok == items.len() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {check} n={}: {ok}/{} items\n",
                self.n,
                items.len()
            ));
        }
        for item in self.failures() {
            out.push_str(&format!(
                "  failed {} {}{}: {}\n",
                item.check,
                item.subject,
                item.family.map(|f| format!(" [{f}]")).unwrap_or_default(),
                item.witness.as_deref().unwrap_or("")
            ));
        }
        out
    }
}

/// Smallest monomial on which two polynomials differ, with both coefficients.
fn first_difference(expected: &Polynomial, got: &Polynomial) -> Option<(Monomial, i64, i64)> {
    let keys: std::collections::BTreeSet<&Monomial> = expected
        .terms()
        .map(|(m, _)| m)
        .chain(got.terms().map(|(m, _)| m))
        .collect();
    keys.into_iter().find_map(|m| {
        let (e, g) = (expected.coefficient(m), got.coefficient(m));
        (e != g).then(|| (m.clone(), e, g))
    })
}

fn theorem_items(comp: &Composition, families: &[CodeFamily]) -> Vec<CheckItem> {
    let subject = comp.to_string();
    let members = descent_class(comp);
    let ribbon = ribbon_flagged(comp);
    let mut items = Vec::new();

    // D_I by filtering against the signed sum of shuffle-built D_{<=J}
    let mut signed: BTreeMap<Permutation, i64> = BTreeMap::new();
    for coarser in comp.coarsenings() {
        let sign = if (comp.length() - coarser.length()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        for p in coarser_class_by_shuffle(&coarser) {
            *signed.entry(p).or_insert(0) += sign;
        }
    }
    signed.retain(|_, c| *c != 0);
    let class_witness =
        if signed.len() == members.len() && members.iter().all(|m| signed.get(m) == Some(&1)) {
            None
        } else {
            let stray = members
                .iter()
                .find(|m| signed.get(*m) != Some(&1))
                .map(|m| m.to_string())
                .or_else(|| {
                    signed
                        .keys()
                        .find(|k| !members.contains(k))
                        .map(|k| k.to_string())
                });
            Some(format!(
                "descent class and inclusion-exclusion of shuffles differ at {}",
                stray.unwrap_or_default()
            ))
        };
    items.push(CheckItem::new(
        Check::Theorem,
        format!("{subject} class"),
        None,
        class_witness,
    ));

    let det = ribbon_determinant(comp);
    let det_witness = first_difference(&ribbon, &det)
        .map(|(m, e, g)| format!("{}: inclusion-exclusion {e}, determinant {g}", m.bracket()));
    items.push(CheckItem::new(
        Check::Theorem,
        format!("{subject} determinant"),
        None,
        det_witness,
    ));

    for family in families {
        let sorted = ClassDistribution::sorted_codes(&members, family);
        let dist: Polynomial = sorted.iter().map(|c| monomial_of(c)).collect();
        let witness = first_difference(&ribbon, &dist).map(|(m, e, g)| {
            let sigma = members
                .iter()
                .zip(&sorted)
                .find(|(_, c)| monomial_of(c) == m)
                .map(|(s, _)| format!(" (first σ: {s})"))
                .unwrap_or_default();
            format!("{}: ribbon {e}, distribution {g}{sigma}", m.bracket())
        });
        items.push(CheckItem::new(
            Check::Theorem,
            subject.clone(),
            Some(family.name),
            witness,
        ));
    }
    items
}

/// For every composition `I` of `n`: the sorted codes `f(σ^{-1})` over `D_I`
/// agree for all families and equal `r_I(X_I)`, computed both by
/// inclusion-exclusion and by the determinant.
pub fn check_theorem_equidistribution(
    n: usize,
    families: &[CodeFamily],
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    config.ensure(n)?;
    let comps = compositions_of(n);
    let items = par_map(&comps, config.workers, |c| theorem_items(c, families))
        .into_iter()
        .flatten()
        .collect();
    Ok(VerificationReport::new(
        n,
        families,
        &[Check::Theorem],
        items,
    ))
}

/// `Σ_{σ ∈ id_{i_1} ⩂ .. ⩂ id_{i_r}} x_{code(σ)} = h^I(X_I)`.
pub fn check_coarse_class_product(
    n: usize,
    families: &[CodeFamily],
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    config.ensure(n)?;
    let comps = compositions_of(n);
    let items = par_map(&comps, config.workers, |comp| {
        let shuffle = shifted_shuffle_of_identities(comp.parts());
        let expected = h_product(comp);
        families
            .iter()
            .map(|family| {
                let got: Polynomial = shuffle
                    .iter()
                    .map(|s| monomial_of(&family.encode(s).sorted()))
                    .collect();
                let witness = first_difference(&expected, &got)
                    .map(|(m, e, g)| format!("{}: h-product {e}, shuffle class {g}", m.bracket()));
                CheckItem::new(Check::Coarse, comp.to_string(), Some(family.name), witness)
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    Ok(VerificationReport::new(
        n,
        families,
        &[Check::Coarse],
        items,
    ))
}

fn nondecreasing_words(len: usize, max: usize) -> Vec<Vec<usize>> {
    (0..=max).combinations_with_replacement(len).collect()
}

fn multiset<T: Ord>(items: impl IntoIterator<Item = T>) -> BTreeMap<T, usize> {
    let mut out = BTreeMap::new();
    for x in items {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

fn first_multiset_difference<T: Ord + Clone + fmt::Debug>(
    expected: &BTreeMap<T, usize>,
    got: &BTreeMap<T, usize>,
) -> Option<String> {
    expected
        .keys()
        .chain(got.keys())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .find_map(|k| {
            let (e, g) = (
                expected.get(k).copied().unwrap_or(0),
                got.get(k).copied().unwrap_or(0),
            );
            (e != g).then(|| format!("{k:?}: expected {e}, got {g}"))
        })
}

/// Word-level identity for the inverse code: the unsorted codes over the
/// shuffle class are exactly the concatenations `w_1 .. w_r` with `w_j`
/// nondecreasing of length `i_j` over `{0 .. i_{j+1} + .. + i_r}`.
pub fn check_noncommutative_invcode(n: usize, config: &VerifyConfig) -> Result<VerificationReport> {
    config.ensure(n)?;
    let comps = compositions_of(n);
    let items = par_map(&comps, config.workers, |comp| {
        let got = multiset(
            shifted_shuffle_of_identities(comp.parts())
                .iter()
                .map(|s| inv_code(s).entries().to_vec()),
        );
        let mut remaining = comp.size();
        let mut words = vec![Vec::new()];
        for &part in comp.parts() {
            remaining -= part;
            let blocks = nondecreasing_words(part, remaining);
            words = words
                .into_iter()
                .cartesian_product(blocks.iter())
                .map(|(mut w, b)| {
                    w.extend(b);
                    w
                })
                .collect();
        }
        let expected = multiset(words);
        CheckItem::new(
            Check::NcInv,
            comp.to_string(),
            Some(CodeFamily::INVCODE.name),
            first_multiset_difference(&expected, &got),
        )
    });
    Ok(VerificationReport::new(
        n,
        &[CodeFamily::INVCODE],
        &[Check::NcInv],
        items,
    ))
}

/// For `β ∈ S_m` and `k` with `m + k <= n`: the codes over `id_k ⩂ β` end
/// with `code(β)`, and their length-`k` prefixes are exactly the words
/// `τ(β)(i_1) .. τ(β)(i_k)` with `i_1 <= .. <= i_k`, i.e. the nondecreasing
/// words for the order in which values appear in `τ(β)`. Holds for the
/// saillance and inverse codes; fails for the major code.
pub fn check_step_alphabet(
    n: usize,
    family: &CodeFamily,
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    config.ensure(n)?;
    let cases: Vec<(usize, usize)> = (0..n)
        .flat_map(|m| (1..=n - m).map(move |k| (m, k)))
        .collect();
    let items = par_map(&cases, config.workers, |&(m, k)| {
        let witness = Permutation::all(m).find_map(|beta| step_alphabet_failure(&beta, k, family));
        CheckItem::new(
            Check::ScStep,
            format!("m={m} k={k}"),
            Some(family.name),
            witness,
        )
    });
    Ok(VerificationReport::new(
        n,
        &[*family],
        &[Check::ScStep],
        items,
    ))
}

/// Why `id_k ⩂ β` violates the step-alphabet identity, if it does.
pub fn step_alphabet_failure(beta: &Permutation, k: usize, family: &CodeFamily) -> Option<String> {
    let m = beta.len();
    let tau = family.tau(beta);
    let tail = family.encode(beta);
    let mut prefixes = Vec::new();
    for sigma in shifted_shuffle(&Permutation::identity(k), beta) {
        let code = family.encode(&sigma);
        if code.entries()[k..] != *tail.entries() {
            return Some(format!(
                "β={beta} k={k}: code of {sigma} is {code}, tail differs from {tail}"
            ));
        }
        prefixes.push((code.entries()[..k].to_vec(), sigma));
    }
    let expected = multiset(
        nondecreasing_words(k, m)
            .into_iter()
            .map(|idx| idx.into_iter().map(|i| tau.get(i)).collect::<Vec<_>>()),
    );
    let got = multiset(prefixes.iter().map(|(p, _)| p.clone()));
    first_multiset_difference(&expected, &got).map(|diff| {
        let sigma = prefixes
            .iter()
            .find(|(p, _)| !expected.contains_key(p))
            .map(|(p, s)| format!("; {s} has prefix {}", p.iter().join("")))
            .unwrap_or_default();
        format!("β={beta} k={k} τ={tau}: {diff}{sigma}")
    })
}

/// `{(Σ f(σ^{-1}), des σ)} = {(maj σ^{-1}, des σ)} = {(inv σ, des σ)}` over `S_n`.
pub fn check_euler_mahonian(
    n: usize,
    family: &CodeFamily,
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    config.ensure(n)?;
    let acceptability = is_acceptable(family, n);
    if !acceptability.acceptable {
        let witness = acceptability
            .incompatible
            .or(acceptability.set_witness)
            .map(|w| w.to_string())
            .unwrap_or_default();
        return Err(Error::NotAcceptable {
            family: family.name.to_string(),
            witness,
        });
    }
    let mut by_code = BTreeMap::new();
    let mut by_maj = BTreeMap::new();
    let mut by_inv = BTreeMap::new();
    for sigma in Permutation::all(n) {
        let inverse = sigma.inverse();
        let des = sigma.des();
        *by_code
            .entry((family.encode(&inverse).sum(), des))
            .or_insert(0usize) += 1;
        *by_maj.entry((inverse.maj(), des)).or_insert(0usize) += 1;
        *by_inv.entry((sigma.inv(), des)).or_insert(0usize) += 1;
    }
    let items = vec![
        CheckItem::new(
            Check::Em,
            "(code sum, des) = (imaj, des)",
            Some(family.name),
            first_multiset_difference(&by_maj, &by_code),
        ),
        CheckItem::new(
            Check::Em,
            "(code sum, des) = (inv, des)",
            Some(family.name),
            first_multiset_difference(&by_inv, &by_code),
        ),
    ];
    Ok(VerificationReport::new(n, &[*family], &[Check::Em], items))
}

/// Dense univariate product `Π_{i=1}^n (1 + q + .. + q^{i-1})`.
pub fn q_factorial(n: usize) -> Vec<i64> {
    (1..=n).fold(vec![1], |acc, i| {
        let mut out = vec![0; acc.len() + i - 1];
        for (d, &c) in acc.iter().enumerate() {
            for slot in &mut out[d..d + i] {
                *slot += c;
            }
        }
        out
    })
}

fn q_distribution(values: impl Iterator<Item = usize>) -> Vec<i64> {
    let mut out = Vec::new();
    for v in values {
        if out.len() <= v {
            out.resize(v + 1, 0);
        }
        out[v] += 1;
    }
    out
}

/// MacMahon (`Σ q^maj = Σ q^inv = [n]_q!`) and, per descent class,
/// `Σ q^{maj(σ^{-1})} = Σ q^{inv(σ)}`, also read off the inverse-code
/// class distribution under `x_j -> q^j`.
pub fn check_fs(n: usize, config: &VerifyConfig) -> Result<VerificationReport> {
    config.ensure(n)?;
    let mut items = Vec::new();
    let factorial = q_factorial(n);
    let maj = q_distribution(Permutation::all(n).map(|s| s.maj()));
    let inv = q_distribution(Permutation::all(n).map(|s| s.inv()));
    let macmahon = if maj != factorial || inv != factorial {
        Some(format!("maj {maj:?}, inv {inv:?}, [n]_q! {factorial:?}"))
    } else {
        None
    };
    items.push(CheckItem::new(Check::Fs, "macmahon", None, macmahon));

    let comps = compositions_of(n);
    let per_class = par_map(&comps, config.workers, |comp| {
        let members = descent_class(comp);
        let imaj = q_distribution(members.iter().map(|s| s.inverse().maj()));
        let inv = q_distribution(members.iter().map(Permutation::inv));
        let specialized = ClassDistribution::from_members(comp, &CodeFamily::INVCODE, &members)
            .polynomial
            .specialize(|j| j);
        let witness = if imaj != inv {
            Some(format!("imaj {imaj:?} vs inv {inv:?}"))
        } else if specialized != inv {
            Some(format!("x_j -> q^j gives {specialized:?}, inv {inv:?}"))
        } else {
            None
        };
        CheckItem::new(Check::Fs, comp.to_string(), None, witness)
    });
    items.extend(per_class);
    Ok(VerificationReport::new(n, &[], &[Check::Fs], items))
}

/// Runs the selected checks for the selected families and merges the reports.
pub fn verify(
    n: usize,
    families: &[CodeFamily],
    checks: &[Check],
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    config.ensure(n)?;
    let mut items = Vec::new();
    for check in checks {
        let report = match check {
            Check::Theorem => check_theorem_equidistribution(n, families, config)?,
            Check::Coarse => check_coarse_class_product(n, families, config)?,
            Check::NcInv => check_noncommutative_invcode(n, config)?,
            Check::ScStep => check_step_alphabet(n, &CodeFamily::SCODE, config)?,
            Check::Em => {
                let mut merged = Vec::new();
                for family in families {
                    merged.extend(check_euler_mahonian(n, family, config)?.items);
                }
                VerificationReport::new(n, families, &[Check::Em], merged)
            }
            Check::Fs => check_fs(n, config)?,
        };
        items.extend(report.items);
    }
    Ok(VerificationReport::new(n, families, checks, items))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn class_distribution_2112() {
        let config = VerifyConfig::default();
        let inv = class_distribution(&c("(2,1,1,2)"), &CodeFamily::INVCODE, &config).unwrap();
        assert_eq!(inv.size, 19);
        assert_eq!(inv.polynomial, ribbon_flagged(&c("(2,1,1,2)")));
        let trivial = class_distribution(&c("(4)"), &CodeFamily::MAJCODE, &config).unwrap();
        assert_eq!(trivial.polynomial.format_bracket(), "[0000]");
        assert!(matches!(
            class_distribution(&c("(8)"), &CodeFamily::SCODE, &config),
            Err(Error::BoundExceeded { n: 8, bound: 7 })
        ));
    }

    #[test]
    fn theorem_small() {
        let config = VerifyConfig::default();
        for n in 1..=5 {
            let report = check_theorem_equidistribution(n, &CodeFamily::BUILTIN, &config).unwrap();
            assert!(report.passed, "{}", report.render_text());
        }
        let d = class_distribution(&c("(1,1,2)"), &CodeFamily::SCODE, &config).unwrap();
        assert_eq!(d.polynomial.format_bracket(), "[0012] + [0013] + [0023]");
    }

    #[test]
    fn coarse_small() {
        let config = VerifyConfig::default();
        let report = check_coarse_class_product(5, &CodeFamily::BUILTIN, &config).unwrap();
        assert!(report.passed, "{}", report.render_text());
        let codes: Vec<String> = shifted_shuffle_of_identities(&[2, 1])
            .iter()
            .map(|s| inv_code(s).to_string())
            .collect();
        assert_eq!(codes, ["000", "010", "110"]);
    }

    #[test]
    fn noncommutative_invcode() {
        let report = check_noncommutative_invcode(5, &VerifyConfig::default()).unwrap();
        assert!(report.passed, "{}", report.render_text());
    }

    #[test]
    fn step_alphabet_per_family() {
        let config = VerifyConfig::default();
        assert!(
            check_step_alphabet(5, &CodeFamily::SCODE, &config)
                .unwrap()
                .passed
        );
        assert!(
            check_step_alphabet(5, &CodeFamily::INVCODE, &config)
                .unwrap()
                .passed
        );
        let maj = check_step_alphabet(4, &CodeFamily::MAJCODE, &config).unwrap();
        assert!(!maj.passed);
    }

    #[test]
    fn majcode_has_no_word_level_step_formula() {
        let beta: Permutation = "1".parse().unwrap();
        let failure = step_alphabet_failure(&beta, 3, &CodeFamily::MAJCODE).unwrap();
        assert!(failure.contains("1423 has prefix 101"), "{failure}");
        assert!(step_alphabet_failure(&beta, 3, &CodeFamily::SCODE).is_none());
        let beta: Permutation = "21".parse().unwrap();
        let firsts: Vec<usize> = shifted_shuffle(&Permutation::identity(1), &beta)
            .iter()
            .map(|s| CodeFamily::SCODE.encode(s).entries()[0])
            .collect();
        assert_eq!(firsts, vec![0, 1, 2]);
    }

    #[test]
    fn euler_mahonian() {
        let config = VerifyConfig::default();
        for family in CodeFamily::BUILTIN {
            for n in 1..=6 {
                assert!(check_euler_mahonian(n, &family, &config).unwrap().passed);
            }
        }
        let lehmer = CodeFamily {
            name: "lehmer",
            encode: crate::codes::lehmer_code,
            tau: crate::codes::tau_i,
        };
        assert!(matches!(
            check_euler_mahonian(4, &lehmer, &config),
            Err(Error::NotAcceptable { .. })
        ));
    }

    #[test]
    fn fs_and_macmahon() {
        assert_eq!(q_factorial(3), vec![1, 2, 2, 1]);
        let report = check_fs(6, &VerifyConfig::default()).unwrap();
        assert!(report.passed, "{}", report.render_text());
    }

    #[test]
    fn check_lists() {
        assert_eq!(
            Check::parse_list("em,fs").unwrap(),
            vec![Check::Em, Check::Fs]
        );
        assert_eq!(Check::parse_list("all").unwrap().len(), 6);
        assert!(Check::parse_list("bogus").is_err());
    }

    #[test]
    fn workers_do_not_change_reports() {
        let one = verify(
            5,
            &CodeFamily::BUILTIN,
            &Check::ALL,
            &VerifyConfig::with_workers(1),
        )
        .unwrap();
        let four = verify(
            5,
            &CodeFamily::BUILTIN,
            &Check::ALL,
            &VerifyConfig::with_workers(4),
        )
        .unwrap();
        assert_eq!(one.to_json(), four.to_json());
        assert!(one.passed);
    }
}
