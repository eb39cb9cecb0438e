//! Rooted trees and the formal Taylor expansion of `dx/dt = V(x(t))`.
//!
//! The n-th derivative `x_n` is a sum of trees with `n` nodes weighted by
//! the number of increasing labelings of each shape. Replacing every node
//! by `V_{arity}` gives the one-dimensional polynomials, and the saillance
//! code of an increasing tree lists the fathers of `n, n-1, .., 2`.
//!
//! Monomial convention for codes: a code `c` of length `m` has evaluation
//! `e = (e_0, .., e_m)` (occurrences of each letter) and is read as
//! `V_{e_0} V_{e_1} .. V_{e_m}`, i.e. the counts become subscripts. With
//! father labels minus one as the code, `e_k` is the arity of node `k + 1`,
//! which is what makes the code sum reproduce `x_{m+1}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::codes::SubDiagonalCode;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};
use crate::poly::{Monomial, Polynomial};

/// An unordered rooted tree kept in canonical form: children sorted by
/// their parenthesis encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree {
            children: Vec::new(),
        }
    }

    pub fn new(mut children: Vec<PlaneTree>) -> Self {
        children.sort();
        PlaneTree { children }
    }

    /// A path with `n` nodes.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(PlaneTree::leaf(), |t, _| PlaneTree::new(vec![t]))
    }

    /// A root with `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1);
        PlaneTree::new(vec![PlaneTree::leaf(); n - 1])
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }

    pub fn encoding(&self) -> String {
        let mut s = String::with_capacity(2 * self.size());
        self.encode_into(&mut s);
        s
    }

    fn encode_into(&self, s: &mut String) {
        s.push('(');
        for c in &self.children {
            c.encode_into(s);
        }
        s.push(')');
    }

    /// Arities of all nodes in preorder.
    pub fn arities(&self) -> Vec<usize> {
        let mut out = vec![self.children.len()];
        for c in &self.children {
            out.extend(c.arities());
        }
        out
    }

    /// Every tree obtained by attaching one new leaf to one node, one per node.
    pub fn leaf_extensions(&self) -> Vec<PlaneTree> {
        let mut out = Vec::with_capacity(self.size());
        let mut here = self.children.clone();
        here.push(PlaneTree::leaf());
        out.push(PlaneTree::new(here));
        for (i, child) in self.children.iter().enumerate() {
            for grown in child.leaf_extensions() {
                let mut cs = self.children.clone();
                cs[i] = grown;
                out.push(PlaneTree::new(cs));
            }
        }
        out
    }

    /// Order of the automorphism group.
    pub fn symmetry_factor(&self) -> u64 {
        let own: u64 = self
            .children
            .iter()
            .dedup_with_count()
            .map(|(k, _)| (1..=k as u64).product::<u64>())
            .product();
        own * self
            .children
            .iter()
            .map(PlaneTree::symmetry_factor)
            .product::<u64>()
    }

    /// Product of all subtree sizes (the tree factorial).
    pub fn tree_factorial(&self) -> u64 {
        self.size() as u64
            * self
                .children
                .iter()
                .map(PlaneTree::tree_factorial)
                .product::<u64>()
    }
}

impl Ord for PlaneTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.encoding().cmp(&other.encoding())
    }
}

impl PartialOrd for PlaneTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn parse(bytes: &[u8], pos: &mut usize) -> Option<PlaneTree> {
            if bytes.get(*pos) != Some(&b'(') {
                return None;
            }
            *pos += 1;
            let mut children = Vec::new();
            while bytes.get(*pos) == Some(&b'(') {
                children.push(parse(bytes, pos)?);
            }
            if bytes.get(*pos) != Some(&b')') {
                return None;
            }
            *pos += 1;
            Some(PlaneTree::new(children))
        }
        let s = s.trim();
        let mut pos = 0;
        match parse(s.as_bytes(), &mut pos) {
            Some(t) if pos == s.len() => Ok(t),
            _ => Err(Error::Parse(format!("`{s}` is not a parenthesised tree"))),
        }
    }
}

/// Integer combination of trees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeSeries(BTreeMap<PlaneTree, i64>);

impl TreeSeries {
    pub fn single(t: PlaneTree) -> Self {
        TreeSeries(BTreeMap::from([(t, 1)]))
    }

    pub fn add(&mut self, t: PlaneTree, coeff: i64) {
        let e = self.0.entry(t).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.retain(|_, c| *c != 0);
        }
    }

    pub fn coefficient(&self, t: &PlaneTree) -> i64 {
        self.0.get(t).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlaneTree, i64)> {
        self.0.iter().map(|(t, &c)| (t, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }

    /// `d/dt`: each tree becomes the sum of its leaf extensions.
    pub fn derive(&self) -> TreeSeries {
        let mut out = TreeSeries::default();
        for (t, c) in self.terms() {
            for grown in t.leaf_extensions() {
                out.add(grown, c);
            }
        }
        out
    }
}

impl fmt::Display for TreeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .terms()
            .map(|(t, c)| {
                if c == 1 {
                    t.to_string()
                } else {
                    format!("{c}*{t}")
                }
            })
            .join(" + ");
        f.write_str(if body.is_empty() { "0" } else { &body })
    }
}

/// `x_n` as a tree series: `n - 1` derivatives of the single node.
pub fn taylor_tree_series(n: usize) -> TreeSeries {
    assert!(n >= 1, "x_0 is not part of the expansion");
    (1..n).fold(TreeSeries::single(PlaneTree::leaf()), |s, _| s.derive())
}

/// Number of increasing labelings of a shape: `n! / (tree factorial · |Aut|)`.
pub fn connes_moscovici(t: &PlaneTree) -> u64 {
    let n = t.size() as u64;
    (1..=n).product::<u64>() / (t.tree_factorial() * t.symmetry_factor())
}

/// An increasing tree on labels `1..=n`: the root is `1` and every
/// other label exceeds its father's.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    /// `parents[l - 2]` is the father of label `l`, for `l = 2..=n`.
    parents: Vec<usize>,
}

impl LabeledTree {
    pub fn new(parents: Vec<usize>) -> Result<Self> {
        for (idx, &p) in parents.iter().enumerate() {
            let label = idx + 2;
            if p == 0 || p >= label {
                return Err(Error::Construction(format!(
                    "label {label} has father {p}; fathers must be smaller labels"
                )));
            }
        }
        Ok(LabeledTree { parents })
    }

    pub fn size(&self) -> usize {
        self.parents.len() + 1
    }

    pub fn parent(&self, label: usize) -> Option<usize> {
        (label >= 2).then(|| self.parents[label - 2])
    }

    /// Children of `label`, increasing.
    pub fn children(&self, label: usize) -> Vec<usize> {
        (2..=self.size())
            .filter(|&l| self.parents[l - 2] == label)
            .collect()
    }

    pub fn shape(&self) -> PlaneTree {
        fn build(t: &LabeledTree, label: usize) -> PlaneTree {
            PlaneTree::new(t.children(label).into_iter().map(|c| build(t, c)).collect())
        }
        build(self, 1)
    }

    /// All `(n - 1)!` increasing trees of size `n`.
    pub fn all_increasing(n: usize) -> Vec<LabeledTree> {
        assert!(n >= 1);
        if n == 1 {
            return vec![LabeledTree {
                parents: Vec::new(),
            }];
        }
        (2..=n)
            .map(|l| 1..l)
            .multi_cartesian_product()
            .map(|parents| LabeledTree { parents })
            .collect()
    }
}

impl fmt::Display for LabeledTree {
    /// Internal nodes as `label:children`, e.g. `1:2,3 3:4 4:5,6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes = (1..=self.size())
            .filter_map(|l| {
                let cs = self.children(l);
                (!cs.is_empty()).then(|| format!("{l}:{}", cs.iter().join(",")))
            })
            .join(" ");
        if nodes.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&nodes)
        }
    }
}

/// Increasing labelings of a shape, ordered by decreasing saillance code.
pub fn increasing_labelings(t: &PlaneTree) -> Vec<LabeledTree> {
    let mut out: Vec<LabeledTree> = LabeledTree::all_increasing(t.size())
        .into_iter()
        .filter(|l| l.shape() == *t)
        .collect();
    out.sort_by_key(|l| std::cmp::Reverse(s_code_of_tree(l)));
    out
}

/// Relabel `l -> n + 1 - l`, order children increasingly, read in prefix
/// order and drop the root.
pub fn tree_to_perm(t: &LabeledTree) -> Permutation {
    let n = t.size();
    fn visit(t: &LabeledTree, label: usize, n: usize, out: &mut Vec<usize>) {
        out.push(n + 1 - label);
        // larger increasing labels are smaller decreasing ones
        for c in t.children(label).into_iter().rev() {
            visit(t, c, n, out);
        }
    }
    let mut word = Vec::with_capacity(n);
    visit(t, 1, n, &mut word);
    word.remove(0);
    Permutation::new(word).expect("prefix reading of a decreasing tree is a permutation")
}

/// Inverse of [`tree_to_perm`]: the father of a letter is the rightmost
/// larger letter to its left, or the root.
pub fn perm_to_tree(p: &Permutation) -> LabeledTree {
    let m = p.len();
    let n = m + 1;
    let w = p.as_slice();
    let mut parents = vec![0; m];
    for (j, &v) in w.iter().enumerate() {
        let father = w[..j].iter().rev().find(|&&x| x > v).copied().unwrap_or(n);
        parents[n + 1 - v - 2] = n + 1 - father;
    }
    LabeledTree { parents }
}

/// Fathers (minus one) of `n, n-1, .., 2`.
pub fn s_code_of_tree(t: &LabeledTree) -> SubDiagonalCode {
    let n = t.size();
    SubDiagonalCode::new((2..=n).rev().map(|l| t.parents[l - 2] - 1).collect())
        .expect("fathers of an increasing tree give a sub-diagonal code")
}

/// `Π_{nodes} V_{arity}`.
pub fn arity_monomial(t: &PlaneTree) -> Monomial {
    Monomial::from_indices(t.arities())
}

/// `x_n` with `V_k = d^k V / dx^k` and `V_0` kept explicit.
pub fn x_polynomial(n: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for (t, c) in taylor_tree_series(n).terms() {
        out.add_term(arity_monomial(t), c);
    }
    out
}

/// `Π_{k=0}^{m} V_{e_k}` where `e` is the evaluation of the code over `{0..m}`.
pub fn code_arity_monomial(code: &SubDiagonalCode) -> Monomial {
    let m = code.len();
    let ev = Word(code.entries().to_vec())
        .evaluation(m + 1)
        .expect("code entries are at most m - 1");
    Monomial::from_indices(ev)
}

/// `Σ_{σ ∈ S_{n-1}} V^{code(σ)}`; equals [`x_polynomial`] for any code.
pub fn x_polynomial_from_codes(
    n: usize,
    encode: impl Fn(&Permutation) -> SubDiagonalCode,
) -> Polynomial {
    assert!(n >= 1);
    Permutation::all(n - 1)
        .map(|p| code_arity_monomial(&encode(&p)))
        .collect()
}

/// `C_n(V_1, .., V_n) = x_{n+1}` at `V_0 = 1`.
pub fn c_polynomial(n: usize) -> Polynomial {
    x_polynomial(n + 1).map_monomials(|m| Monomial::from_indices(m.indices().filter(|&i| i != 0)))
}

/// `C_n(q, .., q)` as coefficients of `q^0, q^1, ..`.
pub fn eulerian_specialization(n: usize) -> Vec<i64> {
    c_polynomial(n).specialize(|_| 1)
}
