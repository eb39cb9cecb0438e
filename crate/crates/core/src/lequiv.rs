//! L-equivalence: the transitive closure of the three-letter exchange
//! `w1 a w2 c w3 b w4 <-> w1 b w2 a w3 c w4` (`a < b < c`, letters of `w2`
//! above `b`, letters of `w3` and `w4` outside `[b, c]`). Classes are the
//! fibers of the sorted Lehmer code.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::codes::{lehmer_code, lehmer_decode, SubDiagonalCode};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LClass {
    /// Sorted lexicographically.
    pub members: Vec<Permutation>,
    /// Nondecreasing Lehmer code shared by all members.
    pub sorted_code: Vec<usize>,
    pub max: Permutation,
    pub min: Permutation,
}

/// Positions `(p, q, r)` and letters `(a, b, c)` of an exchange.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exchange {
    pub positions: (usize, usize, usize),
    pub letters: (usize, usize, usize),
}

fn side_conditions(w: &[usize], q: usize, r: usize, p: usize, b: usize, c: usize) -> bool {
    w[p + 1..q].iter().all(|&x| x > b)
        && w[q + 1..]
            .iter()
            .enumerate()
            .all(|(off, &x)| q + 1 + off == r || x < b || x > c)
}

/// Every permutation L-adjacent to `w`, with the exchange that produces it.
pub fn l_neighbors(w: &Permutation) -> Vec<(Permutation, Exchange)> {
    let s = w.as_slice();
    let n = s.len();
    let mut out = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                // w reads a..c..b: move to b..a..c
                let (a, c, b) = (s[p], s[q], s[r]);
                if a < b && b < c && side_conditions(s, q, r, p, b, c) {
                    let mut v = s.to_vec();
                    v[p] = b;
                    v[q] = a;
                    v[r] = c;
                    out.push((
                        Permutation::from_vec_unchecked(v),
                        Exchange {
                            positions: (p, q, r),
                            letters: (a, b, c),
                        },
                    ));
                }
                // w reads b..a..c: move to a..c..b
                let (b, a, c) = (s[p], s[q], s[r]);
                if a < b && b < c && side_conditions(s, q, r, p, b, c) {
                    let mut v = s.to_vec();
                    v[p] = a;
                    v[q] = c;
                    v[r] = b;
                    out.push((
                        Permutation::from_vec_unchecked(v),
                        Exchange {
                            positions: (p, q, r),
                            letters: (a, b, c),
                        },
                    ));
                }
            }
        }
    }
    out
}

/// Whether `u` and `v` differ by one exchange (in either direction).
pub fn l_adjacent(u: &Permutation, v: &Permutation) -> Result<bool> {
    Ok(l_adjacency_witness(u, v)?.is_some())
}

pub fn l_adjacency_witness(u: &Permutation, v: &Permutation) -> Result<Option<Exchange>> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(l_neighbors(u)
        .into_iter()
        .find(|(w, _)| w == v)
        .map(|(_, e)| e))
}

/// Breadth-first closure of `p` under L-adjacency.
pub fn l_class(p: &Permutation) -> LClass {
    let mut seen = BTreeSet::from([p.clone()]);
    let mut queue = VecDeque::from([p.clone()]);
    while let Some(w) = queue.pop_front() {
        for (v, _) in l_neighbors(&w) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let members: Vec<Permutation> = seen.into_iter().collect();
    LClass {
        sorted_code: lehmer_code(p).sorted(),
        max: members.last().unwrap().clone(),
        min: members[0].clone(),
        members,
    }
}

/// The partition of `S_n` into L-classes, ordered by smallest member.
pub fn l_classes(n: usize) -> Vec<LClass> {
    let mut assigned = BTreeSet::new();
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        if assigned.contains(&p) {
            continue;
        }
        let class = l_class(&p);
        assigned.extend(class.members.iter().cloned());
        out.push(class);
    }
    out
}

/// Fibers of the sorted Lehmer code, keyed by that sorted code.
pub fn sorted_code_fibers(n: usize) -> BTreeMap<Vec<usize>, Vec<Permutation>> {
    let mut out: BTreeMap<Vec<usize>, Vec<Permutation>> = BTreeMap::new();
    for p in Permutation::all(n) {
        out.entry(lehmer_code(&p).sorted()).or_default().push(p);
    }
    out
}

/// Decodes the nonincreasing rearrangement of the Lehmer code.
pub fn class_max(p: &Permutation) -> Permutation {
    let mut entries = lehmer_code(p).sorted();
    entries.reverse();
    lehmer_decode(&SubDiagonalCode::new(entries).expect("nonincreasing code is sub-diagonal"))
}

/// Fills positions `n` down to `1` with the largest unused code value
/// allowed there (`<= n - i`), then decodes.
pub fn class_min(p: &Permutation) -> Result<Permutation> {
    let mut pool = lehmer_code(p).sorted();
    let n = pool.len();
    let mut entries = vec![0; n];
    for i in (1..=n).rev() {
        let bound = n - i;
        let idx = pool.iter().rposition(|&v| v <= bound).ok_or_else(|| {
            Error::Construction(format!(
                "no code value <= {bound} left for position {i} of {p}"
            ))
        })?;
        entries[i - 1] = pool.remove(idx);
    }
    Ok(lehmer_decode(&SubDiagonalCode::new(entries)?))
}

pub fn catalan(n: usize) -> u64 {
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    (0..n as u64).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let u = p("738694152");
        let v = p("758634192");
        let e = l_adjacency_witness(&u, &v).unwrap().unwrap();
        assert_eq!(e.letters, (3, 5, 9));
        assert!(l_adjacent(&v, &u).unwrap());
        assert!(!l_adjacent(&u, &u).unwrap());
        assert!(l_adjacent(&p("31452"), &p("32415")).unwrap());
        assert!(l_adjacent(&p("12"), &p("123")).is_err());
        assert_eq!(lehmer_code(&u).to_string(), "625442010");
        assert_eq!(lehmer_code(&v).to_string(), "645422010");
    }

    #[test]
    fn class_of_31452() {
        let class = l_class(&p("31452"));
        let members: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            members,
            ["13542", "14352", "21543", "23514", "24153", "24315", "31452", "32154", "32415"]
        );
        assert_eq!(class.max, p("32415"));
        assert_eq!(class.min, p("13542"));
        assert_eq!(l_class(&Permutation::identity(4)).members.len(), 1);
    }

    #[test]
    fn extremal_elements() {
        let s = p("682547193");
        assert_eq!(lehmer_code(&s).to_string(), "561322010");
        assert_eq!(class_max(&s), p("764352819"));
        assert_eq!(class_min(&s).unwrap(), p("139857642"));
        assert_eq!(class_max(&p("31452")), p("32415"));
        assert_eq!(class_min(&p("31452")).unwrap(), p("13542"));
        assert_eq!(
            class_max(&Permutation::identity(5)),
            Permutation::identity(5)
        );
        assert_eq!(
            class_min(&Permutation::identity(5)).unwrap(),
            Permutation::identity(5)
        );
        let class = l_class(&s);
        assert!(class.members.contains(&p("764352819")));
        assert!(class.members.contains(&p("139857642")));
        assert_eq!(class.max, p("764352819"));
        assert_eq!(class.min, p("139857642"));
    }

    #[test]
    fn class_counts() {
        assert_eq!(l_classes(1).len(), 1);
        assert_eq!(l_classes(3).len(), 5);
        let five = l_classes(5);
        assert_eq!(five.len(), 42);
        assert!(five
            .iter()
            .any(|c| c.members.len() == 9 && c.members.contains(&p("31452"))));
        assert_eq!(
            (0..8).map(catalan).collect::<Vec<_>>(),
            [1, 1, 2, 5, 14, 42, 132, 429]
        );
    }
}
