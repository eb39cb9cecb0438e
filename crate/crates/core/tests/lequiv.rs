use std::collections::BTreeSet;

use permcode::lequiv::{catalan, l_classes, l_neighbors, sorted_code_fibers};
use permcode::{class_max, class_min, l_adjacent, l_class, lehmer_code, Permutation};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn adjacency_preserves_sorted_lehmer_code() {
    for n in 0..=7 {
        for u in Permutation::all(n) {
            let code = lehmer_code(&u).sorted();
            for (v, _) in l_neighbors(&u) {
                assert_eq!(lehmer_code(&v).sorted(), code, "{u} ~ {v}");
                assert!(l_adjacent(&v, &u).unwrap());
            }
        }
    }
}

#[test]
fn classes_are_fibers_counted_by_catalan() {
    for n in 0..=7 {
        let classes = l_classes(n);
        assert_eq!(classes.len() as u64, catalan(n), "n={n}");
        let fibers = sorted_code_fibers(n);
        let from_classes: BTreeSet<Vec<Permutation>> =
            classes.into_iter().map(|c| c.members).collect();
        let from_fibers: BTreeSet<Vec<Permutation>> = fibers.into_values().collect();
        assert_eq!(from_classes, from_fibers, "n={n}");
    }
}

#[test]
fn unique_avoiders_are_the_extremes() {
    let (p132, p213) = (p("132"), p("213"));
    for n in 0..=7 {
        for class in l_classes(n) {
            let avoid132: Vec<&Permutation> = class
                .members
                .iter()
                .filter(|m| !m.contains_pattern(&p132))
                .collect();
            let avoid213: Vec<&Permutation> = class
                .members
                .iter()
                .filter(|m| !m.contains_pattern(&p213))
                .collect();
            assert_eq!(avoid132, vec![&class.max], "n={n}");
            assert_eq!(avoid213, vec![&class.min], "n={n}");
            for m in &class.members {
                assert_eq!(class_max(m), class.max);
                assert_eq!(class_min(m).unwrap(), class.min);
            }
            assert_eq!(class_max(&class.max), class.max);
            assert_eq!(class_min(&class.min).unwrap(), class.min);
        }
    }
}

#[test]
fn printed_class() {
    let members: Vec<String> = l_class(&p("31452"))
        .members
        .iter()
        .map(|m| m.to_string())
        .collect();
    assert_eq!(
        members,
        ["13542", "14352", "21543", "23514", "24153", "24315", "31452", "32154", "32415"]
    );
    assert_eq!(class_max(&p("682547193")), p("764352819"));
    assert_eq!(class_min(&p("682547193")).unwrap(), p("139857642"));
}

/// `u ~ v` but `u·w` and `v·w` (standardized) fall in different classes.
fn congruence_failure(
    max_n: usize,
) -> Option<(Permutation, Permutation, Permutation, Permutation)> {
    for n in 1..=max_n {
        for u in Permutation::all(n) {
            for (v, _) in l_neighbors(&u) {
                for extra in 1..=max_n - n {
                    let size = n + extra;
                    for w in Permutation::all(size) {
                        // w's first n letters, standardized, must read u
                        let head = permcode::standardize(&w.as_slice()[..n]);
                        if head != u {
                            continue;
                        }
                        let mut values: Vec<usize> = w.as_slice()[..n].to_vec();
                        values.sort_unstable();
                        let relabel = |x: usize| values[x - 1];
                        let mut w2: Vec<usize> = v.as_slice().iter().map(|&x| relabel(x)).collect();
                        w2.extend_from_slice(&w.as_slice()[n..]);
                        let w2 = Permutation::new(w2).unwrap();
                        if lehmer_code(&w).sorted() != lehmer_code(&w2).sorted() {
                            return Some((u, v, w, w2));
                        }
                    }
                }
            }
        }
    }
    None
}

#[test]
fn not_a_congruence() {
    let (u, v, uw, vw) = congruence_failure(5).expect("a witness exists at n <= 5");
    assert!(l_adjacent(&u, &v).unwrap());
    assert!(
        !l_class(&uw).members.contains(&vw),
        "{u} ~ {v} but {uw} !~ {vw}"
    );
}

#[test]
fn pattern_132_gives_a_greater_neighbor() {
    let p132 = p("132");
    for n in 0..=7 {
        for w in Permutation::all(n) {
            let has_greater = l_neighbors(&w).iter().any(|(v, _)| *v > w);
            assert_eq!(has_greater, w.contains_pattern(&p132), "{w}");
        }
    }
}
