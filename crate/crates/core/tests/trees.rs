use permcode::trees::{
    c_polynomial, code_arity_monomial, connes_moscovici, eulerian_specialization,
    increasing_labelings, s_code_of_tree, taylor_tree_series, x_polynomial,
    x_polynomial_from_codes,
};
use permcode::{
    inv_code, lehmer_code, perm_to_tree, s_code, tree_to_perm, LabeledTree, Permutation, PlaneTree,
};

const X: [&str; 6] = [
    "V0",
    "V1*V0",
    "V2*V0^2 + V1^2*V0",
    "V3*V0^3 + 4*V2*V1*V0^2 + V1^3*V0",
    "V4*V0^4 + 7*V3*V1*V0^3 + 4*V2^2*V0^3 + 11*V2*V1^2*V0^2 + V1^4*V0",
    "V5*V0^5 + 11*V4*V1*V0^4 + 15*V3*V2*V0^4 + 32*V3*V1^2*V0^3 + 34*V2^2*V1*V0^3 + 26*V2*V1^3*V0^2 + V1^5*V0",
];

#[test]
fn taylor_coefficients() {
    for (idx, expected) in X.iter().enumerate() {
        assert_eq!(x_polynomial(idx + 1).format_v(), *expected);
    }
}

#[test]
fn taylor_from_codes() {
    for n in 1..=8 {
        let x = x_polynomial(n);
        assert_eq!(x_polynomial_from_codes(n, inv_code), x, "n={n}");
        assert_eq!(x_polynomial_from_codes(n, lehmer_code), x, "n={n}");
        assert_eq!(x_polynomial_from_codes(n, s_code), x, "n={n}");
    }
}

#[test]
fn labelings_count_factorial() {
    let mut factorial = 1;
    for n in 1..=9 {
        if n > 1 {
            factorial *= n as u64 - 1;
        }
        let series = taylor_tree_series(n);
        let total: u64 = series.terms().map(|(t, _)| connes_moscovici(t)).sum();
        assert_eq!(total, factorial, "n={n}");
        assert_eq!(series.total() as u64, factorial);
        for (t, c) in series.terms() {
            assert_eq!(t.size(), n);
            assert_eq!(c as u64, connes_moscovici(t));
        }
    }
}

#[test]
fn canonik_shape() {
    let shape: PlaneTree = "(()((()())))".parse().unwrap();
    let labelings = increasing_labelings(&shape);
    let perms: Vec<String> = labelings
        .iter()
        .map(|l| tree_to_perm(l).to_string())
        .collect();
    assert_eq!(perms, ["43125", "45312", "35412", "25413", "15423"]);
    let codes: Vec<String> = labelings
        .iter()
        .map(|l| s_code_of_tree(l).to_string())
        .collect();
    assert_eq!(codes, ["33200", "33100", "22010", "20210", "02210"]);
    assert_eq!(connes_moscovici(&shape), 5);
}

#[test]
fn tree_bijection() {
    for n in 1..=8 {
        let trees = LabeledTree::all_increasing(n);
        for t in &trees {
            assert_eq!(perm_to_tree(&tree_to_perm(t)), *t);
        }
        if n >= 2 {
            for p in Permutation::all(n - 1) {
                let t = perm_to_tree(&p);
                assert_eq!(tree_to_perm(&t), p);
                assert_eq!(s_code_of_tree(&t), s_code(&p), "{p}");
            }
        }
    }
}

#[test]
fn eulerian_link() {
    for n in 1..=7 {
        let mut expected = vec![0i64; n + 1];
        for p in Permutation::all(n) {
            expected[p.des() + 1] += 1;
        }
        assert_eq!(eulerian_specialization(n), expected, "n={n}");
        for p in Permutation::all(n) {
            let code = s_code(&p);
            let distinct = code
                .entries()
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            let nonzero = code
                .entries()
                .iter()
                .filter(|&&v| v > 0)
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            assert_eq!(distinct, 1 + nonzero);
            let factors = code_arity_monomial(&code)
                .indices()
                .filter(|&i| i > 0)
                .count();
            assert_eq!(factors, p.des() + 1, "{p}");
        }
    }
    assert_eq!(c_polynomial(3).format_v(), "V3 + 4*V2*V1 + V1^3");
}

#[test]
fn derive_grows_by_one() {
    for n in 1..=6 {
        for (t, _) in taylor_tree_series(n).derive().terms() {
            assert_eq!(t.size(), n + 1);
        }
    }
}
