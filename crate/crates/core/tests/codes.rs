use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use permcode::codes::{generic_decode, generic_encode};
use permcode::perm::shifted_shuffle;
use permcode::{
    inv_code, inv_decode, is_acceptable, lehmer_code, lehmer_decode, maj_code, maj_decode, s_code,
    s_decode, tau_m, CodeFamily, Permutation, SubDiagonalCode,
};
use proptest::prelude::*;

type Encoder = fn(&Permutation) -> SubDiagonalCode;
type Decoder = fn(&SubDiagonalCode) -> Permutation;

const CODECS: [(&str, Encoder, Decoder); 4] = [
    ("lehmer", lehmer_code, lehmer_decode),
    ("invcode", inv_code, inv_decode),
    ("majcode", maj_code, maj_decode),
    ("scode", s_code, s_decode),
];

fn roundtrip_suite(encode: Encoder, decode: Decoder, n: usize) {
    let mut image = BTreeSet::new();
    for p in Permutation::all(n) {
        let code = encode(&p);
        assert_eq!(decode(&code), p, "decode(encode({p}))");
        assert!(image.insert(code), "encode not injective at {p}");
    }
    let all: BTreeSet<SubDiagonalCode> = SubDiagonalCode::all(n).collect();
    assert_eq!(image, all);
}

#[test]
fn codes_are_bijections_up_to_7() {
    for (_, encode, decode) in CODECS {
        for n in 0..=7 {
            roundtrip_suite(encode, decode, n);
        }
    }
}

#[test]
fn sum_laws() {
    for n in 0..=7 {
        for p in Permutation::all(n) {
            assert_eq!(lehmer_code(&p).sum(), p.inv());
            assert_eq!(inv_code(&p).sum(), p.inv());
            assert_eq!(maj_code(&p).sum(), p.maj());
            assert_eq!(p.inverse().inv(), p.inv());
        }
    }
}

#[test]
fn scode_descent_law() {
    for n in 1..=7 {
        for c in SubDiagonalCode::all(n) {
            let distinct: BTreeSet<usize> =
                c.entries().iter().copied().filter(|&v| v > 0).collect();
            assert_eq!(s_decode(&c).des(), distinct.len(), "code {c}");
        }
    }
}

#[test]
fn tau_m_prefixes_are_intervals() {
    for m in 0..=7 {
        for beta in Permutation::all(m) {
            let tau = tau_m(&beta);
            let descents = beta.descent_set();
            for k in 0..=m {
                let d = descents.iter().filter(|&&j| j > k).count();
                let prefix: BTreeSet<usize> = (0..=k).map(|i| tau.get(i)).collect();
                assert_eq!(prefix, (d..=d + k).collect(), "β={beta} k={k}");
            }
        }
    }
}

#[test]
fn tau_m_depends_on_descent_composition_only() {
    for m in 0..=7 {
        let mut seen = BTreeMap::new();
        for beta in Permutation::all(m) {
            let tau = tau_m(&beta);
            let prev = seen
                .entry(beta.descent_composition())
                .or_insert_with(|| tau.clone());
            assert_eq!(*prev, tau, "β={beta}");
        }
    }
}

#[test]
fn sorted_prefixes_over_shuffle_steps() {
    for family in CodeFamily::BUILTIN {
        for m in 0..=5 {
            for k in 1..=3 {
                for beta in Permutation::all(m) {
                    let got: Vec<Vec<usize>> = shifted_shuffle(&Permutation::identity(k), &beta)
                        .iter()
                        .map(|s| {
                            let mut prefix = family.encode(s).entries()[..k].to_vec();
                            prefix.sort_unstable();
                            prefix
                        })
                        .sorted()
                        .collect();
                    let expected: Vec<Vec<usize>> =
                        (0..=m).combinations_with_replacement(k).collect();
                    assert_eq!(got, expected, "{} β={beta} k={k}", family.name);
                }
            }
        }
    }
}

#[test]
fn generic_matches_direct() {
    for family in CodeFamily::BUILTIN {
        for n in 0..=6 {
            for p in Permutation::all(n) {
                let code = family.encode(&p);
                assert_eq!(generic_encode(&family, &p), code, "{} {p}", family.name);
                assert_eq!(generic_decode(&family, &code), p);
            }
        }
    }
}

#[test]
fn builtin_families_are_acceptable() {
    for family in CodeFamily::BUILTIN {
        let report = is_acceptable(&family, 6);
        assert!(
            report.acceptable,
            "{}: {:?}",
            family.name, report.set_witness
        );
    }
    assert!(is_acceptable(&CodeFamily::INVCODE, 6).entrywise_stable);
}

#[test]
fn s4_rows() {
    let rows = [
        ("4123", "1110", "0010", "1110"),
        ("1234", "0000", "0000", "0000"),
        ("2413", "2010", "0110", "1010"),
        ("3241", "3100", "3100", "1200"),
    ];
    for (p, ic, mc, sc) in rows {
        let p: Permutation = p.parse().unwrap();
        assert_eq!(inv_code(&p).to_string(), ic);
        assert_eq!(maj_code(&p).to_string(), mc);
        assert_eq!(s_code(&p).to_string(), sc);
    }
    let p: Permutation = "935721468".parse().unwrap();
    assert_eq!(maj_code(&p).to_string(), "501012010");
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn roundtrips_on_larger_sizes(p in permutation(12)) {
        for (_, encode, decode) in CODECS {
            let code = encode(&p);
            prop_assert!(SubDiagonalCode::new(code.entries().to_vec()).is_ok());
            prop_assert_eq!(decode(&code), p.clone());
        }
        prop_assert_eq!(p.inverse().inverse(), p.clone());
    }

    #[test]
    fn code_text_reparses(p in permutation(10)) {
        for (_, encode, _) in CODECS {
            let code = encode(&p);
            prop_assert_eq!(code.to_string().parse::<SubDiagonalCode>().unwrap(), code);
        }
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }
}
