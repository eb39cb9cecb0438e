//! Text and JSON rendering for the subcommands.

use permcode::lequiv::{l_classes, LClass};
use permcode::trees::{c_polynomial, eulerian_specialization, taylor_tree_series, x_polynomial};
use permcode::{
    compositions_of, descent_class, h_product, inv_code, inv_decode, l_class, lehmer_code,
    lehmer_decode, maj_code, maj_decode, ribbon_determinant, ribbon_flagged, s_code, s_decode,
    CodeFamily, Composition, Error, Permutation, Polynomial, SubDiagonalCode,
};
use serde_json::{json, Value};

use crate::RibbonMode;

#[derive(Clone, Copy)]
pub struct Codec {
    pub name: &'static str,
    pub encode: fn(&Permutation) -> SubDiagonalCode,
    pub decode: fn(&SubDiagonalCode) -> Permutation,
}

pub const CODECS: [Codec; 4] = [
    Codec {
        name: "lehmer",
        encode: lehmer_code,
        decode: lehmer_decode,
    },
    Codec {
        name: "invcode",
        encode: inv_code,
        decode: inv_decode,
    },
    Codec {
        name: "majcode",
        encode: maj_code,
        decode: maj_decode,
    },
    Codec {
        name: "scode",
        encode: s_code,
        decode: s_decode,
    },
];

pub fn codec(name: &str) -> Result<Codec, Error> {
    let canonical = match name.trim().to_ascii_lowercase().as_str() {
        "lc" | "lehmer" | "lcode" => "lehmer",
        other => CodeFamily::by_name(other)?.name,
    };
    Ok(*CODECS
        .iter()
        .find(|c| c.name == canonical)
        .expect("every family has a codec"))
}

pub fn codes(p: &Permutation, codecs: &[Codec], as_json: bool) -> String {
    if as_json {
        let entries: serde_json::Map<String, Value> = codecs
            .iter()
            .map(|c| {
                let code = (c.encode)(p);
                (
                    c.name.to_string(),
                    json!({ "code": code, "sorted": digits(&code.sorted()) }),
                )
            })
            .collect();
        return format!("{}\n", json!({ "perm": p, "codes": entries }));
    }
    let mut out = format!("perm     {p}\n");
    for c in codecs {
        let code = (c.encode)(p);
        out.push_str(&format!(
            "{:<8} {code}  sorted {}\n",
            c.name,
            digits(&code.sorted())
        ));
    }
    out
}

/// Blocks of the code table: each left composition (no descent at 1) with its complement.
fn table_blocks(n: usize) -> Vec<(Vec<Permutation>, Vec<Permutation>)> {
    let comps = compositions_of(n);
    let by_inverse = |c: &Composition| {
        let mut members: Vec<Permutation> =
            descent_class(c).iter().map(Permutation::inverse).collect();
        members.sort();
        members
    };
    if n <= 1 {
        return comps.iter().map(|c| (by_inverse(c), Vec::new())).collect();
    }
    comps[..comps.len() / 2]
        .iter()
        .map(|c| (by_inverse(c), by_inverse(&c.complement())))
        .collect()
}

fn table_row(p: &Permutation) -> String {
    format!("{p} {} {} {}", inv_code(p), maj_code(p), s_code(p))
}

/// The Ic/Mc/Sc table of `S_n`, sorted by inverse descent classes.
pub fn table(n: usize) -> String {
    let mut out = String::from("σ Ic Mc Sc    σ Ic Mc Sc\n");
    for (idx, (left, right)) in table_blocks(n).iter().enumerate() {
        if idx > 0 {
            out.push('\n');
        }
        for (i, p) in left.iter().enumerate() {
            match right.get(i) {
                Some(q) => out.push_str(&format!("{}    {}\n", table_row(p), table_row(q))),
                None => out.push_str(&format!("{}\n", table_row(p))),
            }
        }
    }
    out
}

pub fn table_json(n: usize) -> String {
    let row = |p: &Permutation| json!({ "perm": p, "ic": inv_code(p), "mc": maj_code(p), "sc": s_code(p) });
    let blocks: Vec<Value> = table_blocks(n)
        .iter()
        .map(|(l, r)| json!({ "left": l.iter().map(row).collect::<Vec<_>>(), "right": r.iter().map(row).collect::<Vec<_>>() }))
        .collect();
    format!("{}\n", json!({ "n": n, "blocks": blocks }))
}

fn digits(v: &[usize]) -> String {
    let sep = if v.iter().all(|&x| x <= 9) { "" } else { "," };
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn compact(c: &Composition) -> String {
    digits(c.parts())
}

pub fn ribbons(comps: &[Composition], mode: RibbonMode, as_json: bool) -> String {
    let (prefix, f): (&str, fn(&Composition) -> Polynomial) = match mode {
        RibbonMode::Product => ("h", h_product),
        RibbonMode::Ie => ("r", ribbon_flagged),
        RibbonMode::Det => ("r", ribbon_determinant),
    };
    if as_json {
        let items: Vec<Value> = comps
            .iter()
            .map(|c| json!({ "composition": c, "name": format!("{prefix}_{}", compact(c)), "terms": f(c).json_terms() }))
            .collect();
        return format!("{}\n", Value::Array(items));
    }
    comps
        .iter()
        .map(|c| format!("{prefix}_{} = {}\n", compact(c), f(c).format_bracket()))
        .collect()
}

fn eulerian_text(coeffs: &[i64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| {
            let power = match d {
                0 => String::from("1"),
                1 => String::from("q"),
                _ => format!("q^{d}"),
            };
            match (c, d) {
                (1, _) => power,
                (_, 0) => c.to_string(),
                _ => format!("{c}*{power}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn trees(n: usize, as_json: bool) -> String {
    let series = taylor_tree_series(n);
    let x = x_polynomial(n);
    let c = c_polynomial(n - 1);
    let a = eulerian_specialization(n - 1);
    if as_json {
        let trees: Vec<Value> = series
            .terms()
            .map(|(t, k)| json!({ "tree": t.to_string(), "coeff": k }))
            .collect();
        return format!(
            "{}\n",
            json!({ "n": n, "series": trees, "x": x.format_v(), "c": c.format_v(), "eulerian": a })
        );
    }
    let mut out = format!("trees x_{n} = {series}\n");
    out.push_str(&format!("x_{n} = {}\n", x.format_v()));
    out.push_str(&format!("C_{} = {}\n", n - 1, c.format_v()));
    out.push_str(&format!("A_{}(q) = {}\n", n - 1, eulerian_text(&a)));
    out
}

fn lclass_json(class: &LClass) -> Value {
    serde_json::to_value(class).expect("class serializes")
}

pub fn lclass(p: &Permutation, as_json: bool) -> String {
    let class = l_class(p);
    if as_json {
        return format!("{}\n", lclass_json(&class));
    }
    let members: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
    format!(
        "class of {p}: {} members\nsorted lehmer code {}\nmax {}\nmin {}\n{}\n",
        members.len(),
        digits(&class.sorted_code),
        class.max,
        class.min,
        members.join(" ")
    )
}

pub fn lclasses(n: usize, as_json: bool) -> String {
    let classes = l_classes(n);
    if as_json {
        let items: Vec<Value> = classes.iter().map(lclass_json).collect();
        return format!(
            "{}\n",
            json!({ "n": n, "count": classes.len(), "classes": items })
        );
    }
    let mut out = format!("{} classes in S_{n}\n", classes.len());
    for class in &classes {
        out.push_str(&format!(
            "{:>5}  max {}  min {}\n",
            class.members.len(),
            class.max,
            class.min
        ));
    }
    out
}
