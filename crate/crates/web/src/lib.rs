//! Browser bindings: codes of a permutation, flagged ribbons and L-classes,
//! each returned as a JSON string.

use permcode::{
    class_max, class_min, h_product, inv_code, l_class, lehmer_code, maj_code, perm_to_tree,
    ribbon_determinant, ribbon_flagged, s_code, Composition, Permutation,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_N: usize = 9;

fn parse_perm(text: &str) -> Result<Permutation, String> {
    let p: Permutation = text
        .trim()
        .parse()
        .map_err(|e: permcode::Error| e.to_string())?;
    if p.len() > MAX_N {
        return Err(format!("at most {MAX_N} letters in the browser"));
    }
    Ok(p)
}

pub fn codes_json(perm: &str) -> Result<String, String> {
    let p = parse_perm(perm)?;
    let inv = p.inverse();
    let tree = perm_to_tree(&p);
    Ok(json!({
        "perm": p,
        "inverse": inv,
        "descents": p.descent_set(),
        "composition": p.descent_composition(),
        "lehmer": lehmer_code(&p),
        "invcode": inv_code(&p),
        "majcode": maj_code(&p),
        "scode": s_code(&p),
        "inverse_codes": {
            "invcode": inv_code(&inv),
            "majcode": maj_code(&inv),
            "scode": s_code(&inv),
        },
        "tree": tree.to_string(),
        "shape": tree.shape().to_string(),
    })
    .to_string())
}

pub fn ribbon_json(composition: &str, mode: &str) -> Result<String, String> {
    let c: Composition = composition
        .trim()
        .parse()
        .map_err(|e: permcode::Error| e.to_string())?;
    if c.size() > MAX_N {
        return Err(format!("compositions of at most {MAX_N} in the browser"));
    }
    let poly = match mode {
        "product" => h_product(&c),
        "det" => ribbon_determinant(&c),
        "ie" | "" => ribbon_flagged(&c),
        other => return Err(format!("unknown mode `{other}`")),
    };
    Ok(json!({
        "composition": c,
        "text": poly.format_bracket(),
        "terms": poly.json_terms(),
        "mass": poly.mass(),
    })
    .to_string())
}

pub fn lclass_json(perm: &str) -> Result<String, String> {
    let p = parse_perm(perm)?;
    let class = l_class(&p);
    Ok(json!({
        "perm": p,
        "members": class.members,
        "sorted_code": class.sorted_code,
        "max": class_max(&p),
        "min": class_min(&p).map_err(|e| e.to_string())?,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn codes(perm: &str) -> Result<String, JsError> {
    codes_json(perm).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn ribbon(composition: &str, mode: &str) -> Result<String, JsError> {
    ribbon_json(composition, mode).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn lclass(perm: &str) -> Result<String, JsError> {
    lclass_json(perm).map_err(|e| JsError::new(&e))
}
