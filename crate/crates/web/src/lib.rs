//! Browser bindings for framekit.
//!
//! Each export takes and returns JSON strings so the page needs no glue
//! beyond `JSON.parse`. The `*_json` functions are plain Rust and are what
//! the native tests exercise; the `#[wasm_bindgen]` wrappers only convert
//! errors into JS exceptions.

use framekit::duality::{self, check_duality};
use framekit::fundamental::{self, IndexSet};
use framekit::io::{self, FrameFile};
use framekit::parseval_dual;
use framekit::{Frame, ToleranceConfig};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Frames with more vectors than this are not swept over all subsets.
const NU_TABLE_LIMIT: usize = 12;

fn frame_value(f: &Frame) -> Value {
    serde_json::to_value(FrameFile::from_frame(f)).expect("frame file serializes")
}

fn parse(text: &str) -> Result<Frame, String> {
    io::parse_frame(text).map_err(|e| e.to_string())
}

/// Bounds, excess, canonical dual and (when one exists) the constructed
/// Parseval dual of a frame file.
pub fn analyze_frame_json(frame_file: &str) -> Result<String, String> {
    let tol = ToleranceConfig::default();
    let f = parse(frame_file)?;
    let bounds = f.bounds();
    if !f.is_frame(&tol) {
        return Ok(io::to_json(&json!({
            "is_frame": false,
            "a_opt": bounds.a_opt,
            "b_opt": bounds.b_opt,
        })));
    }
    let excess = f.excess(&tol).map_err(|e| e.to_string())?;
    let canonical = duality::canonical_dual(&f, &tol).map_err(|e| e.to_string())?;
    let existence = parseval_dual::parseval_dual_exists(&f, &tol).map_err(|e| e.to_string())?;
    let parseval = if existence.exists {
        let built = parseval_dual::construct_parseval_dual(&f, &tol).map_err(|e| e.to_string())?;
        let dual = built.dual.expect("constructed dual present");
        let report = check_duality(&f, &dual, &tol).map_err(|e| e.to_string())?;
        json!({
            "dual": frame_value(&dual),
            "parseval_residual": built.parseval_residual,
            "duality_residual": report.deviation_norm,
        })
    } else {
        Value::Null
    };
    Ok(io::to_json(&json!({
        "is_frame": true,
        "a_opt": bounds.a_opt,
        "b_opt": bounds.b_opt,
        "is_parseval": f.is_parseval(&tol),
        "excess": excess.excess,
        "singular_values": excess.singular_values,
        "canonical_dual": frame_value(&canonical),
        "parseval_dual_exists": existence.exists,
        "deviation_dim": existence.deviation_dim,
        "reason": existence.reason,
        "parseval_dual": parseval,
    })))
}

/// `nu_-(J)` and `nu_+(J)` for every subset `J` of a Parseval frame.
pub fn nu_table_json(frame_file: &str) -> Result<String, String> {
    let tol = ToleranceConfig::default();
    let f = parse(frame_file)?;
    let n = f.len();
    if n > NU_TABLE_LIMIT {
        return Err(format!("at most {NU_TABLE_LIMIT} vectors, got {n}"));
    }
    let mut rows = Vec::with_capacity(1 << n);
    let mut global = f64::INFINITY;
    for j in IndexSet::all_subsets(n) {
        let nu = fundamental::nu_bounds(&f, &j, &tol).map_err(|e| e.to_string())?;
        global = global.min(nu.nu_minus);
        rows.push(json!({ "j": j.to_string(), "nu_minus": nu.nu_minus, "nu_plus": nu.nu_plus }));
    }
    Ok(io::to_json(
        &json!({ "rows": rows, "nu_minus_global": global }),
    ))
}

/// Builds the projected-basis example frame for `alpha` (comma-separated
/// coefficients, normalised here) and reports its excess, `n0` at
/// `eps = 1/8` and the global `nu_-`.
pub fn projected_basis_example_json(alpha_csv: &str) -> Result<String, String> {
    let tol = ToleranceConfig::default();
    let raw: Vec<f64> = alpha_csv
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("bad coefficient {t:?}"))
        })
        .collect::<Result<_, _>>()?;
    let norm = raw.iter().map(|a| a * a).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err("coefficients are all zero".into());
    }
    let alpha: Vec<framekit::Complex64> = raw
        .iter()
        .map(|a| framekit::Complex64::new(a / norm, 0.0))
        .collect();
    let f = fundamental::build_projected_basis_example(&alpha, &tol).map_err(|e| e.to_string())?;
    let excess = f.excess(&tol).map_err(|e| e.to_string())?.excess;
    let n0 = fundamental::tail_threshold(&f, 0.125, &tol).map_err(|e| e.to_string())?;
    let (nu, argmin) = if f.len() <= NU_TABLE_LIMIT {
        let (v, j) = fundamental::nu_minus_global(&f, &tol).map_err(|e| e.to_string())?;
        (Some(v), Some(j.to_string()))
    } else {
        (None, None)
    };
    Ok(io::to_json(&json!({
        "frame": frame_value(&f),
        "alpha1_sq": alpha[0].norm_sqr(),
        "excess": excess,
        "excess_from_norms": f.excess_from_norms(&tol).map_err(|e| e.to_string())?,
        "n0": n0,
        "nu_minus_global": nu,
        "argmin_j": argmin,
    })))
}

#[wasm_bindgen]
pub fn analyze_frame(frame_file: &str) -> Result<String, JsValue> {
    analyze_frame_json(frame_file).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn nu_table(frame_file: &str) -> Result<String, JsValue> {
    nu_table_json(frame_file).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn projected_basis_example(alpha_csv: &str) -> Result<String, JsValue> {
    projected_basis_example_json(alpha_csv).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1E2E1: &str = r#"{"dim":2,"field":"real","vectors":[[1,0],[0,1],[1,0]]}"#;

    #[test]
    fn analyze_reports_parseval_dual() {
        let v: Value = serde_json::from_str(&analyze_frame_json(E1E2E1).unwrap()).unwrap();
        assert_eq!(v["excess"], 1);
        assert_eq!(v["parseval_dual_exists"], true);
        let dual = &v["parseval_dual"]["dual"]["vectors"];
        assert!((dual[0][0].as_f64().unwrap() - 1.0).abs() < 1e-10);
        assert!(dual[2][0].as_f64().unwrap().abs() < 1e-10);
    }

    #[test]
    fn analyze_non_frame() {
        let v: Value = serde_json::from_str(
            &analyze_frame_json(r#"{"dim":2,"field":"real","vectors":[[1,0]]}"#).unwrap(),
        )
        .unwrap();
        assert_eq!(v["is_frame"], false);
    }

    #[test]
    fn nu_table_covers_all_subsets() {
        let h = 0.5f64.sqrt();
        let text =
            format!(r#"{{"dim":2,"field":"real","vectors":[[{h},0],[0,{h}],[{h},0],[0,{h}]]}}"#);
        let v: Value = serde_json::from_str(&nu_table_json(&text).unwrap()).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 16);
        assert!((v["nu_minus_global"].as_f64().unwrap() - 0.75).abs() < 1e-12);
        assert!(nu_table_json(E1E2E1).is_err());
    }

    #[test]
    fn projected_basis_example_values() {
        let v: Value =
            serde_json::from_str(&projected_basis_example_json("0.95, 0.15, 0.15, 0.1").unwrap())
                .unwrap();
        assert_eq!(v["excess"], 1);
        assert_eq!(v["n0"], 1);
        assert!(v["nu_minus_global"].as_f64().unwrap() >= 7.0 / 8.0);
        assert!(projected_basis_example_json("1, 0").is_err());
        assert!(projected_basis_example_json("a").is_err());
    }
}
