//! Browser bindings: Young diagram corners and GL-radicals, a grid of Schur
//! dimensions over super spaces, and closures in the GL-spectrum.
//!
//! Every export takes plain strings or numbers and returns a JSON string, so
//! the page needs no bundler.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use tca::functor::{schur_dim, SuperSpace};
use tca::spectrum::{closure, gl_radical, minimal_gl_primes, GlIdeal, GlPrime, SpectrumPoint};
use tca::Partition;

/// Parses `;`-separated partitions such as `4,2; 3,3` into their GL-ideal sum.
fn parse_sum(text: &str) -> Result<(Vec<Partition>, GlIdeal), String> {
    let parts = text
        .split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Partition>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if parts.is_empty() {
        return Err("enter at least one partition".into());
    }
    let ideal = GlIdeal::sum(parts.clone());
    Ok((parts, ideal))
}

fn diagram_json(l: &Partition) -> Value {
    json!({
        "rows": l.parts(),
        "corners": l.corners().unwrap_or_default(),
    })
}

fn point_json(p: SpectrumPoint) -> Value {
    match p {
        SpectrumPoint::Point(r, s) => json!([r, s]),
        SpectrumPoint::Infinity => json!("inf"),
    }
}

/// Diagrams of the summands, the radical of their sum, and its minimal primes.
pub fn radical_report(text: &str) -> Result<Value, String> {
    let (parts, ideal) = parse_sum(text)?;
    let radical = gl_radical(&ideal);
    let radical_shape = match &radical {
        GlIdeal::Generated(l) => Some(diagram_json(l)),
        _ => None,
    };
    let primes = minimal_gl_primes(&ideal).map_err(|e| e.to_string())?;
    let primes: Vec<Value> = primes
        .iter()
        .map(|p| match *p {
            GlPrime::Rect { rows, cols } => json!({"rows": rows, "cols": cols, "point": point_json(p.point())}),
            GlPrime::Zero => json!({"zero": true, "point": point_json(p.point())}),
        })
        .collect();
    Ok(json!({
        "summands": parts.iter().map(diagram_json).collect::<Vec<_>>(),
        "ideal": ideal.to_string(),
        "radical": radical.to_string(),
        "radicalShape": radical_shape,
        "primes": primes,
    }))
}

/// `dim S_λ(Q^(r|s))` for `0 ≤ r, s ≤ max`, rows indexed by `r`.
pub fn schur_grid(lambda: &str, max: usize) -> Result<Value, String> {
    let l: Partition = lambda.parse().map_err(|e: tca::Error| e.to_string())?;
    if max > 6 {
        return Err("grid size is capped at 6".into());
    }
    let grid: Vec<Vec<u64>> =
        (0..=max).map(|r| (0..=max).map(|s| schur_dim(&l, SuperSpace::new(r, s))).collect()).collect();
    Ok(json!({"lambda": l.parts(), "transpose": l.transpose().parts(), "grid": grid}))
}

/// Points below `(r, s)` in the GL-spectrum, each with its rectangular prime.
pub fn closure_report(r: usize, s: usize) -> Result<Value, String> {
    if r > 8 || s > 8 {
        return Err("coordinates are capped at 8".into());
    }
    let top = SpectrumPoint::Point(r, s);
    let points = closure(top).points().unwrap_or_default();
    let points: Vec<Value> = points
        .into_iter()
        .map(|p| match p {
            SpectrumPoint::Point(a, b) => json!({"point": [a, b], "prime": format!("I({},{})", a + 1, b + 1)}),
            SpectrumPoint::Infinity => json!({"point": "inf", "prime": "0"}),
        })
        .collect();
    Ok(json!({"top": [r, s], "prime": format!("I({},{})", r + 1, s + 1), "points": points}))
}

fn to_js(result: Result<Value, String>) -> Result<String, JsValue> {
    result.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn radical(text: &str) -> Result<String, JsValue> {
    to_js(radical_report(text))
}

#[wasm_bindgen]
pub fn schur_dimensions(lambda: &str, max: usize) -> Result<String, JsValue> {
    to_js(schur_grid(lambda, max))
}

#[wasm_bindgen]
pub fn spectrum_closure(r: usize, s: usize) -> Result<String, JsValue> {
    to_js(closure_report(r, s))
}
