//! Browser bindings for the zkosc library.
//!
//! Three operations back the demo page in `www/`: the three-route energy
//! spectrum, the structure-function table, and a finite-difference vs
//! algebraic comparison for the built-in superpotential families. Inputs and
//! outputs are JSON strings so the page stays plain JavaScript; the logic
//! lives in [`ops`] so it also runs (and is tested) on native targets.

pub mod ops;

use wasm_bindgen::prelude::*;

/// Energies `E_0..E_n_max` by all three routes.
#[wasm_bindgen]
pub fn spectrum_report(params_json: &str, n_max: u32) -> Result<String, JsValue> {
    ops::spectrum_report(params_json, n_max).map_err(|e| JsValue::from_str(&e))
}

/// Structure-function staircase `G(n)` by both routes, plus the remainder
/// sequence and a suggested positivity constant.
#[wasm_bindgen]
pub fn structure_table(params_json: &str, n_max: u32) -> Result<String, JsValue> {
    ops::structure_table(params_json, n_max).map_err(|e| JsValue::from_str(&e))
}

/// Potential curves and numeric-vs-algebraic levels for one built-in family
/// (`harmonic`, `pt1`, `pt2`).
#[wasm_bindgen]
pub fn schrodinger_panel(
    family: &str,
    parameter: f64,
    x_min: f64,
    x_max: f64,
    points: u32,
    levels: u32,
) -> Result<String, JsValue> {
    ops::schrodinger_panel(family, parameter, x_min, x_max, points, levels).map_err(|e| JsValue::from_str(&e))
}
