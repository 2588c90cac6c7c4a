//! Browser bindings for three small explorations: the fraction of closed
//! subsets, mean first hitting times across an algorithm family, and the
//! local structure of one function on a hypercube or ring.
//!
//! Every export returns a JSON string. The plain Rust functions behind the
//! exports are public so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use nfl_core::combinatorics::fraction_curve;
use nfl_core::family::{builtin_family, parse_family, FAMILY_SEEDS};
use nfl_core::hitting::mean_first_hit;
use nfl_core::io;
use nfl_core::rational;
use nfl_core::search::SearchAlgorithm;
use nfl_core::space::{CostDomain, Guards, ObjectiveFunction};
use nfl_core::structure::{local_minima, structure_report, AbsoluteDifference, NeighborhoodRelation};

/// Largest |X| the page accepts for hitting times and landscapes.
pub const MAX_POINTS: usize = 10;
/// Largest |X| for the fraction curve.
pub const MAX_CURVE_X: u64 = 64;

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad {what} `{s}`")))
        .collect()
}

/// Rows of the fraction curve for `x = 1..=x_max` and every `y` in `ys`
/// (a comma-separated list).
pub fn curve(x_max: u64, ys: &str) -> Result<Value, String> {
    if !(1..=MAX_CURVE_X).contains(&x_max) {
        return Err(format!("x_max must lie in 1..={MAX_CURVE_X}"));
    }
    let ys: Vec<u64> = parse_list(ys, "y value")?;
    if ys.is_empty() || ys.iter().any(|&y| y == 0 || y > 64) {
        return Err("y values must lie in 1..=64".into());
    }
    let rows = fraction_curve(1..=x_max, &ys);
    Ok(json!({
        "rows": rows.iter().map(io::curve_row).collect::<Vec<_>>(),
    }))
}

/// Mean first hitting time of every family member for `n = 1..=x`.
/// An empty family string selects the built-in family.
pub fn hitting(x: usize, family: &str) -> Result<Value, String> {
    if !(1..=MAX_POINTS).contains(&x) {
        return Err(format!("|X| must lie in 1..={MAX_POINTS}"));
    }
    let family = if family.trim().is_empty() {
        builtin_family(x)
    } else {
        parse_family(family.trim(), &FAMILY_SEEDS).map_err(|e| e.to_string())?
    };
    let guards = Guards::default();
    let mut rows = Vec::new();
    for n in 1..=x {
        let mut means = Vec::new();
        let mut all_match = true;
        for a in &family {
            let report = mean_first_hit(a, x, n, &guards).map_err(|e| e.to_string())?;
            all_match &= report.matches();
            means.push(json!({
                "algorithm": a.name(),
                "mean": rational::format(&report.mean),
                "value": rational_f64(&report.mean),
            }));
        }
        let formula = nfl_core::hitting::hitting_formula(x, n);
        rows.push(json!({
            "n": n,
            "formula": rational::format(&formula),
            "value": rational_f64(&formula),
            "all_match": all_match,
            "means": means,
        }));
    }
    Ok(json!({
        "x": x,
        "family": family.iter().map(|a| a.name()).collect::<Vec<_>>(),
        "rows": rows,
    }))
}

fn rational_f64(r: &rational::Rational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

fn relation(kind: &str, size: usize) -> Result<NeighborhoodRelation, String> {
    match kind {
        "hypercube" if size.is_power_of_two() && size > 1 => {
            NeighborhoodRelation::hypercube(size.trailing_zeros()).map_err(|e| e.to_string())
        }
        "hypercube" => Err(format!("{size} points do not form a hypercube")),
        "ring" => NeighborhoodRelation::ring(size).map_err(|e| e.to_string()),
        other => Err(format!("unknown neighborhood `{other}`")),
    }
}

/// Local structure of the function whose cost indices are `table` (a
/// comma-separated list) on a `hypercube` or `ring` over its points. Costs
/// are the integers `0..num_costs`.
pub fn landscape(table: &str, num_costs: usize, neighborhood: &str) -> Result<Value, String> {
    let table: Vec<usize> = parse_list(table, "cost index")?;
    if table.is_empty() || table.len() > MAX_POINTS {
        return Err(format!("the table needs 1..={MAX_POINTS} entries"));
    }
    let f = ObjectiveFunction::new(table, num_costs).map_err(|e| e.to_string())?;
    let costs = CostDomain::range(num_costs).map_err(|e| e.to_string())?;
    let rel = relation(neighborhood, f.size())?;
    let guards = Guards::default();
    let report = structure_report(&f, &rel, &costs, &AbsoluteDifference, &guards).map_err(|e| e.to_string())?;
    let mut doc = io::structure_report(&f, &report);
    doc["neighborhood"] = json!(rel.name());
    doc["edges"] = json!(rel.edges());
    doc["minima"] = json!(local_minima(&f, &rel));
    doc["orbit_size"] = json!(f.histogram(num_costs).orbit_size().to_string());
    Ok(doc)
}

fn to_js(result: Result<Value, String>) -> Result<String, JsError> {
    result.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = fractionCurve)]
pub fn fraction_curve_js(x_max: u32, ys: &str) -> Result<String, JsError> {
    to_js(curve(x_max as u64, ys))
}

#[wasm_bindgen(js_name = hittingTimes)]
pub fn hitting_times_js(x: u32, family: &str) -> Result<String, JsError> {
    to_js(hitting(x as usize, family))
}

#[wasm_bindgen(js_name = analyzeLandscape)]
pub fn analyze_landscape_js(table: &str, num_costs: u32, neighborhood: &str) -> Result<String, JsError> {
    to_js(landscape(table, num_costs as usize, neighborhood))
}
