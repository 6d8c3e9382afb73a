//! Browser bindings for `bezout-subres`.
//!
//! Each operation has a plain Rust form returning a JSON string so it can be
//! tested natively; the `#[wasm_bindgen]` wrappers only forward to it.

use bezout_subres::{
    assemble, enumerate_deltas, finish, parse_poly, scale_exponent, DeltaIndex, Formula, PMatrix,
    PolySystem, Rat,
};
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct ErrorReply {
    error: String,
}

#[derive(Serialize)]
struct FormulaReply {
    formula: &'static str,
    rows: usize,
    cols: usize,
    matrix: Vec<Vec<String>>,
    exponent: i64,
    s: String,
}

#[derive(Serialize)]
struct ComputeReply {
    degrees: Vec<usize>,
    delta: Vec<usize>,
    formulas: Vec<FormulaReply>,
    agree: bool,
}

#[derive(Serialize)]
struct SweepRow {
    delta: Vec<usize>,
    s: Vec<String>,
    agree: bool,
}

#[derive(Serialize)]
struct SweepReply {
    degrees: Vec<usize>,
    rows: Vec<SweepRow>,
    agreeing: usize,
}

#[derive(Serialize)]
struct SampleReply {
    s: String,
    xs: Vec<f64>,
    ys: Vec<f64>,
}

fn to_json<T: Serialize>(value: &std::result::Result<T, String>) -> String {
    match value {
        Ok(v) => serde_json::to_string(v),
        Err(e) => serde_json::to_string(&ErrorReply { error: e.clone() }),
    }
    .expect("serializable")
}

/// One polynomial per non-empty line.
fn parse_system(text: &str) -> std::result::Result<PolySystem, String> {
    let polys = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| parse_poly(l).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    PolySystem::new(polys).map_err(|e| e.to_string())
}

fn parse_delta(text: &str, system: &PolySystem) -> std::result::Result<DeltaIndex, String> {
    let values = text
        .split(',')
        .map(|v| v.trim().parse::<usize>().map_err(|_| format!("bad delta entry '{}'", v.trim())))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    DeltaIndex::for_system(values, system).map_err(|e| e.to_string())
}

fn cells(m: &PMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect()
}

fn compute_reply(polys: &str, delta: &str) -> std::result::Result<ComputeReply, String> {
    let system = parse_system(polys)?;
    let delta = parse_delta(delta, &system)?;
    let mut formulas = Vec::new();
    for formula in Formula::ALL {
        let m = assemble(&system, &delta, formula).map_err(|e| e.to_string())?;
        let s = finish(&system, &delta, formula, &m).map_err(|e| e.to_string())?;
        formulas.push(FormulaReply {
            formula: formula.name(),
            rows: m.rows(),
            cols: m.cols(),
            matrix: cells(&m),
            exponent: scale_exponent(system.degrees(), &delta, formula),
            s: s.to_string(),
        });
    }
    let agree = formulas.windows(2).all(|w| w[0].s == w[1].s);
    Ok(ComputeReply {
        degrees: system.degrees().to_vec(),
        delta: delta.values().to_vec(),
        formulas,
        agree,
    })
}

/// All three matrices and `S_δ` for a system (one polynomial per line).
pub fn compute_json(polys: &str, delta: &str) -> String {
    to_json(&compute_reply(polys, delta))
}

fn sweep_reply(polys: &str) -> std::result::Result<SweepReply, String> {
    let system = parse_system(polys)?;
    let mut rows = Vec::new();
    for values in enumerate_deltas(system.t(), system.d0()) {
        let delta = DeltaIndex::for_system(values, &system).map_err(|e| e.to_string())?;
        let s = Formula::ALL
            .iter()
            .map(|&f| {
                bezout_subres::subresultant(&system, &delta, f)
                    .map(|p| p.to_string())
                    .map_err(|e| e.to_string())
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let agree = s.windows(2).all(|w| w[0] == w[1]);
        rows.push(SweepRow { delta: delta.values().to_vec(), s, agree });
    }
    let agreeing = rows.iter().filter(|r| r.agree).count();
    Ok(SweepReply { degrees: system.degrees().to_vec(), rows, agreeing })
}

/// `S_δ` under every formula for every nonzero `δ` with `|δ| ≤ d0`.
pub fn sweep_json(polys: &str) -> String {
    to_json(&sweep_reply(polys))
}

fn sample_reply(
    polys: &str,
    delta: &str,
    from: f64,
    to: f64,
    count: usize,
) -> std::result::Result<SampleReply, String> {
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err("sample range must be finite with from < to".into());
    }
    if count < 2 {
        return Err("need at least 2 samples".into());
    }
    let system = parse_system(polys)?;
    let delta = parse_delta(delta, &system)?;
    let s = bezout_subres::subresultant(&system, &delta, Formula::NonhomBezout)
        .map_err(|e| e.to_string())?;
    let coeffs: Vec<f64> = s.coeffs().iter().map(|c: &Rat| c.to_f64().unwrap_or(f64::NAN)).collect();
    let step = (to - from) / (count - 1) as f64;
    let xs: Vec<f64> = (0..count).map(|i| from + step * i as f64).collect();
    let ys = xs.iter().map(|&x| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)).collect();
    Ok(SampleReply { s: s.to_string(), xs, ys })
}

/// `count` evenly spaced samples of `S_δ(x)` on `[from, to]`.
pub fn sample_json(polys: &str, delta: &str, from: f64, to: f64, count: usize) -> String {
    to_json(&sample_reply(polys, delta, from, to, count))
}

#[wasm_bindgen]
pub fn compute(polys: &str, delta: &str) -> String {
    compute_json(polys, delta)
}

#[wasm_bindgen]
pub fn sweep(polys: &str) -> String {
    sweep_json(polys)
}

#[wasm_bindgen]
pub fn sample(polys: &str, delta: &str, from: f64, to: f64, count: usize) -> String {
    sample_json(polys, delta, from, to, count)
}
