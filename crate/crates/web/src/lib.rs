//! Browser demo. Each export takes plain numbers or strings and returns a
//! JSON string; failures come back as `{"error": "..."}`.

use legendre_gf::identities::{check_params, run, verify_all_ids, RunParams};
use legendre_gf::modular::{w_of_tau, Tau};
use legendre_gf::sequences::u_values;
use legendre_gf::table1::RowId;
use legendre_gf::{FixedReal, IdentityId, Rational};
use num_bigint::BigInt;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Radicands are sampled on this grid so that `τ = i√r` stays exact.
const R_DEN: u64 = 100_000;
const MAX_SAMPLES: u32 = 2_000;
const MAX_ORDER: u32 = 80;
const MAX_TERMS: u32 = 2_000;

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    FixedReal::from_rational(&Rational::new(num.clone(), den.clone()), 20).to_f64()
}

/// `w(τ)` for `τ = i√r` with `r` on a grid over `[r_min, r_max]`, plus
/// the tabulated rows with their exact `w`.
#[wasm_bindgen]
pub fn w_curve(r_min: f64, r_max: f64, samples: u32, digits: u32) -> String {
    respond(w_curve_value(r_min, r_max, samples, digits))
}

fn w_curve_value(r_min: f64, r_max: f64, samples: u32, digits: u32) -> Result<Value, String> {
    let lowest = 1.0 / R_DEN as f64;
    if !(r_min.is_finite() && r_max.is_finite()) || r_min < lowest || r_max <= r_min {
        return Err(format!("need {lowest} ≤ r_min < r_max"));
    }
    if !(2..=MAX_SAMPLES).contains(&samples) || !(10..=60).contains(&digits) {
        return Err(format!("need 2 ≤ samples ≤ {MAX_SAMPLES} and 10 ≤ digits ≤ 60"));
    }
    let points: Vec<Value> = (0..samples)
        .map(|i| {
            let r = r_min + (r_max - r_min) * i as f64 / (samples - 1) as f64;
            let num = ((r * R_DEN as f64).round() as u64).max(1);
            let tau = Tau::new(num, R_DEN).expect("positive");
            json!([num as f64 / R_DEN as f64, w_of_tau(&tau, digits).to_f64()])
        })
        .collect();
    let rows: Vec<Value> = RowId::PARAMETRISED
        .iter()
        .map(|row| {
            let data = row.row();
            let (n, d) = data.tau.expect("parametrised").radicand();
            let w = data.w.as_ref().expect("parametrised");
            json!({ "id": row.to_string(), "r": n as f64 / d as f64, "w": w.to_fixed(20).to_f64(), "exact": w.to_string() })
        })
        .collect();
    Ok(json!({ "points": points, "rows": rows, "bound": 1.0 / 27.0 }))
}

/// Run one identity check, e.g. `main1` at order 30.
#[wasm_bindgen]
pub fn check_identity(id: &str, order: u32, digits: u32) -> String {
    respond(check_identity_value(id, order, digits))
}

fn check_identity_value(id: &str, order: u32, digits: u32) -> Result<Value, String> {
    let id: IdentityId = id.parse().map_err(|e| format!("{e}"))?;
    if order > MAX_ORDER {
        return Err(format!("order is capped at {MAX_ORDER} in the browser"));
    }
    let params = RunParams { order: order as usize, digits, ..RunParams::default() };
    check_params(id, &params).map_err(|e| e.to_string())?;
    let report = run(id, &params).map_err(|e| e.to_string())?;
    serde_json::to_value(report).map_err(|e| e.to_string())
}

/// The ids accepted by [`check_identity`].
#[wasm_bindgen]
pub fn identity_ids() -> String {
    let mut ids: Vec<String> = verify_all_ids().iter().map(|id| id.to_string()).collect();
    ids.extend(RowId::PARAMETRISED.iter().map(|r| IdentityId::EvalAtRow(*r).to_string()));
    json!(ids).to_string()
}

/// `u_n` for `n < count`: decimal length, `u_n/u_{n−1}` and `u_n^{1/n}`.
/// Both ratios tend to 27.
#[wasm_bindgen]
pub fn u_growth(count: u32) -> String {
    respond(u_growth_value(count))
}

fn u_growth_value(count: u32) -> Result<Value, String> {
    if !(2..=MAX_TERMS).contains(&count) {
        return Err(format!("need 2 ≤ count ≤ {MAX_TERMS}"));
    }
    let u = u_values(count as usize - 1);
    let rows: Vec<Value> = u
        .iter()
        .enumerate()
        .map(|(n, un)| {
            let digits = un.to_string().len();
            let ratio = (n > 0).then(|| ratio_f64(un, &u[n - 1]));
            let root = (n > 0).then(|| 10f64.powf(log10_big(un) / n as f64));
            json!({ "n": n, "digits": digits, "ratio": ratio, "root": root })
        })
        .collect();
    Ok(json!(rows))
}

fn log10_big(x: &BigInt) -> f64 {
    let s = x.to_string();
    let head: f64 = s[..s.len().min(15)].parse().expect("decimal digits");
    head.log10() + (s.len() - s.len().min(15)) as f64
}
