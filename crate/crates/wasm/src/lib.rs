//! Browser bindings for interactive region exploration.
//!
//! Three operations back the demo page in `www/`:
//!
//! * [`classify_channel`] — interference regime of a `(g12, g21)` pair;
//! * [`compute_scenario`] — full scenario report (JSON in, JSON out),
//!   the same machinery behind the CLI `compute` subcommand;
//! * [`variant_region`] — one parametric scheme region for live sliders
//!   (cancellation coefficients, power splits, the private DPC
//!   coefficient), returned as a vertex list.
//!
//! All messages are JSON strings to keep the JS side free of generated
//! glue types.

use icstate::channel::{classify, StdChannel};
use icstate::gaussian::{
    mixed_region, strong_region, weak_region, MixedVariant, StrongVariant, WeakVariant,
};
use icstate::scenario::{run_scenario, ScenarioConfig};
use wasm_bindgen::prelude::*;

fn err_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

fn channel_from(g12: f64, g21: f64, p1: f64, p2: f64, k: f64) -> Result<StdChannel, String> {
    StdChannel::new(g12, g21, 1.0, 1.0, p1, p2, k).map_err(|e| e.to_string())
}

/// Interference regime name for a unit-noise channel.
#[wasm_bindgen]
pub fn classify_channel(g12: f64, g21: f64, p1: f64, p2: f64, k: f64) -> String {
    match channel_from(g12, g21, p1, p2, k) {
        Ok(ch) => classify(&ch).to_string(),
        Err(e) => err_json(&e),
    }
}

/// Run a scenario config (same JSON schema as the CLI) and return the
/// report as JSON.
#[wasm_bindgen]
pub fn compute_scenario(config_json: &str) -> String {
    let cfg = match ScenarioConfig::from_json(config_json) {
        Ok(c) => c,
        Err(e) => return err_json(&e.to_string()),
    };
    match run_scenario(&cfg) {
        Ok(report) => serde_json::to_string(&report).unwrap_or_else(|e| err_json(&e.to_string())),
        Err(e) => err_json(&e.to_string()),
    }
}

/// One parametric region at explicit slider values.
///
/// `variant` is one of `s3`, `s4`, `m3`, `m4`, `w3`, `w4`, `w5`, `w6`;
/// `a` is the free private DPC coefficient (mixed family) and `b1`/`b2`
/// are the power-split fractions (weak flexible family); the cancellation
/// variants read `g1`/`g2`. Returns `{"vertices": [[r1, r2], ...]}`.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn variant_region(
    variant: &str,
    g12: f64,
    g21: f64,
    p1: f64,
    p2: f64,
    k: f64,
    g1: f64,
    g2: f64,
    a: f64,
    b1: f64,
    b2: f64,
) -> String {
    let ch = match channel_from(g12, g21, p1, p2, k) {
        Ok(ch) => ch,
        Err(e) => return err_json(&e),
    };
    let region = match variant {
        "s3" => strong_region(
            &ch,
            StrongVariant::S3 {
                gamma1: g1,
                gamma2: g2,
            },
        ),
        "s4" => strong_region(
            &ch,
            StrongVariant::S4 {
                gamma1: g1,
                gamma2: g2,
            },
        ),
        "m3" => mixed_region(
            &ch,
            MixedVariant::M3 {
                alpha22: a,
                gamma1: g1,
                gamma2: g2,
            },
        ),
        "m4" => mixed_region(
            &ch,
            MixedVariant::M4 {
                gamma1: g1,
                gamma2: g2,
            },
        ),
        "w3" => weak_region(
            &ch,
            WeakVariant::W3 {
                gamma1: g1,
                gamma2: g2,
            },
        ),
        "w4" => weak_region(
            &ch,
            WeakVariant::W4 {
                gamma1: g1,
                gamma2: g2,
            },
        ),
        "w5" => weak_region(
            &ch,
            WeakVariant::W5 {
                beta1: b1,
                beta2: b2,
            },
        ),
        "w6" => weak_region(
            &ch,
            WeakVariant::W6 {
                beta1: b1,
                beta2: b2,
            },
        ),
        other => return err_json(&format!("unknown variant '{other}'")),
    };
    match region {
        Ok(r) => {
            let vertices: Vec<[f64; 2]> = r.vertices().iter().map(|v| [v.r1, v.r2]).collect();
            serde_json::json!({ "vertices": vertices }).to_string()
        }
        Err(e) => err_json(&e.to_string()),
    }
}
