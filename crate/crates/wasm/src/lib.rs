//! Browser bindings. Every export returns a JSON string: either the result or
//! `{"error": {"code", "message"}}`.

use azumaya_core::error::Error;
use azumaya_core::frontend::analysis::{ErrorReport, SymbolRequest};
use azumaya_core::tame_symbol::{residue_norm, tame};
use azumaya_core::{analyze as run, parse_poly, parse_ratfunc, AnalysisRequest, BaseFieldMode, Place};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn error_json(e: &Error) -> String {
    serde_json::to_string(&ErrorReport::from(e)).unwrap()
}

fn parse_mode(mode: &str) -> Result<BaseFieldMode, Error> {
    match mode {
        "complex" => Ok(BaseFieldMode::Complex),
        "rational" => Ok(BaseFieldMode::Rational),
        other => Err(Error::Validation(format!("unknown mode {other:?}"))),
    }
}

fn analyze_inner(p: &str, q: &str, symbols: &str, mode: &str) -> Result<String, Error> {
    let mut req = AnalysisRequest::new(p, q);
    req.mode = parse_mode(mode)?;
    for line in symbols.lines().map(str::trim).filter(|l| !l.is_empty()) {
        req.symbols.push(SymbolRequest::parse_flag(line)?);
    }
    req.invariants_only = req.symbols.is_empty();
    Ok(run(&req)?.to_json())
}

/// Full report. `symbols` holds one `slot:expr` per line.
#[wasm_bindgen]
pub fn analyze(p: &str, q: &str, symbols: &str, mode: &str) -> String {
    analyze_inner(p, q, symbols, mode).unwrap_or_else(|e| error_json(&e))
}

/// Singular fibers and invariants only.
#[wasm_bindgen]
pub fn fiber_table(p: &str, q: &str) -> String {
    analyze_inner(p, q, "", "complex").unwrap_or_else(|e| error_json(&e))
}

fn tame_inner(a: &str, b: &str, place: &str) -> Result<String, Error> {
    let a = parse_ratfunc(a)?;
    let b = parse_ratfunc(b)?;
    let v = if place.trim() == "infinity" {
        Place::Infinity
    } else {
        Place::finite(parse_poly(place)?.monic())?
    };
    let r = tame(&a, &b, &v)?;
    let norm = match &v {
        Place::Finite(_) => Some(residue_norm(&r)?.to_string()),
        Place::Infinity => None,
    };
    Ok(json!({
        "place": v.to_string(),
        "residue": r.to_string(),
        "norm": norm,
        "is_one": r.is_one(),
    })
    .to_string())
}

/// Tame symbol `{a, b}` at a place given by a squarefree polynomial or `infinity`.
#[wasm_bindgen]
pub fn tame_symbol(a: &str, b: &str, place: &str) -> String {
    tame_inner(a, b, place).unwrap_or_else(|e| error_json(&e))
}
