// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Input parsing. A state argument is a file path, inline JSON, or the
//! compact form `family:key=value,...`.
//!
//! Matrix files look like `{"dims": [2, 2], "matrix": [[[re, im], ...], ...]}`;
//! entries may also be plain reals and the rows may be flattened.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use nptcert_core::cv::{
    beam_splitter, coherent, fock, single_photon_entangled, squeezed_vacuum, thermal, two_mode_squeezed, CvState,
    FockSettings,
};
use nptcert_core::hermitian::{validate_hermitian, DimensionProfile, HermitianOperator};
use nptcert_core::zoo::StateSpec;
use nptcert_core::{Complex64, ComplexMatrix};
use serde_json::{Map, Value};

/// Reads `arg` as a file when it names one, otherwise as inline text.
pub fn load_text(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        return fs::read_to_string(path).with_context(|| format!("cannot read {arg}"));
    }
    Ok(arg.to_string())
}

fn parse_scalar(raw: &str) -> Value {
    if let Ok(x) = raw.parse::<u64>() {
        return Value::from(x);
    }
    if let Ok(x) = raw.parse::<f64>() {
        return Value::from(x);
    }
    if raw.contains('x') && raw.split('x').all(|d| d.parse::<u64>().is_ok()) {
        return Value::Array(raw.split('x').map(|d| Value::from(d.parse::<u64>().unwrap())).collect());
    }
    Value::String(raw.to_string())
}

/// `family:k=v,k=v` into a JSON object. `dims=2x3` becomes `[2, 3]`.
pub fn parse_compact(text: &str) -> Result<Value> {
    let (family, rest) = text.split_once(':').unwrap_or((text, ""));
    let family = family.trim();
    if family.is_empty() || !family.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        bail!("malformed state spec {text:?}");
    }
    let mut map = Map::new();
    map.insert("family".into(), Value::String(family.to_string()));
    for kv in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = kv.split_once('=').ok_or_else(|| anyhow!("expected key=value, got {kv:?}"))?;
        map.insert(k.trim().to_string(), parse_scalar(v.trim()));
    }
    Ok(Value::Object(map))
}

/// Parses inline or file text into a JSON value.
pub fn parse_value(arg: &str) -> Result<Value> {
    let text = load_text(arg)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        serde_json::from_str(trimmed).context("parse error: invalid JSON input")
    } else {
        parse_compact(trimmed)
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.get(key)
}

fn f64_field(v: &Value, key: &str) -> Result<Option<f64>> {
    match field(v, key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => x.as_f64().map(Some).ok_or_else(|| anyhow!("field {key:?} must be a number")),
    }
}

fn req_f64(v: &Value, key: &str) -> Result<f64> {
    f64_field(v, key)?.ok_or_else(|| anyhow!("missing numeric field {key:?}"))
}

fn u64_field(v: &Value, key: &str) -> Result<Option<u64>> {
    match field(v, key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => x.as_u64().map(Some).ok_or_else(|| anyhow!("field {key:?} must be a non-negative integer")),
    }
}

fn dims_field(v: &Value) -> Result<Vec<usize>> {
    match field(v, "dims").or_else(|| field(v, "dim")) {
        Some(Value::Array(items)) => items
            .iter()
            .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| anyhow!("dims must be integers")))
            .collect(),
        Some(Value::Number(n)) => Ok(vec![n.as_u64().ok_or_else(|| anyhow!("dims must be integers"))? as usize]),
        _ => bail!("missing field \"dims\""),
    }
}

fn family(v: &Value) -> Result<&str> {
    field(v, "family").and_then(Value::as_str).ok_or_else(|| anyhow!("missing string field \"family\""))
}

/// Builds a finite-dimensional [`StateSpec`] from its JSON form.
pub fn state_spec(v: &Value, default_seed: u64) -> Result<StateSpec> {
    let seed = u64_field(v, "seed")?.unwrap_or(default_seed);
    Ok(match family(v)? {
        "ghz_mixed" | "ghz" => StateSpec::GhzMixed { p: req_f64(v, "p")? },
        "bell" => StateSpec::Bell,
        "werner" => StateSpec::Werner { p: req_f64(v, "p")? },
        "single_photon_entangled" => StateSpec::SinglePhotonEntangled,
        "random_density" => StateSpec::RandomDensity { dims: dims_field(v)?, seed },
        "random_separable" => StateSpec::RandomSeparable {
            dims: dims_field(v)?,
            terms: u64_field(v, "terms")?.unwrap_or(4) as usize,
            seed,
        },
        "product" => {
            let parts =
                field(v, "parts").and_then(Value::as_array).ok_or_else(|| anyhow!("product needs \"parts\""))?;
            StateSpec::Product(parts.iter().map(|p| state_spec(p, default_seed)).collect::<Result<_>>()?)
        }
        other => bail!("unknown state family {other:?}"),
    })
}

fn entry(v: &Value) -> Result<Complex64> {
    match v {
        Value::Number(n) => Ok(Complex64::new(n.as_f64().unwrap_or(f64::NAN), 0.0)),
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or_else(|| anyhow!("matrix entries must be numbers"))?;
            let im = pair[1].as_f64().ok_or_else(|| anyhow!("matrix entries must be numbers"))?;
            Ok(Complex64::new(re, im))
        }
        _ => bail!("matrix entry must be a number or [re, im]"),
    }
}

/// Reads `{"dims": [...], "matrix": ...}`.
pub fn matrix_from_json(v: &Value, tol: f64) -> Result<HermitianOperator> {
    let dims = dims_field(v)?;
    let profile = DimensionProfile::new(dims)?;
    let n = profile.total();
    let raw = field(v, "matrix").and_then(Value::as_array).ok_or_else(|| anyhow!("missing array field \"matrix\""))?;
    let nested =
        raw.len() != n * n && raw.len() == n && raw.iter().all(|r| r.as_array().is_some_and(|row| row.len() == n));
    let flat: Vec<&Value> =
        if nested { raw.iter().flat_map(|r| r.as_array().unwrap().iter()).collect() } else { raw.iter().collect() };
    if flat.len() != n * n {
        bail!("matrix has {} entries, expected {} for dims {:?}", flat.len(), n * n, profile.dims());
    }
    let data = flat.into_iter().map(entry).collect::<Result<Vec<_>>>()?;
    let m = ComplexMatrix::from_row_major(n, n, data)?;
    Ok(validate_hermitian(m, profile, tol)?)
}

/// Serializes a matrix in the nested `[[re, im], ...]` row form.
pub fn matrix_to_json(op: &HermitianOperator) -> Value {
    let m = op.matrix();
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array(m.row(r).iter().map(|z| serde_json::json!([z.re, z.im])).collect()))
        .collect();
    serde_json::json!({ "dims": op.profile().dims(), "matrix": rows })
}

/// A finite-dimensional state: either an explicit matrix or a family spec.
pub fn load_state(arg: &str, seed: u64, tol: f64) -> Result<(HermitianOperator, Value)> {
    let v = parse_value(arg)?;
    let rho = if field(&v, "matrix").is_some() { matrix_from_json(&v, tol)? } else { state_spec(&v, seed)?.build()? };
    Ok((rho, v))
}

/// True for families that describe a single mode.
pub fn is_single_mode_family(v: &Value) -> bool {
    matches!(family(v), Ok("coherent" | "fock" | "squeezed_vacuum" | "thermal"))
}

fn single_mode_state(v: &Value, settings: &FockSettings) -> Result<CvState> {
    Ok(match family(v)? {
        "coherent" => {
            let re = f64_field(v, "alpha")?.or(f64_field(v, "alpha_re")?).unwrap_or(0.0);
            let im = f64_field(v, "alpha_im")?.unwrap_or(0.0);
            coherent(Complex64::new(re, im), settings)?
        }
        "fock" => fock(u64_field(v, "n")?.ok_or_else(|| anyhow!("fock needs integer \"n\""))? as usize, settings)?,
        "squeezed_vacuum" => squeezed_vacuum(req_f64(v, "r")?, f64_field(v, "phi")?.unwrap_or(0.0), settings)?,
        "thermal" => thermal(
            f64_field(v, "nbar")?.or(f64_field(v, "n")?).ok_or_else(|| anyhow!("thermal needs \"nbar\""))?,
            settings,
        )?,
        other => bail!("{other:?} is not a single-mode family"),
    })
}

/// A CV state. Single-mode families are returned as-is; use
/// [`two_mode_state`] for the two-mode embedding.
pub fn cv_state(v: &Value, settings: &FockSettings) -> Result<CvState> {
    let settings = FockSettings {
        cutoff: u64_field(v, "cutoff")?.map_or(settings.cutoff, |c| c as usize),
        allow_unreliable: settings.allow_unreliable,
    };
    if is_single_mode_family(v) {
        return single_mode_state(v, &settings);
    }
    Ok(match family(v)? {
        "vacuum" => fock(0, &settings)?.with_vacuum()?,
        "two_mode_squeezed" => two_mode_squeezed(req_f64(v, "r")?, &settings)?,
        "single_photon_entangled" => single_photon_entangled(&settings)?,
        "product" => {
            let parts =
                field(v, "parts").and_then(Value::as_array).ok_or_else(|| anyhow!("product needs \"parts\""))?;
            if parts.len() != 2 {
                bail!("CV product needs exactly two single-mode parts");
            }
            single_mode_state(&parts[0], &settings)?.tensor(&single_mode_state(&parts[1], &settings)?)?
        }
        "beam_splitter" => {
            let input = field(v, "input").ok_or_else(|| anyhow!("beam_splitter needs \"input\""))?;
            let theta = f64_field(v, "theta")?.unwrap_or(std::f64::consts::FRAC_PI_4);
            beam_splitter(&two_mode_state(input, &settings)?, theta)?.state
        }
        other => bail!("unknown CV family {other:?}"),
    })
}

/// Like [`cv_state`], with single-mode inputs tensored with vacuum.
pub fn two_mode_state(v: &Value, settings: &FockSettings) -> Result<CvState> {
    let s = cv_state(v, settings)?;
    if s.space().modes() == 1 {
        Ok(s.with_vacuum()?)
    } else {
        Ok(s)
    }
}
