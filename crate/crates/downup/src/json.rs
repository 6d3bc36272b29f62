//! JSON encodings of the library types.
//!
//! Rationals are strings `"p/q"` (or `"p"`). An element of `Q` is a single
//! such string; an element of a larger field is the list of its coordinates
//! in the power basis.

use downup_core::classify::{IsoVerdict, SemisimplicityVerdict, SimplesOfDim, VermaStructure};
use downup_core::exactfield::{parse_rational, FieldElement, NumberField, Rational};
use downup_core::ext_oracle::{ProbeReport, SimpleTag};
use downup_core::linalg::Matrix;
use downup_core::repmod::{FDModule, ModuleLabel};
use downup_core::skewalgebra::{parse_scalar, AlgebraElement, BivarPoly, Params};
use serde_json::{json, Map, Value};

/// A decoding failure, with the path of the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeError(pub String);

impl std::fmt::Display for DecodeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Decoded<T> = Result<T, DecodeError>;

fn bad<T>(what: impl Into<String>) -> Decoded<T> {
    Err(DecodeError(what.into()))
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rational_from_json(v: &Value) -> Decoded<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_or_else(|| bad(format!("not a rational: {s:?}")), Ok),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => bad(format!("expected a rational string, got {v}")),
    }
}

pub fn field_to_json(f: &NumberField) -> Value {
    json!({
        "minpoly": f.minpoly().coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
        "name": f.name(),
    })
}

pub fn field_from_json(v: &Value) -> Decoded<NumberField> {
    let coeffs = v
        .get("minpoly")
        .and_then(Value::as_array)
        .map_or_else(|| bad("field: missing \"minpoly\" list"), Ok)?
        .iter()
        .map(rational_from_json)
        .collect::<Decoded<Vec<_>>>()?;
    let name = v.get("name").and_then(Value::as_str).unwrap_or("w");
    NumberField::new(&coeffs, name).map_err(|e| DecodeError(format!("field: {e}")))
}

pub fn element_to_json(e: &FieldElement) -> Value {
    match e.to_rational() {
        Some(q) if e.field().is_rationals() => rational_to_json(&q),
        _ => Value::Array(e.coeffs().iter().map(rational_to_json).collect()),
    }
}

/// Accepts a coordinate list, a rational string, or any scalar expression in
/// the field generator such as `"1 + w"`.
pub fn element_from_json(field: &NumberField, v: &Value) -> Decoded<FieldElement> {
    match v {
        Value::Array(items) => {
            if items.len() != field.degree() {
                return bad(format!("expected {} coordinates, got {}", field.degree(), items.len()));
            }
            let coeffs = items.iter().map(rational_from_json).collect::<Decoded<Vec<_>>>()?;
            Ok(field.element(&coeffs))
        }
        Value::String(s) => match parse_rational(s) {
            Some(q) => Ok(field.from_rational(q)),
            None => parse_scalar(field, s).map_err(|e| DecodeError(format!("{s:?}: {e}"))),
        },
        _ => Ok(field.from_rational(rational_from_json(v)?)),
    }
}

pub fn params_to_json(p: &Params) -> Value {
    json!({
        "field": field_to_json(p.field()),
        "alpha": element_to_json(p.alpha()),
        "beta": element_to_json(p.beta()),
        "gamma": element_to_json(p.gamma()),
    })
}

pub fn params_from_json(v: &Value) -> Decoded<Params> {
    let field = match v.get("field") {
        Some(f) => field_from_json(f)?,
        None => NumberField::rationals(),
    };
    let get = |k: &str| match v.get(k) {
        Some(x) => element_from_json(&field, x).map_err(|e| DecodeError(format!("params.{k}: {e}"))),
        None => bad(format!("params: missing \"{k}\"")),
    };
    Params::new(&get("alpha")?, &get("beta")?, &get("gamma")?).map_err(|e| DecodeError(format!("params: {e}")))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(element_to_json).collect())).collect())
}

pub fn matrix_from_json(field: &NumberField, v: &Value, n: usize) -> Decoded<Matrix> {
    let rows = v.as_array().map_or_else(|| bad("matrix: expected a list of rows"), Ok)?;
    if rows.len() != n {
        return bad(format!("matrix: expected {n} rows, got {}", rows.len()));
    }
    let mut out = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let r = r.as_array().map_or_else(|| bad(format!("matrix: row {i} is not a list")), Ok)?;
        if r.len() != n {
            return bad(format!("matrix: row {i} has {} entries, expected {n}", r.len()));
        }
        out.push(r.iter().map(|x| element_from_json(field, x)).collect::<Decoded<Vec<_>>>()?);
    }
    Matrix::from_rows(field, out).map_err(|e| DecodeError(format!("matrix: {e}")))
}

pub fn module_to_json(m: &FDModule) -> Value {
    json!({
        "params": params_to_json(m.params()),
        "dim": m.dim(),
        "D": matrix_to_json(m.d()),
        "U": matrix_to_json(m.u()),
        "label": m.label().as_str(),
    })
}

pub fn module_from_json(v: &Value) -> Decoded<FDModule> {
    let params = params_from_json(v.get("params").map_or_else(|| bad("module: missing \"params\""), Ok)?)?;
    let n = v.get("dim").and_then(Value::as_u64).map_or_else(|| bad("module: missing \"dim\""), Ok)? as usize;
    let field = params.field();
    let d = matrix_from_json(field, v.get("D").unwrap_or(&Value::Null), n).map_err(|e| DecodeError(format!("D: {e}")))?;
    let u = matrix_from_json(field, v.get("U").unwrap_or(&Value::Null), n).map_err(|e| DecodeError(format!("U: {e}")))?;
    let label = match v.get("label").and_then(Value::as_str) {
        Some(s) => ModuleLabel::parse(s).map_or_else(|| bad(format!("module: unknown label {s:?}")), Ok)?,
        None => ModuleLabel::Raw,
    };
    FDModule::new(&params, d, u, label).map_err(|e| DecodeError(format!("module: {e}")))
}

pub fn bivar_to_json(p: &BivarPoly) -> Value {
    let mut m = Map::new();
    for ((i, j), c) in p.terms() {
        m.insert(format!("{i},{j}"), element_to_json(c));
    }
    Value::Object(m)
}

pub fn bivar_from_json(field: &NumberField, v: &Value) -> Decoded<BivarPoly> {
    let obj = v.as_object().map_or_else(|| bad("coeff: expected an object"), Ok)?;
    let mut terms = Vec::new();
    for (k, c) in obj {
        let (i, j) = k.split_once(',').map_or_else(|| bad(format!("coeff: bad key {k:?}")), Ok)?;
        let parse = |s: &str| s.trim().parse::<u32>().map_err(|_| DecodeError(format!("coeff: bad key {k:?}")));
        terms.push((parse(i)?, parse(j)?, element_from_json(field, c)?));
    }
    Ok(BivarPoly::from_terms(field, terms))
}

pub fn algebra_element_to_json(e: &AlgebraElement) -> Value {
    Value::Array(
        e.normal_form()
            .iter()
            .map(|(n, p)| json!({ "degree": n, "coeff": bivar_to_json(p) }))
            .collect(),
    )
}

pub fn algebra_element_from_json(params: &Params, v: &Value) -> Decoded<AlgebraElement> {
    let items = v.as_array().map_or_else(|| bad("element: expected a list"), Ok)?;
    let mut parts = Vec::new();
    for item in items {
        let n = item.get("degree").and_then(Value::as_i64).map_or_else(|| bad("element: missing \"degree\""), Ok)?;
        parts.push((n, bivar_from_json(params.field(), item.get("coeff").unwrap_or(&Value::Null))?));
    }
    AlgebraElement::from_normal_form(params, &parts).map_err(|e| DecodeError(format!("element: {e}")))
}

pub fn simples_to_json(s: &SimplesOfDim) -> Value {
    match s {
        SimplesOfDim::Finite(v) => json!({ "weights": v.iter().map(element_to_json).collect::<Vec<_>>() }),
        SimplesOfDim::AllExcept(v) => json!({ "all_except": v.iter().map(element_to_json).collect::<Vec<_>>() }),
    }
}

pub fn iso_to_json(v: &IsoVerdict) -> Value {
    json!({ "isomorphic": v.answer, "branch": v.branch.as_str() })
}

pub fn semisimplicity_to_json(v: &SemisimplicityVerdict) -> Value {
    json!({
        "answer": v.answer.as_str(),
        "witness": v.witness.map(|(m, n)| json!([m, n])),
        "bound": v.bound,
    })
}

pub fn verma_structure_to_json(s: &VermaStructure) -> Value {
    json!({ "zeros": s.zeros, "length": s.length, "bound": s.bound })
}

fn tag_to_json(t: &SimpleTag) -> Value {
    json!({ "lambda": element_to_json(&t.lambda), "dim": t.dim })
}

pub fn probe_to_json(r: &ProbeReport) -> Value {
    json!({
        "pairs": r.pairs.iter().map(|p| json!({
            "from": tag_to_json(&p.from),
            "to": tag_to_json(&p.to),
            "ext1": p.ext1,
        })).collect::<Vec<_>>(),
        "dim_bound": r.dim_bound,
        "skipped_dims": r.skipped_dims,
        "verdict": r.verdict.as_ref().map(semisimplicity_to_json),
        "consistent": r.consistent,
    })
}
