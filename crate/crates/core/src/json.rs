//! JSON encoding of scalars, matrices, tuples and phase points.
//!
//! A matrix is `{"re": [[..],[..]], "im": [[..],[..]]}` in row-major order.
//! Exact scalars are written as `"p/q"` strings; floats as shortest round-trip
//! numbers. Readers accept numbers or rational strings in either mode.

use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lattice::PhasePoint;
use crate::lie::{SL2CElement, SU2Element, Su2AlgebraElement};
use crate::matrix::{CMat2, Mat2};
use crate::scalar::{parse_rational, Scalar};
use crate::tolerance::Tolerance;

fn part_to_json<S: Scalar>(text: String, value: f64) -> Value {
    if S::EXACT {
        Value::String(text)
    } else {
        json!(value)
    }
}

pub fn scalar_to_json<S: Scalar>(s: &S) -> Value {
    let (re, im) = s.to_json_string();
    let c = s.to_c64();
    json!({ "re": part_to_json::<S>(re, c.re), "im": part_to_json::<S>(im, c.im) })
}

pub fn matrix_to_json<S: Scalar>(m: &Mat2<S>) -> Value {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for row in &m.m {
        let mut re_row = Vec::new();
        let mut im_row = Vec::new();
        for x in row {
            let (r, i) = x.to_json_string();
            let c = x.to_c64();
            re_row.push(part_to_json::<S>(r, c.re));
            im_row.push(part_to_json::<S>(i, c.im));
        }
        re.push(Value::Array(re_row));
        im.push(Value::Array(im_row));
    }
    json!({ "re": re, "im": im })
}

fn format_err(location: &str, message: impl Into<String>) -> Error {
    Error::Format {
        location: location.to_string(),
        message: message.into(),
    }
}

fn rational_from_json(v: &Value, location: &str) -> Result<BigRational> {
    match v {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| format_err(location, format!("bad rational {s:?}")))
        }
        Value::Number(n) => {
            let text = n.to_string();
            if let Some(r) = parse_rational(&text) {
                return Ok(r);
            }
            n.as_f64()
                .and_then(BigRational::from_float)
                .ok_or_else(|| format_err(location, format!("bad number {text}")))
        }
        _ => Err(format_err(location, "expected a number or rational string")),
    }
}

fn f64_from_json(v: &Value, location: &str) -> Result<f64> {
    match v {
        Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| format_err(location, "number out of range")),
        _ => {
            use num_traits::ToPrimitive;
            rational_from_json(v, location)?
                .to_f64()
                .ok_or_else(|| format_err(location, "number out of range"))
        }
    }
}

fn scalar_part<S: Scalar>(v: &Value, location: &str) -> Result<(BigRational, f64)> {
    if S::EXACT {
        Ok((rational_from_json(v, location)?, 0.0))
    } else {
        Ok((BigRational::from_integer(0.into()), f64_from_json(v, location)?))
    }
}

fn make_scalar<S: Scalar>(re: (BigRational, f64), im: (BigRational, f64)) -> S {
    if S::EXACT {
        S::from_rationals(&re.0, &im.0)
    } else {
        S::from_parts(re.1, im.1).expect("float backend accepts all values")
    }
}

fn grid<'a>(v: &'a Value, key: &str, location: &str) -> Result<Vec<Vec<&'a Value>>> {
    let rows = v
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| format_err(location, format!("missing \"{key}\" array")))?;
    if rows.len() != 2 {
        return Err(format_err(location, format!("\"{key}\" must have 2 rows")));
    }
    rows.iter()
        .map(|row| match row.as_array() {
            Some(r) if r.len() == 2 => Ok(r.iter().collect()),
            _ => Err(format_err(location, format!("\"{key}\" rows must have 2 entries"))),
        })
        .collect()
}

/// Reads a matrix object. A missing `"im"` is taken as zero.
pub fn matrix_from_json<S: Scalar>(v: &Value, location: &str) -> Result<Mat2<S>> {
    if !v.is_object() {
        return Err(format_err(location, "expected a matrix object"));
    }
    let re = grid(v, "re", location)?;
    let zero = json!(0);
    let im = if v.get("im").is_some() {
        grid(v, "im", location)?
    } else {
        vec![vec![&zero, &zero], vec![&zero, &zero]]
    };
    let entry = |r: usize, c: usize| -> Result<S> {
        let loc = format!("{location}[{r}][{c}]");
        Ok(make_scalar::<S>(
            scalar_part::<S>(re[r][c], &loc)?,
            scalar_part::<S>(im[r][c], &loc)?,
        ))
    };
    Ok(Mat2::new(entry(0, 0)?, entry(0, 1)?, entry(1, 0)?, entry(1, 1)?))
}

fn matrix_array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    if let Some(arr) = v.as_array() {
        return Ok(arr);
    }
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| format_err("$", format!("expected an array or an object with \"{key}\"")))
}

/// Reads a tuple given as an array of matrices or as `{"tuple": [...]}`.
pub fn tuple_from_json<S: Scalar>(v: &Value, tol: &Tolerance) -> Result<Vec<SL2CElement<S>>> {
    matrix_array(v, "tuple")?
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let loc = format!("$.tuple[{i}]");
            let m = matrix_from_json::<S>(m, &loc)?;
            SL2CElement::new(m, tol).map_err(|e| format_err(&loc, e.to_string()))
        })
        .collect()
}

pub fn tuple_to_json<S: Scalar>(tuple: &[SL2CElement<S>]) -> Value {
    Value::Array(tuple.iter().map(|g| matrix_to_json(g.matrix())).collect())
}

pub fn su2_list_from_json(v: &Value, key: &str, tol: &Tolerance) -> Result<Vec<SU2Element>> {
    matrix_array(v, key)?
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let loc = format!("$.{key}[{i}]");
            SU2Element::from_matrix(matrix_from_json::<Complex64>(m, &loc)?, tol)
                .map_err(|e| format_err(&loc, e.to_string()))
        })
        .collect()
}

pub fn su2_list_to_json(list: &[SU2Element]) -> Value {
    Value::Array(list.iter().map(|g| matrix_to_json(g.matrix())).collect())
}

/// Reads `{"a": [...], "A": [...]}` with anti-Hermitian traceless `A` entries.
pub fn phase_point_from_json(v: &Value, tol: &Tolerance) -> Result<PhasePoint> {
    let a = su2_list_from_json(v, "a", tol)?;
    let alg_json = v
        .get("A")
        .and_then(Value::as_array)
        .ok_or_else(|| format_err("$", "phase point needs an \"A\" array"))?;
    let alg = alg_json
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let loc = format!("$.A[{i}]");
            let m: CMat2 = matrix_from_json(m, &loc)?;
            Su2AlgebraElement::from_matrix(&m, tol).map_err(|e| format_err(&loc, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    PhasePoint::new(a, alg).map_err(|e| format_err("$", e.to_string()))
}

pub fn phase_point_to_json(p: &PhasePoint) -> Value {
    let mut obj = Map::new();
    obj.insert("a".into(), su2_list_to_json(&p.a));
    obj.insert(
        "A".into(),
        Value::Array(p.alg.iter().map(|x| matrix_to_json(&x.matrix())).collect()),
    );
    Value::Object(obj)
}
