//! JSON documents exchanged by the command-line interface: exact scalars as
//! strings, matrices, variety points, bidiagonal specs, plans and
//! certificates. All output is deterministic (object keys are sorted).

use crate::blocks::BidiagonalSpec;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::normal_form::{BlockSpec, Certificate, NormalForm, NormalFormPlan};
use crate::ring::Ring;
use crate::scalar::{GaussRat, Radical, Rat};
use crate::variety::PointP;
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

/// A matrix in any of the three scalar rings, as read from a JSON document.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Rat(Matrix<Rat>),
    Gauss(Matrix<GaussRat>),
    Radical(Matrix<Radical>),
}

impl AnyMatrix {
    pub fn rows(&self) -> usize {
        match self {
            AnyMatrix::Rat(m) => m.rows(),
            AnyMatrix::Gauss(m) => m.rows(),
            AnyMatrix::Radical(m) => m.rows(),
        }
    }

    /// View over Q(i), when the entries allow it.
    pub fn to_gauss(&self) -> Result<Matrix<GaussRat>> {
        match self {
            AnyMatrix::Rat(m) => Ok(m.to_gauss()),
            AnyMatrix::Gauss(m) => Ok(m.clone()),
            AnyMatrix::Radical(m) => m.as_gauss().ok_or_else(|| {
                Error::UnsupportedRing("matrix has genuine radical entries".into())
            }),
        }
    }

    pub fn to_radical(&self) -> Matrix<Radical> {
        match self {
            AnyMatrix::Rat(m) => m.to_gauss().to_radical(),
            AnyMatrix::Gauss(m) => m.to_radical(),
            AnyMatrix::Radical(m) => m.clone(),
        }
    }
}

pub fn rat_to_value(q: &Rat) -> Value {
    Value::String(q.to_string())
}

pub fn gauss_to_value(z: &GaussRat) -> Value {
    Value::String(z.to_string())
}

pub fn radical_to_value(r: &Radical) -> Value {
    let terms: Vec<Value> = r
        .terms()
        .map(|(rad, c)| {
            json!({
                "re": c.re.to_string(),
                "im": c.im.to_string(),
                "rad": biguint_to_value(rad),
            })
        })
        .collect();
    Value::Array(terms)
}

fn biguint_to_value(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => {
            let s = n.to_string();
            if s.contains('.') {
                return Err(Error::Parse(format!("non-integer literal {s}")));
            }
            s.parse()
        }
        _ => Err(Error::Parse(format!("expected rational scalar, got {v}"))),
    }
}

pub fn gauss_from_value(v: &Value) -> Result<GaussRat> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(_) => Ok(GaussRat::from_rat(rat_from_value(v)?)),
        _ => Err(Error::Parse(format!("expected Gaussian scalar, got {v}"))),
    }
}

pub fn radical_from_value(v: &Value) -> Result<Radical> {
    // plain scalars are accepted as the rational part
    match v {
        Value::Array(terms) => {
            let mut acc = Radical::zero();
            for t in terms {
                let obj = t
                    .as_object()
                    .ok_or_else(|| Error::Parse(format!("radical term must be an object, got {t}")))?;
                let re = rat_from_value(
                    obj.get("re").ok_or_else(|| Error::Parse("radical term missing 're'".into()))?,
                )?;
                let im = rat_from_value(
                    obj.get("im").ok_or_else(|| Error::Parse("radical term missing 'im'".into()))?,
                )?;
                let rad = match obj.get("rad") {
                    Some(Value::Number(n)) => n
                        .as_u64()
                        .ok_or_else(|| Error::Parse(format!("bad radicand {n}")))?,
                    Some(Value::String(s)) => s
                        .parse::<u64>()
                        .map_err(|e| Error::Parse(format!("bad radicand {s:?}: {e}")))?,
                    _ => return Err(Error::Parse("radical term missing 'rad'".into())),
                };
                acc = acc.add(&Radical::term(GaussRat::new(re, im), rad));
            }
            Ok(acc)
        }
        _ => Ok(Radical::from_gauss(gauss_from_value(v)?)),
    }
}

/// {"rows": n, "cols": n, "ring": "rat"|"gauss"|"radical", "entries": [[..]]}
pub fn matrix_to_value(m: &AnyMatrix) -> Value {
    let (ring, rows, cols, entries): (&str, usize, usize, Vec<Value>) = match m {
        AnyMatrix::Rat(m) => (
            "rat",
            m.rows(),
            m.cols(),
            rows_of(m.rows(), m.cols(), |i, j| rat_to_value(m.get(i, j))),
        ),
        AnyMatrix::Gauss(m) => (
            "gauss",
            m.rows(),
            m.cols(),
            rows_of(m.rows(), m.cols(), |i, j| gauss_to_value(m.get(i, j))),
        ),
        AnyMatrix::Radical(m) => (
            "radical",
            m.rows(),
            m.cols(),
            rows_of(m.rows(), m.cols(), |i, j| radical_to_value(m.get(i, j))),
        ),
    };
    json!({"rows": rows, "cols": cols, "ring": ring, "entries": entries})
}

fn rows_of(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Value) -> Vec<Value> {
    (0..rows)
        .map(|i| Value::Array((0..cols).map(|j| f(i, j)).collect()))
        .collect()
}

pub fn matrix_from_value(v: &Value) -> Result<AnyMatrix> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("matrix document must be an object".into()))?;
    let rows = field_usize(obj, "rows")?;
    let cols = field_usize(obj, "cols")?;
    let ring = obj
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("matrix document missing 'ring'".into()))?;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("matrix document missing 'entries'".into()))?;
    if entries.len() != rows {
        return Err(Error::Parse(format!("expected {rows} rows, got {}", entries.len())));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for row in entries {
        let row = row.as_array().ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!("expected {cols} columns, got {}", row.len())));
        }
        flat.extend(row.iter().cloned());
    }
    match ring {
        "rat" => {
            let entries: Result<Vec<Rat>> = flat.iter().map(rat_from_value).collect();
            Ok(AnyMatrix::Rat(Matrix::new(rows, cols, entries?)?))
        }
        "gauss" => {
            let entries: Result<Vec<GaussRat>> = flat.iter().map(gauss_from_value).collect();
            Ok(AnyMatrix::Gauss(Matrix::new(rows, cols, entries?)?))
        }
        "radical" => {
            let entries: Result<Vec<Radical>> = flat.iter().map(radical_from_value).collect();
            Ok(AnyMatrix::Radical(Matrix::new(rows, cols, entries?)?))
        }
        other => Err(Error::Parse(format!("unknown ring {other:?}"))),
    }
}

fn field_usize(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| Error::Parse(format!("missing or invalid '{key}'")))
}

/// {"s": s, "coords": ["a/b+c/d*i", ...]}
pub fn point_to_value(p: &PointP) -> Value {
    json!({
        "s": p.s(),
        "coords": p.coords().iter().map(gauss_to_value).collect::<Vec<_>>(),
    })
}

pub fn point_from_value(v: &Value) -> Result<PointP> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("point document must be an object".into()))?;
    let coords = obj
        .get("coords")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("point document missing 'coords'".into()))?;
    let coords: Result<Vec<GaussRat>> = coords.iter().map(gauss_from_value).collect();
    let p = PointP::new(coords?)?;
    if let Some(s) = obj.get("s").and_then(Value::as_u64) {
        if s as usize != p.s() {
            return Err(Error::Parse(format!(
                "declared s = {s} does not match {} coordinates",
                p.coords().len()
            )));
        }
    }
    Ok(p)
}

/// {"superdiagonal": [radical scalar, ...]}
pub fn bidiagonal_spec_to_value(spec: &BidiagonalSpec) -> Value {
    json!({
        "superdiagonal": spec.superdiagonal.iter().map(radical_to_value).collect::<Vec<_>>(),
    })
}

pub fn bidiagonal_spec_from_value(v: &Value) -> Result<BidiagonalSpec> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("spec document must be an object".into()))?;
    let entries = obj
        .get("superdiagonal")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("spec document missing 'superdiagonal'".into()))?;
    let entries: Result<Vec<Radical>> = entries.iter().map(radical_from_value).collect();
    Ok(BidiagonalSpec::new(entries?))
}

pub fn plan_to_value(plan: &NormalFormPlan) -> Value {
    let blocks: Vec<Value> = plan
        .blocks
        .iter()
        .map(|b| match b {
            BlockSpec::PBlock { lambda, size } => {
                json!({"kind": "p", "size": size, "lambda": gauss_to_value(lambda)})
            }
            BlockSpec::QBlock { size } => json!({"kind": "q", "size": size}),
            BlockSpec::RBlock { size } => json!({"kind": "r", "size": size}),
        })
        .collect();
    json!({"blocks": blocks})
}

pub fn certificate_to_value(cert: &Certificate) -> Value {
    let eigen: Vec<Value> = cert
        .eigen
        .iter()
        .map(|e| {
            json!({
                "eigenvalue": gauss_to_value(&e.eigenvalue),
                "input_ranks": e.input_ranks,
                "normal_ranks": e.normal_ranks,
            })
        })
        .collect();
    json!({"eigen": eigen, "matches": cert.matches})
}

pub fn normal_form_to_value(nf: &NormalForm) -> Value {
    json!({
        "plan": plan_to_value(&nf.plan),
        "matrix": matrix_to_value(&AnyMatrix::Radical(nf.matrix.clone())),
        "certificate": certificate_to_value(&nf.certificate),
    })
}
