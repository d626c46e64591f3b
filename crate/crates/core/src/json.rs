//! JSON encodings of the library's objects.
//!
//! A field is `"Q"` or an odd prime `p`. Scalars are written as
//! `{"num": "-3", "den": "4"}` over `Q` and `{"res": "5", "p": "7"}` over
//! `F_p`, with decimal strings so that large rationals survive. On input a
//! scalar may also be a plain integer or a string `"a/b"`, interpreted in the
//! document's field. Polynomials are coefficient arrays, lowest degree first;
//! matrices are arrays of rows.

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::binary_form::BinaryForm;
use crate::correspondence::{Frame, Triple};
use crate::descent::{HyperCurve, MumfordDivisor};
use crate::error::{Error, Result};
use crate::etale::{AlgElement, EtaleAlgebra, SquareClassWitness};
use crate::field::{FieldDescriptor, Scalar};
use crate::gl2::GL2Elem;
use crate::matrix::Matrix;
use crate::pencil::Pencil;
use crate::poly::UniPoly;
use crate::quasisplit::Subspace;

pub fn field_to_json(f: FieldDescriptor) -> Value {
    match f {
        FieldDescriptor::Rationals => json!("Q"),
        FieldDescriptor::Prime(p) => json!(p),
    }
}

pub fn field_from_json(v: &Value) -> Result<FieldDescriptor> {
    match v {
        Value::String(s) => parse_field(s),
        Value::Number(n) => n
            .as_u64()
            .ok_or_else(|| Error::InvalidField(n.to_string()))
            .and_then(FieldDescriptor::prime),
        other => Err(Error::InvalidField(other.to_string())),
    }
}

/// `"Q"` or a prime written in decimal.
pub fn parse_field(s: &str) -> Result<FieldDescriptor> {
    if s == "Q" {
        return Ok(FieldDescriptor::Rationals);
    }
    let p: u64 = s
        .parse()
        .map_err(|_| Error::InvalidField(format!("{s:?} is neither Q nor a prime")))?;
    FieldDescriptor::prime(p)
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Mod { value, p } => json!({ "res": value.to_string(), "p": p.to_string() }),
        Scalar::Rat(r) => json!({ "num": r.numer().to_string(), "den": r.denom().to_string() }),
    }
}

fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer literal")),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad integer {s:?}"))),
        other => Err(Error::Invalid(format!("bad integer {other}"))),
    }
}

pub fn scalar_from_json(field: FieldDescriptor, v: &Value) -> Result<Scalar> {
    match v {
        Value::Object(o) if o.contains_key("res") => {
            let p = o
                .get("p")
                .ok_or_else(|| Error::Invalid(format!("residue without modulus: {v}")))?;
            let p = field_from_json(&Value::String(big_from_json(p)?.to_string()))?;
            if p != field {
                return Err(Error::FieldMismatch(p.to_string(), field.to_string()));
            }
            Ok(field.from_bigint(&big_from_json(&o["res"])?))
        }
        Value::Object(o) if o.contains_key("num") => {
            let den = match o.get("den") {
                Some(d) => big_from_json(d)?,
                None => BigInt::from(1),
            };
            field.from_fraction(&big_from_json(&o["num"])?, &den)
        }
        Value::Number(_) => field.from_fraction(&big_from_json(v)?, &BigInt::from(1)),
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let parse = |t: &str| {
                t.parse::<BigInt>()
                    .map_err(|_| Error::Invalid(format!("bad scalar {s:?}")))
            };
            field.from_fraction(&parse(num)?, &parse(den)?)
        }
        other => Err(Error::Invalid(format!("bad scalar {other}"))),
    }
}

fn scalars_from_json(field: FieldDescriptor, v: &[Value]) -> Result<Vec<Scalar>> {
    v.iter().map(|x| scalar_from_json(field, x)).collect()
}

pub fn poly_to_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_to_json).collect())
}

pub fn poly_from_json(field: FieldDescriptor, v: &[Value]) -> Result<UniPoly> {
    Ok(UniPoly::new(field, scalars_from_json(field, v)?))
}

pub fn element_to_json(x: &AlgElement) -> Value {
    Value::Array(x.coeffs().iter().map(scalar_to_json).collect())
}

/// Elements may be given with fewer than `n` coefficients; they are reduced
/// modulo `f` either way.
pub fn element_from_json(l: &EtaleAlgebra, v: &[Value]) -> Result<AlgElement> {
    Ok(l.reduce(&poly_from_json(l.field(), v)?))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(field: FieldDescriptor, rows: &[Vec<Value>]) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| scalars_from_json(field, r))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

pub fn gl2_to_json(g: &GL2Elem) -> Value {
    json!([
        [scalar_to_json(&g.a), scalar_to_json(&g.b)],
        [scalar_to_json(&g.c), scalar_to_json(&g.d)]
    ])
}

pub fn binary_form_to_json(f: &BinaryForm) -> Value {
    Value::Array(f.coeffs().iter().map(scalar_to_json).collect())
}

pub fn pencil_to_json(p: &Pencil) -> Value {
    json!({
        "kind": "pencil",
        "field": field_to_json(p.field()),
        "A": matrix_to_json(p.first()),
        "B": matrix_to_json(p.second()),
    })
}

pub fn triple_to_json(t: &Triple) -> Value {
    json!({
        "kind": "triple",
        "field": field_to_json(t.field()),
        "modulus": poly_to_json(t.modulus()),
        "alpha": element_to_json(t.alpha()),
    })
}

pub fn curve_to_json(c: &HyperCurve, alpha: Option<&AlgElement>) -> Value {
    let mut v = json!({
        "kind": "curve",
        "field": field_to_json(c.field()),
        "f": poly_to_json(c.f()),
        "genus": c.genus(),
    });
    if let Some(a) = alpha {
        v["alpha"] = element_to_json(a);
    }
    v
}

pub fn frame_to_json(f: &Frame) -> Value {
    json!({
        "g2": gl2_to_json(&f.g2),
        "gamma": matrix_to_json(&f.gamma),
    })
}

pub fn witness_to_json(w: &SquareClassWitness) -> Value {
    json!({
        "c": scalar_to_json(w.c()),
        "gamma": element_to_json(w.gamma()),
    })
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    Value::Array(
        s.basis()
            .iter()
            .map(|v| Value::Array(v.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub fn divisor_to_json(d: &MumfordDivisor) -> Value {
    json!({ "g": poly_to_json(&d.g), "h": poly_to_json(&d.h) })
}

#[derive(Deserialize)]
struct PencilDoc {
    #[serde(default)]
    field: Value,
    #[serde(rename = "A")]
    a: Vec<Vec<Value>>,
    #[serde(rename = "B")]
    b: Vec<Vec<Value>>,
}

#[derive(Deserialize)]
struct TripleDoc {
    #[serde(default)]
    field: Value,
    modulus: Vec<Value>,
    alpha: Vec<Value>,
}

#[derive(Deserialize)]
struct CurveDoc {
    #[serde(default)]
    field: Value,
    f: Vec<Value>,
    #[serde(default)]
    alpha: Option<Vec<Value>>,
}

/// A parsed input document.
#[derive(Clone, Debug)]
pub enum Document {
    Pencil(Pencil),
    Triple(Triple),
    Curve {
        curve: HyperCurve,
        alpha: Option<AlgElement>,
    },
}

impl Document {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Document::Pencil(p) => p.field(),
            Document::Triple(t) => t.field(),
            Document::Curve { curve, .. } => curve.field(),
        }
    }
}

fn decode<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Invalid(e.to_string()))
}

/// Reads a pencil, triple or curve, recognized by `"kind"` or by its keys.
/// `field_override` fills in or must agree with the document's field.
pub fn document_from_json(v: &Value, field_override: Option<FieldDescriptor>) -> Result<Document> {
    let kind = match v.get("kind").and_then(Value::as_str) {
        Some(k) => k.to_string(),
        None if v.get("A").is_some() => "pencil".into(),
        None if v.get("modulus").is_some() => "triple".into(),
        None if v.get("f").is_some() => "curve".into(),
        None => return Err(Error::Invalid("cannot tell the kind of input document".into())),
    };
    let field_of = |raw: &Value| -> Result<FieldDescriptor> {
        let doc_field = if raw.is_null() {
            None
        } else {
            Some(field_from_json(raw)?)
        };
        match (doc_field, field_override) {
            (Some(a), Some(b)) if a != b => Err(Error::FieldMismatch(a.to_string(), b.to_string())),
            (Some(a), _) | (None, Some(a)) => Ok(a),
            (None, None) => Err(Error::InvalidField("no field given".into())),
        }
    };
    match kind.as_str() {
        "pencil" => {
            let d: PencilDoc = decode(v)?;
            let field = field_of(&d.field)?;
            Ok(Document::Pencil(Pencil::new(
                matrix_from_json(field, &d.a)?,
                matrix_from_json(field, &d.b)?,
            )?))
        }
        "triple" => {
            let d: TripleDoc = decode(v)?;
            let field = field_of(&d.field)?;
            let l = EtaleAlgebra::new(poly_from_json(field, &d.modulus)?)?;
            let alpha = element_from_json(&l, &d.alpha)?;
            Ok(Document::Triple(Triple::new(l, alpha)?))
        }
        "curve" => {
            let d: CurveDoc = decode(v)?;
            let field = field_of(&d.field)?;
            let curve = HyperCurve::new(poly_from_json(field, &d.f)?)?;
            let alpha = d
                .alpha
                .map(|a| element_from_json(curve.algebra(), &a))
                .transpose()?;
            Ok(Document::Curve { curve, alpha })
        }
        other => Err(Error::Invalid(format!("unknown kind {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_roundtrip() {
        let q = FieldDescriptor::Rationals;
        for s in ["3/4", "-7", "123456789012345678901234567890"] {
            let v = scalar_from_json(q, &json!(s)).unwrap();
            assert_eq!(scalar_from_json(q, &scalar_to_json(&v)).unwrap(), v);
        }
        assert_eq!(scalar_to_json(&q.from_i64(-7)), json!({"num": "-7", "den": "1"}));
        let r = scalar_from_json(q, &json!({"num": "3", "den": "-6"})).unwrap();
        assert_eq!(scalar_to_json(&r), json!({"num": "-1", "den": "2"}));
        let f = FieldDescriptor::prime(7).unwrap();
        assert_eq!(scalar_from_json(f, &json!(-1)).unwrap(), f.from_i64(6));
        assert_eq!(scalar_from_json(f, &json!("1/2")).unwrap(), f.from_i64(4));
        assert!(scalar_from_json(f, &json!("1/7")).is_err());
        assert!(scalar_from_json(f, &json!(1.5)).is_err());
        assert_eq!(scalar_to_json(&f.from_i64(-1)), json!({"res": "6", "p": "7"}));
        assert_eq!(scalar_from_json(f, &json!({"res": "13", "p": "7"})).unwrap(), f.from_i64(6));
        assert!(matches!(
            scalar_from_json(f, &json!({"res": "1", "p": "5"})),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn documents() {
        let v = json!({"field": 7, "modulus": [0, -1, 0, 1], "alpha": [1]});
        match document_from_json(&v, None).unwrap() {
            Document::Triple(t) => {
                assert_eq!(
                    triple_to_json(&t)["modulus"],
                    poly_to_json(&UniPoly::from_i64(t.field(), &[0, 6, 0, 1]))
                );
                assert_eq!(t.alpha().coeffs().len(), 3);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            document_from_json(&v, Some(FieldDescriptor::prime(5).unwrap())),
            Err(Error::FieldMismatch(..))
        ));
        let c = json!({"f": [0, -1, 0, 1]});
        assert!(document_from_json(&c, None).is_err());
        assert!(matches!(
            document_from_json(&c, Some(FieldDescriptor::Rationals)).unwrap(),
            Document::Curve { alpha: None, .. }
        ));
    }
}
