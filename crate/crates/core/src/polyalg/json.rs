use serde_json::{json, Value};

use super::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, rational_to_string, Field, FieldElement, Rational};

fn schema(location: &str, message: impl Into<String>) -> Error {
    Error::Schema { location: location.to_string(), message: message.into() }
}

fn rational_from_json(v: &Value, location: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| schema(location, e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(schema(location, format!("expected a rational string, found {v}"))),
    }
}

/// Basis coordinates as rational strings, or a bare string over Q.
pub fn elem_to_json(a: &FieldElement) -> Value {
    if a.field().is_rational() {
        return json!(rational_to_string(&a.coords()[0]));
    }
    Value::Array(a.coords().iter().map(|c| json!(rational_to_string(c))).collect())
}

pub fn elem_from_json(field: &Field, v: &Value, location: &str) -> Result<FieldElement> {
    match v {
        Value::Array(items) => {
            if items.len() > field.degree() {
                return Err(schema(
                    location,
                    format!("{} coordinates for a degree {} field", items.len(), field.degree()),
                ));
            }
            let coords = items
                .iter()
                .enumerate()
                .map(|(i, x)| rational_from_json(x, &format!("{location}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(FieldElement::new(field, coords))
        }
        _ => Ok(FieldElement::from_rational(field, rational_from_json(v, location)?)),
    }
}

pub fn poly_to_json(p: &Polynomial<FieldElement>) -> Value {
    Value::Array(p.coeffs().iter().map(elem_to_json).collect())
}

pub fn poly_from_json(field: &Field, v: &Value, location: &str) -> Result<Polynomial<FieldElement>> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(location, "expected an array of coefficients"))?;
    let coeffs = items
        .iter()
        .enumerate()
        .map(|(i, c)| elem_from_json(field, c, &format!("{location}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(field.clone(), coeffs))
}

pub fn ratfun_to_json(r: &RationalFunction<FieldElement>) -> Value {
    json!({ "num": poly_to_json(r.num()), "den": poly_to_json(r.den()) })
}

pub fn ratfun_from_json(field: &Field, v: &Value, location: &str) -> Result<RationalFunction<FieldElement>> {
    let num = v.get("num").ok_or_else(|| schema(location, "missing \"num\""))?;
    let num = poly_from_json(field, num, &format!("{location}.num"))?;
    let den = match v.get("den") {
        Some(d) => poly_from_json(field, d, &format!("{location}.den"))?,
        None => Polynomial::one(field),
    };
    RationalFunction::new(num, den).map_err(|e| schema(location, e.to_string()))
}
