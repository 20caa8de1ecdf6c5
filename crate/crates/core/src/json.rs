//! JSON encodings of the public value types.
//!
//! A real algebraic number is an integer when it is one and fits in `i64`,
//! a string `"p/q"` (or a big integer string) when otherwise rational, and
//! `{"poly": [...], "lo": "p/q", "hi": "p/q", "approx": "..."}` when
//! irrational. `poly` lists integer coefficients as strings, constant term
//! first.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::circle::{CircleElem, Factorization, LinearPrime, ObstructionCertificate};
use crate::error::{Error, Result};
use crate::realalg::{ComplexAlg, RealAlg};
use crate::ring::{rat_from_str, rat_to_pq, Rat};
use crate::upoly::{UPoly, ZPoly};

const APPROX_DIGITS: u32 = 20;

pub fn rat_to_json(r: &Rat) -> Value {
    if r.is_integer() {
        if let Some(n) = r.numer().to_i64() {
            return json!(n);
        }
        return json!(r.numer().to_string());
    }
    json!(rat_to_pq(r))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|n| Rat::from_integer(n.into()))
            .ok_or_else(|| Error::Json(format!("expected an integer, found {n}"))),
        Value::String(s) => rat_from_str(s).ok_or_else(|| Error::Json(format!("invalid rational {s:?}"))),
        _ => Err(Error::Json(format!("expected a rational, found {v}"))),
    }
}

pub fn realalg_to_json(a: &RealAlg) -> Value {
    if let Some(r) = a.to_rat() {
        return rat_to_json(&r);
    }
    json!({
        "poly": a.poly().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "lo": rat_to_pq(a.lo()),
        "hi": rat_to_pq(a.hi()),
        "approx": a.to_decimal(APPROX_DIGITS),
    })
}

pub fn realalg_from_json(v: &Value) -> Result<RealAlg> {
    let Value::Object(m) = v else {
        return rat_from_json(v).map(RealAlg::from_rat);
    };
    let coeffs = field(m, "poly")?
        .as_array()
        .ok_or_else(|| Error::Json("\"poly\" must be an array".into()))?
        .iter()
        .map(|c| match c {
            Value::String(s) => s.parse::<BigInt>().map_err(|_| Error::Json(format!("invalid integer {s:?}"))),
            Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| Error::Json(format!("invalid integer {n}"))),
            _ => Err(Error::Json(format!("invalid coefficient {c}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let lo = rat_from_json(field(m, "lo")?)?;
    let hi = rat_from_json(field(m, "hi")?)?;
    RealAlg::from_poly_interval(&ZPoly::new(coeffs), lo, hi)
}

pub fn complex_to_json(z: &ComplexAlg) -> Value {
    json!({ "re": realalg_to_json(&z.re), "im": realalg_to_json(&z.im) })
}

pub fn complex_from_json(v: &Value) -> Result<ComplexAlg> {
    let m = object(v)?;
    Ok(ComplexAlg::new(realalg_from_json(field(m, "re")?)?, realalg_from_json(field(m, "im")?)?))
}

fn upoly_to_json(p: &UPoly<RealAlg>) -> Value {
    Value::Array(p.coeffs().iter().map(realalg_to_json).collect())
}

fn upoly_from_json(v: &Value) -> Result<UPoly<RealAlg>> {
    let cs = v.as_array().ok_or_else(|| Error::Json(format!("expected a coefficient array, found {v}")))?;
    Ok(UPoly::new(cs.iter().map(realalg_from_json).collect::<Result<_>>()?))
}

/// `{"p": [...], "q": [...]}` for `p + qX`, coefficients constant term first.
pub fn circle_to_json(u: &CircleElem) -> Value {
    json!({ "p": upoly_to_json(u.p()), "q": upoly_to_json(u.q()) })
}

pub fn circle_from_json(v: &Value) -> Result<CircleElem> {
    let m = object(v)?;
    Ok(CircleElem::new(upoly_from_json(field(m, "p")?)?, upoly_from_json(field(m, "q")?)?))
}

pub fn prime_to_json(p: &LinearPrime) -> Value {
    json!({ "a": realalg_to_json(p.a()), "b": realalg_to_json(p.b()), "c": realalg_to_json(p.c()) })
}

/// Reads `a, b, c` and normalizes them.
pub fn prime_from_json(v: &Value) -> Result<LinearPrime> {
    let m = object(v)?;
    let get = |k: &str| field(m, k).and_then(realalg_from_json);
    let (_, p) = LinearPrime::normalize(get("a")?, get("b")?, get("c")?)?;
    Ok(p)
}

pub fn factorization_to_json(f: &Factorization) -> Value {
    let factors: Vec<Value> = f
        .factors
        .iter()
        .map(|(p, k)| {
            let mut v = prime_to_json(p);
            v["mult"] = json!(k);
            v
        })
        .collect();
    json!({ "unit": realalg_to_json(&f.unit), "factors": factors })
}

pub fn certificate_to_json(c: &ObstructionCertificate) -> Value {
    json!({
        "prime": prime_to_json(&c.prime),
        "witness": circle_to_json(&c.witness),
        "phi_witness": complex_to_json(&c.phi_witness),
        "phi_im_nonzero": c.phi_im_nonzero,
    })
}

pub fn certificate_from_json(v: &Value) -> Result<ObstructionCertificate> {
    let m = object(v)?;
    Ok(ObstructionCertificate {
        prime: prime_from_json(field(m, "prime")?)?,
        witness: circle_from_json(field(m, "witness")?)?,
        phi_witness: complex_from_json(field(m, "phi_witness")?)?,
        phi_im_nonzero: field(m, "phi_im_nonzero")?
            .as_bool()
            .ok_or_else(|| Error::Json("\"phi_im_nonzero\" must be a boolean".into()))?,
    })
}

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Json(format!("expected an object, found {v}")))
}

fn field<'a>(m: &'a Map<String, Value>, k: &str) -> Result<&'a Value> {
    m.get(k).ok_or_else(|| Error::Json(format!("missing field {k:?}")))
}
