//! JSON encodings of core values. Keys are sorted, so equal inputs give
//! byte-identical output.

use kgt_core::jsj::GtExistence;
use kgt_core::{AbelianImage, Classification, Element, SclInterval, TorsionCertificate};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// A JSON number when it fits in an `i64`, otherwise a decimal string.
pub fn int(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn element(e: &Element) -> Value {
    Value::String(e.to_string())
}

pub fn abelian(a: &AbelianImage) -> Value {
    match a {
        AbelianImage::TorusKnot(n) => int(n),
        AbelianImage::Cable(x, y) => json!([int(x), int(y)]),
    }
}

pub fn normal_form(e: &Element) -> Value {
    json!({
        "central": int(e.central()),
        "word": e.word().display_with(e.spec().factor_letters()).to_string(),
        "element": element(e),
    })
}

pub fn certificate(c: &TorsionCertificate) -> Value {
    match c {
        TorsionCertificate::OrderTwo { element: g, conjugator } => json!({
            "status": "order_two",
            "order": 2,
            "element": element(g),
            "conjugator": element(conjugator),
        }),
        TorsionCertificate::OrderFound { order, conjugators } => json!({
            "status": "order_found",
            "order": order,
            "conjugators": conjugators.iter().map(element).collect::<Vec<_>>(),
        }),
        TorsionCertificate::NotFoundWithinBounds { max_order, radius } => json!({
            "status": "not_found_within_bounds",
            "max_order": max_order,
            "radius": radius,
        }),
        TorsionCertificate::Obstructed { abelianization } => json!({
            "status": "obstructed",
            "abelianization": abelian(abelianization),
        }),
    }
}

pub fn interval(iv: &SclInterval) -> Value {
    json!({
        "lower": iv.lower.to_string(),
        "upper": iv.upper.as_ref().map(|u| u.to_string()),
        "lower_source": iv.lower_source,
        "upper_source": iv.upper_source,
        "interval": iv.to_string(),
    })
}

pub fn classification(c: &Classification) -> Value {
    let witnesses: Vec<Value> = c
        .witnesses
        .iter()
        .map(|w| match &w.certificate {
            TorsionCertificate::OrderTwo { element: g, conjugator } => json!({
                "piece": w.piece,
                "element": element(g),
                "conjugator": element(conjugator),
            }),
            other => json!({ "piece": w.piece, "certificate": certificate(other) }),
        })
        .collect();
    json!({
        "name": c.name,
        "is_R": c.is_r,
        "is_Rbar": c.is_rbar,
        "has_order_two_gt": c.has_order_two_gt,
        "has_any_gt": match c.has_any_gt {
            GtExistence::Yes => "yes",
            GtExistence::Unknown => "unknown",
        },
        "witnesses": witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use kgt_core::GroupSpec;

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(int(&BigInt::from(-2)), json!(-2));
        let big = BigInt::from(i64::MAX) + 1;
        assert_eq!(int(&big), json!("9223372036854775808"));
    }

    #[test]
    fn normal_form_of_commutator() {
        let spec = GroupSpec::torus_knot(2, 3).unwrap();
        let g = spec.parse_element("[a,b]").unwrap();
        assert_eq!(
            normal_form(&g),
            json!({"central": -2, "word": "a b^2 a b", "element": "h^-2 a b^2 a b"})
        );
    }
}
