use imcircle::circle::{extended_gcd, factor, ideal_gcd, obstruction_certificate, quotient_map_eval, CircleElem};
use imcircle::error::{Error, ErrorKind};
use imcircle::expr::{format_circle, parse_poly};
use imcircle::json::{certificate_from_json, circle_from_json, circle_to_json, factorization_to_json};
use imcircle::realalg::RealAlg;
use imcircle::ring::Rat;
use serde_json::json;

fn elem(text: &str) -> CircleElem {
    CircleElem::from_rational(&CircleElem::<Rat>::reduce(&parse_poly(text).unwrap()))
}

#[test]
fn text_to_factors_and_back() {
    let u = elem("(X+Y+1)*(2*X-Y)*(Y-3)");
    let f = factor(&u).unwrap();
    assert_eq!(f.reconstruct(), u);
    assert_eq!(f.total_multiplicity(), 3);
    assert_eq!(elem(&format_circle(&u)), u);
}

#[test]
fn irrational_primes_from_a_quartic_norm() {
    let u = elem("X*Y + X + Y^2 + 2");
    let f = factor(&u).unwrap();
    assert_eq!(f.reconstruct(), u);
    assert!(f.factors.iter().any(|(p, _)| !p.b().is_rational() || !p.c().is_rational()));
}

#[test]
fn gcd_and_cofactors_agree() {
    let (u, v) = (elem("(X+1)*(X+Y)"), elem("(X+1)*(X-Y)"));
    let d = ideal_gcd(&[u.clone(), v.clone()]).unwrap();
    assert_eq!(d, elem("X+1"));
    let g = extended_gcd(&u, &v).unwrap();
    assert_eq!(g.s.mul(&u).add(&g.t.mul(&v)), g.d);
    assert!(g.d.divides(&d).unwrap() && d.divides(&g.d).unwrap());
}

#[test]
fn certificates_survive_json() {
    let (_, p) = imcircle::circle::as_prime(&elem("X+2*Y+3")).unwrap();
    let cert = obstruction_certificate(&p);
    let back = certificate_from_json(&imcircle::json::certificate_to_json(&cert)).unwrap();
    assert!(back.verify());
    assert_eq!(quotient_map_eval(&back.prime, &back.witness), cert.phi_witness);
}

#[test]
fn json_shapes() {
    let f = factor(&elem("Y^2+1")).unwrap();
    assert_eq!(factorization_to_json(&f), json!({"unit": -1, "factors": [{"a": 1, "b": 0, "c": 0, "mult": 2}]}));
    let u = CircleElem::new(
        imcircle::upoly::UPoly::new(vec![RealAlg::from_int(2).sqrt().unwrap()]),
        imcircle::upoly::UPoly::one(),
    );
    assert_eq!(circle_from_json(&circle_to_json(&u)).unwrap(), u);
}

#[test]
fn error_kinds() {
    assert_eq!(parse_poly("2X").unwrap_err().kind(), ErrorKind::Parse);
    assert_eq!(factor(&elem("5")).unwrap_err().kind(), ErrorKind::Domain);
    assert!(matches!(factor(&elem("X^2*Y + 3*X - Y^3 + 2")), Err(Error::DegreeBound { .. })));
    assert!(matches!(RealAlg::from_int(-1).sqrt(), Err(Error::NegativeSqrt)));
}
