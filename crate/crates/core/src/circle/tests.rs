use super::*;
use crate::realalg::ComplexAlg;
use crate::ring::rat;
use proptest::prelude::*;

fn ra(n: i64) -> RealAlg {
    RealAlg::from_int(n)
}

fn poly(cs: &[i64]) -> UPoly<RealAlg> {
    UPoly::new(cs.iter().map(|&c| ra(c)).collect())
}

fn elem(p: &[i64], q: &[i64]) -> CircleElem {
    CircleElem::new(poly(p), poly(q))
}

fn x() -> CircleElem {
    CircleElem::x()
}

fn y() -> CircleElem {
    CircleElem::y()
}

fn c(n: i64) -> CircleElem {
    CircleElem::constant(ra(n))
}

fn prime(a: i64, b: i64, cc: i64) -> LinearPrime {
    LinearPrime::normalize(ra(a), ra(b), ra(cc)).unwrap().1
}

#[test]
fn reduce_examples() {
    let f = BiPoly::from_terms([((2, 0), ra(1)), ((0, 2), ra(1)), ((0, 0), ra(1))]);
    assert!(CircleElem::reduce(&f).is_zero());
    let x2 = BiPoly::term(ra(1), 2, 0);
    assert_eq!(CircleElem::reduce(&x2), elem(&[-1, 0, -1], &[]));
    let g = BiPoly::from_terms([((1, 1), ra(1)), ((1, 0), ra(1)), ((0, 0), ra(3))]);
    assert_eq!(CircleElem::reduce(&g), elem(&[3], &[1, 1]));
    // X^3 = -(Y^2+1) X
    assert_eq!(CircleElem::reduce(&BiPoly::term(ra(1), 3, 0)), elem(&[], &[-1, 0, -1]));
}

#[test]
fn arithmetic_examples() {
    assert_eq!(x().add(&y()).mul(&x().sub(&y())), elem(&[-1, 0, -2], &[]));
    assert_eq!(x().mul(&x()), elem(&[-1, 0, -1], &[]));
    assert_eq!(x().pow(0), CircleElem::one());
    assert_eq!(x().pow(3), x().mul(&x()).mul(&x()));
}

#[test]
fn norm_examples() {
    assert_eq!(x().add(&y()).norm(), poly(&[1, 0, 2]));
    assert_eq!(CircleElem::<RealAlg>::one().norm(), poly(&[1]));
    assert_eq!(y().norm(), poly(&[0, 0, 1]));
    assert_eq!(x().conj(), x().neg());
}

#[test]
fn unit_examples() {
    assert!(c(7).is_unit());
    assert!(!y().is_unit());
    assert!(!CircleElem::<RealAlg>::zero().is_unit());
}

#[test]
fn exact_divide_examples() {
    let u = elem(&[-1, 0, -2], &[]);
    let w = u.exact_divide(&x().add(&y())).unwrap().unwrap();
    assert_eq!(w, x().sub(&y()));
    assert_eq!(elem(&[1, 0, 1], &[]).exact_divide(&x()).unwrap(), Some(x().neg()));
    assert_eq!(y().exact_divide(&x()).unwrap(), None);
    assert_eq!(y().exact_divide(&CircleElem::zero()), Err(Error::DivisionByZero));
}

#[test]
fn factor_pinned_cases() {
    let f = factor(&elem(&[-1, 0, -2], &[])).unwrap();
    assert_eq!(f.unit, ra(1));
    assert_eq!(f.factors, vec![(prime(1, -1, 0), 1), (prime(1, 1, 0), 1)]);

    let f = factor(&elem(&[1, 0, 1], &[])).unwrap();
    assert_eq!(f.unit, ra(-1));
    assert_eq!(f.factors, vec![(prime(1, 0, 0), 2)]);

    let f = factor(&elem(&[2, 0, 1], &[])).unwrap();
    assert_eq!(f.unit, ra(-1));
    assert_eq!(f.factors, vec![(prime(1, 0, -1), 1), (prime(1, 0, 1), 1)]);
}

#[test]
fn factor_rejects_degenerate_inputs() {
    assert_eq!(factor(&c(5)), Err(Error::UnitInput));
    assert_eq!(factor(&CircleElem::zero()), Err(Error::ZeroInput));
    let irr = y().add(&CircleElem::constant(ra(2).sqrt().unwrap()));
    assert_eq!(factor(&irr), Err(Error::IrrationalCoefficients));
}

#[test]
fn factor_with_real_roots_and_irrational_primes() {
    // Y^2 - 2 = (Y - sqrt 2)(Y + sqrt 2)
    let f = factor(&elem(&[-2, 0, 1], &[])).unwrap();
    let s = ra(2).sqrt().unwrap();
    assert_eq!(f.factors, vec![(LinearPrime::monic_y(s.neg()), 1), (LinearPrime::monic_y(s), 1)]);
    // Y^2 + 3: -(X - sqrt 2)(X + sqrt 2)
    let g = elem(&[3, 0, 1], &[]);
    let f = factor(&g).unwrap();
    assert_eq!(f.reconstruct(), g);
    assert_eq!(f.total_multiplicity(), 2);
}

#[test]
fn factor_shared_y_roots() {
    // X + Y and -X + Y meet the same Y-roots as Y^2 + 1/2
    let u = x().add(&y()).pow(2).mul(&x().sub(&y()));
    let f = factor(&u).unwrap();
    assert_eq!(f.factors, vec![(prime(1, -1, 0), 1), (prime(1, 1, 0), 2)]);
    assert_eq!(f.reconstruct(), u);
}

#[test]
fn factor_single_prime() {
    let p = prime(2, 3, -1);
    let f = factor(&p.to_elem().scale(&ra(2))).unwrap();
    assert_eq!(f.factors, vec![(p, 1)]);
    assert_eq!(f.unit, ra(2));
}

#[test]
fn ideal_gcd_examples() {
    let a = x().add(&c(1)).mul(&x().add(&y()));
    let b = x().add(&c(1)).mul(&x().sub(&y()));
    assert_eq!(ideal_gcd(&[a.clone(), b]).unwrap(), x().add(&c(1)));
    let u = y().scale(&ra(3));
    assert_eq!(ideal_gcd(&[u, CircleElem::zero()]).unwrap(), y());
    assert_eq!(ideal_gcd(&[x(), y()]).unwrap(), CircleElem::one());
    assert_eq!(ideal_gcd(&[CircleElem::zero()]), Err(Error::ZeroInput));
}

#[test]
fn xgcd_examples() {
    let g = extended_gcd(&x(), &y()).unwrap();
    assert_eq!((g.d, g.s, g.t), (CircleElem::one(), x().neg(), y().neg()));

    let u = x().add(&y()).mul(&c(2));
    let g = extended_gcd(&u, &u).unwrap();
    assert_eq!((g.d, g.s, g.t), (u.clone(), CircleElem::one(), CircleElem::zero()));

    let a = x().add(&c(1)).mul(&x().add(&y()));
    let b = x().add(&c(1)).mul(&x().sub(&y()));
    let g = extended_gcd(&a, &b).unwrap();
    assert_eq!(g.d, x().add(&c(1)));
    assert_eq!(g.s.mul(&a).add(&g.t.mul(&b)), g.d);

    assert_eq!(extended_gcd(&CircleElem::zero(), &CircleElem::zero()), Err(Error::ZeroInput));
}

#[test]
fn module_basis_of_unit_ideal() {
    let q = |e: &CircleElem| e.to_rational().unwrap();
    let b = ideal_module_basis(&[q(&x()), q(&y())]).unwrap();
    assert_eq!((b.b11.deg(), b.b22.deg()), (0, 0));
}

#[test]
fn quotient_point_examples() {
    let px = prime(1, 0, 0);
    let pt = quotient_point(&px);
    assert_eq!(pt.z, ComplexAlg::i());
    assert!(pt.x0.is_zero());
    assert_eq!(quotient_map_eval(&px, &y()), ComplexAlg::i());

    let zero = CircleElem::reduce(&BiPoly::from_terms([((2, 0), ra(1)), ((0, 2), ra(1)), ((0, 0), ra(1))]));
    assert!(quotient_map_eval(&px, &zero).is_zero());

    let pxy = prime(1, 1, 0);
    let pt = quotient_point(&pxy);
    let half = RealAlg::from_rat(rat(1, 2)).sqrt().unwrap();
    assert_eq!(pt.z, ComplexAlg::new(ra(0), half.clone()));
    assert_eq!(pt.x0, pt.z.neg());
    assert!(quotient_map_eval(&pxy, &pxy.to_elem()).is_zero());
    assert_eq!(quotient_map_eval(&pxy, &y()), ComplexAlg::new(ra(0), half));
}

#[test]
fn quotient_point_lies_on_circle() {
    for p in [prime(1, 2, -3), prime(0, 1, 4), prime(3, -1, 1)] {
        let pt = quotient_point(&p);
        let one = ComplexAlg::one();
        assert!(pt.x0.mul(&pt.x0).add(&pt.z.mul(&pt.z)).add(&one).is_zero());
        let (a, b, cc) = (ComplexAlg::from_real(p.a().clone()), ComplexAlg::from_real(p.b().clone()), ComplexAlg::from_real(p.c().clone()));
        assert!(a.mul(&pt.x0).add(&b.mul(&pt.z)).add(&cc).is_zero());
        if p.a().is_zero() {
            assert_eq!(pt.x0.im.sign(), 1);
        } else {
            assert_eq!(pt.z.im.sign(), 1);
        }
    }
}

#[test]
fn obstruction_examples() {
    let cert = obstruction_certificate(&prime(1, 0, 0));
    assert_eq!(cert.witness, y());
    assert_eq!(cert.phi_witness, ComplexAlg::i());
    assert!(cert.phi_im_nonzero && cert.verify());

    let cert = obstruction_certificate(&prime(0, 1, 0));
    assert_eq!(cert.witness, x());
    assert_eq!(cert.phi_witness, ComplexAlg::i());

    let px = prime(1, 0, 0);
    assert!(unit_image_test(&px, &c(5)));
    assert!(!unit_image_test(&px, &y()));
    assert!(!unit_image_test(&px, &x()));
}

#[test]
fn prime_quadratic_has_negative_discriminant() {
    let q = prime_quadratic(&prime(1, 2, 3)).unwrap();
    let disc = q.coeff(1).mul(&q.coeff(1)).sub(&ra(4).mul(&q.coeff(2)).mul(&q.coeff(0)));
    // -4 (b^2 + c^2 + 1)
    assert_eq!(disc, ra(-56));
    assert!(prime_quadratic(&prime(0, 1, 3)).is_none());
}

// Strategies

fn small_poly(max_deg: usize) -> impl Strategy<Value = UPoly<RealAlg>> {
    proptest::collection::vec(-4i64..=4, 0..=max_deg + 1).prop_map(|cs| poly(&cs))
}

fn small_elem() -> impl Strategy<Value = CircleElem> {
    (small_poly(3), small_poly(2)).prop_map(|(p, q)| CircleElem::new(p, q))
}

fn small_prime() -> impl Strategy<Value = LinearPrime> {
    (-3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("(a, b) != 0", |(a, b, _)| *a != 0 || *b != 0)
        .prop_map(|(a, b, cc)| prime(a, b, cc))
}

fn small_bipoly() -> impl Strategy<Value = BiPoly<RealAlg>> {
    proptest::collection::vec(((0u32..=3, 0u32..=3), -3i64..=3), 0..6)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(k, c)| (k, ra(c)))))
}

/// Evaluates `f` at `(x0, z)` directly, independent of the reduction used
/// by `quotient_map_eval`.
fn eval_at(f: &CircleElem, x0: &ComplexAlg, z: &ComplexAlg) -> ComplexAlg {
    let ev = |g: &UPoly<RealAlg>| g.eval_with(z, |c| ComplexAlg::from_real(c.clone()));
    ev(f.p()).add(&ev(f.q()).mul(x0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reduce_is_a_homomorphism(f in small_bipoly(), g in small_bipoly()) {
        let lhs = CircleElem::reduce(&f.mul(&g));
        prop_assert_eq!(lhs, CircleElem::reduce(&f).mul(&CircleElem::reduce(&g)));
        prop_assert_eq!(
            CircleElem::reduce(&f.add(&g)),
            CircleElem::reduce(&f).add(&CircleElem::reduce(&g))
        );
    }

    #[test]
    fn reduce_fixes_canonical_forms(u in small_elem()) {
        prop_assert_eq!(CircleElem::reduce(&u.to_bipoly()), u);
    }

    #[test]
    fn norm_is_multiplicative(u in small_elem(), v in small_elem()) {
        prop_assert_eq!(u.mul(&v).norm(), u.norm().mul(&v.norm()));
        if !u.is_zero() {
            prop_assert_eq!(u.norm().deg() % 2, 0);
        }
        prop_assert_eq!(u.norm().is_zero(), u.is_zero());
    }

    #[test]
    fn units_are_norm_constants(u in small_elem()) {
        let n = u.norm();
        prop_assert_eq!(u.is_unit(), !n.is_zero() && n.deg() == 0);
    }

    #[test]
    fn factor_round_trip(ps in proptest::collection::vec(small_prime(), 1..=3), k in 1i64..=5) {
        let u = ps.iter().fold(c(k), |acc, p| acc.mul(&p.to_elem()));
        let f = factor(&u).unwrap();
        prop_assert_eq!(f.reconstruct(), u.clone());
        prop_assert_eq!(2 * f.total_multiplicity(), u.norm().deg());
        for (p, _) in &f.factors {
            prop_assert!(is_prime(&p.to_elem()));
        }
    }

    #[test]
    fn phi_is_a_homomorphism(p in small_prime(), u in small_elem(), v in small_elem()) {
        let phi = |f: &CircleElem| quotient_map_eval(&p, f);
        prop_assert_eq!(phi(&u.add(&v)), phi(&u).add(&phi(&v)));
        prop_assert_eq!(phi(&u.mul(&v)), phi(&u).mul(&phi(&v)));
        prop_assert!(phi(&p.to_elem()).is_zero());
        let pt = quotient_point(&p);
        prop_assert_eq!(phi(&u), eval_at(&u, &pt.x0, &pt.z));
    }

    #[test]
    fn phi_kernel_is_the_prime(p in small_prime(), u in small_elem()) {
        let multiple = u.mul(&p.to_elem());
        prop_assert!(quotient_map_eval(&p, &multiple).is_zero());
        let divides = u.exact_divide(&p.to_elem()).unwrap().is_some();
        prop_assert_eq!(quotient_map_eval(&p, &u).is_zero(), divides);
    }

    #[test]
    fn xgcd_identity(u in small_elem(), v in small_elem()) {
        prop_assume!(!(u.is_zero() && v.is_zero()));
        let g = extended_gcd(&u, &v).unwrap();
        prop_assert_eq!(g.s.mul(&u).add(&g.t.mul(&v)), g.d.clone());
        prop_assert!(g.d.divides(&u).unwrap());
        prop_assert!(g.d.divides(&v).unwrap());
    }

    #[test]
    fn obstruction_holds(p in small_prime(), k in 1i64..=9) {
        let cert = obstruction_certificate(&p);
        prop_assert!(cert.verify());
        prop_assert!(!unit_image_test(&p, &cert.witness));
        prop_assert!(unit_image_test(&p, &c(k)));
    }
}
