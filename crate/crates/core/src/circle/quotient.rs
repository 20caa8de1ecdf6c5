//! The quotient maps `A -> A/(prime) = F(i)`.

use super::prime::LinearPrime;
use super::CircleElem;
use crate::realalg::{ComplexAlg, RealAlg};
use crate::ring::{Field, Ring};
use crate::upoly::UPoly;

/// The point `(x0, z)` where `prime` vanishes, with `im z > 0` when
/// `a != 0` and `im x0 > 0` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoint {
    pub prime: LinearPrime,
    pub z: ComplexAlg,
    pub x0: ComplexAlg,
}

/// `(b^2+1) Y^2 + 2bc Y + (c^2+1)` for a prime `X + bY + c`, the minimal
/// polynomial of `z`. `None` when `a = 0`.
pub fn prime_quadratic(prime: &LinearPrime) -> Option<UPoly<RealAlg>> {
    if prime.a().is_zero() {
        return None;
    }
    let (b, c) = (prime.b(), prime.c());
    let one = RealAlg::one();
    Some(UPoly::new(vec![
        c.mul(c).add(&one),
        b.mul(c).add(&b.mul(c)),
        b.mul(b).add(&one),
    ]))
}

/// `z = u + iv` for a prime with `a = 1`.
fn upper_root(b: &RealAlg, c: &RealAlg) -> (RealAlg, RealAlg) {
    let one = RealAlg::one();
    let lead = b.mul(b).add(&one);
    let u = b.mul(c).neg().div(&lead);
    let disc = b.mul(b).add(&c.mul(c)).add(&one);
    let v = disc.sqrt().expect("b^2 + c^2 + 1 is positive").div(&lead);
    (u, v)
}

pub fn quotient_point(prime: &LinearPrime) -> QuotientPoint {
    let (b, c) = (prime.b(), prime.c());
    if prime.a().is_zero() {
        let s = c.mul(c).add(&RealAlg::one()).sqrt().expect("c^2 + 1 is positive");
        return QuotientPoint {
            prime: prime.clone(),
            z: ComplexAlg::from_real(c.neg()),
            x0: ComplexAlg::new(RealAlg::zero(), s),
        };
    }
    let (u, v) = upper_root(b, c);
    let z = ComplexAlg::new(u, v);
    let x0 = z.mul(&ComplexAlg::from_real(b.clone())).add(&ComplexAlg::from_real(c.clone())).neg();
    QuotientPoint { prime: prime.clone(), z, x0 }
}

/// `phi(f) = f(x0, z)`.
pub fn quotient_map_eval(prime: &LinearPrime, f: &CircleElem) -> ComplexAlg {
    let (b, c) = (prime.b(), prime.c());
    if prime.a().is_zero() {
        let t = c.neg();
        let s = c.mul(c).add(&RealAlg::one()).sqrt().expect("c^2 + 1 is positive");
        return ComplexAlg::new(f.p().eval(&t), f.q().eval(&t).mul(&s));
    }
    // substitute X = -bY - c, then reduce modulo the minimal polynomial of z
    let x_image = UPoly::new(vec![c.neg(), b.neg()]);
    let g = f.p().add(&f.q().mul(&x_image));
    let r = g.rem(&prime_quadratic(prime).expect("a = 1"));
    let (r0, r1) = (r.coeff(0), r.coeff(1));
    let (u, v) = upper_root(b, c);
    ComplexAlg::new(r1.mul(&u).add(&r0), r1.mul(&v))
}

/// Whether `f` maps into `F \ {0}`, the image of the units of `A`.
pub fn unit_image_test(prime: &LinearPrime, f: &CircleElem) -> bool {
    let w = quotient_map_eval(prime, f);
    !w.is_zero() && w.im.is_zero()
}

/// `Y` when `a != 0`, else `X`. Its image is a nonreal unit of `F(i)`.
pub fn obstruction_witness(prime: &LinearPrime) -> CircleElem {
    if prime.a().is_zero() {
        CircleElem::x()
    } else {
        CircleElem::y()
    }
}

/// A per-prime certificate that the units of `A` do not surject onto the
/// units of `A/(prime)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCertificate {
    pub prime: LinearPrime,
    pub witness: CircleElem,
    pub phi_witness: ComplexAlg,
    pub phi_im_nonzero: bool,
}

impl ObstructionCertificate {
    /// Recomputes the image of the witness and checks it is nonreal.
    pub fn verify(&self) -> bool {
        let w = quotient_map_eval(&self.prime, &self.witness);
        w == self.phi_witness && !w.im.is_zero() && self.phi_im_nonzero
    }
}

pub fn obstruction_certificate(prime: &LinearPrime) -> ObstructionCertificate {
    let witness = obstruction_witness(prime);
    let phi_witness = quotient_map_eval(prime, &witness);
    let phi_im_nonzero = !phi_witness.im.is_zero();
    ObstructionCertificate { prime: prime.clone(), witness, phi_witness, phi_im_nonzero }
}
