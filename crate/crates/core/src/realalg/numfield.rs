//! Arithmetic in a number field `Q[u]/(m(u))` with `m` irreducible.

use std::sync::Arc;

use crate::ring::{Field, Rat, Ring};
use crate::upoly::QPoly;

/// Element of `Q[u]/(m)`. Constants built through the `Ring` trait carry no
/// modulus; any operation with a modulus-carrying operand adopts it.
#[derive(Clone, Debug)]
pub(crate) struct NfElem {
    val: QPoly,
    modulus: Option<Arc<QPoly>>,
}

impl NfElem {
    pub fn new(val: QPoly, modulus: &Arc<QPoly>) -> Self {
        NfElem { val: val.rem(modulus), modulus: Some(modulus.clone()) }
    }

    pub fn rational(r: Rat) -> Self {
        NfElem { val: QPoly::constant(r), modulus: None }
    }

    pub fn value(&self) -> &QPoly {
        &self.val
    }

    fn with(&self, val: QPoly, other: &NfElem) -> NfElem {
        let modulus = self.modulus.clone().or_else(|| other.modulus.clone());
        let val = match &modulus {
            Some(m) if val.degree() >= m.degree() => val.rem(m),
            _ => val,
        };
        NfElem { val, modulus }
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val
    }
}

impl Ring for NfElem {
    fn zero() -> Self {
        Self::rational(Rat::zero())
    }
    fn one() -> Self {
        Self::rational(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.val.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.with(self.val.add(&rhs.val), rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.with(self.val.sub(&rhs.val), rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.with(self.val.mul(&rhs.val), rhs)
    }
    fn neg(&self) -> Self {
        NfElem { val: self.val.neg(), modulus: self.modulus.clone() }
    }
    fn from_i64(n: i64) -> Self {
        Self::rational(Rat::from_i64(n))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self.mul(&rhs.inv()))
    }
}

impl Field for NfElem {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in a number field");
        if self.val.is_constant() {
            return NfElem { val: QPoly::constant(self.val.coeff(0).inv()), modulus: self.modulus.clone() };
        }
        let m = self.modulus.as_ref().expect("non-constant element carries its modulus");
        let (g, s, _) = self.val.ext_gcd(m);
        debug_assert!(g.is_one());
        NfElem { val: s.rem(m), modulus: Some(m.clone()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::UPoly;

    #[test]
    fn inverse_in_q_sqrt2() {
        let m = Arc::new(QPoly::from_i64s(&[-2, 0, 1]));
        let a = NfElem::new(QPoly::from_i64s(&[1, 1]), &m); // 1 + u
        let b = a.inv();
        assert!(a.mul(&b).is_one());
        // (1 + u)^-1 = u - 1
        assert_eq!(b.value(), &QPoly::from_i64s(&[-1, 1]));
    }

    #[test]
    fn gcd_over_number_field() {
        // over Q(sqrt2): gcd(x^2 - 2, x^2 - 2*u*x + 2) = x - u
        let m = Arc::new(QPoly::from_i64s(&[-2, 0, 1]));
        let u = NfElem::new(QPoly::from_i64s(&[0, 1]), &m);
        let c = |n: i64| NfElem::rational(Rat::from_i64(n));
        let f = UPoly::new(vec![c(-2), c(0), c(1)]);
        let g = UPoly::new(vec![c(2), u.mul(&c(-2)), c(1)]);
        let h = f.gcd(&g);
        assert_eq!(h, UPoly::new(vec![u.neg(), c(1)]));
    }
}
