use std::cmp::Ordering;
use std::fmt;

use super::CircleElem;
use crate::error::{Error, Result};
use crate::realalg::RealAlg;
use crate::ring::{Field, Ring};
use crate::upoly::UPoly;

/// A linear prime `aX + bY + c`, normalized so that `a = 1`, or `a = 0`
/// and `b = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearPrime {
    a: RealAlg,
    b: RealAlg,
    c: RealAlg,
}

impl LinearPrime {
    /// Normalizes `aX + bY + c`, returning the scaling unit and the prime.
    pub fn normalize(a: RealAlg, b: RealAlg, c: RealAlg) -> Result<(RealAlg, LinearPrime)> {
        if !a.is_zero() {
            let inv = a.inv();
            let p = LinearPrime { a: RealAlg::one(), b: b.mul(&inv), c: c.mul(&inv) };
            Ok((a, p))
        } else if !b.is_zero() {
            let inv = b.inv();
            let p = LinearPrime { a: RealAlg::zero(), b: RealAlg::one(), c: c.mul(&inv) };
            Ok((b, p))
        } else {
            Err(Error::NotPrime)
        }
    }

    /// `X + bY + c`.
    pub fn monic_x(b: RealAlg, c: RealAlg) -> LinearPrime {
        LinearPrime { a: RealAlg::one(), b, c }
    }

    /// `Y + c`.
    pub fn monic_y(c: RealAlg) -> LinearPrime {
        LinearPrime { a: RealAlg::zero(), b: RealAlg::one(), c }
    }

    pub fn a(&self) -> &RealAlg {
        &self.a
    }

    pub fn b(&self) -> &RealAlg {
        &self.b
    }

    pub fn c(&self) -> &RealAlg {
        &self.c
    }

    pub fn to_elem(&self) -> CircleElem {
        CircleElem::new(
            UPoly::new(vec![self.c.clone(), self.b.clone()]),
            UPoly::constant(self.a.clone()),
        )
    }
}

impl Ord for LinearPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a
            .cmp(&other.a)
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.c.cmp(&other.c))
    }
}

impl PartialOrd for LinearPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LinearPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearPrime({}, {}, {})", self.a, self.b, self.c)
    }
}

impl fmt::Display for LinearPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*X + ({})*Y + ({})", self.a, self.b, self.c)
    }
}

/// `q` constant, `deg p <= 1`, and `(q, p_1) != (0, 0)`.
pub fn is_prime(u: &CircleElem) -> bool {
    let (p, q) = (u.p(), u.q());
    (q.is_zero() || q.deg() == 0)
        && (p.is_zero() || p.deg() <= 1)
        && !(q.is_zero() && p.coeff(1).is_zero())
}

pub fn as_prime(u: &CircleElem) -> Result<(RealAlg, LinearPrime)> {
    if !is_prime(u) {
        return Err(Error::NotPrime);
    }
    LinearPrime::normalize(u.q().coeff(0), u.p().coeff(1), u.p().coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(p: &[i64], q: &[i64]) -> CircleElem {
        let f = |cs: &[i64]| UPoly::new(cs.iter().map(|&c| RealAlg::from_int(c)).collect());
        CircleElem::new(f(p), f(q))
    }

    #[test]
    fn classification_examples() {
        let u = elem(&[1, 2], &[1]);
        assert!(is_prime(&u));
        let (unit, p) = as_prime(&u).unwrap();
        assert_eq!(unit, RealAlg::one());
        assert_eq!(p, LinearPrime::monic_x(RealAlg::from_int(2), RealAlg::one()));

        assert!(!is_prime(&elem(&[-1, 0, -2], &[])));

        let (unit, p) = as_prime(&elem(&[-6, 3], &[])).unwrap();
        assert_eq!(unit, RealAlg::from_int(3));
        assert_eq!(p, LinearPrime::monic_y(RealAlg::from_int(-2)));
    }

    #[test]
    fn constants_and_y_in_q_are_not_prime() {
        assert!(!is_prime(&elem(&[5], &[])));
        assert!(!is_prime(&CircleElem::zero()));
        assert!(!is_prime(&elem(&[], &[0, 1])));
        assert_eq!(as_prime(&elem(&[5], &[])), Err(Error::NotPrime));
    }

    #[test]
    fn to_elem_round_trips() {
        let p = LinearPrime::monic_x(RealAlg::from_int(-1), RealAlg::from_int(4));
        assert_eq!(as_prime(&p.to_elem()).unwrap(), (RealAlg::one(), p));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let y = LinearPrime::monic_y(RealAlg::from_int(7));
        let x = LinearPrime::monic_x(RealAlg::from_int(-3), RealAlg::zero());
        let x2 = LinearPrime::monic_x(RealAlg::from_int(-3), RealAlg::one());
        assert!(y < x && x < x2);
    }
}
