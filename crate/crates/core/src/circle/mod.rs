//! The ring `A = F[X,Y]/(X^2 + Y^2 + 1)`.
//!
//! Every class has a unique representative `p(Y) + q(Y) X`, so elements are
//! stored as that pair. `F` is the field of real algebraic numbers by
//! default; `CircleElem<Rat>` is the same ring over `Q`, used where inputs
//! are known to be rational.

mod factor;
mod ideal;
mod prime;
mod quotient;

use std::fmt;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::realalg::RealAlg;
use crate::ring::{Field, Rat, Ring};
use crate::upoly::{QPoly, UPoly};

pub use factor::{factor, factor_bounded, ideal_gcd, ideal_gcd_bounded, Factorization};
pub use ideal::{extended_gcd, extended_gcd_bounded, ideal_module_basis, ExtendedGcd, ModuleBasis};
pub use prime::{as_prime, is_prime, LinearPrime};
pub use quotient::{
    obstruction_certificate, obstruction_witness, prime_quadratic, quotient_map_eval, quotient_point,
    unit_image_test, ObstructionCertificate, QuotientPoint,
};

#[derive(Clone, PartialEq, Eq)]
pub struct CircleElem<F: Ring = RealAlg> {
    p: UPoly<F>,
    q: UPoly<F>,
}

/// `Y^2 + 1`.
fn y2_plus_1<F: Ring>() -> UPoly<F> {
    UPoly::new(vec![F::one(), F::zero(), F::one()])
}

impl<F: Ring> CircleElem<F> {
    pub fn new(p: UPoly<F>, q: UPoly<F>) -> Self {
        CircleElem { p, q }
    }

    pub fn zero() -> Self {
        Self::new(UPoly::zero(), UPoly::zero())
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(UPoly::constant(c), UPoly::zero())
    }

    pub fn x() -> Self {
        Self::new(UPoly::zero(), UPoly::one())
    }

    pub fn y() -> Self {
        Self::new(UPoly::x(), UPoly::zero())
    }

    /// The `X`-free part.
    pub fn p(&self) -> &UPoly<F> {
        &self.p
    }

    /// The coefficient of `X`.
    pub fn q(&self) -> &UPoly<F> {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Canonical form of a bivariate polynomial, rewriting `X^2 -> -(Y^2+1)`.
    pub fn reduce(f: &BiPoly<F>) -> Self {
        let minus = y2_plus_1::<F>().neg();
        let mut pows: Vec<UPoly<F>> = vec![UPoly::one()];
        let mut p = UPoly::zero();
        let mut q = UPoly::zero();
        for (&(i, j), c) in f.terms() {
            let half = (i / 2) as usize;
            while pows.len() <= half {
                let next = pows.last().unwrap().mul(&minus);
                pows.push(next);
            }
            let t = pows[half].scale(c).shift(j as usize);
            if i % 2 == 0 {
                p = p.add(&t);
            } else {
                q = q.add(&t);
            }
        }
        Self::new(p, q)
    }

    /// `p(Y) + q(Y) X` as a bivariate polynomial.
    pub fn to_bipoly(&self) -> BiPoly<F> {
        let mut terms = Vec::new();
        for (j, c) in self.p.coeffs().iter().enumerate() {
            terms.push(((0, j as u32), c.clone()));
        }
        for (j, c) in self.q.coeffs().iter().enumerate() {
            terms.push(((1, j as u32), c.clone()));
        }
        BiPoly::from_terms(terms)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(self.p.add(&rhs.p), self.q.add(&rhs.q))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.p.sub(&rhs.p), self.q.sub(&rhs.q))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.p.neg(), self.q.neg())
    }

    /// `(p1 + q1 X)(p2 + q2 X) = (p1 p2 - q1 q2 (Y^2+1)) + (p1 q2 + p2 q1) X`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.p.mul(&rhs.p).sub(&self.q.mul(&rhs.q).mul(&y2_plus_1()));
        let q = self.p.mul(&rhs.q).add(&rhs.p.mul(&self.q));
        Self::new(p, q)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.p.scale(c), self.q.scale(c))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn conj(&self) -> Self {
        Self::new(self.p.clone(), self.q.neg())
    }

    /// `u * conj(u) = p^2 + q^2 (Y^2 + 1)`.
    pub fn norm(&self) -> UPoly<F> {
        self.p.mul(&self.p).add(&self.q.mul(&self.q).mul(&y2_plus_1()))
    }

    /// Units are exactly the nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.q.is_zero() && self.p.deg() == 0 && !self.p.is_zero()
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&F) -> T) -> CircleElem<T> {
        CircleElem::new(self.p.map(&f), self.q.map(&f))
    }

    /// Degree of `p + qX` as a polynomial in `X, Y` of the canonical form.
    pub fn total_degree(&self) -> Option<usize> {
        let dp = (!self.p.is_zero()).then(|| self.p.deg());
        let dq = (!self.q.is_zero()).then(|| self.q.deg() + 1);
        dp.max(dq)
    }
}

impl<F: Field> CircleElem<F> {
    /// `w` with `w * d = self`, or `None` when `d` does not divide `self`.
    pub fn exact_divide(&self, d: &Self) -> Result<Option<Self>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = d.norm();
        let w = self.mul(&d.conj());
        let (p, rp) = w.p.divmod(&n);
        if !rp.is_zero() {
            return Ok(None);
        }
        let (q, rq) = w.q.divmod(&n);
        if !rq.is_zero() {
            return Ok(None);
        }
        Ok(Some(Self::new(p, q)))
    }

    pub fn divides(&self, u: &Self) -> Result<bool> {
        Ok(u.exact_divide(self)?.is_some())
    }
}

impl CircleElem<RealAlg> {
    /// `Some` when every coefficient is rational.
    pub fn to_rational(&self) -> Option<CircleElem<Rat>> {
        let conv = |f: &UPoly<RealAlg>| -> Option<QPoly> {
            f.coeffs().iter().map(|c| c.to_rat()).collect::<Option<Vec<_>>>().map(UPoly::new)
        };
        Some(CircleElem::new(conv(&self.p)?, conv(&self.q)?))
    }

    pub fn from_rational(u: &CircleElem<Rat>) -> Self {
        u.map(|c| RealAlg::from_rat(c.clone()))
    }
}

impl<F: Ring> fmt::Debug for CircleElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircleElem {{ p: {:?}, q: {:?} }}", self.p, self.q)
    }
}

impl<F: Ring> Ring for CircleElem<F> {
    fn zero() -> Self {
        CircleElem::zero()
    }
    fn one() -> Self {
        CircleElem::one()
    }
    fn is_zero(&self) -> bool {
        CircleElem::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        CircleElem::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        CircleElem::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        CircleElem::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        CircleElem::constant(F::from_i64(n))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        // Exact division needs a field; over a ring only units are handled.
        if rhs.is_unit() {
            let c = rhs.p.coeff(0);
            let p = self.p.coeffs().iter().map(|x| x.div_exact(&c)).collect::<Option<Vec<_>>>()?;
            let q = self.q.coeffs().iter().map(|x| x.div_exact(&c)).collect::<Option<Vec<_>>>()?;
            return Some(Self::new(UPoly::new(p), UPoly::new(q)));
        }
        None
    }
}

#[cfg(test)]
mod tests;
