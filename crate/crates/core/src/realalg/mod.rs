//! Real algebraic numbers: exact elements of the real closure of `Q`,
//! and their complexification `F(i)`.
//!
//! A [`RealAlg`] is an irreducible primitive integer polynomial together
//! with a rational interval isolating one of its real roots. Since the
//! defining polynomial is the minimal polynomial, equality and zero tests
//! reduce to comparing polynomials and intervals.

mod arith;
mod complex;
mod interval;
mod numfield;
mod roots;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::intfactor::factor_over_q;
use crate::ring::{rat_sign, Field, Rat, Ring};
use crate::sturm::SturmSeq;
use crate::upoly::ZPoly;

pub use complex::{complex_root_pairs, complex_root_pairs_bounded, ComplexAlg};
pub use roots::{isolate_real_roots, isolate_real_roots_bounded, odd_degree_root};

pub(crate) use complex::{root_pairs_with_fields, PairField};
pub(crate) use interval::Iv;
pub(crate) use numfield::NfElem;

/// Default bound on the degree of intermediate defining polynomials.
pub const DEFAULT_DEGREE_BOUND: usize = 64;

#[derive(Clone)]
pub struct RealAlg {
    // Irreducible, primitive, positive leading coefficient.
    poly: ZPoly,
    // lo == hi for rationals; otherwise lo < hi and poly has exactly one
    // root in (lo, hi). Endpoints are never roots of an irreducible poly
    // of degree >= 2.
    lo: Rat,
    hi: Rat,
}

impl RealAlg {
    pub fn from_rat(r: Rat) -> Self {
        let poly = ZPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        RealAlg { poly, lo: r.clone(), hi: r }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    /// Builds the root of `poly` isolated by `[lo, hi]`.
    ///
    /// `poly` need not be irreducible or square-free, but must have exactly
    /// one distinct real root in the closed interval.
    pub fn from_poly_interval(poly: &ZPoly, lo: Rat, hi: Rat) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if poly.deg() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if lo > hi {
            return Err(Error::InvalidArgument("empty interval".into()));
        }
        let mut found = None;
        let mut count = 0;
        for (f, _) in factor_over_q(&poly.to_rational()) {
            if f.deg() == 1 {
                let r = Rat::new(-f.coeff(0), f.coeff(1));
                if lo <= r && r <= hi {
                    count += 1;
                    found = Some(Self::from_rat(r));
                }
            } else if lo < hi {
                let n = SturmSeq::new(&f).count_between(&lo, &hi);
                count += n;
                if n == 1 {
                    found = Some(RealAlg { poly: f, lo: lo.clone(), hi: hi.clone() });
                }
            }
        }
        match (count, found) {
            (1, Some(a)) => Ok(a),
            _ => Err(Error::InvalidArgument(format!("interval contains {count} roots, expected exactly 1"))),
        }
    }

    pub(crate) fn from_irreducible(poly: ZPoly, lo: Rat, hi: Rat) -> Self {
        debug_assert!(poly.deg() >= 2 && lo < hi);
        RealAlg { poly, lo, hi }
    }

    /// The minimal polynomial, primitive with positive leading coefficient.
    pub fn poly(&self) -> &ZPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// Algebraic degree over `Q`.
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn is_rational(&self) -> bool {
        self.poly.deg() == 1
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.lo.clone())
    }

    pub fn sign(&self) -> i32 {
        if self.is_rational() {
            return rat_sign(&self.lo);
        }
        if self.lo >= Rat::zero() {
            return 1;
        }
        if self.hi <= Rat::zero() {
            return -1;
        }
        // 0 lies strictly inside and is not a root.
        let zero = Rat::zero();
        if self.poly.sign_at(&zero) == self.poly.sign_at(&self.hi) {
            -1
        } else {
            1
        }
    }

    /// Halves the isolating interval.
    pub(crate) fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let mid = (&self.lo + &self.hi) / Rat::from_integer(2.into());
        if self.poly.sign_at(&mid) == self.poly.sign_at(&self.hi) {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub(crate) fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Same number with an isolating interval no wider than `width`.
    pub fn refine_to_width(&self, width: &Rat) -> RealAlg {
        let mut a = self.clone();
        while &a.width() > width {
            a.bisect();
        }
        a
    }

    pub(crate) fn interval(&self) -> Iv {
        Iv::new(self.lo.clone(), self.hi.clone())
    }

    pub fn compare(&self, other: &RealAlg) -> Ordering {
        if let (Some(a), Some(b)) = (self.to_rat(), other.to_rat()) {
            return a.cmp(&b);
        }
        if self == other {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.to_rat() {
            return r.to_f64().unwrap_or(f64::NAN);
        }
        let mut a = self.clone();
        loop {
            let scale = a.lo.abs().max(a.hi.abs());
            let tol = if scale.is_zero() { Rat::new(1.into(), BigInt::from(1u64 << 60)) } else { scale / Rat::from_integer(BigInt::from(1u64 << 60)) };
            if a.width() <= tol {
                break;
            }
            a.bisect();
        }
        ((&a.lo + &a.hi) / Rat::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal expansion rounded to `digits` fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let ten_pow = Rat::from_integer(BigInt::from(10).pow(digits));
        let scaled = match self.to_rat() {
            Some(r) => (r * &ten_pow).round().to_integer(),
            None => {
                // Irrationals never sit on a rounding boundary, so this ends.
                let mut a = self.clone();
                loop {
                    let lo = (&a.lo * &ten_pow).round();
                    if lo == (&a.hi * &ten_pow).round() {
                        break lo.to_integer();
                    }
                    a.bisect();
                }
            }
        };
        let neg = scaled.is_negative();
        let digits_str = scaled.abs().to_string();
        let d = digits as usize;
        let padded = format!("{digits_str:0>width$}", width = d + 1);
        let (int_part, frac) = padded.split_at(padded.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

impl PartialEq for RealAlg {
    fn eq(&self, other: &Self) -> bool {
        if self.poly != other.poly {
            return false;
        }
        if self.is_rational() {
            return self.lo == other.lo;
        }
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        // Both intervals isolate a root of the same polynomial, so the
        // intersection holds a root iff the roots coincide.
        lo < hi && self.poly.sign_at(lo) != self.poly.sign_at(hi)
    }
}

impl Eq for RealAlg {}

impl PartialOrd for RealAlg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlg {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Debug for RealAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rat() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "RealAlg({:?} in [{}, {}])", self.poly, self.lo, self.hi),
        }
    }
}

impl fmt::Display for RealAlg {
    /// Rationals print exactly; irrationals as a 10-digit approximation marked `≈`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rat() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "≈{}", self.to_decimal(10)),
        }
    }
}

impl From<Rat> for RealAlg {
    fn from(r: Rat) -> Self {
        Self::from_rat(r)
    }
}

impl Ring for RealAlg {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.is_rational() && self.lo.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        arith::add(self, rhs, None).expect("unbounded arithmetic")
    }
    fn sub(&self, rhs: &Self) -> Self {
        arith::add(self, &arith::neg(rhs), None).expect("unbounded arithmetic")
    }
    fn mul(&self, rhs: &Self) -> Self {
        arith::mul(self, rhs, None).expect("unbounded arithmetic")
    }
    fn neg(&self) -> Self {
        arith::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self.mul(&rhs.inv()))
    }
}

impl Field for RealAlg {
    fn inv(&self) -> Self {
        arith::inv(self).expect("inverse of zero")
    }
}

impl RealAlg {
    /// `self + rhs`, failing if an intermediate defining polynomial exceeds `bound`.
    pub fn checked_add(&self, rhs: &Self, bound: usize) -> Result<Self> {
        arith::add(self, rhs, Some(bound))
    }

    pub fn checked_sub(&self, rhs: &Self, bound: usize) -> Result<Self> {
        arith::add(self, &arith::neg(rhs), Some(bound))
    }

    pub fn checked_mul(&self, rhs: &Self, bound: usize) -> Result<Self> {
        arith::mul(self, rhs, Some(bound))
    }

    pub fn checked_div(&self, rhs: &Self, bound: usize) -> Result<Self> {
        let r = arith::inv(rhs)?;
        arith::mul(self, &r, Some(bound))
    }

    pub fn try_inv(&self) -> Result<Self> {
        arith::inv(self)
    }

    /// Nonnegative square root.
    pub fn sqrt(&self) -> Result<Self> {
        arith::sqrt(self, None)
    }

    pub fn checked_sqrt(&self, bound: usize) -> Result<Self> {
        arith::sqrt(self, Some(bound))
    }

    /// `g(self)` for a rational polynomial `g`.
    pub fn eval_poly(&self, g: &crate::upoly::QPoly) -> Self {
        arith::eval_poly_at(g, self, None).expect("unbounded arithmetic")
    }
}
