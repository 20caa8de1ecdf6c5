//! `F(i)`: pairs of real algebraic numbers, and the nonreal roots of
//! rational polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use super::numfield::NfElem;
use super::roots::real_roots_irreducible;
use super::{arith, RealAlg};
use crate::error::{Error, Result};
use crate::intfactor::factor_over_q;
use crate::resultant::resultant_prs;
use crate::ring::{Field, Rat, Ring};
use crate::sturm::SturmSeq;
use crate::upoly::{QPoly, UPoly, ZPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexAlg {
    pub re: RealAlg,
    pub im: RealAlg,
}

impl ComplexAlg {
    pub fn new(re: RealAlg, im: RealAlg) -> Self {
        ComplexAlg { re, im }
    }

    pub fn from_real(re: RealAlg) -> Self {
        ComplexAlg { re, im: RealAlg::zero() }
    }

    pub fn i() -> Self {
        ComplexAlg { re: RealAlg::zero(), im: RealAlg::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexAlg { re: self.re.clone(), im: self.im.neg() }
    }

    /// `re^2 + im^2`.
    pub fn abs_squared(&self) -> RealAlg {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.abs_squared().inv();
        Ok(ComplexAlg { re: self.re.mul(&n), im: self.im.neg().mul(&n) })
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.try_inv()?))
    }

    /// Principal square root: `re >= 0`, and `im > 0` when `re = 0`.
    pub fn sqrt(&self) -> Self {
        if self.im.is_zero() {
            return match self.re.sign() {
                -1 => ComplexAlg::new(RealAlg::zero(), self.re.neg().sqrt().expect("nonnegative")),
                _ => ComplexAlg::from_real(self.re.sqrt().expect("nonnegative")),
            };
        }
        let two = RealAlg::from_int(2);
        let m = self.abs_squared().sqrt().expect("nonnegative");
        // Take the better-conditioned half and recover the other from
        // 2 * re * im = im(z).
        if self.re.sign() >= 0 {
            let re = m.add(&self.re).mul(&two.inv()).sqrt().expect("nonnegative");
            let im = self.im.mul(&re.mul(&two).inv());
            ComplexAlg::new(re, im)
        } else {
            let mut im = m.sub(&self.re).mul(&two.inv()).sqrt().expect("nonnegative");
            if self.im.sign() < 0 {
                im = im.neg();
            }
            let re = self.im.mul(&im.mul(&two).inv());
            ComplexAlg::new(re, im)
        }
    }

    /// Lexicographic order on `(re, im)`; used only for deterministic output.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }

    /// `h(self)` by Horner's rule.
    pub fn eval_rational_poly(&self, h: &QPoly) -> ComplexAlg {
        h.eval_with(self, |c| ComplexAlg::from_real(RealAlg::from_rat(c.clone())))
    }
}

impl fmt::Debug for ComplexAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.re, self.im)
    }
}

impl fmt::Display for ComplexAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_neg = self.im.sign() < 0;
        let im_abs = if im_neg { self.im.neg() } else { self.im.clone() };
        if self.re.is_zero() {
            let sign = if im_neg { "-" } else { "" };
            return write!(f, "{sign}{im_abs}*i");
        }
        let op = if im_neg { "-" } else { "+" };
        write!(f, "{} {op} {im_abs}*i", self.re)
    }
}

impl Ring for ComplexAlg {
    fn zero() -> Self {
        Self::from_real(RealAlg::zero())
    }
    fn one() -> Self {
        Self::from_real(RealAlg::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        ComplexAlg { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        ComplexAlg { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        ComplexAlg { re, im }
    }
    fn neg(&self) -> Self {
        ComplexAlg { re: self.re.neg(), im: self.im.neg() }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_real(RealAlg::from_int(n))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.try_div(rhs).ok()
    }
}

impl Field for ComplexAlg {
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
}

/// A root `u + iv` with `v > 0`, and when known, the field `Q(u)` with
/// `w = -v^2` as an element of it.
#[derive(Clone, Debug)]
pub(crate) struct RootPair {
    pub z: ComplexAlg,
    pub field: Option<PairField>,
}

#[derive(Clone, Debug)]
pub(crate) struct PairField {
    pub modulus: Arc<QPoly>,
    pub w: NfElem,
}

/// One representative (with `im > 0`) of each conjugate pair of nonreal
/// roots of `h`, with multiplicities, ordered by `(re, im)`.
pub fn complex_root_pairs(h: &QPoly) -> Result<Vec<(ComplexAlg, usize)>> {
    complex_root_pairs_bounded(h, usize::MAX)
}

/// As [`complex_root_pairs`], failing when an intermediate defining
/// polynomial would exceed degree `bound`.
pub fn complex_root_pairs_bounded(h: &QPoly, bound: usize) -> Result<Vec<(ComplexAlg, usize)>> {
    Ok(root_pairs_with_fields(h, bound)?.into_iter().map(|(p, m)| (p.z, m)).collect())
}

pub(crate) fn root_pairs_with_fields(h: &QPoly, bound: usize) -> Result<Vec<(RootPair, usize)>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (f, mult) in factor_over_q(h) {
        if f.deg() < 2 {
            continue;
        }
        let expected = (f.deg() - SturmSeq::new(&f).count_all()) / 2;
        if expected == 0 {
            continue;
        }
        let pairs = if f.deg() == 2 { quadratic_pair(&f) } else { pairs_of_irreducible(&f, bound)? };
        if pairs.len() != expected {
            return Err(Error::Internal(format!(
                "found {} conjugate pairs, expected {expected}",
                pairs.len()
            )));
        }
        out.extend(pairs.into_iter().map(|z| (z, mult)));
    }
    out.sort_by(|a, b| a.0.z.lex_cmp(&b.0.z));
    Ok(out)
}

fn quadratic_pair(f: &ZPoly) -> Vec<RootPair> {
    let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
    let neg_disc = BigInt::from(4) * &a * &c - &b * &b;
    let two_a = Rat::from_integer(BigInt::from(2) * &a);
    let u = Rat::from_integer(-b) / &two_a;
    let w = -Rat::from_integer(neg_disc.clone()) / (&two_a * &two_a);
    let root = RealAlg::from_rat(Rat::from_integer(neg_disc)).sqrt().expect("negative discriminant");
    let im = root.mul(&RealAlg::from_rat(two_a.recip()));
    let modulus = Arc::new(QPoly::new(vec![-u.clone(), Rat::one()]));
    let field = PairField { w: NfElem::new(QPoly::constant(w), &modulus), modulus };
    vec![RootPair { z: ComplexAlg::new(RealAlg::from_rat(u), im), field: Some(field) }]
}

fn zconst(c: &BigInt) -> ZPoly {
    ZPoly::constant(c.clone())
}

/// Nonreal roots of an irreducible `f` of degree >= 3.
///
/// Real parts `u` of roots are among the roots of `Res_Y(f(Y), f(2U - Y))`.
/// Writing `f(u + V) = E(V^2) + V O(V^2)`, the root `u + iv` exists iff
/// `W = -v^2` is a common root of `E` and `O`, found through their gcd over
/// `Q(u)`.
fn pairs_of_irreducible(f: &ZPoly, bound: usize) -> Result<Vec<RootPair>> {
    let n = f.deg();
    if n * n > bound {
        return Err(Error::DegreeBound { degree: n * n, bound });
    }
    let fy: UPoly<ZPoly> = f.map(zconst);
    let reflect = UPoly::new(vec![ZPoly::from_i64s(&[0, 2]), ZPoly::from_i64s(&[-1])]);
    let r = resultant_prs(&fy, &f.map(zconst).compose(&reflect));
    let fq = f.to_rational();
    let mut out: Vec<RootPair> = Vec::new();
    for (m, _) in factor_over_q(&r.to_rational()) {
        let us = real_roots_irreducible(&m);
        if us.is_empty() {
            continue;
        }
        let modulus = Arc::new(m.to_rational());
        let u = NfElem::new(QPoly::x(), &modulus);
        let shifted = fq.map(|c| NfElem::rational(c.clone())).compose(&UPoly::new(vec![u, NfElem::one()]));
        let cs = shifted.coeffs();
        let even = UPoly::new(cs.iter().step_by(2).cloned().collect());
        let odd = UPoly::new(cs.iter().skip(1).step_by(2).cloned().collect());
        let g = even.gcd(&odd);
        if g.deg() == 0 {
            continue;
        }
        if g.deg() == 1 {
            // W = -g0 in Q(u)
            let w = g.coeff(0).neg();
            for ur in &us {
                let wr = arith::eval_poly_at(w.value(), ur, Some(bound))?;
                if wr.sign() < 0 {
                    let v = wr.neg().checked_sqrt(bound)?;
                    let field = PairField { modulus: modulus.clone(), w: w.clone() };
                    push_unique(&mut out, ComplexAlg::new(ur.clone(), v), Some(field));
                }
            }
            continue;
        }
        // Norm of g down to Q[W]; its negative roots are candidates.
        let norm = norm_to_q(&g, &m);
        for (wpoly, _) in factor_over_q(&norm.to_rational()) {
            for w in real_roots_irreducible(&wpoly) {
                if w.sign() >= 0 {
                    continue;
                }
                let v = w.neg().checked_sqrt(bound)?;
                for ur in &us {
                    let z = ComplexAlg::new(ur.clone(), v.clone());
                    if z.eval_rational_poly(&fq).is_zero() {
                        push_unique(&mut out, z, None);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn push_unique(out: &mut Vec<RootPair>, z: ComplexAlg, field: Option<PairField>) {
    if !out.iter().any(|p| p.z == z) {
        out.push(RootPair { z, field });
    }
}

/// `Res_U(m(U), G(U, W))` for `G` with coefficients in `Q[U]/(m)`.
fn norm_to_q(g: &UPoly<NfElem>, m: &ZPoly) -> ZPoly {
    // G as a polynomial in U whose coefficients are polynomials in W.
    let du = g.coeffs().iter().map(|c| c.value().coeffs().len()).max().unwrap_or(0);
    let mut in_u: Vec<QPoly> = vec![QPoly::zero(); du.max(1)];
    for (j, c) in g.coeffs().iter().enumerate() {
        for (i, a) in c.value().coeffs().iter().enumerate() {
            in_u[i] = in_u[i].add(&QPoly::monomial(a.clone(), j));
        }
    }
    let den = in_u
        .iter()
        .flat_map(|p| p.coeffs().iter())
        .fold(BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let dr = Rat::from_integer(den);
    let gz: UPoly<ZPoly> = UPoly::new(
        in_u.iter()
            .map(|p| p.scale(&dr).to_integer().expect("denominators cleared"))
            .collect(),
    );
    let r = resultant_prs(&m.map(zconst), &gz);
    if r.lc().is_negative() {
        r.neg()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    fn ra(n: i64) -> RealAlg {
        RealAlg::from_int(n)
    }

    #[test]
    fn i_squared() {
        let i = ComplexAlg::i();
        assert_eq!(i.mul(&i), ComplexAlg::from_i64(-1));
        assert_eq!(ComplexAlg::new(ra(2), ra(3)).conj(), ComplexAlg::new(ra(2), ra(-3)));
        assert_eq!(ComplexAlg::from_i64(-1).sqrt(), i);
    }

    #[test]
    fn sqrt_squares_back() {
        for (a, b) in [(3, 4), (-3, 4), (0, 2), (-5, -12), (1, 1)] {
            let z = ComplexAlg::new(ra(a), ra(b));
            let w = z.sqrt();
            assert!(w.re.sign() >= 0);
            assert_eq!(w.mul(&w), z, "{a} {b}");
        }
    }

    #[test]
    fn pairs_of_small_examples() {
        assert_eq!(complex_root_pairs(&q(&[1, 0, 1])).unwrap(), vec![(ComplexAlg::i(), 1)]);
        let two = RealAlg::from_int(2).sqrt().unwrap();
        let got = complex_root_pairs(&q(&[1, 0, 1]).mul(&q(&[2, 0, 1]))).unwrap();
        assert_eq!(got, vec![(ComplexAlg::i(), 1), (ComplexAlg::new(ra(0), two), 1)]);
        assert!(complex_root_pairs(&q(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn pairs_of_irreducible_quartic_and_cubic() {
        // x^4 + 1: roots (+-1 +- i) / sqrt 2
        let h = q(&[1, 0, 0, 0, 1]);
        let got = complex_root_pairs(&h).unwrap();
        assert_eq!(got.len(), 2);
        for (z, m) in &got {
            assert_eq!(*m, 1);
            assert!(z.im.sign() > 0);
            assert!(z.eval_rational_poly(&h).is_zero());
        }
        // x^3 - 2: one pair, real part -2^(1/3)/2
        let h = q(&[-2, 0, 0, 1]);
        let got = complex_root_pairs(&h).unwrap();
        assert_eq!(got.len(), 1);
        assert!(got[0].0.eval_rational_poly(&h).is_zero());
    }

    #[test]
    fn multiplicity_is_kept() {
        let h = q(&[1, 0, 1]).pow(3);
        assert_eq!(complex_root_pairs(&h).unwrap(), vec![(ComplexAlg::i(), 3)]);
    }
}
