//! Field operations and square roots.
//!
//! The general case builds a polynomial vanishing at the result with a
//! resultant, factors it over `Q`, and refines the inputs until interval
//! arithmetic leaves exactly one candidate root. Rational operands and
//! pairs of quadratic irrationals from the same field take shortcuts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Iv, RealAlg};
use crate::error::{Error, Result};
use crate::intfactor::factor_over_q;
use crate::resultant::resultant_prs;
use crate::ring::Rat;
use crate::sturm::SturmSeq;
use crate::upoly::{QPoly, UPoly, ZPoly};

const MAX_REFINEMENTS: usize = 100_000;

fn check_bound(deg: usize, bound: Option<usize>) -> Result<()> {
    match bound {
        Some(b) if deg > b => Err(Error::DegreeBound { degree: deg, bound: b }),
        _ => Ok(()),
    }
}

enum Candidate {
    Rational(Rat),
    Irreducible(ZPoly, SturmSeq),
}

impl Candidate {
    /// Roots in the closed interval `iv`.
    fn count(&self, iv: &Iv) -> usize {
        match self {
            Candidate::Rational(r) => usize::from(&iv.lo <= r && r <= &iv.hi),
            Candidate::Irreducible(_, s) => {
                if iv.lo == iv.hi {
                    0
                } else {
                    s.count_between(&iv.lo, &iv.hi)
                }
            }
        }
    }
}

/// Selects the root of `cand` lying in every interval produced by `enclose`.
///
/// Successive calls to `enclose` must return shrinking enclosures of the
/// true value whose width tends to zero.
fn identify(cand: &ZPoly, bound: Option<usize>, mut enclose: impl FnMut() -> Iv) -> Result<RealAlg> {
    check_bound(cand.deg(), bound)?;
    let cands: Vec<Candidate> = factor_over_q(&cand.to_rational())
        .into_iter()
        .map(|(f, _)| {
            if f.deg() == 1 {
                Candidate::Rational(Rat::new(-f.coeff(0), f.coeff(1)))
            } else {
                let s = SturmSeq::new(&f);
                Candidate::Irreducible(f, s)
            }
        })
        .collect();
    for _ in 0..MAX_REFINEMENTS {
        let iv = enclose();
        if iv.lo == iv.hi {
            return Ok(RealAlg::from_rat(iv.lo));
        }
        let mut hit = None;
        let mut total = 0;
        for c in &cands {
            let n = c.count(&iv);
            total += n;
            if n > 0 {
                hit = Some(c);
            }
        }
        if total == 1 {
            return Ok(match hit.unwrap() {
                Candidate::Rational(r) => RealAlg::from_rat(r.clone()),
                Candidate::Irreducible(f, _) => RealAlg::from_irreducible(f.clone(), iv.lo, iv.hi),
            });
        }
        if total == 0 {
            return Err(Error::Internal("no candidate root in enclosure".into()));
        }
    }
    Err(Error::Internal("root identification did not converge".into()))
}

/// Enclosures of `op(a, b)` under repeated bisection of both operands.
fn enclosures<'a>(a: &RealAlg, b: &RealAlg, op: impl Fn(&Iv, &Iv) -> Iv + 'a) -> impl FnMut() -> Iv + 'a {
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut first = true;
    move || {
        if !first {
            a.bisect();
            b.bisect();
        }
        first = false;
        op(&a.interval(), &b.interval())
    }
}

fn const_poly(c: &BigInt) -> ZPoly {
    ZPoly::constant(c.clone())
}

/// `Res_y(pa(y), pb(x - y))`: vanishes at every sum of roots.
fn sum_poly(pa: &ZPoly, pb: &ZPoly) -> ZPoly {
    let a_y: UPoly<ZPoly> = pa.map(const_poly);
    let shift = UPoly::new(vec![ZPoly::x(), ZPoly::constant(BigInt::from(-1))]);
    let b_y = pb.map(const_poly).compose(&shift);
    resultant_prs(&a_y, &b_y)
}

/// `Res_y(pa(y), y^db pb(x / y))`: vanishes at every product of roots.
fn product_poly(pa: &ZPoly, pb: &ZPoly) -> ZPoly {
    let a_y: UPoly<ZPoly> = pa.map(const_poly);
    let db = pb.deg();
    let b_y = UPoly::new((0..=db).map(|k| ZPoly::monomial(pb.coeff(db - k), db - k)).collect());
    resultant_prs(&a_y, &b_y)
}

/// `p(x - r)` as a primitive integer polynomial.
fn shift_poly(p: &ZPoly, r: &Rat) -> ZPoly {
    let t = QPoly::new(vec![-r.clone(), Rat::one()]);
    p.to_rational().compose(&t).to_primitive_integer()
}

/// `p(x / r)` up to a constant, as a primitive integer polynomial.
fn scale_poly(p: &ZPoly, r: &Rat) -> ZPoly {
    let inv = r.recip();
    let mut f = Rat::one();
    let mut cs = Vec::with_capacity(p.deg() + 1);
    for c in p.coeffs() {
        cs.push(Rat::from_integer(c.clone()) * &f);
        f *= &inv;
    }
    QPoly::new(cs).to_primitive_integer()
}

pub(super) fn neg(a: &RealAlg) -> RealAlg {
    if let Some(r) = a.to_rat() {
        return RealAlg::from_rat(-r);
    }
    RealAlg::from_irreducible(a.poly.negate_var().primitive_part(), -a.hi.clone(), -a.lo.clone())
}

pub(super) fn inv(a: &RealAlg) -> Result<RealAlg> {
    if let Some(r) = a.to_rat() {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(RealAlg::from_rat(r.recip()));
    }
    let mut a = a.clone();
    while a.lo.is_negative() && a.hi.is_positive() || a.lo.is_zero() || a.hi.is_zero() {
        a.bisect();
    }
    Ok(RealAlg::from_irreducible(a.poly.reverse().primitive_part(), a.hi.recip(), a.lo.recip()))
}

fn add_rat(a: &RealAlg, r: &Rat) -> RealAlg {
    if let Some(s) = a.to_rat() {
        return RealAlg::from_rat(s + r);
    }
    RealAlg::from_irreducible(shift_poly(&a.poly, r), &a.lo + r, &a.hi + r)
}

fn mul_rat(a: &RealAlg, r: &Rat) -> RealAlg {
    if let Some(s) = a.to_rat() {
        return RealAlg::from_rat(s * r);
    }
    if r.is_zero() {
        return RealAlg::from_int(0);
    }
    let (lo, hi) = if r.is_positive() { (&a.lo * r, &a.hi * r) } else { (&a.hi * r, &a.lo * r) };
    RealAlg::from_irreducible(scale_poly(&a.poly, r), lo, hi)
}

/// `p + q*sqrt(d)` with `d` a positive nonsquare integer.
#[derive(Clone, Debug)]
struct Quad {
    p: Rat,
    q: Rat,
    d: BigInt,
}

impl Quad {
    fn of(a: &RealAlg) -> Option<Quad> {
        if a.degree() != 2 {
            return None;
        }
        let (c, b, l) = (a.poly.coeff(0), a.poly.coeff(1), a.poly.coeff(2));
        let d = &b * &b - BigInt::from(4) * &l * &c;
        let two_l = Rat::from_integer(BigInt::from(2) * &l);
        let p = Rat::from_integer(-b) / &two_l;
        // Larger root iff the interval lies right of the vertex, or straddles
        // it with the positive branch inside.
        let upper = if a.lo >= p {
            true
        } else if a.hi <= p {
            false
        } else {
            a.poly.sign_at(&a.hi) > 0
        };
        let q = if upper { two_l.recip() } else { -two_l.recip() };
        Some(Quad { p, q, d })
    }

    /// Rewrites `other` over `sqrt(self.d)` when both generate the same field.
    fn align(&self, other: &Quad) -> Option<Quad> {
        if other.d == self.d {
            return Some(other.clone());
        }
        let prod = &self.d * &other.d;
        let r = prod.sqrt();
        if &r * &r != prod {
            return None;
        }
        // sqrt(d') = r / d * sqrt(d)
        let q = &other.q * Rat::new(r, self.d.clone());
        Some(Quad { p: other.p.clone(), q, d: self.d.clone() })
    }

    fn add(&self, o: &Quad) -> Quad {
        Quad { p: &self.p + &o.p, q: &self.q + &o.q, d: self.d.clone() }
    }

    fn mul(&self, o: &Quad) -> Quad {
        let d = Rat::from_integer(self.d.clone());
        Quad {
            p: &self.p * &o.p + &self.q * &o.q * d,
            q: &self.p * &o.q + &self.q * &o.p,
            d: self.d.clone(),
        }
    }

    fn to_real(&self) -> RealAlg {
        if self.q.is_zero() {
            return RealAlg::from_rat(self.p.clone());
        }
        let d = Rat::from_integer(self.d.clone());
        let poly = QPoly::new(vec![&self.p * &self.p - &self.q * &self.q * d, -&self.p * Rat::from_integer(2.into()), Rat::one()])
            .to_primitive_integer();
        let s = Rat::from_integer(self.d.sqrt());
        let s1 = &s + Rat::one();
        let (a, b) = (&self.p + &self.q * &s, &self.p + &self.q * &s1);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        RealAlg::from_irreducible(poly, lo, hi)
    }
}

fn quad_pair(a: &RealAlg, b: &RealAlg) -> Option<(Quad, Quad)> {
    let qa = Quad::of(a)?;
    let qb = qa.align(&Quad::of(b)?)?;
    Some((qa, qb))
}

pub(super) fn add(a: &RealAlg, b: &RealAlg, bound: Option<usize>) -> Result<RealAlg> {
    if let Some(r) = b.to_rat() {
        return Ok(add_rat(a, &r));
    }
    if let Some(r) = a.to_rat() {
        return Ok(add_rat(b, &r));
    }
    if let Some((qa, qb)) = quad_pair(a, b) {
        return Ok(qa.add(&qb).to_real());
    }
    if a.poly == b.poly && a == b {
        return Ok(mul_rat(a, &Rat::from_integer(2.into())));
    }
    check_bound(a.degree() * b.degree(), bound)?;
    let cand = sum_poly(&a.poly, &b.poly);
    identify(&cand, bound, enclosures(a, b, |x, y| x.add(y)))
}

pub(super) fn mul(a: &RealAlg, b: &RealAlg, bound: Option<usize>) -> Result<RealAlg> {
    if let Some(r) = b.to_rat() {
        return Ok(mul_rat(a, &r));
    }
    if let Some(r) = a.to_rat() {
        return Ok(mul_rat(b, &r));
    }
    if let Some((qa, qb)) = quad_pair(a, b) {
        return Ok(qa.mul(&qb).to_real());
    }
    if a.poly == b.poly && a == b {
        return eval_poly_at(&QPoly::from_i64s(&[0, 0, 1]), a, bound);
    }
    check_bound(a.degree() * b.degree(), bound)?;
    let cand = product_poly(&a.poly, &b.poly);
    identify(&cand, bound, enclosures(a, b, |x, y| x.mul(y)))
}

/// `g(a)` via `Res_y(m(y), x - g(y))`, whose degree is at most that of `a`.
pub(super) fn eval_poly_at(g: &QPoly, a: &RealAlg, bound: Option<usize>) -> Result<RealAlg> {
    if let Some(r) = a.to_rat() {
        return Ok(RealAlg::from_rat(g.eval(&r)));
    }
    if g.deg() == 0 || g.is_zero() {
        return Ok(RealAlg::from_rat(g.coeff(0)));
    }
    // reduce modulo the minimal polynomial first
    let g = g.rem(&a.poly.to_rational());
    if g.is_constant() {
        return Ok(RealAlg::from_rat(g.coeff(0)));
    }
    if g.deg() == 1 {
        return Ok(add_rat(&mul_rat(a, &g.coeff(1)), &g.coeff(0)));
    }
    let den = g.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let gz: Vec<BigInt> = g.coeffs().iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut h: Vec<ZPoly> = gz.iter().map(|c| ZPoly::constant(-c)).collect();
    h[0] = ZPoly::new(vec![-gz[0].clone(), den.clone()]);
    let cand = resultant_prs(&a.poly.map(const_poly), &UPoly::new(h));
    let mut a = a.clone();
    let mut first = true;
    identify(&cand, bound, move || {
        if !first {
            a.bisect();
        }
        first = false;
        a.interval().eval_poly(&g)
    })
}

/// Bounds `floor(sqrt(r) * 2^k) / 2^k <= sqrt(r) <= (floor(...) + 1) / 2^k` for `r >= 0`.
fn sqrt_bounds(r: &Rat, k: u32) -> (Rat, Rat) {
    let scale = BigInt::one() << (2 * k);
    let num = r.numer() * &scale;
    let floor = &num / r.denom();
    let ceil = if (&num % r.denom()).is_zero() { floor.clone() } else { &floor + 1 };
    let den = Rat::from_integer(BigInt::one() << k);
    let lo = Rat::from_integer(floor.sqrt()) / &den;
    let hi = (Rat::from_integer(ceil.sqrt()) + Rat::one()) / &den;
    (lo, hi)
}

pub(super) fn sqrt(a: &RealAlg, bound: Option<usize>) -> Result<RealAlg> {
    match a.sign() {
        -1 => return Err(Error::NegativeSqrt),
        0 => return Ok(RealAlg::from_int(0)),
        _ => {}
    }
    if let Some(r) = a.to_rat() {
        let (n, d) = (r.numer(), r.denom());
        let (sn, sd) = (n.sqrt(), d.sqrt());
        if &(&sn * &sn) == n && &(&sd * &sd) == d {
            return Ok(RealAlg::from_rat(Rat::new(sn, sd)));
        }
        let nd = n * d;
        let s = nd.sqrt();
        let poly = ZPoly::new(vec![-n.clone(), BigInt::zero(), d.clone()]);
        let dr = Rat::from_integer(d.clone());
        return Ok(RealAlg::from_irreducible(
            poly,
            Rat::from_integer(s.clone()) / &dr,
            Rat::from_integer(s + 1) / dr,
        ));
    }
    check_bound(2 * a.degree(), bound)?;
    let mut cs = vec![BigInt::zero(); 2 * a.degree() + 1];
    for (i, c) in a.poly.coeffs().iter().enumerate() {
        cs[2 * i] = c.clone();
    }
    let cand = ZPoly::new(cs);
    let mut a = a.clone();
    while !a.lo.is_positive() {
        a.bisect();
    }
    let mut k = 4;
    identify(&cand, bound, move || {
        a.bisect();
        k += 2;
        let (lo, _) = sqrt_bounds(&a.lo, k);
        let (_, hi) = sqrt_bounds(&a.hi, k);
        Iv::new(lo, hi)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn sum_poly_of_sqrt2_sqrt3() {
        let f = sum_poly(&ZPoly::from_i64s(&[-2, 0, 1]), &ZPoly::from_i64s(&[-3, 0, 1]));
        assert_eq!(f.primitive_part(), ZPoly::from_i64s(&[1, 0, -10, 0, 1]));
    }

    #[test]
    fn product_poly_vanishes_at_products() {
        // roots {1, 2} and {3}: products 3 and 6
        let f = product_poly(&ZPoly::from_i64s(&[2, -3, 1]), &ZPoly::from_i64s(&[-3, 1]));
        assert_eq!(f.primitive_part(), ZPoly::from_i64s(&[18, -9, 1]));
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for (n, d) in [(2, 1), (1, 3), (49, 4), (10, 7)] {
            let r = rat(n, d);
            let (lo, hi) = sqrt_bounds(&r, 10);
            assert!(&lo * &lo <= r && r <= &hi * &hi);
        }
    }
}
