//! Real root isolation.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::RealAlg;
use crate::error::{Error, Result};
use crate::intfactor::factor_over_q;
use crate::ring::Rat;
use crate::sturm::SturmSeq;
use crate::upoly::{QPoly, ZPoly};

/// Power of two strictly larger than the absolute value of every root.
pub(crate) fn root_bound(f: &ZPoly) -> Rat {
    let lc = f.lc().abs();
    let m = f.coeffs()[..f.deg()].iter().map(|c| c.abs()).max().unwrap_or_default();
    // Cauchy: 1 + m / lc
    let need = m / &lc + 2;
    let mut b = BigInt::one();
    while b < need {
        b <<= 1;
    }
    Rat::from_integer(b)
}

/// Real roots of an irreducible polynomial, ascending.
pub(crate) fn real_roots_irreducible(f: &ZPoly) -> Vec<RealAlg> {
    if f.deg() == 1 {
        return vec![RealAlg::from_rat(Rat::new(-f.coeff(0), f.coeff(1)))];
    }
    let seq = SturmSeq::new(f);
    let b = root_bound(f);
    let mut out = Vec::new();
    let n = seq.count_between(&-b.clone(), &b);
    let mut stack = vec![(-b.clone(), b, n)];
    // depth-first, left half first, so roots come out ascending
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(RealAlg::from_irreducible(f.clone(), lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rat::from_integer(2.into());
                let left = seq.count_between(&lo, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out
}

/// All real roots with multiplicities, ascending.
pub fn isolate_real_roots(h: &QPoly) -> Result<Vec<(RealAlg, usize)>> {
    isolate_real_roots_bounded(h, usize::MAX)
}

/// As [`isolate_real_roots`], rejecting inputs of degree above `bound`.
pub fn isolate_real_roots_bounded(h: &QPoly, bound: usize) -> Result<Vec<(RealAlg, usize)>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.deg() > bound {
        return Err(Error::DegreeBound { degree: h.deg(), bound });
    }
    let mut out = Vec::new();
    for (f, m) in factor_over_q(h) {
        for r in real_roots_irreducible(&f) {
            out.push((r, m));
        }
    }
    out.sort_by(|a, b| a.0.compare(&b.0));
    Ok(out)
}

/// The smallest real root of an odd-degree polynomial.
pub fn odd_degree_root(h: &QPoly) -> Result<RealAlg> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.deg() % 2 == 0 {
        return Err(Error::EvenDegree);
    }
    let roots = isolate_real_roots(h)?;
    roots
        .into_iter()
        .next()
        .map(|(r, _)| r)
        .ok_or_else(|| Error::Internal("odd-degree polynomial without a real root".into()))
}

/// Checks that `a` is a root of `h` exactly.
#[cfg(test)]
fn is_root(h: &QPoly, a: &RealAlg) -> bool {
    if let Some(r) = a.to_rat() {
        return crate::ring::Ring::is_zero(&h.eval(&r));
    }
    !h.is_zero() && h.rem(&a.poly.to_rational()).is_zero()
}
