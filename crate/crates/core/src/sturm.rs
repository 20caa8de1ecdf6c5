//! Sturm sequences and real root counting.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::ring::{int_sign, Rat, Ring};
use crate::upoly::{QPoly, ZPoly};

/// Sturm sequence of a square-free integer polynomial.
///
/// Each remainder is scaled by a positive integer to stay in `Z[x]`, which
/// leaves every sign (and so every variation count) unchanged.
#[derive(Clone, Debug)]
pub struct SturmSeq {
    seq: Vec<ZPoly>,
}

impl SturmSeq {
    pub fn new(h: &ZPoly) -> Self {
        let mut seq = Vec::new();
        if h.is_zero() {
            return SturmSeq { seq };
        }
        seq.push(h.clone());
        let d = h.derivative();
        if d.is_zero() {
            return SturmSeq { seq };
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.deg() == 0 {
                break;
            }
            let mut r = a.prem(b);
            // prem multiplies by lc(b)^(da-db+1); undo a negative factor.
            let steps = a.deg() - b.deg() + 1;
            if b.lc().is_negative() && steps % 2 == 1 {
                r = r.neg();
            }
            if r.is_zero() {
                break;
            }
            let c = r.content();
            let r = ZPoly::new(r.coeffs().iter().map(|x| -(x / &c)).collect());
            seq.push(r);
        }
        SturmSeq { seq }
    }

    pub fn polys(&self) -> &[ZPoly] {
        &self.seq
    }

    fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::count_variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::count_variations(self.seq.iter().map(|p| int_sign(&p.lc())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::count_variations(self.seq.iter().map(|p| {
            let s = int_sign(&p.lc());
            if p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Roots in the open interval `(lo, hi)`; endpoints must not be roots.
    pub fn count_between(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf()
            .saturating_sub(self.variations_at_pos_inf())
    }
}

/// Number of real roots of a square-free `h` in `(lo, hi)`.
pub fn sturm_count(h: &QPoly, lo: &Rat, hi: &Rat) -> Result<usize> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.eval(lo).is_zero() || h.eval(hi).is_zero() {
        return Err(Error::EndpointIsRoot);
    }
    if lo >= hi {
        return Ok(0);
    }
    let z = h.to_primitive_integer();
    Ok(SturmSeq::new(&z).count_between(lo, hi))
}
