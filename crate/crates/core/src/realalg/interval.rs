//! Closed rational intervals, used to enclose results of exact arithmetic
//! while the candidate root is being identified.

use crate::ring::Rat;
use crate::upoly::QPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Iv {
    pub lo: Rat,
    pub hi: Rat,
}

impl Iv {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Iv { lo, hi }
    }

    pub fn point(r: Rat) -> Self {
        Iv { lo: r.clone(), hi: r }
    }

    pub fn add(&self, o: &Iv) -> Iv {
        Iv::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn neg(&self) -> Iv {
        Iv::new(-&self.hi, -&self.lo)
    }

    pub fn sub(&self, o: &Iv) -> Iv {
        self.add(&o.neg())
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= Rat::from_integer(0.into()) && self.hi >= Rat::from_integer(0.into())
    }

    pub fn mul(&self, o: &Iv) -> Iv {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Iv::new(lo, hi)
    }

    /// Horner evaluation in interval arithmetic; encloses `g(x)` for all `x` in `self`.
    pub fn eval_poly(&self, g: &QPoly) -> Iv {
        g.coeffs()
            .iter()
            .rev()
            .fold(Iv::point(Rat::from_integer(0.into())), |acc, c| {
                acc.mul(self).add(&Iv::point(c.clone()))
            })
    }
}
