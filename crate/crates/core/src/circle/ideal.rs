//! Bezout cofactors in `A` via the `Q[Y]`-module structure of ideals.
//!
//! An ideal `(u, v)` is the `Q[Y]`-submodule of `Q[Y]^2` spanned by the
//! `(p, q)` coordinates of `u, Xu, v, Xv`. Euclid on each column gives a
//! triangular basis, and every row remembers how it was built from the
//! four generators.

use super::factor::ideal_gcd_bounded;
use super::CircleElem;
use crate::error::{Error, Result};
use crate::realalg::DEFAULT_DEGREE_BOUND;
use crate::ring::{Field, Rat, Ring};
use crate::upoly::QPoly;

type QElem = CircleElem<Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedGcd {
    pub d: CircleElem,
    pub s: CircleElem,
    pub t: CircleElem,
}

/// Upper triangular basis `[[b11, b12], [0, b22]]` of the ideal as a
/// `Q[Y]`-module, with `b11` and `b22` monic and `deg b12 < deg b22`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBasis {
    pub b11: QPoly,
    pub b12: QPoly,
    pub b22: QPoly,
    /// `Q[Y]`-coefficients of each basis row on the generators
    /// `g_1, X g_1, g_2, X g_2, ...`.
    pub row1: Vec<QPoly>,
    pub row2: Vec<QPoly>,
}

#[derive(Clone)]
struct Row {
    v: [QPoly; 2],
    t: Vec<QPoly>,
}

impl Row {
    fn sub_mul(&mut self, k: &QPoly, other: &Row) {
        for i in 0..2 {
            self.v[i] = self.v[i].sub(&k.mul(&other.v[i]));
        }
        for (a, b) in self.t.iter_mut().zip(&other.t) {
            *a = a.sub(&k.mul(b));
        }
    }

    fn scale(&mut self, k: &Rat) {
        for v in &mut self.v {
            *v = v.scale(k);
        }
        for t in &mut self.t {
            *t = t.scale(k);
        }
    }
}

/// Reduces column `col` of `rows` to a single nonzero entry and removes
/// that row from `rows`.
fn euclid_column(rows: &mut Vec<Row>, col: usize) -> Option<Row> {
    loop {
        let live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].v[col].is_zero()).collect();
        match live.len() {
            0 => return None,
            1 => return Some(rows.remove(live[0])),
            _ => {}
        }
        let piv = *live.iter().min_by_key(|&&i| rows[i].v[col].deg()).unwrap();
        let pivot = rows[piv].clone();
        for &i in &live {
            if i != piv {
                let (k, _) = rows[i].v[col].divmod(&pivot.v[col]);
                rows[i].sub_mul(&k, &pivot);
            }
        }
    }
}

/// Triangular module basis of the ideal generated by `gens`.
pub fn ideal_module_basis(gens: &[QElem]) -> Result<ModuleBasis> {
    let n = 2 * gens.len();
    let unit_vec = |k: usize| -> Vec<QPoly> {
        (0..n).map(|i| if i == k { QPoly::one() } else { QPoly::zero() }).collect()
    };
    let mut rows = Vec::with_capacity(n);
    for (i, g) in gens.iter().enumerate() {
        let xg = QElem::x().mul(g);
        rows.push(Row { v: [g.p().clone(), g.q().clone()], t: unit_vec(2 * i) });
        rows.push(Row { v: [xg.p().clone(), xg.q().clone()], t: unit_vec(2 * i + 1) });
    }
    let mut r1 = euclid_column(&mut rows, 0).ok_or(Error::ZeroInput)?;
    let mut r2 = euclid_column(&mut rows, 1).ok_or(Error::ZeroInput)?;
    r1.scale(&r1.v[0].lc().recip());
    r2.scale(&r2.v[1].lc().recip());
    let (k, _) = r1.v[1].divmod(&r2.v[1]);
    r1.sub_mul(&k, &r2);
    if rows.iter().any(|r| !r.v[0].is_zero() || !r.v[1].is_zero()) {
        return Err(Error::Internal("module reduction left a nonzero row".into()));
    }
    Ok(ModuleBasis {
        b11: r1.v[0].clone(),
        b12: r1.v[1].clone(),
        b22: r2.v[1].clone(),
        row1: r1.t,
        row2: r2.t,
    })
}

/// `(d, s, t)` with `s u + t v = d` and `d` the normalized ideal generator.
pub fn extended_gcd(u: &CircleElem, v: &CircleElem) -> Result<ExtendedGcd> {
    extended_gcd_bounded(u, v, DEFAULT_DEGREE_BOUND)
}

pub fn extended_gcd_bounded(u: &CircleElem, v: &CircleElem, bound: usize) -> Result<ExtendedGcd> {
    if u.is_zero() && v.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ur = u.to_rational().ok_or(Error::IrrationalCoefficients)?;
    let vr = v.to_rational().ok_or(Error::IrrationalCoefficients)?;
    let one = CircleElem::one;
    let zero = CircleElem::zero;
    if v.is_zero() || (!u.is_zero() && vr.exact_divide(&ur)?.is_some()) {
        return Ok(ExtendedGcd { d: u.clone(), s: one(), t: zero() });
    }
    if u.is_zero() || ur.exact_divide(&vr)?.is_some() {
        return Ok(ExtendedGcd { d: v.clone(), s: zero(), t: one() });
    }

    let mut d = ideal_gcd_bounded(&[u.clone(), v.clone()], bound)?;
    if d.to_rational().is_none() {
        // the ideal is defined over Q, so some associate of d is rational
        let lead = d.p().coeffs().iter().chain(d.q().coeffs()).find(|c| !c.is_zero()).cloned();
        if let Some(c) = lead {
            d = d.scale(&c.inv());
        }
    }
    let dr = d.to_rational().ok_or_else(|| Error::Internal("irrational ideal generator".into()))?;
    let basis = ideal_module_basis(&[ur.clone(), vr.clone()])?;
    let alpha = dr
        .p()
        .div_exact_poly(&basis.b11)
        .ok_or_else(|| Error::Internal("generator outside the ideal".into()))?;
    let beta = dr
        .q()
        .sub(&alpha.mul(&basis.b12))
        .div_exact_poly(&basis.b22)
        .ok_or_else(|| Error::Internal("generator outside the ideal".into()))?;
    let c: Vec<QPoly> = (0..4)
        .map(|i| alpha.mul(&basis.row1[i]).add(&beta.mul(&basis.row2[i])))
        .collect();
    let s = QElem::new(c[0].clone(), c[1].clone());
    let t = QElem::new(c[2].clone(), c[3].clone());
    if s.mul(&ur).add(&t.mul(&vr)) != dr {
        return Err(Error::Internal("Bezout identity failed".into()));
    }
    Ok(ExtendedGcd { d, s: CircleElem::from_rational(&s), t: CircleElem::from_rational(&t) })
}
