use super::prime::LinearPrime;
use super::CircleElem;
use crate::error::{Error, Result};
use crate::intfactor::factor_over_q;
use crate::realalg::{
    isolate_real_roots_bounded, root_pairs_with_fields, ComplexAlg, Iv, NfElem,
    PairField, RealAlg, DEFAULT_DEGREE_BOUND,
};
use crate::ring::{Field, Rat, Ring};
use crate::upoly::{QPoly, UPoly};

/// `unit * prod(prime^mult)`, primes sorted by `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: RealAlg,
    pub factors: Vec<(LinearPrime, usize)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> CircleElem {
        self.factors
            .iter()
            .fold(CircleElem::constant(self.unit.clone()), |acc, (p, m)| {
                acc.mul(&p.to_elem().pow(*m as u32))
            })
    }

    pub fn total_multiplicity(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

pub fn factor(u: &CircleElem) -> Result<Factorization> {
    factor_bounded(u, DEFAULT_DEGREE_BOUND)
}

/// Factors `u`, bounding the degree of intermediate defining polynomials.
///
/// The part of `u` lying in `Q[Y]` is split off first: over a pair of
/// nonreal roots it contributes both primes through the two points of the
/// circle above them. For the remaining cofactor `q(z) != 0` at every root
/// of its norm, so each pair `z` yields the single prime through
/// `(-p(z)/q(z), z)`, computed in `Q(re z)`. Since no other prime of the
/// cofactor passes over `z`, its multiplicity is that of `z` in the norm.
pub fn factor_bounded(u: &CircleElem, bound: usize) -> Result<Factorization> {
    if u.is_zero() {
        return Err(Error::ZeroInput);
    }
    if u.is_unit() {
        return Err(Error::UnitInput);
    }
    let ur = u.to_rational().ok_or(Error::IrrationalCoefficients)?;
    let n = ur.norm();
    if n.deg() > bound {
        return Err(Error::DegreeBound { degree: n.deg(), bound });
    }

    let content = ur.p().gcd(ur.q());
    let rest = CircleElem::new(ur.p().divmod(&content).0, ur.q().divmod(&content).0);
    let mut factors = Vec::new();
    if content.deg() > 0 {
        for (t, m) in isolate_real_roots_bounded(&content, bound)? {
            factors.push((LinearPrime::monic_y(t.neg()), m));
        }
        for (pair, m) in root_pairs_with_fields(&content, bound)? {
            for p in primes_over(&pair.z) {
                factors.push((p, m));
            }
        }
    }
    if !rest.is_unit() {
        // the norm of `rest` has no real roots: they would be common roots of p and q
        let rest_norm = rest.norm();
        for (f, _) in factor_over_q(&rest_norm) {
            // primes over roots of f have coefficients in a field of degree
            // up to n(n-1)/2, and the unit is built from their squares
            let n = f.deg();
            let degree = (n * (n - 1) / 2).pow(2);
            if n > 2 && degree > bound {
                return Err(Error::DegreeBound { degree, bound });
            }
        }
        for (pair, m) in root_pairs_with_fields(&rest_norm, bound)? {
            let p = match &pair.field {
                Some(field) => prime_in_field(&rest, &pair.z, field)?,
                None => prime_by_evaluation(&rest, &pair.z)?,
            };
            factors.push((p, m));
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(LinearPrime, usize)> = Vec::with_capacity(factors.len());
    for (p, m) in factors {
        match merged.last_mut() {
            Some((q, k)) if *q == p => *k += m,
            _ => merged.push((p, m)),
        }
    }
    let degree: usize = merged.iter().map(|(_, m)| m).sum();
    // distinct primes dividing u with these multiplicities account for the
    // whole norm, so the cofactor is a unit
    if 2 * degree != n.deg() {
        return Err(Error::Internal(format!(
            "cofactor is not a unit: primes account for degree {} of {}",
            2 * degree,
            n.deg()
        )));
    }
    let unit = leading_unit(&ur, &merged, degree, bound)?;
    Ok(Factorization { unit, factors: merged })
}

/// The prime through `(x0, z)` with `x0 = -p(z)/q(z)`, computed in
/// `Q(u)[Y]/((Y - z)(Y - conj z))` where `u = re z`.
fn prime_in_field(rest: &CircleElem<Rat>, z: &ComplexAlg, field: &PairField) -> Result<LinearPrime> {
    let uu = NfElem::new(QPoly::x(), &field.modulus);
    let lift = |f: &QPoly| f.map(|c| NfElem::rational(c.clone()));
    let quad = UPoly::new(vec![uu.mul(&uu).sub(&field.w), uu.add(&uu).neg(), NfElem::one()]);
    let (p, q) = (lift(rest.p()).rem(&quad), lift(rest.q()).rem(&quad));
    let (g, qinv, _) = q.ext_gcd(&quad);
    if g.deg() != 0 || g.is_zero() {
        return Err(Error::Internal("q vanishes at a root of the norm".into()));
    }
    // x0 = r1 z + r0 with r0, r1 real, so the prime is X - r1 Y - r0
    let x0 = p.mul(&qinv).neg().rem(&quad);
    let (b, c) = (x0.coeff(1).neg(), x0.coeff(0).neg());
    Ok(LinearPrime::monic_x(z.re.eval_poly(b.value()), z.re.eval_poly(c.value())))
}

fn prime_by_evaluation(rest: &CircleElem<Rat>, z: &ComplexAlg) -> Result<LinearPrime> {
    let pz = z.eval_rational_poly(rest.p());
    let qz = z.eval_rational_poly(rest.q());
    Ok(prime_through(&pz.neg().try_div(&qz)?, z))
}

/// The unit `c` in `u = c * prod(prime^m)`.
///
/// Leading forms multiply into `F[X,Y]/(X^2+Y^2)`, and `X -> i, Y -> 1`
/// maps that ring to `F(i)`: the leading form of `u` goes to
/// `p_d + q_{d-1} i` and that of `X + bY + c` to `b + i`.
fn leading_unit(
    u: &CircleElem<Rat>,
    factors: &[(LinearPrime, usize)],
    d: usize,
    bound: usize,
) -> Result<RealAlg> {
    let lead = (u.p().coeff(d), if d == 0 { Rat::zero() } else { u.q().coeff(d - 1) });
    let xs: Vec<(&RealAlg, usize)> =
        factors.iter().filter(|(p, _)| !p.a().is_zero()).map(|(p, m)| (p.b(), *m)).collect();

    if let Some(bs) = xs.iter().map(|(b, m)| b.to_rat().map(|b| (b, *m))).collect::<Option<Vec<_>>>() {
        // prod (b + i)^m over Q(i)
        let mut acc = (Rat::one(), Rat::zero());
        for (b, m) in &bs {
            for _ in 0..*m {
                acc = (&acc.0 * b - &acc.1, &acc.0 + &acc.1 * b);
            }
        }
        let n2 = &acc.0 * &acc.0 + &acc.1 * &acc.1;
        let re = (&lead.0 * &acc.0 + &lead.1 * &acc.1) / &n2;
        let im = (&lead.1 * &acc.0 - &lead.0 * &acc.1) / &n2;
        if !im.is_zero() {
            return Err(Error::Internal("leading unit is not real".into()));
        }
        return Ok(RealAlg::from_rat(re));
    }

    // |c|^2 = |lead|^2 / prod (b^2 + 1)^m; the sign comes from enclosures
    let mut den = RealAlg::one();
    for (b, m) in &xs {
        let b2 = b.checked_mul(b, bound)?.add(&RealAlg::one());
        for _ in 0..*m {
            den = den.checked_mul(&b2, bound)?;
        }
    }
    let lead2 = RealAlg::from_rat(&lead.0 * &lead.0 + &lead.1 * &lead.1);
    let abs = lead2.checked_div(&den, bound)?.checked_sqrt(bound)?;
    let mut width = Rat::new(1.into(), 1024.into());
    loop {
        // Re(lead * prod (b - i)^m) has the sign of c
        let mut re = Iv::point(lead.0.clone());
        let mut im = Iv::point(lead.1.clone());
        for (b, m) in &xs {
            let bi = b.refine_to_width(&width).interval();
            for _ in 0..*m {
                let next_re = re.mul(&bi).add(&im);
                im = im.mul(&bi).sub(&re);
                re = next_re;
            }
        }
        if !re.contains_zero() {
            return Ok(if re.lo > Rat::zero() { abs } else { abs.neg() });
        }
        width /= Rat::from_integer(1024.into());
    }
}

/// The prime `X + bY + c` through `(x0, z)` and its conjugate, `z` nonreal.
fn prime_through(x0: &ComplexAlg, z: &ComplexAlg) -> LinearPrime {
    let b = x0.im.div(&z.im).neg();
    let c = x0.re.add(&b.mul(&z.re)).neg();
    LinearPrime::monic_x(b, c)
}

/// Generator of the ideal spanned by `gens`: the product of common primes
/// at minimum multiplicity, with unit 1. Zero entries are ignored.
pub fn ideal_gcd(gens: &[CircleElem]) -> Result<CircleElem> {
    ideal_gcd_bounded(gens, DEFAULT_DEGREE_BOUND)
}

pub fn ideal_gcd_bounded(gens: &[CircleElem], bound: usize) -> Result<CircleElem> {
    let nonzero: Vec<&CircleElem> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroInput);
    }
    let rational: Vec<CircleElem<Rat>> = nonzero
        .iter()
        .map(|g| g.to_rational().ok_or(Error::IrrationalCoefficients))
        .collect::<Result<_>>()?;
    // common primes vanish at common roots of the norms
    let g = rational.iter().fold(QPoly::zero(), |acc, u| acc.gcd(&u.norm()));
    if g.deg() == 0 {
        return Ok(CircleElem::one());
    }
    let mut common = factor_bounded(nonzero[0], bound)?.factors;
    for u in &nonzero[1..] {
        let fs = factor_bounded(u, bound)?.factors;
        common = common
            .into_iter()
            .filter_map(|(p, m)| fs.iter().find(|(q, _)| *q == p).map(|(_, k)| (p, m.min(*k))))
            .collect();
    }
    Ok(Factorization { unit: RealAlg::one(), factors: common }.reconstruct())
}

/// Both primes through the points of the circle above `z`.
fn primes_over(z: &ComplexAlg) -> [LinearPrime; 2] {
    let w = z.mul(z).add(&ComplexAlg::one()).neg().sqrt();
    [prime_through(&w, z), prime_through(&w.neg(), z)]
}
