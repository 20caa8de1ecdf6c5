//! Dense univariate polynomials over a generic coefficient ring.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::ring::{Field, Rat, Ring};

/// Polynomial degree with a distinguished value for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::MinusInfinity, Degree::MinusInfinity) => Ordering::Equal,
            (Degree::MinusInfinity, _) => Ordering::Less,
            (_, Degree::MinusInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`. Trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> fmt::Debug for UPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly{:?}", self.coeffs)
    }
}

impl<R: Ring> Default for UPoly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree, treating the zero polynomial as degree 0. Only for callers
    /// that have already excluded zero.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.sub(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.neg(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
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

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Evaluates at a point of another ring, embedding each coefficient.
    pub fn eval_with<T: Ring>(&self, x: &T, embed: impl Fn(&R) -> T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc.mul(x).add(&embed(c)))
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(g).add(&Self::constant(c.clone())))
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> UPoly<T> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// `p(-x)`.
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// `x^deg * p(1/x)`.
    pub fn reverse(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) * f mod g`, computed without division.
    pub fn prem(&self, g: &Self) -> Self {
        assert!(!g.is_zero(), "pseudo-remainder by zero polynomial");
        let dg = g.deg();
        if self.degree() < g.degree() {
            return self.clone();
        }
        let lc = g.lc();
        let mut r = self.clone();
        let mut steps = self.deg() - dg + 1;
        while !r.is_zero() && r.deg() >= dg {
            let shift = r.deg() - dg;
            let t = g.scale(&r.lc()).shift(shift);
            r = r.scale(&lc).sub(&t);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&lc.pow(steps as u32));
        }
        r
    }

    /// Exact quotient `self / g` when `g` divides `self`, using exact
    /// division of coefficients in `R`.
    pub fn div_exact_poly(&self, g: &Self) -> Option<Self> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg() < g.deg() {
            return None;
        }
        let dg = g.deg();
        let lc = g.lc();
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.deg() - dg + 1];
        while !r.is_zero() && r.deg() >= dg {
            let shift = r.deg() - dg;
            let c = r.lc().div_exact(&lc)?;
            r = r.sub(&g.scale(&c).shift(shift));
            q[shift] = c;
        }
        r.is_zero().then(|| Self::new(q))
    }
}

impl<R: Field> UPoly<R> {
    /// Euclidean division: `(q, r)` with `self = q*g + r`, `deg r < deg g`.
    /// Panics if `g` is zero.
    pub fn divmod(&self, g: &Self) -> (Self, Self) {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.degree() < g.degree() {
            return (Self::zero(), self.clone());
        }
        let dg = g.deg();
        let inv = g.lc().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); self.deg() - dg + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + dg].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(gc));
            }
            q[k] = c;
        }
        r.truncate(dg);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.divmod(g).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Yun's square-free decomposition (characteristic zero).
    pub fn squarefree_decompose(&self) -> SquarefreeDecomposition<R> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let unit = self.lc();
        let f = self.monic();
        let mut parts = Vec::new();
        if f.deg() == 0 {
            return SquarefreeDecomposition { unit, parts };
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divmod(&a0).0;
        let c = df.divmod(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut mult = 1;
        while b.deg() > 0 {
            let a = b.gcd(&d);
            let nb = b.divmod(&a).0;
            let nc = d.divmod(&a).0;
            d = nc.sub(&nb.derivative());
            b = nb;
            if a.deg() > 0 {
                parts.push((a, mult));
            }
            mult += 1;
        }
        SquarefreeDecomposition { unit, parts }
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return Self::one();
        }
        self.divmod(&self.gcd(&self.derivative())).0.monic()
    }
}

/// `unit * Π part^mult`, parts monic, square-free and pairwise coprime.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition<R: Ring> {
    pub unit: R,
    pub parts: Vec<(UPoly<R>, usize)>,
}

impl<R: Field> SquarefreeDecomposition<R> {
    pub fn reconstruct(&self) -> UPoly<R> {
        self.parts.iter().fold(UPoly::constant(self.unit.clone()), |acc, (p, m)| {
            acc.mul(&p.pow(*m as u32))
        })
    }
}

impl<R: Ring> Ring for UPoly<R> {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        UPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UPoly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        UPoly::constant(R::from_i64(n))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_exact_poly(rhs)
    }
}

/// Integer polynomials.
pub type ZPoly = UPoly<BigInt>;
/// Rational polynomials.
pub type QPoly = UPoly<Rat>;

impl UPoly<BigInt> {
    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn to_rational(&self) -> QPoly {
        self.map(|c| Rat::from_integer(c.clone()))
    }

    /// Sign of `self(r)` for rational `r`, evaluated homogeneously in integers.
    pub fn sign_at(&self, r: &Rat) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (n, d) = (r.numer(), r.denom());
        let k = self.deg();
        let mut dpow = BigInt::one();
        let mut acc = BigInt::zero();
        // Horner on the homogenised form: sum a_i n^i d^(k-i).
        let mut pows = Vec::with_capacity(k + 1);
        for _ in 0..=k {
            pows.push(dpow.clone());
            dpow *= d;
        }
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * n + c * &pows[k - i];
        }
        crate::ring::int_sign(&acc)
    }

    /// Exact value at a rational point.
    pub fn eval_rat(&self, r: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * r + Rat::from_integer(c.clone()))
    }

    /// Maximum absolute coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl UPoly<Rat> {
    /// Clears denominators and content: the primitive integer polynomial
    /// with positive leading coefficient that is a rational multiple of `self`.
    pub fn to_primitive_integer(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = ZPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        );
        ints.primitive_part()
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<ZPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(ZPoly::new)
    }
}
