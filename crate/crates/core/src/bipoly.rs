//! Sparse bivariate polynomials in X and Y.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::Ring;
use crate::upoly::{Degree, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "X"),
            Var::Y => write!(f, "Y"),
        }
    }
}

/// Map from `(deg_x, deg_y)` to a nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct BiPoly<R> {
    terms: BTreeMap<(u32, u32), R>,
}

impl<R: Ring> fmt::Debug for BiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: Ring> Default for BiPoly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Ring> BiPoly<R> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::term(R::one(), 1, 0),
            Var::Y => Self::term(R::one(), 0, 1),
        }
    }

    pub fn term(c: R, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), R)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in it {
            p.add_term(i, j, &c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: &R) {
        if c.is_zero() {
            return;
        }
        let key = (i, j);
        let sum = match self.terms.get(&key) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> R {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, &a.mul(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, a)| (*k, a.mul(c))))
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

    pub fn deg_x(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(i, _)| i as usize)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn deg_y(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(_, j)| j as usize)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn deg_in(&self, v: Var) -> Degree {
        match v {
            Var::X => self.deg_x(),
            Var::Y => self.deg_y(),
        }
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(i, j)| (i + j) as usize)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Evaluates at `(x, y)` in a ring `T` into which coefficients embed.
    pub fn eval<T: Ring>(&self, x: &T, y: &T, embed: impl Fn(&R) -> T) -> T {
        self.as_upoly_in(Var::X)
            .eval_with(x, |cy: &UPoly<R>| cy.eval_with(y, &embed))
    }

    /// View as a polynomial in `v` whose coefficients are polynomials in the
    /// other variable.
    pub fn as_upoly_in(&self, v: Var) -> UPoly<UPoly<R>> {
        let n = self.deg_in(v).finite().map_or(0, |d| d + 1);
        let mut outer: Vec<BTreeMap<u32, R>> = vec![BTreeMap::new(); n];
        for (&(i, j), c) in &self.terms {
            let (main, rest) = match v {
                Var::X => (i, j),
                Var::Y => (j, i),
            };
            outer[main as usize].insert(rest, c.clone());
        }
        UPoly::new(
            outer
                .into_iter()
                .map(|m| {
                    let len = m.keys().next_back().map_or(0, |&k| k as usize + 1);
                    let mut cs = vec![R::zero(); len];
                    for (k, c) in m {
                        cs[k as usize] = c;
                    }
                    UPoly::new(cs)
                })
                .collect(),
        )
    }

    /// Inverse of [`BiPoly::as_upoly_in`].
    pub fn from_upoly_in(p: &UPoly<UPoly<R>>, v: Var) -> Self {
        let mut out = Self::zero();
        for (main, inner) in p.coeffs().iter().enumerate() {
            for (rest, c) in inner.coeffs().iter().enumerate() {
                let (i, j) = match v {
                    Var::X => (main as u32, rest as u32),
                    Var::Y => (rest as u32, main as u32),
                };
                out.add_term(i, j, c);
            }
        }
        out
    }

    /// Embeds a univariate polynomial in the given variable.
    pub fn from_univariate(p: &UPoly<R>, v: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            (if v == Var::X { (k, 0) } else { (0, k) }, c.clone())
        }))
    }

    /// `Some(p)` when the polynomial only involves `v`.
    pub fn to_univariate(&self, v: Var) -> Option<UPoly<R>> {
        let other_free = self.terms.keys().all(|&(i, j)| match v {
            Var::X => j == 0,
            Var::Y => i == 0,
        });
        if !other_free {
            return None;
        }
        let u = self.as_upoly_in(v);
        Some(UPoly::new(u.coeffs().iter().map(|c| c.coeff(0)).collect()))
    }

    /// Substitutes `X := g(Y)`, giving a polynomial in `Y`.
    pub fn subst_x(&self, g: &UPoly<R>) -> UPoly<R> {
        self.as_upoly_in(Var::X)
            .coeffs()
            .iter()
            .rev()
            .fold(UPoly::zero(), |acc, c| acc.mul(g).add(c))
    }

    /// Substitutes `Y := g(X)`, giving a polynomial in `X`.
    pub fn subst_y(&self, g: &UPoly<R>) -> UPoly<R> {
        self.as_upoly_in(Var::Y)
            .coeffs()
            .iter()
            .rev()
            .fold(UPoly::zero(), |acc, c| acc.mul(g).add(c))
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> BiPoly<T> {
        BiPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Rat};

    fn circle() -> BiPoly<Rat> {
        BiPoly::from_terms([((2, 0), rat(1, 1)), ((0, 2), rat(1, 1)), ((0, 0), rat(1, 1))])
    }

    #[test]
    fn degrees() {
        assert_eq!(circle().deg_x(), Degree::Finite(2));
        assert_eq!(circle().deg_y(), Degree::Finite(2));
        assert_eq!(BiPoly::<Rat>::zero().deg_x(), Degree::MinusInfinity);
    }

    #[test]
    fn eval_linear_form() {
        // X + 2Y + 1 at (1, 1) is 4
        let f = BiPoly::from_terms([((1, 0), rat(1, 1)), ((0, 1), rat(2, 1)), ((0, 0), rat(1, 1))]);
        assert_eq!(f.eval(&rat(1, 1), &rat(1, 1), |c| c.clone()), rat(4, 1));
    }

    #[test]
    fn view_round_trip() {
        let f = circle().mul(&BiPoly::var(Var::X)).add(&BiPoly::term(rat(3, 1), 1, 4));
        for v in [Var::X, Var::Y] {
            assert_eq!(BiPoly::from_upoly_in(&f.as_upoly_in(v), v), f);
        }
    }

    #[test]
    fn substitution() {
        // X := -Y in X^2 + Y^2 + 1 gives 2Y^2 + 1
        let g = UPoly::from_i64s(&[0, -1]);
        assert_eq!(circle().subst_x(&g), UPoly::from_i64s(&[1, 0, 2]));
        assert_eq!(circle().subst_y(&UPoly::from_i64s(&[1])), UPoly::from_i64s(&[2, 0, 1]));
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = BiPoly::<Rat>::var(Var::X);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.sub(&x).num_terms(), 0);
    }
}
