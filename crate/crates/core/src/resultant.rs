//! Sylvester matrices, resultants and Bézout cofactors.
//!
//! Two independent resultant algorithms are kept: a fraction-free (Bareiss)
//! determinant of the Sylvester matrix and the subresultant polynomial
//! remainder sequence. Each checks the other in the test suite.

use std::fmt;

use crate::bipoly::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};
use crate::upoly::UPoly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ResultantMode {
    Det,
    #[default]
    Prs,
}

impl std::str::FromStr for ResultantMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "det" => Ok(ResultantMode::Det),
            "prs" => Ok(ResultantMode::Prs),
            other => Err(format!("unknown resultant mode '{other}' (expected det or prs)")),
        }
    }
}

/// The `(n+m) x (n+m)` Sylvester matrix of `f` (degree n) and `g` (degree m).
///
/// Rows `0..m` hold the coefficients of `f` from the leading one down,
/// shifted right by the row index; rows `m..m+n` hold those of `g`.
#[derive(Clone, PartialEq)]
pub struct SylMatrix<R> {
    pub rows: Vec<Vec<R>>,
    pub deg_f: usize,
    pub deg_g: usize,
}

impl<R: Ring> fmt::Debug for SylMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

impl<R: Ring> SylMatrix<R> {
    pub fn size(&self) -> usize {
        self.deg_f + self.deg_g
    }

    pub fn determinant(&self) -> R {
        bareiss_det(self.rows.clone())
    }
}

fn check_nonconstant<R: Ring>(p: &UPoly<R>) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(())
}

pub fn sylvester_matrix<R: Ring>(f: &UPoly<R>, g: &UPoly<R>) -> Result<SylMatrix<R>> {
    check_nonconstant(f)?;
    check_nonconstant(g)?;
    Ok(sylvester_unchecked(f, g))
}

fn sylvester_unchecked<R: Ring>(f: &UPoly<R>, g: &UPoly<R>) -> SylMatrix<R> {
    let (n, m) = (f.deg(), g.deg());
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    let shifted = |p: &UPoly<R>, shift: usize| {
        let mut row = vec![R::zero(); size];
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        row
    };
    for i in 0..m {
        rows.push(shifted(f, i));
    }
    for j in 0..n {
        rows.push(shifted(g, j));
    }
    SylMatrix { rows, deg_f: n, deg_g: m }
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return R::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { R::one() } else { m[n - 1][n - 1].clone() };
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Subresultant PRS resultant over an integral domain with exact division.
///
/// Total for all inputs: zero if either input is zero, and
/// `lc^deg(other)` when one side is a nonzero constant.
pub fn resultant_prs<R: Ring>(f: &UPoly<R>, g: &UPoly<R>) -> R {
    if f.is_zero() || g.is_zero() {
        return R::zero();
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
    }
    if b.deg() == 0 {
        let r = b.lc().pow(a.deg() as u32);
        return if negate { r.neg() } else { r };
    }
    let mut g_acc = R::one();
    let mut h = R::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b);
        a = b;
        let denom = g_acc.mul(&h.pow(delta as u32));
        b = UPoly::new(
            r.coeffs()
                .iter()
                .map(|c| c.div_exact(&denom).expect("subresultant division must be exact"))
                .collect(),
        );
        g_acc = a.lc();
        h = match delta {
            0 => h,
            1 => g_acc.clone(),
            d => g_acc
                .pow(d as u32)
                .div_exact(&h.pow(d as u32 - 1))
                .expect("subresultant h update must be exact"),
        };
        if b.is_zero() {
            return R::zero();
        }
        if b.deg() == 0 {
            break;
        }
    }
    let da = a.deg() as u32;
    let lb = b.lc();
    let res = match da {
        0 => R::one(),
        1 => lb,
        d => lb
            .pow(d)
            .div_exact(&h.pow(d - 1))
            .expect("final subresultant division must be exact"),
    };
    if negate {
        res.neg()
    } else {
        res
    }
}

/// `Res(f, g) = det(Syl(f, g))` for nonconstant `f` and `g`.
pub fn resultant<R: Ring>(f: &UPoly<R>, g: &UPoly<R>, mode: ResultantMode) -> Result<R> {
    check_nonconstant(f)?;
    check_nonconstant(g)?;
    Ok(match mode {
        ResultantMode::Det => sylvester_unchecked(f, g).determinant(),
        ResultantMode::Prs => resultant_prs(f, g),
    })
}

/// Resultant of two bivariate polynomials with respect to `eliminate`,
/// as a polynomial in the remaining variable.
pub fn resultant_bivar<R: Ring>(f: &BiPoly<R>, g: &BiPoly<R>, eliminate: Var) -> Result<UPoly<R>> {
    let fu = f.as_upoly_in(eliminate);
    let gu = g.as_upoly_in(eliminate);
    check_nonconstant(&fu)?;
    check_nonconstant(&gu)?;
    Ok(resultant_prs(&fu, &gu))
}

/// Cofactors with `s*f + t*g = res`.
#[derive(Clone, Debug, PartialEq)]
pub struct BezoutCofactors<F: Ring> {
    pub s: UPoly<F>,
    pub t: UPoly<F>,
    pub res: F,
    /// Set when the resultant vanishes; then `s = t = 0`.
    pub degenerate: bool,
}

/// Solves the linear system behind `s*f + t*g = Res(f, g)` with
/// `deg s < deg g`, `deg t < deg f`.
pub fn bezout_cofactors<F: Field>(f: &UPoly<F>, g: &UPoly<F>) -> Result<BezoutCofactors<F>> {
    check_nonconstant(f)?;
    check_nonconstant(g)?;
    let res = resultant_prs(f, g);
    if res.is_zero() {
        return Ok(BezoutCofactors {
            s: UPoly::zero(),
            t: UPoly::zero(),
            res,
            degenerate: true,
        });
    }
    let (n, m) = (f.deg(), g.deg());
    let size = n + m;
    // Unknowns: s_0..s_{m-1}, t_0..t_{n-1}. Row k: coefficient of x^k.
    let mut a = vec![vec![F::zero(); size + 1]; size];
    for i in 0..m {
        for (d, c) in f.coeffs().iter().enumerate() {
            a[i + d][i] = c.clone();
        }
    }
    for j in 0..n {
        for (d, c) in g.coeffs().iter().enumerate() {
            a[j + d][m + j] = c.clone();
        }
    }
    a[0][size] = res.clone();
    let x = solve_augmented(a).ok_or_else(|| {
        Error::Internal("Sylvester system singular despite nonzero resultant".into())
    })?;
    Ok(BezoutCofactors {
        s: UPoly::new(x[..m].to_vec()),
        t: UPoly::new(x[m..].to_vec()),
        res,
        degenerate: false,
    })
}

/// Gauss-Jordan elimination on an augmented square system.
fn solve_augmented<F: Field>(mut a: Vec<Vec<F>>) -> Option<Vec<F>> {
    let n = a.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let inv = a[col][col].inv();
        for v in a[col].iter_mut() {
            *v = v.mul(&inv);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..=n {
                let delta = factor.mul(&a[col][c]);
                a[r][c] = a[r][c].sub(&delta);
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}
