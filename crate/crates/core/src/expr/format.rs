use crate::bipoly::{BiPoly, Var};
use crate::circle::CircleElem;
use crate::realalg::RealAlg;
use crate::ring::{rat_sign, Rat, Ring};
use crate::upoly::UPoly;

/// Coefficients that can be printed as a sign and a magnitude.
pub trait Coefficient: Ring {
    fn is_negative(&self) -> bool;
    /// Text of `|self|`.
    fn abs_text(&self) -> String;
}

impl Coefficient for Rat {
    fn is_negative(&self) -> bool {
        rat_sign(self) < 0
    }

    fn abs_text(&self) -> String {
        let a = if self.is_negative() { -self } else { self.clone() };
        a.to_string()
    }
}

impl Coefficient for RealAlg {
    fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    fn abs_text(&self) -> String {
        let a = if self.is_negative() { self.neg() } else { self.clone() };
        a.to_string()
    }
}

fn monomial(i: u32, j: u32) -> String {
    let var = |name: &str, k: u32| match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    };
    [var("X", i), var("Y", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// Terms by descending `X` degree, then descending `Y` degree.
pub fn format_poly<C: Coefficient>(f: &BiPoly<C>) -> String {
    format_poly_by(f, &|c: &C| (c.is_negative(), c.abs_text()))
}

/// [`format_poly`] with coefficient text given as `(negative, |c|)`.
pub fn format_poly_by<C: Ring>(f: &BiPoly<C>, text: &dyn Fn(&C) -> (bool, String)) -> String {
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by(|a, b| b.0.cmp(a.0));
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (&(i, j), c)) in terms.into_iter().enumerate() {
        let (neg, a) = text(c);
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let m = monomial(i, j);
        if m.is_empty() {
            out.push_str(&a);
        } else if a == "1" {
            out.push_str(&m);
        } else {
            out.push_str(&a);
            out.push('*');
            out.push_str(&m);
        }
    }
    out
}

pub fn format_upoly<C: Coefficient>(f: &UPoly<C>, v: Var) -> String {
    format_poly(&BiPoly::from_univariate(f, v))
}

/// `<p> + (<q>)*X`, dropping whichever part is zero.
pub fn format_circle<C: Coefficient>(u: &CircleElem<C>) -> String {
    format_circle_by(u, &|c: &C| (c.is_negative(), c.abs_text()))
}

pub fn format_circle_by<C: Ring>(u: &CircleElem<C>, text: &dyn Fn(&C) -> (bool, String)) -> String {
    let p = format_poly_by(&BiPoly::from_univariate(u.p(), Var::Y), text);
    if u.q().is_zero() {
        return p;
    }
    let q = format!("({})*X", format_poly_by(&BiPoly::from_univariate(u.q(), Var::Y), text));
    if u.p().is_zero() {
        q
    } else {
        format!("{p} + {q}")
    }
}
