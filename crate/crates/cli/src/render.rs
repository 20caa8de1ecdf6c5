use num_bigint::BigInt;

use imcircle::bipoly::BiPoly;
use imcircle::circle::{CircleElem, LinearPrime};
use imcircle::expr::{format_circle_by, format_poly_by};
use imcircle::realalg::{ComplexAlg, RealAlg};
use imcircle::ring::{rat_from_str, Rat, Ring};

/// Accepts `p/q`, an integer, or a decimal such as `0.001`.
pub fn parse_width(s: &str) -> Result<Rat, String> {
    let r = match s.split_once('.') {
        Some((int, frac)) if !frac.is_empty() && frac.bytes().all(|b| b.is_ascii_digit()) => {
            let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| format!("invalid width {s:?}"))?;
            Rat::new(digits, BigInt::from(10).pow(frac.len() as u32))
        }
        _ => rat_from_str(s).ok_or_else(|| format!("invalid width {s:?}"))?,
    };
    if r <= Rat::zero() {
        return Err("width must be positive".into());
    }
    Ok(r)
}

/// Text for real algebraic numbers: exact for rationals, otherwise a
/// rounded decimal within the refine width, marked `≈`.
pub struct Renderer {
    digits: u32,
}

impl Renderer {
    pub fn new(width: &Rat) -> Self {
        // rounding to d digits errs by at most 10^-d / 2
        let mut digits = 0;
        while Rat::new(1.into(), BigInt::from(2) * BigInt::from(10).pow(digits)) >= *width {
            digits += 1;
        }
        Renderer { digits }
    }

    pub fn real(&self, a: &RealAlg) -> String {
        match a.to_rat() {
            Some(r) => r.to_string(),
            None => format!("≈{}", a.to_decimal(self.digits)),
        }
    }

    fn signed(&self, a: &RealAlg) -> (bool, String) {
        let neg = a.sign() < 0;
        (neg, self.real(&if neg { a.neg() } else { a.clone() }))
    }

    pub fn complex(&self, z: &ComplexAlg) -> String {
        if z.im.is_zero() {
            return self.real(&z.re);
        }
        let (neg, im) = self.signed(&z.im);
        let im = if im == "1" { "i".to_string() } else { format!("{im}*i") };
        match (z.re.is_zero(), neg) {
            (true, false) => im,
            (true, true) => format!("-{im}"),
            (false, false) => format!("{} + {im}", self.real(&z.re)),
            (false, true) => format!("{} - {im}", self.real(&z.re)),
        }
    }

    pub fn elem(&self, u: &CircleElem) -> String {
        format_circle_by(u, &|c| self.signed(c))
    }

    pub fn poly(&self, f: &BiPoly<RealAlg>) -> String {
        format_poly_by(f, &|c| self.signed(c))
    }

    pub fn prime(&self, p: &LinearPrime) -> String {
        self.poly(&BiPoly::from_terms([
            ((1, 0), p.a().clone()),
            ((0, 1), p.b().clone()),
            ((0, 0), p.c().clone()),
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use imcircle::ring::rat;

    #[test]
    fn widths() {
        assert_eq!(parse_width("1/1000").unwrap(), rat(1, 1000));
        assert_eq!(parse_width("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_width("2").unwrap(), rat(2, 1));
        assert!(parse_width("0").is_err());
        assert!(parse_width("-1/2").is_err());
        assert!(parse_width("abc").is_err());
    }

    #[test]
    fn digits_meet_the_width() {
        assert_eq!(Renderer::new(&rat(1, 1_000_000_000)).digits, 9);
        assert_eq!(Renderer::new(&rat(1, 2)).digits, 1);
        assert_eq!(Renderer::new(&rat(1, 1)).digits, 0);
    }

    #[test]
    fn complex_text() {
        let r = Renderer::new(&rat(1, 1000));
        let half = RealAlg::from_rat(rat(1, 2));
        assert_eq!(r.complex(&ComplexAlg::i()), "i");
        assert_eq!(r.complex(&ComplexAlg::new(half.clone(), RealAlg::from_int(-2))), "1/2 - 2*i");
        let s = RealAlg::from_int(2).sqrt().unwrap();
        assert_eq!(r.complex(&ComplexAlg::new(RealAlg::zero(), s)), "≈1.414*i");
    }
}
