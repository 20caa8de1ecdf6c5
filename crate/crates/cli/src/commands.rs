use serde_json::{json, Value};

use imcircle::bipoly::{BiPoly, Var};
use imcircle::circle::{
    as_prime, extended_gcd_bounded, factor_bounded, ideal_gcd_bounded, is_prime, obstruction_certificate,
    quotient_map_eval, CircleElem, LinearPrime,
};
use imcircle::error::{Error, Result};
use imcircle::expr::{format_upoly, parse_poly, parse_univariate};
use imcircle::json::{
    certificate_to_json, circle_to_json, complex_to_json, factorization_to_json, prime_to_json, rat_to_json,
    realalg_to_json,
};
use imcircle::realalg::{complex_root_pairs_bounded, isolate_real_roots_bounded};
use imcircle::resultant::{resultant, resultant_bivar, sylvester_matrix};
use imcircle::ring::Rat;
use imcircle::upoly::QPoly;

use crate::render::Renderer;
use crate::{Command, Config};

struct Ctx<'a> {
    config: &'a Config,
    r: Renderer,
}

impl Ctx<'_> {
    fn bound(&self) -> usize {
        self.config.max_algdeg as usize
    }

    fn poly(&self, text: &str) -> Result<BiPoly<Rat>> {
        let f = parse_poly(text)?;
        let degree = f.total_degree().finite().unwrap_or(0);
        let bound = self.config.max_degree as usize;
        if degree > bound {
            return Err(Error::DegreeBound { degree, bound });
        }
        Ok(f)
    }

    fn elem(&self, text: &str) -> Result<CircleElem> {
        Ok(CircleElem::from_rational(&CircleElem::<Rat>::reduce(&self.poly(text)?)))
    }

    fn univariate(&self, text: &str) -> Result<(QPoly, Var)> {
        self.poly(text)?;
        parse_univariate(text)
    }

    fn prime(&self, text: &str) -> Result<LinearPrime> {
        Ok(as_prime(&self.elem(text)?)?.1)
    }

    /// Both arguments univariate in the same variable.
    fn pair(&self, f: &str, g: &str) -> Result<(QPoly, QPoly)> {
        let (f, vf) = self.univariate(f)?;
        let (g, vg) = self.univariate(g)?;
        if vf != vg && f.deg() > 0 && g.deg() > 0 {
            return Err(Error::InvalidArgument(
                "polynomials are in different variables; use --eliminate for bivariate resultants".into(),
            ));
        }
        Ok((f, g))
    }

    fn out(&self, text: String, json: impl FnOnce() -> Value) -> String {
        if self.config.json {
            json().to_string()
        } else {
            text
        }
    }

    fn elem_out(&self, u: &CircleElem) -> String {
        self.out(self.r.elem(u), || circle_to_json(u))
    }

    fn bool_out(&self, b: bool) -> String {
        b.to_string()
    }
}

pub fn run(command: &Command, config: &Config) -> Result<String> {
    let cx = Ctx { config, r: Renderer::new(&config.refine_width) };
    Ok(match command {
        Command::Reduce { f } => cx.elem_out(&cx.elem(f)?),
        Command::Add { u, v } => cx.elem_out(&cx.elem(u)?.add(&cx.elem(v)?)),
        Command::Mul { u, v } => cx.elem_out(&cx.elem(u)?.mul(&cx.elem(v)?)),
        Command::Norm { u } => {
            let n = CircleElem::<Rat>::reduce(&cx.poly(u)?).norm();
            cx.out(format_upoly(&n, Var::Y), || json!(n.coeffs().iter().map(rat_to_json).collect::<Vec<_>>()))
        }
        Command::IsUnit { u } => cx.bool_out(cx.elem(u)?.is_unit()),
        Command::IsPrime { u } => {
            let u = cx.elem(u)?;
            if !is_prime(&u) {
                cx.out("false".into(), || json!({ "is_prime": false }))
            } else {
                let (unit, p) = as_prime(&u)?;
                cx.out(format!("true\nunit: {}\nprime: {}", cx.r.real(&unit), cx.r.prime(&p)), || {
                    json!({ "is_prime": true, "unit": realalg_to_json(&unit), "prime": prime_to_json(&p) })
                })
            }
        }
        Command::Factor { u } => {
            let f = factor_bounded(&cx.elem(u)?, cx.bound())?;
            let mut text = cx.r.real(&f.unit);
            for (p, m) in &f.factors {
                text.push_str(&format!(" * ({})", cx.r.prime(p)));
                if *m > 1 {
                    text.push_str(&format!("^{m}"));
                }
            }
            cx.out(text, || factorization_to_json(&f))
        }
        Command::Gcd { gens } => {
            let gens = gens.iter().map(|g| cx.elem(g)).collect::<Result<Vec<_>>>()?;
            cx.elem_out(&ideal_gcd_bounded(&gens, cx.bound())?)
        }
        Command::Xgcd { u, v } => {
            let g = extended_gcd_bounded(&cx.elem(u)?, &cx.elem(v)?, cx.bound())?;
            cx.out(format!("d = {}\ns = {}\nt = {}", cx.r.elem(&g.d), cx.r.elem(&g.s), cx.r.elem(&g.t)), || {
                json!({ "d": circle_to_json(&g.d), "s": circle_to_json(&g.s), "t": circle_to_json(&g.t) })
            })
        }
        Command::Divides { d, u } => {
            let q = cx.elem(u)?.exact_divide(&cx.elem(d)?)?;
            let text = match &q {
                Some(w) => format!("true\nquotient: {}", cx.r.elem(w)),
                None => "false".into(),
            };
            cx.out(text, || json!({ "divides": q.is_some(), "quotient": q.as_ref().map(circle_to_json) }))
        }
        Command::Phi { prime, f } => {
            let z = quotient_map_eval(&cx.prime(prime)?, &cx.elem(f)?);
            cx.out(cx.r.complex(&z), || complex_to_json(&z))
        }
        Command::Witness { prime } => {
            let c = obstruction_certificate(&cx.prime(prime)?);
            let text = format!(
                "prime: {}\nwitness: {}\nphi(witness): {}\nim(phi(witness)) != 0: {}",
                cx.r.prime(&c.prime),
                cx.r.elem(&c.witness),
                cx.r.complex(&c.phi_witness),
                c.phi_im_nonzero
            );
            cx.out(text, || certificate_to_json(&c))
        }
        Command::Resultant { f, g, mode, eliminate } => match eliminate.as_deref() {
            Some(v) => {
                let var = if v == "X" { Var::X } else { Var::Y };
                let r = resultant_bivar(&cx.poly(f)?, &cx.poly(g)?, var)?;
                cx.out(format_upoly(&r, var.other()), || json!(r.coeffs().iter().map(rat_to_json).collect::<Vec<_>>()))
            }
            None => {
                let (f, g) = cx.pair(f, g)?;
                let r = resultant(&f, &g, *mode)?;
                cx.out(r.to_string(), || rat_to_json(&r))
            }
        },
        Command::Sylvester { f, g } => {
            let (f, g) = cx.pair(f, g)?;
            let m = sylvester_matrix(&f, &g)?;
            let text = m
                .rows
                .iter()
                .map(|row| format!("[{}]", row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
                .collect::<Vec<_>>()
                .join("\n");
            cx.out(text, || {
                json!(m.rows.iter().map(|row| row.iter().map(rat_to_json).collect::<Vec<_>>()).collect::<Vec<_>>())
            })
        }
        Command::Isolate { h } => {
            let (h, _) = cx.univariate(h)?;
            let roots = isolate_real_roots_bounded(&h, cx.bound())?;
            let text = roots
                .iter()
                .map(|(a, m)| {
                    let mut line = format!("{}  mult {m}", cx.r.real(a));
                    if !a.is_rational() {
                        line.push_str(&format!("  root of {} in [{}, {}]", format_poly_z(a), a.lo(), a.hi()));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            cx.out(text, || {
                json!(roots.iter().map(|(a, m)| json!({ "root": realalg_to_json(a), "mult": m })).collect::<Vec<_>>())
            })
        }
        Command::ComplexRoots { h } => {
            let (h, _) = cx.univariate(h)?;
            let pairs = complex_root_pairs_bounded(&h, cx.bound())?;
            let text = pairs
                .iter()
                .map(|(z, m)| format!("{}  mult {m}", cx.r.complex(z)))
                .collect::<Vec<_>>()
                .join("\n");
            cx.out(text, || {
                json!(pairs.iter().map(|(z, m)| json!({ "root": complex_to_json(z), "mult": m })).collect::<Vec<_>>())
            })
        }
    })
}

/// The defining polynomial of `a` in the variable `T`.
fn format_poly_z(a: &imcircle::realalg::RealAlg) -> String {
    format_upoly(&a.poly().to_rational(), Var::X).replace('X', "T")
}
