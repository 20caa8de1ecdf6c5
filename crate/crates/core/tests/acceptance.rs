//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use imcircle::bipoly::BiPoly;
use imcircle::circle::{
    as_prime, extended_gcd, factor, ideal_module_basis, is_prime, obstruction_certificate, prime_quadratic,
    quotient_map_eval, CircleElem, LinearPrime,
};
use imcircle::error::Error;
use imcircle::expr::{format_circle, format_poly, parse_poly};
use imcircle::realalg::{isolate_real_roots, odd_degree_root, ComplexAlg, RealAlg};
use imcircle::resultant::{bezout_cofactors, resultant, ResultantMode};
use imcircle::ring::{rat, Rat, Ring};
use imcircle::upoly::{QPoly, UPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rat(r: &mut ChaCha8Rng) -> Rat {
    rat(r.gen_range(-9..=9), r.gen_range(1..=4))
}

fn nonzero_rat(r: &mut ChaCha8Rng) -> Rat {
    loop {
        let q = small_rat(r);
        if !q.is_zero() {
            return q;
        }
    }
}

fn ra(q: Rat) -> RealAlg {
    RealAlg::from_rat(q)
}

fn ri(n: i64) -> RealAlg {
    RealAlg::from_int(n)
}

/// A polynomial of exact degree `deg`.
fn rat_poly_exact(r: &mut ChaCha8Rng, deg: usize) -> QPoly {
    let mut cs: Vec<Rat> = (0..deg).map(|_| small_rat(r)).collect();
    cs.push(nonzero_rat(r));
    UPoly::new(cs)
}

fn random_bipoly(r: &mut ChaCha8Rng, deg: u32) -> BiPoly<Rat> {
    let mut terms = Vec::new();
    for i in 0..=deg {
        for j in 0..=deg - i {
            if r.gen_bool(0.5) {
                terms.push(((i, j), small_rat(r)));
            }
        }
    }
    BiPoly::from_terms(terms)
}

fn rational_elem(r: &mut ChaCha8Rng, deg: u32) -> CircleElem {
    CircleElem::from_rational(&CircleElem::<Rat>::reduce(&random_bipoly(r, deg)))
}

fn lift(p: &QPoly) -> UPoly<RealAlg> {
    p.map(|c| ra(c.clone()))
}

fn norm_oracle<F: Ring>(p: &UPoly<F>, q: &UPoly<F>) -> UPoly<F> {
    let y2_plus_1 = UPoly::new(vec![F::one(), F::zero(), F::one()]);
    p.mul(p).add(&q.mul(q).mul(&y2_plus_1))
}

fn linear(a: RealAlg, b: RealAlg, c: RealAlg) -> CircleElem {
    CircleElem::new(UPoly::new(vec![c, b]), UPoly::constant(a))
}

/// A random linear form with `(a, b) != (0, 0)`; a fifth of them carry a
/// square root coefficient.
fn random_linear(r: &mut ChaCha8Rng) -> (RealAlg, RealAlg, RealAlg) {
    loop {
        let mut coeffs: Vec<RealAlg> = (0..3).map(|_| ra(small_rat(r))).collect();
        if r.gen_bool(0.2) {
            let k = r.gen_range(0..3);
            let s = ri(r.gen_range(2..=7)).sqrt().unwrap();
            coeffs[k] = coeffs[k].add(&s);
        }
        if !(coeffs[0].is_zero() && coeffs[1].is_zero()) {
            let c = coeffs.pop().unwrap();
            let b = coeffs.pop().unwrap();
            let a = coeffs.pop().unwrap();
            return (a, b, c);
        }
    }
}

fn random_prime(r: &mut ChaCha8Rng) -> LinearPrime {
    let (a, b, c) = random_linear(r);
    LinearPrime::normalize(a, b, c).unwrap().1
}

fn elem_from_text(text: &str) -> CircleElem {
    CircleElem::from_rational(&CircleElem::<Rat>::reduce(&parse_poly(text).unwrap()))
}

fn units_law() -> Check {
    let mut r = rng(1);
    let mut units = 0;
    for _ in 0..1000 {
        let deg = r.gen_range(0..=4);
        let u = rational_elem(&mut r, deg);
        let n = norm_oracle(u.p(), u.q());
        let norm_is_unit = !n.is_zero() && n.is_constant();
        ensure!(u.is_unit() == norm_is_unit, "is_unit disagrees with the norm for {}", format_circle(&u));
        units += usize::from(norm_is_unit);
    }
    ensure!(units > 0, "no units sampled");
    for _ in 0..100 {
        let (a, b) = loop {
            let (a, b) = (small_rat(&mut r), small_rat(&mut r));
            if a != b {
                break (a, b);
            }
        };
        let diff = CircleElem::constant(ra(a.clone())).sub(&CircleElem::constant(ra(b.clone())));
        ensure!(diff.is_unit(), "{a} - {b} is not a unit");
    }
    Ok(())
}

fn prime_law() -> Check {
    let mut r = rng(2);
    for _ in 0..500 {
        let (a, b, c) = random_linear(&mut r);
        let u = linear(a, b, c);
        ensure!(is_prime(&u), "{} rejected", format_circle(&u));
        let (unit, p) = as_prime(&u).map_err(|e| e.to_string())?;
        ensure!(p.to_elem().scale(&unit) == u, "normalization of {} does not reconstruct", format_circle(&u));
    }
    for _ in 0..200 {
        let k = r.gen_range(2..=3);
        let mut u = CircleElem::one();
        for _ in 0..k {
            let (a, b, c) = random_linear(&mut r);
            u = u.mul(&linear(a, b, c));
        }
        ensure!(!is_prime(&u), "product {} accepted", format_circle(&u));
    }
    Ok(())
}

fn int_linear(r: &mut ChaCha8Rng) -> BiPoly<Rat> {
    loop {
        let (a, b, c) = (r.gen_range(-5..=5), r.gen_range(-5..=5), r.gen_range(-5..=5));
        if a != 0 || b != 0 {
            return BiPoly::from_terms([((1, 0), rat(a, 1)), ((0, 1), rat(b, 1)), ((0, 0), rat(c, 1))]);
        }
    }
}

fn factorization_round_trip() -> Check {
    let mut r = rng(3);
    for _ in 0..500 {
        let k = r.gen_range(1..=4);
        // the product is built from bivariate polynomials and reduced once
        let mut f = BiPoly::constant(nonzero_rat(&mut r));
        for _ in 0..k {
            f = f.mul(&int_linear(&mut r));
        }
        let u = CircleElem::from_rational(&CircleElem::<Rat>::reduce(&f));
        let fac = factor(&u).map_err(|e| format!("factor {}: {e}", format_circle(&u)))?;
        ensure!(fac.reconstruct() == u, "reconstruction of {} failed", format_circle(&u));
        let n = norm_oracle(u.p(), u.q());
        let mults: usize = fac.factors.iter().map(|(_, m)| m).sum();
        ensure!(2 * mults == n.deg(), "multiplicities of {} sum to {mults}, norm degree {}", format_circle(&u), n.deg());
    }
    let pinned = [
        ("-2*Y^2-1", 1, vec![(1, -1, 0, 1), (1, 1, 0, 1)]),
        ("Y^2+1", -1, vec![(1, 0, 0, 2)]),
        ("Y^2+2", -1, vec![(1, 0, -1, 1), (1, 0, 1, 1)]),
    ];
    for (text, unit, primes) in pinned {
        let fac = factor(&elem_from_text(text)).map_err(|e| e.to_string())?;
        let expected: Vec<(LinearPrime, usize)> = primes
            .iter()
            .map(|&(a, b, c, m)| (LinearPrime::normalize(ri(a), ri(b), ri(c)).unwrap().1, m))
            .collect();
        ensure!(fac.unit == ri(unit) && fac.factors == expected, "factor({text}) = {fac:?}");
    }
    Ok(())
}

fn resultant_contracts() -> Check {
    let mut r = rng(4);
    let mut zero = 0;
    for i in 0..500 {
        let (df, dg) = (r.gen_range(1..=6), r.gen_range(1..=6));
        let (mut f, mut g) = (rat_poly_exact(&mut r, df), rat_poly_exact(&mut r, dg));
        if i % 4 == 0 {
            let dh = r.gen_range(1..=2);
            let h = rat_poly_exact(&mut r, dh);
            f = f.mul(&h);
            g = g.mul(&h);
        }
        let det = resultant(&f, &g, ResultantMode::Det).map_err(|e| e.to_string())?;
        let prs = resultant(&f, &g, ResultantMode::Prs).map_err(|e| e.to_string())?;
        ensure!(det == prs, "det {det} != prs {prs}");
        let common = !f.gcd(&g).is_constant();
        ensure!(det.is_zero() == common, "Res = {det} but common factor = {common}");
        zero += usize::from(common);
        let bc = bezout_cofactors(&f, &g).map_err(|e| e.to_string())?;
        ensure!(bc.res == det, "cofactor resultant differs");
        ensure!(bc.s.mul(&f).add(&bc.t.mul(&g)) == UPoly::constant(det.clone()), "s f + t g != Res");
        ensure!(bc.s.is_zero() || bc.s.deg() < g.deg(), "deg s too large");
        ensure!(bc.t.is_zero() || bc.t.deg() < f.deg(), "deg t too large");
    }
    ensure!(zero > 0, "no vanishing resultants sampled");
    let f: QPoly = UPoly::from_i64s(&[1, 0, 1]);
    let g: QPoly = UPoly::from_i64s(&[-1, 2]);
    let res = resultant(&f, &g, ResultantMode::Prs).map_err(|e| e.to_string())?;
    ensure!(res == rat(5, 1), "Res(x^2+1, 2x-1) = {res}");
    Ok(())
}

fn quotient_isomorphism() -> Check {
    let mut r = rng(5);
    for _ in 0..100 {
        let p = random_prime(&mut r);
        let pe = p.to_elem();
        ensure!(quotient_map_eval(&p, &pe) == ComplexAlg::zero(), "phi({p}) != 0");
        for k in 0..20 {
            let (df, dg) = (r.gen_range(0..=2), r.gen_range(0..=2));
            let f = rational_elem(&mut r, df);
            let g = rational_elem(&mut r, dg);
            let (pf, pg) = (quotient_map_eval(&p, &f), quotient_map_eval(&p, &g));
            ensure!(quotient_map_eval(&p, &f.add(&g)) == pf.add(&pg), "phi not additive at {p}");
            ensure!(quotient_map_eval(&p, &f.mul(&g)) == pf.mul(&pg), "phi not multiplicative at {p}");
            // every other sample is a multiple of the prime
            let h = if k % 2 == 0 { f.mul(&pe) } else { f };
            let in_kernel = quotient_map_eval(&p, &h).is_zero();
            let divisible = h.exact_divide(&pe).map_err(|e| e.to_string())?.is_some();
            ensure!(in_kernel == divisible, "kernel and divisibility disagree at {p}");
        }
        ensure!(quotient_map_eval(&p, &CircleElem::one()) == ComplexAlg::one(), "phi(1) != 1");
        let (a, b, c) = (p.a(), p.b(), p.c());
        let disc = match prime_quadratic(&p) {
            Some(q) => {
                let (q0, q1, q2) = (q.coeff(0), q.coeff(1), q.coeff(2));
                q1.mul(&q1).sub(&ri(4).mul(&q2).mul(&q0))
            }
            // X^2 + (c^2 + 1) when the prime is Y + c
            None => ri(-4).mul(&c.mul(c).add(&RealAlg::one())),
        };
        let expected = a.mul(a).add(&b.mul(b)).add(&c.mul(c)).mul(&ri(-4));
        ensure!(disc == expected && disc.sign() < 0, "discriminant of {p} is {disc}, expected {expected}");
    }
    Ok(())
}

fn obstruction() -> Check {
    let mut r = rng(6);
    for _ in 0..100 {
        let p = random_prime(&mut r);
        let cert = obstruction_certificate(&p);
        ensure!(cert.verify(), "certificate for {p} does not verify");
        let phi = quotient_map_eval(&p, &cert.witness);
        ensure!(phi == cert.phi_witness, "recorded image differs for {p}");
        ensure!(!phi.is_zero() && !phi.im.is_zero() && cert.phi_im_nonzero, "witness image is real for {p}");
        for _ in 0..20 {
            let c = nonzero_rat(&mut r);
            let z = quotient_map_eval(&p, &CircleElem::constant(ra(c.clone())));
            ensure!(z.im.is_zero() && z.re == ra(c.clone()), "phi({c}) = {z} at {p}");
        }
    }
    Ok(())
}

fn pid_witness() -> Check {
    let mut r = rng(7);
    for i in 0..200 {
        let (u, v) = if i % 2 == 0 {
            let k = r.gen_range(0..=2);
            let common = (0..k).fold(BiPoly::one(), |acc, _| acc.mul(&int_linear(&mut r)));
            let u = common.mul(&int_linear(&mut r));
            let v = common.mul(&int_linear(&mut r)).mul(&BiPoly::constant(nonzero_rat(&mut r)));
            (u, v)
        } else {
            let (du, dv) = (r.gen_range(1..=2), r.gen_range(1..=2));
            (random_bipoly(&mut r, du), random_bipoly(&mut r, dv))
        };
        let (uq, vq) = (CircleElem::<Rat>::reduce(&u), CircleElem::<Rat>::reduce(&v));
        if uq.is_zero() || vq.is_zero() {
            continue;
        }
        let (u, v) = (CircleElem::from_rational(&uq), CircleElem::from_rational(&vq));
        let g = extended_gcd(&u, &v).map_err(|e| format!("xgcd({}, {}): {e}", format_circle(&u), format_circle(&v)))?;
        ensure!(g.s.mul(&u).add(&g.t.mul(&v)) == g.d, "s u + t v != d for {}, {}", format_circle(&u), format_circle(&v));
        for w in [&u, &v] {
            ensure!(g.d.divides(w).map_err(|e| e.to_string())?, "d does not divide {}", format_circle(w));
        }
        let basis = ideal_module_basis(&[uq, vq]).map_err(|e| e.to_string())?;
        let det = lift(&basis.b11.mul(&basis.b22));
        let nd = g.d.norm();
        // equal up to a nonzero constant
        ensure!(nd.scale(&det.lc()) == det.scale(&nd.lc()), "norm(d) and the module determinant differ");
    }
    let g = extended_gcd(&CircleElem::x(), &CircleElem::y()).map_err(|e| e.to_string())?;
    ensure!(
        g.d == CircleElem::one() && g.s == CircleElem::x().neg() && g.t == CircleElem::y().neg(),
        "xgcd(X, Y) = ({}, {}, {})",
        format_circle(&g.d),
        format_circle(&g.s),
        format_circle(&g.t)
    );
    Ok(())
}

/// True when `s^2` is the root of `a`'s defining polynomial that `a`
/// isolates, checked without multiplying algebraic numbers.
fn is_square_root(s: &RealAlg, a: &RealAlg) -> bool {
    if s.sign() < 0 {
        return false;
    }
    let pa = a.poly().to_rational();
    let mut sq = vec![Rat::zero(); 2 * pa.coeffs().len()];
    for (k, c) in pa.coeffs().iter().enumerate() {
        sq[2 * k] = c.clone();
    }
    if !UPoly::new(sq).rem(&s.poly().to_rational()).is_zero() {
        return false;
    }
    // s^2 is a root of a's polynomial; find which one
    let roots = isolate_real_roots(&pa).unwrap();
    let s2 = s.mul(s);
    roots.iter().filter(|(r, _)| *r == s2).count() == 1 && s2 == *a
}

fn real_closed() -> Check {
    let mut r = rng(8);
    let mut sampled = 0;
    while sampled < 200 {
        let deg = r.gen_range(1..=8);
        let h = rat_poly_exact(&mut r, deg);
        let roots = isolate_real_roots(&h).map_err(|e| e.to_string())?;
        let Some((a, _)) = roots.choose(&mut r) else { continue };
        let a = if a.sign() < 0 { a.neg() } else { a.clone() };
        let s = a.sqrt().map_err(|e| format!("sqrt({a}): {e}"))?;
        if a.degree() <= 4 {
            ensure!(s.mul(&s) == a, "sqrt({a})^2 != {a}");
        } else {
            ensure!(is_square_root(&s, &a), "sqrt({a}) is not a square root");
        }
        sampled += 1;
    }
    for _ in 0..100 {
        let deg = 2 * r.gen_range(0..=3) + 1;
        let h = rat_poly_exact(&mut r, deg);
        let root = odd_degree_root(&h).map_err(|e| e.to_string())?;
        ensure!(h.rem(&root.poly().to_rational()).is_zero(), "{root} is not a root");
        ensure!(h.eval_with(&root, |c| ra(c.clone())).is_zero(), "h({root}) != 0");
    }
    ensure!(matches!(ri(-1).sqrt(), Err(Error::NegativeSqrt)), "sqrt(-1) did not fail");
    Ok(())
}

fn parser() -> Check {
    let mut r = rng(9);
    for i in 0..1000 {
        let deg = r.gen_range(0..=5);
        let f = random_bipoly(&mut r, deg);
        let text = format_poly(&f);
        let back = parse_poly(&text).map_err(|e| format!("{text:?}: {e}"))?;
        ensure!(back == f, "round trip of {text:?} gave {}", format_poly(&back));
        if i % 2 == 0 {
            let u = CircleElem::<Rat>::reduce(&f);
            let text = format_circle(&u);
            let back = CircleElem::<Rat>::reduce(&parse_poly(&text).map_err(|e| format!("{text:?}: {e}"))?);
            ensure!(back == u, "round trip of {text:?}");
        }
    }
    let alphabet = b"XY0123456789+-*/^() .xyz\t\n";
    for i in 0..10_000 {
        let len = if i % 50 == 0 { r.gen_range(0..=4096) } else { r.gen_range(0..40) };
        let bytes: Vec<u8> = (0..len)
            .map(|_| if r.gen_bool(0.8) { *alphabet.choose(&mut r).unwrap() } else { r.gen() })
            .collect();
        let text = String::from_utf8_lossy(&bytes).into_owned();
        let outcome = panic::catch_unwind(|| parse_poly(&text).map(|f| f.total_degree()));
        ensure!(outcome.is_ok(), "parser panicked on {text:?}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("units are the nonzero constants", units_law),
        ("linear forms are exactly the primes", prime_law),
        ("factorization round trip", factorization_round_trip),
        ("resultant contracts", resultant_contracts),
        ("quotient map is an isomorphism onto F(i)", quotient_isomorphism),
        ("unit images miss a unit of every quotient", obstruction),
        ("extended gcd witnesses", pid_witness),
        ("square roots and odd-degree roots", real_closed),
        ("parser round trip and fuzzing", parser),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(result) => result,
            Err(p) => Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into())),
        };
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {}: {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
