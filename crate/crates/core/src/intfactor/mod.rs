//! Factorization of integer polynomials into irreducibles over `Q`
//! (Zassenhaus: modular factorization, quadratic Hensel lifting, and
//! recombination by trial division).
//!
//! Real algebraic numbers keep irreducible defining polynomials, so every
//! arithmetic result passes through here.

mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::upoly::{QPoly, ZPoly};
use modp::Fp;

/// Irreducible factors over `Q` with multiplicities, as primitive integer
/// polynomials with positive leading coefficient. Constants are dropped.
/// Ordered by degree, then coefficients.
pub fn factor_over_q(f: &QPoly) -> Vec<(ZPoly, usize)> {
    assert!(!f.is_zero(), "factorization of the zero polynomial");
    let mut out = Vec::new();
    for (part, mult) in squarefree_parts(&f.to_primitive_integer()) {
        for g in irreducible_factors(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| cmp_zpoly(a, b));
    out
}

/// Gcd in `Z[x]`, primitive with `lc > 0`.
///
/// Modular: gcds modulo word-size primes are combined by CRT until the
/// symmetric lift stops changing and divides both inputs.
fn zgcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (a, b) = (a.primitive_part(), b.primitive_part());
    if a.is_zero() || b.is_zero() {
        let g = if a.is_zero() { b } else { a };
        return if g.is_zero() { g } else { positive_lc(g) };
    }
    if a.deg() == 0 || b.deg() == 0 {
        return ZPoly::one();
    }
    let d = a.lc().gcd(&b.lc());
    let mut best: Option<(usize, Vec<BigInt>, BigInt)> = None;
    for p in gcd_primes() {
        let pb = BigInt::from(p);
        if (a.lc() % &pb).is_zero() || (b.lc() % &pb).is_zero() {
            continue;
        }
        let gp = modp::gcd(&to_fp(&a, p), &to_fp(&b, p), p);
        let dg = modp::deg(&gp);
        if dg == 0 {
            return ZPoly::one();
        }
        let dp = d.mod_floor(&pb).to_u64().expect("residue fits u64");
        let gp = modp::scale(&gp, dp, p);
        let residues: Vec<BigInt> = (0..=dg).map(|k| BigInt::from(gp.get(k).copied().unwrap_or(0))).collect();
        let (cur_deg, cur, m) = match best.take() {
            Some(state) if state.0 == dg => state,
            Some(state) if state.0 < dg => {
                best = Some(state);
                continue;
            }
            _ => {
                best = Some((dg, residues, pb));
                continue;
            }
        };
        // CRT: x = c + m * ((r - c) / m mod p)
        let minv = BigInt::from(modp::inv_mod(m.mod_floor(&pb).to_u64().unwrap(), p));
        let next: Vec<BigInt> = cur
            .iter()
            .zip(&residues)
            .map(|(c, r)| c + &m * ((r - c) * &minv).mod_floor(&pb))
            .collect();
        let m2 = &m * &pb;
        let half = &m2 / 2;
        let lift = |v: &[BigInt], modulus: &BigInt, half: &BigInt| -> Vec<BigInt> {
            v.iter().map(|c| symmetric(c, modulus, half)).collect()
        };
        let stable = lift(&cur, &m, &(&m / 2)) == lift(&next, &m2, &half);
        if stable {
            let g = ZPoly::new(lift(&next, &m2, &half)).primitive_part();
            if a.div_exact_poly(&g).is_some() && b.div_exact_poly(&g).is_some() {
                return positive_lc(g);
            }
        }
        best = Some((cur_deg, next, m2));
    }
    unreachable!("prime supply is unbounded")
}

fn positive_lc(g: ZPoly) -> ZPoly {
    if g.lc().is_negative() {
        g.neg()
    } else {
        g
    }
}

/// Primes just below `2^31`, descending.
fn gcd_primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..1u64 << 31)
        .rev()
        .filter(|&n| n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Square-free decomposition of a primitive polynomial (Yun), as primitive
/// parts with multiplicities.
fn squarefree_parts(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    if f.deg() == 0 {
        return Vec::new();
    }
    if is_squarefree_mod_p(f) {
        return vec![(f.clone(), 1)];
    }
    let df = f.derivative();
    let a0 = zgcd(f, &df);
    let exact = |x: &ZPoly, y: &ZPoly| x.div_exact_poly(y).expect("Yun division is exact");
    let mut b = exact(f, &a0).primitive_part();
    let mut d = exact(&df, &a0).sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = zgcd(&b, &d);
        let nb = exact(&b, &a).primitive_part();
        let c = exact(&d, &a);
        d = c.sub(&nb.derivative());
        if a.deg() > 0 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    out
}

/// Cheap sufficient test: square-free modulo a prime not dividing `lc`.
fn is_squarefree_mod_p(f: &ZPoly) -> bool {
    let lc = f.lc();
    small_primes()
        .filter(|&p| !(&lc % p).is_zero())
        .take(3)
        .any(|p| {
            let fp = to_fp(f, p);
            modp::is_one(&modp::gcd(&fp, &modp::derivative(&fp, p), p))
        })
}

pub(crate) fn cmp_zpoly(a: &ZPoly, b: &ZPoly) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Irreducible factors of a square-free, primitive integer polynomial.
pub fn irreducible_factors(f: &ZPoly) -> Vec<ZPoly> {
    let f = f.primitive_part();
    if f.deg() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut f = f;
    // Pull out the factor x first; it would otherwise waste a modular factor.
    if f.coeff(0).is_zero() {
        out.push(ZPoly::from_i64s(&[0, 1]));
        f = ZPoly::new(f.coeffs()[1..].to_vec());
    }
    if f.deg() >= 1 {
        out.extend(factor_primitive_squarefree(&f));
    }
    out.sort_by(cmp_zpoly);
    out
}

fn factor_primitive_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    match f.deg() {
        0 => Vec::new(),
        1 => vec![f.clone()],
        2 => factor_quadratic(f),
        _ => zassenhaus(f),
    }
}

fn factor_quadratic(f: &ZPoly) -> Vec<ZPoly> {
    let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    if disc.is_negative() {
        return vec![f.clone()];
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return vec![f.clone()];
    }
    // roots (-b +- s) / 2a
    let two_a = BigInt::from(2) * &a;
    let mut out: Vec<ZPoly> = [&s, &(-&s)]
        .into_iter()
        .map(|sv| ZPoly::new(vec![-(-&b + sv), two_a.clone()]).primitive_part())
        .collect();
    out.sort_by(cmp_zpoly);
    out
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn to_fp(f: &ZPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut v: Fp = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits u64"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Coefficient bound for `lc(f) * g` over all factors `g` of `f`.
fn factor_coefficient_bound(f: &ZPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    f.lc().abs() * (BigInt::one() << f.deg()) * norm
}

fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.deg();
    let lc = f.lc();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1c1c_1e5e);

    // Degrees a true factor can have: subset sums of modular factor degrees,
    // intersected over several primes.
    let mut allowed = vec![true; n + 1];
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = to_fp(f, p);
        if modp::deg(&fp) != n {
            continue;
        }
        if !modp::is_one(&modp::gcd(&fp, &modp::derivative(&fp, p), p)) {
            continue;
        }
        let factors = modp::factor_squarefree(&modp::monic(&fp, p), p, &mut rng);
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for g in &factors {
            let d = modp::deg(g);
            for k in (d..=n).rev() {
                sums[k] |= sums[k - d];
            }
        }
        for (a, s) in allowed.iter_mut().zip(&sums) {
            *a &= *s;
        }
        if allowed[1..n].iter().all(|a| !a) {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 8 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps f square-free");

    let bound = BigInt::from(2) * factor_coefficient_bound(f);
    let mut steps = 0u32;
    let mut modulus = BigInt::from(p);
    while modulus <= bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = lift_all(f.coeffs(), &modular, p, steps);
    recombine(f, lifted, &modulus, &allowed)
}

// Arithmetic on polynomials with coefficients in Z/mZ, residues in [0, m).

fn zm_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zm_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    zm_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    zm_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(&out, m)
}

/// Division by a monic polynomial modulo `m`.
fn zm_divmod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(b.last().is_some_and(|c| c.is_one()));
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * bj).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(db);
    (zm_trim(q), zm_reduce(&r, m))
}

fn fp_to_z(a: &Fp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g*h (mod m)` and `s*g + t*h = 1 (mod m)`
/// to the same relations modulo `m^2`. `h` is monic.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = zm_sub(&zm_reduce(f, &m2), &zm_mul(g, h, &m2), &m2);
    let (q, r) = zm_divmod(&zm_mul(s, &e, &m2), h, &m2);
    let g2 = zm_add(&zm_add(g, &zm_mul(t, &e, &m2), &m2), &zm_mul(&q, g, &m2), &m2);
    let h2 = zm_add(h, &r, &m2);
    let b = zm_sub(
        &zm_add(&zm_mul(s, &g2, &m2), &zm_mul(t, &h2, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zm_divmod(&zm_mul(s, &b, &m2), &h2, &m2);
    let s2 = zm_sub(s, &d, &m2);
    let t2 = zm_sub(&zm_sub(t, &zm_mul(t, &b, &m2), &m2), &zm_mul(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lifts `f = lc * prod(factors) (mod p)` to monic factors modulo `p^(2^steps)`.
fn lift_all(f: &[BigInt], factors: &[Fp], p: u64, steps: u32) -> Vec<Vec<BigInt>> {
    let mut modulus = BigInt::from(p);
    for _ in 0..steps {
        modulus = &modulus * &modulus;
    }
    if factors.len() == 1 {
        let lc = f.last().expect("nonzero polynomial").mod_floor(&modulus);
        let inv = lc.modinv(&modulus).expect("lc invertible modulo p^k");
        let monic: Vec<BigInt> = f.iter().map(|c| c * &inv).collect();
        return vec![zm_reduce(&monic, &modulus)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let pb = BigInt::from(p);
    let lc_p = f
        .last()
        .expect("nonzero polynomial")
        .mod_floor(&pb)
        .to_u64()
        .expect("residue fits u64");
    let g0 = modp::scale(&left.iter().fold(vec![1u64], |acc, x| modp::mul(&acc, x, p)), lc_p, p);
    let h0 = right.iter().fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let (_, s0, _) = modp::ext_gcd(&g0, &h0, p);
    let s0 = modp::rem(&s0, &h0, p);
    let t0 = modp::divmod(&modp::sub(&vec![1], &modp::mul(&s0, &g0, p), p), &h0, p).0;

    let (mut g, mut h, mut s, mut t) = (fp_to_z(&g0), fp_to_z(&h0), fp_to_z(&s0), fp_to_z(&t0));
    let mut m = pb;
    for _ in 0..steps {
        let next = hensel_step(f, &g, &h, &s, &t, &m);
        (g, h, s, t) = next;
        m = &m * &m;
    }
    let mut out = lift_all(&g, left, p, steps);
    out.extend(lift_all(&h, right, p, steps));
    out
}

fn symmetric(c: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r > half {
        r - m
    } else {
        r
    }
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        // advance to the next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

fn recombine(f: &ZPoly, lifted: Vec<Vec<BigInt>>, modulus: &BigInt, allowed: &[bool]) -> Vec<ZPoly> {
    let half: BigInt = modulus >> 1;
    let mut remaining = lifted;
    let mut current = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    let zero = BigInt::zero();
    'outer: while 2 * size <= remaining.len() {
        for subset in combinations(remaining.len(), size) {
            let d: usize = subset.iter().map(|&i| remaining[i].len() - 1).sum();
            if !allowed[d] {
                continue;
            }
            let lc = current.lc();
            // constant term test before forming the product
            let bound_c0 = &lc * current.coeff(0);
            let c0 = subset.iter().fold(lc.mod_floor(modulus), |acc, &i| {
                (acc * remaining[i].first().unwrap_or(&zero)).mod_floor(modulus)
            });
            let c0 = symmetric(&c0, modulus, &half);
            if c0.is_zero() != bound_c0.is_zero() || (!c0.is_zero() && !(&bound_c0 % &c0).is_zero()) {
                continue;
            }
            let prod = subset
                .iter()
                .fold(vec![lc.mod_floor(modulus)], |acc, &i| zm_mul(&acc, &remaining[i], modulus));
            let cand = ZPoly::new(prod.iter().map(|c| symmetric(c, modulus, &half)).collect());
            let cand = cand.primitive_part();
            if cand.deg() == 0 {
                continue;
            }
            if let Some(quot) = current.div_exact_poly(&cand) {
                out.push(cand);
                current = quot.primitive_part();
                let mut keep = Vec::with_capacity(remaining.len() - size);
                for (i, g) in remaining.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(g);
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.deg() > 0 {
        out.push(current);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use crate::upoly::UPoly;
    use proptest::prelude::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    fn product(fs: &[ZPoly]) -> ZPoly {
        fs.iter().fold(ZPoly::one(), |acc, g| acc.mul(g))
    }

    /// Brute-force irreducibility oracle for small polynomials: no factor of
    /// degree <= n/2 with coefficients bounded by the factor bound divides f.
    /// Only used for degree <= 4 and tiny coefficients.
    fn has_small_factor(f: &ZPoly, coeff_bound: i64) -> bool {
        let n = f.deg();
        for d in 1..=n / 2 {
            let mut digits = vec![-coeff_bound; d + 1];
            loop {
                if digits[d] > 0 {
                    let g = ZPoly::from_i64s(&digits);
                    if g.deg() == d && f.div_exact_poly(&g).is_some() {
                        return true;
                    }
                }
                let mut i = 0;
                loop {
                    if i > d {
                        break;
                    }
                    digits[i] += 1;
                    if digits[i] > coeff_bound {
                        digits[i] = -coeff_bound;
                        i += 1;
                    } else {
                        break;
                    }
                }
                if i > d {
                    break;
                }
            }
        }
        false
    }

    #[test]
    fn irreducible_swinnerton_dyer() {
        // minimal polynomial of sqrt2 + sqrt3; reducible modulo every prime
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(irreducible_factors(&f), vec![f.clone()]);
        assert_eq!(irreducible_factors(&z(&[1, 0, 0, 0, 1])), vec![z(&[1, 0, 0, 0, 1])]);
    }

    #[test]
    fn cyclotomic_split() {
        // x^12 - 1 = prod of Phi_d for d | 12: six factors
        let mut cs = vec![0i64; 13];
        cs[0] = -1;
        cs[12] = 1;
        let fs = irreducible_factors(&z(&cs));
        assert_eq!(fs.len(), 6);
        assert_eq!(product(&fs), z(&cs));
        assert!(fs.contains(&z(&[1, 0, -1, 0, 1])));
    }

    #[test]
    fn quadratic_factors() {
        assert_eq!(irreducible_factors(&z(&[-2, 0, 1])), vec![z(&[-2, 0, 1])]);
        assert_eq!(irreducible_factors(&z(&[-3, -1, 2])), vec![z(&[1, 1]), z(&[-3, 2])]);
    }

    #[test]
    fn non_monic_product() {
        let a = z(&[3, -1, 0, 5]);
        let b = z(&[-7, 2, 4]);
        let c = z(&[1, 6]);
        let f = product(&[a.clone(), b.clone(), c.clone()]);
        let mut want = vec![a, b, c];
        want.sort_by(cmp_zpoly);
        assert_eq!(irreducible_factors(&f), want);
    }

    #[test]
    fn over_q_with_multiplicities() {
        let f = UPoly::new(vec![rat(1, 2), rat(0, 1), rat(-1, 2)]) // (1 - x^2)/2
            .mul(&UPoly::from_i64s(&[1, 0, 1]).pow(2));
        let fs = factor_over_q(&f);
        assert_eq!(fs, vec![(z(&[-1, 1]), 1), (z(&[1, 1]), 1), (z(&[1, 0, 1]), 2)]);
    }

    #[test]
    fn brute_force_oracle_agrees() {
        for cs in [[1i64, 0, 3, 0, 1], [2, 1, 1, 1, 1], [4, 0, 0, 0, 1], [1, 2, 3, 2, 1]] {
            let f = z(&cs);
            let sqf = f.to_rational().squarefree_part().to_primitive_integer();
            let fs = irreducible_factors(&sqf);
            assert_eq!(fs.len() > 1, has_small_factor(&sqf, 4), "{cs:?}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn products_factor_back(
            parts in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 2..=4), 1..=4)
        ) {
            let factors: Vec<ZPoly> = parts.iter().map(|cs| z(cs)).filter(|g| g.deg() >= 1).collect();
            prop_assume!(!factors.is_empty());
            let f = product(&factors);
            let got = factor_over_q(&f.to_rational());
            let rebuilt = got.iter().fold(ZPoly::one(), |acc, (g, m)| acc.mul(&g.pow(*m as u32)));
            prop_assert_eq!(rebuilt, f.primitive_part());
            for (g, _) in &got {
                prop_assert!(g.lc() > BigInt::zero());
                if g.deg() <= 4 {
                    prop_assert!(!has_small_factor(g, 3) || g.deg() == 1);
                }
            }
        }
    }
}
