//! Univariate factorization: distinct-degree / equal-degree splitting over
//! prime fields, and factorization over the rationals by Hensel lifting a
//! modular factorization and recombining bounded subsets.

use super::poly::{powmod, Poly};
use super::ring::{Rationals, Ring, SmallPrimeField};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Factors a nonzero polynomial over F_p into monic irreducibles with
/// multiplicities, plus the leading unit.  Factors are sorted for
/// deterministic output.
pub fn poly_factor_modp(f: &Poly<SmallPrimeField>) -> (u64, Vec<(Poly<SmallPrimeField>, usize)>) {
    assert!(!f.is_zero(), "factoring the zero polynomial");

    let unit = *f.leading().unwrap();
    let f = f.monic().unwrap();
    let mut out: Vec<(Poly<SmallPrimeField>, usize)> = Vec::new();
    for (g, mult) in squarefree_decompose_modp(&f) {
        for irr in factor_squarefree_modp(&g) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.coeffs
            .len()
            .cmp(&b.0.coeffs.len())
            .then_with(|| a.0.coeffs.iter().rev().cmp(b.0.coeffs.iter().rev()))
    });
    (unit, out)
}

/// Squarefree decomposition over F_p: returns pairs (g_i, i) with
/// f = prod g_i^i, each g_i squarefree, handling p-th powers.
fn squarefree_decompose_modp(f: &Poly<SmallPrimeField>) -> Vec<(Poly<SmallPrimeField>, usize)> {
    let fp = f.ring;
    let p = fp.p as usize;
    let mut out: Vec<(Poly<SmallPrimeField>, usize)> = Vec::new();
    let mut stack = vec![(f.clone(), 1usize)];
    while let Some((f, scale)) = stack.pop() {
        if f.degree() == Some(0) || f.is_zero() {
            continue;
        }
        let df = f.derivative();
        if df.is_zero() {
            // f = g(x^p) = g(x)^p over F_p
            let mut g = Vec::new();
            let mut i = 0;
            while i < f.coeffs.len() {
                g.push(f.coeffs[i]);
                i += p;
            }
            stack.push((Poly::new(fp, g), scale * p));
            continue;
        }
        let mut c = f.gcd(&df);
        let mut w = f.div_exact(&c).unwrap();
        let mut i = 1usize;
        while w.degree() != Some(0) {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y).unwrap();
            if fac.degree().map_or(false, |d| d > 0) {
                out.push((fac, i * scale));
            }
            w = y.clone();
            c = c.div_exact(&y).unwrap();
            i += 1;
        }
        if c.degree().map_or(false, |d| d > 0) {
            stack.push((c, p * scale));
        }
    }
    out
}

/// Factors a monic squarefree polynomial over F_p into monic irreducibles:
/// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
pub fn factor_squarefree_modp(f: &Poly<SmallPrimeField>) -> Vec<Poly<SmallPrimeField>> {
    let fp = f.ring;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly::x(fp);
    let mut frob = x.clone(); // x^(p^d) mod rest
    let mut d = 0usize;
    while rest.degree().map_or(false, |deg| deg > 0) {
        d += 1;
        if rest.degree().unwrap() < 2 * d {
            out.push(rest.monic().unwrap());
            break;
        }
        frob = powmod(&frob, BigUint::from(fp.p), &rest);
        let g = rest.gcd(&frob.sub(&x));
        if g.degree().map_or(false, |deg| deg > 0) {
            for h in equal_degree_split(&g, d) {
                out.push(h);
            }
            rest = rest.div_exact(&g).unwrap();
            frob = frob.divrem(&rest).map(|(_, r)| r).unwrap_or(frob);
        }
    }
    out
}

/// Cantor-Zassenhaus: splits a monic squarefree product of degree-d
/// irreducibles.  Uses a fixed-seed generator so runs are reproducible.
fn equal_degree_split(f: &Poly<SmallPrimeField>, d: usize) -> Vec<Poly<SmallPrimeField>> {
    let fp = f.ring;
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.monic().unwrap()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (n as u64) << 8 ^ d as u64);
    loop {
        let deg = n - 1;
        let coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..fp.p)).collect();
        let r = Poly::new(fp, coeffs);
        if r.degree().map_or(true, |dd| dd == 0) {
            continue;
        }
        let g = f.gcd(&r);
        let g = if g.degree().map_or(false, |dd| dd > 0 && dd < n) {
            g
        } else if fp.p == 2 {
            // trace map T(r) = r + r^2 + ... + r^(2^(d-1))
            let mut t = r.clone().divrem(f).unwrap().1;
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).divrem(f).unwrap().1;
                acc = acc.add(&t);
            }
            f.gcd(&acc)
        } else {
            let e = (BigUint::from(fp.p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let s = powmod(&r, e, f);
            f.gcd(&s.sub(&Poly::one(fp)))
        };
        if g.degree().map_or(false, |dd| dd > 0 && dd < n) {
            let h = f.div_exact(&g).unwrap();
            let mut out = equal_degree_split(&g, d);
            out.extend(equal_degree_split(&h, d));
            return out;
        }
    }
}

/// True iff f is irreducible over F_p: any proper factor has degree at most
/// n/2 and would show up in gcd(x^(p^i) - x, f) for some i <= n/2.
pub fn is_irreducible_modp(f: &Poly<SmallPrimeField>) -> bool {
    let fp = f.ring;
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let x = Poly::x(fp);
    let mut frob = x.clone();
    for _ in 1..=n / 2 {
        frob = powmod(&frob, BigUint::from(fp.p), f);
        if f.gcd(&frob.sub(&x)).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Factorization of a nonzero rational polynomial into primitive integer
/// irreducibles with multiplicity: f = unit * prod g_i^(e_i).
pub fn factor_over_q(f: &Poly<Rationals>) -> (BigRational, Vec<(Poly<Rationals>, usize)>) {
    assert!(!f.is_zero());
    let (mut unit, prim) = f.primitive();
    if prim.degree() == Some(0) {
        return (f.coeff(0), vec![]);
    }
    let mut out: Vec<(Poly<Rationals>, usize)> = Vec::new();
    // Yun-style squarefree split over Q, then factor each squarefree part.
    for (g, mult) in squarefree_decompose_q(&prim) {
        let (u, factors) = factor_squarefree_q(&g);
        unit *= u.pow(mult as i32);
        for h in factors {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.coeffs
            .len()
            .cmp(&b.0.coeffs.len())
            .then_with(|| format!("{:?}", a.0.coeffs).cmp(&format!("{:?}", b.0.coeffs)))
    });
    (unit, out)
}

/// Result of `poly_factor_rational`: every rational root with multiplicity,
/// and the multiset of irreducible factor degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFactorReport {
    pub rational_roots: Vec<(BigRational, usize)>,
    pub factor_degrees: Vec<usize>,
}

/// Rational roots and irreducible factor degrees of a rational polynomial.
pub fn poly_factor_rational(f: &Poly<Rationals>) -> RationalFactorReport {
    if f.is_zero() || f.degree() == Some(0) {
        return RationalFactorReport {
            rational_roots: vec![],
            factor_degrees: vec![],
        };
    }
    let (_, factors) = factor_over_q(f);
    let mut roots = Vec::new();
    let mut degrees = Vec::new();
    for (g, mult) in &factors {
        let d = g.degree().unwrap();
        for _ in 0..*mult {
            degrees.push(d);
        }
        if d == 1 {
            let root = -(g.coeff(0) / g.coeff(1));
            roots.push((root, *mult));
        }
    }
    degrees.sort();
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    RationalFactorReport {
        rational_roots: roots,
        factor_degrees: degrees,
    }
}

fn squarefree_decompose_q(f: &Poly<Rationals>) -> Vec<(Poly<Rationals>, usize)> {
    // Yun's algorithm (characteristic zero).
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = df.div_exact(&a0).unwrap();
    let mut i = 1usize;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree().map_or(false, |dd| dd > 0) {
                out.push((b.primitive().1, i));
            }
            break;
        }
        let a = b.gcd(&d);
        if a.degree().map_or(false, |dd| dd > 0) {
            out.push((a.primitive().1, i));
        }
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        i += 1;
        if b.degree() == Some(0) {
            break;
        }
    }
    out
}

/// Factors a primitive squarefree integer polynomial.  Returns the rational
/// unit and the primitive irreducible factors (positive leading
/// coefficients).
fn factor_squarefree_q(f: &Poly<Rationals>) -> (BigRational, Vec<Poly<Rationals>>) {
    let n = f.degree().unwrap();
    if n == 1 {
        return (BigRational::one(), vec![f.clone()]);
    }
    let fz = f.integer_coeffs().expect("primitive integer input");
    let lc = fz.last().unwrap().clone();

    // Choose candidate primes where f stays squarefree with unit lead, and
    // prefer the coarsest modular splitting.
    let mut candidates: Vec<(usize, u64)> = Vec::new();
    for &p in &[
        3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    ] {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = SmallPrimeField::new(p);
        let fmodp = f.map(fp, |c| fp.from_rational(c).unwrap());
        if fmodp.degree() != Some(n) {
            continue;
        }
        let d = fmodp.derivative();
        if fmodp.gcd(&d).degree() != Some(0) {
            continue;
        }
        let pieces = factor_squarefree_modp(&fmodp.monic().unwrap()).len();
        candidates.push((pieces, p));
        if candidates.len() >= 8 {
            break;
        }
    }
    candidates.sort();
    assert!(!candidates.is_empty(), "no good prime for factoring");

    // Bounded-subset recombination at up to two good primes, then an
    // uncapped pass as a safety net.
    for (cap, idx) in [(3usize, 0usize), (3, 1), (usize::MAX, 0)] {
        if idx >= candidates.len() {
            continue;
        }
        let p = candidates[idx].1;
        if let Some(out) = zassenhaus_at_prime(f, p, cap) {
            return out;
        }
    }
    unreachable!("uncapped recombination always terminates");
}

fn zassenhaus_at_prime(
    f: &Poly<Rationals>,
    p: u64,
    cap: usize,
) -> Option<(BigRational, Vec<Poly<Rationals>>)> {
    let n = f.degree().unwrap();
    let fz = f.integer_coeffs().unwrap();
    let lc = fz.last().unwrap().clone();
    let fp = SmallPrimeField::new(p);
    let fmodp = f.map(fp, |c| fp.from_rational(c).unwrap()).monic().unwrap();
    let modular = factor_squarefree_modp(&fmodp);
    if modular.len() == 1 {
        return Some((BigRational::one(), vec![f.clone()]));
    }

    // Landau-Mignotte style bound on factor coefficients (times lc).
    let height: BigInt = fz.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::from(2).pow((n + 2) as u32)) * &height * lc.abs();
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk < &bound * 2 {
        pk *= BigInt::from(p);
        k += 1;
    }
    let lifted = hensel_lift_factors(&fz, &modular, p, k);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = fz.clone();
    let mut found: Vec<Poly<Rationals>> = Vec::new();
    let pk_big = BigInt::from(p).pow(k);

    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        if size > cap {
            return None;
        }
        let mut progressed = false;
        let combos = subsets(remaining.len(), size);
        for combo in combos {
            let subset: Vec<usize> = combo.iter().map(|&i| remaining[i]).collect();
            let lc_cur = current.last().unwrap().clone();
            if let Some(g) = try_subset(&current, &lc_cur, &subset, &lifted, &pk_big) {
                let gq = Poly::new(
                    Rationals,
                    g.iter().map(|c| BigRational::from(c.clone())).collect(),
                );
                let curq = Poly::new(
                    Rationals,
                    current.iter().map(|c| BigRational::from(c.clone())).collect(),
                );
                if let Some(q) = curq.div_exact(&gq) {
                    found.push(gq.primitive().1);
                    current = q.primitive().1.integer_coeffs().unwrap();
                    remaining.retain(|i| !subset.contains(i));
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            size += 1;
        }
    }
    // whatever is left is one irreducible factor
    let curq = Poly::new(
        Rationals,
        current.iter().map(|c| BigRational::from(c.clone())).collect(),
    );
    if curq.degree().map_or(false, |d| d > 0) {
        found.push(curq.primitive().1);
    }
    // unit = f / prod(found)
    let mut prod = Poly::one(Rationals);
    for g in &found {
        prod = prod.mul(g);
    }
    let unit = f.leading().unwrap() / prod.leading().unwrap();
    Some((unit, found))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(combo.clone());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Tries one subset: computes lc * prod(lifted factors in subset) in the
/// symmetric range mod p^k and tests exact divisibility over Z.
fn try_subset(
    current: &[BigInt],
    lc: &BigInt,
    subset: &[usize],
    lifted: &[Vec<BigInt>],
    pk: &BigInt,
) -> Option<Vec<BigInt>> {
    // quick test: constant coefficient must divide lc * f(0)
    let mut c0 = lc.mod_floor(pk);
    for &i in subset {
        c0 = (&c0 * lifted[i].first().unwrap()).mod_floor(pk);
    }
    let c0 = symmetric(&c0, pk);
    let f0 = lc * current.first().unwrap();
    if f0.is_zero() {
        if !c0.is_zero() {
            return None;
        }
    } else if c0.is_zero() || !(&f0 % &c0).is_zero() {
        return None;
    }

    let mut g = vec![lc.mod_floor(pk)];
    for &i in subset {
        g = mul_mod(&g, &lifted[i], pk);
    }
    let g: Vec<BigInt> = g.iter().map(|c| symmetric(c, pk)).collect();
    // primitive part
    let mut gcd = BigInt::zero();
    for c in &g {
        gcd = gcd.gcd(c);
    }
    if gcd.is_zero() {
        return None;
    }
    Some(g.iter().map(|c| c / &gcd).collect())
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let a = a.mod_floor(m);
    if &a * 2 > *m {
        a - m
    } else {
        a
    }
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (&out[i + j] + x * y).mod_floor(m);
        }
    }
    out
}

/// Lifts a squarefree factorization of (monic image of) f from mod p to
/// mod p^k, one p-power at a time.  Input factors are monic mod p; output
/// factors are monic mod p^k with f = lc * prod(factors) mod p^k.
fn hensel_lift_factors(
    f: &[BigInt],
    modular: &[Poly<SmallPrimeField>],
    p: u64,
    k: u32,
) -> Vec<Vec<BigInt>> {
    let fp = SmallPrimeField::new(p);
    let pbig = BigInt::from(p);
    let lc = f.last().unwrap();
    let lc_inv_p = fp.inv(&fp.reduce_bigint(lc)).unwrap();

    // Bezout cofactors over F_p: t_i * prod_{j != i} g_j = 1 mod g_i.
    let cofactors: Vec<Poly<SmallPrimeField>> = (0..modular.len())
        .map(|i| {
            let mut prod = Poly::one(fp);
            for (j, g) in modular.iter().enumerate() {
                if j != i {
                    prod = prod.mul(g).divrem(&modular[i]).unwrap().1;
                }
            }
            poly_inverse_mod(&prod, &modular[i])
        })
        .collect();

    let mut lifted: Vec<Vec<BigInt>> = modular
        .iter()
        .map(|g| g.coeffs.iter().map(|&c| BigInt::from(c)).collect())
        .collect();

    let mut pj = pbig.clone(); // current modulus p^j
    for _ in 1..k {
        let pj1 = &pj * &pbig;
        // e = (f - lc * prod g_i) / p^j  (exact), reduced mod p
        let mut prod = vec![lc.mod_floor(&pj1)];
        for g in &lifted {
            prod = mul_mod(&prod, g, &pj1);
        }
        let mut e = vec![BigInt::zero(); f.len().max(prod.len())];
        for (i, item) in e.iter_mut().enumerate() {
            let a = f.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = prod.get(i).cloned().unwrap_or_else(BigInt::zero);
            *item = (a - b).mod_floor(&pj1);
        }
        let e_over: Vec<u64> = e
            .iter()
            .map(|c| {
                let q = c / &pj;
                fp.reduce_bigint(&q)
            })
            .collect();
        let epoly = Poly::new(fp, e_over);
        if epoly.is_zero() {
            pj = pj1;
            continue;
        }
        // delta_i = (e / lc) * t_i mod g_i over F_p; g_i += p^j * delta_i
        let escaled = epoly.scale(&lc_inv_p);
        for (i, g) in lifted.iter_mut().enumerate() {
            let d = escaled
                .mul(&cofactors[i])
                .divrem(&modular[i])
                .unwrap()
                .1;
            for (deg, &c) in d.coeffs.iter().enumerate() {
                if c != 0 {
                    let add = BigInt::from(c) * &pj;
                    if deg < g.len() {
                        g[deg] = (&g[deg] + add).mod_floor(&pj1);
                    }
                }
            }
        }
        pj = pj1;
    }
    lifted
}

/// Inverse of a mod m over F_p[x] (both monic-ish, coprime).
fn poly_inverse_mod(a: &Poly<SmallPrimeField>, m: &Poly<SmallPrimeField>) -> Poly<SmallPrimeField> {
    // extended Euclid
    let fp = a.ring;
    let (mut r0, mut r1) = (m.clone(), a.divrem(m).unwrap().1);
    let (mut t0, mut t1) = (Poly::zero(fp), Poly::one(fp));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1).unwrap();
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    debug_assert_eq!(r0.degree(), Some(0));
    let c = fp.inv(r0.leading().unwrap()).unwrap();
    t0.scale(&c).divrem(m).unwrap().1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn x2_minus_1_mod29() {
        let fp = SmallPrimeField::new(29);
        let f = Poly::from_i64(fp, &[-1, 0, 1]);
        let (unit, factors) = poly_factor_modp(&f);
        assert_eq!(unit, 1);
        assert_eq!(factors.len(), 2);
        let expect1 = Poly::from_i64(fp, &[1, 1]);
        let expect2 = Poly::from_i64(fp, &[-1, 1]);
        let got: Vec<_> = factors.iter().map(|(g, _)| g.clone()).collect();
        assert!(got.contains(&expect1) && got.contains(&expect2));
    }

    #[test]
    fn cubic_field_poly_mod13_and_mod11() {
        // Splitting of x^3 + x^2 - 2x - 1 mod p, checked against the
        // brute-force root oracle.  Mod 13 the oracle finds three roots
        // (13 = -1 mod 7 splits in the conductor-7 cubic field), so the
        // factorization must be three linears; mod 11 there are no roots
        // and the cubic is irreducible.
        let fp = SmallPrimeField::new(13);
        let f = Poly::from_i64(fp, &[-1, -2, 1, 1]);
        let oracle_roots: Vec<u64> = (0..13u64).filter(|x| f.eval(x) == 0).collect();
        assert_eq!(oracle_roots, vec![7, 8, 10]);
        let (_, factors) = poly_factor_modp(&f);
        assert_eq!(factors.len(), 3);
        let mut roots: Vec<u64> = factors.iter().map(|(g, _)| fp.neg(&g.coeff(0))).collect();
        roots.sort();
        assert_eq!(roots, oracle_roots);

        let fp11 = SmallPrimeField::new(11);
        let f11 = Poly::from_i64(fp11, &[-1, -2, 1, 1]);
        assert!((0..11u64).all(|x| f11.eval(&x) != 0));
        assert!(is_irreducible_modp(&f11));
        let (_, factors) = poly_factor_modp(&f11);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.degree(), Some(3));
    }

    #[test]
    fn random_product_recovered_mod29() {
        let fp = SmallPrimeField::new(29);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            // build 5 random irreducibles (degrees 1..3), multiply, refactor
            let mut parts: Vec<Poly<SmallPrimeField>> = Vec::new();
            while parts.len() < 5 {
                let d = rng.gen_range(1..=3);
                let mut cs: Vec<u64> = (0..d).map(|_| rng.gen_range(0..29)).collect();
                cs.push(1);
                let g = Poly::new(fp, cs);
                if is_irreducible_modp(&g) && !parts.contains(&g) {
                    parts.push(g);
                }
            }
            let mut f = Poly::one(fp);
            for g in &parts {
                f = f.mul(g);
            }
            let (unit, factors) = poly_factor_modp(&f);
            assert_eq!(unit, 1);
            let mut prod = Poly::one(fp);
            for (g, m) in &factors {
                assert!(is_irreducible_modp(g));
                prod = prod.mul(&g.pow(*m as u64));
            }
            assert_eq!(prod, f);
            let mut got: Vec<_> = factors.into_iter().map(|(g, _)| g).collect();
            let mut want = parts.clone();
            got.sort_by_key(|g| format!("{:?}", g.coeffs));
            want.sort_by_key(|g| format!("{:?}", g.coeffs));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn rational_cubic_times_quadratic() {
        // (x-3)(x^2+1): roots {3}, degrees {1,2}
        let f = Poly::from_i64(Rationals, &[-3, 1]).mul(&Poly::from_i64(Rationals, &[1, 0, 1]));
        let rep = poly_factor_rational(&f);
        assert_eq!(rep.rational_roots, vec![(rat_int(3), 1)]);
        assert_eq!(rep.factor_degrees, vec![1, 2]);
    }

    #[test]
    fn two_cubics_irreducible_mod5() {
        // f = (x^3 + x + 1)(x^3 + x^2 + 2), both irreducible mod 5
        let fp = SmallPrimeField::new(5);
        let g1 = Poly::from_i64(Rationals, &[1, 1, 0, 1]);
        let g2 = Poly::from_i64(Rationals, &[2, 0, 1, 1]);
        for g in [&g1, &g2] {
            let gm = g.map(fp, |c| fp.from_rational(c).unwrap());
            assert!(is_irreducible_modp(&gm));
        }
        let f = g1.mul(&g2);
        let rep = poly_factor_rational(&f);
        assert_eq!(rep.factor_degrees, vec![3, 3]);
        assert!(rep.rational_roots.is_empty());
    }

    #[test]
    fn multiplicities_and_unit() {
        // 6 (x-1)^2 (x+2)^3
        let f = Poly::from_i64(Rationals, &[-1, 1])
            .pow(2)
            .mul(&Poly::from_i64(Rationals, &[2, 1]).pow(3))
            .scale(&rat_int(6));
        let rep = poly_factor_rational(&f);
        assert_eq!(
            rep.rational_roots,
            vec![(rat_int(-2), 3), (rat_int(1), 2)]
        );
        assert_eq!(rep.factor_degrees, vec![1, 1, 1, 1, 1]);
        let (unit, factors) = factor_over_q(&f);
        let mut prod = Poly::constant(Rationals, unit);
        for (g, m) in &factors {
            prod = prod.mul(&g.pow(*m as u64));
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn degree_sum_and_root_property_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let d = rng.gen_range(2..7);
            let coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-9..9)).collect();
            let f = Poly::from_i64(Rationals, &coeffs);
            if f.degree().map_or(true, |dd| dd < 1) {
                continue;
            }
            let rep = poly_factor_rational(&f);
            let total: usize = rep.factor_degrees.iter().sum();
            assert_eq!(total, f.degree().unwrap());
            for (r, _) in &rep.rational_roots {
                assert!(f.eval(r).is_zero());
            }
        }
    }
}
