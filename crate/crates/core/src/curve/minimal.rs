//! Global minimal models over Q by the Laska-Kraus-Connell procedure:
//! shrink (c4, c6) by allowed prime powers subject to Kraus's integrality
//! conditions, then rebuild the reduced model and the model map to it.

use super::{transform, ModelMap, WeierstrassCurve};
use crate::algebra::ring::Rationals;
use crate::algebra::trial_factor;
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Kraus's conditions: (c4, c6) with c4^3 - c6^2 = 1728 disc arise from an
/// integral model iff v3(c6) != 2 and mod 32: c6 = -1 (mod 4), or
/// 16 | c4 with c6 = 0 or 8 (mod 32).
fn kraus_ok(c4: &BigInt, c6: &BigInt) -> bool {
    let three = BigInt::from(3);
    if !(c6 % &three).is_zero() || (c6 % (&three * &three * &three)).is_zero() {
        // v3 is 0 or >= 3
    } else {
        let v9 = (c6 % BigInt::from(9)).is_zero();
        if v9 {
            // exactly 9 | c6, 27 does not divide
            return false;
        }
        // v3(c6) == 1 is fine
    }
    let m4 = c6.mod_floor(&BigInt::from(4));
    if m4 == BigInt::from(3) {
        return true;
    }
    let m16 = c4.mod_floor(&BigInt::from(16));
    let m32 = c6.mod_floor(&BigInt::from(32));
    m16.is_zero() && (m32.is_zero() || m32 == BigInt::from(8))
}

/// Builds the standardized reduced model from minimal invariants, following
/// the classical b2-recipe.  Returns integer a-invariants.
fn model_from_c4c6(c4: &BigInt, c6: &BigInt) -> Result<[BigInt; 5]> {
    let twelve = BigInt::from(12);
    let mut b2 = (-c6).mod_floor(&twelve);
    if b2 >= BigInt::from(6) {
        b2 -= &twelve;
    }
    let b4_num = &b2 * &b2 - c4;
    let b6_num = -(&b2 * &b2 * &b2) + BigInt::from(36) * &b2 * &b4_num / BigInt::from(24) * 24 / 24;
    // compute carefully below instead
    let b4 = exact_div(&b4_num, &BigInt::from(24))?;
    let b6 = exact_div(
        &(-(&b2 * &b2 * &b2) + BigInt::from(36) * &b2 * &b4 - c6),
        &BigInt::from(216),
    )?;
    let _ = b6_num;
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    let a1 = b2.mod_floor(&two);
    let a2 = exact_div(&(&b2 - &a1), &four)?;
    let a3 = b6.mod_floor(&two);
    let a4 = exact_div(&(&b4 - &a1 * &a3), &two)?;
    let a6 = exact_div(&(&b6 - &a3), &four)?;
    Ok([a1, a2, a3, a4, a6])
}

fn exact_div(n: &BigInt, d: &BigInt) -> Result<BigInt> {
    let (q, r) = n.div_mod_floor(d);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inconsistent(format!(
            "non-integral division {n}/{d} in minimal-model recipe"
        )))
    }
}

/// Global minimal model of a curve over Q, together with the model map
/// carrying the input onto it.
pub fn minimal_model(
    c: &WeierstrassCurve<Rationals>,
) -> Result<(WeierstrassCurve<Rationals>, ModelMap)> {
    if c.discriminant().is_zero() {
        return Err(Error::SingularCurve);
    }
    // Step 1: integralize by u = 1/n.
    let mut n = BigInt::one();
    for (i, a) in c.a_list().iter().enumerate() {
        let weight = [1u32, 2, 3, 4, 6][i];
        // smallest n with n^weight * a integral: for each prime power p^e in
        // the denominator, need n^weight >= p^e, i.e. e' = ceil(e/weight)
        for (p, e) in trial_factor(&a.denom().to_biguint().unwrap()) {
            let need = (e + weight - 1) / weight;
            let pi = BigInt::from(p);
            let cur = val(&n, &pi);
            if need > cur {
                n *= pi.pow(need - cur);
            }
        }
    }
    let int_map = ModelMap {
        u: BigRational::new(BigInt::one(), n),
        r: BigRational::zero(),
        s: BigRational::zero(),
        t: BigRational::zero(),
    };
    let ci = transform(c, &int_map)?;
    let c4 = ci.c4().to_integer();
    let c6 = ci.c6().to_integer();
    let disc = ci.discriminant().to_integer();

    // Step 2: shrink by u = prod p^dp.
    let mut u = BigInt::one();
    let mut c4m = c4.clone();
    let mut c6m = c6.clone();
    for (p, _) in trial_factor(&disc.magnitude().clone()) {
        let p = BigInt::from(p);
        loop {
            let d4 = if c4m.is_zero() { u32::MAX } else { val(&c4m, &p) };
            let d6 = if c6m.is_zero() { u32::MAX } else { val(&c6m, &p) };
            if d4 >= 4 && d6 >= 6 {
                let n4 = &c4m / p.pow(4);
                let n6 = &c6m / p.pow(6);
                let needs_kraus = p == BigInt::from(2) || p == BigInt::from(3);
                if !needs_kraus || kraus_ok(&n4, &n6) {
                    c4m = n4;
                    c6m = n6;
                    u *= &p;
                    continue;
                }
            }
            break;
        }
    }

    let a = model_from_c4c6(&c4m, &c6m)?;
    let target = WeierstrassCurve::new(
        Rationals,
        [
            BigRational::from(a[0].clone()),
            BigRational::from(a[1].clone()),
            BigRational::from(a[2].clone()),
            BigRational::from(a[3].clone()),
            BigRational::from(a[4].clone()),
        ],
    );

    // Step 3: solve the map from the original curve to the target:
    // u total = (1/n) * u_reduce; then s, r, t from the linear relations.
    let utot = &int_map.u * BigRational::from(u);
    let two = BigRational::from(BigInt::from(2));
    let three = BigRational::from(BigInt::from(3));
    let s = (&utot * &target.a1 - &c.a1) / &two;
    let r = (&utot * &utot * &target.a2 - &c.a2 + &s * &c.a1 + &s * &s) / &three;
    let t = (&utot * &utot * &utot * &target.a3 - &c.a3 - &r * &c.a1) / &two;
    let map = ModelMap {
        u: utot,
        r,
        s,
        t,
    };
    let check = transform(c, &map)?;
    if check != target {
        return Err(Error::Inconsistent(
            "minimal model map failed verification".into(),
        ));
    }
    Ok((target, map))
}

fn val(n: &BigInt, p: &BigInt) -> u32 {
    if n.is_zero() {
        return u32::MAX;
    }
    let mut n = n.abs();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// Oracle-style minimality check: no prime p with p^12 | disc admits a
/// reduction step (p^4 | c4, p^6 | c6 and Kraus holds for the quotients).
pub fn is_minimal(c: &WeierstrassCurve<Rationals>) -> bool {
    let c4 = c.c4();
    let c6 = c.c6();
    let disc = c.discriminant();
    if !(c4.denom().is_one() && c6.denom().is_one() && disc.denom().is_one()) {
        return false;
    }
    let c4 = c4.to_integer();
    let c6 = c6.to_integer();
    let disc = disc.to_integer();
    for (p, e) in trial_factor(&disc.magnitude().clone()) {
        if e < 12 {
            continue;
        }
        let p = BigInt::from(p);
        let d4 = if c4.is_zero() { u32::MAX } else { val(&c4, &p) };
        let d6 = if c6.is_zero() { u32::MAX } else { val(&c6, &p) };
        if d4 >= 4 && d6 >= 6 {
            let n4 = &c4 / p.pow(4);
            let n6 = &c6 / p.pow(6);
            let needs_kraus = p == BigInt::from(2) || p == BigInt::from(3);
            if !needs_kraus || kraus_ok(&n4, &n6) {
                return false;
            }
        }
    }
    true
}

/// p-adic valuation of the minimal discriminant, used for good-reduction
/// checks.
pub fn minimal_disc(c: &WeierstrassCurve<Rationals>) -> Result<BigInt> {
    let (m, _) = minimal_model(c)?;
    Ok(m.discriminant().to_integer())
}

#[allow(unused)]
fn biguint_of(n: &BigInt) -> BigUint {
    n.magnitude().clone()
}
