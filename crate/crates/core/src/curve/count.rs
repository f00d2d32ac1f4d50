//! Point counting mod p by exhaustive enumeration with quadratic-character
//! counting, and the trace of Frobenius a_p.

use super::minimal::minimal_model;
use super::WeierstrassCurve;
use crate::algebra::ring::{Rationals, SmallPrimeField};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// #E(F_p) for the reduction of the minimal model of `c` at a good prime p.
pub fn count_points_modp(c: &WeierstrassCurve<Rationals>, p: u64) -> Result<u64> {
    let (m, _) = minimal_model(c)?;
    let disc = m.discriminant().to_integer();
    if (disc % BigInt::from(p)).is_zero() {
        return Err(Error::BadPrime { p });
    }
    let fp = SmallPrimeField::new(p);
    let red = |q: &num_rational::BigRational| fp.reduce_bigint(&q.to_integer());
    let a1 = red(&m.a1);
    let a2 = red(&m.a2);
    let a3 = red(&m.a3);
    let a4 = red(&m.a4);
    let a6 = red(&m.a6);

    if p == 2 {
        let mut n = 1u64; // infinity
        for x in 0..2u64 {
            for y in 0..2u64 {
                let lhs = (y * y + a1 * x * y + a3 * y) % 2;
                let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                if lhs == rhs {
                    n += 1;
                }
            }
        }
        return Ok(n);
    }

    // complete the square: (2y + a1 x + a3)^2 = 4 rhs(x) + (a1 x + a3)^2
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let legendre = |a: u64| -> i64 {
        if a == 0 {
            return 0;
        }
        let e = (p - 1) / 2;
        let mut base = a % p;
        let mut acc = 1u64;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, base);
            }
            base = mulm(base, base);
            e >>= 1;
        }
        if acc == 1 {
            1
        } else {
            -1
        }
    };
    let mut n: i64 = 1 + p as i64;
    for x in 0..p {
        let x2 = mulm(x, x);
        let x3 = mulm(x2, x);
        let rhs = (x3 + mulm(a2, x2) + mulm(a4, x) + a6) % p;
        let lin = (mulm(a1, x) + a3) % p;
        let f = (4 * rhs as u128 + mulm(lin, lin) as u128) as u64 % p;
        n += legendre(f);
    }
    Ok(n as u64)
}

/// a_p = p + 1 - #E(F_p).
pub fn trace_of_frobenius(c: &WeierstrassCurve<Rationals>, p: u64) -> Result<i64> {
    let n = count_points_modp(c, p)? as i64;
    Ok(p as i64 + 1 - n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;

    /// Naive oracle: enumerate all (x, y) pairs directly on the minimal
    /// model, no quadratic character.
    fn naive_count(a: [i64; 5], p: u64) -> u64 {
        let mut n = 1u64;
        let m = |v: i64| v.rem_euclid(p as i64) as u64;
        let (a1, a2, a3, a4, a6) = (m(a[0]), m(a[1]), m(a[2]), m(a[3]), m(a[4]));
        for x in 0..p {
            for y in 0..p {
                let lhs = (y * y + a1 * x * y + a3 * y) % p;
                let rhs = (((x * x % p) * x) % p + a2 * x % p * x % p + a4 * x + a6) % p;
                if lhs == rhs % p {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn supersingular_at_3() {
        // y^2 = x^3 + x at p = 3: a_3 = 0
        let c = WeierstrassCurve::short(Rationals, rat_int(1), rat_int(0));
        assert_eq!(trace_of_frobenius(&c, 3).unwrap(), 0);
        assert_eq!(count_points_modp(&c, 3).unwrap(), naive_count([0, 0, 0, 1, 0], 3));
    }

    #[test]
    fn matches_naive_oracle() {
        let c = WeierstrassCurve::from_i64(Rationals, [0, 1, 1, -114, 473]);
        for p in [5u64, 11, 13, 17, 19, 23] {
            assert_eq!(
                count_points_modp(&c, p).unwrap(),
                naive_count([0, 1, 1, -114, 473], p)
            );
        }
    }

    #[test]
    fn bad_prime_rejected() {
        let c = WeierstrassCurve::from_i64(Rationals, [0, 1, 1, -114, 473]); // conductor 147
        assert!(matches!(count_points_modp(&c, 7), Err(Error::BadPrime { p: 7 })));
        assert!(matches!(count_points_modp(&c, 3), Err(Error::BadPrime { p: 3 })));
    }

    #[test]
    fn hasse_bound() {
        let c = WeierstrassCurve::from_i64(Rationals, [1, -1, 1, 137, 2643]);
        for p in [3u64, 5, 7, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            let a = trace_of_frobenius(&c, p).unwrap();
            assert!((a * a) as u64 <= 4 * p, "Hasse bound fails at {}", p);
        }
    }
}
