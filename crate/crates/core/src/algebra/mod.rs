//! Exact arithmetic foundation: coefficient rings, polynomials,
//! factorization, and rational reconstruction.

pub mod cubic;
pub mod cyclo;
pub mod factor;
pub mod fq;
pub mod poly;
pub mod reconstruct;
pub mod ring;

pub use cubic::{CubicField, CubicFieldElem};
pub use cyclo::{CycloElem, CycloRing};
pub use factor::{factor_over_q, factor_squarefree_modp, poly_factor_modp, poly_factor_rational};
pub use fq::Fq;
pub use poly::Poly;
pub use reconstruct::rat_reconstruct;
pub use ring::{ModRing, QuadExt, Rationals, Ring, SmallPrimeField};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout.
pub type Rat = BigRational;

/// Convenience constructor for a rational from two machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// p-adic valuation of a nonzero rational (positive for numerator powers,
/// negative for denominator powers).
pub fn padic_val(q: &Rat, p: u64) -> i64 {
    assert!(!q.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut n = q.numer().abs();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    let mut d = q.denom().clone();
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    v
}

/// Squarefree part of a nonzero rational, with sign: the unique squarefree
/// integer s with q = s * (rational square).
pub fn squarefree_class(q: &Rat) -> BigInt {
    assert!(!q.is_zero());
    let n = q.numer() * q.denom();
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut n = n.abs().to_biguint().unwrap();
    let mut class = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e % 2 == 1 {
            class *= &d;
        }
        d += 1u32;
    }
    class *= n; // leftover prime
    BigInt::from(class) * sign
}

/// Trial-division factorization of a positive integer into (prime, exponent)
/// pairs.  All integers in this project factor over small primes.
pub fn trial_factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if n > BigUint::one() {
        out.push((n, 1));
    }
    out
}
