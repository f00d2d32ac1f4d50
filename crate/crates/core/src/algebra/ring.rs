//! Coefficient rings behind a common trait.
//!
//! Rings are small value objects carrying their own parameters (a modulus, a
//! defining constant), and elements are plain data.  Everything is immutable
//! after construction.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// A commutative ring with explicit element operations.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Multiplicative inverse, or `None` for a non-unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of an arbitrary rational; `None` when the denominator is not
    /// invertible in this ring.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    /// Short tag used in serialized artifacts, e.g. `"Q"` or `"Fp:29"`.
    fn tag(&self) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// For residue rings: a nontrivial factor of the modulus witnessing that
    /// `a` is a nonzero non-unit.  `None` elsewhere.
    fn unit_obstruction(&self, _a: &Self::Elem) -> Option<BigUint> {
        None
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn tag(&self) -> String {
        "Q".into()
    }
}

/// The prime field F_p for a machine-word prime, used for fast factoring and
/// point counting.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SmallPrimeField {
    pub p: u64,
}

impl SmallPrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(p >= 2);
        SmallPrimeField { p }
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().unwrap()
    }
}

impl Ring for SmallPrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let n = self.reduce_bigint(q.numer());
        let d = self.reduce_bigint(q.denom());
        self.inv(&d).map(|di| self.mul(&n, &di))
    }
    fn tag(&self) -> String {
        format!("Fp:{}", self.p)
    }
}

/// The residue ring Z/m with m a prime power p^k; canonical representatives
/// in [0, m).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModRing {
    pub modulus: BigUint,
    pub p: u64,
    pub k: u32,
}

impl ModRing {
    /// Z/p^k.
    pub fn prime_power(p: u64, k: u32) -> Self {
        assert!(k >= 1);
        let modulus = BigUint::from(p).pow(k);
        ModRing { modulus, p, k }
    }

    pub fn reduce(&self, n: &BigInt) -> BigUint {
        let m = BigInt::from(self.modulus.clone());
        n.mod_floor(&m).to_biguint().unwrap()
    }

    /// Representative in (-m/2, m/2], as a signed integer.
    pub fn symmetric(&self, a: &BigUint) -> BigInt {
        let half = &self.modulus >> 1;
        if a > &half {
            BigInt::from(a.clone()) - BigInt::from(self.modulus.clone())
        } else {
            BigInt::from(a.clone())
        }
    }
}

impl Ring for ModRing {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one() % &self.modulus
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.modulus {
            s - &self.modulus
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &self.modulus - b
        }
    }
    fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &self.modulus - a
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.modulus
    }
    fn from_i64(&self, n: i64) -> BigUint {
        self.reduce(&BigInt::from(n))
    }
    fn inv(&self, a: &BigUint) -> Option<BigUint> {
        if a.is_zero() {
            return None;
        }
        let m = BigInt::from(self.modulus.clone());
        let a = BigInt::from(a.clone());
        let ext = a.extended_gcd(&m);
        if ext.gcd.is_one() {
            Some(ext.x.mod_floor(&m).to_biguint().unwrap())
        } else {
            None
        }
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigUint> {
        let n = self.reduce(q.numer());
        let d = self.reduce(q.denom());
        self.inv(&d).map(|di| self.mul(&n, &di))
    }
    fn tag(&self) -> String {
        format!("Zpk:{}^{}", self.p, self.k)
    }
    fn unit_obstruction(&self, a: &BigUint) -> Option<BigUint> {
        if a.is_zero() {
            return Some(self.modulus.clone());
        }
        let g = a.gcd(&self.modulus);
        if g.is_one() {
            None
        } else {
            Some(g)
        }
    }
}

/// Quadratic extension R[sqrt(d)] of a base ring; elements are pairs
/// (a, b) standing for a + b sqrt(d).
#[derive(Clone, PartialEq, Debug)]
pub struct QuadExt<R: Ring> {
    pub base: R,
    pub d: R::Elem,
}

impl<R: Ring> QuadExt<R> {
    pub fn new(base: R, d: R::Elem) -> Self {
        QuadExt { base, d }
    }

    pub fn embed(&self, a: R::Elem) -> (R::Elem, R::Elem) {
        (a, self.base.zero())
    }

    /// sqrt(d) as an element.
    pub fn root(&self) -> (R::Elem, R::Elem) {
        (self.base.zero(), self.base.one())
    }

    pub fn conj(&self, a: &(R::Elem, R::Elem)) -> (R::Elem, R::Elem) {
        (a.0.clone(), self.base.neg(&a.1))
    }

    /// Norm a^2 - d b^2 down to the base ring.
    pub fn norm(&self, a: &(R::Elem, R::Elem)) -> R::Elem {
        let b = &self.base;
        b.sub(&b.mul(&a.0, &a.0), &b.mul(&self.d, &b.mul(&a.1, &a.1)))
    }
}

impl<R: Ring> Ring for QuadExt<R> {
    type Elem = (R::Elem, R::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.zero())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.0) && self.base.is_zero(&a.1)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.sub(&a.0, &b.0), self.base.sub(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        let a0b0 = r.mul(&a.0, &b.0);
        let a1b1 = r.mul(&a.1, &b.1);
        let cross = r.add(&r.mul(&a.0, &b.1), &r.mul(&a.1, &b.0));
        (r.add(&a0b0, &r.mul(&self.d, &a1b1)), cross)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        (self.base.from_i64(n), self.base.zero())
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let n = self.norm(a);
        let ni = self.base.inv(&n)?;
        let c = self.conj(a);
        Some((self.base.mul(&c.0, &ni), self.base.mul(&c.1, &ni)))
    }
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem> {
        Some((self.base.from_rational(q)?, self.base.zero()))
    }
    fn tag(&self) -> String {
        format!("{}[sqrt]", self.base.tag())
    }
}

/// Extended gcd over BigUint pairs: returns (g, x, y) with a x + b y = g,
/// in signed integers.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// Turns a rational into a pair (numerator, denominator) of BigInts.
pub fn rat_parts(q: &BigRational) -> (BigInt, BigInt) {
    (q.numer().clone(), q.denom().clone())
}

/// Integer square root check: `Some(r)` iff n = r^2 with n >= 0.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub fn exact_sqrt_rat(q: &BigRational) -> Option<BigRational> {
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Parses a decimal string or "n/d" fraction into a rational.
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from(n))
    }
}

/// Renders a rational as "n" or "n/d".
pub fn rat_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sign-aware decimal rendering of a residue in symmetric range, for debug
/// output.
pub fn symmetric_string(ring: &ModRing, a: &BigUint) -> String {
    ring.symmetric(a).to_string()
}

impl fmt::Display for SmallPrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl fmt::Display for ModRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}^{}", self.p, self.k)
    }
}
