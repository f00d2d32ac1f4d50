//! The cyclotomic ring Q(zeta_3): pairs u + v zeta with zeta^2 = -1 - zeta.
//! Carrier for values of cubic Dirichlet characters and the Bernoulli sums
//! built from them.

use super::ring::Ring;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type CycloElem = (BigRational, BigRational);

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CycloRing;

impl CycloRing {
    pub fn zeta(&self) -> CycloElem {
        (BigRational::zero(), BigRational::one())
    }

    /// Complex conjugation: zeta -> zeta^2 = -1 - zeta.
    pub fn conj(&self, a: &CycloElem) -> CycloElem {
        (&a.0 - &a.1, -a.1.clone())
    }

    /// a * conj(a) = u^2 - uv + v^2, always rational.
    pub fn norm(&self, a: &CycloElem) -> BigRational {
        &a.0 * &a.0 - &a.0 * &a.1 + &a.1 * &a.1
    }

    /// The coordinate pair is (real-basis) exact; rationality means the
    /// zeta-coordinate vanishes.
    pub fn rational_part(&self, a: &CycloElem) -> Option<BigRational> {
        if a.1.is_zero() {
            Some(a.0.clone())
        } else {
            None
        }
    }

    pub fn scale(&self, a: &CycloElem, c: &BigRational) -> CycloElem {
        (&a.0 * c, &a.1 * c)
    }
}

impl Ring for CycloRing {
    type Elem = CycloElem;

    fn zero(&self) -> CycloElem {
        (BigRational::zero(), BigRational::zero())
    }
    fn one(&self) -> CycloElem {
        (BigRational::one(), BigRational::zero())
    }
    fn is_zero(&self, a: &CycloElem) -> bool {
        a.0.is_zero() && a.1.is_zero()
    }
    fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        (&a.0 + &b.0, &a.1 + &b.1)
    }
    fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        (&a.0 - &b.0, &a.1 - &b.1)
    }
    fn neg(&self, a: &CycloElem) -> CycloElem {
        (-a.0.clone(), -a.1.clone())
    }
    fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        // (a0 + a1 z)(b0 + b1 z) = a0b0 - a1b1 + (a0b1 + a1b0 - a1b1) z
        let a1b1 = &a.1 * &b.1;
        (
            &a.0 * &b.0 - &a1b1,
            &a.0 * &b.1 + &a.1 * &b.0 - &a1b1,
        )
    }
    fn from_i64(&self, n: i64) -> CycloElem {
        (BigRational::from(BigInt::from(n)), BigRational::zero())
    }
    fn inv(&self, a: &CycloElem) -> Option<CycloElem> {
        let n = self.norm(a);
        if n.is_zero() {
            return None;
        }
        let c = self.conj(a);
        Some(self.scale(&c, &n.recip()))
    }
    fn from_rational(&self, q: &BigRational) -> Option<CycloElem> {
        Some((q.clone(), BigRational::zero()))
    }
    fn tag(&self) -> String {
        "Q(zeta3)".into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;

    #[test]
    fn zeta_cubed_is_one() {
        let r = CycloRing;
        let z = r.zeta();
        assert_eq!(r.pow(&z, 3), r.one());
        // 1 + z + z^2 = 0
        let s = r.add(&r.add(&r.one(), &z), &r.mul(&z, &z));
        assert!(r.is_zero(&s));
    }

    #[test]
    fn conjugation_is_ring_map() {
        let r = CycloRing;
        let a = (rat_int(3), rat_int(-2));
        let b = (rat_int(-1), rat_int(5));
        assert_eq!(r.conj(&r.mul(&a, &b)), r.mul(&r.conj(&a), &r.conj(&b)));
        assert_eq!(r.conj(&r.conj(&a)), a);
    }

    #[test]
    fn norm_positive_definite() {
        let r = CycloRing;
        let a = (rat_int(2), rat_int(-3));
        assert_eq!(r.norm(&a), rat_int(4 + 6 + 9));
        let ai = r.inv(&a).unwrap();
        assert_eq!(r.mul(&a, &ai), r.one());
    }
}
