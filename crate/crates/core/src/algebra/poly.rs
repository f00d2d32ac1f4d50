//! Dense univariate polynomials over a coefficient ring, lowest degree
//! first.  The zero polynomial has an empty coefficient list and degree
//! `None`.

use super::ring::{Rationals, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R: Ring> {
    pub ring: R,
    pub coeffs: Vec<R::Elem>,
}

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while let Some(c) = coeffs.last() {
            if ring.is_zero(c) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        Poly {
            ring,
            coeffs: vec![],
        }
    }

    pub fn one(ring: R) -> Self {
        let c = ring.one();
        Poly {
            ring,
            coeffs: vec![c],
        }
    }

    pub fn x(ring: R) -> Self {
        let coeffs = vec![ring.zero(), ring.one()];
        Poly::new(ring, coeffs)
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Poly::new(ring, vec![c])
    }

    pub fn from_i64(ring: R, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&n| ring.from_i64(n)).collect();
        Poly::new(ring, cs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` is the zero polynomial's sentinel.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.ring.one()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.ring.add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(self.ring.clone(), out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.ring.sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(self.ring.clone(), out)
    }

    pub fn neg(&self) -> Self {
        let out = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Poly::new(self.ring.clone(), out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring.clone());
        }
        let mut out = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.ring.add(&out[i + j], &self.ring.mul(a, b));
            }
        }
        Poly::new(self.ring.clone(), out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let out = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Poly::new(self.ring.clone(), out)
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.ring.zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly::new(self.ring.clone(), out)
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Poly::one(self.ring.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal derivative with respect to x.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.ring.clone());
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.ring.mul(&self.ring.from_i64(i as i64), c))
            .collect();
        Poly::new(self.ring.clone(), out)
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ring.add(&self.ring.mul(&acc, x), c);
        }
        acc
    }

    /// Evaluate with coefficients mapped into another ring.
    pub fn eval_in<S: Ring>(&self, target: &S, map: impl Fn(&R::Elem) -> S::Elem, x: &S::Elem) -> S::Elem {
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = target.add(&target.mul(&acc, x), &map(c));
        }
        acc
    }

    /// Map coefficients into another ring.
    pub fn map<S: Ring>(&self, target: S, map: impl Fn(&R::Elem) -> S::Elem) -> Poly<S> {
        let coeffs = self.coeffs.iter().map(|c| map(c)).collect();
        Poly::new(target, coeffs)
    }

    /// Substitute x -> a x + b.
    pub fn compose_linear(&self, a: &R::Elem, b: &R::Elem) -> Self {
        let lin = Poly::new(self.ring.clone(), vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero(self.ring.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(self.ring.clone(), c.clone()));
        }
        acc
    }

    /// Division with remainder; requires the divisor's leading coefficient to
    /// be invertible.  Returns `None` otherwise.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        debug_assert_eq!(self.ring, d.ring);
        let dd = d.degree()?;
        let lcinv = self.ring.inv(d.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Some((Poly::zero(self.ring.clone()), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut q = vec![self.ring.zero(); qlen];
        for i in (0..qlen).rev() {
            let c = self.ring.mul(&rem[i + dd], &lcinv);
            if self.ring.is_zero(&c) {
                continue;
            }
            q[i] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = self.ring.sub(&rem[i + j], &self.ring.mul(&c, dc));
            }
        }
        Some((
            Poly::new(self.ring.clone(), q),
            Poly::new(self.ring.clone(), rem),
        ))
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("gcd over a field");
            a = b;
            b = r;
        }
        a.monic().unwrap_or(a)
    }

    /// Scale to leading coefficient one; `None` for zero or a non-unit lead.
    pub fn monic(&self) -> Option<Self> {
        let lc = self.leading()?;
        let inv = self.ring.inv(lc)?;
        Some(self.scale(&inv))
    }
}

impl Poly<Rationals> {
    pub fn from_rat(coeffs: Vec<BigRational>) -> Self {
        Poly::new(Rationals, coeffs)
    }

    /// Content: positive rational c with self = c * (primitive integer poly).
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_bigint::BigInt::from(num_integer::Integer::gcd(
                &num_gcd,
                &c.numer().abs(),
            ));
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Primitive integer form with positive leading coefficient, plus the
    /// rational unit taken out: self = unit * primitive.
    pub fn primitive(&self) -> (BigRational, Poly<Rationals>) {
        if self.is_zero() {
            return (BigRational::one(), self.clone());
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    /// Coefficients as integers; `None` if any denominator is nontrivial.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    Some(c.numer().clone())
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Modular exponentiation of x^e mod f over a field.
pub fn powmod<R: Ring>(base: &Poly<R>, mut e: num_bigint::BigUint, f: &Poly<R>) -> Poly<R> {
    let ring = base.ring.clone();
    let mut acc = Poly::one(ring);
    let mut b = base.divrem(f).unwrap().1;
    while !e.is_zero() {
        if e.bit(0) {
            acc = acc.mul(&b).divrem(f).unwrap().1;
        }
        e >>= 1;
        if !e.is_zero() {
            b = b.mul(&b).divrem(f).unwrap().1;
        }
    }
    acc
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{:?}", c)?,
                1 => write!(f, "{:?}*x", c)?,
                _ => write!(f, "{:?}*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::SmallPrimeField;

    #[test]
    fn divrem_roundtrip() {
        let fp = SmallPrimeField::new(29);
        let f = Poly::from_i64(fp, &[1, 0, 3, 5, 7]);
        let d = Poly::from_i64(fp, &[2, 1, 1]);
        let (q, r) = f.divrem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn zero_degree_sentinel() {
        let f: Poly<Rationals> = Poly::zero(Rationals);
        assert_eq!(f.degree(), None);
        let g = Poly::from_i64(Rationals, &[5]);
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn gcd_of_common_factor() {
        let fp = SmallPrimeField::new(13);
        let a = Poly::from_i64(fp, &[1, 1]); // x + 1
        let b = Poly::from_i64(fp, &[2, 1]); // x + 2
        let c = Poly::from_i64(fp, &[3, 1]); // x + 3
        let f = a.mul(&b);
        let g = a.mul(&c);
        assert_eq!(f.gcd(&g), a.monic().unwrap());
    }

    #[test]
    fn primitive_part() {
        let f = Poly::from_rat(vec![
            BigRational::new(BigInt::from(-6), BigInt::from(5)),
            BigRational::new(BigInt::from(4), BigInt::from(15)),
        ]);
        let (unit, prim) = f.primitive();
        assert_eq!(prim.integer_coeffs().unwrap(), vec![BigInt::from(-9), BigInt::from(2)]);
        assert_eq!(prim.scale(&unit), f);
    }

    #[test]
    fn compose_linear_shift() {
        let f = Poly::from_i64(Rationals, &[0, 0, 1]); // x^2
        let g = f.compose_linear(
            &BigRational::from(BigInt::from(2)),
            &BigRational::from(BigInt::from(1)),
        );
        // (2x+1)^2 = 4x^2 + 4x + 1
        assert_eq!(g, Poly::from_i64(Rationals, &[1, 4, 4]));
    }
}
