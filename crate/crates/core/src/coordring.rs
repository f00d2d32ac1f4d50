//! The coordinate ring of a Weierstrass curve: elements u(x) + v(x)y in
//! canonical form (y^2 eliminated through the curve equation), the pole
//! order at the base point as degree, the derivation f -> f' defined by
//! df = f' omega, and the negation pullback.
//!
//! Degrees follow the pole-order grading: the monomials x^i and x^i y have
//! degrees 2i and 2i + 3.

use crate::algebra::poly::Poly;
use crate::algebra::ring::Ring;
use crate::curve::WeierstrassCurve;
use crate::{Error, Result};

/// u(x) + v(x) y on a fixed curve.
#[derive(Clone, PartialEq, Debug)]
pub struct CoordRingElem<R: Ring> {
    pub curve: WeierstrassCurve<R>,
    pub u: Poly<R>,
    pub v: Poly<R>,
}

/// Which normalization of the invariant differential the derivation uses.
///
/// `General` fixes omega = dx / (2y + a1 x + a3), valid on any model.
/// `ShortHalf` fixes omega = dx / y on a short model y^2 = x^3 + ax + b,
/// so x' = y and y' = (3x^2 + a)/2; it needs 2 invertible.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    General,
    ShortHalf,
}

/// A derivation convention bound to a curve.
#[derive(Clone, PartialEq, Debug)]
pub struct DerivationContext<R: Ring> {
    pub curve: WeierstrassCurve<R>,
    pub convention: Convention,
}

impl<R: Ring> CoordRingElem<R> {
    pub fn new(curve: WeierstrassCurve<R>, u: Poly<R>, v: Poly<R>) -> Self {
        CoordRingElem { curve, u, v }
    }

    pub fn zero(curve: WeierstrassCurve<R>) -> Self {
        let ring = curve.ring.clone();
        CoordRingElem {
            curve,
            u: Poly::zero(ring.clone()),
            v: Poly::zero(ring),
        }
    }

    pub fn constant(curve: WeierstrassCurve<R>, c: R::Elem) -> Self {
        let ring = curve.ring.clone();
        CoordRingElem {
            u: Poly::constant(ring.clone(), c),
            v: Poly::zero(ring),
            curve,
        }
    }

    pub fn x(curve: WeierstrassCurve<R>) -> Self {
        let ring = curve.ring.clone();
        CoordRingElem {
            u: Poly::x(ring.clone()),
            v: Poly::zero(ring),
            curve,
        }
    }

    pub fn y(curve: WeierstrassCurve<R>) -> Self {
        let ring = curve.ring.clone();
        CoordRingElem {
            u: Poly::zero(ring.clone()),
            v: Poly::one(ring),
            curve,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// Pole order at the base point: max(2 deg u, 2 deg v + 3); `None` for 0.
    pub fn degree(&self) -> Option<usize> {
        let du = self.u.degree().map(|d| 2 * d);
        let dv = self.v.degree().map(|d| 2 * d + 3);
        match (du, dv) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a.max(b)),
        }
    }

    /// Coefficient of the top-degree monomial.
    pub fn leading(&self) -> Option<R::Elem> {
        let d = self.degree()?;
        if d % 2 == 0 {
            self.u.leading().cloned()
        } else {
            self.v.leading().cloned()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CoordRingElem {
            curve: self.curve.clone(),
            u: self.u.add(&other.u),
            v: self.v.add(&other.v),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CoordRingElem {
            curve: self.curve.clone(),
            u: self.u.sub(&other.u),
            v: self.v.sub(&other.v),
        }
    }

    pub fn neg(&self) -> Self {
        CoordRingElem {
            curve: self.curve.clone(),
            u: self.u.neg(),
            v: self.v.neg(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        CoordRingElem {
            curve: self.curve.clone(),
            u: self.u.scale(c),
            v: self.v.scale(c),
        }
    }

    fn rhs_poly(&self) -> Poly<R> {
        let ring = self.curve.ring.clone();
        Poly::new(
            ring,
            vec![
                self.curve.a6.clone(),
                self.curve.a4.clone(),
                self.curve.a2.clone(),
                self.curve.ring.one(),
            ],
        )
    }

    fn lin_poly(&self) -> Poly<R> {
        let ring = self.curve.ring.clone();
        Poly::new(ring, vec![self.curve.a3.clone(), self.curve.a1.clone()])
    }

    /// Product with y^2 = rhs(x) - (a1 x + a3) y substituted, so the result
    /// is canonical.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.curve, other.curve, "parent curve mismatch");
        let vv = self.v.mul(&other.v);
        let u = self.u.mul(&other.u).add(&vv.mul(&self.rhs_poly()));
        let v = self
            .u
            .mul(&other.v)
            .add(&other.u.mul(&self.v))
            .sub(&vv.mul(&self.lin_poly()));
        CoordRingElem {
            curve: self.curve.clone(),
            u,
            v,
        }
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = CoordRingElem::constant(self.curve.clone(), self.curve.ring.one());
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

    /// Pullback along negation: y -> -y - a1 x - a3.  An involution fixing
    /// pure u(x) elements.
    pub fn neg_pullback(&self) -> Self {
        let u = self.u.sub(&self.v.mul(&self.lin_poly()));
        CoordRingElem {
            curve: self.curve.clone(),
            u,
            v: self.v.neg(),
        }
    }

    /// f * (f composed with negation): the y-part cancels, leaving a
    /// polynomial in x whose roots are the x-coordinates of the zeros of f.
    pub fn norm_x(&self) -> Poly<R> {
        let prod = self.mul(&self.neg_pullback());
        debug_assert!(prod.v.is_zero(), "norm must be y-free");
        prod.u
    }

    /// Evaluate at an affine point with coordinates in an extension ring S,
    /// given an embedding of coefficients.
    pub fn eval_in<S: Ring>(
        &self,
        target: &S,
        embed: &impl Fn(&R::Elem) -> S::Elem,
        x: &S::Elem,
        y: &S::Elem,
    ) -> S::Elem {
        let ue = self.u.eval_in(target, &embed, x);
        let ve = self.v.eval_in(target, &embed, x);
        target.add(&ue, &target.mul(&ve, y))
    }

    /// Substitute y = -(a1 x + a3)/2, the fixed line of negation; needs 2
    /// invertible.
    pub fn eval_half_line(&self) -> Result<Poly<R>> {
        let ring = &self.curve.ring;
        let half = ring
            .inv(&ring.from_i64(2))
            .ok_or_else(|| Error::Invalid("characteristic 2".into()))?;
        let y = self.lin_poly().scale(&ring.neg(&half));
        Ok(self.u.add(&self.v.mul(&y)))
    }

    /// Maps coefficients into another ring, keeping the same curve shape.
    pub fn map_ring<S: Ring>(
        &self,
        target_curve: &WeierstrassCurve<S>,
        embed: &impl Fn(&R::Elem) -> S::Elem,
    ) -> CoordRingElem<S> {
        CoordRingElem {
            curve: target_curve.clone(),
            u: self.u.map(target_curve.ring.clone(), &embed),
            v: self.v.map(target_curve.ring.clone(), &embed),
        }
    }
}

/// Even/odd decomposition under the negation pullback: f = even + odd with
/// even fixed and odd negated.  Needs 2 invertible.
pub fn odd_even_split<R: Ring>(
    f: &CoordRingElem<R>,
) -> Result<(CoordRingElem<R>, CoordRingElem<R>)> {
    let ring = &f.curve.ring;
    let half = ring
        .inv(&ring.from_i64(2))
        .ok_or_else(|| Error::Invalid("characteristic 2 admits no even/odd split".into()))?;
    let w = f.neg_pullback();
    let even = f.add(&w).scale(&half);
    let odd = f.sub(&w).scale(&half);
    Ok((even, odd))
}

impl<R: Ring> DerivationContext<R> {
    pub fn general(curve: WeierstrassCurve<R>) -> Self {
        DerivationContext {
            curve,
            convention: Convention::General,
        }
    }

    /// The short-model convention x' = y, y' = (3x^2 + a)/2.  Errors unless
    /// the model is short and 2 is invertible.
    pub fn short_half(curve: WeierstrassCurve<R>) -> Result<Self> {
        let r = &curve.ring;
        if !(r.is_zero(&curve.a1) && r.is_zero(&curve.a2) && r.is_zero(&curve.a3)) {
            return Err(Error::Invalid(
                "short-model derivation requires a1 = a2 = a3 = 0".into(),
            ));
        }
        if r.inv(&r.from_i64(2)).is_none() {
            return Err(Error::Invalid(
                "short-model derivation requires 2 invertible".into(),
            ));
        }
        Ok(DerivationContext {
            curve,
            convention: Convention::ShortHalf,
        })
    }

    /// The derivation determined by df = f' omega.
    ///
    /// With omega = dx/(2y + a1 x + a3):
    ///   x' = 2y + a1 x + a3,  y' = 3x^2 + 2 a2 x + a4 - a1 y,
    /// and for f = u + vy,
    ///   f' = [u'(a1 x + a3) + 2 v' rhs + v (3x^2 + 2 a2 x + a4)]
    ///      + [2u' - v'(a1 x + a3) - v a1] y.
    /// The short convention is exactly half of this.
    pub fn derive(&self, f: &CoordRingElem<R>) -> Result<CoordRingElem<R>> {
        debug_assert_eq!(self.curve, f.curve, "context curve mismatch");
        let ring = f.curve.ring.clone();
        let du = f.u.derivative();
        let dv = f.v.derivative();
        let lin = Poly::new(ring.clone(), vec![f.curve.a3.clone(), f.curve.a1.clone()]);
        let rhs = Poly::new(
            ring.clone(),
            vec![
                f.curve.a6.clone(),
                f.curve.a4.clone(),
                f.curve.a2.clone(),
                ring.one(),
            ],
        );
        let yprime = Poly::new(
            ring.clone(),
            vec![
                f.curve.a4.clone(),
                ring.mul(&ring.from_i64(2), &f.curve.a2),
                ring.from_i64(3),
            ],
        );
        let two = ring.from_i64(2);
        let u_part = du
            .mul(&lin)
            .add(&dv.mul(&rhs).scale(&two))
            .add(&f.v.mul(&yprime));
        let v_part = du
            .scale(&two)
            .sub(&dv.mul(&lin))
            .sub(&f.v.scale(&f.curve.a1));
        let out = CoordRingElem {
            curve: f.curve.clone(),
            u: u_part,
            v: v_part,
        };
        match self.convention {
            Convention::General => Ok(out),
            Convention::ShortHalf => {
                let half = ring
                    .inv(&ring.from_i64(2))
                    .ok_or_else(|| Error::Invalid("2 not invertible".into()))?;
                Ok(out.scale(&half))
            }
        }
    }
}

/// 3 F4 F9' - 7 F4' F9: by the logarithmic-derivative identities this is a
/// scalar multiple of F14.
pub fn build_f14<R: Ring>(
    ctx: &DerivationContext<R>,
    f4: &CoordRingElem<R>,
    f9: &CoordRingElem<R>,
) -> Result<CoordRingElem<R>> {
    debug_assert_eq!(f4.curve, f9.curve, "parent curve mismatch");
    let d4 = ctx.derive(f4)?;
    let d9 = ctx.derive(f9)?;
    let three = f4.curve.ring.from_i64(3);
    let seven = f4.curve.ring.from_i64(7);
    Ok(f4.mul(&d9).scale(&three).sub(&d4.mul(f9).scale(&seven)))
}

/// A certified proportionality: left = scalar * right, exactly.
#[derive(Clone, Debug)]
pub struct ProportionalityWitness<R: Ring> {
    pub scalar: R::Elem,
    pub left: CoordRingElem<R>,
    pub right: CoordRingElem<R>,
}

/// Finds the scalar making left = scalar * right, if any.
pub fn proportionality<R: Ring>(
    left: &CoordRingElem<R>,
    right: &CoordRingElem<R>,
) -> Option<ProportionalityWitness<R>> {
    let ring = &left.curve.ring;
    if right.is_zero() {
        return if left.is_zero() {
            Some(ProportionalityWitness {
                scalar: ring.one(),
                left: left.clone(),
                right: right.clone(),
            })
        } else {
            None
        };
    }
    let lr = right.leading()?;
    let ll = left.leading()?;
    let scalar = ring.div(&ll, &lr)?;
    if left.sub(&right.scale(&scalar)).is_zero() {
        Some(ProportionalityWitness {
            scalar,
            left: left.clone(),
            right: right.clone(),
        })
    } else {
        None
    }
}

/// Whether f and g share a zero on the curve (poles at the base point are
/// not zeros).  A common zero forces a common root of the x-norms of f, g,
/// f+g and f-g; conversely a common root of all four certifies a shared
/// point, since the two points above an x-value cannot split the four
/// functions' zeros.
pub fn common_zero<R: Ring>(f: &CoordRingElem<R>, g: &CoordRingElem<R>) -> bool {
    if f.is_zero() || g.is_zero() {
        return true;
    }
    let nf = f.norm_x();
    let ng = g.norm_x();
    let mut acc = nf.gcd(&ng);
    if acc.degree() == Some(0) {
        return false;
    }
    acc = acc.gcd(&f.add(g).norm_x());
    if acc.degree() == Some(0) {
        return false;
    }
    acc = acc.gcd(&f.sub(g).norm_x());
    acc.degree() != Some(0)
}

/// Rewrites a function along a model map: substituting x = u^2 x' + r,
/// y = u^3 y' + s u^2 x' + t expresses the same abstract function in the
/// coordinates of the transformed model.
pub fn transform_function(
    f: &CoordRingElem<crate::algebra::ring::Rationals>,
    target: &WeierstrassCurve<crate::algebra::ring::Rationals>,
    m: &crate::curve::ModelMap,
) -> CoordRingElem<crate::algebra::ring::Rationals> {
    use crate::algebra::ring::Rationals;
    let u2 = &m.u * &m.u;
    let u3 = &u2 * &m.u;
    let ucomp = f.u.compose_linear(&u2, &m.r);
    let vcomp = f.v.compose_linear(&u2, &m.r);
    // v(X) * Y = v(X) * (u^3 y' + s u^2 x' + t)
    let lin = Poly::new(
        Rationals,
        vec![m.t.clone(), &m.s * &u2],
    );
    CoordRingElem {
        curve: target.clone(),
        u: ucomp.add(&vcomp.mul(&lin)),
        v: vcomp.scale(&u3),
    }
}

/// Whether the zero divisor of f consists of distinct points: f and f'
/// must not vanish together.
pub fn divisor_squarefree<R: Ring>(
    ctx: &DerivationContext<R>,
    f: &CoordRingElem<R>,
) -> Result<bool> {
    let df = ctx.derive(f)?;
    Ok(!common_zero(f, &df))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;
    use crate::algebra::ring::{Rationals, SmallPrimeField};
    use crate::curve::WeierstrassCurve;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mod29_curve() -> WeierstrassCurve<SmallPrimeField> {
        WeierstrassCurve::short(SmallPrimeField::new(29), 9, 1)
    }

    fn rand_elem<RNG: Rng>(
        c: &WeierstrassCurve<SmallPrimeField>,
        rng: &mut RNG,
    ) -> CoordRingElem<SmallPrimeField> {
        let du = rng.gen_range(0..4);
        let dv = rng.gen_range(0..3);
        let u = Poly::new(c.ring, (0..=du).map(|_| rng.gen_range(0..29)).collect());
        let v = Poly::new(c.ring, (0..=dv).map(|_| rng.gen_range(0..29)).collect());
        CoordRingElem::new(c.clone(), u, v)
    }

    #[test]
    fn y_squared_reduces() {
        let c = mod29_curve();
        let y = CoordRingElem::y(c.clone());
        let y2 = y.mul(&y);
        assert!(y2.v.is_zero());
        assert_eq!(y2.u, Poly::from_i64(c.ring, &[1, 9, 0, 1]));
    }

    #[test]
    fn monomial_degrees() {
        let c = mod29_curve();
        let x = CoordRingElem::x(c.clone());
        let y = CoordRingElem::y(c.clone());
        for i in 0..5u64 {
            let xi = x.pow(i);
            if i > 0 {
                assert_eq!(xi.degree(), Some(2 * i as usize));
            }
            assert_eq!(xi.mul(&y).degree(), Some(2 * i as usize + 3));
        }
    }

    #[test]
    fn mul_commutes_random() {
        let c = mod29_curve();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let f = rand_elem(&c, &mut rng);
            let g = rand_elem(&c, &mut rng);
            assert_eq!(f.mul(&g), g.mul(&f));
        }
    }

    #[test]
    fn degree_additive_random() {
        let c = mod29_curve();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut checked = 0;
        while checked < 100 {
            let f = rand_elem(&c, &mut rng);
            let g = rand_elem(&c, &mut rng);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
            assert_eq!(f.mul(&g).degree(), Some(df + dg));
            checked += 1;
        }
    }

    #[test]
    fn derive_x_general_and_short() {
        // general convention on y^2 = x^3 + ax + b gives x' = 2y
        let c = WeierstrassCurve::short(Rationals, rat_int(2), rat_int(3));
        let ctx = DerivationContext::general(c.clone());
        let x = CoordRingElem::x(c.clone());
        let dx = ctx.derive(&x).unwrap();
        assert_eq!(dx, CoordRingElem::y(c.clone()).scale(&rat_int(2)));
        // short-half convention gives exactly x' = y
        let ctx2 = DerivationContext::short_half(c.clone()).unwrap();
        assert_eq!(ctx2.derive(&x).unwrap(), CoordRingElem::y(c.clone()));
        // y' = (3x^2 + a)/2
        let y = CoordRingElem::y(c.clone());
        let dy = ctx2.derive(&y).unwrap();
        let expect = CoordRingElem::new(
            c.clone(),
            Poly::from_rat(vec![
                rat_int(1),
                BigRational::from(BigInt::from(0)),
                BigRational::new(BigInt::from(3), BigInt::from(2)),
            ]),
            Poly::zero(Rationals),
        );
        assert_eq!(dy, expect);
    }

    #[test]
    fn derive_constants_vanish() {
        let c = mod29_curve();
        let ctx = DerivationContext::general(c.clone());
        let k = CoordRingElem::constant(c.clone(), 17);
        assert!(ctx.derive(&k).unwrap().is_zero());
    }

    #[test]
    fn derive_x_squared_leibniz_sample() {
        let c = WeierstrassCurve::short(Rationals, rat_int(5), rat_int(-1));
        let ctx = DerivationContext::short_half(c.clone()).unwrap();
        let x = CoordRingElem::x(c.clone());
        let x2 = x.mul(&x);
        // (x^2)' = 2xy under the short convention
        let got = ctx.derive(&x2).unwrap();
        let expect = x.mul(&CoordRingElem::y(c.clone())).scale(&rat_int(2));
        assert_eq!(got, expect);
    }

    #[test]
    fn leibniz_rule_200_random() {
        // over F_29 with general convention
        let c = mod29_curve();
        let ctx = DerivationContext::general(c.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..200 {
            let f = rand_elem(&c, &mut rng);
            let g = rand_elem(&c, &mut rng);
            let lhs = ctx.derive(&f.mul(&g)).unwrap();
            let rhs = ctx
                .derive(&f)
                .unwrap()
                .mul(&g)
                .add(&f.mul(&ctx.derive(&g).unwrap()));
            assert_eq!(lhs, rhs);
        }
        // over Q with the short convention
        let cq = WeierstrassCurve::short(Rationals, rat_int(9), rat_int(1));
        let ctxq = DerivationContext::short_half(cq.clone()).unwrap();
        for _ in 0..20 {
            let f = CoordRingElem::new(
                cq.clone(),
                Poly::from_i64(Rationals, &[rng.gen_range(-9..9), rng.gen_range(-9..9)]),
                Poly::from_i64(Rationals, &[rng.gen_range(-9..9)]),
            );
            let g = CoordRingElem::new(
                cq.clone(),
                Poly::from_i64(Rationals, &[rng.gen_range(-9..9), 0, rng.gen_range(-9..9)]),
                Poly::from_i64(Rationals, &[rng.gen_range(-9..9), rng.gen_range(-9..9)]),
            );
            let lhs = ctxq.derive(&f.mul(&g)).unwrap();
            let rhs = ctxq
                .derive(&f)
                .unwrap()
                .mul(&g)
                .add(&f.mul(&ctxq.derive(&g).unwrap()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn neg_pullback_involution() {
        let c = WeierstrassCurve::from_i64(Rationals, [0, 1, 1, -44704, -3655907]);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let f = CoordRingElem::new(
                c.clone(),
                Poly::from_i64(Rationals, &[rng.gen_range(-99..99), rng.gen_range(-99..99)]),
                Poly::from_i64(Rationals, &[rng.gen_range(-99..99)]),
            );
            assert_eq!(f.neg_pullback().neg_pullback(), f);
        }
        let x = CoordRingElem::x(c.clone());
        assert_eq!(x.neg_pullback(), x);
    }

    #[test]
    fn split_of_y() {
        let c = WeierstrassCurve::short(Rationals, rat_int(4), rat_int(3));
        let y = CoordRingElem::y(c.clone());
        let (even, odd) = odd_even_split(&y).unwrap();
        assert!(even.is_zero());
        assert_eq!(odd, y);
    }

    #[test]
    fn common_zero_detects_shared_factor() {
        let c = mod29_curve();
        // f = (x - 1) * y and g = (x - 1): share the zeros above x = 1
        let xm1 = Poly::from_i64(c.ring, &[-1, 1]);
        let f = CoordRingElem::new(c.clone(), Poly::zero(c.ring), xm1.clone());
        let g = CoordRingElem::new(c.clone(), xm1, Poly::zero(c.ring));
        assert!(common_zero(&f, &g));
        // x and x - 1 share nothing
        let x = CoordRingElem::x(c.clone());
        let g1 = CoordRingElem::new(
            c.clone(),
            Poly::from_i64(c.ring, &[-1, 1]),
            Poly::zero(c.ring),
        );
        assert!(!common_zero(&x, &g1));
    }

    #[test]
    fn mul_associative_random() {
        let c = mod29_curve();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let f = rand_elem(&c, &mut rng);
            let g = rand_elem(&c, &mut rng);
            let h = rand_elem(&c, &mut rng);
            assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        }
    }
}
