//! Weierstrass models over abstract coefficient rings: invariants, the
//! chord-tangent group law, model transformations, global minimal models
//! over Q, and point counting mod p.

pub mod count;
pub mod genus2;
pub mod minimal;

pub use count::{count_points_modp, trace_of_frobenius};
pub use minimal::minimal_model;

use crate::algebra::ring::{Rationals, Ring};
use crate::{Error, Result};
use num_rational::BigRational;

/// A curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with coefficients
/// in `ring`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassCurve<R: Ring> {
    pub ring: R,
    pub a1: R::Elem,
    pub a2: R::Elem,
    pub a3: R::Elem,
    pub a4: R::Elem,
    pub a6: R::Elem,
}

#[derive(Clone, PartialEq, Debug)]
pub enum CurvePoint<R: Ring> {
    Infinity,
    Affine(R::Elem, R::Elem),
}

impl<R: Ring> WeierstrassCurve<R> {
    pub fn new(ring: R, a: [R::Elem; 5]) -> Self {
        let [a1, a2, a3, a4, a6] = a;
        WeierstrassCurve {
            ring,
            a1,
            a2,
            a3,
            a4,
            a6,
        }
    }

    pub fn from_i64(ring: R, a: [i64; 5]) -> Self {
        let conv = |n| ring.from_i64(n);
        WeierstrassCurve {
            a1: conv(a[0]),
            a2: conv(a[1]),
            a3: conv(a[2]),
            a4: conv(a[3]),
            a6: conv(a[4]),
            ring,
        }
    }

    /// Short model y^2 = x^3 + ax + b.
    pub fn short(ring: R, a: R::Elem, b: R::Elem) -> Self {
        let z = ring.zero();
        WeierstrassCurve {
            a1: z.clone(),
            a2: z.clone(),
            a3: z,
            a4: a,
            a6: b,
            ring,
        }
    }

    pub fn a_list(&self) -> [R::Elem; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn b2(&self) -> R::Elem {
        let r = &self.ring;
        r.add(&r.mul(&self.a1, &self.a1), &r.mul(&r.from_i64(4), &self.a2))
    }
    pub fn b4(&self) -> R::Elem {
        let r = &self.ring;
        r.add(&r.mul(&r.from_i64(2), &self.a4), &r.mul(&self.a1, &self.a3))
    }
    pub fn b6(&self) -> R::Elem {
        let r = &self.ring;
        r.add(&r.mul(&self.a3, &self.a3), &r.mul(&r.from_i64(4), &self.a6))
    }
    pub fn b8(&self) -> R::Elem {
        let r = &self.ring;
        // a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
        let t1 = r.mul(&r.mul(&self.a1, &self.a1), &self.a6);
        let t2 = r.mul(&r.from_i64(4), &r.mul(&self.a2, &self.a6));
        let t3 = r.mul(&self.a1, &r.mul(&self.a3, &self.a4));
        let t4 = r.mul(&self.a2, &r.mul(&self.a3, &self.a3));
        let t5 = r.mul(&self.a4, &self.a4);
        r.sub(&r.add(&r.sub(&r.add(&t1, &t2), &t3), &t4), &t5)
    }
    pub fn c4(&self) -> R::Elem {
        let r = &self.ring;
        let b2 = self.b2();
        r.sub(&r.mul(&b2, &b2), &r.mul(&r.from_i64(24), &self.b4()))
    }
    pub fn c6(&self) -> R::Elem {
        let r = &self.ring;
        let b2 = self.b2();
        let t1 = r.mul(&b2, &r.mul(&b2, &b2));
        let t2 = r.mul(&r.from_i64(36), &r.mul(&b2, &self.b4()));
        let t3 = r.mul(&r.from_i64(216), &self.b6());
        r.sub(&r.sub(&t2, &t1), &t3)
    }
    pub fn discriminant(&self) -> R::Elem {
        let r = &self.ring;
        let b2 = self.b2();
        let b4 = self.b4();
        let b6 = self.b6();
        let b8 = self.b8();
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        let t1 = r.mul(&r.mul(&b2, &b2), &b8);
        let t2 = r.mul(&r.from_i64(8), &r.mul(&b4, &r.mul(&b4, &b4)));
        let t3 = r.mul(&r.from_i64(27), &r.mul(&b6, &b6));
        let t4 = r.mul(&r.from_i64(9), &r.mul(&b2, &r.mul(&b4, &b6)));
        r.add(&r.sub(&r.sub(&r.neg(&t1), &t2), &t3), &t4)
    }

    /// Right-hand side x^3 + a2 x^2 + a4 x + a6 evaluated at x.
    pub fn rhs_at(&self, x: &R::Elem) -> R::Elem {
        let r = &self.ring;
        let x2 = r.mul(x, x);
        let x3 = r.mul(&x2, x);
        r.add(
            &r.add(&x3, &r.mul(&self.a2, &x2)),
            &r.add(&r.mul(&self.a4, x), &self.a6),
        )
    }

    /// Whether (x, y) satisfies the curve equation exactly.
    pub fn contains(&self, p: &CurvePoint<R>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                let r = &self.ring;
                let lhs = r.add(
                    &r.mul(y, y),
                    &r.add(&r.mul(&self.a1, &r.mul(x, y)), &r.mul(&self.a3, y)),
                );
                lhs == self.rhs_at(x)
            }
        }
    }

    pub fn neg_point(&self, p: &CurvePoint<R>) -> CurvePoint<R> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let r = &self.ring;
                let ny = r.neg(&r.add(y, &r.add(&r.mul(&self.a1, x), &self.a3)));
                CurvePoint::Affine(x.clone(), ny)
            }
        }
    }

    fn invert(&self, d: &R::Elem) -> Result<R::Elem> {
        self.ring.inv(d).ok_or_else(|| match self.ring.unit_obstruction(d) {
            Some(factor) => Error::BadReduction { factor },
            None => Error::Inconsistent("division by zero in group law".into()),
        })
    }

    /// Chord-tangent addition with the point at infinity as identity.
    pub fn group_law(&self, p: &CurvePoint<R>, q: &CurvePoint<R>) -> Result<CurvePoint<R>> {
        let r = &self.ring;
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return Ok(q.clone()),
            (_, CurvePoint::Infinity) => return Ok(p.clone()),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if self.neg_point(p) == *q {
                return Ok(CurvePoint::Infinity);
            }
            // tangent: (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
            let num = r.sub(
                &r.add(
                    &r.mul(&r.from_i64(3), &r.mul(x1, x1)),
                    &r.add(&r.mul(&r.from_i64(2), &r.mul(&self.a2, x1)), &self.a4),
                ),
                &r.mul(&self.a1, y1),
            );
            let den = r.add(
                &r.mul(&r.from_i64(2), y1),
                &r.add(&r.mul(&self.a1, x1), &self.a3),
            );
            r.mul(&num, &self.invert(&den)?)
        } else {
            let num = r.sub(y2, y1);
            let den = r.sub(x2, x1);
            r.mul(&num, &self.invert(&den)?)
        };
        // nu = y1 - lambda x1
        let nu = r.sub(y1, &r.mul(&lambda, x1));
        // x3 = lambda^2 + a1 lambda - a2 - x1 - x2
        let x3 = r.sub(
            &r.sub(
                &r.add(&r.mul(&lambda, &lambda), &r.mul(&self.a1, &lambda)),
                &self.a2,
            ),
            &r.add(x1, x2),
        );
        // y3 = -(lambda + a1) x3 - nu - a3
        let y3 = r.sub(
            &r.neg(&r.mul(&r.add(&lambda, &self.a1), &x3)),
            &r.add(&nu, &self.a3),
        );
        Ok(CurvePoint::Affine(x3, y3))
    }

    pub fn mul_point(&self, n: u64, p: &CurvePoint<R>) -> Result<CurvePoint<R>> {
        let mut acc = CurvePoint::Infinity;
        let mut base = p.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.group_law(&acc, &base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.group_law(&base, &base)?;
            }
        }
        Ok(acc)
    }
}

/// Result of a point-order probe bounded by `bound`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderResult {
    Order(u64),
    Unbounded,
}

/// Least n <= bound with nP = O, or `Unbounded`.
pub fn point_order<R: Ring>(
    curve: &WeierstrassCurve<R>,
    p: &CurvePoint<R>,
    bound: u64,
) -> Result<OrderResult> {
    let mut acc = p.clone();
    for n in 1..=bound {
        if acc == CurvePoint::Infinity {
            return Ok(OrderResult::Order(n));
        }
        acc = curve.group_law(&acc, p)?;
    }
    if acc == CurvePoint::Infinity {
        return Ok(OrderResult::Order(bound));
    }
    Ok(OrderResult::Unbounded)
}

/// Model transformation x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
#[derive(Clone, PartialEq, Debug)]
pub struct ModelMap {
    pub u: BigRational,
    pub r: BigRational,
    pub s: BigRational,
    pub t: BigRational,
}

impl ModelMap {
    pub fn identity() -> Self {
        use num_traits::{One, Zero};
        ModelMap {
            u: BigRational::one(),
            r: BigRational::zero(),
            s: BigRational::zero(),
            t: BigRational::zero(),
        }
    }

    /// Composition: apply `self` first, then `next` (in target coordinates).
    pub fn compose(&self, next: &ModelMap) -> ModelMap {
        let u = &self.u * &next.u;
        let r = &self.r + &self.u * &self.u * &next.r;
        let s = &self.s + &self.u * &next.s;
        let t =
            &self.t + &self.u * &self.u * &next.r * &self.s + &self.u * &self.u * &self.u * &next.t;
        ModelMap { u, r, s, t }
    }

    pub fn inverse(&self) -> ModelMap {
        use num_traits::One;
        let ui = BigRational::one() / &self.u;
        let u2 = &ui * &ui;
        let u3 = &u2 * &ui;
        ModelMap {
            u: ui.clone(),
            r: -&self.r * &u2,
            s: -&self.s * &ui,
            t: (&self.r * &self.s - &self.t) * &u3,
        }
    }
}

/// Applies a model map to a curve over Q, producing the target model.
pub fn transform(c: &WeierstrassCurve<Rationals>, m: &ModelMap) -> Result<WeierstrassCurve<Rationals>> {
    use num_traits::Zero;
    if m.u.is_zero() {
        return Err(Error::Invalid("model map with u = 0".into()));
    }
    let u = &m.u;
    let (r, s, t) = (&m.r, &m.s, &m.t);
    let two = BigRational::from(num_bigint::BigInt::from(2));
    let three = BigRational::from(num_bigint::BigInt::from(3));
    let a1 = (&c.a1 + &two * s) / u;
    let a2 = (&c.a2 - s * &c.a1 + &three * r - s * s) / (u * u);
    let a3 = (&c.a3 + r * &c.a1 + &two * t) / (u * u * u);
    let a4 = (&c.a4 - s * &c.a3 + &two * r * &c.a2 - (t + r * s) * &c.a1 + &three * r * r
        - &two * s * t)
        / (u * u * u * u);
    let a6 = (&c.a6 + r * &c.a4 + r * r * &c.a2 + r * r * r
        - t * &c.a3
        - t * t
        - r * t * &c.a1)
        / (u * u * u * u * u * u);
    Ok(WeierstrassCurve::new(Rationals, [a1, a2, a3, a4, a6]))
}

/// Carries a point of `c` to the transformed model: x' = (x - r)/u^2,
/// y' = (y - s(x - r) - t)/u^3.
pub fn transform_point(
    _c: &WeierstrassCurve<Rationals>,
    m: &ModelMap,
    p: &CurvePoint<Rationals>,
) -> CurvePoint<Rationals> {
    match p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine(x, y) => {
            let u2 = &m.u * &m.u;
            let u3 = &u2 * &m.u;
            let xr = x - &m.r;
            let xp = &xr / &u2;
            let yp = (y - &m.s * &xr - &m.t) / &u3;
            CurvePoint::Affine(xp, yp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int, ring::SmallPrimeField};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c162() -> WeierstrassCurve<Rationals> {
        // y^2 + 15xy + 128y = x^3
        WeierstrassCurve::from_i64(Rationals, [15, 0, 128, 0, 0])
    }

    #[test]
    fn identity_law() {
        let c = c162();
        let p = CurvePoint::Affine(rat_int(0), rat_int(-128));
        assert!(c.contains(&p));
        assert_eq!(c.group_law(&p, &CurvePoint::Infinity).unwrap(), p);
    }

    #[test]
    fn doubling_lands_on_other_torsion_point() {
        let c = c162();
        let q0 = CurvePoint::Affine(rat_int(0), rat_int(-128));
        let d = c.mul_point(2, &q0).unwrap();
        assert_eq!(d, CurvePoint::Affine(rat_int(0), rat_int(0)));
    }

    #[test]
    fn three_torsion_orders() {
        let c = c162();
        let p = CurvePoint::Affine(rat_int(0), rat_int(0));
        assert_eq!(point_order(&c, &p, 10).unwrap(), OrderResult::Order(3));
        let q = CurvePoint::Affine(rat_int(0), rat_int(-128));
        assert_eq!(point_order(&c, &q, 10).unwrap(), OrderResult::Order(3));
        assert_eq!(
            point_order(&c, &CurvePoint::Infinity, 10).unwrap(),
            OrderResult::Order(1)
        );
    }

    #[test]
    fn associativity_over_fp_and_q() {
        // over F_p: random points on y^2 = x^3 + 4x + 4 over F_29
        let fp = SmallPrimeField::new(29);
        let c = WeierstrassCurve::short(fp, 4, 4);
        let mut pts = vec![CurvePoint::Infinity];
        for x in 0..29u64 {
            for y in 0..29u64 {
                let p = CurvePoint::Affine(x, y);
                if c.contains(&p) {
                    pts.push(p);
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let a = &pts[rng.gen_range(0..pts.len())];
            let b = &pts[rng.gen_range(0..pts.len())];
            let d = &pts[rng.gen_range(0..pts.len())];
            let l = c.group_law(&c.group_law(a, b).unwrap(), d).unwrap();
            let r = c.group_law(a, &c.group_law(b, d).unwrap()).unwrap();
            assert_eq!(l, r);
        }

        // over Q: multiples of the generator (0,0) on y^2 + y = x^3 - x
        let e = WeierstrassCurve::from_i64(Rationals, [0, 0, 1, -1, 0]);
        let g = CurvePoint::Affine(rat_int(0), rat_int(0));
        let pts: Vec<_> = (0..7u64).map(|n| e.mul_point(n, &g).unwrap()).collect();
        for _ in 0..100 {
            let a = &pts[rng.gen_range(0..pts.len())];
            let b = &pts[rng.gen_range(0..pts.len())];
            let d = &pts[rng.gen_range(0..pts.len())];
            let l = e.group_law(&e.group_law(a, b).unwrap(), d).unwrap();
            let r = e.group_law(a, &e.group_law(b, d).unwrap()).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn order_divides() {
        let e = WeierstrassCurve::from_i64(Rationals, [1, -1, 1, -5, 5]);
        // 162-B1 has a rational 3-torsion point; find it via the 3-division
        // structure: (1, 0) lies on the curve.
        let p = CurvePoint::Affine(rat_int(1), rat_int(0));
        assert!(e.contains(&p));
        if let OrderResult::Order(n) = point_order(&e, &p, 20).unwrap() {
            for k in 2..5u64 {
                let q = e.mul_point(k, &p).unwrap();
                if let OrderResult::Order(m) = point_order(&e, &q, 20).unwrap() {
                    assert_eq!(n % m, 0);
                }
            }
        } else {
            panic!("expected finite order");
        }
    }

    #[test]
    fn bad_reduction_is_an_error() {
        use crate::algebra::ring::ModRing;
        let zr = ModRing::prime_power(29, 2);
        let c = WeierstrassCurve::short(zr.clone(), zr.from_i64(4), zr.from_i64(4));
        // two affine points whose x difference is 29 (nonzero, non-unit)
        let p = CurvePoint::Affine(zr.from_i64(0), zr.from_i64(2));
        let q = CurvePoint::Affine(zr.from_i64(29), zr.from_i64(2));
        match c.group_law(&p, &q) {
            Err(Error::BadReduction { factor }) => {
                assert_eq!(factor, num_bigint::BigUint::from(29u32));
            }
            other => panic!("expected BadReduction, got {:?}", other),
        }
    }

    #[test]
    fn transform_roundtrip_and_invariants() {
        let c = WeierstrassCurve::from_i64(Rationals, [0, 1, 1, -44704, -3655907]);
        let m = ModelMap {
            u: rat(2, 3),
            r: rat(1, 2),
            s: rat_int(3),
            t: rat(-5, 7),
        };
        let c2 = transform(&c, &m).unwrap();
        // c4, c6, disc scale by u^4, u^6, u^12
        let u4 = m.u.pow(4);
        let u6 = m.u.pow(6);
        let u12 = m.u.pow(12);
        assert_eq!(c2.c4() * u4, c.c4());
        assert_eq!(c2.c6() * u6, c.c6());
        assert_eq!(c2.discriminant() * u12, c.discriminant());
        let back = transform(&c2, &m.inverse()).unwrap();
        assert_eq!(back, c);
        // composition law
        let m2 = ModelMap {
            u: rat(1, 5),
            r: rat_int(-1),
            s: rat(2, 9),
            t: rat_int(4),
        };
        let c3a = transform(&c2, &m2).unwrap();
        let c3b = transform(&c, &m.compose(&m2)).unwrap();
        assert_eq!(c3a, c3b);
        // identity map fixes the curve
        assert_eq!(transform(&c, &ModelMap::identity()).unwrap(), c);
    }

    #[test]
    fn transform_point_stays_on_curve() {
        let e = WeierstrassCurve::from_i64(Rationals, [0, 0, 1, -1, 0]);
        let m = ModelMap {
            u: rat(1, 2),
            r: rat_int(2),
            s: rat_int(1),
            t: rat(3, 4),
        };
        let e2 = transform(&e, &m).unwrap();
        let g = CurvePoint::Affine(rat_int(0), rat_int(0));
        for n in 0..6u64 {
            let p = e.mul_point(n, &g).unwrap();
            let q = transform_point(&e, &m, &p);
            assert!(e2.contains(&q));
        }
    }
}
