//! CM values of the degree-9 cover: t at the reflection image of the base
//! point, and the rational t-values on the fixed locus of the involution
//! fixing the simple zero of t - 1.
//!
//! The involution is w(P) = Q00 - P with Q00 = (0,0); in coordinates
//! w(x, y) = (a3 (y + a1 x + a3)/x^2, a3^2 (y + a1 x + a3)/x^3).  With
//! yt := y + a1 x + a3 and the curve relation y yt = x^3, the Belyi
//! function t = g^3/(lambda y) satisfies t = g^3 yt / (lambda x^3), and
//!
//!   t - t(w(P)) = yt [ g^3 x^6 - a3 yt (a3 x - a3 yt - f x^2)^3 ]
//!                 / (lambda x^9).
//!
//! The yt factor carries the fixed 2-torsion point where t = 1; the bracket
//! carries the CM fixed locus.

use crate::algebra::factor::factor_over_q;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{QuadExt, Rationals, Ring};
use crate::algebra::{squarefree_class, Rat};
use crate::coordring::CoordRingElem;
use crate::cover::Cover9Solution;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Report of the degree-9 CM computation.
#[derive(Clone, Debug)]
pub struct Cm239Report {
    /// t at w(infinity) = (0,0): the point 2-isogenous with t = infinity.
    pub t_at_torsion: Rat,
    /// Rational t-values on the fixed locus t(P) = t(w(P)), with the square
    /// class of the x-coordinate's defining quadratic (0 for rational x).
    pub fixed_values: Vec<(Rat, BigInt)>,
}

/// t((0,0)) by local expansion: y(x) = x^3/(a3 + a1 x + y(x)) as a power
/// series, then t = g^3 yt/(lambda x^3) evaluated at x -> 0.
fn t_at_origin(sol: &Cover9Solution) -> Result<Rat> {
    const TERMS: usize = 10;
    let zero = || Rat::zero();
    // series arithmetic on fixed-length rational vectors
    let mul = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        let mut out = vec![zero(); TERMS];
        for i in 0..TERMS {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..TERMS - i {
                let t = &a[i] * &b[j];
                out[i + j] += t;
            }
        }
        out
    };
    let inv = |a: &[Rat]| -> Option<Vec<Rat>> {
        if a[0].is_zero() {
            return None;
        }
        let mut out = vec![zero(); TERMS];
        out[0] = a[0].recip();
        for k in 1..TERMS {
            let mut s = zero();
            for j in 1..=k {
                s += &a[j] * &out[k - j];
            }
            out[k] = -s * &out[0];
        }
        Some(out)
    };
    // fixed point: y = x^3 / (a3 + a1 x + y)
    let mut y = vec![zero(); TERMS];
    for _ in 0..TERMS {
        let mut den = vec![zero(); TERMS];
        den[0] = sol.a3.clone();
        den[1] = sol.a1.clone();
        for (d, yi) in den.iter_mut().zip(&y) {
            *d += yi;
        }
        let di = inv(&den).ok_or_else(|| Error::Inconsistent("a3 = 0".into()))?;
        let mut x3 = vec![zero(); TERMS];
        x3[3] = Rat::one();
        y = mul(&x3, &di);
    }
    // series of a coordinate-ring element u(x) + v(x) y(x)
    let series_of = |f: &CoordRingElem<Rationals>| -> Vec<Rat> {
        let mut s = vec![zero(); TERMS];
        for (i, c) in f.u.coeffs.iter().enumerate() {
            if i < TERMS {
                s[i] += c;
            }
        }
        let mut vpoly = vec![zero(); TERMS];
        for (i, c) in f.v.coeffs.iter().enumerate() {
            if i < TERMS {
                vpoly[i] += c;
            }
        }
        let vy = mul(&vpoly, &y);
        for (a, b) in s.iter_mut().zip(vy) {
            *a += b;
        }
        s
    };
    let g = series_of(&sol.g);
    let yt = {
        let c = sol.curve.clone();
        let f = CoordRingElem::new(
            c.clone(),
            Poly::from_rat(vec![sol.a3.clone(), sol.a1.clone()]),
            Poly::one(Rationals),
        );
        series_of(&f)
    };
    let num = mul(&mul(&mul(&g, &g), &g), &yt);
    if !num[0].is_zero() || !num[1].is_zero() || !num[2].is_zero() {
        return Err(Error::Inconsistent(
            "g^3 yt does not vanish to order 3 at the torsion point".into(),
        ));
    }
    Ok(&num[3] / &sol.lambda)
}

/// Verifies t(P) = t(w(P)) at a candidate x-coordinate living in the field
/// F = Q[s]/(s^2 - dx) (dx = 0 means F = Q), with y in a further quadratic
/// extension.  Returns the rational t-value if the equality holds and t is
/// rational.
fn verify_candidate(
    sol: &Cover9Solution,
    xpoly: &Poly<Rationals>,
) -> Option<(Rat, BigInt)> {
    type F = QuadExt<Rationals>;
    // x0 in F: for degree 1, x0 rational with dx := 1 (unused); for degree
    // 2 with roots (-b +- sqrt(b^2-4c))/2.
    let (dx, x0): (Rat, (Rat, Rat)) = match xpoly.degree()? {
        1 => {
            let r = -(xpoly.coeff(0) / xpoly.coeff(1));
            (Rat::one(), (r, Rat::zero()))
        }
        2 => {
            let a = xpoly.coeff(2);
            let b = xpoly.coeff(1) / &a;
            let c = xpoly.coeff(0) / &a;
            let disc = &b * &b - Rat::from(BigInt::from(4)) * &c;
            let half = Rat::new(BigInt::one(), BigInt::from(2));
            (disc, (-&b * &half, half))
        }
        _ => return None,
    };
    let base = QuadExt::new(Rationals, dx.clone());
    // y-discriminant over F
    let lift = |c: &Rat| -> (Rat, Rat) { (c.clone(), Rat::zero()) };
    let lin = base.add(
        &base.mul(&lift(&sol.a1), &x0),
        &lift(&sol.a3),
    );
    let x3 = base.mul(&x0, &base.mul(&x0, &x0));
    let dy = base.add(&base.mul(&lin, &lin), &base.mul(&lift(&Rat::from(BigInt::from(4))), &x3));
    let tower = QuadExt::new(base.clone(), dy);
    let half = lift(&Rat::new(BigInt::one(), BigInt::from(2)));
    let yv = (
        tower.base.mul(&tower.base.neg(&lin), &half),
        half.clone(),
    );
    let lift2 = |c: &Rat| ((c.clone(), Rat::zero()), (Rat::zero(), Rat::zero()));
    let xv = (x0.clone(), (Rat::zero(), Rat::zero()));

    // t(P) = g(P)^3 / (lambda y)
    let gval = sol.g.eval_in(&tower, &lift2, &xv, &yv);
    let g3 = tower.pow(&gval, 3);
    let lam = lift2(&sol.lambda);
    let t1 = tower.div(&g3, &tower.mul(&lam, &yv))?;

    // w(P): X2 = a3 (y + a1 x + a3)/x^2, Y2 = a3^2 (...)/x^3
    let a3l = lift2(&sol.a3);
    let a1l = lift2(&sol.a1);
    let yt = tower.add(&yv, &tower.add(&tower.mul(&a1l, &xv), &a3l));
    let x2inv = tower.inv(&tower.mul(&xv, &xv))?;
    let x3inv = tower.inv(&tower.mul(&tower.mul(&xv, &xv), &xv))?;
    let bigx = tower.mul(&a3l, &tower.mul(&yt, &x2inv));
    let bigy = tower.mul(&tower.mul(&a3l, &a3l), &tower.mul(&yt, &x3inv));
    let gw = sol.g.eval_in(&tower, &lift2, &bigx, &bigy);
    let t2 = tower.div(&tower.pow(&gw, 3), &tower.mul(&lam, &bigy))?;

    if t1 != t2 {
        return None;
    }
    // rationality: both components above the base must vanish, and the base
    // component must have zero sqrt(dx) part
    let ((t00, t01), (t10, t11)) = t1;
    if !t10.is_zero() || !t11.is_zero() || !t01.is_zero() {
        return None;
    }
    let marker = if xpoly.degree() == Some(2) {
        squarefree_class(&dx)
    } else {
        BigInt::zero()
    };
    Some((t00, marker))
}

/// CM values of the degree-9 cover: t(w(infinity)) and the rational values
/// on the fixed locus of w.
pub fn cm_points_239(sol: &Cover9Solution) -> Result<Cm239Report> {
    let t_at_torsion = t_at_origin(sol)?;

    // essential fixed-locus numerator: g^3 x^6 - a3 yt (a3 x - a3 yt - f x^2)^3
    let curve = sol.curve.clone();
    let x = CoordRingElem::x(curve.clone());
    let yt = CoordRingElem::new(
        curve.clone(),
        Poly::from_rat(vec![sol.a3.clone(), sol.a1.clone()]),
        Poly::one(Rationals),
    );
    let inner = x
        .scale(&sol.a3)
        .sub(&yt.scale(&sol.a3))
        .sub(&x.mul(&x).scale(&sol.f_coeff));
    let big = sol
        .g
        .pow(3)
        .mul(&x.pow(6))
        .sub(&yt.mul(&inner.pow(3)).scale(&sol.a3));
    let mut norm = big.norm_x();
    // strip the x-power carrying the poles at the torsion points
    while norm.coeff(0).is_zero() && norm.degree().map_or(false, |d| d > 0) {
        norm = norm.div_exact(&Poly::x(Rationals)).unwrap();
    }
    let (_, factors) = factor_over_q(&norm.primitive().1);

    let mut fixed_values: Vec<(Rat, BigInt)> = Vec::new();
    for (f, _) in &factors {
        if f.degree().map_or(true, |d| d > 2) {
            continue;
        }
        if let Some((t, marker)) = verify_candidate(sol, f) {
            if !fixed_values.iter().any(|(tv, m)| tv == &t && m == &marker) {
                fixed_values.push((t, marker));
            }
        }
    }
    fixed_values.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Cm239Report {
        t_at_torsion,
        fixed_values,
    })
}

#[allow(unused)]
fn unused_type_holder(_: BigRational) {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::cover::solve_cover_239;

    #[test]
    fn torsion_value_is_minus_17cubed_over_128() {
        let sol = solve_cover_239().unwrap();
        let rep = cm_points_239(&sol).unwrap();
        assert_eq!(rep.t_at_torsion, rat(-4913, 128));
    }

    #[test]
    fn fixed_locus_contains_the_kz_value() {
        let sol = solve_cover_239().unwrap();
        let rep = cm_points_239(&sol).unwrap();
        // 17^3 5^3 / 2^6 = 614125/64 with conjugation field sqrt(-7)
        let target = rat(614125, 64);
        let hit = rep
            .fixed_values
            .iter()
            .find(|(t, _)| t == &target)
            .expect("CM value 17^3 5^3 / 2^6 on the fixed locus");
        assert_eq!(hit.1, BigInt::from(-7));
    }

    #[test]
    fn torsion_images() {
        use crate::cmpoints::InvolutionSpec;
        use crate::curve::{point_order, CurvePoint, OrderResult};
        let sol = solve_cover_239().unwrap();
        let q0 = CurvePoint::Affine(rat(0, 1), -sol.a3.clone());
        let w2 = InvolutionSpec::PointReflection(q0.clone());
        // w2 sends infinity to the other 3-torsion point (0,0)
        let img = w2.apply(&sol.curve, &CurvePoint::Infinity).unwrap();
        assert_eq!(img, CurvePoint::Affine(rat(0, 1), rat(0, 1)));
        // both torsion points have order 3 and 2 Q0 = (0,0)
        let t00 = CurvePoint::Affine(rat(0, 1), rat(0, 1));
        assert_eq!(
            point_order(&sol.curve, &t00, 10).unwrap(),
            OrderResult::Order(3)
        );
        assert_eq!(
            point_order(&sol.curve, &q0, 10).unwrap(),
            OrderResult::Order(3)
        );
        assert_eq!(sol.curve.mul_point(2, &q0).unwrap(), t00);
    }
}
