//! Checked-in case-study data: the labeled curves, the degree-28 cover in
//! its published normal form, and the mod-29 representative.  Everything
//! else in the pipeline is recomputed from scratch; these constants are the
//! reference values the recomputation must hit.

use crate::algebra::poly::Poly;
use crate::algebra::ring::{Rationals, SmallPrimeField};
use crate::coordring::CoordRingElem;
use crate::curve::WeierstrassCurve;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

/// Labeled elliptic curves used by the case studies (Cremona labels).
pub fn curve_by_label(label: &str) -> Option<WeierstrassCurve<Rationals>> {
    let a: [i64; 5] = match label {
        "147b1" => [0, 1, 1, -114, 473],
        "147b2" => [0, 1, 1, -44704, -3655907],
        "162b1" => [1, -1, 1, -5, 5],
        "162b3" => [1, -1, 1, -95, -697],
        "338b1" => [1, -1, 1, 137, 2643],
        "338b2" => [1, -1, 1, -65773, -6478507],
        _ => return None,
    };
    Some(WeierstrassCurve::from_i64(Rationals, a))
}

pub const ALL_LABELS: [&str; 6] = ["147b1", "147b2", "162b1", "162b3", "338b1", "338b2"];

fn rat_poly(coeffs: &[&str]) -> Poly<Rationals> {
    let cs = coeffs
        .iter()
        .map(|s| BigRational::from(BigInt::from_str(s).unwrap()))
        .collect();
    Poly::new(Rationals, cs)
}

/// The degree-28 cover's curve in minimal form: y^2 + y = x^3 + x^2 - 44704x - 3655907.
pub fn cover28_curve() -> WeierstrassCurve<Rationals> {
    curve_by_label("147b2").unwrap()
}

/// F4 = x^2 - 1208x - 227671 + 91y.
pub fn cover28_f4() -> CoordRingElem<Rationals> {
    CoordRingElem::new(
        cover28_curve(),
        rat_poly(&["-227671", "-1208", "1"]),
        rat_poly(&["91"]),
    )
}

/// F9 = (8x^3 - 384x^2 - 13656232x - 678909344) y
///      - (1015x^4 + 770584x^3 + 163098512x^2 + 29785004488x + 2319185361392).
pub fn cover28_f9() -> CoordRingElem<Rationals> {
    CoordRingElem::new(
        cover28_curve(),
        rat_poly(&[
            "-2319185361392",
            "-29785004488",
            "-163098512",
            "-770584",
            "-1015",
        ]),
        rat_poly(&["-678909344", "-13656232", "-384", "8"]),
    )
}

/// F14 as published (degree 14, integral coefficients).
pub fn cover28_f14() -> CoordRingElem<Rationals> {
    CoordRingElem::new(
        cover28_curve(),
        rat_poly(&[
            "53553894620234333456",
            "-95316727595264672",
            "-15704111899877744",
            "-116011622641292",
            "-238003853192",
            "-343453068",
            "400071",
            "8",
        ]),
        rat_poly(&[
            "-17681731246686360",
            "-335969653582304",
            "-4128079708928",
            "-18880768004",
            "-19974360",
            "-8428",
        ]),
    )
}

/// The identity scalars: 64 F4^7 - 343 F9^3 = F14^2.
pub fn cover28_alpha_beta() -> (BigRational, BigRational) {
    (
        BigRational::from(BigInt::from(64)),
        BigRational::from(BigInt::from(-343)),
    )
}

/// The mod-29 representative on y^2 = x^3 + 9x + 1.
pub fn mod29_curve() -> WeierstrassCurve<SmallPrimeField> {
    WeierstrassCurve::short(SmallPrimeField::new(29), 9, 1)
}

/// F4 = x^2 + 11y - 14x - 1 mod 29.
pub fn mod29_f4() -> CoordRingElem<SmallPrimeField> {
    let c = mod29_curve();
    CoordRingElem::new(
        c.clone(),
        Poly::from_i64(c.ring, &[-1, -14, 1]),
        Poly::from_i64(c.ring, &[11]),
    )
}

/// F9 = (x^3 + x^2 + 3x - 5) y mod 29.
pub fn mod29_f9() -> CoordRingElem<SmallPrimeField> {
    let c = mod29_curve();
    CoordRingElem::new(
        c.clone(),
        Poly::zero(c.ring),
        Poly::from_i64(c.ring, &[-5, 3, 1, 1]),
    )
}

/// F14 = (x^7 - 14x^6 - 5x^5 - 9x^4 - 10x^3 + 2x^2 + 10x - 7)
///       - (8x^5 - x^3 - 3x^2 + x + 3) y mod 29.
pub fn mod29_f14() -> CoordRingElem<SmallPrimeField> {
    let c = mod29_curve();
    CoordRingElem::new(
        c.clone(),
        Poly::from_i64(c.ring, &[-7, 10, 2, -10, -9, -5, -14, 1]),
        Poly::from_i64(c.ring, &[-3, -1, 3, 1, 0, -8]),
    )
}

/// CM x-coordinates over Q(c) as coordinate triples (e0, e1, e2), and the
/// printed square-class generators with their norms; entries are paired.
pub fn cubic_cm_x_coords() -> Vec<[i64; 3]> {
    vec![
        [-19, 189, 0],
        [-397, -567, -189],
        [-1342, -3402, -1512],
        [-5878, -16254, -7182],
    ]
}

pub fn cubic_cm_generators() -> Vec<([i64; 3], i64)> {
    vec![
        ([-7, 2, 1], -167),
        ([-6, 1, 0], -239),
        ([-3, -2, -3], -251),
        ([-11, -2, 1], -491),
    ]
}

#[cfg(test)]
mod tests {
    use crate::algebra::ring::Ring;

    use super::*;

    #[test]
    fn printed_data_is_on_curve_scale() {
        // degrees of the published functions
        assert_eq!(cover28_f4().degree(), Some(4));
        assert_eq!(cover28_f9().degree(), Some(9));
        assert_eq!(cover28_f14().degree(), Some(14));
        assert_eq!(mod29_f4().degree(), Some(4));
        assert_eq!(mod29_f9().degree(), Some(9));
        assert_eq!(mod29_f14().degree(), Some(14));
    }

    #[test]
    fn theorem_identity_mod29() {
        // F4^7 - 6 F9^3 = F14^2 in the coordinate ring mod 29
        let f4 = mod29_f4();
        let f9 = mod29_f9();
        let f14 = mod29_f14();
        let six = mod29_curve().ring.from_i64(6);
        let lhs = f4.pow(7).sub(&f9.pow(3).scale(&six));
        assert_eq!(lhs, f14.mul(&f14));
    }
}
