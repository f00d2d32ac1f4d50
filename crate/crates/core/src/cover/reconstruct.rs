//! Rational reconstruction of the lifted cover, exact verification over Q,
//! and transport to the minimal model in published normalization.

use super::modp::solve_identity_scalars;
use super::newton::{LiftedCover, T1_PIN, VAR_NAMES};
use super::CoverSolution;
use crate::algebra::poly::Poly;
use crate::algebra::rat_reconstruct;
use crate::algebra::ring::Rationals;
use crate::coordring::{build_f14, transform_function, CoordRingElem, DerivationContext};
use crate::curve::{minimal_model, ModelMap, WeierstrassCurve};
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::One;

/// The reconstructed cover: the short-model gauge solution over Q and the
/// minimal-model solution with primitive integral functions.
#[derive(Clone, Debug)]
pub struct ReconstructedCover {
    pub gauge: CoverSolution<Rationals>,
    pub minimal: CoverSolution<Rationals>,
    pub map: ModelMap,
}

/// Applies rational reconstruction to every unknown, rebuilds the cover
/// over Q, verifies the identity exactly, and transports everything onto
/// the global minimal model, scaling each function to primitive integral
/// form with positive leading coefficient.
pub fn reconstruct_cover(lift: &LiftedCover) -> Result<ReconstructedCover> {
    let modulus = &lift.ring.modulus;
    let mut vals: Vec<BigRational> = Vec::with_capacity(lift.vars.len());
    for (v, name) in lift.vars.iter().zip(VAR_NAMES) {
        let q = rat_reconstruct(v, modulus).ok_or_else(|| Error::ReconstructionFailed {
            what: name.to_string(),
        })?;
        vals.push(q);
    }
    let q = Rationals;
    let a = vals[10].clone();
    let b = vals[11].clone();
    let curve = WeierstrassCurve::short(q, a, b);
    let f4 = CoordRingElem::new(
        curve.clone(),
        Poly::from_rat(vec![vals[1].clone(), vals[0].clone(), BigRational::one()]),
        Poly::from_rat(vec![BigRational::from(num_bigint::BigInt::from(T1_PIN))]),
    );
    let f9 = CoordRingElem::new(
        curve.clone(),
        Poly::from_rat(vals[5..10].to_vec()),
        Poly::from_rat(vec![
            vals[4].clone(),
            vals[3].clone(),
            vals[2].clone(),
            BigRational::one(),
        ]),
    );
    let ctx = DerivationContext::short_half(curve.clone())?;
    let f14 = build_f14(&ctx, &f4, &f9)?;

    // exact linear dependence of F4^7, F9^3, F14^2 over Q determines the
    // scalars and certifies the reconstruction at once
    let (alpha, beta) =
        solve_identity_scalars(&f4, &f9, &f14).ok_or_else(|| Error::ReconstructionFailed {
            what: "exact identity over Q".into(),
        })?;
    let gauge = CoverSolution {
        curve: curve.clone(),
        f4,
        f9,
        f14,
        alpha,
        beta,
    };
    debug_assert!(gauge.identity_holds());

    // transport to the minimal model and clear denominators
    let (emin, map) = minimal_model(&curve)?;
    let t4 = normalize(&transform_function(&gauge.f4, &emin, &map));
    let t9 = normalize(&transform_function(&gauge.f9, &emin, &map));
    let t14 = normalize(&transform_function(&gauge.f14, &emin, &map));
    let (alpha_m, beta_m) = solve_identity_scalars(&t4, &t9, &t14).ok_or_else(|| {
        Error::ReconstructionFailed {
            what: "identity scalars on the minimal model".into(),
        }
    })?;
    let minimal = CoverSolution {
        curve: emin,
        f4: t4,
        f9: t9,
        f14: t14,
        alpha: alpha_m,
        beta: beta_m,
    };
    if !minimal.identity_holds() {
        return Err(Error::ReconstructionFailed {
            what: "identity on the minimal model".into(),
        });
    }
    Ok(ReconstructedCover {
        gauge,
        minimal,
        map,
    })
}

/// Smallest rational multiple clearing denominators: primitive integral
/// coefficients with positive leading coefficient.
fn normalize(f: &CoordRingElem<Rationals>) -> CoordRingElem<Rationals> {
    use num_traits::Signed;
    // content over u and v jointly
    let joint = Poly::from_rat(
        f.u.coeffs
            .iter()
            .chain(f.v.coeffs.iter())
            .cloned()
            .collect(),
    );
    if joint.is_zero() {
        return f.clone();
    }
    let mut c = joint.content();
    if f.leading().map_or(false, |l| l.is_negative()) {
        c = -c;
    }
    f.scale(&c.recip())
}

#[cfg(test)]
mod tests {
    use crate::algebra::ring::Ring;

    use super::*;
    use crate::algebra::ring::SmallPrimeField;
    use crate::cover::modp::solve_modp_28;
    use crate::cover::newton::newton_lift;
    use crate::data;

    #[test]
    fn five_steps_reconstructs_in_this_gauge() {
        // In the t1-pinned gauge every unknown is small; 29^32 is already
        // enough precision.
        let (ansatz, _) = solve_modp_28(29).unwrap();
        let lift = newton_lift(&ansatz, 5).unwrap();
        let rec = reconstruct_cover(&lift).unwrap();
        assert_eq!(rec.minimal.curve, data::cover28_curve());
    }

    #[test]
    fn three_steps_fails_cleanly() {
        // 29^8 cannot hold the gauge coefficients
        let (ansatz, _) = solve_modp_28(29).unwrap();
        let lift = newton_lift(&ansatz, 3).unwrap();
        match reconstruct_cover(&lift) {
            Err(Error::ReconstructionFailed { .. }) => {}
            other => panic!("expected clean reconstruction failure, got {:?}", other),
        }
    }

    #[test]
    fn full_pipeline_lands_on_published_data() {
        let (ansatz, seed) = solve_modp_28(29).unwrap();
        let lift = newton_lift(&ansatz, 7).unwrap();
        assert_eq!(
            lift.ring.modulus,
            num_bigint::BigUint::from(29u32).pow(128)
        );
        let rec = reconstruct_cover(&lift).unwrap();
        assert_eq!(rec.minimal.curve, data::cover28_curve());
        assert_eq!(rec.minimal.f4, data::cover28_f4());
        assert_eq!(rec.minimal.f9, data::cover28_f9());
        assert_eq!(rec.minimal.f14, data::cover28_f14());
        let (alpha, beta) = data::cover28_alpha_beta();
        assert_eq!(rec.minimal.alpha, alpha);
        assert_eq!(rec.minimal.beta, beta);

        // consistency: the rational gauge solution reduces mod 29 to the seed
        let fp = SmallPrimeField::new(29);
        let red = |q: &BigRational| fp.from_rational(q).unwrap();
        assert_eq!(red(&rec.gauge.curve.a4), seed.curve.a4);
        assert_eq!(red(&rec.gauge.curve.a6), seed.curve.a6);
        assert_eq!(
            rec.gauge.f4.u.map(fp, |c| red(c)),
            seed.f4.u
        );
        assert_eq!(
            rec.gauge.f9.v.map(fp, |c| red(c)),
            seed.f9.v
        );
    }
}
