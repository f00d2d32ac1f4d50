//! 29-adic Newton lifting of the degree-28 cover.
//!
//! The gauge: F4 and F9 monic, and the y-coefficient of F4 pinned to the
//! integer 11, its seed value.  That pin selects the rational short model in
//! the scaling orbit (the orbit parameter enters t1 through an odd power, so
//! fixing t1 at a rational constant lands on a curve y^2 = x^3 + ax + b with
//! a, b and every remaining unknown rational).  The unknown vector, in fixed
//! order, is
//!
//!   [t2, t4, s1, s2, s3, u0, u1, u2, u3, u4, a, b]
//!
//! where F4 = x^2 + t2 x + t4 + 11 y and F9 = (x^3 + s1 x^2 + s2 x + s3) y
//! + u4 x^4 + ... + u0, with F14 := 3 F4 F9' - 7 F4' F9 (short-model
//! derivation).  The identity scalars are not unknowns: since F4 and F9 are
//! monic, matching the top x^14 row forces alpha = [x^14] F14^2, and the top
//! y row forces beta = [x^12 y](F14^2 - alpha F4^7); with those substituted,
//! F9^3 has zero x-part mod 29 and the remaining system keeps full column
//! rank on the x^i rows alone.
//!
//! The equations are the x^i coefficients (i = 0..14) of
//! G := alpha F4^7 + beta F9^3 - F14^2; the x^i y rows are checked after
//! each step.  A step from precision 29^(2^(n-1)) to 29^(2^n) approximates
//! each partial derivative by a finite difference: evaluate G mod 29^(2^n)
//! at two points differing by 29^(2^(n-1)) times a unit vector.  Linear
//! solves use exact Gaussian elimination with unit pivots.

use super::modp::ModPAnsatz;
use super::CoverSolution;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{ModRing, Ring, SmallPrimeField};
use crate::coordring::{build_f14, CoordRingElem, DerivationContext};
use crate::curve::WeierstrassCurve;
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

pub const UNKNOWNS: usize = 12;
pub const X_ROWS: usize = 15;
pub const VAR_NAMES: [&str; UNKNOWNS] = [
    "t2", "t4", "s1", "s2", "s3", "u0", "u1", "u2", "u3", "u4", "a", "b",
];

/// The pinned y-coefficient of F4.
pub const T1_PIN: i64 = 11;

/// State of the lift: the ring Z/29^(2^n) and the unknown vector.
#[derive(Clone, Debug)]
pub struct LiftedCover {
    pub ring: ModRing,
    pub vars: Vec<BigUint>,
    pub steps_done: u32,
    /// Exponent of the modulus 29^e at which the full residual vanished
    /// after each step.
    pub residual_valuations: Vec<u32>,
}

impl LiftedCover {
    /// Materializes the cover data over the current ring.
    pub fn solution(&self) -> Result<CoverSolution<ModRing>> {
        let (curve, f4, f9) = assemble(&self.ring, &self.vars);
        let ctx = DerivationContext::short_half(curve.clone())?;
        let f14 = build_f14(&ctx, &f4, &f9)?;
        let (alpha, beta) = scalars(&self.ring, &f4, &f14);
        Ok(CoverSolution {
            curve,
            f4,
            f9,
            f14,
            alpha,
            beta,
        })
    }
}

fn assemble(
    ring: &ModRing,
    vars: &[BigUint],
) -> (
    WeierstrassCurve<ModRing>,
    CoordRingElem<ModRing>,
    CoordRingElem<ModRing>,
) {
    let t2 = vars[0].clone();
    let t4 = vars[1].clone();
    let s = [vars[2].clone(), vars[3].clone(), vars[4].clone()];
    let u: Vec<BigUint> = vars[5..10].to_vec();
    let a = vars[10].clone();
    let b = vars[11].clone();
    let curve = WeierstrassCurve::short(ring.clone(), a, b);
    let f4 = CoordRingElem::new(
        curve.clone(),
        Poly::new(ring.clone(), vec![t4, t2, ring.one()]),
        Poly::new(ring.clone(), vec![ring.from_i64(T1_PIN)]),
    );
    let f9 = CoordRingElem::new(
        curve.clone(),
        Poly::new(ring.clone(), u),
        Poly::new(
            ring.clone(),
            vec![s[2].clone(), s[1].clone(), s[0].clone(), ring.one()],
        ),
    );
    (curve, f4, f9)
}

/// alpha = [x^14] F14^2 and beta = [x^12 y](F14^2 - alpha F4^7); both top
/// coefficients of F4^7 and F9^3 are exactly one because F4 and F9 are
/// monic.
fn scalars<R: Ring>(
    ring: &R,
    f4: &CoordRingElem<R>,
    f14: &CoordRingElem<R>,
) -> (R::Elem, R::Elem) {
    let f14sq = f14.mul(f14);
    let alpha = f14sq.u.coeff(14);
    let f47 = f4.pow(7);
    let beta = ring.sub(&f14sq.v.coeff(12), &ring.mul(&alpha, &f47.v.coeff(12)));
    (alpha, beta)
}

/// All 28 coefficients of G = alpha F4^7 + beta F9^3 - F14^2: the fifteen
/// x^i rows first, then the thirteen x^i y rows.  The x^14 and x^12 y rows
/// vanish identically by the choice of scalars.
fn residual(ring: &ModRing, vars: &[BigUint]) -> Result<(Vec<BigUint>, Vec<BigUint>)> {
    let (curve, f4, f9) = assemble(ring, vars);
    let ctx = DerivationContext::short_half(curve)?;
    let f14 = build_f14(&ctx, &f4, &f9)?;
    let (alpha, beta) = scalars(ring, &f4, &f14);
    let g = f4
        .pow(7)
        .scale(&alpha)
        .add(&f9.pow(3).scale(&beta))
        .sub(&f14.mul(&f14));
    let xrows = (0..X_ROWS).map(|i| g.u.coeff(i)).collect();
    let yrows = (0..13).map(|i| g.v.coeff(i)).collect();
    Ok((xrows, yrows))
}

/// Seed vector mod 29 from the solved ansatz.
fn seed_vars(ansatz: &ModPAnsatz) -> Vec<BigUint> {
    let mut v: Vec<BigUint> = vec![
        ansatz.t2.into(),
        ansatz.t4.into(),
        ansatz.s1.into(),
        ansatz.s2.into(),
        ansatz.s3.into(),
    ];
    v.extend(std::iter::repeat(BigUint::zero()).take(5)); // u0..u4 vanish mod 29
    v.push(ansatz.a.into());
    v.push(ansatz.b.into());
    v
}

/// Gaussian elimination over Z/m with unit pivots for the overdetermined
/// system J d = r.  Errors if a column has no unit pivot (SingularJacobian)
/// or a leftover row is inconsistent.
fn solve_system(ring: &ModRing, j: &[Vec<BigUint>], r: &[BigUint]) -> Result<Vec<BigUint>> {
    let rows = j.len();
    let cols = j[0].len();
    let mut m: Vec<Vec<BigUint>> = j
        .iter()
        .zip(r)
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let found = (pivot_row..rows).find(|&i| ring.inv(&m[i][col]).is_some());
        let i = found.ok_or(Error::SingularJacobian { column: col })?;
        m.swap(pivot_row, i);
        let inv = ring.inv(&m[pivot_row][col]).unwrap();
        for k in col..=cols {
            m[pivot_row][k] = ring.mul(&m[pivot_row][k], &inv);
        }
        for i in 0..rows {
            if i != pivot_row && !ring.is_zero(&m[i][col]) {
                let f = m[i][col].clone();
                for k in col..=cols {
                    let sub = ring.mul(&f, &m[pivot_row][k]);
                    m[i][k] = ring.sub(&m[i][k], &sub);
                }
            }
        }
        pivot_row += 1;
    }
    for row in m.iter().skip(cols) {
        if !ring.is_zero(&row[cols]) {
            return Err(Error::Inconsistent(
                "x-row system inconsistent after elimination".into(),
            ));
        }
    }
    Ok((0..cols).map(|i| m[i][cols].clone()).collect())
}

/// Runs `steps` Newton doublings from the mod-29 seed; after step n the full
/// residual vanishes mod 29^(2^n).
pub fn newton_lift(ansatz: &ModPAnsatz, steps: u32) -> Result<LiftedCover> {
    let mut vars = seed_vars(ansatz);
    let mut residual_valuations = Vec::new();
    if steps == 0 {
        return Ok(LiftedCover {
            ring: ModRing::prime_power(29, 1),
            vars,
            steps_done: 0,
            residual_valuations,
        });
    }
    for n in 1..=steps {
        let half = 1u32 << (n - 1);
        let full = 1u32 << n;
        let small = ModRing::prime_power(29, half);
        let big = ModRing::prime_power(29, full);
        let m = small.modulus.clone();

        let (rx, ry) = residual(&big, &vars)?;
        for c in rx.iter().chain(ry.iter()) {
            if !(c % &m).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "residual not divisible by 29^{} entering step {}",
                    half, n
                )));
            }
        }
        let rhs: Vec<BigUint> = rx.iter().map(|c| (c / &m) % &small.modulus).collect();

        // finite-difference Jacobian, one column per unknown
        let mut jac: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); UNKNOWNS]; X_ROWS];
        for col in 0..UNKNOWNS {
            let mut shifted = vars.clone();
            shifted[col] = big.add(&shifted[col], &m);
            let (sx, _) = residual(&big, &shifted)?;
            for row in 0..X_ROWS {
                let diff = big.sub(&sx[row], &rx[row]);
                debug_assert!((&diff % &m).is_zero());
                jac[row][col] = (diff / &m) % &small.modulus;
            }
        }

        let delta = solve_system(&small, &jac, &rhs)?;
        for (v, d) in vars.iter_mut().zip(&delta) {
            let correction = big.mul(&m, d);
            *v = big.sub(&(v.clone() % &big.modulus), &correction);
        }

        // quadratic-convergence check: the full residual (x and y rows)
        // vanishes at the doubled precision
        let (cx, cy) = residual(&big, &vars)?;
        if cx.iter().chain(cy.iter()).any(|c| !c.is_zero()) {
            return Err(Error::Inconsistent(format!(
                "residual nonzero mod 29^{} after step {}",
                full, n
            )));
        }
        residual_valuations.push(full);
    }
    let ring = ModRing::prime_power(29, 1 << steps);
    let vars = vars.iter().map(|v| v % &ring.modulus).collect();
    Ok(LiftedCover {
        ring,
        vars,
        steps_done: steps,
        residual_valuations,
    })
}

/// Rank of the finite-difference Jacobian at the seed, reduced mod 29 and
/// restricted to the x^i rows.  Full column rank (12) is the Hensel
/// hypothesis.
pub fn jacobian_rank_mod29(ansatz: &ModPAnsatz) -> Result<(usize, usize)> {
    let vars = seed_vars(ansatz);
    let big = ModRing::prime_power(29, 2);
    let m = BigUint::from(29u32);
    let (rx, _) = residual(&big, &vars)?;
    let fp = SmallPrimeField::new(29);
    let mut jac = vec![vec![0u64; UNKNOWNS]; X_ROWS];
    for col in 0..UNKNOWNS {
        let mut shifted = vars.clone();
        shifted[col] = big.add(&shifted[col], &m);
        let (sx, _) = residual(&big, &shifted)?;
        for row in 0..X_ROWS {
            let diff = big.sub(&sx[row], &rx[row]);
            jac[row][col] = fp.reduce_bigint(&BigInt::from(diff / &m));
        }
    }
    let mut rank = 0usize;
    let mut mat = jac;
    for col in 0..UNKNOWNS {
        if let Some(pivot) = (rank..X_ROWS).find(|&r| mat[r][col] != 0) {
            mat.swap(rank, pivot);
            let inv = fp.inv(&mat[rank][col]).unwrap();
            for k in col..UNKNOWNS {
                mat[rank][k] = fp.mul(&mat[rank][k], &inv);
            }
            for r in 0..X_ROWS {
                if r != rank && mat[r][col] != 0 {
                    let f = mat[r][col];
                    for k in col..UNKNOWNS {
                        let sub = fp.mul(&f, &mat[rank][k]);
                        mat[r][k] = fp.sub(&mat[r][k], &sub);
                    }
                }
            }
            rank += 1;
        }
    }
    Ok((rank, UNKNOWNS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::modp::solve_modp_28;

    #[test]
    fn zero_steps_returns_seed() {
        let (ansatz, _) = solve_modp_28(29).unwrap();
        let lift = newton_lift(&ansatz, 0).unwrap();
        assert_eq!(lift.ring.modulus, BigUint::from(29u32));
        assert_eq!(lift.vars[2], BigUint::from(1u32)); // s1 = 1
    }

    #[test]
    fn seed_residual_vanishes_mod29() {
        let (ansatz, _) = solve_modp_28(29).unwrap();
        let ring = ModRing::prime_power(29, 1);
        let vars = seed_vars(&ansatz);
        let (rx, ry) = residual(&ring, &vars).unwrap();
        assert!(rx.iter().all(|c| c.is_zero()));
        assert!(ry.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn seed_scalars_match_ansatz() {
        let (ansatz, _) = solve_modp_28(29).unwrap();
        let ring = ModRing::prime_power(29, 1);
        let vars = seed_vars(&ansatz);
        let (curve, f4, f9) = assemble(&ring, &vars);
        let ctx = DerivationContext::short_half(curve).unwrap();
        let f14 = build_f14(&ctx, &f4, &f9).unwrap();
        let (alpha, beta) = scalars(&ring, &f4, &f14);
        assert_eq!(alpha, BigUint::from(ansatz.alpha_def));
        assert_eq!(beta, BigUint::from(ansatz.beta_def));
    }

    #[test]
    fn jacobian_full_rank() {
        let (ansatz, _) = solve_modp_28(29).unwrap();
        let (rank, cols) = jacobian_rank_mod29(&ansatz).unwrap();
        assert_eq!(cols, 12);
        assert_eq!(rank, 12);
    }

    #[test]
    fn three_steps_quadratic_convergence() {
        let (ansatz, _) = solve_modp_28(29).unwrap();
        let lift = newton_lift(&ansatz, 3).unwrap();
        assert_eq!(lift.residual_valuations, vec![2, 4, 8]);
        let sol = lift.solution().unwrap();
        assert!(sol.identity_holds());
    }
}
