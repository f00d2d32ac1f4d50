//! The Belyi-cover engine: ramification profiles and Riemann-Hurwitz genus,
//! monodromy permutation triples, the mod-29 ansatz solver, the 29-adic
//! Newton lifting loop, rational reconstruction, exact verification, and the
//! degree-9 cover for the (2,3,9) group.

pub mod deg9;
pub mod modp;
pub mod newton;
pub mod psl2;
pub mod reconstruct;
pub mod verify;

pub use deg9::{solve_cover_239, Cover9Solution};
pub use modp::{solve_modp_28, ModPAnsatz};
pub use newton::{jacobian_rank_mod29, newton_lift, LiftedCover};
pub use psl2::{build_triple_psl2, PermTriple};
pub use reconstruct::reconstruct_cover;
pub use verify::{verify_cover_modp, verify_cover_q, VerifyReport};

use crate::algebra::ring::Ring;
use crate::algebra::Rat;
use crate::coordring::CoordRingElem;
use crate::curve::WeierstrassCurve;
use crate::{Error, Result};
use num_bigint::BigInt;

/// Branch data of a cover of P^1 (or of a higher-genus base): the degree,
/// one partition of the degree per branch point, and the base genus.
#[derive(Clone, PartialEq, Debug)]
pub struct RamificationProfile {
    pub degree: u64,
    pub partitions: Vec<Vec<u64>>,
    pub base_genus: u64,
}

impl RamificationProfile {
    pub fn new(degree: u64, partitions: Vec<Vec<u64>>) -> Result<Self> {
        Self::over_base(degree, partitions, 0)
    }

    pub fn over_base(degree: u64, partitions: Vec<Vec<u64>>, base_genus: u64) -> Result<Self> {
        for part in &partitions {
            if part.iter().sum::<u64>() != degree {
                return Err(Error::Invalid(format!(
                    "partition {:?} does not sum to the degree {}",
                    part, degree
                )));
            }
            if part.iter().any(|&e| e == 0) {
                return Err(Error::Invalid("zero part in partition".into()));
            }
        }
        Ok(RamificationProfile {
            degree,
            partitions,
            base_genus,
        })
    }

    /// Total ramification sum over all branch points of (length - 1).
    pub fn ramification_total(&self) -> u64 {
        self.partitions
            .iter()
            .map(|p| p.iter().map(|&e| e - 1).sum::<u64>())
            .sum()
    }

    /// Parses "28:2^14|3^9,1|7^4" (degree, then one partition per branch
    /// point, parts as m^k or m).
    pub fn parse(s: &str) -> Result<Self> {
        let (deg, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Invalid("profile needs 'degree:partitions'".into()))?;
        let degree: u64 = deg
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad degree '{}'", deg)))?;
        let mut partitions = Vec::new();
        for block in rest.split('|') {
            let mut part = Vec::new();
            for term in block.split(',') {
                let term = term.trim();
                if term.is_empty() {
                    continue;
                }
                if let Some((m, k)) = term.split_once('^') {
                    let m: u64 = m
                        .trim()
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad part '{}'", term)))?;
                    let k: u64 = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad exponent '{}'", term)))?;
                    for _ in 0..k {
                        part.push(m);
                    }
                } else {
                    part.push(
                        term.parse()
                            .map_err(|_| Error::Invalid(format!("bad part '{}'", term)))?,
                    );
                }
            }
            part.sort_unstable_by(|a, b| b.cmp(a));
            partitions.push(part);
        }
        RamificationProfile::new(degree, partitions)
    }
}

/// Genus from Riemann-Hurwitz: 2g - 2 = d(2g0 - 2) + sum over cycles of
/// (length - 1).  Rejects profiles with odd total or negative genus.
pub fn rh_genus(profile: &RamificationProfile) -> Result<u64> {
    let d = profile.degree as i64;
    let g0 = profile.base_genus as i64;
    let total = d * (2 * g0 - 2) + profile.ramification_total() as i64;
    if total % 2 != 0 {
        return Err(Error::Invalid(
            "ramification total has the wrong parity".into(),
        ));
    }
    let two_g = total + 2;
    if two_g < 0 || two_g % 2 != 0 {
        return Err(Error::Invalid("profile gives negative genus".into()));
    }
    Ok((two_g / 2) as u64)
}

/// Genus of a curve whose automorphism group attains the Hurwitz bound:
/// n = 84(g - 1), so g = 1 + n/84 (returned exactly as a rational).
pub fn hurwitz_genus_from_group_order(n: u64) -> Rat {
    Rat::new(BigInt::from(n) + BigInt::from(84), BigInt::from(84))
}

/// A solved Belyi cover: curve, the three functions, and the scalars of the
/// identity alpha F4^7 + beta F9^3 = F14^2 (with t = F14^2 / (alpha F4^7)).
#[derive(Clone, PartialEq, Debug)]
pub struct CoverSolution<R: Ring> {
    pub curve: WeierstrassCurve<R>,
    pub f4: CoordRingElem<R>,
    pub f9: CoordRingElem<R>,
    pub f14: CoordRingElem<R>,
    pub alpha: R::Elem,
    pub beta: R::Elem,
}

impl<R: Ring> CoverSolution<R> {
    /// Whether alpha F4^7 + beta F9^3 - F14^2 vanishes identically.
    pub fn identity_holds(&self) -> bool {
        let lhs = self
            .f4
            .pow(7)
            .scale(&self.alpha)
            .add(&self.f9.pow(3).scale(&self.beta));
        lhs.sub(&self.f14.mul(&self.f14)).is_zero()
    }
}
