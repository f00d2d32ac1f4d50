//! Isogeny evidence from Frobenius traces: isogenous curves over Q share
//! a_p at every prime of good reduction.

use crate::algebra::ring::Rationals;
use crate::curve::{minimal_model, trace_of_frobenius, WeierstrassCurve};
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceEntry {
    pub p: u64,
    pub ap_a: i64,
    pub ap_b: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceReport {
    pub entries: Vec<EvidenceEntry>,
    pub skipped_primes: Vec<u64>,
    pub all_match: bool,
    pub first_mismatch: Option<u64>,
}

fn primes_upto(b: u64) -> Vec<u64> {
    let mut out = Vec::new();
    'outer: for n in 2..=b {
        for d in 2..n {
            if d * d > n {
                break;
            }
            if n % d == 0 {
                continue 'outer;
            }
        }
        out.push(n);
    }
    out
}

/// Compares a_p for every prime p <= bound of good reduction for both
/// curves; primes of bad reduction for either are skipped and reported.
pub fn isogeny_evidence(
    a: &WeierstrassCurve<Rationals>,
    b: &WeierstrassCurve<Rationals>,
    bound: u64,
) -> Result<EvidenceReport> {
    let (ma, _) = minimal_model(a)?;
    let (mb, _) = minimal_model(b)?;
    let da = ma.discriminant().to_integer();
    let db = mb.discriminant().to_integer();
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    let mut first_mismatch = None;
    for p in primes_upto(bound) {
        let bi = BigInt::from(p);
        if (da.mod_floor(&bi)).is_zero() || (db.mod_floor(&bi)).is_zero() {
            skipped.push(p);
            continue;
        }
        let ap_a = trace_of_frobenius(a, p)?;
        let ap_b = trace_of_frobenius(b, p)?;
        if ap_a != ap_b && first_mismatch.is_none() {
            first_mismatch = Some(p);
        }
        entries.push(EvidenceEntry { p, ap_a, ap_b });
    }
    Ok(EvidenceReport {
        all_match: first_mismatch.is_none(),
        entries,
        skipped_primes: skipped,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::curve_by_label;

    #[test]
    fn isogenous_pairs_match_to_50() {
        for (la, lb) in [("147b1", "147b2"), ("162b1", "162b3"), ("338b1", "338b2")] {
            let a = curve_by_label(la).unwrap();
            let b = curve_by_label(lb).unwrap();
            let rep = isogeny_evidence(&a, &b, 50).unwrap();
            assert!(rep.all_match, "{} vs {}: {:?}", la, lb, rep.first_mismatch);
            assert!(!rep.entries.is_empty());
            // Hasse bound on everything reported
            for e in &rep.entries {
                assert!((e.ap_a * e.ap_a) as u64 <= 4 * e.p);
                assert!((e.ap_b * e.ap_b) as u64 <= 4 * e.p);
            }
        }
    }

    #[test]
    fn cross_class_mismatch() {
        let a = curve_by_label("147b1").unwrap();
        let b = curve_by_label("162b1").unwrap();
        let rep = isogeny_evidence(&a, &b, 50).unwrap();
        assert!(!rep.all_match);
        assert!(rep.first_mismatch.is_some());
    }

    #[test]
    fn brute_force_oracle_on_147_pair() {
        // independent naive count for a5 on both 147 curves
        let naive = |a: [i64; 5], p: i64| -> i64 {
            let m = |v: i64| v.rem_euclid(p);
            let mut n = 1i64;
            for x in 0..p {
                for y in 0..p {
                    let lhs = m(y * y + a[0] * x * y + a[2] * y);
                    let rhs = m(x * x * x + a[1] * x * x + a[3] * x + a[4]);
                    if lhs == rhs {
                        n += 1;
                    }
                }
            }
            p + 1 - n
        };
        let a5_b1 = naive([0, 1, 1, -114, 473], 5);
        let a5_b2 = naive([0, 1, 1, -44704, -3655907], 5);
        assert_eq!(a5_b1, a5_b2);
        let a = curve_by_label("147b1").unwrap();
        assert_eq!(trace_of_frobenius(&a, 5).unwrap(), a5_b1);
    }
}
