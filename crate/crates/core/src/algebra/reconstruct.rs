//! Rational reconstruction from a residue via rank-2 lattice reduction.
//!
//! A residue r mod m encodes n/d when n = r d (mod m).  The pairs (n, d)
//! with that property form the lattice spanned by (m, 0) and (r, 1);
//! Gaussian (Lagrange) reduction finds its shortest vector, and when both
//! entries fit under sqrt(m/2) the answer is the unique such fraction.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reconstructs the unique fraction n/d with |n|, d <= floor(sqrt(m/2)),
/// gcd(n, d) = 1, d coprime to m and n = rd (mod m), when one exists.
pub fn rat_reconstruct(residue: &BigUint, modulus: &BigUint) -> Option<BigRational> {
    assert!(modulus >= &BigUint::from(5u32), "modulus >= 5 required");
    let m = BigInt::from(modulus.clone());
    let r = BigInt::from(residue.clone() % modulus);

    // Gaussian reduction of the basis {(m, 0), (r, 1)} under the Euclidean norm.
    let mut u = (m.clone(), BigInt::zero());
    let mut v = (r, BigInt::one());
    let norm = |w: &(BigInt, BigInt)| &w.0 * &w.0 + &w.1 * &w.1;
    if norm(&u) < norm(&v) {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        // q = nearest integer to <u,v>/<v,v>
        let dot = &u.0 * &v.0 + &u.1 * &v.1;
        let vv = norm(&v);
        let q = round_div(&dot, &vv);
        let w = (&u.0 - &q * &v.0, &u.1 - &q * &v.1);
        u = v;
        v = w;
        if norm(&v) >= norm(&u) {
            std::mem::swap(&mut u, &mut v);
            break;
        }
    }
    // v is now a shortest vector (n, d) candidate.
    let (mut n, mut d) = v;
    if d.is_negative() || (d.is_zero() && n.is_negative()) {
        n = -n;
        d = -d;
    }

    let bound = BigInt::from((modulus / 2u32).sqrt());
    if d.is_zero() || n.abs() > bound || d > bound {
        return None;
    }
    let g = n.gcd(&d);
    if !g.is_one() {
        // A non-primitive short vector does not certify a congruent reduced
        // fraction; re-check the reduced pair explicitly.
        n = &n / &g;
        d = &d / &g;
    }
    if !d.gcd(&m).is_one() {
        return None;
    }
    // Final congruence check n = rd (mod m).
    let r = BigInt::from(residue.clone());
    if (&n - &r * &d).mod_floor(&m) != BigInt::zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Encodes n/d as a residue mod m (denominator must be invertible).
pub fn encode_rational(q: &BigRational, modulus: &BigUint) -> Option<BigUint> {
    let m = BigInt::from(modulus.clone());
    let d = q.denom().mod_floor(&m);
    let e = d.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    let dinv = e.x.mod_floor(&m);
    let n = q.numer().mod_floor(&m);
    Some((n * dinv).mod_floor(&m).to_biguint().unwrap())
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest integer to a/b for b > 0
    debug_assert!(b.is_positive());
    let (q, r) = a.div_mod_floor(b);
    if &r * 2 >= *b {
        q + 1
    } else {
        q
    }
}
