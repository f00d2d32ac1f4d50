//! The cyclic cubic field Q(c) with c = 2 cos(2 pi / 7), minimal polynomial
//! X^3 + X^2 - 2X - 1.  Elements are coordinate triples over Q in the basis
//! (1, c, c^2).

use super::ring::{exact_sqrt_rat, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type CubicFieldElem = [BigRational; 3];

/// The fixed field Q(c); a unit struct since the minimal polynomial is pinned.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CubicField;

impl CubicField {
    pub fn from_i64_coords(&self, e0: i64, e1: i64, e2: i64) -> CubicFieldElem {
        [
            BigRational::from(BigInt::from(e0)),
            BigRational::from(BigInt::from(e1)),
            BigRational::from(BigInt::from(e2)),
        ]
    }

    /// The generator c.
    pub fn gen(&self) -> CubicFieldElem {
        self.from_i64_coords(0, 1, 0)
    }

    /// Reduce a degree-<5 coordinate vector using c^3 = 1 + 2c - c^2 and
    /// c^4 = -1 - c + 3c^2.
    fn reduce(&self, e: &[BigRational]) -> CubicFieldElem {
        let z = BigRational::zero();
        let get = |i: usize| e.get(i).cloned().unwrap_or_else(|| z.clone());
        let (e0, e1, e2, e3, e4) = (get(0), get(1), get(2), get(3), get(4));
        [
            e0 + &e3 - &e4,
            e1 + &e3 * BigRational::from(BigInt::from(2)) - &e4,
            e2 - &e3 + &e4 * BigRational::from(BigInt::from(3)),
        ]
    }

    /// Matrix of multiplication by e in the basis (1, c, c^2), column-major.
    pub fn mul_matrix(&self, e: &CubicFieldElem) -> [[BigRational; 3]; 3] {
        let cols = [
            self.mul(e, &self.from_i64_coords(1, 0, 0)),
            self.mul(e, &self.from_i64_coords(0, 1, 0)),
            self.mul(e, &self.from_i64_coords(0, 0, 1)),
        ];
        // rows
        let mut m: [[BigRational; 3]; 3] = Default::default();
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                m[i][j] = col[i].clone();
            }
        }
        m
    }

    /// Field norm: the product of the three Galois conjugates, computed as
    /// the determinant of the multiplication matrix (so norm(q) = q^3 for
    /// rational q, and the norm is multiplicative).
    pub fn norm(&self, e: &CubicFieldElem) -> BigRational {
        let m = self.mul_matrix(e);
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Trace of the multiplication matrix.
    pub fn trace(&self, e: &CubicFieldElem) -> BigRational {
        let m = self.mul_matrix(e);
        &m[0][0] + &m[1][1] + &m[2][2]
    }

    /// Characteristic polynomial coefficients (c0, c1, c2) of multiplication
    /// by e: T^3 + c2 T^2 + c1 T + c0.
    pub fn char_poly(&self, e: &CubicFieldElem) -> (BigRational, BigRational, BigRational) {
        let m = self.mul_matrix(e);
        let tr = &m[0][0] + &m[1][1] + &m[2][2];
        let sigma2 = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0] + &m[0][0] * &m[2][2]
            - &m[0][2] * &m[2][0]
            + &m[1][1] * &m[2][2]
            - &m[1][2] * &m[2][1];
        let det = self.norm(e);
        (-det, sigma2, -tr)
    }

    /// All three real embeddings of e are negative.  Since the field is
    /// totally real, the characteristic polynomial (T + r1)(T + r2)(T + r3)
    /// has all-positive coefficients exactly when every r_i > 0.
    pub fn totally_negative(&self, e: &CubicFieldElem) -> bool {
        let (c0, c1, c2) = self.char_poly(e);
        c0.is_positive() && c1.is_positive() && c2.is_positive()
    }

    /// Whether w is a square in Q(c); returns a square root if so.
    ///
    /// Search device: take high-precision rational approximations of the
    /// three real embeddings, square-root them with a consistent sign
    /// pattern, solve for coordinates, round to rationals, and verify the
    /// candidate exactly.  Only the exact verification is trusted.
    pub fn sqrt(&self, w: &CubicFieldElem) -> Option<CubicFieldElem> {
        // necessary: the norm must be a rational square and all embeddings
        // positive
        let n = self.norm(w);
        if n.is_negative() || exact_sqrt_rat(&n).is_none() {
            return None;
        }
        for digits in [60u32, 120, 240] {
            if let Some(s) = self.sqrt_at_precision(w, digits) {
                return Some(s);
            }
        }
        None
    }

    fn sqrt_at_precision(&self, w: &CubicFieldElem, digits: u32) -> Option<CubicFieldElem> {
        let scale = BigRational::from(BigInt::from(10)).pow(digits as i32);
        let roots = embedding_roots(digits + 20);
        let mut svals = Vec::new();
        for c in &roots {
            let wv = &w[0] + &w[1] * c + &w[2] * c * c;
            if wv.is_negative() {
                return None;
            }
            svals.push(rational_sqrt_approx(&wv, digits + 20)?);
        }
        // sign patterns (global sign is irrelevant, fix s0 >= 0)
        for pat in 0..4u8 {
            let s = [
                svals[0].clone(),
                if pat & 1 == 0 {
                    svals[1].clone()
                } else {
                    -svals[1].clone()
                },
                if pat & 2 == 0 {
                    svals[2].clone()
                } else {
                    -svals[2].clone()
                },
            ];
            // solve the 3x3 Vandermonde [1 c_i c_i^2] x = s_i exactly in
            // the approximations
            if let Some(coords) = solve3(&roots, &s) {
                let cand: CubicFieldElem = [
                    round_to_rational(&coords[0], &scale),
                    round_to_rational(&coords[1], &scale),
                    round_to_rational(&coords[2], &scale),
                ];
                if &self.mul(&cand, &cand) == w {
                    return Some(cand);
                }
            }
        }
        None
    }
}

impl Ring for CubicField {
    type Elem = CubicFieldElem;

    fn zero(&self) -> CubicFieldElem {
        [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ]
    }
    fn one(&self) -> CubicFieldElem {
        [BigRational::one(), BigRational::zero(), BigRational::zero()]
    }
    fn is_zero(&self, a: &CubicFieldElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }
    fn add(&self, a: &CubicFieldElem, b: &CubicFieldElem) -> CubicFieldElem {
        [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
    }
    fn sub(&self, a: &CubicFieldElem, b: &CubicFieldElem) -> CubicFieldElem {
        [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
    }
    fn neg(&self, a: &CubicFieldElem) -> CubicFieldElem {
        [-a[0].clone(), -a[1].clone(), -a[2].clone()]
    }
    fn mul(&self, a: &CubicFieldElem, b: &CubicFieldElem) -> CubicFieldElem {
        let mut prod = vec![BigRational::zero(); 5];
        for i in 0..3 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                prod[i + j] += &a[i] * &b[j];
            }
        }
        self.reduce(&prod)
    }
    fn from_i64(&self, n: i64) -> CubicFieldElem {
        self.from_i64_coords(n, 0, 0)
    }
    fn inv(&self, a: &CubicFieldElem) -> Option<CubicFieldElem> {
        if self.is_zero(a) {
            return None;
        }
        // solve M_a x = (1,0,0)
        let m = self.mul_matrix(a);
        let mut ab = [
            [
                m[0][0].clone(),
                m[0][1].clone(),
                m[0][2].clone(),
                BigRational::one(),
            ],
            [
                m[1][0].clone(),
                m[1][1].clone(),
                m[1][2].clone(),
                BigRational::zero(),
            ],
            [
                m[2][0].clone(),
                m[2][1].clone(),
                m[2][2].clone(),
                BigRational::zero(),
            ],
        ];
        for col in 0..3 {
            let piv = (col..3).find(|&r| !ab[r][col].is_zero())?;
            ab.swap(col, piv);
            let pv = ab[col][col].clone();
            for x in ab[col].iter_mut() {
                *x /= &pv;
            }
            for r in 0..3 {
                if r != col && !ab[r][col].is_zero() {
                    let f = ab[r][col].clone();
                    for k in 0..4 {
                        let s = &ab[col][k] * &f;
                        ab[r][k] -= s;
                    }
                }
            }
        }
        Some([ab[0][3].clone(), ab[1][3].clone(), ab[2][3].clone()])
    }
    fn from_rational(&self, q: &BigRational) -> Option<CubicFieldElem> {
        Some([q.clone(), BigRational::zero(), BigRational::zero()])
    }
    fn tag(&self) -> String {
        "Q(c)".into()
    }
}

/// High-precision rational enclosures of the three real roots of
/// x^3 + x^2 - 2x - 1, by bisection from fixed separating intervals.
fn embedding_roots(digits: u32) -> [BigRational; 3] {
    let f = |x: &BigRational| -> BigRational {
        ((x + BigRational::one()) * x - BigRational::from(BigInt::from(2))) * x
            - BigRational::one()
    };
    let seeds: [(i64, i64); 3] = [(1, 2), (-1, 0), (-2, -1)];
    let eps = BigRational::new(BigInt::one(), BigInt::from(10).pow(digits));
    let mut out: [BigRational; 3] = Default::default();
    for (k, (lo, hi)) in seeds.iter().enumerate() {
        let mut lo = BigRational::from(BigInt::from(*lo));
        let mut hi = BigRational::from(BigInt::from(*hi));
        let flo = f(&lo);
        let mut lo_neg = flo.is_negative();
        while (&hi - &lo) > eps {
            let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
            let fm = f(&mid);
            if fm.is_zero() {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if fm.is_negative() == lo_neg {
                lo = mid;
            } else {
                hi = mid;
            }
            // lo_neg unchanged: sign at lo is stable
            let _ = &mut lo_neg;
        }
        out[k] = (&lo + &hi) / BigRational::from(BigInt::from(2));
    }
    out
}

/// Rational Newton iteration for sqrt(w) to roughly `digits` digits.
fn rational_sqrt_approx(w: &BigRational, digits: u32) -> Option<BigRational> {
    if w.is_negative() {
        return None;
    }
    if w.is_zero() {
        return Some(BigRational::zero());
    }
    // initial guess from integer sqrt of scaled value
    let scale = BigInt::from(10).pow(digits);
    let scaled = (w * BigRational::from(&scale * &scale)).to_integer();
    let mut x = BigRational::new(scaled.sqrt(), scale.clone());
    let two = BigRational::from(BigInt::from(2));
    for _ in 0..8 {
        x = (&x + w / &x) / &two;
        // truncate the representation to keep numbers bounded
        x = truncate_digits(&x, digits + 10);
    }
    Some(x)
}

fn truncate_digits(x: &BigRational, digits: u32) -> BigRational {
    let scale = BigInt::from(10).pow(digits);
    let n = (x * BigRational::from(scale.clone())).to_integer();
    BigRational::new(n, scale)
}

fn round_to_rational(x: &BigRational, _scale: &BigRational) -> BigRational {
    // best rational approximation via continued fractions, denominator
    // capped well below the working precision
    continued_fraction_round(x, &BigInt::from(10).pow(40))
}

fn continued_fraction_round(x: &BigRational, max_den: &BigInt) -> BigRational {
    let mut p0 = BigInt::one();
    let mut q0 = BigInt::zero();
    let mut p1 = x.floor().to_integer();
    let mut q1 = BigInt::one();
    let mut frac = x - BigRational::from(p1.clone());
    while !frac.is_zero() {
        let rec = frac.recip();
        let a = rec.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if &q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = rec - BigRational::from(a);
    }
    BigRational::new(p1, q1)
}

fn solve3(c: &[BigRational; 3], s: &[BigRational; 3]) -> Option<[BigRational; 3]> {
    let mut ab: Vec<Vec<BigRational>> = (0..3)
        .map(|i| {
            vec![
                BigRational::one(),
                c[i].clone(),
                &c[i] * &c[i],
                s[i].clone(),
            ]
        })
        .collect();
    for col in 0..3 {
        let piv = (col..3).find(|&r| !ab[r][col].is_zero())?;
        ab.swap(col, piv);
        let pv = ab[col][col].clone();
        for x in ab[col].iter_mut() {
            *x /= &pv;
        }
        for r in 0..3 {
            if r != col && !ab[r][col].is_zero() {
                let f = ab[r][col].clone();
                for k in 0..4 {
                    let sub = &ab[col][k] * &f;
                    ab[r][k] -= sub;
                }
            }
        }
    }
    Some([ab[0][3].clone(), ab[1][3].clone(), ab[2][3].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn norm_of_rational_scalar() {
        let k = CubicField;
        assert_eq!(k.norm(&k.from_i64(7)), rat_int(343));
    }

    #[test]
    fn printed_generator_norms() {
        let k = CubicField;
        assert_eq!(k.norm(&k.from_i64_coords(-6, 1, 0)), rat_int(-239));
        assert_eq!(k.norm(&k.from_i64_coords(-7, 2, 1)), rat_int(-167));
        assert_eq!(k.norm(&k.from_i64_coords(-3, -2, -3)), rat_int(-251));
        assert_eq!(k.norm(&k.from_i64_coords(-11, -2, 1)), rat_int(-491));
    }

    #[test]
    fn norm_multiplicative_100() {
        let k = CubicField;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = k.from_i64_coords(
                rng.gen_range(-9..9),
                rng.gen_range(-9..9),
                rng.gen_range(-9..9),
            );
            let b = k.from_i64_coords(
                rng.gen_range(-9..9),
                rng.gen_range(-9..9),
                rng.gen_range(-9..9),
            );
            assert_eq!(k.norm(&k.mul(&a, &b)), k.norm(&a) * k.norm(&b));
        }
    }

    #[test]
    fn minimal_polynomial_of_generator() {
        let k = CubicField;
        let c = k.gen();
        // c^3 + c^2 - 2c - 1 = 0
        let c2 = k.mul(&c, &c);
        let c3 = k.mul(&c2, &c);
        let v = k.add(
            &k.sub(&k.add(&c3, &c2), &k.mul(&k.from_i64(2), &c)),
            &k.from_i64(-1),
        );
        assert!(k.is_zero(&v));
    }

    #[test]
    fn inverse() {
        let k = CubicField;
        let a = k.from_i64_coords(2, -3, 1);
        let ai = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &ai), k.one());
    }

    #[test]
    fn totally_negative_generators() {
        let k = CubicField;
        for g in [
            k.from_i64_coords(-7, 2, 1),
            k.from_i64_coords(-6, 1, 0),
            k.from_i64_coords(-3, -2, -3),
            k.from_i64_coords(-11, -2, 1),
        ] {
            assert!(k.totally_negative(&g));
        }
        assert!(!k.totally_negative(&k.one()));
        // c itself has a positive embedding
        assert!(!k.totally_negative(&k.gen()));
    }

    #[test]
    fn sqrt_of_square() {
        let k = CubicField;
        let s = k.from_i64_coords(3, -2, 5);
        let w = k.mul(&s, &s);
        let r = k.sqrt(&w).unwrap();
        assert!(r == s || r == k.neg(&s));
        // non-square: c is not a square (norm 1 but embeddings mixed sign)
        assert!(k.sqrt(&k.gen()).is_none());
    }
}
