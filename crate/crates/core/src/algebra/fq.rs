//! Small finite fields F_q = F_p[w]/(m(w)) with precomputed tables, used for
//! the projective-line action of PSL2.
//!
//! Defining polynomials are pinned so tests are deterministic:
//! F_27 = F_3[w]/(w^3 - w - 1) and F_8 = F_2[w]/(w^3 + w + 1).

/// A small finite field with full multiplication and addition tables.
/// Elements are indices 0..q encoding coefficient vectors base p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fq {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl Fq {
    /// Builds F_(p^m) from a monic defining polynomial given by its lower
    /// coefficients (length m, lowest first): w^m = -(c_0 + c_1 w + ...).
    pub fn new(p: u64, lower: &[i64]) -> Fq {
        let m = lower.len() as u32;
        let q = p.pow(m);
        assert!(q <= 1 << 14, "table-based field kept small");
        let decode = |mut e: u64| -> Vec<u64> {
            let mut v = vec![0u64; m as usize];
            for item in v.iter_mut() {
                *item = e % p;
                e /= p;
            }
            v
        };
        let encode = |v: &[u64]| -> u64 {
            let mut e = 0u64;
            for &c in v.iter().rev() {
                e = e * p + c;
            }
            e
        };
        // reduction of w^m in the basis
        let wm: Vec<u64> = lower.iter().map(|&c| (-c).rem_euclid(p as i64) as u64).collect();

        let mut add = vec![0u16; (q * q) as usize];
        let mut mul = vec![0u16; (q * q) as usize];
        for a in 0..q {
            let va = decode(a);
            for b in 0..q {
                let vb = decode(b);
                let vs: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&vs) as u16;

                // multiply then reduce degree >= m terms via w^m = wm
                let mut prod = vec![0u64; 2 * m as usize];
                for (i, &x) in va.iter().enumerate() {
                    for (j, &y) in vb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for d in (m as usize..2 * m as usize).rev() {
                    let c = prod[d];
                    if c != 0 {
                        prod[d] = 0;
                        for (k, &r) in wm.iter().enumerate() {
                            prod[d - m as usize + k] = (prod[d - m as usize + k] + c * r) % p;
                        }
                    }
                }
                mul[(a * q + b) as usize] = encode(&prod[..m as usize]) as u16;
            }
        }
        let mut inv = vec![0u16; q as usize];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u16;
                    break;
                }
            }
        }
        Fq {
            p,
            m,
            q,
            add,
            mul,
            inv,
        }
    }

    /// F_27 with w^3 = w + 1.
    pub fn f27() -> Fq {
        Fq::new(3, &[-1, -1, 0])
    }

    /// F_8 with w^3 = w + 1.
    pub fn f8() -> Fq {
        Fq::new(2, &[1, 1, 0])
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[(a * self.q + b) as usize] as u64
    }
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[(a * self.q + b) as usize] as u64
    }
    pub fn neg(&self, a: u64) -> u64 {
        // -1 = p-1 as a constant
        self.mul(a, (self.p - 1) % self.q)
    }
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.inv[a as usize] as u64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field(f: &Fq) {
        for a in 0..f.q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..f.q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..f.q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn f27_is_a_field() {
        let f = Fq::f27();
        assert_eq!(f.q, 27);
        check_field(&f);
        // w has multiplicative order 26 (w^3 = w+1 is primitive for F_27)
        let w = 3u64; // encoding of w
        let mut x = w;
        let mut ord = 1;
        while x != 1 {
            x = f.mul(x, w);
            ord += 1;
        }
        assert_eq!(26 % ord, 0);
    }

    #[test]
    fn f8_is_a_field() {
        let f = Fq::f8();
        assert_eq!(f.q, 8);
        check_field(&f);
    }
}
