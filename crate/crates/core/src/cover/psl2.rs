//! Monodromy triples from the action of PSL2(F_q) on the projective line:
//! q + 1 points, permutations from unimodular matrices, and a search for
//! generator triples with prescribed cycle types and product one.

use crate::algebra::fq::Fq;
use crate::{Error, Result};
use std::collections::HashSet;

/// Permutations sigma_0, sigma_1, sigma_inf attached to the branch points
/// t = 0, 1, infinity, with sigma_0 sigma_1 sigma_inf = id and a transitive
/// joint action.
#[derive(Clone, PartialEq, Debug)]
pub struct PermTriple {
    pub degree: usize,
    pub sigma0: Vec<usize>,
    pub sigma1: Vec<usize>,
    pub sigma_inf: Vec<usize>,
    /// Order of the permutation group generated by the triple.
    pub group_order: u64,
}

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // apply b first, then a
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn is_identity(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &j)| i == j)
}

/// Cycle type as a sorted (descending) list of cycle lengths.
pub fn cycle_type(a: &[usize]) -> Vec<u64> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = a[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

pub fn perm_order(a: &[usize]) -> u64 {
    cycle_type(a)
        .into_iter()
        .fold(1u64, |acc, l| num_integer::lcm(acc, l))
}

fn transitive(gens: &[&Vec<usize>], n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for g in gens {
            let j = g[i];
            if !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

/// Order of the group generated by the permutations, by closure.
pub fn generated_group_order(gens: &[&Vec<usize>]) -> u64 {
    let mut set: HashSet<Vec<usize>> = HashSet::new();
    let id: Vec<usize> = (0..gens[0].len()).collect();
    set.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh = compose(h, &g);
            if set.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    set.len() as u64
}

/// All elements of PSL2(F_q) as permutations of P^1(F_q).
///
/// The projective line is indexed 0 = infinity, then the affine points in
/// field-element order.  For odd q this enumerates SL2 (determinant one);
/// +/-M give the same permutation and the set deduplicates them.
fn psl2_permutations(f: &Fq) -> Vec<Vec<usize>> {
    let q = f.q;
    let n = (q + 1) as usize;
    let mut set: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let det = f.sub(f.mul(a, d), f.mul(b, c));
                    if det != 1 {
                        continue;
                    }
                    // z -> (a z + b) / (c z + d) on P^1
                    let mut perm = vec![0usize; n];
                    // infinity (index 0) -> a/c
                    perm[0] = if c == 0 {
                        0
                    } else {
                        1 + f.mul(a, f.inv(c).unwrap()) as usize
                    };
                    for z in 0..q {
                        let num = f.add(f.mul(a, z), b);
                        let den = f.add(f.mul(c, z), d);
                        perm[1 + z as usize] = if den == 0 {
                            0
                        } else {
                            1 + f.mul(num, f.inv(den).unwrap()) as usize
                        };
                    }
                    if set.insert(perm.clone()) {
                        out.push(perm);
                    }
                }
            }
        }
    }
    out
}

/// Expected |PSL2(F_q)| = q(q^2 - 1)/gcd(2, q - 1).
pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / num_integer::gcd(2, q - 1)
}

/// Searches PSL2(F_q) acting on P^1(F_q) for a triple with the branch cycle
/// types of the covers treated here:
///   q = 27: types (2^14, 3^9 1, 7^4) at (0, 1, infinity);
///   q = 8:  types (3^3, 2^4 1, 9).
/// The first match in a deterministic enumeration is returned, after
/// verifying product-one, transitivity, and the group order.
pub fn build_triple_psl2(q: u64) -> Result<PermTriple> {
    let (field, types): (Fq, [Vec<u64>; 3]) = match q {
        27 => (
            Fq::f27(),
            [
                vec![2u64; 14],
                {
                    let mut v = vec![3u64; 9];
                    v.push(1);
                    v
                },
                vec![7u64; 4],
            ],
        ),
        8 => (
            Fq::f8(),
            [
                vec![3u64; 3],
                {
                    let mut v = vec![2u64; 4];
                    v.push(1);
                    v
                },
                vec![9u64],
            ],
        ),
        _ => return Err(Error::Invalid(format!("unsupported field size {}", q))),
    };
    let mut want: [Vec<u64>; 3] = types;
    for w in want.iter_mut() {
        w.sort_unstable_by(|x, y| y.cmp(x));
    }

    let elems = psl2_permutations(&field);
    let n = (field.q + 1) as usize;
    let firsts: Vec<&Vec<usize>> = elems
        .iter()
        .filter(|g| cycle_type(g) == want[0])
        .collect();
    let seconds: Vec<&Vec<usize>> = elems
        .iter()
        .filter(|g| cycle_type(g) == want[1])
        .collect();
    for s0 in &firsts {
        for s1 in &seconds {
            let prod = compose(s1, s0); // s1 after s0
            let sinf = inverse(&prod);
            if cycle_type(&sinf) != want[2] {
                continue;
            }
            if !transitive(&[s0, s1], n) {
                continue;
            }
            let order = generated_group_order(&[s0, s1]);
            if order != psl2_order(q) {
                continue;
            }
            // product check: sigma_inf (s1 (s0)) = id
            let full = compose(&sinf, &compose(s1, s0));
            debug_assert!(is_identity(&full));
            return Ok(PermTriple {
                degree: n,
                sigma0: (*s0).clone(),
                sigma1: (*s1).clone(),
                sigma_inf: sinf,
                group_order: order,
            });
        }
    }
    Err(Error::NoTriple { q })
}
