//! Per-family multiplication laws on element indices.
//!
//! Index layout:
//! - cyclic n: residue `a`
//! - direct sum of moduli (m1, .., mk): mixed radix, first coordinate most
//!   significant
//! - dihedral n: `a` for r^a, `n + a` for f*r^a
//! - semidihedral m: half = 2^(m-1); `a` for x^a, `half + a` for y*x^a
//! - quaternion m: half = 4m; `a` for a^x, `half + x` for b*a^x
//! - pq (p, q, s): `x * p + y` for a^x b^y
//! - symmetric n: lexicographic rank of the one-line permutation

#[derive(Debug, Clone)]
pub enum Law {
    Cyclic {
        n: u32,
    },
    DirectSum {
        moduli: Vec<u32>,
        /// Mixed-radix place values, same length as `moduli`.
        weights: Vec<u32>,
    },
    Dihedral {
        n: u32,
    },
    SemiDihedral {
        /// 2^(m-1)
        half: u32,
        /// -1 + 2^(m-2), the twist applied when moving x past y.
        twist: u32,
    },
    Quaternion {
        /// 4m
        half: u32,
        /// 2m, the value of b^2 as a power of a.
        two_m: u32,
    },
    Pq {
        p: u32,
        q: u32,
        /// s^0, s^1, .., s^(q-1) mod p.
        s_pow: Vec<u32>,
    },
    Symmetric {
        /// All permutations of 0..n in lexicographic order.
        perms: Vec<Vec<u8>>,
    },
}

impl Law {
    pub fn op(&self, i: u32, j: u32) -> u32 {
        match self {
            Law::Cyclic { n } => (i + j) % n,
            Law::DirectSum { moduli, weights } => {
                let mut out = 0;
                for (k, (&m, &w)) in moduli.iter().zip(weights).enumerate() {
                    let a = coord(i, k, moduli, weights);
                    let b = coord(j, k, moduli, weights);
                    out += ((a + b) % m) * w;
                }
                out
            }
            Law::Dihedral { n } => {
                let n = *n;
                match (split(i, n), split(j, n)) {
                    ((false, a), (false, b)) => (a + b) % n,
                    ((false, a), (true, b)) => n + (b + n - a) % n,
                    ((true, a), (false, b)) => n + (a + b) % n,
                    ((true, a), (true, b)) => (b + n - a) % n,
                }
            }
            Law::SemiDihedral { half, twist } => {
                let n = *half;
                let k = *twist as u64;
                let tw = |a: u32| ((k * a as u64) % n as u64) as u32;
                match (split(i, n), split(j, n)) {
                    ((false, a), (false, b)) => (a + b) % n,
                    ((false, a), (true, b)) => n + (tw(a) + b) % n,
                    ((true, a), (false, b)) => n + (a + b) % n,
                    ((true, a), (true, b)) => (tw(a) + b) % n,
                }
            }
            Law::Quaternion { half, two_m } => {
                let n = *half;
                match (split(i, n), split(j, n)) {
                    ((false, x), (false, y)) => (x + y) % n,
                    ((false, x), (true, y)) => n + (x + y) % n,
                    ((true, x), (false, y)) => n + (x + n - y) % n,
                    ((true, x), (true, y)) => (two_m + x + n - y) % n,
                }
            }
            Law::Pq { p, q, s_pow } => {
                let (k, l) = (i / p, i % p);
                let (m, n) = (j / p, j % p);
                let x = (k + m) % q;
                let y = ((l as u64 * s_pow[m as usize] as u64 + n as u64) % *p as u64) as u32;
                x * p + y
            }
            Law::Symmetric { perms, .. } => {
                let p = &perms[i as usize];
                let q = &perms[j as usize];
                let composed: Vec<u8> = (0..p.len()).map(|t| p[q[t] as usize]).collect();
                perm_rank(&composed)
            }
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            Law::Cyclic { n } => *n,
            Law::DirectSum { moduli, .. } => moduli.iter().product(),
            Law::Dihedral { n } => 2 * n,
            Law::SemiDihedral { half, .. } => 2 * half,
            Law::Quaternion { half, .. } => 2 * half,
            Law::Pq { p, q, .. } => p * q,
            Law::Symmetric { perms, .. } => perms.len() as u32,
        }
    }
}

fn split(i: u32, n: u32) -> (bool, u32) {
    if i < n {
        (false, i)
    } else {
        (true, i - n)
    }
}

pub fn coord(index: u32, k: usize, moduli: &[u32], weights: &[u32]) -> u32 {
    (index / weights[k]) % moduli[k]
}

pub fn mixed_radix_weights(moduli: &[u32]) -> Vec<u32> {
    let mut weights = vec![1u32; moduli.len()];
    for k in (0..moduli.len().saturating_sub(1)).rev() {
        weights[k] = weights[k + 1] * moduli[k + 1];
    }
    weights
}

pub fn all_perms(n: u32) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    while next_perm(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_perm(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographic rank of a permutation of 0..n (Lehmer code).
pub fn perm_rank(p: &[u8]) -> u32 {
    let n = p.len();
    let mut rank: u32 = 0;
    let mut fact: u32 = (1..n as u32).product::<u32>().max(1);
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count() as u32;
        rank += smaller * fact;
        if n - i > 1 {
            fact /= (n - i - 1) as u32;
        }
    }
    rank
}
