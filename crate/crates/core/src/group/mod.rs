//! Finite groups realized as indexed element sets with a total
//! multiplication law.

mod labels;
mod law;

use crate::error::{Error, Result};
use law::Law;
use serde::Serialize;
use std::fmt;

/// Orders up to this bound get a precomputed multiplication table; larger
/// groups evaluate the family law on each call.
const TABLE_LIMIT: u32 = 1024;

/// Associativity is checked exhaustively up to this order and on sampled
/// triples above it.
const EXHAUSTIVE_ASSOC_LIMIT: u32 = 64;
const SAMPLED_TRIPLES: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum GroupSpec {
    Cyclic(u32),
    DirectSumCyclic(Vec<u32>),
    Dihedral(u32),
    SemiDihedral(u32),
    GeneralizedQuaternion(u32),
    NonabelianPQ { p: u32, q: u32, s: u32 },
    Symmetric(u32),
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GroupSpec::Cyclic(n) => {
                if *n < 1 {
                    return bad("cyclic: n must be >= 1".into());
                }
            }
            GroupSpec::DirectSumCyclic(moduli) => {
                if moduli.is_empty() {
                    return bad("dsum: at least one modulus required".into());
                }
                if moduli.iter().any(|&m| m < 2) {
                    return bad("dsum: each modulus must be >= 2".into());
                }
                if moduli.iter().map(|&m| m as u64).product::<u64>() > 1 << 20 {
                    return bad("dsum: group order too large".into());
                }
            }
            GroupSpec::Dihedral(n) => {
                if *n < 3 {
                    return bad("dihedral: n must be >= 3".into());
                }
            }
            GroupSpec::SemiDihedral(m) => {
                if *m <= 3 {
                    return bad("semidihedral: m must be > 3".into());
                }
                if *m > 16 {
                    return bad("semidihedral: m too large".into());
                }
            }
            GroupSpec::GeneralizedQuaternion(m) => {
                if *m < 1 {
                    return bad("quaternion: m must be >= 1".into());
                }
            }
            GroupSpec::NonabelianPQ { p, q, s } => {
                if !is_odd_prime(*p) || !is_odd_prime(*q) {
                    return bad("pq: p and q must be odd primes".into());
                }
                if p <= q {
                    return bad("pq: p must be greater than q".into());
                }
                if p % q != 1 {
                    return bad("pq: p must be congruent to 1 mod q".into());
                }
                if *s <= 1 || s % p == 1 || s % p == 0 {
                    return bad("pq: s must satisfy 1 < s and s != 1 mod p".into());
                }
                if pow_mod(*s, *q, *p) != 1 {
                    return bad("pq: s^q must be 1 mod p".into());
                }
            }
            GroupSpec::Symmetric(n) => {
                if !(1..=7).contains(n) {
                    return bad("sym: n must be between 1 and 7".into());
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> u32 {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::DirectSumCyclic(m) => m.iter().product(),
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::SemiDihedral(m) => 1 << m,
            GroupSpec::GeneralizedQuaternion(m) => 8 * m,
            GroupSpec::NonabelianPQ { p, q, .. } => p * q,
            GroupSpec::Symmetric(n) => (1..=*n).product(),
        }
    }

    /// Parses the `family:params` form, e.g. `cyclic:12`, `dsum:2,4`,
    /// `dihedral:6`, `semidihedral:4`, `quaternion:2`, `pq:7,3,2`, `sym:4`.
    pub fn parse(input: &str) -> Result<GroupSpec> {
        let err = |reason: &str| Error::BadGroupSpec {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let (family, params) = input.split_once(':').ok_or_else(|| err("expected family:params"))?;
        let nums: Vec<u32> = params
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err("parameters must be positive integers"))?;
        let one = || -> Result<u32> {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(err("expected a single parameter"))
            }
        };
        let spec = match family {
            "cyclic" => GroupSpec::Cyclic(one()?),
            "dsum" => GroupSpec::DirectSumCyclic(nums.clone()),
            "dihedral" => GroupSpec::Dihedral(one()?),
            "semidihedral" => GroupSpec::SemiDihedral(one()?),
            "quaternion" => GroupSpec::GeneralizedQuaternion(one()?),
            "pq" => {
                if nums.len() != 3 {
                    return Err(err("pq expects three parameters p,q,s"));
                }
                GroupSpec::NonabelianPQ { p: nums[0], q: nums[1], s: nums[2] }
            }
            "sym" => GroupSpec::Symmetric(one()?),
            _ => return Err(err("unknown family")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::DirectSumCyclic(m) => {
                let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                write!(f, "dsum:{}", parts.join(","))
            }
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::SemiDihedral(m) => write!(f, "semidihedral:{m}"),
            GroupSpec::GeneralizedQuaternion(m) => write!(f, "quaternion:{m}"),
            GroupSpec::NonabelianPQ { p, q, s } => write!(f, "pq:{p},{q},{s}"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Element(pub u32);

/// A finite subset of group elements in canonical sorted order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SubsetU {
    members: Vec<u32>,
}

impl SubsetU {
    pub fn new(mut members: Vec<u32>, order: u32) -> Result<SubsetU> {
        members.sort_unstable();
        members.dedup();
        if let Some(&i) = members.iter().find(|&&i| i >= order) {
            return Err(Error::IndexOutOfRange { index: i, order });
        }
        Ok(SubsetU { members })
    }

    pub fn empty() -> SubsetU {
        SubsetU { members: Vec::new() }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: u32) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.members.last().copied()
    }

    /// A copy of the set with `index` inserted.
    pub fn with(&self, index: u32) -> SubsetU {
        let mut members = self.members.clone();
        let pos = members.binary_search(&index).unwrap_or_else(|p| p);
        if members.get(pos) != Some(&index) {
            members.insert(pos, index);
        }
        SubsetU { members }
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().map(|&i| Element(i))
    }

    /// Membership mask over element indices.
    pub fn mask(&self, order: u32) -> Vec<bool> {
        let mut m = vec![false; order as usize];
        for &i in &self.members {
            m[i as usize] = true;
        }
        m
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // The multiplication table can hold a megabyte of entries; print
        // the spec instead.
        write!(f, "Group({}, order {})", self.spec, self.order)
    }
}

pub struct Group {
    spec: GroupSpec,
    order: u32,
    law: Law,
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
    even: Vec<bool>,
}

impl Group {
    pub fn build(spec: GroupSpec) -> Result<Group> {
        spec.validate()?;
        let law = match &spec {
            GroupSpec::Cyclic(n) => Law::Cyclic { n: *n },
            GroupSpec::DirectSumCyclic(moduli) => Law::DirectSum {
                weights: law::mixed_radix_weights(moduli),
                moduli: moduli.clone(),
            },
            GroupSpec::Dihedral(n) => Law::Dihedral { n: *n },
            GroupSpec::SemiDihedral(m) => Law::SemiDihedral {
                half: 1 << (m - 1),
                twist: (1 << (m - 2)) - 1,
            },
            GroupSpec::GeneralizedQuaternion(m) => Law::Quaternion { half: 4 * m, two_m: 2 * m },
            GroupSpec::NonabelianPQ { p, q, s } => Law::Pq {
                p: *p,
                q: *q,
                s_pow: (0..*q).map(|e| pow_mod(*s, e, *p)).collect(),
            },
            GroupSpec::Symmetric(n) => Law::Symmetric { perms: law::all_perms(*n) },
        };
        let order = law.order();
        let table = if order <= TABLE_LIMIT {
            let mut t = Vec::with_capacity((order as usize).pow(2));
            for i in 0..order {
                for j in 0..order {
                    t.push(law.op(i, j));
                }
            }
            Some(t)
        } else {
            None
        };
        let mut g = Group { spec, order, law, table, inverse: Vec::new(), even: Vec::new() };
        g.validate_axioms()?;
        g.inverse = (0..order)
            .map(|i| (0..order).find(|&j| g.op_idx(i, j) == 0).unwrap())
            .collect();
        for i in 0..order {
            let j = g.inverse[i as usize];
            if g.op_idx(j, i) != 0 {
                return Err(Error::AxiomViolation(format!("one-sided inverse at index {i}")));
            }
        }
        g.even = vec![false; order as usize];
        for x in 0..order {
            let sq = g.op_idx(x, x);
            g.even[sq as usize] = true;
        }
        Ok(g)
    }

    fn validate_axioms(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            if self.op_idx(0, i) != i || self.op_idx(i, 0) != i {
                return Err(Error::AxiomViolation(format!("index 0 is not an identity at {i}")));
            }
        }
        let check = |a: u32, b: u32, c: u32| -> Result<()> {
            if self.op_idx(self.op_idx(a, b), c) != self.op_idx(a, self.op_idx(b, c)) {
                return Err(Error::AxiomViolation(format!(
                    "associativity fails on ({a}, {b}, {c})"
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // Deterministic LCG sampling.
            let mut state: u64 = 0x9e3779b97f4a7c15;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % n as u64) as u32
            };
            for _ in 0..SAMPLED_TRIPLES {
                check(next(), next(), next())?;
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element)
    }

    #[inline]
    pub fn op_idx(&self, i: u32, j: u32) -> u32 {
        match &self.table {
            Some(t) => t[i as usize * self.order as usize + j as usize],
            None => self.law.op(i, j),
        }
    }

    pub fn op(&self, a: Element, b: Element) -> Element {
        Element(self.op_idx(a.0, b.0))
    }

    pub fn inverse(&self, a: Element) -> Element {
        Element(self.inverse[a.0 as usize])
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.op_idx(i, j) == self.op_idx(j, i)))
    }

    /// The exact set {x : x*x = b}, by full scan.
    pub fn square_roots(&self, b: Element) -> Vec<Element> {
        (0..self.order).filter(|&x| self.op_idx(x, x) == b.0).map(Element).collect()
    }

    /// True iff b has a square root (additively: 2x = b is solvable).
    pub fn is_even_element(&self, b: Element) -> bool {
        self.even[b.0 as usize]
    }

    /// All subgroups of index 2, each paired with its nontrivial coset.
    ///
    /// Index-2 subgroups are kernels of surjections onto the 2-element
    /// group; every such kernel contains the subgroup generated by all
    /// squares, whose quotient is an elementary abelian 2-group. The
    /// subgroups are the preimages of its hyperplanes.
    pub fn index_two_subgroups(&self) -> Vec<(SubsetU, SubsetU)> {
        if !self.order.is_multiple_of(2) {
            return Vec::new();
        }
        let n = self.order as usize;
        let mut in_sq = vec![false; n];
        in_sq[0] = true;
        let mut members: Vec<u32> = vec![0];
        for x in 0..self.order {
            let s = self.op_idx(x, x);
            if !in_sq[s as usize] {
                in_sq[s as usize] = true;
                members.push(s);
            }
        }
        // Close under the group operation.
        let mut frontier = members.clone();
        while let Some(x) = frontier.pop() {
            for i in 0..members.len() {
                let y = members[i];
                for z in [self.op_idx(x, y), self.op_idx(y, x)] {
                    if !in_sq[z as usize] {
                        in_sq[z as usize] = true;
                        members.push(z);
                        frontier.push(z);
                    }
                }
            }
        }
        let quot_size = n / members.len();
        if quot_size < 2 {
            return Vec::new();
        }

        // Label cosets of the squares subgroup.
        let mut coset = vec![u32::MAX; n];
        let mut reps: Vec<u32> = Vec::new();
        for g in 0..self.order {
            if coset[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &m in &members {
                coset[self.op_idx(g, m) as usize] = id;
            }
        }

        // The quotient is an F2 vector space; find a basis.
        let qop = |a: u32, b: u32| coset[self.op_idx(reps[a as usize], reps[b as usize]) as usize];
        let mut basis: Vec<u32> = Vec::new();
        let mut span: Vec<u32> = vec![0];
        for q in 1..reps.len() as u32 {
            if !span.contains(&q) {
                let extra: Vec<u32> = span.iter().map(|&s| qop(s, q)).collect();
                span.extend(extra);
                basis.push(q);
            }
        }
        let dim = basis.len();

        // Coordinates of each coset relative to the basis.
        let mut coords = vec![0u32; reps.len()];
        for bits in 0u32..(1 << dim) {
            let mut acc = 0u32;
            for (k, &b) in basis.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    acc = qop(acc, b);
                }
            }
            coords[acc as usize] = bits;
        }

        let mut out = Vec::new();
        for alpha in 1u32..(1 << dim) {
            let mut sub = Vec::new();
            let mut cos = Vec::new();
            for g in 0..self.order {
                let c = coords[coset[g as usize] as usize];
                if (alpha & c).count_ones().is_multiple_of(2) {
                    sub.push(g);
                } else {
                    cos.push(g);
                }
            }
            out.push((
                SubsetU::new(sub, self.order).unwrap(),
                SubsetU::new(cos, self.order).unwrap(),
            ));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn parse_element(&self, label: &str) -> Result<Element> {
        labels::parse(self, label)
    }

    pub fn format_element(&self, e: Element) -> String {
        labels::format(self, e)
    }

    /// Formats a subset as comma-separated canonical labels.
    pub fn format_subset(&self, u: &SubsetU) -> String {
        let parts: Vec<String> = u.iter().map(|e| self.format_element(e)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub(crate) fn law(&self) -> &Law {
        &self.law
    }
}

pub(crate) fn pow_mod(base: u32, exp: u32, modulus: u32) -> u32 {
    let mut result: u64 = 1;
    let mut b = base as u64 % modulus as u64;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % modulus as u64;
        }
        b = b * b % modulus as u64;
        e >>= 1;
    }
    result as u32
}

fn is_odd_prime(n: u32) -> bool {
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests;
