//! Exact saturated-set catalogs for the classified families, stated
//! directly from the per-family classification and cross-checked against
//! the brute-force enumerator.

use crate::avoid::{decide_avoidable, is_saturated};
use crate::error::{Error, Result};
use crate::group::{Group, GroupSpec, SubsetU};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub set: SubsetU,
    /// Names the clause that produced the set.
    pub rule: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SaturatedCatalog {
    pub spec: GroupSpec,
    pub entries: Vec<CatalogEntry>,
}

impl SaturatedCatalog {
    fn from_map(spec: GroupSpec, map: BTreeMap<SubsetU, String>) -> SaturatedCatalog {
        SaturatedCatalog {
            spec,
            entries: map.into_iter().map(|(set, rule)| CatalogEntry { set, rule }).collect(),
        }
    }

    pub fn sets(&self) -> Vec<SubsetU> {
        self.entries.iter().map(|e| e.set.clone()).collect()
    }
}

/// Saturated sets in Z/nZ.
///
/// n odd: every two-element set. n = 4k+2: {a, a+x, a+2x} with a even,
/// x odd, x != n/2; {a, a+n/2}; and the odd residues. n = 4k: {a, a+x, a+2x}
/// with a even, x odd; {a, a+4x} with 4x != 0; and the odd residues.
pub fn cyclic_saturated(n: u32) -> Result<SaturatedCatalog> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!("cyclic catalog requires n >= 3, got {n}")));
    }
    let mut map: BTreeMap<SubsetU, String> = BTreeMap::new();
    let mut put = |members: Vec<u32>, rule: &str| {
        let set = SubsetU::new(members, n).unwrap();
        map.entry(set).or_insert_with(|| rule.to_string());
    };
    if n % 2 == 1 {
        for a in 0..n {
            for b in a + 1..n {
                put(vec![a, b], "cyclic(a): {a,b}, n odd");
            }
        }
    } else {
        for a in (0..n).step_by(2) {
            for x in (1..n).step_by(2) {
                if n % 4 == 2 && x == n / 2 {
                    continue;
                }
                put(
                    vec![a, (a + x) % n, (a + 2 * x) % n],
                    if n % 4 == 2 {
                        "cyclic(b): {a,a+x,a+2x}, a even, x odd"
                    } else {
                        "cyclic(c): {a,a+x,a+2x}, a even, x odd"
                    },
                );
            }
        }
        if n % 4 == 2 {
            for a in 0..n {
                put(vec![a, (a + n / 2) % n], "cyclic(b): {a,a+n/2}");
            }
        } else {
            for a in (0..n).step_by(2) {
                for d in (4..n).step_by(4) {
                    put(vec![a, (a + d) % n], "cyclic(c): {a,a+4x}, a even");
                }
            }
        }
        put((1..n).step_by(2).collect(), "cyclic(b/c): odd residues");
    }
    Ok(SaturatedCatalog::from_map(GroupSpec::Cyclic(n), map))
}

/// Saturated sets in D_n. Indices: a -> r^a, n + a -> f*r^a.
pub fn dihedral_saturated(n: u32) -> Result<SaturatedCatalog> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!("dihedral catalog requires n >= 3, got {n}")));
    }
    let order = 2 * n;
    let mut map: BTreeMap<SubsetU, String> = BTreeMap::new();
    let mut put = |members: Vec<u32>, rule: &str| {
        let set = SubsetU::new(members, order).unwrap();
        map.entry(set).or_insert_with(|| rule.to_string());
    };
    let reflections: Vec<u32> = (n..2 * n).collect();
    if n % 2 == 1 {
        put(vec![0], "dihedral(a): {e}");
        put(reflections, "dihedral(a): all reflections");
    } else {
        for k in 1..n {
            if (n / gcd(n, k)).is_multiple_of(2) {
                put(vec![0, k], "dihedral(b): {e,r^k}, n/(n,k) even");
            }
        }
        for d1 in (2..n).step_by(2) {
            for d2 in (d1 + 2..n).step_by(2) {
                let ok = (n / gcd(n, d1)).is_multiple_of(2)
                    && (n / gcd(n, d2)).is_multiple_of(2)
                    && d1.trailing_zeros() == d2.trailing_zeros();
                if ok {
                    put(vec![d1, d2], "dihedral(b): {r^2k,r^2l}, equal 2-multiplicity");
                }
            }
        }
        let a: Vec<u32> = (1..n).step_by(2).collect();
        let b: Vec<u32> = (n..2 * n).step_by(2).collect();
        let c: Vec<u32> = (n + 1..2 * n).step_by(2).collect();
        put([a.clone(), b.clone()].concat(), "dihedral(b): A∪B");
        put([a, c.clone()].concat(), "dihedral(b): A∪C");
        put([b, c].concat(), "dihedral(b): B∪C");
    }
    Ok(SaturatedCatalog::from_map(GroupSpec::Dihedral(n), map))
}

/// Saturated sets in SD_m. Indices: a -> x^a, half + a -> y*x^a, with
/// half = 2^(m-1).
///
/// The pair clause requires both exponents nonzero, distinct from
/// 2^(m-2), and of equal 2-adic valuation; equal valuation with an even
/// anchor forces both exponents even. Brute force on SD_4 confirms this
/// reading.
pub fn semidihedral_saturated(m: u32) -> Result<SaturatedCatalog> {
    if m <= 3 {
        return Err(Error::InvalidSpec(format!("semidihedral catalog requires m > 3, got {m}")));
    }
    let half = 1u32 << (m - 1);
    let order = 2 * half;
    let quarter = half / 2; // 2^(m-2)
    let mut map: BTreeMap<SubsetU, String> = BTreeMap::new();
    let mut put = |members: Vec<u32>, rule: &str| {
        let set = SubsetU::new(members, order).unwrap();
        map.entry(set).or_insert_with(|| rule.to_string());
    };
    put(vec![0, quarter], "semidihedral: {e, x^(2^(m-2))}");
    for d1 in (2..half).step_by(2) {
        if d1 == quarter {
            continue;
        }
        for d2 in (d1 + 2..half).step_by(2) {
            if d2 == quarter {
                continue;
            }
            if d1.trailing_zeros() == d2.trailing_zeros() {
                put(vec![d1, d2], "semidihedral: {x^2n,x^r}, equal 2-multiplicity");
            }
        }
    }
    let a: Vec<u32> = (1..half).step_by(2).collect();
    let b: Vec<u32> = (half..order).step_by(2).collect();
    let c: Vec<u32> = (half + 1..order).step_by(2).collect();
    put([a.clone(), b.clone()].concat(), "semidihedral: A∪B");
    put([a, c.clone()].concat(), "semidihedral: A∪C");
    put([b, c].concat(), "semidihedral: B∪C");
    Ok(SaturatedCatalog::from_map(GroupSpec::SemiDihedral(m), map))
}

/// Saturated sets in Q_m. Indices: x -> a^x, half + x -> b*a^x, with
/// half = 4m.
pub fn quaternion_saturated(m: u32) -> Result<SaturatedCatalog> {
    if m < 1 {
        return Err(Error::InvalidSpec("quaternion catalog requires m >= 1".into()));
    }
    let half = 4 * m;
    let order = 8 * m;
    let two_m = 2 * m;
    let mut map: BTreeMap<SubsetU, String> = BTreeMap::new();
    let mut put = |members: Vec<u32>, rule: &str| {
        let set = SubsetU::new(members, order).unwrap();
        map.entry(set).or_insert_with(|| rule.to_string());
    };
    // {a^2m, a^t}: exponent 2-multiplicity differs from that of 2m, or
    // t = 0 (the set {e, a^2m}). The classification writes the exponent
    // as 2r, but odd exponents satisfy the multiplicity condition
    // vacuously and the brute-force enumeration confirms those pairs are
    // saturated as well (e.g. {a^4, a} in the order-16 group).
    put(vec![0, two_m], "quaternion: {a^2m,a^t}, t=0");
    for t in 1..half {
        if t != two_m && t.trailing_zeros() != two_m.trailing_zeros() {
            put(vec![two_m, t], "quaternion: {a^2m,a^t}, different 2-multiplicity");
        }
    }
    // {a^2m, b*a^r} for every r.
    for r in 0..half {
        put(vec![two_m, half + r], "quaternion: {a^2m,b*a^r}");
    }
    // {e, a^2r} with 2r/(2m,2r) even.
    for d in (2..half).step_by(2) {
        if (d / gcd(two_m, d)).is_multiple_of(2) {
            put(vec![0, d], "quaternion: {e,a^2r}, 2r/(2m,2r) even");
        }
    }
    // {a^2r, a^-2r}: inverse pairs of even powers away from 0 and 2m
    // whose exponent 2-multiplicity differs from that of 2m. The
    // classification states this clause as {a^2r, a^2s} with equal
    // 2-multiplicities; when m is a power of two the readings coincide,
    // and the brute-force enumeration at m=3 (where they diverge: {a^4,
    // a^8} is saturated, {a^2, a^10} is not) settles it as 2s = -2r.
    for d in (2..two_m).step_by(2) {
        if d.trailing_zeros() != two_m.trailing_zeros() {
            put(vec![d, half - d], "quaternion: {a^2r,a^-2r}, 2-multiplicity != that of 2m");
        }
    }
    let a: Vec<u32> = (1..half).step_by(2).collect();
    let b: Vec<u32> = (half..order).step_by(2).collect();
    let c: Vec<u32> = (half + 1..order).step_by(2).collect();
    put([a.clone(), b.clone()].concat(), "quaternion: A∪B");
    put([a, c.clone()].concat(), "quaternion: A∪C");
    put([b, c].concat(), "quaternion: B∪C");
    Ok(SaturatedCatalog::from_map(GroupSpec::GeneralizedQuaternion(m), map))
}

/// Saturated sets in the non-abelian group of order pq: all sets of the
/// form {x, x^n}. The classification fixes the form; the exact membership
/// is settled by testing each candidate with the avoidability oracle.
pub fn pq_saturated(p: u32, q: u32, s: u32) -> Result<SaturatedCatalog> {
    let spec = GroupSpec::NonabelianPQ { p, q, s };
    let group = Group::build(spec.clone())?;
    let mut map: BTreeMap<SubsetU, String> = BTreeMap::new();
    for x in group.elements() {
        // Walk the cyclic subgroup generated by x.
        let mut seen = vec![x];
        let mut y = group.op(x, x);
        while y != x {
            seen.push(y);
            y = group.op(y, x);
        }
        for &pow in &seen {
            let set = SubsetU::new(vec![x.0, pow.0], group.order()).unwrap();
            if map.contains_key(&set) {
                continue;
            }
            if is_saturated(&group, &set) {
                let rule = if set.len() == 1 { "pq: {x} (x^n = x)" } else { "pq: {x,x^n}" };
                map.insert(set, rule.to_string());
            }
        }
    }
    Ok(SaturatedCatalog::from_map(spec, map))
}

/// True when every member of `set` is avoidable-pair material: used by the
/// pq acceptance check ("every saturated set has the form {x, x^n}").
pub fn is_power_pair(group: &Group, set: &SubsetU) -> bool {
    if set.len() == 1 {
        return true;
    }
    if set.len() != 2 {
        return false;
    }
    let x = crate::group::Element(set.members()[0]);
    let y = crate::group::Element(set.members()[1]);
    let in_cycle = |base: crate::group::Element, target: crate::group::Element| {
        let mut cur = base;
        loop {
            if cur == target {
                return true;
            }
            cur = group.op(cur, base);
            if cur == base {
                return false;
            }
        }
    };
    in_cycle(x, y) || in_cycle(y, x)
}

/// Sanity discharge for the catalog: every entry is avoidable.
pub fn catalog_entries_avoidable(group: &Group, catalog: &SaturatedCatalog) -> bool {
    catalog.entries.iter().all(|e| decide_avoidable(group, &e.set).is_avoidable())
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avoid::{enumerate_saturated_sets, SearchBudget};

    // The m=1 and m=2 instances are covered by the acceptance suite; m=3
    // (order 24) confirms the exponent-multiplicity reading of the
    // {a^2m, a^t} clause beyond the powers of two.
    #[test]
    fn quaternion_three_matches_oracle() {
        let group = Group::build(GroupSpec::GeneralizedQuaternion(3)).unwrap();
        let mut catalog = quaternion_saturated(3).unwrap().sets();
        catalog.sort();
        let mut oracle = enumerate_saturated_sets(&group, &SearchBudget::default()).unwrap();
        oracle.sort();
        assert_eq!(catalog, oracle);
    }

    #[test]
    fn semidihedral_five_matches_oracle() {
        let group = Group::build(GroupSpec::SemiDihedral(5)).unwrap();
        let mut catalog = semidihedral_saturated(5).unwrap().sets();
        catalog.sort();
        let mut oracle = enumerate_saturated_sets(&group, &SearchBudget::default()).unwrap();
        oracle.sort();
        assert_eq!(catalog, oracle);
    }

    #[test]
    fn every_catalog_entry_is_avoidable() {
        for (spec, catalog) in [
            (GroupSpec::Cyclic(12), cyclic_saturated(12).unwrap()),
            (GroupSpec::Dihedral(6), dihedral_saturated(6).unwrap()),
            (GroupSpec::SemiDihedral(4), semidihedral_saturated(4).unwrap()),
            (GroupSpec::GeneralizedQuaternion(2), quaternion_saturated(2).unwrap()),
            (GroupSpec::NonabelianPQ { p: 7, q: 3, s: 2 }, pq_saturated(7, 3, 2).unwrap()),
        ] {
            let group = Group::build(spec).unwrap();
            assert!(catalog_entries_avoidable(&group, &catalog));
        }
    }
}
