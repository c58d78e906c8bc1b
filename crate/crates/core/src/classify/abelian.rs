//! Finitely generated abelian groups: the four-case maximal-size formula
//! for avoidable sets containing an even element, the explicit witness
//! construction, and the parity-form (no-even) saturated sets.

use crate::avoid::{decide_avoidable, verify_avoiding_partition, AvoidabilityOutcome, TwoColoring};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::group::{Group, GroupSpec, SubsetU};
use serde::Serialize;

/// Shape of a finitely generated abelian group: counts of odd cyclic
/// summands (m1), Z/2 summands (m2), summands of order divisible by 4 (m3),
/// and free rank (r).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianShape {
    pub m1: u32,
    pub m2: u32,
    pub m3: u32,
    pub r: u32,
}

/// Derives the shape by splitting each modulus into its odd part and
/// 2-power part: Z/n = Z/odd + Z/2^v.
pub fn abelian_shape(moduli: &[u32], rank: u32) -> Result<AbelianShape> {
    let mut shape = AbelianShape { m1: 0, m2: 0, m3: 0, r: rank };
    for &m in moduli {
        if m < 2 {
            return Err(Error::InvalidSpec("abelian shape: moduli must be >= 2".into()));
        }
        let v = m.trailing_zeros();
        let odd = m >> v;
        if odd > 1 {
            shape.m1 += 1;
        }
        match v {
            0 => {}
            1 => shape.m2 += 1,
            _ => shape.m3 += 1,
        }
    }
    Ok(shape)
}

/// Maximal size of an avoidable set containing an even element.
pub fn abelian_max_avoidable(shape: &AbelianShape) -> Result<u64> {
    let AbelianShape { m1, m2, m3, r } = *shape;
    if m1 == 0 && m2 == 0 && m3 == 0 && r == 0 {
        return Err(Error::InvalidSpec("trivial group has no saturated theory".into()));
    }
    Ok(if m1 == 0 && m3 == 0 && r == 0 {
        1 + (1u64 << (m2 - 1))
    } else if m2 == 0 && m3 == 0 && r == 0 {
        2
    } else if m3 == 0 && r == 0 {
        2 + (1u64 << (m2 - 1))
    } else {
        2 + (1u64 << m2)
    })
}

#[derive(Debug)]
pub struct AbelianWitness {
    pub group: Group,
    pub set: SubsetU,
    pub coloring: TwoColoring,
}

/// An avoidable set of exactly the size the formula predicts, with a
/// verified avoiding partition.
///
/// Case (a) uses the explicit coset construction in (Z/2)^m2. The other
/// finite cases start from the base set {0, c, 2c} with c the all-ones
/// element of the non-Z/2 part and double once per Z/2 summand: a partition
/// {C, D} avoiding {0, b} ∪ T lifts to {C x Z/2, D x Z/2} avoiding
/// {(0,0), (b,0)} ∪ T x Z/2.
pub fn abelian_witness_set(moduli: &[u32]) -> Result<AbelianWitness> {
    let shape = abelian_shape(moduli, 0)?;
    let target = abelian_max_avoidable(&shape)? as usize;

    if shape.m1 == 0 && shape.m3 == 0 {
        // Case (a): G = (Z/2)^m2; {0} plus the coset with first coordinate 1.
        let group = Group::build(GroupSpec::DirectSumCyclic(moduli.to_vec()))?;
        let half = group.order() / 2;
        let mut members: Vec<u32> = vec![0];
        members.extend(half..group.order());
        let set = SubsetU::new(members, group.order())?;
        let colors =
            (0..group.order()).map(|i| if i >= half { Color::A } else { Color::B }).collect();
        let coloring = TwoColoring::new(colors);
        if !verify_avoiding_partition(&group, &set, &coloring) || set.len() != target {
            return Err(Error::Unsupported("case (a) construction failed verification".into()));
        }
        return Ok(AbelianWitness { group, set, coloring });
    }

    if shape.m2 == 0 && shape.m3 == 0 {
        // Case (b): odd order, every pair works; witness found by search.
        let group = Group::build(GroupSpec::DirectSumCyclic(moduli.to_vec()))?;
        let set = SubsetU::new(vec![0, 1], group.order())?;
        return finish_by_search(group, set, target);
    }

    // Cases (c) and (d): base group is everything except the Z/2 summands,
    // plus exactly one Z/2 summand in case (c).
    let mut base: Vec<u32> = moduli.iter().copied().filter(|&m| m != 2).collect();
    let case_c = shape.m3 == 0; // then also m1 != 0 and m2 != 0 here
    let mut doublings = shape.m2;
    if case_c {
        base.push(2);
        doublings -= 1;
    }
    let base_group = Group::build(GroupSpec::DirectSumCyclic(base.clone()))?;
    // All-ones element: index sum of place values.
    let c_idx = {
        let mut idx = 0u32;
        for &m in &base {
            idx = idx * m + 1;
        }
        idx
    };
    let c = crate::group::Element(c_idx);
    let b = base_group.op(c, c);
    let set = SubsetU::new(vec![0, b.0, c.0], base_group.order())?;
    let coloring = match decide_avoidable(&base_group, &set) {
        AvoidabilityOutcome::Avoidable(w) => w,
        AvoidabilityOutcome::Unavoidable(_) => {
            return Err(Error::Unsupported("base set {0, c, 2c} is not avoidable here".into()))
        }
    };

    let mut spec_moduli = base;
    let mut group = base_group;
    let mut set = set;
    let mut coloring = coloring;
    let mut b_idx = b.0;
    for _ in 0..doublings {
        spec_moduli.push(2);
        let bigger = Group::build(GroupSpec::DirectSumCyclic(spec_moduli.clone()))?;
        // Appending a Z/2 summand doubles indices: (g, s) -> 2g + s.
        let mut members: Vec<u32> = Vec::new();
        for &t in set.members() {
            if t == 0 || t == b_idx {
                members.push(2 * t);
            } else {
                members.push(2 * t);
                members.push(2 * t + 1);
            }
        }
        b_idx *= 2;
        let colors = (0..bigger.order())
            .map(|i| coloring.colors()[(i / 2) as usize])
            .collect();
        set = SubsetU::new(members, bigger.order())?;
        coloring = TwoColoring::new(colors);
        group = bigger;
    }
    if set.len() != target || !verify_avoiding_partition(&group, &set, &coloring) {
        return Err(Error::Unsupported("doubling construction failed verification".into()));
    }
    Ok(AbelianWitness { group, set, coloring })
}

fn finish_by_search(group: Group, set: SubsetU, target: usize) -> Result<AbelianWitness> {
    let coloring = match decide_avoidable(&group, &set) {
        AvoidabilityOutcome::Avoidable(w) => w,
        AvoidabilityOutcome::Unavoidable(_) => {
            return Err(Error::Unsupported("witness set unexpectedly unavoidable".into()))
        }
    };
    if set.len() != target || !verify_avoiding_partition(&group, &set, &coloring) {
        return Err(Error::Unsupported("witness failed verification".into()));
    }
    Ok(AbelianWitness { group, set, coloring })
}

/// The parity-form saturated sets: for each nonzero 0/1 vector over the
/// even-order summands, the solution set of sum(a_i x_i) = 1 mod 2, paired
/// with the avoiding partition (the set and its complement).
pub fn parity_form_sets(moduli: &[u32]) -> Result<Vec<(SubsetU, TwoColoring, String)>> {
    let even_positions: Vec<usize> =
        moduli.iter().enumerate().filter(|(_, &m)| m % 2 == 0).map(|(k, _)| k).collect();
    if even_positions.is_empty() {
        return Err(Error::Unsupported(
            "parity-form sets require at least one even-order summand".into(),
        ));
    }
    let group = Group::build(GroupSpec::DirectSumCyclic(moduli.to_vec()))?;
    let weights = {
        let mut w = vec![1u32; moduli.len()];
        for k in (0..moduli.len().saturating_sub(1)).rev() {
            w[k] = w[k + 1] * moduli[k + 1];
        }
        w
    };
    let mut out = Vec::new();
    for bits in 1u32..(1 << even_positions.len()) {
        let mut members = Vec::new();
        for g in 0..group.order() {
            let mut acc = 0u32;
            for (t, &pos) in even_positions.iter().enumerate() {
                if bits >> t & 1 == 1 {
                    acc += (g / weights[pos]) % moduli[pos];
                }
            }
            if acc % 2 == 1 {
                members.push(g);
            }
        }
        let set = SubsetU::new(members, group.order())?;
        let colors =
            (0..group.order()).map(|i| if set.contains(i) { Color::A } else { Color::B }).collect();
        let vector: Vec<String> = even_positions
            .iter()
            .enumerate()
            .map(|(t, &pos)| format!("a_{pos}={}", bits >> t & 1))
            .collect();
        out.push((set, TwoColoring::new(colors), format!("parity form [{}]", vector.join(","))));
    }
    Ok(out)
}

/// All primary-decomposition module lists (prime-power moduli, sorted) for
/// abelian groups of order 2..=max_order; one entry per isomorphism class.
pub fn abelian_specs_up_to(max_order: u32) -> Vec<Vec<u32>> {
    let mut prime_powers = Vec::new();
    for p in [2u32, 3, 5, 7, 11, 13] {
        let mut pk = p;
        while pk <= max_order {
            prime_powers.push(pk);
            pk = pk.saturating_mul(p);
        }
    }
    prime_powers.sort_unstable();
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 1u64, 0usize)];
    while let Some((mods, product, from)) = stack.pop() {
        if !mods.is_empty() {
            out.push(mods.clone());
        }
        for (i, &pp) in prime_powers.iter().enumerate().skip(from) {
            let next = product * pp as u64;
            if next <= max_order as u64 {
                let mut m = mods.clone();
                m.push(pp);
                stack.push((m, next, i));
            }
        }
    }
    out.sort();
    out
}
