//! Comparison drivers: catalogs against the brute-force enumerator, the
//! max-size formula against branch-and-bound search, the no-even
//! conjecture probe, and the index-2 coset rule.

use super::abelian::{abelian_max_avoidable, abelian_shape, parity_form_sets};
use super::catalog::{
    cyclic_saturated, dihedral_saturated, pq_saturated, quaternion_saturated,
    semidihedral_saturated, SaturatedCatalog,
};
use crate::avoid::{
    decide_avoidable, enumerate_saturated_sets, is_saturated, max_avoidable_containing_even,
    verify_avoiding_partition, SearchBudget, TwoColoring,
};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::group::{Group, GroupSpec, SubsetU};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Debug, Serialize)]
pub enum Verdict {
    Equal,
    Diff { only_catalog: Vec<SubsetU>, only_oracle: Vec<SubsetU> },
    /// For numeric comparisons (abelian max-size).
    Value { catalog: u64, oracle: u64 },
    Budget(String),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        match self {
            Verdict::Equal => true,
            Verdict::Value { catalog, oracle } => catalog == oracle,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceComparison {
    pub spec: String,
    pub verdict: Verdict,
    /// Diff sets rendered with canonical element labels.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub family: String,
    pub instances: Vec<InstanceComparison>,
}

impl ComparisonReport {
    pub fn all_equal(&self) -> bool {
        self.instances.iter().all(|i| i.verdict.is_equal())
    }

    /// One record per instance: spec string, verdict, diff lists.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family {}", self.family);
        for inst in &self.instances {
            match &inst.verdict {
                Verdict::Equal => {
                    let _ = writeln!(out, "{} EQUAL", inst.spec);
                }
                Verdict::Value { catalog, oracle } => {
                    let tag = if catalog == oracle { "EQUAL" } else { "DIFF" };
                    let _ = writeln!(out, "{} {tag} formula={catalog} search={oracle}", inst.spec);
                }
                Verdict::Diff { only_catalog, only_oracle } => {
                    let _ = writeln!(
                        out,
                        "{} DIFF catalog-only={} oracle-only={}",
                        inst.spec,
                        only_catalog.len(),
                        only_oracle.len()
                    );
                    for n in &inst.notes {
                        let _ = writeln!(out, "  {n}");
                    }
                }
                Verdict::Budget(msg) => {
                    let _ = writeln!(out, "{} BUDGET {msg}", inst.spec);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub enum Family {
    Cyclic { lo: u32, hi: u32 },
    Dihedral { lo: u32, hi: u32 },
    SemiDihedral { params: Vec<u32> },
    Quaternion { params: Vec<u32> },
    Pq { params: Vec<(u32, u32, u32)> },
    AbelianMax { max_order: u32 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic { .. } => "cyclic",
            Family::Dihedral { .. } => "dihedral",
            Family::SemiDihedral { .. } => "semidihedral",
            Family::Quaternion { .. } => "quaternion",
            Family::Pq { .. } => "pq",
            Family::AbelianMax { .. } => "abelian-max",
        }
    }
}

/// Runs catalog-versus-oracle (or formula-versus-search) over a family
/// range. Per-instance budget failures are reported, not fatal.
pub fn verify_family(family: &Family, budget: &SearchBudget) -> Result<ComparisonReport> {
    let mut instances = Vec::new();
    match family {
        Family::Cyclic { lo, hi } => {
            for n in *lo..=*hi {
                let catalog = cyclic_saturated(n)?;
                instances.push(compare_instance(GroupSpec::Cyclic(n), &catalog, budget)?);
            }
        }
        Family::Dihedral { lo, hi } => {
            for n in *lo..=*hi {
                let catalog = dihedral_saturated(n)?;
                instances.push(compare_instance(GroupSpec::Dihedral(n), &catalog, budget)?);
            }
        }
        Family::SemiDihedral { params } => {
            for &m in params {
                let catalog = semidihedral_saturated(m)?;
                instances.push(compare_instance(GroupSpec::SemiDihedral(m), &catalog, budget)?);
            }
        }
        Family::Quaternion { params } => {
            for &m in params {
                let catalog = quaternion_saturated(m)?;
                instances.push(compare_instance(
                    GroupSpec::GeneralizedQuaternion(m),
                    &catalog,
                    budget,
                )?);
            }
        }
        Family::Pq { params } => {
            for &(p, q, s) in params {
                let catalog = pq_saturated(p, q, s)?;
                instances.push(compare_instance(
                    GroupSpec::NonabelianPQ { p, q, s },
                    &catalog,
                    budget,
                )?);
            }
        }
        Family::AbelianMax { max_order } => {
            for moduli in super::abelian::abelian_specs_up_to(*max_order) {
                let spec = GroupSpec::DirectSumCyclic(moduli.clone());
                let group = Group::build(spec.clone())?;
                let shape = abelian_shape(&moduli, 0)?;
                let formula = abelian_max_avoidable(&shape)?;
                let verdict = match max_avoidable_containing_even(&group, budget) {
                    Ok(found) => Verdict::Value { catalog: formula, oracle: found as u64 },
                    Err(Error::BudgetExceeded(msg)) => Verdict::Budget(msg),
                    Err(e) => return Err(e),
                };
                instances.push(InstanceComparison {
                    spec: spec.to_string(),
                    verdict,
                    notes: Vec::new(),
                });
            }
        }
    }
    Ok(ComparisonReport { family: family.name().to_string(), instances })
}

fn compare_instance(
    spec: GroupSpec,
    catalog: &SaturatedCatalog,
    budget: &SearchBudget,
) -> Result<InstanceComparison> {
    let group = Group::build(spec.clone())?;
    let oracle = match enumerate_saturated_sets(&group, budget) {
        Ok(sets) => sets,
        Err(Error::BudgetExceeded(msg)) => {
            return Ok(InstanceComparison {
                spec: spec.to_string(),
                verdict: Verdict::Budget(msg),
                notes: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let catalog_sets = catalog.sets();
    let only_catalog: Vec<SubsetU> =
        catalog_sets.iter().filter(|s| !oracle.contains(s)).cloned().collect();
    let only_oracle: Vec<SubsetU> =
        oracle.iter().filter(|s| !catalog_sets.contains(s)).cloned().collect();
    let mut notes = Vec::new();
    for s in &only_catalog {
        let avoidable = decide_avoidable(&group, s).is_avoidable();
        notes.push(format!(
            "catalog-only {} avoidable={avoidable} saturated={}",
            group.format_subset(s),
            is_saturated(&group, s)
        ));
    }
    for s in &only_oracle {
        notes.push(format!("oracle-only {}", group.format_subset(s)));
    }
    let verdict = if only_catalog.is_empty() && only_oracle.is_empty() {
        Verdict::Equal
    } else {
        Verdict::Diff { only_catalog, only_oracle }
    };
    Ok(InstanceComparison { spec: spec.to_string(), verdict, notes })
}

#[derive(Clone, Debug, Serialize)]
pub enum ConjectureStatus {
    Pass,
    Counterexample(Vec<SubsetU>),
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub spec: String,
    pub saturated_checked: usize,
    pub no_even_sets: usize,
    pub status: ConjectureStatus,
}

/// Probes the conjecture that the parity-form sets are the only saturated
/// sets containing no even element. Outcome is recorded, never asserted.
pub fn conjecture_no_even_check(moduli: &[u32], budget: &SearchBudget) -> Result<ConjectureReport> {
    let spec = GroupSpec::DirectSumCyclic(moduli.to_vec());
    let group = Group::build(spec.clone())?;
    let saturated = enumerate_saturated_sets(&group, budget)?;
    let predicted: Vec<SubsetU> =
        parity_form_sets(moduli)?.into_iter().map(|(s, _, _)| s).collect();
    let mut bad = Vec::new();
    let mut no_even = 0;
    for s in &saturated {
        if s.iter().any(|e| group.is_even_element(e)) {
            continue;
        }
        no_even += 1;
        if !predicted.contains(s) {
            bad.push(s.clone());
        }
    }
    Ok(ConjectureReport {
        spec: spec.to_string(),
        saturated_checked: saturated.len(),
        no_even_sets: no_even,
        status: if bad.is_empty() { ConjectureStatus::Pass } else { ConjectureStatus::Counterexample(bad) },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetRuleReport {
    pub subgroup: SubsetU,
    pub coset: SubsetU,
    pub avoidable: bool,
    /// Saturated is predicted exactly when some subgroup element has order
    /// greater than 2.
    pub expected_saturated: bool,
    pub saturated: bool,
}

impl CosetRuleReport {
    pub fn consistent(&self) -> bool {
        self.avoidable && self.saturated == self.expected_saturated
    }
}

/// For each index-2 subgroup H: the coset G \ H is avoidable with partition
/// {H, G \ H}, and saturated unless every element of H squares to the
/// identity.
pub fn index2_coset_rule_check(group: &Group) -> Vec<CosetRuleReport> {
    let mut out = Vec::new();
    for (subgroup, coset) in group.index_two_subgroups() {
        let colors = (0..group.order())
            .map(|i| if coset.contains(i) { Color::B } else { Color::A })
            .collect();
        let avoidable = verify_avoiding_partition(group, &coset, &TwoColoring::new(colors));
        let all_involutions =
            subgroup.iter().all(|h| group.op(h, h) == group.identity());
        out.push(CosetRuleReport {
            expected_saturated: !all_involutions,
            saturated: is_saturated(group, &coset),
            subgroup,
            coset,
            avoidable,
        });
    }
    out
}
