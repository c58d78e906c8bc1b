//! Closed-form classifications of saturated sets, checked against the
//! brute-force oracle by the drivers in [`reports`].

pub mod abelian;
pub mod catalog;
pub mod integers;
pub mod reports;

pub use abelian::{
    abelian_max_avoidable, abelian_shape, abelian_specs_up_to, abelian_witness_set,
    parity_form_sets, AbelianShape, AbelianWitness,
};
pub use catalog::{
    catalog_entries_avoidable, cyclic_saturated, dihedral_saturated, is_power_pair, pq_saturated,
    quaternion_saturated, semidihedral_saturated, CatalogEntry, SaturatedCatalog,
};
pub use integers::{
    integers_is_avoidable, integers_is_saturated, integers_partition_window,
    odd_coset_window_coloring, window_decide, IntSet, WindowColoring, WindowOutcome,
};
pub use reports::{
    conjecture_no_even_check, index2_coset_rule_check, verify_family, ComparisonReport,
    ConjectureReport, ConjectureStatus, CosetRuleReport, Family, InstanceComparison, Verdict,
};
