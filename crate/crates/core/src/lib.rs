//! Avoidable and saturated sets in finite groups, the integers, and the
//! naturals.
//!
//! A subset U of a magma (S, ·) is avoidable when S splits into two parts
//! such that no element of U is the product of two distinct elements from
//! the same part; equivalently, the associated graph (an edge between
//! distinct x, y whenever xy or yx lies in U) is 2-colorable. This crate
//! builds the groups, decides avoidability with checkable certificates,
//! enumerates saturated (maximal avoidable) sets by exhaustive search, and
//! cross-validates the search against exact per-family catalogs.

pub mod avoid;
pub mod classify;
pub mod coloring;
pub mod density;
pub mod error;
pub mod group;

pub use avoid::{
    build_associated_graph, decide_avoidable, enumerate_saturated_sets, is_saturated,
    max_avoidable_containing_even, saturate, verify_avoiding_partition, verify_odd_cycle,
    AssociatedGraph, AvoidabilityOutcome, OddCycle, SearchBudget, TwoColoring,
};
pub use coloring::Color;
pub use error::{Error, Result};
pub use group::{Element, Group, GroupSpec, SubsetU};
