//! Granular association rule mining on two universes.
//!
//! The data model is a pair of information systems (objects described by
//! symbolic attributes) joined by a binary relation between their universes,
//! e.g. customers and products joined by `buys`. A *granule* is an
//! attribute-value conjunction together with the set of objects matching it;
//! a *granular association rule* connects a source granule to a target
//! granule and is scored with four measures: source/target coverage and
//! source/target confidence.
//!
//! The crate provides:
//!
//! * [`model`] — information systems, descriptors, granules, relations;
//! * [`enumerate`] — level-wise enumeration of granules above a coverage
//!   threshold;
//! * [`measures`] — the four measures, the support variants and the
//!   complete/partial match predicates;
//! * [`miner`] — the sandwich, forward and backward mining algorithms with
//!   subtype-specialized rule checking and basic-operation counting.
//!
//! All measures are exact rationals ([`Frac`]); thresholds never suffer
//! float drift.

pub mod enumerate;
pub mod error;
pub mod frac;
pub mod measures;
pub mod miner;
pub mod model;
pub mod sets;

pub use enumerate::{
    enumerate_granules, enumerate_granules_with, join_candidates, EnumerationOptions, GranuleSet,
};
pub use error::{Error, Violation};
pub use frac::Frac;
pub use measures::{
    is_complete_match, left_partial_confidence, right_partial_confidence, source_confidence,
    source_coverage, support, target_confidence, target_coverage, GranularRule, MatchKind,
    MeasureSet,
};
pub use miner::{
    check_pair, inverse_lower_approximation, lower_approximation, mine, mine_backward,
    mine_forward, mine_sandwich, select_checker, Algorithm, MiningConfig, MiningOutcome,
    OpCounter, RuleSet,
};
pub use model::{Attribute, BinaryRelation, Descriptor, Granule, InformationSystem, Mmer};
