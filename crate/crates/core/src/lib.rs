//! Exact gradual elements, gradual subsets and gradual subgroups over finite
//! ground sets and finite groups, their correspondence with fuzzy subsets and
//! fuzzy subgroups, and their description as directed systems.
//!
//! Levels and grades are exact rationals. Every gradual object is a
//! [`StepMap`]: a piecewise-constant map on (0,1] with explicit open and
//! closed interval ends.

pub mod error;
pub mod finite_group;
pub mod functorial;
pub mod fuzzy_bridge;
pub mod gradual_element;
pub mod gradual_group;
pub mod gradual_subset;
pub mod level_core;
pub mod oracle;
pub mod random;

pub use error::{Error, Result};
pub use finite_group::{FiniteGroup, GroupHom, Subgroup};
pub use functorial::{DirectedGroupSystem, DirectedSetSystem, LevelGrid};
pub use fuzzy_bridge::FuzzySubset;
pub use gradual_element::{GroundSet, PartialGradualElement, TotalGradualElement};
pub use gradual_group::{FuzzySubgroup, FuzzySubgroupClass, GradualSubgroup};
pub use gradual_subset::GradualSubset;
pub use level_core::{Grade, IntervalPiece, Level, LevelSet, Rational, StepMap};

/// A subset of a finite ground set, one bit per element.
pub type ElementSet = fixedbitset::FixedBitSet;
