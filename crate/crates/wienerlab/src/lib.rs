//! Exact machinery for the maximum Wiener index of trees with fixed order
//! and diameter.
//!
//! The crate has four parts:
//!
//! * [`tree`] — validated tree values, hop distances, and two independent
//!   Wiener-index algorithms (pairwise traversal and edge decomposition),
//!   plus canonical forms and shape classification.
//! * [`transform`] and [`threshold`] — the two Wiener-preserving-order
//!   transformations (broom relocation at a special vertex, leaf relocation
//!   along a leaf path), their exact integer deltas, and the derived keep
//!   inequality, thresholds, and bound calculators.
//! * [`broom`] — parametric double/triple brooms, a linear-time Wiener
//!   evaluator for them, and best-in-family optimizers.
//! * [`enumerate`] and [`verify`] — isomorphism-free generation of all trees
//!   of a given order, per-(n,d) extremal records, and a counterexample
//!   reporter that replays each structural lemma at desk scale.
//!
//! Everything is exact: distance sums are 64-bit integers, inequality and
//! threshold decisions use integer arithmetic, and the few square roots in
//! display paths never feed back into decisions.

pub mod broom;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod shape;
pub mod threshold;
pub mod transform;
pub mod tree;
pub mod verify;

pub use broom::{
    best_double_broom, best_triple_broom, compare_brooms, double_broom, proposition_bound,
    theorem_bound, triple_broom, wiener_broom, BroomComparison, BroomSpec, Regime, Winner,
};
pub use canon::centers;
pub use enumerate::{
    extremal_all_cells, extremal_trees, free_trees, prufer_decode, random_tree, ArgmaxEntry,
    ExtremalRecord, FreeTrees, DEFAULT_CEILING, FREE_TREE_COUNTS,
};
pub use error::{Error, Result};
pub use shape::{classify, ShapeClass};
pub use threshold::{
    f_increasing_at, g_increasing_at, monotone_p_ceiling, offpath_arm_bound, offpath_bound,
    okok_bounds, threshold_f, threshold_f_met, threshold_g, threshold_g_met,
};
pub use transform::{
    find_special_contexts, keep_inequality, leaf_path, predicted_broom_delta_full,
    predicted_broom_delta_reduced, predicted_leaf_delta, relocate_broom, relocate_leaf,
    validate_context, ContextScan, LeafPath, NearMiss, SpecialContext,
};
pub use tree::{DistanceProfile, Tree, MAX_ORDER};
pub use verify::{verify, Counterexample, LemmaId, VerificationReport, VerifyParams, DEFAULT_SEED};
