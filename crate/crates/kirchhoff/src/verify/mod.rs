//! Enumeration spaces, bound evaluators, structural predicates and
//! theorem verdicts.

pub mod bounds;
pub mod enumerate;
pub mod identity;
pub mod random;
pub mod report;
pub mod search;
pub mod shape;
pub mod theorem;

pub use bounds::{bound_eval, tree_count_lower, BoundRecord};
pub use enumerate::{EnumerationSpec, SpaceMode, DEFAULT_BUDGET};
pub use identity::{check_identity, Identity, IdentityOutcome};
pub use report::{Counterexample, Status, VerificationReport, Witness};
pub use shape::{automorphism_count, complement_shape, find_isomorphism, is_isomorphic, tree_shape, ComplementShape, NamedPattern, TreeShape};
pub use search::{extremal_search, kf_tie, Group, Objective, SearchHit, TopGroups, TIE_TOLERANCE};
pub use theorem::{verify_theorem, TheoremParams, THEOREM_IDS};
