//! Splitting families: construction, verification, canonical forms,
//! minimum-size enumeration and Hamming-representation structure.

mod canonical;
mod hamming;
mod minimal;
mod search;
mod structure;
mod verify;

pub use canonical::{are_equivalent, canonical_form, MAX_CANONICAL_SETS};
pub use hamming::{
    classify_y, delta_label, find_forbidden_y, hamming_representation, is_connected, HammingRep,
    YKind, YWitness,
};
pub use minimal::{
    at_most_four_splitting_lower_bound, enumerate_minimal_splitting_families,
    enumerate_minimal_splitting_families_up_to, find_splitting_family, four_splitting_lower_bound,
    min_splitting_family_size, min_t_splitting_size, min_t_splitting_size_up_to, FamilyClass,
    MinSizeResult, DEFAULT_MAX_SEARCH_K, LONG_MAX_SEARCH_K,
};
pub use structure::{classify_connected_le4_minimal, ConnectedClassification};
pub use verify::{
    find_unsplit_subset, is_extendable, is_splitting_family, is_t_splitting_family,
    standard_family, SizeMode, MAX_BOUNDED_K, MAX_BOUNDED_T, MAX_EXHAUSTIVE_K,
};
