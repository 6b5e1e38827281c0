//! Splitter counting for a fixed family: brute force, region convolution,
//! closed forms for one and two sets, and exhaustive minimum searches.

mod exact;
mod formulas;
mod lemmas;
mod minimize;

pub use exact::{count_splitters, count_splitters_regions, BigCount};
pub use formulas::{
    approx_splitters_two_set, binomial, franel, splitters_one_set, splitters_two_set,
};
pub use lemmas::{
    verify_point_moving_lemmas, LemmaReport, LemmaViolation, PointMovingLemma, MAX_LEMMA_K,
};
pub use minimize::{
    check_three_set_recurrence, min_one_set, min_three_set, min_three_set_up_to, min_two_set,
    min_two_set_prediction, three_set_pattern, MinResult, LONG_THREE_SET_K, MAX_THREE_SET_K,
};

/// Serializes a count as a decimal string so that no precision is lost in
/// JSON consumers.
pub fn serialize_decimal<S: serde::Serializer>(v: &BigCount, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}
