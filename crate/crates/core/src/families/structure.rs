use serde::{Deserialize, Serialize};

use super::canonical::are_equivalent;
use super::hamming::hamming_representation;
use super::verify::{is_t_splitting_family, standard_family, SizeMode};
use crate::error::Result;
use crate::setcore::Family;

/// Outcome of matching a connected minimum-size ≤4-splitting family
/// against the standard constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectedClassification {
    /// Hamming representation is a cycle and the family is equivalent to
    /// the standard family on `k`.
    Standard,
    /// Hamming representation is a path and the family is equivalent to the
    /// standard family on `k + 1` restricted to `[k]`.
    RestrictionOfStandard,
    /// The hypotheses do not hold: wrong size, an empty member, not
    /// ≤4-splitting, or disconnected.
    NotApplicable,
    /// The hypotheses hold but neither standard shape matches.
    Unmatched,
}

/// Classifies a connected minimum-size ≤4-splitting family against the
/// standard constructions.
///
/// For `k = 2` the representation is a single edge: too short for a cycle,
/// and the restriction from `k = 3` has two members, so the result is
/// `Unmatched`.
pub fn classify_connected_le4_minimal(family: &Family) -> Result<ConnectedClassification> {
    use ConnectedClassification::*;
    let k = family.k();
    if k == 0 || family.len() as u32 != k.div_ceil(2) || family.sets().iter().any(|s| s.is_empty())
    {
        return Ok(NotApplicable);
    }
    if !is_t_splitting_family(family, 4.min(k), SizeMode::AtMost)? {
        return Ok(NotApplicable);
    }
    let rep = hamming_representation(family)?;
    if !rep.is_connected() {
        return Ok(NotApplicable);
    }
    if rep.is_cycle() && are_equivalent(family, &standard_family(k)?)? {
        return Ok(Standard);
    }
    if rep.is_path() && are_equivalent(family, &standard_family(k + 1)?.restrict(k)?)? {
        return Ok(RestrictionOfStandard);
    }
    Ok(Unmatched)
}
