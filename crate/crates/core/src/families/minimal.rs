use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::canonical::{canonical_columns, canonical_form, family_from_columns};
use super::search::{ColumnSearch, Target};
use super::verify::{standard_family, SizeMode, MAX_BOUNDED_T};
use crate::error::{ensure_at_most, Error, Result};
use crate::setcore::Family;

/// Largest `k` for minimal-family enumeration and size searches in the
/// default configuration.
pub const DEFAULT_MAX_SEARCH_K: u32 = 10;
/// Hard ceiling for the same searches when long runs are allowed.
pub const LONG_MAX_SEARCH_K: u32 = 16;

/// One equivalence class of minimum-size splitting families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyClass {
    pub canonical: Family,
    pub size: usize,
    pub uniform: bool,
    pub standard_equivalent: bool,
}

/// Some splitting family with `n` members on `[k]`, if one exists.
pub fn find_splitting_family(k: u32, n: usize) -> Result<Option<Family>> {
    ensure_at_most(
        "ground set size",
        u64::from(k),
        u64::from(LONG_MAX_SEARCH_K),
    )?;
    ensure_at_most("number of sets", n as u64, 8)?;
    Ok(ColumnSearch {
        k,
        n,
        target: Target::Every,
    }
    .find_first())
}

/// Least number of members of a splitting family on `[k]`, by search.
pub fn min_splitting_family_size(k: u32) -> Result<(usize, Family)> {
    for n in 0..=8 {
        if let Some(f) = find_splitting_family(k, n)? {
            return Ok((n, f));
        }
    }
    Err(Error::capacity("number of sets", 9u64, 8u64))
}

/// Every equivalence class of splitting families of size `⌈k/2⌉` on `[k]`.
///
/// `max_k` caps the search; pass [`DEFAULT_MAX_SEARCH_K`] unless the caller
/// has opted into long runs.
pub fn enumerate_minimal_splitting_families_up_to(k: u32, max_k: u32) -> Result<Vec<FamilyClass>> {
    if k == 0 {
        return Err(Error::contract("k must be at least 1"));
    }
    ensure_at_most(
        "ground set size",
        u64::from(k),
        u64::from(max_k.min(LONG_MAX_SEARCH_K)),
    )?;
    let n = k.div_ceil(2) as usize;
    let search = ColumnSearch {
        k,
        n,
        target: Target::Every,
    };
    let classes: BTreeSet<Vec<u32>> = search
        .collect_parallel(|cols| Some(canonical_columns(n, cols)))
        .into_iter()
        .collect();
    let standard = canonical_form(&standard_family(k)?)?;
    Ok(classes
        .into_iter()
        .map(|cols| {
            let canonical = family_from_columns(k, n, &cols);
            FamilyClass {
                size: n,
                uniform: canonical.is_uniform(),
                standard_equivalent: canonical == standard,
                canonical,
            }
        })
        .collect())
}

pub fn enumerate_minimal_splitting_families(k: u32) -> Result<Vec<FamilyClass>> {
    enumerate_minimal_splitting_families_up_to(k, DEFAULT_MAX_SEARCH_K)
}

/// Result of [`min_t_splitting_size`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinSizeResult {
    pub k: u32,
    pub t: u32,
    pub mode: SizeMode,
    pub size: usize,
    pub witness: Family,
}

/// Least number of members of a family on `[k]` splitting every subset of
/// size exactly `t` (or at most `t`), with a family attaining it.
pub fn min_t_splitting_size(k: u32, t: u32, mode: SizeMode) -> Result<MinSizeResult> {
    min_t_splitting_size_up_to(k, t, mode, DEFAULT_MAX_SEARCH_K)
}

pub fn min_t_splitting_size_up_to(
    k: u32,
    t: u32,
    mode: SizeMode,
    max_k: u32,
) -> Result<MinSizeResult> {
    ensure_at_most(
        "ground set size",
        u64::from(k),
        u64::from(max_k.min(LONG_MAX_SEARCH_K)),
    )?;
    ensure_at_most("subset size", u64::from(t), u64::from(MAX_BOUNDED_T))?;
    if t > k {
        return Err(Error::contract(format!("subset size {t} exceeds k = {k}")));
    }
    for n in 0..=8usize {
        let search = ColumnSearch {
            k,
            n,
            target: Target::Sized(t, mode),
        };
        let mut found = None;
        search.for_each(|cols| {
            found = Some(family_from_columns(k, n, cols));
            ControlFlow::Break(())
        });
        if let Some(witness) = found {
            return Ok(MinSizeResult {
                k,
                t,
                mode,
                size: n,
                witness,
            });
        }
    }
    Err(Error::capacity("number of sets", 9u64, 8u64))
}

/// `log2(k)`, the lower bound on a 4-splitting family for `k >= 6`.
pub fn four_splitting_lower_bound(k: u32) -> f64 {
    f64::from(k).log2()
}

/// `log2(k) + 3 - log2(5)`, a lower bound on a ≤4-splitting family for
/// `k >= 5` except `k = 6`, where three sets suffice.
pub fn at_most_four_splitting_lower_bound(k: u32) -> f64 {
    f64::from(k).log2() + 3.0 - 5f64.log2()
}
