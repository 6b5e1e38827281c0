use serde::{Deserialize, Serialize};

use crate::error::{ensure_at_most, Error, Result};
use crate::setcore::{ground_bits, splits_bits, Family};

/// Largest ground set whose `2^k` subsets are enumerated outright.
pub const MAX_EXHAUSTIVE_K: u32 = 24;
/// Largest ground set for bounded-size subset checks.
pub const MAX_BOUNDED_K: u32 = 32;
/// Largest subset size for bounded-size subset checks.
pub const MAX_BOUNDED_T: u32 = 6;

/// Which subset sizes a bounded splitting check covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SizeMode {
    /// Subsets of size exactly `t`.
    Exactly,
    /// Subsets of size at most `t`.
    AtMost,
}

/// The standard family on `[k]`: `⌈k/2⌉` consecutive intervals
/// `{i, ..., i + ⌈k/2⌉ - 1}`.
///
/// For odd `k` this is also the restriction of the standard family on
/// `k + 1`, whose last element lies in no member.
pub fn standard_family(k: u32) -> Result<Family> {
    if k == 0 {
        return Err(Error::contract("standard family needs k >= 1"));
    }
    ensure_at_most("ground set size", u64::from(k), 64)?;
    let m = k.div_ceil(2);
    let g = ground_bits(k);
    let sets: Vec<u64> = (0..m).map(|i| (ground_bits(m) << i) & g).collect();
    Family::from_bits(k, &sets)
}

/// Whether some member splits `b`.
#[inline]
pub(crate) fn some_member_splits(members: &[u64], b: u64) -> bool {
    members.iter().any(|&a| splits_bits(a, b))
}

/// Whether every subset of `[k]` is split by some member.
pub fn is_splitting_family(family: &Family) -> Result<bool> {
    let k = family.k();
    ensure_at_most("ground set size", u64::from(k), u64::from(MAX_EXHAUSTIVE_K))?;
    let members = family.bits();
    Ok((0..1u64 << k).all(|b| some_member_splits(&members, b)))
}

/// Whether every subset of size exactly `t` (or at most `t`) is split by
/// some member.
pub fn is_t_splitting_family(family: &Family, t: u32, mode: SizeMode) -> Result<bool> {
    let k = family.k();
    if t > k {
        return Err(Error::contract(format!("subset size {t} exceeds k = {k}")));
    }
    ensure_at_most("ground set size", u64::from(k), u64::from(MAX_BOUNDED_K))?;
    ensure_at_most("subset size", u64::from(t), u64::from(MAX_BOUNDED_T))?;
    let members = family.bits();
    let sizes = match mode {
        SizeMode::Exactly => t..=t,
        SizeMode::AtMost => 0..=t,
    };
    for s in sizes {
        if !subsets_of_size(k, s).all(|b| some_member_splits(&members, b)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First unsplit subset of `[k]`, if any, as a bit mask.
pub fn find_unsplit_subset(family: &Family) -> Result<Option<u64>> {
    let k = family.k();
    ensure_at_most("ground set size", u64::from(k), u64::from(MAX_EXHAUSTIVE_K))?;
    let members = family.bits();
    Ok((0..1u64 << k).find(|&b| !some_member_splits(&members, b)))
}

/// Whether `family` is the restriction to `[k]` of a splitting family on
/// `[k + 1]` with the same number of members, i.e. whether element `k + 1`
/// can be added to some of the members to give a splitting family.
///
/// A family that is not itself splitting is never extendable.
pub fn is_extendable(family: &Family) -> Result<bool> {
    let k = family.k();
    ensure_at_most(
        "ground set size",
        u64::from(k) + 1,
        u64::from(MAX_EXHAUSTIVE_K),
    )?;
    ensure_at_most("number of sets", family.len() as u64, 20)?;
    let base = family.bits();
    let new_bit = 1u64 << k;
    for choice in 0..1u64 << base.len() {
        let ext: Vec<u64> = base
            .iter()
            .enumerate()
            .map(|(i, &a)| if choice >> i & 1 == 1 { a | new_bit } else { a })
            .collect();
        if (0..1u64 << (k + 1)).all(|b| some_member_splits(&ext, b)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All `s`-element subsets of `{0, ..., k-1}` as bit masks, in increasing
/// numeric order.
pub(crate) fn subsets_of_size(k: u32, s: u32) -> impl Iterator<Item = u64> {
    debug_assert!(k < 64);
    let limit = 1u64 << k;
    let first = if s > k { limit } else { ground_bits(s) };
    std::iter::successors(Some(first), move |&x| {
        if x == 0 {
            return None;
        }
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x + c;
        let next = (((r ^ x) >> 2) / c) | r;
        Some(next)
    })
    .take_while(move |&x| x < limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(k: u32, lists: &[&[u32]]) -> Family {
        Family::from_lists(k, lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    #[test]
    fn standard_family_shapes() {
        assert_eq!(
            standard_family(8).unwrap(),
            fam(
                8,
                &[&[1, 2, 3, 4], &[2, 3, 4, 5], &[3, 4, 5, 6], &[4, 5, 6, 7]]
            )
        );
        assert_eq!(standard_family(2).unwrap(), fam(2, &[&[1]]));
        assert_eq!(
            standard_family(6).unwrap(),
            fam(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]])
        );
        assert_eq!(
            standard_family(7).unwrap(),
            standard_family(8).unwrap().restrict(7).unwrap()
        );
        assert!(standard_family(0).is_err());
    }

    #[test]
    fn standard_families_split() {
        for k in 1..=14 {
            assert!(
                is_splitting_family(&standard_family(k).unwrap()).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn exceptional_family_splits() {
        let f = fam(
            8,
            &[&[1, 2, 3, 4], &[1, 2, 5, 6], &[3, 4, 5, 6], &[1, 3, 5, 7]],
        );
        assert!(is_splitting_family(&f).unwrap());
    }

    #[test]
    fn empty_family_does_not_split_a_singleton_ground() {
        assert!(!is_splitting_family(&Family::empty(1).unwrap()).unwrap());
        assert_eq!(
            find_unsplit_subset(&Family::empty(1).unwrap()).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn splitting_check_capacity() {
        let f = Family::empty(25).unwrap();
        assert!(matches!(
            is_splitting_family(&f),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn bounded_checks() {
        let singles = fam(4, &[&[1], &[2], &[3], &[4]]);
        assert!(!is_t_splitting_family(&singles, 4, SizeMode::Exactly).unwrap());
        for k in 1..=6 {
            let empty = Family::empty(k).unwrap();
            assert!(!is_t_splitting_family(&empty, 1, SizeMode::AtMost).unwrap());
            let one = Family::from_lists(k, [Vec::<u32>::new()]).unwrap();
            assert!(is_t_splitting_family(&one, 1, SizeMode::AtMost).unwrap());
        }
        assert!(is_t_splitting_family(&standard_family(10).unwrap(), 4, SizeMode::AtMost).unwrap());
        assert!(is_t_splitting_family(&singles, 5, SizeMode::AtMost).is_err());
    }

    #[test]
    fn extendability() {
        assert!(is_extendable(&standard_family(7).unwrap()).unwrap());
        assert!(!is_extendable(&standard_family(8).unwrap()).unwrap());
        assert!(!is_extendable(&fam(2, &[&[1]])).unwrap());
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets_of_size(6, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(6, 3).count(), 20);
        assert_eq!(subsets_of_size(5, 5).collect::<Vec<_>>(), vec![0b11111]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert!(subsets_of_size(8, 4).all(|b| b.count_ones() == 4));
    }
}
