use std::fmt;

use serde::{Deserialize, Serialize};

use super::mask::{ground_bits, SubsetMask, MAX_GROUND};
use crate::error::{Error, Result};

/// An ordered list of subsets of a common ground set `[k]`.
///
/// Order and multiplicity are kept exactly as given; duplicate members and
/// the empty set are legal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FamilyJson", into = "FamilyJson")]
pub struct Family {
    k: u32,
    sets: Vec<SubsetMask>,
}

impl Family {
    pub fn new(k: u32, sets: Vec<SubsetMask>) -> Result<Self> {
        if k > MAX_GROUND {
            return Err(Error::capacity("ground set size", k, MAX_GROUND));
        }
        if let Some(bad) = sets.iter().find(|s| s.k() != k) {
            return Err(Error::contract(format!(
                "member {bad} lives on [{}], family on [{k}]",
                bad.k()
            )));
        }
        Ok(Self { k, sets })
    }

    /// The family with no members.
    pub fn empty(k: u32) -> Result<Self> {
        Self::new(k, Vec::new())
    }

    /// Builds a family from 1-indexed element lists.
    pub fn from_lists<L, I>(k: u32, lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        let sets = lists
            .into_iter()
            .map(|l| SubsetMask::from_elements(k, l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, sets)
    }

    /// Builds a family from raw bit masks (bit `i - 1` is element `i`).
    pub fn from_bits(k: u32, masks: &[u64]) -> Result<Self> {
        let sets = masks
            .iter()
            .map(|&b| SubsetMask::from_bits(k, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, sets)
    }

    pub(crate) fn from_bits_unchecked(k: u32, masks: &[u64]) -> Self {
        Self {
            k,
            sets: masks
                .iter()
                .map(|&b| SubsetMask::new_unchecked(k, b))
                .collect(),
        }
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn bits(&self) -> Vec<u64> {
        self.sets.iter().map(|s| s.bits()).collect()
    }

    /// Whether some single set splits every member.
    pub fn is_split_by(&self, a: SubsetMask) -> bool {
        assert_eq!(a.k(), self.k);
        self.sets
            .iter()
            .all(|b| super::mask::splits_bits(a.bits(), b.bits()))
    }

    /// The family on `[k']` obtained by intersecting every member with `[k']`.
    pub fn restrict(&self, k: u32) -> Result<Self> {
        if k > self.k {
            return Err(Error::contract(format!(
                "cannot restrict [{}] to the larger [{k}]",
                self.k
            )));
        }
        let g = ground_bits(k);
        Ok(Self::from_bits_unchecked(
            k,
            &self.sets.iter().map(|s| s.bits() & g).collect::<Vec<_>>(),
        ))
    }

    /// Relabels ground elements: element `e` becomes `perm[e - 1]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        if perm.len() != self.k as usize {
            return Err(Error::contract("permutation length differs from k"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p == 0 || p > self.k || seen >> (p - 1) & 1 == 1 {
                return Err(Error::contract("not a permutation of [k]"));
            }
            seen |= 1 << (p - 1);
        }
        let sets = self
            .sets
            .iter()
            .map(|s| {
                let bits = s
                    .elements()
                    .fold(0u64, |acc, e| acc | 1 << (perm[e as usize - 1] - 1));
                SubsetMask::new_unchecked(self.k, bits)
            })
            .collect();
        Ok(Self { k: self.k, sets })
    }

    /// Every member has size `⌊k/2⌋` or `⌈k/2⌉`.
    pub fn is_uniform(&self) -> bool {
        let lo = self.k / 2;
        let hi = self.k.div_ceil(2);
        self.sets.iter().all(|s| s.len() == lo || s.len() == hi)
    }

    pub fn to_lists(&self) -> Vec<Vec<u32>> {
        self.sets.iter().map(|s| s.to_vec()).collect()
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(k={}, {self})", self.k)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Wire form: `{"k": 3, "sets": [[1,2],[2,3]]}` with 1-indexed elements.
#[derive(Serialize, Deserialize)]
struct FamilyJson {
    k: u32,
    sets: Vec<Vec<u32>>,
}

impl TryFrom<FamilyJson> for Family {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<Self> {
        Family::from_lists(j.k, j.sets)
    }
}

impl From<Family> for FamilyJson {
    fn from(f: Family) -> Self {
        FamilyJson {
            k: f.k,
            sets: f.to_lists(),
        }
    }
}
