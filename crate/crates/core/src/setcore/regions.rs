use std::fmt;

use serde::{Deserialize, Serialize};

use super::family::Family;
use super::mask::{SubsetMask, MAX_GROUND};
use crate::error::{ensure_at_most, Error, Result};

/// Most sets [`venn_decompose`] will split into regions.
pub const MAX_VENN_SETS: usize = 16;

/// Sizes of the `2^n` Venn regions of an `n`-set family.
///
/// `sizes[I]` is the number of ground elements lying in exactly the members
/// whose indices are the set bits of `I` (bit `j` is member `j + 1`). Index 0
/// is the outside region.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RegionVector {
    n: usize,
    sizes: Vec<u64>,
}

impl RegionVector {
    pub fn new(n: usize, sizes: Vec<u64>) -> Result<Self> {
        ensure_at_most("number of sets", n as u64, MAX_VENN_SETS as u64)?;
        if sizes.len() != 1 << n {
            return Err(Error::contract(format!(
                "{} region sizes given for {n} sets, expected {}",
                sizes.len(),
                1usize << n
            )));
        }
        Ok(Self { n, sizes })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, vec![0; 1 << n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn size(&self, region: usize) -> u64 {
        self.sizes[region]
    }

    pub fn set_size(&mut self, region: usize, size: u64) {
        self.sizes[region] = size;
    }

    /// Ground-set size `k`.
    pub fn total(&self) -> u64 {
        self.sizes.iter().sum()
    }

    /// Size of member `j` (0-indexed): the sum over regions containing it.
    pub fn member_size(&self, j: usize) -> u64 {
        self.sizes
            .iter()
            .enumerate()
            .filter(|(i, _)| i >> j & 1 == 1)
            .map(|(_, &s)| s)
            .sum()
    }

    /// Relabels the sets: member `j` becomes member `perm[j]`.
    pub fn permute_sets(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut sizes = vec![0; self.sizes.len()];
        for (i, &s) in self.sizes.iter().enumerate() {
            sizes[permute_index(i, perm)] = s;
        }
        Self { n: self.n, sizes }
    }

    /// Least member of the orbit under relabeling the sets.
    pub fn symmetry_canonical(&self) -> Self {
        all_permutations(self.n)
            .into_iter()
            .map(|p| self.permute_sets(&p))
            .min()
            .expect("at least the identity permutation")
    }

    /// Each size replaced by its parity.
    pub fn parity(&self) -> Self {
        Self {
            n: self.n,
            sizes: self.sizes.iter().map(|s| s & 1).collect(),
        }
    }
}

impl fmt::Debug for RegionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RegionVector{:?}", self.sizes)
    }
}

impl fmt::Display for RegionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn permute_index(i: usize, perm: &[usize]) -> usize {
    perm.iter()
        .enumerate()
        .filter(|(j, _)| i >> j & 1 == 1)
        .fold(0, |acc, (_, &p)| acc | 1 << p)
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Region sizes together with the elements making up each region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VennDecomposition {
    pub regions: RegionVector,
    /// `masks[I]` holds the elements in exactly the members indexed by `I`.
    pub masks: Vec<SubsetMask>,
}

/// Splits `[k]` into the Venn regions of `family`.
pub fn venn_decompose(family: &Family) -> Result<VennDecomposition> {
    let n = family.len();
    ensure_at_most("number of sets", n as u64, MAX_VENN_SETS as u64)?;
    let k = family.k();
    let mut masks = vec![0u64; 1 << n];
    for e in 0..k {
        let region = family
            .sets()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.bits() >> e & 1 == 1)
            .fold(0usize, |acc, (j, _)| acc | 1 << j);
        masks[region] |= 1 << e;
    }
    let sizes = masks.iter().map(|m| u64::from(m.count_ones())).collect();
    Ok(VennDecomposition {
        regions: RegionVector { n, sizes },
        masks: masks
            .into_iter()
            .map(|m| SubsetMask::new_unchecked(k, m))
            .collect(),
    })
}

/// Order in which [`family_from_regions`] lays regions out along `[k]`:
/// the reflected Gray code of `1..2^n`, then the outside region.
///
/// For two sets this reads `{1}, {1,2}, {2}, ∅`, the `(a1, b, a2, d)` order.
pub fn region_layout_order(n: usize) -> Vec<usize> {
    (1..1usize << n)
        .map(|i| i ^ (i >> 1))
        .chain(std::iter::once(0))
        .collect()
}

/// The canonical family with the given region sizes.
///
/// Elements are handed out consecutively, region by region, in
/// [`region_layout_order`].
pub fn family_from_regions(regions: &RegionVector) -> Result<Family> {
    let total = regions.total();
    ensure_at_most("ground set size", total, u64::from(MAX_GROUND))?;
    let n = regions.n();
    let mut sets = vec![0u64; n];
    let mut next = 0u32;
    for region in region_layout_order(n) {
        for _ in 0..regions.size(region) {
            for (j, s) in sets.iter_mut().enumerate() {
                if region >> j & 1 == 1 {
                    *s |= 1 << next;
                }
            }
            next += 1;
        }
    }
    Ok(Family::from_bits_unchecked(total as u32, &sets))
}

/// A two-set arrangement `(a1, b, a2, d)`: `|B1 \ B2|`, `|B1 ∩ B2|`,
/// `|B2 \ B1|` and the number of points outside both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrangement2 {
    pub a1: u64,
    pub b: u64,
    pub a2: u64,
    pub d: u64,
}

impl Arrangement2 {
    pub const fn new(a1: u64, b: u64, a2: u64, d: u64) -> Self {
        Self { a1, b, a2, d }
    }

    pub fn k(&self) -> u64 {
        self.a1 + self.b + self.a2 + self.d
    }

    /// `⌊|B1|/2⌋`, the number of points of `B1` a splitter must take (for even `|B1|`).
    pub fn t1(&self) -> u64 {
        (self.a1 + self.b) / 2
    }

    pub fn t2(&self) -> u64 {
        (self.a2 + self.b) / 2
    }

    /// Both member sizes even.
    pub fn is_even(&self) -> bool {
        (self.a1 + self.b).is_multiple_of(2) && (self.a2 + self.b).is_multiple_of(2)
    }

    pub fn to_regions(&self) -> RegionVector {
        RegionVector {
            n: 2,
            sizes: vec![self.d, self.a1, self.a2, self.b],
        }
    }

    pub fn from_regions(r: &RegionVector) -> Result<Self> {
        if r.n() != 2 {
            return Err(Error::contract("arrangement needs exactly two sets"));
        }
        let s = r.sizes();
        Ok(Self::new(s[1], s[3], s[2], s[0]))
    }

    /// Every composition `a1 + b + a2 + d = k`.
    pub fn all_with_total(k: u64) -> impl Iterator<Item = Self> {
        (0..=k).flat_map(move |a1| {
            (0..=k - a1).flat_map(move |b| {
                (0..=k - a1 - b).map(move |a2| Self::new(a1, b, a2, k - a1 - b - a2))
            })
        })
    }
}

impl fmt::Display for Arrangement2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a1, self.b, self.a2, self.d)
    }
}
