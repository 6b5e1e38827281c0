use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a [`SubsetMask`] can hold.
pub const MAX_GROUND: u32 = 64;

/// Bits `0..k` set.
#[inline]
pub fn ground_bits(k: u32) -> u64 {
    debug_assert!(k <= MAX_GROUND);
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// The splitting predicate on raw bit masks: `|a ∩ b|` lies within one half
/// of `|b|/2`, which is exact halving for even `|b|` and either rounding for
/// odd `|b|`.
#[inline]
pub fn splits_bits(a: u64, b: u64) -> bool {
    let hit = (a & b).count_ones() as i32;
    let size = b.count_ones() as i32;
    (2 * hit - size).abs() <= 1
}

/// Whether `a` splits `b`.
///
/// # Panics
///
/// If the two masks live on different ground sets.
pub fn splits(a: SubsetMask, b: SubsetMask) -> bool {
    assert_eq!(a.k, b.k, "splits: masks on different ground sets");
    splits_bits(a.bits, b.bits)
}

/// A subset of the ground set `[k] = {1, ..., k}`.
///
/// Element `i` is stored in bit `i - 1`. No bit at or above position `k` is
/// ever set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u64,
    k: u8,
}

impl SubsetMask {
    pub fn empty(k: u32) -> Result<Self> {
        Self::from_bits(k, 0)
    }

    pub fn full(k: u32) -> Result<Self> {
        check_ground(k)?;
        Ok(Self {
            bits: ground_bits(k),
            k: k as u8,
        })
    }

    pub fn from_bits(k: u32, bits: u64) -> Result<Self> {
        check_ground(k)?;
        if bits & !ground_bits(k) != 0 {
            return Err(Error::contract(format!(
                "mask {bits:#x} has elements outside [{k}]"
            )));
        }
        Ok(Self { bits, k: k as u8 })
    }

    /// Builds a mask from 1-indexed elements. Repeated elements are allowed.
    pub fn from_elements<I: IntoIterator<Item = u32>>(k: u32, elements: I) -> Result<Self> {
        check_ground(k)?;
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > k {
                return Err(Error::contract(format!("element {e} outside [{k}]")));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Self { bits, k: k as u8 })
    }

    /// Unchecked constructor for internal hot paths.
    #[inline]
    pub(crate) fn new_unchecked(k: u32, bits: u64) -> Self {
        debug_assert!(k <= MAX_GROUND && bits & !ground_bits(k) == 0);
        Self { bits, k: k as u8 }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn k(self) -> u32 {
        u32::from(self.k)
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, element: u32) -> bool {
        element >= 1 && element <= self.k() && self.bits >> (element - 1) & 1 == 1
    }

    pub fn with(self, element: u32) -> Result<Self> {
        Self::from_bits(self.k(), self.bits | element_bit(self.k(), element)?)
    }

    pub fn intersection(self, other: Self) -> Self {
        assert_eq!(self.k, other.k);
        Self {
            bits: self.bits & other.bits,
            ..self
        }
    }

    pub fn union(self, other: Self) -> Self {
        assert_eq!(self.k, other.k);
        Self {
            bits: self.bits | other.bits,
            ..self
        }
    }

    pub fn difference(self, other: Self) -> Self {
        assert_eq!(self.k, other.k);
        Self {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    /// `[k] \ self`.
    pub fn complement(self) -> Self {
        Self {
            bits: !self.bits & ground_bits(self.k()),
            ..self
        }
    }

    /// Members in increasing order, 1-indexed.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        BitIter(self.bits).map(|b| b + 1)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.elements().collect()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.k)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Iterates the positions (0-indexed) of set bits, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros();
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

fn check_ground(k: u32) -> Result<()> {
    if k > MAX_GROUND {
        Err(Error::capacity("ground set size", k, MAX_GROUND))
    } else {
        Ok(())
    }
}

pub(crate) fn element_bit(k: u32, element: u32) -> Result<u64> {
    if element == 0 || element > k {
        Err(Error::contract(format!("element {element} outside [{k}]")))
    } else {
        Ok(1 << (element - 1))
    }
}
