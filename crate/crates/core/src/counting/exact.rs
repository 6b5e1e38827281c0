use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{ensure_at_most, Result};
use crate::families::MAX_EXHAUSTIVE_K;
use crate::setcore::{Family, RegionVector};

/// Exact, arbitrary-precision count.
pub type BigCount = BigUint;

/// Arithmetic needed by the region convolution. Implemented by `u128` for
/// the hot search loops (exact while `k < 128`) and by [`BigCount`].
pub(crate) trait Counter:
    Clone + Zero + One + for<'a> Add<&'a Self, Output = Self> + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Counter for T where
    T: Clone + Zero + One + for<'a> Add<&'a T, Output = T> + for<'a> Mul<&'a T, Output = T>
{
}

/// Number of `A ⊆ [k]` splitting every member, by direct enumeration.
pub fn count_splitters(family: &Family) -> Result<BigCount> {
    let k = family.k();
    ensure_at_most("ground set size", u64::from(k), u64::from(MAX_EXHAUSTIVE_K))?;
    let members = family.bits();
    let count = (0..1u64 << k)
        .filter(|&a| members.iter().all(|&b| crate::setcore::splits_bits(a, b)))
        .count();
    Ok(BigCount::from(count))
}

/// Number of splitters of any family with the given Venn region sizes.
///
/// Sums, over the number of chosen points in each region, the product of
/// binomial coefficients, keeping only choices that land every member inside
/// its split window.
pub fn count_splitters_regions(regions: &RegionVector) -> BigCount {
    count_regions::<BigCount>(regions)
}

pub(crate) fn pow2<T: Counter>(e: u64) -> T {
    let two = T::one() + &T::one();
    let mut acc = T::one();
    let mut base = two;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

/// Rows `0..=max` of Pascal's triangle.
pub(crate) fn pascal<T: Counter>(max: u64) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(max as usize + 1);
    rows.push(vec![T::one()]);
    for m in 1..=max as usize {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(T::one());
        for i in 1..m {
            row.push(prev[i - 1].clone() + &prev[i]);
        }
        row.push(T::one());
        rows.push(row);
    }
    rows
}

struct RegionDp<'a, T> {
    multi: Vec<(usize, u64)>,
    /// `remaining[pos][j]`: points of member `j` in `multi[pos..]` plus its
    /// private region.
    remaining: Vec<Vec<u64>>,
    lo: Vec<u64>,
    hi: Vec<u64>,
    /// `tail[j][s]`: ways to complete member `j` from its private region
    /// when `s` points are already chosen elsewhere.
    tail: Vec<Vec<T>>,
    binom: &'a [Vec<T>],
}

impl<T: Counter> RegionDp<'_, T> {
    fn run(&self, pos: usize, sums: &mut [u64], weight: T, acc: &mut T) {
        if pos == self.multi.len() {
            let mut w = weight;
            for (j, &s) in sums.iter().enumerate() {
                let t = &self.tail[j][s as usize];
                if t.is_zero() {
                    return;
                }
                w = w * t;
            }
            *acc = std::mem::replace(acc, T::zero()) + &w;
            return;
        }
        let (region, size) = self.multi[pos];
        let members: Vec<usize> = (0..sums.len()).filter(|j| region >> j & 1 == 1).collect();
        let after = &self.remaining[pos + 1];
        'choice: for c in 0..=size {
            for &j in &members {
                let s = sums[j] + c;
                if s > self.hi[j] {
                    break 'choice;
                }
                if s + after[j] < self.lo[j] {
                    continue 'choice;
                }
            }
            for &j in &members {
                sums[j] += c;
            }
            self.run(
                pos + 1,
                sums,
                weight.clone() * &self.binom[size as usize][c as usize],
                acc,
            );
            for &j in &members {
                sums[j] -= c;
            }
        }
    }
}

pub(crate) fn count_regions<T: Counter>(regions: &RegionVector) -> T {
    let max = regions.sizes().iter().copied().max().unwrap_or(0);
    count_regions_with(regions, &pascal::<T>(max))
}

/// Region convolution with a caller-supplied Pascal table covering every
/// region size.
pub(crate) fn count_regions_with<T: Counter>(regions: &RegionVector, binom: &[Vec<T>]) -> T {
    let n = regions.n();
    let sizes = regions.sizes();
    debug_assert!(sizes.iter().all(|&s| (s as usize) < binom.len()));
    let member_size: Vec<u64> = (0..n).map(|j| regions.member_size(j)).collect();
    let lo: Vec<u64> = member_size.iter().map(|&s| s / 2).collect();
    let hi: Vec<u64> = member_size.iter().map(|&s| s.div_ceil(2)).collect();
    let multi: Vec<(usize, u64)> = (1..sizes.len())
        .filter(|&i| (i as u32).count_ones() >= 2 && sizes[i] > 0)
        .map(|i| (i, sizes[i]))
        .collect();
    let private: Vec<u64> = (0..n).map(|j| sizes[1 << j]).collect();
    let mut remaining = vec![private.clone(); multi.len() + 1];
    for pos in (0..multi.len()).rev() {
        let (region, size) = multi[pos];
        let mut r = remaining[pos + 1].clone();
        for (j, v) in r.iter_mut().enumerate() {
            if region >> j & 1 == 1 {
                *v += size;
            }
        }
        remaining[pos] = r;
    }
    let tail: Vec<Vec<T>> = (0..n)
        .map(|j| {
            let a = private[j];
            (0..=member_size[j])
                .map(|s| {
                    let mut t = T::zero();
                    for x in 0..=a {
                        if s + x >= lo[j] && s + x <= hi[j] {
                            t = t + &binom[a as usize][x as usize];
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    let dp = RegionDp {
        multi,
        remaining,
        lo,
        hi,
        tail,
        binom,
    };
    let mut acc = T::zero();
    let mut sums = vec![0u64; n];
    dp.run(0, &mut sums, T::one(), &mut acc);
    acc * &pow2::<T>(sizes[0])
}
