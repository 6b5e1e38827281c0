use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::exact::{count_regions_with, pascal, BigCount};
use super::formulas::{splitters_one_set, splitters_two_set};
use crate::error::{ensure_at_most, Error, Result};
use crate::setcore::{Arrangement2, RegionVector};

/// Default cap for [`min_three_set`].
pub const MAX_THREE_SET_K: u64 = 16;
/// Cap for [`min_three_set_up_to`] in long mode.
pub const LONG_THREE_SET_K: u64 = 20;

/// Minimum splitter count over all splittable `n`-set families on `[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinResult {
    pub k: u64,
    /// Representative minimizer.
    pub arrangement: RegionVector,
    #[serde(serialize_with = "crate::counting::serialize_decimal")]
    pub count: BigCount,
    /// Every minimizer, one per orbit under relabeling the sets, sorted.
    pub all_minimizers: Vec<RegionVector>,
    /// Whether a minimizer has the predicted shape (two and three sets).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_pattern: Option<bool>,
}

/// Scans every size of `B` for the one-set minimum.
pub fn min_one_set(k: u64) -> Result<MinResult> {
    if k == 0 {
        return Err(Error::contract("one-set minimum needs k >= 1"));
    }
    let counts: Vec<(u64, BigCount)> = (0..=k)
        .map(|b| Ok((b, splitters_one_set(b, k)?)))
        .collect::<Result<_>>()?;
    let min = counts.iter().map(|(_, c)| c).min().expect("k >= 1").clone();
    let all: Vec<RegionVector> = counts
        .iter()
        .filter(|(_, c)| *c == min)
        .map(|&(b, _)| RegionVector::new(1, vec![k - b, b]))
        .collect::<Result<_>>()?;
    let expected = if k.is_multiple_of(2) { k } else { k - 1 };
    Ok(MinResult {
        k,
        arrangement: all[0].clone(),
        count: min,
        matches_pattern: Some(all.iter().any(|r| r.size(1) == expected)),
        all_minimizers: all,
    })
}

/// The two-set minimizer predicted for `k`, as `(a1, b, a2, 0)`.
pub fn min_two_set_prediction(k: u64) -> Option<Arrangement2> {
    if k < 3 {
        return None;
    }
    Some(match k % 3 {
        0 => {
            let m = k / 3;
            Arrangement2::new(m, m, m, 0)
        }
        1 => {
            let m = k.div_ceil(3);
            Arrangement2::new(m - 2, m, m, 0)
        }
        _ => {
            let m = (k - 2) / 3;
            Arrangement2::new(m, m, m + 2, 0)
        }
    })
}

fn same_interior_multiset(x: Arrangement2, y: Arrangement2) -> bool {
    let mut p = [x.a1, x.b, x.a2];
    let mut q = [y.a1, y.b, y.a2];
    p.sort_unstable();
    q.sort_unstable();
    p == q && x.d == y.d
}

/// Scans every `(a1, b, a2, d)` with total `k`.
///
/// `matches_pattern` records whether the predicted arrangement, up to
/// permuting `(a1, b, a2)`, is among the minimizers.
pub fn min_two_set(k: u64) -> Result<MinResult> {
    if k < 3 {
        return Err(Error::contract("two-set minimum needs k >= 3"));
    }
    let mut best: Option<BigCount> = None;
    let mut all: Vec<RegionVector> = Vec::new();
    for a in Arrangement2::all_with_total(k) {
        let c = splitters_two_set(a);
        if c == BigUint::ZERO {
            continue;
        }
        match &best {
            Some(b) if c > *b => continue,
            Some(b) if c == *b => {}
            _ => {
                best = Some(c);
                all.clear();
            }
        }
        all.push(a.to_regions().symmetry_canonical());
    }
    all.sort();
    all.dedup();
    let predicted = min_two_set_prediction(k).expect("k >= 3");
    let matches = all
        .iter()
        .filter_map(|r| Arrangement2::from_regions(r).ok())
        .any(|a| same_interior_multiset(a, predicted));
    Ok(MinResult {
        k,
        arrangement: all[0].clone(),
        count: best.expect("some arrangement is splittable"),
        all_minimizers: all,
        matches_pattern: Some(matches),
    })
}

/// Region index of the set pair / triple used by the three-set pattern:
/// sets `T = 1`, `L = 2`, `R = 3`.
const T_ONLY: usize = 0b001;
const T_L: usize = 0b011;
const T_R: usize = 0b101;
const L_R: usize = 0b110;
const CENTRE: usize = 0b111;

/// The periodic three-set minimizer shape for `k`, with `ℓ` odd; `None`
/// when `k` is too small for the shape.
pub fn three_set_pattern(k: u64) -> Option<RegionVector> {
    let (single, lr_extra, side_extra, centre, offset): (u64, i64, u64, u64, i64) = match k % 6 {
        0 => (1, 1, 0, 1, 3),
        1 => (0, 2, 0, 2, 4),
        2 => (1, 3, 0, 1, 5),
        3 => (0, 0, 2, 2, 6),
        4 => (1, -1, 0, 1, 1),
        _ => (0, 0, 0, 2, 2),
    };
    let l = (k as i64 - offset) / 3;
    if l < 1 || l + lr_extra < 0 {
        return None;
    }
    let mut r = RegionVector::zeros(3).ok()?;
    r.set_size(T_ONLY, single);
    r.set_size(L_R, (l + lr_extra) as u64);
    r.set_size(T_R, l as u64 + side_extra);
    r.set_size(T_L, l as u64 + side_extra);
    r.set_size(CENTRE, centre);
    debug_assert_eq!(r.total(), k);
    debug_assert_eq!(l % 2, 1);
    Some(r)
}

/// Exhaustive three-set minimum for `3 <= k <= 16`.
pub fn min_three_set(k: u64) -> Result<MinResult> {
    min_three_set_up_to(k, MAX_THREE_SET_K)
}

/// Exhaustive three-set minimum with a caller-chosen cap (at most
/// [`LONG_THREE_SET_K`]).
pub fn min_three_set_up_to(k: u64, max_k: u64) -> Result<MinResult> {
    if k < 3 {
        return Err(Error::contract("three-set minimum needs k >= 3"));
    }
    ensure_at_most("ground set size", k, max_k.min(LONG_THREE_SET_K))?;
    let binom = pascal::<u128>(k);
    let (count, mut all) = (0..=k)
        .into_par_iter()
        .map(|outside| {
            let mut best: Option<(u128, Vec<RegionVector>)> = None;
            let mut sizes = [0u64; 8];
            sizes[0] = outside;
            interior_compositions(k - outside, 1, &mut sizes, &mut |sizes| {
                let r = RegionVector::new(3, sizes.to_vec()).expect("eight regions");
                if r.symmetry_canonical() != r {
                    return;
                }
                let c: u128 = count_regions_with(&r, &binom);
                if c == 0 {
                    return;
                }
                match &mut best {
                    Some((b, list)) if c == *b => list.push(r),
                    Some((b, _)) if c > *b => {}
                    _ => best = Some((c, vec![r])),
                }
            });
            best
        })
        .reduce(
            || None,
            |x, y| match (x, y) {
                (None, y) => y,
                (x, None) => x,
                (Some((cx, mut lx)), Some((cy, ly))) => {
                    if cx == cy {
                        lx.extend(ly);
                        Some((cx, lx))
                    } else if cx < cy {
                        Some((cx, lx))
                    } else {
                        Some((cy, ly))
                    }
                }
            },
        )
        .expect("a splittable three-set family exists for k >= 3");
    all.sort();
    let matches = three_set_pattern(k).map(|p| {
        let p = p.symmetry_canonical();
        all.contains(&p)
    });
    Ok(MinResult {
        k,
        arrangement: all[0].clone(),
        count: BigCount::from(count),
        all_minimizers: all,
        matches_pattern: matches,
    })
}

fn interior_compositions(
    left: u64,
    idx: usize,
    sizes: &mut [u64; 8],
    f: &mut dyn FnMut(&[u64; 8]),
) {
    if idx == 7 {
        sizes[7] = left;
        f(sizes);
        return;
    }
    for v in 0..=left {
        sizes[idx] = v;
        interior_compositions(left - v, idx + 1, sizes, f);
    }
    sizes[idx] = 0;
}

/// Whether a table of three-set minima, keyed by contiguous `k` starting
/// at 6, satisfies `N_6 = 4` and
/// `N_{k+1} / N_k = 2 - 1/(⌊k/6⌋ + 1)` for even `k`, `2` for odd `k`.
pub fn check_three_set_recurrence(counts: &BTreeMap<u64, BigCount>) -> Result<bool> {
    let keys: Vec<u64> = counts.keys().copied().collect();
    if keys.first() != Some(&6) || keys.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::contract(
            "recurrence check needs contiguous k starting at 6",
        ));
    }
    if counts[&6] != BigCount::from(4u32) {
        return Ok(false);
    }
    Ok(keys.windows(2).all(|w| {
        let k = w[0];
        let (prev, next) = (&counts[&k], &counts[&w[1]]);
        if k % 2 == 1 {
            *next == prev * 2u32
        } else {
            let f = k / 6 + 1;
            next * f == prev * (2 * f - 1)
        }
    }))
}
