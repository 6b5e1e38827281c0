use crate::error::{ensure_at_most, Result};
use crate::setcore::{all_permutations, Family};

/// Most members [`canonical_form`] accepts.
pub const MAX_CANONICAL_SETS: usize = 8;

/// Incidence columns: entry `e` has bit `i` set when element `e + 1` lies in
/// member `i`.
pub(crate) fn incidence_columns(family: &Family) -> Vec<u32> {
    let members = family.bits();
    (0..family.k())
        .map(|e| {
            members
                .iter()
                .enumerate()
                .filter(|(_, &m)| m >> e & 1 == 1)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

/// The family whose element `e + 1` has incidence column `columns[e]`.
pub(crate) fn family_from_columns(k: u32, n: usize, columns: &[u32]) -> Family {
    let mut sets = vec![0u64; n];
    for (e, &c) in columns.iter().enumerate() {
        for (i, s) in sets.iter_mut().enumerate() {
            if c >> i & 1 == 1 {
                *s |= 1 << e;
            }
        }
    }
    Family::from_bits_unchecked(k, &sets)
}

/// Lexicographically least sorted column multiset over every relabeling of
/// members and every choice of complemented members.
pub(crate) fn canonical_columns(n: usize, columns: &[u32]) -> Vec<u32> {
    let size = 1usize << n;
    let mut best: Option<Vec<u32>> = None;
    let mut buf = vec![0u32; columns.len()];
    for perm in all_permutations(n) {
        let table: Vec<u32> = (0..size as u32)
            .map(|c| {
                perm.iter()
                    .enumerate()
                    .filter(|(i, _)| c >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &p)| acc | 1 << p)
            })
            .collect();
        for flip in 0..size as u32 {
            for (slot, &c) in buf.iter_mut().zip(columns) {
                *slot = table[c as usize] ^ flip;
            }
            buf.sort_unstable();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
    }
    best.unwrap_or_default()
}

/// A distinguished representative of the equivalence class of `family`,
/// where equivalence allows complementing members, reordering members and
/// permuting the ground set.
///
/// The representative has the lexicographically least sorted column
/// multiset, with ground elements labeled in that sorted order. Two
/// families are equivalent exactly when their canonical forms are equal.
pub fn canonical_form(family: &Family) -> Result<Family> {
    let n = family.len();
    ensure_at_most("number of sets", n as u64, MAX_CANONICAL_SETS as u64)?;
    let columns = canonical_columns(n, &incidence_columns(family));
    Ok(family_from_columns(family.k(), n, &columns))
}

/// Whether two families are equivalent.
pub fn are_equivalent(a: &Family, b: &Family) -> Result<bool> {
    if a.k() != b.k() || a.len() != b.len() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
