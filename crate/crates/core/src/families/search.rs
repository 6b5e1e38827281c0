//! Exhaustive search over incidence columns.
//!
//! A family of `n` sets on `[k]` is the same thing as a choice of one
//! `n`-bit column per ground element, and whether it splits a subset `B`
//! depends only on the columns of the elements of `B`. The search assigns
//! columns to elements `1, 2, ...` in nondecreasing order, which visits
//! every column multiset once, and checks each new element against every
//! subset it completes. A branch is cut as soon as some subset of the
//! placed elements is split by no member, since no later choice can repair
//! it.

use std::ops::ControlFlow;

use rayon::prelude::*;

use super::canonical::family_from_columns;
use super::verify::{some_member_splits, subsets_of_size, SizeMode};
use crate::setcore::Family;

/// Which subsets the search must see split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Target {
    Every,
    Sized(u32, SizeMode),
}

#[derive(Clone, Debug)]
pub(crate) struct ColumnSearch {
    pub k: u32,
    pub n: usize,
    pub target: Target,
}

impl ColumnSearch {
    /// Whether the subsets of `{0..=j}` that contain `j` are all split by
    /// the members restricted to the first `j + 1` elements.
    fn new_element_ok(&self, rows: &[u64], j: u32) -> bool {
        let top = 1u64 << j;
        match self.target {
            Target::Every => (0..top).all(|b| some_member_splits(rows, b | top)),
            Target::Sized(t, mode) => {
                let sizes = match mode {
                    SizeMode::Exactly => t..=t,
                    SizeMode::AtMost => 1..=t,
                };
                sizes.into_iter().all(|s| {
                    s > j + 1
                        || subsets_of_size(j, s - 1).all(|b| some_member_splits(rows, b | top))
                })
            }
        }
    }

    fn dfs<F>(&self, columns: &mut Vec<u32>, rows: &mut [u64], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let j = columns.len() as u32;
        if j == self.k {
            return visit(columns);
        }
        let start = columns.last().copied().unwrap_or(0);
        for c in start..1u32 << self.n {
            for (i, r) in rows.iter_mut().enumerate() {
                if c >> i & 1 == 1 {
                    *r |= 1 << j;
                }
            }
            columns.push(c);
            let flow = if self.new_element_ok(rows, j) {
                self.dfs(columns, rows, visit)
            } else {
                ControlFlow::Continue(())
            };
            columns.pop();
            for r in rows.iter_mut() {
                *r &= !(1 << j);
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Visits every admissible column multiset containing the zero column.
    ///
    /// Complementing members maps any family to one containing the zero
    /// column, so up to equivalence nothing is lost.
    pub fn for_each<F>(&self, mut visit: F)
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        if self.k == 0 {
            let _ = visit(&[]);
            return;
        }
        let mut columns = vec![0u32];
        let mut rows = vec![0u64; self.n];
        if self.new_element_ok(&rows, 0) {
            let _ = self.dfs(&mut columns, &mut rows, &mut visit);
        }
    }

    /// Parallel variant of [`for_each`](Self::for_each): splits the work on
    /// the second column and returns every leaf accepted by `keep`, sorted.
    pub fn collect_parallel<T, F>(&self, keep: F) -> Vec<T>
    where
        T: Send + Ord,
        F: Fn(&[u32]) -> Option<T> + Sync,
    {
        if self.k <= 1 {
            let mut out = Vec::new();
            self.for_each(|cols| {
                out.extend(keep(cols));
                ControlFlow::Continue(())
            });
            out.sort();
            return out;
        }
        let mut out: Vec<T> = (0..1u32 << self.n)
            .into_par_iter()
            .flat_map_iter(|second| {
                let mut found = Vec::new();
                let mut rows = vec![0u64; self.n];
                for (i, r) in rows.iter_mut().enumerate() {
                    if second >> i & 1 == 1 {
                        *r |= 0b10;
                    }
                }
                if self.new_element_ok(&rows, 0) && self.new_element_ok(&rows, 1) {
                    let mut columns = vec![0, second];
                    let _ = self.dfs(&mut columns, &mut rows, &mut |cols: &[u32]| {
                        found.extend(keep(cols));
                        ControlFlow::Continue(())
                    });
                }
                found
            })
            .collect();
        out.sort();
        out
    }

    /// First admissible family found, if any.
    pub fn find_first(&self) -> Option<Family> {
        let mut found = None;
        self.for_each(|cols| {
            found = Some(family_from_columns(self.k, self.n, cols));
            ControlFlow::Break(())
        });
        found
    }
}
