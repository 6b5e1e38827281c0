use std::fs;

use anyhow::{bail, Context, Result};
use splitting_core::families::standard_family;
use splitting_core::game::{grid_board, GameBoard};
use splitting_core::{Arrangement2, Family, RegionVector};

use crate::args::{BoardInput, FamilyInput};

/// Parses `1,2;2,3` into element lists. Empty members are written as
/// nothing between separators.
pub fn parse_lists(s: &str) -> Result<Vec<Vec<u32>>> {
    s.split(';')
        .map(|member| {
            member
                .split(',')
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .map(|e| {
                    e.parse::<u32>()
                        .with_context(|| format!("bad element `{e}`"))
                })
                .collect()
        })
        .collect()
}

fn parse_numbers(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|e| {
            e.trim()
                .parse::<u64>()
                .with_context(|| format!("bad number `{e}`"))
        })
        .collect()
}

pub fn parse_regions(s: &str) -> Result<RegionVector> {
    let sizes = parse_numbers(s)?;
    let len = sizes.len();
    if !len.is_power_of_two() {
        bail!("{len} region sizes given; need a power of two");
    }
    Ok(RegionVector::new(len.trailing_zeros() as usize, sizes)?)
}

pub fn parse_arrangement(s: &str) -> Result<Arrangement2> {
    match parse_numbers(s)?[..] {
        [a1, b, a2, d] => Ok(Arrangement2::new(a1, b, a2, d)),
        _ => bail!("expected four sizes a1,b,a2,d"),
    }
}

/// The family given by `--sets` or `--sets-file`, if any.
pub fn explicit_family(input: &FamilyInput) -> Result<Option<Family>> {
    if let Some(path) = &input.sets_file {
        let raw =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let family: Family =
            serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(k) = input.k {
            if k != family.k() {
                bail!(
                    "--k {k} disagrees with k = {} in {}",
                    family.k(),
                    path.display()
                );
            }
        }
        return Ok(Some(family));
    }
    if let Some(s) = &input.sets {
        let lists = parse_lists(s)?;
        let largest = lists.iter().flatten().copied().max().unwrap_or(0);
        let k = input.k.unwrap_or(largest);
        return Ok(Some(Family::from_lists(k, lists)?));
    }
    Ok(None)
}

/// An explicit family, or the standard family on `--k`.
pub fn family_or_standard(input: &FamilyInput) -> Result<Family> {
    match (explicit_family(input)?, input.k) {
        (Some(f), _) => Ok(f),
        (None, Some(k)) => Ok(standard_family(k)?),
        (None, None) => bail!("give --sets, --sets-file or --k"),
    }
}

pub fn board(input: &BoardInput) -> Result<GameBoard> {
    if let Some(grid) = &input.grid {
        let dims = grid
            .split(['x', 'X', '×'])
            .map(|d| {
                d.trim()
                    .parse::<u32>()
                    .with_context(|| format!("bad grid dimension `{d}`"))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(grid_board(&dims, input.diagonals)?);
    }
    match explicit_family(&input.family)? {
        Some(f) => Ok(GameBoard::new(f)),
        None => bail!("give --sets, --sets-file or --grid"),
    }
}
