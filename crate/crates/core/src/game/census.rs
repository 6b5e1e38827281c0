use serde::Serialize;

use super::board::{GameBoard, Player};
use super::solver::solve_game;
use crate::error::{ensure_at_most, Error, Result};
use crate::setcore::{family_from_regions, Family, RegionVector};

/// Most sets [`census`] enumerates.
pub const MAX_CENSUS_SETS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub regions: RegionVector,
    pub board: Family,
    pub winner: Player,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    pub n: usize,
    pub total: usize,
    pub split_wins: usize,
    pub boards: Vec<CensusEntry>,
}

/// Solves every `n`-set board with at most one point per nonempty Venn
/// region and nothing outside, for both first movers.
///
/// Fails if some board's winner depends on who moves first.
pub fn census(n: usize) -> Result<Census> {
    ensure_at_most("number of sets", n as u64, MAX_CENSUS_SETS as u64)?;
    let inner = (1usize << n) - 1;
    let mut boards = Vec::with_capacity(1 << inner);
    for occupied in 0..1usize << inner {
        let sizes: Vec<u64> = (0..1usize << n)
            .map(|i| {
                if i > 0 && occupied >> (i - 1) & 1 == 1 {
                    1
                } else {
                    0
                }
            })
            .collect();
        let regions = RegionVector::new(n, sizes)?;
        let board = GameBoard::new(family_from_regions(&regions)?);
        let a = solve_game(&board, Player::Split)?.winner;
        let b = solve_game(&board, Player::Skew)?.winner;
        if a != b {
            return Err(Error::contract(format!(
                "winner of {regions} depends on who moves first"
            )));
        }
        boards.push(CensusEntry {
            regions,
            board: board.family().clone(),
            winner: a,
        });
    }
    Ok(Census {
        n,
        total: boards.len(),
        split_wins: boards.iter().filter(|e| e.winner == Player::Split).count(),
        boards,
    })
}
