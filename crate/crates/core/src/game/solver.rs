use serde::{Deserialize, Serialize};

use super::board::{GameBoard, GameState, Player};
use crate::error::{ensure_at_most, Error, Result};
use crate::setcore::{family_from_regions, venn_decompose};

/// Most free cells the solver will search after reduction.
pub const MAX_SOLVE_CELLS: usize = 16;
/// Most board members the solver tracks.
pub const MAX_GAME_SETS: usize = 64;

/// Perfect-play result from some position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub winner: Player,
    /// Least winning move for the player to move, or the least legal move
    /// when the mover is lost; `None` once the board is full.
    pub principal: Option<u32>,
}

/// The part of a position that matters for the rest of the game.
///
/// Each free cell is recorded by the set of members containing it. Split
/// still needs between `lo[j]` and `hi[j]` of member `j`'s free cells.
#[derive(Clone, Debug)]
struct Position {
    cells: Vec<u64>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    mover: Player,
}

impl Position {
    fn from_state(state: &GameState) -> Result<(Self, Vec<u32>)> {
        let family = state.board().family();
        ensure_at_most(
            "number of board sets",
            family.len() as u64,
            MAX_GAME_SETS as u64,
        )?;
        let mover = state
            .to_move()
            .ok_or_else(|| Error::contract("the game is over"))?;
        let free = state.legal_moves();
        let cells = free
            .iter()
            .map(|&e| {
                family
                    .sets()
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(e))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        let split = state.split_claimed();
        let (lo, hi) = family
            .sets()
            .iter()
            .map(|b| {
                let size = i64::from(b.len());
                let have = i64::from(b.intersection(split).len());
                (size / 2 - have, (size + 1) / 2 - have)
            })
            .unzip();
        Ok((
            Self {
                cells,
                lo,
                hi,
                mover,
            },
            free,
        ))
    }

    /// Drops pairs of cells with the same signature; Split takes one of
    /// each pair, so every member containing it needs one fewer.
    fn reduced(&self) -> Self {
        let mut order: Vec<u64> = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        for &c in &self.cells {
            match order.iter().position(|&o| o == c) {
                Some(i) => counts[i] += 1,
                None => {
                    order.push(c);
                    counts.push(1);
                }
            }
        }
        let mut out = Self {
            cells: Vec::new(),
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            mover: self.mover,
        };
        for (&sig, &count) in order.iter().zip(&counts) {
            let pairs = (count / 2) as i64;
            for j in 0..out.lo.len() {
                if sig >> j & 1 == 1 {
                    out.lo[j] -= pairs;
                    out.hi[j] -= pairs;
                }
            }
            if count % 2 == 1 {
                out.cells.push(sig);
            }
        }
        out
    }

    fn after(&self, cell: usize) -> Self {
        let mut next = self.clone();
        let sig = next.cells.remove(cell);
        if self.mover == Player::Split {
            for j in 0..next.lo.len() {
                if sig >> j & 1 == 1 {
                    next.lo[j] -= 1;
                    next.hi[j] -= 1;
                }
            }
        }
        next.mover = self.mover.other();
        next
    }

    fn solve(&self) -> Result<Player> {
        let m = self.cells.len();
        ensure_at_most(
            "free cells after reduction",
            m as u64,
            MAX_SOLVE_CELLS as u64,
        )?;
        let members: Vec<(u32, i64, i64)> = (0..self.lo.len())
            .map(|j| {
                let mask = self
                    .cells
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c >> j & 1 == 1)
                    .fold(0u32, |acc, (i, _)| acc | 1 << i);
                (mask, self.lo[j], self.hi[j])
            })
            .collect();
        let mut pow3 = vec![1usize; m + 1];
        for i in 1..=m {
            pow3[i] = pow3[i - 1] * 3;
        }
        let mut search = Search {
            members,
            full: if m == 32 { u32::MAX } else { (1u32 << m) - 1 },
            first: self.mover,
            pow3,
            memo: vec![0; 3usize.pow(m as u32)],
        };
        Ok(search.run(0, 0, 0))
    }
}

struct Search {
    members: Vec<(u32, i64, i64)>,
    full: u32,
    first: Player,
    pow3: Vec<usize>,
    /// 0 unknown, 1 Split wins, 2 Skew wins.
    memo: Vec<u8>,
}

impl Search {
    /// Decided already: Skew once some member cannot land in its window,
    /// Split once every member must.
    fn settled(&self, split: u32, free: u32) -> Option<Player> {
        let mut forced = true;
        for &(mask, lo, hi) in &self.members {
            let s = i64::from((split & mask).count_ones());
            let u = i64::from((free & mask).count_ones());
            if s > hi || s + u < lo {
                return Some(Player::Skew);
            }
            if s < lo || s + u > hi {
                forced = false;
            }
        }
        forced.then_some(Player::Split)
    }

    fn run(&mut self, split: u32, skew: u32, idx: usize) -> Player {
        let free = self.full & !(split | skew);
        if let Some(w) = self.settled(split, free) {
            return w;
        }
        match self.memo[idx] {
            1 => return Player::Split,
            2 => return Player::Skew,
            _ => {}
        }
        let mover = if (split | skew).count_ones().is_multiple_of(2) {
            self.first
        } else {
            self.first.other()
        };
        let mut result = mover.other();
        let mut rest = free;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let bit = 1u32 << i;
            let w = match mover {
                Player::Split => self.run(split | bit, skew, idx + self.pow3[i]),
                Player::Skew => self.run(split, skew | bit, idx + 2 * self.pow3[i]),
            };
            if w == mover {
                result = mover;
                break;
            }
        }
        self.memo[idx] = if result == Player::Split { 1 } else { 2 };
        result
    }
}

/// Replaces every Venn region by its parity: 0 or 1 point.
pub fn reduce_board(board: &GameBoard) -> Result<GameBoard> {
    let venn = venn_decompose(board.family())?;
    Ok(GameBoard::new(family_from_regions(&venn.regions.parity())?))
}

/// Winner of `(board, first)` under perfect play, with the opening move.
pub fn solve_game(board: &GameBoard, first: Player) -> Result<Solution> {
    solve_state(&GameState::new(board.clone(), first))
}

/// Winner from `state` under perfect play, with the mover's best move.
pub fn solve_state(state: &GameState) -> Result<Solution> {
    if state.is_over() {
        return Ok(Solution {
            winner: state.outcome().expect("finished game has an outcome"),
            principal: None,
        });
    }
    let (pos, free) = Position::from_state(state)?;
    let winner = pos.reduced().solve()?;
    let principal = if winner == pos.mover {
        winning_move(&pos, &free)?
    } else {
        free[0]
    };
    Ok(Solution {
        winner,
        principal: Some(principal),
    })
}

/// Cells with the same signature are interchangeable, so only the least
/// element of each is tried.
fn winning_move(pos: &Position, free: &[u32]) -> Result<u32> {
    let mut seen: Vec<u64> = Vec::new();
    for (i, &sig) in pos.cells.iter().enumerate() {
        if seen.contains(&sig) {
            continue;
        }
        seen.push(sig);
        if pos.after(i).reduced().solve()? == pos.mover {
            return Ok(free[i]);
        }
    }
    Err(Error::contract("winning position without a winning move"))
}

/// A move keeping the mover's win if there is one, else the least legal
/// move.
pub fn best_move(state: &GameState) -> Result<u32> {
    if state.is_over() {
        return Err(Error::contract("the game is over"));
    }
    Ok(solve_state(state)?.principal.expect("game not over"))
}
