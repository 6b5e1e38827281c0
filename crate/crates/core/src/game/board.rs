use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setcore::{splits_bits, Family, SubsetMask, MAX_GROUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Split,
    Skew,
}

impl Player {
    pub fn other(self) -> Self {
        match self {
            Player::Split => Player::Skew,
            Player::Skew => Player::Split,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Split => "Split",
            Player::Skew => "Skew",
        })
    }
}

/// A board: the family Split must split, on ground set `[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GameBoard {
    family: Family,
}

impl GameBoard {
    pub fn new(family: Family) -> Self {
        Self { family }
    }

    pub fn from_lists<L, I>(k: u32, lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        Ok(Self::new(Family::from_lists(k, lists)?))
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn k(&self) -> u32 {
        self.family.k()
    }

    /// Whether Split's final claim `a` wins.
    pub fn split_wins_with(&self, a: u64) -> bool {
        self.family.sets().iter().all(|b| splits_bits(a, b.bits()))
    }
}

impl From<Family> for GameBoard {
    fn from(family: Family) -> Self {
        Self::new(family)
    }
}

/// A position of the game: who has claimed what, and who moved first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    board: GameBoard,
    split_claimed: SubsetMask,
    skew_claimed: SubsetMask,
    first: Player,
}

impl GameState {
    pub fn new(board: GameBoard, first: Player) -> Self {
        let k = board.k();
        Self {
            split_claimed: SubsetMask::empty(k).expect("board k is valid"),
            skew_claimed: SubsetMask::empty(k).expect("board k is valid"),
            board,
            first,
        }
    }

    /// A position with the given claims; checks disjointness and alternation.
    pub fn with_claims(
        board: GameBoard,
        first: Player,
        split: SubsetMask,
        skew: SubsetMask,
    ) -> Result<Self> {
        let k = board.k();
        if split.k() != k || skew.k() != k {
            return Err(Error::contract(
                "claims must live on the board's ground set",
            ));
        }
        if !split.intersection(skew).is_empty() {
            return Err(Error::contract("an element is claimed by both players"));
        }
        let (f, s) = match first {
            Player::Split => (split.len(), skew.len()),
            Player::Skew => (skew.len(), split.len()),
        };
        if f != s && f != s + 1 {
            return Err(Error::contract(
                "claims do not alternate from the first player",
            ));
        }
        Ok(Self {
            board,
            split_claimed: split,
            skew_claimed: skew,
            first,
        })
    }

    pub fn board(&self) -> &GameBoard {
        &self.board
    }

    pub fn split_claimed(&self) -> SubsetMask {
        self.split_claimed
    }

    pub fn skew_claimed(&self) -> SubsetMask {
        self.skew_claimed
    }

    pub fn first(&self) -> Player {
        self.first
    }

    pub fn claimed(&self) -> u64 {
        self.split_claimed.bits() | self.skew_claimed.bits()
    }

    pub fn is_over(&self) -> bool {
        self.split_claimed.len() + self.skew_claimed.len() == self.board.k()
    }

    /// Player to move, `None` once every element is claimed.
    pub fn to_move(&self) -> Option<Player> {
        if self.is_over() {
            None
        } else if (self.split_claimed.len() + self.skew_claimed.len()).is_multiple_of(2) {
            Some(self.first)
        } else {
            Some(self.first.other())
        }
    }

    pub fn legal_moves(&self) -> Vec<u32> {
        let claimed = self.claimed();
        (1..=self.board.k())
            .filter(|e| claimed >> (e - 1) & 1 == 0)
            .collect()
    }

    pub fn apply_move(&self, element: u32) -> Result<Self> {
        let Some(mover) = self.to_move() else {
            return Err(Error::IllegalMove("the game is over".into()));
        };
        if element == 0 || element > self.board.k() {
            return Err(Error::IllegalMove(format!(
                "element {element} is not in [1, {}]",
                self.board.k()
            )));
        }
        if self.claimed() >> (element - 1) & 1 == 1 {
            return Err(Error::IllegalMove(format!(
                "element {element} is already claimed"
            )));
        }
        let mut next = self.clone();
        match mover {
            Player::Split => next.split_claimed = next.split_claimed.with(element)?,
            Player::Skew => next.skew_claimed = next.skew_claimed.with(element)?,
        }
        Ok(next)
    }

    /// Winner once the board is full.
    pub fn outcome(&self) -> Option<Player> {
        if !self.is_over() {
            return None;
        }
        Some(if self.board.split_wins_with(self.split_claimed.bits()) {
            Player::Split
        } else {
            Player::Skew
        })
    }

    /// First member (0-indexed) that Split's claims fail to split, once the
    /// game is over.
    pub fn unsplit_witness(&self) -> Option<usize> {
        if !self.is_over() {
            return None;
        }
        let a = self.split_claimed.bits();
        self.board
            .family()
            .sets()
            .iter()
            .position(|b| !splits_bits(a, b.bits()))
    }
}

/// Maximal axis-parallel lines of an `n_1 × ... × n_d` grid, plus both main
/// diagonals when `diagonals` is set (square two-dimensional grids only).
///
/// Cells are numbered row-major from 1: in an `m × n` grid, cell `(i, j)` is
/// element `(i - 1)·n + j`.
pub fn grid_board(dims: &[u32], diagonals: bool) -> Result<GameBoard> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::contract(
            "grid dimensions must be nonempty and positive",
        ));
    }
    let k = dims
        .iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(u64::from(d)));
    let k = match k {
        Some(k) if k <= u64::from(MAX_GROUND) => k as u32,
        _ => return Err(Error::contract("grid has more than 64 cells")),
    };
    if diagonals && (dims.len() != 2 || dims[0] != dims[1]) {
        return Err(Error::contract(
            "diagonals need a square two-dimensional grid",
        ));
    }
    let d = dims.len();
    // stride[a] is the index step along axis a (last axis fastest)
    let mut stride = vec![1u64; d];
    for a in (0..d - 1).rev() {
        stride[a] = stride[a + 1] * u64::from(dims[a + 1]);
    }
    let mut lines = Vec::new();
    for axis in (0..d).rev() {
        for start in 0..u64::from(k) {
            if !(start / stride[axis]).is_multiple_of(u64::from(dims[axis])) {
                continue;
            }
            let mask =
                (0..u64::from(dims[axis])).fold(0u64, |m, t| m | 1 << (start + t * stride[axis]));
            lines.push(mask);
        }
    }
    if diagonals {
        let n = u64::from(dims[0]);
        lines.push((0..n).fold(0u64, |m, i| m | 1 << (i * n + i)));
        lines.push((0..n).fold(0u64, |m, i| m | 1 << (i * n + (n - 1 - i))));
    }
    Ok(GameBoard::new(Family::from_bits(k, &lines)?))
}

/// The board on `Z/m` whose members are the `m` cyclic windows
/// `{i, i+1, ..., i+width-1}`; residue `r` is element `r + 1`.
pub fn cyclic_board(m: u32, width: u32) -> Result<GameBoard> {
    if m == 0 || width > m {
        return Err(Error::contract("cyclic board needs 0 < m and width <= m"));
    }
    let lines: Vec<u64> = (0..m)
        .map(|i| (0..width).fold(0u64, |acc, t| acc | 1 << ((i + t) % m)))
        .collect();
    Ok(GameBoard::new(Family::from_bits(m, &lines)?))
}
