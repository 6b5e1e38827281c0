use serde::{Deserialize, Serialize};

use super::board::{GameBoard, Player};
use crate::error::{ensure_at_most, Error, Result};
use crate::setcore::splits_bits;

/// Largest ground set searched by [`find_pairing_strategy`].
pub const MAX_PAIRING_K: u32 = 13;

/// Disjoint pairs such that every claim holding exactly one element of each
/// pair (and anything else) decides the game for `player`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pairing {
    pub player: Player,
    pub pairs: Vec<[u32; 2]>,
}

fn pair_mask(p: [u32; 2]) -> u64 {
    1u64 << (p[0] - 1) | 1u64 << (p[1] - 1)
}

/// Whether `pairs` (as bit-mask pairs) is a pairing strategy for `player`.
/// Only elements of `covered` matter; the rest lie in no member.
fn valid(members: &[u64], covered: u64, pairs: &[(u64, u64)], player: Player) -> bool {
    let paired = pairs.iter().fold(0u64, |acc, &(a, b)| acc | a | b);
    let loose = covered & !paired;
    match player {
        Player::Split => members.iter().all(|&b| {
            let size = b.count_ones();
            let (lo, hi) = (size / 2, size.div_ceil(2));
            let mut fixed = 0;
            let mut free = (loose & b).count_ones();
            for &(x, y) in pairs {
                match (x & b != 0, y & b != 0) {
                    (true, true) => fixed += 1,
                    (false, false) => {}
                    _ => free += 1,
                }
            }
            lo <= fixed && fixed + free <= hi
        }),
        Player::Skew => {
            let loose_bits: Vec<u64> = (0..64)
                .map(|i| 1u64 << i)
                .filter(|b| loose & b != 0)
                .collect();
            for pick in 0..1u64 << pairs.len() {
                let base = pairs.iter().enumerate().fold(0u64, |acc, (i, &(x, y))| {
                    acc | if pick >> i & 1 == 1 { y } else { x }
                });
                for extra in 0..1u64 << loose_bits.len() {
                    let a = loose_bits.iter().enumerate().fold(base, |acc, (i, &b)| {
                        if extra >> i & 1 == 1 {
                            acc | b
                        } else {
                            acc
                        }
                    });
                    if members.iter().all(|&b| splits_bits(a, b)) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Checks that `pairing` is well formed on the board and is a pairing
/// strategy for its player.
pub fn is_valid_pairing(board: &GameBoard, pairing: &Pairing) -> Result<bool> {
    let k = board.k();
    ensure_at_most("ground set size", u64::from(k), u64::from(MAX_PAIRING_K))?;
    let mut used = 0u64;
    for &p in &pairing.pairs {
        if p.iter().any(|&e| e == 0 || e > k) || p[0] == p[1] {
            return Err(Error::contract(format!(
                "pair {p:?} is not two elements of [{k}]"
            )));
        }
        let m = pair_mask(p);
        if used & m != 0 {
            return Err(Error::contract("pairs overlap"));
        }
        used |= m;
    }
    let members = board.family().bits();
    let covered = members.iter().fold(0, |acc, &b| acc | b);
    let pairs: Vec<(u64, u64)> = pairing
        .pairs
        .iter()
        .map(|p| (1u64 << (p[0] - 1), 1u64 << (p[1] - 1)))
        .collect();
    Ok(valid(&members, covered, &pairs, pairing.player))
}

struct MatchingSearch<'a> {
    members: &'a [u64],
    covered: u64,
    player: Player,
    elements: Vec<u32>,
    pairs: Vec<(u32, u32)>,
}

impl MatchingSearch<'_> {
    fn as_masks(&self, pairs: &[(u32, u32)]) -> Vec<(u64, u64)> {
        pairs
            .iter()
            .map(|&(x, y)| (1u64 << (x - 1), 1u64 << (y - 1)))
            .collect()
    }

    /// Maximal matchings of the covered elements: every element is paired
    /// except at most one when their number is odd.
    fn run(&mut self, unmatched: u64, skipped: bool) -> bool {
        if unmatched == 0 {
            return valid(
                self.members,
                self.covered,
                &self.as_masks(&self.pairs),
                self.player,
            );
        }
        let x = unmatched.trailing_zeros();
        let rest = unmatched & !(1u64 << x);
        let mut others = rest;
        while others != 0 {
            let y = others.trailing_zeros();
            others &= others - 1;
            self.pairs.push((x + 1, y + 1));
            if self.run(rest & !(1u64 << y), skipped) {
                return true;
            }
            self.pairs.pop();
        }
        let odd = self.elements.len() % 2 == 1;
        odd && !skipped && self.run(rest, true)
    }
}

/// Searches for a pairing strategy for `player`.
///
/// A subset of a pairing strategy's pairs is never weaker to extend, so only
/// maximal matchings of the elements lying in some member are tried; the
/// first valid one is then thinned greedily to a minimal pairing.
pub fn find_pairing_strategy(board: &GameBoard, player: Player) -> Result<Option<Pairing>> {
    let k = board.k();
    ensure_at_most("ground set size", u64::from(k), u64::from(MAX_PAIRING_K))?;
    let members = board.family().bits();
    let covered = members.iter().fold(0, |acc, &b| acc | b);
    let mut search = MatchingSearch {
        members: &members,
        covered,
        player,
        elements: (1..=k).filter(|e| covered >> (e - 1) & 1 == 1).collect(),
        pairs: Vec::new(),
    };
    if !search.run(covered, false) {
        return Ok(None);
    }
    let mut pairs = search.pairs.clone();
    let mut i = 0;
    while i < pairs.len() {
        let mut fewer = pairs.clone();
        fewer.remove(i);
        if valid(&members, covered, &search.as_masks(&fewer), player) {
            pairs = fewer;
        } else {
            i += 1;
        }
    }
    Ok(Some(Pairing {
        player,
        pairs: pairs.into_iter().map(|(x, y)| [x, y]).collect(),
    }))
}
