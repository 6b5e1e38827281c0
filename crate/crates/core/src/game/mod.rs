//! The splitting game: players alternately claim elements of `[k]`; Split
//! wins when her claims split every member of the board.

mod board;
mod census;
mod pairing;
mod solver;

pub use board::{cyclic_board, grid_board, GameBoard, GameState, Player};
pub use census::{census, Census, CensusEntry, MAX_CENSUS_SETS};
pub use pairing::{find_pairing_strategy, is_valid_pairing, Pairing, MAX_PAIRING_K};
pub use solver::{
    best_move, reduce_board, solve_game, solve_state, Solution, MAX_GAME_SETS, MAX_SOLVE_CELLS,
};
