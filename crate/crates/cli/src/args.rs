use std::net::IpAddr;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use splitting_core::game::Player;

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "splitting",
    version,
    about = "Splitting families, splitter counts and the splitting game"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Allow searches past the default size limits.
    #[arg(long, global = true)]
    pub long: bool,
    /// Worker threads for parallel searches.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a family splits every subset of [k].
    VerifyFamily {
        #[command(flatten)]
        family: FamilyInput,
        /// Use the standard family on [k].
        #[arg(long, requires = "k", conflicts_with_all = ["sets", "sets_file"])]
        standard: bool,
        /// Also check splitting of subsets of this size.
        #[arg(long)]
        t: Option<u32>,
        /// With --t, check every size up to t instead of exactly t.
        #[arg(long, requires = "t")]
        at_most: bool,
    },
    /// List the minimum-size splitting families on [k] up to equivalence.
    EnumerateMinimal {
        #[arg(long)]
        k: u32,
    },
    /// Hamming representation of a family (the standard family if only --k is given).
    Hamming {
        #[command(flatten)]
        family: FamilyInput,
    },
    /// Count the sets splitting every member of a family.
    CountSplitters {
        #[command(flatten)]
        family: FamilyInput,
        /// Venn region sizes, outside region first, e.g. `0,1,1,1`.
        #[arg(long, value_name = "SIZES", conflicts_with_all = ["sets", "sets_file", "two"])]
        regions: Option<String>,
        /// Two-set arrangement `a1,b,a2,d`.
        #[arg(long, value_name = "A1,B,A2,D", conflicts_with_all = ["sets", "sets_file"])]
        two: Option<String>,
        /// With --two, also print the asymptotic estimate.
        #[arg(long, requires = "two")]
        approx: bool,
    },
    /// Arrangement of 1, 2 or 3 sets on [k] with the fewest splitters.
    MinArrangement {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        sets: u8,
        #[arg(long)]
        k: u64,
    },
    /// Exhaustively check the two-set point-moving inequalities on [k].
    VerifyLemmas {
        #[arg(long)]
        k: u64,
    },
    /// Solve the splitting game under perfect play.
    SolveGame {
        #[command(flatten)]
        board: BoardInput,
        /// First mover; both are solved if omitted.
        #[arg(long, value_enum)]
        first: Option<Side>,
    },
    /// Search for a pairing strategy.
    Pairing {
        #[command(flatten)]
        board: BoardInput,
        /// Player to search for; both if omitted.
        #[arg(long, value_enum)]
        player: Option<Side>,
    },
    /// Solve every board on 2 or 3 sets with at most one point per region.
    Census {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        sets: u8,
    },
    /// The m×n grid game whose sets are the rows and columns.
    Tictactoe {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Add the two diagonals (square grids only).
        #[arg(long)]
        diagonals: bool,
    },
    /// Run the HTTP game service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Append one JSON line per game event to this file.
        #[arg(long, value_name = "PATH")]
        event_log: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, Default, Args)]
pub struct FamilyInput {
    /// Ground set size (defaults to the largest listed element).
    #[arg(long)]
    pub k: Option<u32>,
    /// Members as comma-separated elements, members separated by `;`, e.g. `1,2;2,3`.
    #[arg(long, value_name = "LISTS", conflicts_with = "sets_file")]
    pub sets: Option<String>,
    /// JSON file holding `{"k": .., "sets": [[..], ..]}`.
    #[arg(long, value_name = "PATH")]
    pub sets_file: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, Args)]
pub struct BoardInput {
    #[command(flatten)]
    pub family: FamilyInput,
    /// Grid board `MxN` (rows and columns as sets).
    #[arg(long, value_name = "MxN", conflicts_with_all = ["sets", "sets_file"])]
    pub grid: Option<String>,
    /// With --grid, add the two diagonals.
    #[arg(long, requires = "grid")]
    pub diagonals: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Split,
    Skew,
}

impl From<Side> for Player {
    fn from(s: Side) -> Self {
        match s {
            Side::Split => Player::Split,
            Side::Skew => Player::Skew,
        }
    }
}
