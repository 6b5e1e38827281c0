//! The 30 nontrivial three-set board types, with the pairings drawn for
//! them, checked against the solver and the census.
//!
//! Sets are T (member 1), L (member 2), R (member 3). Region names:
//! `a1 = T only`, `a2 = L only`, `a3 = R only`, `b1 = L∩R`, `b2 = T∩R`,
//! `b3 = T∩L`, `c = T∩L∩R`.

use std::collections::BTreeSet;

use splitting_core::game::{
    census, find_pairing_strategy, is_valid_pairing, GameBoard, Pairing, Player,
};
use splitting_core::setcore::{family_from_regions, venn_decompose, RegionVector};

struct Panel {
    occupied: &'static [&'static str],
    pairs: &'static [(&'static str, &'static str)],
}

const SPLIT_PANELS: &[Panel] = &[
    Panel {
        occupied: &["a1", "a2", "a3"],
        pairs: &[],
    },
    Panel {
        occupied: &["a1", "a2", "b2"],
        pairs: &[("a1", "b2")],
    },
    Panel {
        occupied: &["a1", "b2", "c"],
        pairs: &[("c", "b2")],
    },
    Panel {
        occupied: &["a1", "b2", "b3"],
        pairs: &[],
    },
    Panel {
        occupied: &["b1", "b2", "b3", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["a3", "b1", "b3", "c"],
        pairs: &[("c", "b3")],
    },
    Panel {
        occupied: &["a2", "a3", "b1", "b3"],
        pairs: &[("a3", "b1")],
    },
    Panel {
        occupied: &["a2", "a3", "b1", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["a2", "a3", "b2", "b3", "c"],
        pairs: &[("a2", "b3"), ("c", "b2")],
    },
    Panel {
        occupied: &["a1", "a2", "a3", "b1", "b2", "b3"],
        pairs: &[("a1", "b3"), ("a2", "b1"), ("a3", "b2")],
    },
];

/// The first twelve carry no drawing: Skew wins on L and R alone.
const SKEW_PANELS: &[Panel] = &[
    Panel {
        occupied: &["b2", "b3", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["a3", "b3", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["a2", "a3", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["b1", "b2", "b3"],
        pairs: &[],
    },
    Panel {
        occupied: &["a3", "b1", "b3"],
        pairs: &[],
    },
    Panel {
        occupied: &["a2", "a3", "b1"],
        pairs: &[],
    },
    Panel {
        occupied: &["a1", "b2", "b3", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["a1", "a3", "b3", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["a1", "a2", "a3", "c"],
        pairs: &[],
    },
    Panel {
        occupied: &["a1", "b1", "b2", "b3"],
        pairs: &[],
    },
    Panel {
        occupied: &["a1", "a3", "b1", "b3"],
        pairs: &[],
    },
    Panel {
        occupied: &["a1", "a2", "a3", "b1"],
        pairs: &[],
    },
    Panel {
        occupied: &["a3", "b1", "b2", "b3", "c"],
        pairs: &[("a3", "b3"), ("b1", "b2")],
    },
    Panel {
        occupied: &["a2", "a3", "b1", "b3", "c"],
        pairs: &[("a2", "c"), ("a3", "b3")],
    },
    Panel {
        occupied: &["a2", "a3", "b1", "b2", "b3"],
        pairs: &[("a3", "b3"), ("a2", "b2")],
    },
    Panel {
        occupied: &["a1", "a2", "a3", "b3", "c"],
        pairs: &[("a3", "b3"), ("a2", "a1")],
    },
    Panel {
        occupied: &["a1", "a2", "a3", "b2", "b3"],
        pairs: &[("a2", "b2"), ("a3", "a1")],
    },
    Panel {
        occupied: &["a2", "a3", "b1", "b2", "b3", "c"],
        pairs: &[("a2", "c"), ("b1", "b2"), ("a3", "b3")],
    },
    Panel {
        occupied: &["a1", "a2", "a3", "b2", "b3", "c"],
        pairs: &[("a1", "c"), ("a2", "b2"), ("a3", "b3")],
    },
    Panel {
        occupied: &["a1", "a2", "a3", "b1", "b2", "b3", "c"],
        pairs: &[("a2", "a3"), ("b2", "b3"), ("a1", "b1")],
    },
];

fn region(name: &str) -> usize {
    match name {
        "a1" => 0b001,
        "a2" => 0b010,
        "a3" => 0b100,
        "b1" => 0b110,
        "b2" => 0b101,
        "b3" => 0b011,
        "c" => 0b111,
        _ => panic!("unknown region {name}"),
    }
}

struct Built {
    regions: RegionVector,
    board: GameBoard,
    pairing: Pairing,
}

fn build(panel: &Panel, player: Player) -> Built {
    let mut sizes = vec![0u64; 8];
    for r in panel.occupied {
        sizes[region(r)] = 1;
    }
    let regions = RegionVector::new(3, sizes).unwrap();
    let family = family_from_regions(&regions).unwrap();
    let venn = venn_decompose(&family).unwrap();
    let element = |name: &str| venn.masks[region(name)].to_vec()[0];
    let pairing = Pairing {
        player,
        pairs: panel
            .pairs
            .iter()
            .map(|&(x, y)| [element(x), element(y)])
            .collect(),
    };
    Built {
        regions,
        board: GameBoard::new(family),
        pairing,
    }
}

fn panels() -> impl Iterator<Item = (Built, Player)> {
    SPLIT_PANELS
        .iter()
        .map(|p| (build(p, Player::Split), Player::Split))
        .chain(
            SKEW_PANELS
                .iter()
                .map(|p| (build(p, Player::Skew), Player::Skew)),
        )
}

#[test]
fn panel_types_are_distinct_and_cover_every_board() {
    let mut types: BTreeSet<RegionVector> = panels()
        .map(|(b, _)| b.regions.symmetry_canonical())
        .collect();
    assert_eq!(types.len(), 30);
    let trivial: BTreeSet<RegionVector> = census(3)
        .unwrap()
        .boards
        .iter()
        .filter(|e| e.regions.total() <= 2)
        .map(|e| e.regions.symmetry_canonical())
        .collect();
    assert_eq!(trivial.len(), 10);
    types.extend(trivial);
    assert_eq!(types.len(), 40);
    for e in census(3).unwrap().boards {
        assert!(
            types.contains(&e.regions.symmetry_canonical()),
            "{}",
            e.regions
        );
    }
}

#[test]
fn census_agrees_with_every_panel() {
    let c = census(3).unwrap();
    assert_eq!((c.split_wins, c.total), (65, 128));
    for (built, winner) in panels() {
        let canon = built.regions.symmetry_canonical();
        for e in c
            .boards
            .iter()
            .filter(|e| e.regions.symmetry_canonical() == canon)
        {
            assert_eq!(e.winner, winner, "{}", e.regions);
        }
    }
    for e in c.boards.iter().filter(|e| e.regions.total() <= 2) {
        assert_eq!(e.winner, Player::Split);
    }
}

/// Two panels leave their last two points unpaired; those points form an
/// implicit pair.
#[test]
fn drawn_pairings_are_strategies() {
    let mut completed = Vec::new();
    for (built, _) in panels().filter(|(b, _)| !b.pairing.pairs.is_empty()) {
        if is_valid_pairing(&built.board, &built.pairing).unwrap() {
            continue;
        }
        let used: Vec<u32> = built.pairing.pairs.iter().flatten().copied().collect();
        let rest: Vec<u32> = (1..=built.board.k())
            .filter(|e| !used.contains(e))
            .collect();
        assert_eq!(rest.len(), 2, "{}", built.regions);
        let mut pairing = built.pairing.clone();
        pairing.pairs.push([rest[0], rest[1]]);
        assert!(
            is_valid_pairing(&built.board, &pairing).unwrap(),
            "{}",
            built.regions
        );
        completed.push(built.regions.to_string());
    }
    assert_eq!(completed, ["[0,0,0,1,1,0,1,1]", "[0,0,1,1,1,0,1,0]"]);
}

#[test]
fn every_panel_has_a_pairing_for_its_winner() {
    for (built, winner) in panels() {
        let p = find_pairing_strategy(&built.board, winner).unwrap();
        assert!(p.is_some(), "{}", built.regions);
        assert_eq!(
            find_pairing_strategy(&built.board, winner.other()).unwrap(),
            None
        );
    }
}

#[test]
fn two_set_types() {
    let c = census(2).unwrap();
    assert_eq!((c.split_wins, c.total), (7, 8));
    let types: BTreeSet<RegionVector> = c
        .boards
        .iter()
        .map(|e| e.regions.symmetry_canonical())
        .collect();
    assert_eq!(types.len(), 6);
}
