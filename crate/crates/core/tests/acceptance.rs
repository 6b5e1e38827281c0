//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p splitting-core --test acceptance`; pass `--long`
//! after `--` (or set `SPLITTING_LONG=1`) to extend the three-set table to
//! k = 20.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use splitting_core::counting::{
    approx_splitters_two_set, check_three_set_recurrence, count_splitters, count_splitters_regions,
    franel, min_three_set_up_to, min_two_set, splitters_one_set, splitters_two_set,
    verify_point_moving_lemmas, BigCount, LONG_THREE_SET_K,
};
use splitting_core::families::{
    are_equivalent, at_most_four_splitting_lower_bound, enumerate_minimal_splitting_families,
    find_forbidden_y, find_splitting_family, four_splitting_lower_bound, hamming_representation,
    is_splitting_family, min_t_splitting_size, standard_family, HammingRep, SizeMode,
};
use splitting_core::game::{
    census, cyclic_board, find_pairing_strategy, grid_board, is_valid_pairing, reduce_board,
    solve_game, GameBoard, Pairing, Player,
};
use splitting_core::setcore::family_from_regions;
use splitting_core::{Arrangement2, Family, RegionVector};

/// Relative tolerance for comparing the approximation's errors between sizes.
const APPROX_MONOTONE_SLACK: f64 = 1e-12;

const THREE_SET_TABLE: [(u64, u64); 15] = [
    (6, 4),
    (7, 6),
    (8, 12),
    (9, 18),
    (10, 36),
    (11, 54),
    (12, 108),
    (13, 180),
    (14, 360),
    (15, 600),
    (16, 1200),
    (17, 2000),
    (18, 4000),
    (19, 7000),
    (20, 14000),
];

const BOUNDS: &str = "t-splitting-bounds";

/// Criteria that cannot hold as stated; they still print FAIL but do not
/// fail the run.
const KNOWN_FAILURES: [(&str, &str); 1] = [(
    BOUNDS,
    "the <=4-splitting bound's proof needs at least four sets and fails at k = 6",
)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Independent splitter count: every subset of `[k]` against every member.
fn brute_splitters(k: u32, members: &[u64]) -> u64 {
    (0u64..1 << k)
        .filter(|&a| {
            members.iter().all(|&b| {
                let inside = i64::from((a & b).count_ones());
                (2 * inside - i64::from(b.count_ones())).abs() <= 1
            })
        })
        .count() as u64
}

/// All region vectors on `n` sets with total at most `max_total`.
fn region_vectors(n: usize, max_total: u64) -> Vec<RegionVector> {
    let len = 1usize << n;
    let mut out = Vec::new();
    let mut sizes = vec![0u64; len];
    fn go(i: usize, left: u64, sizes: &mut Vec<u64>, n: usize, out: &mut Vec<RegionVector>) {
        if i == sizes.len() {
            out.push(RegionVector::new(n, sizes.clone()).unwrap());
            return;
        }
        for s in 0..=left {
            sizes[i] = s;
            go(i + 1, left - s, sizes, n, out);
        }
        sizes[i] = 0;
    }
    go(0, max_total, &mut sizes, n, &mut out);
    out
}

fn exceptional_eight() -> Family {
    Family::from_lists(
        8,
        [
            vec![1, 2, 3, 4],
            vec![1, 2, 5, 6],
            vec![3, 4, 5, 6],
            vec![1, 3, 5, 7],
        ],
    )
    .unwrap()
}

fn minimal_size() -> Outcome {
    for k in 1..=10u32 {
        let half = k.div_ceil(2) as usize;
        check!(
            ok(find_splitting_family(k, half - 1))?.is_none(),
            "k={k}: family of size {}",
            half - 1
        );
        check!(
            ok(is_splitting_family(&ok(standard_family(k))?))?,
            "k={k}: standard family fails"
        );
    }
    Ok("k = 1..10".into())
}

fn minimal_census() -> Outcome {
    let mut summary = Vec::new();
    for k in 1..=10u32 {
        let classes = ok(enumerate_minimal_splitting_families(k))?;
        check!(
            classes.iter().all(|c| c.uniform),
            "k={k}: non-uniform class"
        );
        let expected = match k {
            2 | 4 | 6 | 10 => Some(1),
            8 => Some(2),
            _ => None,
        };
        if let Some(e) = expected {
            check!(
                classes.len() == e,
                "k={k}: {} classes, expected {e}",
                classes.len()
            );
        }
        if k == 8 {
            let exc = exceptional_eight();
            let mut hit = false;
            for c in &classes {
                hit |= ok(are_equivalent(&c.canonical, &exc))?;
            }
            check!(hit, "k=8: exceptional family missing");
        }
        summary.push(format!("{k}:{}", classes.len()));
    }
    Ok(format!("classes {}", summary.join(" ")))
}

fn hamming_structure() -> Outcome {
    let std8 = ok(hamming_representation(&ok(standard_family(8))?))?;
    check!(
        std8.is_cycle() && std8.vertices().len() == 8,
        "standard(8) is not an 8-cycle"
    );
    let exc = ok(hamming_representation(&exceptional_eight()))?;
    check!(!exc.is_connected(), "exceptional family is connected");
    check!(ok(find_forbidden_y(&std8))?.is_none(), "Y in standard(8)");
    check!(
        ok(find_forbidden_y(&exc))?.is_none(),
        "Y in the exceptional family"
    );
    // every vertex set of the 4-cube with at most 6 points and a degree >= 3 vertex
    let mut cases = 0;
    for set in 1u32..1 << 16 {
        if set.count_ones() > 6 {
            continue;
        }
        let columns: Vec<u32> = (0..16).filter(|v| set >> v & 1 == 1).collect();
        let rep = HammingRep::new(4, columns);
        if rep.vertices().iter().any(|&v| rep.degree(v) >= 3) {
            cases += 1;
            check!(
                ok(find_forbidden_y(&rep))?.is_some(),
                "no Y witness for {:?}",
                rep.columns()
            );
        }
    }
    Ok(format!("{cases} degree-3 configurations witnessed"))
}

/// The <=4-splitting bound fails at k = 6: `{1,2,3}, {1,2,4}, {1,3,5}` is
/// <=4-splitting with three members, below `log2(6) + 3 - log2(5) ≈ 3.26`.
fn bounds() -> Outcome {
    let mut sizes = Vec::new();
    let mut violations = Vec::new();
    for k in 5..=10u32 {
        let at_most = ok(min_t_splitting_size(k, 4, SizeMode::AtMost))?;
        let bound = at_most_four_splitting_lower_bound(k);
        if (at_most.size as f64) < bound {
            violations.push(format!(
                "k={k}: <=4-splitting {:?} has {} members, bound {bound:.3}",
                at_most.witness.to_lists(),
                at_most.size
            ));
        }
        let mut entry = format!("{k}:{}", at_most.size);
        if k >= 6 {
            let exact = ok(min_t_splitting_size(k, 4, SizeMode::Exactly))?.size;
            if (exact as f64) < four_splitting_lower_bound(k) {
                violations.push(format!("k={k}: 4-splitting size {exact} below bound"));
            }
            entry = format!("{entry}/{exact}");
        }
        sizes.push(entry);
    }
    check!(violations.is_empty(), "{}", violations.join("; "));
    Ok(format!("k:<=4/=4 sizes {}", sizes.join(" ")))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0u64;
    for k in 0..=12u64 {
        for b in 0..=k {
            let family = Family::from_bits(k as u32, &[(1u64 << b) - 1]).unwrap();
            let brute = brute_splitters(k as u32, &family.bits());
            check!(
                ok(splitters_one_set(b, k))? == BigCount::from(brute),
                "one set b={b} k={k}"
            );
            check!(
                ok(count_splitters(&family))? == BigCount::from(brute),
                "count_splitters b={b} k={k}"
            );
            checked += 1;
        }
        for a in Arrangement2::all_with_total(k) {
            let family = ok(family_from_regions(&a.to_regions()))?;
            let brute = BigCount::from(brute_splitters(k as u32, &family.bits()));
            check!(splitters_two_set(a) == brute, "two sets {a:?}");
            check!(
                ok(count_splitters(&family))? == brute,
                "count_splitters {a:?}"
            );
            checked += 1;
        }
    }
    for (n, max_total) in [(1, 12), (2, 12), (3, 12), (4, 8)] {
        for r in region_vectors(n, max_total) {
            let family = ok(family_from_regions(&r))?;
            let brute = BigCount::from(brute_splitters(family.k(), &family.bits()));
            check!(count_splitters_regions(&r) == brute, "regions {r}");
            checked += 1;
        }
    }
    Ok(format!("{checked} inputs, exact"))
}

fn two_set_minimum() -> Outcome {
    for k in 3..=15 {
        let r = ok(min_two_set(k))?;
        check!(
            r.matches_pattern == Some(true),
            "k={k}: minimizers {:?}",
            r.all_minimizers
        );
    }
    for m in 0..=12 {
        check!(
            splitters_two_set(Arrangement2::new(m, m, m, 0)) == franel(m),
            "franel m={m}"
        );
    }
    Ok("k = 3..15, franel m = 0..12".into())
}

fn three_set_table(long: bool) -> Outcome {
    let max_k = if long { LONG_THREE_SET_K } else { 16 };
    let mut counts = BTreeMap::new();
    for &(k, expected) in THREE_SET_TABLE.iter().filter(|(k, _)| *k <= max_k) {
        let r = ok(min_three_set_up_to(k, max_k))?;
        check!(
            r.count == BigCount::from(expected),
            "k={k}: {} != {expected}",
            r.count
        );
        check!(
            r.matches_pattern == Some(true),
            "k={k}: no minimizer has the pattern shape"
        );
        counts.insert(k, r.count);
    }
    check!(ok(check_three_set_recurrence(&counts))?, "recurrence fails");
    Ok(format!("k = 6..{max_k}"))
}

fn lemmas() -> Outcome {
    let mut checks = 0;
    for k in 0..=14 {
        let report = ok(verify_point_moving_lemmas(k))?;
        check!(report.is_clean(), "k={k}: {:?}", report.violations.first());
        checks += report.checked.iter().map(|(_, c)| c).sum::<u64>();
    }
    Ok(format!("{checks} instances, k = 0..14"))
}

fn approximation() -> Outcome {
    let mut last = f64::INFINITY;
    let mut errors = Vec::new();
    for m in [4u64, 8, 12, 16, 20] {
        let a = Arrangement2::new(m, m, m, 0);
        let exact = splitters_two_set(a);
        check!(exact == franel(m), "m={m}: exact baseline disagrees");
        let exact: f64 = exact.to_string().parse().unwrap();
        let err = (ok(approx_splitters_two_set(a))? - exact).abs() / exact;
        check!(
            err <= last * (1.0 + APPROX_MONOTONE_SLACK),
            "m={m}: error {err} above {last}"
        );
        errors.push(format!("{err:.2e}"));
        last = err;
    }
    Ok(format!("relative errors {}", errors.join(" ")))
}

fn game_census() -> Outcome {
    let two = ok(census(2))?;
    check!(
        (two.split_wins, two.total) == (7, 8),
        "two sets: {}/{}",
        two.split_wins,
        two.total
    );
    let three = ok(census(3))?;
    check!(
        (three.split_wins, three.total) == (65, 128),
        "three sets: {}/{}",
        three.split_wins,
        three.total
    );
    for e in &three.boards {
        let board = GameBoard::new(e.board.clone());
        check!(
            ok(find_pairing_strategy(&board, e.winner))?.is_some(),
            "no pairing for {}",
            e.regions
        );
    }
    Ok("7/8, 65/128, pairing for every winner".into())
}

fn winners(board: &GameBoard) -> Result<[Player; 2], String> {
    Ok([
        ok(solve_game(board, Player::Split))?.winner,
        ok(solve_game(board, Player::Skew))?.winner,
    ])
}

fn named_games() -> Outcome {
    use Player::{Skew, Split};
    let path = ok(GameBoard::from_lists(3, [vec![1, 2], vec![2, 3]]))?;
    check!(winners(&path)? == [Skew, Skew], "path board");
    let grid = ok(grid_board(&[3, 3], false))?;
    check!(
        winners(&grid)? == [Skew, Split],
        "3x3 is not a second-player win"
    );
    let classic = ok(grid_board(&[3, 3], true))?;
    check!(winners(&classic)? == [Skew, Skew], "classic 3x3");
    for n in 2..=6u32 {
        let board = ok(grid_board(&[2, n], false))?;
        check!(winners(&board)? == [Skew, Skew], "2x{n}");
        let pairs = (1..=n).map(|j| [n + j, j % n + 1]).collect();
        let pairing = Pairing {
            player: Skew,
            pairs,
        };
        check!(
            ok(is_valid_pairing(&board, &pairing))?,
            "2x{n}: shifted pairing fails"
        );
    }
    let z5 = ok(cyclic_board(5, 3))?;
    check!(
        winners(&z5)? == [Skew, Split],
        "Z5 is not a second-player win"
    );
    for p in [Split, Skew] {
        check!(
            ok(find_pairing_strategy(&z5, p))?.is_none(),
            "Z5 has a {p} pairing"
        );
    }
    let wide = ok(grid_board(&[3, 4], false))?;
    check!(winners(&wide)? == [Skew, Skew], "3x4");
    Ok("path, 3x3, classic, 2x2..2x6, Z5, 3x4".into())
}

fn reduction() -> Outcome {
    let mut boards = 0;
    for n in 1..=3 {
        for r in region_vectors(n, 8) {
            let board = GameBoard::new(ok(family_from_regions(&r))?);
            let reduced = ok(reduce_board(&board))?;
            check!(winners(&board)? == winners(&reduced)?, "regions {r}");
            boards += 1;
        }
    }
    Ok(format!("{boards} boards"))
}

fn main() -> ExitCode {
    let long = std::env::args().any(|a| a == "--long")
        || std::env::var_os("SPLITTING_LONG").is_some_and(|v| v == "1");
    let criteria: Vec<Criterion> = vec![
        ("minimal-family-size", Box::new(minimal_size)),
        ("minimal-family-census", Box::new(minimal_census)),
        ("hamming-structure", Box::new(hamming_structure)),
        (BOUNDS, Box::new(bounds)),
        ("counting-oracle-equivalence", Box::new(oracle_equivalence)),
        ("two-set-minimum", Box::new(two_set_minimum)),
        ("three-set-table", Box::new(move || three_set_table(long))),
        ("point-moving-lemmas", Box::new(lemmas)),
        ("approximation-monotone", Box::new(approximation)),
        ("game-census", Box::new(game_census)),
        ("named-games", Box::new(named_games)),
        ("reduction-soundness", Box::new(reduction)),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    let mut unexpected = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.2}s]"),
            Err(reason) => {
                failed += 1;
                match KNOWN_FAILURES.iter().find(|(n, _)| n == name) {
                    Some((_, why)) => println!("FAIL {name}: {reason} [{secs:.2}s] (known: {why})"),
                    None => {
                        unexpected += 1;
                        println!("FAIL {name}: {reason} [{secs:.2}s]");
                    }
                }
            }
        }
    }
    println!(
        "{} passed, {failed} failed ({} known)",
        criteria.len() - failed,
        failed - unexpected
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
