use anyhow::Result;
use serde::Serialize;
use serde_json::{json, Value};
use splitting_core::counting::{
    approx_splitters_two_set, count_splitters, count_splitters_regions, min_one_set,
    min_three_set_up_to, min_two_set, splitters_two_set, verify_point_moving_lemmas, MinResult,
    LONG_THREE_SET_K, MAX_THREE_SET_K,
};
use splitting_core::families::{
    classify_connected_le4_minimal, delta_label, enumerate_minimal_splitting_families_up_to,
    find_forbidden_y, find_unsplit_subset, hamming_representation, is_t_splitting_family, SizeMode,
    DEFAULT_MAX_SEARCH_K, LONG_MAX_SEARCH_K,
};
use splitting_core::game::{
    census, find_pairing_strategy, grid_board, solve_game, GameBoard, Player,
};
use splitting_core::{Family, SubsetMask};

use crate::args::{Command, Side};
use crate::input;
use crate::report::{lists_cell, spaced, Report};

/// Runs every subcommand except `serve`.
pub fn execute(command: &Command, long: bool) -> Result<Report> {
    match command {
        Command::VerifyFamily {
            family,
            standard: _,
            t,
            at_most,
        } => verify_family(&input::family_or_standard(family)?, *t, *at_most),
        Command::EnumerateMinimal { k } => enumerate_minimal(*k, long),
        Command::Hamming { family } => hamming(&input::family_or_standard(family)?),
        Command::CountSplitters {
            family,
            regions,
            two,
            approx,
        } => {
            if let Some(r) = regions {
                let r = input::parse_regions(r)?;
                let count = count_splitters_regions(&r);
                Ok(count_report(
                    count.to_string(),
                    None,
                    json!({ "regions": r.sizes() }),
                ))
            } else if let Some(a) = two {
                let a = input::parse_arrangement(a)?;
                let estimate = if *approx {
                    Some(approx_splitters_two_set(a)?)
                } else {
                    None
                };
                Ok(count_report(
                    splitters_two_set(a).to_string(),
                    estimate,
                    json!({ "arrangement": a }),
                ))
            } else {
                let f = input::family_or_standard(family)?;
                Ok(count_report(
                    count_splitters(&f)?.to_string(),
                    None,
                    json!({ "family": f }),
                ))
            }
        }
        Command::MinArrangement { sets, k } => min_arrangement(*sets, *k, long),
        Command::VerifyLemmas { k } => verify_lemmas(*k),
        Command::SolveGame { board, first } => solve(&input::board(board)?, *first),
        Command::Pairing { board, player } => pairing(&input::board(board)?, *player),
        Command::Census { sets } => census_report(usize::from(*sets)),
        Command::Tictactoe { m, n, diagonals } => tictactoe(*m, *n, *diagonals),
        Command::Serve { .. } => anyhow::bail!("serve is not a report command"),
    }
}

/// The serde name of a unit enum value.
fn tag<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn list(m: SubsetMask) -> Vec<u32> {
    m.to_vec()
}

fn verify_family(f: &Family, t: Option<u32>, at_most: bool) -> Result<Report> {
    let unsplit = find_unsplit_subset(f)?;
    let splitting = unsplit.is_none();
    let unsplit_list =
        unsplit.map(|b| list(SubsetMask::from_bits(f.k(), b).expect("subset of the ground set")));
    let mut text = format!("family: {f}\nsplitting: {splitting}\n");
    if let Some(u) = &unsplit_list {
        text += &format!("unsplit: {{{}}}\n", spaced(u).replace(' ', ","));
    }
    let mut rows = vec![
        vec!["k".into(), f.k().to_string()],
        vec!["splitting".into(), splitting.to_string()],
    ];
    let mut j = json!({ "family": f, "splitting": splitting, "unsplit": unsplit_list });
    if let Some(t) = t {
        let mode = if at_most {
            SizeMode::AtMost
        } else {
            SizeMode::Exactly
        };
        let holds = is_t_splitting_family(f, t, mode)?;
        let label = if at_most {
            format!("at-most-{t}-splitting")
        } else {
            format!("{t}-splitting")
        };
        text += &format!("{label}: {holds}\n");
        rows.push(vec![label, holds.to_string()]);
        j["tSplitting"] = json!({ "t": t, "mode": mode, "holds": holds });
    }
    Ok(Report::new(text, j).table(["property", "value"], rows))
}

fn enumerate_minimal(k: u32, long: bool) -> Result<Report> {
    let cap = if long {
        LONG_MAX_SEARCH_K
    } else {
        DEFAULT_MAX_SEARCH_K
    };
    let classes = enumerate_minimal_splitting_families_up_to(k, cap)?;
    let size = classes.first().map_or(0, |c| c.size);
    let mut text = format!(
        "k = {k}: minimum size {size}, {} class(es)\n",
        classes.len()
    );
    let mut rows = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let mut tags = Vec::new();
        if c.uniform {
            tags.push("uniform");
        }
        if c.standard_equivalent {
            tags.push("standard");
        }
        text += &format!("{}. {} {}\n", i + 1, c.canonical, tags.join(" "));
        rows.push(vec![
            (i + 1).to_string(),
            c.size.to_string(),
            c.uniform.to_string(),
            c.standard_equivalent.to_string(),
            lists_cell(&c.canonical.to_lists()),
        ]);
    }
    let j = json!({ "k": k, "size": size, "classes": classes });
    Ok(Report::new(text, j).table(["class", "size", "uniform", "standard", "sets"], rows))
}

fn hamming(f: &Family) -> Result<Report> {
    let rep = hamming_representation(f)?;
    let labels: Vec<String> = rep.columns().iter().map(|&c| delta_label(c)).collect();
    let edges: Vec<[String; 2]> = rep
        .edges()
        .iter()
        .map(|&(s, t)| [delta_label(s), delta_label(t)])
        .collect();
    let components: Vec<Vec<String>> = rep
        .components()
        .iter()
        .map(|c| c.iter().map(|&v| delta_label(v)).collect())
        .collect();
    let shape = if rep.is_cycle() {
        "cycle"
    } else if rep.is_path() {
        "path"
    } else {
        "other"
    };
    let y = find_forbidden_y(&rep)?;
    let y_json = y.map(|w| json!({ "kind": w.kind, "vertices": w.vertices.map(delta_label) }));
    let classification = classify_connected_le4_minimal(f)?;

    let mut text = format!("columns: {}\n", labels.join(" "));
    text += &format!(
        "vertices: {}, edges: {}, components: {}\nshape: {shape}\n",
        rep.vertices().len(),
        edges.len(),
        components.len()
    );
    text += &match &y {
        Some(w) => format!(
            "forbidden Y: type {} at {}\n",
            tag(&w.kind),
            w.vertices.map(delta_label).join(" ")
        ),
        None => "forbidden Y: none\n".into(),
    };
    text += &format!("classification: {}\n", tag(&classification));
    let rows = rep
        .columns()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            vec![
                (i + 1).to_string(),
                delta_label(c),
                rep.degree(c).to_string(),
            ]
        })
        .collect();
    let j = json!({
        "family": f,
        "columns": labels,
        "edges": edges,
        "components": components,
        "connected": rep.is_connected(),
        "shape": shape,
        "forbiddenY": y_json,
        "classification": classification,
    });
    Ok(Report::new(text, j).table(["element", "column", "degree"], rows))
}

fn count_report(count: String, estimate: Option<f64>, mut j: Value) -> Report {
    let mut text = format!("splitters: {count}\n");
    let mut rows = vec![vec!["splitters".into(), count.clone()]];
    j["count"] = json!(count);
    if let Some(e) = estimate {
        text += &format!("approx: {e:.3}\n");
        rows.push(vec!["approx".into(), e.to_string()]);
        j["approx"] = json!(e);
    }
    Report::new(text, j).table(["quantity", "value"], rows)
}

fn min_arrangement(sets: u8, k: u64, long: bool) -> Result<Report> {
    let r: MinResult = match sets {
        1 => min_one_set(k)?,
        2 => min_two_set(k)?,
        _ => min_three_set_up_to(
            k,
            if long {
                LONG_THREE_SET_K
            } else {
                MAX_THREE_SET_K
            },
        )?,
    };
    let mut text = format!(
        "sets = {sets}, k = {k}\nminimum splitters: {}\narrangement: {}\nminimizers: {}\n",
        r.count,
        r.arrangement,
        r.all_minimizers.len()
    );
    if let Some(m) = r.matches_pattern {
        text += &format!("pattern: {}\n", if m { "matched" } else { "not matched" });
    }
    let rows = r
        .all_minimizers
        .iter()
        .map(|m| vec![k.to_string(), r.count.to_string(), m.to_string()])
        .collect();
    Ok(Report::new(text, serde_json::to_value(&r)?).table(["k", "count", "regions"], rows))
}

fn verify_lemmas(k: u64) -> Result<Report> {
    let report = verify_point_moving_lemmas(k)?;
    let mut text = format!("k = {k}\n");
    for (lemma, n) in &report.checked {
        text += &format!("{}: {n} checked\n", tag(lemma));
    }
    text += &format!("violations: {}\n", report.violations.len());
    for v in &report.violations {
        text += &format!(
            "  {}: {} has {} splitters, {} has {}\n",
            tag(&v.lemma),
            v.lhs,
            v.lhs_count,
            v.rhs,
            v.rhs_count
        );
    }
    let rows = report
        .checked
        .iter()
        .map(|(lemma, n)| {
            let bad = report
                .violations
                .iter()
                .filter(|v| v.lemma == *lemma)
                .count();
            vec![tag(lemma), n.to_string(), bad.to_string()]
        })
        .collect();
    let mut j = serde_json::to_value(&report)?;
    j["clean"] = json!(report.is_clean());
    Ok(Report::new(text, j).table(["lemma", "checked", "violations"], rows))
}

fn solve(board: &GameBoard, first: Option<Side>) -> Result<Report> {
    let firsts: Vec<Player> = match first {
        Some(s) => vec![s.into()],
        None => vec![Player::Split, Player::Skew],
    };
    let mut text = format!("board: {}\n", board.family());
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for p in firsts {
        let s = solve_game(board, p)?;
        let opening = s.principal.map_or("-".to_string(), |m| m.to_string());
        text += &format!("{p} first: {} wins (opening {opening})\n", s.winner);
        rows.push(vec![tag(&p), tag(&s.winner), opening]);
        results.push(json!({ "first": p, "winner": s.winner, "principal": s.principal }));
    }
    let j = json!({ "board": board, "results": results });
    Ok(Report::new(text, j).table(["first", "winner", "principal"], rows))
}

fn pairing(board: &GameBoard, player: Option<Side>) -> Result<Report> {
    let players: Vec<Player> = match player {
        Some(s) => vec![s.into()],
        None => vec![Player::Split, Player::Skew],
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut found = Vec::new();
    for p in players {
        let pairing = find_pairing_strategy(board, p)?;
        match &pairing {
            Some(pr) => {
                let pairs: Vec<String> =
                    pr.pairs.iter().map(|[a, b]| format!("({a},{b})")).collect();
                text += &format!(
                    "{p}: {}\n",
                    if pairs.is_empty() {
                        "no pairs needed".into()
                    } else {
                        pairs.join(" ")
                    }
                );
                rows.push(vec![
                    tag(&p),
                    "true".into(),
                    lists_cell(&pr.pairs.iter().map(|p| p.to_vec()).collect::<Vec<_>>()),
                ]);
            }
            None => {
                text += &format!("{p}: none\n");
                rows.push(vec![tag(&p), "false".into(), String::new()]);
            }
        }
        found.push(json!({ "player": p, "pairs": pairing.map(|pr| pr.pairs) }));
    }
    let j = json!({ "board": board, "pairings": found });
    Ok(Report::new(text, j).table(["player", "found", "pairs"], rows))
}

fn census_report(n: usize) -> Result<Report> {
    let c = census(n)?;
    let mut text = format!("{}/{}\n", c.split_wins, c.total);
    for e in &c.boards {
        text += &format!("{} {}\n", e.regions, tag(&e.winner));
    }
    let rows = c
        .boards
        .iter()
        .map(|e| {
            vec![
                e.regions.to_string(),
                lists_cell(&e.board.to_lists()),
                tag(&e.winner),
            ]
        })
        .collect();
    let j = json!({
        "n": c.n,
        "total": c.total,
        "splitWins": c.split_wins,
        "boards": c.boards.iter().map(|e| json!({
            "regions": e.regions.sizes(),
            "board": e.board,
            "winner": e.winner,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::new(text, j).table(["regions", "sets", "winner"], rows))
}

fn tictactoe(m: u32, n: u32, diagonals: bool) -> Result<Report> {
    let board = grid_board(&[m, n], diagonals)?;
    let split_first = solve_game(&board, Player::Split)?;
    let skew_first = solve_game(&board, Player::Skew)?;
    let verdict = match (split_first.winner, skew_first.winner) {
        (Player::Split, Player::Split) => "Split wins".to_string(),
        (Player::Skew, Player::Skew) => "Skew wins".to_string(),
        (Player::Skew, Player::Split) => "second player wins".to_string(),
        (Player::Split, Player::Skew) => "first player wins".to_string(),
    };
    let name = format!("{m}x{n}{}", if diagonals { " with diagonals" } else { "" });
    let text = format!(
        "{name}: {verdict}\nSplit first: {} wins\nSkew first: {} wins\n",
        split_first.winner, skew_first.winner
    );
    let j = json!({
        "m": m,
        "n": n,
        "diagonals": diagonals,
        "board": board,
        "splitFirst": split_first,
        "skewFirst": skew_first,
        "verdict": verdict,
    });
    let rows = vec![
        vec!["split".into(), tag(&split_first.winner)],
        vec!["skew".into(), tag(&skew_first.winner)],
    ];
    Ok(Report::new(text, j).table(["first", "winner"], rows))
}
