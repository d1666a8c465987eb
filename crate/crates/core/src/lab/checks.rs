//! Finite checks of the game equivalences and dualities on a single space.
//!
//! Each check returns a [`CheckReport`]; facts are recorded as JSON so the
//! suites can stream them as lines.

use crate::error::Result;
use crate::game::{
    game_value, make_mildly_rothberger, make_point_clopen, make_point_open,
    make_quasi_component_clopen, make_rothberger, min_win_horizon, selection_principle, solve,
    solve_from, solve_restricted, verify_winning, Caps, Context, GameSpec, Move, Player, Strategy,
    StrategyClass,
};
use crate::lab::b3::b3_markov_strategy;
use crate::lab::extraction::{descending_sequences, extract_qs_tree, singleton_sequences};
use crate::lab::translate::{translate_b1, Direction};
use crate::topology::FiniteSpace;
use serde::Serialize;
use serde_json::{json, Value};

/// Outcome of one check on one space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: &'static str,
    pub horizon: usize,
    pub facts: Value,
    pub pass: bool,
}

/// A report tagged with the space it ran on; the unit of suite output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckLine {
    pub space_id: String,
    pub check: String,
    pub horizon: usize,
    pub facts: Value,
    pub pass: bool,
}

impl CheckReport {
    pub fn into_line(self, space_id: &str) -> CheckLine {
        CheckLine {
            space_id: space_id.to_string(),
            check: self.check.to_string(),
            horizon: self.horizon,
            facts: self.facts,
            pass: self.pass,
        }
    }
}

impl CheckLine {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("check lines serialize")
    }
}

fn alice_wins(game: &GameSpec) -> Result<bool> {
    Ok(solve_from(game, Player::Alice)?.winner == Player::Alice)
}

fn bob_wins(game: &GameSpec) -> Result<bool> {
    Ok(solve_from(game, Player::Bob)?.winner == Player::Bob)
}

fn alice_pre(game: &GameSpec) -> Result<bool> {
    Ok(solve_restricted(game, Player::Alice, StrategyClass::Predetermined)?.wins)
}

fn bob_mark(game: &GameSpec) -> Result<bool> {
    Ok(solve_restricted(game, Player::Bob, StrategyClass::Markov)?.wins)
}

fn winner_name(game: &GameSpec) -> Result<&'static str> {
    Ok(match game_value(game)?.winner {
        Player::Alice => "alice",
        Player::Bob => "bob",
    })
}

/// Strategic and Markov duality between the mildly Rothberger game and the
/// point-clopen game at the saturating horizon.
pub fn check_duality(space: &FiniteSpace, caps: &Caps) -> Result<CheckReport> {
    let k = space.n();
    let mr = make_mildly_rothberger(space, k, caps)?;
    let pc = make_point_clopen(space, k, caps)?;
    let facts = [
        alice_wins(&mr)?,
        bob_wins(&pc)?,
        bob_wins(&mr)?,
        alice_wins(&pc)?,
        alice_pre(&mr)?,
        bob_mark(&pc)?,
        bob_mark(&mr)?,
        alice_pre(&pc)?,
    ];
    let [a_mr, b_pc, b_mr, a_pc, pre_mr, mark_pc, mark_mr, pre_pc] = facts;
    let strategic = [a_mr == b_pc, b_mr == a_pc];
    let markov = [pre_mr == mark_pc, mark_mr == pre_pc];
    Ok(CheckReport {
        check: "duality",
        horizon: k,
        facts: json!({
            "alice_mildly_rothberger": a_mr,
            "bob_point_clopen": b_pc,
            "bob_mildly_rothberger": b_mr,
            "alice_point_clopen": a_pc,
            "alice_pre_mildly_rothberger": pre_mr,
            "bob_markov_point_clopen": mark_pc,
            "bob_markov_mildly_rothberger": mark_mr,
            "alice_pre_point_clopen": pre_pc,
            "strategic": strategic,
            "markov": markov,
        }),
        pass: strategic.iter().chain(&markov).all(|&b| b),
    })
}

/// Open versus clopen variants at every horizon `k <= n`. Equality is
/// required on zero-dimensional spaces and recorded otherwise.
pub fn check_zero_dim_equivalence(space: &FiniteSpace, caps: &Caps) -> Result<CheckReport> {
    let zero_dim = space.is_zero_dimensional();
    let mut rows = Vec::new();
    let mut first_divergence = None;
    for k in 0..=space.n() {
        let r = make_rothberger(space, k, caps)?;
        let mr = make_mildly_rothberger(space, k, caps)?;
        let po = make_point_open(space, k, caps)?;
        let pc = make_point_clopen(space, k, caps)?;
        let row = [
            winner_name(&r)?,
            winner_name(&mr)?,
            winner_name(&po)?,
            winner_name(&pc)?,
        ];
        let (pre_r, pre_mr) = (alice_pre(&r)?, alice_pre(&mr)?);
        if (row[0] != row[1] || row[2] != row[3] || pre_r != pre_mr) && first_divergence.is_none() {
            first_divergence = Some(k);
        }
        rows.push(json!({
            "rothberger": row[0],
            "mildly_rothberger": row[1],
            "point_open": row[2],
            "point_clopen": row[3],
            "alice_pre_rothberger": pre_r,
            "alice_pre_mildly_rothberger": pre_mr,
        }));
    }
    Ok(CheckReport {
        check: "zerodim",
        horizon: space.n(),
        facts: json!({
            "zero_dimensional": zero_dim,
            "first_divergence": first_divergence,
            "by_horizon": rows,
        }),
        pass: !zero_dim || first_divergence.is_none(),
    })
}

/// No predetermined Alice win iff no Alice win at all, at the saturating
/// horizon; the finite selection principle must match the predetermined
/// search at every horizon.
pub fn check_th314(space: &FiniteSpace, caps: &Caps) -> Result<CheckReport> {
    let mut rows = Vec::new();
    let mut bridging = true;
    let mut at_saturation = false;
    for k in 0..=space.n() {
        let mr = make_mildly_rothberger(space, k, caps)?;
        let pre = alice_pre(&mr)?;
        let full = alice_wins(&mr)?;
        let s1 = selection_principle(&mr)?;
        bridging &= s1 == !pre;
        at_saturation = !pre == !full;
        rows.push(json!({
            "selection_principle": s1,
            "alice_pre": pre,
            "alice": full,
            "biconditional": !pre == !full,
        }));
    }
    Ok(CheckReport {
        check: "th314",
        horizon: space.n(),
        facts: json!({
            "by_horizon": rows,
            "selection_principle_matches_pre": bridging,
        }),
        pass: at_saturation && bridging,
    })
}

/// The point-clopen and quasi-component-clopen games agree at every
/// horizon in all three strategy classes, and every solver witness
/// survives translation.
pub fn check_b1(space: &FiniteSpace, caps: &Caps) -> Result<CheckReport> {
    let mut rows = Vec::new();
    let mut pass = true;
    for k in 0..=space.n() {
        let pc = make_point_clopen(space, k, caps)?;
        let qc = make_quasi_component_clopen(space, k, caps)?;
        let full = [winner_name(&pc)?, winner_name(&qc)?];
        let pre = [alice_pre(&pc)?, alice_pre(&qc)?];
        let mark = [bob_mark(&pc)?, bob_mark(&qc)?];
        let mut translations = Vec::new();
        if space.n() > 0 {
            for (game, from_pc) in [(&pc, true), (&qc, false)] {
                let v = solve(game)?;
                let direction = Direction::for_player(v.winner, from_pc);
                let report = translate_b1(direction, &v.witness, space, k, caps)?;
                let ok = report.input_winning && report.output_winning;
                pass &= ok;
                translations.push(json!({"direction": direction.name(), "preserved": ok}));
            }
        }
        pass &= full[0] == full[1] && pre[0] == pre[1] && mark[0] == mark[1];
        rows.push(json!({
            "winner": full,
            "alice_pre": pre,
            "bob_markov": mark,
            "translations": translations,
        }));
    }
    Ok(CheckReport {
        check: "b1",
        horizon: space.n(),
        facts: json!({ "by_horizon": rows }),
        pass,
    })
}

/// The block-cycling Markov strategy wins at horizon `#blocks`, and the
/// three minimal winning horizons equal `#blocks`.
pub fn check_b3(space: &FiniteSpace, caps: &Caps) -> Result<CheckReport> {
    let blocks = space.quasi_components()?.blocks;
    let b = blocks.len();
    let s = b3_markov_strategy(space, caps)?;
    let markov_shape = s.class == StrategyClass::Markov
        && s.is_well_formed()
        && s.table.keys().all(|ctx| ctx.seen.len() == 1);
    let wins = verify_winning(&make_mildly_rothberger(space, b, caps)?, &s)?;
    let n = space.n();
    let min_mr = min_win_horizon(|k| make_mildly_rothberger(space, k, caps), Player::Bob, n)?;
    let min_pc = min_win_horizon(|k| make_point_clopen(space, k, caps), Player::Alice, n)?;
    let min_qc = min_win_horizon(
        |k| make_quasi_component_clopen(space, k, caps),
        Player::Alice,
        n,
    )?;
    let clopens = space.clopen_algebra().sets;
    let absorption = clopens.iter().all(|&u| {
        u.points()
            .all(|x| blocks.iter().all(|&q| !q.contains(x) || q.is_subset(u)))
    });
    Ok(CheckReport {
        check: "b3",
        horizon: b,
        facts: json!({
            "blocks": b,
            "markov_shape": markov_shape,
            "verify_winning": wins,
            "min_horizon_mildly_rothberger_bob": min_mr,
            "min_horizon_point_clopen_alice": min_pc,
            "min_horizon_quasi_component_clopen_alice": min_qc,
            "clopen_absorption": absorption,
        }),
        pass: markov_shape
            && wins
            && absorption
            && [min_mr, min_pc, min_qc].iter().all(|m| *m == Some(b)),
    })
}

/// Predetermined Alice strategy naming block 0 in every round.
pub fn block_zero_strategy(rounds: usize) -> Strategy {
    let mut phi = Strategy::new(Player::Alice, StrategyClass::Predetermined);
    for round in 0..rounds {
        phi.insert(
            Context {
                round,
                seen: Vec::new(),
            },
            Move::Menu(0),
        );
    }
    phi
}

/// Extraction from every winning solver strategy in the
/// quasi-component-clopen game covers the space, and the block-0 strategy
/// produces a checkable counterexample whenever there are two blocks.
pub fn check_extraction(space: &FiniteSpace, caps: &Caps) -> Result<CheckReport> {
    let singles = singleton_sequences(space)?;
    let chains = descending_sequences(space)?;
    let b = singles.len();
    let mut rows = Vec::new();
    let mut pass = true;
    for k in 1..=space.n() {
        let qc = make_quasi_component_clopen(space, k, caps)?;
        let v = solve(&qc)?;
        if v.winner != Player::Alice {
            continue;
        }
        let single = extract_qs_tree(space, &v.witness, &singles, k - 1, caps)?;
        let chain = extract_qs_tree(space, &v.witness, &chains, k - 1, caps)?;
        pass &= single.covers && chain.covers;
        rows.push(json!({
            "horizon": k,
            "singleton_covers": single.covers,
            "chain_covers": chain.covers,
            "chain_nodes": chain.tree.len(),
        }));
    }

    let phi = block_zero_strategy(b + 1);
    let planted = extract_qs_tree(space, &phi, &singles, b, caps)?;
    let counterexample_ok = match &planted.counterexample {
        None => planted.covers && b == 1,
        Some(cx) => {
            let t = &cx.transcript;
            let game = make_quasi_component_clopen(space, t.rounds.len(), caps)?;
            !planted.covers
                && b > 1
                && t.follows(&phi)
                && t.is_consistent_with(&game)
                && t.winner == Player::Bob
                && t.rounds.iter().all(|r| !r.bob.contains(cx.point))
        }
    };
    pass &= counterexample_ok;
    Ok(CheckReport {
        check: "extraction",
        horizon: b,
        facts: json!({
            "winning": rows,
            "planted_covers": planted.covers,
            "planted_point": planted.counterexample.as_ref().map(|c| c.point),
            "planted_ok": counterexample_ok,
        }),
        pass,
    })
}
