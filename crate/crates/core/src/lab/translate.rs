//! Strategy translations between the point-clopen game and the
//! quasi-component-clopen game.
//!
//! Points map to their quasi-component; a block maps back to its least
//! point. Because a clopen set contains a point iff it contains the point's
//! quasi-component, Bob's replies (clopen sets) mean the same thing in both
//! games, so Alice's tables translate entry by entry and Bob's are
//! re-indexed over all opponent histories.

use crate::error::{Error, Result};
use crate::game::{
    make_point_clopen, make_quasi_component_clopen, verify_winning, Caps, Context, GameSpec, Move,
    Player, Strategy, StrategyClass,
};
use crate::topology::{FiniteSpace, Partition};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "alice-pc-to-qc")]
    AlicePcToQc,
    #[serde(rename = "alice-qc-to-pc")]
    AliceQcToPc,
    #[serde(rename = "bob-pc-to-qc")]
    BobPcToQc,
    #[serde(rename = "bob-qc-to-pc")]
    BobQcToPc,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::AlicePcToQc,
        Direction::AliceQcToPc,
        Direction::BobPcToQc,
        Direction::BobQcToPc,
    ];

    pub fn player(self) -> Player {
        match self {
            Direction::AlicePcToQc | Direction::AliceQcToPc => Player::Alice,
            Direction::BobPcToQc | Direction::BobQcToPc => Player::Bob,
        }
    }

    /// Whether the source strategy lives in the point-clopen game.
    pub fn from_point_clopen(self) -> bool {
        matches!(self, Direction::AlicePcToQc | Direction::BobPcToQc)
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::AlicePcToQc => "alice-pc-to-qc",
            Direction::AliceQcToPc => "alice-qc-to-pc",
            Direction::BobPcToQc => "bob-pc-to-qc",
            Direction::BobQcToPc => "bob-qc-to-pc",
        }
    }

    /// The direction translating a winning strategy of `player` out of the
    /// point-clopen game (or into it, when `from_pc` is false).
    pub fn for_player(player: Player, from_pc: bool) -> Direction {
        match (player, from_pc) {
            (Player::Alice, true) => Direction::AlicePcToQc,
            (Player::Alice, false) => Direction::AliceQcToPc,
            (Player::Bob, true) => Direction::BobPcToQc,
            (Player::Bob, false) => Direction::BobQcToPc,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Direction> {
        Direction::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown direction {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TranslationReport {
    pub direction: Direction,
    pub input: Strategy,
    pub output: Strategy,
    pub input_winning: bool,
    pub output_winning: bool,
    /// The output wins whenever the input does.
    pub preserved: bool,
}

fn check_source(game: &GameSpec, s: &Strategy, direction: Direction) -> Result<()> {
    if s.player != direction.player() {
        return Err(Error::IllegalSourceStrategy(format!(
            "{direction} needs a strategy for {}",
            direction.player()
        )));
    }
    if s.class != StrategyClass::Full || !s.is_well_formed() {
        return Err(Error::IllegalSourceStrategy(
            "translations take full-history strategies".into(),
        ));
    }
    let clopen = |m: &Move| match m {
        Move::Pick(u) => !u.is_empty() && game.space.is_clopen(*u),
        Move::Menu(_) => false,
    };
    for (ctx, mv) in &s.table {
        let legal = match s.player {
            Player::Alice => {
                ctx.seen.iter().all(clopen) && matches!(mv, Move::Menu(a) if *a < game.menus.len())
            }
            Player::Bob => {
                let last = match ctx.seen.last() {
                    Some(Move::Menu(a)) => game.menu(*a),
                    _ => None,
                };
                ctx.seen
                    .iter()
                    .all(|m| matches!(m, Move::Menu(a) if *a < game.menus.len()))
                    && matches!((last, mv), (Some(menu), Move::Pick(u)) if menu.binary_search(u).is_ok())
            }
        };
        if !legal {
            return Err(Error::IllegalSourceStrategy(format!(
                "entry at {ctx} names out-of-menu move {mv}"
            )));
        }
    }
    Ok(())
}

/// All sequences over `0..alphabet` of length `1..=max_len`.
fn histories(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|h| {
                (0..alphabet).map(move |x| {
                    let mut h = h.clone();
                    h.push(x);
                    h
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn representative(blocks: &Partition, block: usize) -> usize {
    blocks.blocks[block].min().expect("blocks are nonempty")
}

/// Translates a full-history strategy between the point-clopen and the
/// quasi-component-clopen game at the given horizon, and verifies both
/// sides exhaustively.
pub fn translate_b1(
    direction: Direction,
    s: &Strategy,
    space: &FiniteSpace,
    horizon: usize,
    caps: &Caps,
) -> Result<TranslationReport> {
    let pc = make_point_clopen(space, horizon, caps)?;
    let qc = make_quasi_component_clopen(space, horizon, caps)?;
    let (source, target) = if direction.from_point_clopen() {
        (&pc, &qc)
    } else {
        (&qc, &pc)
    };
    check_source(source, s, direction)?;
    let blocks = if space.n() == 0 {
        Partition { blocks: Vec::new() }
    } else {
        space.quasi_components()?
    };
    let block_of = |x: usize| blocks.block_of(x).expect("point lies in a block");

    let mut output = Strategy::new(direction.player(), StrategyClass::Full);
    match direction {
        Direction::AlicePcToQc => {
            for (ctx, mv) in &s.table {
                if let Move::Menu(x) = mv {
                    output.insert(ctx.clone(), Move::Menu(block_of(*x)));
                }
            }
        }
        Direction::AliceQcToPc => {
            for (ctx, mv) in &s.table {
                if let Move::Menu(b) = mv {
                    output.insert(ctx.clone(), Move::Menu(representative(&blocks, *b)));
                }
            }
        }
        Direction::BobPcToQc | Direction::BobQcToPc => {
            let rounds = if target.menus.is_empty() { 0 } else { horizon };
            let count = target
                .menus
                .len()
                .checked_pow(rounds as u32)
                .unwrap_or(usize::MAX);
            if count > caps.states {
                return Err(Error::cap("translated histories", count, caps.states));
            }
            for hist in histories(target.menus.len(), rounds) {
                let source_hist: Vec<Move> = hist
                    .iter()
                    .map(|&a| {
                        Move::Menu(if direction == Direction::BobPcToQc {
                            representative(&blocks, a)
                        } else {
                            block_of(a)
                        })
                    })
                    .collect();
                let source_ctx = Context {
                    round: hist.len() - 1,
                    seen: source_hist,
                };
                if let Some(mv) = s.respond(&source_ctx) {
                    output.insert(
                        Context {
                            round: hist.len() - 1,
                            seen: hist.into_iter().map(Move::Menu).collect(),
                        },
                        mv,
                    );
                }
            }
        }
    }

    let input_winning = verify_winning(source, s)?;
    let output_winning = verify_winning(target, &output)?;
    Ok(TranslationReport {
        direction,
        input: s.clone(),
        output,
        input_winning,
        output_winning,
        preserved: !input_winning || output_winning,
    })
}
