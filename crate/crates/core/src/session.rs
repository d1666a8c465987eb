//! Text-mode play: a human takes one side, the solver's optimal replies
//! take the other.

use crate::error::{Error, Result};
use crate::game::{outcome, Advisor, GameSpec, Player, RoundRecord, Transcript};
use crate::pointset::PointSet;
use std::io::{BufRead, Write};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SessionEnd {
    Finished(Transcript),
    /// Input ended before the play did.
    Aborted,
}

fn format_menu(menu: &[PointSet]) -> String {
    let members: Vec<String> = menu
        .iter()
        .enumerate()
        .map(|(i, m)| format!("[{i}] {m}"))
        .collect();
    members.join("  ")
}

/// Reads lines until one parses as an index below `bound`. Returns `None`
/// at end of input.
fn read_index<R: BufRead, W: Write>(
    input: &mut R,
    out: &mut W,
    prompt: &str,
    bound: usize,
) -> Result<Option<usize>> {
    loop {
        write!(out, "{prompt}> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(None);
        }
        match line.trim().parse::<usize>() {
            Ok(i) if i < bound => return Ok(Some(i)),
            _ => writeln!(
                out,
                "illegal move {:?}; enter an index below {bound}",
                line.trim()
            )?,
        }
    }
}

/// Runs one play with the human as `role`, reading moves from `input` and
/// writing prompts and replies to `out`.
pub fn play_session<R: BufRead, W: Write>(
    game: &GameSpec,
    role: Player,
    mut input: R,
    mut out: W,
) -> Result<SessionEnd> {
    let mut advisor = Advisor::new(game)?;
    let rounds = if game.menus.is_empty() {
        0
    } else {
        game.horizon
    };
    writeln!(
        out,
        "{} rounds, you play {role}; Bob wants his selections to {}cover the space",
        rounds,
        if game.negated { "not " } else { "" }
    )?;
    let mut history: Vec<(usize, PointSet)> = Vec::new();
    for round in 0..rounds {
        let menu_index = match role {
            Player::Alice => {
                writeln!(out, "round {round}: menus")?;
                for (i, menu) in game.menus.menus.iter().enumerate() {
                    writeln!(out, "  menu {i}: {}", format_menu(menu))?;
                }
                match read_index(&mut input, &mut out, "menu", game.menus.len())? {
                    Some(i) => i,
                    None => return Ok(SessionEnd::Aborted),
                }
            }
            Player::Bob => {
                let a = advisor.alice_move(&history)?;
                writeln!(out, "round {round}: Alice plays menu {a}")?;
                a
            }
        };
        let menu = game
            .menu(menu_index)
            .ok_or_else(|| Error::Format(format!("menu {menu_index} out of range")))?;
        let pick = match role {
            Player::Alice => {
                let pick = advisor.bob_move(&history, menu_index)?;
                writeln!(out, "Bob selects {pick}")?;
                pick
            }
            Player::Bob => {
                writeln!(out, "  {}", format_menu(menu))?;
                match read_index(&mut input, &mut out, "member", menu.len())? {
                    Some(i) => menu[i],
                    None => return Ok(SessionEnd::Aborted),
                }
            }
        };
        history.push((menu_index, pick));
    }
    let selections: Vec<PointSet> = history.iter().map(|&(_, m)| m).collect();
    let winner = outcome(game, &selections);
    writeln!(out, "winner: {winner}")?;
    Ok(SessionEnd::Finished(Transcript {
        rounds: history
            .into_iter()
            .map(|(alice, bob)| RoundRecord { alice, bob })
            .collect(),
        winner,
    }))
}
