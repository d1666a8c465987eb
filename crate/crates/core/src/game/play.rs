use crate::error::{Error, Result};
use crate::game::solver::Compiled;
use crate::game::spec::GameSpec;
use crate::game::strategy::{Move, Player, Strategy};
use crate::pointset::PointSet;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    /// Menu index chosen by Alice.
    pub alice: usize,
    /// Member of that menu selected by Bob.
    pub bob: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub rounds: Vec<RoundRecord>,
    pub winner: Player,
}

impl Transcript {
    pub fn selections(&self) -> Vec<PointSet> {
        self.rounds.iter().map(|r| r.bob).collect()
    }

    /// Every Bob move belongs to the menu Alice named, the play has the
    /// game's length, and the recorded winner matches the target.
    pub fn is_consistent_with(&self, game: &GameSpec) -> bool {
        let expected_len = if game.menus.is_empty() {
            0
        } else {
            game.horizon
        };
        self.rounds.len() == expected_len
            && self.rounds.iter().all(|r| {
                game.menu(r.alice)
                    .is_some_and(|m| m.binary_search(&r.bob).is_ok())
            })
            && self.winner == outcome(game, &self.selections())
    }

    /// Whether `strategy` prescribes every move its player made here.
    pub fn follows(&self, strategy: &Strategy) -> bool {
        let alice: Vec<usize> = self.rounds.iter().map(|r| r.alice).collect();
        let bob = self.selections();
        self.rounds
            .iter()
            .enumerate()
            .all(|(r, rec)| match strategy.player {
                Player::Alice => {
                    strategy.respond(&strategy.context(r, &alice[..r], &bob[..r]))
                        == Some(Move::Menu(rec.alice))
                }
                Player::Bob => {
                    strategy.respond(&strategy.context(r, &alice[..=r], &bob[..r]))
                        == Some(Move::Pick(rec.bob))
                }
            })
    }
}

pub(crate) fn outcome(game: &GameSpec, selections: &[PointSet]) -> Player {
    if game.bob_wins_selection(selections) {
        Player::Bob
    } else {
        Player::Alice
    }
}

fn illegal(context: &crate::game::strategy::Context, mv: Move) -> Error {
    Error::IllegalMove {
        context: context.to_string(),
        mv: mv.to_string(),
    }
}

/// Plays two strategies against each other.
pub fn playout(game: &GameSpec, alice: &Strategy, bob: &Strategy) -> Result<Transcript> {
    if alice.player != Player::Alice || bob.player != Player::Bob {
        return Err(Error::Format(
            "playout needs an Alice and a Bob strategy".into(),
        ));
    }
    let rounds = if game.menus.is_empty() {
        0
    } else {
        game.horizon
    };
    let mut alice_moves = Vec::with_capacity(rounds);
    let mut bob_moves = Vec::with_capacity(rounds);
    let mut records = Vec::with_capacity(rounds);
    for r in 0..rounds {
        let ctx = alice.context(r, &alice_moves, &bob_moves);
        let a = match alice.respond(&ctx) {
            None => return Err(Error::MissingEntry(ctx.to_string())),
            Some(Move::Menu(a)) if a < game.menus.len() => a,
            Some(mv) => return Err(illegal(&ctx, mv)),
        };
        alice_moves.push(a);
        let ctx = bob.context(r, &alice_moves, &bob_moves);
        let b = match bob.respond(&ctx) {
            None => return Err(Error::MissingEntry(ctx.to_string())),
            Some(Move::Pick(s)) if game.menus.menus[a].binary_search(&s).is_ok() => s,
            Some(mv) => return Err(illegal(&ctx, mv)),
        };
        bob_moves.push(b);
        records.push(RoundRecord { alice: a, bob: b });
    }
    Ok(Transcript {
        winner: outcome(game, &bob_moves),
        rounds: records,
    })
}

struct Verifier<'a> {
    c: Compiled<'a>,
    strategy: &'a Strategy,
    memo: HashMap<(u64, usize, Vec<Move>), bool>,
    nodes: usize,
}

impl Verifier<'_> {
    fn wins(
        &mut self,
        state: u64,
        round: usize,
        alice_hist: &mut Vec<usize>,
        bob_hist: &mut Vec<PointSet>,
    ) -> Result<bool> {
        if !self.c.open(round) {
            return Ok(self.c.bob_terminal(state) == (self.strategy.player == Player::Bob));
        }
        // The part of the history the strategy will ever look at again.
        let carry = self.strategy.context(round, alice_hist, bob_hist).seen;
        let key = (state, round, carry);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        let cap = self.c.game.caps.states;
        if self.nodes > cap {
            return Err(Error::cap("verification nodes", self.nodes, cap));
        }
        let result = match self.strategy.player {
            Player::Alice => self.alice_round(state, round, alice_hist, bob_hist)?,
            Player::Bob => self.bob_round(state, round, alice_hist, bob_hist)?,
        };
        self.memo.insert(key, result);
        Ok(result)
    }

    fn alice_round(
        &mut self,
        state: u64,
        round: usize,
        alice_hist: &mut Vec<usize>,
        bob_hist: &mut Vec<PointSet>,
    ) -> Result<bool> {
        let ctx = self.strategy.context(round, alice_hist, bob_hist);
        let a = match self.strategy.respond(&ctx) {
            Some(Move::Menu(a)) if a < self.c.codes.len() => a,
            _ => return Ok(false),
        };
        alice_hist.push(a);
        let members = &self.c.game.menus.menus[a];
        let mut all = true;
        for (i, &m) in members.iter().enumerate() {
            bob_hist.push(m);
            let ok = self.wins(state | self.c.codes[a][i], round + 1, alice_hist, bob_hist)?;
            bob_hist.pop();
            if !ok {
                all = false;
                break;
            }
        }
        alice_hist.pop();
        Ok(all)
    }

    fn bob_round(
        &mut self,
        state: u64,
        round: usize,
        alice_hist: &mut Vec<usize>,
        bob_hist: &mut Vec<PointSet>,
    ) -> Result<bool> {
        for a in 0..self.c.codes.len() {
            alice_hist.push(a);
            let ctx = self.strategy.context(round, alice_hist, bob_hist);
            let pick = match self.strategy.respond(&ctx) {
                Some(Move::Pick(m)) => self.c.code(a, m).map(|code| (m, code)),
                _ => None,
            };
            let ok = match pick {
                None => false,
                Some((m, code)) => {
                    bob_hist.push(m);
                    let ok = self.wins(state | code, round + 1, alice_hist, bob_hist)?;
                    bob_hist.pop();
                    ok
                }
            };
            alice_hist.pop();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether `strategy` wins against every legal line of the opponent.
///
/// A strategy missing an entry, or naming an illegal move, on a reachable
/// context does not win.
pub fn verify_winning(game: &GameSpec, strategy: &Strategy) -> Result<bool> {
    let mut v = Verifier {
        c: Compiled::new(game)?,
        strategy,
        memo: HashMap::new(),
        nodes: 0,
    };
    v.wins(0, 0, &mut Vec::new(), &mut Vec::new())
}
