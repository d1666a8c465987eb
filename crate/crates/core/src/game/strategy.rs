use crate::error::{Error, Result};
use crate::pointset::PointSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Alice => "alice",
            Player::Bob => "bob",
        })
    }
}

impl std::str::FromStr for Player {
    type Err = Error;

    fn from_str(s: &str) -> Result<Player> {
        match s {
            "alice" => Ok(Player::Alice),
            "bob" => Ok(Player::Bob),
            _ => Err(Error::Format(format!("unknown player {s:?}"))),
        }
    }
}

/// What a strategy is allowed to look at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StrategyClass {
    /// The opponent's whole move history.
    #[serde(rename = "full")]
    Full,
    /// The opponent's most recent move and the round number.
    #[serde(rename = "markov")]
    Markov,
    /// The round number only.
    #[serde(rename = "pre")]
    Predetermined,
}

/// Alice's moves are menu indices, Bob's are the sets he selects.
///
/// On the wire a menu index is a bare integer and a selection is its point
/// list, e.g. `2` versus `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Move {
    Menu(usize),
    Pick(PointSet),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Menu(i) => write!(f, "menu#{i}"),
            Move::Pick(s) => write!(f, "{s}"),
        }
    }
}

/// Canonical decision context: the round and the part of the opponent's
/// history visible to the strategy's class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Context {
    pub round: usize,
    pub seen: Vec<Move>,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "round {} after [", self.round)?;
        for (i, m) in self.seen.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

/// A finite decision table for one player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    pub player: Player,
    pub class: StrategyClass,
    pub table: BTreeMap<Context, Move>,
}

#[derive(Serialize, Deserialize)]
struct StrategyFile {
    player: Player,
    class: StrategyClass,
    entries: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    context: Context,
    #[serde(rename = "move")]
    mv: Move,
}

impl Strategy {
    pub fn new(player: Player, class: StrategyClass) -> Strategy {
        Strategy {
            player,
            class,
            table: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, context: Context, mv: Move) {
        self.table.insert(context, mv);
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Builds the context this strategy sees at `round`, given the moves
    /// played so far. For Bob, `alice_moves` includes the current round's
    /// menu.
    pub fn context(&self, round: usize, alice_moves: &[usize], bob_moves: &[PointSet]) -> Context {
        let opponent: Vec<Move> = match self.player {
            Player::Alice => bob_moves.iter().map(|&s| Move::Pick(s)).collect(),
            Player::Bob => alice_moves.iter().map(|&a| Move::Menu(a)).collect(),
        };
        let seen = match self.class {
            StrategyClass::Full => opponent,
            StrategyClass::Markov => opponent.last().copied().into_iter().collect(),
            StrategyClass::Predetermined => Vec::new(),
        };
        Context { round, seen }
    }

    pub fn respond(&self, context: &Context) -> Option<Move> {
        self.table.get(context).copied()
    }

    /// True when every context has the shape its class allows.
    pub fn is_well_formed(&self) -> bool {
        self.table.iter().all(|(ctx, mv)| {
            let shape_ok = match self.class {
                StrategyClass::Full => match self.player {
                    Player::Alice => ctx.seen.len() == ctx.round,
                    Player::Bob => ctx.seen.len() == ctx.round + 1,
                },
                StrategyClass::Markov => ctx.seen.len() <= 1,
                StrategyClass::Predetermined => ctx.seen.is_empty(),
            };
            let kinds_ok = match self.player {
                Player::Alice => {
                    matches!(mv, Move::Menu(_))
                        && ctx.seen.iter().all(|m| matches!(m, Move::Pick(_)))
                }
                Player::Bob => {
                    matches!(mv, Move::Pick(_))
                        && ctx.seen.iter().all(|m| matches!(m, Move::Menu(_)))
                }
            };
            shape_ok && kinds_ok
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("strategy serialization is infallible")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("strategy serialization is infallible")
    }

    fn to_file(&self) -> StrategyFile {
        StrategyFile {
            player: self.player,
            class: self.class,
            entries: self
                .table
                .iter()
                .map(|(c, &m)| Entry {
                    context: c.clone(),
                    mv: m,
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Strategy> {
        let file: StrategyFile = serde_json::from_str(text)?;
        let mut s = Strategy::new(file.player, file.class);
        for e in file.entries {
            if s.table.insert(e.context.clone(), e.mv).is_some() {
                return Err(Error::Format(format!("duplicate context {}", e.context)));
            }
        }
        if !s.is_well_formed() {
            return Err(Error::Format(
                "strategy entries do not match the declared player and class".into(),
            ));
        }
        Ok(s)
    }
}

impl Serialize for Strategy {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(serializer)
    }
}
