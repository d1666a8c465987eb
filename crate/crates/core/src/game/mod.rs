//! Bounded-horizon selection games `G₁(A, B)` and `G₁(A, ¬B)`.

mod play;
mod solver;
mod spec;
mod strategy;

pub(crate) use play::outcome;
pub use play::{playout, verify_winning, RoundRecord, Transcript};
pub use solver::{
    game_value, min_win_horizon, selection_principle, solve, solve_from, solve_restricted, Advisor,
    Outcome, RestrictedVerdict, Stats, Verdict,
};
pub use spec::{
    make_mildly_rothberger, make_point_clopen, make_point_open, make_quasi_component_clopen,
    make_rothberger, GameKind, GameSpec, TargetPredicate,
};
pub use strategy::{Context, Move, Player, Strategy, StrategyClass};

use serde::{Deserialize, Serialize};

/// Enumeration and search budgets. Exceeding one is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub covers: usize,
    pub states: usize,
    pub depth: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            covers: crate::covers::DEFAULT_COVER_CAP,
            states: 10_000_000,
            depth: 16,
        }
    }
}
