//! Predetermined Alice and Markov Bob strategies next to full-history play.
//!
//! cargo run --example strategy_classes

use topogame::game::{solve, solve_restricted, Caps, GameKind, Player, StrategyClass};
use topogame::FiniteSpace;

fn main() -> topogame::Result<()> {
    let caps = Caps::default();
    let spaces = [
        ("discrete(2)", FiniteSpace::discrete(2)),
        (
            "two blocks",
            FiniteSpace::from_json(r#"{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}"#)?,
        ),
    ];
    for (name, space) in &spaces {
        for kind in [
            GameKind::Rothberger,
            GameKind::MildlyRothberger,
            GameKind::PointClopen,
        ] {
            for k in 1..=space.n() {
                let game = kind.build(space, k, &caps)?;
                let full = solve(&game)?.winner;
                let pre = solve_restricted(&game, Player::Alice, StrategyClass::Predetermined)?;
                let mark = solve_restricted(&game, Player::Bob, StrategyClass::Markov)?;
                println!(
                    "{name:<12} {:<18} k={k}: winner {full:<5} alice-pre {:<5} bob-markov {}",
                    kind.name(),
                    pre.wins,
                    mark.wins
                );
            }
        }
    }
    let game = GameKind::Rothberger.build(&spaces[0].1, 1, &caps)?;
    let pre = solve_restricted(&game, Player::Alice, StrategyClass::Predetermined)?;
    if let Some(w) = pre.witness {
        println!(
            "\npredetermined Alice on discrete(2), k=1:\n{}",
            w.to_json_pretty()
        );
    }
    Ok(())
}
