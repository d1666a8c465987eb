//! Solve the five named games at a few horizons and show a witness.
//!
//! cargo run --example solve_games

use topogame::game::{solve, Caps, GameKind};
use topogame::FiniteSpace;

fn main() -> topogame::Result<()> {
    let space = FiniteSpace::from_json(r#"{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}"#)?;
    let caps = Caps::default();
    println!("{:<24} {:>5} {:>5} {:>5}", "game", "k=1", "k=2", "k=3");
    for kind in GameKind::ALL {
        let winners = (1..=3)
            .map(|k| Ok(solve(&kind.build(&space, k, &caps)?)?.winner.to_string()))
            .collect::<topogame::Result<Vec<_>>>()?;
        println!(
            "{:<24} {:>5} {:>5} {:>5}",
            kind.name(),
            winners[0],
            winners[1],
            winners[2]
        );
    }
    let verdict = solve(&GameKind::MildlyRothberger.build(&space, 2, &caps)?)?;
    println!(
        "\nmildly-rothberger k=2: {} wins after {} states; witness:\n{}",
        verdict.winner,
        verdict.stats.explored_states,
        verdict.witness.to_json_pretty()
    );
    Ok(())
}
