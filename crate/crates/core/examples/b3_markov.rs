//! Bob's block-cycling Markov strategy in the mildly Rothberger game.
//!
//! cargo run --example b3_markov

use topogame::game::{make_mildly_rothberger, min_win_horizon, verify_winning, Caps, Player};
use topogame::lab::b3_markov_strategy;
use topogame::FiniteSpace;

fn main() -> topogame::Result<()> {
    let caps = Caps::default();
    let space = FiniteSpace::from_json(r#"{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}"#)?;
    let strategy = b3_markov_strategy(&space, &caps)?;
    let game = make_mildly_rothberger(&space, 2, &caps)?;
    for (i, menu) in game.menus.menus.iter().enumerate() {
        let sets: Vec<String> = menu.iter().map(ToString::to_string).collect();
        println!("menu {i}: {}", sets.join(" "));
    }
    for (context, mv) in &strategy.table {
        println!("{context} -> {mv}");
    }
    for k in 1..=3 {
        let wins = verify_winning(&make_mildly_rothberger(&space, k, &caps)?, &strategy)?;
        println!("wins at k={k}: {wins}");
    }
    let d4 = FiniteSpace::discrete(4);
    let min = min_win_horizon(|k| make_mildly_rothberger(&d4, k, &caps), Player::Bob, 4)?;
    println!("discrete(4): least winning horizon for Bob = {min:?}");
    Ok(())
}
