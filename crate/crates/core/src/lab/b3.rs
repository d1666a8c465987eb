use crate::error::{Error, Result};
use crate::game::{make_mildly_rothberger, Caps, Context, Move, Player, Strategy, StrategyClass};
use crate::topology::FiniteSpace;

/// Markov strategy for Bob in the mildly Rothberger game: in round `i` he
/// takes the least member of Alice's clopen cover that meets the
/// `i`-th quasi-component (cycling through the blocks).
///
/// Any clopen set meeting a quasi-component contains it, so after one
/// round per block the selections cover the space. Menu indices refer to
/// [`make_mildly_rothberger`]'s menu order; the table covers rounds
/// `0..n`, the saturating horizon.
pub fn b3_markov_strategy(space: &FiniteSpace, caps: &Caps) -> Result<Strategy> {
    if space.n() == 0 {
        return Err(Error::EmptySpace);
    }
    let blocks = space.quasi_components()?.blocks;
    let game = make_mildly_rothberger(space, space.n(), caps)?;
    let mut s = Strategy::new(Player::Bob, StrategyClass::Markov);
    for round in 0..space.n() {
        let block = blocks[round % blocks.len()];
        for (a, menu) in game.menus.menus.iter().enumerate() {
            let pick = *menu
                .iter()
                .find(|m| m.intersects(block))
                .expect("a cover meets every block");
            s.insert(
                Context {
                    round,
                    seen: vec![Move::Menu(a)],
                },
                Move::Pick(pick),
            );
        }
    }
    Ok(s)
}
