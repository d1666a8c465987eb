//! Move winning strategies between the point-clopen and the
//! quasi-component-clopen game.
//!
//! cargo run --example b1_translations

use topogame::game::{solve, Caps, GameKind};
use topogame::lab::{translate_b1, Direction};
use topogame::FiniteSpace;

fn main() -> topogame::Result<()> {
    let space = FiniteSpace::from_json(r#"{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}"#)?;
    let caps = Caps::default();
    for k in 1..=2 {
        for (kind, from_pc) in [
            (GameKind::PointClopen, true),
            (GameKind::QuasiComponentClopen, false),
        ] {
            let verdict = solve(&kind.build(&space, k, &caps)?)?;
            let direction = Direction::for_player(verdict.winner, from_pc);
            let report = translate_b1(direction, &verdict.witness, &space, k, &caps)?;
            println!(
                "k={k} {direction}: {} entries -> {} entries, output wins: {}",
                report.input.len(),
                report.output.len(),
                report.output_winning
            );
            if k == 1 && from_pc {
                println!("{}", report.output.to_json_pretty());
            }
        }
    }
    Ok(())
}
