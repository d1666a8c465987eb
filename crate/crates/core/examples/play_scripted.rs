//! Drive an interactive session from a script instead of a terminal.
//!
//! cargo run --example play_scripted

use topogame::game::{make_point_clopen, Caps, Player};
use topogame::session::{play_session, SessionEnd};
use topogame::FiniteSpace;

fn main() -> topogame::Result<()> {
    let game = make_point_clopen(&FiniteSpace::discrete(2), 2, &Caps::default())?;
    // an out-of-range index first, then points 0 and 1
    let script = "9\n0\n1\n";
    let mut shown = Vec::new();
    let end = play_session(&game, Player::Alice, script.as_bytes(), &mut shown)?;
    print!("{}", String::from_utf8_lossy(&shown));
    if let SessionEnd::Finished(t) = end {
        println!("transcript: {}", serde_json::to_string(&t)?);
    }
    Ok(())
}
