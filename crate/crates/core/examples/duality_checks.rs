//! Run the duality, b1, b3, extraction and th314 suites over small spaces.
//!
//! cargo run --release --example duality_checks [n_max]

use topogame::game::Caps;
use topogame::lab::{run_suite, Suite};

fn main() -> topogame::Result<()> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    for suite in [
        Suite::Duality,
        Suite::B1,
        Suite::B3,
        Suite::Extraction,
        Suite::Th314,
    ] {
        let lines = run_suite(suite, n_max, &Caps::default(), 0)?;
        let passed = lines.iter().filter(|l| l.pass).count();
        println!("{suite:<10} {passed}/{} spaces pass", lines.len());
    }
    let lines = run_suite(Suite::Duality, 2, &Caps::default(), 1)?;
    println!("\nsample line:\n{}", lines[1].to_json());
    Ok(())
}
