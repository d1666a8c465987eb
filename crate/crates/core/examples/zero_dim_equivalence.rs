//! Open versus clopen games, on and off zero-dimensional spaces.
//!
//! cargo run --release --example zero_dim_equivalence

use topogame::game::{solve, Caps, GameKind};
use topogame::lab::{run_suite, Suite};
use topogame::{FiniteSpace, PointSet};

fn main() -> topogame::Result<()> {
    let caps = Caps::default();
    let gens: Vec<PointSet> = [&[0][..], &[1], &[0, 1, 2], &[0, 1, 3]]
        .iter()
        .map(|p| PointSet::from_points(p.iter().copied()))
        .collect();
    let circle = FiniteSpace::generated_by(4, &gens)?;
    println!(
        "pseudocircle zero-dimensional: {}",
        circle.is_zero_dimensional()
    );
    for kind in [GameKind::Rothberger, GameKind::MildlyRothberger] {
        let v = solve(&kind.build(&circle, 1, &caps)?)?;
        println!("  {kind} at k=1: {}", v.winner);
    }
    let lines = run_suite(Suite::ZeroDim, 4, &caps, 0)?;
    let zero_dim = lines
        .iter()
        .filter(|l| l.facts["zero_dimensional"] == true)
        .count();
    println!(
        "zero-dimensional spaces with n <= 4: {zero_dim}, all equal: {}",
        lines.iter().all(|l| l.pass)
    );
    println!("{}", lines.last().expect("summary line").to_json());
    Ok(())
}
