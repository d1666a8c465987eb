//! Load a space from JSON and print its clopen and connectivity structure.
//!
//! cargo run --example analyze_space

use topogame::FiniteSpace;

fn main() -> topogame::Result<()> {
    let space = FiniteSpace::from_json(r#"{"n":3,"opens":[[],[0],[1,2],[0,1,2]]}"#)?;
    println!("opens:            {}", join(space.opens()));
    println!("clopens:          {}", join(&space.clopen_algebra().sets));
    println!("components:       {}", join(&space.components()?.blocks));
    println!(
        "quasi-components: {}",
        join(&space.quasi_components()?.blocks)
    );
    for x in 0..space.n() {
        println!("minimal nbhd of {x}: {}", space.minimal_open_nbhd(x)?);
    }
    println!("zero-dimensional: {}", space.is_zero_dimensional());
    println!(
        "sierpinski zero-dimensional: {}",
        FiniteSpace::sierpinski().is_zero_dimensional()
    );
    Ok(())
}

fn join(sets: &[topogame::PointSet]) -> String {
    sets.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
