//! Count labeled topologies by size, with connected and zero-dimensional
//! tallies.
//!
//! cargo run --example enumerate_topologies

use topogame::topology::enumerate_topologies;

fn main() -> topogame::Result<()> {
    println!(
        "{:>2} {:>6} {:>10} {:>17}",
        "n", "spaces", "connected", "zero-dimensional"
    );
    for n in 0..=4 {
        let spaces = enumerate_topologies(n)?;
        let connected = spaces
            .iter()
            .filter(|s| s.n() > 0 && s.is_connected())
            .count();
        let zero_dim = spaces.iter().filter(|s| s.is_zero_dimensional()).count();
        println!("{n:>2} {:>6} {connected:>10} {zero_dim:>17}", spaces.len());
    }
    match enumerate_topologies(5) {
        Err(e) => println!("n = 5: {e}"),
        Ok(s) => println!("n = 5: {} spaces", s.len()),
    }
    Ok(())
}
