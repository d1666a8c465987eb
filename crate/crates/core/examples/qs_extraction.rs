//! Extract the indexed family of quasi-components from an Alice strategy.
//!
//! cargo run --example qs_extraction

use topogame::game::{make_quasi_component_clopen, solve, Caps};
use topogame::lab::{
    block_zero_strategy, descending_sequences, extract_qs_tree, singleton_sequences,
};
use topogame::FiniteSpace;

fn main() -> topogame::Result<()> {
    let caps = Caps::default();
    let space = FiniteSpace::discrete(3);
    let verdict = solve(&make_quasi_component_clopen(&space, 3, &caps)?)?;
    for (name, seqs) in [
        ("singleton", singleton_sequences(&space)?),
        ("descending", descending_sequences(&space)?),
    ] {
        let r = extract_qs_tree(&space, &verdict.witness, &seqs, 2, &caps)?;
        println!(
            "{name} sequences: {} nodes, covers = {}",
            r.tree.len(),
            r.covers
        );
        if name == "singleton" {
            for (s, block) in &r.tree {
                println!("  Q{s:?} = {}", r.blocks[*block]);
            }
        }
    }

    let space = FiniteSpace::discrete(2);
    let r = extract_qs_tree(
        &space,
        &block_zero_strategy(3),
        &singleton_sequences(&space)?,
        2,
        &caps,
    )?;
    println!("always block 0 on discrete(2): covers = {}", r.covers);
    if let Some(cx) = r.counterexample {
        let bob: Vec<String> = cx
            .transcript
            .rounds
            .iter()
            .map(|r| r.bob.to_string())
            .collect();
        println!(
            "  missed point {}; Bob plays {}; winner {}",
            cx.point,
            bob.join(" "),
            cx.transcript.winner
        );
    }
    Ok(())
}
