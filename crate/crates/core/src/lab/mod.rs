//! Strategy constructions and theorem checks built on the game engine.

mod b3;
mod checks;
mod extraction;
mod suite;
mod translate;

pub use b3::b3_markov_strategy;
pub use checks::{
    block_zero_strategy, check_b1, check_b3, check_duality, check_extraction, check_th314,
    check_zero_dim_equivalence, CheckLine, CheckReport,
};
pub use extraction::{
    descending_sequences, extract_qs_tree, singleton_sequences, Counterexample, ExtractionResult,
};
pub use suite::{labeled_corpus, run_suite, Suite};
pub use translate::{translate_b1, Direction, TranslationReport};
