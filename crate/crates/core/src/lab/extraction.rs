//! Extraction of a countable family of quasi-components from a winning
//! Alice strategy in the quasi-component-clopen game.
//!
//! Each block `Q` comes with a list of clopen sets `V_0, V_1, ...` whose
//! intersection is `Q`. Bob is restricted to answering `Q` with one of
//! them, which indexes the plays by sequences `s` of list positions; `Q_s`
//! is Alice's move after the answers named by `s`. If the `Q_s` miss a
//! point `y`, answering each `Q_s` with a `V_k` avoiding `y` gives a play
//! following Alice's strategy that she loses.

use crate::error::{Error, Result};
use crate::game::{
    make_quasi_component_clopen, Caps, Move, Player, RoundRecord, Strategy, Transcript,
};
use crate::pointset::PointSet;
use crate::topology::FiniteSpace;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// A point outside every extracted block.
    pub point: usize,
    /// A play following the strategy in which Bob never covers `point`.
    pub transcript: Transcript,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtractionResult {
    /// Block index `Q_s` for every index sequence `s` in the tree.
    pub tree: BTreeMap<Vec<usize>, usize>,
    /// The blocks, in the space's quasi-component order.
    pub blocks: Vec<PointSet>,
    /// Whether the extracted blocks cover the space.
    pub covers: bool,
    pub counterexample: Option<Counterexample>,
}

impl ExtractionResult {
    pub fn union(&self) -> PointSet {
        self.tree
            .values()
            .fold(PointSet::EMPTY, |acc, &b| acc.union(self.blocks[b]))
    }
}

/// One-element clopen lists `[Q]`, valid for every block.
pub fn singleton_sequences(space: &FiniteSpace) -> Result<Vec<Vec<PointSet>>> {
    Ok(space
        .quasi_components()?
        .blocks
        .into_iter()
        .map(|q| vec![q])
        .collect())
}

/// For each block, every clopen superset ordered from largest to smallest
/// (ties by bit order), ending at the block itself.
pub fn descending_sequences(space: &FiniteSpace) -> Result<Vec<Vec<PointSet>>> {
    let clopens = space.clopen_algebra().sets;
    Ok(space
        .quasi_components()?
        .blocks
        .into_iter()
        .map(|q| {
            let mut seq: Vec<PointSet> = clopens
                .iter()
                .copied()
                .filter(|u| q.is_subset(*u))
                .collect();
            seq.sort_by_key(|u| (std::cmp::Reverse(u.len()), *u));
            seq
        })
        .collect())
}

fn validate_sequences(
    space: &FiniteSpace,
    blocks: &[PointSet],
    seqs: &[Vec<PointSet>],
) -> Result<()> {
    if seqs.len() != blocks.len() {
        return Err(Error::Format(format!(
            "expected {} clopen sequences, one per quasi-component, got {}",
            blocks.len(),
            seqs.len()
        )));
    }
    for (&block, seq) in blocks.iter().zip(seqs) {
        let invalid = |reason: String| Error::InvalidClopenSequence { block, reason };
        if seq.is_empty() {
            return Err(invalid("sequence is empty".into()));
        }
        for &v in seq {
            if !space.is_clopen(v) {
                return Err(invalid(format!("{v} is not clopen")));
            }
            if !block.is_subset(v) {
                return Err(invalid(format!("{v} does not contain the block")));
            }
        }
        let meet = seq.iter().fold(space.full(), |acc, v| acc.intersection(*v));
        if meet != block {
            return Err(invalid(format!("intersection is {meet}")));
        }
    }
    Ok(())
}

fn alice_block(phi: &Strategy, bob_moves: &[PointSet], blocks: usize) -> Result<Option<usize>> {
    let ctx = phi.context(bob_moves.len(), &[], bob_moves);
    match phi.respond(&ctx) {
        None => Ok(None),
        Some(Move::Menu(b)) if b < blocks => Ok(Some(b)),
        Some(mv) => Err(Error::IllegalMove {
            context: ctx.to_string(),
            mv: mv.to_string(),
        }),
    }
}

/// Builds the tree `{Q_s : |s| <= depth}` for the Alice strategy `phi` in
/// the quasi-component-clopen game. Nodes where `phi` has no entry are
/// absent, as are their descendants.
pub fn extract_qs_tree(
    space: &FiniteSpace,
    phi: &Strategy,
    clopen_seqs: &[Vec<PointSet>],
    depth: usize,
    caps: &Caps,
) -> Result<ExtractionResult> {
    if depth > caps.depth {
        return Err(Error::DepthCapExceeded {
            depth,
            cap: caps.depth,
        });
    }
    if phi.player != Player::Alice {
        return Err(Error::Format("extraction needs an Alice strategy".into()));
    }
    if space.n() == 0 {
        return Err(Error::EmptySpace);
    }
    let blocks = space.quasi_components()?.blocks;
    validate_sequences(space, &blocks, clopen_seqs)?;

    // (s, Bob's answers along s, block Q_s)
    let mut tree = BTreeMap::new();
    let mut frontier: Vec<(Vec<usize>, Vec<PointSet>)> = vec![(Vec::new(), Vec::new())];
    for level in 0..=depth {
        let mut next = Vec::new();
        for (s, answers) in frontier {
            let Some(q) = alice_block(phi, &answers, blocks.len())? else {
                continue;
            };
            tree.insert(s.clone(), q);
            if tree.len() > caps.states {
                return Err(Error::cap("extraction tree nodes", tree.len(), caps.states));
            }
            if level < depth {
                for (k, &v) in clopen_seqs[q].iter().enumerate() {
                    let mut s = s.clone();
                    s.push(k);
                    let mut answers = answers.clone();
                    answers.push(v);
                    next.push((s, answers));
                }
            }
        }
        frontier = next;
    }

    let mut result = ExtractionResult {
        tree,
        blocks,
        covers: false,
        counterexample: None,
    };
    let missed = space.full().difference(result.union());
    result.covers = missed.is_empty();
    if let Some(y) = missed.min() {
        result.counterexample = Some(counterexample(space, phi, &result, clopen_seqs, y, caps)?);
    }
    Ok(result)
}

/// Follows the tree, answering each `Q_s` with the first listed clopen that
/// avoids `y`. One exists because the list intersects to `Q_s` and `y` is
/// outside every `Q_s`.
fn counterexample(
    space: &FiniteSpace,
    phi: &Strategy,
    result: &ExtractionResult,
    clopen_seqs: &[Vec<PointSet>],
    y: usize,
    caps: &Caps,
) -> Result<Counterexample> {
    let mut s = Vec::new();
    let mut rounds = Vec::new();
    while let Some(&q) = result.tree.get(&s) {
        let (k, &v) = clopen_seqs[q]
            .iter()
            .enumerate()
            .find(|(_, v)| !v.contains(y))
            .expect("some listed clopen avoids y");
        rounds.push(RoundRecord { alice: q, bob: v });
        s.push(k);
    }
    let game = make_quasi_component_clopen(space, rounds.len(), caps)?;
    let selections: Vec<PointSet> = rounds.iter().map(|r| r.bob).collect();
    let winner = crate::game::outcome(&game, &selections);
    let transcript = Transcript { rounds, winner };
    debug_assert!(transcript.follows(phi));
    Ok(Counterexample {
        point: y,
        transcript,
    })
}
