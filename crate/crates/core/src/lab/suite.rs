//! Batch runs of the checks over every labeled topology up to a size.

use crate::error::{Error, Result};
use crate::game::Caps;
use crate::lab::checks::{
    check_b1, check_b3, check_duality, check_extraction, check_th314, check_zero_dim_equivalence,
    CheckLine, CheckReport,
};
use crate::topology::{enumerate_topologies, FiniteSpace};
use rayon::prelude::*;
use serde_json::json;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Duality,
    ZeroDim,
    B1,
    B3,
    Extraction,
    Th314,
    All,
}

type CheckFn = fn(&FiniteSpace, &Caps) -> Result<CheckReport>;

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Duality,
        Suite::ZeroDim,
        Suite::B1,
        Suite::B3,
        Suite::Extraction,
        Suite::Th314,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::ZeroDim => "zerodim",
            Suite::B1 => "b1",
            Suite::B3 => "b3",
            Suite::Extraction => "extraction",
            Suite::Th314 => "th314",
            Suite::All => "all",
        }
    }

    fn checks(self) -> Vec<CheckFn> {
        match self {
            Suite::Duality => vec![check_duality],
            Suite::ZeroDim => vec![check_zero_dim_equivalence],
            Suite::B1 => vec![check_b1],
            Suite::B3 => vec![check_b3],
            Suite::Extraction => vec![check_extraction],
            Suite::Th314 => vec![check_th314],
            Suite::All => vec![
                check_duality,
                check_zero_dim_equivalence,
                check_b1,
                check_b3,
                check_extraction,
                check_th314,
            ],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown suite {s:?}")))
    }
}

/// Every labeled space with `1 <= n <= n_max`, tagged `n{n}#{index}`.
pub fn labeled_corpus(n_max: usize) -> Result<Vec<(String, FiniteSpace)>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for (i, space) in enumerate_topologies(n)?.into_iter().enumerate() {
            out.push((format!("n{n}#{i}"), space));
        }
    }
    Ok(out)
}

/// Runs `suite` over the corpus on `threads` workers (0 = rayon default).
/// Lines come back in corpus order whatever the completion order. Suites
/// that include the zero-dimensional check end with a summary line naming
/// the first space whose open and clopen games diverge.
pub fn run_suite(
    suite: Suite,
    n_max: usize,
    caps: &Caps,
    threads: usize,
) -> Result<Vec<CheckLine>> {
    let corpus = labeled_corpus(n_max)?;
    let checks = suite.checks();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Format(format!("thread pool: {e}")))?;
    let per_space: Vec<Vec<CheckLine>> = pool.install(|| {
        corpus
            .par_iter()
            .map(|(id, space)| {
                checks
                    .iter()
                    .map(|check| check(space, caps).map(|r| r.into_line(id)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut lines: Vec<CheckLine> = per_space.into_iter().flatten().collect();
    if matches!(suite, Suite::ZeroDim | Suite::All) {
        lines.push(zero_dim_summary(&lines, n_max));
    }
    Ok(lines)
}

/// Divergences first appear at three points, so smaller corpora pass
/// vacuously.
fn zero_dim_summary(lines: &[CheckLine], n_max: usize) -> CheckLine {
    let divergent: Vec<&CheckLine> = lines
        .iter()
        .filter(|l| l.check == "zerodim" && !l.facts["first_divergence"].is_null())
        .collect();
    let first = divergent.first();
    CheckLine {
        space_id: "corpus".into(),
        check: "zerodim-witness".into(),
        horizon: first
            .and_then(|l| l.facts["first_divergence"].as_u64())
            .unwrap_or(0) as usize,
        facts: json!({
            "divergent_spaces": divergent.len(),
            "first_witness": first.map(|l| l.space_id.clone()),
            "n_max": n_max,
        }),
        pass: !divergent.is_empty() || n_max < 3,
    }
}
