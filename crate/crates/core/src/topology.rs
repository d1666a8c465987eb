//! Finite topological spaces on the points `{0..n-1}`.
//!
//! A [`FiniteSpace`] is stored as its sorted, deduplicated family of open
//! sets. Everything else (clopens, neighbourhoods, the two partitions)
//! is derived on demand.

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Largest `n` accepted by [`enumerate_topologies`].
pub const ENUMERATION_MAX_POINTS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<PointSet>,
}

/// Serialized form of a space: `{ "n": 2, "opens": [[], [0], [0, 1]] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceFile {
    pub n: usize,
    pub opens: Vec<PointSet>,
}

/// The Boolean algebra of sets that are both open and closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClopenAlgebra {
    pub sets: Vec<PointSet>,
}

/// Pairwise-disjoint nonempty blocks covering the space, ordered by least point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub blocks: Vec<PointSet>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(x))
    }

    fn from_labels(labels: &[usize]) -> Partition {
        let mut blocks: Vec<PointSet> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for (x, &label) in labels.iter().enumerate() {
            match seen.iter().position(|&l| l == label) {
                Some(i) => blocks[i] = blocks[i].union(PointSet::singleton(x)),
                None => {
                    seen.push(label);
                    blocks.push(PointSet::singleton(x));
                }
            }
        }
        Partition { blocks }
    }
}

/// Checks the topology axioms and returns the deduplicated family.
///
/// This rejects; it never repairs. Use [`FiniteSpace::generated_by`] to close
/// a family of sets under union and intersection.
pub fn validate_topology(candidate: &[PointSet], n: usize) -> Result<FiniteSpace> {
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints { n, max: MAX_POINTS });
    }
    let full = PointSet::full(n);
    for set in candidate {
        if !set.is_subset(full) {
            let point = set.difference(full).min().unwrap_or(n);
            return Err(Error::PointOutOfRange { point, n });
        }
    }
    let mut opens = candidate.to_vec();
    opens.sort_unstable();
    opens.dedup();
    if opens.binary_search(&PointSet::EMPTY).is_err() || opens.binary_search(&full).is_err() {
        return Err(Error::MissingEmptyOrFull);
    }
    for (i, &a) in opens.iter().enumerate() {
        for &b in &opens[i + 1..] {
            if opens.binary_search(&a.union(b)).is_err() {
                return Err(Error::NotClosedUnderUnion(a, b));
            }
            if opens.binary_search(&a.intersection(b)).is_err() {
                return Err(Error::NotClosedUnderIntersection(a, b));
            }
        }
    }
    Ok(FiniteSpace { n, opens })
}

impl FiniteSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    pub fn is_clopen(&self, set: PointSet) -> bool {
        self.is_open(set) && self.is_open(set.complement(self.n))
    }

    /// Every subset is open.
    pub fn discrete(n: usize) -> FiniteSpace {
        assert!(n <= 16, "discrete space materializes 2^n opens");
        let opens = (0..1u64 << n).map(PointSet).collect();
        FiniteSpace { n, opens }
    }

    pub fn indiscrete(n: usize) -> FiniteSpace {
        let mut opens = vec![PointSet::EMPTY, PointSet::full(n)];
        opens.dedup();
        FiniteSpace { n, opens }
    }

    /// The two-point space with opens `{∅, {0}, {0,1}}`.
    pub fn sierpinski() -> FiniteSpace {
        FiniteSpace {
            n: 2,
            opens: vec![PointSet(0b00), PointSet(0b01), PointSet(0b11)],
        }
    }

    /// The coarsest topology containing `generators`.
    pub fn generated_by(n: usize, generators: &[PointSet]) -> Result<FiniteSpace> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints { n, max: MAX_POINTS });
        }
        let full = PointSet::full(n);
        let mut family: BTreeSet<PointSet> = [PointSet::EMPTY, full].into_iter().collect();
        for &g in generators {
            if !g.is_subset(full) {
                let point = g.difference(full).min().unwrap_or(n);
                return Err(Error::PointOutOfRange { point, n });
            }
            family.insert(g);
        }
        loop {
            let current: Vec<PointSet> = family.iter().copied().collect();
            let mut grew = false;
            for (i, &a) in current.iter().enumerate() {
                for &b in &current[i + 1..] {
                    grew |= family.insert(a.union(b));
                    grew |= family.insert(a.intersection(b));
                }
            }
            if !grew {
                break;
            }
        }
        Ok(FiniteSpace {
            n,
            opens: family.into_iter().collect(),
        })
    }

    pub fn from_file(file: &SpaceFile) -> Result<FiniteSpace> {
        validate_topology(&file.opens, file.n)
    }

    pub fn to_file(&self) -> SpaceFile {
        SpaceFile {
            n: self.n,
            opens: self.opens.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<FiniteSpace> {
        let file: SpaceFile = serde_json::from_str(text)?;
        FiniteSpace::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("space serialization is infallible")
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                point: x,
                n: self.n,
            })
        }
    }

    /// Intersection of all open sets containing `x`; itself open.
    pub fn minimal_open_nbhd(&self, x: usize) -> Result<PointSet> {
        self.check_point(x)?;
        Ok(self
            .opens
            .iter()
            .filter(|u| u.contains(x))
            .fold(self.full(), |acc, &u| acc.intersection(u)))
    }

    pub fn clopen_algebra(&self) -> ClopenAlgebra {
        ClopenAlgebra {
            sets: self
                .opens
                .iter()
                .copied()
                .filter(|u| self.is_open(u.complement(self.n)))
                .collect(),
        }
    }

    /// Classes of the relation "every clopen set contains both points or neither".
    pub fn quasi_components(&self) -> Result<Partition> {
        if self.n == 0 {
            return Err(Error::EmptySpace);
        }
        let clopens = self.clopen_algebra().sets;
        // The membership pattern of a point across the clopen family is its label.
        let labels: Vec<Vec<bool>> = (0..self.n)
            .map(|x| clopens.iter().map(|c| c.contains(x)).collect())
            .collect();
        let mut distinct: Vec<&Vec<bool>> = Vec::new();
        let ids: Vec<usize> = labels
            .iter()
            .map(|l| match distinct.iter().position(|d| *d == l) {
                Some(i) => i,
                None => {
                    distinct.push(l);
                    distinct.len() - 1
                }
            })
            .collect();
        Ok(Partition::from_labels(&ids))
    }

    /// Connected components, computed from the specialization relation:
    /// two points are linked when one lies in the minimal neighbourhood of
    /// the other, and components are the classes of the generated
    /// equivalence.
    pub fn components(&self) -> Result<Partition> {
        if self.n == 0 {
            return Err(Error::EmptySpace);
        }
        let nbhds: Vec<PointSet> = (0..self.n)
            .map(|x| self.minimal_open_nbhd(x).expect("in range"))
            .collect();
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (x, nbhd) in nbhds.iter().enumerate() {
            for y in nbhd.points() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        let roots: Vec<usize> = (0..self.n).map(|x| find(&mut parent, x)).collect();
        Ok(Partition::from_labels(&roots))
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().map(|p| p.len() == 1).unwrap_or(false)
    }

    /// Zero-dimensional iff each minimal open neighbourhood is clopen.
    pub fn is_zero_dimensional(&self) -> bool {
        (0..self.n).all(|x| self.is_clopen(self.minimal_open_nbhd(x).expect("in range")))
    }
}

/// All labeled topologies on `n` points, each once, ordered lexicographically
/// by their sorted bit-encoded open families.
///
/// Finite topologies correspond one-to-one with preorders: a set is open iff
/// it is an up-set of the specialization preorder. We enumerate reflexive
/// relations, keep the transitive ones and read off their up-sets.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>> {
    if n > ENUMERATION_MAX_POINTS {
        return Err(Error::cap(
            "points for topology enumeration",
            n,
            ENUMERATION_MAX_POINTS,
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut spaces = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        // above[i] = points j with i ≤ j
        let mut above: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                above[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| {
            PointSet(above[i])
                .points()
                .all(|j| above[j] & !above[i] == 0)
        });
        if !transitive {
            continue;
        }
        let opens: Vec<PointSet> = (0..1u64 << n)
            .map(PointSet)
            .filter(|u| u.points().all(|x| above[x] & !u.bits() == 0))
            .collect();
        spaces.push(FiniteSpace { n, opens });
    }
    spaces.sort_by(|a, b| a.opens.cmp(&b.opens));
    Ok(spaces)
}

/// Every labeled topology with `1..=n_max` points, in order of `n`.
pub fn corpus(n_max: usize) -> Result<Vec<FiniteSpace>> {
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.extend(enumerate_topologies(n)?);
    }
    Ok(all)
}
