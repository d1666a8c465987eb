//! Cover families over a finite space: open and clopen covers, local
//! point-bases, and the selection-basis / reflection relations between
//! families of covers.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::topology::FiniteSpace;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Default cap on enumerated covers and choice functions.
pub const DEFAULT_COVER_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    Open,
    Clopen,
}

impl CoverKind {
    fn admits(self, space: &FiniteSpace, set: PointSet) -> bool {
        match self {
            CoverKind::Open => space.is_open(set),
            CoverKind::Clopen => space.is_clopen(set),
        }
    }

    fn name(self) -> &'static str {
        match self {
            CoverKind::Open => "open",
            CoverKind::Clopen => "clopen",
        }
    }

    /// Nonempty sets of this kind, in move order.
    fn candidates(self, space: &FiniteSpace) -> Vec<PointSet> {
        match self {
            CoverKind::Open => space.opens().to_vec(),
            CoverKind::Clopen => space.clopen_algebra().sets,
        }
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect()
    }
}

/// A deduplicated family of open (or clopen) sets whose union is the space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cover {
    members: Vec<PointSet>,
    #[serde(skip)]
    kind: Option<CoverKind>,
}

impl Cover {
    pub fn new(space: &FiniteSpace, kind: CoverKind, members: &[PointSet]) -> Result<Cover> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| !kind.admits(space, m)) {
            return Err(Error::NotInTopology {
                set: bad,
                kind: kind.name(),
            });
        }
        if union_of(&members) != space.full() {
            return Err(Error::Format(format!(
                "members {members:?} do not cover the space"
            )));
        }
        Ok(Cover {
            members,
            kind: Some(kind),
        })
    }

    fn trusted(mut members: Vec<PointSet>, kind: CoverKind) -> Cover {
        members.sort_unstable();
        Cover {
            members,
            kind: Some(kind),
        }
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn kind(&self) -> Option<CoverKind> {
        self.kind
    }

    /// No member can be removed while keeping the union.
    pub fn is_irredundant(&self) -> bool {
        is_irredundant(&self.members)
    }
}

pub(crate) fn union_of(sets: &[PointSet]) -> PointSet {
    sets.iter().fold(PointSet::EMPTY, |acc, &s| acc.union(s))
}

fn is_irredundant(members: &[PointSet]) -> bool {
    let full = union_of(members);
    (0..members.len()).all(|i| {
        let rest = members
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(PointSet::EMPTY, |acc, (_, &s)| acc.union(s));
        rest != full
    })
}

/// All irredundant covers of the given kind, ordered by sorted member list.
///
/// On the empty space the only such cover is the empty family.
pub fn reduced_covers(space: &FiniteSpace, kind: CoverKind, cap: usize) -> Result<Vec<Cover>> {
    let candidates = kind.candidates(space);
    let full = space.full();
    let mut found: BTreeSet<Vec<PointSet>> = BTreeSet::new();
    let mut generated = 0usize;
    let mut chosen = Vec::new();

    // Cover the least uncovered point with some candidate, repeat. Every
    // irredundant cover is reachable this way because each of its members
    // is needed for some point.
    fn grow(
        candidates: &[PointSet],
        full: PointSet,
        covered: PointSet,
        chosen: &mut Vec<PointSet>,
        found: &mut BTreeSet<Vec<PointSet>>,
        generated: &mut usize,
        cap: usize,
    ) -> Result<()> {
        if covered == full {
            *generated += 1;
            if *generated > cap.saturating_mul(64) {
                return Err(Error::cap(
                    "cover search nodes",
                    *generated,
                    cap.saturating_mul(64),
                ));
            }
            if is_irredundant(chosen) {
                let mut members = chosen.clone();
                members.sort_unstable();
                found.insert(members);
                if found.len() > cap {
                    return Err(Error::cap("irredundant covers", found.len(), cap));
                }
            }
            return Ok(());
        }
        let p = full
            .difference(covered)
            .min()
            .expect("uncovered point exists");
        for &c in candidates.iter().filter(|c| c.contains(p)) {
            chosen.push(c);
            grow(
                candidates,
                full,
                covered.union(c),
                chosen,
                found,
                generated,
                cap,
            )?;
            chosen.pop();
        }
        Ok(())
    }

    grow(
        &candidates,
        full,
        PointSet::EMPTY,
        &mut chosen,
        &mut found,
        &mut generated,
        cap,
    )?;
    Ok(found.into_iter().map(|m| Cover::trusted(m, kind)).collect())
}

/// Every deduplicated cover of the given kind with nonempty members.
pub fn all_covers(space: &FiniteSpace, kind: CoverKind, cap: usize) -> Result<Vec<Cover>> {
    let candidates = kind.candidates(space);
    if candidates.len() >= 40 || (1usize << candidates.len()) > cap.saturating_mul(64) {
        return Err(Error::cap(
            "cover subsets",
            1usize
                .checked_shl(candidates.len() as u32)
                .unwrap_or(usize::MAX),
            cap,
        ));
    }
    let full = space.full();
    let mut covers = Vec::new();
    for mask in 0u64..1 << candidates.len() {
        let members: Vec<PointSet> = PointSet(mask).points().map(|i| candidates[i]).collect();
        if union_of(&members) == full {
            covers.push(Cover::trusted(members, kind));
            if covers.len() > cap {
                return Err(Error::cap("covers", covers.len(), cap));
            }
        }
    }
    covers.sort();
    Ok(covers)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MenuLabel {
    /// Open covers.
    #[serde(rename = "open")]
    O,
    /// Clopen covers.
    #[serde(rename = "clopen")]
    CO,
    /// Local point-bases: the open neighbourhoods of each point.
    #[serde(rename = "point-open")]
    PX,
    /// Clopen local bases: the clopen neighbourhoods of each point.
    #[serde(rename = "point-clopen")]
    CX,
    #[serde(rename = "custom")]
    Custom,
}

/// An indexed list of menus. Alice's move in a selection game is a menu
/// index; Bob's is a member of that menu.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MenuFamily {
    pub menus: Vec<Vec<PointSet>>,
    pub label: MenuLabel,
}

impl MenuFamily {
    pub fn new(label: MenuLabel, menus: Vec<Vec<PointSet>>) -> MenuFamily {
        let menus = menus
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m.dedup();
                m
            })
            .collect();
        MenuFamily { menus, label }
    }

    pub fn from_covers(label: MenuLabel, covers: &[Cover]) -> MenuFamily {
        MenuFamily::new(label, covers.iter().map(|c| c.members.clone()).collect())
    }

    pub fn len(&self) -> usize {
        self.menus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.menus.is_empty()
    }

    /// Number of choice functions, saturating.
    pub fn choice_count(&self) -> usize {
        self.menus
            .iter()
            .fold(1usize, |acc, m| acc.saturating_mul(m.len()))
    }
}

/// One member picked from each menu of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceFunction {
    pub assignment: Vec<PointSet>,
}

impl ChoiceFunction {
    /// The set of chosen members.
    pub fn range(&self) -> Vec<PointSet> {
        let mut r = self.assignment.clone();
        r.sort_unstable();
        r.dedup();
        r
    }
}

pub fn choice_functions(family: &MenuFamily, cap: usize) -> Result<Vec<ChoiceFunction>> {
    let count = family.choice_count();
    if count > cap {
        return Err(Error::cap("choice functions", count, cap));
    }
    let mut out = vec![ChoiceFunction {
        assignment: Vec::with_capacity(family.len()),
    }];
    for menu in &family.menus {
        out = out
            .into_iter()
            .flat_map(|f| {
                menu.iter().map(move |&m| {
                    let mut a = f.assignment.clone();
                    a.push(m);
                    ChoiceFunction { assignment: a }
                })
            })
            .collect();
    }
    Ok(out)
}

/// One menu per point: the nonempty open (or clopen) sets containing it.
pub fn point_base_family(space: &FiniteSpace, kind: CoverKind) -> Result<MenuFamily> {
    if space.n() == 0 {
        return Err(Error::EmptySpace);
    }
    let candidates = kind.candidates(space);
    let menus = (0..space.n())
        .map(|x| {
            candidates
                .iter()
                .copied()
                .filter(|c| c.contains(x))
                .collect()
        })
        .collect();
    let label = match kind {
        CoverKind::Open => MenuLabel::PX,
        CoverKind::Clopen => MenuLabel::CX,
    };
    Ok(MenuFamily::new(label, menus))
}

fn canonical(family: &[Vec<PointSet>]) -> BTreeSet<Vec<PointSet>> {
    family
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect()
}

/// `candidate ⊆ target` and every member of `target` has a subset in
/// `candidate`, comparing covers as sets of point-sets.
pub fn is_selection_basis(candidate: &[Vec<PointSet>], target: &[Vec<PointSet>]) -> bool {
    let cand = canonical(candidate);
    let targ = canonical(target);
    if !cand.is_subset(&targ) {
        return false;
    }
    targ.iter().all(|y| {
        cand.iter()
            .any(|x| x.iter().all(|m| y.binary_search(m).is_ok()))
    })
}

/// Whether the ranges of all choice functions on `family` form a selection
/// basis for `target`.
pub fn is_reflection(family: &MenuFamily, target: &[Vec<PointSet>], cap: usize) -> Result<bool> {
    let ranges: Vec<Vec<PointSet>> = choice_functions(family, cap)?
        .iter()
        .map(ChoiceFunction::range)
        .collect();
    Ok(is_selection_basis(&ranges, target))
}

pub fn cover_members(covers: &[Cover]) -> Vec<Vec<PointSet>> {
    covers.iter().map(|c| c.members.clone()).collect()
}

/// Serialized cover family: `{ "space": {...}, "kind": "clopen", "menus": [[[0],[1,2]], ...] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverFamilyFile {
    pub space: crate::topology::SpaceFile,
    pub kind: FamilyKind,
    pub menus: Vec<Vec<PointSet>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Open,
    Clopen,
    Custom,
}

impl CoverFamilyFile {
    /// Validates the space, and for open/clopen kinds that every menu is a
    /// cover of that kind.
    pub fn load(text: &str) -> Result<(FiniteSpace, MenuFamily)> {
        let file: CoverFamilyFile = serde_json::from_str(text)?;
        let space = FiniteSpace::from_file(&file.space)?;
        let label = match file.kind {
            FamilyKind::Open => MenuLabel::O,
            FamilyKind::Clopen => MenuLabel::CO,
            FamilyKind::Custom => MenuLabel::Custom,
        };
        let kind = match file.kind {
            FamilyKind::Open => Some(CoverKind::Open),
            FamilyKind::Clopen => Some(CoverKind::Clopen),
            FamilyKind::Custom => None,
        };
        for (i, menu) in file.menus.iter().enumerate() {
            if menu.is_empty() {
                return Err(Error::EmptyMenu(i));
            }
            if let Some(kind) = kind {
                Cover::new(&space, kind, menu)?;
            } else if let Some(&bad) = menu.iter().find(|m| !m.is_subset(space.full())) {
                return Err(Error::PointOutOfRange {
                    point: bad.max().unwrap_or(0),
                    n: space.n(),
                });
            }
        }
        Ok((space, MenuFamily::new(label, file.menus)))
    }

    pub fn from_family(space: &FiniteSpace, family: &MenuFamily) -> CoverFamilyFile {
        CoverFamilyFile {
            space: space.to_file(),
            kind: match family.label {
                MenuLabel::O => FamilyKind::Open,
                MenuLabel::CO => FamilyKind::Clopen,
                _ => FamilyKind::Custom,
            },
            menus: family.menus.clone(),
        }
    }
}
