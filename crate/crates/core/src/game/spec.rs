use crate::covers::{point_base_family, reduced_covers, CoverKind, MenuFamily, MenuLabel};
use crate::error::{Error, Result};
use crate::game::Caps;
use crate::pointset::PointSet;
use crate::topology::FiniteSpace;
use std::fmt;
use std::str::FromStr;

/// Bob's winning condition on the set of his selections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetPredicate {
    /// The selections cover the space. Monotone under adding selections.
    IsCoverOfSpace,
    /// The set of selections equals one of the listed families.
    MemberOfFamily(Vec<Vec<PointSet>>),
}

impl TargetPredicate {
    pub fn member_of(family: Vec<Vec<PointSet>>) -> TargetPredicate {
        let mut family: Vec<Vec<PointSet>> = family
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        family.sort();
        family.dedup();
        TargetPredicate::MemberOfFamily(family)
    }

    /// Evaluates the predicate on a raw list of selections.
    pub fn evaluate(&self, space: &FiniteSpace, selections: &[PointSet]) -> bool {
        match self {
            TargetPredicate::IsCoverOfSpace => {
                selections
                    .iter()
                    .fold(PointSet::EMPTY, |acc, &s| acc.union(s))
                    == space.full()
            }
            TargetPredicate::MemberOfFamily(family) => {
                let mut sel = selections.to_vec();
                sel.sort_unstable();
                sel.dedup();
                family.binary_search(&sel).is_ok()
            }
        }
    }
}

/// A bounded-horizon selection game `G₁(A, B)` or `G₁(A, ¬B)`.
///
/// Each round Alice names a menu by index and Bob picks one of its members.
/// Bob wins iff his selections satisfy the target (or fail it, when
/// `negated`). A round in which Alice has no menu at all ends the play.
#[derive(Clone, Debug)]
pub struct GameSpec {
    pub space: FiniteSpace,
    pub menus: MenuFamily,
    pub target: TargetPredicate,
    pub negated: bool,
    pub horizon: usize,
    pub caps: Caps,
}

impl GameSpec {
    pub fn new(
        space: FiniteSpace,
        menus: MenuFamily,
        target: TargetPredicate,
        negated: bool,
        horizon: usize,
        caps: Caps,
    ) -> Result<GameSpec> {
        if let Some(i) = menus.menus.iter().position(Vec::is_empty) {
            return Err(Error::EmptyMenu(i));
        }
        Ok(GameSpec {
            space,
            menus,
            target,
            negated,
            horizon,
            caps,
        })
    }

    pub fn with_horizon(&self, horizon: usize) -> GameSpec {
        GameSpec {
            horizon,
            ..self.clone()
        }
    }

    /// Same game with Alice's menus replaced.
    pub fn with_menus(&self, menus: MenuFamily) -> Result<GameSpec> {
        GameSpec::new(
            self.space.clone(),
            menus,
            self.target.clone(),
            self.negated,
            self.horizon,
            self.caps,
        )
    }

    /// Whether Bob wins a finished play with these selections.
    pub fn bob_wins_selection(&self, selections: &[PointSet]) -> bool {
        self.target.evaluate(&self.space, selections) != self.negated
    }

    pub fn menu(&self, index: usize) -> Option<&[PointSet]> {
        self.menus.menus.get(index).map(Vec::as_slice)
    }
}

fn cover_menus(space: &FiniteSpace, kind: CoverKind, caps: &Caps) -> Result<MenuFamily> {
    let label = match kind {
        CoverKind::Open => MenuLabel::O,
        CoverKind::Clopen => MenuLabel::CO,
    };
    let covers = reduced_covers(space, kind, caps.covers)?;
    let mut family = MenuFamily::from_covers(label, &covers);
    family.menus.retain(|m| !m.is_empty());
    Ok(family)
}

fn point_menus(space: &FiniteSpace, kind: CoverKind) -> Result<MenuFamily> {
    if space.n() == 0 {
        let label = match kind {
            CoverKind::Open => MenuLabel::PX,
            CoverKind::Clopen => MenuLabel::CX,
        };
        return Ok(MenuFamily::new(label, Vec::new()));
    }
    point_base_family(space, kind)
}

/// `G₁(O, O)` with irredundant open covers as Alice's menus.
pub fn make_rothberger(space: &FiniteSpace, horizon: usize, caps: &Caps) -> Result<GameSpec> {
    let menus = cover_menus(space, CoverKind::Open, caps)?;
    GameSpec::new(
        space.clone(),
        menus,
        TargetPredicate::IsCoverOfSpace,
        false,
        horizon,
        *caps,
    )
}

/// `G₁(C_O, C_O)` with irredundant clopen covers as Alice's menus.
pub fn make_mildly_rothberger(
    space: &FiniteSpace,
    horizon: usize,
    caps: &Caps,
) -> Result<GameSpec> {
    let menus = cover_menus(space, CoverKind::Clopen, caps)?;
    GameSpec::new(
        space.clone(),
        menus,
        TargetPredicate::IsCoverOfSpace,
        false,
        horizon,
        *caps,
    )
}

/// Point-open game, i.e. `G₁(P_X, ¬O)`: menu `i` is the open
/// neighbourhoods of point `i`.
pub fn make_point_open(space: &FiniteSpace, horizon: usize, caps: &Caps) -> Result<GameSpec> {
    let menus = point_menus(space, CoverKind::Open)?;
    GameSpec::new(
        space.clone(),
        menus,
        TargetPredicate::IsCoverOfSpace,
        true,
        horizon,
        *caps,
    )
}

/// Point-clopen game, i.e. `G₁(C_X, ¬C_O)`.
pub fn make_point_clopen(space: &FiniteSpace, horizon: usize, caps: &Caps) -> Result<GameSpec> {
    let menus = point_menus(space, CoverKind::Clopen)?;
    GameSpec::new(
        space.clone(),
        menus,
        TargetPredicate::IsCoverOfSpace,
        true,
        horizon,
        *caps,
    )
}

/// Quasi-component-clopen game: menu `i` is the clopen supersets of the
/// `i`-th quasi-component (blocks ordered by least point).
pub fn make_quasi_component_clopen(
    space: &FiniteSpace,
    horizon: usize,
    caps: &Caps,
) -> Result<GameSpec> {
    let menus = if space.n() == 0 {
        Vec::new()
    } else {
        let clopens = space.clopen_algebra().sets;
        space
            .quasi_components()?
            .blocks
            .iter()
            .map(|&b| {
                clopens
                    .iter()
                    .copied()
                    .filter(|&c| b.is_subset(c))
                    .collect()
            })
            .collect()
    };
    GameSpec::new(
        space.clone(),
        MenuFamily::new(MenuLabel::Custom, menus),
        TargetPredicate::IsCoverOfSpace,
        true,
        horizon,
        *caps,
    )
}

/// The five named games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameKind {
    Rothberger,
    MildlyRothberger,
    PointOpen,
    PointClopen,
    QuasiComponentClopen,
}

impl GameKind {
    pub const ALL: [GameKind; 5] = [
        GameKind::Rothberger,
        GameKind::MildlyRothberger,
        GameKind::PointOpen,
        GameKind::PointClopen,
        GameKind::QuasiComponentClopen,
    ];

    pub fn build(self, space: &FiniteSpace, horizon: usize, caps: &Caps) -> Result<GameSpec> {
        match self {
            GameKind::Rothberger => make_rothberger(space, horizon, caps),
            GameKind::MildlyRothberger => make_mildly_rothberger(space, horizon, caps),
            GameKind::PointOpen => make_point_open(space, horizon, caps),
            GameKind::PointClopen => make_point_clopen(space, horizon, caps),
            GameKind::QuasiComponentClopen => make_quasi_component_clopen(space, horizon, caps),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GameKind::Rothberger => "rothberger",
            GameKind::MildlyRothberger => "mildly-rothberger",
            GameKind::PointOpen => "point-open",
            GameKind::PointClopen => "point-clopen",
            GameKind::QuasiComponentClopen => "quasi-component-clopen",
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GameKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GameKind> {
        GameKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown game {s:?}")))
    }
}
