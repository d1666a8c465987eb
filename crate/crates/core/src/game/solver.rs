//! Backward induction over bounded-horizon selection games.
//!
//! The position after some rounds is abstracted to a `u64` state: the union
//! of Bob's selections for cover targets, or the set of his selections
//! (as a bitmask over the distinct menu members) for explicit-family
//! targets. In both cases selecting a member ORs its code into the state,
//! so the final state does not depend on the order of the rounds.

use crate::error::{Error, Result};
use crate::game::spec::{GameSpec, TargetPredicate};
use crate::game::strategy::{Context, Move, Player, Strategy, StrategyClass};
use crate::pointset::PointSet;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet};

pub(crate) enum Satisfy {
    Cover(u64),
    Family(HashSet<u64>),
}

/// A game lowered to integer codes.
pub(crate) struct Compiled<'g> {
    pub game: &'g GameSpec,
    /// `codes[a][i]` is the state delta for member `i` of menu `a`.
    pub codes: Vec<Vec<u64>>,
    satisfy: Satisfy,
}

impl<'g> Compiled<'g> {
    pub fn new(game: &'g GameSpec) -> Result<Compiled<'g>> {
        let menus = &game.menus.menus;
        match &game.target {
            TargetPredicate::IsCoverOfSpace => Ok(Compiled {
                game,
                codes: menus
                    .iter()
                    .map(|m| m.iter().map(|s| s.bits()).collect())
                    .collect(),
                satisfy: Satisfy::Cover(game.space.full().bits()),
            }),
            TargetPredicate::MemberOfFamily(family) => {
                let universe: Vec<PointSet> = menus
                    .iter()
                    .flatten()
                    .copied()
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                if universe.len() > 64 {
                    return Err(Error::TooManyMembers);
                }
                let code = |s: &PointSet| universe.binary_search(s).ok().map(|i| 1u64 << i);
                let codes = menus
                    .iter()
                    .map(|m| {
                        m.iter()
                            .map(|s| code(s).expect("member of universe"))
                            .collect()
                    })
                    .collect();
                // Families naming a set no menu offers can never be reached.
                let targets = family
                    .iter()
                    .filter_map(|sel| {
                        sel.iter()
                            .map(code)
                            .try_fold(0u64, |acc, c| c.map(|c| acc | c))
                    })
                    .collect();
                Ok(Compiled {
                    game,
                    codes,
                    satisfy: Satisfy::Family(targets),
                })
            }
        }
    }

    pub fn open(&self, round: usize) -> bool {
        round < self.game.horizon && !self.codes.is_empty()
    }

    pub fn bob_terminal(&self, state: u64) -> bool {
        let satisfied = match &self.satisfy {
            Satisfy::Cover(full) => state == *full,
            Satisfy::Family(targets) => targets.contains(&state),
        };
        satisfied != self.game.negated
    }

    pub fn code(&self, menu: usize, member: PointSet) -> Option<u64> {
        let m = self.game.menus.menus.get(menu)?;
        m.binary_search(&member).ok().map(|i| self.codes[menu][i])
    }

    /// Indices of pairwise distinct menus, first occurrence kept.
    fn distinct_menus(&self) -> Vec<usize> {
        let mut seen = HashSet::new();
        (0..self.codes.len())
            .filter(|&a| seen.insert(self.codes[a].clone()))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub explored_states: usize,
}

/// Game value without a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub winner: Player,
    pub stats: Stats,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub winner: Player,
    pub witness: Strategy,
    pub horizon: usize,
    pub stats: Stats,
}

/// Answer to "does `player` have a winning strategy of class `class`?".
#[derive(Clone, Debug, Serialize)]
pub struct RestrictedVerdict {
    pub player: Player,
    pub class: StrategyClass,
    pub wins: bool,
    pub witness: Option<Strategy>,
    pub horizon: usize,
    pub stats: Stats,
}

struct Search<'g> {
    c: Compiled<'g>,
    alice_memo: HashMap<(u64, usize), bool>,
    bob_memo: HashMap<(u64, usize), bool>,
    cap: usize,
}

impl<'g> Search<'g> {
    fn new(game: &'g GameSpec) -> Result<Search<'g>> {
        Ok(Search {
            c: Compiled::new(game)?,
            alice_memo: HashMap::new(),
            bob_memo: HashMap::new(),
            cap: game.caps.states,
        })
    }

    fn explored(&self) -> usize {
        self.alice_memo.len() + self.bob_memo.len()
    }

    fn budget(&self) -> Result<()> {
        let n = self.explored();
        if n > self.cap {
            Err(Error::cap("solver states", n, self.cap))
        } else {
            Ok(())
        }
    }

    /// Alice can force a win from `state` at `round`.
    fn alice_wins(&mut self, state: u64, round: usize) -> Result<bool> {
        if !self.c.open(round) {
            return Ok(!self.c.bob_terminal(state));
        }
        if let Some(&v) = self.alice_memo.get(&(state, round)) {
            return Ok(v);
        }
        let mut win = false;
        'menus: for a in 0..self.c.codes.len() {
            for i in 0..self.c.codes[a].len() {
                let code = self.c.codes[a][i];
                if !self.alice_wins(state | code, round + 1)? {
                    continue 'menus;
                }
            }
            win = true;
            break;
        }
        self.alice_memo.insert((state, round), win);
        self.budget()?;
        Ok(win)
    }

    /// Bob can force a win from `state` at `round`, computed independently
    /// of [`Search::alice_wins`].
    fn bob_wins(&mut self, state: u64, round: usize) -> Result<bool> {
        if !self.c.open(round) {
            return Ok(self.c.bob_terminal(state));
        }
        if let Some(&v) = self.bob_memo.get(&(state, round)) {
            return Ok(v);
        }
        let mut win = true;
        for a in 0..self.c.codes.len() {
            let mut answered = false;
            for i in 0..self.c.codes[a].len() {
                let code = self.c.codes[a][i];
                if self.bob_wins(state | code, round + 1)? {
                    answered = true;
                    break;
                }
            }
            if !answered {
                win = false;
                break;
            }
        }
        self.bob_memo.insert((state, round), win);
        self.budget()?;
        Ok(win)
    }

    fn alice_witness(&mut self) -> Result<Strategy> {
        let mut s = Strategy::new(Player::Alice, StrategyClass::Full);
        let mut hist = Vec::new();
        self.alice_witness_from(0, 0, &mut hist, &mut s)?;
        Ok(s)
    }

    fn alice_witness_from(
        &mut self,
        state: u64,
        round: usize,
        bob_hist: &mut Vec<PointSet>,
        out: &mut Strategy,
    ) -> Result<()> {
        if !self.c.open(round) {
            return Ok(());
        }
        let mut choice = 0;
        for a in 0..self.c.codes.len() {
            let mut all = true;
            for i in 0..self.c.codes[a].len() {
                if !self.alice_wins(state | self.c.codes[a][i], round + 1)? {
                    all = false;
                    break;
                }
            }
            if all {
                choice = a;
                break;
            }
        }
        out.insert(
            Context {
                round,
                seen: bob_hist.iter().map(|&b| Move::Pick(b)).collect(),
            },
            Move::Menu(choice),
        );
        if out.len() > self.cap {
            return Err(Error::cap("witness entries", out.len(), self.cap));
        }
        let members = self.c.game.menus.menus[choice].clone();
        for (i, m) in members.into_iter().enumerate() {
            bob_hist.push(m);
            let next = state | self.c.codes[choice][i];
            self.alice_witness_from(next, round + 1, bob_hist, out)?;
            bob_hist.pop();
        }
        Ok(())
    }

    fn bob_witness(&mut self) -> Result<Strategy> {
        let mut s = Strategy::new(Player::Bob, StrategyClass::Full);
        let mut hist = Vec::new();
        self.bob_witness_from(0, 0, &mut hist, &mut s)?;
        Ok(s)
    }

    fn bob_witness_from(
        &mut self,
        state: u64,
        round: usize,
        alice_hist: &mut Vec<usize>,
        out: &mut Strategy,
    ) -> Result<()> {
        if !self.c.open(round) {
            return Ok(());
        }
        for a in 0..self.c.codes.len() {
            let mut pick = 0;
            for i in 0..self.c.codes[a].len() {
                if self.bob_wins(state | self.c.codes[a][i], round + 1)? {
                    pick = i;
                    break;
                }
            }
            alice_hist.push(a);
            out.insert(
                Context {
                    round,
                    seen: alice_hist.iter().map(|&x| Move::Menu(x)).collect(),
                },
                Move::Pick(self.c.game.menus.menus[a][pick]),
            );
            if out.len() > self.cap {
                return Err(Error::cap("witness entries", out.len(), self.cap));
            }
            let next = state | self.c.codes[a][pick];
            self.bob_witness_from(next, round + 1, alice_hist, out)?;
            alice_hist.pop();
        }
        Ok(())
    }
}

/// Game value, searching from `perspective`'s side: for Alice the solver
/// asks whether she can force a win, for Bob whether he can. Both answers
/// must agree on the winner.
pub fn solve_from(game: &GameSpec, perspective: Player) -> Result<Outcome> {
    let mut search = Search::new(game)?;
    let winner = match perspective {
        Player::Alice => {
            if search.alice_wins(0, 0)? {
                Player::Alice
            } else {
                Player::Bob
            }
        }
        Player::Bob => {
            if search.bob_wins(0, 0)? {
                Player::Bob
            } else {
                Player::Alice
            }
        }
    };
    Ok(Outcome {
        winner,
        stats: Stats {
            explored_states: search.explored(),
        },
    })
}

pub fn game_value(game: &GameSpec) -> Result<Outcome> {
    solve_from(game, Player::Alice)
}

/// Exact value plus a full-history winning strategy for the winner.
///
/// Among optimal moves the witness takes the least menu index (Alice) or
/// the least set in bit order (Bob).
pub fn solve(game: &GameSpec) -> Result<Verdict> {
    let mut search = Search::new(game)?;
    let witness = if search.alice_wins(0, 0)? {
        search.alice_witness()?
    } else {
        search.bob_wins(0, 0)?;
        search.bob_witness()?
    };
    Ok(Verdict {
        winner: witness.player,
        witness,
        horizon: game.horizon,
        stats: Stats {
            explored_states: search.explored(),
        },
    })
}

/// Decides whether `player` has a winning strategy of class `class`
/// against an unrestricted opponent.
///
/// Supported: either player with [`StrategyClass::Full`], Alice with
/// [`StrategyClass::Predetermined`], Bob with [`StrategyClass::Markov`].
pub fn solve_restricted(
    game: &GameSpec,
    player: Player,
    class: StrategyClass,
) -> Result<RestrictedVerdict> {
    let (wins, witness, explored) = match (player, class) {
        (_, StrategyClass::Full) => {
            let v = solve(game)?;
            let wins = v.winner == player;
            (wins, wins.then_some(v.witness), v.stats.explored_states)
        }
        (Player::Alice, StrategyClass::Predetermined) => predetermined_search(game)?,
        (Player::Bob, StrategyClass::Markov) => markov_search(game)?,
        _ => {
            return Err(Error::Unsupported(format!(
                "{class:?} strategies for {player}"
            )))
        }
    };
    Ok(RestrictedVerdict {
        player,
        class,
        wins,
        witness,
        horizon: game.horizon,
        stats: Stats {
            explored_states: explored,
        },
    })
}

/// Optimal move lookups for a live play, used by interactive sessions.
///
/// Positions are given as the list of `(menu, selection)` rounds so far.
pub struct Advisor<'g> {
    search: Search<'g>,
}

impl<'g> Advisor<'g> {
    pub fn new(game: &'g GameSpec) -> Result<Advisor<'g>> {
        Ok(Advisor {
            search: Search::new(game)?,
        })
    }

    fn state_of(&self, history: &[(usize, PointSet)]) -> Result<u64> {
        history.iter().try_fold(0u64, |acc, &(a, m)| {
            self.search
                .c
                .code(a, m)
                .map(|c| acc | c)
                .ok_or_else(|| Error::IllegalMove {
                    context: format!("menu#{a}"),
                    mv: m.to_string(),
                })
        })
    }

    /// Least menu that keeps a forced Alice win, or menu 0 if none does.
    pub fn alice_move(&mut self, history: &[(usize, PointSet)]) -> Result<usize> {
        let state = self.state_of(history)?;
        let round = history.len();
        for a in 0..self.search.c.codes.len() {
            let mut all = true;
            for i in 0..self.search.c.codes[a].len() {
                let code = self.search.c.codes[a][i];
                if !self.search.alice_wins(state | code, round + 1)? {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(a);
            }
        }
        Ok(0)
    }

    /// Least member of `menu` that keeps a forced Bob win, or its least
    /// member if none does.
    pub fn bob_move(&mut self, history: &[(usize, PointSet)], menu: usize) -> Result<PointSet> {
        let state = self.state_of(history)?;
        let round = history.len();
        let members = self
            .search
            .c
            .game
            .menus
            .menus
            .get(menu)
            .ok_or_else(|| Error::IllegalMove {
                context: format!("round {round}"),
                mv: format!("menu#{menu}"),
            })?
            .clone();
        for (i, &m) in members.iter().enumerate() {
            if self
                .search
                .bob_wins(state | self.search.c.codes[menu][i], round + 1)?
            {
                return Ok(m);
            }
        }
        Ok(members[0])
    }

    pub fn winner(&mut self) -> Result<Player> {
        Ok(if self.search.alice_wins(0, 0)? {
            Player::Alice
        } else {
            Player::Bob
        })
    }
}

fn step_all(states: &[u64], codes: impl Iterator<Item = u64> + Clone) -> Vec<u64> {
    let mut next: Vec<u64> = states
        .iter()
        .flat_map(|&s| codes.clone().map(move |c| s | c))
        .collect();
    next.sort_unstable();
    next.dedup();
    next
}

type SearchResult = (bool, Option<Strategy>, usize);

/// Alice fixes a sequence of menus in advance. Because the final state is
/// order-independent, only non-decreasing sequences of distinct menus need
/// to be tried.
fn predetermined_search(game: &GameSpec) -> Result<SearchResult> {
    let c = Compiled::new(game)?;
    let distinct = c.distinct_menus();
    let mut seq = Vec::new();
    let mut nodes = 0usize;

    fn rec(
        c: &Compiled,
        distinct: &[usize],
        states: &[u64],
        round: usize,
        start: usize,
        seq: &mut Vec<usize>,
        nodes: &mut usize,
    ) -> Result<bool> {
        *nodes += 1;
        if *nodes > c.game.caps.states {
            return Err(Error::cap(
                "predetermined search nodes",
                *nodes,
                c.game.caps.states,
            ));
        }
        if !c.open(round) {
            return Ok(states.iter().all(|&s| !c.bob_terminal(s)));
        }
        for (i, &a) in distinct.iter().enumerate().skip(start) {
            let next = step_all(states, c.codes[a].iter().copied());
            seq.push(a);
            if rec(c, distinct, &next, round + 1, i, seq, nodes)? {
                return Ok(true);
            }
            seq.pop();
        }
        Ok(false)
    }

    let wins = rec(&c, &distinct, &[0], 0, 0, &mut seq, &mut nodes)?;
    let witness = wins.then(|| {
        let mut s = Strategy::new(Player::Alice, StrategyClass::Predetermined);
        for (round, &a) in seq.iter().enumerate() {
            s.insert(
                Context {
                    round,
                    seen: Vec::new(),
                },
                Move::Menu(a),
            );
        }
        s
    });
    Ok((wins, witness, nodes))
}

/// Inclusion-minimal sets of universe indices meeting every menu mask.
pub(crate) fn minimal_hitting_sets(menus: &[u64]) -> Vec<u64> {
    fn hits_all(menus: &[u64], h: u64) -> bool {
        menus.iter().all(|&m| m & h != 0)
    }
    fn rec(menus: &[u64], h: u64, out: &mut BTreeSet<u64>) {
        match menus.iter().find(|&&m| m & h == 0) {
            None => {
                let minimal = PointSet(h)
                    .points()
                    .all(|e| !hits_all(menus, h & !(1u64 << e)));
                if minimal {
                    out.insert(h);
                }
            }
            Some(&m) => {
                for e in PointSet(m).points() {
                    rec(menus, h | 1u64 << e, out);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(menus, 0, &mut out);
    out.into_iter().collect()
}

/// Bob commits, per round, to a response for every menu. Only the image of
/// that response map matters (Alice can steer to any of it), and shrinking
/// the image only helps Bob, so it suffices to try minimal hitting sets of
/// the menus, in non-decreasing order across rounds.
fn markov_search(game: &GameSpec) -> Result<SearchResult> {
    let c = Compiled::new(game)?;
    let universe: Vec<u64> = c
        .codes
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if universe.len() > 64 {
        return Err(Error::TooManyMembers);
    }
    let index = |code: u64| universe.binary_search(&code).expect("code in universe");
    let menu_masks: Vec<u64> = c
        .codes
        .iter()
        .map(|m| m.iter().fold(0u64, |acc, &code| acc | 1u64 << index(code)))
        .collect();
    let images = minimal_hitting_sets(&menu_masks);
    let mut seq = Vec::new();
    let mut nodes = 0usize;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        c: &Compiled,
        universe: &[u64],
        images: &[u64],
        states: &[u64],
        round: usize,
        start: usize,
        seq: &mut Vec<usize>,
        nodes: &mut usize,
    ) -> Result<bool> {
        *nodes += 1;
        if *nodes > c.game.caps.states {
            return Err(Error::cap(
                "markov search nodes",
                *nodes,
                c.game.caps.states,
            ));
        }
        if !c.open(round) {
            return Ok(states.iter().all(|&s| c.bob_terminal(s)));
        }
        for (i, &image) in images.iter().enumerate().skip(start) {
            let next = step_all(states, PointSet(image).points().map(|j| universe[j]));
            seq.push(i);
            if rec(c, universe, images, &next, round + 1, i, seq, nodes)? {
                return Ok(true);
            }
            seq.pop();
        }
        Ok(false)
    }

    let wins = rec(&c, &universe, &images, &[0], 0, 0, &mut seq, &mut nodes)?;
    let witness = wins.then(|| {
        let mut s = Strategy::new(Player::Bob, StrategyClass::Markov);
        for (round, &i) in seq.iter().enumerate() {
            let image = images[i];
            for (a, menu) in game.menus.menus.iter().enumerate() {
                let pick = menu
                    .iter()
                    .zip(&c.codes[a])
                    .find(|(_, &code)| image >> index(code) & 1 == 1)
                    .map(|(&m, _)| m)
                    .expect("image meets every menu");
                s.insert(
                    Context {
                        round,
                        seen: vec![Move::Menu(a)],
                    },
                    Move::Pick(pick),
                );
            }
        }
        s
    });
    Ok((wins, witness, nodes))
}

/// The finite selection principle: for every sequence of menus, one per
/// round, some choice of members is a Bob win. Brute force over raw
/// selections, independent of the state abstraction.
pub fn selection_principle(game: &GameSpec) -> Result<bool> {
    let menus = &game.menus.menus;
    let rounds = if menus.is_empty() { 0 } else { game.horizon };
    let cap = game.caps.states;
    let seqs = (0..rounds).try_fold(1usize, |acc, _| acc.checked_mul(menus.len()));
    match seqs {
        Some(count) if count <= cap => {}
        _ => {
            return Err(Error::cap(
                "menu sequences",
                seqs.unwrap_or(usize::MAX),
                cap,
            ))
        }
    }
    let mut seq = vec![0usize; rounds];
    loop {
        if !exists_bob_selection(game, &seq, &mut Vec::with_capacity(rounds)) {
            return Ok(false);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == rounds {
                return Ok(true);
            }
            seq[i] += 1;
            if seq[i] < menus.len() {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

fn exists_bob_selection(game: &GameSpec, seq: &[usize], chosen: &mut Vec<PointSet>) -> bool {
    match seq.split_first() {
        None => game.bob_wins_selection(chosen),
        Some((&a, rest)) => game.menus.menus[a].iter().any(|&m| {
            chosen.push(m);
            let ok = exists_bob_selection(game, rest, chosen);
            chosen.pop();
            ok
        }),
    }
}

/// Least horizon `k <= cap` at which `player` wins `family(k)`.
pub fn min_win_horizon<F>(family: F, player: Player, cap: usize) -> Result<Option<usize>>
where
    F: Fn(usize) -> Result<GameSpec>,
{
    for k in 0..=cap {
        if game_value(&family(k)?)?.winner == player {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
