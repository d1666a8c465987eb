//! Brute-force oracles. Everything here works from definitions on raw
//! bitmasks and shares no algorithm with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;
use topogame::game::Player;
use topogame::{FiniteSpace, PointSet};

pub fn full(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

pub fn opens_of(space: &FiniteSpace) -> Vec<u64> {
    space.opens().iter().map(|s| s.bits()).collect()
}

/// All families of subsets of `{0..n-1}` containing ∅ and X and closed
/// under pairwise union and intersection.
pub fn brute_force_topologies(n: usize) -> BTreeSet<Vec<u64>> {
    let x = full(n);
    let others: Vec<u64> = (1..x).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << others.len()) {
        let mut family: Vec<u64> = vec![0];
        family.extend(
            others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s),
        );
        if x != 0 {
            family.push(x);
        }
        let closed = family.iter().all(|&a| {
            family
                .iter()
                .all(|&b| family.contains(&(a | b)) && family.contains(&(a & b)))
        });
        if closed {
            family.sort_unstable();
            out.insert(family);
        }
    }
    out
}

pub fn is_open(opens: &[u64], s: u64) -> bool {
    opens.contains(&s)
}

pub fn clopens(opens: &[u64], n: usize) -> Vec<u64> {
    opens
        .iter()
        .copied()
        .filter(|&u| is_open(opens, full(n) & !u))
        .collect()
}

/// `S` is connected iff no two opens cut it into two disjoint nonempty
/// relatively open pieces.
pub fn is_connected_subset(opens: &[u64], s: u64) -> bool {
    for &u in opens {
        for &v in opens {
            let (a, b) = (s & u, s & v);
            if a != 0 && b != 0 && a & b == 0 && a | b == s {
                return false;
            }
        }
    }
    true
}

/// Components as unions of all connected subsets through each point.
pub fn components(opens: &[u64], n: usize) -> BTreeSet<u64> {
    let mut comp = vec![0u64; n];
    for s in 1..=full(n) {
        if is_connected_subset(opens, s) {
            for (x, c) in comp.iter_mut().enumerate() {
                if s >> x & 1 == 1 {
                    *c |= s;
                }
            }
        }
    }
    comp.into_iter().collect()
}

/// `Q[x]` as the intersection of every clopen containing `x`.
pub fn quasi_components(opens: &[u64], n: usize) -> BTreeSet<u64> {
    let cl = clopens(opens, n);
    (0..n)
        .map(|x| {
            cl.iter()
                .filter(|&&c| c >> x & 1 == 1)
                .fold(full(n), |acc, &c| acc & c)
        })
        .collect()
}

/// Every open set is a union of clopen subsets of it.
pub fn is_zero_dimensional(opens: &[u64], n: usize) -> bool {
    let cl = clopens(opens, n);
    opens.iter().all(|&u| {
        cl.iter()
            .filter(|&&c| c & !u == 0)
            .fold(0, |acc, &c| acc | c)
            == u
    })
}

/// Irredundant covers: subsets of `candidates` (nonempty sets) whose union
/// is `X` and none of whose members can be dropped.
pub fn irredundant_covers(candidates: &[u64], n: usize) -> BTreeSet<Vec<u64>> {
    let cands: Vec<u64> = candidates.iter().copied().filter(|&s| s != 0).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << cands.len()) {
        let members: Vec<u64> = (0..cands.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| cands[i])
            .collect();
        let union = members.iter().fold(0, |a, &b| a | b);
        if union != full(n) {
            continue;
        }
        let irredundant = (0..members.len()).all(|skip| {
            members
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .fold(0, |a, (_, &b)| a | b)
                != full(n)
        });
        if irredundant {
            out.insert(members);
        }
    }
    out
}

/// All covers (any subset of nonempty candidates whose union is `X`).
pub fn all_covers(candidates: &[u64], n: usize) -> BTreeSet<Vec<u64>> {
    let cands: Vec<u64> = candidates.iter().copied().filter(|&s| s != 0).collect();
    (0u64..(1 << cands.len()))
        .map(|mask| {
            (0..cands.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| cands[i])
                .collect::<Vec<u64>>()
        })
        .filter(|m| m.iter().fold(0, |a, &b| a | b) == full(n))
        .collect()
}

/// One menu per point: the given sets containing that point.
pub fn point_menus(sets: &[u64], n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|x| sets.iter().copied().filter(|&s| s >> x & 1 == 1).collect())
        .collect()
}

/// Every `A` in `target` has some `B` in `candidate` with `B ⊆ A`, as sets
/// of sets, and `candidate ⊆ target`.
pub fn coinitial(candidate: &[Vec<u64>], target: &[Vec<u64>]) -> bool {
    let sub = |b: &Vec<u64>, a: &Vec<u64>| b.iter().all(|m| a.contains(m));
    let norm = |v: &Vec<u64>| v.iter().copied().collect::<BTreeSet<u64>>();
    let targets: BTreeSet<BTreeSet<u64>> = target.iter().map(norm).collect();
    candidate.iter().all(|c| targets.contains(&norm(c)))
        && target.iter().all(|a| candidate.iter().any(|b| sub(b, a)))
}

/// Ranges of all choice functions on `menus`.
pub fn choice_ranges(menus: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out: Vec<BTreeSet<u64>> = vec![BTreeSet::new()];
    for menu in menus {
        out = out
            .iter()
            .flat_map(|r| {
                menu.iter().map(move |&m| {
                    let mut r = r.clone();
                    r.insert(m);
                    r
                })
            })
            .collect();
    }
    let uniq: BTreeSet<Vec<u64>> = out.into_iter().map(|r| r.into_iter().collect()).collect();
    uniq.into_iter().collect()
}

/// Bob wins a cover game with these selections.
pub fn bob_wins_cover(selections: &[u64], n: usize, negated: bool) -> bool {
    let covers = selections.iter().fold(0, |a, &b| a | b) == full(n);
    covers != negated
}

/// Full history-tree minimax, no memo and no state abstraction.
pub fn tree_winner(menus: &[Vec<u64>], n: usize, negated: bool, k: usize) -> Player {
    fn alice_forces(
        menus: &[Vec<u64>],
        n: usize,
        negated: bool,
        k: usize,
        sel: &mut Vec<u64>,
    ) -> bool {
        if sel.len() == k || menus.is_empty() {
            return !bob_wins_cover(sel, n, negated);
        }
        menus.iter().any(|menu| {
            menu.iter().all(|&m| {
                sel.push(m);
                let r = alice_forces(menus, n, negated, k, sel);
                sel.pop();
                r
            })
        })
    }
    if alice_forces(menus, n, negated, k, &mut Vec::new()) {
        Player::Alice
    } else {
        Player::Bob
    }
}

/// Some fixed sequence of menus (all orders tried) defeats every selection.
pub fn alice_predetermined_wins(menus: &[Vec<u64>], n: usize, negated: bool, k: usize) -> bool {
    let rounds = if menus.is_empty() { 0 } else { k };
    let mut seq = vec![0usize; rounds];
    loop {
        let chosen: Vec<&Vec<u64>> = seq.iter().map(|&a| &menus[a]).collect();
        if !exists_bob_win(&chosen, n, negated, &mut Vec::new()) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == rounds {
                return false;
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

fn exists_bob_win(chosen: &[&Vec<u64>], n: usize, negated: bool, sel: &mut Vec<u64>) -> bool {
    match chosen.split_first() {
        None => bob_wins_cover(sel, n, negated),
        Some((menu, rest)) => menu.iter().any(|&m| {
            sel.push(m);
            let r = exists_bob_win(rest, n, negated, sel);
            sel.pop();
            r
        }),
    }
}

/// Enumerates every Markov table (round × menu ↦ member) and checks each
/// against every Alice line. `None` if there are more than `cap` tables.
pub fn bob_markov_wins(
    menus: &[Vec<u64>],
    n: usize,
    negated: bool,
    k: usize,
    cap: usize,
) -> Option<bool> {
    let rounds = if menus.is_empty() { 0 } else { k };
    let slots: Vec<usize> = (0..rounds)
        .flat_map(|_| menus.iter().map(|m| m.len()))
        .collect();
    let total = slots.iter().try_fold(1usize, |a, &s| a.checked_mul(s))?;
    if total > cap {
        return None;
    }
    let mut table = vec![0usize; slots.len()];
    loop {
        let pick = |round: usize, a: usize| menus[a][table[round * menus.len() + a]];
        let wins = all_alice_lines(menus.len(), rounds).iter().all(|line| {
            let sel: Vec<u64> = line.iter().enumerate().map(|(r, &a)| pick(r, a)).collect();
            bob_wins_cover(&sel, n, negated)
        });
        if wins {
            return Some(true);
        }
        let mut i = 0;
        loop {
            if i == slots.len() {
                return Some(false);
            }
            table[i] += 1;
            if table[i] < slots[i] {
                break;
            }
            table[i] = 0;
            i += 1;
        }
    }
}

fn all_alice_lines(menus: usize, rounds: usize) -> Vec<Vec<usize>> {
    (0..rounds).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|l| {
                (0..menus).map(move |a| {
                    let mut l = l.clone();
                    l.push(a);
                    l
                })
            })
            .collect()
    })
}

/// The five games' menus and negation flags, built from definitions.
pub fn oracle_menus(game: &str, opens: &[u64], n: usize) -> (Vec<Vec<u64>>, bool) {
    let cl = clopens(opens, n);
    let nonempty = |v: Vec<u64>| v.into_iter().filter(|&s| s != 0).collect::<Vec<u64>>();
    match game {
        "rothberger" => (irredundant_covers(opens, n).into_iter().collect(), false),
        "mildly-rothberger" => (irredundant_covers(&cl, n).into_iter().collect(), false),
        "point-open" => (point_menus(&nonempty(opens.to_vec()), n), true),
        "point-clopen" => (point_menus(&nonempty(cl.clone()), n), true),
        "quasi-component-clopen" => {
            let menus = quasi_components(opens, n)
                .into_iter()
                .map(|q| cl.iter().copied().filter(|&c| c & q == q).collect())
                .collect();
            (menus, true)
        }
        other => panic!("unknown game {other}"),
    }
}

pub const GAMES: [&str; 5] = [
    "rothberger",
    "mildly-rothberger",
    "point-open",
    "point-clopen",
    "quasi-component-clopen",
];

pub fn ps(points: &[usize]) -> PointSet {
    PointSet::from_points(points.iter().copied())
}

pub fn space(n: usize, opens: &[&[usize]]) -> FiniteSpace {
    let sets: Vec<PointSet> = opens.iter().map(|p| ps(p)).collect();
    topogame::topology::validate_topology(&sets, n).unwrap()
}

pub fn two_block() -> FiniteSpace {
    space(3, &[&[], &[0], &[1, 2], &[0, 1, 2]])
}

/// Opens generated by {0}, {1}, {0,1,2}, {0,1,3}.
pub fn pseudocircle() -> FiniteSpace {
    let gens = [ps(&[0]), ps(&[1]), ps(&[0, 1, 2]), ps(&[0, 1, 3])];
    FiniteSpace::generated_by(4, &gens).unwrap()
}

/// Every labeled space with `1 <= n <= n_max`.
pub fn corpus(n_max: usize) -> Vec<FiniteSpace> {
    topogame::topology::corpus(n_max).unwrap()
}
