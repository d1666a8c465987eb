mod common;

use common::*;
use std::collections::BTreeSet;
use topogame::covers::{all_covers, CoverKind, MenuFamily, MenuLabel};
use topogame::game::{
    make_mildly_rothberger, make_point_clopen, make_point_open, make_quasi_component_clopen,
    make_rothberger, min_win_horizon, playout, selection_principle, solve, solve_from,
    solve_restricted, verify_winning, Caps, Context, GameKind, GameSpec, Move, Player, Strategy,
    StrategyClass,
};
use topogame::{Error, FiniteSpace};

type MakeGame = fn(&FiniteSpace, usize, &Caps) -> topogame::Result<GameSpec>;

fn caps() -> Caps {
    Caps::default()
}

fn game(kind: &str, space: &FiniteSpace, k: usize) -> GameSpec {
    kind.parse::<GameKind>()
        .unwrap()
        .build(space, k, &caps())
        .unwrap()
}

fn menu_bits(g: &GameSpec) -> Vec<Vec<u64>> {
    g.menus
        .menus
        .iter()
        .map(|m| m.iter().map(|s| s.bits()).collect())
        .collect()
}

/// Every (space, game, horizon) with n <= n_max and k <= n.
fn corpus_games(n_max: usize) -> Vec<(FiniteSpace, &'static str, usize)> {
    let mut out = Vec::new();
    for space in corpus(n_max) {
        for g in GAMES {
            for k in 0..=space.n() {
                out.push((space.clone(), g, k));
            }
        }
    }
    out
}

#[test]
fn menus_match_definitions() {
    for space in corpus(3) {
        let opens = opens_of(&space);
        for g in GAMES {
            let lib: BTreeSet<Vec<u64>> = menu_bits(&game(g, &space, 1)).into_iter().collect();
            let (oracle, negated) = oracle_menus(g, &opens, space.n());
            let oracle: BTreeSet<Vec<u64>> = oracle.into_iter().collect();
            assert_eq!(lib, oracle, "{g} on {opens:?}");
            assert_eq!(game(g, &space, 1).negated, negated);
        }
    }
}

#[test]
fn abstract_solver_matches_history_tree() {
    for space in corpus(3) {
        let opens = opens_of(&space);
        for g in GAMES {
            let (menus, negated) = oracle_menus(g, &opens, space.n());
            for k in 0..=3 {
                let v = solve(&game(g, &space, k)).unwrap();
                assert_eq!(
                    v.winner,
                    tree_winner(&menus, space.n(), negated, k),
                    "{g} k={k} on {opens:?}"
                );
            }
        }
    }
}

#[test]
fn determinacy_and_witnesses() {
    for (space, g, k) in corpus_games(3) {
        let spec = game(g, &space, k);
        let a = solve_from(&spec, Player::Alice).unwrap().winner;
        let b = solve_from(&spec, Player::Bob).unwrap().winner;
        assert_eq!(a, b, "{g} k={k}");
        let v = solve(&spec).unwrap();
        assert_eq!(v.winner, a);
        assert_eq!(v.witness.player, v.winner);
        assert!(verify_winning(&spec, &v.witness).unwrap(), "{g} k={k}");
    }
}

#[test]
fn horizon_monotonicity() {
    for space in corpus(3) {
        for g in GAMES {
            let winners: Vec<Player> = (0..=space.n() + 1)
                .map(|k| solve(&game(g, &space, k)).unwrap().winner)
                .collect();
            let spec = game(g, &space, 0);
            let favoured = if spec.negated {
                Player::Alice
            } else {
                Player::Bob
            };
            for w in winners.windows(2) {
                assert!(w[0] != favoured || w[1] == favoured, "{g}: {winners:?}");
            }
        }
    }
}

#[test]
fn class_chain_and_restricted_witnesses() {
    for (space, g, k) in corpus_games(3) {
        let spec = game(g, &space, k);
        let full = solve(&spec).unwrap().winner;
        let mark = solve_restricted(&spec, Player::Bob, StrategyClass::Markov).unwrap();
        let pre = solve_restricted(&spec, Player::Alice, StrategyClass::Predetermined).unwrap();
        assert!(!mark.wins || full == Player::Bob);
        assert!(!pre.wins || full == Player::Alice);
        for r in [&mark, &pre] {
            if let Some(w) = &r.witness {
                assert_eq!(w.class, r.class);
                assert!(w.is_well_formed());
                assert!(verify_winning(&spec, w).unwrap(), "{g} k={k} {:?}", r.class);
            }
            assert_eq!(r.wins, r.witness.is_some());
        }
    }
}

#[test]
fn restricted_searches_match_brute_force() {
    for space in corpus(3) {
        let opens = opens_of(&space);
        for g in GAMES {
            let (menus, negated) = oracle_menus(g, &opens, space.n());
            for k in 0..=3 {
                let spec = game(g, &space, k);
                let pre = solve_restricted(&spec, Player::Alice, StrategyClass::Predetermined)
                    .unwrap()
                    .wins;
                assert_eq!(pre, alice_predetermined_wins(&menus, space.n(), negated, k));
                if let Some(oracle) = bob_markov_wins(&menus, space.n(), negated, k, 20_000) {
                    let mark = solve_restricted(&spec, Player::Bob, StrategyClass::Markov)
                        .unwrap()
                        .wins;
                    assert_eq!(mark, oracle, "{g} k={k} on {opens:?}");
                }
            }
        }
    }
}

#[test]
fn selection_principle_bridges_predetermined_play() {
    for (space, g, k) in corpus_games(3) {
        let spec = game(g, &space, k);
        let pre = solve_restricted(&spec, Player::Alice, StrategyClass::Predetermined)
            .unwrap()
            .wins;
        assert_eq!(selection_principle(&spec).unwrap(), !pre, "{g} k={k}");
    }
}

#[test]
fn menu_basis_invariance() {
    for space in corpus(3) {
        for (kind, label, make) in [
            (CoverKind::Open, MenuLabel::O, make_rothberger as MakeGame),
            (CoverKind::Clopen, MenuLabel::CO, make_mildly_rothberger),
        ] {
            let all = all_covers(&space, kind, caps().covers).unwrap();
            for k in 0..=space.n() {
                let reduced: GameSpec = make(&space, k, &caps()).unwrap();
                let full = reduced
                    .with_menus(MenuFamily::from_covers(label, &all))
                    .unwrap();
                assert_eq!(
                    solve(&reduced).unwrap().winner,
                    solve(&full).unwrap().winner
                );
            }
        }
    }
}

#[test]
fn named_game_examples() {
    let c = caps();
    let sier = FiniteSpace::sierpinski();
    let d2 = FiniteSpace::discrete(2);
    let d3 = FiniteSpace::discrete(3);
    let tb = two_block();
    let win = |g: GameSpec| solve(&g).unwrap().winner;
    use Player::{Alice, Bob};

    assert_eq!(win(make_rothberger(&sier, 1, &c).unwrap()), Bob);
    assert_eq!(win(make_rothberger(&d2, 1, &c).unwrap()), Alice);
    assert_eq!(win(make_rothberger(&d2, 2, &c).unwrap()), Bob);

    assert_eq!(win(make_mildly_rothberger(&sier, 1, &c).unwrap()), Bob);
    assert_eq!(
        win(make_mildly_rothberger(&pseudocircle(), 1, &c).unwrap()),
        Bob
    );
    assert_eq!(win(make_mildly_rothberger(&tb, 1, &c).unwrap()), Alice);
    assert_eq!(win(make_mildly_rothberger(&tb, 2, &c).unwrap()), Bob);

    assert_eq!(win(make_point_clopen(&sier, 1, &c).unwrap()), Alice);
    assert_eq!(win(make_point_clopen(&tb, 1, &c).unwrap()), Bob);
    assert_eq!(win(make_point_clopen(&tb, 2, &c).unwrap()), Alice);

    // point-open mirrors, checked against the history tree
    for (space, k) in [(&sier, 1), (&tb, 1), (&tb, 2)] {
        let (menus, neg) = oracle_menus("point-open", &opens_of(space), space.n());
        let got = win(make_point_open(space, k, &c).unwrap());
        assert_eq!(got, tree_winner(&menus, space.n(), neg, k));
    }
    assert_eq!(win(make_point_open(&sier, 2, &c).unwrap()), Alice);

    assert_eq!(
        win(make_quasi_component_clopen(&sier, 1, &c).unwrap()),
        Alice
    );
    assert_eq!(win(make_quasi_component_clopen(&tb, 1, &c).unwrap()), Bob);
    assert_eq!(win(make_quasi_component_clopen(&tb, 2, &c).unwrap()), Alice);
    assert_eq!(win(make_quasi_component_clopen(&d3, 3, &c).unwrap()), Alice);
}

#[test]
fn empty_space_conventions() {
    let empty = FiniteSpace::indiscrete(0);
    for g in GameKind::ALL {
        let spec = g.build(&empty, 0, &caps()).unwrap();
        let v = solve(&spec).unwrap();
        let expected = if spec.negated {
            Player::Alice
        } else {
            Player::Bob
        };
        assert_eq!(v.winner, expected, "{g}");
        if !spec.negated {
            let any = Strategy::new(Player::Bob, StrategyClass::Full);
            assert!(verify_winning(&spec, &any).unwrap());
        }
    }
}

#[test]
fn restricted_examples() {
    let c = caps();
    let mr = make_mildly_rothberger(&two_block(), 2, &c).unwrap();
    let r = solve_restricted(&mr, Player::Bob, StrategyClass::Markov).unwrap();
    assert!(r.wins);
    assert!(verify_winning(&mr, r.witness.as_ref().unwrap()).unwrap());

    let rb = make_rothberger(&FiniteSpace::discrete(2), 1, &c).unwrap();
    let r = solve_restricted(&rb, Player::Alice, StrategyClass::Predetermined).unwrap();
    assert!(r.wins);
    let w = r.witness.unwrap();
    let Some(Move::Menu(a)) = w.respond(&Context {
        round: 0,
        seen: vec![],
    }) else {
        panic!("no round-0 move");
    };
    assert_eq!(rb.menus.menus[a], vec![ps(&[0]), ps(&[1])]);

    assert!(matches!(
        solve_restricted(&rb, Player::Alice, StrategyClass::Markov),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn min_horizon_examples() {
    let c = caps();
    let d3 = FiniteSpace::discrete(3);
    let mr = |s: &FiniteSpace| {
        let s = s.clone();
        move |k| make_mildly_rothberger(&s, k, &c)
    };
    assert_eq!(min_win_horizon(mr(&d3), Player::Bob, 5).unwrap(), Some(3));
    assert_eq!(
        min_win_horizon(|k| make_point_clopen(&d3, k, &c), Player::Alice, 5).unwrap(),
        Some(3)
    );
    for space in corpus(3).into_iter().filter(FiniteSpace::is_connected) {
        assert_eq!(
            min_win_horizon(mr(&space), Player::Bob, 3).unwrap(),
            Some(1)
        );
    }
    assert_eq!(min_win_horizon(mr(&d3), Player::Bob, 2).unwrap(), None);
}

#[test]
fn playout_examples() {
    let c = caps();
    for (space, g, k) in corpus_games(2) {
        let spec = game(g, &space, k);
        let v = solve(&spec).unwrap();
        if v.winner != Player::Bob || spec.menus.is_empty() {
            continue;
        }
        // every predetermined Alice line
        let m = spec.menus.len();
        for line in 0..m.pow(k as u32) {
            let mut alice = Strategy::new(Player::Alice, StrategyClass::Predetermined);
            let mut code = line;
            for round in 0..k {
                alice.insert(
                    Context {
                        round,
                        seen: vec![],
                    },
                    Move::Menu(code % m),
                );
                code /= m;
            }
            let t = playout(&spec, &alice, &v.witness).unwrap();
            assert_eq!(t.winner, Player::Bob);
            assert!(t.is_consistent_with(&spec) && t.follows(&v.witness));
        }
    }

    // out-of-menu entry
    let spec = make_mildly_rothberger(&FiniteSpace::discrete(2), 1, &c).unwrap();
    let mut alice = Strategy::new(Player::Alice, StrategyClass::Predetermined);
    alice.insert(
        Context {
            round: 0,
            seen: vec![],
        },
        Move::Menu(0),
    );
    let mut bob = Strategy::new(Player::Bob, StrategyClass::Markov);
    bob.insert(
        Context {
            round: 0,
            seen: vec![Move::Menu(0)],
        },
        Move::Pick(ps(&[0, 1, 2])),
    );
    assert!(matches!(
        playout(&spec, &alice, &bob),
        Err(Error::IllegalMove { .. })
    ));
}

#[test]
fn b3_strategy_beats_every_alice_line_on_two_blocks() {
    let c = caps();
    let space = two_block();
    let spec = make_mildly_rothberger(&space, 2, &c).unwrap();
    let bob = topogame::lab::b3_markov_strategy(&space, &c).unwrap();
    let m = spec.menus.len();
    for a0 in 0..m {
        for a1 in 0..m {
            let mut alice = Strategy::new(Player::Alice, StrategyClass::Predetermined);
            alice.insert(
                Context {
                    round: 0,
                    seen: vec![],
                },
                Move::Menu(a0),
            );
            alice.insert(
                Context {
                    round: 1,
                    seen: vec![],
                },
                Move::Menu(a1),
            );
            let t = playout(&spec, &alice, &bob).unwrap();
            assert_eq!(t.winner, Player::Bob);
            let union = t.selections().iter().fold(0, |a, s| a | s.bits());
            assert_eq!(union, 0b111);
        }
    }
}

#[test]
fn uniform_first_member_bob_loses_discrete_two() {
    let c = caps();
    let spec = make_mildly_rothberger(&FiniteSpace::discrete(2), 2, &c).unwrap();
    let mut bob = Strategy::new(Player::Bob, StrategyClass::Markov);
    for round in 0..2 {
        for (a, menu) in spec.menus.menus.iter().enumerate() {
            bob.insert(
                Context {
                    round,
                    seen: vec![Move::Menu(a)],
                },
                Move::Pick(menu[0]),
            );
        }
    }
    assert!(!verify_winning(&spec, &bob).unwrap());
    // the oracle agrees: Alice replays {{0},{1}} and Bob takes {0} twice
    let split = spec
        .menus
        .menus
        .iter()
        .position(|m| *m == vec![ps(&[0]), ps(&[1])])
        .unwrap();
    let sel = [spec.menus.menus[split][0].bits(); 2];
    assert!(!bob_wins_cover(&sel, 2, false));
}

#[test]
fn state_cap_is_reported() {
    let mut c = caps();
    c.states = 3;
    let spec = make_rothberger(&FiniteSpace::discrete(3), 3, &c).unwrap();
    assert!(solve(&spec).unwrap_err().is_cap());
    let uncapped = make_rothberger(&FiniteSpace::discrete(3), 3, &caps()).unwrap();
    let witness = solve(&uncapped).unwrap().witness;
    assert!(verify_winning(&spec, &witness).unwrap_err().is_cap());
}
