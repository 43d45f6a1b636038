use ramsey_core::graph::{BlueClass, Capital, Color, Edge, GameKind, GameState, RedClass, Vertex, VertexType};
use ramsey_core::strategy::{apply_move, decide, Directive, StrategyTable};
use ramsey_core::StrategyError;
use Color::{Blue, Red};

fn st(kind: GameKind, edges: &[(u32, u32, Color)]) -> GameState {
    GameState::from_edges(kind, edges).unwrap()
}

fn rule_for(kind: GameKind, a: VertexType, b: VertexType) -> (Color, Directive) {
    let s = StrategyTable::builtin(kind);
    let (i, _) = s.lookup(a, b).expect("total");
    (s.rules()[i].color, s.rules()[i].directive)
}

fn vt(r: RedClass, b: BlueClass) -> VertexType {
    VertexType::new(r, b)
}

/// A P9 board with a red I at 0-1 and a big red path 2-3-4-5 whose capital is 23.
fn p9_board() -> GameState {
    st(GameKind::P9, &[(0, 1, Red), (2, 3, Red), (3, 4, Red), (4, 5, Red)])
        .with_capital(Capital::Edge(Edge::new(Vertex(2), Vertex(3))))
        .unwrap()
}

#[test]
fn builtin_lookups() {
    use BlueClass::B0;
    assert_eq!(rule_for(GameKind::P9, vt(RedClass::I, B0), vt(RedClass::F0, B0)), (Red, Directive::None));
    assert_eq!(rule_for(GameKind::P9, vt(RedClass::O, B0), vt(RedClass::F2, B0)).0, Blue);
    assert_eq!(rule_for(GameKind::P9, vt(RedClass::O, BlueClass::B1), vt(RedClass::F2, B0)).0, Red);
    assert_eq!(rule_for(GameKind::P8, vt(RedClass::O, B0), vt(RedClass::N0, B0)), (Red, Directive::V));
}

#[test]
fn builtins_are_total() {
    for kind in [GameKind::P3, GameKind::P5, GameKind::P7, GameKind::P8, GameKind::P9] {
        assert!(StrategyTable::builtin(kind).uncovered().is_empty(), "{kind}");
    }
}

#[test]
fn blue_beats_red_when_both_match() {
    // (O^B2+, O) matches red case E and blue case A.
    let (c, _) = rule_for(GameKind::P9, vt(RedClass::O, BlueClass::B2plus), vt(RedClass::O, BlueClass::B0));
    assert_eq!(c, Blue);
}

#[test]
fn decide_two_isolated_vertices() {
    let d = decide(&GameState::new(GameKind::P9), &StrategyTable::builtin(GameKind::P9), Vertex(0), Vertex(1)).unwrap();
    assert_eq!((d.label.as_str(), d.color, d.capital), ("E", Red, None));
}

#[test]
fn decide_i_i_makes_capital_edge() {
    let s = st(GameKind::P9, &[(0, 1, Red), (2, 3, Red)]);
    let d = decide(&s, &StrategyTable::builtin(GameKind::P9), Vertex(1), Vertex(2)).unwrap();
    assert_eq!(d.color, Red);
    assert_eq!(d.capital, Some(Capital::Edge(Edge::new(Vertex(1), Vertex(2)))));
}

#[test]
fn decide_p7_i_against_l_leaf_is_blue() {
    let s = st(GameKind::P7, &[(0, 1, Red), (2, 3, Red), (3, 4, Red)]);
    let d = decide(&s, &StrategyTable::builtin(GameKind::P7), Vertex(0), Vertex(2)).unwrap();
    assert_eq!((d.label.as_str(), d.color), ("C", Blue));
}

#[test]
fn decide_on_big_components() {
    let s = p9_board();
    let p9 = StrategyTable::builtin(GameKind::P9);
    let d = decide(&s, &p9, Vertex(0), Vertex(2)).unwrap();
    assert_eq!((d.label.as_str(), d.color, d.capital), ("L", Red, None));
    let d = decide(&s, &p9, Vertex(9), Vertex(5)).unwrap();
    assert_eq!((d.label.as_str(), d.color), ("D", Blue));
}

#[test]
fn decide_rejects_selected_edge() {
    let s = p9_board();
    assert!(matches!(decide(&s, &StrategyTable::builtin(GameKind::P9), Vertex(1), Vertex(0)), Err(StrategyError::Graph(_))));
}

#[test]
fn apply_move_i_l_join_adds_one_capital() {
    let s = st(GameKind::P9, &[(0, 1, Red), (2, 3, Red), (3, 4, Red)]);
    let t = apply_move(&s, &StrategyTable::builtin(GameKind::P9), Vertex(1), Vertex(2)).unwrap();
    assert_eq!(t.capitals(), &[Capital::Edge(Edge::new(Vertex(1), Vertex(2)))]);
    assert!(t.classify().is_ok());
}

#[test]
fn apply_move_blue_keeps_capitals() {
    let s = p9_board();
    let t = apply_move(&s, &StrategyTable::builtin(GameKind::P9), Vertex(9), Vertex(5)).unwrap();
    assert_eq!(t.color_of(Vertex(9), Vertex(5)), Some(Blue));
    assert_eq!(t.capitals(), s.capitals());
}

#[test]
fn apply_move_p8_o_n1_takes_inner_neighbor() {
    let s = st(GameKind::P8, &[(0, 1, Red), (1, 2, Red), (2, 3, Red)]);
    let t = apply_move(&s, &StrategyTable::builtin(GameKind::P8), Vertex(10), Vertex(0)).unwrap();
    assert_eq!(t.capitals(), &[Capital::Vertex(Vertex(1))]);
}

#[test]
fn center_of_l_takes_smallest_neighbor() {
    let s = st(GameKind::P9, &[(5, 3, Red), (3, 7, Red)]);
    let t = apply_move(&s, &StrategyTable::builtin(GameKind::P9), Vertex(0), Vertex(3)).unwrap();
    assert_eq!(t.capitals(), &[Capital::Edge(Edge::new(Vertex(3), Vertex(5)))]);
}

#[test]
fn strategy_file_round_trip() {
    for kind in [GameKind::P3, GameKind::P5, GameKind::P7, GameKind::P8, GameKind::P9] {
        let s = StrategyTable::builtin(kind);
        assert_eq!(StrategyTable::from_text(&s.to_text()).unwrap(), s);
    }
}

#[test]
fn non_total_strategy_is_reported() {
    let s = StrategyTable::from_rules_text(GameKind::P3, "B: O , O -> red\n").unwrap();
    assert!(!s.uncovered().is_empty());
    assert!(s.check_total().is_err());
}
