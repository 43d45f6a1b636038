use ramsey_core::graph::{BlueClass, Color, GameKind, GameState, RedClass, VertexType};
use ramsey_core::potential::{extract_bound, potential, round_lower_bound, PotentialTable};
use ramsey_core::rational::{q, qi};
use ramsey_core::ExtRational;

fn cell(kind: GameKind, r: RedClass, b: BlueClass) -> ExtRational {
    PotentialTable::builtin(kind).value(r, b).unwrap()
}

#[test]
fn builtin_cells() {
    assert_eq!(cell(GameKind::P9, RedClass::L0, BlueClass::B1), ExtRational::int(14));
    assert_eq!(cell(GameKind::P9, RedClass::L1, BlueClass::B1), ExtRational::int(14));
    assert_eq!(cell(GameKind::P8, RedClass::N0, BlueClass::B2plus), ExtRational::int(76));
    assert_eq!(cell(GameKind::P3, RedClass::I, BlueClass::B1), ExtRational::int(7));
}

#[test]
fn builtin_jumps() {
    let jumps: Vec<_> = [GameKind::P3, GameKind::P5, GameKind::P7, GameKind::P8, GameKind::P9]
        .into_iter()
        .map(|k| PotentialTable::builtin(k).jump().clone())
        .collect();
    assert_eq!(jumps, [qi(8), qi(4), qi(20), qi(44), qi(12)]);
}

#[test]
fn vertex_value_examples() {
    let p9 = PotentialTable::builtin(GameKind::P9);
    assert_eq!(p9.vertex_value(VertexType::new(RedClass::O, BlueClass::B0)).unwrap(), ExtRational::zero());
    assert_eq!(p9.vertex_value(VertexType::new(RedClass::F4plus, BlueClass::B0)).unwrap(), ExtRational::Infinite);
    let p7 = PotentialTable::builtin(GameKind::P7);
    assert_eq!(p7.vertex_value(VertexType::new(RedClass::F1, BlueClass::B1)).unwrap(), ExtRational::int(24));
    assert!(p7.vertex_value(VertexType::new(RedClass::N0, BlueClass::B0)).is_err());
}

#[test]
fn potential_examples() {
    let p9 = PotentialTable::builtin(GameKind::P9);
    assert_eq!(potential(&GameState::new(GameKind::P9), &p9).unwrap(), ExtRational::zero());
    let edge = GameState::from_edges(GameKind::P9, &[(0, 1, Color::Red)]).unwrap();
    assert_eq!(potential(&edge, &p9).unwrap(), ExtRational::int(12));
    let tri = GameState::from_edges(GameKind::P9, &[(0, 1, Color::Red), (1, 2, Color::Red), (2, 0, Color::Red)]).unwrap();
    assert_eq!(potential(&tri, &p9).unwrap(), ExtRational::Infinite);
}

#[test]
fn tables_are_column_monotone_and_anchored() {
    for kind in [GameKind::P3, GameKind::P5, GameKind::P7, GameKind::P8, GameKind::P9] {
        let t = PotentialTable::builtin(kind);
        assert_eq!(t.value(RedClass::O, BlueClass::B0).unwrap(), ExtRational::zero());
        for c in t.columns() {
            assert!(c.values[0] <= c.values[1] && c.values[1] <= c.values[2], "{kind} column {}", c.label());
        }
    }
}

#[test]
fn extract_bound_examples() {
    let b = extract_bound(&PotentialTable::builtin(GameKind::P9));
    assert_eq!((b.alpha, b.beta), (q(5, 3), qi(-1)));
    let b = extract_bound(&PotentialTable::builtin(GameKind::P3));
    assert_eq!((b.alpha, b.beta), (q(5, 4), q(-5, 8)));
    let b = extract_bound(&PotentialTable::builtin(GameKind::P8));
    assert_eq!((b.alpha, b.beta), (q(18, 11), qi(-1)));
    // 32/20, not 8/3.
    let b = extract_bound(&PotentialTable::builtin(GameKind::P7));
    assert_eq!(b.alpha, q(8, 5));
}

#[test]
fn round_lower_bound_examples() {
    for n in 2..40 {
        let n_q = qi(n as i64);
        assert_eq!(round_lower_bound(GameKind::P9, n, 2), q(5, 3) * &n_q - qi(2));
        assert_eq!(round_lower_bound(GameKind::P7, n, 2), q(8, 5) * &n_q - qi(2));
        assert_eq!(round_lower_bound(GameKind::P8, n, 0), q(18, 11) * &n_q);
    }
}

#[test]
fn table_text_round_trip() {
    for kind in [GameKind::P3, GameKind::P5, GameKind::P7, GameKind::P8, GameKind::P9] {
        let t = PotentialTable::builtin(kind);
        let text = t.to_text();
        assert!(text.starts_with(&format!("game={kind} jump=")));
        let back = PotentialTable::from_text(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_text(), text);
    }
}

#[test]
fn table_parse_rejects_decreasing_column() {
    let bad = "game=p9 jump=12\nO: 0 5 3\n";
    assert!(PotentialTable::from_text(bad).is_err());
}
