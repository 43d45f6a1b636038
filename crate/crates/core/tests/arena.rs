use ramsey_core::arena::{
    audit_transcript, blue_path_round_bound, check_termination, family_score, play, replay, summarize, BlueTarget,
    ConstantPainter, Outcome, StrategyPainter, TargetSpec, Transcript, ViolationKind, FAMILY_CAP,
};
use ramsey_core::builder::{GreedyBuilder, RandomBuilder, ScriptedBuilder};
use ramsey_core::graph::{Color, GameKind, GameState, Vertex};
use ramsey_core::potential::{potential, PotentialTable};
use ramsey_core::rational::{q, qi};
use ramsey_core::{ExtRational, Q};
use ramsey_core::error::ArenaError;
use Color::{Blue, Red};

fn st(edges: &[(u32, u32, Color)]) -> GameState {
    GameState::from_edges(GameKind::P9, edges).unwrap()
}

fn path(color: Color, len: u32) -> Vec<(u32, u32, Color)> {
    (0..len - 1).map(|i| (i, i + 1, color)).collect()
}

#[test]
fn greedy_p9_blue_p10_not_before_round_15() {
    assert_eq!(blue_path_round_bound(GameKind::P9, 10), qi(15));
    let mut b = GreedyBuilder::new();
    let mut p = StrategyPainter::builtin(GameKind::P9);
    let t = play(&mut b, &mut p, GameKind::P9, &TargetSpec::game(GameKind::P9, 10), 200).unwrap();
    assert_eq!(t.outcome, Outcome::BlueTarget);
    assert!(t.moves.len() >= 15, "blue P10 at round {}", t.moves.len());
}

#[test]
fn red_only_painter_loses() {
    let mut b = RandomBuilder::new(3);
    let mut p = ConstantPainter(Red);
    let t = play(&mut b, &mut p, GameKind::P9, &TargetSpec::game(GameKind::P9, 10), 500).unwrap();
    assert_eq!(t.outcome, Outcome::RedTarget);
    let last = GameState::from_edges(
        GameKind::P9,
        &t.moves.iter().map(|m| (m.u.0, m.v.0, m.color)).collect::<Vec<_>>(),
    )
    .unwrap();
    assert!(last.has_red_cycle() || last.longest_red_path() >= 9);
}

#[test]
fn zero_budget_is_rejected() {
    let mut b = GreedyBuilder::new();
    let mut p = StrategyPainter::builtin(GameKind::P9);
    let r = play(&mut b, &mut p, GameKind::P9, &TargetSpec::game(GameKind::P9, 10), 0);
    assert_eq!(r.unwrap_err(), ArenaError::ZeroBudget);
}

#[test]
fn termination_examples() {
    let targets = TargetSpec::game(GameKind::P9, 5);
    let red9 = GameState::from_edges(GameKind::P9, &path(Red, 9)).unwrap();
    assert_eq!(check_termination(&red9, &targets).unwrap(), Some(Outcome::RedTarget));
    assert_eq!(check_termination(&st(&path(Blue, 5)), &targets).unwrap(), Some(Outcome::BlueTarget));
    assert_eq!(check_termination(&st(&path(Blue, 4)), &targets).unwrap(), None);
    assert_eq!(check_termination(&st(&[(0, 1, Red), (1, 2, Red), (2, 0, Red)]), &targets).unwrap(), Some(Outcome::RedTarget));
}

#[test]
fn family_score_examples() {
    assert_eq!(family_score(&st(&path(Blue, 4)), &q(5, 3), FAMILY_CAP).unwrap(), Some(q(14, 3)));
    assert_eq!(family_score(&GameState::new(GameKind::P9), &q(5, 3), FAMILY_CAP).unwrap(), None);
    let star = st(&[(0, 1, Blue), (0, 2, Blue), (0, 3, Blue)]);
    assert_eq!(family_score(&star, &q(5, 3), FAMILY_CAP).unwrap(), Some(q(11, 3)));
}

#[test]
fn family_game_respects_linear_potential() {
    let x = qi(6);
    let targets = TargetSpec::family_game(GameKind::P9, x.clone());
    let mut b = GreedyBuilder::new();
    let mut p = StrategyPainter::builtin(GameKind::P9);
    let t = play(&mut b, &mut p, GameKind::P9, &targets, 60).unwrap();
    assert_eq!(t.outcome, Outcome::BlueTarget);
    let table = PotentialTable::builtin(GameKind::P9);
    let mut s = GameState::new(GameKind::P9);
    for m in &t.moves {
        s = s.add_edge(m.u, m.v, m.color).unwrap();
        if let Some(c) = m.capital {
            s = s.with_capital(c).unwrap();
        }
        let round = Q::from_integer(m.round.into());
        if round < x {
            assert!(family_score(&s, &q(5, 3), FAMILY_CAP).unwrap().is_none_or(|f| f < x), "round {}", m.round);
        }
        let f = potential(&s, &table).unwrap();
        assert!(f <= ExtRational::Finite(qi(12) * &round));
    }
    assert!(!summarize(&t, 0).above_linear);
}

fn sample_transcript() -> Transcript {
    let mut b = RandomBuilder::new(11);
    let mut p = StrategyPainter::builtin(GameKind::P7);
    play(&mut b, &mut p, GameKind::P7, &TargetSpec::game(GameKind::P7, 9), 80).unwrap()
}

#[test]
fn transcript_text_round_trip() {
    let t = sample_transcript();
    let text = t.to_text();
    assert!(text.starts_with("game=p7 red_k=7 blue=P9"));
    assert!(text.lines().nth(1).unwrap().starts_with("round=1 edge="));
    assert_eq!(Transcript::from_text(&text).unwrap(), t);
}

#[test]
fn replay_is_deterministic() {
    let t = sample_transcript();
    assert_eq!(replay(&t, 80).unwrap(), t);
}

#[test]
fn audit_of_builtin_play_is_clean() {
    let t = sample_transcript();
    let a = audit_transcript(&t, &PotentialTable::builtin(GameKind::P7)).unwrap();
    assert!(a.violations.is_empty());
    assert_eq!(a.deltas.len(), t.moves.len());
    assert!(a.deltas.iter().flatten().all(|d| *d <= ExtRational::int(20)));
}

#[test]
fn audit_flags_a_recolored_move() {
    let mut t = sample_transcript();
    let i = t.moves.iter().position(|m| m.color == Blue).expect("some blue move");
    t.moves[i].color = Red;
    let a = audit_transcript(&t, &PotentialTable::builtin(GameKind::P7));
    match a {
        Ok(a) => assert!(a
            .violations
            .iter()
            .any(|v| v.round == i + 1 && matches!(v.kind, ViolationKind::StrategyMismatch { .. }))),
        Err(ArenaError::Replay { .. }) => {}
        Err(e) => panic!("unexpected {e}"),
    }
}

#[test]
fn audit_of_empty_transcript_is_empty() {
    let t = Transcript {
        kind: GameKind::P9,
        targets: TargetSpec::new(9, BlueTarget::Path(4)),
        initial: Vec::new(),
        moves: Vec::new(),
        outcome: Outcome::BudgetExhausted,
    };
    let a = audit_transcript(&t, &PotentialTable::builtin(GameKind::P9)).unwrap();
    assert!(a.deltas.is_empty() && a.violations.is_empty());
}

#[test]
fn builder_fault_on_repeated_edge() {
    let mut b = ScriptedBuilder::new(vec![(Vertex(0), Vertex(1)), (Vertex(1), Vertex(0))]);
    let mut p = StrategyPainter::builtin(GameKind::P9);
    let t = play(&mut b, &mut p, GameKind::P9, &TargetSpec::game(GameKind::P9, 10), 10).unwrap();
    assert!(matches!(t.outcome, Outcome::BuilderFault(_)));
    assert_eq!(t.moves.len(), 1);
}
