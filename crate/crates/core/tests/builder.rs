use std::collections::BTreeSet;

use ramsey_core::arena::{play, play_from, Outcome, StrategyPainter, TargetSpec, BlueTarget};
use ramsey_core::builder::{
    block_merge_bound, eligible_pairs, greedy_blue_builder, merge_paths_sequence, random_builder, BipartitionPlan, Builder,
    BlockMergeBuilder, MergeOutcome, RandomBuilder,
};
use ramsey_core::solver::OptimalBuilder;
use ramsey_core::graph::{Color, GameKind, GameState, Shape, Vertex};
use ramsey_core::BuilderError;
use Color::{Blue, Red};

fn two_blue_paths(n: u32, m: u32) -> (GameState, Vec<Vertex>, Vec<Vertex>) {
    let mut edges: Vec<(u32, u32, Color)> = (0..n - 1).map(|i| (i, i + 1, Blue)).collect();
    edges.extend((0..m - 1).map(|i| (50 + i, 51 + i, Blue)));
    let s = GameState::from_edges(GameKind::P9, &edges).unwrap();
    (s, (0..n).map(Vertex).collect(), (50..50 + m).map(Vertex).collect())
}

/// Plays the merge against a fixed reply pattern, returning the final state and move count.
fn run_merge(h: Shape, n: u32, m: u32, replies: &[Color]) -> (GameState, usize, MergeOutcome) {
    let (mut s, a, b) = two_blue_paths(n, m);
    let plan = BipartitionPlan::for_shape(h).unwrap();
    let mut seq = merge_paths_sequence(&s, &plan, &a, &b).unwrap();
    let mut moves = 0;
    while let Ok((x, y)) = seq.next_edge(&s) {
        s = s.add_edge(x, y, replies[moves]).unwrap();
        moves += 1;
    }
    let out = seq.outcome(&s);
    (s, moves, out)
}

#[test]
fn merge_p3_two_p5_every_reply() {
    for replies in [[Red, Red], [Red, Blue], [Blue, Red], [Blue, Blue]] {
        let (s, moves, _) = run_merge(Shape::Path(3), 5, 5, &replies);
        assert!(moves <= 2);
        assert!(s.longest_red_path() >= 3 || s.longest_blue_path() >= 7, "{replies:?}");
    }
}

#[test]
fn merge_first_blue_reply_gives_long_path() {
    let (s, moves, out) = run_merge(Shape::Path(4), 6, 7, &[Blue]);
    assert_eq!(moves, 1);
    let MergeOutcome::BluePath(p) = out else { panic!("expected a blue path") };
    assert!(p.len() >= 6 + 7 - 4 + 2);
    assert!(s.longest_blue_path() >= p.len());
}

#[test]
fn merge_all_red_builds_h() {
    for h in [Shape::Path(3), Shape::Path(4), Shape::Cycle(4)] {
        let (s, moves, out) = run_merge(h, 6, 6, &[Red; 4]);
        assert_eq!(moves, h.edges());
        assert_eq!(out, MergeOutcome::RedTarget);
        assert!(h.present(&s, Red));
    }
}

#[test]
fn merge_c4_every_reply() {
    for bits in 0..16u32 {
        let replies: Vec<Color> = (0..4).map(|i| if bits >> i & 1 == 1 { Blue } else { Red }).collect();
        let (s, moves, _) = run_merge(Shape::Cycle(4), 5, 6, &replies);
        assert!(moves <= 4);
        assert!(Shape::Cycle(4).present(&s, Red) || s.longest_blue_path() >= 5 + 6 - 4, "{bits:b}");
    }
}

#[test]
fn merge_rejects_short_paths() {
    let (s, a, b) = two_blue_paths(3, 5);
    let plan = BipartitionPlan::for_shape(Shape::Path(3)).unwrap();
    assert!(matches!(merge_paths_sequence(&s, &plan, &a, &b), Err(BuilderError::TooShort { .. })));
}

#[test]
fn block_merge_envelope_against_p3_painter() {
    // r(P3, P4) = 4, so block merging allows 6 * (4 + 2) = 36 moves.
    let bound = block_merge_bound(Shape::Path(3), 4, 6, 4);
    assert_eq!(bound, 36);
    let mut b = BlockMergeBuilder::new(Shape::Path(3), 4, 6, || {
        Box::new(OptimalBuilder::new(Shape::Path(3), Shape::Path(4), 6)) as Box<dyn Builder>
    })
    .unwrap();
    assert_eq!(b.blocks(), 6);
    let mut p = StrategyPainter::builtin(GameKind::P3);
    let t = play(&mut b, &mut p, GameKind::P3, &TargetSpec::new(3, BlueTarget::Path(6)), 100).unwrap();
    assert!(matches!(t.outcome, Outcome::BlueTarget | Outcome::RedTarget), "{}", t.outcome);
    assert!(t.moves.len() <= bound, "{} moves", t.moves.len());
}

#[test]
fn block_merge_single_block_when_m_small() {
    let b = BlockMergeBuilder::new(Shape::Path(3), 6, 5, || Box::new(RandomBuilder::new(0)) as Box<dyn Builder>).unwrap();
    assert_eq!(b.blocks(), 1);
}

#[test]
fn block_merge_against_red_painter_ends_red() {
    let (s, _, _) = two_blue_paths(4, 4);
    let mut b = BlockMergeBuilder::new(Shape::Path(3), 4, 8, || Box::new(RandomBuilder::new(0)) as Box<dyn Builder>).unwrap();
    let mut red = ramsey_core::arena::ConstantPainter(Red);
    let t = play_from(&mut b, &mut red, &s, &TargetSpec::new(3, BlueTarget::Path(8)), 50).unwrap();
    assert_eq!(t.outcome, Outcome::RedTarget);
}

#[test]
fn greedy_examples() {
    let empty = GameState::new(GameKind::P9);
    let (x, y) = greedy_blue_builder(&empty);
    assert!(!empty.contains_vertex(x) && !empty.contains_vertex(y));
    let s = GameState::from_edges(GameKind::P9, &[(0, 1, Blue), (1, 2, Blue)]).unwrap();
    let (x, y) = greedy_blue_builder(&s);
    assert!([Vertex(0), Vertex(2)].contains(&x) && !s.contains_vertex(y));
}

#[test]
fn random_builder_is_reproducible_and_legal() {
    let s = GameState::from_edges(GameKind::P9, &[(0, 1, Red), (1, 2, Blue), (2, 3, Blue)]).unwrap();
    assert_eq!(random_builder(&s, 5), random_builder(&s, 5));
    let pairs: BTreeSet<(Vertex, Vertex)> = eligible_pairs(&s).into_iter().collect();
    let mut seen = BTreeSet::new();
    for seed in 0..10_000 {
        let (x, y) = random_builder(&s, seed);
        assert!(!s.is_selected(x, y));
        seen.insert((x, y));
    }
    assert_eq!(seen, pairs);
}
