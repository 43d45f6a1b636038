use proptest::prelude::*;

use ramsey_core::arena::{play, StrategyPainter, TargetSpec, Transcript};
use ramsey_core::builder::RandomBuilder;
use ramsey_core::graph::{BlueClass, Capital, Color, Edge, GameKind, GameState, RedClass, Vertex};
use ramsey_core::potential::{potential, PotentialTable};
use ramsey_core::rational::qi;
use ramsey_core::solver::{canonical_form, Board};
use ramsey_core::strategy::{decide, StrategyTable};
use ramsey_core::ExtRational;

const KINDS: [GameKind; 5] = [GameKind::P3, GameKind::P5, GameKind::P7, GameKind::P8, GameKind::P9];

fn kind() -> impl Strategy<Value = GameKind> {
    prop::sample::select(KINDS.to_vec())
}

fn random_game(kind: GameKind, seed: u64, rounds: usize) -> Transcript {
    let mut b = RandomBuilder::new(seed);
    let mut p = StrategyPainter::builtin(kind);
    play(&mut b, &mut p, kind, &TargetSpec::game(kind, 12), rounds).unwrap()
}

/// Every state along a transcript, after each move.
fn states(t: &Transcript) -> Vec<GameState> {
    let mut s = GameState::new(t.kind);
    let mut out = Vec::new();
    for m in &t.moves {
        s = s.add_edge(m.u, m.v, m.color).unwrap();
        if let Some(c) = m.capital {
            s = s.with_capital(c).unwrap();
        }
        out.push(s.clone());
    }
    out
}

fn relabel(s: &GameState, perm: &[u32]) -> GameState {
    let map = |v: Vertex| Vertex(perm[v.0 as usize]);
    let mut out = GameState::new(s.kind());
    for (e, c) in s.moves() {
        let (a, b) = e.ends();
        out = out.add_edge(map(a), map(b), c).unwrap();
    }
    for cap in s.capitals() {
        let moved = match *cap {
            Capital::Edge(e) => Capital::Edge(Edge::new(map(e.ends().0), map(e.ends().1))),
            Capital::Vertex(v) => Capital::Vertex(map(v)),
        };
        out = out.with_capital(moved).unwrap();
    }
    out
}

/// Vertex count of a longest path, by trying every ordering of distinct vertices.
fn brute_longest(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    fn grow(adj: &[Vec<bool>], path: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(path.len());
        let last = *path.last().unwrap();
        for w in 0..adj.len() {
            if adj[last][w] && !path.contains(&w) {
                path.push(w);
                grow(adj, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..n {
        if edges.iter().any(|&(a, b)| a == s || b == s) {
            grow(&adj, &mut vec![s], &mut best);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn builtin_painter_stays_safe(kind in kind(), seed in any::<u64>()) {
        let t = random_game(kind, seed, 60);
        let table = PotentialTable::builtin(kind);
        let jump = ExtRational::Finite(table.jump().clone());
        let mut before = ExtRational::zero();
        for s in states(&t) {
            prop_assert!(!s.has_red_cycle());
            prop_assert!(s.longest_red_path() < kind.red_path());
            let f = potential(&s, &table).unwrap();
            prop_assert!(f.delta_from(&before).unwrap() <= jump);
            before = f;
            let big = s.red_components().into_iter().filter(|c| s.is_big_component(c)).count();
            prop_assert_eq!(s.capitals().len(), big);
            let classes = s.classify().unwrap();
            prop_assert_eq!(classes.len(), s.vertex_count());
            prop_assert!(classes.values().all(|t| !kind.illegal_classes().contains(&t.red)));
        }
    }

    #[test]
    fn decisions_ignore_vertex_names(kind in kind(), seed in any::<u64>(), shuffle in Just((0..64u32).collect::<Vec<_>>()).prop_shuffle()) {
        let t = random_game(kind, seed, 25);
        prop_assume!(t.moves.iter().all(|m| m.u.0 < 62 && m.v.0 < 62));
        let strategy = StrategyTable::builtin(kind);
        let all = states(&t);
        let Some(s) = all.last() else { return Ok(()) };
        let r = relabel(s, &shuffle);
        let ids: Vec<Vertex> = s.vertices().chain([Vertex(62)]).collect();
        for &a in &ids {
            for &b in &ids {
                if a < b && !s.is_selected(a, b) {
                    let d = decide(s, &strategy, a, b).unwrap();
                    let e = decide(&r, &strategy, Vertex(shuffle[a.0 as usize]), Vertex(shuffle[b.0 as usize])).unwrap();
                    prop_assert_eq!((d.label, d.color, d.types), (e.label, e.color, e.types));
                }
            }
        }
    }

    #[test]
    fn potential_bounds_blue_subgraph(kind in kind(), seed in any::<u64>()) {
        let t = random_game(kind, seed, 40);
        let table = PotentialTable::builtin(kind);
        let m2 = table.row_min(BlueClass::B2plus).unwrap();
        let m1 = table.row_min(BlueClass::B1).unwrap();
        for s in states(&t) {
            let v = s.vertices().filter(|&x| s.blue_degree(x) > 0).count() as i64;
            let v1 = s.vertices().filter(|&x| s.blue_degree(x) == 1).count() as i64;
            let f = potential(&s, &table).unwrap();
            let floor = &m2 * qi(v) + (&m1 - &m2) * qi(v1);
            prop_assert!(f >= ExtRational::Finite(floor));
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        edges in prop::collection::vec((0usize..8, 0usize..8, any::<bool>()), 0..14),
        perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let mut a = Board::new();
        let mut b = Board::new();
        for (x, y, red) in edges {
            if x != y && a.color(x, y).is_none() {
                let c = if red { Color::Red } else { Color::Blue };
                a.set(x, y, c);
                b.set(perm[x], perm[y], c);
            }
        }
        prop_assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn longest_path_matches_brute_force(edges in prop::collection::vec((0usize..7, 0usize..7), 0..14)) {
        let mut seen = Vec::new();
        for (x, y) in edges {
            let e = (x.min(y), x.max(y));
            if x != y && !seen.contains(&e) {
                seen.push(e);
            }
        }
        let colored: Vec<(u32, u32, Color)> = seen.iter().map(|&(a, b)| (a as u32, b as u32, Color::Blue)).collect();
        let s = GameState::from_edges(GameKind::P9, &colored).unwrap();
        let want = brute_longest(7, &seen);
        prop_assert_eq!(s.longest_blue_path(), want.max(usize::from(s.vertex_count() > 0)));
        for n in 2..=7 {
            prop_assert_eq!(s.has_path(Color::Blue, n), want >= n);
        }
        if let Some(&(a, b)) = seen.last() {
            let before = GameState::from_edges(GameKind::P9, &colored[..colored.len() - 1]).unwrap();
            for n in 2..=7 {
                let through = s.has_path_through(Color::Blue, Vertex(a as u32), Vertex(b as u32), n);
                prop_assert_eq!(through || before.has_path(Color::Blue, n), s.has_path(Color::Blue, n));
            }
        }
    }

    #[test]
    fn undo_is_inverse(kind in kind(), seed in any::<u64>()) {
        let t = random_game(kind, seed, 20);
        let mut prev = GameState::new(kind);
        for m in &t.moves {
            let next = prev.add_edge(m.u, m.v, m.color).unwrap();
            prop_assert_eq!(next.undo_last(), Some(prev.clone()));
            prev = match m.capital {
                Some(c) => next.with_capital(c).unwrap(),
                None => next,
            };
        }
    }

    #[test]
    fn p9_f_classes_stay_within_three(seed in any::<u64>()) {
        let t = random_game(GameKind::P9, seed, 80);
        for s in states(&t) {
            for ty in s.classify().unwrap().values() {
                prop_assert!(ty.red != RedClass::F4plus);
            }
        }
    }
}
