//! Exact minimax values of small online Ramsey games.
//!
//! Builder wins within `d` rounds from a board if some edge leaves Painter
//! no safe color: each color either completes that color's target or leads
//! to a board Builder wins within `d - 1`. The value is the least such `d`,
//! found by iterative deepening.

mod canon;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

pub use canon::{canonical_form, Board, CanonicalKey, MAXV};

use crate::builder::Builder;
use crate::error::BuilderError;
use crate::graph::{Color, GameState, Shape, Vertex};

/// Targets and budgets for one solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub red: Shape,
    pub blue: Shape,
    /// Largest round count searched.
    pub rounds: usize,
    /// Largest number of vertex ids Builder may touch.
    pub vertex_budget: usize,
    /// Entries kept in the transposition table.
    pub table_capacity: usize,
    /// Limit fresh vertices to one fresh-fresh edge and one fresh endpoint
    /// per touched vertex, and merge moves with isomorphic outcomes.
    pub restricted: bool,
}

impl SolveConfig {
    pub fn new(red: Shape, blue: Shape, rounds: usize) -> SolveConfig {
        SolveConfig {
            red,
            blue,
            rounds,
            vertex_budget: (2 * rounds).min(MAXV),
            table_capacity: 1 << 22,
            restricted: true,
        }
    }

    pub fn paths(k: usize, n: usize, rounds: usize) -> SolveConfig {
        assert!(k >= 2 && n >= 2, "paths need at least two vertices");
        SolveConfig::new(Shape::Path(k), Shape::Path(n), rounds)
    }

    pub fn unrestricted(mut self) -> SolveConfig {
        self.restricted = false;
        self
    }
}

/// A solved value, or the note that it is larger than the round budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveValue {
    Rounds(usize),
    ExceedsBudget,
}

impl SolveValue {
    pub fn rounds(self) -> Option<usize> {
        match self {
            SolveValue::Rounds(r) => Some(r),
            SolveValue::ExceedsBudget => None,
        }
    }
}

impl fmt::Display for SolveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveValue::Rounds(r) => write!(f, "{r}"),
            SolveValue::ExceedsBudget => f.write_str("exceeds budget"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub value: SolveValue,
    pub nodes: u64,
    pub table_entries: usize,
}

/// What is known about a board: wins within `win`, loses within `lose`.
#[derive(Clone, Copy, Debug, Default)]
struct Bound {
    win: Option<u8>,
    lose: Option<u8>,
}

impl Bound {
    fn merge(&mut self, o: Bound) {
        self.win = match (self.win, o.win) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.lose = self.lose.max(o.lose);
    }
}

type Table = HashMap<Vec<u8>, Bound>;

/// One candidate Builder move with its two outcomes.
#[derive(Clone, Debug)]
struct Move {
    a: usize,
    b: usize,
    children: [(Board, Vec<u8>, bool); 2],
}

struct Search<'a> {
    cfg: &'a SolveConfig,
    shared: &'a Table,
    local: Table,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(cfg: &'a SolveConfig, shared: &'a Table) -> Self {
        Search { cfg, shared, local: Table::new(), nodes: 0 }
    }

    fn key(&self, b: &Board) -> Vec<u8> {
        if self.cfg.restricted {
            canonical_form(b).0
        } else {
            b.raw_key()
        }
    }

    fn target(&self, c: Color) -> Shape {
        match c {
            Color::Red => self.cfg.red,
            Color::Blue => self.cfg.blue,
        }
    }

    fn pairs(&self, b: &Board) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if self.cfg.restricted {
            let n = b.len();
            for x in 0..n {
                for y in x + 1..n {
                    if b.color(x, y).is_none() {
                        out.push((x, y));
                    }
                }
            }
            if n < self.cfg.vertex_budget {
                out.extend((0..n).map(|x| (x, n)));
            }
            if n + 1 < self.cfg.vertex_budget {
                out.push((n, n + 1));
            }
        } else {
            let vb = self.cfg.vertex_budget;
            for x in 0..vb {
                for y in x + 1..vb {
                    if b.color(x, y).is_none() {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }

    /// Moves in canonical order, one per class of equivalent outcomes.
    fn moves(&self, b: &Board) -> Vec<Move> {
        let mut out: Vec<Move> = self
            .pairs(b)
            .into_iter()
            .map(|(x, y)| {
                let child = |c: Color| {
                    let nb = b.with(x, y, c);
                    let hit = nb.contains_through(self.target(c), c, x, y);
                    let k = self.key(&nb);
                    (nb, k, hit)
                };
                Move { a: x, b: y, children: [child(Color::Red), child(Color::Blue)] }
            })
            .collect();
        if self.cfg.restricted {
            out.sort_by(|m, n| (&m.children[0].1, &m.children[1].1).cmp(&(&n.children[0].1, &n.children[1].1)));
            out.dedup_by(|m, n| m.children[0].1 == n.children[0].1 && m.children[1].1 == n.children[1].1);
        }
        // Moves that finish a target in one color come first.
        out.sort_by_key(|m| !(m.children[0].2 || m.children[1].2));
        out
    }

    fn known(&self, key: &[u8]) -> Bound {
        let mut b = self.shared.get(key).copied().unwrap_or_default();
        if let Some(l) = self.local.get(key) {
            b.merge(*l);
        }
        b
    }

    fn record(&mut self, key: Vec<u8>, bound: Bound) {
        if self.local.len() + self.shared.len() < self.cfg.table_capacity || self.local.contains_key(&key) {
            self.local.entry(key).or_default().merge(bound);
        }
    }

    fn move_wins(&mut self, m: &Move, d: usize) -> bool {
        m.children.iter().all(|(nb, k, hit)| *hit || self.wins(nb, k, d - 1))
    }

    fn wins(&mut self, b: &Board, key: &[u8], d: usize) -> bool {
        if d == 0 {
            return false;
        }
        self.nodes += 1;
        let known = self.known(key);
        if known.win.is_some_and(|w| w as usize <= d) {
            return true;
        }
        if known.lose.is_some_and(|l| l as usize >= d) {
            return false;
        }
        let moves = self.moves(b);
        let won = if d == 1 {
            moves.iter().any(|m| m.children.iter().all(|c| c.2))
        } else {
            moves.iter().any(|m| self.move_wins(m, d))
        };
        let bound = if won { Bound { win: Some(d as u8), lose: None } } else { Bound { win: None, lose: Some(d as u8) } };
        self.record(key.to_vec(), bound);
        won
    }
}

/// Least `d` such that Builder wins within `d` rounds from `start`, plus a
/// first move of an optimal line on the start board.
fn solve_board(start: &Board, cfg: &SolveConfig) -> (SolveReport, Option<(usize, usize)>) {
    assert!(cfg.rounds > 0 && cfg.vertex_budget > 0, "budgets must be positive");
    assert!(cfg.vertex_budget <= MAXV);
    // Each round touches at most two new vertices, so this budget never binds.
    debug_assert!(!cfg.restricted || cfg.vertex_budget >= (start.len() + 2 * cfg.rounds).min(MAXV) || cfg.vertex_budget < 2 * cfg.rounds);
    if start.contains(cfg.red, Color::Red) || start.contains(cfg.blue, Color::Blue) {
        return (SolveReport { value: SolveValue::Rounds(0), nodes: 0, table_entries: 0 }, None);
    }
    let mut shared = Table::new();
    let mut nodes = 0;
    for d in 1..=cfg.rounds {
        let root = Search::new(cfg, &shared);
        let moves = root.moves(start);
        let found = AtomicBool::new(false);
        let parts: Vec<(Table, u64, Option<usize>)> = moves
            .par_iter()
            .enumerate()
            .fold(
                || (Table::new(), 0u64, None::<usize>),
                |(table, n, best), (i, m)| {
                    if found.load(Ordering::Relaxed) {
                        return (table, n, best);
                    }
                    let mut s = Search { cfg, shared: &shared, local: table, nodes: 0 };
                    let won = s.move_wins(m, d);
                    if won {
                        found.store(true, Ordering::Relaxed);
                    }
                    let best = match (best, won) {
                        (Some(b), true) => Some(b.min(i)),
                        (None, true) => Some(i),
                        (b, false) => b,
                    };
                    (s.local, n + s.nodes, best)
                },
            )
            .collect();
        let mut winner: Option<usize> = None;
        for (t, n, best) in parts {
            nodes += n;
            if let Some(b) = best {
                winner = Some(winner.map_or(b, |w: usize| w.min(b)));
            }
            for (k, v) in t {
                shared.entry(k).or_default().merge(v);
            }
        }
        if let Some(i) = winner {
            let m = &moves[i];
            return (
                SolveReport { value: SolveValue::Rounds(d), nodes, table_entries: shared.len() },
                Some((m.a, m.b)),
            );
        }
    }
    (SolveReport { value: SolveValue::ExceedsBudget, nodes, table_entries: shared.len() }, None)
}

/// Value of the game from the empty board.
pub fn online_ramsey_number(cfg: &SolveConfig) -> SolveReport {
    solve_board(&Board::new(), cfg).0
}

/// Value of the game from a nonempty starting graph.
pub fn started_game_value(initial: &GameState, cfg: &SolveConfig) -> SolveReport {
    let (board, _) = Board::from_state(initial);
    let mut cfg = cfg.clone();
    cfg.vertex_budget = (board.len() + 2 * cfg.rounds).min(MAXV);
    solve_board(&board, &cfg).0
}

/// Outcome of one inequality check at a finite budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub statement: String,
    pub lhs: SolveValue,
    pub rhs: SolveValue,
    pub offset: i64,
    pub verdict: Verdict,
}

/// `lhs >= rhs + offset`, where an unsolved side is only known to exceed the budget.
fn compare(statement: String, lhs: SolveValue, rhs: SolveValue, offset: i64, budget: usize) -> InequalityCheck {
    let b = budget as i64;
    let verdict = match (lhs, rhs) {
        (SolveValue::Rounds(l), SolveValue::Rounds(r)) => {
            if l as i64 >= r as i64 + offset {
                Verdict::Holds
            } else {
                Verdict::Violated
            }
        }
        (SolveValue::ExceedsBudget, SolveValue::Rounds(r)) if b + 1 >= r as i64 + offset => Verdict::Holds,
        _ => Verdict::Inconclusive(format!("a side exceeds the budget of {budget} rounds")),
    };
    InequalityCheck { statement, lhs, rhs, offset, verdict }
}

/// Checks, for red `g` and paths and cycles on `n` vertices,
/// `r(G, C_n) >= r(G, P_n) + 1` and
/// `r(P_n, G) >= r(P_k, G) + floor((n-1)/(k-1)) - 1` with `G` blue.
pub fn path_inequality_checks(g: Shape, k: usize, n: usize, budget: usize) -> Vec<InequalityCheck> {
    assert!(k >= 2 && n >= k, "need 2 <= k <= n");
    let v = |red, blue| online_ramsey_number(&SolveConfig::new(red, blue, budget)).value;
    let first = compare(
        format!("r({g}, C{n}) >= r({g}, P{n}) + 1"),
        v(g, Shape::Cycle(n)),
        v(g, Shape::Path(n)),
        1,
        budget,
    );
    let off = ((n - 1) / (k - 1)) as i64 - 1;
    let second = compare(
        format!("r(P{n}, {g}) >= r(P{k}, {g}) + {off}"),
        v(Shape::Path(n), g),
        v(Shape::Path(k), g),
        off,
        budget,
    );
    vec![first, second]
}

/// Builder that plays a shortest forced win found by the solver. The red and
/// blue targets are the solver's, independent of the host game's rules.
pub struct OptimalBuilder {
    cfg: SolveConfig,
}

impl OptimalBuilder {
    pub fn new(red: Shape, blue: Shape, rounds: usize) -> OptimalBuilder {
        OptimalBuilder { cfg: SolveConfig::new(red, blue, rounds) }
    }
}

impl Builder for OptimalBuilder {
    fn next_edge(&mut self, state: &GameState) -> Result<(Vertex, Vertex), BuilderError> {
        let (board, ids) = Board::from_state(state);
        let mut cfg = self.cfg.clone();
        cfg.vertex_budget = (board.len() + 2 * cfg.rounds).min(MAXV);
        let (report, first) = solve_board(&board, &cfg);
        let (a, b) = first.ok_or_else(|| BuilderError::Subgame(format!("no forced win within {} rounds ({})", cfg.rounds, report.value)))?;
        let (f0, f1) = state.fresh_pair();
        let map = |x: usize| match x.checked_sub(ids.len()) {
            None => ids[x],
            Some(0) => f0,
            Some(_) => f1,
        };
        Ok((map(a), map(b)))
    }

    fn name(&self) -> String {
        "optimal".into()
    }
}
