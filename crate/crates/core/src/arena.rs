//! The game loop: Builder proposes, Painter colors, every move is audited
//! against the potential table.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::builder::{Builder, GreedyBuilder, RandomBuilder, ScriptedBuilder};
use crate::error::{ArenaError, ParseError, StrategyError};
use crate::graph::{Capital, Color, GameKind, GameState, Vertex};
use crate::potential::{extract_bound, potential, FamilySpec, PotentialTable};
use crate::rational::{ceil_q, parse_q, qi, ExtRational, Q};
use crate::strategy::{decide, StrategyTable};

/// Default cap on non-isolated blue vertices for the exhaustive family search.
pub const FAMILY_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PainterMove {
    pub color: Color,
    pub capital: Option<Capital>,
    /// Strategy rule that fired, if the Painter is table driven.
    pub rule: Option<String>,
}

pub trait Painter {
    fn respond(&mut self, state: &GameState, u: Vertex, v: Vertex) -> Result<PainterMove, StrategyError>;
}

/// The table-driven Painter.
pub struct StrategyPainter {
    pub strategy: StrategyTable,
}

impl StrategyPainter {
    pub fn builtin(kind: GameKind) -> StrategyPainter {
        StrategyPainter { strategy: StrategyTable::builtin(kind) }
    }
}

impl Painter for StrategyPainter {
    fn respond(&mut self, state: &GameState, u: Vertex, v: Vertex) -> Result<PainterMove, StrategyError> {
        let d = decide(state, &self.strategy, u, v)?;
        Ok(PainterMove { color: d.color, capital: d.capital, rule: Some(d.label) })
    }
}

/// Colors every edge the same way and never names capitals.
pub struct ConstantPainter(pub Color);

impl Painter for ConstantPainter {
    fn respond(&mut self, _state: &GameState, _u: Vertex, _v: Vertex) -> Result<PainterMove, StrategyError> {
        Ok(PainterMove { color: self.0, capital: None, rule: None })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlueTarget {
    Path(usize),
    Family(FamilySpec),
}

impl fmt::Display for BlueTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlueTarget::Path(n) => write!(f, "P{n}"),
            BlueTarget::Family(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for BlueTarget {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        if let Some(n) = s.strip_prefix('P') {
            let n: usize = n.parse().map_err(|_| ParseError::new(format!("bad blue target `{s}`")))?;
            return Ok(BlueTarget::Path(n));
        }
        let inner = s
            .strip_prefix("H(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ParseError::new(format!("bad blue target `{s}`")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        let [a, b, x] = parts.as_slice() else {
            return Err(ParseError::new(format!("family target needs three numbers: `{s}`")));
        };
        let alpha = parse_q(a)?;
        if alpha <= Q::zero() {
            return Err(ParseError::new("family alpha must be positive"));
        }
        Ok(BlueTarget::Family(FamilySpec::new(alpha, parse_q(b)?, parse_q(x)?)))
    }
}

/// Red loses on any cycle or a path on `red_k` vertices; blue loses on `blue`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetSpec {
    pub red_k: usize,
    pub blue: BlueTarget,
}

impl TargetSpec {
    pub fn new(red_k: usize, blue: BlueTarget) -> TargetSpec {
        assert!(red_k >= 2, "red path target needs k >= 2");
        match &blue {
            BlueTarget::Path(n) => assert!(*n >= 2, "blue path target needs n >= 2"),
            BlueTarget::Family(f) => assert!(f.x > Q::zero(), "family target needs x > 0"),
        }
        TargetSpec { red_k, blue }
    }

    /// The game's own red path against a blue path.
    pub fn game(kind: GameKind, blue_n: usize) -> TargetSpec {
        TargetSpec::new(kind.red_path(), BlueTarget::Path(blue_n))
    }

    /// The game's own red path against the family extracted from its table.
    pub fn family_game(kind: GameKind, x: Q) -> TargetSpec {
        let b = extract_bound(&PotentialTable::builtin(kind));
        TargetSpec::new(kind.red_path(), BlueTarget::Family(b.family(x)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    RedTarget,
    BlueTarget,
    BudgetExhausted,
    BuilderFault(String),
    PainterFault(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::RedTarget => f.write_str("red-target"),
            Outcome::BlueTarget => f.write_str("blue-target"),
            Outcome::BudgetExhausted => f.write_str("move-budget-exhausted"),
            Outcome::BuilderFault(m) => write!(f, "builder-fault:{m}"),
            Outcome::PainterFault(m) => write!(f, "painter-fault:{m}"),
        }
    }
}

impl FromStr for Outcome {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(match s {
            "red-target" => Outcome::RedTarget,
            "blue-target" => Outcome::BlueTarget,
            "move-budget-exhausted" => Outcome::BudgetExhausted,
            other => match other.split_once(':') {
                Some(("builder-fault", m)) => Outcome::BuilderFault(m.into()),
                Some(("painter-fault", m)) => Outcome::PainterFault(m.into()),
                _ => return Err(ParseError::new(format!("unknown outcome `{s}`"))),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub round: usize,
    /// Endpoints in the order Builder proposed them.
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
    pub capital: Option<Capital>,
    /// `None` when the potential is undefined (e.g. a big component without capital).
    pub f_before: Option<ExtRational>,
    pub f_after: Option<ExtRational>,
}

impl MoveRecord {
    pub fn delta(&self) -> Option<ExtRational> {
        match (&self.f_before, &self.f_after) {
            (Some(a), Some(b)) => b.delta_from(a),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub kind: GameKind,
    pub targets: TargetSpec,
    /// Colored edges present before round 1.
    pub initial: Vec<(Vertex, Vertex, Color)>,
    pub moves: Vec<MoveRecord>,
    pub outcome: Outcome,
}

fn fmt_f(f: &Option<ExtRational>) -> String {
    f.as_ref().map_or_else(|| "na".to_string(), ExtRational::to_string)
}

fn parse_f(s: &str) -> Result<Option<ExtRational>, ParseError> {
    if s == "na" {
        Ok(None)
    } else {
        s.parse().map(Some)
    }
}

fn parse_edge(s: &str) -> Result<(Vertex, Vertex), ParseError> {
    let bad = || ParseError::new(format!("bad edge `{s}`"));
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    Ok((Vertex(a.parse().map_err(|_| bad())?), Vertex(b.parse().map_err(|_| bad())?)))
}

impl Transcript {
    pub fn initial_state(&self) -> Result<GameState, ArenaError> {
        let mut s = GameState::new(self.kind);
        for &(u, v, c) in &self.initial {
            s = s
                .add_edge(u, v, c)
                .map_err(|e| ArenaError::Replay { round: 0, message: e.to_string() })?;
        }
        Ok(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("game={} red_k={} blue={}", self.kind, self.targets.red_k, self.targets.blue);
        if !self.initial.is_empty() {
            let init: Vec<String> = self.initial.iter().map(|(u, v, c)| format!("{u}-{v}:{c}")).collect();
            out.push_str(&format!(" initial={}", init.join(",")));
        }
        out.push('\n');
        for m in &self.moves {
            let cap = m.capital.map_or_else(|| "none".to_string(), |c| c.to_string());
            out.push_str(&format!(
                "round={} edge={}-{} color={} capital={} f_before={} f_after={}\n",
                m.round,
                m.u,
                m.v,
                m.color,
                cap,
                fmt_f(&m.f_before),
                fmt_f(&m.f_after)
            ));
        }
        out.push_str(&format!("outcome={}\n", self.outcome));
        out
    }

    pub fn from_text(text: &str) -> Result<Transcript, ParseError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| ParseError::new("empty transcript"))?;
        let mut kind = None;
        let mut red_k = None;
        let mut blue = None;
        let mut initial = Vec::new();
        for tok in header.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| ParseError::new(format!("bad token `{tok}`")).at(1))?;
            match k {
                "game" => kind = Some(v.parse::<GameKind>().map_err(|e| e.at(1))?),
                "red_k" => red_k = Some(v.parse::<usize>().map_err(|_| ParseError::new("bad red_k").at(1))?),
                "blue" => blue = Some(v.parse::<BlueTarget>().map_err(|e| e.at(1))?),
                "initial" => {
                    for item in v.split(',') {
                        let (e, c) = item.split_once(':').ok_or_else(|| ParseError::new("bad initial edge").at(1))?;
                        let (a, b) = parse_edge(e).map_err(|e| e.at(1))?;
                        initial.push((a, b, c.parse().map_err(|e: ParseError| e.at(1))?));
                    }
                }
                other => return Err(ParseError::new(format!("unknown header key `{other}`")).at(1)),
            }
        }
        let missing = |what: &str| ParseError::new(format!("header lacks {what}")).at(1);
        let targets = TargetSpec { red_k: red_k.ok_or_else(|| missing("red_k"))?, blue: blue.ok_or_else(|| missing("blue"))? };
        let mut moves = Vec::new();
        let mut outcome = None;
        for (i, line) in lines {
            let ln = i + 1;
            if let Some(o) = line.trim().strip_prefix("outcome=") {
                outcome = Some(o.parse::<Outcome>().map_err(|e| e.at(ln))?);
                continue;
            }
            let mut fields = std::collections::BTreeMap::new();
            for tok in line.split_whitespace() {
                let (k, v) = tok.split_once('=').ok_or_else(|| ParseError::new(format!("bad token `{tok}`")).at(ln))?;
                fields.insert(k, v);
            }
            let get = |k: &str| fields.get(k).copied().ok_or_else(|| ParseError::new(format!("move lacks {k}")).at(ln));
            let (u, v) = parse_edge(get("edge")?).map_err(|e| e.at(ln))?;
            let capital = match get("capital")? {
                "none" => None,
                c => Some(c.parse::<Capital>().map_err(|e| e.at(ln))?),
            };
            moves.push(MoveRecord {
                round: get("round")?.parse().map_err(|_| ParseError::new("bad round").at(ln))?,
                u,
                v,
                color: get("color")?.parse().map_err(|e: ParseError| e.at(ln))?,
                capital,
                f_before: parse_f(get("f_before")?).map_err(|e| e.at(ln))?,
                f_after: parse_f(get("f_after")?).map_err(|e| e.at(ln))?,
            });
        }
        for (i, m) in moves.iter().enumerate() {
            if m.round != i + 1 {
                return Err(ParseError::new(format!("rounds must be consecutive from 1; found {}", m.round)));
            }
        }
        Ok(Transcript {
            kind: kind.ok_or_else(|| missing("game"))?,
            targets,
            initial,
            moves,
            outcome: outcome.ok_or_else(|| ParseError::new("transcript lacks an outcome line"))?,
        })
    }

    /// Round at which the blue target was reached, if it was.
    pub fn blue_round(&self) -> Option<usize> {
        (self.outcome == Outcome::BlueTarget).then_some(self.moves.len())
    }
}

/// `max over blue subgraphs H without isolated vertices of alpha v(H) + beta v1(H)`,
/// or `None` if the blue graph has no edge.
///
/// For `beta <= 0` only induced subgraphs need checking (adding edges inside a
/// fixed vertex set never creates a degree-1 vertex), so the search runs over
/// vertex subsets; otherwise over edge subsets.
pub fn family_score_with(state: &GameState, alpha: &Q, beta: &Q, cap: usize) -> Result<Option<Q>, ArenaError> {
    let verts: Vec<Vertex> = state.vertices().filter(|&v| state.blue_degree(v) > 0).collect();
    if verts.is_empty() {
        return Ok(None);
    }
    if verts.len() > cap {
        return Err(ArenaError::TooLarge { vertices: verts.len(), cap });
    }
    let k = verts.len();
    let mut nbr = vec![0u64; k];
    for (i, &x) in verts.iter().enumerate() {
        for (j, &y) in verts.iter().enumerate() {
            if state.color_of(x, y) == Some(Color::Blue) {
                nbr[i] |= 1 << j;
            }
        }
    }
    let score = |v: usize, v1: usize| alpha * qi(v as i64) + beta * qi(v1 as i64);
    let mut best: Option<Q> = None;
    if *beta <= Q::zero() {
        for set in 1u64..(1 << k) {
            let mut v1 = 0;
            let mut ok = true;
            for (i, n) in nbr.iter().enumerate() {
                if set >> i & 1 == 1 {
                    match (n & set).count_ones() {
                        0 => {
                            ok = false;
                            break;
                        }
                        1 => v1 += 1,
                        _ => {}
                    }
                }
            }
            if ok {
                let s = score(set.count_ones() as usize, v1);
                if best.as_ref().is_none_or(|b| s > *b) {
                    best = Some(s);
                }
            }
        }
    } else {
        let nbr = &nbr;
        let edges: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (i + 1..k).filter(move |&j| nbr[i] >> j & 1 == 1).map(move |j| (i, j))).collect();
        if edges.len() > 24 {
            return Err(ArenaError::TooLarge { vertices: k, cap });
        }
        for set in 1u32..(1 << edges.len()) {
            let mut deg = vec![0usize; k];
            for (e, &(i, j)) in edges.iter().enumerate() {
                if set >> e & 1 == 1 {
                    deg[i] += 1;
                    deg[j] += 1;
                }
            }
            let v = deg.iter().filter(|&&d| d > 0).count();
            let v1 = deg.iter().filter(|&&d| d == 1).count();
            let s = score(v, v1);
            if best.as_ref().is_none_or(|b| s > *b) {
                best = Some(s);
            }
        }
    }
    Ok(best)
}

/// [`family_score_with`] at `beta = -1`.
pub fn family_score(state: &GameState, alpha: &Q, cap: usize) -> Result<Option<Q>, ArenaError> {
    family_score_with(state, alpha, &qi(-1), cap)
}

pub fn check_termination(state: &GameState, targets: &TargetSpec) -> Result<Option<Outcome>, ArenaError> {
    if state.has_red_cycle() || state.has_path(Color::Red, targets.red_k) {
        return Ok(Some(Outcome::RedTarget));
    }
    let blue = match &targets.blue {
        BlueTarget::Path(n) => state.has_path(Color::Blue, *n),
        BlueTarget::Family(f) => {
            family_score_with(state, &f.alpha, &f.beta, FAMILY_CAP)?.is_some_and(|s| s >= f.x)
        }
    };
    Ok(blue.then_some(Outcome::BlueTarget))
}

/// Same verdict as [`check_termination`] on a state whose only new edge is
/// `uv`, looking only at paths through that edge.
pub fn check_after_move(
    state: &GameState,
    targets: &TargetSpec,
    u: Vertex,
    v: Vertex,
    color: Color,
) -> Result<Option<Outcome>, ArenaError> {
    match (color, &targets.blue) {
        (Color::Red, _) => {
            let comp = state.red_component(u);
            let edges = comp.iter().map(|&x| state.degree(x, Color::Red)).sum::<usize>() / 2;
            if edges >= comp.len() || state.has_path_through(Color::Red, u, v, targets.red_k) {
                return Ok(Some(Outcome::RedTarget));
            }
            Ok(None)
        }
        (Color::Blue, BlueTarget::Path(n)) => Ok(state.has_path_through(Color::Blue, u, v, *n).then_some(Outcome::BlueTarget)),
        (Color::Blue, BlueTarget::Family(_)) => check_termination(state, targets),
    }
}

fn try_potential(state: &GameState, table: &PotentialTable) -> Option<ExtRational> {
    potential(state, table).ok()
}

/// Plays from the empty board.
pub fn play(
    builder: &mut dyn Builder,
    painter: &mut dyn Painter,
    kind: GameKind,
    targets: &TargetSpec,
    max_rounds: usize,
) -> Result<Transcript, ArenaError> {
    play_from(builder, painter, &GameState::new(kind), targets, max_rounds)
}

/// Plays from `initial` (capitals of `initial` are kept). Potentials are
/// computed with the game's builtin table.
pub fn play_from(
    builder: &mut dyn Builder,
    painter: &mut dyn Painter,
    initial: &GameState,
    targets: &TargetSpec,
    max_rounds: usize,
) -> Result<Transcript, ArenaError> {
    if max_rounds == 0 {
        return Err(ArenaError::ZeroBudget);
    }
    let kind = initial.kind();
    let table = PotentialTable::builtin(kind);
    let mut state = initial.clone();
    let mut moves = Vec::new();
    let init: Vec<(Vertex, Vertex, Color)> = initial.moves().map(|(e, c)| (e.ends().0, e.ends().1, c)).collect();
    let mut f = try_potential(&state, &table);
    let mut outcome = check_termination(&state, targets)?;
    while outcome.is_none() {
        if moves.len() == max_rounds {
            outcome = Some(Outcome::BudgetExhausted);
            break;
        }
        let (u, v) = match builder.next_edge(&state) {
            Ok(e) => e,
            Err(e) => {
                outcome = Some(Outcome::BuilderFault(e.to_string()));
                break;
            }
        };
        if u == v || state.is_selected(u, v) {
            outcome = Some(Outcome::BuilderFault(format!("illegal edge {u}-{v}")));
            break;
        }
        let reply = match painter.respond(&state, u, v) {
            Ok(r) => r,
            Err(e) => {
                outcome = Some(Outcome::PainterFault(e.to_string()));
                break;
            }
        };
        let mut next = state.add_edge(u, v, reply.color).expect("edge checked above");
        if let Some(c) = reply.capital {
            match next.with_capital(c) {
                Ok(s) => next = s,
                Err(e) => {
                    outcome = Some(Outcome::PainterFault(e.to_string()));
                    break;
                }
            }
        }
        let f_after = try_potential(&next, &table);
        moves.push(MoveRecord {
            round: moves.len() + 1,
            u,
            v,
            color: reply.color,
            capital: reply.capital,
            f_before: f.clone(),
            f_after: f_after.clone(),
        });
        state = next;
        f = f_after;
        outcome = check_after_move(&state, targets, u, v, reply.color)?;
    }
    Ok(Transcript {
        kind,
        targets: targets.clone(),
        initial: init,
        moves,
        outcome: outcome.expect("loop exits with an outcome"),
    })
}

/// Replays the transcript's Builder choices against the builtin Painter.
pub fn replay(t: &Transcript, max_rounds: usize) -> Result<Transcript, ArenaError> {
    let mut b = ScriptedBuilder::new(t.moves.iter().map(|m| (m.u, m.v)).collect());
    let mut p = StrategyPainter::builtin(t.kind);
    play_from(&mut b, &mut p, &t.initial_state()?, &t.targets, max_rounds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The potential grew by more than the jump.
    Jump(ExtRational),
    /// The recorded color or capital differs from the builtin Painter's.
    StrategyMismatch { expected: Color, expected_capital: Option<Capital> },
    /// Recorded potentials differ from recomputed ones.
    PotentialMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub round: usize,
    pub kind: ViolationKind,
    /// Colored edges before the move, as `u-v:color` items.
    pub context: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Audit {
    /// Recomputed `f(after) - f(before)` per move; `None` where undefined.
    pub deltas: Vec<Option<ExtRational>>,
    pub violations: Vec<Violation>,
}

fn state_context(s: &GameState) -> String {
    let items: Vec<String> = s.moves().map(|(e, c)| format!("{e}:{c}")).collect();
    let caps: Vec<String> = s.capitals().iter().map(Capital::to_string).collect();
    format!("edges=[{}] capitals=[{}]", items.join(","), caps.join(","))
}

/// Replays and checks every move: `delta f <= jump`, agreement with the
/// builtin strategy, and the recorded potentials.
pub fn audit_transcript(t: &Transcript, table: &PotentialTable) -> Result<Audit, ArenaError> {
    let strategy = StrategyTable::builtin(t.kind);
    let mut state = t.initial_state()?;
    let mut audit = Audit::default();
    for m in &t.moves {
        let fail = |e: String| ArenaError::Replay { round: m.round, message: e };
        let before = try_potential(&state, table);
        let context = state_context(&state);
        match decide(&state, &strategy, m.u, m.v) {
            Ok(d) if d.color == m.color && d.capital == m.capital => {}
            Ok(d) => audit.violations.push(Violation {
                round: m.round,
                kind: ViolationKind::StrategyMismatch { expected: d.color, expected_capital: d.capital },
                context: context.clone(),
            }),
            Err(e) => return Err(fail(e.to_string())),
        }
        let mut next = state.add_edge(m.u, m.v, m.color).map_err(|e| fail(e.to_string()))?;
        if let Some(c) = m.capital {
            next = next.with_capital(c).map_err(|e| fail(e.to_string()))?;
        }
        let after = try_potential(&next, table);
        let delta = match (&before, &after) {
            (Some(a), Some(b)) => b.delta_from(a),
            _ => None,
        };
        if let Some(d) = &delta {
            if *d > ExtRational::Finite(table.jump().clone()) {
                audit.violations.push(Violation { round: m.round, kind: ViolationKind::Jump(d.clone()), context: context.clone() });
            }
        }
        if before != m.f_before || after != m.f_after {
            audit.violations.push(Violation { round: m.round, kind: ViolationKind::PotentialMismatch, context });
        }
        audit.deltas.push(delta);
        state = next;
    }
    Ok(audit)
}

/// Smallest round at which the rules allow a blue `P_n` in this game:
/// `ceil(alpha n + 2 beta)`.
pub fn blue_path_round_bound(kind: GameKind, n: usize) -> Q {
    let b = extract_bound(&PotentialTable::builtin(kind));
    Q::from_integer(ceil_q(&b.evaluate(n, 2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuilderKind {
    Greedy,
    Random,
}

impl FromStr for BuilderKind {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "greedy" => Ok(BuilderKind::Greedy),
            "random" => Ok(BuilderKind::Random),
            other => Err(ParseError::new(format!("unknown builder `{other}`"))),
        }
    }
}

impl BuilderKind {
    /// Greedy with `seed = None` is the deterministic greedy Builder.
    pub fn make(self, seed: Option<u64>) -> Box<dyn Builder + Send> {
        match (self, seed) {
            (BuilderKind::Greedy, None) => Box::new(GreedyBuilder::new()),
            (BuilderKind::Greedy, Some(s)) => Box::new(GreedyBuilder::seeded(s)),
            (BuilderKind::Random, s) => Box::new(RandomBuilder::new(s.unwrap_or(0))),
        }
    }
}

/// Per-game statistics from a simulated run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSummary {
    pub seed: u64,
    pub rounds: usize,
    pub outcome: Outcome,
    pub blue_round: Option<usize>,
    pub max_delta: Option<ExtRational>,
    pub violations: usize,
    /// Potential exceeded `jump * t` at some round `t`.
    pub above_linear: bool,
}

pub fn summarize(t: &Transcript, seed: u64) -> RunSummary {
    let jump = PotentialTable::builtin(t.kind).jump().clone();
    let max_delta = t.moves.iter().filter_map(MoveRecord::delta).max();
    let violations = t
        .moves
        .iter()
        .filter(|m| m.delta().is_some_and(|d| d > ExtRational::Finite(jump.clone())) || m.f_after.is_none())
        .count();
    let above_linear = t.moves.iter().any(|m| {
        m.f_after
            .as_ref()
            .is_some_and(|f| *f > ExtRational::Finite(&jump * qi(m.round as i64)))
    });
    RunSummary {
        seed,
        rounds: t.moves.len(),
        outcome: t.outcome.clone(),
        blue_round: t.blue_round(),
        max_delta,
        violations,
        above_linear,
    }
}

/// Runs one game per seed in parallel against the builtin Painter.
pub fn simulate_many(
    kind: GameKind,
    builder: BuilderKind,
    seeds: &[u64],
    targets: &TargetSpec,
    max_rounds: usize,
) -> Result<Vec<RunSummary>, ArenaError> {
    seeds
        .par_iter()
        .map(|&seed| {
            let mut b = builder.make(Some(seed));
            let mut p = StrategyPainter::builtin(kind);
            let t = play(&mut b, &mut p, kind, targets, max_rounds)?;
            Ok(summarize(&t, seed))
        })
        .collect()
}
