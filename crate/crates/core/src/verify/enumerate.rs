//! Exhaustive move configurations.
//!
//! A configuration is a small host graph with a designated unselected pair
//! `u, v`. Each endpoint sits either in a small red component (a red path on
//! one to four vertices, every vertex with its own blue class) or at distance
//! `d` from the capital of a big red gadget. Blue degrees are realized with
//! private blue partners, which never change type. Pairs inside one small
//! component (two leaves of an L, far vertices of an N) are included so that
//! cycle-closing red moves are seen.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graph::{BlueClass, Capital, CapitalKind, Color, Edge, GameKind, GameState, RedClass, Vertex, VertexType};
use crate::potential::{potential, PotentialTable};
use crate::rational::ExtRational;
use crate::strategy::{directive_choices, StrategyTable};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Side {
    /// Red path on `len` vertices, endpoint at index `pos`.
    Small { len: usize, pos: usize, blues: Vec<BlueClass> },
    /// Endpoint at distance `d` from the capital of a big component.
    Big { d: usize, blue: BlueClass },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Layout {
    Pair(Side, Side),
    /// Both endpoints on one red path of `len` vertices.
    Same { len: usize, a: usize, b: usize, blues: Vec<BlueClass> },
}

/// One move configuration.
#[derive(Clone, Debug)]
pub struct Config {
    pub desc: String,
    pub state: GameState,
    pub u: Vertex,
    pub v: Vertex,
}

struct Alloc {
    next: u32,
    edges: Vec<(u32, u32, Color)>,
    capitals: Vec<Capital>,
}

impl Alloc {
    fn vertex(&mut self) -> u32 {
        self.next += 1;
        self.next - 1
    }

    fn red(&mut self, a: u32, b: u32) {
        self.edges.push((a, b, Color::Red));
    }

    fn blue_partners(&mut self, x: u32, b: BlueClass) {
        for _ in 0..b.index() {
            let p = self.vertex();
            self.edges.push((x, p, Color::Blue));
        }
    }

    fn red_path(&mut self, len: usize, blues: &[BlueClass]) -> Vec<u32> {
        let xs: Vec<u32> = (0..len).map(|_| self.vertex()).collect();
        for w in xs.windows(2) {
            self.red(w[0], w[1]);
        }
        for (&x, &b) in xs.iter().zip(blues) {
            self.blue_partners(x, b);
        }
        xs
    }

    fn side(&mut self, kind: GameKind, side: &Side) -> u32 {
        match side {
            Side::Small { len, pos, blues } => self.red_path(*len, blues)[*pos],
            Side::Big { d, blue } => {
                let hub = match kind.capital_kind() {
                    CapitalKind::Vertex => {
                        let c = self.vertex();
                        for _ in 0..3 {
                            let l = self.vertex();
                            self.red(c, l);
                        }
                        self.capitals.push(Capital::Vertex(Vertex(c)));
                        c
                    }
                    _ => {
                        let (c0, c1, q, r) = (self.vertex(), self.vertex(), self.vertex(), self.vertex());
                        self.red(c0, c1);
                        self.red(c0, q);
                        self.red(c1, r);
                        self.capitals.push(Capital::Edge(Edge::new(Vertex(c0), Vertex(c1))));
                        c1
                    }
                };
                let mut at = hub;
                for _ in 0..*d {
                    let p = self.vertex();
                    self.red(at, p);
                    at = p;
                }
                self.blue_partners(at, *blue);
                at
            }
        }
    }
}

fn blue_assignments(len: usize) -> Vec<Vec<BlueClass>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                BlueClass::ALL.map(|b| {
                    let mut w = v.clone();
                    w.push(b);
                    w
                })
            })
            .collect()
    })
}

fn shape_name(len: usize) -> &'static str {
    ["O", "I", "L", "N"][len - 1]
}

fn blues_text(bs: &[BlueClass]) -> String {
    bs.iter().map(|b| b.index().to_string()).collect::<Vec<_>>().join("")
}

fn side_text(s: &Side) -> String {
    match s {
        Side::Small { len, pos, blues } => format!("{}[pos={pos} blue={}]", shape_name(*len), blues_text(blues)),
        Side::Big { d, blue } => format!("F{d}[blue={}]", blue.index()),
    }
}

fn small_lengths(kind: GameKind) -> &'static [usize] {
    match kind {
        GameKind::P3 => &[1, 2],
        GameKind::P5 => &[1],
        GameKind::P7 | GameKind::P9 => &[1, 2, 3],
        GameKind::P8 => &[1, 2, 3, 4],
    }
}

fn max_distance(kind: GameKind) -> Option<usize> {
    let ds: Vec<usize> = kind
        .finite_classes()
        .iter()
        .filter_map(|c| (0..4).find(|&d| RedClass::from_distance(d) == *c))
        .collect();
    ds.into_iter().max()
}

fn sides(kind: GameKind) -> Vec<Side> {
    let mut out = Vec::new();
    for &len in small_lengths(kind) {
        let positions: &[usize] = if len >= 3 { &[0, 1] } else { &[0] };
        for &pos in positions {
            for blues in blue_assignments(len) {
                out.push(Side::Small { len, pos, blues });
            }
        }
    }
    if let Some(max_d) = max_distance(kind) {
        for d in 0..=max_d {
            for blue in BlueClass::ALL {
                out.push(Side::Big { d, blue });
            }
        }
    }
    out
}

fn layouts(kind: GameKind) -> Vec<Layout> {
    let ss = sides(kind);
    let mut out = Vec::new();
    for i in 0..ss.len() {
        for j in i..ss.len() {
            out.push(Layout::Pair(ss[i].clone(), ss[j].clone()));
        }
    }
    for &len in small_lengths(kind) {
        let pairs: &[(usize, usize)] = match len {
            3 => &[(0, 2)],
            4 => &[(0, 3), (0, 2)],
            _ => &[],
        };
        for &(a, b) in pairs {
            for blues in blue_assignments(len) {
                out.push(Layout::Same { len, a, b, blues: blues.clone() });
            }
        }
    }
    out
}

fn build(kind: GameKind, layout: &Layout) -> Config {
    let mut al = Alloc { next: 0, edges: Vec::new(), capitals: Vec::new() };
    let (u, v, desc) = match layout {
        Layout::Pair(a, b) => {
            let u = al.side(kind, a);
            let v = al.side(kind, b);
            (u, v, format!("{} + {}", side_text(a), side_text(b)))
        }
        Layout::Same { len, a, b, blues } => {
            let xs = al.red_path(*len, blues);
            (xs[*a], xs[*b], format!("{}[{a},{b} blue={}]", shape_name(*len), blues_text(blues)))
        }
    };
    let mut state = GameState::from_edges(kind, &al.edges).expect("configurations are simple graphs");
    for c in al.capitals {
        state = state.with_capital(c).expect("gadget capitals are valid");
    }
    Config { desc, state, u: Vertex(u), v: Vertex(v) }
}

/// Every move configuration of the game.
pub fn configurations(kind: GameKind) -> Vec<Config> {
    layouts(kind).iter().map(|s| build(kind, s)).collect()
}

/// A configuration played under a strategy, for one resolution of its directive.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub config: usize,
    pub rule: usize,
    pub label: String,
    pub color: Color,
    pub capital: Option<Capital>,
    /// Endpoint types, oriented as the rule matched them.
    pub pair: (VertexType, VertexType),
    /// `(before, after)` for every vertex whose type changed, sorted.
    pub transitions: Vec<(VertexType, VertexType)>,
    /// The state after the move is not a valid classified state.
    pub error: Option<String>,
    pub delta: Option<ExtRational>,
}

fn types_of(s: &GameState) -> Result<BTreeMap<Vertex, VertexType>, String> {
    s.classify().map_err(|e| e.to_string())
}

fn o0() -> VertexType {
    VertexType::new(RedClass::O, BlueClass::B0)
}

/// Plays one configuration, once per capital choice.
pub fn evaluate_one(
    idx: usize,
    c: &Config,
    strategy: &StrategyTable,
    table: Option<&PotentialTable>,
) -> Vec<Evaluated> {
    let before = types_of(&c.state).expect("configurations classify");
    let ty = |x: Vertex| before.get(&x).copied().unwrap_or_else(o0);
    let (tu, tv) = (ty(c.u), ty(c.v));
    let Some((rule, forward)) = strategy.lookup(tu, tv) else {
        return vec![Evaluated {
            config: idx,
            rule: usize::MAX,
            label: String::new(),
            color: Color::Red,
            capital: None,
            pair: (tu, tv),
            transitions: Vec::new(),
            error: Some(format!("no rule covers ({tu}, {tv})")),
            delta: Some(ExtRational::Infinite),
        }];
    };
    let r = &strategy.rules()[rule];
    let (u, v, pair) = if forward { (c.u, c.v, (tu, tv)) } else { (c.v, c.u, (tv, tu)) };
    let choices: Vec<Option<Capital>> = match directive_choices(&c.state, u, v, r.directive) {
        Ok(cs) if cs.is_empty() => vec![None],
        Ok(cs) => cs.into_iter().map(Some).collect(),
        Err(e) => {
            return vec![Evaluated {
                config: idx,
                rule,
                label: r.label.clone(),
                color: r.color,
                capital: None,
                pair,
                transitions: Vec::new(),
                error: Some(e.to_string()),
                delta: Some(ExtRational::Infinite),
            }]
        }
    };
    let f_before = table.map(|t| potential(&c.state, t).expect("configurations have a potential"));
    choices
        .into_iter()
        .map(|capital| {
            let mut after = c.state.add_edge(u, v, r.color).expect("pair is unselected");
            let mut error = None;
            if let Some(cap) = capital {
                match after.with_capital(cap) {
                    Ok(s) => after = s,
                    Err(e) => error = Some(e.to_string()),
                }
            }
            let mut transitions = Vec::new();
            if error.is_none() {
                match types_of(&after) {
                    Ok(now) => {
                        for (&x, &t) in &now {
                            let old = ty(x);
                            if old != t {
                                transitions.push((old, t));
                            }
                        }
                        transitions.sort();
                    }
                    Err(e) => error = Some(e),
                }
            }
            let delta = match (&f_before, table) {
                (Some(fb), Some(t)) if error.is_none() => {
                    let fa = potential(&after, t).unwrap_or(ExtRational::Infinite);
                    Some(fa.delta_from(fb).unwrap_or(ExtRational::Infinite))
                }
                (Some(_), Some(_)) => Some(ExtRational::Infinite),
                _ => None,
            };
            Evaluated { config: idx, rule, label: r.label.clone(), color: r.color, capital, pair, transitions, error, delta }
        })
        .collect()
}

/// All configurations of the strategy's game, evaluated in parallel.
pub fn evaluate_all(configs: &[Config], strategy: &StrategyTable, table: Option<&PotentialTable>) -> Vec<Evaluated> {
    configs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, c)| evaluate_one(i, c, strategy, table))
        .collect()
}

/// Class name used in witnesses; games with one L column print `L`.
fn witness_class(kind: GameKind, r: RedClass) -> String {
    match r {
        RedClass::L0 | RedClass::L1 if !kind.splits_l() => "L".into(),
        other => other.to_string(),
    }
}

fn multiset(items: Vec<String>) -> String {
    let mut counts: Vec<(String, usize)> = Vec::new();
    for it in items {
        match counts.iter_mut().find(|(s, _)| *s == it) {
            Some((_, n)) => *n += 1,
            None => counts.push((it, 1)),
        }
    }
    counts
        .into_iter()
        .map(|(s, n)| if n == 1 { s } else { format!("{n}{s}") })
        .collect::<Vec<_>>()
        .join(",")
}

/// `before->after` over the vertices whose type changed, e.g. `O,2I->3L`.
/// Red moves list red classes only; blue moves list full types.
pub fn witness(kind: GameKind, e: &Evaluated) -> String {
    let mut ts = e.transitions.clone();
    let (olds, news): (Vec<String>, Vec<String>) = match e.color {
        Color::Red => {
            ts.retain(|(a, b)| a.red != b.red);
            let mut olds: Vec<RedClass> = ts.iter().map(|t| t.0.red).collect();
            let mut news: Vec<RedClass> = ts.iter().map(|t| t.1.red).collect();
            olds.sort();
            news.sort();
            (
                olds.into_iter().map(|r| witness_class(kind, r)).collect(),
                news.into_iter().map(|r| witness_class(kind, r)).collect(),
            )
        }
        Color::Blue => {
            let (a, b) = e.pair;
            let bump = |t: VertexType| VertexType::new(t.red, t.blue.bump());
            (vec![a.to_string(), b.to_string()], vec![bump(a).to_string(), bump(b).to_string()])
        }
    };
    format!("{}->{}", multiset(olds), multiset(news))
}
