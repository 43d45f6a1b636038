//! Colored host graph, red-component analysis and vertex classification.
//!
//! The board is the infinite complete graph; a [`GameState`] only stores the
//! vertices that have been touched by some edge. Every untouched vertex is an
//! isolated, blue-degree-0 vertex and all of them are interchangeable, so
//! [`GameState::fresh`] hands out one representative on demand.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{GraphError, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn ends(&self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

impl FromStr for Color {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            other => Err(ParseError::new(format!("unknown color `{other}`"))),
        }
    }
}

/// How a game marks the centre of a big red component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapitalKind {
    None,
    Edge,
    Vertex,
}

/// The five potential games: the red side forbids all cycles and `P_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GameKind {
    P3,
    P5,
    P7,
    P8,
    P9,
}

impl GameKind {
    pub const ALL: [GameKind; 5] = [GameKind::P3, GameKind::P5, GameKind::P7, GameKind::P8, GameKind::P9];

    /// Number of vertices of the forbidden red path.
    pub fn red_path(self) -> usize {
        match self {
            GameKind::P3 => 3,
            GameKind::P5 => 5,
            GameKind::P7 => 7,
            GameKind::P8 => 8,
            GameKind::P9 => 9,
        }
    }

    pub fn capital_kind(self) -> CapitalKind {
        match self {
            GameKind::P3 => CapitalKind::None,
            GameKind::P8 => CapitalKind::Vertex,
            _ => CapitalKind::Edge,
        }
    }

    /// Red classes with finite table values; classification can also produce
    /// [`GameKind::illegal_classes`], which end the game.
    pub fn finite_classes(self) -> &'static [RedClass] {
        use RedClass::*;
        match self {
            GameKind::P3 => &[O, I],
            GameKind::P5 => &[O, F0, F1],
            GameKind::P7 => &[O, I, L0, L1, F0, F1, F2],
            GameKind::P8 => &[O, I, L0, L1, N0, N1, F0, F1, F2, F3],
            GameKind::P9 => &[O, I, L0, L1, F0, F1, F2, F3],
        }
    }

    pub fn illegal_classes(self) -> &'static [RedClass] {
        use RedClass::*;
        match self {
            GameKind::P3 | GameKind::P8 | GameKind::P9 => &[F4plus],
            GameKind::P5 => &[F2, F3, F4plus],
            GameKind::P7 => &[F3, F4plus],
        }
    }

    /// Whether the L class is split into centre/leaf columns in this game's table.
    pub fn splits_l(self) -> bool {
        matches!(self, GameKind::P7 | GameKind::P8)
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.red_path())
    }
}

impl FromStr for GameKind {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.to_ascii_lowercase().as_str() {
            "p3" => Ok(GameKind::P3),
            "p5" => Ok(GameKind::P5),
            "p7" => Ok(GameKind::P7),
            "p8" => Ok(GameKind::P8),
            "p9" => Ok(GameKind::P9),
            other => Err(ParseError::new(format!("unknown game `{other}`"))),
        }
    }
}

/// Red class of a vertex: the shape of its red component, or its distance
/// to the capital of a big component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RedClass {
    O,
    I,
    L0,
    L1,
    N0,
    N1,
    F0,
    F1,
    F2,
    F3,
    F4plus,
}

impl RedClass {
    pub const ALL: [RedClass; 11] = [
        RedClass::O,
        RedClass::I,
        RedClass::L0,
        RedClass::L1,
        RedClass::N0,
        RedClass::N1,
        RedClass::F0,
        RedClass::F1,
        RedClass::F2,
        RedClass::F3,
        RedClass::F4plus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RedClass::O => "O",
            RedClass::I => "I",
            RedClass::L0 => "L0",
            RedClass::L1 => "L1",
            RedClass::N0 => "N0",
            RedClass::N1 => "N1",
            RedClass::F0 => "F0",
            RedClass::F1 => "F1",
            RedClass::F2 => "F2",
            RedClass::F3 => "F3",
            RedClass::F4plus => "F4plus",
        }
    }

    pub fn from_distance(d: usize) -> RedClass {
        match d {
            0 => RedClass::F0,
            1 => RedClass::F1,
            2 => RedClass::F2,
            3 => RedClass::F3,
            _ => RedClass::F4plus,
        }
    }

    pub fn is_f(self) -> bool {
        matches!(self, RedClass::F0 | RedClass::F1 | RedClass::F2 | RedClass::F3 | RedClass::F4plus)
    }
}

impl fmt::Display for RedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RedClass {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        RedClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| ParseError::new(format!("unknown red class `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlueClass {
    B0,
    B1,
    B2plus,
}

impl BlueClass {
    pub const ALL: [BlueClass; 3] = [BlueClass::B0, BlueClass::B1, BlueClass::B2plus];

    pub fn from_degree(d: usize) -> BlueClass {
        match d {
            0 => BlueClass::B0,
            1 => BlueClass::B1,
            _ => BlueClass::B2plus,
        }
    }

    /// Class after one more blue edge; `B2plus` is closed upward.
    pub fn bump(self) -> BlueClass {
        match self {
            BlueClass::B0 => BlueClass::B1,
            _ => BlueClass::B2plus,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            BlueClass::B0 => "B0",
            BlueClass::B1 => "B1",
            BlueClass::B2plus => "B2+",
        }
    }
}

impl fmt::Display for BlueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BlueClass {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "B0" | "0" => Ok(BlueClass::B0),
            "B1" | "1" => Ok(BlueClass::B1),
            "B2+" | "B2plus" | "2+" => Ok(BlueClass::B2plus),
            other => Err(ParseError::new(format!("unknown blue class `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexType {
    pub red: RedClass,
    pub blue: BlueClass,
}

impl VertexType {
    pub fn new(red: RedClass, blue: BlueClass) -> Self {
        VertexType { red, blue }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.red, self.blue)
    }
}

impl FromStr for VertexType {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (r, b) = s
            .split_once('^')
            .ok_or_else(|| ParseError::new(format!("vertex type `{s}` needs a blue class")))?;
        Ok(VertexType::new(r.parse()?, b.parse()?))
    }
}

/// A small target graph: a path or a cycle on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Path(usize),
    Cycle(usize),
}

impl Shape {
    pub fn vertices(self) -> usize {
        match self {
            Shape::Path(n) | Shape::Cycle(n) => n,
        }
    }

    pub fn edges(self) -> usize {
        match self {
            Shape::Path(n) => n.saturating_sub(1),
            Shape::Cycle(n) => n,
        }
    }

    /// Whether `state` has a copy of this shape in `color`.
    pub fn present(self, state: &GameState, color: Color) -> bool {
        match self {
            Shape::Path(n) => state.has_path(color, n),
            Shape::Cycle(n) => state.has_cycle_of_length(color, n),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Path(n) => write!(f, "P{n}"),
            Shape::Cycle(n) => write!(f, "C{n}"),
        }
    }
}

impl FromStr for Shape {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::new(format!("unknown shape `{s}`, expected P<n> or C<n>"));
        let (ctor, n): (fn(usize) -> Shape, &str) = match s.as_bytes().first() {
            Some(b'P' | b'p') => (Shape::Path, &s[1..]),
            Some(b'C' | b'c') => (Shape::Cycle, &s[1..]),
            _ => return Err(bad()),
        };
        let n: usize = n.parse().map_err(|_| bad())?;
        if n < 1 || matches!(ctor(n), Shape::Cycle(k) if k < 3) {
            return Err(bad());
        }
        Ok(ctor(n))
    }
}

/// Capital of a big red component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Capital {
    Edge(Edge),
    Vertex(Vertex),
}

impl Capital {
    pub fn anchors(&self) -> Vec<Vertex> {
        match *self {
            Capital::Edge(e) => vec![e.0, e.1],
            Capital::Vertex(v) => vec![v],
        }
    }
}

impl fmt::Display for Capital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capital::Edge(e) => write!(f, "edge:{e}"),
            Capital::Vertex(v) => write!(f, "vertex:{v}"),
        }
    }
}

impl FromStr for Capital {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::new(format!("bad capital `{s}`"));
        if let Some(rest) = s.strip_prefix("edge:") {
            let (a, b) = rest.split_once('-').ok_or_else(bad)?;
            let a = a.parse().map_err(|_| bad())?;
            let b = b.parse().map_err(|_| bad())?;
            Ok(Capital::Edge(Edge::new(Vertex(a), Vertex(b))))
        } else if let Some(rest) = s.strip_prefix("vertex:") {
            Ok(Capital::Vertex(Vertex(rest.parse().map_err(|_| bad())?)))
        } else {
            Err(bad())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct HistoryEntry {
    edge: Edge,
    color: Color,
    capitals_before: usize,
    new_vertices: Vec<Vertex>,
    next_fresh_before: u32,
}

/// The colored host graph together with the capital set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameState {
    kind: GameKind,
    vertices: BTreeSet<Vertex>,
    red: BTreeMap<Vertex, Vec<Vertex>>,
    blue: BTreeMap<Vertex, Vec<Vertex>>,
    capitals: Vec<Capital>,
    history: Vec<HistoryEntry>,
    next_fresh: u32,
}

impl GameState {
    pub fn new(kind: GameKind) -> Self {
        GameState {
            kind,
            vertices: BTreeSet::new(),
            red: BTreeMap::new(),
            blue: BTreeMap::new(),
            capitals: Vec::new(),
            history: Vec::new(),
            next_fresh: 0,
        }
    }

    /// Builds a state from colored edges given as raw ids.
    pub fn from_edges(kind: GameKind, edges: &[(u32, u32, Color)]) -> Result<Self, GraphError> {
        edges
            .iter()
            .try_fold(GameState::new(kind), |s, &(u, v, c)| s.add_edge(Vertex(u), Vertex(v), c))
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    /// Same colored graph, reinterpreted under another game's rules. Capitals are dropped.
    pub fn with_kind(&self, kind: GameKind) -> GameState {
        let mut s = self.clone();
        s.kind = kind;
        s.capitals.clear();
        for h in &mut s.history {
            h.capitals_before = 0;
        }
        s
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn capitals(&self) -> &[Capital] {
        &self.capitals
    }

    pub fn moves(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.history.iter().map(|h| (h.edge, h.color))
    }

    pub fn edge_count(&self) -> usize {
        self.history.len()
    }

    /// An untouched vertex. Repeated calls return the same id until it is used.
    pub fn fresh(&self) -> Vertex {
        Vertex(self.next_fresh)
    }

    /// Two distinct untouched vertices.
    pub fn fresh_pair(&self) -> (Vertex, Vertex) {
        (Vertex(self.next_fresh), Vertex(self.next_fresh + 1))
    }

    fn adj(&self, color: Color) -> &BTreeMap<Vertex, Vec<Vertex>> {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    pub fn neighbors(&self, v: Vertex, color: Color) -> &[Vertex] {
        self.adj(color).get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn red_neighbors(&self, v: Vertex) -> &[Vertex] {
        self.neighbors(v, Color::Red)
    }

    pub fn degree(&self, v: Vertex, color: Color) -> usize {
        self.neighbors(v, color).len()
    }

    pub fn blue_degree(&self, v: Vertex) -> usize {
        self.degree(v, Color::Blue)
    }

    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        if self.red_neighbors(u).contains(&v) {
            Some(Color::Red)
        } else if self.neighbors(u, Color::Blue).contains(&v) {
            Some(Color::Blue)
        } else {
            None
        }
    }

    pub fn is_selected(&self, u: Vertex, v: Vertex) -> bool {
        self.color_of(u, v).is_some()
    }

    pub fn edges(&self, color: Color) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .adj(color)
            .iter()
            .flat_map(|(&u, ns)| ns.iter().filter(move |&&w| u < w).map(move |&w| Edge::new(u, w)))
            .collect();
        out.sort();
        out
    }

    /// Returns a new state with `uv` colored. Capitals are unchanged.
    pub fn add_edge(&self, u: Vertex, v: Vertex, color: Color) -> Result<GameState, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.is_selected(u, v) {
            let e = Edge::new(u, v);
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        let mut s = self.clone();
        let mut new_vertices = Vec::new();
        for x in [u, v] {
            if s.vertices.insert(x) {
                new_vertices.push(x);
            }
        }
        let next_fresh_before = s.next_fresh;
        s.next_fresh = s.next_fresh.max(u.0 + 1).max(v.0 + 1);
        let adj = match color {
            Color::Red => &mut s.red,
            Color::Blue => &mut s.blue,
        };
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
        s.history.push(HistoryEntry {
            edge: Edge::new(u, v),
            color,
            capitals_before: self.capitals.len(),
            new_vertices,
            next_fresh_before,
        });
        Ok(s)
    }

    /// Returns a new state with `cap` added to the capital set.
    pub fn with_capital(&self, cap: Capital) -> Result<GameState, GraphError> {
        let ok = match (self.kind.capital_kind(), cap) {
            (CapitalKind::Edge, Capital::Edge(e)) => self.color_of(e.0, e.1) == Some(Color::Red),
            (CapitalKind::Vertex, Capital::Vertex(v)) => self.contains_vertex(v),
            _ => false,
        };
        if !ok || self.capitals.contains(&cap) {
            return Err(GraphError::StrayCapital(cap.to_string()));
        }
        let comp = self.red_component(cap.anchors()[0]);
        if self.capitals_in(&comp).next().is_some() {
            return Err(GraphError::CapitalConflict(cap.anchors()[0]));
        }
        let mut s = self.clone();
        s.capitals.push(cap);
        Ok(s)
    }

    /// Undo the most recent edge together with any capital added after it.
    pub fn undo_last(&self) -> Option<GameState> {
        let mut s = self.clone();
        let h = s.history.pop()?;
        let (u, v) = h.edge.ends();
        let adj = match h.color {
            Color::Red => &mut s.red,
            Color::Blue => &mut s.blue,
        };
        for (a, b) in [(u, v), (v, u)] {
            let ns = adj.get_mut(&a).expect("edge endpoint in adjacency");
            ns.retain(|&x| x != b);
            if ns.is_empty() {
                adj.remove(&a);
            }
        }
        for x in h.new_vertices {
            s.vertices.remove(&x);
        }
        s.capitals.truncate(h.capitals_before);
        s.next_fresh = h.next_fresh_before;
        Some(s)
    }

    fn capitals_in<'a>(&'a self, comp: &'a BTreeSet<Vertex>) -> impl Iterator<Item = &'a Capital> + 'a {
        self.capitals
            .iter()
            .filter(move |c| c.anchors().iter().all(|a| comp.contains(a)))
    }

    /// Vertex set of the red component containing `v`.
    pub fn red_component(&self, v: Vertex) -> BTreeSet<Vertex> {
        component(&self.red, v)
    }

    /// All red components over touched vertices, ordered by smallest member.
    pub fn red_components(&self) -> Vec<BTreeSet<Vertex>> {
        components(&self.vertices, &self.red)
    }

    pub fn has_red_cycle(&self) -> bool {
        has_cycle(&self.vertices, &self.red)
    }

    pub fn has_blue_cycle(&self) -> bool {
        has_cycle(&self.vertices, &self.blue)
    }

    /// Whether the red component of `v` is big (needs a capital) in this game.
    pub fn is_big_component(&self, comp: &BTreeSet<Vertex>) -> bool {
        let size = comp.len();
        match self.kind {
            GameKind::P3 => false,
            GameKind::P5 => size > 1,
            GameKind::P7 | GameKind::P9 => size > 3,
            GameKind::P8 => size > 4 || size == 4 && comp.iter().any(|&x| self.degree(x, Color::Red) > 2),
        }
    }

    /// Assigns every touched vertex its [`VertexType`].
    ///
    /// Untouched vertices are `(O, B0)` and are not listed.
    pub fn classify(&self) -> Result<BTreeMap<Vertex, VertexType>, GraphError> {
        if self.has_red_cycle() {
            return Err(GraphError::RedCycle);
        }
        let mut covered = 0usize;
        let mut out = BTreeMap::new();
        for comp in self.red_components() {
            covered += self.capitals_in(&comp).count();
            for (x, r) in self.component_classes(&comp)? {
                out.insert(x, VertexType::new(r, BlueClass::from_degree(self.blue_degree(x))));
            }
        }
        if covered != self.capitals.len() {
            let stray = self
                .capitals
                .iter()
                .find(|c| !c.anchors().iter().all(|a| self.vertices.contains(a)))
                .or(self.capitals.first())
                .expect("some capital is uncovered");
            return Err(GraphError::StrayCapital(stray.to_string()));
        }
        Ok(out)
    }

    /// Red classes of one acyclic red component.
    fn component_classes(&self, comp: &BTreeSet<Vertex>) -> Result<Vec<(Vertex, RedClass)>, GraphError> {
        let caps: Vec<&Capital> = self.capitals_in(comp).collect();
        let first = *comp.iter().next().expect("components are nonempty");
        if self.kind == GameKind::P3 && comp.len() > 2 {
            // A red P3 already ends the P3 game.
            return Ok(comp.iter().map(|&x| (x, RedClass::F4plus)).collect());
        }
        if !self.is_big_component(comp) {
            if let Some(c) = caps.first() {
                return Err(GraphError::StrayCapital(c.to_string()));
            }
            return Ok(comp
                .iter()
                .map(|&x| {
                    let class = match (comp.len(), self.degree(x, Color::Red)) {
                        (1, _) => RedClass::O,
                        (2, _) => RedClass::I,
                        (3, 2) => RedClass::L0,
                        (3, _) => RedClass::L1,
                        (4, 2) => RedClass::N0,
                        (_, _) => RedClass::N1,
                    };
                    (x, class)
                })
                .collect());
        }
        let cap = match caps.as_slice() {
            [] => return Err(GraphError::MissingCapital(first)),
            [c] => *c,
            _ => return Err(GraphError::CapitalConflict(first)),
        };
        Ok(bfs_distances(&self.red, &cap.anchors())
            .into_iter()
            .map(|(x, d)| (x, RedClass::from_distance(d)))
            .collect())
    }

    /// Type of a single vertex, computed from its red component only.
    /// Untouched vertices are `(O, B0)`.
    pub fn vertex_type(&self, v: Vertex) -> Result<VertexType, GraphError> {
        if !self.contains_vertex(v) {
            return Ok(VertexType::new(RedClass::O, BlueClass::B0));
        }
        let comp = self.red_component(v);
        let edges: usize = comp.iter().map(|&x| self.degree(x, Color::Red)).sum::<usize>() / 2;
        if edges >= comp.len() {
            return Err(GraphError::RedCycle);
        }
        let red = self
            .component_classes(&comp)?
            .into_iter()
            .find(|&(x, _)| x == v)
            .map(|(_, r)| r)
            .expect("vertex lies in its own component");
        Ok(VertexType::new(red, BlueClass::from_degree(self.blue_degree(v))))
    }

    pub fn longest_red_path(&self) -> usize {
        self.longest_path(Color::Red)
    }

    pub fn longest_blue_path(&self) -> usize {
        self.longest_path(Color::Blue)
    }

    /// Vertex count of a longest path in one color class. Forest components
    /// use the double-sweep diameter; others are searched exhaustively.
    pub fn longest_path(&self, color: Color) -> usize {
        let adj = self.adj(color);
        let mut best = usize::from(!self.vertices.is_empty());
        for comp in components(&self.vertices, adj) {
            if comp.len() <= best {
                continue;
            }
            let edges: usize = comp.iter().map(|x| adj.get(x).map_or(0, Vec::len)).sum::<usize>() / 2;
            let len = if edges + 1 == comp.len() {
                tree_diameter(adj, &comp) + 1
            } else {
                exhaustive_longest(adj, &comp, usize::MAX)
            };
            best = best.max(len);
        }
        best
    }

    /// Vertices of one longest path in `color`, in path order. Ties go to the
    /// component with the smallest vertex; the empty graph gives an empty path.
    pub fn longest_path_vertices(&self, color: Color) -> Vec<Vertex> {
        let adj = self.adj(color);
        let mut best: Vec<Vertex> = Vec::new();
        for comp in components(&self.vertices, adj) {
            if comp.len() <= best.len() {
                continue;
            }
            let edges: usize = comp.iter().map(|x| adj.get(x).map_or(0, Vec::len)).sum::<usize>() / 2;
            let path = if edges + 1 == comp.len() {
                tree_diameter_path(adj, &comp)
            } else {
                let mut found = Vec::new();
                for &s in &comp {
                    let mut path = vec![s];
                    let mut on = BTreeSet::from([s]);
                    extend_longest(adj, &mut path, &mut on, &mut found);
                    if found.len() == comp.len() {
                        break;
                    }
                }
                found
            };
            if path.len() > best.len() {
                best = path;
            }
        }
        best
    }

    /// Whether some path in `color` has at least `n` vertices. Stops at the first hit.
    pub fn has_path(&self, color: Color, n: usize) -> bool {
        if n <= 1 {
            return n == 0 || !self.vertices.is_empty();
        }
        let adj = self.adj(color);
        components(&self.vertices, adj).into_iter().any(|comp| {
            if comp.len() < n {
                return false;
            }
            let edges: usize = comp.iter().map(|x| adj.get(x).map_or(0, Vec::len)).sum::<usize>() / 2;
            if edges + 1 == comp.len() {
                tree_diameter(adj, &comp) + 1 >= n
            } else {
                component_has_path(adj, &comp, None, n)
            }
        })
    }

    /// Whether some path in `color` with at least `n` vertices uses edge `uv`.
    pub fn has_path_through(&self, color: Color, u: Vertex, v: Vertex, n: usize) -> bool {
        let adj = self.adj(color);
        if !adj.get(&u).is_some_and(|ns| ns.contains(&v)) {
            return false;
        }
        if n <= 2 {
            return true;
        }
        let comp = component(adj, u);
        if comp.len() < n {
            return false;
        }
        component_has_path(adj, &comp, Some((u, v)), n)
    }

    /// Whether `color` contains a cycle on exactly `len` vertices.
    pub fn has_cycle_of_length(&self, color: Color, len: usize) -> bool {
        if len < 3 {
            return false;
        }
        let adj = self.adj(color);
        fn search(
            adj: &BTreeMap<Vertex, Vec<Vertex>>,
            start: Vertex,
            at: Vertex,
            depth: usize,
            len: usize,
            on: &mut BTreeSet<Vertex>,
        ) -> bool {
            for &w in adj.get(&at).map(Vec::as_slice).unwrap_or(&[]) {
                if w == start && depth == len {
                    return true;
                }
                if w > start && depth < len && on.insert(w) {
                    let hit = search(adj, start, w, depth + 1, len, on);
                    on.remove(&w);
                    if hit {
                        return true;
                    }
                }
            }
            false
        }
        self.vertices.iter().any(|&s| {
            let mut on = BTreeSet::from([s]);
            search(adj, s, s, 1, len, &mut on)
        })
    }

    /// `min over red edges xy of max over u of dist(u, xy)` within `v`'s red component.
    pub fn capital_edge_radius(&self, v: Vertex) -> Option<usize> {
        let comp = self.red_component(v);
        comp.iter()
            .flat_map(|&x| self.red_neighbors(x).iter().filter(move |&&y| x < y).map(move |&y| (x, y)))
            .map(|(x, y)| bfs_distances(&self.red, &[x, y]).into_values().max().unwrap_or(0))
            .min()
    }
}

fn component(adj: &BTreeMap<Vertex, Vec<Vertex>>, v: Vertex) -> BTreeSet<Vertex> {
    let mut seen = BTreeSet::from([v]);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &w in adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

fn components(vertices: &BTreeSet<Vertex>, adj: &BTreeMap<Vertex, Vec<Vertex>>) -> Vec<BTreeSet<Vertex>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &v in vertices {
        if seen.contains(&v) {
            continue;
        }
        let c = component(adj, v);
        seen.extend(c.iter().copied());
        out.push(c);
    }
    out
}

fn has_cycle(vertices: &BTreeSet<Vertex>, adj: &BTreeMap<Vertex, Vec<Vertex>>) -> bool {
    let edges: usize = adj.values().map(Vec::len).sum::<usize>() / 2;
    edges + components(vertices, adj).len() > vertices.len()
}

fn bfs_distances(adj: &BTreeMap<Vertex, Vec<Vertex>>, sources: &[Vertex]) -> BTreeMap<Vertex, usize> {
    let mut dist: BTreeMap<Vertex, usize> = sources.iter().map(|&s| (s, 0)).collect();
    let mut queue: VecDeque<Vertex> = sources.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for &w in adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
            dist.entry(w).or_insert_with(|| {
                queue.push_back(w);
                d + 1
            });
        }
    }
    dist
}

/// Number of edges on a longest path of a tree component.
fn tree_diameter(adj: &BTreeMap<Vertex, Vec<Vertex>>, comp: &BTreeSet<Vertex>) -> usize {
    let start = *comp.iter().next().expect("nonempty component");
    let far = |s: Vertex| {
        bfs_distances(adj, &[s])
            .into_iter()
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .expect("source is reachable")
    };
    let (a, _) = far(start);
    far(a).1
}

fn tree_diameter_path(adj: &BTreeMap<Vertex, Vec<Vertex>>, comp: &BTreeSet<Vertex>) -> Vec<Vertex> {
    let start = *comp.iter().next().expect("nonempty component");
    let far = |s: Vertex| {
        bfs_distances(adj, &[s])
            .into_iter()
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .expect("source is reachable")
            .0
    };
    let a = far(start);
    let b = far(a);
    // Walk back from `b` along strictly decreasing distance to `a`.
    let dist = bfs_distances(adj, &[a]);
    let mut path = vec![b];
    let mut at = b;
    while at != a {
        at = *adj[&at].iter().filter(|w| dist[w] + 1 == dist[&at]).min().expect("parent exists");
        path.push(at);
    }
    path.reverse();
    path
}

fn extend_longest(
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    path: &mut Vec<Vertex>,
    on: &mut BTreeSet<Vertex>,
    best: &mut Vec<Vertex>,
) {
    if path.len() > best.len() {
        best.clone_from(path);
    }
    let at = *path.last().expect("path is nonempty");
    for &w in adj.get(&at).map(Vec::as_slice).unwrap_or(&[]) {
        if on.insert(w) {
            path.push(w);
            extend_longest(adj, path, on, best);
            path.pop();
            on.remove(&w);
        }
    }
}

/// Longest simple path (vertex count) in `comp`, stopping early once `cap` is reached.
fn exhaustive_longest(adj: &BTreeMap<Vertex, Vec<Vertex>>, comp: &BTreeSet<Vertex>, cap: usize) -> usize {
    let mut best = 1;
    for &s in comp {
        let mut on = BTreeSet::from([s]);
        best = best.max(longest_from(adj, s, &mut on, cap));
        if best >= cap {
            break;
        }
    }
    best
}

/// Vertex count of a longest path starting at `at` (which is already in `on`)
/// and avoiding the rest of `on`. Gives up searching once `need` vertices are found.
fn longest_from(adj: &BTreeMap<Vertex, Vec<Vertex>>, at: Vertex, on: &mut BTreeSet<Vertex>, need: usize) -> usize {
    let mut best = 1;
    for &w in adj.get(&at).map(Vec::as_slice).unwrap_or(&[]) {
        if on.insert(w) {
            best = best.max(1 + longest_from(adj, w, on, need.saturating_sub(1)));
            on.remove(&w);
            if best >= need {
                break;
            }
        }
    }
    best
}

/// Visited-vertex sets for [`PathSearch`]: a single word for small
/// components, a word vector otherwise.
trait VisitSet: Clone + Eq + std::hash::Hash {
    fn empty(n: usize) -> Self;
    fn has(&self, i: usize) -> bool;
    fn toggle(&mut self, i: usize);
}

impl VisitSet for u128 {
    fn empty(_: usize) -> Self {
        0
    }
    fn has(&self, i: usize) -> bool {
        self >> i & 1 == 1
    }
    fn toggle(&mut self, i: usize) {
        *self ^= 1 << i;
    }
}

impl VisitSet for Vec<u64> {
    fn empty(n: usize) -> Self {
        vec![0; n.div_ceil(64)]
    }
    fn has(&self, i: usize) -> bool {
        self[i / 64] >> (i % 64) & 1 == 1
    }
    fn toggle(&mut self, i: usize) {
        self[i / 64] ^= 1 << (i % 64);
    }
}

/// Long-path search on one component. Branches that cannot reach enough
/// unvisited vertices are cut, and failed `(visited, end)` states are
/// remembered. Neighbours are tried lowest degree first.
struct PathSearch<B: VisitSet> {
    nbrs: Vec<Vec<usize>>,
    visited: B,
    failed: rustc_hash::FxHashSet<(B, usize, bool)>,
    stack: Vec<usize>,
}

const PATH_MEMO_CAP: usize = 1 << 18;

fn local_graph(adj: &BTreeMap<Vertex, Vec<Vertex>>, comp: &BTreeSet<Vertex>) -> (Vec<Vertex>, Vec<Vec<usize>>) {
    let ids: Vec<Vertex> = comp.iter().copied().collect();
    let mut nbrs: Vec<Vec<usize>> = ids
        .iter()
        .map(|x| {
            adj.get(x)
                .map(|ns| ns.iter().filter_map(|w| ids.binary_search(w).ok()).collect())
                .unwrap_or_default()
        })
        .collect();
    let deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    for ns in &mut nbrs {
        ns.sort_by_key(|&w| (deg[w], w));
    }
    (ids, nbrs)
}

/// Whether the component has a path on `need` vertices, through `uv` if given.
fn component_has_path(
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    comp: &BTreeSet<Vertex>,
    through: Option<(Vertex, Vertex)>,
    need: usize,
) -> bool {
    let (ids, nbrs) = local_graph(adj, comp);
    let at = |v: Vertex| ids.binary_search(&v).expect("vertex in component");
    fn run<B: VisitSet>(nbrs: Vec<Vec<usize>>, through: Option<(usize, usize)>, need: usize) -> bool {
        let n = nbrs.len();
        let mut s = PathSearch::<B> { nbrs, visited: B::empty(n), failed: Default::default(), stack: Vec::new() };
        match through {
            Some((u, v)) => s.through(u, v, need),
            None => (0..n).any(|x| s.from(x, need)),
        }
    }
    let through = through.map(|(u, v)| (at(u), at(v)));
    if ids.len() <= 128 {
        run::<u128>(nbrs, through, need)
    } else {
        run::<Vec<u64>>(nbrs, through, need)
    }
}

impl<B: VisitSet> PathSearch<B> {
    /// How many more vertices a path ending at `at` could still take: the
    /// reachable unvisited vertices, except that degree-one vertices can only
    /// end the path, so together they count once.
    fn reach(&mut self, at: usize) -> usize {
        let mut mark = self.visited.clone();
        self.stack.clear();
        self.stack.push(at);
        let mut count = 0;
        let mut leaf = false;
        while let Some(x) = self.stack.pop() {
            for &w in &self.nbrs[x] {
                if !mark.has(w) {
                    mark.toggle(w);
                    if self.nbrs[w].len() <= 1 {
                        leaf = true;
                    } else {
                        count += 1;
                        self.stack.push(w);
                    }
                }
            }
        }
        count + usize::from(leaf)
    }

    fn remember(&mut self, at: usize, outer: bool) {
        if self.failed.len() < PATH_MEMO_CAP {
            self.failed.insert((self.visited.clone(), at, outer));
        }
    }

    fn known_failure(&self, at: usize, outer: bool) -> bool {
        !self.failed.is_empty() && self.failed.contains(&(self.visited.clone(), at, outer))
    }

    /// Extends the current path ending at `at` (already visited) with `len` vertices to `need`.
    fn extend(&mut self, at: usize, len: usize, need: usize) -> bool {
        if len >= need {
            return true;
        }
        if self.known_failure(at, false) || len + self.reach(at) < need {
            return false;
        }
        for k in 0..self.nbrs[at].len() {
            let w = self.nbrs[at][k];
            if !self.visited.has(w) {
                self.visited.toggle(w);
                let hit = self.extend(w, len + 1, need);
                self.visited.toggle(w);
                if hit {
                    return true;
                }
            }
        }
        self.remember(at, false);
        false
    }

    fn from(&mut self, s: usize, need: usize) -> bool {
        self.visited = B::empty(self.nbrs.len());
        self.visited.toggle(s);
        self.extend(s, 1, need)
    }

    /// A path through edge `uv`: grow `u`'s end, then finish from `v`.
    fn through(&mut self, u: usize, v: usize, need: usize) -> bool {
        self.visited = B::empty(self.nbrs.len());
        self.visited.toggle(u);
        self.visited.toggle(v);
        self.grow(u, v, 2, need)
    }

    fn grow(&mut self, at: usize, v: usize, len: usize, need: usize) -> bool {
        if self.extend(v, len, need) {
            return true;
        }
        if self.known_failure(at, true) {
            return false;
        }
        for k in 0..self.nbrs[at].len() {
            let w = self.nbrs[at][k];
            if !self.visited.has(w) {
                self.visited.toggle(w);
                let hit = self.grow(w, v, len + 1, need);
                self.visited.toggle(w);
                if hit {
                    return true;
                }
            }
        }
        self.remember(at, true);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{Blue, Red};

    fn st(kind: GameKind, edges: &[(u32, u32, Color)]) -> GameState {
        GameState::from_edges(kind, edges).unwrap()
    }

    fn ty(s: &GameState, v: u32) -> VertexType {
        s.classify().unwrap()[&Vertex(v)]
    }

    #[test]
    fn add_edge_builds_components() {
        let s = st(GameKind::P9, &[(0, 1, Red)]);
        assert_eq!(s.red_component(Vertex(0)), BTreeSet::from([Vertex(0), Vertex(1)]));
        let s = s.add_edge(Vertex(1), Vertex(2), Red).unwrap();
        assert_eq!(s.red_component(Vertex(2)).len(), 3);
        assert_eq!(s.longest_red_path(), 3);
    }

    #[test]
    fn add_edge_rejects_duplicates_and_loops() {
        let s = st(GameKind::P9, &[(0, 1, Red)]);
        assert_eq!(s.add_edge(Vertex(0), Vertex(1), Blue), Err(GraphError::DuplicateEdge(Vertex(0), Vertex(1))));
        assert_eq!(s.add_edge(Vertex(1), Vertex(0), Red), Err(GraphError::DuplicateEdge(Vertex(0), Vertex(1))));
        assert_eq!(s.add_edge(Vertex(2), Vertex(2), Red), Err(GraphError::SelfLoop(Vertex(2))));
    }

    #[test]
    fn p7_l_split() {
        let s = st(GameKind::P7, &[(0, 1, Red), (1, 2, Red)]);
        assert_eq!(ty(&s, 0), VertexType::new(RedClass::L1, BlueClass::B0));
        assert_eq!(ty(&s, 2), VertexType::new(RedClass::L1, BlueClass::B0));
        assert_eq!(ty(&s, 1), VertexType::new(RedClass::L0, BlueClass::B0));
    }

    #[test]
    fn p9_distance_to_capital_edge() {
        let s = st(GameKind::P9, &[(0, 1, Red), (1, 2, Red), (2, 3, Red)]);
        let s = s.with_capital(Capital::Edge(Edge::new(Vertex(0), Vertex(1)))).unwrap();
        assert_eq!(ty(&s, 0).red, RedClass::F0);
        assert_eq!(ty(&s, 1).red, RedClass::F0);
        assert_eq!(ty(&s, 2).red, RedClass::F1);
        assert_eq!(ty(&s, 3).red, RedClass::F2);
    }

    #[test]
    fn p8_n_classes() {
        let s = st(GameKind::P8, &[(0, 1, Red), (1, 2, Red), (2, 3, Red)]);
        assert_eq!(ty(&s, 0).red, RedClass::N1);
        assert_eq!(ty(&s, 3).red, RedClass::N1);
        assert_eq!(ty(&s, 1).red, RedClass::N0);
        assert_eq!(ty(&s, 2).red, RedClass::N0);
        // A red star on four vertices is big in the P8 game.
        let star = st(GameKind::P8, &[(0, 1, Red), (0, 2, Red), (0, 3, Red)]);
        assert_eq!(star.classify(), Err(GraphError::MissingCapital(Vertex(0))));
    }

    #[test]
    fn blue_classes_follow_degree() {
        let s = st(GameKind::P9, &[(0, 1, Blue), (0, 2, Blue), (3, 4, Red)]);
        assert_eq!(ty(&s, 0), VertexType::new(RedClass::O, BlueClass::B2plus));
        assert_eq!(ty(&s, 1), VertexType::new(RedClass::O, BlueClass::B1));
        assert_eq!(ty(&s, 3), VertexType::new(RedClass::I, BlueClass::B0));
    }

    #[test]
    fn classify_errors() {
        let tri = st(GameKind::P9, &[(0, 1, Red), (1, 2, Red), (2, 0, Red)]);
        assert_eq!(tri.classify(), Err(GraphError::RedCycle));
        let p4 = st(GameKind::P9, &[(0, 1, Red), (1, 2, Red), (2, 3, Red)]);
        assert_eq!(p4.classify(), Err(GraphError::MissingCapital(Vertex(0))));
    }

    #[test]
    fn p3_game_marks_big_components_illegal() {
        let s = st(GameKind::P3, &[(0, 1, Red), (1, 2, Red)]);
        assert_eq!(ty(&s, 1).red, RedClass::F4plus);
    }

    #[test]
    fn p5_game_every_red_component_is_big() {
        let s = st(GameKind::P5, &[(0, 1, Red)]);
        assert_eq!(s.classify(), Err(GraphError::MissingCapital(Vertex(0))));
        let s = s.with_capital(Capital::Edge(Edge::new(Vertex(0), Vertex(1)))).unwrap();
        assert_eq!(ty(&s, 0).red, RedClass::F0);
    }

    #[test]
    fn capitals_are_unique_per_component() {
        let s = st(GameKind::P9, &[(0, 1, Red), (1, 2, Red), (2, 3, Red)]);
        let s = s.with_capital(Capital::Edge(Edge::new(Vertex(0), Vertex(1)))).unwrap();
        assert!(s.with_capital(Capital::Edge(Edge::new(Vertex(2), Vertex(3)))).is_err());
        assert!(s.with_capital(Capital::Vertex(Vertex(2))).is_err());
    }

    #[test]
    fn longest_paths() {
        assert_eq!(GameState::new(GameKind::P9).longest_red_path(), 0);
        let lone = st(GameKind::P9, &[(0, 1, Blue)]);
        assert_eq!(lone.longest_red_path(), 1);
        let p4 = st(GameKind::P9, &[(0, 1, Red), (1, 2, Red), (2, 3, Red)]);
        assert_eq!(p4.longest_red_path(), 4);
        let star = st(GameKind::P9, &[(0, 1, Red), (0, 2, Red), (0, 3, Red)]);
        assert_eq!(star.longest_red_path(), 3);
        let c4 = st(GameKind::P9, &[(0, 1, Blue), (1, 2, Blue), (2, 3, Blue), (3, 0, Blue)]);
        assert_eq!(c4.longest_blue_path(), 4);
        assert!(c4.has_path(Color::Blue, 4));
        assert!(!c4.has_path(Color::Blue, 5));
        assert!(c4.has_path_through(Color::Blue, Vertex(0), Vertex(1), 4));
    }

    #[test]
    fn longest_path_vertices_is_a_path() {
        let s = st(GameKind::P9, &[(3, 1, Blue), (1, 4, Blue), (4, 0, Blue), (1, 9, Blue), (7, 8, Red)]);
        let p = s.longest_path_vertices(Blue);
        assert_eq!(p.len(), 4);
        for w in p.windows(2) {
            assert_eq!(s.color_of(w[0], w[1]), Some(Blue));
        }
        let c = st(GameKind::P9, &[(0, 1, Blue), (1, 2, Blue), (2, 0, Blue), (2, 5, Blue)]);
        assert_eq!(c.longest_path_vertices(Blue).len(), 4);
        assert!(GameState::new(GameKind::P9).longest_path_vertices(Blue).is_empty());
    }

    #[test]
    fn cycles() {
        let p = st(GameKind::P9, &[(0, 1, Red), (1, 2, Red)]);
        assert!(!p.has_red_cycle());
        let tri = st(GameKind::P9, &[(0, 1, Red), (1, 2, Red), (2, 0, Red)]);
        assert!(tri.has_red_cycle());
        assert!(tri.has_cycle_of_length(Red, 3));
        assert!(!tri.has_cycle_of_length(Red, 4));
        let two = st(GameKind::P9, &[(0, 1, Red), (2, 3, Red), (3, 4, Red)]);
        assert!(!two.has_red_cycle());
    }

    #[test]
    fn undo_restores_state() {
        let s = st(GameKind::P9, &[(0, 1, Red)]);
        let t = s.add_edge(Vertex(1), Vertex(5), Blue).unwrap();
        assert_eq!(t.undo_last().unwrap(), s);
        assert_eq!(GameState::new(GameKind::P9).undo_last(), None);
    }

    #[test]
    fn fresh_vertices_are_unused() {
        let s = st(GameKind::P9, &[(0, 4, Red)]);
        assert!(!s.contains_vertex(s.fresh()));
        let (a, b) = s.fresh_pair();
        assert_ne!(a, b);
        assert_eq!(s.vertex_type(a).unwrap(), VertexType::new(RedClass::O, BlueClass::B0));
    }
}
