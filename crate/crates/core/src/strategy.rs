//! The type-local Painter: a rule table from endpoint types to a color and a
//! capital directive.
//!
//! Rules are written as `label: <pattern> , <pattern> -> red|blue [capital=...]`.
//! A pattern is a `|`-union of atoms; an atom is a red class (`O`, `L0`, ...),
//! a group (`L`, `N`, `F`, `any`) and an optional blue qualifier (`^B0`, `^B1`,
//! `^B2+`). The endpoint matched by the left pattern is called `u`, the other `v`.

use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, StrategyError};
use crate::graph::{BlueClass, Capital, CapitalKind, Color, Edge, GameKind, GameState, RedClass, Vertex, VertexType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Class(RedClass),
    L,
    N,
    F,
    Any,
}

impl Base {
    fn matches(self, r: RedClass) -> bool {
        use RedClass::*;
        match self {
            Base::Class(c) => c == r,
            Base::L => matches!(r, L0 | L1),
            Base::N => matches!(r, N0 | N1),
            Base::F => r.is_f(),
            Base::Any => true,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Class(c) => write!(f, "{c}"),
            Base::L => f.write_str("L"),
            Base::N => f.write_str("N"),
            Base::F => f.write_str("F"),
            Base::Any => f.write_str("any"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub base: Base,
    pub blue: Option<BlueClass>,
}

impl Atom {
    pub fn matches(&self, t: VertexType) -> bool {
        self.base.matches(t.red) && self.blue.is_none_or(|b| b == t.blue)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.blue {
            Some(b) => write!(f, "{}^{}", self.base, b),
            None => write!(f, "{}", self.base),
        }
    }
}

impl FromStr for Atom {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let (base, blue) = match s.split_once('^') {
            Some((b, q)) => (b, Some(q.parse::<BlueClass>()?)),
            None => (s, None),
        };
        let base = match base {
            "L" => Base::L,
            "N" => Base::N,
            "F" => Base::F,
            "any" => Base::Any,
            other => Base::Class(other.parse().map_err(|_| ParseError::new(format!("unknown pattern atom `{other}`")))?),
        };
        Ok(Atom { base, blue })
    }
}

/// A union of atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern(pub Vec<Atom>);

impl Pattern {
    pub fn exact(t: VertexType) -> Pattern {
        Pattern(vec![Atom { base: Base::Class(t.red), blue: Some(t.blue) }])
    }

    pub fn matches(&self, t: VertexType) -> bool {
        self.0.iter().any(|a| a.matches(t))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Atom::to_string).collect();
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for Pattern {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let atoms = s.split('|').map(str::parse).collect::<Result<Vec<Atom>, _>>()?;
        if atoms.is_empty() {
            return Err(ParseError::new("empty pattern"));
        }
        Ok(Pattern(atoms))
    }
}

/// What becomes the capital of a newly big red component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Directive {
    None,
    /// The new edge `uv`.
    Uv,
    /// The vertex `v`.
    V,
    /// Edge `vw` (edge games) or vertex `w` (vertex games) for a red neighbour `w` of `v`.
    Neighbor,
}

impl Directive {
    pub const ALL: [Directive; 4] = [Directive::None, Directive::Uv, Directive::V, Directive::Neighbor];

    fn suffix(self) -> &'static str {
        match self {
            Directive::None => "",
            Directive::Uv => " capital=uv",
            Directive::V => " capital=v",
            Directive::Neighbor => " capital=neighbor(v)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub label: String,
    pub left: Pattern,
    pub right: Pattern,
    pub color: Color,
    pub directive: Directive,
}

impl Rule {
    /// `Some(true)` if `(a, b)` matches as `(u, v)`, `Some(false)` if it matches swapped.
    pub fn orientation(&self, a: VertexType, b: VertexType) -> Option<bool> {
        if self.left.matches(a) && self.right.matches(b) {
            Some(true)
        } else if self.left.matches(b) && self.right.matches(a) {
            Some(false)
        } else {
            None
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} , {} -> {}{}", self.label, self.left, self.right, self.color, self.directive.suffix())
    }
}

impl FromStr for Rule {
    type Err = ParseError;
    fn from_str(line: &str) -> Result<Self, ParseError> {
        let (label, body) = match line.split_once(':') {
            Some((l, b)) => (l.trim().to_string(), b),
            None => (String::new(), line),
        };
        let (pats, action) =
            body.split_once("->").ok_or_else(|| ParseError::new(format!("rule lacks `->`: `{line}`")))?;
        let (left, right) =
            pats.split_once(',').ok_or_else(|| ParseError::new(format!("rule needs two patterns: `{line}`")))?;
        let mut words = action.split_whitespace();
        let color: Color = words.next().ok_or_else(|| ParseError::new("rule lacks a color"))?.parse()?;
        let directive = match words.next() {
            None => Directive::None,
            Some("capital=uv") => Directive::Uv,
            Some("capital=v") => Directive::V,
            Some("capital=neighbor(v)") => Directive::Neighbor,
            Some(other) => return Err(ParseError::new(format!("unknown directive `{other}`"))),
        };
        if let Some(extra) = words.next() {
            return Err(ParseError::new(format!("trailing text `{extra}`")));
        }
        if color == Color::Blue && directive != Directive::None {
            return Err(ParseError::new("blue rules cannot carry a capital"));
        }
        Ok(Rule { label, left: left.trim().parse()?, right: right.trim().parse()?, color, directive })
    }
}

/// Painter's reply to one Builder edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub rule: usize,
    pub label: String,
    /// Endpoints oriented so that `u` matched the rule's left pattern.
    pub u: Vertex,
    pub v: Vertex,
    pub types: (VertexType, VertexType),
    pub color: Color,
    pub directive: Directive,
    pub capital: Option<Capital>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyTable {
    kind: GameKind,
    rules: Vec<Rule>,
    /// Blue rules first, each color in listed order.
    order: Vec<usize>,
}

const P9_RULES: &str = "\
A: any^B2+|F3 , any -> blue
B: L|F , L|F -> blue
C: I , F1|F2 -> blue
D: O^B0 , F2 -> blue
E: O , O -> red
F: O , I -> red
G: O , L -> red capital=neighbor(v)
H: O , F0|F1 -> red
I: O^B1 , F2 -> red
J: I , I -> red capital=uv
K: I , L -> red capital=uv
L: I , F0 -> red
";

const P7_RULES: &str = "\
A: any^B2+|F2 , any -> blue
B: L|F , L|F -> blue
C: I , L1|F -> blue
D: O^B0 , F1 -> blue
E: O , O -> red
F: O , I -> red
G: O , L -> red capital=neighbor(v)
H: O , F0 -> red
I: O^B1 , F1 -> red
J: I , I -> red capital=uv
K: I , L0 -> red capital=uv
";

// Case (A) sends F3 (not F2) to blue: with F2 there, cases (D) and (L) could never fire.
const P8_RULES: &str = "\
A: any^B2+|F3 , any -> blue
B: L|N|F , L|N|F -> blue
C: I , N1|F1|F2|F3 -> blue
D: O^B0 , F2 -> blue
E: O , O -> red
F: O , I -> red
G: O , L0 -> red capital=v
H: O , L1 -> red
I: O , N0 -> red capital=v
J: O , N1 -> red capital=neighbor(v)
K: O , F0|F1 -> red
L: O^B1 , F2 -> red
M: I , I -> red
N: I , L -> red capital=v
O: I , N0 -> red capital=v
P: I , F0 -> red
";

const P3_RULES: &str = "\
A: I , any -> blue
B: O , O -> red
";

const P5_RULES: &str = "\
A: F1 , any -> blue
B: F0 , F0 -> blue
C: O , O -> red capital=uv
D: O , F0 -> red
";

impl StrategyTable {
    pub fn new(kind: GameKind, rules: Vec<Rule>) -> Result<StrategyTable, StrategyError> {
        if rules.is_empty() {
            return Err(StrategyError::Empty);
        }
        let mut order: Vec<usize> = (0..rules.len()).filter(|&i| rules[i].color == Color::Blue).collect();
        order.extend((0..rules.len()).filter(|&i| rules[i].color == Color::Red));
        Ok(StrategyTable { kind, rules, order })
    }

    pub fn builtin(kind: GameKind) -> StrategyTable {
        let text = match kind {
            GameKind::P9 => P9_RULES,
            GameKind::P7 => P7_RULES,
            GameKind::P8 => P8_RULES,
            GameKind::P3 => P3_RULES,
            GameKind::P5 => P5_RULES,
        };
        StrategyTable::from_rules_text(kind, text).expect("builtin strategies parse")
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule_by_label(&self, label: &str) -> Option<(usize, &Rule)> {
        self.rules.iter().enumerate().find(|(_, r)| r.label == label)
    }

    /// First matching rule under blue precedence, with its orientation.
    pub fn lookup(&self, a: VertexType, b: VertexType) -> Option<(usize, bool)> {
        self.order
            .iter()
            .find_map(|&i| self.rules[i].orientation(a, b).map(|o| (i, o)))
    }

    /// All vertex types whose red class is finite in this game.
    pub fn types(kind: GameKind) -> Vec<VertexType> {
        kind.finite_classes()
            .iter()
            .flat_map(|&r| BlueClass::ALL.map(|b| VertexType::new(r, b)))
            .collect()
    }

    /// Unordered pairs of finite types no rule covers.
    pub fn uncovered(&self) -> Vec<(VertexType, VertexType)> {
        let types = Self::types(self.kind);
        let mut out = Vec::new();
        for (i, &a) in types.iter().enumerate() {
            for &b in &types[i..] {
                if self.lookup(a, b).is_none() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn check_total(&self) -> Result<(), StrategyError> {
        let missing = self.uncovered();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(StrategyError::NotTotal(missing))
        }
    }

    /// One rule per unordered pair of finite types, in type order, each
    /// oriented the way the original rule matched it. Labels name the pair.
    pub fn materialize(&self) -> Result<StrategyTable, StrategyError> {
        self.check_total()?;
        let types = Self::types(self.kind);
        let mut rules = Vec::new();
        for (i, &a) in types.iter().enumerate() {
            for &b in &types[i..] {
                let (idx, forward) = self.lookup(a, b).expect("total");
                let r = &self.rules[idx];
                let (u, v) = if forward { (a, b) } else { (b, a) };
                rules.push(Rule {
                    label: pair_label(a, b),
                    left: Pattern::exact(u),
                    right: Pattern::exact(v),
                    color: r.color,
                    directive: r.directive,
                });
            }
        }
        StrategyTable::new(self.kind, rules)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("game={}\n", self.kind);
        for r in &self.rules {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses a strategy file whose first line is `game=<kind>`.
    pub fn from_text(text: &str) -> Result<StrategyTable, ParseError> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or_default().trim();
        let kind: GameKind = header
            .strip_prefix("game=")
            .ok_or_else(|| ParseError::new("strategy file must start with `game=<kind>`").at(1))?
            .parse()
            .map_err(|e: ParseError| e.at(1))?;
        let body: Vec<&str> = lines.collect();
        Self::parse_body(kind, &body, 2)
    }

    pub fn from_rules_text(kind: GameKind, text: &str) -> Result<StrategyTable, ParseError> {
        let body: Vec<&str> = text.lines().collect();
        Self::parse_body(kind, &body, 1)
    }

    fn parse_body(kind: GameKind, lines: &[&str], first_line: usize) -> Result<StrategyTable, ParseError> {
        let mut rules = Vec::new();
        for (i, line) in lines.iter().enumerate() {
            let line = line.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let mut rule: Rule = line.parse().map_err(|e: ParseError| e.at(first_line + i))?;
            if rule.label.is_empty() {
                rule.label = format!("R{}", rules.len() + 1);
            }
            rules.push(rule);
        }
        StrategyTable::new(kind, rules).map_err(|e| ParseError::new(e.to_string()))
    }
}

pub fn pair_label(a: VertexType, b: VertexType) -> String {
    format!("{a},{b}")
}

/// Every capital a directive can resolve to, smallest choice first.
/// `u` and `v` are oriented as in the rule; `state` is before the move.
pub fn directive_choices(
    state: &GameState,
    u: Vertex,
    v: Vertex,
    directive: Directive,
) -> Result<Vec<Capital>, StrategyError> {
    let kind = state.kind().capital_kind();
    let fail = |reason: &str| StrategyError::Directive { directive: format!("{directive:?}"), reason: reason.into() };
    match (directive, kind) {
        (Directive::None, _) => Ok(Vec::new()),
        (Directive::Uv, CapitalKind::Edge) => Ok(vec![Capital::Edge(Edge::new(u, v))]),
        (Directive::V, CapitalKind::Vertex) => Ok(vec![Capital::Vertex(v)]),
        (Directive::Neighbor, CapitalKind::Edge | CapitalKind::Vertex) => {
            let mut ws: Vec<Vertex> = state.red_neighbors(v).iter().copied().filter(|&w| w != u).collect();
            ws.sort();
            if ws.is_empty() {
                return Err(fail("v has no red neighbour other than u"));
            }
            Ok(ws
                .into_iter()
                .map(|w| match kind {
                    CapitalKind::Vertex => Capital::Vertex(w),
                    _ => Capital::Edge(Edge::new(v, w)),
                })
                .collect())
        }
        _ => Err(fail("directive does not fit this game's capital kind")),
    }
}

/// Painter's answer to edge `uv`: the first matching rule, blue rules first.
pub fn decide(state: &GameState, strategy: &StrategyTable, u: Vertex, v: Vertex) -> Result<Decision, StrategyError> {
    if u == v {
        return Err(crate::error::GraphError::SelfLoop(u).into());
    }
    if state.is_selected(u, v) {
        let e = Edge::new(u, v);
        let (a, b) = e.ends();
        return Err(crate::error::GraphError::DuplicateEdge(a, b).into());
    }
    let (ta, tb) = (state.vertex_type(u)?, state.vertex_type(v)?);
    let (idx, forward) = strategy.lookup(ta, tb).ok_or(StrategyError::NoRule(ta, tb))?;
    let rule = &strategy.rules[idx];
    let (u, v, types) = if forward { (u, v, (ta, tb)) } else { (v, u, (tb, ta)) };
    let capital = directive_choices(state, u, v, rule.directive)?.into_iter().next();
    Ok(Decision {
        rule: idx,
        label: rule.label.clone(),
        u,
        v,
        types,
        color: rule.color,
        directive: rule.directive,
        capital,
    })
}

/// Colors the edge and installs the capital named by `decision`.
pub fn apply_decision(state: &GameState, decision: &Decision) -> Result<GameState, StrategyError> {
    apply_with_capital(state, decision.u, decision.v, decision.color, decision.capital)
}

pub fn apply_with_capital(
    state: &GameState,
    u: Vertex,
    v: Vertex,
    color: Color,
    capital: Option<Capital>,
) -> Result<GameState, StrategyError> {
    let mut next = state.add_edge(u, v, color)?;
    if let Some(c) = capital {
        next = next.with_capital(c)?;
    }
    debug_assert!(next.capitals().len() >= state.capitals().len());
    Ok(next)
}

pub fn apply_move(state: &GameState, strategy: &StrategyTable, u: Vertex, v: Vertex) -> Result<GameState, StrategyError> {
    let d = decide(state, strategy, u, v)?;
    apply_decision(state, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    fn st(kind: GameKind, edges: &[(u32, u32, Color)]) -> GameState {
        GameState::from_edges(kind, edges).unwrap()
    }

    #[test]
    fn builtins_parse_and_are_total() {
        for k in GameKind::ALL {
            let s = StrategyTable::builtin(k);
            s.check_total().unwrap();
        }
        assert_eq!(StrategyTable::builtin(GameKind::P9).rules().len(), 12);
        assert_eq!(StrategyTable::builtin(GameKind::P7).rules().len(), 11);
        assert_eq!(StrategyTable::builtin(GameKind::P8).rules().len(), 16);
    }

    #[test]
    fn text_round_trip() {
        for k in GameKind::ALL {
            let s = StrategyTable::builtin(k);
            let back = StrategyTable::from_text(&s.to_text()).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn pattern_parsing() {
        let p: Pattern = "any^B2+|F3".parse().unwrap();
        assert!(p.matches(VertexType::new(RedClass::O, BlueClass::B2plus)));
        assert!(p.matches(VertexType::new(RedClass::F3, BlueClass::B0)));
        assert!(!p.matches(VertexType::new(RedClass::F2, BlueClass::B1)));
        assert!("Q".parse::<Pattern>().is_err());
        assert!("O^B3".parse::<Pattern>().is_err());
        assert!("A: O , O -> blue capital=uv".parse::<Rule>().is_err());
    }

    #[test]
    fn spec_lookups() {
        let p9 = StrategyTable::builtin(GameKind::P9);
        let t = |s: &str| s.parse::<VertexType>().unwrap();
        let rule = |s: &StrategyTable, a: &str, b: &str| {
            let (i, _) = s.lookup(t(a), t(b)).unwrap();
            (s.rules()[i].label.clone(), s.rules()[i].color, s.rules()[i].directive)
        };
        assert_eq!(rule(&p9, "I^B0", "F0^B1"), ("L".into(), Red, Directive::None));
        assert_eq!(rule(&p9, "O^B0", "F2^B0"), ("D".into(), Blue, Directive::None));
        assert_eq!(rule(&p9, "F2^B0", "O^B1"), ("I".into(), Red, Directive::None));
        let p8 = StrategyTable::builtin(GameKind::P8);
        assert_eq!(rule(&p8, "O^B0", "N0^B1"), ("I".into(), Red, Directive::V));
        let p7 = StrategyTable::builtin(GameKind::P7);
        assert_eq!(rule(&p7, "I^B0", "L1^B0"), ("C".into(), Blue, Directive::None));
    }

    #[test]
    fn decide_examples() {
        let p9 = StrategyTable::builtin(GameKind::P9);
        let s = GameState::new(GameKind::P9);
        let d = decide(&s, &p9, Vertex(0), Vertex(1)).unwrap();
        assert_eq!((d.label.as_str(), d.color, d.capital), ("E", Red, None));

        let s = st(GameKind::P9, &[(0, 1, Red), (2, 3, Red)]);
        let d = decide(&s, &p9, Vertex(1), Vertex(2)).unwrap();
        assert_eq!(d.label, "J");
        assert_eq!(d.capital, Some(Capital::Edge(Edge::new(Vertex(1), Vertex(2)))));

        let s = st(GameKind::P7, &[(0, 1, Red), (2, 3, Red), (3, 4, Red)]);
        let d = decide(&s, &StrategyTable::builtin(GameKind::P7), Vertex(0), Vertex(4)).unwrap();
        assert_eq!((d.label.as_str(), d.color), ("C", Blue));
    }

    #[test]
    fn apply_move_examples() {
        let p9 = StrategyTable::builtin(GameKind::P9);
        let s = st(GameKind::P9, &[(0, 1, Red), (2, 3, Red), (3, 4, Red)]);
        let next = apply_move(&s, &p9, Vertex(1), Vertex(2)).unwrap();
        assert_eq!(next.capitals(), &[Capital::Edge(Edge::new(Vertex(1), Vertex(2)))]);

        let s = st(GameKind::P9, &[(0, 1, Red), (2, 3, Red), (3, 4, Red)]);
        let next = apply_move(&s, &p9, Vertex(2), Vertex(4)).unwrap();
        assert_eq!(next.color_of(Vertex(2), Vertex(4)), Some(Blue));
        assert!(next.capitals().is_empty());

        // O joins an endpoint of a red P4: the capital is that endpoint's inner neighbour.
        let p8 = StrategyTable::builtin(GameKind::P8);
        let s = st(GameKind::P8, &[(0, 1, Red), (1, 2, Red), (2, 3, Red)]);
        let d = decide(&s, &p8, Vertex(9), Vertex(0)).unwrap();
        assert_eq!(d.label, "J");
        assert_eq!(d.capital, Some(Capital::Vertex(Vertex(1))));
        let next = apply_decision(&s, &d).unwrap();
        assert_eq!(next.vertex_type(Vertex(3)).unwrap().red, RedClass::F2);
    }

    #[test]
    fn neighbor_choice_takes_smallest_id() {
        let p9 = StrategyTable::builtin(GameKind::P9);
        let s = st(GameKind::P9, &[(5, 3, Red), (5, 7, Red)]);
        let d = decide(&s, &p9, Vertex(0), Vertex(5)).unwrap();
        assert_eq!(d.capital, Some(Capital::Edge(Edge::new(Vertex(3), Vertex(5)))));
        let all = directive_choices(&s, Vertex(0), Vertex(5), Directive::Neighbor).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn decide_rejects_selected_edges() {
        let p9 = StrategyTable::builtin(GameKind::P9);
        let s = st(GameKind::P9, &[(0, 1, Red)]);
        assert!(decide(&s, &p9, Vertex(1), Vertex(0)).is_err());
    }

    #[test]
    fn non_total_strategy_lists_pairs() {
        let s = StrategyTable::from_rules_text(GameKind::P3, "B: O , O -> red\n").unwrap();
        match s.check_total() {
            Err(StrategyError::NotTotal(p)) => assert!(!p.is_empty()),
            other => panic!("expected NotTotal, got {other:?}"),
        }
        assert_eq!(StrategyTable::new(GameKind::P3, vec![]), Err(StrategyError::Empty));
    }

    #[test]
    fn materialized_table_agrees() {
        for k in GameKind::ALL {
            let s = StrategyTable::builtin(k);
            let m = s.materialize().unwrap();
            let types = StrategyTable::types(k);
            for &a in &types {
                for &b in &types {
                    let (i, _) = s.lookup(a, b).unwrap();
                    let (j, _) = m.lookup(a, b).unwrap();
                    assert_eq!(s.rules()[i].color, m.rules()[j].color);
                    assert_eq!(s.rules()[i].directive, m.rules()[j].directive);
                }
            }
        }
    }
}
