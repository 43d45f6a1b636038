//! Linear programs whose feasible points are potential tables for a strategy.
//!
//! Every cell of a game's table is a variable. Each enumerated move
//! configuration contributes one row bounding the change of `f` by the jump;
//! side rows fix `c(O,B0) = 0`, keep columns nondecreasing, make blue
//! increments evenly spaced on L, N and F columns, and keep red moves from
//! gaining more on vertices with more blue edges. The objective is the least
//! value in the `2+` row.

mod simplex;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use simplex::{certify, solve as simplex_solve, SimplexOutcome};

use crate::error::StrategyError;
use crate::graph::{BlueClass, CapitalKind, Color, GameKind, RedClass, VertexType};
use crate::potential::{Column, PotentialTable};
use crate::rational::{ExtRational, Q};
use crate::strategy::{Directive, Rule, StrategyTable};
use crate::verify::{configurations, evaluate_all, Config, Evaluated};

/// One variable per finite cell, grouped by the columns of the game's table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTable {
    pub kind: GameKind,
    pub columns: Vec<Vec<RedClass>>,
}

impl SymbolicTable {
    pub fn for_game(kind: GameKind) -> SymbolicTable {
        let columns = PotentialTable::builtin(kind)
            .columns()
            .iter()
            .filter(|c| c.is_finite())
            .map(|c| c.classes.clone())
            .collect();
        SymbolicTable { kind, columns }
    }

    pub fn column_of(&self, r: RedClass) -> Option<usize> {
        self.columns.iter().position(|c| c.contains(&r))
    }

    pub fn var(&self, t: VertexType) -> Option<usize> {
        self.column_of(t.red).map(|c| 3 * c + t.blue.index())
    }

    pub fn cell_count(&self) -> usize {
        3 * self.columns.len()
    }

    pub fn column_name(&self, c: usize) -> String {
        self.columns[c].iter().map(|r| r.to_string()).collect::<Vec<_>>().join("+")
    }

    pub fn var_name(&self, i: usize) -> String {
        if i == self.cell_count() {
            return "t".into();
        }
        format!("c({},{})", self.column_name(i / 3), BlueClass::ALL[i % 3])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

/// Where a row came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// A move bound; `cells` are the strategy cells (rule labels) producing it.
    Jump { cells: Vec<String>, config: String },
    Monotone { from: String, to: String, low: BlueClass, high: BlueClass },
    Spacing(String),
    Anchor,
    ColumnOrder(String),
    Objective(String),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Jump { cells, config } => write!(f, "move [{}] at {config}", cells.join(" ")),
            Origin::Monotone { from, to, low, high } => write!(f, "red {from}->{to} blue {low}<{high}"),
            Origin::Spacing(c) => write!(f, "spacing {c}"),
            Origin::Anchor => f.write_str("anchor"),
            Origin::ColumnOrder(c) => write!(f, "column {c}"),
            Origin::Objective(c) => write!(f, "objective {c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: BTreeMap<usize, Q>,
    pub rel: Relation,
    pub rhs: Q,
    pub origin: Origin,
}

impl Constraint {
    fn lhs(&self, x: &[Q]) -> Q {
        self.coeffs.iter().map(|(&i, c)| c * &x[i]).sum()
    }

    pub fn holds(&self, x: &[Q]) -> bool {
        let l = self.lhs(x);
        match self.rel {
            Relation::Le => l <= self.rhs,
            Relation::Eq => l == self.rhs,
            Relation::Ge => l >= self.rhs,
        }
    }

    pub fn is_jump(&self) -> bool {
        matches!(self.origin, Origin::Jump { .. })
    }
}

/// Maximize `t` over the cell variables and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub symbols: SymbolicTable,
    pub jump: Q,
    pub constraints: Vec<Constraint>,
    /// Moves whose outcome no table can bound (illegal class, failed answer).
    pub unbounded_moves: Vec<String>,
}

impl LinearProgram {
    pub fn var_count(&self) -> usize {
        self.symbols.cell_count() + 1
    }

    pub fn objective_var(&self) -> usize {
        self.symbols.cell_count()
    }

    /// Text form: `var` lines, `max t`, then one row per line with its origin
    /// after `#`.
    pub fn to_text(&self) -> String {
        let mut out = format!("# game={} jump={}\n", self.symbols.kind, self.jump);
        for i in 0..self.var_count() {
            out.push_str(&format!("var {}\n", self.symbols.var_name(i)));
        }
        out.push_str("max t\n");
        for c in &self.constraints {
            let terms: Vec<String> = c
                .coeffs
                .iter()
                .map(|(&i, q)| {
                    let sign = if q.is_negative() { "-" } else { "+" };
                    format!("{sign}{} {}", q.abs(), self.symbols.var_name(i))
                })
                .collect();
            out.push_str(&format!("{} {} {} # {}\n", terms.join(" "), c.rel, c.rhs, c.origin));
        }
        for m in &self.unbounded_moves {
            out.push_str(&format!("# unbounded move: {m}\n"));
        }
        out
    }
}

fn add(coeffs: &mut BTreeMap<usize, Q>, i: usize, q: Q) {
    let e = coeffs.entry(i).or_insert_with(Q::zero);
    *e += q;
    if e.is_zero() {
        coeffs.remove(&i);
    }
}

fn cell(c: usize, b: usize) -> usize {
    3 * c + b
}

/// Jump rows from evaluated configurations, merged when coefficients agree.
fn jump_rows(
    sym: &SymbolicTable,
    strategy: &StrategyTable,
    configs: &[Config],
    evals: &[Evaluated],
    jump: &Q,
) -> (Vec<Constraint>, Vec<String>) {
    let mut rows: BTreeMap<Vec<(usize, Q)>, Labels> = BTreeMap::new();
    let mut unbounded = Vec::new();
    for e in evals {
        let label = strategy.rules().get(e.rule).map(|r| r.label.clone()).unwrap_or_default();
        let desc = &configs[e.config].desc;
        if let Some(err) = &e.error {
            unbounded.push(format!("[{label}] {desc}: {err}"));
            continue;
        }
        let mut coeffs = BTreeMap::new();
        let mut ok = true;
        for (a, b) in &e.transitions {
            match (sym.var(*a), sym.var(*b)) {
                (Some(i), Some(j)) => {
                    add(&mut coeffs, j, Q::one());
                    add(&mut coeffs, i, -Q::one());
                }
                _ => ok = false,
            }
        }
        if !ok {
            unbounded.push(format!("[{label}] {desc}: reaches a class with infinite value"));
            continue;
        }
        if coeffs.is_empty() {
            continue;
        }
        let key: Vec<(usize, Q)> = coeffs.into_iter().collect();
        let slot = rows.entry(key).or_insert_with(|| (BTreeSet::new(), desc.clone()));
        slot.0.insert(label);
    }
    let cons = rows
        .into_iter()
        .map(|(k, (cells, config))| Constraint {
            coeffs: k.into_iter().collect(),
            rel: Relation::Le,
            rhs: jump.clone(),
            origin: Origin::Jump { cells: cells.into_iter().collect(), config },
        })
        .collect();
    (cons, unbounded)
}

fn spaced(r: RedClass) -> bool {
    matches!(r, RedClass::L0 | RedClass::L1 | RedClass::N0 | RedClass::N1) || r.is_f()
}

fn side_rows(sym: &SymbolicTable, evals: &[Evaluated]) -> Vec<Constraint> {
    let mut out = Vec::new();
    let o = sym.var(VertexType::new(RedClass::O, BlueClass::B0)).expect("O is finite");
    out.push(Constraint { coeffs: BTreeMap::from([(o, Q::one())]), rel: Relation::Eq, rhs: Q::zero(), origin: Origin::Anchor });
    for c in 0..sym.columns.len() {
        let name = sym.column_name(c);
        for b in 0..2 {
            out.push(Constraint {
                coeffs: BTreeMap::from([(cell(c, b), Q::one()), (cell(c, b + 1), -Q::one())]),
                rel: Relation::Le,
                rhs: Q::zero(),
                origin: Origin::ColumnOrder(name.clone()),
            });
        }
        if sym.columns[c].iter().all(|&r| spaced(r)) {
            let two = Q::from_integer(2.into());
            out.push(Constraint {
                coeffs: BTreeMap::from([(cell(c, 0), Q::one()), (cell(c, 1), -two), (cell(c, 2), Q::one())]),
                rel: Relation::Eq,
                rhs: Q::zero(),
                origin: Origin::Spacing(name.clone()),
            });
        }
        out.push(Constraint {
            coeffs: BTreeMap::from([(sym.cell_count(), Q::one()), (cell(c, 2), -Q::one())]),
            rel: Relation::Le,
            rhs: Q::zero(),
            origin: Origin::Objective(name),
        });
    }
    let moves: BTreeSet<(usize, usize)> = evals
        .iter()
        .filter(|e| e.color == Color::Red && e.error.is_none())
        .flat_map(|e| e.transitions.iter())
        .filter_map(|(a, b)| Some((sym.column_of(a.red)?, sym.column_of(b.red)?)))
        .filter(|(x, z)| x != z)
        .collect();
    for (x, z) in moves {
        for i in 0..3 {
            for j in i + 1..3 {
                let mut coeffs = BTreeMap::new();
                add(&mut coeffs, cell(z, j), Q::one());
                add(&mut coeffs, cell(x, j), -Q::one());
                add(&mut coeffs, cell(z, i), -Q::one());
                add(&mut coeffs, cell(x, i), Q::one());
                out.push(Constraint {
                    coeffs,
                    rel: Relation::Le,
                    rhs: Q::zero(),
                    origin: Origin::Monotone {
                        from: sym.column_name(x),
                        to: sym.column_name(z),
                        low: BlueClass::ALL[i],
                        high: BlueClass::ALL[j],
                    },
                });
            }
        }
    }
    out
}

fn build(strategy: &StrategyTable, jump: &Q, configs: &[Config]) -> LinearProgram {
    let sym = SymbolicTable::for_game(strategy.kind());
    let evals = evaluate_all(configs, strategy, None);
    let (mut cons, unbounded_moves) = jump_rows(&sym, strategy, configs, &evals, jump);
    cons.extend(side_rows(&sym, &evals));
    LinearProgram { symbols: sym, jump: jump.clone(), constraints: cons, unbounded_moves }
}

/// All rows induced by `strategy` at the given jump.
pub fn generate_constraints(strategy: &StrategyTable, jump: &Q) -> Result<LinearProgram, StrategyError> {
    strategy.check_total()?;
    Ok(build(strategy, jump, &configurations(strategy.kind())))
}

/// Optimal vertex of a program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    /// Cell values then `t`.
    pub values: Vec<Q>,
    pub objective: Q,
    /// One dual per constraint; equalities may be negative.
    pub duals: Vec<Q>,
    /// Primal feasibility, dual feasibility and complementary slackness all hold exactly.
    pub certified: bool,
    /// Simplex rounds, one per batch of added move rows.
    pub rounds: usize,
}

impl LpSolution {
    /// The solved cells as a potential table for `lp`'s game.
    pub fn table(&self, lp: &LinearProgram) -> PotentialTable {
        let sym = &lp.symbols;
        let base = PotentialTable::builtin(sym.kind);
        let columns = base
            .columns()
            .iter()
            .map(|col| match sym.columns.iter().position(|c| *c == col.classes) {
                Some(c) => Column::new(&col.classes, [0, 1, 2].map(|b| ExtRational::Finite(self.values[cell(c, b)].clone()))),
                None => col.clone(),
            })
            .collect();
        PotentialTable::new(sym.kind, lp.jump.clone(), columns).expect("solved tables satisfy the side rows")
    }

    /// Rows tight at this vertex.
    pub fn active(&self, lp: &LinearProgram) -> Vec<usize> {
        (0..lp.constraints.len())
            .filter(|&i| {
                let c = &lp.constraints[i];
                c.lhs(&self.values) == c.rhs
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn objective(&self) -> Option<&Q> {
        match self {
            LpOutcome::Optimal(s) => Some(&s.objective),
            _ => None,
        }
    }
}

/// Rule labels behind a move row, and the first configuration giving it.
type Labels = (BTreeSet<String>, String);

/// Dense rows, right-hand sides, and the source row and sign of each dense row.
type Lowered = (Vec<Vec<Q>>, Vec<Q>, Vec<(usize, Q)>);

/// Index rows of `lp` as `<=` rows over split variables `x = p - n`.
fn lower(lp: &LinearProgram, rows: &[usize]) -> Lowered {
    let n = lp.var_count();
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut back = Vec::new();
    for &r in rows {
        let c = &lp.constraints[r];
        let mut row = vec![Q::zero(); 2 * n];
        for (&i, q) in &c.coeffs {
            row[2 * i] = q.clone();
            row[2 * i + 1] = -q.clone();
        }
        let neg: Vec<Q> = row.iter().map(|x| -x.clone()).collect();
        match c.rel {
            Relation::Le => {
                a.push(row);
                b.push(c.rhs.clone());
                back.push((r, Q::one()));
            }
            Relation::Ge => {
                a.push(neg);
                b.push(-c.rhs.clone());
                back.push((r, -Q::one()));
            }
            Relation::Eq => {
                a.push(row);
                b.push(c.rhs.clone());
                back.push((r, Q::one()));
                a.push(neg);
                b.push(-c.rhs.clone());
                back.push((r, -Q::one()));
            }
        }
    }
    (a, b, back)
}

/// Exact simplex with lazily added move rows: solve on the side rows plus the
/// move rows found so far, add every move row the vertex violates, repeat.
pub fn solve_lp(lp: &LinearProgram) -> LpOutcome {
    if !lp.unbounded_moves.is_empty() {
        return LpOutcome::Infeasible;
    }
    let n = lp.var_count();
    let mut c = vec![Q::zero(); 2 * n];
    c[2 * lp.objective_var()] = Q::one();
    c[2 * lp.objective_var() + 1] = -Q::one();
    // Start from the rows any table must satisfy, plus one move row per cell label.
    let mut rows: Vec<usize> = (0..lp.constraints.len()).filter(|&i| !lp.constraints[i].is_jump()).collect();
    let mut seen_cells = HashSet::new();
    for (i, con) in lp.constraints.iter().enumerate() {
        if let Origin::Jump { cells, .. } = &con.origin {
            if cells.iter().any(|c| seen_cells.insert(c.clone())) {
                rows.push(i);
            }
        }
    }
    let mut rounds = 0;
    loop {
        rounds += 1;
        rows.sort_unstable();
        rows.dedup();
        let (a, b, back) = lower(lp, &rows);
        let (x, objective, y) = match simplex_solve(&a, &b, &c) {
            SimplexOutcome::Infeasible => return LpOutcome::Infeasible,
            SimplexOutcome::Unbounded => {
                // The relaxation may be unbounded only for want of move rows.
                let missing: Vec<usize> =
                    (0..lp.constraints.len()).filter(|i| lp.constraints[*i].is_jump() && !rows.contains(i)).collect();
                if missing.is_empty() {
                    return LpOutcome::Unbounded;
                }
                rows.extend(missing);
                continue;
            }
            SimplexOutcome::Optimal { x, objective, duals } => (x, objective, duals),
        };
        let values: Vec<Q> = (0..n).map(|i| &x[2 * i] - &x[2 * i + 1]).collect();
        let violated: Vec<usize> = (0..lp.constraints.len())
            .filter(|&i| lp.constraints[i].is_jump() && !lp.constraints[i].holds(&values) && !rows.contains(&i))
            .collect();
        if !violated.is_empty() {
            rows.extend(violated);
            continue;
        }
        let certified = certify(&a, &b, &c, &x, &y);
        let mut duals = vec![Q::zero(); lp.constraints.len()];
        for ((r, sign), yi) in back.iter().zip(&y) {
            duals[*r] += sign * yi;
        }
        return LpOutcome::Optimal(LpSolution { values, objective, duals, certified, rounds });
    }
}

/// A row a table breaks, or a move no finite table can bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityViolation {
    pub origin: String,
    pub lhs: Option<Q>,
    pub rhs: Q,
}

/// Rows of `lp` that `table` violates; empty iff the table is feasible.
pub fn check_feasibility(table: &PotentialTable, lp: &LinearProgram) -> Vec<FeasibilityViolation> {
    let sym = &lp.symbols;
    let mut x = vec![Q::zero(); lp.var_count()];
    let mut out = Vec::new();
    for (c, classes) in sym.columns.iter().enumerate() {
        for (b, blue) in BlueClass::ALL.iter().enumerate() {
            match table.value(classes[0], *blue).ok().and_then(|v| v.finite().cloned()) {
                Some(v) => x[cell(c, b)] = v,
                None => out.push(FeasibilityViolation {
                    origin: format!("cell {} is not finite", sym.var_name(cell(c, b))),
                    lhs: None,
                    rhs: Q::zero(),
                }),
            }
        }
    }
    for m in &lp.unbounded_moves {
        out.push(FeasibilityViolation { origin: m.clone(), lhs: None, rhs: lp.jump.clone() });
    }
    for con in &lp.constraints {
        if matches!(con.origin, Origin::Objective(_)) {
            continue;
        }
        if !con.holds(&x) {
            out.push(FeasibilityViolation { origin: con.origin.to_string(), lhs: Some(con.lhs(&x)), rhs: con.rhs.clone() });
        }
    }
    out
}

/// Result of a strategy search.
#[derive(Clone, Debug)]
pub struct ClimbResult {
    pub strategy: StrategyTable,
    pub table: Option<PotentialTable>,
    pub objective: Option<Q>,
    /// Strategies solved, the initial one included.
    pub solves: usize,
    /// Cell changes kept.
    pub accepted: usize,
}

fn directives(kind: GameKind) -> Vec<Directive> {
    match kind.capital_kind() {
        CapitalKind::None => vec![Directive::None],
        CapitalKind::Edge => vec![Directive::None, Directive::Uv, Directive::Neighbor],
        CapitalKind::Vertex => vec![Directive::None, Directive::V, Directive::Neighbor],
    }
}

fn flips(rule: &Rule, kind: GameKind) -> Vec<Rule> {
    match rule.color {
        Color::Red => vec![Rule { color: Color::Blue, directive: Directive::None, ..rule.clone() }],
        Color::Blue => directives(kind)
            .into_iter()
            .map(|d| Rule { color: Color::Red, directive: d, ..rule.clone() })
            .collect(),
    }
}

fn better(a: Option<&Q>, b: Option<&Q>) -> std::cmp::Ordering {
    match (a, b) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(_), None) => std::cmp::Ordering::Greater,
        (None, Some(_)) => std::cmp::Ordering::Less,
        (None, None) => std::cmp::Ordering::Equal,
    }
}

/// Local search over strategy cells. Each step solves the program, ranks the
/// move rows tight at the optimum by dual magnitude (label order, then the
/// seed, breaking ties), and changes the color of a cell behind the first
/// such row. A change is kept unless the objective gets worse; strategies
/// already visited are skipped. Stops after `max_iters` candidate solves or
/// when no tight row offers an unvisited change.
pub fn hill_climb(initial: &StrategyTable, jump: &Q, max_iters: usize, seed: u64) -> Result<ClimbResult, StrategyError> {
    let kind = initial.kind();
    let mut current = initial.materialize()?;
    current.check_total()?;
    let configs = configurations(kind);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lp = build(&current, jump, &configs);
    let mut outcome = solve_lp(&lp);
    let mut visited: HashSet<String> = HashSet::from([current.to_text()]);
    let mut solves = 1;
    let mut accepted = 0;
    'outer: while solves <= max_iters {
        let candidates = candidate_cells(&lp, &outcome, &current, &mut rng);
        for label in candidates {
            let (idx, rule) = current.rule_by_label(&label).expect("labels come from the strategy");
            for flipped in flips(rule, kind) {
                let mut rules = current.rules().to_vec();
                rules[idx] = flipped;
                let next = StrategyTable::new(kind, rules)?;
                if !visited.insert(next.to_text()) {
                    continue;
                }
                let next_lp = build(&next, jump, &configs);
                let next_out = solve_lp(&next_lp);
                solves += 1;
                if better(next_out.objective(), outcome.objective()) != std::cmp::Ordering::Less {
                    current = next;
                    lp = next_lp;
                    outcome = next_out;
                    accepted += 1;
                    continue 'outer;
                }
                if solves > max_iters {
                    break 'outer;
                }
            }
        }
        break;
    }
    let (table, objective) = match &outcome {
        LpOutcome::Optimal(s) => (Some(s.table(&lp)), Some(s.objective.clone())),
        _ => (None, None),
    };
    Ok(ClimbResult { strategy: current, table, objective, solves, accepted })
}

/// Cells behind tight move rows, strongest dual first. Without an optimum
/// (an infeasible program) every cell behind an unbounded move, then every
/// red cell, is a candidate.
fn candidate_cells(lp: &LinearProgram, outcome: &LpOutcome, strategy: &StrategyTable, rng: &mut ChaCha8Rng) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let push = |l: &str, out: &mut Vec<String>| {
        if !out.iter().any(|x| x == l) {
            out.push(l.to_string());
        }
    };
    match outcome {
        LpOutcome::Optimal(sol) => {
            let mut tight: Vec<(Q, Vec<String>)> = sol
                .active(lp)
                .into_iter()
                .filter_map(|i| match &lp.constraints[i].origin {
                    Origin::Jump { cells, .. } => Some((sol.duals[i].abs(), cells.clone())),
                    _ => None,
                })
                .collect();
            tight.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
            let mut groups: Vec<Vec<(Q, Vec<String>)>> = Vec::new();
            for t in tight {
                match groups.last_mut() {
                    Some(g) if g[0].0 == t.0 => g.push(t),
                    _ => groups.push(vec![t]),
                }
            }
            for mut g in groups {
                g.shuffle(rng);
                for (_, cells) in g {
                    for c in cells {
                        push(&c, &mut out);
                    }
                }
            }
        }
        _ => {
            for m in &lp.unbounded_moves {
                if let Some(l) = m.strip_prefix('[').and_then(|r| r.split(']').next()) {
                    push(l, &mut out);
                }
            }
            for r in strategy.rules().iter().filter(|r| r.color == Color::Red) {
                push(&r.label, &mut out);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn builtin_tables_are_feasible() {
        for kind in GameKind::ALL {
            let table = PotentialTable::builtin(kind);
            let lp = generate_constraints(&StrategyTable::builtin(kind), table.jump()).unwrap();
            let v = check_feasibility(&table, &lp);
            assert!(v.is_empty(), "{kind}: {v:#?}");
        }
    }

    #[test]
    fn p9_objective_reaches_twenty() {
        let lp = generate_constraints(&StrategyTable::builtin(GameKind::P9), &qi(12)).unwrap();
        match solve_lp(&lp) {
            LpOutcome::Optimal(s) => {
                assert!(s.objective >= qi(20), "{}", s.objective);
                assert!(s.certified);
            }
            o => panic!("{o:?}"),
        }
    }
}
