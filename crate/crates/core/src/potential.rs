//! Potential tables and the potential of a host graph.
//!
//! A table assigns an extended rational to every (red class, blue class) cell.
//! Several red classes may share a column (the P9 table does not split L into
//! centre and leaves). The potential of a state is the sum of its vertices'
//! cell values, or `inf` once the red graph has a cycle or a vertex falls
//! beyond the game's finite classes.

use std::fmt;

use num_traits::Zero;

use crate::error::{ParseError, PotentialError, TableError};
use crate::graph::{BlueClass, GameKind, GameState, RedClass, VertexType};
use crate::rational::{parse_q, qi, ExtRational, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub classes: Vec<RedClass>,
    /// Values for blue classes 0, 1 and 2+.
    pub values: [ExtRational; 3],
}

impl Column {
    pub fn new(classes: &[RedClass], values: [ExtRational; 3]) -> Column {
        Column { classes: classes.to_vec(), values }
    }

    /// `L0+L1`, `F0`, ...
    pub fn label(&self) -> String {
        self.classes.iter().map(|c| c.name()).collect::<Vec<_>>().join("+")
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(ExtRational::is_finite)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialTable {
    kind: GameKind,
    jump: Q,
    columns: Vec<Column>,
}

fn fin(vals: [i64; 3]) -> [ExtRational; 3] {
    vals.map(ExtRational::int)
}

const INF: [ExtRational; 3] = [ExtRational::Infinite, ExtRational::Infinite, ExtRational::Infinite];

impl PotentialTable {
    pub fn new(kind: GameKind, jump: Q, columns: Vec<Column>) -> Result<Self, TableError> {
        let t = PotentialTable { kind, jump, columns };
        t.validate()?;
        Ok(t)
    }

    /// The fixed table of each game, with its per-move jump.
    pub fn builtin(kind: GameKind) -> PotentialTable {
        use RedClass::*;
        let (jump, columns) = match kind {
            GameKind::P9 => (
                12,
                vec![
                    Column::new(&[O], fin([0, 8, 20])),
                    Column::new(&[I], fin([6, 13, 20])),
                    Column::new(&[L0, L1], fin([8, 14, 20])),
                    Column::new(&[F0], fin([8, 14, 20])),
                    Column::new(&[F1], fin([10, 15, 20])),
                    Column::new(&[F2], fin([12, 16, 20])),
                    Column::new(&[F3], fin([20, 20, 20])),
                    Column::new(&[F4plus], INF),
                ],
            ),
            GameKind::P7 => (
                20,
                vec![
                    Column::new(&[O], fin([0, 12, 32])),
                    Column::new(&[I], fin([10, 21, 32])),
                    Column::new(&[L0], fin([12, 22, 32])),
                    Column::new(&[L1], fin([14, 23, 32])),
                    Column::new(&[F0], fin([14, 23, 32])),
                    Column::new(&[F1], fin([16, 24, 32])),
                    Column::new(&[F2], fin([32, 32, 32])),
                    Column::new(&[F3, F4plus], INF),
                ],
            ),
            GameKind::P8 => (
                44,
                vec![
                    Column::new(&[O], fin([0, 28, 72])),
                    Column::new(&[I], fin([22, 47, 72])),
                    Column::new(&[L0], fin([28, 50, 72])),
                    Column::new(&[L1], fin([30, 52, 74])),
                    Column::new(&[N0], fin([32, 54, 76])),
                    Column::new(&[N1], fin([34, 53, 72])),
                    Column::new(&[F0], fin([28, 50, 72])),
                    Column::new(&[F1], fin([34, 53, 72])),
                    Column::new(&[F2], fin([40, 56, 72])),
                    Column::new(&[F3], fin([72, 72, 72])),
                    Column::new(&[F4plus], INF),
                ],
            ),
            GameKind::P3 => (
                8,
                vec![
                    Column::new(&[O], fin([0, 5, 10])),
                    Column::new(&[I], fin([4, 7, 10])),
                    Column::new(&[F4plus], INF),
                ],
            ),
            GameKind::P5 => (
                4,
                vec![
                    Column::new(&[O], fin([0, 3, 6])),
                    Column::new(&[F0], fin([2, 4, 6])),
                    Column::new(&[F1], fin([4, 5, 6])),
                    Column::new(&[F2, F3, F4plus], INF),
                ],
            ),
        };
        PotentialTable::new(kind, qi(jump), columns).expect("builtin tables satisfy their invariants")
    }

    fn validate(&self) -> Result<(), TableError> {
        let inv = |m: String| Err(TableError::Invariant(m));
        if self.jump <= Q::zero() {
            return inv(format!("jump {} is not positive", self.jump));
        }
        let mut seen = Vec::new();
        for col in &self.columns {
            if col.classes.is_empty() {
                return inv("empty column".into());
            }
            for &c in &col.classes {
                if seen.contains(&c) {
                    return inv(format!("class {c} appears in two columns"));
                }
                if !self.kind.finite_classes().contains(&c) && !self.kind.illegal_classes().contains(&c) {
                    return Err(TableError::UnknownClass(c.to_string()));
                }
                seen.push(c);
            }
            if col.values.windows(2).any(|w| w[0] > w[1]) {
                return inv(format!("column {} decreases in blue degree", col.label()));
            }
            let illegal = col.classes.iter().any(|c| self.kind.illegal_classes().contains(c));
            if illegal && col.values.iter().any(ExtRational::is_finite) {
                return inv(format!("column {} must be infinite in the {} game", col.label(), self.kind));
            }
        }
        for &c in self.kind.finite_classes() {
            if !seen.contains(&c) {
                return inv(format!("class {c} has no column"));
            }
        }
        if self.value(RedClass::O, BlueClass::B0)? != ExtRational::zero() {
            return inv("cell (O, B0) must be 0".into());
        }
        Ok(())
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn jump(&self) -> &Q {
        &self.jump
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column_index(&self, class: RedClass) -> Option<usize> {
        self.columns.iter().position(|c| c.classes.contains(&class))
    }

    pub fn value(&self, class: RedClass, blue: BlueClass) -> Result<ExtRational, TableError> {
        let i = self
            .column_index(class)
            .ok_or_else(|| TableError::UnknownClass(class.to_string()))?;
        Ok(self.columns[i].values[blue.index()].clone())
    }

    pub fn vertex_value(&self, vt: VertexType) -> Result<ExtRational, TableError> {
        self.value(vt.red, vt.blue)
    }

    /// Copy of this table with a different cell value; used by perturbation tests.
    pub fn with_cell(&self, class: RedClass, blue: BlueClass, value: ExtRational) -> Result<Self, TableError> {
        let mut t = self.clone();
        let i = t
            .column_index(class)
            .ok_or_else(|| TableError::UnknownClass(class.to_string()))?;
        t.columns[i].values[blue.index()] = value;
        t.validate()?;
        Ok(t)
    }

    /// Minimum over the finite cells of one blue row.
    pub fn row_min(&self, blue: BlueClass) -> Option<Q> {
        self.columns
            .iter()
            .filter_map(|c| c.values[blue.index()].finite().cloned())
            .min()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("game={} jump={}\n", self.kind, self.jump);
        for c in &self.columns {
            let [a, b, d] = &c.values;
            out.push_str(&format!("{}: {a} {b} {d}\n", c.label()));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<PotentialTable, ParseError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| ParseError::new("empty table file"))?;
        let mut kind = None;
        let mut jump = None;
        for tok in header.split_whitespace() {
            match tok.split_once('=') {
                Some(("game", g)) => kind = Some(g.parse::<GameKind>().map_err(|e| e.at(1))?),
                Some(("jump", j)) => jump = Some(parse_q(j).map_err(|e| e.at(1))?),
                _ => return Err(ParseError::new(format!("unexpected header token `{tok}`")).at(1)),
            }
        }
        let kind = kind.ok_or_else(|| ParseError::new("header lacks game=").at(1))?;
        let jump = jump.ok_or_else(|| ParseError::new("header lacks jump=").at(1))?;
        let mut columns = Vec::new();
        for (i, line) in lines {
            let line_no = i + 1;
            let (label, vals) = line
                .split_once(':')
                .ok_or_else(|| ParseError::new(format!("expected `<class>: v0 v1 v2`, got `{line}`")).at(line_no))?;
            let classes = label
                .trim()
                .split('+')
                .map(str::parse::<RedClass>)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.at(line_no))?;
            let vals: Vec<ExtRational> = vals
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|e: ParseError| e.at(line_no))?;
            let values: [ExtRational; 3] = vals
                .try_into()
                .map_err(|_| ParseError::new("a column needs exactly three values").at(line_no))?;
            columns.push(Column { classes, values });
        }
        PotentialTable::new(kind, jump, columns).map_err(|e| ParseError::new(e.to_string()))
    }
}

/// `f(G, T)`: the sum of table values over all touched vertices.
pub fn potential(state: &GameState, table: &PotentialTable) -> Result<ExtRational, PotentialError> {
    if state.has_red_cycle() {
        return Ok(ExtRational::Infinite);
    }
    let mut total = ExtRational::zero();
    for (_, vt) in state.classify()? {
        total = total + table.vertex_value(vt)?;
        if !total.is_finite() {
            break;
        }
    }
    Ok(total)
}

/// Coefficients of the blue family `alpha * v(H) + beta * v1(H) >= x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub alpha: Q,
    pub beta: Q,
    pub x: Q,
}

impl FamilySpec {
    pub fn new(alpha: Q, beta: Q, x: Q) -> FamilySpec {
        assert!(alpha > Q::zero(), "family coefficient alpha must be positive");
        FamilySpec { alpha, beta, x }
    }

    pub fn score(&self, v: usize, v1: usize) -> Q {
        &self.alpha * qi(v as i64) + &self.beta * qi(v1 as i64)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{})", self.alpha, self.beta, self.x)
    }
}

/// Lower-bound coefficients extracted from a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCoefficients {
    pub alpha: Q,
    pub beta: Q,
}

impl BoundCoefficients {
    pub fn family(&self, x: Q) -> FamilySpec {
        FamilySpec::new(self.alpha.clone(), self.beta.clone(), x)
    }

    pub fn evaluate(&self, v: usize, v1: usize) -> Q {
        &self.alpha * qi(v as i64) + &self.beta * qi(v1 as i64)
    }
}

/// Any blue `H` forces `f >= m2 v(H) + (m1 - m2) v1(H)` and `f` grows by at most
/// `jump` per move, so `H` needs `(m2 v(H) + (m1 - m2) v1(H)) / jump` rounds.
pub fn extract_bound(table: &PotentialTable) -> BoundCoefficients {
    let m2 = table.row_min(BlueClass::B2plus).expect("table has a finite 2+ cell");
    let m1 = table.row_min(BlueClass::B1).expect("table has a finite 1 cell");
    BoundCoefficients {
        alpha: &m2 / table.jump(),
        beta: (m1 - m2) / table.jump(),
    }
}

/// Lower bound on rounds for a blue `G` with `v` vertices, `v1` of them of degree 1.
pub fn round_lower_bound(kind: GameKind, v: usize, v1: usize) -> Q {
    assert!(v >= 2 && v1 <= v, "need v >= 2 and 0 <= v1 <= v");
    extract_bound(&PotentialTable::builtin(kind)).evaluate(v, v1)
}
