//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `max c.x` subject to `A x <= b`, `x >= 0`. Rows with negative
//! right-hand side get an artificial variable for phase one. The dual value
//! of row `i` is the final reduced cost of its slack.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplexOutcome {
    Optimal { x: Vec<Q>, objective: Q, duals: Vec<Q> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    /// Objective row: reduced costs, last entry is the objective value.
    z: Vec<Q>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x /= &p;
                }
            }
        }
        let pr = self.rows[r].clone();
        let nz: Vec<usize> = (0..=self.width).filter(|&j| !pr[j].is_zero()).collect();
        let apply = |row: &mut Vec<Q>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                let d = &f * &pr[j];
                row[j] -= d;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                apply(row);
            }
        }
        apply(&mut self.z);
        self.basis[r] = c;
    }

    /// Runs Bland's rule on the current objective row; columns in `banned`
    /// never enter. Returns false if unbounded.
    fn optimize(&mut self, banned: &dyn Fn(usize) -> bool) -> bool {
        loop {
            let Some(c) = (0..self.width).find(|&j| !banned(j) && self.z[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(Q, usize, usize)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[self.width] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((q, _, b)) => ratio < *q || (ratio == *q && self.basis[i] < *b),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            match best {
                None => return false,
                Some((_, r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// `max c.x` with `a x <= b` and `x >= 0`.
pub fn solve(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> SimplexOutcome {
    let m = a.len();
    let n = c.len();
    let negative: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let art_base = n + m;
    let width = n + m + negative.len();
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Q::zero(); width + 1];
        let flip = b[i].is_negative();
        for j in 0..n {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = if flip { -Q::one() } else { Q::one() };
        row[width] = if flip { -b[i].clone() } else { b[i].clone() };
        if flip {
            let k = negative.iter().position(|&x| x == i).unwrap();
            row[art_base + k] = Q::one();
            basis.push(art_base + k);
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, z: vec![Q::zero(); width + 1], basis, width };

    if !negative.is_empty() {
        // Phase one: maximize -sum(artificials).
        for j in art_base..width {
            t.z[j] = Q::one();
        }
        for &i in &negative {
            let row = t.rows[i].clone();
            for (zj, rj) in t.z.iter_mut().zip(&row) {
                *zj -= rj;
            }
        }
        t.optimize(&|_| false);
        if !t.z[width].is_zero() {
            return SimplexOutcome::Infeasible;
        }
        // Drive zero-level artificials out where possible.
        for r in 0..m {
            if t.basis[r] >= art_base {
                if let Some(c) = (0..art_base).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, c);
                }
            }
        }
    }

    let cost = |j: usize| if j < n { c[j].clone() } else { Q::zero() };
    let mut z = vec![Q::zero(); width + 1];
    for (j, zj) in z.iter_mut().enumerate().take(art_base) {
        *zj = -cost(j);
    }
    for r in 0..m {
        let cb = cost(t.basis[r]);
        if !cb.is_zero() {
            for (zj, rj) in z.iter_mut().zip(&t.rows[r]) {
                *zj += &cb * rj;
            }
        }
    }
    for zj in z.iter_mut().take(width).skip(art_base) {
        *zj = Q::zero();
    }
    t.z = z;
    if !t.optimize(&|j| j >= art_base) {
        return SimplexOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rows[r][width].clone();
        }
    }
    let duals = (0..m).map(|i| t.z[n + i].clone()).collect();
    SimplexOutcome::Optimal { x, objective: t.z[width].clone(), duals }
}

/// Exact optimality certificate: primal and dual feasibility, complementary
/// slackness, and equal objectives.
pub fn certify(a: &[Vec<Q>], b: &[Q], c: &[Q], x: &[Q], y: &[Q]) -> bool {
    let m = a.len();
    let n = c.len();
    if x.iter().any(Signed::is_negative) || y.iter().any(Signed::is_negative) {
        return false;
    }
    for i in 0..m {
        let lhs: Q = (0..n).map(|j| &a[i][j] * &x[j]).sum();
        let slack = &b[i] - lhs;
        if slack.is_negative() || !(&slack * &y[i]).is_zero() {
            return false;
        }
    }
    for j in 0..n {
        let red: Q = (0..m).map(|i| &a[i][j] * &y[i]).sum::<Q>() - &c[j];
        if red.is_negative() || !(&red * &x[j]).is_zero() {
            return false;
        }
    }
    let primal: Q = (0..n).map(|j| &c[j] * &x[j]).sum();
    let dual: Q = (0..m).map(|i| &b[i] * &y[i]).sum();
    primal == dual
}
