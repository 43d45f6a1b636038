//! Exhaustive checking of potential tables against strategies.

mod enumerate;

use std::collections::BTreeSet;

pub use enumerate::{configurations, evaluate_all, evaluate_one, witness, Config, Evaluated};

pub use crate::arena::{audit_transcript, Audit, Violation, ViolationKind};

use crate::graph::{BlueClass, Color, GameKind, RedClass};
use crate::potential::PotentialTable;
use crate::rational::{ExtRational, Q};
use crate::strategy::StrategyTable;

/// Largest change of `f` over every configuration one rule answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub color: Color,
    /// `None` when no configuration reaches the rule.
    pub max_delta: Option<ExtRational>,
    /// Distinct witnesses attaining the maximum, sorted.
    pub witnesses: Vec<String>,
    /// Largest change at each endpoint, blue rules only.
    pub max_du: Option<ExtRational>,
    pub max_dv: Option<ExtRational>,
    /// Configurations answered by this rule.
    pub hits: usize,
    /// A configuration attaining the maximum.
    pub example: Option<String>,
}

impl CaseResult {
    pub fn witness(&self) -> &str {
        self.witnesses.first().map(String::as_str).unwrap_or("-")
    }
}

/// The per-rule maxima and the overall jump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpReport {
    pub kind: GameKind,
    pub jump: Q,
    pub cases: Vec<CaseResult>,
    pub overall: Option<ExtRational>,
    /// Configurations no rule answered, or whose answer failed.
    pub failures: Vec<String>,
}

impl JumpReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
            && self.overall.as_ref().is_none_or(|m| *m <= ExtRational::Finite(self.jump.clone()))
    }

    pub fn case(&self, label: &str) -> Option<&CaseResult> {
        self.cases.iter().find(|c| c.label == label)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let m = c.max_delta.as_ref().map(ToString::to_string).unwrap_or_else(|| "none".into());
            out.push_str(&format!("case={} max_delta={m} witness={}", c.label, c.witness()));
            if let (Some(du), Some(dv)) = (&c.max_du, &c.max_dv) {
                out.push_str(&format!(" max_dc_u={du} max_dc_v={dv}"));
            }
            out.push('\n');
        }
        let o = self.overall.as_ref().map(ToString::to_string).unwrap_or_else(|| "none".into());
        out.push_str(&format!("overall={o}\n"));
        out
    }
}

fn cell_delta(table: &PotentialTable, before: crate::graph::VertexType, after: crate::graph::VertexType) -> ExtRational {
    let a = table.vertex_value(after).unwrap_or(ExtRational::Infinite);
    let b = table.vertex_value(before).unwrap_or(ExtRational::Infinite);
    a.delta_from(&b).unwrap_or(ExtRational::zero())
}

fn upd(slot: &mut Option<ExtRational>, x: ExtRational) {
    if slot.as_ref().is_none_or(|m| x > *m) {
        *slot = Some(x);
    }
}

/// Summarizes evaluated configurations per rule of `strategy`.
pub fn summarize_cases(
    configs: &[Config],
    evals: &[Evaluated],
    strategy: &StrategyTable,
    table: &PotentialTable,
) -> JumpReport {
    let kind = strategy.kind();
    let mut cases: Vec<CaseResult> = strategy
        .rules()
        .iter()
        .map(|r| CaseResult {
            label: r.label.clone(),
            color: r.color,
            max_delta: None,
            witnesses: Vec::new(),
            max_du: None,
            max_dv: None,
            hits: 0,
            example: None,
        })
        .collect();
    let mut wit: Vec<BTreeSet<String>> = vec![BTreeSet::new(); cases.len()];
    let mut failures = Vec::new();
    let mut overall: Option<ExtRational> = None;
    for e in evals {
        let d = e.delta.clone().unwrap_or(ExtRational::Infinite);
        if let Some(err) = &e.error {
            failures.push(format!("{}: {err}", configs[e.config].desc));
        }
        upd(&mut overall, d.clone());
        if e.rule >= cases.len() {
            continue;
        }
        let c = &mut cases[e.rule];
        c.hits += 1;
        let w = witness(kind, e);
        match c.max_delta.as_ref().map(|m| d.cmp(m)) {
            None | Some(std::cmp::Ordering::Greater) => {
                c.max_delta = Some(d);
                wit[e.rule] = BTreeSet::from([w]);
                c.example = Some(configs[e.config].desc.clone());
            }
            Some(std::cmp::Ordering::Equal) => {
                wit[e.rule].insert(w);
            }
            Some(std::cmp::Ordering::Less) => {}
        }
        if e.color == Color::Blue {
            let (a, b) = e.pair;
            let bump = |t: crate::graph::VertexType| crate::graph::VertexType::new(t.red, t.blue.bump());
            upd(&mut c.max_du, cell_delta(table, a, bump(a)));
            upd(&mut c.max_dv, cell_delta(table, b, bump(b)));
        }
    }
    for (c, w) in cases.iter_mut().zip(wit) {
        c.witnesses = w.into_iter().collect();
    }
    JumpReport { kind, jump: table.jump().clone(), cases, overall, failures }
}

/// Plays every configuration under `strategy` and reports the largest
/// change of `f` per rule.
pub fn verify_jump_bound(strategy: &StrategyTable, table: &PotentialTable) -> JumpReport {
    let configs = configurations(strategy.kind());
    let evals = evaluate_all(&configs, strategy, Some(table));
    summarize_cases(&configs, &evals, strategy, table)
}

/// The maximum for one rule of the builtin strategy and table.
pub fn enumerate_case_delta(kind: GameKind, label: &str) -> Option<CaseResult> {
    let report = verify_jump_bound(&StrategyTable::builtin(kind), &PotentialTable::builtin(kind));
    report.case(label).cloned()
}

/// Reference maxima shipped with the crate: `case=<label> max_delta=<q>
/// witness=<w>` lines and one `overall=<q>` line.
pub fn golden(kind: GameKind) -> &'static str {
    match kind {
        GameKind::P3 => include_str!("../../golden/p3.txt"),
        GameKind::P5 => include_str!("../../golden/p5.txt"),
        GameKind::P7 => include_str!("../../golden/p7.txt"),
        GameKind::P8 => include_str!("../../golden/p8.txt"),
        GameKind::P9 => include_str!("../../golden/p9.txt"),
    }
}

fn field<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.split_whitespace().find_map(|t| t.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
}

/// Differences between a report and a golden file. A golden witness of `*`
/// matches anything; otherwise it must be one of the maximizers.
pub fn compare_golden(report: &JumpReport, golden: &str) -> Vec<String> {
    let mut diffs = Vec::new();
    for line in golden.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if let Some(o) = field(line, "overall") {
            let got = report.overall.as_ref().map(ToString::to_string).unwrap_or_else(|| "none".into());
            if got != o {
                diffs.push(format!("overall: expected {o}, got {got}"));
            }
            continue;
        }
        let Some(label) = field(line, "case") else {
            diffs.push(format!("unreadable golden line: {line}"));
            continue;
        };
        let Some(c) = report.case(label) else {
            diffs.push(format!("case {label}: not in the strategy"));
            continue;
        };
        if let Some(m) = field(line, "max_delta") {
            let got = c.max_delta.as_ref().map(ToString::to_string).unwrap_or_else(|| "none".into());
            if got != m {
                diffs.push(format!("case {label}: expected max_delta {m}, got {got}"));
            }
        }
        if let Some(w) = field(line, "witness") {
            if w != "*" && !c.witnesses.iter().any(|x| x == w) {
                diffs.push(format!("case {label}: witness {w} not among {:?}", c.witnesses));
            }
        }
    }
    for c in &report.cases {
        if !golden.lines().any(|l| field(l, "case") == Some(c.label.as_str())) {
            diffs.push(format!("case {}: missing from golden", c.label));
        }
    }
    diffs
}

/// A red-class change `from -> to` where the blue increment is worth more
/// after the move than before.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneViolation {
    pub from: RedClass,
    pub to: RedClass,
    pub low: BlueClass,
    pub high: BlueClass,
}

/// Red-class changes seen when the builtin strategy answers `kind`'s
/// configurations with red, legal targets only.
pub fn red_transitions(kind: GameKind) -> BTreeSet<(RedClass, RedClass)> {
    let strategy = StrategyTable::builtin(kind);
    let configs = configurations(kind);
    let evals = evaluate_all(&configs, &strategy, None);
    evals
        .iter()
        .filter(|e| e.color == Color::Red && e.error.is_none())
        .flat_map(|e| e.transitions.iter().map(|(a, b)| (a.red, b.red)))
        .filter(|(a, b)| a != b && kind.finite_classes().contains(b))
        .collect()
}

/// For each observed red change `X -> Z` and blue classes `i < j`, checks
/// `c(Z,j) - c(X,j) <= c(Z,i) - c(X,i)`: a red move never gains more on a
/// vertex with more blue edges.
pub fn verify_monotone_reduction(table: &PotentialTable) -> Vec<MonotoneViolation> {
    let mut out = Vec::new();
    let val = |r: RedClass, b: BlueClass| table.value(r, b).ok().and_then(|x| x.finite().cloned());
    for (x, z) in red_transitions(table.kind()) {
        for (i, lo) in BlueClass::ALL.iter().enumerate() {
            for hi in &BlueClass::ALL[i + 1..] {
                let (Some(zl), Some(xl), Some(zh), Some(xh)) = (val(z, *lo), val(x, *lo), val(z, *hi), val(x, *hi)) else {
                    continue;
                };
                if zh - xh > zl - xl {
                    out.push(MonotoneViolation { from: x, to: z, low: *lo, high: *hi });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_match_golden() {
        for kind in GameKind::ALL {
            let report = verify_jump_bound(&StrategyTable::builtin(kind), &PotentialTable::builtin(kind));
            let diffs = compare_golden(&report, golden(kind));
            assert!(diffs.is_empty(), "{kind}: {diffs:#?}\n{}", report.to_text());
            assert!(report.holds(), "{kind}: {:?}", report.failures);
        }
    }
}
