use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use ramsey_core::arena::{
    audit_transcript, blue_path_round_bound, check_termination, play, simulate_many, BuilderKind,
    MoveRecord, Outcome, StrategyPainter, TargetSpec, Transcript,
};
use ramsey_core::graph::{GameKind, GameState, Vertex};
use ramsey_core::lpsynth::{check_feasibility, generate_constraints, hill_climb};
use ramsey_core::potential::{extract_bound, potential, PotentialTable};
use ramsey_core::rational::{ceil_q, parse_q, qi, Q};
use ramsey_core::solver::{online_ramsey_number, SolveConfig, SolveValue};
use ramsey_core::strategy::{decide, StrategyTable};
use ramsey_core::verify::{compare_golden, golden, verify_jump_bound, verify_monotone_reduction};

const OK: u8 = 0;
const MISMATCH: u8 = 1;
const BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "ramsey-arena", version, about = "Builder and Painter on an unbounded board")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every move configuration and check the potential table.
    Verify {
        #[arg(long)]
        game: GameKind,
        /// Potential table file (defaults to the builtin one).
        #[arg(long)]
        table: Option<PathBuf>,
        /// Strategy file (defaults to the builtin one).
        #[arg(long)]
        strategy: Option<PathBuf>,
    },
    /// Play games between a scripted Builder and the builtin Painter.
    Simulate {
        #[arg(long)]
        game: GameKind,
        #[arg(long, default_value = "greedy")]
        builder: BuilderKind,
        #[arg(long, default_value_t = 500)]
        rounds: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Stop once a blue path on this many vertices appears.
        #[arg(long)]
        blue_n: Option<usize>,
        /// Run this many seeds (starting at --seed) and print one line each.
        #[arg(long)]
        batch: Option<u64>,
        /// Transcript file for single runs.
        #[arg(long, default_value = "transcript.txt")]
        out: PathBuf,
    },
    /// Exact value of the red P_k versus blue P_n game.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        max_rounds: usize,
        /// Search every vertex id instead of fresh-vertex representatives.
        #[arg(long)]
        unrestricted: bool,
    },
    /// Solve the table program for a strategy and hill-climb over strategies.
    Synth {
        #[arg(long)]
        game: GameKind,
        #[arg(long)]
        jump: Option<String>,
        #[arg(long, default_value_t = 20)]
        iters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Starting strategy file (defaults to the builtin one).
        #[arg(long)]
        strategy: Option<PathBuf>,
        /// Where to write the resulting table.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the initial linear program.
        #[arg(long)]
        dump_lp: Option<PathBuf>,
    },
    /// Lower bounds on the round count from the potential tables.
    Bounds {
        /// Games to report, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [GameKind::P7, GameKind::P8, GameKind::P9])]
        game: Vec<GameKind>,
        /// Blue path length: prints ceil(alpha n + 2 beta).
        #[arg(long)]
        n: Option<usize>,
        /// Vertex count of a blue graph: prints alpha v + beta v1.
        #[arg(long)]
        v: Option<usize>,
        /// Number of degree-one vertices, with --v.
        #[arg(long, default_value_t = 0)]
        v1: usize,
    },
    /// Play Builder by hand against the builtin Painter.
    Play {
        #[arg(long)]
        game: GameKind,
        #[arg(long)]
        blue_n: Option<usize>,
        #[arg(long, default_value = "transcript.txt")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("RAMSEY_ARENA_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(MISMATCH)
        }
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Verify { game, table, strategy } => verify(game, table, strategy),
        Command::Simulate { game, builder, rounds, seed, blue_n, batch, out } => {
            simulate(game, builder, rounds, seed, blue_n, batch, out)
        }
        Command::Solve { k, n, max_rounds, unrestricted } => {
            let mut cfg = SolveConfig::paths(k.max(2), n.max(2), max_rounds.max(1));
            if unrestricted {
                cfg = cfg.unrestricted();
            }
            let report = online_ramsey_number(&cfg);
            println!("{}", report.value);
            Ok(if report.value == SolveValue::ExceedsBudget { BUDGET } else { OK })
        }
        Command::Synth { game, jump, iters, seed, strategy, out, dump_lp } => {
            synth(game, jump, iters, seed, strategy, out, dump_lp)
        }
        Command::Bounds { game, n, v, v1 } => bounds(&game, n, v, v1),
        Command::Play { game, blue_n, out } => play_interactive(game, blue_n, out),
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn verify(game: GameKind, table: Option<PathBuf>, strategy: Option<PathBuf>) -> Result<u8> {
    let custom = table.is_some() || strategy.is_some();
    let table = match table {
        Some(p) => PotentialTable::from_text(&read(&p)?)?,
        None => PotentialTable::builtin(game),
    };
    let strategy = match strategy {
        Some(p) => StrategyTable::from_text(&read(&p)?)?,
        None => StrategyTable::builtin(game),
    };
    let report = verify_jump_bound(&strategy, &table);
    let text = report.to_text();
    let (body, last) = text.trim_end().rsplit_once('\n').unwrap_or(("", text.trim_end()));
    if !body.is_empty() {
        println!("{body}");
    }
    let mut problems: Vec<String> = report.failures.clone();
    if !custom {
        problems.extend(compare_golden(&report, golden(game)));
    }
    let lp = generate_constraints(&strategy, table.jump())?;
    problems.extend(check_feasibility(&table, &lp).into_iter().map(|v| format!("infeasible: {}", v.origin)));
    problems.extend(
        verify_monotone_reduction(&table)
            .into_iter()
            .map(|m| format!("monotone: {}->{} at {}<{}", m.from, m.to, m.low, m.high)),
    );
    if !report.holds() {
        problems.push(format!("overall exceeds jump {}", table.jump()));
    }
    for p in &problems {
        println!("# {p}");
    }
    if problems.is_empty() {
        println!("{last} OK");
        Ok(OK)
    } else {
        println!("{last} MISMATCH");
        Ok(MISMATCH)
    }
}

fn fmt_round(r: Option<usize>) -> String {
    r.map_or_else(|| "never".to_string(), |r| r.to_string())
}

fn only_red(kind: GameKind, rounds: usize) -> TargetSpec {
    // A blue path longer than the round budget never appears.
    TargetSpec::game(kind, rounds + 2)
}

fn simulate(
    game: GameKind,
    builder: BuilderKind,
    rounds: usize,
    seed: Option<u64>,
    blue_n: Option<usize>,
    batch: Option<u64>,
    out: PathBuf,
) -> Result<u8> {
    if rounds == 0 {
        anyhow::bail!("--rounds must be positive");
    }
    let targets = blue_n.map_or_else(|| only_red(game, rounds), |n| TargetSpec::game(game, n));
    let bound = blue_n.map(|n| blue_path_round_bound(game, n));
    if let Some(count) = batch {
        let start = seed.unwrap_or(0);
        let seeds: Vec<u64> = (start..start + count).collect();
        let runs = simulate_many(game, builder, &seeds, &targets, rounds)?;
        let mut bad = 0;
        for r in &runs {
            let early = matches!((bound.as_ref(), r.blue_round), (Some(b), Some(br)) if qi(br as i64) < *b);
            let max = r.max_delta.as_ref().map_or_else(|| "na".into(), ToString::to_string);
            println!(
                "seed={} rounds={} outcome={} blue_round={} max_delta={max} violations={}{}",
                r.seed,
                r.rounds,
                r.outcome,
                fmt_round(r.blue_round),
                r.violations,
                if early { " EARLY" } else { "" }
            );
            if r.violations > 0 || early || r.outcome == Outcome::RedTarget {
                bad += 1;
            }
        }
        println!("runs={} failing={bad}", runs.len());
        return Ok(if bad == 0 { OK } else { MISMATCH });
    }
    let mut b = builder.make(seed);
    let mut painter = StrategyPainter::builtin(game);
    let t = play(b.as_mut(), &mut painter, game, &targets, rounds)?;
    fs::write(&out, t.to_text()).with_context(|| format!("writing {}", out.display()))?;
    let audit = audit_transcript(&t, &PotentialTable::builtin(game))?;
    let max = audit.deltas.iter().flatten().max().map_or_else(|| "na".into(), ToString::to_string);
    println!("rounds={} outcome={}", t.moves.len(), t.outcome);
    println!("max_delta={max} violations={}", audit.violations.len());
    match (blue_n, &bound) {
        (Some(n), Some(b)) => println!("blue P{n} first at round {} (bound {b})", fmt_round(t.blue_round())),
        _ => println!("blue target: none"),
    }
    println!("transcript={}", out.display());
    let early = matches!((bound.as_ref(), t.blue_round()), (Some(b), Some(r)) if qi(r as i64) < *b);
    Ok(if audit.violations.is_empty() && !early && t.outcome != Outcome::RedTarget { OK } else { MISMATCH })
}

fn synth(
    game: GameKind,
    jump: Option<String>,
    iters: usize,
    seed: u64,
    strategy: Option<PathBuf>,
    out: Option<PathBuf>,
    dump_lp: Option<PathBuf>,
) -> Result<u8> {
    let jump: Q = match jump {
        Some(s) => parse_q(&s)?,
        None => PotentialTable::builtin(game).jump().clone(),
    };
    let start = match strategy {
        Some(p) => StrategyTable::from_text(&read(&p)?)?,
        None => StrategyTable::builtin(game),
    };
    if let Some(p) = dump_lp {
        let lp = generate_constraints(&start, &jump)?;
        fs::write(&p, lp.to_text()).with_context(|| format!("writing {}", p.display()))?;
    }
    let r = hill_climb(&start, &jump, iters, seed)?;
    let Some(obj) = r.objective else {
        println!("objective=infeasible solves={}", r.solves);
        return Ok(MISMATCH);
    };
    let table = r.table.expect("feasible climbs carry a table");
    let b = extract_bound(&table);
    println!("objective={obj} solves={} accepted={}", r.solves, r.accepted);
    println!("alpha={} beta={}", b.alpha, b.beta);
    match out {
        Some(p) => {
            fs::write(&p, table.to_text()).with_context(|| format!("writing {}", p.display()))?;
            println!("table={}", p.display());
        }
        None => print!("{}", table.to_text()),
    }
    Ok(OK)
}

fn bounds(games: &[GameKind], n: Option<usize>, v: Option<usize>, v1: usize) -> Result<u8> {
    for &g in games {
        let b = extract_bound(&PotentialTable::builtin(g));
        let value = match (n, v) {
            (Some(n), _) => ceil_q(&b.evaluate(n, 2)).to_string(),
            (None, Some(v)) => b.evaluate(v, v1).to_string(),
            (None, None) => String::new(),
        };
        if value.is_empty() {
            println!("{g} alpha={} beta={}", b.alpha, b.beta);
        } else if games.len() == 1 {
            println!("{value}");
        } else {
            println!("{g} {value}");
        }
    }
    Ok(OK)
}

/// Names typed by the player, mapped to board vertices in order of appearance.
struct Names {
    ids: BTreeMap<String, Vertex>,
    next: u32,
}

impl Names {
    fn get(&mut self, s: &str) -> Vertex {
        if let Some(v) = self.ids.get(s) {
            return *v;
        }
        let v = Vertex(self.next);
        self.next += 1;
        self.ids.insert(s.to_string(), v);
        v
    }

    fn name(&self, v: Vertex) -> String {
        self.ids.iter().find(|(_, &x)| x == v).map_or_else(|| v.to_string(), |(k, _)| k.clone())
    }
}

fn describe(state: &GameState, names: &Names) -> String {
    let mut parts = Vec::new();
    if let Ok(types) = state.classify() {
        for (v, t) in types {
            parts.push(format!("{}={t}", names.name(v)));
        }
    }
    let caps: Vec<String> = state.capitals().iter().map(ToString::to_string).collect();
    format!("types: {}\ncapitals: [{}]", parts.join(" "), caps.join(", "))
}

fn play_interactive(game: GameKind, blue_n: Option<usize>, out: PathBuf) -> Result<u8> {
    let table = PotentialTable::builtin(game);
    let strategy = StrategyTable::builtin(game);
    let targets = blue_n.map_or_else(|| only_red(game, 10_000), |n| TargetSpec::game(game, n));
    let mut names = Names { ids: BTreeMap::new(), next: 0 };
    let mut state = GameState::new(game);
    let mut moves: Vec<MoveRecord> = Vec::new();
    let mut outcome = Outcome::BudgetExhausted;
    let stdin = io::stdin();
    let mut stdout = io::stdout();
    println!("game {game}: enter two vertex names per line, `quit` to stop");
    let mut lines = stdin.lock().lines();
    loop {
        print!("> ");
        stdout.flush()?;
        let Some(line) = lines.next() else { break };
        let line = line?;
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            [] => continue,
            ["quit"] | ["exit"] => break,
            [a, b] if a != b => {
                let (u, v) = (names.get(a), names.get(b));
                if state.is_selected(u, v) {
                    println!("edge {a} {b} is already colored");
                    continue;
                }
                let d = match decide(&state, &strategy, u, v) {
                    Ok(d) => d,
                    Err(e) => {
                        println!("painter has no answer: {e}");
                        continue;
                    }
                };
                let f_before = potential(&state, &table).ok();
                let mut next = state.add_edge(u, v, d.color)?;
                if let Some(c) = d.capital {
                    next = next.with_capital(c)?;
                }
                let f_after = potential(&next, &table).ok();
                let rec = MoveRecord { round: moves.len() + 1, u, v, color: d.color, capital: d.capital, f_before, f_after };
                let show = |f: &Option<_>| f.as_ref().map_or_else(|| "na".to_string(), |x: &ramsey_core::ExtRational| x.to_string());
                let delta = rec.delta().map_or_else(|| "na".into(), |x| x.to_string());
                println!("round {}: {a} {b} -> {} (case {})", rec.round, d.color, d.label);
                println!("{}", describe(&next, &names));
                println!("f={} delta={delta}", show(&rec.f_after));
                moves.push(rec);
                state = next;
                if let Some(o) = check_termination(&state, &targets)? {
                    println!("game over: {o}");
                    outcome = o;
                    break;
                }
            }
            _ => println!("enter two distinct vertex names, or `quit`"),
        }
    }
    let t = Transcript { kind: game, targets, initial: Vec::new(), moves, outcome };
    fs::write(&out, t.to_text()).with_context(|| format!("writing {}", out.display()))?;
    println!("transcript={}", out.display());
    Ok(OK)
}
