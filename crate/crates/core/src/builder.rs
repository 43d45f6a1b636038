//! Builder strategies.
//!
//! [`MergeSequence`] joins two blue paths through a fixed bipartite embedding of
//! a small red target; [`BlockMergeBuilder`] chains it over blocks produced by a
//! sub-builder. [`GreedyBuilder`] and [`RandomBuilder`] are load generators for
//! Painter audits.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::BuilderError;
use crate::graph::{Color, GameState, Shape, Vertex};

/// Something that picks Builder's next edge.
pub trait Builder {
    fn next_edge(&mut self, state: &GameState) -> Result<(Vertex, Vertex), BuilderError>;

    fn name(&self) -> String;
}

impl<B: Builder + ?Sized> Builder for Box<B> {
    fn next_edge(&mut self, state: &GameState) -> Result<(Vertex, Vertex), BuilderError> {
        (**self).next_edge(state)
    }

    fn name(&self) -> String {
        (**self).name()
    }
}

/// An embedding of `H` into `K_{a,b}`: edge `(i, j)` joins side-A vertex `i`
/// to side-B vertex `j`. Edges are kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitionPlan {
    pub shape: Shape,
    pub a: usize,
    pub b: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartitionPlan {
    /// Paths alternate sides (odd paths put the extra vertex on side B);
    /// even cycles use `K_{t,t}` with the cycle `A0 B0 A1 B1 ...`.
    pub fn for_shape(shape: Shape) -> Result<BipartitionPlan, BuilderError> {
        let (a, b, mut edges) = match shape {
            Shape::Path(k) if k >= 2 => {
                let seq: Vec<(bool, usize)> = (0..k)
                    .map(|i| {
                        let on_a = if k % 2 == 0 { i % 2 == 0 } else { i % 2 == 1 };
                        (on_a, i / 2)
                    })
                    .collect();
                let edges: Vec<(usize, usize)> = seq
                    .windows(2)
                    .map(|w| if w[0].0 { (w[0].1, w[1].1) } else { (w[1].1, w[0].1) })
                    .collect();
                let a = seq.iter().filter(|x| x.0).count();
                (a, k - a, edges)
            }
            Shape::Cycle(k) if k >= 4 && k % 2 == 0 => {
                let t = k / 2;
                let mut edges: Vec<(usize, usize)> = (0..t).flat_map(|i| [(i, i), ((i + 1) % t, i)]).collect();
                edges.sort();
                edges.dedup();
                (t, t, edges)
            }
            _ => return Err(BuilderError::NotBipartite(shape.to_string())),
        };
        edges.sort();
        Ok(BipartitionPlan { shape, a, b, edges })
    }
}

/// Orients a path so that it starts at its endpoint with the smaller id.
fn orient(mut path: Vec<Vertex>) -> Vec<Vertex> {
    if path.first() > path.last() {
        path.reverse();
    }
    path
}

fn check_blue_path(state: &GameState, path: &[Vertex]) -> Result<(), BuilderError> {
    let distinct: BTreeSet<Vertex> = path.iter().copied().collect();
    let linked = path.windows(2).all(|w| state.color_of(w[0], w[1]) == Some(Color::Blue));
    if path.is_empty() || distinct.len() != path.len() || !linked {
        return Err(BuilderError::NotBluePath(path.to_vec()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergeOutcome {
    InProgress,
    /// A blue edge was played; the merged path, in order.
    BluePath(Vec<Vertex>),
    /// Every embedding edge came back red.
    RedTarget,
}

/// Lazily emits the embedding edges between the first `a` vertices of path A
/// and the first `b` vertices of path B, stopping at the first blue reply.
#[derive(Clone, Debug)]
pub struct MergeSequence {
    plan: BipartitionPlan,
    path_a: Vec<Vertex>,
    path_b: Vec<Vertex>,
    emitted: usize,
}

pub fn merge_paths_sequence(
    state: &GameState,
    plan: &BipartitionPlan,
    path_a: &[Vertex],
    path_b: &[Vertex],
) -> Result<MergeSequence, BuilderError> {
    check_blue_path(state, path_a)?;
    check_blue_path(state, path_b)?;
    let h = plan.shape.vertices();
    for p in [path_a, path_b] {
        if p.len() <= h {
            return Err(BuilderError::TooShort { len: p.len(), min: h });
        }
    }
    if path_a.iter().any(|x| path_b.contains(x)) {
        return Err(BuilderError::NotDisjoint);
    }
    let path_a = orient(path_a.to_vec());
    let path_b = orient(path_b.to_vec());
    for &(i, j) in &plan.edges {
        if state.is_selected(path_a[i], path_b[j]) {
            return Err(BuilderError::EdgeTaken(path_a[i], path_b[j]));
        }
    }
    Ok(MergeSequence { plan: plan.clone(), path_a, path_b, emitted: 0 })
}

impl MergeSequence {
    fn edge(&self, k: usize) -> (Vertex, Vertex) {
        let (i, j) = self.plan.edges[k];
        (self.path_a[i], self.path_b[j])
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    pub fn outcome(&self, state: &GameState) -> MergeOutcome {
        for k in 0..self.emitted {
            let (x, y) = self.edge(k);
            if state.color_of(x, y) == Some(Color::Blue) {
                let (i, j) = self.plan.edges[k];
                let mut path: Vec<Vertex> = self.path_a[i..].iter().rev().copied().collect();
                path.extend_from_slice(&self.path_b[j..]);
                return MergeOutcome::BluePath(path);
            }
        }
        if self.emitted == self.plan.edges.len() {
            MergeOutcome::RedTarget
        } else {
            MergeOutcome::InProgress
        }
    }
}

impl Builder for MergeSequence {
    fn next_edge(&mut self, state: &GameState) -> Result<(Vertex, Vertex), BuilderError> {
        if self.outcome(state) != MergeOutcome::InProgress {
            return Err(BuilderError::Exhausted);
        }
        let e = self.edge(self.emitted);
        self.emitted += 1;
        Ok(e)
    }

    fn name(&self) -> String {
        format!("merge({})", self.plan.shape)
    }
}

/// Number of blocks the block-merge strategy starts: one if `m <= n`.
pub fn merge_block_count(h: Shape, n: usize, m: usize) -> usize {
    if m <= n {
        1
    } else {
        m.div_ceil(n - h.vertices())
    }
}

/// Move bound `blocks * (r(H, P_n) + e(H))`, given the sub-game value.
pub fn block_merge_bound(h: Shape, n: usize, m: usize, subgame_value: usize) -> usize {
    merge_block_count(h, n, m) * (subgame_value + h.edges())
}

/// A sub-board: local vertex `i` is global vertex `map[i]`.
#[derive(Clone, Debug, Default)]
struct Block {
    map: Vec<Vertex>,
}

impl Block {
    fn view(&self, state: &GameState) -> GameState {
        let local = |g: Vertex| self.map.iter().position(|&x| x == g).map(|i| Vertex(i as u32));
        let mut out = GameState::new(state.kind());
        for (e, c) in state.moves() {
            let (x, y) = e.ends();
            if let (Some(a), Some(b)) = (local(x), local(y)) {
                out = out.add_edge(a, b, c).expect("a sub-board of a valid state is valid");
            }
        }
        out
    }

    fn global_id(&mut self, state: &GameState, local: Vertex, taken: &mut u32) -> Vertex {
        let i = local.0 as usize;
        while self.map.len() <= i {
            self.map.push(Vertex(state.fresh().0 + *taken));
            *taken += 1;
        }
        self.map[i]
    }
}

enum Phase {
    Block,
    /// Merging the accumulated path with finished block `k`.
    Merge(MergeSequence, usize),
    Done,
}

/// Builds disjoint blue `P_n` blocks with a sub-builder, then merges them
/// pairwise into one long blue path (or a red `H` appears on the way).
pub struct BlockMergeBuilder<F: FnMut() -> Box<dyn Builder>> {
    plan: BipartitionPlan,
    n: usize,
    blocks: usize,
    make_sub: F,
    sub: Option<Box<dyn Builder>>,
    block: Block,
    finished: Vec<Vec<Vertex>>,
    merged: Vec<Vertex>,
    phase: Phase,
}

impl<F: FnMut() -> Box<dyn Builder>> BlockMergeBuilder<F> {
    pub fn new(h: Shape, n: usize, m: usize, make_sub: F) -> Result<Self, BuilderError> {
        if n <= h.vertices() {
            return Err(BuilderError::TooShort { len: n, min: h.vertices() });
        }
        Ok(BlockMergeBuilder {
            plan: BipartitionPlan::for_shape(h)?,
            n,
            blocks: merge_block_count(h, n, m),
            make_sub,
            sub: None,
            block: Block::default(),
            finished: Vec::new(),
            merged: Vec::new(),
            phase: Phase::Block,
        })
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    /// Blue paths of the finished blocks, in global ids.
    pub fn finished_blocks(&self) -> &[Vec<Vertex>] {
        &self.finished
    }

    fn start_merge(&mut self, state: &GameState, k: usize) -> Result<(), BuilderError> {
        if k == self.finished.len() {
            self.phase = Phase::Done;
            return Ok(());
        }
        let seq = merge_paths_sequence(state, &self.plan, &self.merged, &self.finished[k])?;
        self.phase = Phase::Merge(seq, k);
        Ok(())
    }
}

impl<F: FnMut() -> Box<dyn Builder>> Builder for BlockMergeBuilder<F> {
    fn next_edge(&mut self, state: &GameState) -> Result<(Vertex, Vertex), BuilderError> {
        loop {
            match &mut self.phase {
                Phase::Block => {
                    let view = self.block.view(state);
                    if view.has_path(Color::Blue, self.n) {
                        let local = view.longest_path_vertices(Color::Blue);
                        self.finished.push(local.iter().map(|v| self.block.map[v.0 as usize]).collect());
                        self.sub = None;
                        self.block = Block::default();
                        if self.finished.len() == self.blocks {
                            self.merged = self.finished[0].clone();
                            self.start_merge(state, 1)?;
                        }
                        continue;
                    }
                    let sub = self.sub.get_or_insert_with(&mut self.make_sub);
                    let (x, y) = sub.next_edge(&view).map_err(|e| BuilderError::Subgame(e.to_string()))?;
                    let mut taken = 0;
                    let gx = self.block.global_id(state, x, &mut taken);
                    let gy = self.block.global_id(state, y, &mut taken);
                    return Ok((gx, gy));
                }
                Phase::Merge(seq, k) => match seq.outcome(state) {
                    MergeOutcome::InProgress => return seq.next_edge(state),
                    MergeOutcome::BluePath(p) => {
                        let next = *k + 1;
                        self.merged = p;
                        self.start_merge(state, next)?;
                    }
                    MergeOutcome::RedTarget => self.phase = Phase::Done,
                },
                Phase::Done => return Err(BuilderError::Exhausted),
            }
        }
    }

    fn name(&self) -> String {
        format!("block-merge({},n={})", self.plan.shape, self.n)
    }
}

/// Extends the longest blue path; with no blue edges, extends a longest red
/// path; on an empty board, plays a fresh pair.
///
/// An extension goes to a touched vertex off the path with blue degree at most 1
/// when one exists, else to a fresh vertex. Unseeded, ties go to the smallest id;
/// seeded, ties are broken at random.
pub struct GreedyBuilder {
    rng: Option<ChaCha8Rng>,
}

impl GreedyBuilder {
    pub fn new() -> GreedyBuilder {
        GreedyBuilder { rng: None }
    }

    pub fn seeded(seed: u64) -> GreedyBuilder {
        GreedyBuilder { rng: Some(ChaCha8Rng::seed_from_u64(seed)) }
    }

    fn pick<T: Copy>(&mut self, items: &[T]) -> Option<T> {
        match &mut self.rng {
            None => items.first().copied(),
            Some(r) => items.choose(r).copied(),
        }
    }
}

impl Default for GreedyBuilder {
    fn default() -> Self {
        GreedyBuilder::new()
    }
}

/// Deterministic greedy proposal for `state`.
pub fn greedy_blue_builder(state: &GameState) -> (Vertex, Vertex) {
    GreedyBuilder::new().propose(state)
}

impl GreedyBuilder {
    fn propose(&mut self, state: &GameState) -> (Vertex, Vertex) {
        let blue = state.longest_path_vertices(Color::Blue);
        if blue.len() >= 2 {
            let mut ends = [blue[0], blue[blue.len() - 1]];
            ends.sort();
            let on: BTreeSet<Vertex> = blue.iter().copied().collect();
            let mut options = Vec::new();
            for &end in &ends {
                for w in state.vertices() {
                    if !on.contains(&w) && state.blue_degree(w) <= 1 && !state.is_selected(end, w) {
                        options.push((end, w));
                    }
                }
            }
            if let Some(e) = self.pick(&options) {
                return e;
            }
            let end = self.pick(&ends).expect("two endpoints");
            return (end, state.fresh());
        }
        let red = state.longest_path_vertices(Color::Red);
        if red.len() >= 2 {
            let mut ends = [red[0], red[red.len() - 1]];
            ends.sort();
            let end = self.pick(&ends).expect("two endpoints");
            return (end, state.fresh());
        }
        state.fresh_pair()
    }
}

impl Builder for GreedyBuilder {
    fn next_edge(&mut self, state: &GameState) -> Result<(Vertex, Vertex), BuilderError> {
        Ok(self.propose(state))
    }

    fn name(&self) -> String {
        "greedy".into()
    }
}

/// Pairs a random Builder may choose: all unselected touched pairs, one
/// fresh partner for each touched vertex, and one fresh pair.
pub fn eligible_pairs(state: &GameState) -> Vec<(Vertex, Vertex)> {
    let touched: Vec<Vertex> = state.vertices().collect();
    let fresh = state.fresh();
    let mut out = Vec::new();
    for (i, &x) in touched.iter().enumerate() {
        for &y in &touched[i + 1..] {
            if !state.is_selected(x, y) {
                out.push((x, y));
            }
        }
        out.push((x, fresh));
    }
    out.push(state.fresh_pair());
    out
}

/// A uniform draw from [`eligible_pairs`].
pub fn random_edge<R: Rng>(state: &GameState, rng: &mut R) -> (Vertex, Vertex) {
    let pairs = eligible_pairs(state);
    pairs[rng.gen_range(0..pairs.len())]
}

/// Same state and seed always give the same edge.
pub fn random_builder(state: &GameState, seed: u64) -> (Vertex, Vertex) {
    random_edge(state, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub struct RandomBuilder {
    rng: ChaCha8Rng,
}

impl RandomBuilder {
    pub fn new(seed: u64) -> RandomBuilder {
        RandomBuilder { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Builder for RandomBuilder {
    fn next_edge(&mut self, state: &GameState) -> Result<(Vertex, Vertex), BuilderError> {
        Ok(random_edge(state, &mut self.rng))
    }

    fn name(&self) -> String {
        "random".into()
    }
}

/// Replays a fixed list of edges.
pub struct ScriptedBuilder {
    edges: Vec<(Vertex, Vertex)>,
    at: usize,
}

impl ScriptedBuilder {
    pub fn new(edges: Vec<(Vertex, Vertex)>) -> ScriptedBuilder {
        ScriptedBuilder { edges, at: 0 }
    }
}

impl Builder for ScriptedBuilder {
    fn next_edge(&mut self, _state: &GameState) -> Result<(Vertex, Vertex), BuilderError> {
        let e = *self.edges.get(self.at).ok_or(BuilderError::Exhausted)?;
        self.at += 1;
        Ok(e)
    }

    fn name(&self) -> String {
        "scripted".into()
    }
}
