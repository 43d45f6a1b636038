//! Compact boards and isomorphism-invariant keys.

use std::collections::BTreeMap;

use crate::graph::{Color, GameState, Shape, Vertex};

/// Largest number of vertex ids a board can hold.
pub const MAXV: usize = 32;

/// Two-colored graph on ids `0..n` stored as neighbour bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    n: usize,
    red: [u32; MAXV],
    blue: [u32; MAXV],
}

/// Isomorphism-invariant encoding of a board's non-isolated part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u8>);

impl Default for Board {
    fn default() -> Self {
        Board::new()
    }
}

impl Board {
    pub fn new() -> Board {
        Board { n: 0, red: [0; MAXV], blue: [0; MAXV] }
    }

    /// Relabels the touched vertices of `state` to `0..n`, in id order.
    pub fn from_state(state: &GameState) -> (Board, Vec<Vertex>) {
        let mut ids: Vec<Vertex> = state
            .moves()
            .flat_map(|(e, _)| {
                let (a, b) = e.ends();
                [a, b]
            })
            .collect();
        ids.sort();
        ids.dedup();
        assert!(ids.len() <= MAXV, "board holds at most {MAXV} vertices");
        let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut b = Board::new();
        b.n = ids.len();
        for (e, c) in state.moves() {
            let (x, y) = e.ends();
            b.set(index[&x], index[&y], c);
        }
        (b, ids)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn mask(&self, v: usize, c: Color) -> u32 {
        match c {
            Color::Red => self.red[v],
            Color::Blue => self.blue[v],
        }
    }

    pub fn color(&self, a: usize, b: usize) -> Option<Color> {
        if self.red[a] >> b & 1 == 1 {
            Some(Color::Red)
        } else if self.blue[a] >> b & 1 == 1 {
            Some(Color::Blue)
        } else {
            None
        }
    }

    pub fn touched(&self, v: usize) -> bool {
        (self.red[v] | self.blue[v]) != 0
    }

    /// Colors `ab`, growing the id range as needed.
    pub fn set(&mut self, a: usize, b: usize, c: Color) {
        assert!(a != b && a < MAXV && b < MAXV);
        let arr = match c {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        arr[a] |= 1 << b;
        arr[b] |= 1 << a;
        self.n = self.n.max(a + 1).max(b + 1);
    }

    pub fn with(&self, a: usize, b: usize, c: Color) -> Board {
        let mut out = self.clone();
        out.set(a, b, c);
        out
    }

    /// Whether `shape` exists in color `c` anywhere on the board.
    pub fn contains(&self, shape: Shape, c: Color) -> bool {
        (0..self.n).any(|a| {
            let mut m = self.mask(a, c);
            while m != 0 {
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                if a < b && self.contains_through(shape, c, a, b) {
                    return true;
                }
            }
            false
        })
    }

    /// Whether a copy of `shape` in color `c` uses the edge `ab` (which must be colored `c`).
    pub fn contains_through(&self, shape: Shape, c: Color, a: usize, b: usize) -> bool {
        match shape {
            Shape::Path(k) => {
                if k <= 2 {
                    return true;
                }
                self.side(c, a, b, 1 << a | 1 << b, 0, k - 2)
            }
            Shape::Cycle(k) => self.close(c, a, b, 1 << a | 1 << b, 1, k),
        }
    }

    /// Extends from `v` by `got` vertices so far, then lets `b`'s side finish.
    fn side(&self, c: Color, v: usize, b: usize, used: u32, got: usize, need: usize) -> bool {
        if self.ext(c, b, used, need - got) {
            return true;
        }
        if got == need {
            return true;
        }
        let mut m = self.mask(v, c) & !used;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.side(c, w, b, used | 1 << w, got + 1, need) {
                return true;
            }
        }
        false
    }

    fn ext(&self, c: Color, v: usize, used: u32, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        let mut m = self.mask(v, c) & !used;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.ext(c, w, used | 1 << w, need - 1) {
                return true;
            }
        }
        false
    }

    /// Path from `v` back to `b`; `count` vertices placed besides `b`.
    fn close(&self, c: Color, v: usize, b: usize, used: u32, count: usize, k: usize) -> bool {
        if count == k - 1 {
            return self.mask(v, c) >> b & 1 == 1 && count >= 2;
        }
        let mut m = self.mask(v, c) & !used;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.close(c, w, b, used | 1 << w, count + 1, k) {
                return true;
            }
        }
        false
    }

    /// Exact bytes of the board, for label-sensitive tables.
    pub fn raw_key(&self) -> Vec<u8> {
        let mut out = vec![self.n as u8];
        for v in 0..self.n {
            out.extend_from_slice(&self.red[v].to_le_bytes());
            out.extend_from_slice(&self.blue[v].to_le_bytes());
        }
        out
    }

    fn code(&self, a: usize, b: usize) -> u8 {
        match self.color(a, b) {
            None => 0,
            Some(Color::Red) => 1,
            Some(Color::Blue) => 2,
        }
    }
}

/// Canonical key: the sorted certificates of the connected components.
pub fn canonical_form(b: &Board) -> CanonicalKey {
    let mut seen = 0u32;
    let mut certs = Vec::new();
    for s in 0..b.n {
        if seen >> s & 1 == 1 || !b.touched(s) {
            continue;
        }
        let mut comp = 1u32 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = (b.red[v] | b.blue[v]) & !comp;
            comp |= nb;
            frontier |= nb;
        }
        seen |= comp;
        let vs: Vec<usize> = (0..b.n).filter(|&v| comp >> v & 1 == 1).collect();
        certs.push(component_cert(b, &vs));
    }
    certs.sort();
    CanonicalKey(certs.concat())
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    sigs.iter().map(|s| sorted.binary_search(s).unwrap() as u32).collect()
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Local {
    m: usize,
    code: Vec<u8>,
}

impl Local {
    fn at(&self, i: usize, j: usize) -> u8 {
        self.code[i * self.m + j]
    }

    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut k = distinct(&colors);
        loop {
            let sigs: Vec<(u32, Vec<(u32, u8)>)> = (0..self.m)
                .map(|i| {
                    let mut nb: Vec<(u32, u8)> =
                        (0..self.m).filter(|&j| self.at(i, j) != 0).map(|j| (colors[j], self.at(i, j))).collect();
                    nb.sort_unstable();
                    (colors[i], nb)
                })
                .collect();
            colors = rank(&sigs);
            let k2 = distinct(&colors);
            if k2 == k {
                return colors;
            }
            k = k2;
        }
    }

    fn search(&self, colors: Vec<u32>, best: &mut Option<Vec<u8>>) {
        if distinct(&colors) == self.m {
            let mut order: Vec<usize> = (0..self.m).collect();
            order.sort_by_key(|&i| colors[i]);
            let mut cert = Vec::with_capacity(1 + self.m * self.m / 2);
            cert.push(self.m as u8);
            for x in 0..self.m {
                for y in x + 1..self.m {
                    cert.push(self.at(order[x], order[y]));
                }
            }
            if best.as_ref().is_none_or(|b| cert < *b) {
                *best = Some(cert);
            }
            return;
        }
        // First non-singleton cell, by color value.
        let mut counts = vec![0usize; self.m];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = (0..self.m).find(|&c| counts[c] > 1).unwrap() as u32;
        for v in (0..self.m).filter(|&i| colors[i] == target) {
            let ind: Vec<u32> = colors.iter().enumerate().map(|(i, &c)| c * 2 + u32::from(i != v)).collect();
            self.search(self.refine(rank(&ind)), best);
        }
    }
}

fn component_cert(b: &Board, vs: &[usize]) -> Vec<u8> {
    let m = vs.len();
    let mut code = vec![0u8; m * m];
    for i in 0..m {
        for j in 0..m {
            if i != j {
                code[i * m + j] = b.code(vs[i], vs[j]);
            }
        }
    }
    let local = Local { m, code };
    let degs: Vec<(u32, u32)> = vs
        .iter()
        .map(|&v| (b.red[v].count_ones(), b.blue[v].count_ones()))
        .collect();
    let start = local.refine(rank(&degs));
    let mut best = None;
    local.search(start, &mut best);
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(edges: &[(usize, usize, Color)]) -> Board {
        let mut b = Board::new();
        for &(x, y, c) in edges {
            b.set(x, y, c);
        }
        b
    }

    #[test]
    fn relabelings_share_a_key() {
        let a = board(&[(0, 1, Color::Red), (1, 2, Color::Blue), (2, 3, Color::Blue), (5, 6, Color::Red)]);
        let b = board(&[(4, 2, Color::Red), (2, 0, Color::Blue), (0, 6, Color::Blue), (1, 3, Color::Red)]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn colors_and_shapes_separate_keys() {
        let red = board(&[(0, 1, Color::Red)]);
        let blue = board(&[(0, 1, Color::Blue)]);
        assert_ne!(canonical_form(&red), canonical_form(&blue));
        let p3 = board(&[(0, 1, Color::Red), (1, 2, Color::Red)]);
        let two = board(&[(0, 1, Color::Red), (2, 3, Color::Red)]);
        assert_ne!(canonical_form(&p3), canonical_form(&two));
    }

    #[test]
    fn paths_and_cycles_through_an_edge() {
        let b = board(&[(0, 1, Color::Blue), (1, 2, Color::Blue), (2, 3, Color::Blue), (3, 0, Color::Blue)]);
        assert!(b.contains_through(Shape::Path(4), Color::Blue, 0, 1));
        assert!(!b.contains_through(Shape::Path(5), Color::Blue, 0, 1));
        assert!(b.contains_through(Shape::Cycle(4), Color::Blue, 1, 2));
        assert!(!b.contains_through(Shape::Cycle(3), Color::Blue, 1, 2));
        assert!(!b.contains(Shape::Path(2), Color::Red));
        let t = board(&[(0, 1, Color::Red), (1, 2, Color::Red), (2, 0, Color::Red)]);
        assert!(t.contains(Shape::Cycle(3), Color::Red));
        assert!(t.contains_through(Shape::Path(3), Color::Red, 0, 2));
    }
}
