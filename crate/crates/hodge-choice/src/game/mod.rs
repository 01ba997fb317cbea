//! Game representations and structural transforms.
//!
//! An abstract dominance game is a finite set of alternatives together with
//! an irreflexive relation "i dominates j". Two views are provided:
//!
//! * [`AbstractGame`] — the relational view, a set of ordered pairs;
//! * [`FormGame`] — the matrix view, a symmetric 0/1 base space `W` plus a
//!   skew `{-1, 0, 1}` dominance-difference form `R` supported on its edges.
//!
//! The views determine each other exactly: `R(i, j) = -1` when `i` beats `j`
//! outright, `+1` for the converse, `0` on an arranged edge when the pair is
//! a mutual dominance, and `W(i, j) = 0` when no round was arranged at all.
//! Conversions round-trip bit-exactly.

pub mod base;
mod validate;

pub use base::BaseSpace;
pub use validate::{validate, Violation};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("matrices differ in size (W has {w_rows} rows, R has {r_rows})")]
    DimensionMismatch { w_rows: usize, r_rows: usize },
    #[error("invalid matrix pair: {}", format_violations(.0))]
    InvalidForm(Vec<Violation>),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("label count {labels} does not match size {n}")]
    LabelCount { labels: usize, n: usize },
    #[error("reflexive pair ({index},{index}) not allowed")]
    ReflexivePair { index: usize },
    #[error("duplicate dominance ({0},{1})")]
    DuplicateDominance(usize, usize),
    #[error("index {index} out of range for {n} alternatives")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("expected size {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("map is not a bijection on 0..{0}")]
    NotBijective(usize),
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),
    #[error("cycle edge ({from},{to}) is not a dominance of the game")]
    CycleNotInGame { from: usize, to: usize },
    #[error("no dominance ({from},{to}) in the game")]
    NoSuchDominance { from: usize, to: usize },
    #[error("pair ({i},{j}) is not a mutual dominance")]
    NotMutual { i: usize, j: usize },
    #[error("completeness undefined for fewer than 2 alternatives")]
    Degenerate,
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Exact fraction used for completeness values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// A game in relational form: labelled alternatives plus a set of ordered
/// dominance pairs `(i, j)` meaning "i dominates j".
///
/// All semantics are index-based; labels are presentation only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGame {
    labels: Vec<String>,
    dominances: BTreeSet<(usize, usize)>,
}

impl AbstractGame {
    pub fn new(
        labels: Vec<String>,
        dominances: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GameError> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label) {
                return Err(GameError::DuplicateLabel(label.clone()));
            }
        }
        let mut set = BTreeSet::new();
        for (i, j) in dominances {
            if i == j {
                return Err(GameError::ReflexivePair { index: i });
            }
            if i >= n || j >= n {
                return Err(GameError::IndexOutOfRange { index: i.max(j), n });
            }
            if !set.insert((i, j)) {
                return Err(GameError::DuplicateDominance(i, j));
            }
        }
        Ok(AbstractGame {
            labels,
            dominances: set,
        })
    }

    /// Builds a game with default labels `x1..xn`.
    pub fn with_default_labels(
        n: usize,
        dominances: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GameError> {
        Self::new(default_labels(n), dominances)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Dominance pairs in lexicographic order.
    pub fn dominances(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dominances.iter().copied()
    }

    pub fn dominance_count(&self) -> usize {
        self.dominances.len()
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        self.dominances.contains(&(i, j))
    }

    /// Both `(i, j)` and `(j, i)` present.
    pub fn is_mutual(&self, i: usize, j: usize) -> bool {
        self.has(i, j) && self.has(j, i)
    }

    /// The matrix view of this game.
    pub fn to_form(&self) -> FormGame {
        let base = Arc::new(
            BaseSpace::from_edges(self.n(), self.dominances.iter().copied())
                .expect("game invariants guarantee valid edges"),
        );
        let diff = base
            .edges()
            .iter()
            .map(|&(i, j)| match (self.has(i, j), self.has(j, i)) {
                (true, true) => 0i8,
                (true, false) => -1,
                (false, true) => 1,
                (false, false) => unreachable!("edge without dominance"),
            })
            .collect();
        FormGame {
            labels: self.labels.clone(),
            base,
            diff,
        }
    }

    /// Relabels dominances through a permutation: pair `(i, j)` becomes
    /// `(p(i), p(j))`. Labels stay attached to their positions.
    pub fn permute(&self, p: &Permutation) -> Result<AbstractGame, GameError> {
        if p.n() != self.n() {
            return Err(GameError::SizeMismatch {
                expected: self.n(),
                got: p.n(),
            });
        }
        let dominances = self
            .dominances
            .iter()
            .map(|&(i, j)| (p.apply(i), p.apply(j)))
            .collect();
        Ok(AbstractGame {
            labels: self.labels.clone(),
            dominances,
        })
    }

    /// Replaces a dominance cycle by its reversal, as sets:
    /// the result is `(R \ C) ∪ Cᵀ`.
    pub fn reverse_cycle(&self, c: &Cycle) -> Result<AbstractGame, GameError> {
        for &(i, j) in c.edges() {
            if !self.has(i, j) {
                return Err(GameError::CycleNotInGame { from: i, to: j });
            }
        }
        let mut dominances = self.dominances.clone();
        for &(i, j) in c.edges() {
            dominances.remove(&(i, j));
        }
        for &(i, j) in c.reversed().edges() {
            dominances.insert((i, j));
        }
        Ok(AbstractGame {
            labels: self.labels.clone(),
            dominances,
        })
    }

    /// Turns the dominance `j -> i` around: the result lacks `(j, i)` and
    /// contains `(i, j)`. The arranged edge is untouched.
    pub fn flip_dominance(&self, j: usize, i: usize) -> Result<AbstractGame, GameError> {
        if !self.has(j, i) {
            return Err(GameError::NoSuchDominance { from: j, to: i });
        }
        let mut dominances = self.dominances.clone();
        dominances.remove(&(j, i));
        dominances.insert((i, j));
        Ok(AbstractGame {
            labels: self.labels.clone(),
            dominances,
        })
    }

    /// Replaces the mutual dominance between `i` and `j` by an empty round.
    pub fn remove_mutual(&self, i: usize, j: usize) -> Result<AbstractGame, GameError> {
        if !self.is_mutual(i, j) {
            return Err(GameError::NotMutual { i, j });
        }
        let mut dominances = self.dominances.clone();
        dominances.remove(&(i, j));
        dominances.remove(&(j, i));
        Ok(AbstractGame {
            labels: self.labels.clone(),
            dominances,
        })
    }

    /// Searches for a dominance cycle. With `asymmetric_only` set, only
    /// dominances whose converse is absent may appear in the cycle (so no
    /// cycle edge touches a mutual dominance).
    ///
    /// Returns the first cycle found by a depth-first search over vertices
    /// and sorted neighbor lists, or `None` when the (restricted) digraph is
    /// acyclic. Deterministic for a fixed game.
    pub fn find_cycle(&self, asymmetric_only: bool) -> Option<Cycle> {
        let n = self.n();
        let mut succ = vec![Vec::new(); n];
        for &(i, j) in &self.dominances {
            if asymmetric_only && self.has(j, i) {
                continue;
            }
            succ[i].push(j);
        }

        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; n];
        let mut path: Vec<usize> = Vec::new();
        // (vertex, next successor position) DFS stack
        let mut stack: Vec<(usize, usize)> = Vec::new();

        for start in 0..n {
            if color[start] != WHITE {
                continue;
            }
            color[start] = GRAY;
            path.push(start);
            stack.push((start, 0));
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < succ[v].len() {
                    let w = succ[v][*next];
                    *next += 1;
                    match color[w] {
                        WHITE => {
                            color[w] = GRAY;
                            path.push(w);
                            stack.push((w, 0));
                        }
                        GRAY => {
                            // back edge v -> w closes a cycle along the path
                            let pos = path.iter().position(|&u| u == w).unwrap();
                            let mut edges: Vec<(usize, usize)> =
                                path[pos..].windows(2).map(|p| (p[0], p[1])).collect();
                            edges.push((v, w));
                            return Some(Cycle::new(edges).expect("dfs cycle is chained"));
                        }
                        _ => {}
                    }
                } else {
                    color[v] = BLACK;
                    path.pop();
                    stack.pop();
                }
            }
        }
        None
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// A game in matrix form: base space plus the dominance-difference 1-form,
/// stored per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct FormGame {
    labels: Vec<String>,
    base: Arc<BaseSpace>,
    /// `R(i, j)` for each edge `(i, j)` with `i < j`, in edge-index order.
    diff: Vec<i8>,
}

impl FormGame {
    /// Builds a form game from raw matrices, validating the encoding
    /// conditions first. Alternatives get default labels.
    pub fn from_matrices(w: &[Vec<i64>], r: &[Vec<i64>]) -> Result<Self, GameError> {
        Self::from_matrices_labelled(w, r, default_labels(w.len()))
    }

    pub fn from_matrices_labelled(
        w: &[Vec<i64>],
        r: &[Vec<i64>],
        labels: Vec<String>,
    ) -> Result<Self, GameError> {
        let violations = validate(w, r)?;
        if !violations.is_empty() {
            return Err(GameError::InvalidForm(violations));
        }
        let n = w.len();
        if labels.len() != n {
            return Err(GameError::LabelCount {
                labels: labels.len(),
                n,
            });
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if w[i][j] == 1 {
                    edges.push((i, j));
                }
            }
        }
        let base = Arc::new(BaseSpace::from_edges(n, edges)?);
        let diff = base.edges().iter().map(|&(i, j)| r[i][j] as i8).collect();
        Ok(FormGame { labels, base, diff })
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn base(&self) -> &Arc<BaseSpace> {
        &self.base
    }

    /// Edge values of `R` in edge-index order (value for `(i, j)`, `i < j`).
    pub fn diff_values(&self) -> &[i8] {
        &self.diff
    }

    /// `R(i, j)`; zero off the arranged edges.
    pub fn r(&self, i: usize, j: usize) -> i8 {
        match self.base.edge_index(i, j) {
            None => 0,
            Some(e) => {
                if i < j {
                    self.diff[e]
                } else {
                    -self.diff[e]
                }
            }
        }
    }

    /// The relational view; inverse of [`AbstractGame::to_form`].
    pub fn to_abstract(&self) -> AbstractGame {
        let mut dominances = BTreeSet::new();
        for (e, &(i, j)) in self.base.edges().iter().enumerate() {
            match self.diff[e] {
                -1 => {
                    dominances.insert((i, j));
                }
                1 => {
                    dominances.insert((j, i));
                }
                0 => {
                    dominances.insert((i, j));
                    dominances.insert((j, i));
                }
                v => unreachable!("invalid stored difference {v}"),
            }
        }
        AbstractGame {
            labels: self.labels.clone(),
            dominances,
        }
    }

    /// Dense `(W, R)` integer matrices.
    pub fn to_matrices(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let n = self.n();
        let mut w = vec![vec![0i64; n]; n];
        let mut r = vec![vec![0i64; n]; n];
        for (e, &(i, j)) in self.base.edges().iter().enumerate() {
            w[i][j] = 1;
            w[j][i] = 1;
            r[i][j] = self.diff[e] as i64;
            r[j][i] = -(self.diff[e] as i64);
        }
        (w, r)
    }

    /// Fraction of arranged rounds among all unordered pairs.
    pub fn completeness(&self) -> Result<Rational, GameError> {
        let n = self.n() as u64;
        if n < 2 {
            return Err(GameError::Degenerate);
        }
        Ok(Rational::new(
            2 * self.base.edge_count() as u64,
            n * (n - 1),
        ))
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.base.components()
    }

    pub fn is_connected(&self) -> bool {
        self.base.is_connected()
    }
}

/// A bijection on `0..n` in array form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self, GameError> {
        let n = map.len();
        let mut hit = vec![false; n];
        for &v in &map {
            if v >= n || hit[v] {
                return Err(GameError::NotBijective(n));
            }
            hit[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn swap(n: usize, a: usize, b: usize) -> Result<Self, GameError> {
        if a >= n || b >= n {
            return Err(GameError::IndexOutOfRange { index: a.max(b), n });
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Ok(Permutation { map })
    }

    /// A uniformly random permutation (Fisher-Yates).
    pub fn random(n: usize, rng: &mut impl rand::Rng) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            map.swap(k, rng.random_range(0..=k));
        }
        Permutation { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// Image of an index set, returned sorted.
    pub fn apply_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.apply(i)).collect();
        out.sort_unstable();
        out
    }
}

/// A dominance cycle: ordered pairs chaining head to tail and closing up.
/// A length-2 cycle is exactly a mutual dominance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    edges: Vec<(usize, usize)>,
}

impl Cycle {
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self, GameError> {
        if edges.len() < 2 {
            return Err(GameError::MalformedCycle(format!(
                "need at least 2 edges, got {}",
                edges.len()
            )));
        }
        for window in edges.windows(2) {
            if window[0].1 != window[1].0 {
                return Err(GameError::MalformedCycle(format!(
                    "edge ({},{}) does not chain onto ({},{})",
                    window[0].0, window[0].1, window[1].0, window[1].1
                )));
            }
        }
        let first = edges[0].0;
        let last = edges[edges.len() - 1].1;
        if last != first {
            return Err(GameError::MalformedCycle(format!(
                "cycle ends at {last}, expected {first}"
            )));
        }
        if edges.iter().any(|&(i, j)| i == j) {
            return Err(GameError::MalformedCycle("reflexive edge".into()));
        }
        Ok(Cycle { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Traverses the same loop backwards with every pair swapped.
    pub fn reversed(&self) -> Cycle {
        let edges = self.edges.iter().rev().map(|&(i, j)| (j, i)).collect();
        Cycle { edges }
    }

    /// True when no cycle edge participates in a mutual dominance of `game`.
    pub fn is_asymmetric_in(&self, game: &AbstractGame) -> bool {
        self.edges.iter().all(|&(i, j)| !game.has(j, i))
    }
}
