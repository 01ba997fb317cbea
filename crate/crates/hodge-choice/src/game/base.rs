//! The undirected graph underlying a dominance relation.

use super::GameError;

/// Bases up to this size keep a dense edge-lookup table for O(1) edge
/// queries; larger bases fall back to binary search in adjacency lists.
pub const DENSE_LIMIT: usize = 512;

/// The symmetric 0/1 "game arrangement" graph a dominance relation lives on.
///
/// Vertices are alternative indices `0..n`. Undirected edges are stored in
/// lexicographic `(i, j)` order with `i < j`, and that ordering defines the
/// edge-index space shared by all 1-forms on this base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSpace {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per vertex: sorted `(neighbor, edge index)` pairs.
    adj: Vec<Vec<(usize, usize)>>,
    /// Dense `edge index + 1` table (0 = no edge), only for small bases.
    lookup: Option<Vec<u32>>,
}

impl BaseSpace {
    /// Builds a base space from undirected edges. Pair order and duplicates
    /// are normalized away; self-loops and out-of-range endpoints are errors.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GameError> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GameError::ReflexivePair { index: a });
            }
            if a >= n || b >= n {
                return Err(GameError::IndexOutOfRange { index: a.max(b), n });
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self::from_sorted_edges(n, normalized))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (e, &(i, j)) in edges.iter().enumerate() {
            adj[i].push((j, e));
            adj[j].push((i, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let lookup = (n <= DENSE_LIMIT).then(|| {
            let mut table = vec![0u32; n * n];
            for (e, &(i, j)) in edges.iter().enumerate() {
                table[i * n + j] = e as u32 + 1;
                table[j * n + i] = e as u32 + 1;
            }
            table
        });
        BaseSpace {
            n,
            edges,
            adj,
            lookup,
        }
    }

    /// The complete base on `n` vertices: every off-diagonal pair arranged.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::from_sorted_edges(n, edges)
    }

    /// The edgeless base on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order; the position of an edge in this slice
    /// is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Sorted `(neighbor, edge index)` pairs of vertex `i`.
    pub fn neighbors(&self, i: usize) -> &[(usize, usize)] {
        &self.adj[i]
    }

    /// Index of the undirected edge `{i, j}`, if arranged.
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        if i == j || i >= self.n || j >= self.n {
            return None;
        }
        match &self.lookup {
            Some(table) => match table[i * self.n + j] {
                0 => None,
                e => Some(e as usize - 1),
            },
            None => self.adj[i]
                .binary_search_by_key(&j, |&(v, _)| v)
                .ok()
                .map(|pos| self.adj[i][pos].1),
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edge_index(i, j).is_some()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut parts = Vec::new();
        let mut queue = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push(start);
            let mut part = Vec::new();
            while let Some(v) = queue.pop() {
                part.push(v);
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Dense 0/1 adjacency matrix.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut w = vec![vec![0u8; self.n]; self.n];
        for &(i, j) in &self.edges {
            w[i][j] = 1;
            w[j][i] = 1;
        }
        w
    }
}
