//! Small simple undirected graphs stored as adjacency bit rows.
//!
//! Row `i` holds one bit per vertex; bit `j` is set iff `{i, j}` is an edge.
//! Rows are `ceil(n / 64)` words wide, so graphs up to 64 vertices use a
//! single machine word per row. The exact searches in this crate only ever
//! run on graphs of that size, while the lower-bound constructions need a
//! few hundred vertices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// Edge-bearing connected component summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub odd_vertices: usize,
}

impl Component {
    /// Upper bound on the number of edges of a trail inside this component.
    ///
    /// A trail covering an edge set leaves at most two odd vertices, and each
    /// discarded edge fixes the parity of at most two of them.
    pub fn trail_edge_bound(&self) -> usize {
        self.edges - (self.odd_vertices / 2).saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EulerKind {
    Eulerian,
    SemiEulerian,
    Neither,
}

/// Eulerian classification of the edge-bearing part of a graph.
///
/// Isolated vertices are ignored. An edgeless graph counts as connected and
/// Eulerian (the one-vertex circuit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EulerClass {
    pub kind: EulerKind,
    pub connected: bool,
    pub odd_vertices: usize,
}

impl EulerClass {
    pub fn is_traversable(&self) -> bool {
        matches!(self.kind, EulerKind::Eulerian | EulerKind::SemiEulerian)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle on `n >= 3` vertices in the order `0, 1, ..., n-1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Vertices of `other` are shifted past the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Row of `v` as a single word. Only valid for graphs on at most 64 vertices.
    #[inline]
    pub fn row_u64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Panics on out-of-range vertices or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge {{{u},{v}}} out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge {{{u},{v}}} out of range");
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            BitIter(word).map(move |b| wi * 64 + b)
        })
    }

    /// Smallest neighbour of `v`, if any.
    pub fn first_neighbor(&self, v: usize) -> Option<usize> {
        self.row(v)
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * 64 + w.trailing_zeros() as usize)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            let row = &mut g.bits[v * self.words..(v + 1) * self.words];
            for (wi, word) in row.iter_mut().enumerate() {
                let lo = wi * 64;
                let hi = (lo + 64).min(self.n);
                let mask = if hi - lo == 64 { u64::MAX } else { (1u64 << (hi - lo)) - 1 };
                *word = !*word & mask;
            }
            row[v / 64] &= !(1 << (v % 64));
        }
        g
    }

    /// Induced subgraph; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph on the first `s` vertices.
    pub fn prefix(&self, s: usize) -> Graph {
        assert!(s <= self.n);
        let vertices: Vec<usize> = (0..s).collect();
        self.induced(&vertices)
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    /// Connected components that carry at least one edge, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.n {
            if seen[root] || self.degree(root) == 0 {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut vertices = Vec::new();
            while let Some(u) = stack.pop() {
                vertices.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            vertices.sort_unstable();
            let degree_sum: usize = vertices.iter().map(|&v| self.degree(v)).sum();
            let odd_vertices = vertices.iter().filter(|&&v| self.degree(v) % 2 == 1).count();
            out.push(Component {
                vertices,
                edges: degree_sum / 2,
                odd_vertices,
            });
        }
        out
    }

    /// Connectivity of the edge-bearing part.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn euler_classify(&self) -> EulerClass {
        let connected = self.is_connected();
        let odd_vertices = self.odd_vertices().len();
        let kind = match (connected, odd_vertices) {
            (true, 0) => EulerKind::Eulerian,
            (true, 2) => EulerKind::SemiEulerian,
            _ => EulerKind::Neither,
        };
        EulerClass {
            kind,
            connected,
            odd_vertices,
        }
    }

    /// Upper bound on the edge count of any trail: the maximum over
    /// edge-bearing components of `edges - max(0, odd/2 - 1)`.
    pub fn trail_edge_upper_bound(&self) -> usize {
        self.components()
            .iter()
            .map(Component::trail_edge_bound)
            .max()
            .unwrap_or(0)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, graph6::Graph6Error> {
        graph6::decode(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Graph::from_graph6(&text).map_err(serde::de::Error::custom)
    }
}

/// Iterates set bit positions of a word in ascending order.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
