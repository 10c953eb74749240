use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrailError {
    #[error("a trail has at least one vertex")]
    Empty,
    #[error("loop at position {0}")]
    Loop(usize),
    #[error("edge {{{0},{1}}} is used twice")]
    RepeatedEdge(usize, usize),
    #[error("edge {{{0},{1}}} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
}

/// A walk `v_1 e_1 v_2 ... e_{m-1} v_m` with pairwise distinct edges.
///
/// Only the vertex sequence is stored; `e_i = {v_i, v_{i+1}}`. Vertices may
/// repeat and are counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Trail {
    vertices: Vec<usize>,
}

#[inline]
pub(crate) fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Trail {
    pub fn new(vertices: Vec<usize>) -> Result<Self, TrailError> {
        if vertices.is_empty() {
            return Err(TrailError::Empty);
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        for (i, w) in vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(TrailError::Loop(i));
            }
            let e = edge_key(w[0], w[1]);
            if !seen.insert(e) {
                return Err(TrailError::RepeatedEdge(e.0, e.1));
            }
        }
        Ok(Trail { vertices })
    }

    pub fn single(v: usize) -> Self {
        Trail { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices, counted with multiplicity.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Edges in traversal order, each with its smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| edge_key(w[0], w[1]))
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.vertex_count() > 1 && self.first() == self.last()
    }

    /// The first `k` vertices. A prefix of a trail is a trail.
    pub fn prefix(&self, k: usize) -> Trail {
        assert!(k >= 1 && k <= self.vertex_count(), "prefix length {k} out of range");
        Trail {
            vertices: self.vertices[..k].to_vec(),
        }
    }

    pub fn reversed(&self) -> Trail {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Trail { vertices }
    }

    /// Renames vertex `v` to `names[v]`. `names` must be injective.
    pub fn relabel(&self, names: &[usize]) -> Trail {
        Trail {
            vertices: self.vertices.iter().map(|&v| names[v]).collect(),
        }
    }

    /// Checks that every vertex and edge belongs to `g`.
    pub fn check_in(&self, g: &Graph) -> Result<(), TrailError> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.order()) {
            return Err(TrailError::VertexOutOfRange(v));
        }
        match self.edges().find(|&(u, v)| !g.has_edge(u, v)) {
            Some((u, v)) => Err(TrailError::MissingEdge(u, v)),
            None => Ok(()),
        }
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }
}

impl TryFrom<Vec<usize>> for Trail {
    type Error = TrailError;

    fn try_from(vertices: Vec<usize>) -> Result<Self, Self::Error> {
        Trail::new(vertices)
    }
}

impl From<Trail> for Vec<usize> {
    fn from(t: Trail) -> Self {
        t.vertices
    }
}
