//! Eulerian trails and circuits (Hierholzer).

use thiserror::Error;

use crate::graph::{EulerClass, EulerKind, Graph};
use crate::trail::Trail;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerError {
    #[error("graph is neither Eulerian nor semi-Eulerian ({0:?})")]
    NotTraversable(EulerClass),
    #[error("an Eulerian trail cannot start at vertex {0}")]
    BadStart(usize),
    #[error("graph has no vertices")]
    NoVertices,
}

/// Mutable adjacency consumed edge by edge.
pub(crate) trait Adjacency {
    fn first_neighbor(&self, v: usize) -> Option<usize>;
    fn remove_edge(&mut self, u: usize, v: usize);
}

impl Adjacency for Graph {
    fn first_neighbor(&self, v: usize) -> Option<usize> {
        Graph::first_neighbor(self, v)
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        Graph::remove_edge(self, u, v)
    }
}

/// Single-word rows, for graphs on at most 64 vertices.
pub(crate) struct WordRows<'a>(pub &'a mut [u64]);

impl Adjacency for WordRows<'_> {
    #[inline]
    fn first_neighbor(&self, v: usize) -> Option<usize> {
        let r = self.0[v];
        (r != 0).then(|| r.trailing_zeros() as usize)
    }

    #[inline]
    fn remove_edge(&mut self, u: usize, v: usize) {
        self.0[u] &= !(1 << v);
        self.0[v] &= !(1 << u);
    }
}

/// Consumes every edge reachable from `start` and returns the vertex
/// sequence of the resulting trail. Neighbours are taken smallest first.
///
/// The caller guarantees the component of `start` has an Eulerian trail
/// beginning at `start`.
pub(crate) fn hierholzer<A: Adjacency>(adj: &mut A, start: usize) -> Vec<usize> {
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(&v) = stack.last() {
        match adj.first_neighbor(v) {
            Some(u) => {
                adj.remove_edge(v, u);
                stack.push(u);
            }
            None => out.push(stack.pop().unwrap()),
        }
    }
    out.reverse();
    out
}

/// Trail using every edge exactly once. Closed iff the graph is Eulerian;
/// for a semi-Eulerian graph it runs between the two odd vertices, starting
/// at the smaller one.
pub fn eulerian_trail(g: &Graph) -> Result<Trail, EulerError> {
    let class = g.euler_classify();
    let start = match class.kind {
        EulerKind::Eulerian => (0..g.order()).find(|&v| g.degree(v) > 0).unwrap_or(0),
        EulerKind::SemiEulerian => g.odd_vertices()[0],
        EulerKind::Neither => return Err(EulerError::NotTraversable(class)),
    };
    eulerian_trail_from(g, start)
}

pub fn eulerian_trail_from(g: &Graph, start: usize) -> Result<Trail, EulerError> {
    if g.order() == 0 {
        return Err(EulerError::NoVertices);
    }
    if start >= g.order() {
        return Err(EulerError::BadStart(start));
    }
    let class = g.euler_classify();
    let ok = match class.kind {
        EulerKind::Eulerian => g.degree(start) > 0 || g.edge_count() == 0,
        EulerKind::SemiEulerian => g.degree(start) % 2 == 1,
        EulerKind::Neither => return Err(EulerError::NotTraversable(class)),
    };
    if !ok {
        return Err(EulerError::BadStart(start));
    }
    let mut rest = g.clone();
    let vertices = hierholzer(&mut rest, start);
    debug_assert_eq!(rest.edge_count(), 0);
    Ok(Trail::new(vertices).expect("Hierholzer output is a trail"))
}
