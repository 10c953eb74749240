use thiserror::Error;

use crate::euler::eulerian_trail_from;
use crate::graph::Graph;
use crate::trail::Trail;

/// Bipartite graph with parts `A = {a1, a2, a3}` and `B`, where every
/// vertex of `B` has exactly two neighbours in `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    a: [usize; 3],
    b: Vec<(usize, [usize; 2])>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BipartiteError {
    #[error("the three vertices of A must be distinct")]
    RepeatedA,
    #[error("vertex {0} appears in B twice")]
    RepeatedB(usize),
    #[error("vertex {0} is in both A and B")]
    NotDisjoint(usize),
    #[error("vertex {0} of B must have two distinct neighbours in A")]
    BadNeighbours(usize),
}

impl BipartiteInstance {
    /// `b` lists each vertex of `B` with its two neighbours in `A`.
    pub fn new(a: [usize; 3], b: Vec<(usize, [usize; 2])>) -> Result<Self, BipartiteError> {
        if a[0] == a[1] || a[0] == a[2] || a[1] == a[2] {
            return Err(BipartiteError::RepeatedA);
        }
        let mut seen = std::collections::HashSet::new();
        for &(v, [x, y]) in &b {
            if a.contains(&v) {
                return Err(BipartiteError::NotDisjoint(v));
            }
            if !seen.insert(v) {
                return Err(BipartiteError::RepeatedB(v));
            }
            if x == y || !a.contains(&x) || !a.contains(&y) {
                return Err(BipartiteError::BadNeighbours(v));
            }
        }
        Ok(BipartiteInstance { a, b })
    }

    pub fn a(&self) -> [usize; 3] {
        self.a
    }

    pub fn b(&self) -> &[(usize, [usize; 2])] {
        &self.b
    }

    pub fn edge_count(&self) -> usize {
        2 * self.b.len()
    }

    pub fn to_graph(&self) -> Graph {
        let order = self.b.iter().map(|&(v, _)| v).chain(self.a).max().unwrap() + 1;
        let mut g = Graph::new(order);
        for &(v, [x, y]) in &self.b {
            g.add_edge(v, x);
            g.add_edge(v, y);
        }
        g
    }
}

/// A trail through all `2|B|` edges with both ends in `A`.
///
/// The graph is connected on its edges and its odd vertices all lie in `A`
/// (vertices of `B` have degree two and the degrees in `A` sum to `2|B|`),
/// so there are zero or two of them and an Euler trail exists. It starts at
/// the first odd vertex of `A`, or at the first non-isolated one.
pub fn bipartite_trail(inst: &BipartiteInstance) -> Trail {
    if inst.b.is_empty() {
        return Trail::single(inst.a[0]);
    }
    let g = inst.to_graph();
    let start = inst
        .a
        .iter()
        .copied()
        .find(|&v| g.degree(v) % 2 == 1)
        .or_else(|| inst.a.iter().copied().find(|&v| g.degree(v) > 0))
        .unwrap();
    eulerian_trail_from(&g, start).expect("every instance has an Euler trail starting in A")
}
