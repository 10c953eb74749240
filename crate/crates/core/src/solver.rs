//! Exact longest-trail search.
//!
//! Depth-first search over edge extensions from every start vertex. The
//! residual graph (unused edges) is kept as single-word bit rows, so the
//! search handles graphs on at most 64 vertices. With pruning enabled the
//! search
//!
//! * cuts a branch when the edges used so far plus a parity bound on the
//!   residual component of the current vertex cannot beat the target,
//! * finishes a branch directly with Hierholzer when that bound is attained
//!   (the residual component is Eulerian, or semi-Eulerian with the current
//!   vertex odd),
//! * starts from one vertex per class of twins (`N(u) - v = N(v) - u`),
//!   since swapping twins is an automorphism.

use serde::Serialize;

use crate::euler::{hierholzer, WordRows};
use crate::graph::{BitIter, Graph};
use crate::trail::Trail;

pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrailResult {
    /// Vertex count of a longest trail, with multiplicity.
    pub best_vertex_count: usize,
    pub witness: Trail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true }
    }
}

pub fn longest_trail(g: &Graph) -> TrailResult {
    longest_trail_with(g, SearchOptions::default())
}

pub fn longest_trail_with(g: &Graph, opts: SearchOptions) -> TrailResult {
    let witness = Search::run(g, Goal::Longest, opts).expect("longest search always yields a trail");
    TrailResult {
        best_vertex_count: witness.vertex_count(),
        witness,
    }
}

/// A trail with exactly `k` vertices (with multiplicity), if `g` has one.
/// Stops at the first witness.
pub fn has_trail_with_k(g: &Graph, k: usize) -> Option<Trail> {
    has_trail_with_k_with(g, k, SearchOptions::default())
}

pub fn has_trail_with_k_with(g: &Graph, k: usize, opts: SearchOptions) -> Option<Trail> {
    assert!(k >= 1, "trail sizes start at one vertex");
    Search::run(g, Goal::AtLeast(k - 1), opts)
}

/// Vertex count of the longest trail in `g` or in its complement.
pub fn t_value(g: &Graph) -> usize {
    let a = longest_trail(g).best_vertex_count;
    let b = longest_trail(&g.complement()).best_vertex_count;
    a.max(b)
}

#[derive(Clone, Copy)]
enum Goal {
    Longest,
    /// Stop at the first trail with this many edges.
    AtLeast(usize),
}

struct Search {
    rows: Vec<u64>,
    path: Vec<usize>,
    best: Vec<usize>,
    goal: Goal,
    prune: bool,
    global_bound: usize,
    done: bool,
}

impl Search {
    fn run(g: &Graph, goal: Goal, opts: SearchOptions) -> Option<Trail> {
        let n = g.order();
        assert!(n >= 1, "trail search needs at least one vertex");
        assert!(n <= MAX_SEARCH_ORDER, "trail search supports at most {MAX_SEARCH_ORDER} vertices, got {n}");
        let rows: Vec<u64> = (0..n).map(|v| g.row_u64(v)).collect();
        let global_bound = g.trail_edge_upper_bound();

        if let Goal::AtLeast(t) = goal {
            if t == 0 {
                return Some(Trail::single(0));
            }
            if opts.prune && global_bound < t {
                return None;
            }
        }
        if g.edge_count() == 0 {
            return match goal {
                Goal::Longest => Some(Trail::single(0)),
                Goal::AtLeast(_) => None,
            };
        }

        let mut search = Search {
            rows,
            path: Vec::new(),
            best: Vec::new(),
            goal,
            prune: opts.prune,
            global_bound,
            done: false,
        };
        let mut starts: Vec<usize> = Vec::new();
        for v in 0..n {
            let r = search.rows[v];
            if r == 0 {
                continue;
            }
            let twin_of_earlier = opts.prune
                && starts.iter().any(|&u| {
                    r & !(1 << u) == search.rows[u] & !(1 << v)
                });
            if !twin_of_earlier {
                starts.push(v);
            }
        }
        for s in starts {
            search.path.push(s);
            search.dfs(s);
            search.path.pop();
            if search.done {
                break;
            }
        }
        match goal {
            Goal::Longest => Some(Trail::new(search.best).expect("search path is a trail")),
            Goal::AtLeast(_) if search.done => {
                Some(Trail::new(search.best).expect("search path is a trail"))
            }
            Goal::AtLeast(_) => None,
        }
    }

    #[inline]
    fn best_edges(&self) -> usize {
        self.best.len().saturating_sub(1)
    }

    fn record(&mut self, path: Vec<usize>) {
        let edges = path.len() - 1;
        match self.goal {
            Goal::Longest => {
                if self.best.is_empty() || edges > self.best_edges() {
                    self.best = path;
                    if self.prune && self.best_edges() == self.global_bound {
                        self.done = true;
                    }
                }
            }
            Goal::AtLeast(t) => {
                if edges >= t {
                    let mut path = path;
                    path.truncate(t + 1);
                    self.best = path;
                    self.done = true;
                }
            }
        }
    }

    /// Residual component of `v`: (edge count, odd-vertex count).
    fn component(&self, v: usize) -> (usize, usize) {
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.rows[u] & !comp;
            comp |= new;
            frontier |= new;
        }
        let mut degree_sum = 0;
        let mut odd = 0;
        for u in BitIter(comp) {
            let d = self.rows[u].count_ones() as usize;
            degree_sum += d;
            odd += d & 1;
        }
        (degree_sum / 2, odd)
    }

    fn dfs(&mut self, v: usize) {
        let depth = self.path.len() - 1;
        if matches!(self.goal, Goal::Longest) || depth > 0 {
            let should_record = match self.goal {
                Goal::Longest => self.best.is_empty() || depth > self.best_edges(),
                Goal::AtLeast(t) => depth >= t,
            };
            if should_record {
                self.record(self.path.clone());
                if self.done {
                    return;
                }
            }
        }

        if self.prune {
            let (edges, odd) = self.component(v);
            let v_odd = (self.rows[v].count_ones() & 1) as usize;
            // Trails from v leave at least odd/2 - [v odd] residual edges unused.
            let bound = if odd == 0 { edges } else { edges - (odd / 2 - v_odd) };
            let hopeless = match self.goal {
                Goal::Longest => depth + bound <= self.best_edges(),
                Goal::AtLeast(t) => depth + bound < t,
            };
            if hopeless {
                return;
            }
            let attainable = odd == 0 || (odd == 2 && v_odd == 1);
            if attainable && edges > 0 {
                let mut rest = self.rows.clone();
                let tail = hierholzer(&mut WordRows(&mut rest), v);
                let mut full = self.path.clone();
                full.extend_from_slice(&tail[1..]);
                self.record(full);
                return;
            }
        }

        for u in BitIter(self.rows[v]) {
            self.rows[v] &= !(1 << u);
            self.rows[u] &= !(1 << v);
            self.path.push(u);
            self.dfs(u);
            self.path.pop();
            self.rows[v] |= 1 << u;
            self.rows[u] |= 1 << v;
            if self.done {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;

    /// Exhaustive oracle: longest edge-distinct walk by memoised recursion
    /// over (current vertex, used edge set). No pruning, no shortcuts.
    fn oracle_longest_edges(g: &Graph) -> usize {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        fn go(v: usize, used: u64, edges: &[(usize, usize)], memo: &mut HashMap<(usize, u64), usize>) -> usize {
            if let Some(&r) = memo.get(&(v, used)) {
                return r;
            }
            let mut best = 0;
            for (i, &(a, b)) in edges.iter().enumerate() {
                if used >> i & 1 == 1 {
                    continue;
                }
                let next = if a == v { b } else if b == v { a } else { continue };
                best = best.max(1 + go(next, used | 1 << i, edges, memo));
            }
            memo.insert((v, used), best);
            best
        }
        let mut memo = HashMap::new();
        (0..g.order()).map(|v| go(v, 0, &edges, &mut memo)).max().unwrap_or(0)
    }

    fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u32..(1 << pairs.len())).map(move |mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn small_examples() {
        assert_eq!(longest_trail(&Graph::complete(3)).best_vertex_count, 4);
        assert_eq!(longest_trail(&Graph::path(4)).best_vertex_count, 4);
        assert_eq!(longest_trail(&Graph::star(4)).best_vertex_count, 3);
        assert_eq!(longest_trail(&Graph::new(1)).best_vertex_count, 1);
        assert_eq!(longest_trail(&Graph::complete(4)).best_vertex_count, 6);
    }

    #[test]
    fn t_value_examples() {
        let fig2 = Graph::from_edges(3, &[(0, 2)]).unwrap();
        assert_eq!(t_value(&fig2), 3);
        assert_eq!(t_value(&Graph::complete(2)), 2);
        assert_eq!(t_value(&Graph::new(1)), 1);
    }

    #[test]
    fn has_trail_examples() {
        assert_eq!(has_trail_with_k(&Graph::complete(3), 4).unwrap().vertex_count(), 4);
        let fig4 = Graph::from_edges(5, &[(0, 4), (0, 1), (1, 4), (3, 4), (1, 2)]).unwrap();
        assert!(has_trail_with_k(&fig4, 6).is_none());
        assert!(has_trail_with_k(&fig4.complement(), 6).is_none());
        assert_eq!(has_trail_with_k(&Graph::new(3), 1).unwrap().vertex_count(), 1);
        assert!(has_trail_with_k(&Graph::new(3), 2).is_none());
        for opts in [SearchOptions { prune: true }, SearchOptions { prune: false }] {
            let t = has_trail_with_k_with(&Graph::complete(6), 9, opts).unwrap();
            assert_eq!(t.vertex_count(), 9);
            t.check_in(&Graph::complete(6)).unwrap();
        }
    }

    #[test]
    fn agrees_with_oracle_on_all_labeled_graphs_up_to_five_vertices() {
        for n in 1..=5 {
            for g in all_labeled(n) {
                let expected = oracle_longest_edges(&g) + 1;
                for prune in [true, false] {
                    let r = longest_trail_with(&g, SearchOptions { prune });
                    assert_eq!(r.best_vertex_count, expected, "{g:?} prune={prune}");
                    r.witness.check_in(&g).unwrap();
                }
                assert!(expected <= g.trail_edge_upper_bound() + 1);
                for k in 1..=expected + 1 {
                    let found = has_trail_with_k(&g, k);
                    assert_eq!(found.is_some(), k <= expected);
                    if let Some(t) = found {
                        assert_eq!(t.vertex_count(), k);
                        t.check_in(&g).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn traversable_graphs_use_every_edge() {
        for g in [Graph::complete(7), Graph::complete(8), Graph::cycle(9), Graph::complete_bipartite(3, 5)] {
            if g.euler_classify().is_traversable() {
                assert_eq!(longest_trail(&g).best_vertex_count, g.edge_count() + 1);
            }
        }
        assert_eq!(longest_trail(&Graph::complete(8)).best_vertex_count, 26);
    }

    #[test]
    fn deterministic() {
        let g = Graph::complete_bipartite(3, 4).disjoint_union(&Graph::cycle(5));
        assert_eq!(longest_trail(&g), longest_trail(&g));
    }
}
