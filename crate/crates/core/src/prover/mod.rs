//! Constructive upper bound: every graph `G` on `k` vertices has a trail
//! with `k` vertices in `G` or in its complement.
//!
//! The trail is grown one vertex at a time. Exact search handles the first
//! ten vertices; after that, with a trail `S` of `s - 1` vertices on one side
//! `H` of the first `s - 1` vertices, vertex `s - 1` joins and a trail of `s`
//! vertices is built either in `H` or in its complement, by the case
//! analysis below. `U` is the vertex set of `S` and `W` the remaining
//! vertices of the prefix.
//!
//! Every constructed trail is checked against the adjacency before it is
//! accepted. If a step does not produce a valid trail, exact search on the
//! prefix takes over for that step and the event is recorded.

mod bipartite;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bipartite::{bipartite_trail, BipartiteError, BipartiteInstance};

use crate::euler::eulerian_trail;
use crate::graph::Graph;
use crate::solver::{has_trail_with_k, MAX_SEARCH_ORDER};
use crate::trail::{edge_key, Trail};

/// Orders up to this are solved by exact search.
pub const BASE_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "G")]
    G,
    #[serde(rename = "co-G")]
    CoG,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::G => Side::CoG,
            Side::CoG => Side::G,
        }
    }

    /// Whether `{u, v}` is an edge of this side of `g`.
    pub fn has_edge(self, g: &Graph, u: usize, v: usize) -> bool {
        u != v && g.has_edge(u, v) == (self == Side::G)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::G => "G",
            Side::CoG => "co-G",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    Base,
    ExtendEndpoint,
    Case1,
    #[serde(rename = "Case2/rotate")]
    Case2Rotate,
    #[serde(rename = "Case2-1")]
    Case2_1,
    #[serde(rename = "Case2-2")]
    Case2_2,
    #[serde(rename = "Case3-1")]
    Case3_1,
    #[serde(rename = "Case3-2")]
    Case3_2,
    #[serde(rename = "Case3-3-1/splice")]
    Case3_3_1Splice,
    #[serde(rename = "Case3-3-1/bipartite")]
    Case3_3_1Bipartite,
    #[serde(rename = "Case3-3-2/cycle")]
    Case3_3_2Cycle,
    #[serde(rename = "Case3-3-2/bipartite")]
    Case3_3_2Bipartite,
    Fallback,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 13] = [
        CaseLabel::Base,
        CaseLabel::ExtendEndpoint,
        CaseLabel::Case1,
        CaseLabel::Case2Rotate,
        CaseLabel::Case2_1,
        CaseLabel::Case2_2,
        CaseLabel::Case3_1,
        CaseLabel::Case3_2,
        CaseLabel::Case3_3_1Splice,
        CaseLabel::Case3_3_1Bipartite,
        CaseLabel::Case3_3_2Cycle,
        CaseLabel::Case3_3_2Bipartite,
        CaseLabel::Fallback,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Base => "Base",
            CaseLabel::ExtendEndpoint => "ExtendEndpoint",
            CaseLabel::Case1 => "Case1",
            CaseLabel::Case2Rotate => "Case2/rotate",
            CaseLabel::Case2_1 => "Case2-1",
            CaseLabel::Case2_2 => "Case2-2",
            CaseLabel::Case3_1 => "Case3-1",
            CaseLabel::Case3_2 => "Case3-2",
            CaseLabel::Case3_3_1Splice => "Case3-3-1/splice",
            CaseLabel::Case3_3_1Bipartite => "Case3-3-1/bipartite",
            CaseLabel::Case3_3_2Cycle => "Case3-3-2/cycle",
            CaseLabel::Case3_3_2Bipartite => "Case3-3-2/bipartite",
            CaseLabel::Fallback => "Fallback",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A step whose construction did not yield a valid trail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FallbackEvent {
    /// Number of vertices of the prefix being handled.
    pub order: usize,
    pub case: CaseLabel,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub side: Side,
    pub vertices: Vec<usize>,
    /// `Base` followed by one label per added vertex.
    pub case_path: Vec<CaseLabel>,
    #[serde(rename = "fallback")]
    pub fallback_used: bool,
    #[serde(skip)]
    pub fallback_events: Vec<FallbackEvent>,
}

impl ProofTrace {
    pub fn trail(&self) -> Result<Trail, crate::trail::TrailError> {
        Trail::new(self.vertices.clone())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceViolation {
    #[error("trail has {found} vertices, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(usize),
    #[error("loop at position {0}")]
    Loop(usize),
    #[error("edge {{{0},{1}}} is used twice")]
    RepeatedEdge(usize, usize),
    #[error("edge {{{u},{v}}} is not an edge of {side}")]
    NotInSide { u: usize, v: usize, side: Side },
}

/// Checks that `trace` is a trail with `g.order()` vertices in its claimed
/// side of `g`. Reports the first violation.
pub fn validate_trace(g: &Graph, trace: &ProofTrace) -> Result<(), TraceViolation> {
    let vs = &trace.vertices;
    if vs.len() != g.order() {
        return Err(TraceViolation::WrongLength {
            expected: g.order(),
            found: vs.len(),
        });
    }
    if let Some(&v) = vs.iter().find(|&&v| v >= g.order()) {
        return Err(TraceViolation::VertexOutOfRange(v));
    }
    let mut seen = HashSet::new();
    for (i, w) in vs.windows(2).enumerate() {
        let (u, v) = (w[0], w[1]);
        if u == v {
            return Err(TraceViolation::Loop(i));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(TraceViolation::RepeatedEdge(e.0, e.1));
        }
        if g.has_edge(u, v) != (trace.side == Side::G) {
            return Err(TraceViolation::NotInSide { u: e.0, v: e.1, side: trace.side });
        }
    }
    Ok(())
}

/// A trail with exactly `g.order()` vertices in `g` or its complement.
///
/// # Panics
///
/// If a step falls back to exact search on more than 64 vertices.
pub fn find_trail(g: &Graph) -> ProofTrace {
    assert!(g.order() >= 1, "find_trail needs at least one vertex");
    let mut prover = Prover {
        sides: [g.clone(), g.complement()],
        path: Vec::new(),
        events: Vec::new(),
    };
    let (side, trail) = prover.run();
    ProofTrace {
        side,
        vertices: trail.into_vertices(),
        case_path: prover.path,
        fallback_used: !prover.events.is_empty(),
        fallback_events: prover.events,
    }
}

struct Prover {
    /// The graph and its complement, indexed by side.
    sides: [Graph; 2],
    path: Vec<CaseLabel>,
    events: Vec<FallbackEvent>,
}

type Outcome = Result<(Side, Vec<usize>), String>;

impl Prover {
    fn graph(&self, side: Side) -> &Graph {
        &self.sides[side as usize]
    }

    fn run(&mut self) -> (Side, Trail) {
        let k = self.sides[0].order();
        let base = k.min(BASE_ORDER);
        let (mut side, mut trail) = self.exact(base).expect("small orders always have a trail on one side");
        self.path.push(CaseLabel::Base);
        for s in base + 1..=k {
            let (label, outcome) = self.step(s, side, &trail);
            let checked = outcome.and_then(|(sd, vs)| self.accept(s, sd, vs).map(|t| (sd, t)));
            match checked {
                Ok((sd, t)) => {
                    self.path.push(label);
                    side = sd;
                    trail = t;
                }
                Err(reason) => {
                    log::warn!("order {s}: {label} failed ({reason}); using exact search");
                    self.events.push(FallbackEvent { order: s, case: label, reason });
                    self.path.push(CaseLabel::Fallback);
                    (side, trail) = self.exact(s).unwrap_or_else(|| {
                        panic!("no trail with {s} vertices on either side of the prefix")
                    });
                }
            }
        }
        (side, trail)
    }

    /// Exact search for an `s`-vertex trail on the first `s` vertices.
    fn exact(&self, s: usize) -> Option<(Side, Trail)> {
        assert!(
            s <= MAX_SEARCH_ORDER,
            "exact search needed on {s} vertices, above the limit {MAX_SEARCH_ORDER}"
        );
        [Side::G, Side::CoG]
            .into_iter()
            .find_map(|side| has_trail_with_k(&self.graph(side).prefix(s), s).map(|t| (side, t)))
    }

    /// Validates a constructed trail on the first `s` vertices and cuts it
    /// to `s` vertices.
    fn accept(&self, s: usize, side: Side, vertices: Vec<usize>) -> Result<Trail, String> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= s) {
            return Err(format!("vertex {v} outside the prefix"));
        }
        let t = Trail::new(vertices).map_err(|e| e.to_string())?;
        t.check_in(self.graph(side)).map_err(|e| format!("{e} in {side}"))?;
        if t.vertex_count() < s {
            return Err(format!("only {} vertices", t.vertex_count()));
        }
        Ok(t.prefix(s))
    }

    fn step(&mut self, s: usize, side: Side, trail: &Trail) -> (CaseLabel, Outcome) {
        let h = self.graph(side);
        let hc = self.graph(side.flip());
        let u = trail.vertices();
        let m = u.len();
        debug_assert_eq!(m, s - 1);
        let (first, last) = (u[0], u[m - 1]);

        let mut in_u = vec![false; s];
        let mut uset = Vec::new();
        for &x in u {
            if !in_u[x] {
                in_u[x] = true;
                uset.push(x);
            }
        }
        let wset: Vec<usize> = (0..s).filter(|&v| !in_u[v]).collect();
        let used: HashSet<(usize, usize)> = trail.edges().collect();
        let unused = |x: usize, y: usize| !used.contains(&edge_key(x, y));

        // Extensions at either end.
        for &w in &wset {
            if h.has_edge(first, w) {
                return (CaseLabel::ExtendEndpoint, Ok((side, prepend(w, u))));
            }
        }
        for &w in &wset {
            if h.has_edge(last, w) {
                return (CaseLabel::ExtendEndpoint, Ok((side, append(u, w))));
            }
        }
        for &x in &uset {
            if x != first && h.has_edge(x, first) && unused(x, first) {
                return (CaseLabel::ExtendEndpoint, Ok((side, prepend(x, u))));
            }
        }
        for &x in &uset {
            if x != last && h.has_edge(x, last) && unused(x, last) {
                return (CaseLabel::ExtendEndpoint, Ok((side, append(u, x))));
            }
        }
        debug_assert!(
            wset.iter().all(|&w| hc.has_edge(first, w) && hc.has_edge(last, w)),
            "condition 1"
        );
        debug_assert!(
            uset.iter().all(|&x| {
                (x == first || !unused(x, first) || hc.has_edge(x, first))
                    && (x == last || !unused(x, last) || hc.has_edge(x, last))
            }),
            "condition 2"
        );

        let other = side.flip();
        if uset.len() == m {
            // S is a path and the new vertex is the only one outside it.
            let label = CaseLabel::Case1;
            if wset.len() != 1 {
                return (label, Err(format!("|W| = {}", wset.len())));
            }
            let w = wset[0];
            let mut edges = vec![(first, w), (last, w), (first, last)];
            for &x in &u[2..=m - 3] {
                edges.push((first, x));
                edges.push((last, x));
            }
            return (label, euler_on(s, &edges).map(|t| (other, t)));
        }

        if first == last {
            for &w in &wset {
                if let Some(i) = (0..m).find(|&i| h.has_edge(w, u[i])) {
                    let mut t = vec![w];
                    t.extend_from_slice(&u[i..m]);
                    t.extend_from_slice(&u[1..=i]);
                    return (CaseLabel::Case2Rotate, Ok((side, t)));
                }
            }
            if uset.len() >= wset.len() {
                let label = CaseLabel::Case2_1;
                if wset.len() < 2 {
                    return (label, Err(format!("|W| = {}", wset.len())));
                }
                let edges = star_pair(wset[0], wset[1], &uset);
                return (label, euler_on(s, &edges).map(|t| (other, t)));
            }
            let label = CaseLabel::Case2_2;
            if uset.len() < 2 {
                return (label, Err(format!("|U| = {}", uset.len())));
            }
            let edges = star_pair(uset[0], uset[1], &wset);
            return (label, euler_on(s, &edges).map(|t| (other, t)));
        }

        if uset.len() == s - 2 {
            let label = CaseLabel::Case3_1;
            let mut leaves: Vec<usize> = uset
                .iter()
                .copied()
                .filter(|&x| x != first && x != last && !h.has_edge(x, first) && !h.has_edge(x, last))
                .collect();
            leaves.extend_from_slice(&wset);
            let edges = star_pair(first, last, &leaves);
            return (label, euler_on(s, &edges).map(|t| (other, t)));
        }

        if uset.len() <= s / 2 {
            let edges = star_pair(first, last, &wset);
            return (CaseLabel::Case3_2, euler_on(s, &edges).map(|t| (other, t)));
        }

        self.case_3_3(side, u, &uset, &wset)
    }

    /// `s/2 < |U| <= s - 3`: recurse on the vertices outside `S`.
    fn case_3_3(&mut self, side: Side, u: &[usize], uset: &[usize], wset: &[usize]) -> (CaseLabel, Outcome) {
        let sub = self.graph(side).induced(wset);
        let inner = find_trail(&sub);
        self.events.extend(inner.fallback_events.iter().cloned());
        let t: Vec<usize> = inner.vertices.iter().map(|&i| wset[i]).collect();
        let mut wprime = Vec::new();
        for &x in &t {
            if !wprime.contains(&x) {
                wprime.push(x);
            }
        }
        let h = self.graph(side);
        let hc = self.graph(side.flip());
        let other = side.flip();
        let m = u.len();
        let (first, last) = (u[0], u[m - 1]);

        if inner.side == Side::G {
            // T lies in H.
            for (i, &x) in u.iter().enumerate() {
                let Some(a) = t.iter().position(|&y| h.has_edge(x, y)) else {
                    continue;
                };
                let Some(b) = (a + 1..t.len()).find(|&b| t[b] != t[a] && h.has_edge(x, t[b])) else {
                    continue;
                };
                let mut out = u[..=i].to_vec();
                out.extend_from_slice(&t[a..=b]);
                out.extend_from_slice(&u[i..]);
                return (CaseLabel::Case3_3_1Splice, Ok((side, out)));
            }
            let label = CaseLabel::Case3_3_1Bipartite;
            if wprime.len() < 3 {
                return (label, Err(format!("|W'| = {}", wprime.len())));
            }
            let a = [wprime[0], wprime[1], wprime[2]];
            return (label, bipartite_side_trail(hc, a, uset).map(|x| (other, x)));
        }

        // T lies in the complement of H.
        if wprime.len() < 3 {
            return (CaseLabel::Case3_3_2Bipartite, Err(format!("|W'| = {}", wprime.len())));
        }
        let a = [wprime[0], wprime[1], wprime[2]];
        let rich: Vec<usize> = uset
            .iter()
            .copied()
            .filter(|&x| x != first && x != last && a.iter().filter(|&&y| h.has_edge(x, y)).count() >= 2)
            .collect();
        if rich.len() >= 3 {
            let label = CaseLabel::Case3_3_2Cycle;
            let Some(cycle) = short_cycle(h, a, [rich[0], rich[1], rich[2]]) else {
                return (label, Err("no 4- or 6-cycle on the candidates".into()));
            };
            let at = u.iter().position(|&x| x == cycle[0]).unwrap();
            let mut out = u[..=at].to_vec();
            out.extend_from_slice(&cycle[1..]);
            out.extend_from_slice(&u[at + 1..]);
            return (label, Ok((side, out)));
        }

        let label = CaseLabel::Case3_3_2Bipartite;
        let b: Vec<usize> = uset
            .iter()
            .copied()
            .filter(|&x| x != first && x != last && !rich.contains(&x))
            .collect();
        let x = match bipartite_side_trail(hc, a, &b) {
            Ok(x) => x,
            Err(e) => return (label, Err(e)),
        };
        let end = *x.last().unwrap();
        let closed = t.len() > 1 && t[0] == t[t.len() - 1];
        let tprime: Vec<usize> = if t[0] != end {
            t.clone()
        } else if closed {
            let mut r = t[1..].to_vec();
            r.push(t[1]);
            r
        } else {
            t.iter().rev().copied().collect()
        };
        let mut y = x;
        y.push(first);
        y.extend_from_slice(&tprime);
        y.push(last);
        (label, Ok((other, y)))
    }
}

fn prepend(v: usize, u: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(u.len() + 1);
    out.push(v);
    out.extend_from_slice(u);
    out
}

fn append(u: &[usize], v: usize) -> Vec<usize> {
    let mut out = u.to_vec();
    out.push(v);
    out
}

/// Edges joining both `a` and `b` to every vertex of `leaves`.
fn star_pair(a: usize, b: usize, leaves: &[usize]) -> Vec<(usize, usize)> {
    leaves.iter().flat_map(|&x| [(a, x), (b, x)]).collect()
}

/// Euler trail of the graph on `n` vertices with the given edges.
fn euler_on(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>, String> {
    let g = Graph::from_edges(n, edges).map_err(|e| e.to_string())?;
    if g.edge_count() != edges.len() {
        return Err("repeated edge in construction".into());
    }
    eulerian_trail(&g).map(Trail::into_vertices).map_err(|e| e.to_string())
}

/// Bipartite trail between `a` and `b` using, for each vertex of `b`, its
/// first two neighbours in `a` within `side`.
fn bipartite_side_trail(side: &Graph, a: [usize; 3], b: &[usize]) -> Result<Vec<usize>, String> {
    let mut part = Vec::with_capacity(b.len());
    for &x in b {
        let nb: Vec<usize> = a.iter().copied().filter(|&y| side.has_edge(x, y)).collect();
        if nb.len() < 2 {
            return Err(format!("vertex {x} has {} neighbours in A", nb.len()));
        }
        part.push((x, [nb[0], nb[1]]));
    }
    let inst = BipartiteInstance::new(a, part).map_err(|e| e.to_string())?;
    Ok(bipartite_trail(&inst).into_vertices())
}

/// A closed walk `c[0] .. c[0]` on a 4- or 6-cycle alternating between the
/// candidates and `a`, each candidate having at least two neighbours in `a`.
fn short_cycle(h: &Graph, a: [usize; 3], cand: [usize; 3]) -> Option<Vec<usize>> {
    let common = |p: usize, q: usize| -> Vec<usize> {
        a.iter().copied().filter(|&y| h.has_edge(p, y) && h.has_edge(q, y)).collect()
    };
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = common(cand[i], cand[j]);
        if c.len() >= 2 {
            return Some(vec![cand[i], c[0], cand[j], c[1], cand[i]]);
        }
    }
    let [x, y, z] = cand;
    let (p, q, r) = (common(x, y), common(y, z), common(z, x));
    if p.len() == 1 && q.len() == 1 && r.len() == 1 && p[0] != q[0] && q[0] != r[0] && p[0] != r[0] {
        return Some(vec![x, p[0], y, q[0], z, r[0], x]);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::graph_from_key;

    fn run(g: &Graph) -> ProofTrace {
        let trace = find_trail(g);
        validate_trace(g, &trace).unwrap();
        trace
    }

    #[test]
    fn empty_and_complete() {
        let t = run(&Graph::new(11));
        assert_eq!(t.side, Side::CoG);
        assert_eq!(t.vertices.len(), 11);
        assert!(!t.fallback_used);
        let t = run(&Graph::complete(11));
        assert_eq!(t.side, Side::G);
        let t = run(&Graph::complete(12));
        assert_eq!(t.side, Side::G);
        run(&Graph::new(1));
        run(&Graph::new(2));
    }

    #[test]
    fn base_case_on_small_witness() {
        let g = Graph::from_edges(5, &[(0, 4), (0, 1), (1, 4), (3, 4), (1, 2)]).unwrap();
        let t = run(&g);
        assert_eq!(t.case_path, vec![CaseLabel::Base]);
    }

    #[test]
    fn structured_families() {
        for k in 11..=40 {
            run(&Graph::path(k));
            run(&Graph::cycle(k));
            run(&Graph::star(k - 1));
            for a in 1..k {
                run(&Graph::complete_bipartite(a, k - a));
            }
            for a in 1..k {
                run(&Graph::complete(a).disjoint_union(&Graph::complete(k - a)));
                run(&Graph::cycle(a.max(3)).disjoint_union(&Graph::path(k - a.max(3))));
            }
        }
    }

    #[test]
    fn every_label_has_a_name() {
        for l in CaseLabel::ALL {
            let json = serde_json::to_string(&l).unwrap();
            assert_eq!(json, format!("\"{}\"", l.as_str()));
        }
    }

    #[test]
    fn trace_json_shape() {
        let t = find_trail(&Graph::new(3));
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["side"], "co-G");
        assert_eq!(v["fallback"], false);
        assert_eq!(v["case_path"][0], "Base");
        assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn validate_rejects_bad_traces() {
        let g = Graph::complete(4);
        let good = find_trail(&g);
        assert!(validate_trace(&g, &good).is_ok());

        let repeated = ProofTrace {
            vertices: vec![0, 1, 0, 2],
            ..good.clone()
        };
        assert_eq!(validate_trace(&g, &repeated), Err(TraceViolation::RepeatedEdge(0, 1)));

        let wrong_side = ProofTrace {
            side: Side::CoG,
            ..good.clone()
        };
        assert!(matches!(validate_trace(&g, &wrong_side), Err(TraceViolation::NotInSide { .. })));

        let short = ProofTrace {
            vertices: vec![0, 1],
            ..good.clone()
        };
        assert!(matches!(validate_trace(&g, &short), Err(TraceViolation::WrongLength { .. })));

        let outside = ProofTrace {
            vertices: vec![0, 1, 2, 9],
            ..good
        };
        assert_eq!(validate_trace(&g, &outside), Err(TraceViolation::VertexOutOfRange(9)));
    }

    #[test]
    fn random_graphs_do_not_fall_back() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for k in 11..=30 {
            for p in [0.1, 0.3, 0.5, 0.7] {
                for _ in 0..20 {
                    let mut g = Graph::new(k);
                    for v in 1..k {
                        for u in 0..v {
                            if rng.gen_bool(p) {
                                g.add_edge(u, v);
                            }
                        }
                    }
                    let t = run(&g);
                    assert!(!t.fallback_used, "{}: {:?}", g.to_graph6(), t.fallback_events);
                }
            }
        }
    }

    fn step_on(g: &Graph, s: usize, trail: &[usize]) -> (CaseLabel, Side, Trail) {
        let mut p = Prover {
            sides: [g.clone(), g.complement()],
            path: Vec::new(),
            events: Vec::new(),
        };
        let t = Trail::new(trail.to_vec()).unwrap();
        let (label, outcome) = p.step(s, Side::G, &t);
        let (side, vs) = outcome.unwrap();
        (label, side, p.accept(s, side, vs).unwrap())
    }

    #[test]
    fn circuit_with_more_used_than_free_vertices() {
        // Two 4-cycles through vertex 0; vertices 8, 9, 10 untouched.
        let s = [0, 1, 2, 3, 0, 4, 5, 6, 7, 0];
        let edges: Vec<(usize, usize)> = s.windows(2).map(|w| (w[0], w[1])).collect();
        let g = Graph::from_edges(11, &edges).unwrap();
        let (label, side, t) = step_on(&g, 11, &s);
        assert_eq!((label, side, t.vertex_count()), (CaseLabel::Case2_1, Side::CoG, 11));
    }

    #[test]
    fn circuit_with_fewer_used_than_free_vertices() {
        let k5 = Graph::complete(5);
        let circuit = eulerian_trail(&k5).unwrap();
        let g = k5.disjoint_union(&Graph::new(7));
        let (label, side, t) = step_on(&g, 12, circuit.vertices());
        assert_eq!((label, side, t.vertex_count()), (CaseLabel::Case2_2, Side::CoG, 12));
    }

    #[test]
    fn path_step() {
        let g = Graph::path(10).disjoint_union(&Graph::new(1));
        let s: Vec<usize> = (0..10).collect();
        let (label, side, _) = step_on(&g, 11, &s);
        assert_eq!((label, side), (CaseLabel::Case1, Side::CoG));
    }

    #[test]
    fn all_graphs_on_six_vertices() {
        for key in 0..1u64 << 15 {
            run(&graph_from_key(6, key));
        }
    }
}
