//! Lower-bound witnesses: graphs on `n` vertices such that neither the graph
//! nor its complement has a trail with `k` vertices, so `R(T_k, T_k) > n`.
//!
//! For `k <= 6` the witnesses are fixed small graphs. For `k >= 7` the
//! witness lives on `n_w` vertices, the largest order whose complete graph
//! has at most `2k - 2` edges, and is built by splitting the edges of
//! `K_{n_w}` so that both sides are short or have four odd vertices.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::euler::eulerian_trail;
use crate::graph::Graph;
use crate::solver::{has_trail_with_k, MAX_SEARCH_ORDER};

/// Largest `k` whose witness is checked by exact search.
pub const EXHAUSTIVE_MAX_K: usize = 30;

/// Number of vertices of a complete graph with `m` edges, `(1 + sqrt(1 + 8m)) / 2`.
/// Integral exactly when `m` is triangular.
pub fn complete_graph_order(m: u64) -> f64 {
    (1.0 + ((1 + 8 * m) as f64).sqrt()) / 2.0
}

/// The `n` with `n(n-1)/2 = m`, if there is one.
pub fn triangular_root(m: u64) -> Option<u64> {
    let n = max_complete_order(m);
    (n * (n - 1) / 2 == m).then_some(n)
}

/// Largest `n >= 1` with `n(n-1)/2 <= m`.
pub fn max_complete_order(m: u64) -> u64 {
    // n(n-1)/2 <= m  <=>  (2n-1)^2 <= 8m+1
    (1 + (8 * m + 1).isqrt()) / 2
}

/// The closed-form lower bound: `k` for `k <= 6`, else `ceil((1 + sqrt(16k - 7)) / 2)`.
pub fn lb_formula(k: u64) -> u64 {
    assert!(k >= 2, "k must be at least 2");
    if k <= 6 {
        return k;
    }
    let d = 16 * k - 7;
    let s = d.isqrt();
    let r = if s * s == d { s } else { s + 1 };
    // smallest m with 2m - 1 >= sqrt(d)
    (r + 2) / 2
}

/// Order of the witness graph for `k`.
pub fn witness_order(k: usize) -> usize {
    match k {
        0 | 1 => 0,
        2..=6 => k - 1,
        _ => max_complete_order(2 * k as u64 - 2) as usize,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    /// Exact search finds no `k`-vertex trail on either side.
    Exhaustive,
    /// On both sides every component has at most `k - 2` trail edges by the
    /// parity bound.
    Structural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessCase {
    /// One of the fixed graphs for `k <= 6`.
    Small,
    /// `|E(K_n)| <= 2k - 4`: half of the edges on each side.
    HalfSplit,
    /// `|E(K_n)| = 2k - 3`.
    CycleShort,
    /// `|E(K_n)| = 2k - 2`.
    CycleFull,
}

/// How a witness was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub case: WitnessCase,
    pub order: usize,
    pub complete_edges: usize,
    /// Edges taken from a trail of the remainder graph.
    pub trail_edges: usize,
    /// False when the remainder is disconnected and its component circuits
    /// were used one after another.
    pub remainder_connected: bool,
    /// The two cycle edges removed.
    pub removed: Option<((usize, usize), (usize, usize))>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub k: usize,
    pub graph: Graph,
    /// Claimed bound: `R(T_k, T_k) >= bound`.
    pub bound: usize,
    pub evidence: Evidence,
    pub construction: Option<Construction>,
}

impl WitnessCertificate {
    pub fn implied_bound(&self) -> usize {
        self.graph.order() + 1
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    k: usize,
    graph6: String,
    evidence: Evidence,
    bound: usize,
}

impl Serialize for WitnessCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CertificateDoc {
            k: self.k,
            graph6: self.graph.to_graph6(),
            evidence: self.evidence,
            bound: self.bound,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WitnessCertificate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = CertificateDoc::deserialize(deserializer)?;
        let graph = Graph::from_graph6(&doc.graph6).map_err(serde::de::Error::custom)?;
        Ok(WitnessCertificate {
            k: doc.k,
            graph,
            bound: doc.bound,
            evidence: doc.evidence,
            construction: None,
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("k = {0} is below 2")]
    InvalidK(usize),
    #[error("no pair of cycle edges leaves exactly four odd vertices (k = {k}, S = {s_graph6}, {construction:?})")]
    NoEdgePair {
        k: usize,
        s_graph6: String,
        construction: Construction,
    },
    #[error("remainder has only {available} edges, {needed} needed (k = {k}, {construction:?})")]
    ShortRemainder {
        k: usize,
        needed: usize,
        available: usize,
        construction: Construction,
    },
    #[error("constructed graph {graph6} fails its own check (k = {k}, {construction:?})")]
    Unverified {
        k: usize,
        graph6: String,
        construction: Construction,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

fn evidence_for(k: usize) -> Evidence {
    if k <= EXHAUSTIVE_MAX_K {
        Evidence::Exhaustive
    } else {
        Evidence::Structural
    }
}

/// Witness for `R(T_k, T_k) > witness_order(k)`, with the evidence kind used
/// by [`check_certificate`].
pub fn witness(k: usize) -> Result<WitnessCertificate, WitnessError> {
    match k {
        0 | 1 => Err(WitnessError::InvalidK(k)),
        2..=6 => Ok(witness_small(k)),
        _ => witness_large(k),
    }
}

/// The fixed witnesses for `2 <= k <= 6`.
pub fn witness_small(k: usize) -> WitnessCertificate {
    let (n, edges): (usize, &[(usize, usize)]) = match k {
        2 => (1, &[]),
        3 => (2, &[(0, 1)]),
        4 => (3, &[(0, 2)]),
        // K_{1,3}; the complement is a triangle plus an isolated vertex.
        5 => (4, &[(0, 3), (1, 3), (2, 3)]),
        // A triangle with a pendant edge at two of its corners.
        6 => (5, &[(0, 4), (0, 1), (1, 4), (3, 4), (1, 2)]),
        _ => panic!("small witnesses exist for k in 2..=6, got {k}"),
    };
    let graph = Graph::from_edges(n, edges).expect("fixed edge lists are valid");
    WitnessCertificate {
        k,
        graph,
        bound: n + 1,
        evidence: Evidence::Exhaustive,
        construction: Some(Construction {
            case: WitnessCase::Small,
            order: n,
            complete_edges: n * n.saturating_sub(1) / 2,
            trail_edges: 0,
            remainder_connected: true,
            removed: None,
        }),
    }
}

/// The construction for `k >= 7`.
pub fn witness_large(k: usize) -> Result<WitnessCertificate, WitnessError> {
    assert!(k >= 7, "the large construction needs k >= 7, got {k}");
    let n = witness_order(k);
    let total = n * (n - 1) / 2;
    let mut construction = Construction {
        case: WitnessCase::HalfSplit,
        order: n,
        complete_edges: total,
        trail_edges: 0,
        remainder_connected: true,
        removed: None,
    };

    let graph = if total <= 2 * k - 4 {
        let edges: Vec<(usize, usize)> = Graph::complete(n).edges().take(total.div_ceil(2)).collect();
        Graph::from_edges(n, &edges).expect("edges of K_n")
    } else {
        construction.case = if total == 2 * k - 3 {
            WitnessCase::CycleShort
        } else {
            WitnessCase::CycleFull
        };
        cycle_construction(k, n, &mut construction)?
    };

    let cert = WitnessCertificate {
        k,
        graph,
        bound: n + 1,
        evidence: evidence_for(k),
        construction: Some(construction.clone()),
    };
    if !structural_holds(&cert.graph, k) {
        return Err(WitnessError::Unverified {
            k,
            graph6: cert.graph.to_graph6(),
            construction,
        });
    }
    Ok(cert)
}

/// `S = C ∪ T` with `k + 1` edges, then two cycle edges removed so that
/// exactly four vertices are odd.
fn cycle_construction(k: usize, n: usize, construction: &mut Construction) -> Result<Graph, WitnessError> {
    let cycle = Graph::cycle(n);
    let mut rest = cycle.complement();
    if n % 2 == 0 {
        for i in 0..n / 2 {
            rest.remove_edge(i, i + n / 2);
        }
    }
    let needed = k + 1 - n;
    construction.trail_edges = needed;
    if rest.edge_count() < needed {
        return Err(WitnessError::ShortRemainder {
            k,
            needed,
            available: rest.edge_count(),
            construction: construction.clone(),
        });
    }

    let mut s = cycle.clone();
    let mut taken = 0;
    if rest.is_connected() {
        let trail = eulerian_trail(&rest).expect("remainder has even degrees");
        for (u, v) in trail.edges().take(needed) {
            s.add_edge(u, v);
        }
    } else {
        // Only happens for n = 6: the remainder is two disjoint triangles.
        construction.remainder_connected = false;
        for comp in rest.components() {
            let part = rest.induced(&comp.vertices);
            let trail = eulerian_trail(&part).expect("components have even degrees");
            for (u, v) in trail.edges() {
                if taken == needed {
                    break;
                }
                s.add_edge(comp.vertices[u], comp.vertices[v]);
                taken += 1;
            }
        }
    }
    debug_assert_eq!(s.edge_count(), k + 1);

    let cycle_edges: Vec<(usize, usize)> = cycle.edges().collect();
    let odd: Vec<bool> = (0..n).map(|v| s.degree(v) % 2 == 1).collect();
    let base = odd.iter().filter(|&&o| o).count() as isize;
    for (i, &e1) in cycle_edges.iter().enumerate() {
        for &e2 in &cycle_edges[i + 1..] {
            let mut flip = odd.clone();
            for v in [e1.0, e1.1, e2.0, e2.1] {
                flip[v] = !flip[v];
            }
            let delta: isize = (0..n).map(|v| flip[v] as isize - odd[v] as isize).sum();
            if base + delta == 4 {
                s.remove_edge(e1.0, e1.1);
                s.remove_edge(e2.0, e2.1);
                construction.removed = Some((e1, e2));
                return Ok(s);
            }
        }
    }
    Err(WitnessError::NoEdgePair {
        k,
        s_graph6: s.to_graph6(),
        construction: construction.clone(),
    })
}

fn structural_holds(g: &Graph, k: usize) -> bool {
    g.trail_edge_upper_bound() + 2 <= k && g.complement().trail_edge_upper_bound() + 2 <= k
}

/// `Ok(true)` if the evidence holds, `Ok(false)` if it does not, and an
/// error if the certificate is not well formed.
pub fn check_certificate(c: &WitnessCertificate) -> Result<bool, CertificateError> {
    let n = c.graph.order();
    if c.k < 2 {
        return Err(CertificateError::Malformed(format!("k = {} is below 2", c.k)));
    }
    if n == 0 {
        return Err(CertificateError::Malformed("graph has no vertices".into()));
    }
    if c.bound != n + 1 {
        return Err(CertificateError::Malformed(format!(
            "bound {} does not match a graph on {} vertices",
            c.bound, n
        )));
    }
    match c.evidence {
        Evidence::Exhaustive => {
            if n > MAX_SEARCH_ORDER {
                return Err(CertificateError::Malformed(format!(
                    "exhaustive evidence on {n} vertices exceeds the search limit {MAX_SEARCH_ORDER}"
                )));
            }
            Ok(has_trail_with_k(&c.graph, c.k).is_none() && has_trail_with_k(&c.graph.complement(), c.k).is_none())
        }
        Evidence::Structural => Ok(structural_holds(&c.graph, c.k)),
    }
}
