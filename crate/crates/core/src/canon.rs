//! Canonical labelling of small graphs (at most 11 vertices).
//!
//! Vertices are first split by degree and the partition is refined to an
//! equitable one; non-singleton cells are then individualised one vertex at
//! a time. Every discrete leaf of that search tree yields a relabelling, and
//! the canonical key is the smallest upper-triangle bitstring (graph6 bit
//! order, first bit most significant) among the leaves. Branches on twin
//! vertices are skipped: swapping twins is an automorphism fixing the
//! current partition, so their subtrees yield the same keys.

use crate::graph::Graph;

pub const MAX_CANON_ORDER: usize = 11;

const W: usize = 16;

/// Adjacency rows of a graph on at most [`MAX_CANON_ORDER`] vertices.
pub(crate) type Rows = [u16; W];

pub(crate) fn rows_of(g: &Graph) -> Rows {
    assert!(
        g.order() <= MAX_CANON_ORDER,
        "canonical labelling supports at most {MAX_CANON_ORDER} vertices"
    );
    let mut rows = [0u16; W];
    for (v, row) in rows.iter_mut().enumerate().take(g.order()) {
        *row = g.row_u64(v) as u16;
    }
    rows
}

pub(crate) fn graph_of(n: usize, rows: &Rows) -> Graph {
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if rows[i] >> j & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Number of bits in the key of an `n`-vertex graph.
#[inline]
pub(crate) fn key_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Upper-triangle bitstring of the relabelled graph whose vertex `i` is the
/// old vertex `lab[i]`.
#[inline]
pub(crate) fn key_of(rows: &Rows, n: usize, lab: &[u8; W]) -> u64 {
    let mut key = 0u64;
    for j in 1..n {
        let rj = lab[j];
        for &li in &lab[..j] {
            key = (key << 1) | (rows[li as usize] >> rj & 1) as u64;
        }
    }
    key
}

pub(crate) fn rows_from_key(n: usize, key: u64) -> Rows {
    let mut rows = [0u16; W];
    let mut bit = key_bits(n);
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if key >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

pub fn graph_from_key(n: usize, key: u64) -> Graph {
    graph_of(n, &rows_from_key(n, key))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Labeling {
    pub key: u64,
    /// `lab[new] = old`.
    pub lab: [u8; W],
}

pub(crate) fn canon(rows: &Rows, n: usize) -> Labeling {
    debug_assert!(n <= MAX_CANON_ORDER);
    let mut lab = [0u8; W];
    for (i, l) in lab.iter_mut().enumerate() {
        *l = i as u8;
    }
    if n <= 1 {
        return Labeling { key: 0, lab };
    }
    let mut best = None;
    search(rows, n, lab, 1, &mut best);
    best.unwrap()
}

fn search(rows: &Rows, n: usize, mut lab: [u8; W], starts: u16, best: &mut Option<Labeling>) {
    let starts = refine(rows, n, &mut lab, starts);
    let full = ((1u32 << n) - 1) as u16;
    if starts == full {
        let key = key_of(rows, n, &lab);
        if best.is_none_or(|b| key < b.key) {
            *best = Some(Labeling { key, lab });
        }
        return;
    }
    // First non-singleton cell.
    let s = (0..n).find(|&p| starts >> p & 1 == 1 && p + 1 < n && starts >> (p + 1) & 1 == 0).unwrap();
    let e = (s + 1..n).find(|&p| starts >> p & 1 == 1).unwrap_or(n);
    let mut chosen = [0u8; W];
    let mut nchosen = 0;
    for p in s..e {
        let v = lab[p];
        let twin = chosen[..nchosen].iter().any(|&c| {
            rows[v as usize] & !(1 << c) == rows[c as usize] & !(1 << v)
        });
        if twin {
            continue;
        }
        chosen[nchosen] = v;
        nchosen += 1;
        let mut child = lab;
        child.swap(s, p);
        search(rows, n, child, starts | 1 << (s + 1), best);
    }
}

/// Refines the ordered partition until every cell is equitable. Cells split
/// by the vector of neighbour counts into each cell, sub-cells ordered by
/// that vector.
fn refine(rows: &Rows, n: usize, lab: &mut [u8; W], mut starts: u16) -> u16 {
    loop {
        let mut bounds = [(0usize, 0usize); W];
        let mut ncells = 0;
        let mut p = 0;
        while p < n {
            let mut e = p + 1;
            while e < n && starts >> e & 1 == 0 {
                e += 1;
            }
            bounds[ncells] = (p, e);
            ncells += 1;
            p = e;
        }
        if ncells == n {
            return starts;
        }
        let mut masks = [0u16; W];
        for (c, &(s, e)) in bounds[..ncells].iter().enumerate() {
            for &v in &lab[s..e] {
                masks[c] |= 1 << v;
            }
        }
        let mut next = starts;
        for &(s, e) in &bounds[..ncells] {
            if e - s < 2 {
                continue;
            }
            let mut sig = [0u64; W];
            for q in s..e {
                let r = rows[lab[q] as usize];
                sig[q] = masks[..ncells]
                    .iter()
                    .fold(0u64, |acc, &m| (acc << 4) | (r & m).count_ones() as u64);
            }
            // Insertion sort of the cell by signature.
            for q in s + 1..e {
                let mut t = q;
                while t > s && sig[t - 1] > sig[t] {
                    sig.swap(t - 1, t);
                    lab.swap(t - 1, t);
                    t -= 1;
                }
            }
            for q in s + 1..e {
                if sig[q] != sig[q - 1] {
                    next |= 1 << q;
                }
            }
        }
        if next == starts {
            return starts;
        }
        starts = next;
    }
}

/// Canonical key of `g`: equal for two graphs of the same order iff they
/// are isomorphic.
pub fn canonical_key(g: &Graph) -> u64 {
    canon(&rows_of(g), g.order()).key
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_key(g.order(), canonical_key(g))
}

/// `lab[i]` is the vertex of `g` that becomes vertex `i` of the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let l = canon(&rows_of(g), g.order());
    l.lab[..g.order()].iter().map(|&v| v as usize).collect()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && canonical_key(a) == canonical_key(b)
}

/// Rows of `rows` with vertex `w` deleted and the later vertices shifted down.
pub(crate) fn delete_vertex(rows: &Rows, n: usize, w: usize) -> Rows {
    let mut out = [0u16; W];
    let low = (1u16 << w) - 1;
    let mut t = 0;
    for (v, &r) in rows.iter().enumerate().take(n) {
        if v == w {
            continue;
        }
        out[t] = (r & low) | ((r >> 1) & !low);
        t += 1;
    }
    out
}
