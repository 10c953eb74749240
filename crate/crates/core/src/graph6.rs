//! graph6 encoding (Brendan McKay's format).
//!
//! The header encodes the vertex count: one byte `n + 63` for `n <= 62`,
//! otherwise `~` followed by three bytes holding an 18-bit big-endian value.
//! The body packs the upper triangle column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`) six bits per byte, most significant bit first,
//! zero-padded, each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order expressible with the 18-bit long header.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("invalid graph6 character {byte:#04x} at position {position}")]
    InvalidCharacter { position: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected} for {order} vertices")]
    LengthMismatch {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("order {0} exceeds the graph6 limit of {MAX_ORDER}")]
    TooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "order {n} exceeds graph6 limit");
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidCharacter { position, byte });
        }
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit form; only meaningful beyond MAX_ORDER.
            return Err(Graph6Error::TooLarge(MAX_ORDER + 1));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, &bytes[4..])
    };
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            order: n,
            expected,
            found: body.len(),
        });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - total_bits;
    if pad > 0 && ((body[expected - 1] - 63) & ((1u8 << pad) - 1)) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
