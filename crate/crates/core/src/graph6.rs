//! graph6 text encoding for simple graphs.
//!
//! Byte 0 is `63 + n`. The upper triangle is then read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte (first bit is
//! the most significant), zero padded, and each group is offset by 63.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("invalid graph6 order byte")]
    BadHeader,
    #[error("graph6 record too short: expected {expected} data bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("unexpected data after graph6 record at byte {0}")]
    TrailingGarbage(usize),
    #[error("invalid graph6 byte at position {0}")]
    BadByte(usize),
    #[error("graph order {0} exceeds the supported maximum")]
    OrderTooLarge(usize),
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let &first = bytes.first().ok_or(Graph6Error::BadHeader)?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::BadHeader);
    }
    if first == 126 {
        // multi-byte order: n >= 63
        return Err(Graph6Error::OrderTooLarge(63));
    }
    let n = usize::from(first - 63);
    if n == 0 {
        return Err(Graph6Error::BadHeader);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage(1 + expected));
    }
    let mut groups = Vec::with_capacity(expected);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(1 + i));
        }
        groups.push(b - 63);
    }
    let bit = |k: usize| groups[k / 6] >> (5 - k % 6) & 1 == 1;
    // padding bits must be zero
    if let Some(k) = (nbits..expected * 6).find(|&k| bit(k)) {
        return Err(Graph6Error::TrailingGarbage(1 + k / 6));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(2 + n * n / 12);
    out.push(char::from(63 + n as u8));
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(63 + (group << (6 - filled))));
    }
    out
}
