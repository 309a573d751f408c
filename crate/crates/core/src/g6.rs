//! Bit-exact graph6 codec.
//!
//! Records are the standard format emitted by the usual enumeration tools:
//! an order header (one byte `n+63` for `n <= 62`, or `126` followed by a
//! three-byte 18-bit big-endian value for larger orders, capped here at
//! 512), then the upper triangle of the adjacency matrix in column-major
//! order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte
//! most-significant first, every byte offset by 63. Decoding is strict:
//! non-minimal headers, trailing bytes, and non-zero padding bits are all
//! rejected, so `encode(decode(x)) == x` on every accepted record.

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;
use thiserror::Error;

/// Decode failure, pinned to the byte where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 decode error at byte {offset}: {kind}")]
pub struct DecodeError {
    pub offset: usize,
    pub kind: DecodeErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeErrorKind {
    #[error("empty record")]
    Empty,
    #[error("{0} records are not supported")]
    UnsupportedFormat(&'static str),
    #[error("byte {0:#04x} outside the printable graph6 range 63..=126")]
    InvalidByte(u8),
    #[error("order {0} exceeds the {MAX_VERTICES}-vertex capacity")]
    OrderTooLarge(usize),
    #[error("long-form header used for an order that fits the short form")]
    NonMinimalHeader,
    #[error("record truncated: expected {expected} adjacency bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes after the adjacency data")]
    TrailingGarbage,
    #[error("padding bits are not zero")]
    NonZeroPadding,
}

fn err(offset: usize, kind: DecodeErrorKind) -> DecodeError {
    DecodeError { offset, kind }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parse one graph6 record.
pub fn decode(bytes: &[u8]) -> Result<Graph, DecodeError> {
    let first = *bytes.first().ok_or_else(|| err(0, DecodeErrorKind::Empty))?;
    let (n, header_len) = match first {
        b':' | b';' => return Err(err(0, DecodeErrorKind::UnsupportedFormat("sparse6"))),
        b'&' => return Err(err(0, DecodeErrorKind::UnsupportedFormat("digraph6"))),
        126 => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(err(1, DecodeErrorKind::UnsupportedFormat("8-byte order")));
            }
            if bytes.len() < 4 {
                return Err(err(
                    bytes.len(),
                    DecodeErrorKind::Truncated {
                        expected: 4,
                        found: bytes.len(),
                    },
                ));
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(err(1 + i, DecodeErrorKind::InvalidByte(b)));
                }
                n = (n << 6) | (b - 63) as usize;
            }
            if n > MAX_VERTICES {
                return Err(err(0, DecodeErrorKind::OrderTooLarge(n)));
            }
            if n <= 62 {
                return Err(err(0, DecodeErrorKind::NonMinimalHeader));
            }
            (n, 4)
        }
        63..=125 => ((first - 63) as usize, 1),
        _ => return Err(err(0, DecodeErrorKind::InvalidByte(first))),
    };

    let expected = data_len(n);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(err(
            bytes.len(),
            DecodeErrorKind::Truncated {
                expected,
                found: data.len(),
            },
        ));
    }
    if data.len() > expected {
        return Err(err(header_len + expected, DecodeErrorKind::TrailingGarbage));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(header_len + k, DecodeErrorKind::InvalidByte(b)));
        }
        let group = b - 63;
        for shift in (0..6).rev() {
            let bit = (group >> shift) & 1;
            if bit_index >= total_bits {
                if bit != 0 {
                    return Err(err(header_len + k, DecodeErrorKind::NonZeroPadding));
                }
            } else if bit == 1 {
                edges.push(pair_at(bit_index));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Column-major upper-triangle position of linear bit `k`.
fn pair_at(k: usize) -> (usize, usize) {
    // Smallest j with j(j-1)/2 > k.
    let mut j = 1usize;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// Encode a graph as one graph6 record (no trailing newline).
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    out
}

/// `encode` as a `String` (graph6 is pure printable ASCII).
pub fn encode_string(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 bytes are ASCII")
}
