//! graph6 codec for graphs with at most 62 vertices (single-byte size field).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte,
//! most significant bit first, each byte offset by 63. Padding bits are zero.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the printable range 63..=126")]
    BadCharacter { pos: usize, byte: u8 },
    #[error("extended size encodings (n > {MAX_ORDER}) are not supported")]
    UnsupportedSize,
    #[error("payload has {found} bytes, expected {expected}")]
    Truncated { expected: usize, found: usize },
    #[error("payload has {found} bytes, expected {expected}")]
    TrailingData { expected: usize, found: usize },
    #[error("nonzero padding bits in the last byte")]
    NonzeroPadding,
    #[error("cannot encode {0} vertices; at most {MAX_ORDER} are supported")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Canonical graph6 encoding.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let (mut acc, mut nbits) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Strict decoding: nonzero padding bits are rejected.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    decode(text, true)
}

/// Like [`parse_graph6`] but ignores the padding bits.
pub fn parse_graph6_lenient(text: &str) -> Result<Graph, Graph6Error> {
    decode(text, false)
}

fn decode(text: &str, strict: bool) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadCharacter { pos, byte: bytes[pos] });
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::UnsupportedSize);
    }
    let n = (bytes[0] - 63) as usize;
    let payload = &bytes[1..];
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: payload.len() });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if strict && (total_bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
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
    Ok(Graph::new(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_at_sign() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert_eq!(emit_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn k4_is_c_tilde() {
        // n = 4 -> 67 = 'C'; six upper-triangle bits all set -> 63 + 63 = '~'
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), g);
    }

    #[test]
    fn five_vertex_reference_string() {
        // edges 0-2, 0-4, 1-3, 3-4: bits (0,1)..(3,4) = 0 1 0 0 0 1 | 1 0 0 1 -> 'Q', 'c'
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().size(), 6);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("C "), Err(Graph6Error::BadCharacter { pos: 1, byte: b' ' }));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedSize));
        assert_eq!(parse_graph6("E"), Err(Graph6Error::Truncated { expected: 3, found: 0 }));
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::TrailingData { expected: 1, found: 2 }));
        // n = 3 uses 3 of the 6 bits; '@' + 1 sets a padding bit
        assert_eq!(parse_graph6("BA"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(parse_graph6_lenient("BA").unwrap().size(), 0);
    }

    #[test]
    fn too_large_to_emit() {
        let g = Graph::new(63, []).unwrap();
        assert_eq!(emit_graph6(&g), Err(Graph6Error::TooLarge(63)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trip(n in 1usize..=62, seed in any::<u64>(), density in 0.0f64..1.0) {
                use rand::{Rng, SeedableRng};
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(density))
                    .collect();
                let g = Graph::new(n, edges).unwrap();
                let s = emit_graph6(&g).unwrap();
                prop_assert_eq!(parse_graph6(&s).unwrap(), g);
                prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
            }
        }
    }
}
