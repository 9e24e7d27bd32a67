//! graph6 encoding (McKay's nauty format).
//!
//! All three size forms are supported: one byte for `n <= 62`, `~` plus three
//! bytes up to 258047, and `~~` plus six bytes beyond that. The payload is the
//! upper triangle read column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
//! six bits per byte, most significant bit first, zero padded. Non-zero padding
//! is rejected so that decoding is injective.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

impl Graph {
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
            return Err(Error::parse(1, format!("byte {} at offset {pos} outside [63, 126]", bytes[pos])));
        }

        let (n, body) = decode_size(bytes)?;
        if n == 0 {
            return Err(Error::parse(1, "graph6 graphs must have at least one vertex"));
        }
        let nbits = n * (n - 1) / 2;
        let expected = nbits.div_ceil(6);
        if body.len() != expected {
            return Err(Error::parse(
                1,
                format!("n = {n} needs {expected} payload bytes, found {}", body.len()),
            ));
        }

        let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
        if (nbits..expected * 6).any(bit) {
            return Err(Error::parse(1, "non-zero padding bits"));
        }

        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bit(k) {
                    g.add_edge(u, v)?;
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Encodes without the optional `>>graph6<<` header and without a newline.
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = encode_size(n);
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                acc = acc << 1 | u8::from(self.has_edge(u, v));
                filled += 1;
                if filled == 6 {
                    out.push(acc + BIAS);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + BIAS);
        }
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let read = |digits: &[u8]| digits.iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - BIAS));
    match bytes {
        [] => Err(Error::parse(1, "empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((read(&rest[..6]), &rest[6..])),
        [126, 126, ..] => Err(Error::parse(1, "truncated 8-byte size field")),
        [126, rest @ ..] if rest.len() >= 3 => Ok((read(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::parse(1, "truncated 4-byte size field")),
        [b, rest @ ..] => Ok((usize::from(b - BIAS), rest)),
    }
}

fn encode_size(n: usize) -> Vec<u8> {
    let digits = |count: usize| (0..count).rev().map(move |k| ((n >> (6 * k)) & 63) as u8 + BIAS);
    if n <= 62 {
        vec![n as u8 + BIAS]
    } else if n <= 258_047 {
        std::iter::once(126).chain(digits(3)).collect()
    } else {
        [126, 126].into_iter().chain(digits(6)).collect()
    }
}
