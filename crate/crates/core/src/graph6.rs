//! graph6 and digraph6 codecs.
//!
//! graph6 packs the strict upper triangle of the adjacency matrix column by
//! column into 6-bit groups offset by 63; digraph6 is flagged by a leading
//! `&` and packs the full adjacency matrix row by row. The optional
//! `>>graph6<<` / `>>digraph6<<` headers are accepted on input and never
//! emitted.

use crate::error::{Error, Graph6Error, Result};
use crate::graph::{OrientedGraph, SimpleGraph};

const OFFSET: u8 = 63;

/// Either kind of graph a text input line can decode to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Simple(SimpleGraph),
    Oriented(OrientedGraph),
}

struct BitWriter {
    bytes: Vec<u8>,
    acc: u8,
    filled: u8,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter { bytes: Vec::new(), acc: 0, filled: 0 }
    }

    fn push(&mut self, bit: bool) {
        self.acc = (self.acc << 1) | bit as u8;
        self.filled += 1;
        if self.filled == 6 {
            self.bytes.push(self.acc + OFFSET);
            self.acc = 0;
            self.filled = 0;
        }
    }

    fn finish(mut self) -> Vec<u8> {
        if self.filled > 0 {
            self.bytes.push((self.acc << (6 - self.filled)) + OFFSET);
        }
        self.bytes
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    base: usize,
    pos: usize,
    bit: u8,
}

impl<'a> BitReader<'a> {
    fn new(bytes: &'a [u8], base: usize) -> Self {
        BitReader { bytes, base, pos: 0, bit: 0 }
    }

    fn next_bit(&mut self) -> Result<bool> {
        if self.pos >= self.bytes.len() {
            return Err(Graph6Error::Truncated.into());
        }
        let b = self.bytes[self.pos];
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                position: self.base + self.pos,
                byte: b,
            }
            .into());
        }
        let bit = (b - OFFSET) >> (5 - self.bit) & 1 == 1;
        if self.bit == 5 {
            self.bit = 0;
            self.pos += 1;
        } else {
            self.bit += 1;
        }
        Ok(bit)
    }

    /// Consumes the zero padding of the final partial byte and demands that
    /// the input stops there.
    fn finish(mut self) -> Result<()> {
        if self.bit != 0 {
            while self.bit != 0 {
                if self.next_bit()? {
                    return Err(Graph6Error::NonzeroPadding.into());
                }
            }
        }
        if self.pos != self.bytes.len() {
            return Err(Graph6Error::TrailingData.into());
        }
        Ok(())
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        // 18-bit form; the crate never emits the 36-bit form since orders
        // stop at 64.
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
}

fn decode_sixbit(bytes: &[u8], pos: usize) -> Result<u64> {
    let b = *bytes.get(pos).ok_or(Graph6Error::Truncated)?;
    if !(OFFSET..=126).contains(&b) {
        return Err(Graph6Error::InvalidByte { position: pos, byte: b }.into());
    }
    Ok((b - OFFSET) as u64)
}

/// Decodes N(n); returns the order and the number of bytes consumed.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or(Graph6Error::Truncated)?;
    if first != 126 {
        let n = decode_sixbit(bytes, 0)?;
        return Ok((n as usize, 1));
    }
    let second = *bytes.get(1).ok_or(Graph6Error::Truncated)?;
    if second != 126 {
        let n = (decode_sixbit(bytes, 1)? << 12)
            | (decode_sixbit(bytes, 2)? << 6)
            | decode_sixbit(bytes, 3)?;
        if n > 64 {
            return Err(Error::TooManyVertices(n as usize));
        }
        return Ok((n as usize, 4));
    }
    let mut n: u64 = 0;
    for i in 0..6 {
        n = (n << 6) | decode_sixbit(bytes, 2 + i)?;
    }
    if n > 64 {
        return Err(Error::TooManyVertices(n as usize));
    }
    Ok((n as usize, 8))
}

pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut bits = BitWriter::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    out.extend(bits.finish());
    String::from_utf8(out).expect("graph6 alphabet is ASCII")
}

pub fn to_digraph6(g: &OrientedGraph) -> String {
    let n = g.n();
    let mut out = vec![b'&'];
    encode_order(n, &mut out);
    let mut bits = BitWriter::new();
    for i in 0..n {
        for j in 0..n {
            bits.push(g.has_arc(i, j));
        }
    }
    out.extend(bits.finish());
    String::from_utf8(out).expect("graph6 alphabet is ASCII")
}

fn strip_header<'a>(input: &'a str, header: &str) -> Result<&'a str> {
    if input.starts_with(">>") {
        let full = format!(">>{header}<<");
        return input
            .strip_prefix(full.as_str())
            .ok_or_else(|| Graph6Error::BadHeader.into());
    }
    Ok(input)
}

pub fn parse_graph6(input: &str) -> Result<SimpleGraph> {
    let body = strip_header(input, "graph6")?;
    let bytes = body.as_bytes();
    if bytes.first() == Some(&b':') || bytes.first() == Some(&b';') {
        return Err(Graph6Error::Sparse6.into());
    }
    let (n, consumed) = decode_order(bytes)?;
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = SimpleGraph::new(n)?;
    let mut reader = BitReader::new(&bytes[consumed..], consumed);
    for j in 1..n {
        for i in 0..j {
            if reader.next_bit()? {
                g.add_edge(i, j)?;
            }
        }
    }
    reader.finish()?;
    Ok(g)
}

pub fn parse_digraph6(input: &str) -> Result<OrientedGraph> {
    let body = strip_header(input, "digraph6")?;
    let bytes = body.as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(Graph6Error::BadHeader.into());
    }
    let bytes = &bytes[1..];
    let (n, consumed) = decode_order(bytes)?;
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = OrientedGraph::new(n)?;
    let mut reader = BitReader::new(&bytes[consumed..], consumed + 1);
    for i in 0..n {
        for j in 0..n {
            if reader.next_bit()? {
                if i == j {
                    return Err(Graph6Error::Loops.into());
                }
                g.add_arc(i, j)?;
            }
        }
    }
    reader.finish()?;
    Ok(g)
}

/// Decodes a line as digraph6 when it carries the `&` flag or digraph
/// header, as graph6 otherwise.
pub fn parse_any(input: &str) -> Result<ParsedGraph> {
    let trimmed = input.trim();
    if trimmed.starts_with(">>digraph6<<") || trimmed.starts_with('&') {
        Ok(ParsedGraph::Oriented(parse_digraph6(trimmed)?))
    } else {
        Ok(ParsedGraph::Simple(parse_graph6(trimmed)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_known_strings() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let e3 = parse_graph6("B?").unwrap();
        assert_eq!((e3.n(), e3.edge_count()), (3, 0));
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, SimpleGraph::complete(3).unwrap());
        let p4 = parse_graph6("Ch").unwrap();
        assert_eq!(p4.canonical_key(), SimpleGraph::path(4).unwrap().canonical_key());
    }

    #[test]
    fn encodes_known_strings() {
        assert_eq!(to_graph6(&SimpleGraph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&SimpleGraph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&SimpleGraph::new(0).unwrap()), "?");
        assert_eq!(to_digraph6(&OrientedGraph::single_arc()), "&AO");
        assert_eq!(to_digraph6(&OrientedGraph::two_cycle()), "&AW");
    }

    #[test]
    fn round_trips_all_small_graphs() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for mask in 0u32..64 {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = SimpleGraph::from_edges(4, &edges).unwrap();
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
        for code in 0..81u32 {
            let mut g = OrientedGraph::new(3).unwrap();
            let mut c = code;
            for &(u, v) in &[(0, 1), (0, 2), (1, 2)] {
                match c % 3 {
                    1 => g.add_arc(u, v).unwrap(),
                    2 => {
                        g.add_arc(u, v).unwrap();
                        g.add_arc(v, u).unwrap();
                    }
                    _ => {}
                }
                c /= 3;
            }
            assert_eq!(parse_digraph6(&to_digraph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_order_form_round_trips() {
        let g = SimpleGraph::path(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn headers_are_accepted() {
        assert!(parse_graph6(">>graph6<<A_").is_ok());
        assert!(parse_digraph6(">>digraph6<<&AO").is_ok());
        assert!(matches!(
            parse_graph6(">>graph8<<A_"),
            Err(Error::Graph6(Graph6Error::BadHeader))
        ));
        assert!(matches!(parse_any(">>digraph6<<&AO").unwrap(), ParsedGraph::Oriented(_)));
        assert!(matches!(parse_any("A_").unwrap(), ParsedGraph::Simple(_)));
    }

    #[test]
    fn strict_failure_modes() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(Graph6Error::Truncated))));
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6(Graph6Error::Truncated))));
        assert!(matches!(
            parse_graph6("A_x"),
            Err(Error::Graph6(Graph6Error::TrailingData))
        ));
        assert!(matches!(
            parse_graph6("A@"),
            Err(Error::Graph6(Graph6Error::NonzeroPadding))
        ));
        assert!(matches!(
            parse_graph6("A\u{20}"),
            Err(Error::Graph6(Graph6Error::InvalidByte { .. }))
        ));
        assert!(matches!(parse_graph6(":A"), Err(Error::Graph6(Graph6Error::Sparse6))));
        assert!(matches!(
            parse_digraph6("AO"),
            Err(Error::Graph6(Graph6Error::BadHeader))
        ));
        assert!(matches!(parse_digraph6("&A_"), Err(Error::Graph6(Graph6Error::Loops))));
        // 126 opens the 18-bit order: 65 vertices must be refused.
        let too_big = format!("~{}{}{}", '?', '@', '@');
        assert!(matches!(parse_graph6(&too_big), Err(Error::TooManyVertices(65))));
    }
}
