//! graph6 / sparse6 serialization (published byte layout).
//!
//! graph6 is the interchange format; sparse6 is accepted on input only.
//! Parsing is strict: the vertex count must use the shortest admissible
//! length form and padding bits must be zero, so `emit(parse(s)) == s`
//! holds for every accepted string.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const GRAPH6_HEADER: &[u8] = b">>graph6<<";
const SPARSE6_HEADER: &[u8] = b">>sparse6<<";

fn check_byte(b: u8, offset: usize) -> Result<u64> {
    if !(63..=126).contains(&b) {
        return Err(Error::graph6(
            offset,
            format!("byte 0x{b:02x} outside 63..=126"),
        ));
    }
    Ok(u64::from(b - 63))
}

/// Decodes the N(n) size field; returns (n, bytes consumed).
fn parse_size(data: &[u8], base: usize) -> Result<(usize, usize)> {
    if data.is_empty() {
        return Err(Error::graph6(base, "empty input"));
    }
    if data[0] != b'~' {
        return Ok((check_byte(data[0], base)? as usize, 1));
    }
    if data.len() >= 2 && data[1] != b'~' {
        if data.len() < 4 {
            return Err(Error::graph6(
                base + data.len(),
                "truncated 3-byte size field",
            ));
        }
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | check_byte(data[i], base + i)?;
        }
        if n < 63 {
            return Err(Error::graph6(base, "non-minimal 3-byte size encoding"));
        }
        return Ok((n as usize, 4));
    }
    if data.len() < 8 {
        return Err(Error::graph6(
            base + data.len(),
            "truncated 6-byte size field",
        ));
    }
    let mut n = 0u64;
    for i in 2..8 {
        n = n << 6 | check_byte(data[i], base + i)?;
    }
    if n < 258048 {
        return Err(Error::graph6(base, "non-minimal 6-byte size encoding"));
    }
    Ok((n as usize, 8))
}

fn emit_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258047 {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in (0..6).rev() {
            out.push(63 + ((n >> (6 * shift)) & 63) as u8);
        }
    }
}

/// Parses one graph6 line (optionally prefixed with the `>>graph6<<` header).
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let (data, base) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, GRAPH6_HEADER.len()),
        None => (text, 0),
    };
    let data = data.strip_suffix(b"\n").unwrap_or(data);
    let (n, consumed) = parse_size(data, base)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            requested: n,
            cap: MAX_VERTICES,
        });
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &data[consumed..];
    if body.len() < nbytes {
        return Err(Error::graph6(
            base + data.len(),
            format!(
                "truncated: need {} edge bytes, found {}",
                nbytes,
                body.len()
            ),
        ));
    }
    if body.len() > nbytes {
        return Err(Error::graph6(
            base + consumed + nbytes,
            "trailing garbage after edge bits",
        ));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(nbits);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    for (k, &b) in body.iter().enumerate() {
        let word = check_byte(b, base + consumed + k)?;
        for shift in (0..6).rev() {
            let bit = word >> shift & 1;
            if bit_index < nbits {
                if bit == 1 {
                    edges.push(pairs[bit_index]);
                }
            } else if bit == 1 {
                return Err(Error::graph6(base + consumed + k, "nonzero padding bit"));
            }
            bit_index += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Canonical graph6 bytes under the graph's current vertex order.
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    emit_size(n, &mut out);
    let mut word = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + word);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (word << (6 - filled)));
    }
    out
}

pub fn emit_graph6_string(g: &Graph) -> String {
    String::from_utf8(emit_graph6(g)).expect("graph6 is ASCII")
}

/// Parses one sparse6 line (`:` prefix, optionally the `>>sparse6<<` header).
pub fn parse_sparse6(text: &[u8]) -> Result<Graph> {
    let (data, base) = match text.strip_prefix(SPARSE6_HEADER) {
        Some(rest) => (rest, SPARSE6_HEADER.len()),
        None => (text, 0),
    };
    let data = data.strip_suffix(b"\n").unwrap_or(data);
    if data.first() != Some(&b':') {
        return Err(Error::graph6(base, "sparse6 must start with ':'"));
    }
    let (n, consumed) = parse_size(&data[1..], base + 1)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            requested: n,
            cap: MAX_VERTICES,
        });
    }
    let body = &data[1 + consumed..];
    let mut bits = Vec::with_capacity(body.len() * 6);
    for (k, &b) in body.iter().enumerate() {
        let word = check_byte(b, base + 1 + consumed + k)?;
        for shift in (0..6).rev() {
            bits.push((word >> shift & 1) as u8);
        }
    }
    let k = if n <= 1 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    };
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0usize;
    while pos + k < bits.len() {
        let b = bits[pos];
        let mut x = 0usize;
        for i in 0..k {
            x = x << 1 | bits[pos + 1 + i] as usize;
        }
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(Error::graph6(
                base,
                format!("loop at vertex {x} in sparse6 stream"),
            ));
        } else {
            edges.push((x, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// Dispatches on the leading byte / header.
pub fn parse_auto(text: &[u8]) -> Result<Graph> {
    if text.starts_with(b":") || text.starts_with(SPARSE6_HEADER) {
        parse_sparse6(text)
    } else {
        parse_graph6(text)
    }
}

/// Best-effort DOT output for visual inspection.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => s.push_str(&format!("  {v} [label=\"{}\"];\n", l.replace('"', "'"))),
            None => s.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // values computed from the byte layout by hand
        assert_eq!(emit_graph6_string(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(emit_graph6_string(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(emit_graph6_string(&Graph::empty(1).unwrap()), "@");
        assert_eq!(emit_graph6_string(&Graph::empty(4).unwrap()), "C?");
    }

    #[test]
    fn k3_decodes() {
        let g = parse_graph6(b"Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn single_vertex_round_trip() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn star_from_spec_string() {
        // "D?{": 5 vertices, edges (0,4),(1,4),(2,4),(3,4)
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g), b"D?{");
    }

    #[test]
    fn round_trips_with_header_and_newline() {
        let g = parse_graph6(b">>graph6<<D?{\n").unwrap();
        assert_eq!(emit_graph6(&g), b"D?{");
    }

    #[test]
    fn long_size_form() {
        let g = Graph::empty(100).unwrap();
        let bytes = emit_graph6(&g);
        assert_eq!(bytes[0], b'~');
        let back = parse_graph6(&bytes).unwrap();
        assert_eq!(back.n(), 100);
        assert_eq!(emit_graph6(&back), bytes);
    }

    #[test]
    fn malformed_inputs_name_the_offset() {
        // out-of-range byte
        let err = parse_graph6(&[b'B', 0x20]).unwrap_err();
        assert!(err.to_string().contains("byte 1"), "{err}");
        // trailing garbage
        let err = parse_graph6(b"BwA").unwrap_err();
        assert!(err.to_string().contains("trailing"), "{err}");
        // truncated body
        let err = parse_graph6(b"D").unwrap_err();
        assert!(err.to_string().contains("truncated"), "{err}");
        // nonzero padding
        let err = parse_graph6(b"A`").unwrap_err();
        assert!(err.to_string().contains("padding"), "{err}");
        // non-minimal size field
        let err = parse_graph6(b"~??B").unwrap_err();
        assert!(err.to_string().contains("non-minimal"), "{err}");
    }

    #[test]
    fn cap_enforced() {
        let mut bytes = Vec::new();
        emit_size(5000, &mut bytes);
        assert!(matches!(parse_graph6(&bytes), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn sparse6_decodes_c5() {
        // C_5 encoded by hand: n=5, k=3, pairs
        // (1,000)(1,001)(1,010)(1,011)(0,000), padded with 1s:
        // 100010 011010 101100 001111 -> "aYkN"
        let g = parse_sparse6(b":DaYkN").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn sparse6_documented_example() {
        // ":Fa@x^" is the reference example: 7 vertices, edges
        // {0,1},{0,2},{1,2},{5,6}
        let g = parse_sparse6(b":Fa@x^").unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
    }

    #[test]
    fn auto_dispatch() {
        assert_eq!(parse_auto(b"Bw").unwrap().n(), 3);
        assert_eq!(parse_auto(b":DaYkN").unwrap().n(), 5);
    }

    #[test]
    fn dot_contains_edges() {
        let dot = to_dot(&Graph::complete(3).unwrap());
        assert!(dot.contains("0 -- 1"));
        assert!(dot.contains("1 -- 2"));
    }
}
