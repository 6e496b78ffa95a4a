//! graph6 and sparse6 text formats.
//!
//! graph6 carries simple graphs; sparse6 carries multigraphs (parallel edges
//! and loops). Both are decoded bit-exactly per the published format
//! description. Emitters produce header-free lines; parsers tolerate the
//! optional `>>graph6<<` / `>>sparse6<<` headers.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const SPARSE6_HEADER: &str = ">>sparse6<<";

/// Parses one line in either format, keyed on the leading `:` of sparse6.
pub fn parse_line(line: &str) -> Result<Multigraph> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let body = trimmed
        .strip_prefix(GRAPH6_HEADER)
        .or_else(|| trimmed.strip_prefix(SPARSE6_HEADER))
        .unwrap_or(trimmed);
    if body.starts_with(':') {
        parse_sparse6(trimmed)
    } else {
        parse_graph6(trimmed)
    }
}

fn check_byte(bytes: &[u8], pos: usize) -> Result<u64> {
    match bytes.get(pos) {
        None => Err(Error::parse(pos, "unexpected end of line")),
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(Error::parse(pos, format!("byte 0x{b:02x} out of range"))),
    }
}

/// Reads the N(n) vertex-count prefix; returns (n, bytes consumed).
fn read_order(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let first = check_byte(bytes, start)?;
    if first != 63 {
        return Ok((first as usize, 1));
    }
    let second = check_byte(bytes, start + 1)?;
    if second != 63 {
        let mut n = second;
        for i in 2..4 {
            n = (n << 6) | check_byte(bytes, start + i)?;
        }
        return Ok((n as usize, 4));
    }
    let mut n: u64 = 0;
    for i in 2..8 {
        n = (n << 6) | check_byte(bytes, start + i)?;
    }
    Ok((n as usize, 8))
}

fn write_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8) + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8) + 63);
        }
    }
}

/// Decodes a graph6 line (simple graph, upper-triangle adjacency bits).
pub fn parse_graph6(line: &str) -> Result<Multigraph> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let body = trimmed.strip_prefix(GRAPH6_HEADER).unwrap_or(trimmed);
    let offset = trimmed.len() - body.len();
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(offset, "empty graph6 line"));
    }
    if bytes[0] == b':' {
        return Err(Error::parse(offset, "sparse6 line passed to graph6 parser"));
    }
    let (n, consumed) = read_order(bytes, 0).map_err(|e| shift_offset(e, offset))?;
    if n == 0 {
        return Err(Error::parse(offset, "graph6 order must be at least 1"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != consumed + nbytes {
        let pos = offset + consumed + nbytes.min(bytes.len() - consumed);
        return Err(Error::parse(
            pos,
            format!(
                "expected {} data bytes for n = {n}, found {}",
                nbytes,
                bytes.len() - consumed
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = check_byte(bytes, consumed + bit / 6).map_err(|e| shift_offset(e, offset))?;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Multigraph::new(n, edges)
}

/// Encodes a simple graph as a header-free graph6 line.
pub fn emit_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::input(
            "graph6 carries simple graphs only; use sparse6 for multigraphs",
        ));
    }
    let n = g.vertex_count();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u as usize * n + v as usize] = true;
        adj[v as usize * n + u as usize] = true;
    }
    let mut out = Vec::new();
    write_order(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(adj[u * n + v]);
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
    Ok(String::from_utf8(out).expect("printable ascii"))
}

fn sparse6_width(n: usize) -> usize {
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

/// Decodes a sparse6 line; parallel edges and loops are preserved.
pub fn parse_sparse6(line: &str) -> Result<Multigraph> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let body = trimmed.strip_prefix(SPARSE6_HEADER).unwrap_or(trimmed);
    let offset = trimmed.len() - body.len();
    let bytes = body.as_bytes();
    if bytes.first() != Some(&b':') {
        return Err(Error::parse(offset, "sparse6 line must start with ':'"));
    }
    let (n, consumed) = read_order(bytes, 1).map_err(|e| shift_offset(e, offset))?;
    if n == 0 {
        return Err(Error::parse(offset, "sparse6 order must be at least 1"));
    }
    let data_start = 1 + consumed;
    let mut bits = Vec::with_capacity((bytes.len() - data_start) * 6);
    for pos in data_start..bytes.len() {
        let val = check_byte(bytes, pos).map_err(|e| shift_offset(e, offset))?;
        for shift in (0..6).rev() {
            bits.push(((val >> shift) & 1) as u8);
        }
    }
    let k = sparse6_width(n);
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut i = 0usize;
    while i + 1 + k <= bits.len() {
        let b = bits[i];
        let mut x = 0usize;
        for j in 0..k {
            x = (x << 1) | bits[i + 1 + j] as usize;
        }
        i += 1 + k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    Multigraph::new(n, edges)
}

/// Encodes any multigraph as a header-free sparse6 line. Edges are written
/// in sorted order, so the decoded edge list comes back canonically sorted
/// by (max endpoint, min endpoint).
pub fn emit_sparse6(g: &Multigraph) -> String {
    let n = g.vertex_count();
    let k = sparse6_width(n);
    let mut sorted: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (v as usize, u as usize))
        .collect();
    sorted.sort_unstable();

    let mut bits: Vec<u8> = Vec::new();
    let push_val = |bits: &mut Vec<u8>, x: usize| {
        for shift in (0..k).rev() {
            bits.push(((x >> shift) & 1) as u8);
        }
    };
    let mut curv = 0usize;
    for (v, u) in sorted {
        if v == curv {
            bits.push(0);
            push_val(&mut bits, u);
        } else if v == curv + 1 {
            curv = v;
            bits.push(1);
            push_val(&mut bits, u);
        } else {
            curv = v;
            bits.push(1);
            push_val(&mut bits, v);
            bits.push(0);
            push_val(&mut bits, u);
        }
    }
    // Pad with 1s. When n = 2^k, vertex n-2 carries the last edge and the
    // padding forms a complete (b, x) group, the 1s would decode as a loop
    // {n-1, n-1}; a leading 0 bit turns that group into a harmless jump.
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && pad >= k + 1 && n >= 2 && curv == n - 2 {
        bits.push(0);
    }
    while bits.len() % 6 != 0 {
        bits.push(1);
    }

    let mut out = vec![b':'];
    write_order(&mut out, n);
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for &b in chunk {
            val = (val << 1) | b;
        }
        out.push(val + 63);
    }
    String::from_utf8(out).expect("printable ascii")
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, msg } => Error::Parse {
            offset: offset + by,
            msg,
        },
        other => other,
    }
}
