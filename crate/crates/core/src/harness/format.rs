//! graph6 and edge-list text formats.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and a trailing
/// newline are accepted; padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = line.as_bytes();
    let mut pos = start;
    let next = |pos: &mut usize| -> Result<u64> {
        let Some(&b) = bytes.get(*pos) else {
            return Err(parse_err(*pos, "unexpected end of input"));
        };
        if !(63..=126).contains(&b) {
            return Err(parse_err(*pos, format!("byte {b:#04x} is outside the printable range 63..=126")));
        }
        *pos += 1;
        Ok(u64::from(b - 63))
    };

    let n = match bytes.get(pos) {
        None => return Err(parse_err(pos, "missing vertex count")),
        Some(b'~') => {
            pos += 1;
            if bytes.get(pos) == Some(&b'~') {
                pos += 1;
                let mut n = 0u64;
                for _ in 0..6 {
                    n = n << 6 | next(&mut pos)?;
                }
                n
            } else {
                let mut n = 0u64;
                for _ in 0..3 {
                    n = n << 6 | next(&mut pos)?;
                }
                n
            }
        }
        Some(_) => next(&mut pos)?,
    };
    if n > MAX_VERTICES as u64 {
        return Err(parse_err(start, format!("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body_start = pos;
    let mut g = Graph::empty(n)?;
    let (mut i, mut j) = (0, 1);
    for k in 0..body_len {
        let offset = body_start + k;
        let chunk = next(&mut pos)?;
        for b in 0..6 {
            let bit = chunk >> (5 - b) & 1 == 1;
            if 6 * k + b >= bits {
                if bit {
                    return Err(parse_err(offset, "nonzero padding bit"));
                }
                continue;
            }
            if bit {
                g.add_edge(i, j);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    if pos != bytes.len() {
        return Err(parse_err(pos, format!("{} trailing bytes", bytes.len() - pos)));
    }
    Ok(g)
}

/// graph6 encoding of `g` under its own labeling, without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses an edge list: one `u v` pair per line, 0-based, `#` starts a
/// comment. A line holding a single number gives the vertex count (it must
/// come before any edge); otherwise the count is one more than the largest
/// label.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(offset + line.find(s).unwrap_or(0), format!("`{s}` is not a vertex label")))
        };
        match fields.as_slice() {
            [] => {}
            [n] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(parse_err(offset, "the vertex count must come first and only once"));
                }
                declared = Some(number(n)?);
            }
            [u, v] => {
                let (u, v) = (number(u)?, number(v)?);
                if u == v {
                    return Err(parse_err(offset, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            _ => return Err(parse_err(offset, "expected `u v` or a vertex count")),
        }
        offset += line.len();
    }
    let needed = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < needed => {
            return Err(parse_err(0, format!("vertex count {n} is below the largest label {}", needed - 1)))
        }
        Some(n) => n,
        None => needed,
    };
    Graph::from_edges(n, edges)
}

/// Edge list with a leading vertex-count line, so isolated vertices survive.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Which text format an input uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// graph6 when the first meaningful line is a single printable token that
/// is not a plain number; edge list otherwise.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with(HEADER) => Format::Graph6,
        Some(l) if !l.contains(char::is_whitespace) && !l.bytes().all(|b| b.is_ascii_digit()) => Format::Graph6,
        _ => Format::EdgeList,
    }
}

/// Parses either format. For graph6 input, the first nonblank line is used.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match detect_format(text) {
        Format::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(line.trim())
        }
        Format::EdgeList => parse_edge_list(text),
    }
}
