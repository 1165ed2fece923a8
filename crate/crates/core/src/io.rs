//! graph6, the plain edge-list format, and DOT export.
//!
//! Edge-list documents look like
//!
//! ```text
//! # optional comments
//! n 3
//! 0 1
//! 1 2
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: empty input")]
    EmptyInput,
    #[error("graph6: byte {byte:#04x} at offset {offset} outside [63, 126]")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6: truncated at offset {offset}, expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("graph6: trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("graph6: non-zero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph6: {n} vertices exceeds the encodable maximum {max}")]
    Oversize { n: usize, max: usize },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

const G6_BIAS: u8 = 63;
const G6_MAX_N: usize = 258_047;

fn check_byte(bytes: &[u8], offset: usize) -> Result<u8, FormatError> {
    match bytes.get(offset) {
        None => Err(FormatError::Truncated {
            offset,
            expected: offset + 1,
        }),
        Some(&b) if (63..=126).contains(&b) => Ok(b - G6_BIAS),
        Some(&b) => Err(FormatError::BadByte { offset, byte: b }),
    }
}

/// Decodes the vertex-count prefix; returns `(n, bytes consumed)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize), FormatError> {
    let first = check_byte(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    // 126 prefix: either 3 more bytes (18 bits) or 126 again plus 6 bytes.
    let (start, len) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    let mut n = 0usize;
    for i in start..start + len {
        n = (n << 6) | check_byte(bytes, i)? as usize;
    }
    Ok((n, start + len))
}

/// Parses one graph6 record (no trailing newline).
pub fn parse_graph6(line: &[u8]) -> Result<Graph, FormatError> {
    if line.is_empty() {
        return Err(FormatError::EmptyInput);
    }
    let (n, mut offset) = parse_size(line)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body_end = offset + nbytes;
    if line.len() < body_end {
        return Err(FormatError::Truncated {
            offset: line.len(),
            expected: body_end,
        });
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut bit_index = 0;
    while offset < body_end {
        let word = check_byte(line, offset)?;
        for shift in (0..6).rev() {
            if bit_index < nbits {
                if (word >> shift) & 1 == 1 {
                    edges.push((i, j));
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if (word >> shift) & 1 == 1 {
                return Err(FormatError::NonZeroPadding { offset });
            }
            bit_index += 1;
        }
        offset += 1;
    }
    if line.len() > body_end {
        return Err(FormatError::TrailingGarbage { offset: body_end });
    }
    Ok(Graph::new(n, &edges).expect("decoded pairs are in range"))
}

/// Encodes `g` in graph6 under its current labelling.
pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > G6_MAX_N {
        return Err(FormatError::Oversize { n, max: G6_MAX_N });
    }
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + G6_BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + G6_BIAS);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + G6_BIAS);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + G6_BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 is printable ASCII"))
}

/// Parses the `n <count>` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, message: String| FormatError::EdgeList { line, message };
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => match fields.as_slice() {
                ["n", count] => {
                    n = Some(
                        count
                            .parse()
                            .map_err(|_| err(lineno, format!("bad vertex count {count:?}")))?,
                    )
                }
                _ => return Err(err(lineno, "expected header \"n <count>\"".into())),
            },
            Some(n) => {
                let [a, b] = fields.as_slice() else {
                    return Err(err(lineno, format!("expected \"u v\", got {line:?}")));
                };
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| err(lineno, format!("bad vertex index {s:?}")))
                };
                let (u, v) = (parse(a)?, parse(b)?);
                if u >= n || v >= n {
                    return Err(err(lineno, format!("vertex index {} >= n = {n}", u.max(v))));
                }
                if u == v {
                    return Err(err(lineno, format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| {
        err(
            text.lines().count().max(1),
            "missing header \"n <count>\"".into(),
        )
    })?;
    Ok(Graph::new(n, &edges).expect("edges validated"))
}

/// Normalised edge list: header then one `u v` line per edge, `u < v`, sorted.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const PALETTE: [&str; 10] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe",
];

/// Undirected DOT text. With `colors`, each node is labelled `v:c` and filled.
pub fn emit_dot(g: &Graph, colors: Option<&[u32]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match colors.and_then(|c| c.get(v)) {
            Some(&c) => {
                let fill = PALETTE[(c as usize).saturating_sub(1) % PALETTE.len()];
                let _ = writeln!(
                    out,
                    "  {v} [label=\"{v}:{c}\", style=filled, fillcolor=\"{fill}\"];"
                );
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_graph6_records() {
        assert_eq!(parse_graph6(b"D??").unwrap(), Graph::empty(5));
        assert_eq!(parse_graph6(b"A_").unwrap(), complete(2));
        assert_eq!(emit_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(emit_graph6(&Graph::empty(5)).unwrap(), "D??");
        let g = parse_graph6(b"DQc").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 4));
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert_eq!(parse_graph6(b""), Err(FormatError::EmptyInput));
        assert_eq!(
            parse_graph6(b"D?"),
            Err(FormatError::Truncated {
                offset: 2,
                expected: 3
            })
        );
        assert_eq!(
            parse_graph6(b"D??x"),
            Err(FormatError::TrailingGarbage { offset: 3 })
        );
        assert_eq!(
            parse_graph6(b"D ?"),
            Err(FormatError::BadByte {
                offset: 1,
                byte: b' '
            })
        );
        // n = 2 has one data bit; '@' = 1 sets a padding bit.
        assert_eq!(
            parse_graph6(b"A@"),
            Err(FormatError::NonZeroPadding { offset: 1 })
        );
    }

    #[test]
    fn long_size_prefix_round_trips() {
        let g = path(70);
        let s = emit_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_list_parse_and_emit() {
        let g = parse_edge_list("n 3\n0 1\n1 2").unwrap();
        assert_eq!(g, path(3));
        let text = "# a comment\n\nn 4\n3 2\n0 1\n";
        let g = parse_edge_list(text).unwrap();
        let normal = emit_edge_list(&g);
        assert_eq!(normal, "n 4\n0 1\n2 3\n");
        assert_eq!(emit_edge_list(&parse_edge_list(&normal).unwrap()), normal);
    }

    #[test]
    fn edge_list_errors() {
        let e = parse_edge_list("n 3\n0 1\n1 5\n").unwrap_err();
        assert!(matches!(e, FormatError::EdgeList { line: 3, .. }), "{e}");
        assert!(matches!(
            parse_edge_list("0 1\n"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 x\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n1 1\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn dot_has_one_node_statement_per_vertex() {
        let dot = emit_dot(&cycle(5), Some(&[4, 1, 2, 1, 3]));
        assert_eq!(dot.matches("label=").count(), 5);
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 [label=\"0:4\""));
    }
}
