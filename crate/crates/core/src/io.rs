//! Graph files.
//!
//! The matrix format is the full n×n adjacency matrix written row-major,
//! one ASCII `0` or `1` per line. DIMACS edge lists (`p edge n m`,
//! `e u v` with 1-based vertices) are accepted on load.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::ParseError;
use crate::graph::Graph;

pub fn write_matrix<W: Write>(g: &Graph, out: W) -> io::Result<()> {
    let n = g.n();
    let mut out = BufWriter::new(out);
    let mut line = Vec::with_capacity(2 * n);
    for u in 0..n {
        line.clear();
        let row = g.row(u);
        for v in 0..n {
            line.push(if row.contains(v) { b'1' } else { b'0' });
            line.push(b'\n');
        }
        out.write_all(&line)?;
    }
    out.flush()
}

pub fn save_matrix(g: &Graph, path: impl AsRef<Path>) -> io::Result<()> {
    write_matrix(g, fs::File::create(path)?)
}

pub fn parse_matrix(text: &str) -> Result<Graph, ParseError> {
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    let count = lines.len();
    let n = count.isqrt();
    if n * n != count {
        return Err(ParseError::NotSquare(count));
    }
    let mut g = Graph::new(n);
    for (i, raw) in lines.iter().enumerate() {
        let line = i + 1;
        let (u, v) = (i / n, i % n);
        let bit = match raw.trim() {
            "0" => false,
            "1" => true,
            other => {
                return Err(ParseError::NotBinary {
                    line,
                    token: other.to_owned(),
                })
            }
        };
        if u == v {
            if bit {
                return Err(ParseError::Loop { line, vertex: u });
            }
            continue;
        }
        if v < u {
            // The mirrored entry above the diagonal was already read.
            if bit != g.adjacent(v, u) {
                return Err(ParseError::Asymmetric {
                    line,
                    row: u,
                    col: v,
                });
            }
        } else if bit {
            g.add_edge(u, v).expect("indices are in range and distinct");
        }
    }
    Ok(g)
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<Graph, ParseError> {
    parse_matrix(&read(path.as_ref())?)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut fields = raw.split_whitespace();
        let syntax = |message: &str| ParseError::Syntax {
            line,
            message: message.to_owned(),
        };
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(syntax("duplicate problem line"));
                }
                match fields.next() {
                    Some("edge" | "col" | "clq") => {}
                    _ => return Err(syntax("expected 'p edge <n> <m>'")),
                }
                let n = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| syntax("missing vertex count"))?;
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| syntax("edge line before problem line"))?;
                let mut endpoint = || -> Result<usize, ParseError> {
                    let v: usize = fields
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| syntax("expected 'e <u> <v>'"))?;
                    if v == 0 || v > g.n() {
                        return Err(syntax(&format!("vertex {v} out of range 1..={}", g.n())));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (endpoint()?, endpoint()?);
                if u == v {
                    return Err(ParseError::Loop { line, vertex: u });
                }
                g.add_edge(u, v).expect("endpoints validated");
            }
            Some(other) => return Err(syntax(&format!("unknown line type {other:?}"))),
        }
    }
    graph.ok_or(ParseError::Syntax {
        line: text.lines().count(),
        message: "no problem line".into(),
    })
}

pub fn load_dimacs(path: impl AsRef<Path>) -> Result<Graph, ParseError> {
    parse_dimacs(&read(path.as_ref())?)
}

/// Loads either format, choosing DIMACS when the first non-blank line is a
/// comment or problem line.
pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph, ParseError> {
    let text = read(path.as_ref())?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with('c') || l.starts_with('p') => parse_dimacs(&text),
        _ => parse_matrix(&text),
    }
}

fn read(path: &Path) -> Result<String, ParseError> {
    fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.to_owned(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_string(g: &Graph) -> String {
        let mut buf = Vec::new();
        write_matrix(g, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn k2_matrix_is_bit_exact() {
        assert_eq!(to_string(&Graph::complete(2)), "0\n1\n1\n0\n");
    }

    #[test]
    fn inactive_vertices_serialize_as_zero() {
        let mut g = Graph::complete(3);
        g.remove_vertex(1).unwrap();
        assert_eq!(to_string(&g), "0\n0\n1\n0\n0\n0\n1\n0\n0\n");
    }

    #[test]
    fn round_trip() {
        let g = Graph::from_edges(6, &[(0, 5), (1, 2), (2, 3), (4, 5)]).unwrap();
        assert_eq!(parse_matrix(&to_string(&g)).unwrap(), g);
        assert_eq!(parse_matrix("").unwrap().n(), 0);
    }

    #[test]
    fn rejects_bad_matrices() {
        let err = parse_matrix("0\n1\n1\n").unwrap_err();
        assert!(matches!(err, ParseError::NotSquare(3)));
        assert_eq!(err.to_string(), "not a square matrix: 3 values");

        let err = parse_matrix("0\n1\n2\n0\n").unwrap_err();
        assert!(matches!(err, ParseError::NotBinary { line: 3, .. }));

        let err = parse_matrix("0\n1\n0\n0\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Asymmetric {
                line: 3,
                row: 1,
                col: 0
            }
        ));

        let err = parse_matrix("1\n0\n0\n0\n").unwrap_err();
        assert!(matches!(err, ParseError::Loop { line: 1, vertex: 0 }));
    }

    #[test]
    fn dimacs() {
        let g = parse_dimacs("c triangle plus pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n")
            .unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            [(0, 1), (0, 2), (1, 2), (2, 3)]
        );

        assert!(matches!(
            parse_dimacs("e 1 2\n").unwrap_err(),
            ParseError::Syntax { line: 1, .. }
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 1 4\n").unwrap_err(),
            ParseError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 2 2\n").unwrap_err(),
            ParseError::Loop { line: 2, vertex: 1 }
        ));
    }

    #[test]
    fn load_graph_sniffs_format() {
        let dir = tempfile::tempdir().unwrap();
        let clq = dir.path().join("g.clq");
        fs::write(&clq, "p edge 2 1\ne 1 2\n").unwrap();
        let mtx = dir.path().join("g.txt");
        save_matrix(&Graph::complete(2), &mtx).unwrap();
        assert_eq!(load_graph(&clq).unwrap(), load_graph(&mtx).unwrap());

        let missing = dir.path().join("nope.txt");
        let err = load_graph(&missing).unwrap_err();
        assert!(err.to_string().contains("nope.txt"));
    }
}
