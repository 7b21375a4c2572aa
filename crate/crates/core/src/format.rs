//! Line-oriented graph file format.
//!
//! ```text
//! # optional comments
//! p mg <vertex_count> <edge_count>
//! v <id> <x> <y>      (optional coordinate records)
//! e <u> <v>
//! ```
//!
//! The canonical form has no comments, coordinate records in vertex order,
//! and edges sorted lexicographically with `u < v`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Point, Vertex};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut coords: BTreeMap<Vertex, Point> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let err = |message: String| Error::Parse { line, message };
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate header".into()));
                }
                if fields.len() != 4 || fields[1] != "mg" {
                    return Err(err(format!("malformed header {trimmed:?}; expected \"p mg <vertices> <edges>\"")));
                }
                let n = parse_num::<usize>(fields[2], line)?;
                let m = parse_num::<usize>(fields[3], line)?;
                header = Some((n, m, line));
            }
            "v" | "e" => {
                let Some((n, _, _)) = header else {
                    return Err(err(format!("record {:?} before header", fields[0])));
                };
                if fields.len() != 4 && fields[0] == "v" || fields.len() != 3 && fields[0] == "e" {
                    return Err(err(format!("wrong field count in {trimmed:?}")));
                }
                let a = parse_num::<usize>(fields[1], line)?;
                let in_range = |x: usize| (1..=n).contains(&x);
                if fields[0] == "v" {
                    if !in_range(a) {
                        return Err(err(format!("vertex {a} out of range 1..={n}")));
                    }
                    let x = parse_num::<i64>(fields[2], line)?;
                    let y = parse_num::<i64>(fields[3], line)?;
                    if coords.insert(a, (x, y)).is_some() {
                        return Err(err(format!("vertex {a} has two coordinate records")));
                    }
                } else {
                    let b = parse_num::<usize>(fields[2], line)?;
                    if !in_range(a) || !in_range(b) {
                        return Err(err(format!("endpoint out of range in edge ({a}, {b}); vertices are 1..={n}")));
                    }
                    if a == b {
                        return Err(err(format!("self-loop at vertex {a}")));
                    }
                    edges.push((a, b));
                }
            }
            other => return Err(err(format!("unknown record tag {other:?}"))),
        }
    }

    let (n, m, header_line) = header.ok_or(Error::Parse { line: 0, message: "missing \"p mg\" header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {m} edges but {} edge records follow", edges.len()),
        });
    }
    let coords = (!coords.is_empty()).then_some(coords);
    Graph::build(n, edges, coords).map(|(g, _)| g).map_err(|e| Error::Parse { line: header_line, message: e.to_string() })
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse().map_err(|_| Error::Parse { line, message: format!("not a number: {s:?}") })
}

/// Canonical text for `g`.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.edge_count() + g.coords().len() + 1));
    writeln!(out, "p mg {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (v, (x, y)) in g.coords() {
        writeln!(out, "v {v} {x} {y}").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "e {} {}", e.u(), e.v()).unwrap();
    }
    out
}

/// Matching lines `m <u> <v>` in canonical order.
pub fn emit_matching(edges: &[Edge]) -> String {
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.iter().fold(String::new(), |mut s, e| {
        writeln!(s, "m {} {}", e.u(), e.v()).unwrap();
        s
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_graph("p mg 2 1\ne 1 2").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[Edge::new(1, 2)]);
    }

    #[test]
    fn p5_round_trip_is_canonical() {
        let text = "# P5\np mg 5 4\ne 2 1\ne 3 2\n\ne 4 3\ne 4 5\n";
        let canon = emit_graph(&parse_graph(text).unwrap());
        assert_eq!(canon, "p mg 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
        assert_eq!(emit_graph(&parse_graph(&canon).unwrap()), canon);
    }

    #[test]
    fn coordinates_populated() {
        let g = parse_graph("p mg 2 1\nv 1 0 0\nv 2 -1 0\ne 1 2\n").unwrap();
        assert_eq!(g.coord(2), Some((-1, 0)));
        assert!(g.has_full_coords());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("p mg x 1\n", 1),
            ("p cnf 2 1\n", 1),
            ("p mg 2 1\nq 1 2\n", 2),
            ("p mg 2 1\n# c\ne 1 3\n", 3),
            ("e 1 2\n", 1),
            ("p mg 2 2\ne 1 2\n", 1),
            ("p mg 2 1\ne 1 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn matching_lines_sorted() {
        assert_eq!(emit_matching(&[Edge::new(4, 3), Edge::new(1, 2)]), "m 1 2\nm 3 4\n");
    }
}
