//! Plain edge-list text: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex labels. Everything after a `#` on a line is ignored, as
//! are blank lines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::MalformedEdgeList {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let [u, v] = parse_pair(line, body)?;
        if u == v {
            return Err(Error::MalformedEdgeList { line, reason: format!("loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(Error::MalformedEdgeList {
                line,
                reason: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::MalformedEdgeList {
            line: header_line,
            reason: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::MalformedEdgeList {
            line,
            reason: format!("expected two integers, found {:?}", body),
        });
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| Error::MalformedEdgeList {
            line,
            reason: format!("`{field}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# a path\n4 3\n0 1\n1 2 # middle\n\n2 3\n";
        let g = parse(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::MalformedEdgeList { line: 3, .. }));
        let err = parse("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::MalformedEdgeList { line: 1, .. }));
        let err = parse("3 1\n0 3\n").unwrap_err();
        assert!(matches!(err, Error::MalformedEdgeList { line: 2, .. }));
        assert!(parse("").is_err());
    }
}
