use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

fn check_token(line: usize, tok: &str) -> Result<()> {
    if tok.is_empty() || !tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::parse(line, format!("invalid identifier {tok:?}")));
    }
    Ok(())
}

/// Parses the line-based graph format:
///
/// ```text
/// # comment
/// v <id>
/// e <id> <u> <v>
/// ```
///
/// Identifiers are ASCII alphanumeric tokens (underscores allowed). `v`
/// lines are optional; they fix vertex order and allow isolated vertices.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    let mut declared = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            ["v", id] => {
                check_token(line, id)?;
                if !declared.insert(id.to_string()) {
                    return Err(Error::parse(line, format!("duplicate vertex {id}")));
                }
                if g.vertex_id(id).is_none() {
                    g.add_vertex(*id)?;
                }
            }
            ["e", id, u, v] => {
                for t in [id, u, v] {
                    check_token(line, t)?;
                }
                let mut endpoint = |name: &str| match g.vertex_id(name) {
                    Some(x) => Ok(x),
                    None => g.add_vertex(name),
                };
                let a = endpoint(u)?;
                let b = endpoint(v)?;
                g.add_edge_named(*id, a, b)
                    .map_err(|_| Error::parse(line, format!("duplicate edge {id}")))?;
            }
            _ => return Err(Error::parse(line, format!("unrecognised line {content:?}"))),
        }
    }
    Ok(g)
}

/// Writes a graph in the format read by [`parse_graph`].
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "v {}", g.name(v)).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.name, g.name(e.a), g.name(e.b)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_lines_are_optional() {
        let g = parse_graph("e x a b\nv b\ne y b c\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.name(2), "c");
    }

    #[test]
    fn round_trip() {
        let text = "# triangle\nv a\nv b\nv c\n\ne x a b\ne y b c  # trailing\ne z c a\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let again = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_graph("v a\ne x a b\ne x b a\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "duplicate edge x".into() });
        assert!(matches!(parse_graph("v a-b"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("v a\nv a"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("x"), Err(Error::Parse { line: 1, .. })));
    }
}
