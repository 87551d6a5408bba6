//! Line-oriented text formats.
//!
//! HGF (hypergraphs):
//! ```text
//! r 3
//! class 1 a d      # optional; all r classes if present
//! class 2 b e
//! class 3 c f
//! edge a b c       # exactly r vertices; repeat the line for a multi-edge
//! ```
//!
//! CGF (coloured complete graphs), 0-based vertices `u < v`, 1-based colours:
//! ```text
//! colored n 3 r 2
//! e 0 1 1
//! e 0 2 1,2
//! e 1 2 2
//! ```
//! Every pair must appear exactly once. In both formats `#` starts a comment.

use std::fmt::Write as _;

use crate::colored::{ColorSet, ColoredCompleteGraph};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_int(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("{what}: expected a nonnegative integer, got {token:?}")))
}

pub fn parse_hgf(text: &str) -> Result<Hypergraph> {
    let mut r: Option<usize> = None;
    let mut builder = None;
    let mut classes: Vec<Option<Vec<String>>> = Vec::new();
    let mut any_class = false;
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        match tokens[0] {
            "r" => {
                if r.is_some() {
                    return Err(Error::parse(line, "repeated r line"));
                }
                if tokens.len() != 2 {
                    return Err(Error::parse(line, "expected `r <int>`"));
                }
                let value = parse_int(line, tokens[1], "r")?;
                if value == 0 {
                    return Err(Error::parse(line, "r must be positive"));
                }
                r = Some(value);
                builder = Some(Hypergraph::builder(value));
                classes = vec![None; value];
            }
            "class" => {
                let (Some(r), Some(b)) = (r, builder.as_mut()) else {
                    return Err(Error::parse(line, "class before r"));
                };
                if tokens.len() < 3 {
                    return Err(Error::parse(line, "expected `class <index> <vertex>...`"));
                }
                let idx = parse_int(line, tokens[1], "class index")?;
                if idx == 0 || idx > r {
                    return Err(Error::parse(line, format!("class index {idx} outside 1..={r}")));
                }
                if classes[idx - 1].is_some() {
                    return Err(Error::parse(line, format!("class {idx} listed twice")));
                }
                for t in &tokens[2..] {
                    b.vertex(t);
                }
                classes[idx - 1] = Some(tokens[2..].iter().map(|s| s.to_string()).collect());
                any_class = true;
            }
            "edge" => {
                let (Some(r), Some(b)) = (r, builder.as_mut()) else {
                    return Err(Error::parse(line, "edge before r"));
                };
                let vertices = &tokens[1..];
                if vertices.len() != r {
                    return Err(Error::parse(
                        line,
                        format!("edge has {} vertices, expected {r}", vertices.len()),
                    ));
                }
                for (i, v) in vertices.iter().enumerate() {
                    if vertices[..i].contains(v) {
                        return Err(Error::parse(line, format!("vertex {v} repeated within an edge")));
                    }
                }
                b.edge(vertices);
            }
            other => return Err(Error::parse(line, format!("unknown keyword {other:?}"))),
        }
    }
    let Some(mut builder) = builder else {
        return Err(Error::parse(last_line.max(1), "missing `r <int>` line"));
    };
    if any_class {
        let mut all = Vec::with_capacity(classes.len());
        for (i, c) in classes.into_iter().enumerate() {
            match c {
                Some(c) => all.push(c),
                None => {
                    return Err(Error::parse(
                        last_line,
                        format!("class block lists some classes but not class {}", i + 1),
                    ))
                }
            }
        }
        builder.classes(&all);
    }
    Ok(builder.build())
}

/// Serializes an r-uniform hypergraph. Vertices in no edge and no class are dropped.
pub fn write_hgf(h: &Hypergraph) -> Result<String> {
    if let Some(i) = h.edges().iter().position(|e| e.len() != h.r()) {
        return Err(Error::precondition(
            "write_hgf",
            format!("edge #{i} has {} vertices, r = {}", h.edges()[i].len(), h.r()),
        ));
    }
    let mut out = String::new();
    writeln!(out, "r {}", h.r()).unwrap();
    if let Some(classes) = h.classes() {
        for (i, class) in classes.iter().enumerate() {
            write!(out, "class {}", i + 1).unwrap();
            for &v in class {
                write!(out, " {}", h.vertex_name(v)).unwrap();
            }
            out.push('\n');
        }
    }
    for e in h.edges() {
        out.push_str("edge");
        for &v in e {
            write!(out, " {}", h.vertex_name(v)).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_cgf(text: &str) -> Result<ColoredCompleteGraph> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return Err(Error::parse(1, "missing `colored n <int> r <int>` header"));
    };
    if header.len() != 5 || header[0] != "colored" || header[1] != "n" || header[3] != "r" {
        return Err(Error::parse(line, "expected `colored n <int> r <int>`"));
    }
    let n = parse_int(line, header[2], "n")?;
    let r = parse_int(line, header[4], "r")?;
    let mut col: Vec<Option<ColorSet>> = vec![None; n * n];
    let mut last_line = line;
    for (line, tokens) in lines {
        last_line = line;
        if tokens[0] != "e" || tokens.len() != 4 {
            return Err(Error::parse(line, "expected `e <u> <v> <c1,c2,...>`"));
        }
        let u = parse_int(line, tokens[1], "u")?;
        let v = parse_int(line, tokens[2], "v")?;
        if u >= v || v >= n {
            return Err(Error::parse(line, format!("need 0 <= u < v < n, got ({u}, {v})")));
        }
        let mut set = ColorSet::EMPTY;
        for c in tokens[3].split(',') {
            let c = parse_int(line, c, "color")?;
            if c == 0 || c > r || c > crate::colored::MAX_COLORS {
                return Err(Error::parse(line, format!("color {c} outside 1..={r}")));
            }
            if set.contains(c) {
                return Err(Error::parse(line, format!("color {c} repeated")));
            }
            set.insert(c);
        }
        if col[u * n + v].is_some() {
            return Err(Error::parse(line, format!("pair ({u}, {v}) listed twice")));
        }
        col[u * n + v] = Some(set);
    }
    for u in 0..n {
        for v in u + 1..n {
            if col[u * n + v].is_none() {
                return Err(Error::parse(last_line, format!("pair ({u}, {v}) missing")));
            }
        }
    }
    ColoredCompleteGraph::from_fn(n, r, |u, v| col[u * n + v].unwrap())
}

pub fn write_cgf(g: &ColoredCompleteGraph) -> String {
    let mut out = String::new();
    writeln!(out, "colored n {} r {}", g.n(), g.r()).unwrap();
    for (u, v, c) in g.pairs() {
        writeln!(out, "e {u} {v} {c}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::validate;

    const FANO: &str = "\
# truncated Fano plane
r 3
class 1 a b
class 2 c d
class 3 e f
edge a c e
edge a d f
edge b c f
edge b d e
";

    #[test]
    fn parses_classes_and_edges() {
        let h = parse_hgf(FANO).unwrap();
        assert_eq!(h.r(), 3);
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 4);
        assert!(validate(&h).is_empty());
        assert_eq!(parse_hgf(&write_hgf(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn hgf_rejections() {
        let cases = [
            ("r 3\nedge a b\n", "edge has 2 vertices"),
            ("r 2\nedge a a\n", "repeated within an edge"),
            ("r 2\nclass 3 a\n", "outside 1..=2"),
            ("edge a b\n", "edge before r"),
            ("r 2\nclass 1 a\nedge a b\n", "not class 2"),
            ("r x\n", "expected a nonnegative integer"),
            ("r 2\nvertex a\n", "unknown keyword"),
            ("# nothing\n", "missing `r"),
        ];
        for (text, needle) in cases {
            let err = parse_hgf(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn multi_edges_survive() {
        let h = parse_hgf("r 2\nedge a b\nedge a b\n").unwrap();
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn cgf_round_trip() {
        let text = "colored n 3 r 2\ne 0 1 1\ne 0 2 1,2 # both\ne 1 2 2\n";
        let g = parse_cgf(text).unwrap();
        assert_eq!(g.col(0, 2), [1, 2].into_iter().collect());
        assert_eq!(parse_cgf(&write_cgf(&g)).unwrap(), g);
    }

    #[test]
    fn cgf_rejections() {
        let cases = [
            ("colored n 3 r 2\ne 0 1 1\ne 1 2 2\n", "pair (0, 2) missing"),
            ("colored n 2 r 2\ne 0 1 1\ne 0 1 2\n", "listed twice"),
            ("colored n 2 r 2\ne 1 0 1\n", "need 0 <= u < v < n"),
            ("colored n 2 r 2\ne 0 1 3\n", "outside 1..=2"),
            ("colored n 2 r 2\ne 0 1 1,1\n", "repeated"),
            ("graph 2\n", "expected `colored"),
        ];
        for (text, needle) in cases {
            let err = parse_cgf(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }
}
