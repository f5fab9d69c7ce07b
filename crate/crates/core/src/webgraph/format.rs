//! Line-oriented web files:
//!
//! ```text
//! web n=4
//! b 1 B 1
//! b 2 W 3
//! i 5 W 2 4 6
//! e 1 2
//! ```
//!
//! `b` lines list boundary vertices in clockwise order with ids `1..=n`,
//! followed by their half-edges in boundary order. `i` lines give an internal
//! vertex id, its color and three half-edges counterclockwise. `e` lines pair
//! two half-edges into an edge. Blank lines and lines starting with `#` are
//! ignored.

use std::fmt::Write;

use super::{HalfEdge, Vertex, VertexColor, Web};
use crate::error::ParseError;

pub(super) fn write(web: &Web) -> String {
    let mut out = String::new();
    writeln!(out, "web n={}", web.n_boundary()).unwrap();
    for v in web.boundary() {
        write_vertex(&mut out, 'b', v);
    }
    for v in web.internal() {
        write_vertex(&mut out, 'i', v);
    }
    for &[a, b] in web.edges() {
        writeln!(out, "e {} {}", a.0, b.0).unwrap();
    }
    out
}

fn write_vertex(out: &mut String, tag: char, v: &Vertex) {
    write!(out, "{tag} {} {}", v.id, v.color.letter()).unwrap();
    for h in &v.half_edges {
        write!(out, " {}", h.0).unwrap();
    }
    out.push('\n');
}

fn err(line: usize, msg: impl std::fmt::Display) -> ParseError {
    ParseError::new(format!("line {line}: {msg}"))
}

pub(super) fn parse(text: &str) -> Result<Web, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines.next().ok_or_else(|| ParseError::new("empty web file"))?;
    let n: usize = header
        .strip_prefix("web")
        .map(str::trim)
        .and_then(|r| r.strip_prefix("n="))
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| err(hl, "expected header `web n=<count>`"))?;

    let mut boundary = Vec::new();
    let mut internal = Vec::new();
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let mut tok = line.split_whitespace();
        let tag = tok.next().unwrap();
        let nums = |tok: std::str::SplitWhitespace<'_>| -> Result<Vec<u32>, ParseError> {
            tok.map(|t| t.parse::<u32>().map_err(|_| err(ln, format!("bad number `{t}`"))))
                .collect()
        };
        match tag {
            "b" | "i" => {
                let id: u32 = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(ln, "missing vertex id"))?;
                let color = tok
                    .next()
                    .and_then(|t| {
                        let mut cs = t.chars();
                        match (cs.next(), cs.next()) {
                            (Some(c @ ('B' | 'W')), None) => VertexColor::from_letter(c),
                            _ => None,
                        }
                    })
                    .ok_or_else(|| err(ln, "expected color B or W"))?;
                let half_edges: Vec<HalfEdge> = nums(tok)?.into_iter().map(HalfEdge).collect();
                if tag == "b" {
                    if !internal.is_empty() || !edges.is_empty() {
                        return Err(err(ln, "boundary lines must come first"));
                    }
                    if id as usize != boundary.len() + 1 {
                        return Err(err(ln, format!("boundary vertex {} out of order", id)));
                    }
                    boundary.push((color, half_edges));
                } else {
                    if !edges.is_empty() {
                        return Err(err(ln, "internal vertex after edges"));
                    }
                    internal.push(Vertex { id, color, half_edges });
                }
            }
            "e" => {
                let v = nums(tok)?;
                if v.len() != 2 {
                    return Err(err(ln, "an edge needs exactly two half-edges"));
                }
                edges.push([HalfEdge(v[0]), HalfEdge(v[1])]);
            }
            other => return Err(err(ln, format!("unknown record `{other}`"))),
        }
    }
    if boundary.len() != n {
        return Err(ParseError::new(format!(
            "header says n={n} but {} boundary vertices were listed",
            boundary.len()
        )));
    }
    Web::new(boundary, internal, edges).map_err(|e| ParseError::new(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn h_web_text() {
        let text = h_web().to_text();
        assert_eq!(
            text,
            "web n=4\nb 1 B 3\nb 2 W 10\nb 3 W 8\nb 4 B 6\ni 5 W 1 4 5\ni 6 B 2 7 9\n\
             e 1 2\ne 3 4\ne 5 6\ne 7 8\ne 9 10\n"
        );
        let back = Web::parse(&text).unwrap();
        assert_eq!(back, h_web());
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn comments_and_degree_zero() {
        let text = "# two vertices\nweb n=3\nb 1 B 1\nb 2 W\nb 3 W 2\n\ne 1 2\n";
        let w = Web::parse(text).unwrap();
        assert_eq!(w.multidegree().to_string(), "1,0,1");
        assert_eq!(w.to_text(), "web n=3\nb 1 B 1\nb 2 W\nb 3 W 2\ne 1 2\n");
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",
            "web\n",
            "web n=1\nb 2 B\n",
            "web n=2\nb 1 B 1\n",
            "web n=1\nb 1 X\n",
            "web n=2\nb 1 B 1\nb 2 W 2\ne 1\n",
            "web n=2\nb 1 B 1\nb 2 W 2\ne 1 3\n",
            "web n=1\nb 1 B\nq 1\n",
        ] {
            assert!(Web::parse(bad).is_err(), "accepted {bad:?}");
        }
    }
}
