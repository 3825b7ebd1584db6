//! Line-oriented text formats.
//!
//! ```text
//! # comment
//! vertices: x1 x2 x3 x4
//! facet: x1 x2 x3
//! facet: x1 x4
//! class: x1 x4
//! class: x2
//! class: x3
//! ```
//!
//! A complex file starts with `vertices:` and lists `facet:` lines; `facet:`
//! alone is the empty face, and no facet lines at all is the void complex.
//! Colourings are `class:` lines in class order. Graphs are `vertex:` lines
//! followed by `edge: a b` lines.

use std::fmt::Write;
use std::sync::Arc;

use crate::coloring::Coloring;
use crate::complex::{Face, SimplicialComplex, Universe};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::whisker::WhiskerComplex;

struct Line<'a> {
    number: usize,
    key: &'a str,
    labels: Vec<&'a str>,
}

fn lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, rest)) = content.split_once(':') else {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected `key: labels`, found `{content}`"),
            });
        };
        out.push(Line {
            number: i + 1,
            key: key.trim(),
            labels: rest.split_whitespace().collect(),
        });
    }
    Ok(out)
}

fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    })
}

fn unexpected(line: &Line, expected: &str) -> Error {
    Error::Parse {
        line: line.number,
        message: format!("unexpected `{}:` line, expected {expected}", line.key),
    }
}

fn parse_classes(universe: &Universe, lines: &[Line], last_line: usize) -> Result<Coloring> {
    let mut classes = Vec::new();
    for line in lines {
        if line.key != "class" {
            return Err(unexpected(line, "`class:`"));
        }
        classes.push(at(line.number, universe.face(&line.labels))?);
    }
    let line = lines.first().map_or(last_line, |l| l.number);
    at(line, Coloring::new(universe, classes))
}

/// A complex file, optionally followed by a colouring block as written by
/// [`write_whisker`].
pub fn parse_complex_with_coloring(text: &str) -> Result<(SimplicialComplex, Option<Coloring>)> {
    let lines = lines(text)?;
    let Some(first) = lines.first() else {
        return Err(Error::Parse {
            line: 1,
            message: "missing `vertices:` line".into(),
        });
    };
    if first.key != "vertices" {
        return Err(unexpected(first, "`vertices:` first"));
    }
    let universe = Arc::new(at(first.number, Universe::new(first.labels.iter().copied()))?);
    let mut facets = Vec::new();
    let mut rest = &lines[1..];
    while let Some(line) = rest.first() {
        match line.key {
            "facet" => facets.push(at(line.number, universe.face(&line.labels))?),
            "class" => break,
            _ => return Err(unexpected(line, "`facet:` or `class:`")),
        }
        rest = &rest[1..];
    }
    let complex = SimplicialComplex::new(universe.clone(), facets)?;
    let coloring = if rest.is_empty() {
        None
    } else {
        Some(parse_classes(&universe, rest, 0)?)
    };
    Ok((complex, coloring))
}

/// A complex file without a colouring block.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let lines = lines(text)?;
    if let Some(line) = lines.iter().find(|l| l.key == "class") {
        return Err(unexpected(line, "`facet:`"));
    }
    Ok(parse_complex_with_coloring(text)?.0)
}

pub fn parse_coloring(text: &str, universe: &Universe) -> Result<Coloring> {
    let lines = lines(text)?;
    let last = text.lines().count().max(1);
    parse_classes(universe, &lines, last)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = lines(text)?;
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for line in &lines {
        match line.key {
            "vertex" if edges.is_empty() => {
                if line.labels.len() != 1 {
                    return Err(Error::Parse {
                        line: line.number,
                        message: "`vertex:` takes exactly one label".into(),
                    });
                }
                labels.push((line.labels[0], line.number));
            }
            "edge" => {
                if line.labels.len() != 2 {
                    return Err(Error::Parse {
                        line: line.number,
                        message: "`edge:` takes exactly two labels".into(),
                    });
                }
                edges.push(line);
            }
            _ => return Err(unexpected(line, "`vertex:` lines then `edge:` lines")),
        }
    }
    let last = labels.last().map_or(1, |l| l.1);
    let universe = Arc::new(at(last, Universe::new(labels.iter().map(|l| l.0)))?);
    let mut pairs = Vec::new();
    for line in edges {
        let idx = |l: &str| universe.index_of(l).ok_or_else(|| Error::UnknownVertex(l.to_string()));
        let pair = at(line.number, idx(line.labels[0]).and_then(|a| Ok((a, idx(line.labels[1])?))))?;
        if pair.0 == pair.1 {
            return Err(Error::Parse {
                line: line.number,
                message: format!("loop at {}", line.labels[0]),
            });
        }
        pairs.push(pair);
    }
    Graph::new(universe, pairs)
}

fn write_labelled(out: &mut String, key: &str, universe: &Universe, face: Face) {
    out.push_str(key);
    out.push(':');
    for l in universe.face_labels(face) {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
}

/// Canonical serialization: facets in canonical order.
pub fn write_complex(complex: &SimplicialComplex) -> String {
    let universe = complex.universe();
    let mut out = String::new();
    write_labelled(&mut out, "vertices", universe, universe.full_face());
    for f in complex.facets() {
        write_labelled(&mut out, "facet", universe, *f);
    }
    out
}

pub fn write_coloring(chi: &Coloring, universe: &Universe) -> String {
    let mut out = String::new();
    for c in chi.classes() {
        write_labelled(&mut out, "class", universe, *c);
    }
    out
}

/// The whiskered complex followed by its induced colouring.
pub fn write_whisker(w: &WhiskerComplex) -> String {
    let mut out = write_complex(w.complex());
    out.push_str(&write_coloring(w.induced_coloring(), w.complex().universe()));
    out
}

pub fn write_graph(g: &Graph) -> String {
    let universe = g.universe();
    let mut out = String::new();
    for l in universe.labels() {
        let _ = writeln!(out, "vertex: {l}");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "edge: {} {}", universe.label(a), universe.label(b));
    }
    out
}
