//! The line-oriented complex file format.
//!
//! ```text
//! # comment
//! vertices: a b c d e f g
//! facets: c e g / b e g / a e g
//! ```
//!
//! `vertices:` is optional for facet input (labels are then taken in order
//! of first occurrence) and required for `nonfaces:` input. Faces are
//! separated by `/`, labels within a face by whitespace, and `{}` denotes the
//! empty face. An empty `facets:` list is the void complex.

use std::sync::Arc;

use sdecomp_core::{Face, SimplicialComplex, VertexSet, MAX_VERTICES};
use thiserror::Error;

const RESERVED: &[char] = &['{', '}', ',', '*', ':', '/', '#'];

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed input describing an invalid complex.
    #[error(transparent)]
    Complex(#[from] sdecomp_core::Error),
}

/// A parsed complex plus its facets in the order they were written.
#[derive(Clone, Debug)]
pub struct ParsedComplex {
    pub complex: SimplicialComplex,
    /// Maximal input faces, deduplicated, in order of first appearance;
    /// canonical order for nonface input.
    pub facet_order: Vec<Face>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ListKind {
    Facets,
    Nonfaces,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with 1-based character columns.
fn tokens<'a>(text: &'a str, line: usize, offset: usize) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text
        .char_indices()
        .chain(std::iter::once((text.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &text[s..i],
                    line,
                    column: offset + text[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn check_label(tok: &Token) -> Result<(), ParseError> {
    match tok.text.chars().position(|c| RESERVED.contains(&c)) {
        Some(p) => Err(syntax(
            tok.line,
            tok.column + p,
            format!("reserved character in label `{}`", tok.text),
        )),
        None => Ok(()),
    }
}

/// Parses the file format into a canonical complex.
pub fn parse_complex(input: &str) -> Result<ParsedComplex, ParseError> {
    let mut vertices: Option<Vec<Token>> = None;
    let mut list: Option<(ListKind, Vec<Vec<Token>>)> = None;
    let mut last_line = 0;

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let column = content[..indent].chars().count() + 1;
        let Some(colon) = content.find(':') else {
            return Err(syntax(
                line,
                column,
                "expected `vertices:`, `facets:` or `nonfaces:`",
            ));
        };
        let key = content[..colon].trim();
        let rest = &content[colon + 1..];
        let rest_offset = content[..colon + 1].chars().count();
        match key {
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(line, column, "duplicate `vertices:` line"));
                }
                let toks = tokens(rest, line, rest_offset);
                for tok in &toks {
                    check_label(tok)?;
                }
                vertices = Some(toks);
            }
            "facets" | "nonfaces" => {
                if list.is_some() {
                    return Err(syntax(
                        line,
                        column,
                        "only one `facets:` or `nonfaces:` line is allowed",
                    ));
                }
                let kind = if key == "facets" {
                    ListKind::Facets
                } else {
                    ListKind::Nonfaces
                };
                list = Some((kind, face_list(rest, line, rest_offset)?));
            }
            other => {
                return Err(syntax(line, column, format!("unknown key `{other}`")));
            }
        }
    }

    let Some((kind, faces)) = list else {
        return Err(syntax(
            last_line + 1,
            1,
            "missing `facets:` or `nonfaces:` line",
        ));
    };

    let vertex_set = match vertices {
        Some(toks) => declared_vertices(&toks)?,
        None if kind == ListKind::Nonfaces => {
            return Err(syntax(
                1,
                1,
                "`nonfaces:` input requires a `vertices:` line",
            ));
        }
        None => inferred_vertices(&faces)?,
    };
    let vertex_set = Arc::new(vertex_set);

    let mut resolved = Vec::with_capacity(faces.len());
    for face in &faces {
        resolved.push(resolve_face(&vertex_set, face)?);
    }

    match kind {
        ListKind::Facets => {
            let complex = SimplicialComplex::from_facets(vertex_set, resolved.clone())?;
            let mut facet_order: Vec<Face> = Vec::with_capacity(complex.facets().len());
            for f in resolved {
                if complex.facets().contains(&f) && !facet_order.contains(&f) {
                    facet_order.push(f);
                }
            }
            Ok(ParsedComplex {
                complex,
                facet_order,
            })
        }
        ListKind::Nonfaces => {
            let complex = SimplicialComplex::from_nonfaces(vertex_set, &resolved)?;
            let facet_order = complex.facets().to_vec();
            Ok(ParsedComplex {
                complex,
                facet_order,
            })
        }
    }
}

fn face_list<'a>(
    text: &'a str,
    line: usize,
    offset: usize,
) -> Result<Vec<Vec<Token<'a>>>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut faces = Vec::new();
    let mut start = 0;
    for segment in text.split('/') {
        let seg_offset = offset + text[..start].chars().count();
        let toks = tokens(segment, line, seg_offset);
        if toks.is_empty() {
            return Err(syntax(
                line,
                seg_offset + 1,
                "empty face; write `{}` for the empty face",
            ));
        }
        faces.push(toks);
        start += segment.len() + 1;
    }
    Ok(faces)
}

fn declared_vertices(toks: &[Token]) -> Result<VertexSet, ParseError> {
    if let Some(tok) = toks.get(MAX_VERTICES) {
        return Err(syntax(
            tok.line,
            tok.column,
            format!("more than {MAX_VERTICES} vertices"),
        ));
    }
    for (i, tok) in toks.iter().enumerate() {
        if toks[..i].iter().any(|t| t.text == tok.text) {
            return Err(syntax(
                tok.line,
                tok.column,
                format!("duplicate vertex label `{}`", tok.text),
            ));
        }
    }
    Ok(VertexSet::new(toks.iter().map(|t| t.text))?)
}

fn inferred_vertices(faces: &[Vec<Token>]) -> Result<VertexSet, ParseError> {
    let mut labels: Vec<&str> = Vec::new();
    for tok in faces.iter().flatten() {
        if tok.text == "{}" || labels.contains(&tok.text) {
            continue;
        }
        check_label(tok)?;
        if labels.len() == MAX_VERTICES {
            return Err(syntax(
                tok.line,
                tok.column,
                format!("more than {MAX_VERTICES} vertices"),
            ));
        }
        labels.push(tok.text);
    }
    Ok(VertexSet::new(labels)?)
}

fn resolve_face(vs: &VertexSet, toks: &[Token]) -> Result<Face, ParseError> {
    if let [only] = toks {
        if only.text == "{}" {
            return Ok(Face::EMPTY);
        }
    }
    let mut face = Face::EMPTY;
    for tok in toks {
        check_label(tok)?;
        let Some(v) = vs.position(tok.text) else {
            return Err(syntax(
                tok.line,
                tok.column,
                format!("unknown vertex `{}`", tok.text),
            ));
        };
        if face.contains(v) {
            return Err(syntax(
                tok.line,
                tok.column,
                format!("vertex `{}` repeated within a face", tok.text),
            ));
        }
        face = face.with(v);
    }
    Ok(face)
}

/// Writes a complex in the file format, facets in canonical order.
pub fn serialize_complex(c: &SimplicialComplex) -> String {
    let vs = c.vertices();
    let mut out = String::from("vertices:");
    for label in vs.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push_str("\nfacets:");
    let faces: Vec<String> = c
        .facets()
        .iter()
        .map(|&f| {
            if f.is_empty() {
                "{}".to_string()
            } else {
                vs.face_labels(f).join(" ")
            }
        })
        .collect();
    if !faces.is_empty() {
        out.push(' ');
        out.push_str(&faces.join(" / "));
    }
    out.push('\n');
    out
}

/// `a*b*c`, or `{}` for the empty face.
pub fn monomial(vs: &VertexSet, face: Face) -> String {
    if face.is_empty() {
        "{}".to_string()
    } else {
        vs.face_labels(face).join("*")
    }
}

/// `{a*b, c*d}`.
pub fn monomial_list(vs: &VertexSet, faces: &[Face]) -> String {
    let items: Vec<String> = faces.iter().map(|&f| monomial(vs, f)).collect();
    format!("{{{}}}", items.join(", "))
}

/// `{{b}, {d, a}}`; labels in the given order.
pub fn label_sets(vs: &VertexSet, sets: &[Vec<usize>]) -> String {
    let items: Vec<String> = sets
        .iter()
        .map(|s| format!("{{{}}}", vs.vertex_labels(s).join(", ")))
        .collect();
    format!("{{{}}}", items.join(", "))
}
