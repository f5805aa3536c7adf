//! Plain-text graph and dictionary files.
//!
//! Graph files hold one arc per line as `tail label head`, separated by
//! whitespace. Labels are single characters and vertex names are any
//! non-whitespace strings. Dictionary files hold one word per line; every
//! character of the word is a symbol. In both formats `#` starts a comment
//! and blank lines are skipped.

use std::fmt::Write;

use thiserror::Error;

use crate::debruijn::{DebruijnError, Dictionary};
use crate::graph::{build_graph, GraphError, LabeledDigraph, Symbol};

/// Stand-in for the empty vertex name of span-one de Bruijn graphs.
pub const EMPTY_NAME: &str = "ε";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Dictionary(#[from] DebruijnError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_arcs(text: &str) -> Result<Vec<(String, char, String)>, ParseError> {
    content_lines(text)
        .map(|(line, content)| {
            let fields: Vec<&str> = content.split_whitespace().collect();
            let [tail, label, head] = fields[..] else {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("expected `tail label head`, found {} fields", fields.len()),
                });
            };
            let mut chars = label.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("label `{label}` is not a single character"),
                });
            };
            Ok((tail.to_owned(), c, head.to_owned()))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<LabeledDigraph<char>, ParseError> {
    Ok(build_graph(&parse_arcs(text)?)?)
}

pub fn parse_dictionary(text: &str) -> Result<Dictionary<char>, ParseError> {
    let mut words = Vec::new();
    let mut span = None;
    for (line, content) in content_lines(text) {
        if content.contains(char::is_whitespace) {
            return Err(ParseError::Syntax {
                line,
                message: format!("`{content}` is not a single word"),
            });
        }
        let word: Vec<char> = content.chars().collect();
        match span {
            None => span = Some(word.len()),
            Some(n) if n != word.len() => {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("word `{content}` has length {}, expected {n}", word.len()),
                })
            }
            Some(_) => {}
        }
        words.push(word);
    }
    Ok(Dictionary::new(words)?)
}

/// Writes `graph` in the graph file format, one arc per line in arc-id order.
pub fn write_graph<L: Symbol>(graph: &LabeledDigraph<L>) -> String {
    let name = |v| match graph.name(v) {
        "" => EMPTY_NAME,
        n => n,
    };
    let mut out = String::new();
    for (_, arc) in graph.arcs() {
        writeln!(out, "{} {} {}", name(arc.tail), arc.label, name(arc.head)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let text = "# a 2-cycle\nu a v   # first\n\n  v b u\n";
        let arcs = parse_arcs(text).unwrap();
        assert_eq!(
            arcs,
            [("u".into(), 'a', "v".into()), ("v".into(), 'b', "u".into())]
        );
        assert!(parse_graph(text).unwrap().check_eulerian().is_eulerian);
    }

    #[test]
    fn reports_bad_lines() {
        assert_eq!(
            parse_arcs("u a v\nu b\n"),
            Err(ParseError::Syntax {
                line: 2,
                message: "expected `tail label head`, found 2 fields".into()
            })
        );
        let err = parse_arcs("\n\nu ab v").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"));
        assert!(matches!(
            parse_graph("a 0 b\na 0 c"),
            Err(ParseError::Graph(_))
        ));
    }

    #[test]
    fn dictionary_files() {
        let d = parse_dictionary("01\n# skip\n\n00\n11\n10\n").unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(d.span(), 2);
        let err = parse_dictionary("00\n011\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"));
        assert!(matches!(
            parse_dictionary("00\n00"),
            Err(ParseError::Dictionary(_))
        ));
        assert!(matches!(
            parse_dictionary("# nothing"),
            Err(ParseError::Dictionary(DebruijnError::Empty))
        ));
        assert!(parse_dictionary("0 1").is_err());
    }

    #[test]
    fn write_then_parse() {
        let g = parse_graph("u a v\nv b u\nu c u\n").unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
