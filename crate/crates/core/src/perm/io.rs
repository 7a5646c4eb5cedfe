//! Plain-text generator files:
//!
//! ```text
//! degree: 5
//! gens: 1
//! # comment lines are skipped
//! 2 3 4 5 1
//! ```
//!
//! Images are 1-based in the file and 0-based in memory.

use std::fs;
use std::path::Path;

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn header(lines: &mut dyn Iterator<Item = (usize, &str)>, key: &str, last_line: usize) -> Result<(usize, usize)> {
    let Some((no, text)) = lines.next() else {
        return Err(parse_err(last_line + 1, 1, format!("missing `{key}:` header")));
    };
    let trimmed = text.trim_start();
    let indent = text.len() - trimmed.len();
    let Some(rest) = trimmed.strip_prefix(key).and_then(|r| r.strip_prefix(':')) else {
        return Err(parse_err(no, indent + 1, format!("expected `{key}:`")));
    };
    let value_col = text.len() - rest.trim_start().len() + 1;
    let value = rest.trim();
    value
        .parse::<usize>()
        .map(|v| (no, v))
        .map_err(|_| parse_err(no, value_col, format!("`{value}` is not a count")))
}

/// Parses generator-file text into an unfrozen group.
pub fn parse_generators(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
    let (line_d, degree) = header(&mut lines, "degree", 0)?;
    let (line_g, count) = header(&mut lines, "gens", line_d)?;
    let mut gens = Vec::with_capacity(count);
    let mut last = line_g;
    for k in 0..count {
        let Some((no, text)) = lines.next() else {
            return Err(parse_err(
                last + 1,
                1,
                format!("expected {count} generators, found {k}"),
            ));
        };
        last = no;
        let mut images = Vec::with_capacity(degree);
        let mut col = 0;
        for token in text.split_whitespace() {
            // Locate the token to report its column.
            let start = text[col..].find(token).map(|i| i + col).unwrap_or(col);
            col = start + token.len();
            let v: usize = token
                .parse()
                .map_err(|_| parse_err(no, start + 1, format!("`{token}` is not a point")))?;
            if v == 0 || v > degree {
                return Err(parse_err(
                    no,
                    start + 1,
                    format!("image {v} outside 1..={degree}"),
                ));
            }
            images.push(v - 1);
        }
        if images.len() != degree {
            return Err(parse_err(
                no,
                text.len() + 1,
                format!("expected {degree} images, found {}", images.len()),
            ));
        }
        let g = Permutation::from_images(images).map_err(|e| {
            Error::Validation(format!("generator on line {no} is not a bijection: {e}"))
        })?;
        gens.push(g);
    }
    if let Some((no, _)) = lines.next() {
        return Err(parse_err(no, 1, "unexpected content after the generators"));
    }
    PermGroup::new(degree, gens)
}

pub fn load_generators(path: impl AsRef<Path>) -> Result<PermGroup> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
    parse_generators(&text)
}

/// Renders a group in the generator-file format.
pub fn format_generators(group: &PermGroup) -> String {
    let mut out = format!("degree: {}\ngens: {}\n", group.degree(), group.generators().len());
    for g in group.generators() {
        let row: Vec<String> = g.images().iter().map(|&x| (x + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle_file() {
        let g = parse_generators("degree: 5\ngens: 1\n# a 5-cycle\n2 3 4 5 1\n").unwrap();
        assert_eq!(g.freeze().order().unwrap(), 5);
    }

    #[test]
    fn round_trip() {
        let g = PermGroup::symmetric(6);
        let h = parse_generators(&format_generators(&g)).unwrap();
        assert_eq!(g.generators(), h.generators());
    }

    #[test]
    fn truncated_file_reports_line() {
        match parse_generators("degree: 3\ngens: 2\n2 3 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_token_reports_column() {
        match parse_generators("degree: 3\ngens: 1\n2 x 1\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_bijection_is_validation_error() {
        assert!(matches!(
            parse_generators("degree: 3\ngens: 1\n1 1 2\n"),
            Err(Error::Validation(_))
        ));
    }
}
