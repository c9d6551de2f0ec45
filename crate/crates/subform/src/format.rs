//! The `pgrp v1` group file format.
//!
//! ```text
//! pgrp v1
//! degree 4
//! order 24          # optional, checked against the generated group
//! name S4           # optional
//! (1 2 3 4)
//! (1 2)
//! ```
//!
//! Points are 1-based in files. Cycle entries may be separated by spaces or
//! commas. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use subform_core::{FiniteGroup, Limits, Permutation};

use crate::error::{Error, Result};

/// A parsed group file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub order: Option<usize>,
    pub name: Option<String>,
    pub generators: Vec<Permutation>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Strips a trailing comment, returning the content and its column offset.
fn content(raw: &str) -> (&str, usize) {
    let body = raw.split('#').next().unwrap_or("");
    let trimmed = body.trim_start();
    let col = body.len() - trimmed.len() + 1;
    (trimmed.trim_end(), col)
}

fn header_value<'a>(text: &'a str, key: &str, line: usize, col: usize) -> Result<&'a str> {
    let rest = text
        .strip_prefix(key)
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| syntax(line, col, format!("expected `{key} <value>`")))?;
    Ok(rest.trim())
}

fn parse_count(text: &str, line: usize, col: usize, what: &str) -> Result<usize> {
    text.parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| syntax(line, col, format!("{what} must be a positive integer, got `{text}`")))
}

/// Parses one generator in cycle notation.
pub fn parse_cycles(text: &str, degree: usize, line: usize, col0: usize) -> Result<Permutation> {
    let bytes = text.as_bytes();
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut seen = vec![false; degree];
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c != b'(' {
            return Err(syntax(line, col0 + i, format!("expected `(`, found `{}`", c as char)));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(syntax(line, col0 + i, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(syntax(line, col0 + i, format!("expected a point, found `{}`", bytes[i] as char)));
            }
            let point: usize = text[start..i].parse().map_err(|_| syntax(line, col0 + start, "point too large"))?;
            if point == 0 || point > degree {
                return Err(syntax(line, col0 + start, format!("point {point} outside 1..={degree}")));
            }
            if seen[point - 1] {
                return Err(syntax(line, col0 + start, format!("point {point} repeated")));
            }
            seen[point - 1] = true;
            cycle.push(point as u32 - 1);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(Permutation::from_cycles(degree, &cycles)?)
}

/// Parses the text of a group file.
pub fn parse(text: &str) -> Result<GroupFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, content(raw)))
        .filter(|(_, (c, _))| !c.is_empty());

    let (ln, (magic, col)) = lines.next().ok_or_else(|| syntax(1, 1, "empty file"))?;
    if magic.split_whitespace().collect::<Vec<_>>() != ["pgrp", "v1"] {
        return Err(syntax(ln, col, format!("expected `pgrp v1`, found `{magic}`")));
    }
    let (ln, (text, col)) = lines.next().ok_or_else(|| syntax(ln + 1, 1, "missing `degree` line"))?;
    let degree = parse_count(header_value(text, "degree", ln, col)?, ln, col, "degree")?;

    let mut file = GroupFile { degree, order: None, name: None, generators: Vec::new() };
    for (ln, (text, col)) in lines {
        if text.starts_with('(') {
            file.generators.push(parse_cycles(text, degree, ln, col)?);
        } else if text.starts_with("order") && file.order.is_none() && file.generators.is_empty() && file.name.is_none() {
            file.order = Some(parse_count(header_value(text, "order", ln, col)?, ln, col, "order")?);
        } else if text.starts_with("name") && file.name.is_none() && file.generators.is_empty() {
            let name = header_value(text, "name", ln, col)?;
            file.name = Some(name.to_string());
        } else {
            return Err(syntax(ln, col, format!("unexpected line `{text}`")));
        }
    }
    Ok(file)
}

/// Canonical text of a group file.
pub fn emit(file: &GroupFile) -> String {
    let mut out = String::from("pgrp v1\n");
    writeln!(out, "degree {}", file.degree).unwrap();
    if let Some(order) = file.order {
        writeln!(out, "order {order}").unwrap();
    }
    if let Some(name) = &file.name {
        writeln!(out, "name {name}").unwrap();
    }
    for g in &file.generators {
        writeln!(out, "{g}").unwrap();
    }
    out
}

impl GroupFile {
    /// Generates the group, enforcing the declared order.
    pub fn build(&self, limits: Limits) -> Result<FiniteGroup> {
        let g = FiniteGroup::generate_with(&self.generators, self.degree, limits)?;
        match self.order {
            Some(expected) if expected != g.order() => Err(Error::OrderMismatch { expected, found: g.order() }),
            _ => Ok(g),
        }
    }

    /// A file describing `g` by its generators.
    pub fn describe(g: &FiniteGroup, name: Option<&str>) -> Self {
        GroupFile {
            degree: g.degree(),
            order: Some(g.order()),
            name: name.map(str::to_string),
            generators: g.generators().cloned().collect(),
        }
    }
}

/// Reads and generates a group file.
pub fn parse_group_file(path: &Path, limits: Limits) -> Result<(GroupFile, FiniteGroup)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    let file = parse(&text).map_err(|e| e.in_file(path))?;
    let g = file.build(limits).map_err(|e| e.in_file(path))?;
    Ok((file, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_file() {
        let f = parse("pgrp v1\ndegree 3\n(1 2 3)\n(1 2)\n").unwrap();
        assert_eq!(f.build(Limits::default()).unwrap().order(), 6);
    }

    #[test]
    fn comments_commas_and_identity() {
        let text = "# header comment\npgrp v1\ndegree 4   # four points\n\norder 4\nname V4\n(1,2)(3,4)\n( 1 3 ) ( 2 4 )\n()\n";
        let f = parse(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("V4"));
        assert_eq!(f.generators.len(), 3);
        assert_eq!(f.build(Limits::default()).unwrap().order(), 4);
    }

    #[test]
    fn empty_generator_list_is_trivial() {
        let f = parse("pgrp v1\ndegree 1\n").unwrap();
        assert_eq!(f.build(Limits::default()).unwrap().order(), 1);
    }

    #[test]
    fn order_gate() {
        let f = parse("pgrp v1\ndegree 4\norder 24\n(1 2 3)\n(2 3 4)\n").unwrap();
        assert!(matches!(f.build(Limits::default()), Err(Error::OrderMismatch { expected: 24, found: 12 })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("pgrp v2\ndegree 3\n", 1, 1),
            ("pgrp v1\ndeg 3\n", 2, 1),
            ("pgrp v1\ndegree 3\n(1 2 4)\n", 3, 6),
            ("pgrp v1\ndegree 3\n(1 2)(2 3)\n", 3, 7),
            ("pgrp v1\ndegree 3\n  (1 x)\n", 3, 6),
            ("pgrp v1\ndegree 3\n(1 2\n", 3, 5),
            ("pgrp v1\ndegree 3\n(1 2)\norder 2\n", 4, 1),
            ("", 1, 1),
        ];
        for (text, line, column) in cases {
            match parse(text) {
                Err(Error::Syntax { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn emit_is_canonical() {
        let text = "pgrp v1\n# c\ndegree 5\nname x\n(1,2) (3 4 5)\n";
        let f = parse(text).unwrap();
        assert_eq!(emit(&f), "pgrp v1\ndegree 5\nname x\n(1 2)(3 4 5)\n");
        assert_eq!(parse(&emit(&f)).unwrap(), f);
    }
}
