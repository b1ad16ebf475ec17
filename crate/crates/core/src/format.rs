//! Text format for concept classes.
//!
//! ```text
//! # comment
//! elements: a b c
//! 100
//! 011
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::class::ConceptClass;
use crate::concept::{Concept, Universe};
use crate::error::{Error, Result};

/// Nonblank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_class(text: &str) -> Result<ConceptClass> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `elements:` header"))?;
    let names = header
        .strip_prefix("elements:")
        .ok_or_else(|| Error::parse(hline, "expected `elements: n1 n2 ...`"))?;
    let universe = Universe::new(names.split_whitespace())
        .map_err(|e| Error::parse(hline, e.to_string()))?;
    let n = universe.len();
    let mut concepts = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, row) in lines {
        let c = Concept::parse_bitstring(row, n).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(line, msg),
            other => other,
        })?;
        if !seen.insert(c) {
            return Err(Error::parse(line, format!("duplicate concept {row}")));
        }
        concepts.push(c);
    }
    if concepts.is_empty() {
        return Err(Error::parse(hline, "class has no concepts"));
    }
    ConceptClass::new(Arc::new(universe), concepts)
}

pub fn class_to_text(c: &ConceptClass) -> String {
    let mut out = format!("elements: {}\n", c.universe().names().join(" "));
    for b in c.concepts() {
        let _ = writeln!(out, "{}", b.to_bitstring(c.n()));
    }
    out
}
