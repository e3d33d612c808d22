//! Plain-text file formats.
//!
//! * `.poset`: `#` comments; first data line `n`; optional `labels: a b c`;
//!   then one `i j` line (1-based) per strict relation `x_i < x_j`.
//! * `.pm`: `n` lines of `n` characters from `{0,1}`.
//! * `.cplx`: one facet per line as whitespace-separated vertex names.
//! * `.act`: one permutation per line, `name: p(1) p(2) ... p(n)`, identity
//!   first.
//!
//! Every loader error carries the 1-based line number it was found on.

use std::fmt::Write as _;

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poset::{Poset, ZeroOneMatrix};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = data_lines(text).peekable();
    let (line, first) = lines
        .next()
        .ok_or_else(|| parse_err(text.lines().count().max(1), "missing point count"))?;
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(line, format!("expected a point count, found {first:?}")))?;
    if n == 0 {
        return Err(parse_err(line, "a poset needs at least one point"));
    }

    let mut labels = None;
    if let Some(&(line, l)) = lines.peek() {
        if let Some(rest) = l.strip_prefix("labels:") {
            let names: Vec<&str> = rest.split_whitespace().collect();
            if names.len() != n {
                return Err(parse_err(
                    line,
                    format!("expected {n} labels, found {}", names.len()),
                ));
            }
            labels = Some((line, names));
            lines.next();
        }
    }

    let mut relations = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line, format!("expected \"i j\", found {l:?}")));
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&toks) {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(line, format!("bad point index {tok:?}")))?;
            if v == 0 || v > n {
                return Err(parse_err(line, format!("point index {v} outside 1..={n}")));
            }
            *slot = v - 1;
        }
        relations.push((pair[0], pair[1]));
    }

    let poset = Poset::from_relations(n, &relations)?;
    match labels {
        Some((line, names)) => poset.with_labels(names).map_err(|e| match e {
            Error::DuplicateLabel(l) => parse_err(line, format!("duplicate label {l:?}")),
            other => other,
        }),
        None => Ok(poset),
    }
}

/// Writes a poset as its point count, labels (unless default) and cover
/// relations in index order.
pub fn write_poset(p: &Poset) -> String {
    let mut out = String::new();
    writeln!(out, "{}", p.n()).unwrap();
    if !p.has_default_labels() {
        writeln!(out, "labels: {}", p.labels().join(" ")).unwrap();
    }
    for (i, j) in p.covers() {
        writeln!(out, "{} {}", i + 1, j + 1).unwrap();
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<ZeroOneMatrix> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut last_line = 0;
    for (line, l) in data_lines(text) {
        last_line = line;
        let row = l
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(parse_err(line, format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<i64>>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(parse_err(
                    line,
                    format!("row has {} entries, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(last_line.max(1), "empty matrix"));
    }
    if rows.len() != rows[0].len() {
        return Err(parse_err(
            last_line,
            format!(
                "{} rows of length {}: not square",
                rows.len(),
                rows[0].len()
            ),
        ));
    }
    ZeroOneMatrix::from_rows(&rows)
}

pub fn write_matrix(m: &ZeroOneMatrix) -> String {
    m.to_string()
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut names: Vec<String> = Vec::new();
    let mut facets = Vec::new();
    for (line, l) in data_lines(text) {
        let mut facet = Vec::new();
        for tok in l.split_whitespace() {
            let v = match names.iter().position(|n| n == tok) {
                Some(v) => v,
                None => {
                    names.push(tok.to_string());
                    names.len() - 1
                }
            };
            if facet.contains(&v) {
                return Err(parse_err(line, format!("vertex {tok:?} repeated in facet")));
            }
            facet.push(v);
        }
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(parse_err(text.lines().count().max(1), "no facets"));
    }
    SimplicialComplex::from_facets(names, facets)
}

pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in k.facets() {
        let names: Vec<&str> = facet.iter().map(|&v| k.vertex_name(v)).collect();
        writeln!(out, "{}", names.join(" ")).unwrap();
    }
    out
}

/// Parses permutations as 0-based image vectors. Group structure is checked
/// later by [`crate::group_actions::validate_action`]; this only checks that
/// each line is a permutation of `1..=n` and that the first is the identity.
pub fn parse_action(text: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut perms = Vec::new();
    let mut last_line = 1;
    for (line, l) in data_lines(text) {
        last_line = line;
        let body = match l.split_once(':') {
            Some((_, rest)) => rest,
            None => l,
        };
        let mut image = Vec::with_capacity(n);
        for tok in body.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(line, format!("bad point index {tok:?}")))?;
            if v == 0 || v > n {
                return Err(parse_err(line, format!("point index {v} outside 1..={n}")));
            }
            image.push(v - 1);
        }
        if image.len() != n {
            return Err(parse_err(
                line,
                format!("expected {n} images, found {}", image.len()),
            ));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if std::mem::replace(&mut seen[v], true) {
                return Err(parse_err(line, format!("{} appears twice", v + 1)));
            }
        }
        if perms.is_empty() && image.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(parse_err(line, "first permutation must be the identity"));
        }
        perms.push(image);
    }
    if perms.is_empty() {
        return Err(parse_err(last_line, "no permutations"));
    }
    Ok(perms)
}

pub fn write_action(perms: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (k, g) in perms.iter().enumerate() {
        let images: Vec<String> = g.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "g{}: {}", k + 1, images.join(" ")).unwrap();
    }
    out
}
