//! Text format for Rees 0-matrix semigroups.
//!
//! ```text
//! group degree 2
//! (1,2)
//! rows 2 cols 2
//! 12 21
//! 0  12
//! ```
//!
//! Generator lines follow the group file format. Each matrix token is `0`
//! or a permutation in 1-based image notation, written as concatenated
//! digits or, for any degree, comma-separated images.

use std::fmt::Write as _;

use super::{GroupWithZero, ReesMatrixSemigroup0};
use crate::error::{Error, Result};
use crate::perm::io::{content_lines, parse_permutation};
use crate::perm::{Permutation, PermutationGroup};

fn parse_entry(k: usize, token: &str) -> std::result::Result<Option<Permutation>, String> {
    if token == "0" {
        return Ok(None);
    }
    let images: Vec<&str> = if token.contains(',') {
        token.split(',').collect()
    } else if k <= 9 && token.len() == k {
        (0..k).map(|i| &token[i..i + 1]).collect()
    } else {
        return Err(format!("bad entry {token:?} for degree {k}"));
    };
    parse_permutation(k, &images.join(" ")).map(Some)
}

fn entry_text(p: &Permutation) -> String {
    let one_based = p.images().iter().map(|&x| (x + 1).to_string());
    if p.degree() <= 9 {
        one_based.collect()
    } else {
        one_based.collect::<Vec<_>>().join(",")
    }
}

pub fn parse_rms(text: &str, cap: usize) -> Result<ReesMatrixSemigroup0> {
    let mut lines = content_lines(text).peekable();
    let (line, first) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty matrix file"))?;
    let k = first
        .strip_prefix("group degree")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::parse(line, "expected `group degree k`"))?;
    let mut gens = Vec::new();
    let mut name = None;
    let (rows, cols) = loop {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(line, "missing `rows R cols C`"))?;
        if let Some(rest) = text.strip_prefix("rows") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts.as_slice() {
                [r, "cols", c] => match (r.parse::<usize>(), c.parse::<usize>()) {
                    (Ok(r), Ok(c)) if r > 0 && c > 0 => break (r, c),
                    _ => return Err(Error::parse(line, "bad matrix size")),
                },
                _ => return Err(Error::parse(line, "expected `rows R cols C`")),
            }
        } else if let Some(n) = text.strip_prefix("name") {
            name = Some(n.trim().to_string());
        } else {
            gens.push(parse_permutation(k, text).map_err(|m| Error::parse(line, m))?);
        }
    };
    let mut group = PermutationGroup::new(k, gens)?;
    if let Some(n) = name {
        group = group.with_name(n);
    }
    let group = GroupWithZero::new(group, cap)?;
    let mut matrix = Vec::with_capacity(rows);
    for _ in 0..rows {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("expected {rows} matrix rows")))?;
        let row = text
            .split_whitespace()
            .map(|t| parse_entry(k, t).map_err(|m| Error::parse(line, m)))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(Error::parse(line, format!("expected {cols} entries, found {}", row.len())));
        }
        matrix.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content"));
    }
    ReesMatrixSemigroup0::from_permutations(group, &matrix)
}

pub fn write_rms(rms: &ReesMatrixSemigroup0) -> String {
    let group = rms.group();
    let mut out = format!("group degree {}\n", group.degree());
    if let Some(name) = group.group().name() {
        let _ = writeln!(out, "name {name}");
    }
    for g in group.group().generators() {
        let _ = writeln!(
            out,
            "{}",
            g.images().iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
        );
    }
    let m = rms.matrix();
    let _ = writeln!(out, "rows {} cols {}", m.rows(), m.cols());
    for l in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|i| m.get(l, i).map_or_else(|| "0".to_string(), |g| entry_text(group.element(g))))
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
