//! Text format for permutation groups.
//!
//! ```text
//! # comment
//! degree 7
//! name C7
//! 2 3 4 5 6 7 1
//! (1,2)(3,4)
//! ```
//!
//! Points are 1-based in text. A generator line is either `n` images or a
//! product of disjoint cycles.

use std::fmt::Write as _;
use std::path::Path;

use super::{Permutation, PermutationGroup};
use crate::error::{Error, Result};

/// Meaningful lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses one generator in image or cycle notation.
pub fn parse_permutation(n: usize, text: &str) -> std::result::Result<Permutation, String> {
    let text = text.trim();
    if text.starts_with('(') {
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| format!("expected '(' in {text:?}"))?;
            let close = body
                .find(')')
                .ok_or_else(|| format!("unclosed cycle in {text:?}"))?;
            let cycle = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| parse_point(n, t))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles).map_err(|e| e.to_string())
    } else {
        let images = text
            .split_whitespace()
            .map(|t| parse_point(n, t))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if images.len() != n {
            return Err(format!("expected {n} images, found {}", images.len()));
        }
        Permutation::from_images(images).map_err(|e| e.to_string())
    }
}

fn parse_point(n: usize, token: &str) -> std::result::Result<usize, String> {
    match token.parse::<usize>() {
        Ok(p) if (1..=n).contains(&p) => Ok(p - 1),
        _ => Err(format!("bad point {token:?} for degree {n}")),
    }
}

pub fn parse_group(text: &str) -> Result<PermutationGroup> {
    let mut lines = content_lines(text);
    let (line, first) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty group file"))?;
    let degree = first
        .strip_prefix("degree")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::parse(line, "expected `degree n`"))?;
    let mut name = None;
    let mut gens = Vec::new();
    for (line, l) in lines {
        if let Some(rest) = l.strip_prefix("name") {
            if name.is_some() || !gens.is_empty() {
                return Err(Error::parse(line, "`name` must precede the generators"));
            }
            name = Some(rest.trim().to_string());
            continue;
        }
        gens.push(parse_permutation(degree, l).map_err(|m| Error::parse(line, m))?);
    }
    let group = PermutationGroup::new(degree, gens)?;
    Ok(match name {
        Some(n) => group.with_name(n),
        None => group,
    })
}

pub fn load_group_file(path: impl AsRef<Path>) -> Result<PermutationGroup> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_group(&text)
}

/// Writes the group in image notation.
pub fn write_group(group: &PermutationGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    if let Some(name) = group.name() {
        let _ = writeln!(out, "name {name}");
    }
    for g in group.generators() {
        let images: Vec<String> = g.images().iter().map(|x| (x + 1).to_string()).collect();
        let _ = writeln!(out, "{}", images.join(" "));
    }
    out
}
