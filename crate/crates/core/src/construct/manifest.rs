//! Corpus manifests: one group per line,
//!
//! ```text
//! # name | recipe-or-file | degree | expected
//! PSL(3,2):2 flags | recipe:flags(2,dual) | 21 | expected:{primitive=true, road-closure=false}
//! PGL(2,11) | file:groups/psl2_11_d66.grp | 66 | expected:{road-closure=false}
//! ```
//!
//! File paths are relative to the manifest's directory. Property keys are
//! `transitive`, `primitive`, `basic`, `road-closure`, `2id`, `2hc`, and
//! `kut@K`, `strong-kut@K`, `kid@K`, `homogeneous@K`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::recipe::Recipe;
use crate::error::{Error, Result};
use crate::perm::io::{content_lines, load_group_file};
use crate::perm::PermutationGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Transitive,
    Primitive,
    Basic,
    RoadClosure,
    TwoId,
    TwoHc,
    Kut(usize),
    StrongKut(usize),
    Kid(usize),
    Homogeneous(usize),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Transitive => write!(f, "transitive"),
            Property::Primitive => write!(f, "primitive"),
            Property::Basic => write!(f, "basic"),
            Property::RoadClosure => write!(f, "road-closure"),
            Property::TwoId => write!(f, "2id"),
            Property::TwoHc => write!(f, "2hc"),
            Property::Kut(k) => write!(f, "kut@{k}"),
            Property::StrongKut(k) => write!(f, "strong-kut@{k}"),
            Property::Kid(k) => write!(f, "kid@{k}"),
            Property::Homogeneous(k) => write!(f, "homogeneous@{k}"),
        }
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if let Some((key, k)) = s.split_once('@') {
            let k: usize = k.parse().map_err(|_| format!("bad k in {s:?}"))?;
            return match key {
                "kut" => Ok(Property::Kut(k)),
                "strong-kut" => Ok(Property::StrongKut(k)),
                "kid" => Ok(Property::Kid(k)),
                "homogeneous" => Ok(Property::Homogeneous(k)),
                _ => Err(format!("unknown property {key:?}")),
            };
        }
        match s {
            "transitive" => Ok(Property::Transitive),
            "primitive" => Ok(Property::Primitive),
            "basic" => Ok(Property::Basic),
            "road-closure" => Ok(Property::RoadClosure),
            "2id" => Ok(Property::TwoId),
            "2hc" => Ok(Property::TwoHc),
            _ => Err(format!("unknown property {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expectation {
    pub property: Property,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Recipe(Recipe),
    File(PathBuf),
}

impl GroupSource {
    /// Parses `recipe:...`, `file:PATH` or a bare path relative to `base`.
    pub fn parse(text: &str, base: &Path) -> Result<GroupSource> {
        let text = text.trim();
        if text.starts_with("recipe:") {
            return Recipe::parse(text).map(GroupSource::Recipe);
        }
        let path = text.strip_prefix("file:").unwrap_or(text).trim();
        if path.is_empty() {
            return Err(Error::InvalidArgument("empty group source".into()));
        }
        Ok(GroupSource::File(base.join(path)))
    }

    pub fn load(&self) -> Result<PermutationGroup> {
        match self {
            GroupSource::Recipe(r) => r.build(),
            GroupSource::File(p) => load_group_file(p),
        }
    }
}

impl fmt::Display for GroupSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSource::Recipe(r) => write!(f, "recipe:{r}"),
            GroupSource::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    /// 1-based line in the manifest.
    pub line: usize,
    pub name: String,
    pub source: GroupSource,
    pub degree: usize,
    pub expected: Vec<Expectation>,
}

impl ManifestEntry {
    /// Loads the group and checks its degree.
    pub fn load(&self) -> Result<PermutationGroup> {
        let g = self.source.load()?;
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(g.with_name(self.name.clone()))
    }
}

fn parse_expected(text: &str) -> std::result::Result<Vec<Expectation>, String> {
    let body = text
        .trim()
        .strip_prefix("expected:")
        .map(str::trim)
        .and_then(|b| b.strip_prefix('{'))
        .and_then(|b| b.strip_suffix('}'))
        .ok_or("expected `expected:{...}`")?;
    body.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (key, value) = item.split_once('=').ok_or(format!("expected key=verdict in {item:?}"))?;
            let verdict = match value.trim() {
                "true" => true,
                "false" => false,
                v => return Err(format!("verdict must be true or false, got {v:?}")),
            };
            Ok(Expectation {
                property: key.parse()?,
                verdict,
            })
        })
        .collect()
}

pub fn parse_manifest(text: &str, base: &Path) -> Result<Vec<ManifestEntry>> {
    content_lines(text)
        .map(|(line, l)| {
            let fields: Vec<&str> = l.split('|').map(str::trim).collect();
            let [name, source, degree, expected] = fields.as_slice() else {
                return Err(Error::parse(line, "expected 4 fields separated by '|'"));
            };
            let source = GroupSource::parse(source, base).map_err(|e| Error::parse(line, e.to_string()))?;
            let degree = degree
                .parse::<usize>()
                .map_err(|_| Error::parse(line, format!("bad degree {degree:?}")))?;
            let expected = parse_expected(expected).map_err(|m| Error::parse(line, m))?;
            Ok(ManifestEntry {
                line,
                name: name.to_string(),
                source,
                degree,
                expected,
            })
        })
        .collect()
}
