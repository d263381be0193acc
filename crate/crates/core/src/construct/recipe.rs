//! Inline group recipes such as `pgl2(7)` or `ksets(symmetric(7),2)`.

use std::fmt;

use super::{
    action_on_ksets, affine_semilinear, agammal1, agl, agl1, alternating, asl, cyclic, dihedral,
    flag_action_psl3, m10, pgammal2, pgl2, product_action_grid, psigmal2, psl2, symmetric,
};
use crate::error::{Error, Result};
use crate::perm::PermutationGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Agl1(u64),
    AGammaL1(u64),
    /// Translations, `x -> w^step x` and optionally `x -> w^twist x^p`.
    AffineSemilinear { q: u64, step: usize, twist: Option<usize> },
    Agl { d: usize, p: u64 },
    Asl { d: usize, p: u64 },
    Pgl2(u64),
    Psl2(u64),
    PSigmaL2(u64),
    PGammaL2(u64),
    M9,
    M10,
    Flags { q: u64, dual: bool, antiflag: bool },
    Grid(usize),
    KSets(Box<Recipe>, usize),
}

impl Recipe {
    pub fn build(&self) -> Result<PermutationGroup> {
        Ok(match self {
            Recipe::Cyclic(n) => cyclic(*n),
            Recipe::Dihedral(n) => dihedral(*n)?,
            Recipe::Symmetric(n) => symmetric(*n),
            Recipe::Alternating(n) => alternating(*n),
            Recipe::Agl1(q) => agl1(*q)?,
            Recipe::AGammaL1(q) => agammal1(*q)?,
            Recipe::AffineSemilinear { q, step, twist } => affine_semilinear(*q, *step, *twist)?,
            Recipe::Agl { d, p } => agl(*d, *p)?,
            Recipe::Asl { d, p } => asl(*d, *p)?,
            Recipe::Pgl2(q) => pgl2(*q)?,
            Recipe::Psl2(q) => psl2(*q)?,
            Recipe::PSigmaL2(q) => psigmal2(*q)?,
            Recipe::PGammaL2(q) => pgammal2(*q)?,
            Recipe::M9 => affine_semilinear(9, 2, Some(1))?.with_name("M9"),
            Recipe::M10 => m10()?,
            Recipe::Flags { q, dual, antiflag } => flag_action_psl3(*q, *dual, *antiflag)?,
            Recipe::Grid(m) => product_action_grid(*m)?,
            Recipe::KSets(inner, k) => action_on_ksets(&inner.build()?, *k)?,
        })
    }

    /// Parses a recipe, with or without the `recipe:` prefix.
    pub fn parse(text: &str) -> Result<Recipe> {
        let text = text.trim();
        let text = text.strip_prefix("recipe:").unwrap_or(text);
        let mut p = Parser { s: text.as_bytes(), pos: 0, text };
        let r = p.recipe()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.error("trailing characters"));
        }
        Ok(r)
    }
}

enum Arg {
    Num(u64),
    Word(String),
    Nested(Recipe),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::InvalidArgument(format!("recipe {:?}: {msg} at column {}", self.text, self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn recipe(&mut self) -> Result<Recipe> {
        let name = self.ident()?;
        let mut args = Vec::new();
        if self.eat(b'(') && !self.eat(b')') {
            loop {
                args.push(self.arg()?);
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.error("expected ',' or ')'"));
                }
            }
        }
        self.assemble(&name, args)
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        if self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            let word = self.ident()?;
            return word.parse().map(Arg::Num).map_err(|_| self.error("bad number"));
        }
        let save = self.pos;
        let word = self.ident()?;
        if self.s.get(self.pos) == Some(&b'(') || matches!(word.as_str(), "m9" | "m10") {
            self.pos = save;
            return Ok(Arg::Nested(self.recipe()?));
        }
        Ok(Arg::Word(word))
    }

    fn assemble(&self, name: &str, args: Vec<Arg>) -> Result<Recipe> {
        let num = |i: usize| match args.get(i) {
            Some(Arg::Num(n)) => Ok(*n),
            _ => Err(self.error(&format!("{name}: argument {} must be a number", i + 1))),
        };
        let arity = |lo: usize, hi: usize| {
            if (lo..=hi).contains(&args.len()) {
                Ok(())
            } else {
                Err(self.error(&format!("{name} takes {lo}..{hi} arguments")))
            }
        };
        let one = || arity(1, 1).and_then(|_| num(0));
        Ok(match name {
            "cyclic" => Recipe::Cyclic(one()? as usize),
            "dihedral" => Recipe::Dihedral(one()? as usize),
            "symmetric" => Recipe::Symmetric(one()? as usize),
            "alternating" => Recipe::Alternating(one()? as usize),
            "agl1" => Recipe::Agl1(one()?),
            "agammal1" => Recipe::AGammaL1(one()?),
            "affine_semilinear" => {
                arity(2, 3)?;
                Recipe::AffineSemilinear {
                    q: num(0)?,
                    step: num(1)? as usize,
                    twist: if args.len() == 3 { Some(num(2)? as usize) } else { None },
                }
            }
            "agl" | "asl" => {
                arity(2, 2)?;
                let (d, p) = (num(0)? as usize, num(1)?);
                if name == "agl" {
                    Recipe::Agl { d, p }
                } else {
                    Recipe::Asl { d, p }
                }
            }
            "pgl2" => Recipe::Pgl2(one()?),
            "psl2" => Recipe::Psl2(one()?),
            "psigmal2" => Recipe::PSigmaL2(one()?),
            "pgammal2" => Recipe::PGammaL2(one()?),
            "m9" => {
                arity(0, 0)?;
                Recipe::M9
            }
            "m10" => {
                arity(0, 0)?;
                Recipe::M10
            }
            "flags" | "antiflags" => {
                arity(1, 2)?;
                let dual = match args.get(1) {
                    None => false,
                    Some(Arg::Word(w)) if w == "dual" => true,
                    _ => return Err(self.error("second argument must be `dual`")),
                };
                Recipe::Flags {
                    q: num(0)?,
                    dual,
                    antiflag: name == "antiflags",
                }
            }
            "grid" => Recipe::Grid(one()? as usize),
            "ksets" => {
                arity(2, 2)?;
                let Some(Arg::Nested(inner)) = args.first() else {
                    return Err(self.error("ksets: first argument must be a recipe"));
                };
                Recipe::KSets(Box::new(inner.clone()), num(1)? as usize)
            }
            _ => return Err(self.error(&format!("unknown recipe {name:?}"))),
        })
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic({n})"),
            Recipe::Dihedral(n) => write!(f, "dihedral({n})"),
            Recipe::Symmetric(n) => write!(f, "symmetric({n})"),
            Recipe::Alternating(n) => write!(f, "alternating({n})"),
            Recipe::Agl1(q) => write!(f, "agl1({q})"),
            Recipe::AGammaL1(q) => write!(f, "agammal1({q})"),
            Recipe::AffineSemilinear { q, step, twist: None } => write!(f, "affine_semilinear({q},{step})"),
            Recipe::AffineSemilinear { q, step, twist: Some(t) } => {
                write!(f, "affine_semilinear({q},{step},{t})")
            }
            Recipe::Agl { d, p } => write!(f, "agl({d},{p})"),
            Recipe::Asl { d, p } => write!(f, "asl({d},{p})"),
            Recipe::Pgl2(q) => write!(f, "pgl2({q})"),
            Recipe::Psl2(q) => write!(f, "psl2({q})"),
            Recipe::PSigmaL2(q) => write!(f, "psigmal2({q})"),
            Recipe::PGammaL2(q) => write!(f, "pgammal2({q})"),
            Recipe::M9 => write!(f, "m9"),
            Recipe::M10 => write!(f, "m10"),
            Recipe::Flags { q, dual, antiflag } => {
                let name = if *antiflag { "antiflags" } else { "flags" };
                if *dual {
                    write!(f, "{name}({q},dual)")
                } else {
                    write!(f, "{name}({q})")
                }
            }
            Recipe::Grid(m) => write!(f, "grid({m})"),
            Recipe::KSets(inner, k) => write!(f, "ksets({inner},{k})"),
        }
    }
}

/// A named recipe with the degree it must produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub recipe: Recipe,
    pub degree: usize,
}

impl GroupSpec {
    /// Builds the group and checks its degree and transitivity.
    pub fn build(&self) -> Result<PermutationGroup> {
        let g = self.recipe.build()?;
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        if !g.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(g.with_name(self.name.clone()))
    }
}
